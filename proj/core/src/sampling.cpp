#include "umbilic/sampling.hpp"

#include <cmath>

#include "umbilic/error.hpp"

namespace umbilic {

EVec random_point(const ModelContext& ctx, Rng& rng, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  EVec x(ctx.euclid_dim());
  for (auto& xi : x) xi = normal(rng);
  return x;
}

EVec random_unit(const ModelContext& ctx, Rng& rng) {
  EVec x;
  do {
    x = random_point(ctx, rng);
  } while (x.norm() < 1e-3);
  return x.normalized();
}

Sphere random_sphere(const ModelContext& ctx, Rng& rng) {
  std::uniform_real_distribution<double> radius(0.3, 2.0);
  EVec center = random_point(ctx, rng);
  return Sphere{std::move(center), radius(rng)};
}

Hyperplane random_hyperplane(const ModelContext& ctx, Rng& rng) {
  std::normal_distribution<double> offset(0.0, 1.0);
  EVec normal = random_unit(ctx, rng);
  return Hyperplane{std::move(normal), offset(rng)};
}

UmbilicalSpec random_sphere_cut(const ModelContext& ctx, Rng& rng) {
  Sphere s = random_sphere(ctx, rng);
  EVec normal = random_unit(ctx, rng);
  const double c = normal.dot(s.center);
  return make_spec(ctx, {s, Hyperplane{std::move(normal), c}});
}

UmbilicalSpec random_flat_cut(const ModelContext& ctx, Rng& rng) {
  std::normal_distribution<double> offset(0.0, 1.0);
  const EVec n1 = random_unit(ctx, rng);
  EVec n2 = random_unit(ctx, rng);
  n2 -= n2.dot(n1) * n1;
  while (n2.norm() < 1e-3) {
    n2 = random_unit(ctx, rng);
    n2 -= n2.dot(n1) * n1;
  }
  n2.normalize();
  return make_spec(ctx, {Hyperplane{n1, offset(rng)},
                         Hyperplane{std::move(n2), offset(rng)}});
}

SpacelikeSubspace random_spacelike_subspace(const ModelContext& ctx, int p,
                                            Rng& rng) {
  if (p < 1 || p > ctx.n() + 1) {
    throw Error(ErrorCode::kBadDimensions, "subspace dimension out of range");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<LVec> vs;
    for (int i = 0; i < p; ++i) {
      LVec u(ctx.ambient_dim());
      for (auto& ui : u) ui = normal(rng);
      u(0) *= 0.3;
      vs.push_back(std::move(u));
    }
    const SymSpectrum spec = sym_eigs(gram(vs));
    if (spec.eigenvalues.front() > 0.05 * spec.eigenvalues.back()) {
      return SpacelikeSubspace::from_vectors(vs);
    }
  }
  throw Error(ErrorCode::kNotSpacelike, "could not sample a spacelike subspace");
}

}  // namespace umbilic

#include "umbilic/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "umbilic/error.hpp"

namespace umbilic {

namespace {

constexpr char kNotSubstantialHint[] =
    " is not substantial: it lies in a totally geodesic submanifold, and its "
    "congruence class reduces to that of a lower-codimension submanifold of "
    "a totally geodesic factor, which this decision does not cover";

bool hyperplane_before(const ModelContext& ctx, const Hyperplane& a,
                       const Hyperplane& b) {
  const double pa = ctx.perp_part(a.normal).norm();
  const double pb = ctx.perp_part(b.normal).norm();
  if (std::abs(pa - pb) > 1e-12) return pa > pb;
  return std::lexicographical_compare(a.normal.begin(), a.normal.end(),
                                      b.normal.begin(), b.normal.end());
}

void sort_generators(const ModelContext& ctx, std::vector<RoundObject>& gens) {
  std::stable_sort(gens.begin(), gens.end(),
                   [&](const RoundObject& a, const RoundObject& b) {
                     if (is_sphere(a) != is_sphere(b)) return is_sphere(a);
                     if (is_sphere(a)) return false;
                     return hyperplane_before(ctx, std::get<Hyperplane>(a),
                                              std::get<Hyperplane>(b));
                   });
}

std::vector<LVec> encode_all(const ModelContext& ctx,
                             std::span<const RoundObject> gens) {
  std::vector<LVec> zs;
  zs.reserve(gens.size());
  for (const auto& g : gens) zs.push_back(encode(ctx, g));
  return zs;
}

Matrix perp_gram(const ModelContext& ctx, const SpacelikeSubspace& v) {
  std::vector<LVec> perp;
  for (const auto& b : v.basis()) perp.push_back(split(ctx, b).perpendicular);
  return gram(perp);
}

void require_substantial(const ModelContext& ctx, const SpacelikeSubspace& v,
                         const char* which) {
  if (!is_substantial(ctx, v)) {
    throw Error(ErrorCode::kNotSubstantial,
                std::string(which) + kNotSubstantialHint);
  }
}

bool spectra_match(const std::vector<double>& a, const std::vector<double>& b,
                   double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace

UmbilicalSpec make_spec(const ModelContext& ctx,
                        std::vector<RoundObject> generators, double tol) {
  if (generators.empty()) {
    throw Error(ErrorCode::kMalformedSpec, "a spec needs at least one object");
  }
  for (const auto& g : generators) validate(ctx, g, tol);

  const std::vector<LVec> zs = encode_all(ctx, generators);
  for (std::size_t i = 0; i < zs.size(); ++i) {
    for (std::size_t j = i + 1; j < zs.size(); ++j) {
      const double scale = std::max(1.0, zs[i].norm() * zs[j].norm());
      if (std::abs(minkowski_dot(zs[i], zs[j])) > 1e-8 * scale) {
        throw Error(ErrorCode::kMalformedSpec,
                    "objects " + std::to_string(i) + " and " +
                        std::to_string(j) + " do not intersect orthogonally");
      }
    }
  }

  const auto spheres = std::count_if(generators.begin(), generators.end(),
                                     [](const auto& g) { return is_sphere(g); });
  if (spheres > 1) {
    return spec_of(ctx, subspace_of(ctx, generators, tol), tol);
  }
  sort_generators(ctx, generators);
  return UmbilicalSpec{std::move(generators)};
}

SpacelikeSubspace subspace_of(const ModelContext& ctx,
                              std::span<const RoundObject> generators,
                              double tol) {
  if (generators.empty()) {
    throw Error(ErrorCode::kMalformedSpec, "a spec needs at least one object");
  }
  for (const auto& g : generators) validate(ctx, g, tol);
  const std::vector<LVec> zs = encode_all(ctx, generators);
  Matrix m(ctx.ambient_dim(), static_cast<Eigen::Index>(zs.size()));
  for (std::size_t i = 0; i < zs.size(); ++i) {
    m.col(static_cast<Eigen::Index>(i)) = zs[i];
  }
  if (numerical_rank(m, tol) < static_cast<int>(zs.size())) {
    throw Error(ErrorCode::kDependentGenerators,
                "generators encode to linearly dependent vectors");
  }
  return SpacelikeSubspace::from_vectors(zs, tol);
}

SpacelikeSubspace subspace_of(const ModelContext& ctx,
                              const UmbilicalSpec& spec, double tol) {
  return subspace_of(ctx, std::span<const RoundObject>(spec.generators), tol);
}

UmbilicalSpec spec_of(const ModelContext& ctx, const SpacelikeSubspace& v,
                      double tol) {
  const int p = v.dim();
  Eigen::VectorXd h(p);
  for (int i = 0; i < p; ++i) {
    h(i) = minkowski_dot(v.basis()[static_cast<std::size_t>(i)], ctx.w());
  }
  std::vector<RoundObject> gens;
  if (h.norm() <= tol) {
    for (const auto& b : v.basis()) gens.push_back(decode(ctx, b, tol));
  } else {
    // An orthogonal change of basis whose first column is h/|h| puts all of
    // the w-pairing on one vector; the others are hyperplanes.
    Eigen::HouseholderQR<Matrix> qr(Matrix(h / h.norm()));
    const Matrix q = qr.householderQ();
    const Matrix basis = v.matrix() * q;
    for (int j = 0; j < p; ++j) {
      gens.push_back(decode(ctx, LVec(basis.col(j)), tol));
    }
  }
  sort_generators(ctx, gens);
  return UmbilicalSpec{std::move(gens)};
}

bool is_substantial(const ModelContext& ctx, const SpacelikeSubspace& v,
                    double tol) {
  const IntersectionDims d = intersection_dims(ctx, v, tol);
  return d.with_w1 == 0 && d.with_w2 == 0;
}

int max_substantial_codim(int n, int k) { return std::min(k + 1, n - k + 2); }

CongruenceInvariant invariant_of(const ModelContext& ctx,
                                 const SpacelikeSubspace& v, double tol) {
  CongruenceInvariant inv;
  inv.perp_eigs = sym_eigs(perp_gram(ctx, v), 1e-6).eigenvalues;

  std::vector<LVec> tangential;
  Matrix tm(ctx.ambient_dim(), v.dim());
  for (int i = 0; i < v.dim(); ++i) {
    tangential.push_back(
        split(ctx, v.basis()[static_cast<std::size_t>(i)]).tangential);
    tm.col(i) = tangential.back();
  }
  inv.tangential_rank = numerical_rank(tm, tol);
  const SymSpectrum tg = sym_eigs(gram(tangential), 1e-6);
  const auto gram_rank = std::count_if(
      tg.eigenvalues.begin(), tg.eigenvalues.end(),
      [](double e) { return std::abs(e) > kGramRankTol; });
  inv.tangential_degenerate =
      inv.tangential_rank == v.dim() && gram_rank < v.dim();
  return inv;
}

bool are_congruent(const ModelContext& ctx, const SpacelikeSubspace& a,
                   const SpacelikeSubspace& b, double tol) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimMismatch,
                "submanifolds have different codimensions (" +
                    std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()) + ")");
  }
  require_substantial(ctx, a, "first submanifold");
  require_substantial(ctx, b, "second submanifold");
  return spectra_match(invariant_of(ctx, a).perp_eigs,
                       invariant_of(ctx, b).perp_eigs, tol);
}

CongruenceWitness build_block_isometry(const ModelContext& ctx,
                                       const SpacelikeSubspace& a,
                                       const SpacelikeSubspace& b,
                                       double tol) {
  if (!are_congruent(ctx, a, b, tol)) {
    throw Error(ErrorCode::kNotCongruent,
                "perpendicular Gram spectra differ; no block isometry exists");
  }
  const int p = a.dim();
  const SymEigen ea = sym_eigen(perp_gram(ctx, a), 1e-6);
  const SymEigen eb = sym_eigen(perp_gram(ctx, b), 1e-6);
  // Re-express b in a basis whose perpendicular Gram equals that of a.
  const Matrix mix = eb.vectors * ea.vectors.transpose();
  const Matrix aligned = b.matrix() * mix;

  std::vector<LVec> from_t, to_t, from_p, to_p;
  for (int j = 0; j < p; ++j) {
    const SplitVec sa = split(ctx, a.basis()[static_cast<std::size_t>(j)]);
    const SplitVec sb = split(ctx, LVec(aligned.col(j)));
    from_t.push_back(sa.tangential);
    to_t.push_back(sb.tangential);
    from_p.push_back(sa.perpendicular);
    to_p.push_back(sb.perpendicular);
  }
  const double ext_tol = 10.0 * tol;
  const Matrix t1 = extend_isometry(from_t, to_t, ctx.w1(), ext_tol);
  const Matrix t2 = extend_isometry(from_p, to_p, ctx.w2(), ext_tol);

  CongruenceWitness witness;
  witness.t = t1 * t2;
  const BlockResidual r = block_residual(ctx, witness.t);
  witness.lorentz_residual = r.lorentz;
  witness.block_residual = r.mixing;
  witness.subspace_distance = a.transformed(witness.t).distance_to(b);
  return witness;
}

}  // namespace umbilic

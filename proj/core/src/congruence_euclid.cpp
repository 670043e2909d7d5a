// Congruence read off the Euclidean data of hypersurfaces and of
// codimension-two spheres and affine subspaces.

#include <cmath>

#include "umbilic/congruence.hpp"
#include "umbilic/error.hpp"

namespace umbilic {

namespace {

constexpr double kZero = 1e-9;

bool is_zero(double x) { return std::abs(x) <= kZero; }
bool is_zero(const EVec& x) { return x.norm() <= kZero; }

// Squared perpendicular invariant of a hypersurface, after checking that it
// is substantial.
double codim1_invariant(const ModelContext& ctx, const RoundObject& obj) {
  validate(ctx, obj);
  if (const auto* s = std::get_if<Sphere>(&obj)) {
    const EVec xp = ctx.perp_part(s->center);
    if (is_zero(xp)) {
      throw Error(ErrorCode::kNotSubstantial,
                  "sphere centered on R^{k-1} is totally geodesic");
    }
    return xp.squaredNorm() / (s->radius * s->radius);
  }
  const auto& h = std::get<Hyperplane>(obj);
  const EVec np = ctx.perp_part(h.normal);
  const EVec nt = ctx.axis_part(h.normal);
  if (is_zero(np) || (is_zero(nt) && is_zero(h.offset))) {
    throw Error(ErrorCode::kNotSubstantial,
                "hyperplane is totally geodesic (N^perp = 0, or N^T = 0 and "
                "c = 0)");
  }
  return np.squaredNorm();
}

// Sphere S(x0, r) cut orthogonally by H(N, c).
struct SphereCut {
  EVec x0;
  double r;
  EVec n;
  double c;
};

// H(n1, c) cut orthogonally by H(n2, 0).
struct FlatCut {
  EVec n1;
  double c;
  EVec n2;
};

struct TraceDet {
  double trace;
  double det;
};

FlatCut normalize_flats(const ModelContext& ctx, const Hyperplane& a,
                        const Hyperplane& b) {
  const double c = std::hypot(a.offset, b.offset);
  if (!is_zero(c)) {
    // Rotate within span{N1, N2} so that the whole offset sits on N1.
    return FlatCut{(a.offset * a.normal + b.offset * b.normal) / c, c,
                   (-b.offset * a.normal + a.offset * b.normal) / c};
  }
  const EVec t1 = ctx.axis_part(a.normal);
  const EVec t2 = ctx.axis_part(b.normal);
  Matrix m(t1.size(), 2);
  m << t1, t2;
  if (is_zero(t1) && is_zero(t2)) return FlatCut{a.normal, 0.0, b.normal};
  if (numerical_rank(m, 1e-9) == 2) return FlatCut{a.normal, 0.0, b.normal};
  // Dependent tangential parts: rotate so that the second one vanishes.
  const EVec d = (t1.norm() >= t2.norm() ? t1 : t2).normalized();
  double alpha = t1.dot(d);
  double beta = t2.dot(d);
  const double len = std::hypot(alpha, beta);
  alpha /= len;
  beta /= len;
  return FlatCut{alpha * a.normal + beta * b.normal, 0.0,
                 -beta * a.normal + alpha * b.normal};
}

TraceDet trace_det(const ModelContext& ctx, const SphereCut& s) {
  const EVec xp = ctx.perp_part(s.x0);
  const EVec np = ctx.perp_part(s.n);
  const double r2 = s.r * s.r;
  const double cross = xp.dot(np);
  return TraceDet{xp.squaredNorm() / r2 + np.squaredNorm(),
                  (xp.squaredNorm() * np.squaredNorm() - cross * cross) / r2};
}

TraceDet trace_det(const ModelContext& ctx, const FlatCut& f) {
  const EVec p1 = ctx.perp_part(f.n1);
  const EVec p2 = ctx.perp_part(f.n2);
  const double cross = p1.dot(p2);
  return TraceDet{p1.squaredNorm() + p2.squaredNorm(),
                  p1.squaredNorm() * p2.squaredNorm() - cross * cross};
}

bool same(const TraceDet& a, const TraceDet& b, double tol) {
  return std::abs(a.trace - b.trace) <= 2.0 * tol &&
         std::abs(a.det - b.det) <= tol * std::max(1.0, a.trace);
}

// (N^T, c) = (0, 0): the hyperplane passes through R^{k-1} orthogonally.
bool flat_tangent(const ModelContext& ctx, const SphereCut& s) {
  return is_zero(ctx.axis_part(s.n)) && is_zero(s.c);
}

double sphere_ratio2(const ModelContext& ctx, const SphereCut& s) {
  return ctx.perp_part(s.x0).squaredNorm() / (s.r * s.r);
}

bool tangential_independent(const ModelContext& ctx, const FlatCut& f) {
  Matrix m(f.n1.size(), 2);
  m << ctx.axis_part(f.n1), ctx.axis_part(f.n2);
  return numerical_rank(m, 1e-9) == 2;
}

bool sphere_sphere(const ModelContext& ctx, const SphereCut& a,
                   const SphereCut& b, double tol) {
  const bool ta = flat_tangent(ctx, a);
  const bool tb = flat_tangent(ctx, b);
  if (ta && tb) {
    return std::abs(sphere_ratio2(ctx, a) - sphere_ratio2(ctx, b)) <= tol;
  }
  if (!ta && !tb) return same(trace_det(ctx, a), trace_det(ctx, b), tol);
  return false;
}

bool sphere_flat(const ModelContext& ctx, const SphereCut& a, const FlatCut& b,
                 double tol) {
  const bool ta = flat_tangent(ctx, a);
  const bool second_flat = is_zero(ctx.axis_part(b.n2));
  if (ta && second_flat) {
    const double q = ctx.perp_part(b.n1).squaredNorm();
    const bool lightlike_ok = !is_zero(ctx.axis_part(b.n1)) || !is_zero(b.c);
    return std::abs(sphere_ratio2(ctx, a) - q) <= tol && lightlike_ok;
  }
  if (!ta && !second_flat) {
    const bool side = !is_zero(b.c) || tangential_independent(ctx, b);
    return side && same(trace_det(ctx, a), trace_det(ctx, b), tol);
  }
  return false;
}

bool flat_flat(const ModelContext& ctx, const FlatCut& a, const FlatCut& b,
               double tol) {
  const bool fa = is_zero(ctx.axis_part(a.n2));
  const bool fb = is_zero(ctx.axis_part(b.n2));
  if (fa && fb) {
    const double qa = ctx.perp_part(a.n1).squaredNorm();
    const double qb = ctx.perp_part(b.n1).squaredNorm();
    if (std::abs(qa - qb) > tol) return false;
    if (is_zero(ctx.axis_part(a.n1))) return is_zero(a.c) == is_zero(b.c);
    return true;
  }
  if (!fa && !fb) {
    const bool side_a = !is_zero(a.c) || tangential_independent(ctx, a);
    const bool side_b = !is_zero(b.c) || tangential_independent(ctx, b);
    return side_a && side_b && same(trace_det(ctx, a), trace_det(ctx, b), tol);
  }
  return false;
}

}  // namespace

bool congruent_codim1_euclid(const ModelContext& ctx, const RoundObject& a,
                             const RoundObject& b, double tol) {
  return std::abs(codim1_invariant(ctx, a) - codim1_invariant(ctx, b)) <= tol;
}

bool congruent_codim2_euclid(const ModelContext& ctx, const UmbilicalSpec& a,
                             const UmbilicalSpec& b, double tol) {
  if (a.codim() != 2 || b.codim() != 2) {
    throw Error(ErrorCode::kMalformedSpec,
                "codimension-two comparison needs two generators per spec");
  }
  const UmbilicalSpec na = make_spec(ctx, a.generators);
  const UmbilicalSpec nb = make_spec(ctx, b.generators);

  auto as_sphere_cut = [](const UmbilicalSpec& s) {
    const auto& sp = std::get<Sphere>(s.generators[0]);
    const auto& h = std::get<Hyperplane>(s.generators[1]);
    return SphereCut{sp.center, sp.radius, h.normal, h.offset};
  };
  auto as_flat_cut = [&](const UmbilicalSpec& s) {
    return normalize_flats(ctx, std::get<Hyperplane>(s.generators[0]),
                           std::get<Hyperplane>(s.generators[1]));
  };

  if (na.has_sphere() && nb.has_sphere()) {
    return sphere_sphere(ctx, as_sphere_cut(na), as_sphere_cut(nb), tol);
  }
  if (na.has_sphere()) {
    return sphere_flat(ctx, as_sphere_cut(na), as_flat_cut(nb), tol);
  }
  if (nb.has_sphere()) {
    return sphere_flat(ctx, as_sphere_cut(nb), as_flat_cut(na), tol);
  }
  return flat_flat(ctx, as_flat_cut(na), as_flat_cut(nb), tol);
}

}  // namespace umbilic

#include "umbilic/canonical.hpp"

#include <cmath>
#include <string>

#include "umbilic/error.hpp"

namespace umbilic {

namespace {

constexpr double kEigZero = 1e-8;

EVec unit(const ModelContext& ctx, int index) {
  EVec e = EVec::Zero(ctx.euclid_dim());
  e(index) = 1.0;
  return e;
}

UmbilicalSpec cut(const ModelContext& ctx, EVec center, double r, EVec normal,
                  double c) {
  return make_spec(ctx, {Sphere{std::move(center), r},
                         Hyperplane{std::move(normal), c}});
}

UmbilicalSpec canonical_sxr(const ModelContext& ctx, double lo, double hi) {
  const EVec x0 = unit(ctx, ctx.n());
  const EVec nn = unit(ctx, ctx.n() - 1);
  if (std::abs(lo) <= kEigZero) {
    if (hi <= 1.0 + kEigZero) {
      throw Error(ErrorCode::kInfeasibleInvariant,
                  "with a zero eigenvalue the other must exceed 1 when k = 1");
    }
    return cut(ctx, x0, 1.0 / std::sqrt(hi - 1.0), x0, 1.0);
  }
  const double r2 = 1.0 / (lo * hi);
  const double c2 = r2 * (lo + hi - 1.0) - 1.0;
  if (c2 < -1e-8 * std::max(1.0, r2 * (lo + hi))) {
    throw Error(ErrorCode::kInfeasibleInvariant,
                "eigenvalues are not realized by a codimension-two sphere "
                "when k = 1");
  }
  const double c = std::sqrt(std::max(0.0, c2));
  return cut(ctx, x0 + c * nn, std::sqrt(r2), nn, c);
}

}  // namespace

RoundObject canonical_codim1(const ModelContext& ctx, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw Error(ErrorCode::kNonPositiveInvariant,
                "invariant must be positive, got " + std::to_string(lambda));
  }
  return Sphere{unit(ctx, ctx.n()), 1.0 / std::sqrt(lambda)};
}

UmbilicalSpec canonical_codim2(const ModelContext& ctx,
                               const CongruenceInvariant& inv) {
  if (inv.perp_eigs.size() != 2) {
    throw Error(ErrorCode::kMalformedSpec,
                "codimension-two invariant needs two eigenvalues");
  }
  const double lo = std::min(inv.perp_eigs[0], inv.perp_eigs[1]);
  const double hi = std::max(inv.perp_eigs[0], inv.perp_eigs[1]);
  if (!(hi > 0.0)) {
    throw Error(ErrorCode::kNonPositiveInvariant,
                "largest eigenvalue must be positive");
  }
  if (lo < -kEigZero) {
    throw Error(ErrorCode::kInfeasibleInvariant,
                "eigenvalues of a Gram matrix cannot be negative");
  }
  if (ctx.k() == 1) return canonical_sxr(ctx, lo, hi);
  if (ctx.k() > ctx.n()) {
    throw Error(ErrorCode::kBadDimensions,
                "codimension-two families need k <= n");
  }
  if (lo > 1.0 + kEigZero) {
    throw Error(ErrorCode::kInfeasibleInvariant,
                "smallest eigenvalue exceeds 1 (got " + std::to_string(lo) +
                    ")");
  }

  const EVec p0 = unit(ctx, ctx.n());
  const EVec e = unit(ctx, ctx.n() - 1);
  const EVec eta = unit(ctx, 0);

  if (inv.tangential_rank == 1 || std::abs(lo - 1.0) <= kEigZero) {
    // Spectrum {1/r^2, 1}: the sphere owns the eigenvalue away from 1.
    const double sphere_eig =
        std::abs(lo - 1.0) > std::abs(hi - 1.0) ? lo : hi;
    if (!(sphere_eig > kEigZero)) {
      throw Error(ErrorCode::kInfeasibleInvariant,
                  "sphere eigenvalue must be positive");
    }
    return cut(ctx, p0, 1.0 / std::sqrt(sphere_eig), e, 0.0);
  }
  if (std::abs(lo) <= kEigZero) {
    return cut(ctx, p0, 1.0 / std::sqrt(hi), eta, 0.0);
  }
  const double c = std::sqrt(1.0 / lo - 1.0);
  const double s = std::sqrt(1.0 + c * c);
  return cut(ctx, p0 + s * eta, 1.0 / std::sqrt(hi), (e + c * eta) / s, c);
}

UmbilicalSpec canonical_form(const ModelContext& ctx, const UmbilicalSpec& spec,
                             double tol) {
  const SpacelikeSubspace v = subspace_of(ctx, spec, tol);
  const CongruenceInvariant inv = invariant_of(ctx, v, tol);
  if (spec.codim() == 1) {
    return UmbilicalSpec{{canonical_codim1(ctx, inv.perp_eigs[0])}};
  }
  if (spec.codim() == 2) return canonical_codim2(ctx, inv);
  throw Error(ErrorCode::kMalformedSpec,
              "no explicit canonical family in codimension " +
                  std::to_string(spec.codim()));
}

}  // namespace umbilic

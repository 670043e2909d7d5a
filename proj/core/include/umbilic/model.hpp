#pragma once

// The conformal model (R^{n+1} minus R^{k-1}, g = phi^2 g_0) of
// H^k x S^{n-k+1}, phi(x) = 1/|x^perp|, and its isometries.

#include <cstdint>
#include <optional>

#include "umbilic/lightcone.hpp"
#include "umbilic/subspace.hpp"

namespace umbilic {

struct SplitVec {
  LVec tangential;     ///< component in W1
  LVec perpendicular;  ///< component in W2
};

/// Theta(x) = Psi(x) / |x^perp|. Throws OnAxis when |x^perp| <= tol.
LVec theta(const ModelContext& ctx, const EVec& x, double tol = kDefaultTol);

/// phi(x) = 1 / |x^perp|.
double conformal_factor(const ModelContext& ctx, const EVec& x,
                        double tol = kDefaultTol);

SplitVec split(const ModelContext& ctx, const LVec& u);

struct BlockResidual {
  double lorentz = 0.0;  ///< max |T^t eta T - eta|
  double mixing = 0.0;   ///< max of |P2 T P1|, |P1 T P2| entrywise
};

BlockResidual block_residual(const ModelContext& ctx, const Matrix& t);

bool is_block_isometry(const ModelContext& ctx, const Matrix& t,
                       double tol = kDefaultTol);

/// Seeded composition of rotations of W2 and of C(R^{k-1}), a boost in
/// span{v, w} and null rotations of W1 fixing w or v. Orthochronous.
Matrix random_block_isometry(const ModelContext& ctx, std::uint64_t seed);

/// x -> ratio * A x + translation.
struct Similarity {
  Matrix a;
  double ratio = 1.0;
  EVec translation;
};

/// x -> center + radius^2 (x - center) / |x - center|^2.
struct Inversion {
  EVec center;
  double radius = 1.0;
};

enum class IsometryKind { kSimilarity, kInversionComposite };

/// F = I o L, with I absent for pure similarities.
struct IsometryForm {
  IsometryKind kind = IsometryKind::kSimilarity;
  Similarity similarity;
  std::optional<Inversion> inversion;
};

/// Euclidean description of the isometry of the model induced by a block
/// isometry T: Psi(F(x)) = Pi(T Psi(x)). When T w is not a multiple of w the
/// inversion is centered at F(infinity), with a radius chosen for
/// conditioning rather than fixed at 1.
IsometryForm euclidean_form(const ModelContext& ctx, const Matrix& t,
                            double tol = kDefaultTol);

EVec apply_isometry_form(const ModelContext& ctx, const IsometryForm& f,
                         const EVec& x, double tol = kDefaultTol);

/// Largest |g_{F(x)}(dF e_i, dF e_j) - g_x(e_i, e_j)| relative to phi(x)^2,
/// with dF from central differences of step h.
double isometry_pullback_residual(const ModelContext& ctx,
                                  const IsometryForm& f, const EVec& x,
                                  double h = 1e-5);

struct IntersectionDims {
  int with_w1 = 0;
  int with_w2 = 0;
};

/// dim(V cap W1) and dim(V cap W2), from ranks of the projected bases.
IntersectionDims intersection_dims(const ModelContext& ctx,
                                   const SpacelikeSubspace& v,
                                   double tol = kDefaultTol);

/// V = (V cap W1) + (V cap W2).
bool is_totally_geodesic(const ModelContext& ctx, const SpacelikeSubspace& v,
                         double tol = kDefaultTol);

}  // namespace umbilic

#pragma once

// Dense linear algebra on the Lorentz space L^{N} with the form
//   <u, v> = -u_0 v_0 + u_1 v_1 + ... + u_{N-1} v_{N-1}.
// Every matrix here is small (N = n + 3 with n a handful), so the routines
// favour robustness over asymptotic speed.

#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace umbilic {

/// A vector of L^{n+3}; index 0 is the timelike coordinate.
using LVec = Eigen::VectorXd;
/// A point or direction of the Euclidean space R^{n+1}.
using EVec = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Default relative tolerance, scaled by max(1, |.|^2) where a scale applies.
inline constexpr double kDefaultTol = 1e-9;

/// Threshold on |eigenvalue| used when counting the rank of a Gram matrix.
inline constexpr double kGramRankTol = 1e-8;

enum class CausalClass { kSpacelike, kTimelike, kLightlike, kZero };

std::string_view to_string(CausalClass c);

/// Eigenvalues in ascending order, repeated according to multiplicity.
struct SymSpectrum {
  std::vector<double> eigenvalues;
};

/// Ascending eigenvalues together with orthonormal eigenvectors (as columns).
struct SymEigen {
  Eigen::VectorXd values;
  Matrix vectors;
};

double minkowski_dot(const LVec& u, const LVec& v);

inline double minkowski_square(const LVec& u) { return minkowski_dot(u, u); }

/// The Gram matrix of the form, diag(-1, 1, ..., 1).
Matrix minkowski_metric(int dim);

CausalClass causal_type(const LVec& u, double tol = kDefaultTol);

Matrix gram(std::span<const LVec> vs);

/// Cyclic Jacobi eigensolver for small symmetric matrices.
/// Throws NotSymmetric when |G - G^t| exceeds tol * max(1, max|G_ij|).
SymEigen sym_eigen(const Matrix& g, double tol = kDefaultTol);

SymSpectrum sym_eigs(const Matrix& g, double tol = kDefaultTol);

/// Number of singular values above tol * max(1, largest singular value).
int numerical_rank(const Matrix& m, double tol = kDefaultTol);

/// Gram-Schmidt for the Lorentz form on a spacelike span. Each output vector
/// has a positive component along the corresponding input after projecting
/// out its predecessors.
std::vector<LVec> orthonormalize_spacelike(std::span<const LVec> vs,
                                           double tol = kDefaultTol);

/// max_ij |(T^t eta T - eta)_ij|.
double lorentz_residual(const Matrix& t);

bool is_lorentz_orthogonal(const Matrix& t, double tol = kDefaultTol);

/// Inverse of a Lorentz-orthogonal matrix, eta T^t eta.
Matrix lorentz_inverse(const Matrix& t);

/// A nondegenerate subspace of L^{N} carried by a pseudo-orthonormal basis
/// (columns of basis(), with <b_i, b_i> = signs()[i]).
class FormSpace {
 public:
  static FormSpace whole(int ambient_dim);

  /// Span of `vs`; throws HypothesisViolation if the span is degenerate.
  static FormSpace from_vectors(std::span<const LVec> vs,
                                double tol = kDefaultTol);

  /// Builds directly from a pseudo-orthonormal basis; no checks are made.
  FormSpace(Matrix basis, std::vector<int> signs);

  const Matrix& basis() const { return basis_; }
  const std::vector<int>& signs() const { return signs_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  int ambient_dim() const { return static_cast<int>(basis_.rows()); }
  int negative_index() const;

  /// Lorentz-orthogonal projection onto the subspace.
  LVec project(const LVec& u) const;
  Matrix projector() const;
  bool contains(const LVec& u, double tol = kDefaultTol) const;

 private:
  Matrix basis_;
  std::vector<int> signs_;
};

/// Returns an ambient matrix T acting as a linear isometry of `space` with
/// T(from_i) = to_i, and as the identity on the orthogonal complement of
/// `space`. Both families must have equal Gram matrices and spans that are
/// either both nondegenerate, or both degenerate with full vector rank.
/// In the degenerate case the lightlike radical vector is completed by a
/// lightlike partner orthogonal to the spacelike part of the frame and
/// normalised by <l, l'> = 1.
Matrix extend_isometry(std::span<const LVec> from, std::span<const LVec> to,
                       const FormSpace& space, double tol = kDefaultTol);

}  // namespace umbilic

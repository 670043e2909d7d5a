#pragma once

#include <vector>

#include "umbilic/lorentz.hpp"

namespace umbilic {

/// A spacelike subspace V of L^{n+3} held by a Lorentz-orthonormal basis.
/// The umbilical submanifold it stands for is the intersection of the model
/// with the orthogonal complement of V.
class SpacelikeSubspace {
 public:
  /// Orthonormalizes `vs`; throws NotSpacelike if their span is not
  /// spacelike or they are dependent.
  static SpacelikeSubspace from_vectors(std::span<const LVec> vs,
                                        double tol = kDefaultTol);

  const std::vector<LVec>& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int ambient_dim() const {
    return basis_.empty() ? 0 : static_cast<int>(basis_.front().size());
  }
  /// Basis vectors as columns.
  Matrix matrix() const;

  /// T(V), with T(xi_i) as the basis. T must be Lorentz-orthogonal, so the
  /// image basis stays orthonormal and no re-orthonormalization is done.
  SpacelikeSubspace transformed(const Matrix& t) const;

  /// Largest Euclidean distance from a basis vector of this subspace to its
  /// Lorentz-orthogonal projection onto `other`, relative to the vector's
  /// Euclidean length (at least 1 for a unit spacelike vector).
  double distance_to(const SpacelikeSubspace& other) const;

 private:
  explicit SpacelikeSubspace(std::vector<LVec> basis)
      : basis_(std::move(basis)) {}

  std::vector<LVec> basis_;
};

}  // namespace umbilic

#include "umbilic/subspace.hpp"

#include <algorithm>

#include "umbilic/error.hpp"

namespace umbilic {

SpacelikeSubspace SpacelikeSubspace::from_vectors(std::span<const LVec> vs,
                                                  double tol) {
  if (vs.empty()) {
    throw Error(ErrorCode::kNotSpacelike, "empty spanning set");
  }
  return SpacelikeSubspace(orthonormalize_spacelike(vs, tol));
}

Matrix SpacelikeSubspace::matrix() const {
  Matrix m(ambient_dim(), dim());
  for (int i = 0; i < dim(); ++i) m.col(i) = basis_[static_cast<std::size_t>(i)];
  return m;
}

SpacelikeSubspace SpacelikeSubspace::transformed(const Matrix& t) const {
  std::vector<LVec> out;
  out.reserve(basis_.size());
  for (const auto& b : basis_) {
    if (t.cols() != b.size() || t.rows() != b.size()) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "matrix does not act on the ambient space");
    }
    out.emplace_back(t * b);
  }
  return SpacelikeSubspace(std::move(out));
}

double SpacelikeSubspace::distance_to(const SpacelikeSubspace& other) const {
  double worst = 0.0;
  for (const auto& u : basis_) {
    LVec rest = u;
    for (const auto& b : other.basis_) rest -= minkowski_dot(u, b) * b;
    worst = std::max(worst, rest.norm() / u.norm());
  }
  return worst;
}

}  // namespace umbilic

#pragma once

#include <string>

#include "umbilic/congruence.hpp"

namespace umbilic {

enum class TopologyKind { kSphere, kEuclidean, kProduct };

/// S^m, R^m, or S^{sphere_dim} x R^{euclid_dim}.
struct TopologyType {
  TopologyKind kind = TopologyKind::kSphere;
  int sphere_dim = 0;
  int euclid_dim = 0;

  int dim() const {
    return kind == TopologyKind::kProduct
               ? sphere_dim + euclid_dim
               : (kind == TopologyKind::kSphere ? sphere_dim : euclid_dim);
  }
  bool operator==(const TopologyType&) const = default;
};

/// e.g. "SPHERE(3)", "EUCLIDEAN(3)", "PRODUCT(2,1)".
std::string to_string(const TopologyType& t);

/// Diffeomorphism type of the submanifold, read from how its carrier sphere
/// or affine subspace meets the removed axis R^{k-1}. Throws MalformedSpec
/// when the carrier lies inside R^{k-1}.
TopologyType classify_topology(const ModelContext& ctx,
                               const UmbilicalSpec& spec,
                               double tol = kDefaultTol);

}  // namespace umbilic

#include "umbilic/topology.hpp"

#include <cmath>
#include <optional>

#include "umbilic/error.hpp"

namespace umbilic {

namespace {

// The affine subspace {y in R^{k-1} : <N_j^T, y> = c_j for all j}.
struct AxisSlice {
  int dim = 0;
  Matrix pinv;  ///< pseudo-inverse of the constraint matrix
  Matrix m;
  Eigen::VectorXd c;

  /// Point of the slice nearest to y.
  Eigen::VectorXd nearest(const Eigen::VectorXd& y) const {
    if (m.rows() == 0) return y;
    return y + pinv * (c - m * y);
  }
};

std::optional<AxisSlice> slice_axis(const ModelContext& ctx,
                                    const std::vector<Hyperplane>& planes,
                                    double tol) {
  const int axis = ctx.axis_dim();
  const auto h = static_cast<Eigen::Index>(planes.size());
  AxisSlice s;
  s.m.resize(h, axis);
  s.c.resize(h);
  for (Eigen::Index j = 0; j < h; ++j) {
    const auto& pl = planes[static_cast<std::size_t>(j)];
    s.m.row(j) = pl.normal.head(axis).transpose();
    s.c(j) = pl.offset;
  }
  if (h == 0) {
    s.dim = axis;
    return s;
  }
  if (axis == 0) {
    if (s.c.cwiseAbs().maxCoeff() > tol) return std::nullopt;
    s.dim = 0;
    s.pinv.resize(0, h);
    return s;
  }
  Eigen::JacobiSVD<Matrix> svd(s.m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  const double cut = tol * std::max(1.0, sv(0));
  Eigen::VectorXd inv = Eigen::VectorXd::Zero(sv.size());
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > cut) {
      inv(i) = 1.0 / sv(i);
      ++rank;
    }
  }
  s.pinv = svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
  const Eigen::VectorXd y = s.pinv * s.c;
  if ((s.m * y - s.c).norm() > tol * std::max(1.0, s.c.norm()) * 10.0) {
    return std::nullopt;
  }
  s.dim = axis - rank;
  return s;
}

}  // namespace

std::string to_string(const TopologyType& t) {
  switch (t.kind) {
    case TopologyKind::kSphere:
      return "SPHERE(" + std::to_string(t.sphere_dim) + ")";
    case TopologyKind::kEuclidean:
      return "EUCLIDEAN(" + std::to_string(t.euclid_dim) + ")";
    case TopologyKind::kProduct:
      return "PRODUCT(" + std::to_string(t.sphere_dim) + "," +
             std::to_string(t.euclid_dim) + ")";
  }
  return "UNKNOWN";
}

TopologyType classify_topology(const ModelContext& ctx,
                               const UmbilicalSpec& spec, double tol) {
  if (spec.codim() < 1 || spec.codim() > ctx.n()) {
    throw Error(ErrorCode::kMalformedSpec,
                "submanifold dimension must be at least 1");
  }
  const int m = ctx.n() + 1 - spec.codim();
  std::vector<Hyperplane> planes;
  const Sphere* sphere = nullptr;
  for (const auto& g : spec.generators) {
    validate(ctx, g, tol);
    if (const auto* s = std::get_if<Sphere>(&g)) {
      if (sphere != nullptr) {
        throw Error(ErrorCode::kMalformedSpec, "more than one sphere");
      }
      sphere = s;
    } else {
      planes.push_back(std::get<Hyperplane>(g));
    }
  }

  const auto slice = slice_axis(ctx, planes, tol);
  const auto sphere_t = [](int d) {
    return TopologyType{TopologyKind::kSphere, d, 0};
  };
  const auto euclid_t = [](int d) {
    return TopologyType{TopologyKind::kEuclidean, 0, d};
  };
  const auto product_t = [](int s, int e) {
    return TopologyType{TopologyKind::kProduct, s, e};
  };

  if (sphere == nullptr) {
    if (!slice) return euclid_t(m);
    if (slice->dim >= m) {
      throw Error(ErrorCode::kMalformedSpec,
                  "affine subspace lies inside the removed axis R^{k-1}");
    }
    return product_t(m - slice->dim - 1, slice->dim + 1);
  }

  if (!slice) return sphere_t(m);
  const int axis = ctx.axis_dim();
  const Eigen::VectorXd x0t = sphere->center.head(axis);
  const Eigen::VectorXd q = slice->nearest(x0t);
  const double delta = std::sqrt((q - x0t).squaredNorm() +
                                 sphere->center.tail(ctx.euclid_dim() - axis)
                                     .squaredNorm());
  const double r = sphere->radius;
  const double eps = std::max(tol, 1e-12) * std::max(1.0, r);
  if (delta > r + eps) return sphere_t(m);
  if (std::abs(delta - r) <= eps) return euclid_t(m);
  if (slice->dim == 0) return sphere_t(m);
  if (slice->dim > m) {
    throw Error(ErrorCode::kMalformedSpec,
                "sphere lies inside the removed axis R^{k-1}");
  }
  return product_t(m - slice->dim, slice->dim);
}

}  // namespace umbilic

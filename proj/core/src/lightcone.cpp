#include "umbilic/lightcone.hpp"

#include <cmath>
#include <string>

#include "umbilic/error.hpp"

namespace umbilic {

namespace {

FormSpace make_w1(const LVec& v, const LVec& w, const Matrix& c, int k) {
  const int dim = static_cast<int>(v.size());
  Matrix basis(dim, k + 1);
  std::vector<int> signs;
  basis.col(0) = (v - w) / std::sqrt(2.0);
  signs.push_back(-1);
  basis.col(1) = (v + w) / std::sqrt(2.0);
  signs.push_back(1);
  for (int i = 0; i < k - 1; ++i) {
    basis.col(2 + i) = c.col(i);
    signs.push_back(1);
  }
  return FormSpace(std::move(basis), std::move(signs));
}

FormSpace make_w2(const Matrix& c, int n, int k) {
  const int cols = n - k + 2;
  return FormSpace(c.rightCols(cols), std::vector<int>(cols, 1));
}

void require_euclid(const ModelContext& ctx, const EVec& x) {
  if (x.size() != ctx.euclid_dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "expected a vector of length " +
                    std::to_string(ctx.euclid_dim()) + ", got " +
                    std::to_string(x.size()));
  }
}

}  // namespace

ModelContext ModelContext::standard(int n, int k) {
  if (n < 2 || k < 1 || k > n + 1) {
    throw Error(ErrorCode::kBadDimensions,
                "need n >= 2 and 1 <= k <= n+1, got n=" + std::to_string(n) +
                    ", k=" + std::to_string(k));
  }
  const int dim = n + 3;
  LVec w = LVec::Zero(dim);
  w(0) = -1.0;
  w(dim - 1) = 1.0;
  LVec v = LVec::Zero(dim);
  v(0) = 0.5;
  v(dim - 1) = 0.5;
  Matrix c = Matrix::Zero(dim, n + 1);
  for (int i = 0; i <= n; ++i) c(i + 1, i) = 1.0;
  return ModelContext(n, k, std::move(v), std::move(w), std::move(c));
}

ModelContext::ModelContext(int n, int k, LVec v, LVec w, Matrix c, double tol)
    : n_(n),
      k_(k),
      v_(std::move(v)),
      w_(std::move(w)),
      c_(std::move(c)),
      w1_(Matrix(), {}),
      w2_(Matrix(), {}) {
  if (n_ < 2 || k_ < 1 || k_ > n_ + 1) {
    throw Error(ErrorCode::kBadDimensions,
                "need n >= 2 and 1 <= k <= n+1, got n=" + std::to_string(n_) +
                    ", k=" + std::to_string(k_));
  }
  const int dim = n_ + 3;
  if (v_.size() != dim || w_.size() != dim || c_.rows() != dim ||
      c_.cols() != n_ + 1) {
    throw Error(ErrorCode::kBadDimensions, "triple does not match n");
  }
  const bool triple_ok =
      std::abs(minkowski_square(v_)) <= tol &&
      std::abs(minkowski_square(w_)) <= tol &&
      std::abs(minkowski_dot(v_, w_) - 1.0) <= tol && w_(0) < 0.0;
  if (!triple_ok) {
    throw Error(ErrorCode::kInvalidObject,
                "v and w must be lightlike with <v,w> = 1 and w_0 < 0");
  }
  for (int i = 0; i <= n_; ++i) {
    const LVec ci = c_.col(i);
    for (int j = 0; j <= n_; ++j) {
      const double expect = i == j ? 1.0 : 0.0;
      if (std::abs(minkowski_dot(ci, LVec(c_.col(j))) - expect) > tol) {
        throw Error(ErrorCode::kInvalidObject,
                    "columns of C must be orthonormal spacelike");
      }
    }
    if (std::abs(minkowski_dot(ci, v_)) > tol ||
        std::abs(minkowski_dot(ci, w_)) > tol) {
      throw Error(ErrorCode::kInvalidObject,
                  "columns of C must be orthogonal to v and w");
    }
  }
  w1_ = make_w1(v_, w_, c_, k_);
  w2_ = make_w2(c_, n_, k_);
}

EVec ModelContext::euclid_coords(const LVec& u) const {
  EVec x(n_ + 1);
  for (int i = 0; i <= n_; ++i) x(i) = minkowski_dot(c_col(i), u);
  return x;
}

EVec ModelContext::perp_part(const EVec& x) const {
  EVec out = x;
  out.head(axis_dim()).setZero();
  return out;
}

EVec ModelContext::axis_part(const EVec& x) const {
  EVec out = EVec::Zero(x.size());
  out.head(axis_dim()) = x.head(axis_dim());
  return out;
}

void validate(const ModelContext& ctx, const RoundObject& obj, double tol) {
  if (const auto* s = std::get_if<Sphere>(&obj)) {
    require_euclid(ctx, s->center);
    if (!(s->radius > 0.0) || !std::isfinite(s->radius)) {
      throw Error(ErrorCode::kInvalidObject, "radius must be positive");
    }
    if (!s->center.allFinite()) {
      throw Error(ErrorCode::kInvalidObject, "center must be finite");
    }
    return;
  }
  const auto& h = std::get<Hyperplane>(obj);
  require_euclid(ctx, h.normal);
  if (!h.normal.allFinite() || !std::isfinite(h.offset)) {
    throw Error(ErrorCode::kInvalidObject, "hyperplane data must be finite");
  }
  if (std::abs(h.normal.norm() - 1.0) > std::max(tol, 1e-9)) {
    throw Error(ErrorCode::kInvalidObject, "normal must be a unit vector");
  }
}

LVec psi(const ModelContext& ctx, const EVec& x) {
  require_euclid(ctx, x);
  return ctx.v() + ctx.c() * x - 0.5 * x.squaredNorm() * ctx.w();
}

LVec pi_project(const ModelContext& ctx, const LVec& u, double tol) {
  const double h = minkowski_dot(u, ctx.w());
  if (std::abs(h) <= tol) {
    throw Error(ErrorCode::kOnAxis, "vector is orthogonal to w");
  }
  return u / h;
}

LVec encode(const ModelContext& ctx, const RoundObject& obj) {
  if (const auto* s = std::get_if<Sphere>(&obj)) {
    return psi(ctx, s->center) / s->radius + 0.5 * s->radius * ctx.w();
  }
  const auto& h = std::get<Hyperplane>(obj);
  require_euclid(ctx, h.normal);
  return ctx.c() * h.normal - h.offset * ctx.w();
}

RoundObject decode(const ModelContext& ctx, const LVec& z, double tol) {
  if (z.size() != ctx.ambient_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length mismatch");
  }
  const double square = minkowski_square(z);
  if (std::abs(square - 1.0) > tol * std::max(1.0, z.squaredNorm())) {
    throw Error(ErrorCode::kNotUnitSpacelike,
                "expected <z,z> = 1, got " + std::to_string(square));
  }
  const double h = minkowski_dot(z, ctx.w());
  if (std::abs(h) <= tol) {
    EVec normal = ctx.euclid_coords(z);
    const double len = normal.norm();
    return Hyperplane{normal / len, -minkowski_dot(z, ctx.v()) / len};
  }
  const double sigma = h > 0 ? 1.0 : -1.0;
  const double r = 1.0 / std::abs(h);
  // Psi(x0) = r sigma z - (r^2/2) w, and C e_i is orthogonal to w.
  return Sphere{ctx.euclid_coords(r * sigma * z), r};
}

EVec conformal_apply(const ModelContext& ctx, const Matrix& t, const EVec& x,
                     double tol) {
  const LVec u = t * psi(ctx, x);
  const double h = minkowski_dot(u, ctx.w());
  if (std::abs(h) <= tol * std::max(1.0, u.norm())) {
    throw Error(ErrorCode::kPointAtInfinity, "image point is at infinity");
  }
  return ctx.euclid_coords(u) / h;
}

}  // namespace umbilic

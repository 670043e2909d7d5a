#include "umbilic/model.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "umbilic/error.hpp"

namespace umbilic {

namespace {

double perp_norm(const ModelContext& ctx, const EVec& x) {
  if (x.size() != ctx.euclid_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "point has the wrong length");
  }
  return x.tail(ctx.euclid_dim() - ctx.axis_dim()).norm();
}

// Haar-distributed orthogonal m x m matrix.
Matrix haar_orthogonal(int m, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix g(m, m);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) g(i, j) = normal(rng);
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < m; ++i) {
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  }
  return q;
}

// Identity off span(B), acting by Q on the orthonormal spacelike columns B.
Matrix rotation_on(const Matrix& b, const Matrix& q) {
  const int dim = static_cast<int>(b.rows());
  const Matrix eta = minkowski_metric(dim);
  const int m = static_cast<int>(q.rows());
  return Matrix::Identity(dim, dim) +
         b * (q - Matrix::Identity(m, m)) * b.transpose() * eta;
}

// Null rotation fixing `fixed`: x -> x + <x,fixed> a - <x,a> fixed
//   - |a|^2/2 <x,fixed> fixed, for spacelike a orthogonal to fixed and its
// partner.
Matrix null_rotation(const LVec& fixed, const LVec& a) {
  const int dim = static_cast<int>(fixed.size());
  const Matrix eta = minkowski_metric(dim);
  const double a2 = minkowski_square(a);
  return Matrix::Identity(dim, dim) + a * (fixed.transpose() * eta) -
         fixed * (a.transpose() * eta) -
         0.5 * a2 * fixed * (fixed.transpose() * eta);
}

Similarity similarity_of(const ModelContext& ctx, const Matrix& g) {
  const int m = ctx.euclid_dim();
  Similarity s;
  s.ratio = minkowski_dot(LVec(g * ctx.w()), ctx.v());
  s.a.resize(m, m);
  for (int j = 0; j < m; ++j) {
    const LVec image = g * ctx.c_col(j);
    for (int i = 0; i < m; ++i) s.a(i, j) = minkowski_dot(ctx.c_col(i), image);
  }
  s.translation = s.ratio * ctx.euclid_coords(g * ctx.v());
  return s;
}

}  // namespace

LVec theta(const ModelContext& ctx, const EVec& x, double tol) {
  return psi(ctx, x) * conformal_factor(ctx, x, tol);
}

double conformal_factor(const ModelContext& ctx, const EVec& x, double tol) {
  const double r = perp_norm(ctx, x);
  if (r <= tol) {
    throw Error(ErrorCode::kOnAxis, "point lies on the removed axis R^{k-1}");
  }
  return 1.0 / r;
}

SplitVec split(const ModelContext& ctx, const LVec& u) {
  if (u.size() != ctx.ambient_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "vector length mismatch");
  }
  LVec perp = ctx.w2().project(u);
  LVec tangential = u - perp;
  return SplitVec{std::move(tangential), std::move(perp)};
}

BlockResidual block_residual(const ModelContext& ctx, const Matrix& t) {
  if (t.rows() != ctx.ambient_dim() || t.cols() != ctx.ambient_dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "matrix has the wrong size");
  }
  const Matrix p1 = ctx.w1().projector();
  const Matrix p2 = ctx.w2().projector();
  BlockResidual r;
  r.lorentz = lorentz_residual(t);
  r.mixing = std::max((p2 * t * p1).cwiseAbs().maxCoeff(),
                      (p1 * t * p2).cwiseAbs().maxCoeff());
  return r;
}

bool is_block_isometry(const ModelContext& ctx, const Matrix& t, double tol) {
  if (t.rows() != ctx.ambient_dim() || t.cols() != ctx.ambient_dim()) {
    return false;
  }
  const double big = t.cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, big * big);
  const BlockResidual r = block_residual(ctx, t);
  return r.lorentz <= tol * scale && r.mixing <= tol * scale;
}

Matrix random_block_isometry(const ModelContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::normal_distribution<double> normal(0.0, 0.5);

  const int dim = ctx.ambient_dim();
  const int axis = ctx.axis_dim();
  const Matrix eta = minkowski_metric(dim);

  const Matrix b2 = ctx.w2().basis();
  Matrix t = rotation_on(b2, haar_orthogonal(static_cast<int>(b2.cols()), rng));

  if (axis > 0) {
    const Matrix b1 = ctx.c().leftCols(axis);
    t = t * rotation_on(b1, haar_orthogonal(axis, rng));
  }

  const double s = unit(rng);
  const LVec& v = ctx.v();
  const LVec& w = ctx.w();
  const Matrix boost = Matrix::Identity(dim, dim) +
                       (std::exp(s) - 1.0) * v * (w.transpose() * eta) +
                       (std::exp(-s) - 1.0) * w * (v.transpose() * eta);
  t = t * boost;

  if (axis > 0) {
    EVec a(ctx.euclid_dim());
    EVec b(ctx.euclid_dim());
    a.setZero();
    b.setZero();
    for (int i = 0; i < axis; ++i) a(i) = normal(rng);
    for (int i = 0; i < axis; ++i) b(i) = normal(rng);
    t = t * null_rotation(w, ctx.c() * a) * null_rotation(v, ctx.c() * b);
  }
  return t;
}

IsometryForm euclidean_form(const ModelContext& ctx, const Matrix& t,
                            double tol) {
  if (!is_block_isometry(ctx, t, tol)) {
    throw Error(ErrorCode::kNotBlockIsometry,
                "matrix is not a Lorentz isometry preserving W1 and W2");
  }
  // T and -T induce the same map; pick the one preserving the cone of w.
  Matrix g = t;
  if (minkowski_dot(LVec(t * ctx.w()), ctx.w() - ctx.v()) > 0) g = -t;

  IsometryForm form;
  const LVec wbar = g * ctx.w();
  const double lambda = minkowski_dot(wbar, ctx.v());
  if ((wbar - lambda * ctx.w()).norm() <= 1e-12 * wbar.norm()) {
    form.kind = IsometryKind::kSimilarity;
    form.similarity = similarity_of(ctx, g);
    return form;
  }

  // Any unit z along wbar + sign(d) m w reflects the ray of wbar onto the ray
  // of w; all of them encode spheres about F(infinity). m ~ |wbar| keeps z of
  // size sqrt(|wbar| / |d|) rather than 1/|d|, which matters when T is
  // close to a similarity and F(infinity) is far out.
  const double d = minkowski_dot(wbar, ctx.w());
  const double m = wbar.cwiseAbs().maxCoeff();
  const LVec u = wbar + (d > 0 ? m : -m) * ctx.w();
  const LVec z = u / std::sqrt(minkowski_square(u));
  const Matrix eta = minkowski_metric(ctx.ambient_dim());
  const Matrix reflection =
      Matrix::Identity(ctx.ambient_dim(), ctx.ambient_dim()) -
      2.0 * z * (z.transpose() * eta);
  form.kind = IsometryKind::kInversionComposite;
  form.similarity = similarity_of(ctx, reflection * g);
  const double h = minkowski_dot(z, ctx.w());
  form.inversion = Inversion{ctx.euclid_coords(z) / h, 1.0 / std::abs(h)};
  return form;
}

EVec apply_isometry_form(const ModelContext& ctx, const IsometryForm& f,
                         const EVec& x, double tol) {
  conformal_factor(ctx, x, tol);
  const Similarity& s = f.similarity;
  EVec y = s.ratio * (s.a * x) + s.translation;
  if (f.inversion) {
    const EVec d = y - f.inversion->center;
    const double d2 = d.squaredNorm();
    if (std::sqrt(d2) <= tol) {
      throw Error(ErrorCode::kAtCenter, "point is the center of inversion");
    }
    const double r = f.inversion->radius;
    y = f.inversion->center + (r * r / d2) * d;
  }
  return y;
}

double isometry_pullback_residual(const ModelContext& ctx,
                                  const IsometryForm& f, const EVec& x,
                                  double h) {
  const int m = ctx.euclid_dim();
  Matrix jac(m, m);
  for (int j = 0; j < m; ++j) {
    EVec xp = x;
    EVec xm = x;
    xp(j) += h;
    xm(j) -= h;
    jac.col(j) = (apply_isometry_form(ctx, f, xp) -
                  apply_isometry_form(ctx, f, xm)) / (2.0 * h);
  }
  const EVec fx = apply_isometry_form(ctx, f, x);
  const double phi_x = conformal_factor(ctx, x);
  const double phi_fx = conformal_factor(ctx, fx);
  const Matrix pulled = phi_fx * phi_fx * (jac.transpose() * jac);
  const Matrix base = phi_x * phi_x * Matrix::Identity(m, m);
  return (pulled - base).cwiseAbs().maxCoeff() / (phi_x * phi_x);
}

IntersectionDims intersection_dims(const ModelContext& ctx,
                                   const SpacelikeSubspace& v, double tol) {
  const Matrix b = v.matrix();
  const int p = v.dim();
  IntersectionDims d;
  d.with_w1 = p - numerical_rank(ctx.w2().projector() * b, tol);
  d.with_w2 = p - numerical_rank(ctx.w1().projector() * b, tol);
  return d;
}

bool is_totally_geodesic(const ModelContext& ctx, const SpacelikeSubspace& v,
                         double tol) {
  const IntersectionDims d = intersection_dims(ctx, v, tol);
  return d.with_w1 + d.with_w2 == v.dim();
}

}  // namespace umbilic

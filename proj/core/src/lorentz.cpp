#include "umbilic/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>
#include <string>

#include "umbilic/error.hpp"

namespace umbilic {

namespace {

void require_same_size(const LVec& u, const LVec& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vector lengths differ: " + std::to_string(u.size()) + " vs " +
                    std::to_string(v.size()));
  }
}

struct SignedFrame {
  std::vector<LVec> vectors;
  std::vector<int> signs;

  void push(LVec v, int sign) {
    vectors.push_back(std::move(v));
    signs.push_back(sign);
  }
  std::size_t size() const { return vectors.size(); }
};

LVec project_off(const LVec& u, const SignedFrame& frame) {
  LVec out = u;
  for (std::size_t j = 0; j < frame.size(); ++j) {
    out -= frame.signs[j] * minkowski_dot(u, frame.vectors[j]) *
           frame.vectors[j];
  }
  return out;
}

// Pseudo-orthonormal basis of the part of `space` orthogonal to `frame`,
// timelike vectors first.
SignedFrame complement_of(const SignedFrame& frame, const FormSpace& space) {
  SignedFrame out;
  const int needed = space.dim() - static_cast<int>(frame.size());
  if (needed < 0) {
    throw Error(ErrorCode::kHypothesisViolation,
                "frame is larger than the target space");
  }
  if (needed == 0) return out;

  Matrix candidates(space.ambient_dim(), space.dim());
  for (int i = 0; i < space.dim(); ++i) {
    // Two passes keep the projection accurate when the frame is badly scaled.
    LVec c = project_off(space.basis().col(i), frame);
    candidates.col(i) = project_off(c, frame);
  }
  Eigen::JacobiSVD<Matrix> svd(candidates, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  if (sv(needed - 1) <= 1e-10 * std::max(1.0, sv(0))) {
    throw Error(ErrorCode::kHypothesisViolation,
                "frame vectors are not independent inside the space");
  }
  const Matrix y = svd.matrixU().leftCols(needed);
  const Matrix h = y.transpose() * minkowski_metric(space.ambient_dim()) * y;
  const SymEigen eig = sym_eigen(0.5 * (h + h.transpose()));
  for (int i = 0; i < needed; ++i) {
    const double lambda = eig.values(i);
    if (std::abs(lambda) <= 1e-12) {
      throw Error(ErrorCode::kHypothesisViolation,
                  "orthogonal complement of the frame is degenerate");
    }
    // Ascending eigenvalues already put the timelike directions first.
    out.push(y * eig.vectors.col(i) / std::sqrt(std::abs(lambda)),
             lambda < 0 ? -1 : 1);
  }
  return out;
}

// Lightlike l' with <l, l'> = 1, orthogonal to every vector of `frame`.
LVec witt_partner(const LVec& light, const SignedFrame& frame,
                  const FormSpace& space) {
  if (space.negative_index() == 0) {
    throw Error(ErrorCode::kHypothesisViolation,
                "degenerate span inside a positive definite space");
  }
  // Mirror `light` through the spacelike directions of the space basis. The
  // mirror pairs with `light` at minus its squared coordinate norm, which
  // keeps the partner well scaled whatever direction `light` points in.
  LVec tau = LVec::Zero(light.size());
  for (int i = 0; i < space.dim(); ++i) {
    const LVec e = space.basis().col(i);
    tau -= minkowski_dot(light, e) * e;
  }
  tau = project_off(tau, frame);
  const double pairing = minkowski_dot(tau, light);
  if (std::abs(pairing) <= 1e-14 * std::max(1.0, tau.squaredNorm())) {
    throw Error(ErrorCode::kHypothesisViolation,
                "lightlike vector is orthogonal to the timelike direction");
  }
  const LVec y = tau / pairing;
  return y - 0.5 * minkowski_square(y) * light;
}

}  // namespace

std::string_view to_string(CausalClass c) {
  switch (c) {
    case CausalClass::kSpacelike: return "SPACELIKE";
    case CausalClass::kTimelike: return "TIMELIKE";
    case CausalClass::kLightlike: return "LIGHTLIKE";
    case CausalClass::kZero: return "ZERO";
  }
  return "UNKNOWN";
}

double minkowski_dot(const LVec& u, const LVec& v) {
  require_same_size(u, v);
  if (u.size() == 0) return 0.0;
  double s = -u(0) * v(0);
  for (Eigen::Index i = 1; i < u.size(); ++i) s += u(i) * v(i);
  return s;
}

Matrix minkowski_metric(int dim) {
  Matrix eta = Matrix::Identity(dim, dim);
  if (dim > 0) eta(0, 0) = -1.0;
  return eta;
}

CausalClass causal_type(const LVec& u, double tol) {
  const double norm2 = u.squaredNorm();
  if (std::sqrt(norm2) <= tol) return CausalClass::kZero;
  const double s = minkowski_square(u);
  const double threshold = tol * std::max(1.0, norm2);
  if (s > threshold) return CausalClass::kSpacelike;
  if (s < -threshold) return CausalClass::kTimelike;
  return CausalClass::kLightlike;
}

Matrix gram(std::span<const LVec> vs) {
  const auto m = static_cast<Eigen::Index>(vs.size());
  Matrix g(m, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = i; j < m; ++j) {
      g(i, j) = minkowski_dot(vs[static_cast<std::size_t>(i)],
                              vs[static_cast<std::size_t>(j)]);
      g(j, i) = g(i, j);
    }
  }
  return g;
}

SymEigen sym_eigen(const Matrix& g, double tol) {
  if (g.rows() != g.cols()) {
    throw Error(ErrorCode::kNotSymmetric, "matrix is not square");
  }
  const Eigen::Index m = g.rows();
  const double scale = m > 0 ? std::max(1.0, g.cwiseAbs().maxCoeff()) : 1.0;
  if (m > 0 && (g - g.transpose()).cwiseAbs().maxCoeff() > tol * scale) {
    throw Error(ErrorCode::kNotSymmetric, "matrix is not symmetric");
  }

  Matrix a = 0.5 * (g + g.transpose());
  Matrix v = Matrix::Identity(m, m);
  const double frob2 = a.squaredNorm();
  const double eps = std::numeric_limits<double>::epsilon();

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < m; ++p) {
      for (Eigen::Index q = p + 1; q < m; ++q) off += a(p, q) * a(p, q);
    }
    if (off <= eps * eps * frob2 * 1e-4 || off == 0.0) break;

    for (Eigen::Index p = 0; p < m; ++p) {
      for (Eigen::Index q = p + 1; q < m; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t =
            (theta >= 0.0 ? 1.0 : -1.0) /
            (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (Eigen::Index r = 0; r < m; ++r) {
          if (r == p || r == q) continue;
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(p, r) = a(r, p);
          a(r, q) = s * arp + c * arq;
          a(q, r) = a(r, q);
        }
        for (Eigen::Index r = 0; r < m; ++r) {
          const double vrp = v(r, p);
          const double vrq = v(r, q);
          v(r, p) = c * vrp - s * vrq;
          v(r, q) = s * vrp + c * vrq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) {
                     return a(i, i) < a(j, j);
                   });
  SymEigen out{Eigen::VectorXd(m), Matrix(m, m)};
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::Index src = order[static_cast<std::size_t>(i)];
    out.values(i) = a(src, src);
    Eigen::VectorXd col = v.col(src);
    // Deterministic sign: largest-magnitude entry positive.
    Eigen::Index arg = 0;
    col.cwiseAbs().maxCoeff(&arg);
    if (col(arg) < 0) col = -col;
    out.vectors.col(i) = col;
  }
  return out;
}

SymSpectrum sym_eigs(const Matrix& g, double tol) {
  const SymEigen e = sym_eigen(g, tol);
  return SymSpectrum{
      std::vector<double>(e.values.data(), e.values.data() + e.values.size())};
}

int numerical_rank(const Matrix& m, double tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& sv = svd.singularValues();
  const double threshold = tol * std::max(1.0, sv(0));
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv(i) > threshold) ++rank;
  }
  return rank;
}

std::vector<LVec> orthonormalize_spacelike(std::span<const LVec> vs,
                                           double tol) {
  if (vs.empty()) return {};
  for (const auto& u : vs) require_same_size(u, vs.front());

  const SymSpectrum spec = sym_eigs(gram(vs), 1e-6);
  const double top = std::max(1.0, std::abs(spec.eigenvalues.back()));
  if (spec.eigenvalues.front() <= tol * top) {
    throw Error(ErrorCode::kNotSpacelike,
                "span is not spacelike (Gram eigenvalue " +
                    std::to_string(spec.eigenvalues.front()) + ")");
  }

  // Boosted unit vectors have large entries, so a pairing carries rounding
  // of order eps * |a| * |b| in Euclidean norms. Corrections below that
  // floor are noise and are skipped, which keeps already-orthonormal input
  // exact.
  constexpr double kFloor = 64.0 * std::numeric_limits<double>::epsilon();
  std::vector<LVec> out;
  out.reserve(vs.size());
  for (const auto& u : vs) {
    LVec b = u;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& prev : out) {
        const double d = minkowski_dot(b, prev);
        if (std::abs(d) > kFloor * b.norm() * prev.norm()) b -= d * prev;
      }
    }
    const double n2 = minkowski_square(b);
    if (n2 <= tol * std::max(1.0, std::abs(minkowski_square(u)))) {
      throw Error(ErrorCode::kNotSpacelike,
                  "vectors are dependent or span a non-spacelike subspace");
    }
    if (std::abs(n2 - 1.0) <= kFloor * b.squaredNorm()) {
      out.push_back(std::move(b));
    } else {
      out.push_back(b / std::sqrt(n2));
    }
  }
  return out;
}

double lorentz_residual(const Matrix& t) {
  const Matrix eta = minkowski_metric(static_cast<int>(t.rows()));
  return (t.transpose() * eta * t - eta).cwiseAbs().maxCoeff();
}

bool is_lorentz_orthogonal(const Matrix& t, double tol) {
  if (t.rows() != t.cols() || t.rows() == 0) return false;
  return lorentz_residual(t) <= tol;
}

Matrix lorentz_inverse(const Matrix& t) {
  const Matrix eta = minkowski_metric(static_cast<int>(t.rows()));
  return eta * t.transpose() * eta;
}

FormSpace::FormSpace(Matrix basis, std::vector<int> signs)
    : basis_(std::move(basis)), signs_(std::move(signs)) {}

FormSpace FormSpace::whole(int ambient_dim) {
  std::vector<int> signs(static_cast<std::size_t>(ambient_dim), 1);
  if (ambient_dim > 0) signs[0] = -1;
  return FormSpace(Matrix::Identity(ambient_dim, ambient_dim),
                   std::move(signs));
}

FormSpace FormSpace::from_vectors(std::span<const LVec> vs, double tol) {
  if (vs.empty()) {
    throw Error(ErrorCode::kHypothesisViolation, "empty spanning set");
  }
  const auto dim = vs.front().size();
  Matrix a(dim, static_cast<Eigen::Index>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i) {
    require_same_size(vs[i], vs.front());
    a.col(static_cast<Eigen::Index>(i)) = vs[i];
  }
  Eigen::JacobiSVD<Matrix> svd(a, Eigen::ComputeThinU);
  const int rank = numerical_rank(a, tol);
  if (rank == 0) {
    throw Error(ErrorCode::kHypothesisViolation, "spanning set is zero");
  }
  const Matrix y = svd.matrixU().leftCols(rank);
  const Matrix h = y.transpose() * minkowski_metric(static_cast<int>(dim)) * y;
  const SymEigen eig = sym_eigen(0.5 * (h + h.transpose()));
  Matrix basis(dim, rank);
  std::vector<int> signs;
  for (int i = 0; i < rank; ++i) {
    const double lambda = eig.values(i);
    if (std::abs(lambda) <= kGramRankTol) {
      throw Error(ErrorCode::kHypothesisViolation, "span is degenerate");
    }
    basis.col(i) = y * eig.vectors.col(i) / std::sqrt(std::abs(lambda));
    signs.push_back(lambda < 0 ? -1 : 1);
  }
  return FormSpace(std::move(basis), std::move(signs));
}

int FormSpace::negative_index() const {
  return static_cast<int>(std::count(signs_.begin(), signs_.end(), -1));
}

LVec FormSpace::project(const LVec& u) const {
  LVec out = LVec::Zero(basis_.rows());
  for (Eigen::Index i = 0; i < basis_.cols(); ++i) {
    const LVec b = basis_.col(i);
    out += signs_[static_cast<std::size_t>(i)] * minkowski_dot(b, u) * b;
  }
  return out;
}

Matrix FormSpace::projector() const {
  Matrix e = Matrix::Zero(basis_.cols(), basis_.cols());
  for (Eigen::Index i = 0; i < basis_.cols(); ++i) {
    e(i, i) = signs_[static_cast<std::size_t>(i)];
  }
  return basis_ * e * basis_.transpose() *
         minkowski_metric(static_cast<int>(basis_.rows()));
}

bool FormSpace::contains(const LVec& u, double tol) const {
  return (u - project(u)).norm() <= tol * std::max(1.0, u.norm());
}

Matrix extend_isometry(std::span<const LVec> from, std::span<const LVec> to,
                       const FormSpace& space, double tol) {
  if (from.size() != to.size() || from.empty()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "extend_isometry needs two non-empty families of equal size");
  }
  const int n_amb = space.ambient_dim();
  double scale = 1.0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (from[i].size() != n_amb || to[i].size() != n_amb) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "vector length does not match the ambient space");
    }
    scale = std::max({scale, from[i].squaredNorm(), to[i].squaredNorm()});
  }
  const double vec_tol = std::max(tol, 1e-9) * 10.0;
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (!space.contains(from[i], vec_tol) || !space.contains(to[i], vec_tol)) {
      throw Error(ErrorCode::kHypothesisViolation,
                  "vector does not lie in the target space");
    }
  }

  const Matrix ga = gram(from);
  const Matrix gb = gram(to);
  if ((ga - gb).cwiseAbs().maxCoeff() > tol * scale) {
    throw Error(ErrorCode::kGramMismatch, "Gram matrices differ");
  }
  const SymEigen eig = sym_eigen(0.5 * (ga + gb), 1e-6);

  const auto m = static_cast<Eigen::Index>(from.size());
  Matrix a(n_amb, m);
  Matrix b(n_amb, m);
  for (Eigen::Index i = 0; i < m; ++i) {
    a.col(i) = from[static_cast<std::size_t>(i)];
    b.col(i) = to[static_cast<std::size_t>(i)];
  }

  const double eig_zero = kGramRankTol * scale;
  const double vec_zero = 1e-6 * std::sqrt(scale);
  SignedFrame frame_a;
  SignedFrame frame_b;
  std::optional<std::pair<LVec, LVec>> light;
  for (Eigen::Index i = 0; i < m; ++i) {
    const double lambda = eig.values(i);
    const LVec alpha = a * eig.vectors.col(i);
    const LVec beta = b * eig.vectors.col(i);
    if (std::abs(lambda) > eig_zero) {
      const double s = std::sqrt(std::abs(lambda));
      const int sign = lambda < 0 ? -1 : 1;
      frame_a.push(alpha / s, sign);
      frame_b.push(beta / s, sign);
      continue;
    }
    const bool zero_a = alpha.norm() <= vec_zero;
    const bool zero_b = beta.norm() <= vec_zero;
    if (zero_a != zero_b) {
      throw Error(ErrorCode::kHypothesisViolation,
                  "one span is degenerate and the other is not");
    }
    if (zero_a) continue;
    if (light) {
      throw Error(ErrorCode::kHypothesisViolation,
                  "degenerate span without full vector rank");
    }
    light.emplace(alpha, beta);
  }

  if (light) {
    const LVec partner_a = witt_partner(light->first, frame_a, space);
    const LVec partner_b = witt_partner(light->second, frame_b, space);
    const double r = 1.0 / std::sqrt(2.0);
    frame_a.push(r * (light->first + partner_a), 1);
    frame_a.push(r * (light->first - partner_a), -1);
    frame_b.push(r * (light->second + partner_b), 1);
    frame_b.push(r * (light->second - partner_b), -1);
  }

  const SignedFrame rest_a = complement_of(frame_a, space);
  const SignedFrame rest_b = complement_of(frame_b, space);
  if (rest_a.signs != rest_b.signs) {
    throw Error(ErrorCode::kHypothesisViolation,
                "signatures of the completed frames differ");
  }
  for (std::size_t i = 0; i < rest_a.size(); ++i) {
    frame_a.push(rest_a.vectors[i], rest_a.signs[i]);
    frame_b.push(rest_b.vectors[i], rest_b.signs[i]);
  }

  const Matrix eta = minkowski_metric(n_amb);
  Matrix t = Matrix::Identity(n_amb, n_amb) - space.projector();
  for (std::size_t j = 0; j < frame_a.size(); ++j) {
    t += frame_a.signs[j] * frame_b.vectors[j] *
         (frame_a.vectors[j].transpose() * eta);
  }
  return t;
}

}  // namespace umbilic

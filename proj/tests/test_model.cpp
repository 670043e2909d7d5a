#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "umbilic/error.hpp"
#include "umbilic/model.hpp"
#include "umbilic/sampling.hpp"

namespace umbilic {
namespace {

EVec off_axis_point(const ModelContext& ctx, Rng& rng) {
  EVec x;
  do {
    x = random_point(ctx, rng);
  } while (ctx.perp_part(x).norm() < 0.1);
  return x;
}

// Hand-built block isometries with known Euclidean action.

// x -> x + a, a in the axis R^{k-1}.
Matrix translation_matrix(const ModelContext& ctx, const EVec& a) {
  const int d = ctx.ambient_dim();
  Matrix t(d, d);
  // T u = u + <u, w> C a - (<u, C a> + |a|^2/2 <u, w>) w, the null rotation
  // with T v = Psi(a), T w = w, T C x = C x - <a, x> w.
  const LVec ca = ctx.c() * a;
  for (int j = 0; j < d; ++j) {
    LVec u = LVec::Zero(d);
    u(j) = 1;
    const double uw = minkowski_dot(u, ctx.w());
    t.col(j) = u + uw * ca - (minkowski_dot(u, ca) + 0.5 * a.squaredNorm() * uw) * ctx.w();
  }
  return t;
}

// x -> s x.
Matrix dilation_matrix(const ModelContext& ctx, double s) {
  const int d = ctx.ambient_dim();
  // T v = v / s, T w = s w, identity on C(R^{n+1}).
  const LVec v = ctx.v();
  const LVec w = ctx.w();
  Matrix t = Matrix::Identity(d, d);
  const Matrix eta = minkowski_metric(d);
  // u = <u,w> v + <u,v> w + rest
  t += (1.0 / s - 1.0) * v * (eta * w).transpose();
  t += (s - 1.0) * w * (eta * v).transpose();
  return t;
}

// Reflection in the round object encoded by the unit spacelike z.
Matrix reflection_matrix(const LVec& z) {
  const int d = static_cast<int>(z.size());
  return Matrix::Identity(d, d) - 2.0 * z * (minkowski_metric(d) * z).transpose();
}

TEST(Theta, LandsOnProductOfSpaceForms) {
  Rng rng(1);
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {5, 3}, {4, 1}, {3, 4}}) {
    const auto ctx = ModelContext::standard(n, k);
    for (int t = 0; t < 500; ++t) {
      const EVec x = off_axis_point(ctx, rng);
      const SplitVec s = split(ctx, theta(ctx, x));
      EXPECT_NEAR(minkowski_square(s.tangential), -1.0, 1e-9);
      EXPECT_NEAR(minkowski_square(s.perpendicular), 1.0, 1e-9);
    }
  }
}

TEST(Theta, RejectsAxisPoints) {
  const auto ctx = ModelContext::standard(3, 2);
  EVec x = EVec::Zero(4);
  x(0) = 2.0;
  try {
    theta(ctx, x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOnAxis);
  }
}

TEST(Theta, ConformalFactor) {
  const auto ctx = ModelContext::standard(3, 2);
  EVec x = EVec::Zero(4);
  x(0) = 7.0;
  x(2) = 3.0;
  x(3) = 4.0;
  EXPECT_NEAR(conformal_factor(ctx, x), 0.2, 1e-15);
}

// Central-difference Jacobian of Theta against phi^2 delta_ij.
TEST(Theta, PullbackIsConformal) {
  Rng rng(2);
  const double h = 1e-5;
  for (auto [n, k] : {std::pair{3, 2}, {4, 3}}) {
    const auto ctx = ModelContext::standard(n, k);
    for (int t = 0; t < 50; ++t) {
      const EVec x = off_axis_point(ctx, rng);
      const double phi2 = std::pow(conformal_factor(ctx, x), 2);
      std::vector<LVec> d;
      for (int i = 0; i <= n; ++i) {
        EVec dx = EVec::Zero(n + 1);
        dx(i) = h;
        d.push_back((theta(ctx, x + dx) - theta(ctx, x - dx)) / (2 * h));
      }
      const Matrix g = gram(d);
      const double err =
          (g - phi2 * Matrix::Identity(n + 1, n + 1)).cwiseAbs().maxCoeff();
      EXPECT_LT(err / phi2, 1e-4);
    }
  }
}

TEST(Split, ExactDecomposition) {
  const auto ctx = ModelContext::standard(4, 2);
  Rng rng(3);
  std::normal_distribution<double> normal;
  for (int t = 0; t < 100; ++t) {
    LVec u(7);
    for (auto& x : u) x = normal(rng);
    const SplitVec s = split(ctx, u);
    EXPECT_LT((s.tangential + s.perpendicular - u).norm(), 1e-13);
    EXPECT_NEAR(minkowski_dot(s.tangential, s.perpendicular), 0.0, 1e-13);
    EXPECT_TRUE(ctx.w2().contains(s.perpendicular));
    EXPECT_TRUE(ctx.w1().contains(s.tangential));
  }
}

TEST(BlockIsometry, RandomGeneratorIsBlock) {
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {5, 3}, {4, 1}}) {
    const auto ctx = ModelContext::standard(n, k);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const Matrix t = random_block_isometry(ctx, seed);
      EXPECT_TRUE(is_block_isometry(ctx, t));
      EXPECT_LT(lorentz_residual(t), 1e-10);
      // Orthochronous on W1: the future cone is kept.
      EXPECT_LT(minkowski_dot(t * ctx.w(), ctx.w() - ctx.v()), 0.0);
    }
  }
  const auto ctx = ModelContext::standard(3, 2);
  EXPECT_EQ(random_block_isometry(ctx, 9), random_block_isometry(ctx, 9));
}

TEST(BlockIsometry, MixingIsRejected) {
  const auto ctx = ModelContext::standard(3, 2);
  Matrix r = Matrix::Identity(6, 6);
  // Rotation of the plane (C e_1, C e_2), which mixes W1 and W2.
  const double a = 0.3;
  r(1, 1) = r(2, 2) = std::cos(a);
  r(1, 2) = -std::sin(a);
  r(2, 1) = std::sin(a);
  EXPECT_TRUE(is_lorentz_orthogonal(r));
  EXPECT_FALSE(is_block_isometry(ctx, r));
  EXPECT_GT(block_residual(ctx, r).mixing, 0.1);
}

// Theta intertwines T with the induced Euclidean map.
TEST(BlockIsometry, ThetaEquivariance) {
  Rng rng(4);
  const auto ctx = ModelContext::standard(4, 2);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Matrix t = random_block_isometry(ctx, seed);
    const IsometryForm f = euclidean_form(ctx, t);
    for (int i = 0; i < 20; ++i) {
      const EVec x = off_axis_point(ctx, rng);
      EVec fx;
      try {
        fx = apply_isometry_form(ctx, f, x);
      } catch (const Error&) {
        continue;
      }
      const LVec lhs = t * theta(ctx, x);
      const LVec rhs = theta(ctx, fx);
      EXPECT_LT((lhs - rhs).norm(), 1e-8 * std::max(1.0, lhs.norm()));
    }
  }
}

TEST(EuclideanForm, Translation) {
  const auto ctx = ModelContext::standard(3, 3);
  EVec a = EVec::Zero(4);
  a(0) = 0.7;
  a(1) = -1.2;
  const Matrix t = translation_matrix(ctx, a);
  ASSERT_TRUE(is_block_isometry(ctx, t));
  const IsometryForm f = euclidean_form(ctx, t);
  EXPECT_EQ(f.kind, IsometryKind::kSimilarity);
  EXPECT_NEAR(f.similarity.ratio, 1.0, 1e-12);
  EXPECT_LT((f.similarity.translation - a).norm(), 1e-12);
  EXPECT_LT((f.similarity.a - Matrix::Identity(4, 4)).norm(), 1e-12);
}

TEST(EuclideanForm, Dilation) {
  const auto ctx = ModelContext::standard(3, 2);
  const Matrix t = dilation_matrix(ctx, 2.5);
  ASSERT_TRUE(is_block_isometry(ctx, t));
  const IsometryForm f = euclidean_form(ctx, t);
  EXPECT_EQ(f.kind, IsometryKind::kSimilarity);
  EXPECT_NEAR(f.similarity.ratio, 2.5, 1e-12);
  EXPECT_LT(f.similarity.translation.norm(), 1e-12);
}

// Inversion in the sphere S(x0, r) with x0 on the axis, against the
// classical formula x0 + r^2 (x - x0) / |x - x0|^2.
TEST(EuclideanForm, InversionMatchesClassicalFormula) {
  Rng rng(5);
  const auto ctx = ModelContext::standard(4, 3);
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> radius(0.5, 2.0);
  for (int t = 0; t < 30; ++t) {
    EVec x0 = EVec::Zero(5);
    x0(0) = normal(rng);
    x0(1) = normal(rng);
    const double r = radius(rng);
    const Matrix m = reflection_matrix(encode(ctx, Sphere{x0, r}));
    ASSERT_TRUE(is_block_isometry(ctx, m));
    const IsometryForm f = euclidean_form(ctx, m);
    EXPECT_EQ(f.kind, IsometryKind::kInversionComposite);
    for (int i = 0; i < 20; ++i) {
      const EVec x = off_axis_point(ctx, rng);
      const EVec expect = x0 + r * r * (x - x0) / (x - x0).squaredNorm();
      const EVec got = apply_isometry_form(ctx, f, x);
      EXPECT_LT((got - expect).norm(), 1e-9 * std::max(1.0, expect.norm()));
    }
  }
}

// Composite of a W2 rotation, dilation, translation and inversion, compared
// point by point with the composed Euclidean maps.
TEST(EuclideanForm, ComposedKnownMaps) {
  Rng rng(6);
  const auto ctx = ModelContext::standard(3, 2);
  EVec a = EVec::Zero(4);
  a(0) = 0.4;
  EVec x0 = EVec::Zero(4);
  x0(0) = -0.3;
  const double r = 1.3;
  const double s = 0.8;
  const double ang = 0.9;
  Matrix rot = Matrix::Identity(6, 6);
  rot(2, 2) = rot(3, 3) = std::cos(ang);
  rot(2, 3) = -std::sin(ang);
  rot(3, 2) = std::sin(ang);
  const Matrix t = reflection_matrix(encode(ctx, Sphere{x0, r})) *
                   translation_matrix(ctx, a) * dilation_matrix(ctx, s) * rot;
  ASSERT_TRUE(is_block_isometry(ctx, t));
  const IsometryForm f = euclidean_form(ctx, t);
  for (int i = 0; i < 50; ++i) {
    const EVec x = off_axis_point(ctx, rng);
    EVec y = x;
    const double y1 = std::cos(ang) * x(1) - std::sin(ang) * x(2);
    const double y2 = std::sin(ang) * x(1) + std::cos(ang) * x(2);
    y(1) = y1;
    y(2) = y2;
    y = s * y + a;
    y = x0 + r * r * (y - x0) / (y - x0).squaredNorm();
    EXPECT_LT((apply_isometry_form(ctx, f, x) - y).norm(),
              1e-9 * std::max(1.0, y.norm()));
    EXPECT_LT((conformal_apply(ctx, t, x) - y).norm(),
              1e-9 * std::max(1.0, y.norm()));
  }
}

TEST(EuclideanForm, PullbackMetric) {
  Rng rng(7);
  const auto ctx = ModelContext::standard(3, 2);
  for (std::uint64_t seed = 100; seed < 120; ++seed) {
    const IsometryForm f = euclidean_form(ctx, random_block_isometry(ctx, seed));
    for (int i = 0; i < 10; ++i) {
      const EVec x = off_axis_point(ctx, rng);
      try {
        EXPECT_LT(isometry_pullback_residual(ctx, f, x), 1e-4);
      } catch (const Error&) {
      }
    }
  }
}

TEST(EuclideanForm, RejectsNonBlock) {
  const auto ctx = ModelContext::standard(3, 2);
  Matrix r = Matrix::Identity(6, 6);
  r(1, 1) = r(2, 2) = 0;
  r(1, 2) = -1;
  r(2, 1) = 1;
  try {
    euclidean_form(ctx, r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotBlockIsometry);
  }
}

TEST(Intersections, Examples) {
  const auto ctx = ModelContext::standard(3, 2);
  const std::vector<LVec> in_w2{ctx.c_col(2)};
  const auto a = SpacelikeSubspace::from_vectors(in_w2);
  EXPECT_EQ(intersection_dims(ctx, a).with_w2, 1);
  EXPECT_TRUE(is_totally_geodesic(ctx, a));
  const std::vector<LVec> mixed{ctx.c_col(0) + ctx.c_col(2)};
  const auto b = SpacelikeSubspace::from_vectors(mixed);
  EXPECT_EQ(intersection_dims(ctx, b).with_w1, 0);
  EXPECT_EQ(intersection_dims(ctx, b).with_w2, 0);
  EXPECT_FALSE(is_totally_geodesic(ctx, b));
}

}  // namespace
}  // namespace umbilic

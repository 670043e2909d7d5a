#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "umbilic/error.hpp"
#include "umbilic/lightcone.hpp"
#include "umbilic/sampling.hpp"

namespace umbilic {
namespace {

EVec e(int dim, int i) {
  EVec x = EVec::Zero(dim);
  x(i) = 1;
  return x;
}

TEST(Psi, Origin) {
  const auto ctx = ModelContext::standard(3, 2);
  EXPECT_LT((psi(ctx, EVec::Zero(4)) - ctx.v()).norm(), 1e-15);
}

TEST(Psi, UnitVector) {
  const auto ctx = ModelContext::standard(3, 2);
  const LVec p = psi(ctx, e(4, 0));
  LVec expect = ctx.v() + ctx.c_col(0) - 0.5 * ctx.w();
  EXPECT_LT((p - expect).norm(), 1e-15);
  EXPECT_NEAR(minkowski_square(p), 0.0, 1e-15);
}

TEST(Psi, LightConeIdentities) {
  Rng rng(5);
  for (int n : {2, 3, 5}) {
    const auto ctx = ModelContext::standard(n, 2);
    for (int t = 0; t < 1000; ++t) {
      const EVec x = random_point(ctx, rng, 3.0);
      const LVec p = psi(ctx, x);
      const double scale = std::max(1.0, x.squaredNorm());
      EXPECT_LT(std::abs(minkowski_square(p)), 1e-12 * scale);
      EXPECT_NEAR(minkowski_dot(p, ctx.w()), 1.0, 1e-14);
      // Psi is the inverse chart of the projection.
      EXPECT_LT((ctx.euclid_coords(p) - x).norm(), 1e-13 * scale);
    }
  }
}

// <Psi(x), Psi(y)> = -|x - y|^2 / 2.
TEST(Psi, DistanceIdentity) {
  Rng rng(6);
  const auto ctx = ModelContext::standard(4, 3);
  for (int t = 0; t < 500; ++t) {
    const EVec x = random_point(ctx, rng);
    const EVec y = random_point(ctx, rng);
    EXPECT_NEAR(minkowski_dot(psi(ctx, x), psi(ctx, y)),
                -0.5 * (x - y).squaredNorm(), 1e-12);
  }
}

TEST(PiProject, ScalesOntoSection) {
  const auto ctx = ModelContext::standard(3, 2);
  const LVec u = 3.0 * psi(ctx, e(4, 1));
  const LVec p = pi_project(ctx, u);
  EXPECT_NEAR(minkowski_dot(p, ctx.w()), 1.0, 1e-15);
  try {
    pi_project(ctx, ctx.w());
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kOnAxis);
  }
}

TEST(Encode, UnitSphereAtOrigin) {
  const auto ctx = ModelContext::standard(3, 2);
  const LVec z = encode(ctx, Sphere{EVec::Zero(4), 1.0});
  LVec expect = LVec::Zero(6);
  expect(5) = 1;
  EXPECT_LT((z - expect).norm(), 1e-15);
}

TEST(Encode, HyperplaneThroughOrigin) {
  const auto ctx = ModelContext::standard(3, 2);
  const LVec z = encode(ctx, Hyperplane{e(4, 0), 0.0});
  EXPECT_LT((z - ctx.c_col(0)).norm(), 1e-15);
}

TEST(Encode, RejectsBadObjects) {
  const auto ctx = ModelContext::standard(3, 2);
  try {
    validate(ctx, Sphere{EVec::Zero(4), -1.0});
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kInvalidObject);
    EXPECT_NE(std::string(err.what()).find("radius must be positive"),
              std::string::npos);
  }
  EXPECT_THROW(validate(ctx, Hyperplane{2.0 * e(4, 0), 0.0}), Error);
  EXPECT_THROW(validate(ctx, Sphere{EVec::Zero(3), 1.0}), Error);
}

// Membership oracle: a point lies on the round object iff <Psi(x), z> = 0.
TEST(Encode, MembershipMatchesEuclideanEquation) {
  Rng rng(7);
  const auto ctx = ModelContext::standard(3, 2);
  for (int t = 0; t < 300; ++t) {
    const Sphere s = random_sphere(ctx, rng);
    const EVec on = s.center + s.radius * random_unit(ctx, rng);
    const LVec z = encode(ctx, s);
    EXPECT_NEAR(minkowski_square(z), 1.0, 1e-12);
    EXPECT_NEAR(minkowski_dot(psi(ctx, on), z), 0.0, 1e-11);
    const EVec off = random_point(ctx, rng);
    // <Psi(x), z> = (r^2 - |x - x0|^2) / (2r)
    EXPECT_NEAR(minkowski_dot(psi(ctx, off), z),
                (s.radius * s.radius - (off - s.center).squaredNorm()) /
                    (2 * s.radius),
                1e-11);

    const Hyperplane h = random_hyperplane(ctx, rng);
    const LVec zh = encode(ctx, h);
    EXPECT_NEAR(minkowski_square(zh), 1.0, 1e-12);
    EXPECT_NEAR(minkowski_dot(psi(ctx, off), zh), off.dot(h.normal) - h.offset,
                1e-12);
  }
}

TEST(Decode, RoundTrip) {
  Rng rng(8);
  const auto ctx = ModelContext::standard(4, 2);
  for (int t = 0; t < 300; ++t) {
    const Sphere s = random_sphere(ctx, rng);
    const auto back = decode(ctx, encode(ctx, s));
    ASSERT_TRUE(is_sphere(back));
    const auto& sb = std::get<Sphere>(back);
    EXPECT_LT((sb.center - s.center).norm(), 1e-10);
    EXPECT_NEAR(sb.radius, s.radius, 1e-10);
    // Opposite orientation decodes to the same sphere.
    const auto neg = std::get<Sphere>(decode(ctx, -encode(ctx, s)));
    EXPECT_LT((neg.center - s.center).norm(), 1e-10);

    const Hyperplane h = random_hyperplane(ctx, rng);
    const auto hb = std::get<Hyperplane>(decode(ctx, encode(ctx, h)));
    EXPECT_LT((hb.normal - h.normal).norm(), 1e-12);
    EXPECT_NEAR(hb.offset, h.offset, 1e-12);
  }
}

TEST(ModelContext, Split) {
  const auto ctx = ModelContext::standard(3, 2);
  EXPECT_EQ(ctx.w1().dim(), 3);
  EXPECT_EQ(ctx.w2().dim(), 3);
  EXPECT_EQ(ctx.w1().negative_index(), 1);
  EXPECT_EQ(ctx.w2().negative_index(), 0);
  EXPECT_TRUE(ctx.w1().contains(ctx.v()));
  EXPECT_TRUE(ctx.w1().contains(ctx.w()));
  EXPECT_TRUE(ctx.w1().contains(ctx.c_col(0)));
  EXPECT_TRUE(ctx.w2().contains(ctx.c_col(1)));
  EXPECT_FALSE(ctx.w2().contains(ctx.c_col(0)));
  const EVec x = EVec::Constant(4, 2.0);
  EXPECT_EQ(ctx.perp_part(x)(0), 0.0);
  EXPECT_EQ(ctx.axis_part(x)(1), 0.0);
}

TEST(ModelContext, RejectsBadDimensions) {
  EXPECT_THROW(ModelContext::standard(1, 1), Error);
  EXPECT_THROW(ModelContext::standard(3, 0), Error);
  EXPECT_THROW(ModelContext::standard(3, 5), Error);
  EXPECT_NO_THROW(ModelContext::standard(3, 4));
}

TEST(ModelContext, GeneralTripleIsChecked) {
  const auto std_ctx = ModelContext::standard(3, 2);
  // A Lorentz image of the standard triple is an admissible triple.
  Matrix t = Matrix::Identity(6, 6);
  const double s = 0.4;
  t(0, 0) = t(5, 5) = std::cosh(s);
  t(0, 5) = t(5, 0) = std::sinh(s);
  EXPECT_NO_THROW(
      ModelContext(3, 2, t * std_ctx.v(), t * std_ctx.w(), t * std_ctx.c()));
  EXPECT_THROW(ModelContext(3, 2, std_ctx.v(), 2.0 * std_ctx.w(), std_ctx.c()),
               Error);
}

TEST(ConformalApply, IdentityAndTranslation) {
  const auto ctx = ModelContext::standard(3, 2);
  Rng rng(9);
  const EVec x = random_point(ctx, rng);
  EXPECT_LT((conformal_apply(ctx, Matrix::Identity(6, 6), x) - x).norm(),
            1e-14);
}

}  // namespace
}  // namespace umbilic

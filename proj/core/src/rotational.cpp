#include "umbilic/rotational.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "umbilic/canonical.hpp"
#include "umbilic/error.hpp"

namespace umbilic {

namespace {

constexpr double kPi = std::numbers::pi;

void require_hn_s1(const ModelContext& ctx) {
  if (ctx.k() != ctx.n()) {
    throw Error(ErrorCode::kWrongContext,
                "profile curves are defined for k = n (H^n x S^1); got n=" +
                    std::to_string(ctx.n()) + ", k=" + std::to_string(ctx.k()));
  }
}

struct CanonicalCurve {
  ProfileCase pc;
  UmbilicalSpec spec;
};

CanonicalCurve canonical_curve(const ModelContext& ctx,
                               const UmbilicalSpec& spec, double tol) {
  require_hn_s1(ctx);
  if (spec.codim() < 1 || spec.codim() > 2) {
    throw Error(ErrorCode::kMalformedSpec,
                "profile curves exist in codimension one or two");
  }
  const SpacelikeSubspace v = subspace_of(ctx, spec, tol);
  if (!is_substantial(ctx, v, tol)) {
    throw Error(ErrorCode::kNotSubstantial,
                "profile curves are described for substantial submanifolds; "
                "this one lies in a totally geodesic submanifold");
  }
  CanonicalCurve out{ProfileCase{}, canonical_form(ctx, spec, tol)};
  ProfileCase& pc = out.pc;
  pc.codim = spec.codim();
  const auto& sphere = std::get<Sphere>(out.spec.generators.front());
  pc.radius = sphere.radius;
  if (pc.codim == 2) {
    pc.c = std::get<Hyperplane>(out.spec.generators[1]).offset;
    const double r2 = pc.radius * pc.radius;
    pc.boundary_family = std::abs(r2 - (1.0 + pc.c * pc.c)) <= 1e-8 * r2;
  }
  pc.tangential_square =
      minkowski_square(split(ctx, encode(ctx, sphere)).tangential);

  if (pc.tangential_square > tol) {
    pc.kind = ProfileKind::kHyperbolic;
    pc.theta_min = -kPi;
    pc.theta_max = kPi;
    pc.max_closed = true;
  } else if (pc.tangential_square >= -tol) {
    pc.kind = ProfileKind::kParabolic;
    pc.theta_min = -kPi;
    pc.theta_max = kPi;
  } else {
    pc.kind = ProfileKind::kSpherical;
    const double a = std::acos(std::clamp(pc.radius, -1.0, 1.0));
    pc.theta_min = -kPi + a;
    pc.theta_max = kPi - a;
    pc.min_closed = true;
    pc.max_closed = true;
  }
  return out;
}

}  // namespace

std::string_view to_string(ActingBlock b) {
  switch (b) {
    case ActingBlock::kW1: return "W1";
    case ActingBlock::kW2: return "W2";
    case ActingBlock::kBoth: return "BOTH";
    case ActingBlock::kNone: return "NONE";
  }
  return "UNKNOWN";
}

std::string_view to_string(ProfileKind k) {
  switch (k) {
    case ProfileKind::kHyperbolic: return "HYPERBOLIC";
    case ProfileKind::kParabolic: return "PARABOLIC";
    case ProfileKind::kSpherical: return "SPHERICAL";
  }
  return "UNKNOWN";
}

OrbitStructure orbit_structure(const ModelContext& ctx,
                               const SpacelikeSubspace& v, double tol) {
  if (!is_substantial(ctx, v, tol)) {
    throw Error(ErrorCode::kNotSubstantial,
                "orbit structure is described for substantial submanifolds");
  }
  const int n = ctx.n();
  const int k = ctx.k();
  const int p = v.dim();
  const bool w1 = p <= k - 1;
  const bool w2 = p <= n - k;
  OrbitStructure o;
  if (w1) o.w1_orbit_dim = k - p;
  if (w2) o.w2_orbit_dim = n - k - p + 1;
  if (w1 && w2) {
    o.acting = ActingBlock::kBoth;
    o.cohomogeneity = p;
  } else if (w1) {
    o.acting = ActingBlock::kW1;
    o.cohomogeneity = n - k + 1;
  } else if (w2) {
    o.acting = ActingBlock::kW2;
    o.cohomogeneity = k;
  } else {
    o.acting = ActingBlock::kNone;
    o.cohomogeneity = n + 1 - p;
  }
  return o;
}

ProfileCase profile_case(const ModelContext& ctx, const UmbilicalSpec& spec,
                         double tol) {
  return canonical_curve(ctx, spec, tol).pc;
}

std::vector<double> profile_thetas(const ProfileCase& pc, int samples) {
  if (samples < 2) {
    throw Error(ErrorCode::kInvalidObject, "need at least 2 samples");
  }
  const double a = pc.theta_min;
  const double b = pc.theta_max;
  std::vector<double> out(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    double t;
    if (pc.min_closed && pc.max_closed) {
      t = a + i * (b - a) / (samples - 1);
    } else if (pc.max_closed) {
      t = a + (i + 1) * (b - a) / samples;
    } else if (pc.min_closed) {
      t = a + i * (b - a) / samples;
    } else {
      t = a + (i + 1) * (b - a) / (samples + 1);
    }
    out[static_cast<std::size_t>(i)] = t;
  }
  if (pc.max_closed) out.back() = b;
  return out;
}

std::vector<ProfileSample> profile_curve(const ModelContext& ctx,
                                         const UmbilicalSpec& spec,
                                         int samples, double tol) {
  const CanonicalCurve cc = canonical_curve(ctx, spec, tol);
  const ProfileCase& pc = cc.pc;
  const int n = ctx.n();
  const auto& sphere = std::get<Sphere>(cc.spec.generators.front());

  EVec e_last = EVec::Zero(n + 1);
  e_last(n) = 1.0;
  EVec e_n = EVec::Zero(n + 1);
  e_n(n - 1) = 1.0;
  EVec e_1 = EVec::Zero(n + 1);
  e_1(0) = 1.0;

  EVec along = e_n;
  if (pc.codim == 2) {
    const double s = std::sqrt(1.0 + pc.c * pc.c);
    along = (-pc.c * e_n + e_1) / s;
  }

  std::vector<LVec> zs;
  for (const auto& g : cc.spec.generators) zs.push_back(encode(ctx, g));

  std::vector<ProfileSample> out;
  out.reserve(static_cast<std::size_t>(samples));
  for (double th : profile_thetas(pc, samples)) {
    ProfileSample s;
    s.theta = th;
    s.x = sphere.center + pc.radius * std::cos(th) * e_last +
          pc.radius * std::sin(th) * along;
    s.theta_x = theta(ctx, s.x, tol);
    s.slice_angle = std::atan2(s.x(n - 1), s.x(n));
    for (const auto& z : zs) {
      s.membership_residual = std::max(s.membership_residual,
                                       std::abs(minkowski_dot(s.theta_x, z)));
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace umbilic

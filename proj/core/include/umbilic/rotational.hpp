#pragma once

// Rotational structure of umbilical submanifolds and the explicit profile
// curves for H^n x S^1 (k = n).

#include <vector>

#include "umbilic/congruence.hpp"

namespace umbilic {

enum class ActingBlock { kW1, kW2, kBoth, kNone };

std::string_view to_string(ActingBlock b);

struct OrbitStructure {
  ActingBlock acting = ActingBlock::kNone;
  int cohomogeneity = 0;
  int w1_orbit_dim = 0;  ///< 0 when the W1 subgroup does not act
  int w2_orbit_dim = 0;  ///< 0 when the W2 subgroup does not act
};

/// Which of the subgroups fixing V^perp cap W_i pointwise act on S, with the
/// resulting cohomogeneity and orbit dimensions. Throws NotSubstantial.
OrbitStructure orbit_structure(const ModelContext& ctx,
                               const SpacelikeSubspace& v,
                               double tol = kDefaultTol);

enum class ProfileKind { kHyperbolic, kParabolic, kSpherical };

std::string_view to_string(ProfileKind k);

struct ProfileCase {
  ProfileKind kind = ProfileKind::kHyperbolic;
  double theta_min = 0.0;
  double theta_max = 0.0;
  bool min_closed = false;
  bool max_closed = false;
  /// Parameters of the canonical representative the curve is drawn on.
  int codim = 1;
  double radius = 1.0;
  double c = 0.0;  ///< hyperplane offset in codimension two
  /// Codimension two with r^2 = 1 + c^2: the one-parameter hyperbolic family.
  bool boundary_family = false;
  /// <z1^T, z1^T> for the sphere generator of the representative.
  double tangential_square = 0.0;
};

/// Requires k = n (WrongContext otherwise) and a substantial spec of
/// codimension one or two, which is first replaced by its canonical
/// representative. The case follows the sign of <z1^T, z1^T> within tol.
ProfileCase profile_case(const ModelContext& ctx, const UmbilicalSpec& spec,
                         double tol = kDefaultTol);

struct ProfileSample {
  double theta = 0.0;
  EVec x;
  LVec theta_x;  ///< Theta(x) on H^n x S^1
  double slice_angle = 0.0;
  double membership_residual = 0.0;  ///< max_i |<Theta(x), z_i>|
};

/// Evenly spaced samples of the profile curve over the case interval, with
/// endpoints only where the interval is closed. slice_angle is
/// atan2(x_n, x_{n+1}), the angle of the S^1 factor.
std::vector<ProfileSample> profile_curve(const ModelContext& ctx,
                                         const UmbilicalSpec& spec,
                                         int samples,
                                         double tol = kDefaultTol);

/// The theta grid used by profile_curve.
std::vector<double> profile_thetas(const ProfileCase& pc, int samples);

}  // namespace umbilic

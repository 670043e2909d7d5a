#pragma once

// The conformal light-cone model: Euclidean space R^{n+1} sits inside the
// light cone of L^{n+3} as the section {<u, w> = 1}, and round objects
// (hyperspheres and affine hyperplanes) correspond to unit spacelike vectors.

#include <variant>

#include "umbilic/lorentz.hpp"

namespace umbilic {

/// A fixed triple (v, w, C) together with the split L^{n+3} = W1 + W2 for the
/// model of H^k x S^{n-k+1}. W1 = span{v, w} + C(R^{k-1}), W2 = C(R^{n-k+2}).
class ModelContext {
 public:
  /// The standard triple w = (-1,0,...,0,1), v = (1/2,0,...,0,1/2),
  /// C e_i = coordinate i. Requires n >= 2 and 1 <= k <= n+1.
  static ModelContext standard(int n, int k);

  /// General triple; validated against the model invariants with `tol`.
  ModelContext(int n, int k, LVec v, LVec w, Matrix c, double tol = kDefaultTol);

  int n() const { return n_; }
  int k() const { return k_; }
  int ambient_dim() const { return n_ + 3; }
  int euclid_dim() const { return n_ + 1; }
  /// Dimension of the removed axis R^{k-1}; its coordinates come first.
  int axis_dim() const { return k_ - 1; }

  const LVec& v() const { return v_; }
  const LVec& w() const { return w_; }
  const Matrix& c() const { return c_; }
  /// C e_i, with i zero-based.
  LVec c_col(int i) const { return c_.col(i); }

  const FormSpace& w1() const { return w1_; }
  const FormSpace& w2() const { return w2_; }

  /// Euclidean coordinates x_i = <C e_i, u> of the C(R^{n+1}) part of u.
  EVec euclid_coords(const LVec& u) const;

  /// x with its R^{k-1} coordinates zeroed (x^perp), and the complement.
  EVec perp_part(const EVec& x) const;
  EVec axis_part(const EVec& x) const;

 private:
  int n_;
  int k_;
  LVec v_;
  LVec w_;
  Matrix c_;
  FormSpace w1_;
  FormSpace w2_;
};

inline ModelContext default_context(int n, int k) {
  return ModelContext::standard(n, k);
}

struct Sphere {
  EVec center;
  double radius = 1.0;
};

struct Hyperplane {
  EVec normal;  ///< unit
  double offset = 0.0;  ///< <x, normal> = offset on the plane
};

using RoundObject = std::variant<Sphere, Hyperplane>;

inline bool is_sphere(const RoundObject& o) {
  return std::holds_alternative<Sphere>(o);
}

/// Throws InvalidObject for a non-positive radius, a non-unit normal or a
/// vector of the wrong length.
void validate(const ModelContext& ctx, const RoundObject& obj,
              double tol = kDefaultTol);

/// Psi(x) = v + C x - |x|^2 w / 2.
LVec psi(const ModelContext& ctx, const EVec& x);

/// u / <u, w>; throws OnAxis when |<u, w>| <= tol.
LVec pi_project(const ModelContext& ctx, const LVec& u,
                double tol = kDefaultTol);

/// Sphere -> Psi(x0)/r + (r/2) w; hyperplane -> C N - c w.
LVec encode(const ModelContext& ctx, const RoundObject& obj);

/// Inverse of encode. Spheres come back with positive radius whatever the
/// sign of z; |<z, w>| <= tol is read as a hyperplane.
RoundObject decode(const ModelContext& ctx, const LVec& z,
                   double tol = kDefaultTol);

/// The point y with Psi(y) = Pi(T Psi(x)); throws PointAtInfinity when
/// T Psi(x) is (numerically) a multiple of w.
EVec conformal_apply(const ModelContext& ctx, const Matrix& t, const EVec& x,
                     double tol = kDefaultTol);

}  // namespace umbilic

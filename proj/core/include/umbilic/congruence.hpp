#pragma once

// Umbilical submanifolds of H^k x S^{n-k+1} as spacelike subspaces, and the
// decision of when two of them are congruent.

#include <vector>

#include "umbilic/lightcone.hpp"
#include "umbilic/model.hpp"
#include "umbilic/subspace.hpp"

namespace umbilic {

/// Absolute tolerance for matching perpendicular Gram eigenvalues.
inline constexpr double kEigenMatchTol = 1e-8;

/// An orthogonal intersection of round objects. After make_spec there is at
/// most one sphere and it comes first; hyperplanes follow by descending
/// |N^perp|, ties broken by the lexicographic order of the normals.
struct UmbilicalSpec {
  std::vector<RoundObject> generators;

  int codim() const { return static_cast<int>(generators.size()); }
  bool has_sphere() const {
    return !generators.empty() && is_sphere(generators.front());
  }
};

/// Validates and normalizes. Generators must encode to pairwise orthogonal
/// vectors (MalformedSpec otherwise). Several spheres are traded for one
/// sphere plus hyperplanes spanning the same subspace.
UmbilicalSpec make_spec(const ModelContext& ctx,
                        std::vector<RoundObject> generators,
                        double tol = kDefaultTol);

SpacelikeSubspace subspace_of(const ModelContext& ctx,
                              std::span<const RoundObject> generators,
                              double tol = kDefaultTol);

SpacelikeSubspace subspace_of(const ModelContext& ctx,
                              const UmbilicalSpec& spec,
                              double tol = kDefaultTol);

/// Round-object description of a subspace: one sphere if V is not
/// orthogonal to w, the rest hyperplanes.
UmbilicalSpec spec_of(const ModelContext& ctx, const SpacelikeSubspace& v,
                      double tol = kDefaultTol);

bool is_substantial(const ModelContext& ctx, const SpacelikeSubspace& v,
                    double tol = kDefaultTol);

/// min{k+1, n-k+2}.
int max_substantial_codim(int n, int k);

struct CongruenceInvariant {
  std::vector<double> perp_eigs;  ///< ascending
  int tangential_rank = 0;
  bool tangential_degenerate = false;
};

CongruenceInvariant invariant_of(const ModelContext& ctx,
                                 const SpacelikeSubspace& v,
                                 double tol = kDefaultTol);

/// Throws DimMismatch for different dimensions and NotSubstantial when
/// either subspace meets W1 or W2.
bool are_congruent(const ModelContext& ctx, const SpacelikeSubspace& a,
                   const SpacelikeSubspace& b, double tol = kEigenMatchTol);

struct CongruenceWitness {
  Matrix t;
  double lorentz_residual = 0.0;
  double block_residual = 0.0;
  double subspace_distance = 0.0;
};

/// A block isometry T with T(a) = b. Throws NotCongruent when the spectra
/// differ.
CongruenceWitness build_block_isometry(const ModelContext& ctx,
                                       const SpacelikeSubspace& a,
                                       const SpacelikeSubspace& b,
                                       double tol = kEigenMatchTol);

/// Hypersurfaces compared through their Euclidean data: |x0^perp|/r for
/// spheres and |N^perp| for hyperplanes.
bool congruent_codim1_euclid(const ModelContext& ctx, const RoundObject& a,
                             const RoundObject& b,
                             double tol = kEigenMatchTol);

/// Codimension-two specs compared through traces and determinants of their
/// perpendicular Gram matrices with the case splits on (N^T, c).
bool congruent_codim2_euclid(const ModelContext& ctx, const UmbilicalSpec& a,
                             const UmbilicalSpec& b,
                             double tol = kEigenMatchTol);

}  // namespace umbilic

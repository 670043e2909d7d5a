#pragma once

// Seeded random instances for property checks and benchmarks.

#include <random>

#include "umbilic/congruence.hpp"

namespace umbilic {

using Rng = std::mt19937_64;

/// Gaussian point of R^{n+1} with standard deviation `scale`.
EVec random_point(const ModelContext& ctx, Rng& rng, double scale = 1.0);

EVec random_unit(const ModelContext& ctx, Rng& rng);

/// Sphere with center ~ N(0, 1) per coordinate and radius in [0.3, 2].
Sphere random_sphere(const ModelContext& ctx, Rng& rng);

/// Hyperplane with a uniform unit normal and offset ~ N(0, 1).
Hyperplane random_hyperplane(const ModelContext& ctx, Rng& rng);

/// Sphere cut orthogonally by a hyperplane through its center.
UmbilicalSpec random_sphere_cut(const ModelContext& ctx, Rng& rng);

/// Two orthogonal hyperplanes with random offsets.
UmbilicalSpec random_flat_cut(const ModelContext& ctx, Rng& rng);

/// A generic p-dimensional spacelike subspace: Gaussian spanning vectors
/// with a damped timelike coordinate, resampled until the Gram matrix is
/// comfortably positive definite.
SpacelikeSubspace random_spacelike_subspace(const ModelContext& ctx, int p,
                                            Rng& rng);

}  // namespace umbilic

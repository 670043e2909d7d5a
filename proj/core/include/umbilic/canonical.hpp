#pragma once

// One representative per congruence class for codimensions one and two.

#include "umbilic/congruence.hpp"

namespace umbilic {

/// S(e_{n+1}, 1/sqrt(lambda)). Throws NonPositiveInvariant for lambda <= 0.
RoundObject canonical_codim1(const ModelContext& ctx, double lambda);

/// Representative with the given perpendicular spectrum (two eigenvalues).
///
/// For k >= 2, with p0 = e_{n+1}, e = e_n, eta = e_1:
///   tangential rank 1 (or smallest eigenvalue 1): S(p0, r) cap H(e, 0);
///   smallest eigenvalue 0:                        S(p0, r) cap H(eta, 0);
///   otherwise S(x_c, r) cap H(N_c, c) with c = sqrt(1/lambda_min - 1),
///   r = 1/sqrt(lambda_max), x_c = p0 + sqrt(1+c^2) eta,
///   N_c = (e + c eta)/sqrt(1+c^2).
/// For k = 1, with x0 = e_{n+1}, N = e_n:
///   smallest eigenvalue 0: S(x0, r) cap H(x0, 1), r = 1/sqrt(lambda_max - 1);
///   otherwise S(x0 + c N, r) cap H(N, c) with r^2 = 1/(lambda_min lambda_max)
///   and c^2 = r^2 (lambda_min + lambda_max - 1) - 1.
/// Throws InfeasibleInvariant outside the realizable range.
UmbilicalSpec canonical_codim2(const ModelContext& ctx,
                               const CongruenceInvariant& inv);

/// canonical_codim1 or canonical_codim2 for the invariant of `spec`. Throws
/// MalformedSpec for codimension three or more, where no explicit family is
/// constructed.
UmbilicalSpec canonical_form(const ModelContext& ctx, const UmbilicalSpec& spec,
                             double tol = kDefaultTol);

}  // namespace umbilic

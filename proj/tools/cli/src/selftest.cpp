#include "umbilic/cli/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "umbilic/canonical.hpp"
#include "umbilic/error.hpp"
#include "umbilic/rotational.hpp"
#include "umbilic/sampling.hpp"

namespace umbilic::cli {

namespace {

using nlohmann::json;

struct Suite {
  std::string name;
  int checks = 0;
  int failures = 0;
  double max_residual = 0.0;

  // Records one check; a non-finite residual counts as a failure.
  void record(double residual, double bound) {
    ++checks;
    if (!(residual <= bound)) ++failures;
    if (std::isfinite(residual)) max_residual = std::max(max_residual, residual);
  }
  void fail() {
    ++checks;
    ++failures;
  }
  json to_json() const {
    return {{"name", name},
            {"checks", checks},
            {"failures", failures},
            {"max_residual", max_residual},
            {"pass", checks > 0 && failures == 0}};
  }
};

Rng suite_rng(std::uint64_t seed, int index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index)};
  return Rng(seq);
}

EVec off_axis_point(const ModelContext& ctx, Rng& rng) {
  EVec x;
  do {
    x = random_point(ctx, rng);
  } while (ctx.perp_part(x).norm() < 0.1);
  return x;
}

SpacelikeSubspace substantial(const ModelContext& ctx, int p, Rng& rng) {
  for (;;) {
    auto v = random_spacelike_subspace(ctx, p, rng);
    if (is_substantial(ctx, v)) return v;
  }
}

// Adds `eps` times the largest entry to one off-diagonal W1/W2 entry.
Matrix perturbed(const Matrix& t, double eps) {
  if (eps == 0.0) return t;
  Matrix out = t;
  out(0, t.cols() - 2) += eps * t.cwiseAbs().maxCoeff();
  return out;
}

Suite lightcone_identities(const SelftestConfig& cfg) {
  Suite s{"lightcone_identities"};
  Rng rng = suite_rng(cfg.seed, 1);
  const auto ctx = ModelContext::standard(3, 2);
  std::uniform_real_distribution<double> radius(0.0, 10.0);
  for (int t = 0; t < cfg.trials; ++t) {
    const EVec x = radius(rng) * random_unit(ctx, rng);
    const LVec p = psi(ctx, x);
    s.record(std::max(std::abs(minkowski_square(p)),
                      std::abs(minkowski_dot(p, ctx.w()) - 1.0)),
             1e-10);
  }
  return s;
}

Suite theta_constraint(const SelftestConfig& cfg) {
  Suite s{"theta_constraint"};
  Rng rng = suite_rng(cfg.seed, 2);
  for (auto [n, k] : {std::pair{2, 2}, {3, 2}, {5, 3}}) {
    const auto ctx = ModelContext::standard(n, k);
    for (int t = 0; t < cfg.trials; ++t) {
      const SplitVec sp = split(ctx, theta(ctx, off_axis_point(ctx, rng)));
      s.record(std::max(std::abs(minkowski_square(sp.tangential) + 1.0),
                        std::abs(minkowski_square(sp.perpendicular) - 1.0)),
               1e-9);
    }
  }
  return s;
}

Suite conformality(const SelftestConfig& cfg) {
  Suite s{"conformality"};
  Rng rng = suite_rng(cfg.seed, 3);
  const auto ctx = ModelContext::standard(3, 2);
  const double h = 1e-5;
  for (int t = 0; t < cfg.trials; ++t) {
    const EVec x = off_axis_point(ctx, rng);
    const double phi2 = std::pow(conformal_factor(ctx, x), 2);
    std::vector<LVec> d;
    for (int i = 0; i < ctx.euclid_dim(); ++i) {
      EVec dx = EVec::Zero(ctx.euclid_dim());
      dx(i) = h;
      d.push_back((theta(ctx, x + dx) - theta(ctx, x - dx)) / (2 * h));
    }
    const Matrix g = gram(d);
    const Matrix expect = phi2 * Matrix::Identity(g.rows(), g.cols());
    s.record((g - expect).cwiseAbs().maxCoeff() / phi2, 1e-4);
  }
  return s;
}

Suite congruence_invariance(const SelftestConfig& cfg) {
  Suite s{"congruence_invariance"};
  Rng rng = suite_rng(cfg.seed, 4);
  const auto ctx = ModelContext::standard(4, 2);
  for (int t = 0; t < cfg.trials; ++t) {
    const int p = 1 + t % 3;
    try {
      const auto a = substantial(ctx, p, rng);
      const auto b = a.transformed(random_block_isometry(ctx, rng()));
      if (!are_congruent(ctx, a, b)) {
        s.fail();
        continue;
      }
      const auto w = build_block_isometry(ctx, a, b);
      const Matrix tm = perturbed(w.t, cfg.perturb);
      const BlockResidual br = block_residual(ctx, tm);
      s.record(std::max({br.lorentz, br.mixing, b.distance_to(a.transformed(tm))}),
               1e-8);
    } catch (const Error&) {
      s.fail();
    }
  }
  return s;
}

Suite isometry_decomposition(const SelftestConfig& cfg, double perturb) {
  Suite s{"isometry_decomposition"};
  Rng rng = suite_rng(cfg.seed, 5);
  const auto ctx = ModelContext::standard(3, 2);
  for (int t = 0; t < cfg.trials; ++t) {
    const Matrix tm = perturbed(random_block_isometry(ctx, rng()), perturb);
    try {
      const IsometryForm f = euclidean_form(ctx, tm, cfg.tol);
      double res = 0.0;
      for (int i = 0; i < 5; ++i) {
        const EVec x = off_axis_point(ctx, rng);
        EVec fx;
        try {
          fx = apply_isometry_form(ctx, f, x);
        } catch (const Error&) {
          continue;  // x sent to infinity
        }
        const LVec lhs = psi(ctx, fx);
        const LVec rhs = pi_project(ctx, tm * psi(ctx, x));
        res = std::max(res, (lhs - rhs).norm() / std::max(1.0, lhs.norm()));
      }
      s.record(res, 1e-8);
    } catch (const Error&) {
      s.fail();
    }
  }
  return s;
}

Suite codim1_closed_form(const SelftestConfig& cfg) {
  Suite s{"codim1_closed_form"};
  Rng rng = suite_rng(cfg.seed, 6);
  const auto ctx = ModelContext::standard(3, 2);
  int done = 0;
  while (done < cfg.trials) {
    const RoundObject a = random_sphere(ctx, rng);
    RoundObject b = random_hyperplane(ctx, rng);
    const auto va = subspace_of(ctx, make_spec(ctx, {a}));
    if (done % 2 == 0) {
      b = spec_of(ctx, va.transformed(random_block_isometry(ctx, rng()))).generators[0];
    }
    const auto vb = subspace_of(ctx, make_spec(ctx, {b}));
    if (!is_substantial(ctx, va) || !is_substantial(ctx, vb)) continue;
    const bool agree =
        congruent_codim1_euclid(ctx, a, b) == are_congruent(ctx, va, vb);
    s.record(agree ? 0.0 : 1.0, 0.0);
    ++done;
  }
  return s;
}

Suite canonical_round_trip(const SelftestConfig& cfg) {
  Suite s{"canonical_round_trip"};
  Rng rng = suite_rng(cfg.seed, 7);
  const auto ctx = ModelContext::standard(3, 2);
  for (int t = 0; t < cfg.trials; ++t) {
    const auto v = substantial(ctx, 1 + t % 2, rng);
    const auto inv = invariant_of(ctx, v);
    try {
      const auto back = invariant_of(
          ctx, subspace_of(ctx, canonical_form(ctx, spec_of(ctx, v))));
      double gap = 0.0;
      for (std::size_t i = 0; i < inv.perp_eigs.size(); ++i) {
        gap = std::max(gap, std::abs(inv.perp_eigs[i] - back.perp_eigs[i]));
      }
      s.record(gap, 1e-9);
    } catch (const Error&) {
      s.fail();
    }
  }
  return s;
}

Suite profile_membership(const SelftestConfig& cfg) {
  Suite s{"profile_membership"};
  Rng rng = suite_rng(cfg.seed, 8);
  const auto ctx = ModelContext::standard(3, 3);
  std::uniform_real_distribution<double> radius(0.2, 3.0);
  for (int t = 0; t < cfg.trials; ++t) {
    EVec c = EVec::Zero(4);
    c(3) = 1.0;
    const auto spec = make_spec(ctx, {Sphere{c, radius(rng)}});
    const auto curve = profile_curve(ctx, spec, 16, cfg.tol);
    double res = 0.0;
    for (const auto& p : curve) res = std::max(res, p.membership_residual);
    s.record(res, 1e-9);
  }
  return s;
}

}  // namespace

json selftest_report(const SelftestConfig& cfg) {
  std::vector<Suite> suites{
      lightcone_identities(cfg),     theta_constraint(cfg),
      conformality(cfg),             congruence_invariance(cfg),
      isometry_decomposition(cfg, cfg.perturb), codim1_closed_form(cfg),
      canonical_round_trip(cfg),     profile_membership(cfg)};

  constexpr double kControl = 1e-3;
  const Suite control = isometry_decomposition(cfg, kControl);
  const bool detected = control.failures > 0;

  bool pass = detected;
  json list = json::array();
  for (const auto& s : suites) {
    pass = pass && s.checks > 0 && s.failures == 0;
    list.push_back(s.to_json());
  }
  return {{"seed", cfg.seed},
          {"trials", cfg.trials},
          {"tolerance", cfg.tol},
          {"perturbation", cfg.perturb},
          {"suites", list},
          {"negative_control",
           {{"perturbation", kControl},
            {"checks", control.checks},
            {"failures", control.failures},
            {"detected", detected}}},
          {"pass", pass}};
}

}  // namespace umbilic::cli

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hchain/chain_model.hpp"
#include "hchain/chamber.hpp"
#include "hchain/git_chars.hpp"
#include "hchain/moduli.hpp"
#include "hchain/sampling.hpp"
#include "hchain/stability.hpp"

namespace hchain {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
};

struct SelfcheckReport {
  std::uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool ok() const {
    for (const auto& s : suites)
      if (s.failed != 0) return false;
    return true;
  }
};

namespace detail {

class Tally {
 public:
  explicit Tally(std::string name) { r_.name = std::move(name); }
  void check(bool ok) { ok ? ++r_.passed : ++r_.failed; }
  SuiteResult result() const { return r_; }

 private:
  SuiteResult r_;
};

}  // namespace detail

// Randomised run of the structural identities. `rounds` scales every suite;
// the same seed always yields the same report.
inline SelfcheckReport run_selfcheck(std::uint64_t seed, std::size_t rounds = 50) {
  SelfcheckReport report;
  report.seed = seed;
  Sampler rng(seed);

  {
    detail::Tally det_suite("determinant"), vertex_suite("vertex");
    for (std::size_t k = 0; k < rounds; ++k) {
      const ChainType t = rng.chain_type(6, 5, -20, 20);
      const auto [elim, closed] = matrix_determinant_identity(t);
      det_suite.check(elim == closed);
      const StabilityCone cone = build_cone(t);
      bool on_all = true;
      for (std::size_t i = 0; i < cone.n(); ++i) on_all = on_all && cone.evaluate(i, cone.vertex()) == cone.constants()[i];
      vertex_suite.check(on_all && AlphaVector(solve(cone.coeff_matrix(), cone.constants())) == cone.vertex());
    }
    report.suites.push_back(det_suite.result());
    report.suites.push_back(vertex_suite.result());
  }

  {
    detail::Tally suite("geometry");
    for (std::size_t k = 0; k < rounds; ++k) {
      const StabilityCone cone = build_cone(rng.chain_type(5, 4, -10, 10));
      const AlphaVector a = rng.alpha_interior(cone), b = rng.alpha_interior(cone);
      suite.check(geometry_witness(cone, Witness::ray, a, a, rng.positive_rational(10)));
      suite.check(geometry_witness(cone, Witness::segment, a, b, rng.rational(0, 1, 8)));
      suite.check(classify(cone, interior_sample(cone, rng.positive_rational(10))).is_interior());
    }
    report.suites.push_back(suite.result());
  }

  {
    detail::Tally suite("stability_oracle");
    for (std::size_t k = 0; k < rounds; ++k) {
      const RankOneChain c = rng.rank_one_chain(6, -10, 10);
      const StabilityCone cone = build_cone(c.type());
      for (int j = 0; j < 20; ++j) {
        const AlphaVector a = rng.alpha_mixed(cone);
        const StabilityVerdict v = is_semistable(c, a);
        suite.check(is_stable_fast(c, cone, a) == v.stable);
        if (classify(cone, a).is_interior() && v.semistable) suite.check(v.stable);
      }
    }
    report.suites.push_back(suite.result());
  }

  {
    detail::Tally suite("wall_graduation");
    for (std::size_t k = 0; k < rounds; ++k) {
      const std::size_t n = static_cast<std::size_t>(rng.integer(1, 5));
      const RankOneChain c = RankOneChain::generic(rng.rank_one_with_drops(n, 0, 6).degrees());
      const StabilityCone cone = build_cone(c.type());
      const auto walls = rng.subset(n);
      const AlphaVector a = rng.alpha_in_cell(cone, walls);
      const GraduationResult g = graduation(c, a);
      bool ok = g.wall_set == walls && g.representative == c.with_zero_maps(walls);
      const Rational mu = slope(c, a);
      for (const auto& s : g.factor_slopes) ok = ok && s == mu;
      ok = ok && graduation(g.representative, a).representative == g.representative;
      suite.check(ok);
    }
    report.suites.push_back(suite.result());
  }

  {
    detail::Tally suite("barycenter");
    for (std::size_t k = 0; k < rounds; ++k) {
      const ChainType t = rng.chain_type(5, 4, -10, 10);
      std::vector<std::int64_t> r1(t.length()), d1(t.length()), r2(t.length()), d2(t.length());
      for (std::size_t i = 0; i < t.length(); ++i) {
        r1[i] = rng.integer(0, t.rank(i));
        r2[i] = t.rank(i) - r1[i];
        d1[i] = r1[i] == 0 ? 0 : (r2[i] == 0 ? t.degree(i) : rng.integer(-10, 10));
        d2[i] = t.degree(i) - d1[i];
      }
      const AlphaVector a = rng.alpha_box(t.n(), -10, 10);
      suite.check(barycenter_check(SubchainType(r1, d1), SubchainType(r2, d2), a) == slope(t, a));
    }
    report.suites.push_back(suite.result());
  }

  {
    detail::Tally suite("moduli");
    for (std::size_t k = 0; k < rounds; ++k) {
      const CurveContext ctx(rng.integer(0, 4));
      const std::int64_t g = ctx.genus();
      const ChainType t = rng.rank_one_with_drops(static_cast<std::size_t>(rng.integer(1, 5)),
                                                  std::max<std::int64_t>(0, 2 * g - 1), 2 * g + 6);
      const AlphaVector a = rng.alpha_interior(build_cone(t));
      const ModuliDescriptor m = describe_moduli(t, ctx, a);
      const std::int64_t expected_dim = g + t.degree(0) - t.degree(t.n());
      bool ok = m.kind == ModuliKind::fiber_product && m.dimension == expected_dim &&
                dimension_formula(t, ctx) == expected_dim && enumerate_strata(t, ctx).size() == 1;
      if (g >= 1) ok = ok && m.euler_characteristic == 0;
      suite.check(ok);
    }
    report.suites.push_back(suite.result());
  }

  {
    detail::Tally suite("git_correspondence");
    for (std::size_t k = 0; k < rounds; ++k) {
      const CurveContext ctx(rng.integer(0, 3));
      const std::int64_t g = ctx.genus();
      const std::size_t n = static_cast<std::size_t>(rng.integer(1, 4));
      const ChainType t = rng.rank_one_with_drops(n, std::max<std::int64_t>(0, 2 * g - 1), 2 * g + 5);
      const StabilityCone cone = build_cone(t);
      const auto walls = rng.subset(n);
      const auto other = rng.subset(n);
      const CharacterTuple chars = rng.characters_in(n, walls);
      suite.check(correspondence_check(t, ctx, chars, rng.alpha_in_cell(cone, walls)));
      if (other != walls) suite.check(!correspondence_check(t, ctx, chars, rng.alpha_in_cell(cone, other)));
    }
    report.suites.push_back(suite.result());
  }

  return report;
}

}  // namespace hchain

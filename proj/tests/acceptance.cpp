// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic
// throughout, each criterion timed against its budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "hchain/hchain.hpp"
#include "hchain/sampling.hpp"
#include "oracles.hpp"

using namespace hchain;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

int failures = 0;

void run(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.ok = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_s;
  const bool pass = out.ok && in_time;
  if (!pass) ++failures;
  std::printf("[%s] %2d %-34s %7.3fs / %5.1fs  %s\n", pass ? "PASS" : "FAIL", id, name, secs, budget_s,
              !out.ok ? out.detail.c_str() : !in_time ? "over time budget" : out.detail.c_str());
  std::fflush(stdout);
}

std::string show(const ChainType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.length(); ++i) s += (i ? "," : "") + std::to_string(t.rank(i));
  s += ";";
  for (std::size_t i = 0; i < t.length(); ++i) s += (i ? "," : "") + std::to_string(t.degree(i));
  return s + ")";
}

std::vector<ChainType> random_types(std::uint64_t seed, int count, std::size_t n_max, std::int64_t rank_max) {
  Sampler rng(seed);
  std::vector<ChainType> out;
  for (int k = 0; k < count; ++k) out.push_back(rng.chain_type(n_max, rank_max, -20, 20));
  return out;
}

// Non-increasing rank-one degrees with every drop > 2g - 2.
ChainType large_degree_type(Sampler& rng, std::int64_t g, std::size_t n) {
  return rng.rank_one_with_drops(n, std::max<std::int64_t>(0, 2 * g - 1), 2 * g + 8, -10, 10);
}

std::size_t random_n(Sampler& rng, std::size_t n_max) {
  return static_cast<std::size_t>(rng.integer(1, static_cast<std::int64_t>(n_max)));
}

}  // namespace

int main() {
  const auto types = random_types(1001, 500, 6, 5);

  run(1, "determinant identity", 5.0, [&] {
    Outcome o;
    for (const auto& t : types) {
      const auto [elim, closed] = matrix_determinant_identity(t);
      o.require(elim == closed, "mismatch at " + show(t));
    }
    o.detail = "500 types";
    return o;
  });

  run(2, "vertex identity", 5.0, [&] {
    Outcome o;
    for (const auto& t : types) {
      const StabilityCone c = build_cone(t);
      for (std::size_t i = 0; i < c.n(); ++i)
        o.require(c.evaluate(i, c.vertex()) == c.constants()[i], "f_i(v0) != c_i at " + show(t));
      o.require(solve(c.coeff_matrix(), c.constants()) == c.vertex().entries(), "solve != v0 at " + show(t));
    }
    o.detail = "500 types";
    return o;
  });

  run(3, "cone geometry witnesses", 10.0, [] {
    Outcome o;
    Sampler rng(1003);
    std::size_t count = 0;
    for (int k = 0; k < 20; ++k) {
      const StabilityCone c = build_cone(rng.chain_type(6, 5, -20, 20));
      for (int j = 0; j < 1000; ++j) {
        const AlphaVector a = rng.alpha_interior(c), b = rng.alpha_interior(c);
        o.require(geometry_witness(c, Witness::ray, a, b, rng.positive_rational(30, 12)), "ray left H");
        o.require(geometry_witness(c, Witness::segment, a, b, rng.rational(0, 1, 12)), "segment left H");
        o.require(classify(c, interior_sample(c, rng.positive_rational(30, 12))).is_interior(),
                  "interior_sample not interior");
        ++count;
      }
    }
    o.detail = std::to_string(count) + " (alpha, beta, t) witnesses";
    return o;
  });

  std::size_t interior_semistable = 0, interior_total = 0, prop33_failures = 0;
  run(4, "fast stability == brute force", 60.0, [&] {
    Outcome o;
    Sampler rng(1004);
    std::size_t stable = 0, total = 0;
    for (int k = 0; k < 200; ++k) {
      // Every other chain gets sorted degrees so the all-nonzero case is well represented.
      const std::size_t n = random_n(rng, 8);
      std::vector<std::int64_t> d(n + 1);
      for (auto& x : d) x = rng.integer(-10, 10);
      if (k % 2 == 0) std::sort(d.rbegin(), d.rend());
      std::vector<bool> phi(n);
      for (std::size_t i = 1; i <= n; ++i) phi[i - 1] = d[i - 1] >= d[i] && rng.coin(k % 2 == 0 ? 0.85 : 0.5);
      const RankOneChain c(d, phi);
      const StabilityCone cone = build_cone(c.type());
      for (int j = 0; j < 1000; ++j) {
        const AlphaVector a = rng.alpha_mixed(cone);
        const StabilityVerdict v = is_semistable(c, a);
        const bool fast = is_stable_fast(c, cone, a);
        o.require(fast == v.stable, "disagreement at " + show(c.type()));
        stable += v.stable;
        ++total;
        if (classify(cone, a).is_interior()) {
          ++interior_total;
          if (v.semistable) {
            ++interior_semistable;
            if (!v.stable) ++prop33_failures;
          }
        }
      }
      // Spot-check the library oracle against the naive set-based one.
      for (int j = 0; j < 10; ++j) {
        const AlphaVector a = rng.alpha_mixed(cone);
        const auto naive = oracle::verdict(c, a.entries());
        const auto v = is_semistable(c, a);
        o.require(naive.stable == v.stable && naive.semistable == v.semistable,
                  "library oracle differs from naive oracle at " + show(c.type()));
      }
    }
    o.detail = std::to_string(total) + " pairs, " + std::to_string(stable) + " stable";
    return o;
  });

  run(5, "semistable => stable on H", 60.0, [&] {
    Outcome o;
    o.require(prop33_failures == 0, std::to_string(prop33_failures) + " counterexamples");
    o.require(interior_semistable > 0, "no semistable interior samples");
    o.detail = std::to_string(interior_semistable) + " semistable of " + std::to_string(interior_total) +
               " interior samples (from run 4)";
    return o;
  });

  run(6, "wall S-equivalence", 10.0, [] {
    Outcome o;
    Sampler rng(1006);
    std::size_t checks = 0;
    for (std::size_t n = 1; n <= 5; ++n)
      for (int k = 0; k < 8; ++k) {
        const ChainType t = rng.rank_one_with_drops(n, 0, 8, -10, 10);
        const RankOneChain c = RankOneChain::generic(t.degrees());
        const StabilityCone cone = build_cone(t);
        for (const auto& walls : all_subsets(n))
          for (int j = 0; j < 5; ++j) {
            const AlphaVector a = rng.alpha_in_cell(cone, walls);
            const GraduationResult g = graduation(c, a);
            const Rational mu = slope(t, a);
            o.require(g.wall_set == walls, "wall set mismatch at " + show(t));
            for (std::size_t i = 1; i <= n; ++i)
              o.require(g.representative.phi(i) == !std::binary_search(walls.begin(), walls.end(), i),
                        "psi not zeroed exactly on I at " + show(t));
            for (const auto& s : g.factor_slopes) o.require(s == mu, "factor slope differs from mu at " + show(t));
            o.require(graduation(g.representative, a).representative == g.representative,
                      "graduation not idempotent at " + show(t));
            ++checks;
          }
        const GraduationResult at_vertex = graduation(c, cone.vertex());
        for (std::size_t i = 1; i <= n; ++i) o.require(!at_vertex.representative.phi(i), "psi != 0 at v0");
        o.require(at_vertex.factors.size() == n + 1, "expected n+1 factors at v0");
      }
    o.detail = std::to_string(checks) + " wall points";
    return o;
  });

  run(7, "dimension g + d0 - dn", 5.0, [] {
    Outcome o;
    Sampler rng(1007);
    for (int k = 0; k < 200; ++k) {
      const std::int64_t g = k % 5;
      const ChainType t = large_degree_type(rng, g, random_n(rng, 6));
      const CurveContext ctx(g);
      const ModuliDescriptor m = describe_moduli(t, ctx, rng.alpha_interior(build_cone(t)));
      const std::int64_t expected = g + t.degree(0) - t.degree(t.n());
      o.require(m.dimension == expected, "dimension mismatch at " + show(t));
      std::int64_t sum = m.base.dimension;
      for (const auto& f : m.factors) sum += f.fiber_dim.value_or(0);
      o.require(sum == expected, "base + fibers mismatch at " + show(t));
      o.require(dimension_formula(t, ctx) == expected, "general formula mismatch at " + show(t));
    }
    o.detail = "200 types, g in 0..4";
    return o;
  });

  run(8, "euler characteristic", 5.0, [] {
    Outcome o;
    Sampler rng(1008);
    for (int k = 0; k < 200; ++k) {
      const std::int64_t g = 1 + k % 4;
      const ChainType t = rng.rank_one_with_drops(random_n(rng, 6), 0, 2 * g + 6, -10, 10);
      const ModuliDescriptor m = describe_moduli(t, CurveContext(g), rng.alpha_interior(build_cone(t)));
      o.require(m.kind != ModuliKind::empty && m.euler_characteristic == 0, "chi != 0 at " + show(t));
    }
    for (int k = 0; k < 200; ++k) {
      const ChainType t = rng.rank_one_with_drops(random_n(rng, 6), 0, 6, -10, 10);
      const ModuliDescriptor m = describe_moduli(t, CurveContext(0), rng.alpha_interior(build_cone(t)));
      std::int64_t expected = 1;
      for (auto drop : t.degree_drops()) expected *= drop + 1;
      o.require(m.euler_characteristic == expected, "g=0 product mismatch at " + show(t));
      o.require(std::find(m.notes.begin(), m.notes.end(), kGenusZeroEulerNote) != m.notes.end(),
                "g=0 note missing at " + show(t));
    }
    o.detail = "200 types g in 1..4, 200 types g = 0";
    return o;
  });

  run(9, "regime agreement", 5.0, [] {
    Outcome o;
    Sampler rng(1009);
    for (int k = 0; k < 500; ++k) {
      const std::int64_t g = k % 5;
      const ChainType t = large_degree_type(rng, g, random_n(rng, 6));
      const CurveContext ctx(g);
      const auto strata = enumerate_strata(t, ctx);
      o.require(strata.size() == 1, "expected one stratum at " + show(t));
      if (strata.size() != 1) continue;
      for (std::size_t i = 0; i < t.n(); ++i)
        o.require(strata[0].section_indices[i] == t.degree_drops()[i] - g, "r_i != d' - g at " + show(t));
      const ModuliDescriptor m = describe_moduli(t, ctx, rng.alpha_interior(build_cone(t)));
      o.require(m.kind == ModuliKind::fiber_product && m.strata == strata, "no collapse at " + show(t));
      o.require(stratum_dimension(strata[0], ctx, {}) == m.dimension, "stratum dimension differs at " + show(t));
    }
    o.detail = "500 large-degree types";
    return o;
  });

  run(10, "character correspondence", 30.0, [] {
    Outcome o;
    Sampler rng(1010);
    std::size_t matched = 0, crossed = 0;
    for (std::size_t n = 1; n <= 5; ++n) {
      const std::int64_t g = rng.integer(0, 4);
      const ChainType t = large_degree_type(rng, g, n);
      const CurveContext ctx(g);
      const StabilityCone cone = build_cone(t);
      const auto subsets = all_subsets(n);
      for (const auto& walls : subsets) {
        std::vector<CharacterTuple> ks;
        std::vector<AlphaVector> as;
        for (int j = 0; j < 50; ++j) {
          ks.push_back(rng.characters_in(n, walls));
          as.push_back(rng.alpha_in_cell(cone, walls));
        }
        for (const auto& k : ks)
          for (const auto& a : as) {
            o.require(correspondence_check(t, ctx, k, a), "false on matching cell at " + show(t));
            ++matched;
          }
        for (const auto& other : subsets) {
          if (other == walls) continue;
          for (int j = 0; j < 3; ++j) {
            o.require(!correspondence_check(t, ctx, ks[static_cast<std::size_t>(j)], rng.alpha_in_cell(cone, other)),
                      "true on mismatched cells at " + show(t));
            ++crossed;
          }
        }
      }
    }
    o.detail = std::to_string(matched) + " matching, " + std::to_string(crossed) + " mismatched pairs";
    return o;
  });

  run(11, "barycenter", 5.0, [] {
    Outcome o;
    Sampler rng(1011);
    for (int k = 0; k < 1000; ++k) {
      const ChainType t = rng.chain_type(6, 5, -20, 20);
      std::vector<std::int64_t> r1(t.length()), d1(t.length()), r2(t.length()), d2(t.length());
      for (std::size_t i = 0; i < t.length(); ++i) {
        r1[i] = rng.integer(0, t.rank(i));
        r2[i] = t.rank(i) - r1[i];
        d1[i] = r1[i] == 0 ? 0 : r2[i] == 0 ? t.degree(i) : rng.integer(-20, 20);
        d2[i] = t.degree(i) - d1[i];
      }
      const AlphaVector a = rng.alpha_box(t.n(), -10, 10);
      const Rational b = barycenter_check(SubchainType(r1, d1), SubchainType(r2, d2), a);
      o.require(b == slope(t, a) && b == oracle::slope(t.ranks(), t.degrees(), a.entries()),
                "barycenter differs at " + show(t));
    }
    o.detail = "1000 decompositions";
    return o;
  });

  std::printf("%s: %d criteria failed\n", failures == 0 ? "OK" : "FAILED", failures);
  return failures == 0 ? 0 : 1;
}

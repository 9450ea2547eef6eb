#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hchain/chain_model.hpp"
#include "hchain/chamber.hpp"
#include "hchain/exact_linalg.hpp"
#include "hchain/git_chars.hpp"

namespace hchain {

// Deterministic random generators for sweeps and property checks.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  bool coin(double p_true = 0.5) { return std::bernoulli_distribution(p_true)(rng_); }

  // Uniform-ish rational in [lo, hi] with denominator <= max_den.
  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den = 6) {
    const std::int64_t den = integer(1, max_den);
    return hchain::rational(integer(lo * den, hi * den), den);
  }

  // In (0, hi].
  Rational positive_rational(std::int64_t hi, std::int64_t max_den = 6) {
    const std::int64_t den = integer(1, max_den);
    return hchain::rational(integer(1, hi * den), den);
  }

  ChainType chain_type(std::size_t n_max, std::int64_t rank_max, std::int64_t deg_lo, std::int64_t deg_hi) {
    const auto n = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(n_max)));
    std::vector<std::int64_t> r(n + 1), d(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
      r[i] = integer(1, rank_max);
      d[i] = integer(deg_lo, deg_hi);
    }
    return ChainType(std::move(r), std::move(d));
  }

  // Rank-one type with d_{i-1} - d_i drawn from [drop_lo, drop_hi].
  ChainType rank_one_with_drops(std::size_t n, std::int64_t drop_lo, std::int64_t drop_hi,
                                std::int64_t start_lo = -5, std::int64_t start_hi = 5) {
    std::vector<std::int64_t> d(n + 1);
    d[0] = integer(start_lo, start_hi);
    for (std::size_t i = 1; i <= n; ++i) d[i] = d[i - 1] - integer(drop_lo, drop_hi);
    return ChainType::rank_one(std::move(d));
  }

  // Random degrees; each admissible map is nonzero with probability p_nonzero.
  RankOneChain rank_one_chain(std::size_t n_max, std::int64_t deg_lo, std::int64_t deg_hi, double p_nonzero = 0.6) {
    const auto n = static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(n_max)));
    std::vector<std::int64_t> d(n + 1);
    for (auto& x : d) x = integer(deg_lo, deg_hi);
    std::vector<bool> phi(n);
    for (std::size_t i = 1; i <= n; ++i) phi[i - 1] = d[i - 1] >= d[i] && coin(p_nonzero);
    return RankOneChain(std::move(d), std::move(phi));
  }

  // Subset of {1..n}, 1-based and sorted.
  std::vector<std::size_t> subset(std::size_t n) {
    std::vector<std::size_t> s;
    for (std::size_t i = 1; i <= n; ++i)
      if (coin()) s.push_back(i);
    return s;
  }

  // Positive slack except zero on `zeros` (1-based).
  RationalVector slack(std::size_t n, const std::vector<std::size_t>& zeros) {
    RationalVector s(n);
    for (std::size_t i = 0; i < n; ++i)
      s[i] = std::find(zeros.begin(), zeros.end(), i + 1) != zeros.end() ? Rational(0) : positive_rational(20);
    return s;
  }

  // A point of C_I (C_empty = H): the alpha with c - f(alpha) = slack. Same
  // result as point_with_slack, with the inverse cached across calls.
  AlphaVector alpha_in_cell(const StabilityCone& cone, const std::vector<std::size_t>& walls) {
    if (!cached_ || cached_->first != cone.type()) cached_.emplace(cone.type(), inverse(cone.coeff_matrix()));
    const RationalVector s = slack(cone.n(), walls);
    RationalVector rhs(cone.n());
    for (std::size_t i = 0; i < cone.n(); ++i) rhs[i] = cone.constants()[i] - s[i];
    return AlphaVector(cached_->second * rhs);
  }

  AlphaVector alpha_interior(const StabilityCone& cone) { return alpha_in_cell(cone, {}); }

  AlphaVector alpha_box(std::size_t n, std::int64_t lo, std::int64_t hi) {
    RationalVector v(n);
    for (auto& x : v) x = rational(lo, hi);
    return AlphaVector(std::move(v));
  }

  // A third each: interior, on a random wall set, anywhere in a box around v0.
  AlphaVector alpha_mixed(const StabilityCone& cone) {
    switch (integer(0, 2)) {
      case 0: return alpha_interior(cone);
      case 1: {
        auto walls = subset(cone.n());
        if (walls.empty()) walls.push_back(static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(cone.n()))));
        return alpha_in_cell(cone, walls);
      }
      default: {
        RationalVector v = cone.vertex().entries();
        for (auto& x : v) x += rational(-15, 15);
        return AlphaVector(std::move(v));
      }
    }
  }

  // k with zeros exactly on I and positive entries elsewhere.
  CharacterTuple characters_in(std::size_t n, const std::vector<std::size_t>& zeros) {
    std::vector<std::int64_t> k(n);
    for (std::size_t i = 0; i < n; ++i)
      k[i] = std::find(zeros.begin(), zeros.end(), i + 1) != zeros.end() ? 0 : integer(1, 50);
    return CharacterTuple(std::move(k));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  std::optional<std::pair<ChainType, RationalMatrix>> cached_;
};

// Every subset of {1..n}, 1-based, in bitmask order.
inline std::vector<std::vector<std::size_t>> all_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) s.push_back(i + 1);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace hchain

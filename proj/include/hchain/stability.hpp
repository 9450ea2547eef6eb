#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "hchain/chain_model.hpp"
#include "hchain/chamber.hpp"
#include "hchain/errors.hpp"
#include "hchain/exact_linalg.hpp"

namespace hchain {

struct StabilityVerdict {
  bool stable = false;
  bool semistable = false;
  // Selector of largest slope among those exceeding mu_alpha(C) (ties: smallest
  // bitmask). Present iff not semistable.
  std::optional<SubchainSelector> violating;
  // Selectors with mu_alpha(C') == mu_alpha(C), ordered by bitmask.
  std::vector<SubchainSelector> tight;
};

// Graded object of a semistable chain: the representative with psi_j = 0 for
// j in the wall set, plus the Jordan-Hoelder factors of the standard filtration.
struct GraduationResult {
  RankOneChain representative;
  std::vector<SubchainType> factors;
  std::vector<Rational> factor_slopes;
  std::vector<std::size_t> wall_set;
};

// Exhaustive check over every closed selector. This is the oracle the fast
// path is tested against, so it never looks at the cone.
inline StabilityVerdict is_semistable(const RankOneChain& c, const AlphaVector& alpha) {
  detail::require_alpha_length(c.n(), alpha);
  const std::size_t len = c.n() + 1;
  if (len > kMaxEnumeratedLength) throw UnsupportedError("semistability check limited to n < 24");

  // Scale alpha to integers: slope(S) = (L*D_S + A_S) / (L*|S|).
  Integer scale = 1;
  for (const auto& a : alpha.entries()) scale = boost::multiprecision::lcm(scale, denominator_of(a));
  std::vector<Integer> weight(len);  // L*d_i + L*alpha_i
  for (std::size_t i = 0; i < len; ++i) {
    weight[i] = scale * c.degrees()[i];
    if (i >= 1) weight[i] += numerator_of(alpha.weight(i)) * (scale / denominator_of(alpha.weight(i)));
  }
  Integer total = 0;
  for (const auto& w : weight) total += w;

  const std::uint64_t full = (std::uint64_t{1} << len) - 1;
  const std::uint64_t map_bits = detail::nonzero_map_bits(c);

  StabilityVerdict v;
  std::optional<std::uint64_t> worst_mask;
  Integer worst_num = 0;
  std::size_t worst_size = 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    if (!detail::mask_is_closed(mask, map_bits)) continue;
    Integer num = 0;
    for (std::size_t i = 0; i < len; ++i)
      if (mask >> i & 1u) num += weight[i];
    const std::size_t size = static_cast<std::size_t>(std::popcount(mask));
    const Integer lhs = num * static_cast<std::int64_t>(len);
    const Integer rhs = total * static_cast<std::int64_t>(size);
    if (lhs == rhs) {
      v.tight.push_back(SubchainSelector::from_mask(mask));
    } else if (lhs > rhs) {
      if (!worst_mask || num * static_cast<std::int64_t>(worst_size) >
                             worst_num * static_cast<std::int64_t>(size)) {
        worst_mask = mask;
        worst_num = num;
        worst_size = size;
      }
    }
  }
  v.semistable = !worst_mask.has_value();
  v.stable = v.semistable && v.tight.empty();
  if (worst_mask) v.violating = SubchainSelector::from_mask(*worst_mask);
  return v;
}

// Stable iff every map is nonzero and alpha lies in the open cone H.
inline bool is_stable_fast(const RankOneChain& c, const StabilityCone& cone, const AlphaVector& alpha) {
  detail::require_alpha_length(c.n(), alpha);
  if (cone.type() != c.type()) throw DimensionError("is_stable_fast: cone built for a different type");
  return c.all_maps_nonzero() && classify(cone, alpha).is_interior();
}

inline bool is_stable_fast(const RankOneChain& c, const AlphaVector& alpha) {
  return is_stable_fast(c, build_cone(c.type()), alpha);
}

inline GraduationResult graduation(const RankOneChain& c, const AlphaVector& alpha) {
  const StabilityCone cone = build_cone(c.type());
  const ChamberClass where = classify(cone, alpha);
  if (where.is_outside()) throw DomainError("graduation: alpha lies outside the closure of H");
  if (!is_semistable(c, alpha).semistable) throw PreconditionError("graduation: chain is not alpha-semistable");

  const auto& walls = where.wall_set();
  GraduationResult g{c.with_zero_maps(walls), {}, {}, walls};

  // Blocks [start, i-1] for i in I, then [i_m, n]: successive quotients of
  // 0 c C_{i_1 - 1} c ... c C_{i_m - 1} c C.
  std::size_t start = 0;
  auto emit = [&](std::size_t stop) {
    std::vector<std::int64_t> r(c.n() + 1, 0), d(c.n() + 1, 0);
    for (std::size_t k = start; k <= stop; ++k) {
      r[k] = 1;
      d[k] = c.degrees()[k];
    }
    g.factors.emplace_back(std::move(r), std::move(d));
    g.factor_slopes.push_back(slope(g.factors.back(), alpha));
    start = stop + 1;
  };
  for (auto i : walls) emit(i - 1);
  emit(c.n());
  return g;
}

// Some chain of the rank-one type is stable for alpha in H iff the degrees
// are non-increasing (a nonzero L_i -> L_{i-1} needs d_{i-1} >= d_i).
inline bool exists_stable(const ChainType& t) {
  if (!t.is_rank_one()) throw UnsupportedError("exists_stable: only rank-one types are supported");
  for (auto drop : t.degree_drops())
    if (drop < 0) return false;
  return true;
}

}  // namespace hchain

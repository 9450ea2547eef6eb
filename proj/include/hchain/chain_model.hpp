#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hchain/errors.hpp"
#include "hchain/exact_linalg.hpp"

namespace hchain {

// Type (r_0,...,r_n; d_0,...,d_n) of a holomorphic chain E_n -> ... -> E_0.
// Every rank is positive and n >= 1.
class ChainType {
 public:
  ChainType(std::vector<std::int64_t> ranks, std::vector<std::int64_t> degrees)
      : ranks_(std::move(ranks)), degrees_(std::move(degrees)) {
    if (ranks_.size() != degrees_.size())
      throw DimensionError("chain type: ranks and degrees differ in length");
    if (ranks_.size() < 2) throw DimensionError("chain type: need at least two terms (n >= 1)");
    for (auto r : ranks_)
      if (r < 1) throw DomainError("chain type: every rank must be >= 1");
  }

  static ChainType rank_one(std::vector<std::int64_t> degrees) {
    std::vector<std::int64_t> ranks(degrees.size(), 1);
    return ChainType(std::move(ranks), std::move(degrees));
  }

  std::size_t n() const { return ranks_.size() - 1; }
  std::size_t length() const { return ranks_.size(); }
  const std::vector<std::int64_t>& ranks() const { return ranks_; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  std::int64_t rank(std::size_t i) const { return ranks_.at(i); }
  std::int64_t degree(std::size_t i) const { return degrees_.at(i); }

  std::int64_t total_rank() const { return std::accumulate(ranks_.begin(), ranks_.end(), std::int64_t{0}); }
  std::int64_t total_degree() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
  }

  bool is_rank_one() const {
    return std::all_of(ranks_.begin(), ranks_.end(), [](auto r) { return r == 1; });
  }

  // d_{i-1} - d_i for i = 1..n, stored at [i-1]. Meaningful for rank one.
  std::vector<std::int64_t> degree_drops() const {
    std::vector<std::int64_t> drops(n());
    for (std::size_t i = 1; i <= n(); ++i) drops[i - 1] = degrees_[i - 1] - degrees_[i];
    return drops;
  }

  friend bool operator==(const ChainType&, const ChainType&) = default;

 private:
  std::vector<std::int64_t> ranks_;
  std::vector<std::int64_t> degrees_;
};

// Type of a subchain or quotient chain. Ranks may vanish (a zero slot carries
// degree 0), and the length may be shorter than the ambient chain when only
// the nonzero prefix is kept.
class SubchainType {
 public:
  SubchainType(std::vector<std::int64_t> ranks, std::vector<std::int64_t> degrees)
      : ranks_(std::move(ranks)), degrees_(std::move(degrees)) {
    if (ranks_.size() != degrees_.size())
      throw DimensionError("subchain type: ranks and degrees differ in length");
    if (ranks_.empty()) throw DimensionError("subchain type: empty");
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
      if (ranks_[i] < 0) throw DomainError("subchain type: negative rank");
      if (ranks_[i] == 0 && degrees_[i] != 0)
        throw DomainError("subchain type: a zero slot must have degree 0");
    }
  }

  SubchainType(const ChainType& t) : ranks_(t.ranks()), degrees_(t.degrees()) {}  // NOLINT

  static SubchainType zero(std::size_t length) {
    return SubchainType(std::vector<std::int64_t>(length, 0), std::vector<std::int64_t>(length, 0));
  }

  std::size_t length() const { return ranks_.size(); }
  const std::vector<std::int64_t>& ranks() const { return ranks_; }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }

  std::int64_t total_rank() const { return std::accumulate(ranks_.begin(), ranks_.end(), std::int64_t{0}); }
  std::int64_t total_degree() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), std::int64_t{0});
  }
  bool is_zero() const { return total_rank() == 0; }

  // Extends with zero slots up to `length` terms.
  SubchainType padded(std::size_t length) const {
    if (length < ranks_.size()) throw DimensionError("subchain type: cannot pad to a shorter length");
    auto r = ranks_;
    auto d = degrees_;
    r.resize(length, 0);
    d.resize(length, 0);
    return SubchainType(std::move(r), std::move(d));
  }

  friend SubchainType operator+(const SubchainType& a, const SubchainType& b) {
    if (a.length() != b.length()) throw DimensionError("subchain type: adding types of different length");
    auto r = a.ranks_;
    auto d = a.degrees_;
    for (std::size_t i = 0; i < r.size(); ++i) {
      r[i] += b.ranks_[i];
      d[i] += b.degrees_[i];
    }
    return SubchainType(std::move(r), std::move(d));
  }

  friend bool operator==(const SubchainType&, const SubchainType&) = default;

 private:
  std::vector<std::int64_t> ranks_;
  std::vector<std::int64_t> degrees_;
};

// Reduced stability parameter (alpha_1,...,alpha_n); alpha_0 is normalised to 0.
class AlphaVector {
 public:
  AlphaVector() = default;
  explicit AlphaVector(RationalVector entries) : entries_(std::move(entries)) {}
  AlphaVector(std::initializer_list<Rational> entries) : entries_(entries) {}

  std::size_t size() const { return entries_.size(); }
  const RationalVector& entries() const { return entries_; }

  // alpha_k for k = 0..n, with alpha_0 = 0.
  Rational weight(std::size_t k) const { return k == 0 ? Rational(0) : entries_.at(k - 1); }

  friend bool operator==(const AlphaVector&, const AlphaVector&) = default;

 private:
  RationalVector entries_;
};

// Chain of line bundles L_0 <- L_1 <- ... <- L_n recorded by degrees and by
// whether each phi_i is nonzero.
class RankOneChain {
 public:
  RankOneChain(std::vector<std::int64_t> degrees, std::vector<bool> phi_nonzero)
      : degrees_(std::move(degrees)), phi_nonzero_(std::move(phi_nonzero)) {
    if (degrees_.size() < 2) throw DimensionError("rank-one chain: need at least two line bundles");
    if (phi_nonzero_.size() + 1 != degrees_.size())
      throw DimensionError("rank-one chain: need exactly n map flags");
    for (std::size_t i = 1; i < degrees_.size(); ++i)
      if (phi_nonzero_[i - 1] && degrees_[i - 1] < degrees_[i])
        throw DomainError("rank-one chain: phi_" + std::to_string(i) +
                          " cannot be nonzero when deg L_" + std::to_string(i - 1) + " < deg L_" +
                          std::to_string(i));
  }

  // All maps nonzero.
  static RankOneChain generic(std::vector<std::int64_t> degrees) {
    std::vector<bool> flags(degrees.empty() ? 0 : degrees.size() - 1, true);
    return RankOneChain(std::move(degrees), std::move(flags));
  }

  std::size_t n() const { return phi_nonzero_.size(); }
  const std::vector<std::int64_t>& degrees() const { return degrees_; }
  const std::vector<bool>& phi_nonzero() const { return phi_nonzero_; }
  // 1-based, phi_i : L_i -> L_{i-1}.
  bool phi(std::size_t i) const { return phi_nonzero_.at(i - 1); }

  bool all_maps_nonzero() const {
    return std::all_of(phi_nonzero_.begin(), phi_nonzero_.end(), [](bool b) { return b; });
  }

  ChainType type() const { return ChainType::rank_one(degrees_); }

  // Copy with phi_i set to zero for each 1-based i in `indices`.
  RankOneChain with_zero_maps(const std::vector<std::size_t>& indices) const {
    auto flags = phi_nonzero_;
    for (auto i : indices) {
      if (i < 1 || i > n()) throw IndexError("with_zero_maps: map index out of range");
      flags[i - 1] = false;
    }
    return RankOneChain(degrees_, std::move(flags));
  }

  friend bool operator==(const RankOneChain&, const RankOneChain&) = default;

 private:
  std::vector<std::int64_t> degrees_;
  std::vector<bool> phi_nonzero_;
};

// Set of slots kept by a subchain of a rank-one chain. For line bundles a
// subbundle of L_i is 0 or L_i, so subchains made of subbundles are exactly
// the index sets closed under "i kept and phi_i != 0 => i-1 kept".
class SubchainSelector {
 public:
  SubchainSelector() = default;
  explicit SubchainSelector(std::vector<std::size_t> indices) : indices_(std::move(indices)) {
    std::sort(indices_.begin(), indices_.end());
    indices_.erase(std::unique(indices_.begin(), indices_.end()), indices_.end());
  }
  SubchainSelector(std::initializer_list<std::size_t> indices)
      : SubchainSelector(std::vector<std::size_t>(indices)) {}

  static SubchainSelector from_mask(std::uint64_t mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
      if (mask & 1u) idx.push_back(i);
    return SubchainSelector(std::move(idx));
  }

  // {0,...,i}
  static SubchainSelector prefix(std::size_t i) {
    std::vector<std::size_t> idx(i + 1);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return SubchainSelector(std::move(idx));
  }

  const std::vector<std::size_t>& indices() const { return indices_; }
  bool empty() const { return indices_.empty(); }
  std::size_t size() const { return indices_.size(); }
  bool contains(std::size_t i) const { return std::binary_search(indices_.begin(), indices_.end(), i); }

  std::uint64_t mask() const {
    std::uint64_t m = 0;
    for (auto i : indices_) m |= std::uint64_t{1} << i;
    return m;
  }

  bool is_closed_in(const RankOneChain& c) const {
    for (auto i : indices_) {
      if (i > c.n()) return false;
      if (i >= 1 && c.phi(i) && !contains(i - 1)) return false;
    }
    return true;
  }

  friend bool operator==(const SubchainSelector&, const SubchainSelector&) = default;
  friend bool operator<(const SubchainSelector& a, const SubchainSelector& b) { return a.mask() < b.mask(); }

 private:
  std::vector<std::size_t> indices_;
};

inline constexpr std::size_t kMaxEnumeratedLength = 24;

namespace detail {

inline void require_alpha_length(std::size_t needed, const AlphaVector& alpha) {
  if (alpha.size() != needed)
    throw DimensionError("alpha has length " + std::to_string(alpha.size()) + ", expected " +
                         std::to_string(needed));
}

// Bit i set iff phi_i != 0 (i >= 1).
inline std::uint64_t nonzero_map_bits(const RankOneChain& c) {
  std::uint64_t bits = 0;
  for (std::size_t i = 1; i <= c.n(); ++i)
    if (c.phi(i)) bits |= std::uint64_t{1} << i;
  return bits;
}

inline bool mask_is_closed(std::uint64_t mask, std::uint64_t map_bits) {
  return (((mask & map_bits) >> 1) & ~mask) == 0;
}

}  // namespace detail

// mu_alpha = (sum d_i + sum_{i>=1} alpha_i r_i) / sum r_i. A shorter (prefix)
// type only uses alpha_1..alpha_{length-1}.
inline Rational slope(const SubchainType& t, const AlphaVector& alpha) {
  if (alpha.size() + 1 < t.length())
    throw DimensionError("slope: alpha shorter than the type requires");
  if (t.is_zero()) throw DomainError("slope: the zero chain has no slope");
  Rational num = t.total_degree();
  for (std::size_t i = 1; i < t.length(); ++i) num += alpha.weight(i) * t.ranks()[i];
  return num / t.total_rank();
}

inline Rational slope(const ChainType& t, const AlphaVector& alpha) {
  detail::require_alpha_length(t.n(), alpha);
  return slope(SubchainType(t), alpha);
}

inline Rational slope(const RankOneChain& c, const AlphaVector& alpha) { return slope(c.type(), alpha); }

// (r_0,...,r_i; d_0,...,d_i): the nonzero part of C_i = (E_0,...,E_i,0,...,0).
inline SubchainType standard_subchain_type(const ChainType& t, std::size_t i) {
  if (i + 1 > t.n()) throw IndexError("standard subchain index must lie in 0..n-1");
  std::vector<std::int64_t> r(t.ranks().begin(), t.ranks().begin() + static_cast<std::ptrdiff_t>(i + 1));
  std::vector<std::int64_t> d(t.degrees().begin(), t.degrees().begin() + static_cast<std::ptrdiff_t>(i + 1));
  return SubchainType(std::move(r), std::move(d));
}

// Padded type of the subchain picked out by a selector.
inline SubchainType selector_type(const RankOneChain& c, const SubchainSelector& s) {
  std::vector<std::int64_t> r(c.n() + 1, 0);
  std::vector<std::int64_t> d(c.n() + 1, 0);
  for (auto i : s.indices()) {
    if (i > c.n()) throw IndexError("selector index out of range");
    r[i] = 1;
    d[i] = c.degrees()[i];
  }
  return SubchainType(std::move(r), std::move(d));
}

// Complementary quotient C / C' of a selector.
inline SubchainType quotient_type(const RankOneChain& c, const SubchainSelector& s) {
  std::vector<std::int64_t> r(c.n() + 1, 1);
  std::vector<std::int64_t> d = c.degrees();
  for (auto i : s.indices()) {
    if (i > c.n()) throw IndexError("selector index out of range");
    r[i] = 0;
    d[i] = 0;
  }
  return SubchainType(std::move(r), std::move(d));
}

// All proper nonzero closed selectors, ordered by bitmask. With every map
// nonzero this is exactly the n prefixes {0}, {0,1}, ..., {0,...,n-1}.
inline std::vector<SubchainSelector> subchain_selectors(const RankOneChain& c) {
  const std::size_t len = c.n() + 1;
  if (len > kMaxEnumeratedLength) throw UnsupportedError("subchain enumeration limited to n < 24");
  const std::uint64_t full = (std::uint64_t{1} << len) - 1;
  const std::uint64_t map_bits = detail::nonzero_map_bits(c);
  std::vector<SubchainSelector> out;
  for (std::uint64_t mask = 1; mask < full; ++mask)
    if (detail::mask_is_closed(mask, map_bits)) out.push_back(SubchainSelector::from_mask(mask));
  return out;
}

// (r' mu(C') + r'' mu(C'')) / (r' + r'') for an exact sequence 0 -> C' -> C -> C'' -> 0
// given by the padded types of C' and C''. Either side may be the zero type.
inline Rational barycenter_check(const SubchainType& t_sub, const SubchainType& t_quot, const AlphaVector& alpha) {
  if (t_sub.length() != t_quot.length()) throw DimensionError("barycenter: types differ in length");
  const ChainType total((t_sub + t_quot).ranks(), (t_sub + t_quot).degrees());
  detail::require_alpha_length(total.n(), alpha);
  Rational weighted = 0;
  for (const auto* part : {&t_sub, &t_quot})
    if (!part->is_zero()) weighted += part->total_rank() * slope(*part, alpha);
  return weighted / (t_sub.total_rank() + t_quot.total_rank());
}

}  // namespace hchain

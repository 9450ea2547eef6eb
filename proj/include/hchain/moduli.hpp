#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hchain/chain_model.hpp"
#include "hchain/chamber.hpp"
#include "hchain/errors.hpp"
#include "hchain/stability.hpp"

namespace hchain {

class CurveContext {
 public:
  explicit CurveContext(std::int64_t genus) : genus_(genus) {
    if (genus < 0) throw DomainError("genus must be >= 0");
  }
  std::int64_t genus() const { return genus_; }

 private:
  std::int64_t genus_;
};

// One piece Z_{r_1,...,r_n} of the Brill-Noether stratification: h^0 of
// L_{i-1} L_i^{-1} equals r_i + 1, so PE_{r_i} has fiber P^{r_i}.
struct Stratum {
  std::vector<std::int64_t> section_indices;
  std::vector<std::int64_t> fiber_dims;
  // rho = g - (r+1)(g - d' + r); negative means W^r_{d'} is empty on a general curve.
  std::vector<std::int64_t> bn_numbers;
  std::vector<bool> bn_number_ok;

  bool all_bn_ok() const {
    return std::all_of(bn_number_ok.begin(), bn_number_ok.end(), [](bool b) { return b; });
  }

  friend bool operator==(const Stratum&, const Stratum&) = default;
};

enum class ModuliKind { empty, point, fiber_product, disjoint_union };

inline const char* kind_name(ModuliKind k) {
  switch (k) {
    case ModuliKind::empty: return "empty";
    case ModuliKind::point: return "point";
    case ModuliKind::fiber_product: return "fiber_product";
    case ModuliKind::disjoint_union: return "disjoint_union";
  }
  return "?";
}

// Z = Pic^{d_0}(X) x ... x Pic^{d_n}(X), of dimension (n+1) g.
struct PicardBase {
  std::int64_t genus = 0;
  std::vector<std::int64_t> degrees;
  std::int64_t dimension = 0;

  friend bool operator==(const PicardBase&, const PicardBase&) = default;
};

struct FactorRecord {
  std::size_t index = 0;  // 1-based
  bool skipped = false;   // PE_i collapsed to the base
  // Fiber dimension of PE_i over Z; only set for unskipped factors of a fiber product.
  std::optional<std::int64_t> fiber_dim;

  friend bool operator==(const FactorRecord&, const FactorRecord&) = default;
};

struct ModuliDescriptor {
  ModuliKind kind = ModuliKind::empty;
  PicardBase base;
  std::vector<FactorRecord> factors;
  std::vector<Stratum> strata;
  std::optional<std::int64_t> dimension;
  std::int64_t euler_characteristic = 0;
  std::vector<std::string> notes;

  std::vector<std::size_t> skipped_indices() const {
    std::vector<std::size_t> out;
    for (const auto& f : factors)
      if (f.skipped) out.push_back(f.index);
    return out;
  }

  // Equality of everything but the notes.
  bool same_structure(const ModuliDescriptor& o) const {
    return kind == o.kind && base == o.base && factors == o.factors && strata == o.strata &&
           dimension == o.dimension && euler_characteristic == o.euler_characteristic;
  }
};

inline constexpr const char* kGenusZeroEulerNote =
    "genus 0: the Picard base is a point, so the Euler characteristic is the product of "
    "the projective fiber Euler characteristics rather than 0";

inline PicardBase picard_base(const ChainType& t, const CurveContext& ctx) {
  return {ctx.genus(), t.degrees(), static_cast<std::int64_t>(t.length()) * ctx.genus()};
}

inline ModuliDescriptor empty_descriptor(const ChainType& t, const CurveContext& ctx) {
  ModuliDescriptor m;
  m.kind = ModuliKind::empty;
  m.base = picard_base(t, ctx);
  m.euler_characteristic = 0;
  return m;
}

inline ModuliDescriptor point_descriptor(const ChainType& t, const CurveContext& ctx) {
  ModuliDescriptor m;
  m.kind = ModuliKind::point;
  m.base = picard_base(t, ctx);
  for (std::size_t i = 1; i <= t.n(); ++i) m.factors.push_back({i, true, std::nullopt});
  m.dimension = 0;
  m.euler_characteristic = 1;
  return m;
}

namespace detail {

inline void require_rank_one(const ChainType& t, const char* what) {
  if (!t.is_rank_one()) throw UnsupportedError(std::string(what) + ": only rank-one types are supported");
}

inline std::int64_t brill_noether_number(std::int64_t g, std::int64_t degree, std::int64_t r) {
  return g - (r + 1) * (g - degree + r);
}

// Possible r = h^0 - 1 >= 0 for a line bundle of degree d' >= 0 on a genus g curve.
inline std::vector<std::int64_t> section_index_range(std::int64_t g, std::int64_t drop) {
  if (drop > 2 * g - 2) return {drop - g};  // Riemann-Roch, nonspecial
  if (drop == 0) return {0};                // only O has a section
  std::vector<std::int64_t> rs;
  for (std::int64_t r = std::max<std::int64_t>(0, drop - g); r <= drop / 2; ++r) rs.push_back(r);  // Clifford
  return rs;
}

}  // namespace detail

// (g-1)(sum r_i^2 - sum r_i r_{i-1}) + sum (r_i d_{i-1} - r_{i-1} d_i) + 1, any ranks.
inline std::int64_t dimension_formula(const ChainType& t, const CurveContext& ctx) {
  const auto& r = t.ranks();
  const auto& d = t.degrees();
  std::int64_t quadratic = 0;
  std::int64_t linear = 0;
  for (std::size_t i = 0; i < t.length(); ++i) quadratic += r[i] * r[i];
  for (std::size_t i = 1; i < t.length(); ++i) {
    quadratic -= r[i] * r[i - 1];
    linear += r[i] * d[i - 1] - r[i - 1] * d[i];
  }
  return (ctx.genus() - 1) * quadratic + linear + 1;
}

// All d_{i-1} - d_i > 2g - 2 and >= 0: each E_i is a vector bundle of rank d' - g + 1 over Z.
inline bool large_degree_regime(const ChainType& t, const CurveContext& ctx) {
  for (auto drop : t.degree_drops())
    if (drop <= 2 * ctx.genus() - 2 || drop < 0) return false;
  return true;
}

// Candidate strata (r_1,...,r_n), lexicographic. Empty when some degree drop is negative.
inline std::vector<Stratum> enumerate_strata(const ChainType& t, const CurveContext& ctx) {
  detail::require_rank_one(t, "enumerate_strata");
  const auto drops = t.degree_drops();
  const std::int64_t g = ctx.genus();
  std::vector<std::vector<std::int64_t>> choices;
  for (auto drop : drops) {
    if (drop < 0) return {};
    choices.push_back(detail::section_index_range(g, drop));
  }

  std::vector<Stratum> out;
  std::vector<std::size_t> pos(drops.size(), 0);
  while (true) {
    Stratum s;
    for (std::size_t i = 0; i < drops.size(); ++i) {
      const std::int64_t r = choices[i][pos[i]];
      const std::int64_t rho = detail::brill_noether_number(g, drops[i], r);
      s.section_indices.push_back(r);
      s.fiber_dims.push_back(r);
      s.bn_numbers.push_back(rho);
      s.bn_number_ok.push_back(rho >= 0);
    }
    out.push_back(std::move(s));

    std::size_t k = drops.size();
    while (k > 0) {
      --k;
      if (++pos[k] < choices[k].size()) break;
      pos[k] = 0;
      if (k == 0) return out;
    }
  }
}

// Dimension on a general curve of the piece over Z_{r_1..r_n} with the given
// factors collapsed: dim Pic^{d_n} + sum dim U^{r_i} + sum_{i not skipped} r_i,
// using dim U^{r}_{d'} = rho. Undefined when some rho < 0.
inline std::optional<std::int64_t> stratum_dimension(const Stratum& s, const CurveContext& ctx,
                                                     const std::vector<std::size_t>& skipped) {
  if (!s.all_bn_ok()) return std::nullopt;
  std::int64_t dim = ctx.genus();
  for (std::size_t i = 0; i < s.section_indices.size(); ++i) {
    dim += s.bn_numbers[i];
    if (std::find(skipped.begin(), skipped.end(), i + 1) == skipped.end()) dim += s.fiber_dims[i];
  }
  return dim;
}

// Moduli of S-equivalence classes of alpha-semistable chains of a rank-one type
// (stable moduli when alpha is in H).
inline ModuliDescriptor describe_moduli(const StabilityCone& cone, const CurveContext& ctx, const AlphaVector& alpha) {
  const ChainType& t = cone.type();
  detail::require_rank_one(t, "describe_moduli");
  const ChamberClass where = classify(cone, alpha);
  if (where.is_outside()) return empty_descriptor(t, ctx);

  const std::int64_t g = ctx.genus();
  if (where.wall_set().size() == t.n()) {
    ModuliDescriptor m = point_descriptor(t, ctx);
    m.notes.emplace_back("alpha is the vertex v0: every semistable chain is S-equivalent to the chain with all maps zero");
    if (!exists_stable(t))
      m.notes.emplace_back("degrees are not non-increasing; no stable chain of this type exists anywhere in H");
    return m;
  }

  auto strata = enumerate_strata(t, ctx);
  if (strata.empty()) return empty_descriptor(t, ctx);

  const auto& skipped = where.wall_set();
  auto is_skipped = [&](std::size_t i) { return std::find(skipped.begin(), skipped.end(), i) != skipped.end(); };
  const auto drops = t.degree_drops();

  ModuliDescriptor m;
  m.base = picard_base(t, ctx);
  const bool large = large_degree_regime(t, ctx);
  m.kind = large ? ModuliKind::fiber_product : ModuliKind::disjoint_union;
  for (std::size_t i = 1; i <= t.n(); ++i) {
    FactorRecord f{i, is_skipped(i), std::nullopt};
    if (large && !f.skipped) f.fiber_dim = drops[i - 1] - g;
    m.factors.push_back(f);
  }

  if (large) {
    std::int64_t dim = m.base.dimension;
    for (const auto& f : m.factors)
      if (f.fiber_dim) dim += *f.fiber_dim;
    m.dimension = dim;
  } else {
    for (const auto& s : strata) {
      auto d = stratum_dimension(s, ctx, skipped);
      if (d && (!m.dimension || *d > *m.dimension)) m.dimension = d;
    }
    if (std::any_of(strata.begin(), strata.end(), [](const Stratum& s) { return !s.all_bn_ok(); }))
      m.notes.emplace_back("strata with negative Brill-Noether number are listed but empty on a general curve");
  }
  m.strata = std::move(strata);

  if (g >= 1) {
    m.euler_characteristic = 0;
  } else {
    std::int64_t chi = 1;
    for (std::size_t i = 1; i <= t.n(); ++i)
      if (!is_skipped(i)) chi *= drops[i - 1] + 1;
    m.euler_characteristic = chi;
    m.notes.emplace_back(kGenusZeroEulerNote);
  }
  return m;
}

inline ModuliDescriptor describe_moduli(const ChainType& t, const CurveContext& ctx, const AlphaVector& alpha) {
  return describe_moduli(build_cone(t), ctx, alpha);
}

inline std::int64_t euler_characteristic(const ChainType& t, const CurveContext& ctx, const AlphaVector& alpha) {
  return describe_moduli(t, ctx, alpha).euler_characteristic;
}

// Whether the moduli space for alpha has a point: never outside the closure
// of H, always at v0, otherwise iff the degrees are non-increasing.
inline bool moduli_nonempty(const ChainType& t, const AlphaVector& alpha) {
  detail::require_rank_one(t, "moduli_nonempty");
  const ChamberClass where = classify(build_cone(t), alpha);
  if (where.is_outside()) return false;
  if (where.wall_set().size() == t.n()) return true;
  return exists_stable(t);
}

}  // namespace hchain

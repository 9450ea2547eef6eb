#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hchain/chain_model.hpp"
#include "hchain/chamber.hpp"
#include "hchain/errors.hpp"
#include "hchain/moduli.hpp"

namespace hchain {

// Exponents (k_1,...,k_n) of the characters chi_i(lambda) = lambda^{k_i} of G_m
// used to linearise the action on each E_i.
class CharacterTuple {
 public:
  CharacterTuple() = default;
  explicit CharacterTuple(std::vector<std::int64_t> k) : k_(std::move(k)) {}
  CharacterTuple(std::initializer_list<std::int64_t> k) : k_(k) {}

  std::size_t size() const { return k_.size(); }
  const std::vector<std::int64_t>& exponents() const { return k_; }
  std::int64_t operator[](std::size_t i) const { return k_.at(i); }

  friend bool operator==(const CharacterTuple&, const CharacterTuple&) = default;

 private:
  std::vector<std::int64_t> k_;
};

// M = all k_i > 0; D_I = zeros exactly on I, positive elsewhere; outside M' = some k_i < 0.
// M is D_empty; the kind distinguishes it only for reporting.
struct CharacterClass {
  enum class Kind { outside_m_prime, d_set, interior_m };

  Kind kind = Kind::outside_m_prime;
  std::vector<std::size_t> zero_set;  // 1-based I

  bool is_outside() const { return kind == Kind::outside_m_prime; }
  friend bool operator==(const CharacterClass&, const CharacterClass&) = default;
};

inline CharacterClass classify_character(const CharacterTuple& k) {
  CharacterClass c;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (k[i] < 0) return {CharacterClass::Kind::outside_m_prime, {}};
    if (k[i] == 0) c.zero_set.push_back(i + 1);
  }
  c.kind = c.zero_set.empty() ? CharacterClass::Kind::interior_m : CharacterClass::Kind::d_set;
  return c;
}

// Glued quotients E_i //_{chi_i} G over Z: PE_i for k_i > 0, Z itself for
// k_i = 0, empty for k_i < 0; then their fiber product over Z.
inline ModuliDescriptor quotient_descriptor(const ChainType& t, const CurveContext& ctx, const CharacterTuple& k) {
  detail::require_rank_one(t, "quotient_descriptor");
  if (k.size() != t.n()) throw DimensionError("character tuple must have length n");
  if (!large_degree_regime(t, ctx))
    throw UnsupportedError(
        "quotient_descriptor needs d_{i-1} - d_i > 2g - 2 for every i; use describe_moduli for the stratified case");

  const CharacterClass cls = classify_character(k);
  if (cls.is_outside()) return empty_descriptor(t, ctx);
  if (cls.zero_set.size() == t.n()) return point_descriptor(t, ctx);

  const std::int64_t g = ctx.genus();
  const auto drops = t.degree_drops();

  ModuliDescriptor m;
  m.kind = ModuliKind::fiber_product;
  m.base = picard_base(t, ctx);

  std::int64_t dim = m.base.dimension;
  std::int64_t chi = 1;
  Stratum s;
  for (std::size_t i = 1; i <= t.n(); ++i) {
    const std::int64_t fiber = drops[i - 1] - g;  // H^0 has dimension d' - g + 1
    if (k[i - 1] > 0) {
      m.factors.push_back({i, false, fiber});
      dim += fiber;
      chi *= fiber + 1;
    } else {
      m.factors.push_back({i, true, std::nullopt});
    }
    s.section_indices.push_back(fiber);
    s.fiber_dims.push_back(fiber);
    s.bn_numbers.push_back(g);
    s.bn_number_ok.push_back(true);
  }
  m.strata.push_back(std::move(s));
  m.dimension = dim;
  m.euler_characteristic = g == 0 ? chi : 0;
  if (g == 0) m.notes.emplace_back(kGenusZeroEulerNote);
  return m;
}

// True iff k and alpha name the same cell (D_I <-> C_I, M <-> H, outside M' <->
// outside the closure of H) and give structurally equal moduli descriptors.
inline bool correspondence_check(const ChainType& t, const CurveContext& ctx, const CharacterTuple& k,
                                 const AlphaVector& alpha) {
  const ModuliDescriptor from_chars = quotient_descriptor(t, ctx, k);
  const CharacterClass char_cls = classify_character(k);
  const StabilityCone cone = build_cone(t);
  const ChamberClass alpha_cls = classify(cone, alpha);

  const bool same_cell = char_cls.is_outside() ? alpha_cls.is_outside()
                                               : !alpha_cls.is_outside() && char_cls.zero_set == alpha_cls.wall_set();
  return same_cell && from_chars.same_structure(describe_moduli(cone, ctx, alpha));
}

}  // namespace hchain

#pragma once

#include <json.hpp>

#include <optional>
#include <vector>

#include "hchain/chamber.hpp"
#include "hchain/exact_linalg.hpp"
#include "hchain/git_chars.hpp"
#include "hchain/moduli.hpp"
#include "hchain/stability.hpp"

// JSON reports. Keys are emitted in sorted order (nlohmann::json's default
// object map) and rationals as "p/q" strings, so dump(parse(dump(x))) == dump(x).
namespace hchain::json_io {

using Json = nlohmann::json;

inline Json rational_array(const RationalVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

inline Json selector_array(const SubchainSelector& s) { return Json(s.indices()); }

inline Json cone_report(const StabilityCone& cone) {
  Json functionals = Json::array();
  for (const auto& row : cone.functionals()) functionals.push_back(rational_array(row));
  return Json{{"functionals", functionals},
              {"constants", rational_array(cone.constants())},
              {"vertex", rational_array(cone.vertex().entries())},
              {"determinant", to_string(det(cone.coeff_matrix()))},
              {"closed_form_determinant", to_string(closed_form_determinant(cone.type()))}};
}

inline Json chamber_report(const ChamberClass& c) {
  return Json{{"kind", kind_name(c.kind)}, {"active_walls", c.active_walls}};
}

inline Json verdict_report(const StabilityVerdict& v) {
  Json tight = Json::array();
  for (const auto& s : v.tight) tight.push_back(selector_array(s));
  return Json{{"stable", v.stable},
              {"semistable", v.semistable},
              {"tight", tight},
              {"violating", v.violating ? selector_array(*v.violating) : Json(nullptr)}};
}

inline Json graduation_report(const GraduationResult& g) {
  std::vector<bool> psi = g.representative.phi_nonzero();
  return Json{{"wall", g.wall_set}, {"psi_nonzero", psi}, {"factor_slopes", rational_array(g.factor_slopes)}};
}

inline Json moduli_report(const ModuliDescriptor& m) {
  Json factors = Json::array();
  for (const auto& f : m.factors)
    factors.push_back(Json{{"index", f.index},
                           {"skipped", f.skipped},
                           {"fiber_dim", f.fiber_dim ? Json(*f.fiber_dim) : Json(nullptr)}});
  Json strata = Json::array();
  for (const auto& s : m.strata) {
    std::vector<bool> ok = s.bn_number_ok;
    strata.push_back(Json{{"r", s.section_indices}, {"bn_ok", ok}});
  }
  return Json{{"kind", kind_name(m.kind)},
              {"base", Json{{"genus", m.base.genus}, {"degrees", m.base.degrees}, {"dimension", m.base.dimension}}},
              {"factors", factors},
              {"strata", strata},
              {"dimension", m.dimension ? Json(*m.dimension) : Json(nullptr)},
              {"euler_characteristic", m.euler_characteristic},
              {"notes", m.notes}};
}

inline const char* character_class_name(const CharacterClass& c) {
  switch (c.kind) {
    case CharacterClass::Kind::interior_m: return "M";
    case CharacterClass::Kind::d_set: return "D_I";
    case CharacterClass::Kind::outside_m_prime: return "outside";
  }
  return "?";
}

inline Json git_report(const CharacterClass& c, const ModuliDescriptor& m, std::optional<bool> matches_alpha) {
  Json out{{"class", character_class_name(c)}, {"I", c.zero_set}, {"descriptor", moduli_report(m)}};
  if (matches_alpha) out["matches_alpha"] = *matches_alpha;
  return out;
}

}  // namespace hchain::json_io

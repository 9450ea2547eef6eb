#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "hchain/chain_model.hpp"
#include "hchain/errors.hpp"
#include "hchain/exact_linalg.hpp"

namespace hchain {

// H-representation of the stability cone H of a chain type:
//   alpha in H  <=>  f_i(alpha) < c_i  for i = 0..n-1,
// where f_i(alpha) < c_i is mu_alpha(C_i) < mu_alpha(C) cleared of denominators.
// Row i of the coefficient matrix is f_i; the hyperplane f_i = c_i is wall i+1.
class StabilityCone {
 public:
  explicit StabilityCone(const ChainType& t) : type_(t) {
    const std::size_t n = t.n();
    const auto& r = t.ranks();
    const auto& d = t.degrees();

    coeff_ = RationalMatrix(n, n);
    constants_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      Integer rank_low = 0, rank_high = 0, deg_low = 0, deg_high = 0;
      for (std::size_t k = 0; k <= n; ++k) {
        if (k <= i) {
          rank_low += r[k];
          deg_low += d[k];
        } else {
          rank_high += r[k];
          deg_high += d[k];
        }
      }
      for (std::size_t k = 1; k <= n; ++k)
        coeff_(i, k - 1) = k <= i ? Rational(rank_high * r[k]) : Rational(-rank_low * r[k]);
      constants_[i] = Rational(rank_low * deg_high - rank_high * deg_low);
    }

    RationalVector v(n);
    const Rational mu0 = rational(d[0], r[0]);
    for (std::size_t k = 1; k <= n; ++k) v[k - 1] = mu0 - rational(d[k], r[k]);
    vertex_ = AlphaVector(std::move(v));
  }

  const ChainType& type() const { return type_; }
  std::size_t n() const { return type_.n(); }
  const RationalMatrix& coeff_matrix() const { return coeff_; }
  RationalVector functional(std::size_t i) const { return coeff_.row(i); }
  std::vector<RationalVector> functionals() const {
    std::vector<RationalVector> rows;
    for (std::size_t i = 0; i < n(); ++i) rows.push_back(coeff_.row(i));
    return rows;
  }
  const RationalVector& constants() const { return constants_; }
  const AlphaVector& vertex() const { return vertex_; }

  // f_i(alpha), 0-based i.
  Rational evaluate(std::size_t i, const AlphaVector& alpha) const {
    detail::require_alpha_length(n(), alpha);
    Rational v = 0;
    for (std::size_t k = 0; k < n(); ++k) v += coeff_(i, k) * alpha.entries()[k];
    return v;
  }

  // c_i - f_i(alpha) for every i; all positive exactly on H.
  RationalVector slack(const AlphaVector& alpha) const {
    RationalVector s(n());
    for (std::size_t i = 0; i < n(); ++i) s[i] = constants_[i] - evaluate(i, alpha);
    return s;
  }

 private:
  ChainType type_;
  RationalMatrix coeff_;
  RationalVector constants_;
  AlphaVector vertex_;
};

inline StabilityCone build_cone(const ChainType& t) { return StabilityCone(t); }

// Position of a parameter relative to the closure of H:
// outside, on the wall set C_I (I = 1-based active hyperplanes), or in H = C_empty.
struct ChamberClass {
  enum class Kind { outside, wall, interior };

  Kind kind = Kind::outside;
  std::vector<std::size_t> active_walls;

  static ChamberClass outside() { return {Kind::outside, {}}; }
  static ChamberClass interior() { return {Kind::interior, {}}; }
  static ChamberClass wall(std::vector<std::size_t> walls) { return {Kind::wall, std::move(walls)}; }

  bool is_outside() const { return kind == Kind::outside; }
  bool is_interior() const { return kind == Kind::interior; }
  bool is_wall() const { return kind == Kind::wall; }

  // Empty for the interior; meaningless outside.
  const std::vector<std::size_t>& wall_set() const { return active_walls; }

  friend bool operator==(const ChamberClass&, const ChamberClass&) = default;
};

inline const char* kind_name(ChamberClass::Kind k) {
  switch (k) {
    case ChamberClass::Kind::outside: return "outside";
    case ChamberClass::Kind::wall: return "wall";
    case ChamberClass::Kind::interior: return "interior";
  }
  return "?";
}

// Points on some h_i but off the closure of H report outside.
inline ChamberClass classify(const StabilityCone& cone, const AlphaVector& alpha) {
  detail::require_alpha_length(cone.n(), alpha);
  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < cone.n(); ++i) {
    const Rational f = cone.evaluate(i, alpha);
    if (f > cone.constants()[i]) return ChamberClass::outside();
    if (f == cone.constants()[i]) active.push_back(i + 1);
  }
  if (active.empty()) return ChamberClass::interior();
  return ChamberClass::wall(std::move(active));
}

inline Rational closed_form_determinant(const ChainType& t) {
  const std::size_t n = t.n();
  Integer value = n % 2 == 0 ? 1 : -1;
  for (auto r : t.ranks()) value *= r;
  const Integer total = t.total_rank();
  for (std::size_t k = 1; k < n; ++k) value *= total;
  return Rational(value);
}

// (det by elimination, (-1)^n r_0...r_n (r_0+...+r_n)^{n-1}).
inline std::pair<Rational, Rational> matrix_determinant_identity(const ChainType& t) {
  return {det(build_cone(t).coeff_matrix()), closed_form_determinant(t)};
}

// The unique alpha with c_i - f_i(alpha) = slack_i. Nonnegative slack lands in
// the closure of H, with zero entries marking the active walls.
inline AlphaVector point_with_slack(const StabilityCone& cone, const RationalVector& slack) {
  if (slack.size() != cone.n()) throw DimensionError("slack vector has wrong length");
  RationalVector rhs(cone.n());
  for (std::size_t i = 0; i < cone.n(); ++i) rhs[i] = cone.constants()[i] - slack[i];
  return AlphaVector(solve(cone.coeff_matrix(), rhs));
}

// v_0 + t (0,...,0,1)
inline AlphaVector interior_sample(const StabilityCone& cone, const Rational& t) {
  if (t <= 0) throw DomainError("interior_sample: parameter must be positive");
  RationalVector v = cone.vertex().entries();
  v.back() += t;
  return AlphaVector(std::move(v));
}

enum class Witness {
  ray,      // v_0 + t (alpha - v_0), t > 0
  segment,  // (1 - t) alpha + t beta, 0 <= t <= 1
};

inline AlphaVector ray_point(const StabilityCone& cone, const AlphaVector& alpha, const Rational& t) {
  const auto& v0 = cone.vertex().entries();
  RationalVector p(cone.n());
  for (std::size_t k = 0; k < cone.n(); ++k) p[k] = v0[k] + t * (alpha.entries()[k] - v0[k]);
  return AlphaVector(std::move(p));
}

inline AlphaVector segment_point(const AlphaVector& alpha, const AlphaVector& beta, const Rational& t) {
  if (alpha.size() != beta.size()) throw DimensionError("segment: endpoints differ in length");
  RationalVector p(alpha.size());
  for (std::size_t k = 0; k < p.size(); ++k) p[k] = (1 - t) * alpha.entries()[k] + t * beta.entries()[k];
  return AlphaVector(std::move(p));
}

// Checks that the ray or segment point built from interior alpha, beta is
// again interior. Always true for a convex cone with vertex v_0.
inline bool geometry_witness(const StabilityCone& cone, Witness kind, const AlphaVector& alpha,
                             const AlphaVector& beta, const Rational& t) {
  if (!classify(cone, alpha).is_interior()) throw DomainError("geometry_witness: alpha is not in H");
  if (!classify(cone, beta).is_interior()) throw DomainError("geometry_witness: beta is not in H");
  if (kind == Witness::ray) {
    if (t <= 0) throw DomainError("geometry_witness: ray parameter must be positive");
    return classify(cone, ray_point(cone, alpha, t)).is_interior();
  }
  if (t < 0 || t > 1) throw DomainError("geometry_witness: segment parameter must lie in [0, 1]");
  return classify(cone, segment_point(alpha, beta, t)).is_interior();
}

}  // namespace hchain

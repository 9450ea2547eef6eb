#pragma once

// Test-only reference computations. Deliberately naive and independent of the
// library's algorithms: Laplace expansion, slopes straight from the definition,
// subchains enumerated as std::set.

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "hchain/chain_model.hpp"
#include "hchain/exact_linalg.hpp"

namespace oracle {

using hchain::Rational;

inline Rational cofactor_det(const std::vector<std::vector<Rational>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Rational sum = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<Rational>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      for (std::size_t j = 0; j < n; ++j)
        if (j != col) row.push_back(m[i][j]);
      minor.push_back(row);
    }
    const Rational term = m[0][col] * cofactor_det(minor);
    sum += col % 2 == 0 ? term : Rational(-term);
  }
  return sum;
}

// Unreduced slope with a full parameter vector (alpha_0, ..., alpha_n).
inline Rational full_slope(const std::vector<std::int64_t>& r, const std::vector<std::int64_t>& d,
                           const std::vector<Rational>& full_alpha) {
  Rational num = 0;
  std::int64_t den = 0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    num += d[i] + full_alpha[i] * r[i];
    den += r[i];
  }
  return num / den;
}

// Reduced slope: alpha_0 = 0.
inline Rational slope(const std::vector<std::int64_t>& r, const std::vector<std::int64_t>& d,
                      const std::vector<Rational>& alpha) {
  std::vector<Rational> full{0};
  full.insert(full.end(), alpha.begin(), alpha.end());
  full.resize(r.size());
  return full_slope(r, d, full);
}

// All index sets S, proper and nonzero, with (i in S, phi_i != 0) => i-1 in S.
inline std::set<std::set<std::size_t>> closed_subsets(const hchain::RankOneChain& c) {
  std::set<std::set<std::size_t>> out;
  const std::size_t len = c.n() + 1;
  std::vector<std::set<std::size_t>> all{{}};
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t k = all.size();
    for (std::size_t j = 0; j < k; ++j) {
      auto s = all[j];
      s.insert(i);
      all.push_back(s);
    }
  }
  for (const auto& s : all) {
    if (s.empty() || s.size() == len) continue;
    bool closed = true;
    for (auto i : s)
      if (i >= 1 && c.phi(i) && !s.count(i - 1)) closed = false;
    if (closed) out.insert(s);
  }
  return out;
}

inline Rational subset_slope(const hchain::RankOneChain& c, const std::set<std::size_t>& s,
                             const std::vector<Rational>& alpha) {
  std::vector<std::int64_t> r(c.n() + 1, 0), d(c.n() + 1, 0);
  for (auto i : s) {
    r[i] = 1;
    d[i] = c.degrees()[i];
  }
  return slope(r, d, alpha);
}

struct Verdict {
  bool stable = true;
  bool semistable = true;
  std::set<std::set<std::size_t>> tight;
};

inline Verdict verdict(const hchain::RankOneChain& c, const std::vector<Rational>& alpha) {
  Verdict v;
  const std::vector<std::int64_t> ones(c.n() + 1, 1);
  const Rational mu = slope(ones, c.degrees(), alpha);
  for (const auto& s : closed_subsets(c)) {
    const Rational m = subset_slope(c, s, alpha);
    if (m > mu) v.semistable = v.stable = false;
    if (m == mu) {
      v.stable = false;
      v.tight.insert(s);
    }
  }
  return v;
}

}  // namespace oracle

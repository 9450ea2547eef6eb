#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "hchain/chain_model.hpp"
#include "hchain/errors.hpp"
#include "hchain/exact_linalg.hpp"
#include "hchain/git_chars.hpp"

namespace hchain {

namespace detail {

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace detail

inline std::vector<std::int64_t> parse_int_list(std::string_view text) {
  std::vector<std::int64_t> out;
  if (detail::trim(text).empty()) throw ParseError("empty integer list");
  for (auto item : detail::split(text, ',')) {
    Integer v = detail::parse_integer(item);
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
      throw ParseError("integer out of range: '" + std::string(item) + "'");
    out.push_back(static_cast<std::int64_t>(v));
  }
  return out;
}

// "r_0,...,r_n;d_0,...,d_n"
inline ChainType parse_chain_type(std::string_view text) {
  auto halves = detail::split(text, ';');
  if (halves.size() != 2) throw ParseError("chain type must look like \"r0,...,rn;d0,...,dn\"");
  return ChainType(parse_int_list(halves[0]), parse_int_list(halves[1]));
}

// "a_1,...,a_n" with entries "p" or "p/q".
inline AlphaVector parse_alpha(std::string_view text) {
  if (detail::trim(text).empty()) throw ParseError("empty alpha vector");
  RationalVector v;
  for (auto item : detail::split(text, ',')) v.push_back(parse_rational(item));
  return AlphaVector(std::move(v));
}

// "1,0,1" or "true,false,true"
inline std::vector<bool> parse_flags(std::string_view text) {
  if (detail::trim(text).empty()) throw ParseError("empty flag list");
  std::vector<bool> out;
  for (auto item : detail::split(text, ',')) {
    if (item == "1" || item == "true") out.push_back(true);
    else if (item == "0" || item == "false") out.push_back(false);
    else throw ParseError("map flag must be 1/0/true/false, got '" + std::string(item) + "'");
  }
  return out;
}

inline CharacterTuple parse_characters(std::string_view text) { return CharacterTuple(parse_int_list(text)); }

}  // namespace hchain

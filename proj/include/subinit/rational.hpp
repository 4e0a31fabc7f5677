#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "subinit/errors.hpp"

namespace subinit {

/// Arbitrary-precision rational. Arithmetic results are canonical; the
/// (num, den) constructor is not, so comparisons need canonicalize() first.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p", "p/q" (optional surrounding whitespace).
inline Rational parse_rational(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string s(text.substr(b, e - b));
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw ParseError("empty rational literal");
  std::size_t i = (s[0] == '-') ? 1 : 0;
  bool seen_slash = false, digit_before = false, digit_after = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/' && !seen_slash) {
      seen_slash = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("invalid rational literal '" + s + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw ParseError("invalid rational literal '" + s + "'");
  Rational r;
  if (r.set_str(s, 10) != 0) throw ParseError("invalid rational literal '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(Rational r) {
  r.canonicalize();
  return r.get_str();
}

/// Parses a comma-separated list of rationals, e.g. "0,0,1/2,-3".
inline std::vector<Rational> parse_rational_list(std::string_view csv) {
  std::vector<Rational> out;
  std::size_t start = 0;
  bool all_space = true;
  for (char c : csv) all_space = all_space && std::isspace(static_cast<unsigned char>(c));
  if (all_space) return out;
  while (true) {
    std::size_t comma = csv.find(',', start);
    out.push_back(parse_rational(csv.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

inline Integer lcm_of_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace subinit

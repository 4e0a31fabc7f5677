#pragma once

// Polynomial text grammar:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*'? factor)*      (juxtaposition is not accepted)
//   factor := base ('^' integer)?
//   base   := rational | variable | '(' expr ')'
//   variable := identifier | identifier '[' integer (',' integer)* ']'
// Whitespace is ignored everywhere.

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "subinit/errors.hpp"
#include "subinit/polynomial.hpp"

namespace subinit {

namespace detail {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, const std::vector<std::string>& labels) : labels_(labels) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) src_ += c;
    for (std::size_t i = 0; i < labels.size(); ++i) index_[labels[i]] = i;
  }

  Polynomial parse() {
    if (src_.empty()) throw ParseError("empty polynomial");
    Polynomial p = expr();
    if (pos_ != src_.size()) fail("unexpected character");
    return p;
  }

  // Collects variable tokens without building a polynomial.
  static std::vector<std::string> variable_tokens(std::string_view text) {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < s.size();) {
      if (std::isalpha(static_cast<unsigned char>(s[i])) || s[i] == '_') {
        std::size_t j = i;
        while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
        if (j < s.size() && s[j] == '[') {
          std::size_t close = s.find(']', j);
          if (close == std::string::npos) throw ParseError("unterminated variable index in '" + s + "'");
          j = close + 1;
        }
        out.push_back(s.substr(i, j - i));
        i = j;
      } else {
        ++i;
      }
    }
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in '" + src_ + "'");
  }
  bool peek(char c) const { return pos_ < src_.size() && src_[pos_] == c; }
  std::size_t n() const { return labels_.size(); }

  Polynomial expr() {
    Polynomial acc(n());
    bool negate = false;
    if (peek('+') || peek('-')) negate = src_[pos_++] == '-';
    Polynomial t = term();
    acc = negate ? acc - t : acc + t;
    while (peek('+') || peek('-')) {
      bool minus = src_[pos_++] == '-';
      Polynomial u = term();
      acc = minus ? acc - u : acc + u;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (peek('*')) {
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (peek('^')) {
      ++pos_;
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      int e = std::stoi(src_.substr(start, pos_ - start));
      Polynomial r = Polynomial::constant(n(), 1);
      for (int i = 0; i < e; ++i) r = r * b;
      return r;
    }
    return b;
  }

  Polynomial base() {
    if (pos_ >= src_.size()) fail("unexpected end of input");
    char c = src_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (peek('/')) {
        ++pos_;
        std::size_t d = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (d == pos_) fail("expected denominator");
      }
      return Polynomial::constant(n(), parse_rational(src_.substr(start, pos_ - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
        ++pos_;
      if (peek('[')) {
        std::size_t close = src_.find(']', pos_);
        if (close == std::string::npos) fail("unterminated variable index");
        pos_ = close + 1;
      }
      std::string name = src_.substr(start, pos_ - start);
      auto it = index_.find(name);
      if (it == index_.end()) throw ParseError("unknown variable '" + name + "'");
      return Polynomial::variable(n(), it->second);
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string src_;
  std::size_t pos_ = 0;
  const std::vector<std::string>& labels_;
  std::map<std::string, std::size_t> index_;
};

// Sort key: identifier prefix, then the numeric indices (x10 after x9,
// x[1,10] after x[1,9]).
inline std::pair<std::string, std::vector<long>> variable_sort_key(const std::string& v) {
  std::size_t i = 0;
  while (i < v.size() && !std::isdigit(static_cast<unsigned char>(v[i])) && v[i] != '[') ++i;
  std::string prefix = v.substr(0, i);
  std::vector<long> nums;
  std::string cur;
  for (; i < v.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(v[i]))) {
      cur += v[i];
    } else if (!cur.empty()) {
      nums.push_back(std::stol(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) nums.push_back(std::stol(cur));
  return {prefix, nums};
}

}  // namespace detail

inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& labels) {
  return detail::PolynomialParser(text, labels).parse();
}

/// Variable labels occurring in the given polynomials, ordered by name then
/// numeric index. For plain `x1..xN` names every index up to the largest one
/// is included, so `x1*x3` lives in a three-variable ring.
inline std::vector<std::string> infer_labels(const std::vector<std::string>& polys) {
  std::set<std::string> seen;
  for (const auto& p : polys)
    for (auto& v : detail::PolynomialParser::variable_tokens(p)) seen.insert(v);
  std::vector<std::string> labels(seen.begin(), seen.end());
  bool plain_x = !labels.empty() && std::all_of(labels.begin(), labels.end(), [](const std::string& s) {
    return s.size() > 1 && s[0] == 'x' &&
           std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  });
  if (plain_x) {
    long top = 0;
    for (const auto& s : labels) top = std::max(top, std::stol(s.substr(1)));
    return default_labels(static_cast<std::size_t>(top));
  }
  std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
    return detail::variable_sort_key(a) < detail::variable_sort_key(b);
  });
  return labels;
}

}  // namespace subinit

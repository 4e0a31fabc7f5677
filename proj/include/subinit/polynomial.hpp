#pragma once

// Monomials, weight vectors, and sparse polynomials over the rationals.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "subinit/errors.hpp"
#include "subinit/rational.hpp"

namespace subinit {

/// Exponent vector of fixed length (the number of ambient variables).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<int> exps) : exps_(std::move(exps)) {
    for (int e : exps_)
      if (e < 0) throw PreconditionError("negative exponent in monomial");
  }

  static Monomial variable(std::size_t nvars, std::size_t i) {
    Monomial m(nvars);
    m.exps_.at(i) = 1;
    return m;
  }

  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<int>& exponents() const { return exps_; }

  long degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0L); }
  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }

  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    return true;
  }

  Monomial lcm(const Monomial& other) const {
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    return r;
  }

  /// this / divisor; requires divisor | this.
  Monomial quotient(const Monomial& divisor) const {
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
    return r;
  }

  Monomial operator*(const Monomial& other) const {
    Monomial r(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = exps_[i] + other.exps_[i];
    return r;
  }

  /// Index-wise support test: true if every variable used lies in `keep`.
  bool supported_in(const std::vector<bool>& keep) const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0 && !keep[i]) return false;
    return true;
  }

  Monomial resized(std::size_t nvars) const {
    Monomial r(nvars);
    for (std::size_t i = 0; i < std::min(nvars, exps_.size()); ++i) r.exps_[i] = exps_[i];
    return r;
  }

  // Canonical (lex on the exponent vector) ordering used for storage only.
  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<int> exps_;
};

/// Rational weight vector indexed by the variable labels.
class WeightVector {
 public:
  WeightVector() = default;
  explicit WeightVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
  static WeightVector zeros(std::size_t n) { return WeightVector(std::vector<Rational>(n, 0)); }
  static WeightVector ones(std::size_t n) { return WeightVector(std::vector<Rational>(n, 1)); }
  static WeightVector from_integers(const std::vector<long>& v) {
    std::vector<Rational> e;
    e.reserve(v.size());
    for (long x : v) e.emplace_back(x);
    return WeightVector(std::move(e));
  }

  std::size_t size() const { return entries_.size(); }
  const Rational& operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<Rational>& entries() const { return entries_; }

  WeightVector operator-() const {
    std::vector<Rational> e(entries_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = -entries_[i];
    return WeightVector(std::move(e));
  }
  WeightVector operator+(const WeightVector& o) const {
    check_size(o.size());
    std::vector<Rational> e(entries_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = entries_[i] + o.entries_[i];
    return WeightVector(std::move(e));
  }
  WeightVector operator*(const Rational& c) const {
    std::vector<Rational> e(entries_.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = entries_[i] * c;
    return WeightVector(std::move(e));
  }
  bool operator==(const WeightVector&) const = default;

  void check_size(std::size_t n) const {
    if (entries_.size() != n)
      throw DimensionError("weight vector has length " + std::to_string(entries_.size()) +
                           ", expected " + std::to_string(n));
  }

  std::string to_csv() const {
    std::string s;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) s += ',';
      s += entries_[i].get_str();
    }
    return s;
  }

 private:
  std::vector<Rational> entries_;
};

inline Rational weight_degree(const Monomial& m, const WeightVector& w) {
  w.check_size(m.size());
  Rational d = 0;
  for (std::size_t i = 0; i < m.size(); ++i)
    if (m[i] != 0) d += w[i] * m[i];
  return d;
}

struct Term {
  Monomial monomial;
  Rational coefficient;
  bool operator==(const Term&) const = default;
};

/// Sparse polynomial in a fixed number of variables. Terms are kept sorted by
/// descending canonical monomial order with no zero coefficients, so equality
/// is structural.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms) {
    for (const auto& t : terms)
      if (t.monomial.size() != nvars) throw DimensionError("term has wrong number of variables");
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.monomial > b.monomial; });
    Polynomial p(nvars);
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().monomial == t.monomial) {
        p.terms_.back().coefficient += t.coefficient;
      } else {
        if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
        p.terms_.push_back(std::move(t));
      }
    }
    if (!p.terms_.empty() && p.terms_.back().coefficient == 0) p.terms_.pop_back();
    return p;
  }

  static Polynomial constant(std::size_t nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.push_back({Monomial(nvars), c});
    return p;
  }
  static Polynomial variable(std::size_t nvars, std::size_t i) {
    Polynomial p(nvars);
    p.terms_.push_back({Monomial::variable(nvars, i), Rational(1)});
    return p;
  }
  static Polynomial monomial(const Monomial& m, const Rational& c = 1) {
    Polynomial p(m.size());
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_monomial() const { return terms_.size() == 1; }

  long total_degree() const {
    long d = -1;
    for (const auto& t : terms_) d = std::max(d, t.monomial.degree());
    return d;
  }

  /// Variables that occur in some term.
  std::vector<bool> support() const {
    std::vector<bool> used(nvars_, false);
    for (const auto& t : terms_)
      for (std::size_t i = 0; i < nvars_; ++i)
        if (t.monomial[i] > 0) used[i] = true;
    return used;
  }

  bool supported_in(const std::vector<bool>& keep) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const Term& t) { return t.monomial.supported_in(keep); });
  }

  Polynomial operator+(const Polynomial& o) const { return combine(o, 1); }
  Polynomial operator-(const Polynomial& o) const { return combine(o, -1); }
  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient = -t.coefficient;
    return r;
  }
  Polynomial operator*(const Rational& c) const {
    if (c == 0) return Polynomial(nvars_);
    Polynomial r = *this;
    for (auto& t : r.terms_) t.coefficient *= c;
    return r;
  }
  Polynomial operator*(const Polynomial& o) const {
    check_ring(o);
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
      for (const auto& b : o.terms_)
        out.push_back({a.monomial * b.monomial, a.coefficient * b.coefficient});
    return from_terms(nvars_, std::move(out));
  }
  Polynomial times_monomial(const Monomial& m) const {
    Polynomial r = *this;
    for (auto& t : r.terms_) t.monomial = t.monomial * m;
    return r;  // multiplication by a monomial preserves the canonical order
  }
  bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

  /// Sets x_e := 0 for every e with keep[e] == false.
  Polynomial project(const std::vector<bool>& keep) const {
    Polynomial r(nvars_);
    for (const auto& t : terms_)
      if (t.monomial.supported_in(keep)) r.terms_.push_back(t);
    return r;
  }

  /// Re-embeds into a ring with `n` variables; shrinking requires that the
  /// dropped trailing variables do not occur.
  Polynomial resized(std::size_t n) const {
    Polynomial r(n);
    for (const auto& t : terms_) {
      for (std::size_t i = n; i < nvars_; ++i)
        if (t.monomial[i] != 0) throw PreconditionError("cannot drop a variable that occurs");
      r.terms_.push_back({t.monomial.resized(n), t.coefficient});
    }
    return from_terms(n, std::move(r.terms_));
  }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return *this * (Rational(1) / terms_.front().coefficient);
  }

 private:
  void check_ring(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw DimensionError("polynomials live in different rings");
  }

  Polynomial combine(const Polynomial& o, int sign) const {
    check_ring(o);
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].monomial > o.terms_[j].monomial)) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].monomial > terms_[i].monomial) {
        Term t = o.terms_[j++];
        if (sign < 0) t.coefficient = -t.coefficient;
        r.terms_.push_back(std::move(t));
      } else {
        Rational c = sign > 0 ? Rational(terms_[i].coefficient + o.terms_[j].coefficient)
                              : Rational(terms_[i].coefficient - o.terms_[j].coefficient);
        if (c != 0) r.terms_.push_back({terms_[i].monomial, c});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Sum of the terms of minimal w-degree (the min convention).
inline Polynomial initial_form(const Polynomial& p, const WeightVector& w) {
  if (p.is_zero()) throw PreconditionError("initial form of the zero polynomial is undefined");
  w.check_size(p.nvars());
  std::vector<Rational> deg;
  deg.reserve(p.size());
  for (const auto& t : p.terms()) deg.push_back(weight_degree(t.monomial, w));
  const Rational& lo = *std::min_element(deg.begin(), deg.end());
  std::vector<Term> keep;
  for (std::size_t i = 0; i < deg.size(); ++i)
    if (deg[i] == lo) keep.push_back(p.terms()[i]);
  return Polynomial::from_terms(p.nvars(), std::move(keep));
}

inline bool is_homogeneous(const Polynomial& p, const WeightVector& w) {
  if (p.is_zero()) return true;
  w.check_size(p.nvars());
  Rational first = weight_degree(p.terms().front().monomial, w);
  for (const auto& t : p.terms())
    if (weight_degree(t.monomial, w) != first) return false;
  return true;
}

/// Homogeneity for the standard grading (all weights 1).
inline bool is_standard_homogeneous(const Polynomial& p) {
  if (p.is_zero()) return true;
  long d = p.terms().front().monomial.degree();
  for (const auto& t : p.terms())
    if (t.monomial.degree() != d) return false;
  return true;
}

inline std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

inline std::string to_string(const Monomial& m, const std::vector<std::string>& labels) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += labels.at(i);
    if (m[i] > 1) s += '^' + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

inline std::string to_string(const Polynomial& p, const std::vector<std::string>& labels) {
  if (p.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational c = t.coefficient;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += '-';
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      s += c.get_str();
    } else {
      if (c != 1) s += c.get_str() + '*';
      s += to_string(t.monomial, labels);
    }
  }
  return s;
}

inline std::string to_string(const Polynomial& p) { return to_string(p, default_labels(p.nvars())); }

}  // namespace subinit

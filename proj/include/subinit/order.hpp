#pragma once

// Monomial orders. Every supported order is realized as an integer matrix
// order: monomials are compared by the lexicographic sequence of row dot
// products, larger meaning greater.

#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "subinit/errors.hpp"
#include "subinit/polynomial.hpp"

namespace subinit {

class MonomialOrder {
 public:
  enum class Kind { lex, grevlex, weighted, block };

  /// x1 > x2 > ... > xn, lexicographic.
  static MonomialOrder lex(std::size_t n) {
    MonomialOrder o(Kind::lex, n, "lex");
    for (std::size_t i = 0; i < n; ++i) o.rows_.push_back(unit_row(n, i, 1));
    return o;
  }

  /// Graded reverse lexicographic with x1 > x2 > ... > xn.
  static MonomialOrder grevlex(std::size_t n) {
    MonomialOrder o(Kind::grevlex, n, "grevlex");
    o.rows_.push_back(std::vector<std::int64_t>(n, 1));
    for (std::size_t k = n; k-- > 1;) o.rows_.push_back(unit_row(n, k, -1));
    return o;
  }

  /// Total degree first, then smaller w-degree is larger, then `tiebreak`.
  /// Leading terms of standard-homogeneous polynomials are therefore among
  /// their minimal-w terms.
  static MonomialOrder weighted(const WeightVector& w, const MonomialOrder& tiebreak) {
    std::size_t n = tiebreak.nvars();
    w.check_size(n);
    MonomialOrder o(Kind::weighted, n, "weighted(w=[" + w.to_csv() + "];" + tiebreak.desc_ + ")");
    o.rows_.push_back(std::vector<std::int64_t>(n, 1));
    o.rows_.push_back(integer_row(-w));
    o.rows_.insert(o.rows_.end(), tiebreak.rows_.begin(), tiebreak.rows_.end());
    o.weight_ = std::make_shared<WeightVector>(w);
    return o;
  }

  /// Elimination order: monomials are compared on the `front` variables by
  /// `front_order` first, then on the remaining variables by `back_order`.
  static MonomialOrder block(const std::vector<bool>& front, const MonomialOrder& front_order,
                             const MonomialOrder& back_order) {
    std::size_t n = front.size();
    if (front_order.nvars() != n || back_order.nvars() != n)
      throw DimensionError("block order components have the wrong number of variables");
    std::string mask;
    for (bool b : front) mask += b ? '1' : '0';
    MonomialOrder o(Kind::block, n,
                    "block(front=" + mask + ";" + front_order.desc_ + ";" + back_order.desc_ + ")");
    auto add_masked = [&](const MonomialOrder& src, bool want) {
      for (const auto& row : src.rows_) {
        std::vector<std::int64_t> r(n, 0);
        bool nonzero = false;
        for (std::size_t i = 0; i < n; ++i)
          if (front[i] == want) {
            r[i] = row[i];
            nonzero = nonzero || r[i] != 0;
          }
        if (nonzero) o.rows_.push_back(std::move(r));
      }
    };
    add_masked(front_order, true);
    add_masked(back_order, false);
    o.front_ = front;
    return o;
  }

  /// Convenience: eliminate the `drop` variables with grevlex on both blocks.
  static MonomialOrder elimination(const std::vector<bool>& drop) {
    auto g = grevlex(drop.size());
    return block(drop, g, g);
  }

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  const std::string& descriptor() const { return desc_; }
  const WeightVector* weight() const { return weight_.get(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (a.size() != nvars_ || b.size() != nvars_)
      throw DimensionError("monomial length does not match the order");
    for (const auto& row : rows_) {
      __int128 da = 0, db = 0;
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (row[i] == 0) continue;
        da += static_cast<__int128>(row[i]) * a[i];
        db += static_cast<__int128>(row[i]) * b[i];
      }
      if (da != db) return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    // Rows of a degenerate weight order may not separate; fall back to lex.
    for (std::size_t i = 0; i < nvars_; ++i)
      if (a[i] != b[i]) return a[i] < b[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool operator==(const MonomialOrder& o) const { return desc_ == o.desc_; }

 private:
  MonomialOrder(Kind k, std::size_t n, std::string desc) : kind_(k), nvars_(n), desc_(std::move(desc)) {}

  static std::vector<std::int64_t> unit_row(std::size_t n, std::size_t i, std::int64_t v) {
    std::vector<std::int64_t> r(n, 0);
    r[i] = v;
    return r;
  }

  // Positive rescaling does not change the order, so clear denominators.
  static std::vector<std::int64_t> integer_row(const WeightVector& w) {
    Integer l = lcm_of_denominators(w.entries());
    std::vector<std::int64_t> r;
    for (const auto& q : w.entries()) {
      Integer v = q.get_num() * (l / q.get_den());
      if (!v.fits_slong_p() || abs(v) > Integer(1) << 40)
        throw UnsupportedError("weight vector entries are too large for a monomial order");
      r.push_back(v.get_si());
    }
    return r;
  }

  Kind kind_;
  std::size_t nvars_;
  std::string desc_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::shared_ptr<WeightVector> weight_;
  std::vector<bool> front_;
};

}  // namespace subinit

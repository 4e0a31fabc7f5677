#pragma once

// Buchberger's algorithm with Gebauer-Moeller pair elimination and the normal
// selection strategy, plus the ideal operations built on reduced bases.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "subinit/errors.hpp"
#include "subinit/order.hpp"
#include "subinit/polynomial.hpp"

namespace subinit {

namespace detail {

// Terms sorted by descending monomial order; the front is the leading term.
using OrderedTerms = std::vector<Term>;

inline OrderedTerms to_ordered(const Polynomial& p, const MonomialOrder& o) {
  OrderedTerms t = p.terms();
  std::sort(t.begin(), t.end(),
            [&](const Term& a, const Term& b) { return o.compare(a.monomial, b.monomial) > 0; });
  return t;
}

inline Polynomial from_ordered(std::size_t nvars, OrderedTerms t) {
  return Polynomial::from_terms(nvars, std::move(t));
}

// Returns p[from..] - c * m * g[1..], assuming c*m*lt(g) cancels p[from-1].
inline OrderedTerms subtract_multiple(const OrderedTerms& p, std::size_t from, const Rational& c,
                                      const Monomial& m, const OrderedTerms& g,
                                      const MonomialOrder& o) {
  OrderedTerms out;
  out.reserve(p.size() - from + g.size());
  std::size_t i = from, j = 1;
  Monomial gj;
  bool have_gj = false;
  while (i < p.size() || j < g.size()) {
    if (j < g.size() && !have_gj) {
      gj = g[j].monomial * m;
      have_gj = true;
    }
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    if (i == p.size()) {
      out.push_back({gj, -c * g[j].coefficient});
      ++j;
      have_gj = false;
      continue;
    }
    auto cmp = o.compare(p[i].monomial, gj);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back({gj, -c * g[j].coefficient});
      ++j;
      have_gj = false;
    } else {
      Rational v = p[i].coefficient - c * g[j].coefficient;
      if (v != 0) out.push_back({p[i].monomial, std::move(v)});
      ++i;
      ++j;
      have_gj = false;
    }
  }
  return out;
}

// Full reduction: no term of the result is divisible by a leading monomial.
inline OrderedTerms reduce_full(OrderedTerms p, const std::vector<const OrderedTerms*>& divisors,
                                const MonomialOrder& o) {
  OrderedTerms rem;
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Monomial& lm = p[pos].monomial;
    const OrderedTerms* d = nullptr;
    for (const auto* g : divisors)
      if (g->front().monomial.divides(lm)) {
        d = g;
        break;
      }
    if (d == nullptr) {
      rem.push_back(std::move(p[pos]));
      ++pos;
      continue;
    }
    Rational c = p[pos].coefficient / d->front().coefficient;
    Monomial q = lm.quotient(d->front().monomial);
    p = subtract_multiple(p, pos + 1, c, q, *d, o);
    pos = 0;
  }
  return rem;
}

inline void make_monic(OrderedTerms& p) {
  if (p.empty()) return;
  Rational inv = Rational(1) / p.front().coefficient;
  for (auto& t : p) t.coefficient *= inv;
}

}  // namespace detail

/// Reduced Groebner basis: monic elements, each with its marked leading
/// monomial, sorted by ascending leading monomial under the order.
class ReducedGB {
 public:
  ReducedGB(MonomialOrder order, std::size_t nvars, std::vector<detail::OrderedTerms> elems)
      : order_(std::move(order)), nvars_(nvars), ordered_(std::move(elems)) {
    std::sort(ordered_.begin(), ordered_.end(), [&](const auto& a, const auto& b) {
      return order_.compare(a.front().monomial, b.front().monomial) < 0;
    });
    for (const auto& e : ordered_) {
      leads_.push_back(e.front().monomial);
      elements_.push_back(detail::from_ordered(nvars_, e));
    }
  }

  const MonomialOrder& order() const { return order_; }
  std::size_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& elements() const { return elements_; }
  const std::vector<Monomial>& leading_monomials() const { return leads_; }
  std::size_t size() const { return elements_.size(); }
  bool is_unit() const { return leads_.size() == 1 && leads_.front().is_one(); }
  bool is_zero() const { return elements_.empty(); }

  Polynomial normal_form(const Polynomial& p) const {
    if (p.nvars() != nvars_) throw DimensionError("polynomial is not in the basis ring");
    std::vector<const detail::OrderedTerms*> divs;
    for (const auto& e : ordered_) divs.push_back(&e);
    return detail::from_ordered(nvars_, detail::reduce_full(detail::to_ordered(p, order_), divs, order_));
  }

  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }

  bool is_standard(const Monomial& m) const {
    return std::none_of(leads_.begin(), leads_.end(), [&](const Monomial& l) { return l.divides(m); });
  }

  bool operator==(const ReducedGB& o) const {
    return nvars_ == o.nvars_ && order_ == o.order_ && elements_ == o.elements_;
  }

 private:
  MonomialOrder order_;
  std::size_t nvars_;
  std::vector<detail::OrderedTerms> ordered_;
  std::vector<Polynomial> elements_;
  std::vector<Monomial> leads_;
};

/// Buchberger's algorithm on raw generators; see `Ideal::groebner` for the
/// cached entry point.
inline ReducedGB compute_groebner(std::size_t nvars, const std::vector<Polynomial>& gens,
                                  const MonomialOrder& order) {
  using detail::OrderedTerms;
  if (order.nvars() != nvars) throw DimensionError("order has the wrong number of variables");

  struct Pair {
    std::size_t i, j;
    Monomial lcm;
  };

  std::vector<OrderedTerms> store;
  std::vector<std::size_t> active;
  std::vector<Pair> pairs;
  bool unit = false;

  auto lm = [&](std::size_t k) -> const Monomial& { return store[k].front().monomial; };

  auto update = [&](std::size_t h) {
    std::vector<Pair> candidates;
    for (std::size_t g : active) candidates.push_back({h, g, lm(h).lcm(lm(g))});
    std::vector<Pair> kept;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
      const Pair& p = candidates[c];
      bool redundant = false;
      if (!lm(h).coprime(lm(p.j))) {
        for (std::size_t r = c + 1; r < candidates.size() && !redundant; ++r)
          redundant = candidates[r].lcm.divides(p.lcm);
        for (const auto& q : kept)
          if (!redundant && q.lcm.divides(p.lcm)) redundant = true;
      }
      if (!redundant) kept.push_back(p);
    }
    std::vector<Pair> next;
    for (auto& p : pairs) {
      bool drop = lm(h).divides(p.lcm) && lm(p.i).lcm(lm(h)) != p.lcm && lm(h).lcm(lm(p.j)) != p.lcm;
      if (!drop) next.push_back(std::move(p));
    }
    for (auto& p : kept)
      if (!lm(h).coprime(lm(p.j))) next.push_back(std::move(p));
    pairs = std::move(next);
    std::vector<std::size_t> still;
    for (std::size_t g : active)
      if (!lm(h).divides(lm(g))) still.push_back(g);
    still.push_back(h);
    active = std::move(still);
  };

  auto reduce_by_active = [&](OrderedTerms p) {
    std::vector<const OrderedTerms*> divs;
    for (std::size_t g : active) divs.push_back(&store[g]);
    return detail::reduce_full(std::move(p), divs, order);
  };

  auto insert = [&](OrderedTerms h) {
    if (h.empty() || unit) return;
    detail::make_monic(h);
    if (h.front().monomial.is_one()) {
      unit = true;
      return;
    }
    store.push_back(std::move(h));
    update(store.size() - 1);
  };

  for (const auto& g : gens) {
    if (g.nvars() != nvars) throw DimensionError("generator is not in the ambient ring");
    if (g.is_zero()) continue;
    insert(reduce_by_active(detail::to_ordered(g, order)));
  }

  while (!pairs.empty() && !unit) {
    auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
      return order.compare(a.lcm, b.lcm) < 0;
    });
    Pair p = std::move(*best);
    pairs.erase(best);
    const OrderedTerms& f = store[p.i];
    const OrderedTerms& g = store[p.j];
    // S-polynomial: (lcm/lm f) f - (lcm/lm g) g, with f, g monic.
    OrderedTerms sf = f;
    Monomial mf = p.lcm.quotient(f.front().monomial);
    for (auto& t : sf) t.monomial = t.monomial * mf;
    OrderedTerms s = detail::subtract_multiple(sf, 1, Rational(1), p.lcm.quotient(g.front().monomial), g, order);
    insert(reduce_by_active(std::move(s)));
  }

  if (unit) {
    OrderedTerms one{{Monomial(nvars), Rational(1)}};
    return ReducedGB(order, nvars, {one});
  }

  // Inter-reduce the (already minimal) active set.
  std::vector<OrderedTerms> reduced;
  for (std::size_t k : active) {
    std::vector<const OrderedTerms*> others;
    for (std::size_t g : active)
      if (g != k) others.push_back(&store[g]);
    OrderedTerms head{store[k].front()};
    OrderedTerms tail(store[k].begin() + 1, store[k].end());
    OrderedTerms r = detail::reduce_full(std::move(tail), others, order);
    head.insert(head.end(), r.begin(), r.end());
    detail::make_monic(head);
    reduced.push_back(std::move(head));
  }
  return ReducedGB(order, nvars, std::move(reduced));
}

/// Ideal given by generators in a labeled polynomial ring. Reduced bases are
/// cached per monomial order; copies share the cache, and the cache guards
/// itself with a mutex so concurrent callers compute each basis once.
class Ideal {
 public:
  Ideal() : cache_(std::make_shared<Cache>()) {}
  Ideal(std::vector<std::string> labels, std::vector<Polynomial> generators)
      : labels_(std::move(labels)), cache_(std::make_shared<Cache>()) {
    for (auto& g : generators) {
      if (g.nvars() != labels_.size())
        throw DimensionError("generator has " + std::to_string(g.nvars()) + " variables, ring has " +
                             std::to_string(labels_.size()));
      if (!g.is_zero()) generators_.push_back(std::move(g));
    }
  }

  static Ideal zero(std::vector<std::string> labels) { return Ideal(std::move(labels), {}); }
  static Ideal unit(std::vector<std::string> labels) {
    std::size_t n = labels.size();
    return Ideal(std::move(labels), {Polynomial::constant(n, 1)});
  }
  /// The ideal generated by the variables with mask[e] == true.
  static Ideal variables(std::vector<std::string> labels, const std::vector<bool>& mask) {
    std::vector<Polynomial> g;
    for (std::size_t i = 0; i < mask.size(); ++i)
      if (mask[i]) g.push_back(Polynomial::variable(labels.size(), i));
    return Ideal(std::move(labels), std::move(g));
  }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::size_t nvars() const { return labels_.size(); }
  bool has_zero_generators() const { return generators_.empty(); }

  const ReducedGB& groebner(const MonomialOrder& order) const {
    std::lock_guard<std::mutex> lock(cache_->mutex);
    auto it = cache_->bases.find(order.descriptor());
    if (it != cache_->bases.end()) return *it->second;
    auto gb = std::make_unique<ReducedGB>(compute_groebner(nvars(), generators_, order));
    return *cache_->bases.emplace(order.descriptor(), std::move(gb)).first->second;
  }
  const ReducedGB& groebner() const { return groebner(MonomialOrder::grevlex(nvars())); }

  bool is_standard_homogeneous() const {
    return std::all_of(generators_.begin(), generators_.end(),
                       [](const Polynomial& p) { return subinit::is_standard_homogeneous(p); });
  }
  bool is_unit() const { return groebner().is_unit(); }
  bool is_zero() const { return generators_.empty(); }
  bool contains(const Polynomial& p) const { return groebner().contains(p); }

  void require_same_ring(const Ideal& o) const {
    if (o.labels_ != labels_) throw DimensionError("ideals live in different rings");
  }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::string, std::unique_ptr<ReducedGB>> bases;
  };
  std::vector<std::string> labels_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

/// Graded dimensions dims[0..bound] of a homogeneous ideal.
struct GradedDims {
  std::vector<long> dims;
  int bound = 0;
  bool operator==(const GradedDims&) const = default;
};

inline Polynomial normal_form(const Polynomial& p, const ReducedGB& g) { return g.normal_form(p); }

inline const ReducedGB& reduced_groebner(const Ideal& ideal, const MonomialOrder& order) {
  return ideal.groebner(order);
}

/// J ⊆ I, decided by normal forms of J's generators modulo GB(I).
inline bool ideal_contains(const Ideal& big, const Ideal& small) {
  big.require_same_ring(small);
  const auto& gb = big.groebner();
  return std::all_of(small.generators().begin(), small.generators().end(),
                     [&](const Polynomial& p) { return gb.contains(p); });
}

inline bool ideal_equal(const Ideal& a, const Ideal& b) {
  a.require_same_ring(b);
  return a.groebner().elements() == b.groebner().elements();
}

inline Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  a.require_same_ring(b);
  auto g = a.generators();
  g.insert(g.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.labels(), std::move(g));
}

inline Ideal ideal_product(const Ideal& a, const Ideal& b) {
  a.require_same_ring(b);
  std::vector<Polynomial> g;
  for (const auto& p : a.generators())
    for (const auto& q : b.generators()) g.push_back(p * q);
  return Ideal(a.labels(), std::move(g));
}

inline Ideal initial_ideal(const Ideal& ideal, const WeightVector& w) {
  w.check_size(ideal.nvars());
  if (!ideal.is_standard_homogeneous())
    throw PreconditionError("initial_ideal requires an ideal homogeneous in the standard grading");
  auto order = MonomialOrder::weighted(w, MonomialOrder::grevlex(ideal.nvars()));
  std::vector<Polynomial> forms;
  for (const auto& g : ideal.groebner(order).elements()) forms.push_back(initial_form(g, w));
  return Ideal(ideal.labels(), std::move(forms));
}

/// I ∩ Q[x_e : drop[e] == false], via a block order with the dropped
/// variables in front. The result lives in the full ring.
inline Ideal eliminate(const Ideal& ideal, const std::vector<bool>& drop) {
  if (drop.size() != ideal.nvars()) throw DimensionError("drop mask has the wrong length");
  if (std::none_of(drop.begin(), drop.end(), [](bool b) { return b; })) return ideal;
  std::vector<bool> keep(drop.size());
  for (std::size_t i = 0; i < drop.size(); ++i) keep[i] = !drop[i];
  std::vector<Polynomial> g;
  for (const auto& p : ideal.groebner(MonomialOrder::elimination(drop)).elements())
    if (p.supported_in(keep)) g.push_back(p);
  return Ideal(ideal.labels(), std::move(g));
}

namespace detail {

inline bool all_monomial(const Ideal& i) {
  return std::all_of(i.generators().begin(), i.generators().end(),
                     [](const Polynomial& p) { return p.is_monomial(); });
}

// Intersection of two monomial ideals: pairwise lcms, minimalized.
inline Ideal intersect_monomial(const Ideal& a, const Ideal& b) {
  std::vector<Monomial> lcms;
  for (const auto& p : a.generators())
    for (const auto& q : b.generators()) lcms.push_back(p.terms()[0].monomial.lcm(q.terms()[0].monomial));
  std::sort(lcms.begin(), lcms.end(), [](const Monomial& x, const Monomial& y) {
    return x.degree() != y.degree() ? x.degree() < y.degree() : x < y;
  });
  std::vector<Monomial> minimal;
  for (const auto& m : lcms)
    if (std::none_of(minimal.begin(), minimal.end(), [&](const Monomial& k) { return k.divides(m); }))
      minimal.push_back(m);
  std::vector<Polynomial> g;
  for (const auto& m : minimal) g.push_back(Polynomial::monomial(m));
  return Ideal(a.labels(), std::move(g));
}

}  // namespace detail

/// I ∩ J by eliminating t from t·I + (1 - t)·J.
inline Ideal intersect_auxiliary(const Ideal& a, const Ideal& b) {
  a.require_same_ring(b);
  std::size_t n = a.nvars();
  Polynomial t = Polynomial::variable(n + 1, n);
  Polynomial one_minus_t = Polynomial::constant(n + 1, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& p : a.generators()) gens.push_back(t * p.resized(n + 1));
  for (const auto& q : b.generators()) gens.push_back(one_minus_t * q.resized(n + 1));
  std::vector<bool> drop(n + 1, false);
  drop[n] = true;
  auto gb = compute_groebner(n + 1, gens, MonomialOrder::elimination(drop));
  std::vector<bool> keep(n + 1, true);
  keep[n] = false;
  std::vector<Polynomial> out;
  for (const auto& p : gb.elements())
    if (p.supported_in(keep)) out.push_back(p.resized(n));
  return Ideal(a.labels(), std::move(out));
}

/// I ∩ J. Nested pairs and pairs of monomial ideals are handled directly
/// (the latter generated by pairwise lcms); everything else uses the
/// auxiliary variable.
inline Ideal intersect(const Ideal& a, const Ideal& b) {
  a.require_same_ring(b);
  if (a.is_zero() || b.is_zero()) return Ideal::zero(a.labels());
  if (detail::all_monomial(a) && detail::all_monomial(b)) return detail::intersect_monomial(a, b);
  if (ideal_contains(b, a)) return a;
  if (ideal_contains(a, b)) return b;
  return intersect_auxiliary(a, b);
}

/// Left fold of `intersect` over a non-empty list.
inline Ideal intersect_all(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw PreconditionError("intersection of an empty family");
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

/// Calls fn(m) for every monomial of total degree d in n variables.
inline void for_each_monomial(std::size_t n, int d, const std::function<void(const Monomial&)>& fn) {
  if (n == 0) {
    if (d == 0) fn(Monomial(0));
    return;
  }
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
    if (i + 1 == n) {
      e[i] = left;
      fn(Monomial(e));
      e[i] = 0;
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, d);
}

inline GradedDims graded_dimension(const Ideal& ideal, int bound) {
  if (bound < 0) throw PreconditionError("degree bound must be non-negative");
  if (!ideal.is_standard_homogeneous())
    throw PreconditionError("graded_dimension requires a homogeneous ideal");
  GradedDims out;
  out.bound = bound;
  const auto& gb = ideal.groebner();
  for (int d = 0; d <= bound; ++d) {
    long standard = 0, total = 0;
    for_each_monomial(ideal.nvars(), d, [&](const Monomial& m) {
      ++total;
      if (gb.is_standard(m)) ++standard;
    });
    out.dims.push_back(total - standard);
  }
  return out;
}

/// True iff the ideal contains a monomial: adjoin t and 1 - t·x1···xm and
/// test for the unit ideal (the saturation by the variable product).
inline bool contains_monomial(const Ideal& ideal) {
  if (ideal.is_zero()) return false;
  for (const auto& g : ideal.generators())
    if (g.is_monomial()) return true;
  std::size_t n = ideal.nvars();
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.resized(n + 1));
  std::vector<int> e(n + 1, 1);
  gens.push_back(Polynomial::constant(n + 1, 1) - Polynomial::monomial(Monomial(e)));
  return compute_groebner(n + 1, gens, MonomialOrder::grevlex(n + 1)).is_unit();
}

}  // namespace subinit

#pragma once

// Example families: toric ideals, Plücker ideals of Gr(2,n), hypersimplices,
// phylogenetic tree weights, matroid corank weights and random homogeneous
// ideals.

#include <algorithm>
#include <bit>
#include <cctype>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "subinit/configspace.hpp"
#include "subinit/errors.hpp"
#include "subinit/groebner.hpp"

namespace subinit {

/// Variable name for a configuration label: identifiers are kept, anything
/// else gets an "x" prefix (so label "3" becomes x3).
inline std::string variable_name(const std::string& label) {
  if (!label.empty() && (std::isalpha(static_cast<unsigned char>(label[0])) || label[0] == '_')) return label;
  return "x" + label;
}

/// Kernel of x_e -> t z^{a_e}. Coordinates are shifted to be non-negative,
/// which does not change the (homogeneous) kernel.
inline Ideal toric_ideal(const PointConfiguration& a) {
  std::size_t n = a.size(), d = a.ambient_dimension();
  std::vector<long> shift(d, 0);
  std::vector<std::vector<long>> pts(n, std::vector<long>(d));
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t j = 0; j < d; ++j) {
      const Rational& q = a.points(e, j);
      if (q.get_den() != 1 || !q.get_num().fits_slong_p())
        throw PreconditionError("toric ideals need integer coordinates");
      pts[e][j] = q.get_num().get_si();
      shift[j] = std::min(shift[j], pts[e][j]);
    }
  std::size_t total = n + 1 + d;
  std::vector<Polynomial> gens;
  for (std::size_t e = 0; e < n; ++e) {
    std::vector<int> ex(total, 0);
    ex[n] = 1;
    for (std::size_t j = 0; j < d; ++j) ex[n + 1 + j] = static_cast<int>(pts[e][j] - shift[j]);
    gens.push_back(Polynomial::variable(total, e) - Polynomial::monomial(Monomial(ex)));
  }
  std::vector<bool> drop(total, false);
  for (std::size_t i = n; i < total; ++i) drop[i] = true;
  std::vector<bool> keep(total, true);
  for (std::size_t i = n; i < total; ++i) keep[i] = false;
  std::vector<Polynomial> out;
  auto gb = compute_groebner(total, gens, MonomialOrder::elimination(drop));
  for (const auto& p : gb.elements())
    if (p.supported_in(keep)) out.push_back(p.resized(n));
  std::vector<std::string> labels;
  for (const auto& l : a.labels) labels.push_back(variable_name(l));
  return Ideal(std::move(labels), std::move(out));
}

/// k-subsets of {1..n} in lexicographic order.
inline std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

inline std::string subset_label(const std::vector<std::size_t>& s) {
  std::string l = "x[";
  for (std::size_t i = 0; i < s.size(); ++i) l += (i ? "," : "") + std::to_string(s[i]);
  return l + "]";
}

/// Indicator vectors of the k-subsets of [n], labeled x[i,j,...].
inline PointConfiguration hypersimplex_config(std::size_t k, std::size_t n) {
  if (k < 1 || k >= n) throw PreconditionError("hypersimplex needs 1 <= k < n");
  auto subs = k_subsets(n, k);
  RationalMatrix pts(subs.size(), n);
  std::vector<std::string> labels;
  for (std::size_t r = 0; r < subs.size(); ++r) {
    for (auto i : subs[r]) pts(r, i - 1) = 1;
    labels.push_back(subset_label(subs[r]));
  }
  return PointConfiguration(std::move(labels), std::move(pts));
}

/// Index of the pair {i, j} (1-based, i < j) among the 2-subsets of [n].
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n) {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > n || i == j) throw PreconditionError("invalid pair");
  return (i - 1) * n - (i - 1) * i / 2 + (j - i - 1);
}

/// Ideal of the three-term Plücker relations on the variables x[i,j].
inline Ideal plucker_ideal(std::size_t k, std::size_t n) {
  if (k != 2) throw UnsupportedError("Plücker ideals are only generated for k = 2");
  if (n < 4) throw PreconditionError("Plücker ideal needs n >= 4");
  std::vector<std::string> labels;
  for (const auto& s : k_subsets(n, 2)) labels.push_back(subset_label(s));
  std::size_t m = labels.size();
  auto x = [&](std::size_t i, std::size_t j) { return Polynomial::variable(m, pair_index(i, j, n)); };
  std::vector<Polynomial> gens;
  for (const auto& q : k_subsets(n, 4)) {
    auto [i, j, kk, l] = std::tie(q[0], q[1], q[2], q[3]);
    gens.push_back(x(i, j) * x(kk, l) - x(i, kk) * x(j, l) + x(i, l) * x(j, kk));
  }
  return Ideal(std::move(labels), std::move(gens));
}

/// Unit square with points 1, 2 diagonally opposite, labeled x1..x4.
inline PointConfiguration square_config() {
  return PointConfiguration({"x1", "x2", "x3", "x4"},
                            RationalMatrix::from_rows({{0, 0}, {1, 1}, {1, 0}, {0, 1}}, 2));
}

/// Weighted tree. Vertices 0..n-1 are the leaves labeled 1..n.
struct Tree {
  struct Edge {
    std::size_t u, v;
    Rational weight;
  };
  std::size_t leaves = 0;
  std::size_t vertices = 0;
  std::vector<Edge> edges;

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(vertices, 0);
    for (const auto& e : edges) {
      ++d[e.u];
      ++d[e.v];
    }
    return d;
  }
  std::size_t non_leaf_count() const { return vertices - leaves; }
  bool is_leaf_edge(const Edge& e) const { return e.u < leaves || e.v < leaves; }

  /// Connected, acyclic, leaves of degree one, no degree-two vertices and
  /// positive weights on edges between non-leaf vertices.
  void validate() const {
    if (leaves < 2) throw PreconditionError("tree needs at least two leaves");
    if (edges.size() + 1 != vertices) throw PreconditionError("tree must have |V| - 1 edges");
    for (const auto& e : edges)
      if (e.u >= vertices || e.v >= vertices || e.u == e.v) throw PreconditionError("invalid edge endpoints");
    auto d = degrees();
    for (std::size_t v = 0; v < vertices; ++v) {
      if (v < leaves && d[v] != 1) throw PreconditionError("leaf " + std::to_string(v + 1) + " is not a leaf");
      if (v >= leaves && d[v] < 3) throw PreconditionError("non-leaf vertex of degree below three");
    }
    for (const auto& e : edges)
      if (!is_leaf_edge(e) && e.weight <= 0) throw PreconditionError("internal edge weights must be positive");
    std::vector<bool> seen(vertices, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (const auto& e : edges) {
        std::size_t o = e.u == v ? e.v : e.v == v ? e.u : vertices;
        if (o < vertices && !seen[o]) {
          seen[o] = true;
          ++count;
          stack.push_back(o);
        }
      }
    }
    if (count != vertices) throw PreconditionError("tree is not connected");
  }
};

/// w_{ij} = total edge weight on the path between leaves i and j, indexed
/// like the variables x[i,j].
inline WeightVector tree_weight(const Tree& t, std::size_t n) {
  if (t.leaves != n) throw PreconditionError("tree leaves must be labeled exactly 1..n");
  t.validate();
  std::vector<std::vector<std::pair<std::size_t, Rational>>> adj(t.vertices);
  for (const auto& e : t.edges) {
    adj[e.u].emplace_back(e.v, e.weight);
    adj[e.v].emplace_back(e.u, e.weight);
  }
  std::vector<Rational> w(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> dist(t.vertices);
    std::vector<bool> seen(t.vertices, false);
    std::vector<std::size_t> stack{i};
    seen[i] = true;
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (const auto& [o, wt] : adj[v])
        if (!seen[o]) {
          seen[o] = true;
          dist[o] = dist[v] + wt;
          stack.push_back(o);
        }
    }
    for (std::size_t j = i + 1; j < n; ++j) w[pair_index(i + 1, j + 1, n)] = dist[j];
  }
  return WeightVector(std::move(w));
}

/// Initial forms here keep the terms of minimal weight, so it is the negated
/// tree metric that lies on the tropical Grassmannian.
inline WeightVector tropical_tree_weight(const Tree& t, std::size_t n) { return -tree_weight(t, n); }

/// Random tree with n leaves: a random binary tree, then each internal edge
/// contracted with probability 1/3. Internal weights in [1, range], leaf
/// weights in [-range, range].
template <class Rng>
Tree random_phylogenetic_tree(std::size_t n, long range, Rng& rng) {
  if (n < 3) throw PreconditionError("random trees need at least three leaves");
  std::vector<std::pair<std::size_t, std::size_t>> e;
  std::size_t next = n;
  std::size_t center = next++;
  for (std::size_t i = 0; i < 3; ++i) e.emplace_back(i, center);
  for (std::size_t leaf = 3; leaf < n; ++leaf) {
    std::uniform_int_distribution<std::size_t> pick(0, e.size() - 1);
    auto [u, v] = e[pick(rng)];
    std::size_t mid = next++;
    e.erase(std::find(e.begin(), e.end(), std::make_pair(u, v)));
    e.emplace_back(u, mid);
    e.emplace_back(mid, v);
    e.emplace_back(leaf, mid);
  }
  // Contract internal edges: merge the higher-numbered endpoint into the other.
  std::bernoulli_distribution contract(1.0 / 3.0);
  for (std::size_t k = 0; k < e.size();) {
    auto [u, v] = e[k];
    if (u >= n && v >= n && contract(rng)) {
      std::size_t keep = std::min(u, v), gone = std::max(u, v);
      e.erase(e.begin() + static_cast<long>(k));
      for (auto& [a, b] : e) {
        if (a == gone) a = keep;
        if (b == gone) b = keep;
      }
    } else {
      ++k;
    }
  }
  std::set<std::size_t> internal;
  for (auto [u, v] : e) {
    if (u >= n) internal.insert(u);
    if (v >= n) internal.insert(v);
  }
  std::vector<std::size_t> rename(next, 0);
  std::size_t id = n;
  for (auto v : internal) rename[v] = id++;
  for (std::size_t i = 0; i < n; ++i) rename[i] = i;
  Tree t;
  t.leaves = n;
  t.vertices = id;
  std::uniform_int_distribution<long> inner(1, range), outer(-range, range);
  for (auto [u, v] : e) {
    bool leaf = u < n || v < n;
    t.edges.push_back({rename[u], rename[v], Rational(leaf ? outer(rng) : inner(rng))});
  }
  t.validate();
  return t;
}

/// Matroid of rank k on {1..n} given by its bases (as sorted 1-based lists).
struct MatroidBases {
  std::size_t n = 0, k = 0;
  std::vector<std::vector<std::size_t>> bases;

  std::uint64_t mask(const std::vector<std::size_t>& s) const {
    std::uint64_t m = 0;
    for (auto e : s) m |= std::uint64_t{1} << (e - 1);
    return m;
  }

  /// Non-empty, all bases k-subsets of [n], basis exchange holds.
  void validate() const {
    if (n == 0 || n > 63) throw PreconditionError("matroid ground set size must be in [1, 63]");
    if (bases.empty()) throw PreconditionError("matroid has no bases");
    std::set<std::uint64_t> bs;
    for (const auto& b : bases) {
      if (b.size() != k) throw PreconditionError("basis of the wrong size");
      for (auto e : b)
        if (e < 1 || e > n) throw PreconditionError("basis element out of range");
      bs.insert(mask(b));
    }
    for (auto b1 : bs)
      for (auto b2 : bs)
        for (std::size_t x = 0; x < n; ++x) {
          if (!((b1 >> x) & 1) || ((b2 >> x) & 1)) continue;
          bool ok = false;
          for (std::size_t y = 0; y < n && !ok; ++y)
            if (((b2 >> y) & 1) && !((b1 >> y) & 1))
              ok = bs.count((b1 & ~(std::uint64_t{1} << x)) | (std::uint64_t{1} << y)) > 0;
          if (!ok) throw PreconditionError("bases violate the exchange axiom");
        }
  }

  /// Size of a largest independent subset of s.
  std::size_t rank(const std::vector<std::size_t>& s) const {
    std::uint64_t m = mask(s);
    std::size_t best = 0;
    for (const auto& b : bases) best = std::max<std::size_t>(best, static_cast<std::size_t>(std::popcount(mask(b) & m)));
    return best;
  }
};

/// w_B = n - rk(B) over the k-subsets B of [n] in lexicographic order.
inline WeightVector corank_weight(const MatroidBases& m) {
  m.validate();
  std::vector<Rational> w;
  for (const auto& b : k_subsets(m.n, m.k)) w.emplace_back(static_cast<long>(m.n - m.rank(b)));
  return WeightVector(std::move(w));
}

/// All k-subsets of [n] as bases.
inline MatroidBases uniform_matroid(std::size_t k, std::size_t n) { return {n, k, k_subsets(n, k)}; }

/// Random homogeneous ideal: each generator homogeneous of degree in
/// [1, max_degree] with 1 to 3 terms and small integer coefficients.
template <class Rng>
Ideal random_homogeneous_ideal(std::size_t nvars, std::size_t ngens, int max_degree, Rng& rng) {
  std::uniform_int_distribution<int> deg(1, max_degree), terms(1, 3), coef(-3, 3);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  std::vector<Polynomial> gens;
  while (gens.size() < ngens) {
    int d = deg(rng);
    std::vector<Term> ts;
    int t = terms(rng);
    for (int i = 0; i < t; ++i) {
      std::vector<int> e(nvars, 0);
      for (int k = 0; k < d; ++k) ++e[var(rng)];
      int c = coef(rng);
      if (c != 0) ts.push_back({Monomial(e), Rational(c)});
    }
    auto p = Polynomial::from_terms(nvars, std::move(ts));
    if (!p.is_zero()) gens.push_back(std::move(p));
  }
  return Ideal(default_labels(nvars), std::move(gens));
}

/// Integer weight vector with entries uniform in [lo, hi].
template <class Rng>
WeightVector random_weight(std::size_t n, long lo, long hi, Rng& rng) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<long> v(n);
  for (auto& x : v) x = d(rng);
  return WeightVector::from_integers(v);
}

}  // namespace subinit

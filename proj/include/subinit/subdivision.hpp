#pragma once

// Regular subdivisions of labeled point configurations. Cells are label
// subsets (bitmasks), so coincident points are handled naturally: a cell
// contains every label attaining the minimum of f(a_e) + w_e.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subinit/configspace.hpp"
#include "subinit/errors.hpp"
#include "subinit/linalg.hpp"
#include "subinit/lp.hpp"

namespace subinit {

inline constexpr std::size_t max_labels = 64;

/// A set of label indices. Ordered lexicographically by the sorted member
/// lists, so {0,1} < {0,1,2} < {0,2}.
class Cell {
 public:
  Cell() = default;
  explicit Cell(std::uint64_t bits) : bits_(bits) {}
  static Cell of(const std::vector<std::size_t>& members) {
    std::uint64_t b = 0;
    for (auto e : members) {
      if (e >= max_labels) throw UnsupportedError("label index beyond 64");
      b |= std::uint64_t{1} << e;
    }
    return Cell(b);
  }
  static Cell full(std::size_t n) {
    if (n > max_labels) throw UnsupportedError("configurations with more than 64 points are not supported");
    return Cell(n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  std::uint64_t bits() const { return bits_; }
  std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  bool empty() const { return bits_ == 0; }
  bool contains(std::size_t e) const { return e < max_labels && ((bits_ >> e) & 1) != 0; }
  bool subset_of(Cell o) const { return (bits_ & ~o.bits_) == 0; }
  Cell operator&(Cell o) const { return Cell(bits_ & o.bits_); }
  Cell operator|(Cell o) const { return Cell(bits_ | o.bits_); }

  std::vector<std::size_t> members() const {
    std::vector<std::size_t> m;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) m.push_back(static_cast<std::size_t>(std::countr_zero(b)));
    return m;
  }
  /// Membership mask over n labels.
  std::vector<bool> mask(std::size_t n) const {
    std::vector<bool> m(n, false);
    for (auto e : members()) m[e] = true;
    return m;
  }

  bool operator==(const Cell&) const = default;
  std::strong_ordering operator<=>(const Cell& o) const {
    std::uint64_t x = bits_ ^ o.bits_;
    if (x == 0) return std::strong_ordering::equal;
    int i = std::countr_zero(x);
    // The lists agree below i; whoever holds i is smaller unless the other
    // list has already ended.
    if ((bits_ >> i) & 1) return (o.bits_ >> i) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return (bits_ >> i) != 0 ? std::strong_ordering::greater : std::strong_ordering::less;
  }

 private:
  std::uint64_t bits_ = 0;
};

using Signature = std::vector<Cell>;

inline std::vector<std::string> cell_labels(Cell c, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  for (auto e : c.members()) out.push_back(labels.at(e));
  return out;
}

struct Subdivision {
  std::vector<std::string> labels;
  std::vector<Cell> cells;    // every cell, sorted
  std::vector<Cell> maximal;  // sorted
  // (i, j): cells[i] is a facet of cells[j].
  std::vector<std::pair<std::size_t, std::size_t>> face_edges;
  // Labels lying in no cell, with the smallest cell whose hull contains them.
  std::map<std::size_t, Cell> uncovered;

  const Signature& signature() const { return maximal; }
  bool has_cell(Cell c) const { return std::binary_search(cells.begin(), cells.end(), c); }
  std::size_t index_of(Cell c) const {
    auto it = std::lower_bound(cells.begin(), cells.end(), c);
    if (it == cells.end() || *it != c) throw PreconditionError("not a cell of the subdivision");
    return static_cast<std::size_t>(it - cells.begin());
  }
  bool is_trivial() const { return maximal.size() == 1 && maximal.front() == Cell::full(labels.size()); }
};

struct AdjacencyEdge {
  std::size_t a, b;  // indices into nodes, a < b
  Cell shared;
};

struct AdjacencyGraph {
  std::vector<Cell> nodes;
  std::vector<AdjacencyEdge> edges;

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(nodes.size(), 0);
    for (const auto& e : edges) {
      ++d[e.a];
      ++d[e.b];
    }
    return d;
  }
  /// Some node is joined to every other node and every edge touches it.
  bool is_star() const {
    if (nodes.size() <= 1) return true;
    auto d = degrees();
    for (std::size_t c = 0; c < nodes.size(); ++c)
      if (d[c] == nodes.size() - 1 && edges.size() == nodes.size() - 1) return true;
    return false;
  }
};

enum class ConeMembership { interior, boundary, outside };

inline const char* to_string(ConeMembership m) {
  switch (m) {
    case ConeMembership::interior: return "interior";
    case ConeMembership::boundary: return "boundary";
    default: return "outside";
  }
}

/// Precomputed data for subdividing one configuration under many weights.
///
/// For each affinely spanning subset S of d'+1 labels the engine stores the
/// projector P_S = B B_S^{-1} (B a basis of L(A)) scaled to an integer matrix
/// Q_S / den_S. The affine function agreeing with -w on S then leaves the
/// slack den_S * w_e - (Q_S w_S)_e at label e.
class SubdivisionEngine {
 public:
  explicit SubdivisionEngine(PointConfiguration a) : a_(std::move(a)) {
    n_ = a_.size();
    if (n_ == 0) throw PreconditionError("empty point configuration");
    if (n_ > max_labels) throw UnsupportedError("configurations with more than 64 points are not supported");
    homog_ = a_.homogenized();
    basis_ = column_space_basis(homog_);
    r_ = basis_.cols();
    build_charts();
  }

  const PointConfiguration& config() const { return a_; }
  std::size_t size() const { return n_; }
  long affine_dimension() const { return static_cast<long>(r_) - 1; }
  const RationalMatrix& lineality_basis() const { return basis_; }
  std::size_t chart_count() const { return charts_.size(); }

  /// Maximal cells of subd_w(A), sorted.
  Signature maximal_cells(const WeightVector& w) const {
    w.check_size(n_);
    Integer l = lcm_of_denominators(w.entries());
    std::vector<Integer> wi(n_);
    bool small = true;
    const Integer limit = Integer(1) << 40;
    for (std::size_t e = 0; e < n_; ++e) {
      wi[e] = w[e].get_num() * (l / w[e].get_den());
      if (abs(wi[e]) >= limit) small = false;
    }
    std::vector<Cell> found;
    if (small) {
      std::vector<__int128> w128(n_);
      for (std::size_t e = 0; e < n_; ++e) w128[e] = wi[e].get_si();
      for (const auto& ch : charts_) {
        if (!ch.small) {
          exact_chart(ch, wi, found);
          continue;
        }
        std::uint64_t zero = 0;
        bool ok = true;
        for (std::size_t e = 0; e < n_ && ok; ++e) {
          __int128 v = static_cast<__int128>(ch.den64) * w128[e];
          const std::int64_t* q = &ch.q64[e * r_];
          for (std::size_t k = 0; k < r_; ++k) v -= static_cast<__int128>(q[k]) * w128[ch.s[k]];
          if (v < 0) ok = false;
          else if (v == 0) zero |= std::uint64_t{1} << e;
        }
        if (ok) found.emplace_back(zero);
      }
    } else {
      for (const auto& ch : charts_) exact_chart(ch, wi, found);
    }
    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    if (found.empty()) throw InvariantViolation("regular subdivision without maximal cells");
    return found;
  }

  /// All cells, Hasse face edges and uncovered labels of subd_w(A).
  Subdivision subdivide(const WeightVector& w) const { return from_maximal(maximal_cells(w)); }

  Subdivision from_maximal(const Signature& maximal) const {
    Subdivision s;
    s.labels = a_.labels;
    s.maximal = maximal;
    std::set<Cell> all;
    for (auto m : maximal)
      for (auto f : faces(m)) all.insert(f);
    s.cells.assign(all.begin(), all.end());
    for (std::size_t j = 0; j < s.cells.size(); ++j)
      for (auto f : facets(s.cells[j])) s.face_edges.emplace_back(s.index_of(f), j);
    std::sort(s.face_edges.begin(), s.face_edges.end());
    Cell covered;
    for (auto m : maximal) covered = covered | m;
    std::vector<Cell> by_size = s.cells;
    std::stable_sort(by_size.begin(), by_size.end(), [](Cell x, Cell y) { return x.size() < y.size(); });
    for (std::size_t e = 0; e < n_; ++e) {
      if (covered.contains(e)) continue;
      bool placed = false;
      for (auto c : by_size)
        if (hull_contains(c, e)) {
          s.uncovered.emplace(e, c);
          placed = true;
          break;
        }
      if (!placed) throw InvariantViolation("label " + a_.labels[e] + " lies outside every cell");
    }
    return s;
  }

  /// Rank of the rows of [1 | A] indexed by the cell (affine dimension + 1).
  std::size_t cell_rank(Cell c) const { return rank(homog_.select_rows(c.members())); }

  /// Maximal proper faces of the configuration (a_e)_{e in c}.
  std::vector<Cell> facets(Cell c) const {
    {
      std::lock_guard<std::mutex> lock(memo_->mutex);
      auto it = memo_->facets.find(c.bits());
      if (it != memo_->facets.end()) return it->second;
    }
    auto result = compute_facets(c);
    std::lock_guard<std::mutex> lock(memo_->mutex);
    memo_->facets.emplace(c.bits(), result);
    return result;
  }

  /// c together with all of its proper non-empty faces, sorted.
  std::vector<Cell> faces(Cell c) const {
    std::set<Cell> seen{c};
    std::vector<Cell> stack{c};
    while (!stack.empty()) {
      Cell cur = stack.back();
      stack.pop_back();
      for (auto f : facets(cur))
        if (seen.insert(f).second) stack.push_back(f);
    }
    return {seen.begin(), seen.end()};
  }

  bool hull_contains(Cell c, std::size_t e) const {
    std::vector<std::vector<Rational>> pts;
    for (auto m : c.members()) pts.push_back(a_.point(m));
    return in_convex_hull(pts, a_.point(e)).feasible;
  }

  /// A codimension-one cell is interior when the affine function vanishing
  /// on it takes both signs on A.
  bool is_interior_codim1(Cell c) const {
    auto k = kernel_basis(basis_.select_rows(c.members()));
    if (k.cols() != 1) return false;
    auto f = basis_ * k;
    bool pos = false, neg = false;
    for (std::size_t e = 0; e < n_; ++e) {
      if (f(e, 0) > 0) pos = true;
      if (f(e, 0) < 0) neg = true;
    }
    return pos && neg;
  }

 private:
  struct Chart {
    std::vector<std::size_t> s;
    Integer den;
    std::vector<Integer> q;  // n x r, row-major
    bool small = false;
    std::int64_t den64 = 0;
    std::vector<std::int64_t> q64;
  };
  struct Memo {
    std::mutex mutex;
    std::unordered_map<std::uint64_t, std::vector<Cell>> facets;
  };

  void build_charts() {
    std::vector<std::size_t> idx(r_);
    const Integer limit = Integer(1) << 40;
    auto visit = [&]() {
      auto inv = inverse(basis_.select_rows(idx));
      if (!inv) return;
      RationalMatrix p = basis_ * *inv;
      Chart ch;
      ch.s = idx;
      ch.den = 1;
      for (std::size_t e = 0; e < n_; ++e)
        for (std::size_t k = 0; k < r_; ++k)
          mpz_lcm(ch.den.get_mpz_t(), ch.den.get_mpz_t(), p(e, k).get_den_mpz_t());
      ch.q.resize(n_ * r_);
      ch.small = ch.den < limit;
      for (std::size_t e = 0; e < n_; ++e)
        for (std::size_t k = 0; k < r_; ++k) {
          Integer v = p(e, k).get_num() * (ch.den / p(e, k).get_den());
          if (abs(v) >= limit) ch.small = false;
          ch.q[e * r_ + k] = v;
        }
      if (ch.small) {
        ch.den64 = ch.den.get_si();
        for (const auto& v : ch.q) ch.q64.push_back(v.get_si());
      }
      charts_.push_back(std::move(ch));
    };
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
      if (pos == r_) {
        visit();
        return;
      }
      for (std::size_t e = start; e + (r_ - pos) <= n_; ++e) {
        idx[pos] = e;
        rec(pos + 1, e + 1);
      }
    };
    rec(0, 0);
  }

  void exact_chart(const Chart& ch, const std::vector<Integer>& w, std::vector<Cell>& found) const {
    std::uint64_t zero = 0;
    for (std::size_t e = 0; e < n_; ++e) {
      Integer v = ch.den * w[e];
      for (std::size_t k = 0; k < r_; ++k) v -= ch.q[e * r_ + k] * w[ch.s[k]];
      if (v < 0) return;
      if (v == 0) zero |= std::uint64_t{1} << e;
    }
    found.emplace_back(zero);
  }

  std::vector<Cell> compute_facets(Cell c) const {
    auto members = c.members();
    RationalMatrix hc = homog_.select_rows(members);
    RationalMatrix bc = column_space_basis(hc);
    std::size_t rc = bc.cols();
    std::vector<Cell> out;
    if (rc <= 1) return out;
    std::size_t k = members.size();
    std::vector<std::size_t> t(rc - 1);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
      if (pos == t.size()) {
        std::uint64_t tb = 0;
        for (auto i : t) tb |= std::uint64_t{1} << members[i];
        for (auto f : out)
          if ((tb & ~f.bits()) == 0) return;
        auto ker = kernel_basis(bc.select_rows(t));
        if (ker.cols() != 1) return;
        auto f = bc * ker;
        bool pos_seen = false, neg_seen = false;
        std::uint64_t zero = 0;
        for (std::size_t i = 0; i < k; ++i) {
          if (f(i, 0) > 0) pos_seen = true;
          else if (f(i, 0) < 0) neg_seen = true;
          else zero |= std::uint64_t{1} << members[i];
        }
        if (pos_seen && neg_seen) return;
        out.emplace_back(zero);
        return;
      }
      for (std::size_t i = start; i + (t.size() - pos) <= k; ++i) {
        t[pos] = i;
        rec(pos + 1, i + 1);
      }
    };
    rec(0, 0);
    std::sort(out.begin(), out.end());
    return out;
  }

  PointConfiguration a_;
  std::size_t n_ = 0, r_ = 0;
  RationalMatrix homog_, basis_;
  std::vector<Chart> charts_;
  std::shared_ptr<Memo> memo_ = std::make_shared<Memo>();
};

inline Subdivision regular_subdivision(const PointConfiguration& a, const WeightVector& w) {
  w.check_size(a.size());
  return SubdivisionEngine(a).subdivide(w);
}

inline std::vector<Cell> faces_of_cell(const PointConfiguration& a, Cell c) {
  if (c.empty() || !c.subset_of(Cell::full(a.size()))) throw PreconditionError("cell is not a subset of the labels");
  return SubdivisionEngine(a).faces(c);
}

/// Every cell of t1 lies in some cell of t2.
inline bool refines(const Subdivision& t1, const Subdivision& t2) {
  if (t1.labels != t2.labels) throw PreconditionError("subdivisions of different configurations");
  return std::all_of(t1.cells.begin(), t1.cells.end(), [&](Cell c) {
    return std::any_of(t2.maximal.begin(), t2.maximal.end(), [&](Cell m) { return c.subset_of(m); });
  });
}

inline ConeMembership in_secondary_cone(const SubdivisionEngine& engine, const Subdivision& t, const WeightVector& w) {
  auto s = engine.subdivide(w);
  if (s.maximal == t.maximal) return ConeMembership::interior;
  if (refines(t, s)) return ConeMembership::boundary;
  return ConeMembership::outside;
}

inline ConeMembership in_secondary_cone(const PointConfiguration& a, const Subdivision& t, const WeightVector& w) {
  return in_secondary_cone(SubdivisionEngine(a), t, w);
}

inline AdjacencyGraph adjacency_graph(const SubdivisionEngine& engine, const Subdivision& t) {
  AdjacencyGraph g;
  g.nodes = t.maximal;
  std::size_t r = static_cast<std::size_t>(engine.affine_dimension()) + 1;
  for (auto c : t.cells) {
    if (engine.cell_rank(c) + 1 != r || !engine.is_interior_codim1(c)) continue;
    std::vector<std::size_t> holders;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
      if (c.subset_of(g.nodes[i])) holders.push_back(i);
    if (holders.size() != 2)
      throw InvariantViolation("interior codimension-one cell lies in " + std::to_string(holders.size()) +
                               " maximal cells");
    g.edges.push_back({holders[0], holders[1], c});
  }
  return g;
}

inline AdjacencyGraph adjacency_graph(const PointConfiguration& a, const Subdivision& t) {
  return adjacency_graph(SubdivisionEngine(a), t);
}

/// Maximal cells together with the interior codimension-one cells, sorted.
inline std::vector<Cell> kappa_cells(const SubdivisionEngine& engine, const Subdivision& t) {
  std::set<Cell> out(t.maximal.begin(), t.maximal.end());
  for (const auto& e : adjacency_graph(engine, t).edges) out.insert(e.shared);
  return {out.begin(), out.end()};
}

inline std::vector<Cell> kappa_cells(const PointConfiguration& a, const Subdivision& t) {
  return kappa_cells(SubdivisionEngine(a), t);
}

}  // namespace subinit

#pragma once

// Lower and upper bounds for initial ideals read off from the regular
// subdivisions subd_w A(I) and subd_{-w} A(I).

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "subinit/configspace.hpp"
#include "subinit/errors.hpp"
#include "subinit/groebner.hpp"
#include "subinit/linalg.hpp"
#include "subinit/subdivision.hpp"

namespace subinit {

inline std::vector<bool> complement_mask(Cell c, std::size_t n) {
  std::vector<bool> m(n);
  for (std::size_t e = 0; e < n; ++e) m[e] = !c.contains(e);
  return m;
}

/// I_c: images of the generators under x_e -> 0 for e outside c.
inline Ideal project_ideal(const Ideal& ideal, Cell c) {
  std::vector<Polynomial> g;
  auto keep = c.mask(ideal.nvars());
  for (const auto& p : ideal.generators()) g.push_back(p.project(keep));
  return Ideal(ideal.labels(), std::move(g));
}

/// I^c = I ∩ Q[x_e : e in c].
inline Ideal restrict_ideal(const Ideal& ideal, Cell c) {
  return eliminate(ideal, complement_mask(c, ideal.nvars()));
}

/// I^c + <x_e : e not in c>.
inline Ideal lifted_restriction(const Ideal& ideal, Cell c) {
  auto out = complement_mask(c, ideal.nvars());
  return ideal_sum(restrict_ideal(ideal, c), Ideal::variables(ideal.labels(), out));
}

struct SandwichReport {
  WeightVector w;
  Ideal lower, initial, upper;
  bool lower_exact = false, upper_exact = false;
  Subdivision theta, theta_star;
};

/// Per-ideal state shared by all bound computations: A(I), its subdivision
/// engine, and caches of the restricted ideals. Safe to share across threads.
class BoundsContext {
 public:
  explicit BoundsContext(Ideal ideal)
      : ideal_(std::move(ideal)),
        config_(point_configuration_of_ideal(ideal_)),
        engine_(std::make_shared<SubdivisionEngine>(config_)),
        cache_(std::make_shared<Cache>()) {}

  const Ideal& ideal() const { return ideal_; }
  const PointConfiguration& config() const { return config_; }
  const SubdivisionEngine& engine() const { return *engine_; }
  std::size_t nvars() const { return ideal_.nvars(); }

  Subdivision theta(const WeightVector& w) const {
    w.check_size(nvars());
    return engine_->subdivide(w);
  }
  Subdivision theta_star(const WeightVector& w) const {
    w.check_size(nvars());
    return engine_->subdivide(-w);
  }

  Ideal projected(Cell c) const { return project_ideal(ideal_, c); }

  /// I^c. Computed from the restriction to the smallest cached superset of
  /// c, which gives the same ideal since (I ∩ Q[Γ]) ∩ Q[c] = I ∩ Q[c].
  Ideal restricted(Cell c) const {
    const Ideal* parent = &ideal_;
    Cell parent_cell = Cell::full(nvars());
    {
      std::lock_guard<std::mutex> lock(cache_->mutex);
      auto it = cache_->restricted.find(c.bits());
      if (it != cache_->restricted.end()) return it->second;
      for (const auto& [bits, ideal] : cache_->restricted) {
        Cell b(bits);
        if (c.subset_of(b) && b.size() < parent_cell.size()) {
          parent = &ideal;
          parent_cell = b;
        }
      }
    }
    // Map entries are never erased, so the parent reference stays valid.
    Ideal r = parent->is_zero() ? Ideal::zero(ideal_.labels())
                                : eliminate(*parent, complement_mask(c, nvars()));
    std::lock_guard<std::mutex> lock(cache_->mutex);
    return cache_->restricted.emplace(c.bits(), std::move(r)).first->second;
  }

  Ideal lifted(Cell c) const {
    return ideal_sum(restricted(c), Ideal::variables(ideal_.labels(), complement_mask(c, nvars())));
  }

  Ideal lower_from(const std::vector<Cell>& cells) const {
    std::vector<Polynomial> g;
    for (auto c : cells) {
      Ideal part = projected(c);
      g.insert(g.end(), part.generators().begin(), part.generators().end());
    }
    return Ideal(ideal_.labels(), std::move(g));
  }

  Ideal upper_from(const std::vector<Cell>& cells) const {
    std::vector<Ideal> parts;
    for (auto c : cells) parts.push_back(lifted(c));
    return intersect_all(parts);
  }

  Ideal lower(const WeightVector& w) const { return lower_from(theta(w).maximal); }
  Ideal upper(const WeightVector& w) const { return upper_from(theta_star(w).maximal); }
  Ideal initial(const WeightVector& w) const { return initial_ideal(ideal_, w); }

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::uint64_t, Ideal> restricted;
  };
  Ideal ideal_;
  PointConfiguration config_;
  std::shared_ptr<SubdivisionEngine> engine_;
  std::shared_ptr<Cache> cache_;
};

inline Ideal lower_bound_ideal(const Ideal& ideal, const WeightVector& w) { return BoundsContext(ideal).lower(w); }
inline Ideal upper_bound_ideal(const Ideal& ideal, const WeightVector& w) { return BoundsContext(ideal).upper(w); }

/// I_w ⊆ in_w I ⊆ I^w with exactness flags. A failed inclusion is a bug and
/// raises InvariantViolation.
inline SandwichReport sandwich(const BoundsContext& ctx, const WeightVector& w) {
  SandwichReport r;
  r.w = w;
  r.theta = ctx.theta(w);
  r.theta_star = ctx.theta_star(w);
  r.lower = ctx.lower_from(r.theta.maximal);
  r.initial = ctx.initial(w);
  r.upper = ctx.upper_from(r.theta_star.maximal);
  if (!ideal_contains(r.initial, r.lower))
    throw InvariantViolation("lower bound is not contained in the initial ideal for w = [" + w.to_csv() + "]");
  if (!ideal_contains(r.upper, r.initial))
    throw InvariantViolation("initial ideal is not contained in the upper bound for w = [" + w.to_csv() + "]");
  r.lower_exact = ideal_equal(r.lower, r.initial);
  r.upper_exact = ideal_equal(r.upper, r.initial);
  return r;
}

inline SandwichReport sandwich(const Ideal& ideal, const WeightVector& w) { return sandwich(BoundsContext(ideal), w); }

inline bool omega_member(const Ideal& ideal, const WeightVector& w) { return sandwich(ideal, w).lower_exact; }
inline bool omega_star_member(const Ideal& ideal, const WeightVector& w) { return sandwich(ideal, w).upper_exact; }

/// The lower bound summed over all cells, the maximal cells and the
/// K(Θ) cells agree; the upper bound intersected over all cells and over
/// the maximal cells of Θ* agree.
inline bool kappa_reduction_check(const BoundsContext& ctx, const WeightVector& w) {
  auto theta = ctx.theta(w);
  auto over_all = ctx.lower_from(theta.cells);
  auto over_max = ctx.lower_from(theta.maximal);
  auto over_kappa = ctx.lower_from(kappa_cells(ctx.engine(), theta));
  if (!ideal_equal(over_all, over_max) || !ideal_equal(over_max, over_kappa)) return false;
  auto star = ctx.theta_star(w);
  // Maximal cells first, so the remaining intersections are mostly nested.
  std::vector<Cell> ordered = star.maximal;
  for (auto c : star.cells)
    if (!std::binary_search(star.maximal.begin(), star.maximal.end(), c)) ordered.push_back(c);
  return ideal_equal(ctx.upper_from(ordered), ctx.upper_from(star.maximal));
}

inline bool kappa_reduction_check(const Ideal& ideal, const WeightVector& w) {
  return kappa_reduction_check(BoundsContext(ideal), w);
}

/// Generators of I_Δ lie in in_w I for every maximal Δ of Θ, and in_w I lies
/// in Ĩ^Δ for every maximal Δ of Θ*.
inline bool verify_initial_membership_props(const BoundsContext& ctx, const WeightVector& w) {
  auto in_w = ctx.initial(w);
  for (auto c : ctx.theta(w).maximal)
    if (!ideal_contains(in_w, ctx.projected(c))) return false;
  for (auto c : ctx.theta_star(w).maximal)
    if (!ideal_contains(ctx.lifted(c), in_w)) return false;
  return true;
}

inline bool verify_initial_membership_props(const Ideal& ideal, const WeightVector& w) {
  return verify_initial_membership_props(BoundsContext(ideal), w);
}

/// For faces Δ ⊂ Γ of Θ: I_Δ = I_Γ ∩ Q[Δ].
inline bool projection_face_compatible(const BoundsContext& ctx, const Subdivision& theta) {
  std::size_t n = ctx.nvars();
  for (auto [i, j] : theta.face_edges) {
    Cell d = theta.cells[i], g = theta.cells[j];
    std::vector<bool> drop(n, false);
    for (std::size_t e = 0; e < n; ++e) drop[e] = g.contains(e) && !d.contains(e);
    if (!ideal_equal(ctx.projected(d), eliminate(ctx.projected(g), drop))) return false;
  }
  return true;
}

/// For faces Δ ⊂ Γ of Θ*: the image of I^Γ under x_e -> 0 (e in Γ \ Δ) is I^Δ.
inline bool restriction_face_compatible(const Ideal& ideal, const Subdivision& theta_star) {
  for (auto [i, j] : theta_star.face_edges) {
    Cell d = theta_star.cells[i], g = theta_star.cells[j];
    if (!ideal_equal(project_ideal(restrict_ideal(ideal, g), d), restrict_ideal(ideal, d))) return false;
  }
  return true;
}

/// Dimension comparison in degree d between the limit of the diagram
/// Δ -> (Q[Δ]/I^Δ)_d over the K(Θ*) cells and (S/I^w)_d.
struct LimitDimensions {
  long limit = 0;     // dimension of the space of compatible tuples
  long quotient = 0;  // dim (S / I^w)_d
};

inline LimitDimensions limit_dimensions(const BoundsContext& ctx, const WeightVector& w, int d) {
  if (d < 0) throw PreconditionError("degree must be non-negative");
  std::size_t n = ctx.nvars();
  auto star = ctx.theta_star(w);
  auto graph = adjacency_graph(ctx.engine(), star);

  auto standard_basis = [&](Cell c) {
    const auto& gb = ctx.restricted(c).groebner();
    std::vector<Monomial> basis;
    auto keep = c.mask(n);
    for_each_monomial(n, d, [&](const Monomial& m) {
      if (m.supported_in(keep) && gb.is_standard(m)) basis.push_back(m);
    });
    return basis;
  };

  std::vector<std::vector<Monomial>> node_basis;
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (auto c : graph.nodes) {
    offset.push_back(total);
    node_basis.push_back(standard_basis(c));
    total += node_basis.back().size();
  }

  std::vector<std::vector<Rational>> rows;
  for (const auto& edge : graph.edges) {
    Cell f = edge.shared;
    auto fbasis = standard_basis(f);
    std::map<Monomial, std::size_t> fpos;
    for (std::size_t i = 0; i < fbasis.size(); ++i) fpos[fbasis[i]] = i;
    const auto& fgb = ctx.restricted(f).groebner();
    auto keep = f.mask(n);
    std::vector<std::vector<Rational>> block(fbasis.size(), std::vector<Rational>(total, 0));
    auto add_image = [&](std::size_t node, int sign) {
      for (std::size_t k = 0; k < node_basis[node].size(); ++k) {
        const auto& m = node_basis[node][k];
        if (!m.supported_in(keep)) continue;
        auto nf = fgb.normal_form(Polynomial::monomial(m));
        for (const auto& t : nf.terms()) block[fpos.at(t.monomial)][offset[node] + k] += sign * t.coefficient;
      }
    };
    add_image(edge.a, 1);
    add_image(edge.b, -1);
    for (auto& r : block) rows.push_back(std::move(r));
  }
  LimitDimensions out;
  out.limit = static_cast<long>(total) - static_cast<long>(rows.empty() ? 0 : rank(RationalMatrix::from_rows(rows, total)));
  auto upper = ctx.upper_from(star.maximal);
  long all = 0;
  for_each_monomial(n, d, [&](const Monomial&) { ++all; });
  out.quotient = all - graded_dimension(upper, d).dims[static_cast<std::size_t>(d)];
  return out;
}

inline bool verify_limit_decomposition(const BoundsContext& ctx, const WeightVector& w, int d) {
  auto dims = limit_dimensions(ctx, w, d);
  return dims.limit == dims.quotient;
}

inline bool verify_limit_decomposition(const Ideal& ideal, const WeightVector& w, int d) {
  return verify_limit_decomposition(BoundsContext(ideal), w, d);
}

}  // namespace subinit

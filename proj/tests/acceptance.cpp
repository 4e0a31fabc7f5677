// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits are fixed below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <string>

#include "oracle.hpp"
#include "subinit/subinit.hpp"

using namespace subinit;

namespace {

constexpr double kWorkedExampleSeconds = 1.0;
constexpr double kGr24CensusSeconds = 30.0;
constexpr double kGr25CensusSeconds = 15.0 * 60.0;
constexpr double kTreeSuiteSeconds = 5.0 * 60.0;

constexpr std::uint64_t kGr25Seed = 2024;
constexpr std::size_t kGr25Samples = 20000;
constexpr long kGr25Range = 10000;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects failure messages for one criterion.
struct Check {
  std::vector<std::string> failures;
  std::string info;
  void require(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

// (context, weight) pairs seen by criteria 1-7, replayed by criterion 10.
struct Instance {
  std::shared_ptr<BoundsContext> ctx;
  WeightVector w;
};
std::vector<Instance> g_instances;

Ideal ideal_of(const std::vector<std::string>& gens, std::size_t n) {
  auto labels = default_labels(n);
  std::vector<Polynomial> g;
  for (const auto& s : gens) g.push_back(parse_polynomial(s, labels));
  return Ideal(labels, g);
}

WeightVector W(std::vector<long> v) { return WeightVector::from_integers(v); }

std::string csv(const WeightVector& w) { return "(" + w.to_csv() + ")"; }

long monomial_count(std::size_t n, int d) {
  return binomial(n + static_cast<unsigned long>(d) - 1, static_cast<unsigned long>(d)).get_si();
}

void criterion_worked_examples(Check& c) {
  auto ctx = std::make_shared<BoundsContext>(ideal_of({"x1*x2 - x3*x4"}, 4));
  struct Case {
    WeightVector w;
    std::string expected;
  };
  for (const auto& cs : {Case{W({0, 0, 1, 0}), "x1*x2"}, Case{W({1, 0, 0, 0}), "x3*x4"}}) {
    auto t0 = Clock::now();
    auto expected = ideal_of({cs.expected}, 4);
    auto r = sandwich(*ctx, cs.w);
    double dt = seconds_since(t0);
    c.require(ideal_equal(r.lower, expected), "lower bound at " + csv(cs.w) + " is not <" + cs.expected + ">");
    c.require(ideal_equal(r.initial, expected), "initial ideal at " + csv(cs.w) + " is not <" + cs.expected + ">");
    c.require(ideal_equal(r.upper, expected), "upper bound at " + csv(cs.w) + " is not <" + cs.expected + ">");
    c.require(dt < kWorkedExampleSeconds, "weight " + csv(cs.w) + " took " + std::to_string(dt) + " s");
    g_instances.push_back({ctx, cs.w});
  }
}

void criterion_coincident_points(Check& c) {
  auto ctx = std::make_shared<BoundsContext>(ideal_of({"x1^2*x2 - x1*x2^2"}, 2));
  const auto& a = ctx->config();
  c.require(a.size() == 2 && a.point(0) == a.point(1), "A(I) is not two coincident points");
  auto w = W({0, 1});
  auto r = sandwich(*ctx, w);
  c.require(r.theta.cells == std::vector<Cell>{Cell::of({0})}, "theta is not the single cell {1}");
  c.require(r.lower.is_zero(), "lower bound is not the zero ideal");
  c.require(!r.lower_exact, "lower bound reported exact");
  g_instances.push_back({ctx, w});
}

void criterion_pipeline(Check& c) {
  auto a24 = point_configuration_of_ideal(plucker_ideal(2, 4));
  c.require(affine_equivalent(a24, hypersimplex_config(2, 4)), "A(I_{2,4}) is not the hypersimplex");
  auto toric_sq = toric_ideal(square_config());
  c.require(affine_equivalent(point_configuration_of_ideal(toric_sq), square_config()),
            "A(square toric ideal) is not the square");
  std::vector<std::pair<std::string, Ideal>> fixtures{
      {"square binomial", ideal_of({"x1*x2 - x3*x4"}, 4)},
      {"coincident binomial", ideal_of({"x1^2*x2 - x1*x2^2"}, 2)},
      {"I_{2,4}", plucker_ideal(2, 4)},
      {"I_{2,5}", plucker_ideal(2, 5)},
      {"I_{2,6}", plucker_ideal(2, 6)},
      {"square toric", toric_sq},
      {"hypersimplex(2,4) toric", toric_ideal(hypersimplex_config(2, 4))},
      {"hypersimplex(2,5) toric", toric_ideal(hypersimplex_config(2, 5))}};
  for (const auto& [name, ideal] : fixtures) {
    auto l = lineality_space(ideal);
    c.require((lineality_matrix(ideal) * l.basis).is_zero(), name + ": N*M is not zero");
    c.require(l.contains_ones(), name + ": all-ones vector not in L(I)");
    c.require(lineality_of_config(point_configuration_of_ideal(ideal)).same_span(l), name + ": L(A(I)) != L(I)");
  }
}

void criterion_gr24_census(Check& c) {
  auto t0 = Clock::now();
  auto ctx = std::make_shared<BoundsContext>(plucker_ideal(2, 4));
  CensusOptions opt;
  opt.samples = 200;
  opt.range = 1000;
  opt.seed = kGr25Seed;
  auto res = census(*ctx, opt);
  double dt = seconds_since(t0);
  for (const auto& cl : res.classes) {
    c.require(cl.omega, "class with representative " + csv(cl.representative) + " is not in Omega");
    g_instances.push_back({ctx, cl.representative});
  }
  c.require(dt < kGr24CensusSeconds, "census took " + std::to_string(dt) + " s");
  c.info = std::to_string(res.classes.size()) + " classes";
}

std::shared_ptr<BoundsContext> g_gr25;

void criterion_gr25_census(Check& c) {
  auto t0 = Clock::now();
  g_gr25 = std::make_shared<BoundsContext>(plucker_ideal(2, 5));
  CensusOptions opt;
  opt.samples = kGr25Samples;
  opt.range = kGr25Range;
  opt.seed = kGr25Seed;
  auto res = census(*g_gr25, opt);
  double dt = seconds_since(t0);
  std::size_t tri = res.triangulations(), omega_tri = res.omega_triangulations();
  c.info = std::to_string(res.classes.size()) + " classes, " + std::to_string(tri) + " triangulations, " +
           std::to_string(omega_tri) + " in Omega";
  c.require(dt <= kGr25CensusSeconds, "census took " + std::to_string(dt) + " s");
  for (const auto& cl : res.classes) g_instances.push_back({g_gr25, cl.representative});
  if (tri < 102) {
    c.require(false, "only " + std::to_string(tri) + " triangulation classes found; need at least 102");
    return;
  }
  c.require(tri == 102, "expected exactly 102 triangulations, found " + std::to_string(tri));
  c.require(omega_tri == 72, "expected 72 triangulations in Omega, found " + std::to_string(omega_tri));
}

void criterion_trees(Check& c) {
  auto t0 = Clock::now();
  std::mt19937_64 rng(kGr25Seed);
  std::size_t checked = 0;
  for (std::size_t n : {4u, 5u, 6u}) {
    auto ctx = std::make_shared<BoundsContext>(plucker_ideal(2, n));
    for (int k = 0; k < 25; ++k) {
      auto t = random_phylogenetic_tree(n, 20, rng);
      auto w = tropical_tree_weight(t, n);
      auto r = sandwich(*ctx, w);
      c.require(r.lower_exact, "n=" + std::to_string(n) + " tree weight " + csv(w) + " is not in Omega");
      c.require(r.theta.maximal.size() == t.non_leaf_count(),
                "n=" + std::to_string(n) + " tree weight " + csv(w) + " has " +
                    std::to_string(r.theta.maximal.size()) + " maximal cells, tree has " +
                    std::to_string(t.non_leaf_count()) + " non-leaf vertices");
      g_instances.push_back({ctx, w});
      ++checked;
    }
  }
  double dt = seconds_since(t0);
  c.require(dt < kTreeSuiteSeconds, "tree suite took " + std::to_string(dt) + " s");
  c.info = std::to_string(checked) + " trees";
}

void criterion_sandwich_fuzz(Check& c) {
  std::mt19937_64 rng(kGr25Seed + 7);
  std::uniform_int_distribution<std::size_t> nvars(2, 5), ngens(1, 3);
  std::size_t checked = 0;
  for (int k = 0; k < 200; ++k) {
    auto ideal = random_homogeneous_ideal(nvars(rng), ngens(rng), 3, rng);
    auto ctx = std::make_shared<BoundsContext>(ideal);
    for (int j = 0; j < 5; ++j) {
      auto w = random_weight(ideal.nvars(), -10, 10, rng);
      std::string where = "ideal #" + std::to_string(k) + " at " + csv(w);
      SandwichReport r;
      try {
        r = sandwich(*ctx, w);
      } catch (const InvariantViolation& e) {
        c.require(false, where + ": " + e.what());
        continue;
      }
      c.require(ideal_contains(r.initial, r.lower), where + ": lower bound not in the initial ideal");
      c.require(ideal_contains(r.upper, r.initial), where + ": initial ideal not in the upper bound");
      c.require(projection_face_compatible(*ctx, r.theta), where + ": projections not face compatible");
      c.require(restriction_face_compatible(ideal, r.theta_star), where + ": restrictions not face compatible");
      g_instances.push_back({ctx, w});
      ++checked;
    }
  }
  c.info = std::to_string(checked) + " (ideal, weight) pairs";
}

void criterion_cones(Check& c) {
  if (!g_gr25) g_gr25 = std::make_shared<BoundsContext>(plucker_ideal(2, 5));
  const auto& ctx = *g_gr25;
  CensusOptions opt;
  opt.samples = kGr25Samples;
  opt.range = kGr25Range;
  opt.seed = kGr25Seed;
  opt.include_nongeneric = true;
  auto weights = census_weights(ctx.nvars(), opt);

  // Group by the signatures of Θ and Θ*; keep up to three weights each.
  std::map<Signature, std::vector<std::size_t>> by_theta, by_star;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    auto& a = by_theta[ctx.engine().maximal_cells(weights[i])];
    if (a.size() < 3) a.push_back(i);
    auto& b = by_star[ctx.engine().maximal_cells(-weights[i])];
    if (b.size() < 3) b.push_back(i);
  }
  std::map<std::size_t, SandwichReport> reports;
  auto report = [&](std::size_t i) -> const SandwichReport& {
    auto it = reports.find(i);
    if (it == reports.end()) it = reports.emplace(i, sandwich(ctx, weights[i])).first;
    return it->second;
  };

  struct Class {
    Subdivision sub;
    bool exact;
    std::size_t sample;
  };
  std::vector<Class> lower_classes, upper_classes;
  for (const auto& [sig, idx] : by_theta) {
    bool v = report(idx[0]).lower_exact;
    for (auto i : idx)
      c.require(report(i).lower_exact == v, "Omega verdict differs within one secondary cone (sample " +
                                                 std::to_string(i) + ")");
    lower_classes.push_back({ctx.engine().from_maximal(sig), v, idx[0]});
  }
  for (const auto& [sig, idx] : by_star) {
    bool v = report(idx[0]).upper_exact;
    for (auto i : idx)
      c.require(report(i).upper_exact == v, "Omega* verdict differs within one secondary cone (sample " +
                                                 std::to_string(i) + ")");
    upper_classes.push_back({ctx.engine().from_maximal(sig), v, idx[0]});
  }

  std::size_t pairs_lower = 0, pairs_upper = 0;
  auto closure = [&](const std::vector<Class>& classes, std::size_t& pairs, const char* name) {
    for (const auto& fine : classes)
      for (const auto& coarse : classes) {
        if (&fine == &coarse || !refines(fine.sub, coarse.sub)) continue;
        ++pairs;
        if (fine.exact)
          c.require(coarse.exact, std::string(name) + ": sample " + std::to_string(fine.sample) +
                                      " is exact but its coarsening sample " + std::to_string(coarse.sample) +
                                      " is not");
      }
  };
  closure(lower_classes, pairs_lower, "Omega");
  closure(upper_classes, pairs_upper, "Omega*");
  c.require(pairs_lower > 0 && pairs_upper > 0, "no refinement pairs were sampled");
  c.info = std::to_string(lower_classes.size()) + " cones of Sec, " + std::to_string(upper_classes.size()) +
           " of -Sec, " + std::to_string(pairs_lower) + "+" + std::to_string(pairs_upper) + " refinement pairs";
}

void criterion_limits(Check& c) {
  struct Case {
    std::string name;
    Ideal ideal;
    std::vector<WeightVector> weights;
    int max_degree;
  };
  std::mt19937_64 rng(kGr25Seed + 9);
  std::vector<WeightVector> g24_weights;
  for (int k = 0; k < 5; ++k) g24_weights.push_back(random_weight(6, 0, 100, rng));
  std::vector<Case> cases{{"square toric", toric_ideal(square_config()), {W({1, 0, 0, 0})}, 4},
                          {"coincident binomial", ideal_of({"x1^2*x2 - x1*x2^2"}, 2), {W({0, 1})}, 4},
                          {"I_{2,4}", plucker_ideal(2, 4), g24_weights, 3}};
  std::size_t checked = 0;
  for (const auto& cs : cases) {
    BoundsContext ctx(cs.ideal);
    std::size_t n = cs.ideal.nvars();
    for (const auto& w : cs.weights) {
      auto star = ctx.theta_star(w);
      auto graph = adjacency_graph(ctx.engine(), star);
      for (int d = 0; d <= cs.max_degree; ++d) {
        std::string where = cs.name + " at " + csv(w) + ", d=" + std::to_string(d);
        auto dims = limit_dimensions(ctx, w, d);
        long limit = oracle::limit_dim(cs.ideal.generators(), n, d, graph);
        long quotient = oracle::upper_quotient_dim(cs.ideal.generators(), n, d, star.maximal);
        c.require(verify_limit_decomposition(ctx, w, d), where + ": limit and quotient dimensions differ");
        c.require(dims.limit == limit, where + ": limit dimension " + std::to_string(dims.limit) +
                                           " but the oracle gives " + std::to_string(limit));
        c.require(dims.quotient == quotient, where + ": quotient dimension " + std::to_string(dims.quotient) +
                                                 " but the oracle gives " + std::to_string(quotient));
        c.require(quotient <= monomial_count(n, d), where + ": oracle dimension out of range");
        ++checked;
      }
    }
  }
  c.info = std::to_string(checked) + " (ideal, weight, degree) checks";
}

void criterion_kappa(Check& c) {
  for (const auto& inst : g_instances)
    c.require(kappa_reduction_check(*inst.ctx, inst.w), "reduction fails at " + csv(inst.w));
  c.require(!g_instances.empty(), "no instances were recorded");
  c.info = std::to_string(g_instances.size()) + " instances";
}

void criterion_toric_square(Check& c) {
  BoundsContext ctx(toric_ideal(square_config()));
  std::mt19937_64 rng(kGr25Seed + 11);
  for (int k = 0; k < 50; ++k) {
    auto w = random_weight(4, -100, 100, rng);
    c.require(sandwich(ctx, w).upper_exact, "weight " + csv(w) + " is not in Omega*");
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string name;
    std::function<void(Check&)> run;
  };
  std::vector<Criterion> criteria{
      {1, "square binomial bounds", criterion_worked_examples},
      {2, "coincident points", criterion_coincident_points},
      {3, "point configuration pipeline", criterion_pipeline},
      {4, "Gr(2,4) census", criterion_gr24_census},
      {5, "Gr(2,5) census", criterion_gr25_census},
      {6, "tree weights", criterion_trees},
      {7, "sandwich fuzzing", criterion_sandwich_fuzz},
      {8, "cone constancy and coarsening", criterion_cones},
      {9, "limit dimensions", criterion_limits},
      {10, "K(Theta) reduction", criterion_kappa},
      {11, "square toric upper bound", criterion_toric_square},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    auto t0 = Clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    double dt = seconds_since(t0);
    bool ok = check.failures.empty();
    failed += !ok;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", dt);
    std::cout << (ok ? "PASS" : "FAIL") << "  " << cr.id << ". " << cr.name << "  (" << buf;
    if (!check.info.empty()) std::cout << "; " << check.info;
    std::cout << ")\n";
    std::size_t shown = 0;
    for (const auto& f : check.failures) {
      if (++shown > 10) {
        std::cout << "      ... " << check.failures.size() - 10 << " more\n";
        break;
      }
      std::cout << "      " << f << "\n";
    }
    std::cout.flush();
  }
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}

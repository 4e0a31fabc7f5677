#pragma once

// JSON and text formats for ideals, configurations, subdivisions, reports
// and census results.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "subinit/bounds.hpp"
#include "subinit/census.hpp"
#include "subinit/configspace.hpp"
#include "subinit/errors.hpp"
#include "subinit/fixtures.hpp"
#include "subinit/parse.hpp"
#include "subinit/subdivision.hpp"

namespace subinit {

using json = nlohmann::json;

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

inline Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ParseError("expected a rational as a string or integer, got " + j.dump());
}

template <class F>
auto with_json_errors(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
}

// ---- ideals ----

/// Either JSON {"variables": [...], "generators": [...]} or plain text with
/// one polynomial per line ('#' starts a comment); plain text infers the
/// variables from the polynomials.
inline Ideal ideal_from_text(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json j = parse_json(text);
    return with_json_errors([&] {
      auto labels = j.at("variables").get<std::vector<std::string>>();
      std::vector<Polynomial> gens;
      for (const auto& g : j.at("generators")) gens.push_back(parse_polynomial(g.get<std::string>(), labels));
      return Ideal(labels, std::move(gens));
    });
  }
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw ParseError("ideal file has no generators");
  auto labels = infer_labels(lines);
  std::vector<Polynomial> gens;
  for (const auto& l : lines) gens.push_back(parse_polynomial(l, labels));
  return Ideal(labels, std::move(gens));
}

inline Ideal read_ideal(const std::string& path) { return ideal_from_text(read_file(path)); }

inline json polynomials_to_json(const std::vector<Polynomial>& ps, const std::vector<std::string>& labels) {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p, labels));
  return a;
}

/// Generators as given.
inline json ideal_to_json(const Ideal& i) {
  return {{"variables", i.labels()}, {"generators", polynomials_to_json(i.generators(), i.labels())}};
}

/// Reduced grevlex basis: a canonical generating set.
inline json reduced_generators_json(const Ideal& i) {
  return polynomials_to_json(i.groebner().elements(), i.labels());
}

inline json groebner_to_json(const Ideal& i, const ReducedGB& gb) {
  json leads = json::array();
  for (const auto& m : gb.leading_monomials()) leads.push_back(to_string(m, i.labels()));
  return {{"variables", i.labels()},
          {"order", gb.order().descriptor()},
          {"basis", polynomials_to_json(gb.elements(), i.labels())},
          {"leading_monomials", leads}};
}

// ---- weights ----

inline json weight_to_json(const WeightVector& w) {
  json a = json::array();
  for (const auto& q : w.entries()) a.push_back(to_string(q));
  return a;
}

inline WeightVector weight_from_csv(const std::string& csv) { return WeightVector(parse_rational_list(csv)); }

// ---- point configurations ----

inline json config_to_json(const PointConfiguration& a) {
  json pts = json::array();
  for (std::size_t e = 0; e < a.size(); ++e) {
    json row = json::array();
    for (const auto& q : a.point(e)) row.push_back(to_string(q));
    pts.push_back(row);
  }
  return {{"labels", a.labels}, {"points", pts}};
}

inline PointConfiguration config_from_json(const json& j) {
  return with_json_errors([&] {
    auto labels = j.at("labels").get<std::vector<std::string>>();
    const auto& pts = j.at("points");
    if (!pts.is_array() || pts.size() != labels.size())
      throw ParseError("configuration needs one point per label");
    std::size_t d = pts.empty() ? 0 : pts[0].size();
    RationalMatrix m(labels.size(), d);
    for (std::size_t e = 0; e < pts.size(); ++e) {
      if (pts[e].size() != d) throw ParseError("configuration points have different dimensions");
      for (std::size_t k = 0; k < d; ++k) m(e, k) = rational_from_json(pts[e][k]);
    }
    return PointConfiguration(std::move(labels), std::move(m));
  });
}

inline PointConfiguration read_config(const std::string& path) { return config_from_json(parse_json(read_file(path))); }

// ---- subdivisions ----

inline json cells_to_json(const std::vector<Cell>& cells, const std::vector<std::string>& labels) {
  json a = json::array();
  for (auto c : cells) a.push_back(cell_labels(c, labels));
  return a;
}

inline json subdivision_to_json(const Subdivision& s) {
  json edges = json::array();
  for (auto [i, j] : s.face_edges) edges.push_back({i, j});
  json unc = json::object();
  for (const auto& [e, c] : s.uncovered) unc[s.labels[e]] = cell_labels(c, s.labels);
  return {{"maximal", cells_to_json(s.maximal, s.labels)},
          {"cells", cells_to_json(s.cells, s.labels)},
          {"face_edges", edges},
          {"uncovered", unc}};
}

// ---- reports ----

inline json sandwich_to_json(const SandwichReport& r) {
  return {{"w", weight_to_json(r.w)},
          {"lower_gens", reduced_generators_json(r.lower)},
          {"initial_gens", reduced_generators_json(r.initial)},
          {"upper_gens", reduced_generators_json(r.upper)},
          {"lower_exact", r.lower_exact},
          {"upper_exact", r.upper_exact},
          {"theta_signature", cells_to_json(r.theta.maximal, r.theta.labels)},
          {"theta_star_signature", cells_to_json(r.theta_star.maximal, r.theta_star.labels)}};
}

inline json census_to_json(const CensusResult& c, const std::vector<std::string>& labels) {
  json classes = json::array();
  for (const auto& k : c.classes)
    classes.push_back({{"signature", cells_to_json(k.signature, labels)},
                       {"representative", weight_to_json(k.representative)},
                       {"count", k.count},
                       {"omega", k.omega},
                       {"omega_star", k.omega_star},
                       {"is_triangulation", k.is_triangulation}});
  return {{"samples_drawn", c.samples_drawn},
          {"seed", c.seed},
          {"classes_found", c.classes.size()},
          {"triangulations", c.triangulations()},
          {"omega_triangulations", c.omega_triangulations()},
          {"classes", classes}};
}

// ---- trees and matroids ----

/// {"leaves": n, "edges": [[u, v, "weight"], ...]} with vertices numbered
/// from 1 and the leaves being 1..n.
inline Tree tree_from_json(const json& j) {
  return with_json_errors([&] {
    Tree t;
    t.leaves = j.at("leaves").get<std::size_t>();
    std::size_t top = t.leaves;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("tree edges are [u, v, weight]");
      auto u = e[0].get<std::size_t>(), v = e[1].get<std::size_t>();
      if (u == 0 || v == 0) throw ParseError("tree vertices are numbered from 1");
      t.edges.push_back({u - 1, v - 1, rational_from_json(e[2])});
      top = std::max({top, u, v});
    }
    t.vertices = top;
    t.validate();
    return t;
  });
}

inline json tree_to_json(const Tree& t) {
  json edges = json::array();
  for (const auto& e : t.edges) edges.push_back({e.u + 1, e.v + 1, to_string(e.weight)});
  return {{"leaves", t.leaves}, {"edges", edges}};
}

/// {"n": 4, "k": 2, "bases": [[1, 3], ...]}
inline MatroidBases matroid_from_json(const json& j) {
  return with_json_errors([&] {
    MatroidBases m;
    m.n = j.at("n").get<std::size_t>();
    m.k = j.at("k").get<std::size_t>();
    for (const auto& b : j.at("bases")) {
      auto v = b.get<std::vector<std::size_t>>();
      std::sort(v.begin(), v.end());
      m.bases.push_back(std::move(v));
    }
    m.validate();
    return m;
  });
}

}  // namespace subinit

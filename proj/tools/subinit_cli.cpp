// Command-line front end. Every command prints JSON on stdout.
// Exit status: 0 success, 1 user error, 2 internal invariant violation.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "subinit/io.hpp"
#include "subinit/subinit.hpp"

using namespace subinit;

namespace {

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

WeightVector weight_for(const Ideal& ideal, const std::string& csv) {
  auto w = weight_from_csv(csv);
  w.check_size(ideal.nvars());
  return w;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subdivision bounds for initial ideals"};
  app.require_subcommand(1);

  std::string ideal_path, config_path, weight_csv, order_name = "grevlex";

  auto* config = app.add_subcommand("config", "point configuration A(I) of a homogeneous ideal");
  config->add_option("ideal", ideal_path, "ideal file")->required();

  auto* gb = app.add_subcommand("groebner", "reduced Groebner basis");
  gb->add_option("ideal", ideal_path, "ideal file")->required();
  gb->add_option("--order", order_name, "lex or grevlex")->check(CLI::IsMember({"lex", "grevlex"}));

  auto* initial = app.add_subcommand("initial", "initial ideal in_w I");
  initial->add_option("ideal", ideal_path, "ideal file")->required();
  initial->add_option("--w", weight_csv, "comma-separated weights")->required();

  auto* subdivide = app.add_subcommand("subdivide", "regular subdivision subd_w");
  subdivide->add_option("config", config_path, "point configuration file");
  subdivide->add_option("--ideal", ideal_path, "use A(I) of this ideal instead");
  subdivide->add_option("--w", weight_csv, "comma-separated weights")->required();

  auto* bounds = app.add_subcommand("bounds", "lower bound, initial ideal and upper bound");
  bounds->add_option("ideal", ideal_path, "ideal file")->required();
  bounds->add_option("--w", weight_csv, "comma-separated weights")->required();

  auto* omega = app.add_subcommand("omega", "is the lower bound exact at w");
  omega->add_option("ideal", ideal_path, "ideal file")->required();
  omega->add_option("--w", weight_csv, "comma-separated weights")->required();

  auto* omega_star = app.add_subcommand("omega-star", "is the upper bound exact at w");
  omega_star->add_option("ideal", ideal_path, "ideal file")->required();
  omega_star->add_option("--w", weight_csv, "comma-separated weights")->required();

  CensusOptions copt;
  auto* census_cmd = app.add_subcommand("census", "sample the secondary fan of A(I)");
  census_cmd->add_option("ideal", ideal_path, "ideal file")->required();
  census_cmd->add_option("--samples", copt.samples, "number of weights")->capture_default_str();
  census_cmd->add_option("--range", copt.range, "weights are drawn from [0, range]")->capture_default_str();
  census_cmd->add_option("--seed", copt.seed, "random seed")->capture_default_str();
  census_cmd->add_flag("--nongeneric", copt.include_nongeneric, "add samples/10 weights from [0, 2]");
  census_cmd->add_option("--threads", copt.threads, "worker threads (default: SUBINIT_THREADS or all cores)");

  auto* fixture = app.add_subcommand("fixture", "generate example inputs");
  fixture->require_subcommand(1);
  std::size_t fk = 2, fn = 4;
  std::string input_path;
  bool tropical = false;
  auto* f_plucker = fixture->add_subcommand("plucker", "Plücker ideal of Gr(2,n)");
  f_plucker->add_option("--k", fk, "k (only 2)")->capture_default_str();
  f_plucker->add_option("--n", fn, "n")->required();
  auto* f_hyper = fixture->add_subcommand("hypersimplex", "hypersimplex configuration");
  f_hyper->add_option("--k", fk, "k")->required();
  f_hyper->add_option("--n", fn, "n")->required();
  auto* f_toric = fixture->add_subcommand("toric", "toric ideal of an integer configuration");
  f_toric->add_option("config", input_path, "point configuration file")->required();
  auto* f_square = fixture->add_subcommand("square", "unit square configuration");
  auto* f_tree = fixture->add_subcommand("tree-weight", "leaf-path weights of a tree");
  f_tree->add_option("tree", input_path, "tree file")->required();
  f_tree->add_flag("--tropical", tropical, "negate, giving a point of the tropical Grassmannian");
  auto* f_corank = fixture->add_subcommand("corank", "corank weight of a matroid");
  f_corank->add_option("matroid", input_path, "matroid file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*config) {
      emit(config_to_json(point_configuration_of_ideal(read_ideal(ideal_path))));
    } else if (*gb) {
      auto ideal = read_ideal(ideal_path);
      auto order = order_name == "lex" ? MonomialOrder::lex(ideal.nvars()) : MonomialOrder::grevlex(ideal.nvars());
      emit(groebner_to_json(ideal, ideal.groebner(order)));
    } else if (*initial) {
      auto ideal = read_ideal(ideal_path);
      auto in_w = initial_ideal(ideal, weight_for(ideal, weight_csv));
      emit({{"variables", ideal.labels()}, {"w", weight_to_json(weight_from_csv(weight_csv))},
            {"generators", reduced_generators_json(in_w)}});
    } else if (*subdivide) {
      if (config_path.empty() == ideal_path.empty())
        throw PreconditionError("give exactly one of a configuration file or --ideal");
      auto a = ideal_path.empty() ? read_config(config_path) : point_configuration_of_ideal(read_ideal(ideal_path));
      auto w = weight_from_csv(weight_csv);
      w.check_size(a.size());
      emit(subdivision_to_json(regular_subdivision(a, w)));
    } else if (*bounds || *omega || *omega_star) {
      auto ideal = read_ideal(ideal_path);
      auto report = sandwich(ideal, weight_for(ideal, weight_csv));
      if (*bounds) {
        emit(sandwich_to_json(report));
      } else {
        bool member = *omega ? report.lower_exact : report.upper_exact;
        emit({{"member", member}, {"report", sandwich_to_json(report)}});
      }
    } else if (*census_cmd) {
      auto ideal = read_ideal(ideal_path);
      BoundsContext ctx(ideal);
      emit(census_to_json(census(ctx, copt), ideal.labels()));
    } else if (*f_plucker) {
      emit(ideal_to_json(plucker_ideal(fk, fn)));
    } else if (*f_hyper) {
      emit(config_to_json(hypersimplex_config(fk, fn)));
    } else if (*f_toric) {
      emit(ideal_to_json(toric_ideal(read_config(input_path))));
    } else if (*f_square) {
      emit(config_to_json(square_config()));
    } else if (*f_tree) {
      auto t = tree_from_json(parse_json(read_file(input_path)));
      auto w = tropical ? tropical_tree_weight(t, t.leaves) : tree_weight(t, t.leaves);
      std::vector<std::string> labels;
      for (const auto& s : k_subsets(t.leaves, 2)) labels.push_back(subset_label(s));
      emit({{"labels", labels}, {"w", weight_to_json(w)}, {"csv", w.to_csv()}});
    } else if (*f_corank) {
      auto m = matroid_from_json(parse_json(read_file(input_path)));
      auto w = corank_weight(m);
      std::vector<std::string> labels;
      for (const auto& s : k_subsets(m.n, m.k)) labels.push_back(subset_label(s));
      emit({{"labels", labels}, {"w", weight_to_json(w)}, {"csv", w.to_csv()}});
    }
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

#include <CLI11.hpp>
#include <iostream>
#include <memory>

#include "coxsep/errors.hpp"
#include "coxsep/io.hpp"
#include "coxsep/pipeline.hpp"

namespace {

using namespace coxsep;
using io::Json;

enum Exit { kOk = 0, kInvalid = 1, kHypothesis = 2, kBudget = 3, kInconclusive = 4, kInternal = 5 };

void emit(const std::string& out, const Json& j) {
  const std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
  } else {
    io::write_file(out, text);
  }
}

Target parse_target(const std::string& t) {
  if (t == "alt" || t == "alternating") return Target::alternating;
  if (t == "sym" || t == "symmetric") return Target::symmetric;
  throw InvalidArgument("target must be alt or sym");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating and symmetric quotients of right-angled Coxeter groups"};
  app.require_subcommand(1);

  std::string graph_path, subgroup_path, gammas_path, out_path, target = "alt", core_out;
  SeparationConfig config;
  auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--window", config.window, "convexity check window")->capture_default_str();
    cmd->add_option("--prime-search-limit", config.prime_search_limit)->capture_default_str();
    cmd->add_option("--enumeration-bound", config.enumeration_bound)->capture_default_str();
    cmd->add_option("--max-degree", config.max_degree)->capture_default_str();
    cmd->add_option("--threshold-factor", config.threshold_factor)->capture_default_str();
  };

  auto* check = app.add_subcommand("check", "hypothesis report and product guard for a graph");
  check->add_option("--graph", graph_path)->required();
  check->add_option("--out", out_path);

  auto* sep = app.add_subcommand("separate", "build a verified alternating or symmetric quotient");
  sep->add_option("--graph", graph_path)->required();
  sep->add_option("--subgroup", subgroup_path, "subgroup JSON (default: trivial)");
  sep->add_option("--gammas", gammas_path)->required();
  sep->add_option("--target", target)->capture_default_str();
  sep->add_option("--out", out_path);
  sep->add_option("--core-out", core_out, "write the final core as JSON");
  add_config(sep);

  auto* raag = app.add_subcommand("raag", "separate in a right-angled Artin group via doubling");
  raag->add_option("--graph", graph_path)->required();
  raag->add_option("--subgroup", subgroup_path, "list of signed words (default: trivial)");
  raag->add_option("--gammas", gammas_path)->required();
  raag->add_option("--target", target)->capture_default_str();
  raag->add_option("--out", out_path);
  add_config(raag);

  std::size_t window = 2;
  auto* dot = app.add_subcommand("dot", "DOT drawing of a core");
  dot->add_option("--graph", graph_path)->required();
  dot->add_option("--subgroup", subgroup_path, "subgroup JSON with optional reps");
  dot->add_option("--core", core_out, "core JSON (overrides --subgroup)");
  dot->add_option("--window", window)->capture_default_str();
  dot->add_option("--out", out_path);

  CLI11_PARSE(app, argc, argv);

  try {
    const SimplicialGraph graph = io::graph_from_json(io::read_file(graph_path));
    if (*check) {
      const ProductGuard guard = guard_product(graph);
      Json j = io::hypotheses_to_json(graph, check_hypotheses(graph));
      j["refused"] = guard.refused;
      j["message"] = guard.message;
      emit(out_path, j);
      return check_hypotheses(graph).holds() ? kOk : kHypothesis;
    }
    if (*raag) {
      RaagRequest req;
      req.graph = graph;
      if (!subgroup_path.empty()) req.subgroup_words = io::signed_words_from_json(io::read_file(subgroup_path));
      req.gammas = io::signed_words_from_json(io::read_file(gammas_path));
      req.target = parse_target(target);
      req.config = config;
      emit(out_path, io::report_to_json(raag_separate(req)));
      return kOk;
    }
    auto group = std::make_shared<const CoxeterGroup>(graph);
    io::SubgroupInput sub;
    if (!subgroup_path.empty()) sub = io::subgroup_from_json(*group, io::read_file(subgroup_path));
    if (*dot) {
      std::unique_ptr<Core> core;
      if (!core_out.empty()) {
        core = std::make_unique<Core>(io::core_from_json(group, io::read_file(core_out)));
      } else {
        if (sub.reps.empty()) sub.reps.push_back(group->identity());
        core = std::make_unique<Core>(core_from_reps(group, sub.spec, sub.reps));
      }
      const std::string text = export_dot(*core, window);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        io::write_file(out_path, text);
      }
      return kOk;
    }
    SeparationRequest req;
    req.graph = graph;
    req.subgroup = sub.spec;
    req.core_reps = sub.reps;
    req.gammas = io::gammas_from_json(*group, io::read_file(gammas_path));
    req.target = parse_target(target);
    req.config = config;
    const SeparationTrace trace = separate_traced(req);
    if (!core_out.empty() && trace.core) io::write_file(core_out, io::core_to_json(*trace.core).dump(2) + "\n");
    emit(out_path, io::report_to_json(trace.report));
    return kOk;
  } catch (const HypothesisFailure& e) {
    std::cerr << "hypothesis failure: " << e.what() << "\n";
    return kHypothesis;
  } catch (const BudgetExhausted& e) {
    std::cerr << "budget exhausted: " << e.what() << "\n";
    return kBudget;
  } catch (const InconclusiveOrbit& e) {
    std::cerr << "inconclusive orbit: " << e.what() << "\n";
    return kInconclusive;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

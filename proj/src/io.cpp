#include "coxsep/io.hpp"

#include <fstream>
#include <sstream>

#include "coxsep/errors.hpp"

namespace coxsep::io {

SimplicialGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw InvalidArgument("graph JSON needs \"vertices\"");
  std::vector<std::string> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back(v.get<std::string>());
  std::vector<std::pair<std::string, std::string>> edges;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InvalidArgument("an edge is a pair of vertex labels");
      edges.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
    }
  }
  return SimplicialGraph(std::move(vertices), edges);
}

Json graph_to_json(const SimplicialGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges()) edges.push_back({g.label(u), g.label(v)});
  return Json{{"vertices", g.labels()}, {"edges", edges}};
}

namespace {

Generator letter(const CoxeterGroup& group, const std::string& label) {
  const auto idx = group.graph().index_of(label);
  if (!idx) throw InvalidArgument("unknown generator '" + label + "'");
  return static_cast<Generator>(*idx);
}

}  // namespace

GroupElement word_from_json(const CoxeterGroup& group, const Json& j) {
  if (!j.is_array()) throw InvalidArgument("a word is an array of generator labels");
  std::vector<Generator> letters;
  for (const auto& x : j) letters.push_back(letter(group, x.get<std::string>()));
  return group.reduce(letters);
}

Json letters_to_json(const CoxeterGroup& group, const std::vector<Generator>& letters) {
  Json out = Json::array();
  for (Generator s : letters) out.push_back(group.label(s));
  return out;
}

Json word_to_json(const CoxeterGroup& group, const GroupElement& w) {
  return letters_to_json(group, w.letters());
}

SubgroupInput subgroup_from_json(const CoxeterGroup& group, const Json& j) {
  SubgroupInput in;
  const std::string kind = j.value("kind", "trivial");
  if (kind == "trivial") {
    in.spec.kind = SubgroupKind::trivial;
  } else if (kind == "parabolic") {
    in.spec.kind = SubgroupKind::parabolic;
    for (const auto& x : j.at("generators")) in.spec.parabolic |= bit(letter(group, x.get<std::string>()));
  } else if (kind == "words") {
    in.spec.kind = SubgroupKind::words;
    for (const auto& w : j.at("generators")) in.spec.generators.push_back(word_from_json(group, w));
  } else {
    throw InvalidArgument("unknown subgroup kind '" + kind + "'");
  }
  in.spec.enumeration_bound = j.value("enumeration_bound", in.spec.enumeration_bound);
  if (j.contains("reps")) {
    for (const auto& w : j.at("reps")) in.reps.push_back(word_from_json(group, w));
  }
  return in;
}

Json subgroup_to_json(const CoxeterGroup& group, const SubgroupSpec& spec) {
  Json out;
  switch (spec.kind) {
    case SubgroupKind::trivial:
      out["kind"] = "trivial";
      break;
    case SubgroupKind::parabolic: {
      out["kind"] = "parabolic";
      Json gens = Json::array();
      for (Generator s = 0; s < group.rank(); ++s) {
        if ((spec.parabolic >> s) & 1U) gens.push_back(group.label(s));
      }
      out["generators"] = gens;
      break;
    }
    case SubgroupKind::words: {
      out["kind"] = "words";
      Json gens = Json::array();
      for (const auto& w : spec.generators) gens.push_back(word_to_json(group, w));
      out["generators"] = gens;
      break;
    }
  }
  out["enumeration_bound"] = spec.enumeration_bound;
  return out;
}

std::vector<GroupElement> gammas_from_json(const CoxeterGroup& group, const Json& j) {
  const Json& list = j.is_object() ? j.at("gammas") : j;
  std::vector<GroupElement> out;
  for (const auto& w : list) out.push_back(word_from_json(group, w));
  return out;
}

std::vector<SignedLetter> signed_word_from_json(const Json& j) {
  std::vector<SignedLetter> out;
  for (const auto& x : j) out.push_back(parse_signed_letter(x.get<std::string>()));
  return out;
}

std::vector<std::vector<SignedLetter>> signed_words_from_json(const Json& j) {
  const Json& list = j.is_object() ? j.at(j.contains("gammas") ? "gammas" : "generators") : j;
  std::vector<std::vector<SignedLetter>> out;
  for (const auto& w : list) out.push_back(signed_word_from_json(w));
  return out;
}

Json core_to_json(const Core& core) {
  const CoxeterGroup& g = core.group();
  Json reps = Json::array();
  for (const auto& r : core.reps()) reps.push_back(word_to_json(g, r));
  Json tail = Json::array();
  for (const auto& e : core.tail()) {
    tail.push_back(Json{{"vertex", word_to_json(g, e.vertex)},
                        {"label", g.label(e.label)},
                        {"new_reps", e.vertebra_size}});
  }
  return Json{{"subgroup", subgroup_to_json(g, core.subgroup())},
              {"reps", reps},
              {"base_count", core.base_count()},
              {"tail", tail}};
}

Core core_from_json(std::shared_ptr<const CoxeterGroup> group, const Json& j) {
  SubgroupInput sub = subgroup_from_json(*group, j.at("subgroup"));
  std::vector<GroupElement> reps;
  for (const auto& w : j.at("reps")) reps.push_back(word_from_json(*group, w));
  std::vector<TailEntry> tail;
  for (const auto& e : j.value("tail", Json::array())) {
    TailEntry t;
    t.vertex = word_from_json(*group, e.at("vertex"));
    t.label = letter(*group, e.at("label").get<std::string>());
    tail.push_back(std::move(t));
  }
  const std::size_t base_count = j.value("base_count", reps.size());
  auto resolver = std::make_shared<OrbitResolver>(group, sub.spec);
  return restore_core(resolver, reps, base_count, std::move(tail));
}

Json action_to_json(const CoxeterGroup& group, const PermutationAction& action) {
  Json images = Json::object();
  for (std::size_t s = 0; s < action.images.size(); ++s) {
    images[group.label(static_cast<Generator>(s))] = action.images[s].to_cycle_string();
  }
  return Json{{"degree", action.degree}, {"base", action.base + 1}, {"images", images}};
}

Json hypotheses_to_json(const SimplicialGraph& g, const HypothesisReport& report) {
  Json comps = Json::array();
  for (const auto& c : report.complement_components) {
    Json part = Json::array();
    for (std::size_t v : c) part.push_back(g.label(v));
    comps.push_back(part);
  }
  Json out{{"nondiscrete", report.nondiscrete},
           {"size_ok", report.size_ok},
           {"complement_connected", report.complement_connected},
           {"complement_components", comps}};
  if (report.complement_diameter) {
    out["complement_diameter"] = *report.complement_diameter;
  } else {
    out["complement_diameter"] = nullptr;
  }
  return out;
}

Json config_to_json(const SeparationConfig& config) {
  return Json{{"window", config.window},
              {"prime_search_limit", config.prime_search_limit},
              {"enumeration_bound", config.enumeration_bound},
              {"max_degree", config.max_degree},
              {"threshold_factor", config.threshold_factor}};
}

Json report_to_json(const QuotientReport& report) {
  const std::vector<std::string>& labels = report.generator_labels;
  Json images = Json::object();
  Json parities = Json::object();
  for (std::size_t s = 0; s < labels.size(); ++s) {
    images[labels[s]] = report.generator_images[s].to_cycle_string();
    parities[labels[s]] = to_string(report.parities[s]);
  }
  const auto& ev = report.recognition.evidence;
  Json witness = nullptr;
  if (ev.small_support_witness) {
    witness = Json{{"generator", labels[ev.small_support_witness->first]},
                   {"support", ev.small_support_witness->second}};
  }
  Json separation = Json::array();
  for (const auto& s : report.separation) {
    Json word = Json::array();
    for (Generator x : s.letters) word.push_back(labels[x]);
    separation.push_back(Json{{"gamma", word}, {"moves_base", s.moves_base}, {"image_of_base", s.image_of_base + 1}});
  }
  Json subgroup_gens = Json::array();
  for (const auto& h : report.subgroup_generators) {
    Json word = Json::array();
    for (Generator x : h.letters()) word.push_back(labels[x]);
    subgroup_gens.push_back(word);
  }
  return Json{
      {"generators", labels},
      {"target", to_string(report.target)},
      {"degree", report.degree},
      {"base", report.base + 1},
      {"generator_images", images},
      {"parities", parities},
      {"recognition",
       Json{{"verdict", to_string(report.recognition.verdict)},
            {"order", report.recognition.order.str()},
            {"evidence", Json{{"transitive", ev.transitive},
                              {"prime_degree", ev.prime_degree},
                              {"small_support_witness", witness},
                              {"all_even", ev.all_even}}}}},
      {"separation", separation},
      {"subgroup_generators", subgroup_gens},
      {"subgroup_fixes_base", report.subgroup_fixes_base},
      {"core_stats", Json{{"initial_reps", report.core_stats.initial_reps},
                          {"expansion_radius", report.core_stats.expansion_radius},
                          {"expanded_reps", report.core_stats.expanded_reps},
                          {"reduced_reps", report.core_stats.reduced_reps},
                          {"final_reps", report.core_stats.final_reps},
                          {"tail_length", report.core_stats.tail_length},
                          {"deletions", report.core_stats.deletions}}},
      {"tail", Json{{"first_label", labels[report.tail_first]},
                    {"second_label", labels[report.tail_second]},
                    {"surgeries", report.surgeries}}},
      {"escalation", Json{{"margin", report.margin}, {"threshold", report.threshold}, {"attempts", report.attempts}}},
      {"assumptions", report.assumptions},
      {"config", config_to_json(report.config)}};
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

}  // namespace coxsep::io

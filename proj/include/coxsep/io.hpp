#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "coxsep/core.hpp"
#include "coxsep/graph.hpp"
#include "coxsep/pipeline.hpp"
#include "coxsep/quotient.hpp"

namespace coxsep::io {

using Json = nlohmann::ordered_json;

SimplicialGraph graph_from_json(const Json& j);
Json graph_to_json(const SimplicialGraph& g);

// A word as an array of generator labels.
GroupElement word_from_json(const CoxeterGroup& group, const Json& j);
Json word_to_json(const CoxeterGroup& group, const GroupElement& w);
Json letters_to_json(const CoxeterGroup& group, const std::vector<Generator>& letters);

struct SubgroupInput {
  SubgroupSpec spec;
  std::vector<GroupElement> reps;  // optional core representatives
};
SubgroupInput subgroup_from_json(const CoxeterGroup& group, const Json& j);
Json subgroup_to_json(const CoxeterGroup& group, const SubgroupSpec& spec);

// Either a bare array of words or {"gammas": [...]}.
std::vector<GroupElement> gammas_from_json(const CoxeterGroup& group, const Json& j);

std::vector<SignedLetter> signed_word_from_json(const Json& j);
std::vector<std::vector<SignedLetter>> signed_words_from_json(const Json& j);

Json core_to_json(const Core& core);
Core core_from_json(std::shared_ptr<const CoxeterGroup> group, const Json& j);

Json action_to_json(const CoxeterGroup& group, const PermutationAction& action);
Json hypotheses_to_json(const SimplicialGraph& g, const HypothesisReport& report);
Json config_to_json(const SeparationConfig& config);
Json report_to_json(const QuotientReport& report);

Json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace coxsep::io

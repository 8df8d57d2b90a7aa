#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coxsep/core.hpp"
#include "coxsep/graph.hpp"
#include "coxsep/permgroup.hpp"
#include "coxsep/quotient.hpp"

namespace coxsep {

struct SeparationConfig {
  std::size_t window = 4;
  std::size_t prime_search_limit = 10000;
  std::size_t enumeration_bound = 8;
  std::size_t max_degree = 2000;
  // Escalation starts at threshold_factor * (largest generator support) + margin.
  std::size_t threshold_factor = 2;
};

enum class Target { alternating, symmetric };

struct SeparationRequest {
  SimplicialGraph graph;
  SubgroupSpec subgroup;
  std::vector<GroupElement> core_reps;  // empty: the single vertex e
  std::vector<GroupElement> gammas;
  Target target = Target::alternating;
  SeparationConfig config;
};

struct CoreStats {
  std::size_t initial_reps = 0;
  std::size_t expansion_radius = 0;
  std::size_t expanded_reps = 0;
  std::size_t reduced_reps = 0;
  std::size_t final_reps = 0;
  std::size_t tail_length = 0;
  std::size_t deletions = 0;
};

struct SeparationOutcome {
  std::vector<Generator> letters;  // gamma as a word
  bool moves_base = false;
  std::size_t image_of_base = 0;
};

struct QuotientReport {
  std::vector<std::string> generator_labels;
  std::size_t degree = 0;
  std::size_t base = 0;
  Target target = Target::alternating;
  std::vector<Permutation> generator_images;
  ParityTable parities;
  RecognitionResult recognition;
  std::vector<SeparationOutcome> separation;
  bool subgroup_fixes_base = false;
  CoreStats core_stats;
  Generator tail_first = 0;
  Generator tail_second = 0;
  std::size_t surgeries = 0;
  std::size_t margin = 0;
  std::size_t threshold = 0;
  std::size_t attempts = 0;
  std::vector<std::string> assumptions;
  SeparationConfig config;
  SubgroupSpec subgroup;
  std::vector<GroupElement> subgroup_generators;
};

struct ProductGuard {
  bool refused = false;
  std::vector<std::vector<std::size_t>> components;
  std::string message;
};

// Refuses graphs whose complement is disconnected: the Coxeter group then
// splits as a direct product of the groups on the components.
ProductGuard guard_product(const SimplicialGraph& graph);

QuotientReport separate(const SeparationRequest& request);

// Final core of the last successful run, for inspection.
struct SeparationTrace {
  QuotientReport report;
  std::optional<Core> core;
};
SeparationTrace separate_traced(const SeparationRequest& request);

// Independent re-check of a report against the request. Empty when sound.
std::vector<std::string> verify_report(const QuotientReport& report, const SeparationRequest& request);

struct RaagRequest {
  SimplicialGraph graph;
  std::vector<std::vector<SignedLetter>> subgroup_words;
  std::vector<std::vector<SignedLetter>> gammas;
  Target target = Target::alternating;
  SeparationConfig config;
};

SeparationRequest raag_to_racg(const RaagRequest& request);
QuotientReport raag_separate(const RaagRequest& request);

std::string to_string(Target t);

}  // namespace coxsep

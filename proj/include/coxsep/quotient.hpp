#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxsep/core.hpp"
#include "coxsep/permgroup.hpp"

namespace coxsep {

struct PermutationAction {
  std::size_t degree = 0;
  std::vector<Permutation> images;  // indexed by generator
  std::size_t base = 0;
  std::vector<GroupElement> points;  // representative of each point

  // Image of a group element, acting on the right: w = s1 s2 ... applies s1 first.
  Permutation image(const GroupElement& w) const;
};

using ParityTable = std::vector<Parity>;

PermutationAction build_action(const Core& core);
PermutationAction build_action_serial(const Core& core);

ParityTable parity_table(const PermutationAction& action);
GeneratorMask odd_generators(const ParityTable& table);

// Problems with an action as a coset action of the Coxeter group: non-involutive
// images, broken commutation relators, intransitivity, subgroup generators
// moving the base point. Empty when sound.
std::vector<std::string> check_action(const PermutationAction& action, const CoxeterGroup& group,
                                      const std::vector<GroupElement>& subgroup_generators);

// Number of s-labelled edge orbits touching points added by deletions.
std::size_t tail_edge_count(const Core& core, Generator s);
// Parity change of s relative to the core before its first deletion.
std::size_t tail_parity_delta(const Core& core, Generator s);

struct Surgery {
  Core core;
  std::size_t segment_begin = 0;   // first replaced tail index
  std::size_t resume = 0;          // first tail index free for later surgery
  GeneratorMask documented_flips = 0;
};

// Reroutes an alternating tail segment through a complement-graph path to
// `flip` and back. Flips `flip` and exactly one of the two alternating labels.
Surgery apply_parity_lemma(const Core& core, Generator flip, std::size_t from);
// Square construction flipping exactly `flip`, one of the two alternating
// labels of the tail.
Surgery apply_squares_lemma(const Core& core, Generator flip, std::size_t from);

// Whether the square construction can flip `flip` in a tail alternating
// `flip` and `other`.
bool squares_applicable(const CoxeterGroup& group, Generator flip, Generator other);

// Tail entries consumed by fix_parities in the worst case.
std::size_t parity_budget(const CoxeterGroup& group, Generator first, Generator second);

enum class ParityTarget { all_even, one_odd };

struct ParityFix {
  Core core;
  std::vector<Surgery> steps;
};

// `first` and `second` are the alternating tail labels; surgery segments are
// taken at or after tail index `from`. With one_odd, `first` ends odd.
ParityFix fix_parities(const Core& core, ParityTarget target, Generator first, Generator second,
                       std::size_t from);

}  // namespace coxsep

namespace coxsep {

std::vector<Generator> tail_labels(const Core& core);
// Strips the common prefix and suffix and returns the longer remainder.
std::size_t label_history_distance(const std::vector<Generator>& a, const std::vector<Generator>& b);

}  // namespace coxsep

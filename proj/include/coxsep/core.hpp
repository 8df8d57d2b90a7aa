#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "coxsep/words.hpp"

namespace coxsep {

enum class SubgroupKind { trivial, parabolic, words };

struct SubgroupSpec {
  SubgroupKind kind = SubgroupKind::trivial;
  GeneratorMask parabolic = 0;          // kind == parabolic
  std::vector<GroupElement> generators;  // kind == words
  std::size_t enumeration_bound = 8;

  // Generators of H as group elements, whatever the kind.
  std::vector<GroupElement> generating_elements(const CoxeterGroup& group) const;
};

struct OrbitResult {
  GroupElement rep;
  bool conclusive = true;
};

// Canonical representatives of H-orbits g -> H g on the vertex set.
// Thread-safe; the memo table is guarded.
class OrbitResolver {
 public:
  OrbitResolver(std::shared_ptr<const CoxeterGroup> group, SubgroupSpec spec);

  const CoxeterGroup& group() const { return *group_; }
  const std::shared_ptr<const CoxeterGroup>& group_ptr() const { return group_; }
  const SubgroupSpec& spec() const { return spec_; }

  OrbitResult resolve(const GroupElement& x) const;
  // As resolve, but throws InconclusiveOrbit.
  GroupElement canonical(const GroupElement& x) const;
  bool in_subgroup(const GroupElement& x) const { return canonical(x).is_identity(); }

  // For kind == words: the enumerated subgroup ball and whether its boundary
  // sphere is empty (H finite, ball exhaustive).
  std::size_t subgroup_ball_size() const { return ball_.size(); }

 private:
  OrbitResult resolve_words(const GroupElement& x) const;
  GroupElement strip_parabolic(const GroupElement& x) const;

  std::shared_ptr<const CoxeterGroup> group_;
  SubgroupSpec spec_;
  struct BallEntry {
    GroupElement element;
    std::size_t depth;
  };
  std::vector<BallEntry> ball_;
  std::size_t boundary_depth_ = 0;
  bool exhaustive_ = true;

  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<GroupElement, OrbitResult> memo_;
};

struct Edge {
  GroupElement vertex;
  Generator label = 0;
};

// One deletion in the history of a core.
struct TailEntry {
  GroupElement vertex;  // endpoint inside the core before the deletion
  Generator label = 0;
  std::size_t reps_before = 0;
  std::size_t vertebra_size = 0;   // new orbit representatives
  GeneratorMask vertebra_labels = 0;
};

struct Vertebra {
  std::vector<GroupElement> vertices;  // one per new orbit
  Generator deleted_label = 0;
  GeneratorMask edge_labels = 0;
  bool singleton() const { return vertices.size() == 1; }
};

// A convex H-invariant subcomplex Y of the Davis complex, stored as orbit
// representatives. Values are immutable from the outside; surgery returns
// new cores.
class Core {
 public:
  Core(std::shared_ptr<const OrbitResolver> resolver, const std::vector<GroupElement>& reps);

  const CoxeterGroup& group() const { return resolver_->group(); }
  const OrbitResolver& resolver() const { return *resolver_; }
  const std::shared_ptr<const OrbitResolver>& resolver_ptr() const { return resolver_; }
  const SubgroupSpec& subgroup() const { return resolver_->spec(); }

  const std::vector<GroupElement>& reps() const { return reps_; }
  std::size_t size() const { return reps_.size(); }
  // Representatives present before the first deletion.
  std::size_t base_count() const { return base_count_; }
  const std::vector<TailEntry>& tail() const { return tail_; }
  const GroupElement& base() const { return base_; }

  // Index of the orbit of x, if x is in Y.
  std::optional<std::size_t> point_of(const GroupElement& x) const;
  bool contains(const GroupElement& x) const { return point_of(x).has_value(); }

  // The core as it was before tail entry `index` was applied.
  Core truncated(std::size_t index) const;

  // Deletes the wall dual to `edge` from this value and its H-translates.
  // Throws NotBounding, or InvariantBreach when a post-check fails.
  Vertebra apply_deletion(const Edge& edge);

 private:

  std::shared_ptr<const OrbitResolver> resolver_;
  std::vector<GroupElement> reps_;
  std::unordered_map<GroupElement, std::size_t> index_;
  std::size_t base_count_ = 0;
  std::vector<TailEntry> tail_;
  GroupElement base_;
};

// Rebuilds a core from serialized parts, checking the tail against reps.
Core restore_core(std::shared_ptr<const OrbitResolver> resolver, const std::vector<GroupElement>& reps,
                  std::size_t base_count, std::vector<TailEntry> tail);

Core trivial_core(std::shared_ptr<const CoxeterGroup> group);
// Throws InvalidArgument when W_T visibly has finite index.
Core parabolic_core(std::shared_ptr<const CoxeterGroup> group, GeneratorMask parabolic);
Core core_from_reps(std::shared_ptr<const CoxeterGroup> group, SubgroupSpec spec,
                    const std::vector<GroupElement>& reps);

// Minimal coset representatives of W_T of length `length` exist.
bool parabolic_has_infinite_index(const CoxeterGroup& group, GeneratorMask parabolic);

struct CoreViolation {
  enum class Kind { invariance, convexity, distinctness };
  Kind kind;
  std::string witness;
};

struct CoreReport {
  bool passed = true;
  bool inconclusive = false;
  std::vector<CoreViolation> violations;
  std::string inconclusive_detail;
};

// Invariance, windowed convexity (pairs at distance <= 2*window) and
// representative distinctness.
CoreReport verify_core(const Core& core, std::size_t window);
CoreReport verify_core_serial(const Core& core, std::size_t window);

std::vector<Reflection> bounding_hyperplanes(const Core& core, const GroupElement& at);
// Bounding edges (v, s) with v a representative, in representative then
// generator order.
std::vector<Edge> bounding_edges(const Core& core);

std::pair<Core, Vertebra> delete_edge(const Core& core, const Edge& edge);
// Locates an edge of Y dual to the wall, searching its carrier within
// search_radius of the carrier vertex.
std::pair<Core, Vertebra> delete_wall(const Core& core, const Reflection& wall,
                                      std::size_t search_radius);

struct PathDeletion {
  Core core;
  std::vector<Vertebra> vertebrae;
  GroupElement end;  // walk position after the last label
};
PathDeletion delete_with_labels(const Core& core, const GroupElement& start,
                                const std::vector<Generator>& labels);

struct ReduceResult {
  Core core;
  Generator last_label = 0;
  GroupElement singleton;  // the single vertex of the last vertebra
  std::size_t deletions = 0;
  std::size_t guard = 0;
  std::vector<GeneratorMask> label_sets;  // S after every deletion
};
ReduceResult reduce_to_point(const Core& core, std::optional<Generator> target_label);

Core expand(const Core& core, std::size_t radius);

Core grow_tail(const Core& core, const GroupElement& start, Generator first, Generator second,
               std::size_t count);

// Y within `window` steps of the representatives, with tail vertices marked.
std::string export_dot(const Core& core, std::size_t window);

}  // namespace coxsep

#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "coxsep/graph.hpp"

namespace coxsep {

// An element of a right-angled Coxeter group, stored as its shortlex normal
// form. Only CoxeterGroup produces these from raw words.
class GroupElement {
 public:
  GroupElement() = default;

  static GroupElement from_normal_form(std::vector<Generator> letters) {
    GroupElement g;
    g.letters_ = std::move(letters);
    return g;
  }

  const std::vector<Generator>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  // Shortlex order.
  friend std::strong_ordering operator<=>(const GroupElement& a, const GroupElement& b) {
    if (a.letters_.size() != b.letters_.size()) return a.letters_.size() <=> b.letters_.size();
    return a.letters_ <=> b.letters_;
  }

 private:
  std::vector<Generator> letters_;
};

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Generator s : g.letters()) {
      h ^= s + 1U;
      h *= 1099511628211ULL;
    }
    return h;
  }
};

// Wall of the Davis complex dual to the edges labelled `label`, named by the
// reflection g s g^-1.
struct Reflection {
  GroupElement element;
  Generator label = 0;

  friend bool operator==(const Reflection& a, const Reflection& b) {
    return a.element == b.element;
  }
};

class CoxeterGroup {
 public:
  explicit CoxeterGroup(const SimplicialGraph& graph);

  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Generator s) const { return labels_.at(s); }
  const SimplicialGraph& graph() const { return graph_; }

  bool commute(Generator a, Generator b) const { return (link_[a] >> b) & 1U; }
  // Generators commuting with s, s excluded.
  GeneratorMask link(Generator s) const { return link_[s]; }

  GroupElement identity() const { return {}; }
  GroupElement generator(Generator s) const;
  GroupElement reduce(std::span<const Generator> word) const;
  GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
  GroupElement inverse(const GroupElement& a) const;
  GroupElement times(const GroupElement& a, Generator s) const;
  GroupElement times(Generator s, const GroupElement& a) const;
  std::size_t length(const GroupElement& a) const { return a.length(); }
  // Length of a*b without producing its normal form.
  std::size_t product_length(const GroupElement& a, const GroupElement& b) const;
  std::size_t distance(const GroupElement& a, const GroupElement& b) const;

  Reflection reflection_of_edge(const GroupElement& g, Generator s) const;
  // x with x^-1 r x = r.label; the edge (x, r.label) is dual to r.
  GroupElement carrier_vertex(const Reflection& r) const;
  bool far_side(const Reflection& r, const GroupElement& x) const;
  bool separates(const Reflection& r, const GroupElement& u, const GroupElement& v) const;

  // Generators s with l(a s) < l(a) / l(s a) < l(a).
  GeneratorMask right_descents(const GroupElement& a) const;
  GeneratorMask left_descents(const GroupElement& a) const;

  // Geodesic interval between a and b; throws when d(a,b) > bound.
  std::vector<GroupElement> interval(const GroupElement& a, const GroupElement& b,
                                     std::size_t bound) const;
  // Smallest interval-closed superset of seed. Throws HullEscape when an
  // element lands farther than radius_bound from every seed element, and
  // InvalidArgument when seed pairs are farther apart than radius_bound.
  std::vector<GroupElement> hull(const std::vector<GroupElement>& seed,
                                 std::size_t radius_bound) const;
  // Elements of length <= radius, grouped by length, shortlex within a layer.
  std::vector<std::vector<GroupElement>> ball(std::size_t radius) const;

  // Pairwise commuting subsets (cliques) of the graph, as masks, including
  // the empty one. Cube directions at a vertex.
  const std::vector<GeneratorMask>& cliques() const { return cliques_; }

  std::string format(const GroupElement& a) const;

  // In-place right multiplication on a shortlex normal form.
  void times_in_place(std::vector<Generator>& letters, Generator s) const;
  // Lex-least rewrite of a reduced word.
  std::vector<Generator> lex_normalize(const std::vector<Generator>& reduced) const;

 private:
  void check(Generator s) const;

  SimplicialGraph graph_;
  std::vector<std::string> labels_;
  std::vector<GeneratorMask> link_;
  std::vector<GeneratorMask> cliques_;
};

}  // namespace coxsep

template <>
struct std::hash<coxsep::GroupElement> : coxsep::GroupElementHash {};

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace coxsep {

using Generator = std::uint16_t;
using GeneratorMask = std::uint64_t;

inline constexpr std::size_t kMaxGenerators = 64;

inline GeneratorMask bit(Generator g) { return GeneratorMask{1} << g; }

// Finite simplicial graph. Vertex order is the input order and is the
// generator order everywhere downstream.
class SimplicialGraph {
 public:
  SimplicialGraph() = default;
  SimplicialGraph(std::vector<std::string> vertices,
                  const std::vector<std::pair<std::string, std::string>>& edges);

  static SimplicialGraph from_indices(
      std::vector<std::string> vertices,
      const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;

  bool adjacent(std::size_t u, std::size_t v) const {
    return (adjacency_[u] >> v) & 1U;
  }
  GeneratorMask neighbours(std::size_t v) const { return adjacency_[v]; }
  // Sorted pairs (u, v) with u < v.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const SimplicialGraph&, const SimplicialGraph&) = default;

 private:
  void add_edge(std::size_t u, std::size_t v);

  std::vector<std::string> labels_;
  std::vector<GeneratorMask> adjacency_;
};

struct HypothesisReport {
  bool nondiscrete = false;
  bool size_ok = false;
  bool complement_connected = false;
  std::vector<std::vector<std::size_t>> complement_components;
  std::optional<std::size_t> complement_diameter;

  bool holds() const { return nondiscrete && size_ok && complement_connected; }
};

SimplicialGraph complement(const SimplicialGraph& g);
HypothesisReport check_hypotheses(const SimplicialGraph& g);

// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> components(const SimplicialGraph& g);

// All-pairs BFS distances; SIZE_MAX where unreachable.
std::vector<std::vector<std::size_t>> distances(const SimplicialGraph& g);

// Lexicographically least shortest path from `from` to `to` (inclusive).
// Empty when unreachable.
std::vector<std::size_t> shortest_path(const SimplicialGraph& g, std::size_t from,
                                       std::size_t to);

// Doubling of a RAAG defining graph. Vertex (v, b) is labelled "v.b" and sits
// at index 2*v + b.
SimplicialGraph double_graph(const SimplicialGraph& g);

struct SignedLetter {
  std::string vertex;
  bool inverse = false;
};

// g_u -> s_(u,0) s_(u,1), g_u^-1 -> s_(u,1) s_(u,0), as indices into
// double_graph(g).
std::vector<Generator> embed_raag_word(const SimplicialGraph& g,
                                       const std::vector<SignedLetter>& word);

// Parses "u" or "u^-1".
SignedLetter parse_signed_letter(const std::string& text);

}  // namespace coxsep

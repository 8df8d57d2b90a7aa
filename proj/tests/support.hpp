#pragma once

#include <memory>
#include <random>
#include <string>
#include <vector>

#include "coxsep/core.hpp"
#include "coxsep/graph.hpp"
#include "coxsep/words.hpp"

namespace fixtures {

inline coxsep::SimplicialGraph cycle(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    edges.emplace_back(i, (i + 1) % n);
  }
  return coxsep::SimplicialGraph::from_indices(labels, edges);
}

inline coxsep::SimplicialGraph path(std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i + 1));
    if (i + 1 < n) edges.emplace_back(i, i + 1);
  }
  return coxsep::SimplicialGraph::from_indices(labels, edges);
}

inline coxsep::SimplicialGraph c5() { return cycle(5); }
inline coxsep::SimplicialGraph p4() { return path(4); }

inline std::shared_ptr<const coxsep::CoxeterGroup> group(const coxsep::SimplicialGraph& g) {
  return std::make_shared<const coxsep::CoxeterGroup>(g);
}

// Every graph on n labelled vertices.
inline std::vector<coxsep::SimplicialGraph> all_graphs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  std::vector<coxsep::SimplicialGraph> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pairs.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if ((mask >> k) & 1U) edges.push_back(pairs[k]);
    }
    out.push_back(coxsep::SimplicialGraph::from_indices(labels, edges));
  }
  return out;
}

inline std::vector<coxsep::Generator> random_word(std::mt19937& rng, std::size_t rank,
                                                  std::size_t length) {
  std::uniform_int_distribution<int> pick(0, static_cast<int>(rank) - 1);
  std::vector<coxsep::Generator> w(length);
  for (auto& s : w) s = static_cast<coxsep::Generator>(pick(rng));
  return w;
}

}  // namespace fixtures

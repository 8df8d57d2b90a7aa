#include "coxsep/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>

#include "coxsep/errors.hpp"

namespace coxsep {

namespace {

constexpr std::size_t kUnreached = std::numeric_limits<std::size_t>::max();

std::vector<std::size_t> bfs(const SimplicialGraph& g, std::size_t source) {
  std::vector<std::size_t> dist(g.size(), kUnreached);
  std::deque<std::size_t> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (g.adjacent(u, v) && dist[v] == kUnreached) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

}  // namespace

SimplicialGraph::SimplicialGraph(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  if (vertices.size() > kMaxGenerators) {
    throw InvalidArgument("graph has more than 64 vertices");
  }
  std::set<std::string> seen;
  for (const auto& v : vertices) {
    if (!seen.insert(v).second) throw InvalidArgument("duplicate vertex '" + v + "'");
  }
  labels_ = std::move(vertices);
  adjacency_.assign(labels_.size(), 0);
  for (const auto& [a, b] : edges) {
    const auto u = index_of(a);
    const auto v = index_of(b);
    if (!u || !v) {
      throw InvalidArgument("edge endpoint is not a vertex: {" + a + ", " + b + "}");
    }
    add_edge(*u, *v);
  }
}

SimplicialGraph SimplicialGraph::from_indices(
    std::vector<std::string> vertices,
    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  std::vector<std::pair<std::string, std::string>> named;
  named.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= vertices.size() || v >= vertices.size()) {
      throw InvalidArgument("edge index out of range");
    }
    named.emplace_back(vertices[u], vertices[v]);
  }
  return SimplicialGraph(std::move(vertices), named);
}

void SimplicialGraph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw InvalidArgument("self-loop at '" + labels_[u] + "'");
  if (adjacent(u, v)) {
    throw InvalidArgument("duplicate edge {" + labels_[u] + ", " + labels_[v] + "}");
  }
  adjacency_[u] |= GeneratorMask{1} << v;
  adjacency_[v] |= GeneratorMask{1} << u;
}

std::optional<std::size_t> SimplicialGraph::index_of(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<std::pair<std::size_t, std::size_t>> SimplicialGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u) {
    for (std::size_t v = u + 1; v < size(); ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t SimplicialGraph::edge_count() const { return edges().size(); }

SimplicialGraph complement(const SimplicialGraph& g) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < g.size(); ++u) {
    for (std::size_t v = u + 1; v < g.size(); ++v) {
      if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    }
  }
  return SimplicialGraph::from_indices(g.labels(), edges);
}

std::vector<std::vector<std::size_t>> components(const SimplicialGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> done(g.size(), false);
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (done[v]) continue;
    const auto dist = bfs(g, v);
    std::vector<std::size_t> part;
    for (std::size_t u = 0; u < g.size(); ++u) {
      if (dist[u] != kUnreached) {
        part.push_back(u);
        done[u] = true;
      }
    }
    out.push_back(std::move(part));
  }
  return out;
}

std::vector<std::vector<std::size_t>> distances(const SimplicialGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) out.push_back(bfs(g, v));
  return out;
}

std::vector<std::size_t> shortest_path(const SimplicialGraph& g, std::size_t from,
                                       std::size_t to) {
  const auto to_target = bfs(g, to);
  if (to_target[from] == kUnreached) return {};
  std::vector<std::size_t> path{from};
  std::size_t at = from;
  while (at != to) {
    for (std::size_t v = 0; v < g.size(); ++v) {
      if (g.adjacent(at, v) && to_target[v] + 1 == to_target[at]) {
        at = v;
        break;
      }
    }
    path.push_back(at);
  }
  return path;
}

HypothesisReport check_hypotheses(const SimplicialGraph& g) {
  HypothesisReport report;
  report.nondiscrete = g.edge_count() > 0;
  report.size_ok = g.size() >= 3;
  const SimplicialGraph c = complement(g);
  report.complement_components = components(c);
  report.complement_connected = report.complement_components.size() == 1;
  if (report.complement_connected) {
    std::size_t diameter = 0;
    for (const auto& row : distances(c)) {
      for (std::size_t d : row) diameter = std::max(diameter, d);
    }
    report.complement_diameter = diameter;
  }
  return report;
}

SimplicialGraph double_graph(const SimplicialGraph& g) {
  std::vector<std::string> labels;
  for (const auto& v : g.labels()) {
    labels.push_back(v + ".0");
    labels.push_back(v + ".1");
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  const std::size_t n = labels.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const std::size_t u = a / 2, v = b / 2;
      const bool a_top = a % 2 == 1, b_top = b % 2 == 1;
      const bool edge = (a_top && b_top) ? g.adjacent(u, v) : u != v;
      if (edge) edges.emplace_back(a, b);
    }
  }
  return SimplicialGraph::from_indices(std::move(labels), edges);
}

SignedLetter parse_signed_letter(const std::string& text) {
  static const std::string kInverse = "^-1";
  if (text.size() > kInverse.size() &&
      text.compare(text.size() - kInverse.size(), kInverse.size(), kInverse) == 0) {
    return {text.substr(0, text.size() - kInverse.size()), true};
  }
  return {text, false};
}

std::vector<Generator> embed_raag_word(const SimplicialGraph& g,
                                       const std::vector<SignedLetter>& word) {
  std::vector<Generator> out;
  out.reserve(2 * word.size());
  for (const auto& letter : word) {
    const auto v = g.index_of(letter.vertex);
    if (!v) throw InvalidArgument("unknown RAAG generator '" + letter.vertex + "'");
    const auto low = static_cast<Generator>(2 * *v);
    const auto high = static_cast<Generator>(2 * *v + 1);
    if (letter.inverse) {
      out.push_back(high);
      out.push_back(low);
    } else {
      out.push_back(low);
      out.push_back(high);
    }
  }
  return out;
}

}  // namespace coxsep

#include "coxsep/quotient.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "coxsep/errors.hpp"

namespace coxsep {

Permutation PermutationAction::image(const GroupElement& w) const {
  Permutation p(degree);
  for (Generator s : w.letters()) p = p * images.at(s);
  return p;
}

namespace {

PermutationAction build(const Core& core, bool parallel) {
  const CoxeterGroup& g = core.group();
  const std::size_t n = core.size();
  const std::size_t rank = g.rank();
  std::vector<std::vector<std::uint32_t>> images(rank, std::vector<std::uint32_t>(n));
  std::vector<std::string> failures(n);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 16) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto p = static_cast<std::size_t>(i);
    try {
      for (Generator s = 0; s < rank; ++s) {
        const auto q = core.point_of(g.times(core.reps()[p], s));
        images[s][p] = static_cast<std::uint32_t>(q ? *q : p);
      }
    } catch (const std::exception& e) {
      failures[p] = e.what();
    }
  }
  for (const auto& f : failures) {
    if (!f.empty()) throw InconclusiveOrbit(f);
  }
  PermutationAction action;
  action.degree = n;
  for (auto& img : images) action.images.emplace_back(std::move(img));
  action.base = *core.point_of(core.base());
  action.points = core.reps();
  return action;
}

}  // namespace

PermutationAction build_action(const Core& core) { return build(core, true); }
PermutationAction build_action_serial(const Core& core) { return build(core, false); }

ParityTable parity_table(const PermutationAction& action) {
  ParityTable out;
  for (const auto& p : action.images) out.push_back(parity(p));
  return out;
}

GeneratorMask odd_generators(const ParityTable& table) {
  GeneratorMask out = 0;
  for (std::size_t s = 0; s < table.size(); ++s) {
    if (table[s] == Parity::odd) out |= bit(static_cast<Generator>(s));
  }
  return out;
}

std::vector<std::string> check_action(const PermutationAction& action, const CoxeterGroup& group,
                                      const std::vector<GroupElement>& subgroup_generators) {
  std::vector<std::string> problems;
  if (action.images.size() != group.rank()) problems.push_back("wrong number of generator images");
  for (std::size_t s = 0; s < action.images.size(); ++s) {
    if (!(action.images[s] * action.images[s]).is_identity()) {
      problems.push_back("image of " + group.label(static_cast<Generator>(s)) + " is not an involution");
    }
  }
  for (const auto& [u, v] : group.graph().edges()) {
    if (action.images[u] * action.images[v] != action.images[v] * action.images[u]) {
      problems.push_back("images of " + group.label(static_cast<Generator>(u)) + " and " +
                         group.label(static_cast<Generator>(v)) + " do not commute");
    }
  }
  if (!is_transitive(action.images, action.degree)) problems.push_back("action is not transitive");
  for (const auto& h : subgroup_generators) {
    if (action.image(h)[action.base] != action.base) {
      problems.push_back("subgroup generator " + group.format(h) + " moves the base point");
    }
  }
  return problems;
}

std::size_t tail_edge_count(const Core& core, Generator s) {
  const CoxeterGroup& g = core.group();
  std::size_t to_old = 0, among_new = 0;
  for (std::size_t p = core.base_count(); p < core.size(); ++p) {
    const auto q = core.point_of(g.times(core.reps()[p], s));
    if (!q || *q == p) continue;
    if (*q < core.base_count()) {
      ++to_old;
    } else {
      ++among_new;
    }
  }
  return to_old + among_new / 2;
}

std::size_t tail_parity_delta(const Core& core, Generator s) { return tail_edge_count(core, s) % 2; }

std::vector<Generator> tail_labels(const Core& core) {
  std::vector<Generator> out;
  for (const auto& e : core.tail()) out.push_back(e.label);
  return out;
}

std::size_t label_history_distance(const std::vector<Generator>& a, const std::vector<Generator>& b) {
  std::size_t prefix = 0;
  while (prefix < a.size() && prefix < b.size() && a[prefix] == b[prefix]) ++prefix;
  std::size_t suffix = 0;
  while (suffix < a.size() - prefix && suffix < b.size() - prefix &&
         a[a.size() - 1 - suffix] == b[b.size() - 1 - suffix]) {
    ++suffix;
  }
  return std::max(a.size() - prefix - suffix, b.size() - prefix - suffix);
}

namespace {

struct Planned {
  GroupElement vertex;
  Generator label;
  std::size_t expected_size;
};

bool walk_step(const Core& core, std::size_t k) {
  const auto& tail = core.tail();
  return k + 1 < tail.size() && tail[k].vertebra_size == 1 &&
         tail[k + 1].vertex == core.group().times(tail[k].vertex, tail[k].label);
}

// Entries [begin, end) alternate `first`, `second`, ... as a walk of
// single-vertex vertebrae, with walk-continuous context entries at begin-1 and end.
bool alternating_segment(const Core& core, std::size_t begin, std::size_t end, Generator first,
                         Generator second) {
  const auto& tail = core.tail();
  if (begin == 0 || end >= tail.size()) return false;
  for (std::size_t k = begin - 1; k <= end; ++k) {
    const Generator want = k + 1 == begin ? second : ((k - begin) % 2 == 0 ? first : second);
    if (tail[k].label != want || tail[k].vertebra_size != 1) return false;
    if (k < end && !walk_step(core, k)) return false;
  }
  return true;
}

// Rebuilds the tail from entry `begin`: planned entries replace
// [begin, resume_old), then the remaining walk is re-walked from `continue_at`.
Core rebuild(const Core& core, std::size_t begin, std::size_t resume_old, const std::vector<Planned>& planned,
             const GroupElement& continue_at) {
  const CoxeterGroup& g = core.group();
  const auto& tail = core.tail();
  for (std::size_t k = resume_old; k + 1 < tail.size(); ++k) {
    if (!walk_step(core, k)) throw InvalidArgument("tail after the surgery segment is not a walk");
  }
  Core out = core.truncated(begin);
  for (const auto& p : planned) {
    const Vertebra v = out.apply_deletion({p.vertex, p.label});
    if (v.vertices.size() != p.expected_size) {
      throw InvariantBreach("surgery vertebra of size " + std::to_string(v.vertices.size()) + ", expected " +
                            std::to_string(p.expected_size));
    }
  }
  GroupElement at = continue_at;
  for (std::size_t k = resume_old; k < tail.size(); ++k) {
    if (!out.apply_deletion({at, tail[k].label}).singleton()) {
      throw InvariantBreach("re-walked tail lost single-vertex vertebrae");
    }
    at = g.times(at, tail[k].label);
  }
  if (out.size() != core.size()) throw InvariantBreach("surgery changed the degree");
  return out;
}

GeneratorMask measured_flips(const Core& before, const Core& after) {
  GeneratorMask out = 0;
  for (Generator s = 0; s < before.group().rank(); ++s) {
    if (tail_parity_delta(before, s) != tail_parity_delta(after, s)) out |= bit(s);
  }
  return out;
}

void confirm(const Surgery& s, const Core& before) {
  const GeneratorMask got = measured_flips(before, s.core);
  if (got != s.documented_flips) {
    throw InvariantBreach("surgery flipped parities other than the documented set");
  }
}

struct SquareCase {
  int kind = 0;  // 1, 2 or 3; 0 when none applies
  Generator gamma = 0;
  Generator delta = 0;
};

SquareCase square_case(const CoxeterGroup& g, Generator flip, Generator other) {
  const std::size_t n = g.rank();
  for (Generator c = 0; c < n; ++c) {
    if (c != flip && c != other && g.commute(c, other) && !g.commute(c, flip)) return {1, c, 0};
  }
  for (Generator c = 0; c < n; ++c) {
    if (c != flip && c != other && g.commute(c, flip) && !g.commute(c, other)) return {2, c, 0};
  }
  for (Generator c = 0; c < n; ++c) {
    if (c == flip || c == other || !g.commute(c, flip) || !g.commute(c, other)) continue;
    for (Generator d = 0; d < n; ++d) {
      if (d == flip || d == other || d == c) continue;
      if (!g.commute(d, flip) && !g.commute(d, other) && !g.commute(d, c)) return {3, c, d};
    }
  }
  return {};
}

}  // namespace

Surgery apply_parity_lemma(const Core& core, Generator flip, std::size_t from) {
  const CoxeterGroup& g = core.group();
  const SimplicialGraph co = complement(g.graph());
  const auto& tail = core.tail();
  for (std::size_t j = std::max<std::size_t>(from, 1); j < tail.size(); ++j) {
    const Generator alpha = tail[j].label;
    const Generator beta = tail[j - 1].label;
    if (alpha == flip || beta == flip || alpha == beta || g.commute(alpha, beta)) continue;
    const auto path = shortest_path(co, alpha, flip);
    if (path.empty()) throw HypothesisFailure("complement graph is disconnected");
    const std::size_t d = path.size() - 1;
    const std::size_t length = 2 * d + 1;
    if (!alternating_segment(core, j, j + length, alpha, beta)) continue;

    std::vector<Planned> planned;
    GroupElement at = tail[j].vertex;
    std::vector<Generator> labels(path.begin(), path.end());
    for (std::size_t k = d; k-- > 0;) labels.push_back(static_cast<Generator>(path[k]));
    for (Generator label : labels) {
      planned.push_back({at, label, 1});
      at = g.times(at, label);
    }
    Surgery s{rebuild(core, j, j + length, planned, at), j, j + length + 1, 0};
    s.documented_flips = bit(flip) | (d % 2 == 0 ? bit(alpha) : bit(beta));
    confirm(s, core);
    return s;
  }
  throw InvalidArgument("tail too short for the parity reroute to " + g.label(flip));
}

bool squares_applicable(const CoxeterGroup& group, Generator flip, Generator other) {
  return square_case(group, flip, other).kind != 0;
}

Surgery apply_squares_lemma(const Core& core, Generator flip, std::size_t from) {
  const CoxeterGroup& g = core.group();
  const auto& tail = core.tail();
  for (std::size_t j = std::max<std::size_t>(from, 1); j < tail.size(); ++j) {
    const Generator other = tail[j].label == flip ? tail[j - 1].label : tail[j].label;
    if (other == flip || g.commute(flip, other)) continue;
    const SquareCase sc = square_case(g, flip, other);
    if (sc.kind == 0) {
      throw InvariantBreach("no square construction applies to " + g.label(flip) + " against " +
                            g.label(other));
    }
    const GroupElement& x = tail[j].vertex;
    std::vector<Planned> planned;
    GroupElement next;
    std::size_t length = 0;
    if (sc.kind == 1) {
      // other flip other  ->  other, gamma (a square)
      length = 3;
      if (tail[j].label != other || !alternating_segment(core, j, j + length, other, flip)) continue;
      const GroupElement xb = g.times(x, other);
      planned = {{x, other, 1}, {xb, sc.gamma, 2}};
      next = g.times(xb, sc.gamma);
    } else if (sc.kind == 2) {
      // flip other flip other flip  ->  flip, gamma, two spurs
      length = 5;
      if (tail[j].label != flip || !alternating_segment(core, j, j + length, flip, other)) continue;
      const GroupElement xa = g.times(x, flip);
      const GroupElement xc = g.times(x, sc.gamma);
      planned = {{x, flip, 1}, {xa, sc.gamma, 2}, {xa, other, 1}, {xc, other, 1}};
      next = g.times(xa, sc.gamma);
    } else {
      // flip other flip other flip  ->  delta, flip, gamma, delta
      length = 5;
      if (tail[j].label != flip || !alternating_segment(core, j, j + length, flip, other)) continue;
      const GroupElement xd = g.times(x, sc.delta);
      const GroupElement xda = g.times(xd, flip);
      const GroupElement xdac = g.times(xda, sc.gamma);
      planned = {{x, sc.delta, 1}, {xd, flip, 1}, {xda, sc.gamma, 2}, {xdac, sc.delta, 1}};
      next = g.times(xdac, sc.delta);
    }
    Surgery s{rebuild(core, j, j + length, planned, next), j, j + planned.size() + 1, bit(flip)};
    confirm(s, core);
    return s;
  }
  throw InvalidArgument("tail too short for the square construction on " + g.label(flip));
}

std::size_t parity_budget(const CoxeterGroup& group, Generator first, Generator second) {
  const auto dist = distances(complement(group.graph()));
  std::size_t total = 2;
  for (Generator s = 0; s < group.rank(); ++s) {
    if (s == first || s == second) continue;
    const std::size_t d = std::max(dist[first][s], dist[second][s]);
    total += 2 * d + 1 + 2;
  }
  return total + 3 * (5 + 2);
}

ParityFix fix_parities(const Core& core, ParityTarget target, Generator first, Generator second,
                       std::size_t from) {
  const CoxeterGroup& g = core.group();
  ParityFix out{core, {}};
  GeneratorMask odd = odd_generators(parity_table(build_action(core)));
  std::size_t at = from;
  auto record = [&](Surgery s) {
    odd ^= s.documented_flips;
    at = s.resume;
    out.core = s.core;
    out.steps.push_back(std::move(s));
  };
  for (Generator s = 0; s < g.rank(); ++s) {
    if (s == first || s == second || !((odd >> s) & 1U)) continue;
    record(apply_parity_lemma(out.core, s, at));
  }
  for (Generator s : {first, second}) {
    const bool want_odd = target == ParityTarget::one_odd && s == first;
    if (((odd >> s) & 1U) != want_odd) record(apply_squares_lemma(out.core, s, at));
  }
  const GeneratorMask wanted = target == ParityTarget::one_odd ? bit(first) : 0;
  const GeneratorMask final_odd = odd_generators(parity_table(build_action(out.core)));
  if (final_odd != wanted || odd != wanted) {
    throw InvariantBreach("parity surgery did not reach its target");
  }
  return out;
}

}  // namespace coxsep

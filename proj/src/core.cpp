#include "coxsep/core.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <mutex>
#include <sstream>
#include <unordered_set>

#include "coxsep/errors.hpp"

namespace coxsep {

std::vector<GroupElement> SubgroupSpec::generating_elements(const CoxeterGroup& group) const {
  std::vector<GroupElement> out;
  switch (kind) {
    case SubgroupKind::trivial:
      break;
    case SubgroupKind::parabolic:
      for (Generator s = 0; s < group.rank(); ++s) {
        if ((parabolic >> s) & 1U) out.push_back(group.generator(s));
      }
      break;
    case SubgroupKind::words:
      out = generators;
      break;
  }
  return out;
}

OrbitResolver::OrbitResolver(std::shared_ptr<const CoxeterGroup> group, SubgroupSpec spec)
    : group_(std::move(group)), spec_(std::move(spec)) {
  const std::size_t n = group_->rank();
  if (spec_.kind == SubgroupKind::parabolic && n < 64 && (spec_.parabolic >> n) != 0) {
    throw InvalidArgument("parabolic subgroup names a generator outside the graph");
  }
  if (spec_.kind != SubgroupKind::words) return;

  for (const auto& g : spec_.generators) {
    for (Generator s : g.letters()) {
      if (s >= n) throw InvalidArgument("subgroup generator uses an unknown letter");
    }
    if (group_->reduce(g.letters()) != g) {
      throw InvalidArgument("subgroup generator is not in normal form");
    }
  }
  std::vector<GroupElement> steps;
  for (const auto& g : spec_.generators) {
    steps.push_back(g);
    steps.push_back(group_->inverse(g));
  }
  std::unordered_set<GroupElement> seen{group_->identity()};
  ball_.push_back({group_->identity(), 0});
  std::size_t layer_begin = 0;
  for (std::size_t depth = 1; depth <= spec_.enumeration_bound; ++depth) {
    const std::size_t layer_end = ball_.size();
    for (std::size_t i = layer_begin; i < layer_end; ++i) {
      for (const auto& step : steps) {
        GroupElement next = group_->multiply(ball_[i].element, step);
        if (seen.insert(next).second) ball_.push_back({std::move(next), depth});
      }
    }
    layer_begin = layer_end;
  }
  boundary_depth_ = spec_.enumeration_bound;
  exhaustive_ = ball_.back().depth < boundary_depth_;
}

GroupElement OrbitResolver::strip_parabolic(const GroupElement& x) const {
  std::vector<Generator> letters = x.letters();
  bool changed = true;
  bool stripped = false;
  while (changed) {
    changed = false;
    GeneratorMask seen = 0;
    for (std::size_t i = 0; i < letters.size(); ++i) {
      const Generator s = letters[i];
      if (((spec_.parabolic >> s) & 1U) && (seen & ~group_->link(s)) == 0 && !((seen >> s) & 1U)) {
        letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i));
        changed = stripped = true;
        break;
      }
      seen |= bit(s);
    }
  }
  if (!stripped) return x;
  return GroupElement::from_normal_form(group_->lex_normalize(letters));
}

OrbitResult OrbitResolver::resolve_words(const GroupElement& x) const {
  std::size_t best = SIZE_MAX;
  std::size_t boundary_best = SIZE_MAX;
  std::vector<std::size_t> minimal;
  for (std::size_t i = 0; i < ball_.size(); ++i) {
    const std::size_t len = group_->product_length(ball_[i].element, x);
    if (ball_[i].depth == boundary_depth_) boundary_best = std::min(boundary_best, len);
    if (len < best) {
      best = len;
      minimal.clear();
    }
    if (len == best) minimal.push_back(i);
  }
  OrbitResult result;
  bool first = true;
  for (std::size_t i : minimal) {
    GroupElement candidate = group_->multiply(ball_[i].element, x);
    if (first || candidate < result.rep) result.rep = std::move(candidate);
    first = false;
  }
  result.conclusive = exhaustive_ || boundary_best > best;
  return result;
}

OrbitResult OrbitResolver::resolve(const GroupElement& x) const {
  switch (spec_.kind) {
    case SubgroupKind::trivial:
      return {x, true};
    case SubgroupKind::parabolic:
      return {strip_parabolic(x), true};
    case SubgroupKind::words:
      break;
  }
  {
    std::shared_lock lock(mutex_);
    if (auto it = memo_.find(x); it != memo_.end()) return it->second;
  }
  OrbitResult result = resolve_words(x);
  std::unique_lock lock(mutex_);
  memo_.emplace(x, result);
  return result;
}

GroupElement OrbitResolver::canonical(const GroupElement& x) const {
  OrbitResult r = resolve(x);
  if (!r.conclusive) {
    throw InconclusiveOrbit("orbit of " + group_->format(x) + " undecided within enumeration bound " +
                            std::to_string(spec_.enumeration_bound));
  }
  return std::move(r.rep);
}

// ---------------------------------------------------------------------------

Core::Core(std::shared_ptr<const OrbitResolver> resolver, const std::vector<GroupElement>& reps)
    : resolver_(std::move(resolver)) {
  if (reps.empty()) throw InvalidArgument("a core needs at least one vertex");
  for (const auto& r : reps) {
    reps_.push_back(r);
    index_.emplace(resolver_->canonical(r), reps_.size() - 1);
  }
  base_count_ = reps_.size();
}

std::optional<std::size_t> Core::point_of(const GroupElement& x) const {
  const GroupElement c = resolver_->canonical(x);
  if (auto it = index_.find(c); it != index_.end()) return it->second;
  return std::nullopt;
}

Core Core::truncated(std::size_t index) const {
  if (index > tail_.size()) throw InvalidArgument("truncated: index past the tail");
  if (index == tail_.size()) return *this;
  Core out = *this;
  const std::size_t keep = tail_[index].reps_before;
  out.reps_.resize(keep);
  out.tail_.resize(index);
  std::erase_if(out.index_, [keep](const auto& kv) { return kv.second >= keep; });
  return out;
}

Vertebra Core::apply_deletion(const Edge& edge) {
  const CoxeterGroup& g = group();
  const Generator t = edge.label;
  if (t >= g.rank()) throw InvalidArgument("deletion label out of range");
  if (!contains(edge.vertex)) {
    throw NotBounding("edge (" + g.format(edge.vertex) + ", " + g.label(t) + ") starts outside the core");
  }
  if (contains(g.times(edge.vertex, t))) {
    throw NotBounding("wall of edge (" + g.format(edge.vertex) + ", " + g.label(t) +
                      ") does not bound the core");
  }

  // Near side of the wall inside Y, up to H.
  const GeneratorMask link = g.link(t);
  std::vector<GroupElement> near{edge.vertex};
  std::unordered_set<GroupElement> seen{resolver_->canonical(edge.vertex)};
  GeneratorMask labels = 0;
  for (std::size_t i = 0; i < near.size(); ++i) {
    for (GeneratorMask m = link; m != 0; m &= m - 1) {
      const auto u = static_cast<Generator>(std::countr_zero(m));
      GroupElement z = g.times(near[i], u);
      if (!contains(z)) continue;
      labels |= bit(u);
      if (seen.insert(resolver_->canonical(z)).second) near.push_back(std::move(z));
    }
  }

  Vertebra vertebra;
  vertebra.deleted_label = t;
  vertebra.edge_labels = labels;
  const std::size_t before = reps_.size();
  for (const auto& x : near) {
    GroupElement v = g.times(x, t);
    GroupElement c = resolver_->canonical(v);
    if (index_.contains(c)) {
      throw InvariantBreach("deletion of " + g.label(t) + " at " + g.format(edge.vertex) +
                            " revisits an existing orbit at " + g.format(v));
    }
    index_.emplace(c, reps_.size());
    reps_.push_back(std::move(c));
    vertebra.vertices.push_back(std::move(v));
  }

  // New vertices meet the old core only through t-edges, and vertebra edges
  // carry labels commuting with t.
  for (std::size_t i = before; i < reps_.size(); ++i) {
    for (Generator u = 0; u < g.rank(); ++u) {
      const auto q = point_of(g.times(reps_[i], u));
      if (!q) continue;
      if (u == t) {
        if (*q >= before) {
          throw InvariantBreach("vertebra vertex " + g.format(reps_[i]) + " has a new " + g.label(t) + "-neighbour");
        }
      } else if (*q < before) {
        throw InvariantBreach("vertebra vertex " + g.format(reps_[i]) + " touches the old core through " + g.label(u));
      } else if (!g.commute(u, t)) {
        throw InvariantBreach("vertebra edge label " + g.label(u) + " does not commute with " + g.label(t));
      }
    }
  }

  tail_.push_back({edge.vertex, t, before, reps_.size() - before, labels});
  return vertebra;
}

Core restore_core(std::shared_ptr<const OrbitResolver> resolver, const std::vector<GroupElement>& reps,
                  std::size_t base_count, std::vector<TailEntry> tail) {
  if (base_count == 0 || base_count > reps.size()) throw InvalidArgument("restore_core: bad base count");
  Core core(resolver, std::vector<GroupElement>(reps.begin(), reps.begin() + static_cast<std::ptrdiff_t>(base_count)));
  for (const auto& entry : tail) core.apply_deletion({entry.vertex, entry.label});
  if (core.reps() != reps) {
    throw InvalidArgument("restore_core: tail replay does not reproduce the representatives");
  }
  return core;
}

Core trivial_core(std::shared_ptr<const CoxeterGroup> group) {
  auto resolver = std::make_shared<OrbitResolver>(group, SubgroupSpec{});
  return Core(resolver, {group->identity()});
}

bool parabolic_has_infinite_index(const CoxeterGroup& group, GeneratorMask parabolic) {
  // Minimal coset representatives are prefix-closed; finite index bounds
  // their length by the rank.
  const std::size_t target = group.rank() + 1;
  std::unordered_set<GroupElement> dead;
  // Depth-first search for a minimal representative of length `target`.
  struct Frame {
    GroupElement x;
    Generator next;
  };
  std::vector<Frame> frames{{group.identity(), 0}};
  while (!frames.empty()) {
    Frame& f = frames.back();
    if (f.x.length() == target) return true;
    if (f.next >= group.rank()) {
      dead.insert(f.x);
      frames.pop_back();
      continue;
    }
    const Generator s = f.next++;
    if ((group.right_descents(f.x) >> s) & 1U) continue;
    GroupElement y = group.times(f.x, s);
    if ((group.left_descents(y) & parabolic) != 0 || dead.contains(y)) continue;
    frames.push_back({std::move(y), 0});
  }
  return false;
}

Core parabolic_core(std::shared_ptr<const CoxeterGroup> group, GeneratorMask parabolic) {
  if (parabolic == 0) return trivial_core(group);
  if (!parabolic_has_infinite_index(*group, parabolic)) {
    throw InvalidArgument("parabolic subgroup has finite index");
  }
  SubgroupSpec spec;
  spec.kind = SubgroupKind::parabolic;
  spec.parabolic = parabolic;
  auto resolver = std::make_shared<OrbitResolver>(group, spec);
  return Core(resolver, {group->identity()});
}

Core core_from_reps(std::shared_ptr<const CoxeterGroup> group, SubgroupSpec spec,
                    const std::vector<GroupElement>& reps) {
  if (spec.kind == SubgroupKind::parabolic && spec.parabolic != 0 &&
      !parabolic_has_infinite_index(*group, spec.parabolic)) {
    throw InvalidArgument("parabolic subgroup has finite index");
  }
  auto resolver = std::make_shared<OrbitResolver>(group, std::move(spec));
  return Core(resolver, reps);
}

// ---------------------------------------------------------------------------

namespace {

struct BallNode {
  GroupElement element;
  std::size_t parent;   // index of element with last letter removed
  Generator last;
  GeneratorMask descents;
};

std::vector<BallNode> ball_tree(const CoxeterGroup& g, std::size_t radius) {
  std::vector<BallNode> nodes{{g.identity(), 0, 0, 0}};
  std::unordered_map<GroupElement, std::size_t> where{{g.identity(), 0}};
  std::size_t begin = 0;
  for (std::size_t r = 0; r < radius; ++r) {
    const std::size_t end = nodes.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Generator s = 0; s < g.rank(); ++s) {
        if ((nodes[i].descents >> s) & 1U) continue;
        GroupElement y = g.times(nodes[i].element, s);
        if (where.contains(y)) continue;
        const GeneratorMask d = g.right_descents(y);
        where.emplace(y, nodes.size());
        nodes.push_back({std::move(y), i, s, d});
      }
    }
    begin = end;
  }
  return nodes;
}

// Convexity violations seen from representative `a`: core vertices a*w with
// some geodesic from a leaving the core.
std::vector<CoreViolation> convexity_from(const Core& core, const GroupElement& a,
                                          const std::vector<BallNode>& nodes,
                                          std::unordered_map<GroupElement, std::size_t>& where) {
  const CoxeterGroup& g = core.group();
  std::vector<CoreViolation> out;
  std::vector<GroupElement> moved(nodes.size());
  std::vector<char> inside(nodes.size()), good(nodes.size());
  moved[0] = a;
  inside[0] = good[0] = core.contains(a);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    std::vector<Generator> letters = moved[nodes[i].parent].letters();
    g.times_in_place(letters, nodes[i].last);
    moved[i] = GroupElement::from_normal_form(std::move(letters));
    inside[i] = core.contains(moved[i]);
    bool ok = inside[i];
    std::size_t outside_witness = SIZE_MAX;
    for (GeneratorMask m = nodes[i].descents; m != 0 && inside[i]; m &= m - 1) {
      const auto s = static_cast<Generator>(std::countr_zero(m));
      const std::size_t p = where.at(g.times(nodes[i].element, s));
      if (!good[p]) ok = false;
      if (!inside[p] && outside_witness == SIZE_MAX) outside_witness = p;
    }
    good[i] = ok;
    if (inside[i] && outside_witness != SIZE_MAX) {
      out.push_back({CoreViolation::Kind::convexity,
                     "interval(" + g.format(a) + ", " + g.format(moved[i]) + ") contains " +
                         g.format(moved[outside_witness]) + " outside the core"});
    }
  }
  return out;
}

void check_invariance_and_distinctness(const Core& core, CoreReport& report) {
  const CoxeterGroup& g = core.group();
  const OrbitResolver& resolver = core.resolver();
  std::unordered_map<GroupElement, std::size_t> classes;
  const auto gens = core.subgroup().generating_elements(g);
  for (std::size_t i = 0; i < core.reps().size(); ++i) {
    const GroupElement& r = core.reps()[i];
    const OrbitResult own = resolver.resolve(r);
    if (!own.conclusive) {
      report.inconclusive = true;
      report.inconclusive_detail = "orbit of " + g.format(r) + " undecided";
      continue;
    }
    if (auto [it, fresh] = classes.emplace(own.rep, i); !fresh) {
      report.violations.push_back({CoreViolation::Kind::distinctness,
                                   g.format(r) + " and " + g.format(core.reps()[it->second]) +
                                       " lie in one orbit"});
    }
    for (const auto& h : gens) {
      const OrbitResult moved = resolver.resolve(g.multiply(h, r));
      if (!moved.conclusive) {
        report.inconclusive = true;
        report.inconclusive_detail = "orbit of " + g.format(g.multiply(h, r)) + " undecided";
      } else if (moved.rep != own.rep) {
        report.violations.push_back({CoreViolation::Kind::invariance,
                                     "generator " + g.format(h) + " moves " + g.format(r) +
                                         " to another orbit"});
      }
    }
  }
}

CoreReport verify_impl(const Core& core, std::size_t window, bool parallel) {
  CoreReport report;
  try {
    check_invariance_and_distinctness(core, report);
  } catch (const InconclusiveOrbit& e) {
    report.inconclusive = true;
    report.inconclusive_detail = e.what();
  }

  const CoxeterGroup& g = core.group();
  const auto nodes = ball_tree(g, 2 * window);
  std::unordered_map<GroupElement, std::size_t> where;
  for (std::size_t i = 0; i < nodes.size(); ++i) where.emplace(nodes[i].element, i);

  const auto count = static_cast<std::ptrdiff_t>(core.reps().size());
  std::vector<std::vector<CoreViolation>> found(core.reps().size());
  std::vector<std::string> inconclusive(core.reps().size());
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      found[static_cast<std::size_t>(i)] = convexity_from(core, core.reps()[static_cast<std::size_t>(i)], nodes, where);
    } catch (const InconclusiveOrbit& e) {
      inconclusive[static_cast<std::size_t>(i)] = e.what();
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (auto& v : found[i]) report.violations.push_back(std::move(v));
    if (!inconclusive[i].empty()) {
      report.inconclusive = true;
      report.inconclusive_detail = inconclusive[i];
    }
  }
  report.passed = report.violations.empty() && !report.inconclusive;
  return report;
}

}  // namespace

CoreReport verify_core(const Core& core, std::size_t window) { return verify_impl(core, window, true); }

CoreReport verify_core_serial(const Core& core, std::size_t window) {
  return verify_impl(core, window, false);
}

std::vector<Reflection> bounding_hyperplanes(const Core& core, const GroupElement& at) {
  if (!core.contains(at)) throw InvalidArgument("bounding_hyperplanes: vertex outside the core");
  const CoxeterGroup& g = core.group();
  std::vector<Reflection> out;
  for (Generator s = 0; s < g.rank(); ++s) {
    if (!core.contains(g.times(at, s))) out.push_back(g.reflection_of_edge(at, s));
  }
  return out;
}

std::vector<Edge> bounding_edges(const Core& core) {
  const CoxeterGroup& g = core.group();
  std::vector<Edge> out;
  for (const auto& r : core.reps()) {
    for (Generator s = 0; s < g.rank(); ++s) {
      if (!core.contains(g.times(r, s))) out.push_back({r, s});
    }
  }
  return out;
}

std::pair<Core, Vertebra> delete_edge(const Core& core, const Edge& edge) {
  Core out = core;
  Vertebra v = out.apply_deletion(edge);
  return {std::move(out), std::move(v)};
}

std::pair<Core, Vertebra> delete_wall(const Core& core, const Reflection& wall,
                                      std::size_t search_radius) {
  const CoxeterGroup& g = core.group();
  const Generator t = wall.label;
  const GroupElement start = g.carrier_vertex(wall);
  // Walk the carrier on one side of the wall.
  std::vector<GroupElement> frontier{start};
  std::unordered_set<GroupElement> seen{start};
  for (std::size_t depth = 0; depth <= search_radius; ++depth) {
    std::vector<GroupElement> next;
    for (const auto& z : frontier) {
      const GroupElement across = g.times(z, t);
      const bool here = core.contains(z);
      const bool there = core.contains(across);
      if (here && !there) return delete_edge(core, {z, t});
      if (!here && there) return delete_edge(core, {across, t});
      for (GeneratorMask m = g.link(t); m != 0; m &= m - 1) {
        GroupElement y = g.times(z, static_cast<Generator>(std::countr_zero(m)));
        if (seen.insert(y).second) next.push_back(std::move(y));
      }
    }
    frontier = std::move(next);
  }
  throw NotBounding("wall " + g.format(wall.element) + " does not bound the core within radius " +
                    std::to_string(search_radius));
}

PathDeletion delete_with_labels(const Core& core, const GroupElement& start,
                                const std::vector<Generator>& labels) {
  PathDeletion out{core, {}, start};
  const CoxeterGroup& g = core.group();
  for (std::size_t i = 0; i < labels.size(); ++i) {
    try {
      out.vertebrae.push_back(out.core.apply_deletion({out.end, labels[i]}));
    } catch (const NotBounding& e) {
      throw NotBounding("deletion " + std::to_string(i) + " (label " + g.label(labels[i]) + " at " +
                        g.format(out.end) + "): " + e.what());
    }
    out.end = g.times(out.end, labels[i]);
  }
  return out;
}

ReduceResult reduce_to_point(const Core& core, std::optional<Generator> target_label) {
  const CoxeterGroup& g = core.group();
  const std::size_t n = g.rank();
  if (n < 2) throw InvalidArgument("reduce_to_point needs at least two generators");
  const HypothesisReport hyp = check_hypotheses(g.graph());
  if (!hyp.complement_connected) {
    throw HypothesisFailure("complement graph is disconnected (" +
                            std::to_string(hyp.complement_components.size()) + " components)");
  }
  if (target_label && *target_label >= n) throw InvalidArgument("target label out of range");
  const SimplicialGraph co = complement(g.graph());
  const std::size_t diameter = *hyp.complement_diameter;

  const auto edges = bounding_edges(core);
  if (edges.empty()) throw InvalidArgument("core has no bounding wall");

  ReduceResult result{core, 0, {}, 0, 0, {}};
  Core& c = result.core;
  auto step = [&](const GroupElement& at, Generator label) {
    const Vertebra v = c.apply_deletion({at, label});
    ++result.deletions;
    result.last_label = label;
    result.label_sets.push_back(v.edge_labels);
    result.singleton = g.times(at, label);
    return v.edge_labels;
  };

  GeneratorMask labels = step(edges.front().vertex, edges.front().label);
  result.guard = std::max<std::size_t>(1, static_cast<std::size_t>(std::popcount(labels))) *
                 (diameter + 1) * n;
  while (labels != 0) {
    std::optional<std::pair<Generator, Generator>> pick;
    for (Generator a = 0; a < n && !pick; ++a) {
      if (!((labels >> a) & 1U)) continue;
      for (Generator b = 0; b < n; ++b) {
        if (((labels >> b) & 1U) || b == a || g.commute(a, b)) continue;
        pick = std::make_pair(a, b);
        break;
      }
    }
    if (!pick) throw InvariantBreach("no non-commuting pair across the vertebra label set");
    const auto path = shortest_path(co, result.last_label, pick->second);
    const GeneratorMask round_start = labels;
    for (std::size_t j = 1; j < path.size(); ++j) {
      if (result.deletions >= result.guard) {
        throw BudgetExhausted("reduce_to_point exceeded its guard of " + std::to_string(result.guard) +
                              " deletions");
      }
      const GeneratorMask next = step(result.singleton, static_cast<Generator>(path[j]));
      if ((next & ~labels) != 0) {
        throw InvariantBreach("vertebra label set grew along a non-commuting path");
      }
      labels = next;
    }
    if ((labels & ~round_start) != 0 || labels == round_start) {
      throw InvariantBreach("vertebra label set did not shrink in a reduction round");
    }
  }
  if (target_label && result.last_label != *target_label) {
    const auto path = shortest_path(co, result.last_label, *target_label);
    for (std::size_t j = 1; j < path.size(); ++j) {
      if (step(result.singleton, static_cast<Generator>(path[j])) != 0) {
        throw InvariantBreach("vertebra stopped being a single vertex on the final path");
      }
    }
  }
  return result;
}

Core expand(const Core& core, std::size_t radius) {
  if (radius == 0) return core;
  const CoxeterGroup& g = core.group();
  std::vector<GroupElement> reps = core.reps();
  std::unordered_set<GroupElement> classes;
  for (const auto& r : reps) classes.insert(core.resolver().canonical(r));
  for (std::size_t step = 0; step < radius; ++step) {
    const std::size_t count = reps.size();
    for (std::size_t i = 0; i < count; ++i) {
      for (GeneratorMask clique : g.cliques()) {
        std::vector<Generator> letters = reps[i].letters();
        for (GeneratorMask m = clique; m != 0; m &= m - 1) {
          g.times_in_place(letters, static_cast<Generator>(std::countr_zero(m)));
        }
        GroupElement c = core.resolver().canonical(GroupElement::from_normal_form(std::move(letters)));
        if (classes.insert(c).second) reps.push_back(std::move(c));
      }
    }
  }
  return Core(core.resolver_ptr(), reps);
}

Core grow_tail(const Core& core, const GroupElement& start, Generator first, Generator second,
               std::size_t count) {
  const CoxeterGroup& g = core.group();
  if (first == second || g.commute(first, second)) {
    throw InvalidArgument("grow_tail labels must be distinct and not commute");
  }
  Core out = core;
  GroupElement at = start;
  for (std::size_t i = 0; i < count; ++i) {
    const Generator label = i % 2 == 0 ? first : second;
    const Vertebra v = out.apply_deletion({at, label});
    if (!v.singleton()) {
      throw InvariantBreach("tail deletion " + std::to_string(i) + " produced a vertebra with " +
                            std::to_string(v.vertices.size()) + " vertices");
    }
    at = g.times(at, label);
  }
  if (out.size() != core.size() + count) throw InvariantBreach("tail growth miscounted cosets");
  return out;
}

std::string export_dot(const Core& core, std::size_t window) {
  const CoxeterGroup& g = core.group();
  std::vector<GroupElement> vertices;
  std::unordered_map<GroupElement, std::size_t> id;
  for (const auto& r : core.reps()) {
    if (id.emplace(r, vertices.size()).second) vertices.push_back(r);
  }
  std::size_t begin = 0;
  for (std::size_t depth = 0; depth < window; ++depth) {
    const std::size_t end = vertices.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Generator s = 0; s < g.rank(); ++s) {
        GroupElement y = g.times(vertices[i], s);
        if (id.contains(y) || !core.contains(y)) continue;
        id.emplace(y, vertices.size());
        vertices.push_back(std::move(y));
      }
    }
    begin = end;
  }

  std::ostringstream out;
  out << "graph core {\n  node [shape=circle];\n";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    out << "  v" << i << " [label=\"" << g.format(vertices[i]) << "\"";
    if (*core.point_of(vertices[i]) >= core.base_count()) out << ", style=filled, fillcolor=lightgray";
    out << "];\n";
  }
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Generator s = 0; s < g.rank(); ++s) {
      const auto it = id.find(g.times(vertices[i], s));
      if (it == id.end() || it->second < i) continue;
      out << "  v" << i << " -- v" << it->second << " [label=\"" << g.label(s) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace coxsep

#include "coxsep/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <unordered_set>

#include "coxsep/errors.hpp"

namespace coxsep {

std::string to_string(Target t) { return t == Target::alternating ? "alternating" : "symmetric"; }

ProductGuard guard_product(const SimplicialGraph& graph) {
  ProductGuard guard;
  guard.components = components(complement(graph));
  if (guard.components.size() <= 1) {
    guard.message = "complement graph is connected";
    return guard;
  }
  guard.refused = true;
  guard.message = "complement graph has " + std::to_string(guard.components.size()) +
                  " components; the group is the direct product";
  for (std::size_t i = 0; i < guard.components.size(); ++i) {
    guard.message += i == 0 ? " C{" : " x C{";
    for (std::size_t j = 0; j < guard.components[i].size(); ++j) {
      guard.message += (j ? "," : "") + graph.label(guard.components[i][j]);
    }
    guard.message += "}";
  }
  return guard;
}

namespace {

std::size_t next_prime(std::size_t from, std::size_t limit) {
  for (std::size_t k = 0; k <= limit; ++k) {
    if (is_prime(from + k)) return from + k;
  }
  throw BudgetExhausted("no prime within " + std::to_string(limit) + " of " + std::to_string(from));
}

bool contains_all(const Core& core, const std::vector<GroupElement>& xs) {
  return std::all_of(xs.begin(), xs.end(), [&](const GroupElement& x) { return core.contains(x); });
}

// Second alternating label: non-commuting with `s0`, preferring one for which
// the square construction works in both roles.
Generator pick_partner(const CoxeterGroup& g, Generator s0) {
  std::optional<Generator> fallback;
  for (Generator s = 0; s < g.rank(); ++s) {
    if (s == s0 || g.commute(s, s0)) continue;
    if (squares_applicable(g, s, s0) && squares_applicable(g, s0, s)) return s;
    if (!fallback) fallback = s;
  }
  if (!fallback) throw HypothesisFailure("every generator commutes with " + g.label(s0));
  return *fallback;
}

// Sizes of the balls of radius 0..radius around He in the quotient graph
// H\Cay: orbits meeting the Cayley ball.
std::vector<std::size_t> quotient_ball_sizes(const OrbitResolver& resolver, std::size_t radius) {
  const CoxeterGroup& g = resolver.group();
  std::unordered_set<GroupElement> seen;
  std::vector<std::size_t> out;
  for (const auto& layer : g.ball(radius)) {
    for (const auto& x : layer) seen.insert(resolver.canonical(x));
    out.push_back(seen.size());
  }
  return out;
}

}  // namespace

SeparationTrace separate_traced(const SeparationRequest& request) {
  const ProductGuard guard = guard_product(request.graph);
  if (guard.refused) throw HypothesisFailure(guard.message);
  const HypothesisReport hyp = check_hypotheses(request.graph);
  if (!hyp.nondiscrete) throw HypothesisFailure("graph has no edges");
  if (!hyp.size_ok) throw HypothesisFailure("graph has fewer than 3 vertices");
  if (request.gammas.empty()) throw InvalidArgument("no elements to separate");

  auto group = std::make_shared<const CoxeterGroup>(request.graph);
  const CoxeterGroup& g = *group;
  SubgroupSpec spec = request.subgroup;
  spec.enumeration_bound = request.config.enumeration_bound;
  std::vector<GroupElement> reps = request.core_reps;
  if (reps.empty()) reps.push_back(g.identity());
  Core core = core_from_reps(group, spec, reps);
  if (!core.contains(g.identity())) throw InvalidArgument("the core must contain the identity vertex");

  SeparationTrace trace;
  QuotientReport& report = trace.report;
  report.generator_labels = g.labels();
  report.target = request.target;
  report.config = request.config;
  report.subgroup = spec;
  report.subgroup_generators = spec.generating_elements(g);
  if (spec.kind == SubgroupKind::words) {
    // An infinite quotient graph has strictly growing balls; a stall proves
    // finite index.
    const auto sizes = quotient_ball_sizes(core.resolver(), request.config.window + 1);
    for (std::size_t r = 1; r < sizes.size(); ++r) {
      if (sizes[r] == sizes[r - 1]) {
        throw HypothesisFailure("subgroup has finite index " + std::to_string(sizes[r]));
      }
    }
    report.assumptions.push_back("subgroup given by words: quotient balls grow up to radius " +
                                 std::to_string(sizes.size() - 1) +
                                 "; infinite index and quasiconvexity are assumed beyond that");
  }

  const CoreReport checked = verify_core(core, request.config.window);
  if (checked.inconclusive) throw InconclusiveOrbit("input core: " + checked.inconclusive_detail);
  if (!checked.passed) {
    throw InvalidArgument("input core fails verification: " + checked.violations.front().witness);
  }
  for (const auto& gamma : request.gammas) {
    if (core.resolver().in_subgroup(gamma)) {
      throw InvalidArgument("element " + g.format(gamma) + " lies in the subgroup");
    }
  }
  report.core_stats.initial_reps = core.size();

  // Y must contain the cubes at e and every gamma.
  std::vector<GroupElement> needed = request.gammas;
  for (GeneratorMask clique : g.cliques()) {
    std::vector<Generator> letters;
    for (GeneratorMask m = clique; m != 0; m &= m - 1) letters.push_back(static_cast<Generator>(std::countr_zero(m)));
    needed.push_back(g.reduce(letters));
  }
  while (!contains_all(core, needed)) {
    core = expand(core, 1);
    ++report.core_stats.expansion_radius;
  }
  report.core_stats.expanded_reps = core.size();

  std::optional<Generator> s0;
  for (Generator s = 0; s < g.rank() && !s0; ++s) {
    if (!core.resolver().in_subgroup(g.generator(s))) s0 = s;
  }
  if (!s0) throw HypothesisFailure("subgroup contains every generator");
  const ReduceResult reduced = reduce_to_point(core, *s0);
  const Core& start = reduced.core;
  report.core_stats.reduced_reps = start.size();
  const Generator s1 = pick_partner(g, *s0);
  report.tail_first = s1;
  report.tail_second = *s0;

  const std::size_t d = *hyp.complement_diameter;
  report.margin = (g.rank() - 2) * (2 * d + 1) + 16;
  const std::size_t required = std::max(report.margin, parity_budget(g, s1, *s0)) + 1;
  std::size_t max_support = 0;
  for (const auto& p : build_action(start).images) max_support = std::max(max_support, support(p));
  std::size_t threshold = request.config.threshold_factor * max_support + report.margin;
  const ParityTarget parity_target =
      request.target == Target::alternating ? ParityTarget::all_even : ParityTarget::one_odd;

  for (std::size_t attempt = 1;; ++attempt, threshold *= 2) {
    const std::size_t floor = std::max(threshold, start.size() + required);
    const std::size_t degree = next_prime(floor, request.config.prime_search_limit);
    if (degree > request.config.max_degree) {
      throw BudgetExhausted("degree " + std::to_string(degree) + " exceeds max_degree " +
                            std::to_string(request.config.max_degree));
    }
    const Core grown = grow_tail(start, reduced.singleton, s1, *s0, degree - start.size());
    ParityFix fixed = fix_parities(grown, parity_target, s1, *s0, start.tail().size());
    const PermutationAction action = build_action(fixed.core);
    const auto problems = check_action(action, g, report.subgroup_generators);
    if (!problems.empty()) throw InvariantBreach("coset action unsound: " + problems.front());

    RecognitionResult rec = recognize(action.images, action.degree);
    const Verdict wanted = request.target == Target::alternating ? Verdict::alternating : Verdict::symmetric;
    if (rec.verdict != wanted) continue;

    report.degree = action.degree;
    report.base = action.base;
    report.generator_images = action.images;
    report.parities = parity_table(action);
    report.recognition = std::move(rec);
    report.subgroup_fixes_base = true;
    for (const auto& gamma : request.gammas) {
      const std::size_t image = action.image(gamma)[action.base];
      report.separation.push_back({gamma.letters(), image != action.base, image});
    }
    report.core_stats.final_reps = fixed.core.size();
    report.core_stats.tail_length = fixed.core.tail().size() - start.tail().size();
    report.core_stats.deletions = fixed.core.tail().size();
    report.surgeries = fixed.steps.size();
    report.threshold = threshold;
    report.attempts = attempt;
    const auto issues = verify_report(report, request);
    if (!issues.empty()) throw InvariantBreach("report failed re-verification: " + issues.front());
    trace.core = std::move(fixed.core);
    return trace;
  }
}

QuotientReport separate(const SeparationRequest& request) { return separate_traced(request).report; }

std::vector<std::string> verify_report(const QuotientReport& report, const SeparationRequest& request) {
  std::vector<std::string> issues;
  const CoxeterGroup g(request.graph);
  const std::size_t n = report.degree;
  if (!is_prime(n)) issues.push_back("degree is not prime");
  if (report.generator_images.size() != g.rank()) {
    issues.push_back("wrong number of generator images");
    return issues;
  }
  PermutationAction action;
  action.degree = n;
  action.base = report.base;
  action.images = report.generator_images;
  for (auto& p : check_action(action, g, report.subgroup_generators)) issues.push_back(std::move(p));
  if (parity_table(action) != report.parities) issues.push_back("parity table disagrees with the images");
  const BigInt order = group_order(action.images, n);
  const BigInt full = factorial(n);
  const BigInt expected = report.target == Target::alternating ? full / 2 : full;
  if (order != expected || report.recognition.order != order) issues.push_back("group order mismatch");
  const GeneratorMask odd = odd_generators(report.parities);
  if (report.target == Target::alternating && odd != 0) issues.push_back("an odd generator in an alternating run");
  if (report.target == Target::symmetric && std::popcount(odd) != 1) {
    issues.push_back("symmetric run without exactly one odd generator");
  }
  if (report.separation.size() != request.gammas.size()) issues.push_back("separation list incomplete");
  for (std::size_t i = 0; i < request.gammas.size() && i < report.separation.size(); ++i) {
    const std::size_t image = action.image(request.gammas[i])[action.base];
    if (image == action.base || !report.separation[i].moves_base || report.separation[i].image_of_base != image) {
      issues.push_back("element " + g.format(request.gammas[i]) + " is not separated");
    }
  }
  return issues;
}

SeparationRequest raag_to_racg(const RaagRequest& request) {
  if (request.graph.size() < 2) throw HypothesisFailure("RAAG graph needs at least two vertices");
  const ProductGuard guard = guard_product(request.graph);
  if (guard.refused) throw HypothesisFailure(guard.message);
  if (request.gammas.empty()) throw InvalidArgument("no elements to separate");
  SeparationRequest out;
  out.graph = double_graph(request.graph);
  const CoxeterGroup g(out.graph);
  if (request.subgroup_words.empty()) {
    out.subgroup.kind = SubgroupKind::trivial;
  } else {
    out.subgroup.kind = SubgroupKind::words;
    for (const auto& w : request.subgroup_words) {
      out.subgroup.generators.push_back(g.reduce(embed_raag_word(request.graph, w)));
    }
  }
  for (const auto& w : request.gammas) out.gammas.push_back(g.reduce(embed_raag_word(request.graph, w)));
  out.target = request.target;
  out.config = request.config;
  return out;
}

QuotientReport raag_separate(const RaagRequest& request) { return separate(raag_to_racg(request)); }

}  // namespace coxsep

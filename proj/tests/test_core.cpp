#include <gtest/gtest.h>

#include <random>
#include <set>

#include "coxsep/core.hpp"
#include "coxsep/errors.hpp"
#include "oracle/deletion.hpp"
#include "support.hpp"

using namespace coxsep;

namespace {

GroupElement word(const CoxeterGroup& g, std::vector<Generator> letters) { return g.reduce(letters); }

std::size_t max_rep_length(const Core& core) {
  std::size_t m = 0;
  for (const auto& r : core.reps()) m = std::max(m, r.length());
  return m;
}

// Returns the largest vertebra seen.
std::size_t random_deletions(const SimplicialGraph& graph, GeneratorMask parabolic, unsigned seed,
                             std::size_t steps) {
  auto g = fixtures::group(graph);
  oracle::Tits t(graph);
  Core core = parabolic ? parabolic_core(g, parabolic) : trivial_core(g);
  std::mt19937 rng(seed);
  std::size_t widest = 0;
  for (std::size_t i = 0; i < steps; ++i) {
    const auto edges = bounding_edges(core);
    if (edges.empty()) {
      ADD_FAILURE() << "no bounding edge";
      break;
    }
    const Edge edge = edges[rng() % edges.size()];
    const auto expected = oracle::deletion_oracle(t, core, edge, parabolic, max_rep_length(core) + 3);
    auto [next, vertebra] = delete_edge(core, edge);
    EXPECT_EQ(next.size(), core.size() + vertebra.vertices.size());
    widest = std::max(widest, vertebra.vertices.size());
    for (GeneratorMask m = vertebra.edge_labels; m != 0; m &= m - 1) {
      EXPECT_TRUE(core.group().commute(static_cast<Generator>(std::countr_zero(m)), edge.label));
    }
    EXPECT_EQ(oracle::orbit_set(t, next, parabolic), expected) << "seed " << seed << " step " << i;
    const auto report = verify_core(next, 1);
    EXPECT_TRUE(report.passed) << (report.violations.empty() ? "" : report.violations[0].witness);
    core = std::move(next);
  }
  return widest;
}

}  // namespace

TEST(Orbits, TrivialAndParabolic) {
  auto g = fixtures::group(fixtures::c5());
  OrbitResolver trivial(g, {});
  auto x = word(*g, {2, 0});
  EXPECT_EQ(trivial.canonical(x), x);
  SubgroupSpec spec;
  spec.kind = SubgroupKind::parabolic;
  spec.parabolic = bit(0);
  OrbitResolver para(g, spec);
  EXPECT_EQ(para.canonical(word(*g, {0, 2})), word(*g, {2}));
  EXPECT_EQ(para.canonical(word(*g, {1, 0})), word(*g, {1}));
  EXPECT_TRUE(para.in_subgroup(word(*g, {0})));
  EXPECT_FALSE(para.in_subgroup(word(*g, {1})));
}

TEST(Orbits, WordSubgroup) {
  auto g = fixtures::group(fixtures::c5());
  SubgroupSpec spec;
  spec.kind = SubgroupKind::words;
  spec.generators = {word(*g, {0, 3})};
  OrbitResolver row(g, spec);
  EXPECT_TRUE(row.in_subgroup(word(*g, {0, 3, 0, 3})));
  EXPECT_TRUE(row.in_subgroup(word(*g, {3, 0})));
  EXPECT_FALSE(row.in_subgroup(word(*g, {0})));
  EXPECT_EQ(row.canonical(word(*g, {3})), word(*g, {0}));
  EXPECT_TRUE(row.resolve(word(*g, {1})).conclusive);
}

TEST(Orbits, InconclusiveWhenTheBallIsTooSmall) {
  auto g = fixtures::group(fixtures::c5());
  SubgroupSpec spec;
  spec.kind = SubgroupKind::words;
  spec.generators = {word(*g, {0, 3})};
  spec.enumeration_bound = 1;
  OrbitResolver row(g, spec);
  const auto far = word(*g, {0, 3, 0, 3, 0, 3, 1});
  EXPECT_FALSE(row.resolve(far).conclusive);
  EXPECT_THROW(row.canonical(far), InconclusiveOrbit);
}

TEST(Core, ParabolicIndex) {
  auto g = fixtures::group(fixtures::c5());
  EXPECT_TRUE(parabolic_has_infinite_index(*g, bit(0)));
  EXPECT_FALSE(parabolic_has_infinite_index(*g, 0x1F));
  EXPECT_THROW(parabolic_core(g, 0x1F), InvalidArgument);
  // In the path 1-2-3 the middle generator is central: W_{1,3} has index 2.
  auto p3 = fixtures::group(fixtures::path(3));
  EXPECT_FALSE(parabolic_has_infinite_index(*p3, bit(0) | bit(2)));
  EXPECT_TRUE(parabolic_has_infinite_index(*p3, bit(0)));
}

TEST(Core, DeletionOnTrivialAndParabolicCores) {
  unsigned seed = 1;
  std::size_t widest = 0;
  for (GeneratorMask parabolic : {GeneratorMask{0}, bit(0)}) {
    for (int rep = 0; rep < 6; ++rep) {
      widest = std::max(widest, random_deletions(fixtures::c5(), parabolic, seed++, 8));
      widest = std::max(widest, random_deletions(fixtures::p4(), parabolic, seed++, 8));
    }
  }
  EXPECT_GT(widest, 1U);
}

TEST(Core, DeletionRejectsNonBoundingEdges) {
  auto g = fixtures::group(fixtures::c5());
  Core core = trivial_core(g);
  EXPECT_THROW(delete_edge(core, {word(*g, {1}), 0}), NotBounding);
  auto [grown, v] = delete_edge(core, {g->identity(), 0});
  EXPECT_TRUE(v.singleton());
  EXPECT_THROW(delete_edge(grown, {g->identity(), 0}), NotBounding);
}

TEST(Core, DeleteWallFindsTheEdge) {
  auto g = fixtures::group(fixtures::c5());
  Core square = core_from_reps(g, {}, {g->identity(), word(*g, {0}), word(*g, {1}), word(*g, {0, 1})});
  // The wall of s3 at e also bounds the square at s2.
  auto wall = g->reflection_of_edge(word(*g, {1}), 2);
  auto [next, vertebra] = delete_wall(square, wall, 3);
  EXPECT_EQ(vertebra.deleted_label, 2);
  EXPECT_EQ(next.size(), square.size() + vertebra.vertices.size());
}

TEST(Core, TruncationAndRestore) {
  auto g = fixtures::group(fixtures::c5());
  auto path = delete_with_labels(trivial_core(g), g->identity(), {0, 2, 0, 2, 4});
  const Core& core = path.core;
  ASSERT_EQ(core.tail().size(), 5U);
  EXPECT_EQ(core.size(), 6U);
  auto back = core.truncated(2);
  EXPECT_EQ(back.tail().size(), 2U);
  EXPECT_EQ(back.size(), 3U);
  EXPECT_FALSE(back.contains(word(*g, {0, 2, 0})));
  auto again = restore_core(core.resolver_ptr(), core.reps(), core.base_count(), core.tail());
  EXPECT_EQ(again.reps(), core.reps());
  auto bad = core.reps();
  std::swap(bad[1], bad[2]);
  EXPECT_THROW(restore_core(core.resolver_ptr(), bad, core.base_count(), core.tail()), InvalidArgument);
}

TEST(Core, VerifyDetectsBrokenCores) {
  auto g = fixtures::group(fixtures::c5());
  auto gap = core_from_reps(g, {}, {g->identity(), word(*g, {0, 2})});
  auto report = verify_core(gap, 2);
  EXPECT_FALSE(report.passed);
  ASSERT_FALSE(report.violations.empty());
  EXPECT_EQ(report.violations[0].kind, CoreViolation::Kind::convexity);

  SubgroupSpec spec;
  spec.kind = SubgroupKind::parabolic;
  spec.parabolic = bit(0);
  auto twice = core_from_reps(g, spec, {g->identity(), word(*g, {0})});
  auto dup = verify_core(twice, 2);
  EXPECT_FALSE(dup.passed);
  bool distinct = false;
  for (const auto& v : dup.violations) distinct |= v.kind == CoreViolation::Kind::distinctness;
  EXPECT_TRUE(distinct);

  auto ok = verify_core(trivial_core(g), 3);
  EXPECT_TRUE(ok.passed);
}

TEST(Core, SerialAndParallelVerificationAgree) {
  auto g = fixtures::group(fixtures::c5());
  auto big = expand(trivial_core(g), 2);
  auto a = verify_core(big, 3);
  auto b = verify_core_serial(big, 3);
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.violations.size(), b.violations.size());
  EXPECT_TRUE(a.passed);
}

TEST(Core, ExpandIsTheCubeNeighbourhood) {
  auto g = fixtures::group(fixtures::c5());
  auto one = expand(trivial_core(g), 1);
  EXPECT_EQ(one.size(), g->cliques().size());
  auto two = expand(trivial_core(g), 2);
  for (const auto& layer : g->ball(2))
    for (const auto& x : layer) EXPECT_TRUE(two.contains(x));
  EXPECT_TRUE(verify_core(two, 3).passed);
  EXPECT_TRUE(two.tail().empty());
}

TEST(Reduce, SingletonForEveryTarget) {
  auto g = fixtures::group(fixtures::c5());
  SubgroupSpec para;
  para.kind = SubgroupKind::parabolic;
  para.parabolic = bit(0);
  std::vector<Core> cores{
      trivial_core(g), parabolic_core(g, bit(0)),
      core_from_reps(g, {}, {g->identity(), word(*g, {0}), word(*g, {1}), word(*g, {0, 1})}),
      expand(trivial_core(g), 1)};
  for (const auto& core : cores) {
    for (Generator target = 0; target < 5; ++target) {
      auto r = reduce_to_point(core, target);
      EXPECT_EQ(r.last_label, target);
      ASSERT_FALSE(r.core.tail().empty());
      EXPECT_EQ(r.core.tail().back().vertebra_size, 1U);
      EXPECT_EQ(r.core.tail().back().label, target);
      EXPECT_TRUE(r.core.contains(r.singleton));
      const std::size_t first = std::max<std::size_t>(1, std::popcount(r.label_sets.front()));
      EXPECT_EQ(r.guard, first * 3 * 5);
      EXPECT_LE(r.deletions, r.guard + 2);
      for (std::size_t i = 1; i < r.label_sets.size(); ++i) {
        EXPECT_EQ(r.label_sets[i] & ~r.label_sets[i - 1], 0U);
      }
      EXPECT_TRUE(verify_core(r.core, 1).passed);
    }
  }
}

TEST(Reduce, RefusesDisconnectedComplement) {
  auto g = fixtures::group(fixtures::cycle(4));
  EXPECT_THROW(reduce_to_point(trivial_core(g), std::nullopt), HypothesisFailure);
}

TEST(Tail, GrowsByOneOrbitPerDeletion) {
  auto g = fixtures::group(fixtures::c5());
  auto r = reduce_to_point(trivial_core(g), 0);
  auto grown = grow_tail(r.core, r.singleton, 2, 0, 40);
  EXPECT_EQ(grown.size(), r.core.size() + 40);
  for (std::size_t i = r.core.tail().size(); i < grown.tail().size(); ++i) {
    EXPECT_EQ(grown.tail()[i].vertebra_size, 1U);
    EXPECT_EQ(grown.tail()[i].label, (i - r.core.tail().size()) % 2 == 0 ? 2 : 0);
  }
  EXPECT_THROW(grow_tail(r.core, r.singleton, 0, 1, 4), InvalidArgument);
  EXPECT_TRUE(verify_core(grown, 1).passed);
}

TEST(Dot, SmallCores) {
  auto g = fixtures::group(fixtures::c5());
  auto single = export_dot(trivial_core(g), 2);
  EXPECT_NE(single.find("v0 [label=\"e\"]"), std::string::npos);
  EXPECT_EQ(single.find("v1"), std::string::npos);
  EXPECT_EQ(single.find("--"), std::string::npos);

  auto [two, v] = delete_edge(trivial_core(g), {g->identity(), 0});
  auto dot = export_dot(two, 2);
  EXPECT_NE(dot.find("v0 -- v1 [label=\"1\"]"), std::string::npos);
  EXPECT_NE(dot.find("fillcolor=lightgray"), std::string::npos);
}

TEST(Dot, PentagonRow) {
  auto g = fixtures::group(fixtures::c5());
  SubgroupSpec spec;
  spec.kind = SubgroupKind::words;
  spec.generators = {word(*g, {0, 3})};
  auto row = core_from_reps(g, spec, {g->identity(), word(*g, {0})});
  EXPECT_TRUE(verify_core(row, 3).passed);
  auto dot = export_dot(row, 2);
  std::size_t nodes = 0, edges = 0;
  for (std::size_t p = dot.find("[label="); p != std::string::npos; p = dot.find("[label=", p + 1)) ++nodes;
  for (std::size_t p = dot.find(" -- "); p != std::string::npos; p = dot.find(" -- ", p + 1)) ++edges;
  EXPECT_EQ(edges, 5U);
  EXPECT_EQ(nodes - edges, 6U);
}

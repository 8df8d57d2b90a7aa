#include <gtest/gtest.h>

#include <random>

#include "coxsep/errors.hpp"
#include "coxsep/permgroup.hpp"
#include "oracle/tits.hpp"

using namespace coxsep;

namespace {

std::vector<std::vector<std::uint32_t>> raw(const std::vector<Permutation>& gens) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& g : gens) out.push_back(g.images());
  return out;
}

Permutation random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<std::uint32_t> img(n);
  std::iota(img.begin(), img.end(), 0U);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

}  // namespace

TEST(Permutation, CycleNotationRoundTrip) {
  auto p = Permutation::parse_cycles("(1 2 3)(4 5)", 6);
  EXPECT_EQ(p[0], 1U);
  EXPECT_EQ(p[2], 0U);
  EXPECT_EQ(p[5], 5U);
  EXPECT_EQ(p.to_cycle_string(), "(1 2 3)(4 5)");
  EXPECT_EQ(Permutation(4).to_cycle_string(), "()");
  EXPECT_THROW(Permutation::parse_cycles("(0 1)", 3), InvalidArgument);
  EXPECT_THROW(Permutation::parse_cycles("(1 2)(2 3)", 3), InvalidArgument);
  EXPECT_THROW(Permutation::parse_cycles("(1 2", 3), InvalidArgument);
  EXPECT_THROW(Permutation(std::vector<std::uint32_t>{0, 0}), InvalidArgument);
}

TEST(Permutation, ProductAppliesLeftFirst) {
  auto a = Permutation::parse_cycles("(1 2)", 3);
  auto b = Permutation::parse_cycles("(2 3)", 3);
  // x -> b(a(x)): 1 -> 2 -> 3.
  EXPECT_EQ((a * b)[0], 2U);
  EXPECT_TRUE((a * a.inverse()).is_identity());
}

TEST(Permutation, ParityIsAHomomorphism) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    auto a = random_perm(rng, n);
    auto b = random_perm(rng, n);
    const bool odd_a = parity(a) == Parity::odd;
    const bool odd_b = parity(b) == Parity::odd;
    EXPECT_EQ(parity(a * b) == Parity::odd, odd_a != odd_b);
    EXPECT_EQ(parity(a.inverse()), parity(a));
  }
  EXPECT_EQ(parity(Permutation::parse_cycles("(1 2)", 2)), Parity::odd);
  EXPECT_EQ(parity(Permutation::parse_cycles("(1 2 3)", 3)), Parity::even);
  EXPECT_EQ(support(Permutation::parse_cycles("(1 2 3)(5 6)", 7)), 5U);
}

TEST(Permutation, OrbitsAndTransitivity) {
  std::vector<Permutation> gens{Permutation::parse_cycles("(1 2)", 4),
                                Permutation::parse_cycles("(3 4)", 4)};
  EXPECT_FALSE(is_transitive(gens, 4));
  EXPECT_EQ(orbit(gens, 4, 2).size(), 2U);
  gens.push_back(Permutation::parse_cycles("(2 3)", 4));
  EXPECT_TRUE(is_transitive(gens, 4));
}

TEST(Permutation, Primes) {
  std::vector<std::size_t> primes;
  for (std::size_t n = 0; n < 30; ++n)
    if (is_prime(n)) primes.push_back(n);
  EXPECT_EQ(primes, (std::vector<std::size_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
  EXPECT_EQ(factorial(20), BigInt("2432902008176640000"));
}

TEST(GroupOrder, AgreesWithClosureOnRandomGroups) {
  std::mt19937 rng(17);
  std::size_t checked = 0;
  for (int trial = 0; trial < 400 && checked < 150; ++trial) {
    const std::size_t n = 2 + rng() % 8;
    std::vector<Permutation> gens;
    const std::size_t k = 1 + rng() % 3;
    for (std::size_t i = 0; i < k; ++i) {
      // Sparse permutations keep many groups small.
      std::vector<std::uint32_t> img(n);
      std::iota(img.begin(), img.end(), 0U);
      const std::size_t swaps = 1 + rng() % 2;
      for (std::size_t j = 0; j < swaps; ++j) std::swap(img[rng() % n], img[rng() % n]);
      gens.emplace_back(img);
    }
    const auto expected = oracle::closure_order(raw(gens), n);
    if (expected > 5000) continue;
    EXPECT_EQ(group_order(gens, n), BigInt(expected));
    ++checked;
  }
  EXPECT_GE(checked, 100U);
}

TEST(GroupOrder, KnownGroups) {
  // Dihedral group of the 7-gon.
  std::vector<Permutation> d7{Permutation::parse_cycles("(1 2 3 4 5 6 7)", 7),
                              Permutation::parse_cycles("(2 7)(3 6)(4 5)", 7)};
  EXPECT_EQ(group_order(d7, 7), 14);
  // Mathieu group M11.
  std::vector<Permutation> m11{Permutation::parse_cycles("(1 2 3 4 5 6 7 8 9 10 11)", 11),
                               Permutation::parse_cycles("(3 7 11 8)(4 10 5 6)", 11)};
  EXPECT_EQ(group_order(m11, 11), 7920);
  // Wreath product S3 wr S2 on 6 points.
  std::vector<Permutation> wr{Permutation::parse_cycles("(1 2)", 6),
                              Permutation::parse_cycles("(1 2 3)", 6),
                              Permutation::parse_cycles("(1 4)(2 5)(3 6)", 6)};
  EXPECT_EQ(group_order(wr, 6), 72);
  EXPECT_EQ(group_order({Permutation(5)}, 5), 1);
}

TEST(GroupOrder, LargeSymmetricAndAlternating) {
  const std::size_t n = 101;
  std::vector<std::uint32_t> shift(n);
  for (std::size_t i = 0; i < n; ++i) shift[i] = static_cast<std::uint32_t>((i + 1) % n);
  auto cycle = Permutation(shift);
  auto transposition = Permutation::parse_cycles("(1 2)", n);
  auto three = Permutation::parse_cycles("(1 2 3)", n);
  EXPECT_EQ(group_order({cycle, transposition}, n), factorial(n));
  EXPECT_EQ(group_order({cycle, three}, n), factorial(n) / 2);
}

TEST(Recognize, Examples) {
  std::vector<Permutation> a5{Permutation::parse_cycles("(1 2 3 4 5)", 5),
                              Permutation::parse_cycles("(1 2 3)", 5)};
  auto r = recognize(a5, 5);
  EXPECT_EQ(r.verdict, Verdict::alternating);
  EXPECT_EQ(r.order, 60);
  EXPECT_TRUE(r.evidence.transitive);
  EXPECT_TRUE(r.evidence.prime_degree);
  EXPECT_TRUE(r.evidence.all_even);
  ASSERT_TRUE(r.evidence.small_support_witness);
  EXPECT_EQ(*r.evidence.small_support_witness, std::make_pair(std::size_t{1}, std::size_t{3}));

  std::vector<Permutation> s3{Permutation::parse_cycles("(1 2)", 3),
                              Permutation::parse_cycles("(1 2 3)", 3)};
  auto s = recognize(s3, 3);
  EXPECT_EQ(s.verdict, Verdict::symmetric);
  EXPECT_EQ(s.order, 6);
  EXPECT_FALSE(s.evidence.all_even);

  auto o = recognize({Permutation::parse_cycles("(1 2)(3 4)", 4)}, 4);
  EXPECT_EQ(o.verdict, Verdict::other);
  EXPECT_EQ(o.order, 2);
  EXPECT_FALSE(o.evidence.transitive);
}

TEST(Recognize, VerdictMatchesParity) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 3 + rng() % 6;
    std::vector<Permutation> gens{random_perm(rng, n), random_perm(rng, n)};
    auto r = recognize(gens, n);
    EXPECT_EQ(r.order, BigInt(oracle::closure_order(raw(gens), n, 50000)));
    if (r.verdict == Verdict::alternating) EXPECT_TRUE(r.evidence.all_even);
    if (r.verdict == Verdict::symmetric) EXPECT_FALSE(r.evidence.all_even);
  }
}

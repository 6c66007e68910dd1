#include "rootspin/sigsum.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gtest/gtest.h"
#include "rootspin/errors.hpp"

namespace rootspin {
namespace {

RootSystem custom(std::size_t dim, std::vector<IntVector> roots) {
  RootSystem s;
  s.id = {Family::A, 1};
  s.ambient_dim = dim;
  s.roots = std::move(roots);
  return s;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

// Expected existence on the admissible range.
bool asserted_existence(const FamilyRank& id) {
  const int n = id.rank;
  switch (id.family) {
    case Family::A: return n % 2 == 0;
    case Family::B: return false;
    case Family::C: return n % 4 == 0 || n % 4 == 3;
    case Family::D: return n % 4 == 0 || n % 4 == 1;
    case Family::E: return n != 7;
    case Family::F:
    case Family::G: return true;
  }
  return false;
}

std::vector<FamilyRank> classified_range() {
  std::vector<FamilyRank> ids;
  for (int n = 1; n <= 8; ++n) ids.push_back({Family::A, n});
  for (int n = 2; n <= 6; ++n) ids.push_back({Family::B, n});
  for (int n = 3; n <= 8; ++n) ids.push_back({Family::C, n});
  for (int n = 4; n <= 8; ++n) ids.push_back({Family::D, n});
  for (int n = 6; n <= 8; ++n) ids.push_back({Family::E, n});
  ids.push_back({Family::F, 4});
  ids.push_back({Family::G, 2});
  return ids;
}

TEST(SignVectorTest, Basics) {
  const SignVector v({1, -1, 1});
  EXPECT_EQ(v.str(), "+-+");
  EXPECT_EQ(v.negated().str(), "-+-");
  EXPECT_EQ(SignVector::from_mask(0b010, 3), v);
  EXPECT_THROW(SignVector({1, 0}), std::invalid_argument);
}

TEST(SignedSumTest, KnownZeroSums) {
  const RootSystem g2 = positive_roots({Family::G, 2});
  EXPECT_EQ(signed_sum(g2, SignVector({1, 1, 1, -1, -1, 1})), (IntVector{0, 0}));
  // (1-2+1, -1-1+2)
  const RootSystem a2 = positive_roots({Family::A, 2});
  EXPECT_EQ(signed_sum(a2, SignVector({1, -1, 1})), (IntVector{0, 0}));
}

TEST(SignedSumTest, NegationAndLength) {
  const RootSystem f4 = positive_roots({Family::F, 4});
  SignVector eps(f4.size());
  for (std::size_t i = 0; i < eps.size(); i += 3) eps.flip(i);
  IntVector plus = signed_sum(f4, eps);
  IntVector minus = signed_sum(f4, eps.negated());
  for (std::size_t c = 0; c < plus.size(); ++c) EXPECT_EQ(plus[c], -minus[c]);
  EXPECT_THROW(signed_sum(f4, SignVector(3)), LengthMismatch);
}

TEST(BruteForceTest, KnownCounts) {
  EXPECT_EQ(count_bruteforce(positive_roots({Family::G, 2})).value, u128{4});
  EXPECT_EQ(count_bruteforce(positive_roots({Family::A, 1})).value, u128{0});
  const CountResult f4 = count_bruteforce(positive_roots({Family::F, 4}));
  EXPECT_EQ(f4.kind, CountKind::Exact);
  EXPECT_EQ(f4.method, CountMethod::BruteForce);
  EXPECT_EQ(f4.value, u128{34432});
}

TEST(BruteForceTest, Limits) {
  const RootSystem d5 = positive_roots({Family::D, 5});  // r = 20
  CountOptions tight;
  tight.limit_r = 19;
  EXPECT_THROW(count_bruteforce(d5, tight), ResourceLimit);
  EXPECT_THROW(count_bruteforce(positive_roots({Family::E, 6})), ResourceLimit);  // 36 > 26
}

TEST(MitmTest, KnownCounts) {
  const CountResult e6 = count_mitm(positive_roots({Family::E, 6}));
  EXPECT_EQ(e6.kind, CountKind::Exact);
  EXPECT_EQ(e6.method, CountMethod::MeetInMiddle);
  EXPECT_EQ(e6.value, u128{13697920});
  EXPECT_EQ(count_mitm(positive_roots({Family::B, 2})).value, u128{0});
  EXPECT_EQ(count_mitm(positive_roots({Family::F, 4})).value, u128{34432});
  EXPECT_EQ(count_mitm(positive_roots({Family::G, 2})).value, u128{4});
}

TEST(MitmTest, E8DifferenceSubfamily) {
  // {l_i - l_j : 2 <= i < j <= 8} are the first 21 E8 roots after the seven
  // l_1 - l_j.
  const RootSystem e8 = positive_roots({Family::E, 8});
  std::vector<std::size_t> idx(21);
  std::iota(idx.begin(), idx.end(), std::size_t{7});
  const RootSystem sub = e8.subsystem(idx);
  for (const auto& root : sub.roots) EXPECT_EQ(root[0], 0);
  const CountResult brute = count_bruteforce(sub);
  EXPECT_EQ(count_mitm(sub).value, brute.value);
  EXPECT_EQ(brute.value, u128{2640});
}

TEST(MitmTest, VectorKeyFallbackAgrees) {
  CountOptions force_vectors;
  force_vectors.max_key_bits = 0;
  for (const FamilyRank id : {FamilyRank{Family::G, 2}, FamilyRank{Family::C, 4},
                              FamilyRank{Family::F, 4}, FamilyRank{Family::D, 5}}) {
    const RootSystem s = positive_roots(id);
    EXPECT_EQ(count_mitm(s, force_vectors).value, count_mitm(s).value) << to_string(id);
  }
}

TEST(MitmTest, KeysWiderThan128BitsUseVectors) {
  // Two 40-bit-wide coordinates per half would need > 128 bits packed.
  std::vector<IntVector> roots;
  for (int i = 0; i < 10; ++i) {
    IntVector v(4, 0);
    v[i % 4] = std::int64_t{1} << 36;
    roots.push_back(v);
  }
  const RootSystem s = custom(4, roots);
  EXPECT_GT(plan_mitm_split(s).key_bits, 128u);
  EXPECT_EQ(count_mitm(s).value, count_bruteforce(s).value);
}

TEST(MitmTest, Limits) {
  const RootSystem e6 = positive_roots({Family::E, 6});
  CountOptions small;
  small.memory_budget = 1024;
  EXPECT_THROW(count_mitm(e6, small), ResourceLimit);
  CountOptions short_r;
  short_r.limit_r = 30;
  EXPECT_THROW(count_mitm(e6, short_r), ResourceLimit);
  EXPECT_THROW(count_mitm(positive_roots({Family::E, 7})), ResourceLimit);
}

TEST(MitmTest, ThreadCountDoesNotChangeResults) {
  for (const FamilyRank id : {FamilyRank{Family::F, 4}, FamilyRank{Family::A, 6},
                              FamilyRank{Family::D, 5}}) {
    const RootSystem s = positive_roots(id);
    CountOptions one;
    one.threads = 1;
    CountOptions many;
    many.threads = 7;
    EXPECT_EQ(count_mitm(s, one).value, count_mitm(s, many).value);
    EXPECT_EQ(count_bruteforce(s, one).value, count_bruteforce(s, many).value);
  }
}

TEST(MitmTest, SplitIsAPartition) {
  for (const auto& id : classified_range()) {
    const RootSystem s = positive_roots(id);
    const MitmSplit split = plan_mitm_split(s);
    EXPECT_EQ(split.left.size(), (s.size() + 1) / 2);
    std::vector<std::size_t> all = split.left;
    all.insert(all.end(), split.right.begin(), split.right.end());
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expected(s.size());
    std::iota(expected.begin(), expected.end(), std::size_t{0});
    EXPECT_EQ(all, expected);
    EXPECT_LE(split.key_bits, 128u);
  }
}

TEST(WitnessTest, EnumerationIsClosedUnderNegation) {
  for (const FamilyRank id : {FamilyRank{Family::G, 2}, FamilyRank{Family::A, 4},
                              FamilyRank{Family::D, 4}, FamilyRank{Family::C, 4}}) {
    const RootSystem s = positive_roots(id);
    const auto witnesses = enumerate_witnesses(s);
    EXPECT_EQ(u128{witnesses.size()}, count_bruteforce(s).value);
    const std::set<SignVector> set(witnesses.begin(), witnesses.end());
    EXPECT_EQ(set.size(), witnesses.size());
    for (const auto& w : witnesses) {
      EXPECT_TRUE(is_zero(signed_sum(s, w)));
      EXPECT_TRUE(set.count(w.negated()));
      EXPECT_NE(w, w.negated());
    }
  }
}

TEST(WitnessTest, MitmSearch) {
  const RootSystem e6 = positive_roots({Family::E, 6});
  const auto w = find_witness_mitm(e6);
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_zero(signed_sum(e6, *w)));
  EXPECT_FALSE(find_witness_mitm(positive_roots({Family::B, 3})));
}

TEST(ExistsTest, Pipeline) {
  const Existence c3 = exists_strong_dependence(positive_roots({Family::C, 3}));
  EXPECT_TRUE(c3.exists);
  EXPECT_EQ(c3.evidence, Evidence::Certificate);
  ASSERT_TRUE(c3.witness);
  EXPECT_TRUE(is_zero(signed_sum(positive_roots({Family::C, 3}), *c3.witness)));

  const Existence e7 = exists_strong_dependence(positive_roots({Family::E, 7}));
  EXPECT_FALSE(e7.exists);
  EXPECT_EQ(e7.evidence, Evidence::Obstruction);
  EXPECT_FALSE(e7.obstruction.pass);

  EXPECT_TRUE(exists_strong_dependence(positive_roots({Family::D, 5})).exists);
}

TEST(ExistsTest, SearchFallback) {
  // Reordered G2 has no family certificate attached; search finds one.
  const RootSystem g2 = positive_roots({Family::G, 2});
  const RootSystem shuffled = g2.subsystem({5, 4, 3, 2, 1, 0});
  const Existence e = exists_strong_dependence(shuffled);
  EXPECT_TRUE(e.exists);
  EXPECT_EQ(e.evidence, Evidence::Search);
  ASSERT_TRUE(e.witness);
  EXPECT_TRUE(is_zero(signed_sum(shuffled, *e.witness)));

  // 1 + 1 + 1 + 5 = 8 lies in 2L = 2Z, yet |±1 ±1 ±1| < 5.
  const RootSystem lopsided = custom(1, {{1}, {1}, {1}, {5}});
  const Existence none = exists_strong_dependence(lopsided);
  EXPECT_TRUE(none.obstruction.pass);
  EXPECT_FALSE(none.exists);
  EXPECT_EQ(none.evidence, Evidence::Search);
}

TEST(ObstructionTest, CompleteOnTheClassifiedRange) {
  for (const auto& id : classified_range()) {
    EXPECT_EQ(obstruction_2L(positive_roots(id)).pass, asserted_existence(id)) << to_string(id);
  }
}

TEST(ObstructionTest, SoundWhereBruteForceRuns) {
  for (const auto& id : classified_range()) {
    const RootSystem s = positive_roots(id);
    if (s.size() > 26 || obstruction_2L(s).pass) continue;
    EXPECT_EQ(count_bruteforce(s).value, u128{0}) << to_string(id);
  }
}

}  // namespace
}  // namespace rootspin

#include <gtest/gtest.h>

#include <bitset>
#include <vector>

#include "burnside/horn.hpp"

using namespace burnside;
using namespace burnside::horn;

namespace {

// Brute force over triples a < s < b.
bool star_by_triples(int m, const std::vector<int>& s) {
  std::vector<bool> in(static_cast<std::size_t>(m + 1), false);
  for (int v : s) in[static_cast<std::size_t>(v)] = true;
  for (int a = 0; a <= m; ++a)
    for (int x = a + 1; x <= m; ++x)
      for (int b = x + 1; b <= m; ++b)
        if (!in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(x)] && !in[static_cast<std::size_t>(b)]) return true;
  return false;
}

std::vector<int> subset(int m, std::uint32_t mask) {
  std::vector<int> s;
  for (int v = 0; v <= m; ++v)
    if (mask >> v & 1u) s.push_back(v);
  return s;
}

}  // namespace

TEST(Horn, WalksAreCompletelyFactored) {
  for (int m = 1; m <= 10; ++m)
    for (std::int64_t n = 0; n < (std::int64_t{1} << m); ++n) {
      Walk w = walk(m, n);
      ASSERT_TRUE(is_completely_factored(w));
      int ones = 0;
      for (int r = 1; r <= m; ++r) {
        ones += static_cast<int>((n >> (m - r)) & 1);
        ASSERT_EQ(w.i(r), ones);
        ASSERT_EQ(w.j(r), m - r + ones);
        ASSERT_EQ(w.i(r) - w.i(r - 1) + w.j(r - 1) - w.j(r), 1);
      }
    }
}

TEST(Horn, JutsFromBinaryString) {
  for (int m = 1; m <= 8; ++m)
    for (std::int64_t n = 0; n < (std::int64_t{1} << m); ++n) {
      std::string bits = std::bitset<16>(static_cast<unsigned long long>(n)).to_string().substr(16 - static_cast<std::size_t>(m));
      std::vector<int> expected;
      for (int s = 1; s <= m; ++s)
        if (bits[static_cast<std::size_t>(s - 1)] == '1' && (s == m || bits[static_cast<std::size_t>(s)] == '0')) expected.push_back(s);
      ASSERT_EQ(juts(m, n), expected);
    }
}

TEST(Horn, ClassificationHoldsThroughDimensionSix) {
  for (int m = 2; m <= 6; ++m)
    for (int k = 0; k < m; ++k) EXPECT_TRUE(classification_mismatches(m, k).empty()) << "m=" << m << " k=" << k;
}

TEST(Horn, ExceptionalCasesForFiveThree) {
  auto found = exceptional_cases(5, 3);
  ASSERT_EQ(found.size(), 2u);
  EXPECT_EQ(found[0].n, 24);
  EXPECT_EQ(found[0].essential, (std::vector<int>{4, 5}));
  EXPECT_EQ(found[1].n, 28);
  EXPECT_EQ(found[1].essential, (std::vector<int>{5}));
}

TEST(Horn, ExceptionalCasesMatchTable) {
  for (int m = 1; m <= 7; ++m)
    for (int k = 0; k < m; ++k) {
      auto found = exceptional_cases(m, k);
      EXPECT_EQ(found, expected_exceptional_cases(m, k)) << "m=" << m << " k=" << k;
      EXPECT_EQ(found.size(), k == 0 ? static_cast<std::size_t>(m + 1) : 2u);
    }
}

TEST(Horn, LastIndexWarningCaseIsNotAHorn) {
  WarningCase w = warning_case(5, 13);
  EXPECT_TRUE(w.contains_expected);
  EXPECT_FALSE(w.is_generalized_horn);
  EXPECT_FALSE(w.additional.empty());
}

TEST(Horn, ConditionStarMatchesTriplesAndSaturation) {
  for (int m = 1; m <= 6; ++m)
    for (std::uint32_t mask = 1; mask < full_mask(m); ++mask) {
      auto s = subset(m, mask);
      bool star = is_condition_star(m, s);
      ASSERT_EQ(star, star_by_triples(m, s)) << "m=" << m << " mask=" << mask;
      if (m <= 5) { ASSERT_EQ(star, inner_horn_saturates(m, s)) << "m=" << m << " mask=" << mask; }
    }
}

TEST(Horn, DecompositionsReplayAndTamperingIsCaught) {
  int tampered = 0;
  for (int m = 2; m <= 6; ++m)
    for (std::uint32_t mask = 1; mask < full_mask(m); ++mask) {
      auto s = subset(m, mask);
      if (!is_condition_star(m, s)) {
        EXPECT_THROW(anodyne_decomposition(m, s), ContractError);
        continue;
      }
      AnodyneDecomposition d = anodyne_decomposition(m, s);
      ASSERT_TRUE(d.verified);
      ASSERT_FALSE(d.steps.empty());
      auto outer = d.steps;
      outer.front().horn = 0;
      EXPECT_FALSE(replay_decomposition(m, s, outer));
      auto shortened = d.steps;
      shortened.pop_back();
      EXPECT_FALSE(replay_decomposition(m, s, shortened));
      ++tampered;
    }
  EXPECT_GT(tampered, 50);
}

TEST(Horn, GeneralizedHornRoundTrip) {
  for (int m = 1; m <= 6; ++m)
    for (std::uint32_t mask = 1; mask < full_mask(m); ++mask) {
      auto s = subset(m, mask);
      auto back = as_generalized_horn(m, generalized_horn_faces(m, s));
      ASSERT_TRUE(back.has_value());
      EXPECT_EQ(*back, s);
    }
}

TEST(Horn, RejectsInvalidInput) {
  EXPECT_THROW(walk(0, 0), InputError);
  EXPECT_THROW(walk(3, 8), InputError);
  EXPECT_THROW(walk(3, -1), InputError);
  EXPECT_THROW(crossings(3, 0, 3), InputError);
  EXPECT_THROW(is_condition_star(3, std::vector<int>{0, 1, 2, 3}), InputError);
  EXPECT_THROW(is_condition_star(3, std::vector<int>{}), InputError);
  EXPECT_THROW(generalized_horn_faces(2, {5}), InputError);
  EXPECT_THROW(exceptional_cases(3, 3), InputError);
}

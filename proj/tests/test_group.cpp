#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "burnside/group.hpp"
#include "burnside/groups.hpp"

using namespace burnside;

namespace {

// All subgroups by brute force over subsets closed under multiplication.
std::set<std::vector<int>> brute_subgroups(const FiniteGroup& g) {
  const int n = static_cast<int>(g.order());
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1u)) continue;  // must contain the identity
    bool closed = true;
    for (int a = 0; a < n && closed; ++a)
      for (int b = 0; b < n && closed; ++b)
        if ((mask >> a & 1u) && (mask >> b & 1u) && !(mask >> g.mul(a, b) & 1u)) closed = false;
    if (!closed) continue;
    std::vector<int> s;
    for (int a = 0; a < n; ++a)
      if (mask >> a & 1u) s.push_back(a);
    out.insert(s);
  }
  return out;
}

std::size_t brute_class_count(const FiniteGroup& g, const std::set<std::vector<int>>& subs) {
  std::set<std::vector<int>> seen;
  std::size_t classes = 0;
  for (const auto& s : subs) {
    if (seen.count(s)) continue;
    ++classes;
    for (int x = 0; x < static_cast<int>(g.order()); ++x) {
      std::vector<int> c;
      for (int h : s) c.push_back(g.conj(x, h));
      std::sort(c.begin(), c.end());
      seen.insert(c);
    }
  }
  return classes;
}

}  // namespace

TEST(Group, CorpusOrders) {
  std::vector<std::size_t> expected = {2, 3, 4, 4, 6, 8, 8};
  auto corpus = groups::corpus();
  ASSERT_EQ(corpus.size(), expected.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) EXPECT_EQ(corpus[i]->order(), expected[i]) << corpus[i]->name();
}

TEST(Group, IdentityIsIndexZeroAndMultiplicationComposes) {
  for (const GroupPtr& g : groups::corpus()) {
    EXPECT_EQ(g->element(0), identity_perm(g->degree()));
    for (int a = 0; a < static_cast<int>(g->order()); ++a) {
      EXPECT_EQ(g->mul(a, g->inv(a)), 0);
      for (int b = 0; b < static_cast<int>(g->order()); ++b) {
        const Perm& pa = g->element(a);
        const Perm& pb = g->element(b);
        const Perm& pab = g->element(g->mul(a, b));
        for (int x = 0; x < g->degree(); ++x) ASSERT_EQ(pab[x], pa[pb[x]]);  // b acts first
      }
    }
  }
}

TEST(Group, SubgroupEnumerationMatchesBruteForce) {
  for (const GroupPtr& g : groups::corpus()) {
    auto subs = brute_subgroups(*g);
    const auto& t = g->subgroups();
    EXPECT_EQ(t.subgroup_count, subs.size()) << g->name();
    EXPECT_EQ(t.size(), brute_class_count(*g, subs)) << g->name();
    for (const auto& s : subs) EXPECT_NO_THROW(t.class_of(Subgroup{s}));
  }
}

TEST(Group, KnownSubgroupCounts) {
  // (subgroups, classes): S3 (6, 4), D8 (10, 8), Q8 (6, 6), C2xC2 (5, 5).
  EXPECT_EQ(groups::symmetric(3)->subgroups().subgroup_count, 6u);
  EXPECT_EQ(groups::symmetric(3)->subgroups().size(), 4u);
  EXPECT_EQ(groups::dihedral(4)->subgroups().subgroup_count, 10u);
  EXPECT_EQ(groups::dihedral(4)->subgroups().size(), 8u);
  EXPECT_EQ(groups::quaternion()->subgroups().size(), 6u);
  EXPECT_EQ(groups::klein_four()->subgroups().size(), 5u);
}

TEST(Group, ClassesOrderedByOrderWithWholeGroupLast) {
  for (const GroupPtr& g : groups::corpus()) {
    const auto& t = g->subgroups();
    EXPECT_EQ(t.rep(0).order(), 1u);
    EXPECT_EQ(t.rep(static_cast<int>(t.size()) - 1).order(), g->order());
    for (std::size_t c = 1; c < t.size(); ++c) EXPECT_LE(t.rep(static_cast<int>(c - 1)).order(), t.rep(static_cast<int>(c)).order());
  }
}

TEST(Group, NormalizerAndWeylOrderMatchBruteForce) {
  for (const GroupPtr& g : groups::corpus()) {
    for (const SubgroupClass& c : g->subgroups().classes) {
      std::vector<int> brute;
      for (int x = 0; x < static_cast<int>(g->order()); ++x)
        if (conjugate_subgroup(*g, x, c.representative) == c.representative) brute.push_back(x);
      EXPECT_EQ(c.normalizer.elements, brute);
      EXPECT_EQ(c.weyl_order * c.representative.order(), brute.size());
      // Orbit-stabilizer on conjugation.
      EXPECT_EQ(c.conjugates.size() * brute.size(), g->order());
    }
  }
}

TEST(Group, QuotientsAndDoubleCosets) {
  GroupPtr s3 = groups::symmetric(3);
  const auto& t = s3->subgroups();
  Subgroup a3 = t.rep(2);
  ASSERT_EQ(a3.order(), 3u);
  ASSERT_TRUE(is_normal(*s3, a3));
  QuotientMap q = quotient_group(*s3, a3);
  EXPECT_EQ(q.group->order(), 2u);
  // Double cosets partition G.
  for (std::size_t h = 0; h < t.size(); ++h)
    for (std::size_t k = 0; k < t.size(); ++k) {
      std::size_t total = 0;
      for (int x : double_cosets(*s3, t.rep(static_cast<int>(h)), t.rep(static_cast<int>(k))))
        total += double_coset(*s3, t.rep(static_cast<int>(h)), x, t.rep(static_cast<int>(k))).size();
      EXPECT_EQ(total, s3->order());
    }
}

TEST(Group, RejectsBadInput) {
  EXPECT_THROW(FiniteGroup::make(3, {{0, 0, 1}}), InputError);
  EXPECT_THROW(FiniteGroup::make(2, {{0, 1, 2}}), InputError);
  GroupPtr c4 = groups::cyclic(4);
  EXPECT_THROW(c4->subgroups().class_of(Subgroup{{0, 1}}), InputError);
}

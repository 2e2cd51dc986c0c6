#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "burnside/groups.hpp"
#include "burnside/retract.hpp"

using namespace burnside;

namespace {

// Sum over subgroup classes H of the number of N(H)-orbits on S^H.
std::size_t orbits_on_fixed_points(const GSet& s) {
  std::size_t total = 0;
  for (const SubgroupClass& c : s.group().subgroups().classes) {
    std::set<int> seen;
    for (int p = 0; p < s.size(); ++p) {
      bool fixed = true;
      for (int h : c.representative.elements) fixed = fixed && s.act(h, p) == p;
      if (!fixed || seen.count(p)) continue;
      ++total;
      for (int n : c.normalizer.elements) seen.insert(s.act(n, p));
    }
  }
  return total;
}

bool same(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

}  // namespace

TEST(Retract, ComplementsOfSummandInclusions) {
  GroupPtr g = groups::symmetric(3);
  auto objs = gsets_up_to(g, 4);
  int checked = 0;
  for (const GSet& x : objs)
    for (const GSet& w : objs)
      for (const GMap& i : equivariant_maps(x, w)) {
        if (!i.is_injective()) {
          EXPECT_THROW(complement(i), InputError);
          continue;
        }
        Complement c = complement(i);
        EXPECT_EQ(c.rest.size() + x.size(), w.size());
        EXPECT_TRUE(is_complement(i, c.inclusion));
        EXPECT_TRUE(complement_iso(i, c.inclusion, c.inclusion).is_iso());
        if (x.size() > 0) { EXPECT_FALSE(is_complement(i, i)); }
        ++checked;
      }
  EXPECT_GT(checked, 10);
}

TEST(Retract, RetractDiagramRoundTrip) {
  GroupPtr g = groups::cyclic(2);
  for (const GSet& s : gsets_up_to(g, 3))
    for (const GSet& u : gsets_up_to(g, 3))
      for (const GMap& structure : equivariant_maps(u, s)) {
        RetractiveObject r(s, structure);
        auto [i, q] = r.diagram();
        RetractiveObject back = RetractiveObject::from_retract(i, q);
        EXPECT_EQ(back.complement_set().size(), u.size());
        RetractiveK0 k(s);
        EXPECT_EQ(k.classify(back), k.classify(r));
      }
}

TEST(Retract, K0RankCountsOrbitsOnFixedPoints) {
  for (const GroupPtr& g : {groups::cyclic(4), groups::symmetric(3), groups::klein_four()})
    for (const GSet& s : gsets_up_to(g, 4)) {
      RetractiveK0 k(s);
      EXPECT_EQ(k.rank(), orbits_on_fixed_points(s));
      for (std::size_t j = 0; j < k.rank(); ++j) {
        IntVector e(k.rank(), 0);
        e[j] = 1;
        EXPECT_EQ(k.classify(k.basis_object(j)), e);
        IntVector two(k.rank(), 0);
        two[j] = 2;
        EXPECT_EQ(k.classify(retractive_sum(k.basis_object(j), k.basis_object(j))), two);
      }
      EXPECT_TRUE(is_permutation_matrix(burnside_comparison(k, BurnsideModule(GSet::point(g), s))));
    }
}

TEST(Retract, PushforwardAndPullbackAreFunctorial) {
  GroupPtr g = groups::cyclic(2);
  auto objs = gsets_up_to(g, 3);
  int broken_caught = 0;
  for (const GSet& x : objs)
    for (const GSet& y : objs)
      for (const GMap& f : equivariant_maps(x, y))
        for (const GSet& z : objs)
          for (const GMap& h : equivariant_maps(y, z)) {
            RetractiveK0 kx(x), ky(y), kz(z);
            GMap hf = compose(h, f);
            EXPECT_TRUE(same(k0_pushforward(hf, kx, kz), k0_pushforward(h, ky, kz) * k0_pushforward(f, kx, ky)));
            EXPECT_TRUE(same(k0_pullback(hf, kx, kz), k0_pullback(f, kx, ky) * k0_pullback(h, ky, kz)));
            auto bad = [&](const GMap& m, const RetractiveK0& a, const RetractiveK0& b) { return k0_pushforward(m, a, b, PushforwardMode::broken); };
            if (!same(bad(hf, kx, kz), bad(h, ky, kz) * bad(f, kx, ky))) ++broken_caught;
          }
  EXPECT_GT(broken_caught, 0);
}

TEST(Retract, BrokenModeFailsUnfurling) {
  GroupPtr g = groups::cyclic(2);
  EXPECT_TRUE(unfurl_functoriality_check(g, 3).passed());
  EXPECT_FALSE(unfurl_functoriality_check(g, 3, 1, PushforwardMode::broken).passed());
}

TEST(Retract, BurnsideTheoremOnSmallBases) {
  for (const GroupPtr& g : {groups::cyclic(2), groups::cyclic(3)})
    for (const GSet& s : gsets_up_to(g, 3)) EXPECT_TRUE(verify_burnside_theorem(s, 3).passed()) << g->name() << " |S|=" << s.size();
}

TEST(Retract, SplittingRanks) {
  std::vector<std::size_t> expected = {2, 2, 3, 5, 4, 8, 6};
  auto corpus = groups::corpus();
  ASSERT_EQ(corpus.size(), expected.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) EXPECT_EQ(splitting_rank(corpus[i]), expected[i]) << corpus[i]->name();
}

TEST(Retract, TomDieckCountsForC2) {
  TomDieckReport r = tomdieck_monoid_check(groups::cyclic(2), 4);
  EXPECT_EQ(r.multiset_counts, (std::vector<long long>{1, 1, 2, 2, 3}));
  EXPECT_EQ(r.brute_force_classes, r.multiset_counts);
  // Involutions on k labelled points: 1, 1, 2, 4, 10.
  EXPECT_EQ(r.actions, (std::vector<long long>{1, 1, 2, 4, 10}));
  EXPECT_TRUE(r.passed());
}

TEST(Retract, TomDieckOnCorpus) {
  for (const GroupPtr& g : {groups::cyclic(3), groups::klein_four(), groups::symmetric(3)})
    EXPECT_TRUE(tomdieck_monoid_check(g, 4).passed()) << g->name();
  EXPECT_THROW(tomdieck_monoid_check(groups::symmetric(3), 12), ResourceError);
}

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <vector>

#include "burnside/groups.hpp"
#include "burnside/gset.hpp"

using namespace burnside;

namespace {

// |X^H| by direct inspection.
int fixed_count(const GSet& x, const Subgroup& h) {
  int n = 0;
  for (int p = 0; p < x.size(); ++p) {
    bool fixed = true;
    for (int e : h.elements) fixed = fixed && x.act(e, p) == p;
    n += fixed;
  }
  return n;
}

// Number of G-sets with n points up to iso: solutions of sum k_c [G:H_c] = n.
long long count_by_sizes(const std::vector<int>& sizes, std::size_t i, int n) {
  if (i == sizes.size()) return n == 0 ? 1 : 0;
  long long total = 0;
  for (int used = 0; used <= n; used += sizes[i]) total += count_by_sizes(sizes, i + 1, n - used);
  return total;
}

}  // namespace

TEST(GSet, CosetSpaceHasIndexManyPointsAndStabilizerH) {
  for (const GroupPtr& g : groups::corpus())
    for (const SubgroupClass& c : g->subgroups().classes) {
      GSet x = GSet::coset_space(g, c.representative);
      EXPECT_EQ(static_cast<std::size_t>(x.size()) * c.representative.order(), g->order());
      EXPECT_EQ(x.stabilizer(0), c.representative);
      EXPECT_TRUE(x.is_transitive());
    }
}

TEST(GSet, OrbitCountMatchesBurnsideLemma) {
  for (const GroupPtr& g : {groups::cyclic(4), groups::symmetric(3), groups::klein_four()}) {
    for (const GSet& x : gsets_up_to(g, 5)) {
      long long fixed_total = 0;
      for (int e = 0; e < static_cast<int>(g->order()); ++e)
        for (int p = 0; p < x.size(); ++p) fixed_total += x.act(e, p) == p;
      EXPECT_EQ(static_cast<long long>(decompose(x).orbits.size()) * static_cast<long long>(g->order()), fixed_total);
    }
  }
}

TEST(GSet, EnumerationCountsMatchPartitionOracle) {
  for (const GroupPtr& g : groups::corpus()) {
    std::vector<int> sizes;
    for (const SubgroupClass& c : g->subgroups().classes) sizes.push_back(static_cast<int>(g->order() / c.representative.order()));
    std::map<int, long long> found;
    std::set<std::vector<long long>> distinct;
    for (const GSet& x : gsets_up_to(g, 5)) {
      ++found[x.size()];
      distinct.insert(decompose(x).class_counts(sizes.size()));
    }
    long long total = 0;
    for (int n = 0; n <= 5; ++n) {
      EXPECT_EQ(found[n], count_by_sizes(sizes, 0, n)) << g->name() << " n=" << n;
      total += found[n];
    }
    EXPECT_EQ(static_cast<long long>(distinct.size()), total);
  }
}

TEST(GSet, EquivariantMapsFromOrbitAreFixedPoints) {
  // Hom(G/H, X) = X^H.
  for (const GroupPtr& g : {groups::symmetric(3), groups::dihedral(4)}) {
    auto objs = gsets_up_to(g, 4);
    for (const SubgroupClass& c : g->subgroups().classes) {
      GSet orbit = GSet::coset_space(g, c.representative);
      for (const GSet& x : objs) EXPECT_EQ(static_cast<int>(equivariant_maps(orbit, x).size()), fixed_count(x, c.representative));
    }
  }
}

TEST(GSet, IsomorphismIsDetectedByMarks) {
  GroupPtr g = groups::symmetric(3);
  auto objs = gsets_up_to(g, 6);
  for (std::size_t i = 0; i < objs.size(); ++i)
    for (std::size_t j = 0; j < objs.size(); ++j) {
      bool same_marks = true;
      for (const SubgroupClass& c : g->subgroups().classes)
        same_marks = same_marks && fixed_count(objs[i], c.representative) == fixed_count(objs[j], c.representative);
      EXPECT_EQ(find_iso(objs[i], objs[j]).has_value(), same_marks);
      EXPECT_EQ(same_marks, i == j);
    }
}

TEST(GSet, PullbackSizeIsFiberwiseProduct) {
  GroupPtr g = groups::cyclic(4);
  auto objs = gsets_up_to(g, 4);
  int checked = 0;
  for (const GSet& z : objs)
    for (const GSet& x : objs)
      for (const GMap& f : equivariant_maps(x, z))
        for (const GSet& y : objs)
          for (const GMap& h : equivariant_maps(y, z)) {
            std::map<int, int> fx, fy;
            for (int p = 0; p < x.size(); ++p) ++fx[f(p)];
            for (int p = 0; p < y.size(); ++p) ++fy[h(p)];
            int expected = 0;
            for (auto [pt, c] : fx) expected += c * fy[pt];
            Pullback pb = pullback(f, h);
            ASSERT_EQ(pb.apex.size(), expected);
            EXPECT_EQ(compose(f, pb.left).images(), compose(h, pb.right).images());
            ++checked;
          }
  EXPECT_GT(checked, 100);
}

TEST(GSet, AutomorphismsOfOrbitsAreWeylGroups) {
  for (const GroupPtr& g : groups::corpus())
    for (const SubgroupClass& c : g->subgroups().classes) {
      GSet x = GSet::coset_space(g, c.representative);
      EXPECT_EQ(automorphisms(x).size(), c.weyl_order);
      EXPECT_TRUE(weyl_aut_isomorphism(x).is_isomorphism);
    }
}

TEST(GSet, CoproductInjectionsAreDisjointAndCover) {
  GroupPtr g = groups::symmetric(3);
  auto objs = gsets_up_to(g, 4);
  for (const GSet& x : objs)
    for (const GSet& y : objs) {
      Coproduct c = coproduct(x, y);
      std::vector<int> hits(static_cast<std::size_t>(c.sum.size()), 0);
      for (int p : c.in_left.images()) ++hits[static_cast<std::size_t>(p)];
      for (int p : c.in_right.images()) ++hits[static_cast<std::size_t>(p)];
      for (int h : hits) EXPECT_EQ(h, 1);
    }
}

TEST(GSet, FixedPointsAndInflationRoundTrip) {
  GroupPtr c4 = groups::cyclic(4);
  const Subgroup& c2 = c4->subgroups().rep(1);
  QuotientMap q = quotient_group(*c4, c2);
  for (const GSet& y : gsets_up_to(q.group, 4)) {
    GSet inf = inflate(y, c4, q);
    EXPECT_EQ(inf.size(), y.size());
    EXPECT_TRUE(find_iso(fixed_point_set(inf, q), y).has_value());
  }
}

TEST(GSet, RejectsNonActionsAndNonEquivariantMaps) {
  GroupPtr s3 = groups::symmetric(3);
  // Both generators acting by the same transposition violates the relations of S3.
  EXPECT_THROW(GSet(s3, 2, {{1, 0}, {1, 0}}), InputError);
  EXPECT_THROW(GSet(s3, 2, {{1, 0}}), InputError);
  GroupPtr c2 = groups::cyclic(2);
  GSet free(c2, 2, {{1, 0}});
  GSet pt = GSet::point(c2);
  EXPECT_THROW(GMap(pt, free, {0}), InputError);
  EXPECT_NO_THROW(GMap(free, pt, {0, 0}));
}

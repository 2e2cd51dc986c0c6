#include <gtest/gtest.h>

#include <set>
#include <vector>

#include "burnside/groups.hpp"
#include "burnside/ring.hpp"

using namespace burnside;

namespace {

IntMatrix rows(std::initializer_list<std::initializer_list<long long>> r) { return IntMatrix(r); }

bool same(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

// Number of N(H)-orbits on (X x Y)^H, summed over classes of H.
std::size_t transitive_span_count(const GSet& x, const GSet& y) {
  const FiniteGroup& g = x.group();
  std::size_t total = 0;
  for (const SubgroupClass& c : g.subgroups().classes) {
    std::set<std::pair<int, int>> seen;
    for (int a = 0; a < x.size(); ++a)
      for (int b = 0; b < y.size(); ++b) {
        bool fixed = true;
        for (int h : c.representative.elements) fixed = fixed && x.act(h, a) == a && y.act(h, b) == b;
        if (!fixed || seen.count({a, b})) continue;
        ++total;
        for (int n : c.normalizer.elements) seen.insert({x.act(n, a), y.act(n, b)});
      }
  }
  return total;
}

}  // namespace

TEST(Ring, MarksOfC2AndS3) {
  EXPECT_TRUE(same(table_of_marks(groups::cyclic(2)), rows({{2, 0}, {1, 1}})));
  EXPECT_TRUE(same(table_of_marks(groups::symmetric(3)), rows({{6, 0, 0, 0}, {3, 1, 0, 0}, {2, 0, 2, 0}, {1, 1, 1, 1}})));
}

TEST(Ring, MarksAreLowerTriangularWithWeylDiagonal) {
  for (const GroupPtr& g : groups::corpus()) {
    IntMatrix m = table_of_marks(g);
    const auto& t = g->subgroups();
    for (std::size_t k = 0; k < t.size(); ++k) {
      EXPECT_EQ(m(k, k), static_cast<long long>(t.classes[k].weyl_order));
      for (std::size_t h = k + 1; h < t.size(); ++h) EXPECT_EQ(m(k, h), 0) << g->name();
    }
    EXPECT_EQ(determinant(convert<BigInt>(m)), weyl_order_product(g)) << g->name();
  }
}

TEST(Ring, ProductIsCartesianProduct) {
  for (const GroupPtr& g : groups::corpus()) {
    BurnsideRing r = burnside_ring(g);
    const auto& t = g->subgroups();
    for (std::size_t h = 0; h < t.size(); ++h)
      for (std::size_t k = 0; k < t.size(); ++k) {
        GSet a = GSet::coset_space(g, t.rep(static_cast<int>(h)));
        GSet b = GSet::coset_space(g, t.rep(static_cast<int>(k)));
        EXPECT_EQ(r.product[h][k], burnside_class(product(a, b))) << g->name();
      }
  }
}

TEST(Ring, MarkHomomorphismIsMultiplicative) {
  GroupPtr g = groups::dihedral(4);
  BurnsideRing r = burnside_ring(g);
  IntMatrix m = table_of_marks(g);
  for (const GSet& x : gsets_up_to(g, 4))
    for (const GSet& y : gsets_up_to(g, 4)) {
      IntVector mx = marks_of(m, burnside_class(x)), my = marks_of(m, burnside_class(y));
      IntVector mxy = marks_of(m, r.multiply(burnside_class(x), burnside_class(y)));
      for (std::size_t h = 0; h < mx.size(); ++h) EXPECT_EQ(mxy[h], mx[h] * my[h]);
    }
}

TEST(Ring, UnitIsThePoint) {
  for (const GroupPtr& g : groups::corpus()) {
    BurnsideRing r = burnside_ring(g);
    EXPECT_EQ(r.unit(), burnside_class(GSet::point(g)));
    for (std::size_t i = 0; i < r.rank(); ++i) {
      IntVector e(r.rank(), 0);
      e[i] = 1;
      EXPECT_EQ(r.multiply(r.unit(), e), e);
    }
  }
}

TEST(Ring, ModuleRankCountsTransitiveSpans) {
  for (const GroupPtr& g : {groups::symmetric(3), groups::quaternion(), groups::klein_four()}) {
    auto objs = gsets_up_to(g, 4);
    for (const GSet& x : objs)
      for (const GSet& y : objs) EXPECT_EQ(BurnsideModule(x, y).rank(), transitive_span_count(x, y));
  }
}

TEST(Ring, FixedPointAndInflationAreRingMaps) {
  int quotients = 0;
  for (const GroupPtr& g : groups::corpus())
    for (const SubgroupClass& c : g->subgroups().classes) {
      if (!is_normal(*g, c.representative)) continue;
      QuotientMap q = normal_quotient(g, c.representative);
      BurnsideRing a = burnside_ring(g), b = burnside_ring(q.group);
      IntMatrix phi = fixed_point_ring_map(g, q), infl = inflation_map(g, q);
      EXPECT_TRUE(is_unital_ring_map(a, b, phi)) << g->name();
      EXPECT_TRUE(is_unital_ring_map(b, a, infl)) << g->name();
      EXPECT_TRUE(same(phi * infl, IntMatrix::identity(b.rank()))) << g->name();
      ++quotients;
    }
  EXPECT_GT(quotients, 20);
}

TEST(Ring, NonNormalQuotientIsRejected) {
  GroupPtr s3 = groups::symmetric(3);
  EXPECT_THROW(normal_quotient(s3, s3->subgroups().rep(1)), InputError);
}

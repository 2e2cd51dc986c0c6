#include <gtest/gtest.h>

#include <vector>

#include "burnside/simplicial.hpp"

using namespace burnside;

namespace {

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long long power(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace

TEST(Simplicial, StandardSimplexCounts) {
  for (int m = 0; m <= 5; ++m) {
    SimplicialSet d = standard_simplex(m);
    EXPECT_TRUE(d.is_complete());
    for (int k = 0; k <= m + 1; ++k) EXPECT_EQ(static_cast<long long>(d.count(k)), binom(m + 1, k + 1));
    // All p-simplices: monotone maps [p] -> [m].
    for (int p = 0; p <= 3; ++p) EXPECT_EQ(static_cast<long long>(d.elements(p).size()), binom(m + p + 1, p + 1));
    EXPECT_TRUE(d.satisfies_simplicial_identities());
  }
}

TEST(Simplicial, BoundaryAndHornsDropFaces) {
  for (int m = 1; m <= 4; ++m) {
    SimplicialSet b = simplex_boundary(m);
    EXPECT_EQ(b.count(m), 0u);
    EXPECT_EQ(static_cast<long long>(b.count(m - 1)), m + 1);
    if (m < 2) continue;
    SimplicialSet h = generalized_horn(m, {0});
    EXPECT_EQ(static_cast<long long>(h.count(m - 1)), m);
  }
}

TEST(Simplicial, FacesOfNSimplexAreNormalized) {
  SimplicialSet d = standard_simplex(3);
  NSimplex top = nondegenerate(3, 0);
  EXPECT_EQ(d.vertices(top), (std::vector<int>{0, 1, 2, 3}));
  NSimplex s = d.degeneracy_of(top, 1);
  EXPECT_TRUE(s.is_degenerate());
  EXPECT_EQ(s.total_dim(), 4);
  EXPECT_EQ(d.face_of(s, 1), top);
  EXPECT_EQ(d.face_of(s, 2), top);
}

TEST(Simplicial, NerveOfCyclicGroupCounts) {
  for (int n = 2; n <= 4; ++n) {
    Nerve nv = nerve(cyclic_group_category(n), 4);
    for (int k = 0; k <= 4; ++k) EXPECT_EQ(static_cast<long long>(nv.set.count(k)), power(n - 1, k)) << "n=" << n << " k=" << k;
    EXPECT_TRUE(nv.set.satisfies_simplicial_identities());
  }
}

TEST(Simplicial, NerveOfOrdinalIsSimplex) {
  for (int m = 0; m <= 4; ++m) {
    Nerve nv = nerve(ordinal_category(m), m + 2);
    for (int k = 0; k <= m + 1; ++k) EXPECT_EQ(static_cast<long long>(nv.set.count(k)), binom(m + 1, k + 1));
  }
}

TEST(Simplicial, EdgewiseSubdivisionOfSimplex) {
  for (int m = 0; m <= 4; ++m) {
    Subdivision sd = edgewise_subdivision(standard_simplex(m));
    EXPECT_TRUE(sd.set.satisfies_simplicial_identities());
    for (int n = 0; n <= 3; ++n) {
      long long all = 0;
      for (int k = 0; k <= n; ++k) all += binom(n, k) * static_cast<long long>(sd.set.count(k));
      EXPECT_EQ(all, binom(m + 2 * n + 2, 2 * n + 2)) << "m=" << m << " n=" << n;
    }
  }
}

TEST(Simplicial, TwistedArrowProjectsAsOpfibration) {
  std::vector<FiniteCategory> corpus = {ordinal_category(1), ordinal_category(2), discrete_category(2), cyclic_group_category(2),
                                        cyclic_group_category(3)};
  for (const FiniteCategory& c : corpus) {
    TwistedArrow tw = twisted_arrow_cat(c);
    EXPECT_EQ(tw.category.object_count(), c.morphism_count());
    FiniteCategory base = product_category(opposite(c), c);
    EXPECT_TRUE(is_discrete_opfibration(tw.category, base, twisted_arrow_projection(c, tw)));
  }
}

TEST(Simplicial, TwistedArrowMatchesSubdividedNerve) {
  std::vector<FiniteCategory> corpus = {ordinal_category(1), ordinal_category(2), discrete_category(2), cyclic_group_category(2),
                                        cyclic_group_category(3)};
  for (const FiniteCategory& c : corpus) {
    TwistedComparison cmp = compare_twisted_arrow_with_subdivision(c, 2);
    EXPECT_TRUE(cmp.isomorphic());
    EXPECT_EQ(cmp.twisted_counts, cmp.subdivision_counts);
  }
}

TEST(Simplicial, CategoryValidation) {
  EXPECT_THROW(nerve(ordinal_category(1), -1), InputError);
  FiniteCategory c = cyclic_group_category(3);
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g = 0; g < c.morphism_count(); ++g)
      for (int h = 0; h < c.morphism_count(); ++h) EXPECT_EQ(c.compose(c.compose(h, g), f), c.compose(h, c.compose(g, f)));
}

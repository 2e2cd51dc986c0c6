#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "burnside/groups.hpp"
#include "burnside/io.hpp"
#include "burnside/mackey.hpp"

using namespace burnside;
using namespace burnside::io;

namespace {

std::string data(const std::string& name) { return std::string(BURNSIDE_DATA_DIR) + "/" + name; }

MackeyFunctor load(const std::string& name, const GroupPtr& g) {
  std::string p = data(name);
  return mackey_from_json(read_json_file(p), g, Source{p, ""});
}

// Conjugacy classes of subgroups of H under H-conjugation, by brute force.
std::size_t subgroup_classes_inside(const FiniteGroup& g, const Subgroup& h) {
  std::set<std::vector<int>> seen;
  std::size_t classes = 0;
  for (const SubgroupClass& c : g.subgroups().classes)
    for (const Subgroup& k : c.conjugates) {
      bool inside = std::includes(h.elements.begin(), h.elements.end(), k.elements.begin(), k.elements.end());
      if (!inside || seen.count(k.elements)) continue;
      ++classes;
      for (int x : h.elements) seen.insert(conjugate_subgroup(g, x, k).elements);
    }
  return classes;
}

}  // namespace

TEST(Mackey, BuiltinFunctorsSatisfyAxioms) {
  for (const GroupPtr& g : groups::corpus()) {
    EXPECT_TRUE(check_mackey_axioms(zero_mackey(g)).passed()) << g->name();
    EXPECT_TRUE(check_mackey_axioms(constant_mackey(g)).passed()) << g->name();
    MackeyAxiomReport b = check_mackey_axioms(burnside_mackey(g));
    EXPECT_TRUE(b.passed()) << g->name() << ": " << (b.counterexamples.empty() ? "" : b.counterexamples.front());
    EXPECT_GT(b.instances, 0u);
  }
}

TEST(Mackey, SumsAndDualsSatisfyAxioms) {
  for (const GroupPtr& g : {groups::cyclic(2), groups::symmetric(3), groups::klein_four()}) {
    MackeyFunctor b = burnside_mackey(g), c = constant_mackey(g);
    EXPECT_TRUE(check_mackey_axioms(direct_sum(b, c)).passed());
    EXPECT_TRUE(check_mackey_axioms(dual_mackey(b)).passed());
    EXPECT_TRUE(check_mackey_axioms(dual_mackey(c)).passed());
  }
}

TEST(Mackey, BurnsideValueRankCountsSubgroupClasses) {
  for (const GroupPtr& g : groups::corpus()) {
    MackeyFunctor b = burnside_mackey(g);
    for (std::size_t c = 0; c < b.values.size(); ++c) {
      const Subgroup& h = g->subgroups().rep(static_cast<int>(c));
      EXPECT_TRUE(b.value(static_cast<int>(c)).is_free());
      EXPECT_EQ(b.value(static_cast<int>(c)).free_rank(), subgroup_classes_inside(*g, h)) << g->name() << " class " << c;
    }
  }
}

TEST(Mackey, ConstantTransferMultipliesByIndex) {
  GroupPtr g = groups::symmetric(3);
  MackeyFunctor c = constant_mackey(g);
  const auto& t = g->subgroups();
  for (std::size_t i = 0; i < c.orbits->maps().size(); ++i) {
    const OrbitMap& m = c.orbits->maps()[i];
    EXPECT_EQ(c.res[i](0, 0), 1);
    EXPECT_EQ(static_cast<std::size_t>(c.tr[i](0, 0)), t.rep(m.to).order() / t.rep(m.from).order());
  }
}

TEST(Mackey, BrokenFileFailsWithCounterexample) {
  GroupPtr c2 = load_group(data("c2.json"));
  MackeyAxiomReport r = check_mackey_axioms(load("broken_c2.json", c2));
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.counterexamples.empty());
  EXPECT_TRUE(check_mackey_axioms(load("constant_c2.json", c2)).passed());
  EXPECT_TRUE(check_mackey_axioms(load("burnside.json", c2)).passed());
}

TEST(Mackey, MutatedTransferIsDetected) {
  for (const GroupPtr& g : {groups::cyclic(2), groups::cyclic(3), groups::symmetric(3)}) {
    MackeyFunctor b = burnside_mackey(g);
    for (std::size_t i = 0; i < b.orbits->maps().size(); ++i) {
      const OrbitMap& m = b.orbits->maps()[i];
      if (m.from == m.to) continue;
      b.tr[i](0, 0) += 1;
      break;
    }
    EXPECT_FALSE(check_mackey_axioms(b).passed()) << g->name();
  }
}

TEST(Mackey, EvaluationRespectsComposition) {
  GroupPtr g = groups::cyclic(2);
  MackeyFunctor b = burnside_mackey(g);
  auto objs = gsets_up_to(g, 2);
  int checked = 0;
  for (const GSet& x : objs)
    for (const GSet& y : objs)
      for (const SpanClass& w1 : span_classes(x, y, 2))
        for (const GSet& z : objs)
          for (const SpanClass& w2 : span_classes(y, z, 2)) {
            EXPECT_TRUE(respects_composition(b, w1, w2));
            ++checked;
          }
  EXPECT_GT(checked, 50);
}

TEST(Mackey, AugmentationKernel) {
  for (const GroupPtr& g : {groups::cyclic(2), groups::symmetric(3)}) {
    MackeyFunctor b = burnside_mackey(g), c = constant_mackey(g);
    MackeyMorphism eps = augmentation(b);
    ASSERT_TRUE(is_mackey_morphism(b, c, eps));
    MackeyKernel k = mackey_kernel(b, c, eps);
    EXPECT_TRUE(check_mackey_axioms(k.functor).passed());
    // Augmentation is onto Z at every level, so the kernel drops rank by one.
    for (std::size_t i = 0; i < b.values.size(); ++i)
      EXPECT_EQ(k.functor.values[i].free_rank() + 1, b.values[i].free_rank());
  }
}

TEST(Mackey, RejectsMisshapenInput) {
  GroupPtr c2 = groups::cyclic(2);
  MackeyFunctor b = burnside_mackey(c2);
  b.res[0] = IntMatrix(3, 3);
  EXPECT_THROW(check_mackey_axioms(b), InputError);
}

// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "burnside/groups.hpp"
#include "burnside/homology.hpp"
#include "burnside/horn.hpp"
#include "burnside/mackey.hpp"
#include "burnside/parallel.hpp"
#include "burnside/retract.hpp"
#include "burnside/ring.hpp"
#include "burnside/simplicial.hpp"
#include "burnside/span.hpp"

using namespace burnside;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
};

const int kJobs = default_jobs();

Outcome horn_classification() {
  long long checked = 0;
  std::vector<std::string> bad;
  for (int m = 2; m <= 8; ++m)
    for (int k = 0; k < m; ++k) {
      for (const auto& b : horn::classification_mismatches(m, k))
        bad.push_back("m=" + std::to_string(m) + " k=" + std::to_string(k) + " N=" + std::to_string(b.n));
      checked += std::int64_t{1} << m;
    }
  Outcome o{bad.empty(), std::to_string(checked) + " simplices, " + std::to_string(bad.size()) + " mismatches"};
  if (!bad.empty()) o.detail += " (first: " + bad.front() + ")";
  return o;
}

Outcome exceptional_cases() {
  int tables = 0;
  std::string first_bad;
  for (int m = 1; m <= 8; ++m)
    for (int k = 0; k < m; ++k) {
      ++tables;
      auto found = horn::exceptional_cases(m, k);
      auto expected = horn::expected_exceptional_cases(m, k);
      bool sizes = found.size() == (k == 0 ? static_cast<std::size_t>(m + 1) : 2u);
      if ((found != expected || !sizes) && first_bad.empty()) first_bad = "m=" + std::to_string(m) + " k=" + std::to_string(k);
    }
  return {first_bad.empty(), std::to_string(tables) + " (m, k) tables" + (first_bad.empty() ? "" : ", mismatch at " + first_bad)};
}

Outcome warning_case() {
  horn::WarningCase w = horn::warning_case(5, 13);
  std::string faces, extra;
  for (auto f : w.faces) faces += " " + horn::face_label(f, 5);
  for (auto f : w.additional) extra += " " + horn::face_label(f, 5);
  return {w.contains_expected && !w.is_generalized_horn,
          "faces" + faces + "; contains expected: " + (w.contains_expected ? "yes" : "no") +
              "; generalized horn: " + (w.is_generalized_horn ? "yes" : "no") + "; additional:" + (extra.empty() ? " none" : extra)};
}

Outcome anodyne() {
  int star = 0, nonstar = 0;
  std::string bad;
  for (int m = 1; m <= 6; ++m)
    for (std::uint32_t mask = 1; mask < horn::full_mask(m); ++mask) {
      std::vector<int> s = horn::mask_vertices(mask);
      if (horn::is_condition_star(m, s)) {
        ++star;
        horn::AnodyneDecomposition d = horn::anodyne_decomposition(m, s);
        if (!d.verified || !horn::replay_decomposition(m, s, d.steps) || !horn::inner_horn_saturates(m, s))
          if (bad.empty()) bad = "replay failed for m=" + std::to_string(m) + " mask=" + std::to_string(mask);
      } else {
        ++nonstar;
        bool threw = false;
        try {
          horn::anodyne_decomposition(m, s);
        } catch (const ContractError&) {
          threw = true;
        }
        if ((horn::inner_horn_saturates(m, s) || !threw) && bad.empty())
          bad = "non-(*) set accepted for m=" + std::to_string(m) + " mask=" + std::to_string(mask);
      }
    }
  return {bad.empty(), std::to_string(star) + " sets with (*) replayed, " + std::to_string(nonstar) + " rejected" + (bad.empty() ? "" : "; " + bad)};
}

Outcome category_laws() {
  std::ostringstream os;
  bool ok = true;
  for (const GroupPtr& g : {groups::cyclic(2), groups::cyclic(3)}) {
    CategoryLawReport r = check_category_laws(g, 4, 2, kJobs);
    ok = ok && r.passed();
    os << g->name() << ": " << r.associativity << " transitive triples, " << r.brute << " effective triples, " << r.additivity
       << " additivity, " << r.units << " unit, " << r.biproducts << " biproduct checks; ";
    if (!r.passed()) os << "first failure: " << r.failures.front() << "; ";
  }
  return {ok, os.str()};
}

Outcome mackey_axioms() {
  std::ostringstream os;
  bool ok = true;
  int functors = 0;
  for (const GroupPtr& g : groups::corpus()) {
    for (const MackeyFunctor& m : {burnside_mackey(g), constant_mackey(g), zero_mackey(g)}) {
      ++functors;
      MackeyAxiomReport r = check_mackey_axioms(m);
      if (!r.passed()) {
        ok = false;
        os << m.name << " on " << g->name() << " fails; ";
      }
    }
    // Mutation: corrupt one transfer entry along the first non-identity orbit map.
    MackeyFunctor bad = burnside_mackey(g);
    const auto& maps = bad.orbits->maps();
    std::size_t target = maps.size();
    for (std::size_t i = 0; i < maps.size(); ++i)
      if (maps[i].from != maps[i].to) {
        target = i;
        break;
      }
    if (target == maps.size()) continue;
    bad.tr[target](0, 0) += 1;
    MackeyAxiomReport r = check_mackey_axioms(bad);
    if (r.passed() || r.counterexamples.empty()) {
      ok = false;
      os << "mutation on " << g->name() << " not detected; ";
    } else if (g->name() == "C2") {
      os << "C2 mutation: " << r.counterexamples.front() << "; ";
    }
  }
  os << functors << " functors checked";
  return {ok, os.str()};
}

Outcome evaluation_functoriality() {
  long long pairs = 0;
  std::string bad;
  for (const GroupPtr& g : {groups::cyclic(2), groups::cyclic(3), groups::symmetric(3)}) {
    auto objs = gsets_up_to(g, 3);
    std::vector<MackeyFunctor> functors = {burnside_mackey(g), constant_mackey(g), dual_mackey(burnside_mackey(g))};
    // M(w) for every span class, computed once.
    std::vector<std::vector<std::vector<IntMatrix>>> value(objs.size() * objs.size());
    std::vector<std::vector<SpanClass>> homs(objs.size() * objs.size());
    for (std::size_t x = 0; x < objs.size(); ++x)
      for (std::size_t y = 0; y < objs.size(); ++y) {
        homs[x * objs.size() + y] = span_classes(objs[x], objs[y], 3);
        for (const SpanClass& w : homs[x * objs.size() + y]) {
          std::vector<IntMatrix> per;
          for (const MackeyFunctor& m : functors) per.push_back(evaluate_on_span(m, w));
          value[x * objs.size() + y].push_back(std::move(per));
        }
      }
    for (std::size_t z = 0; z < objs.size(); ++z) {
      std::vector<AbGroupPres> mz;
      for (const MackeyFunctor& m : functors) mz.push_back(value_on(m, objs[z]));
      for (std::size_t x = 0; x < objs.size(); ++x)
        for (std::size_t y = 0; y < objs.size(); ++y) {
          const auto& xy = homs[x * objs.size() + y];
          const auto& yz = homs[y * objs.size() + z];
          for (std::size_t i = 0; i < xy.size(); ++i)
            for (std::size_t j = 0; j < yz.size(); ++j) {
              const SpanClass c = compose(xy[i], yz[j]);
              for (std::size_t f = 0; f < functors.size(); ++f) {
                ++pairs;
                IntMatrix parts = value[y * objs.size() + z][j][f] * value[x * objs.size() + y][i][f];
                if (!mz[f].maps_equal(evaluate_on_span(functors[f], c), parts) && bad.empty())
                  bad = functors[f].name + " on " + g->name() + ": " + xy[i].describe() + " ; " + yz[j].describe();
              }
            }
        }
    }
  }
  return {bad.empty(), std::to_string(pairs) + " (span pair, functor) checks over C2, C3, S3 with objects and apexes up to 3 points" + (bad.empty() ? "" : "; " + bad)};
}

Outcome tom_dieck() {
  std::ostringstream os;
  bool ok = true;
  for (const GroupPtr& g : groups::corpus()) {
    const auto& t = g->subgroups();
    bool rank = burnside_ring(g).rank() == t.size();
    bool weyl = true;
    for (std::size_t c = 0; c < t.size(); ++c)
      weyl = weyl && weyl_aut_isomorphism(GSet::coset_space(g, t.rep(static_cast<int>(c)))).is_isomorphism;
    BigInt det = determinant(convert<BigInt>(table_of_marks(g)));
    bool marks = det == weyl_order_product(g) && det != 0;
    TomDieckReport td = tomdieck_monoid_check(g, 4);
    ok = ok && rank && weyl && marks && td.passed();
    os << g->name() << " rank " << t.size() << " det " << det << (rank && weyl && marks && td.passed() ? "" : " FAILED") << "; ";
  }
  return {ok, os.str()};
}

Outcome burnside_theorem() {
  std::ostringstream os;
  bool ok = true;
  for (const GroupPtr& g : {groups::cyclic(2), groups::symmetric(3)}) {
    int bases = 0;
    for (const GSet& s : gsets_up_to(g, 4)) {
      ++bases;
      CheckReport r = verify_burnside_theorem(s, 4, kJobs);
      if (!r.passed()) {
        ok = false;
        os << g->name() << " base of " << s.size() << " points: " << r.violations.front() << "; ";
      }
    }
    os << g->name() << " " << bases << " bases; ";
  }
  return {ok, os.str()};
}

Outcome unfurl() {
  UnfurlReport r = unfurl_functoriality_check(groups::cyclic(2), 4, kJobs);
  return {r.passed(), std::to_string(r.instances) + " composable pairs, " + std::to_string(r.additivity_instances) + " additivity checks" +
                          (r.passed() ? "" : "; " + r.failures.front())};
}

std::vector<std::pair<std::string, FiniteCategory>> category_corpus() {
  std::vector<std::pair<std::string, FiniteCategory>> out;
  for (int m = 0; m <= 3; ++m) out.emplace_back("[" + std::to_string(m) + "]", ordinal_category(m));
  out.emplace_back("discrete 2", discrete_category(2));
  out.emplace_back("BC2", cyclic_group_category(2));
  out.emplace_back("BC3", cyclic_group_category(3));
  out.emplace_back("vee", poset_category(3, [](int a, int b) { return a == b || a == 0; }));
  out.emplace_back("square", poset_category(4, [](int a, int b) { return (a & b) == a; }));
  return out;
}

Outcome subdivision() {
  std::ostringstream os;
  bool ok = true;
  for (const auto& [name, c] : category_corpus()) {
    TwistedComparison cmp = compare_twisted_arrow_with_subdivision(c, 3);
    TwistedArrow tw = twisted_arrow_cat(c);
    bool opfib = is_discrete_opfibration(tw.category, product_category(opposite(c), c), twisted_arrow_projection(c, tw));
    if (!cmp.isomorphic() || !opfib) {
      ok = false;
      os << name << " fails; ";
    }
  }
  os << category_corpus().size() << " categories; ";
  for (int m = 0; m <= 5; ++m) {
    Subdivision sd = edgewise_subdivision(standard_simplex(m));
    for (const HomologyGroup& h : reduced_homology(sd.set, 3))
      if (!h.is_trivial()) {
        ok = false;
        os << "reduced homology of the subdivided " << m << "-simplex is nonzero; ";
      }
  }
  os << "subdivided simplices up to dimension 5 acyclic through degree 3";
  return {ok, os.str()};
}

Outcome ring_maps() {
  struct Case {
    GroupPtr g;
    Subgroup n;
    std::string label;
  };
  std::vector<Case> cases;
  auto add_normal = [&](const GroupPtr& g, std::size_t order, const std::string& label) {
    const auto& t = g->subgroups();
    for (std::size_t c = 0; c < t.size(); ++c)
      for (const Subgroup& h : t.classes[c].conjugates)
        if (h.order() == order && is_normal(*g, h)) cases.push_back({g, h, label});
  };
  add_normal(groups::cyclic(4), 2, "(C4, C2)");
  add_normal(groups::symmetric(3), 3, "(S3, C3)");
  add_normal(groups::klein_four(), 2, "(C2xC2, C2)");
  std::ostringstream os;
  bool ok = cases.size() == 5;
  for (const Case& c : cases) {
    QuotientMap q = normal_quotient(c.g, c.n);
    IntMatrix phi = fixed_point_ring_map(c.g, q);
    IntMatrix infl = inflation_map(c.g, q);
    BurnsideRing ag = burnside_ring(c.g), aq = burnside_ring(q.group);
    bool good = is_unital_ring_map(ag, aq, phi) && is_unital_ring_map(aq, ag, infl) && phi * infl == IntMatrix::identity(aq.rank());
    ok = ok && good;
    if (!good) os << c.label << " fails; ";
  }
  os << cases.size() << " quotients checked";
  return {ok, os.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"horn classification for m in [2, 8]", horn_classification},
      {"exceptional cases", exceptional_cases},
      {"k = m warning case", warning_case},
      {"inner anodyne decompositions for m <= 6", anodyne},
      {"Burnside category laws for C2, C3", category_laws},
      {"Mackey axioms and mutation test", mackey_axioms},
      {"functoriality of evaluation on spans", evaluation_functoriality},
      {"tom Dieck splitting at pi_0", tom_dieck},
      {"K0 of retractive objects is the Burnside functor", burnside_theorem},
      {"unfurling and base change on K0", unfurl},
      {"subdivision, twisted arrows and opfibrations", subdivision},
      {"fixed-point and inflation ring maps", ring_maps},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.ok) ++failed;
    std::cout << (o.ok ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first << " [" << o.detail << "] (" << secs << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}

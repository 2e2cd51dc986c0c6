// burnside_lab: command-line front end.
// Exit status: 0 all checks pass, 1 a property failed, 2 input or usage error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "burnside/errors.hpp"
#include "burnside/homology.hpp"
#include "burnside/horn.hpp"
#include "burnside/io.hpp"
#include "burnside/mackey.hpp"
#include "burnside/parallel.hpp"
#include "burnside/retract.hpp"
#include "burnside/ring.hpp"
#include "burnside/simplicial.hpp"
#include "burnside/span.hpp"

using namespace burnside;
using io::json;

namespace {

enum class Format { text, json, csv };

struct Options {
  std::string group_path;
  std::string functor_path;
  std::string base_path;
  std::string category_path;
  std::string format;  // empty: csv for matrix commands, text otherwise
  int jobs = default_jobs();
  int max_points = 4;
  int max_degree = 3;
  int cap = 2;
  int m = -1;
  int k = -1;
  long long n = -1;
  std::string s;
  std::string ingressive = "all";
  std::string egressive = "all";
  std::vector<std::string> inputs;
  bool subdivide = false;
};

Format parse_format(const std::string& f, bool csv_allowed) {
  if (f.empty()) return csv_allowed ? Format::csv : Format::text;
  if (f == "text") return Format::text;
  if (f == "json") return Format::json;
  if (f == "csv") {
    if (!csv_allowed) throw InputError("CSV output is only available for matrices (marks, burnside-product)");
    return Format::csv;
  }
  throw InputError("unknown format \"" + f + "\"");
}

GroupPtr need_group(const Options& o) {
  if (o.group_path.empty()) throw InputError("--group is required");
  return io::load_group(o.group_path);
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

// Everything needed to rerun a failed check, serialized inline.
json replay(const std::string& command, const GroupPtr& g, const Options& o) {
  return json{{"command", command}, {"group", io::to_json(*g)}, {"max_points", o.max_points}};
}

void print_replay(const json& r) { std::cout << "replay: " << r.dump() << "\n"; }

void require_budget(const Options& o) {
  if (o.max_points < 1) throw InputError("--max-points must be positive");
}

std::string csv(const IntMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << "\n";
  }
  return os.str();
}

std::string bracketed(const IntMatrix& m) {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "," : "") << "[";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << "]";
  }
  os << "]";
  return os.str();
}

json class_labels(const GroupPtr& g) {
  json out = json::array();
  const auto& t = g->subgroups();
  for (std::size_t c = 0; c < t.size(); ++c)
    out.push_back(json{{"class", c}, {"order", t.rep(static_cast<int>(c)).order()}, {"elements", t.rep(static_cast<int>(c)).elements}});
  return out;
}

std::vector<int> parse_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw InputError("--s must be a comma-separated list of integers");
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_marks(const Options& o) {
  Format f = parse_format(o.format, true);
  GroupPtr g = need_group(o);
  IntMatrix marks = table_of_marks(g);
  if (f == Format::csv) {
    std::cout << csv(marks);
  } else if (f == Format::json) {
    print_json(json{{"group", g->name()}, {"classes", class_labels(g)}, {"marks", io::matrix_to_json(marks)},
                    {"determinant", determinant(convert<BigInt>(marks)).str()}, {"weyl_order_product", weyl_order_product(g).str()}});
  } else {
    std::cout << "table of marks for " << g->name() << " (rows G/K, columns H): " << bracketed(marks) << "\n";
  }
  return 0;
}

int cmd_burnside_product(const Options& o) {
  Format f = parse_format(o.format, true);
  GroupPtr g = need_group(o);
  BurnsideRing r = burnside_ring(g);
  if (f == Format::csv) {
    // One line per pair (h, k): h,k,coefficients...
    for (std::size_t h = 0; h < r.rank(); ++h)
      for (std::size_t k = 0; k < r.rank(); ++k) {
        std::cout << h << "," << k;
        for (long long c : r.product[h][k]) std::cout << "," << c;
        std::cout << "\n";
      }
  } else if (f == Format::json) {
    json prod = json::array();
    for (std::size_t h = 0; h < r.rank(); ++h) {
      json row = json::array();
      for (std::size_t k = 0; k < r.rank(); ++k) row.push_back(r.product[h][k]);
      prod.push_back(row);
    }
    print_json(json{{"group", g->name()}, {"classes", class_labels(g)}, {"rank", r.rank()}, {"product", prod}});
  } else {
    std::cout << "A(" << g->name() << ") has rank " << r.rank() << "; [G/H_h][G/H_k] in the basis [G/H_c]:\n";
    for (std::size_t h = 0; h < r.rank(); ++h)
      for (std::size_t k = 0; k < r.rank(); ++k) {
        std::cout << "  [" << h << "]*[" << k << "] =";
        bool any = false;
        for (std::size_t c = 0; c < r.rank(); ++c)
          if (r.product[h][k][c] != 0) {
            std::cout << (any ? " +" : "") << " " << r.product[h][k][c] << "[" << c << "]";
            any = true;
          }
        if (!any) std::cout << " 0";
        std::cout << "\n";
      }
  }
  return 0;
}

int cmd_mackey_check(const Options& o) {
  Format f = parse_format(o.format, false);
  GroupPtr g = need_group(o);
  if (o.functor_path.empty()) throw InputError("--functor is required");
  MackeyFunctor m = io::mackey_from_json(io::read_json_file(o.functor_path), g, io::Source{o.functor_path, ""});
  MackeyAxiomReport rep = check_mackey_axioms(m);
  if (f == Format::json) {
    json ax = json::object();
    for (const auto& [name, ok] : rep.axioms) ax[name] = ok;
    json out{{"group", g->name()}, {"functor", m.name}, {"instances", rep.instances}, {"axioms", ax}, {"passed", rep.passed()},
             {"counterexamples", rep.counterexamples}};
    if (!rep.passed()) out["input"] = io::to_json(m);
    print_json(out);
  } else {
    for (const auto& [name, ok] : rep.axioms) std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    for (const auto& c : rep.counterexamples) std::cout << "  counterexample: " << c << "\n";
    std::cout << rep.instances << " instances checked\n";
    if (!rep.passed()) std::cout << "input: " << io::to_json(m).dump() << "\n";
  }
  return rep.passed() ? 0 : 1;
}

int cmd_span_compose(const Options& o) {
  Format f = parse_format(o.format, false);
  GroupPtr g = need_group(o);
  if (o.inputs.size() != 2) throw InputError("span compose needs two span files: first (X -> Y) and second (Y -> Z)");
  Span a = io::span_from_json(io::read_json_file(o.inputs[0]), g, io::Source{o.inputs[0], ""});
  Span b = io::span_from_json(io::read_json_file(o.inputs[1]), g, io::Source{o.inputs[1], ""});
  if (!(a.target() == b.source())) throw InputError("span compose: the target of the first span is not the source of the second");
  Span c = compose_spans(a, b);
  SpanClass cls = span_class(c);
  if (f == Format::json) {
    print_json(json{{"composite", io::to_json(c)}, {"class", io::to_json(cls)}});
  } else {
    std::cout << "composite apex has " << c.apex.size() << " points; class " << cls.describe() << " with " << cls.automorphism_count()
              << " automorphisms\n";
  }
  return 0;
}

int cmd_span_check_triple(const Options& o) {
  Format f = parse_format(o.format, false);
  GroupPtr g = need_group(o);
  TripleStructure t{parse_predicate(o.ingressive), parse_predicate(o.egressive)};
  require_budget(o);
  TripleReport r = check_triple_adequate(g, t, o.max_points);
  json rep = replay("span check-triple", g, o);
  rep["ingressive"] = to_string(t.ingressive);
  rep["egressive"] = to_string(t.egressive);
  if (f == Format::json) {
    print_json(json{{"group", g->name()},
                    {"ingressive", to_string(t.ingressive)},
                    {"egressive", to_string(t.egressive)},
                    {"instances", r.instances},
                    {"contains_isos", r.contains_isos},
                    {"closed_under_composition", r.closed_under_composition},
                    {"ambigressive_pullbacks", r.ambigressive_pullbacks},
                    {"pullback_stable", r.pullback_stable},
                    {"coproduct_compatible", r.coproduct_compatible},
                    {"coproduct_pullbacks", r.coproduct_pullbacks},
                    {"adequate", r.adequate()},
                    {"disjunctive", r.disjunctive()},
                    {"violations", r.violations},
                    {"input", r.adequate() ? json(nullptr) : rep}});
  } else {
    std::cout << "triple (ingressive " << to_string(t.ingressive) << ", egressive " << to_string(t.egressive) << ") on " << g->name()
              << ": adequate " << (r.adequate() ? "yes" : "no") << ", disjunctive " << (r.disjunctive() ? "yes" : "no") << " ("
              << r.instances << " instances)\n";
    for (const auto& v : r.violations) std::cout << "  " << v << "\n";
    if (!r.adequate()) print_replay(rep);
  }
  return r.adequate() ? 0 : 1;
}

// The simplicial set named by --category (its nerve) or --m (Δ^m).
SimplicialSet input_simplicial_set(const Options& o, int needed_dim) {
  if (!o.category_path.empty()) {
    FiniteCategory c = io::load_category(o.category_path);
    return nerve(c, needed_dim).set;
  }
  if (o.m >= 0) {
    if (o.m > 8) throw InputError("--m must be at most 8 here");
    return standard_simplex(o.m);
  }
  if (o.inputs.size() == 1) return io::simplicial_set_from_json(io::read_json_file(o.inputs[0]), io::Source{o.inputs[0], ""});
  throw InputError("give --category, --m or a simplicial set file");
}

int cmd_subdivide(const Options& o) {
  parse_format(o.format, false);
  if (o.cap < 0) throw InputError("--cap must be nonnegative");
  SimplicialSet x = input_simplicial_set(o, 2 * o.cap + 1);
  Subdivision sd = x.is_complete() ? edgewise_subdivision(x) : edgewise_subdivision(x, o.cap);
  print_json(json{{"subdivision", io::to_json(sd.set)}});
  return 0;
}

int cmd_twisted_arrow(const Options& o) {
  Format f = parse_format(o.format, false);
  if (o.category_path.empty()) throw InputError("--category is required");
  FiniteCategory c = io::load_category(o.category_path);
  TwistedArrow tw = twisted_arrow_cat(c);
  TwistedComparison cmp = compare_twisted_arrow_with_subdivision(c, o.cap);
  FiniteCategory base = product_category(opposite(c), c);
  bool opfib = is_discrete_opfibration(tw.category, base, twisted_arrow_projection(c, tw));
  bool ok = cmp.isomorphic() && opfib;
  if (f == Format::json) {
    print_json(json{{"nerve", io::to_json(nerve(tw.category, o.cap).set)},
                    {"twisted_counts", cmp.twisted_counts},
                    {"subdivision_counts", cmp.subdivision_counts},
                    {"isomorphic_to_subdivision", cmp.isomorphic()},
                    {"discrete_opfibration", opfib}});
  } else {
    std::cout << "tw(C) has " << tw.category.object_count() << " objects and " << tw.category.morphism_count() << " morphisms\n";
    std::cout << "N(tw C) vs subdivided N(C) through dimension " << o.cap << ": " << (cmp.isomorphic() ? "isomorphic" : "NOT isomorphic") << "\n";
    std::cout << "tw(C) -> C^op x C discrete opfibration: " << (opfib ? "yes" : "no") << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_homology(const Options& o) {
  Format f = parse_format(o.format, false);
  if (o.max_degree < 0) throw InputError("--max-degree must be nonnegative");
  int need = o.max_degree + 1;
  SimplicialSet x = input_simplicial_set(o, o.subdivide ? 2 * need + 1 : need);
  if (o.subdivide) x = (x.is_complete() ? edgewise_subdivision(x) : edgewise_subdivision(x, need)).set;
  auto red = reduced_homology(x, o.max_degree);
  if (f == Format::json) {
    json hs = json::array();
    for (std::size_t n = 0; n < red.size(); ++n) {
      json tors = json::array();
      for (const BigInt& t : red[n].torsion) tors.push_back(t.str());
      hs.push_back(json{{"degree", n}, {"rank", red[n].rank}, {"torsion", tors}});
    }
    print_json(json{{"counts", x.counts()}, {"reduced_homology", hs}});
  } else {
    for (std::size_t n = 0; n < red.size(); ++n) std::cout << "reduced H_" << n << " = " << red[n].describe() << "\n";
  }
  return 0;
}

json walk_json(int m, long long n) {
  horn::Walk w = horn::walk(m, n);
  json verts = json::array();
  for (auto [i, j] : w.vertices) verts.push_back(json::array({i, j}));
  return json{{"digits", w.digits}, {"vertices", verts}};
}

int cmd_horn_classify(const Options& o) {
  Format f = parse_format(o.format, false);
  horn::require_dimension(o.m);
  if (o.k < 0 || o.k >= o.m) throw InputError("--k must satisfy 0 <= k < m");
  const std::size_t total = std::size_t{1} << o.m;
  auto rows = parallel_map<std::optional<horn::ClassificationMismatch>>(
      total, o.jobs, [&](std::size_t n) { return horn::classification_mismatch(o.m, o.k, static_cast<std::int64_t>(n)); });
  std::vector<horn::ClassificationMismatch> bad;
  for (auto& r : rows)
    if (r) bad.push_back(*r);
  auto cases = horn::exceptional_cases(o.m, o.k);
  auto expected = horn::expected_exceptional_cases(o.m, o.k);
  bool table = cases == expected;
  if (f == Format::json) {
    json ex = json::array();
    for (const auto& c : cases) ex.push_back(json{{"N", c.n}, {"walk", walk_json(o.m, c.n)}, {"essential", c.essential}});
    json mism = json::array();
    for (const auto& b : bad)
      mism.push_back(json{{"N", b.n}, {"oracle", io::faces_to_json(b.oracle, o.m)}, {"formula", io::faces_to_json(b.formula, o.m)}});
    print_json(json{{"m", o.m}, {"k", o.k}, {"checked", total}, {"mismatches", mism}, {"exceptional_cases", ex}, {"matches_table", table}});
  } else {
    std::cout << "m=" << o.m << " k=" << o.k << ": " << total << " simplices, " << bad.size() << " mismatches between oracle and essential-vertex horn\n";
    std::cout << cases.size() << " exceptional cases (condition (*) fails):\n";
    for (const auto& c : cases) {
      std::cout << "  N=" << c.n << " E={";
      for (std::size_t i = 0; i < c.essential.size(); ++i) std::cout << (i ? "," : "") << c.essential[i];
      std::cout << "}\n";
    }
    std::cout << "classification table " << (table ? "matches" : "DOES NOT match") << "\n";
    for (const auto& b : bad) std::cout << "  mismatch at N=" << b.n << " (replay: horn oracle --m " << o.m << " --n " << b.n << " --k " << o.k << ")\n";
  }
  return bad.empty() && table ? 0 : 1;
}

int cmd_horn_oracle(const Options& o) {
  Format f = parse_format(o.format, false);
  horn::require_dimension(o.m);
  horn::require_index(o.m, o.n);
  if (o.k < 0 || o.k > o.m) throw InputError("--k must satisfy 0 <= k <= m");
  horn::FaceSet faces = horn::intersection_oracle(o.m, o.n, o.k);
  auto as_horn = horn::as_generalized_horn(o.m, faces);
  json out{{"m", o.m}, {"N", o.n}, {"k", o.k}, {"walk", walk_json(o.m, o.n)}, {"juts", horn::juts(o.m, o.n)}, {"oracle", io::faces_to_json(faces, o.m)}};
  out["generalized_horn"] = as_horn ? json(*as_horn) : json(nullptr);
  std::vector<std::string> notes;
  if (o.k < o.m) {
    auto v = horn::essential_vertices(o.m, o.n, o.k);
    out["crossings"] = v.crossings;
    out["essential"] = v.essential;
  } else {
    // k = m lies outside the classification; compare with the published example when it applies.
    out["crossings"] = nullptr;
    if (o.m == 5 && o.n == 13) {
      horn::WarningCase w = horn::warning_case(o.m, o.n);
      out["expected_faces"] = io::faces_to_json(w.expected, o.m);
      out["contains_expected"] = w.contains_expected;
      out["additional_faces"] = io::faces_to_json(w.additional, o.m);
      if (!w.additional.empty()) {
        std::string s = "oracle has maximal faces beyond the expected ones:";
        for (std::uint32_t a : w.additional) s += " " + horn::face_label(a, o.m);
        notes.push_back(s);
      }
    }
  }
  out["notes"] = notes;
  if (f == Format::json) {
    print_json(out);
  } else {
    std::cout << "sigma(" << o.n << ") in dimension " << o.m << ", k=" << o.k << "\n  vertices:";
    for (auto& v : out["walk"]["vertices"]) std::cout << " " << v[0].get<int>() << v[1].get<int>();
    std::cout << "\n  intersection faces:";
    for (std::uint32_t x : faces) std::cout << " " << horn::face_label(x, o.m);
    std::cout << "\n  generalized horn: " << (as_horn ? "yes" : "no") << "\n";
    for (const auto& n : notes) std::cout << "  note: " << n << "\n";
  }
  return 0;
}

int cmd_horn_anodyne(const Options& o) {
  Format f = parse_format(o.format, false);
  horn::require_dimension(o.m);
  std::vector<int> s = parse_list(o.s);
  horn::require_proper_subset(o.m, s);
  bool star = horn::is_condition_star(o.m, s);
  if (!star) {
    bool saturates = horn::inner_horn_saturates(o.m, s);
    if (f == Format::json)
      print_json(json{{"m", o.m}, {"S", s}, {"condition_star", false}, {"inner_horn_search_fills", saturates}, {"steps", json::array()}});
    else
      std::cout << "condition (*) fails; no inner anodyne decomposition (inner horn search fills: " << (saturates ? "yes" : "no") << ")\n";
    return 1;
  }
  horn::AnodyneDecomposition d = horn::anodyne_decomposition(o.m, s);
  if (f == Format::json) {
    json steps = json::array();
    for (const auto& st : d.steps) steps.push_back(io::to_json(st));
    print_json(json{{"m", o.m}, {"S", d.s}, {"condition_star", true}, {"steps", steps}, {"replay_verified", d.verified}});
  } else {
    std::cout << d.steps.size() << " inner horn fillings:\n";
    for (const auto& st : d.steps) {
      std::cout << "  fill simplex {";
      for (std::size_t i = 0; i < st.simplex.size(); ++i) std::cout << (i ? "," : "") << st.simplex[i];
      std::cout << "} along horn " << st.horn << "\n";
    }
    std::cout << "replay " << (d.verified ? "verified" : "FAILED") << "\n";
  }
  return d.verified ? 0 : 1;
}

int cmd_tomdieck(const Options& o) {
  Format f = parse_format(o.format, false);
  GroupPtr g = need_group(o);
  require_budget(o);
  TomDieckReport r = tomdieck_monoid_check(g, o.max_points);
  if (f == Format::json) {
    print_json(json{{"group", g->name()},
                    {"iso_classes_by_points", r.brute_force_classes},
                    {"multiset_counts", r.multiset_counts},
                    {"actions_by_points", r.actions},
                    {"orbit_counting", r.orbit_counting},
                    {"splitting_rank", r.splitting_rank},
                    {"subgroup_classes", r.subgroup_classes},
                    {"weyl_aut_isomorphisms", r.weyl_aut},
                    {"marks_determinant", r.marks_determinant.str()},
                    {"weyl_order_product", r.weyl_product.str()},
                    {"passed", r.passed()},
                    {"input", r.passed() ? json(nullptr) : replay("tomdieck", g, o)}});
  } else {
    std::cout << "splitting rank of " << g->name() << ": " << r.splitting_rank << " (subgroup classes: " << r.subgroup_classes << ")\n";
    std::cout << "iso classes by point count:";
    for (long long c : r.brute_force_classes) std::cout << " " << c;
    std::cout << "\nmultiset counts:          ";
    for (long long c : r.multiset_counts) std::cout << " " << c;
    std::cout << "\nmarks determinant " << r.marks_determinant << ", product of Weyl orders " << r.weyl_product << "\n";
    std::cout << (r.passed() ? "PASS" : "FAIL") << "\n";
    if (!r.passed()) print_replay(replay("tomdieck", g, o));
  }
  return r.passed() ? 0 : 1;
}

int cmd_unfurl_check(const Options& o) {
  Format f = parse_format(o.format, false);
  GroupPtr g = need_group(o);
  require_budget(o);
  UnfurlReport r = unfurl_functoriality_check(g, o.max_points, o.jobs);
  if (f == Format::json) {
    print_json(json{{"group", g->name()}, {"max_points", o.max_points}, {"composable_pairs", r.instances},
                    {"additivity_pairs", r.additivity_instances}, {"failures", r.failures}, {"passed", r.passed()},
                    {"input", r.passed() ? json(nullptr) : replay("unfurl-check", g, o)}});
  } else {
    std::cout << r.instances << " composable pairs and " << r.additivity_instances << " sums checked: " << (r.passed() ? "PASS" : "FAIL") << "\n";
    for (std::size_t i = 0; i < r.failures.size() && i < 20; ++i) std::cout << "  " << r.failures[i] << "\n";
    if (!r.passed()) print_replay(replay("unfurl-check", g, o));
  }
  return r.passed() ? 0 : 1;
}

int cmd_burnside_theorem(const Options& o) {
  Format f = parse_format(o.format, false);
  GroupPtr g = need_group(o);
  if (o.base_path.empty()) throw InputError("--base is required");
  GSet s = io::gset_from_json(io::read_json_file(o.base_path), g, io::Source{o.base_path, ""});
  require_budget(o);
  CheckReport r = verify_burnside_theorem(s, o.max_points, o.jobs);
  json rep = replay("burnside-theorem", g, o);
  rep["base"] = io::to_json(s);
  if (f == Format::json) {
    json items = json::object();
    for (const auto& [name, ok] : r.items) items[name] = ok;
    print_json(json{{"group", g->name()}, {"base", io::to_json(s)}, {"checks", items}, {"violations", r.violations}, {"passed", r.passed()},
                    {"input", r.passed() ? json(nullptr) : rep}});
  } else {
    for (const auto& [name, ok] : r.items) std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    for (const auto& v : r.violations) std::cout << "  " << v << "\n";
    if (!r.passed()) print_replay(rep);
  }
  return r.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Burnside categories, Mackey functors and horn combinatorics for finite groups"};
  app.require_subcommand(1);
  Options o;
  int status = 0;

  auto add_format = [&](CLI::App* c, const std::string& choices) { c->add_option("--format", o.format, "Output format (" + choices + ")"); };
  auto add_group = [&](CLI::App* c) { c->add_option("--group", o.group_path, "Group file (JSON)")->required(); };
  auto add_jobs = [&](CLI::App* c) { c->add_option("--jobs", o.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber); };

  auto* marks = app.add_subcommand("marks", "Table of marks");
  add_group(marks);
  add_format(marks, "text|json|csv");
  marks->callback([&] { status = cmd_marks(o); });

  auto* prod = app.add_subcommand("burnside-product", "Multiplication table of the Burnside ring");
  add_group(prod);
  add_format(prod, "text|json|csv");
  prod->callback([&] { status = cmd_burnside_product(o); });

  auto* mackey = app.add_subcommand("mackey-check", "Check the Mackey functor axioms");
  add_group(mackey);
  mackey->add_option("--functor", o.functor_path, "Mackey functor file (JSON)")->required();
  add_format(mackey, "text|json");
  add_jobs(mackey);
  mackey->callback([&] { status = cmd_mackey_check(o); });

  auto* span = app.add_subcommand("span", "Span operations");
  span->require_subcommand(1);
  auto* compose_cmd = span->add_subcommand("compose", "Compose two spans by pullback");
  add_group(compose_cmd);
  compose_cmd->add_option("spans", o.inputs, "First span (X -> Y) and second span (Y -> Z)")->expected(2)->required();
  add_format(compose_cmd, "text|json");
  compose_cmd->callback([&] { status = cmd_span_compose(o); });
  auto* triple = span->add_subcommand("check-triple", "Check adequacy and disjunctiveness of a triple");
  add_group(triple);
  triple->add_option("--ingressive", o.ingressive, "all|injective|surjective|iso");
  triple->add_option("--egressive", o.egressive, "all|injective|surjective|iso");
  triple->add_option("--max-points", o.max_points, "Total points per instance");
  add_format(triple, "text|json");
  triple->callback([&] { status = cmd_span_check_triple(o); });

  auto* sub = app.add_subcommand("subdivide", "Edgewise subdivision, emitted as JSON");
  sub->add_option("--category", o.category_path, "Finite category file (JSON); its nerve is subdivided");
  sub->add_option("--m", o.m, "Subdivide the standard simplex of this dimension");
  sub->add_option("--cap", o.cap, "Top dimension when the input is infinite");
  sub->add_option("input", o.inputs, "Simplicial set file (JSON)")->expected(0, 1);
  add_format(sub, "json");
  sub->callback([&] { status = cmd_subdivide(o); });

  auto* tw = app.add_subcommand("twisted-arrow", "Nerve of the twisted arrow category and its comparison with the subdivision");
  tw->add_option("--category", o.category_path, "Finite category file (JSON)")->required();
  tw->add_option("--cap", o.cap, "Top dimension compared");
  add_format(tw, "text|json");
  tw->callback([&] { status = cmd_twisted_arrow(o); });

  auto* hom = app.add_subcommand("homology", "Reduced integral homology");
  hom->add_option("--category", o.category_path, "Finite category file (JSON); uses its nerve");
  hom->add_option("--m", o.m, "Use the standard simplex of this dimension");
  hom->add_flag("--subdivide", o.subdivide, "Apply the edgewise subdivision first");
  hom->add_option("--max-degree", o.max_degree, "Highest degree computed");
  hom->add_option("input", o.inputs, "Simplicial set file (JSON)")->expected(0, 1);
  add_format(hom, "text|json");
  hom->callback([&] { status = cmd_homology(o); });

  auto* horn_cmd = app.add_subcommand("horn", "Horn combinatorics of completely factored simplices");
  horn_cmd->require_subcommand(1);
  auto* classify = horn_cmd->add_subcommand("classify", "Compare the intersection oracle with the essential-vertex horn for every N");
  classify->add_option("--m", o.m, "Dimension")->required();
  classify->add_option("--k", o.k, "Horn index")->required();
  add_format(classify, "text|json");
  add_jobs(classify);
  classify->callback([&] { status = cmd_horn_classify(o); });
  auto* oracle = horn_cmd->add_subcommand("oracle", "Intersection of sigma(N) with P_N(k)");
  oracle->add_option("--m", o.m, "Dimension")->required();
  oracle->add_option("--n", o.n, "Simplex index N")->required();
  oracle->add_option("--k", o.k, "Horn index (k = m allowed)")->required();
  add_format(oracle, "text|json");
  oracle->callback([&] { status = cmd_horn_oracle(o); });
  auto* anodyne = horn_cmd->add_subcommand("anodyne", "Inner anodyne decomposition of a generalized horn");
  anodyne->add_option("--m", o.m, "Dimension")->required();
  anodyne->add_option("--s", o.s, "Vertex set S, comma separated")->required();
  add_format(anodyne, "text|json");
  anodyne->callback([&] { status = cmd_horn_anodyne(o); });

  auto* td = app.add_subcommand("tomdieck", "Free monoid of G-sets and the splitting rank");
  add_group(td);
  td->add_option("--max-points", o.max_points, "Largest G-set enumerated");
  add_format(td, "text|json");
  td->callback([&] { status = cmd_tomdieck(o); });

  auto* unfurl = app.add_subcommand("unfurl-check", "Functoriality of g_! f^* on K0 over all spans");
  add_group(unfurl);
  unfurl->add_option("--max-points", o.max_points, "Largest object");
  add_format(unfurl, "text|json");
  add_jobs(unfurl);
  unfurl->callback([&] { status = cmd_unfurl_check(o); });

  auto* bt = app.add_subcommand("burnside-theorem", "K0 of retractive objects against spans from the point");
  add_group(bt);
  bt->add_option("--base", o.base_path, "Base G-set file (JSON)")->required();
  bt->add_option("--max-points", o.max_points, "Largest target and apex in the naturality sweep");
  add_format(bt, "text|json");
  add_jobs(bt);
  bt->callback([&] { status = cmd_burnside_theorem(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedInput& e) {
    std::cerr << "unsupported input: " << e.what() << "\n";
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return 2;
  } catch (const ContractError& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
  return status;
}

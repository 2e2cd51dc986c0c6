#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <string>

#include "burnside/groups.hpp"
#include "burnside/io.hpp"

using namespace burnside;
using namespace burnside::io;

namespace {

std::string data(const std::string& name) { return std::string(BURNSIDE_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
  auto p = std::filesystem::temp_directory_path() / ("burnside_io_" + name);
  std::ofstream(p) << contents;
  return p.string();
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST(Io, LoadsGroupFiles) {
  const std::vector<std::pair<std::string, std::size_t>> files = {{"c2.json", 2}, {"c3.json", 3}, {"c4.json", 4}, {"klein.json", 4},
                                                                   {"s3.json", 6}, {"d8.json", 8}, {"q8.json", 8}};
  for (const auto& [f, order] : files) EXPECT_EQ(load_group(data(f))->order(), order) << f;
  // Q8 has a unique involution.
  GroupPtr q8 = load_group(data("q8.json"));
  int involutions = 0;
  for (int a = 1; a < static_cast<int>(q8->order()); ++a) involutions += q8->mul(a, a) == 0;
  EXPECT_EQ(involutions, 1);
}

TEST(Io, GroupRoundTrip) {
  for (const GroupPtr& g : groups::corpus()) {
    GroupPtr back = group_from_json(to_json(*g), Source{});
    EXPECT_EQ(back->order(), g->order());
    EXPECT_EQ(back->subgroups().size(), g->subgroups().size());
  }
}

TEST(Io, GSetFilesFollowGroupReferences) {
  std::string p = data("c2_free_plus_fixed.json");
  GSet x = gset_from_json(read_json_file(p), nullptr, Source{p, ""});
  EXPECT_EQ(x.size(), 3);
  EXPECT_EQ(x.group().order(), 2u);
  EXPECT_EQ(decompose(x).orbits.size(), 2u);
  GSet back = gset_from_json(to_json(x, true), nullptr, Source{});
  EXPECT_TRUE(find_iso(x, back).has_value());
}

TEST(Io, SpanFile) {
  GroupPtr c2 = load_group(data("c2.json"));
  std::string p = data("span_pt_to_free.json");
  Span s = span_from_json(read_json_file(p), c2, Source{p, ""});
  EXPECT_EQ(s.source().size(), 1);
  EXPECT_EQ(s.target().size(), 2);
  EXPECT_EQ(s.apex.size(), 2);
}

TEST(Io, MackeyRoundTrip) {
  GroupPtr s3 = groups::symmetric(3);
  MackeyFunctor b = burnside_mackey(s3);
  MackeyFunctor back = mackey_from_json(to_json(b), s3, Source{});
  EXPECT_EQ(back.res.size(), b.res.size());
  for (std::size_t i = 0; i < b.res.size(); ++i) {
    EXPECT_EQ(back.res[i], b.res[i]);
    EXPECT_EQ(back.tr[i], b.tr[i]);
  }
  EXPECT_TRUE(check_mackey_axioms(back).passed());
}

TEST(Io, CategoryFiles) {
  EXPECT_EQ(load_category(data("category_ordinal2.json")).object_count(), 3);
  FiniteCategory vee = load_category(data("category_vee.json"));
  EXPECT_EQ(vee.object_count(), 3);
  EXPECT_EQ(vee.morphism_count(), 5);
  EXPECT_EQ(load_category(data("category_cyclic3.json")).morphism_count(), 3);
  FiniteCategory idem = load_category(data("category_idempotent.json"));
  EXPECT_EQ(idem.object_count(), 2);
  EXPECT_EQ(idem.morphism_count(), 4);
}

TEST(Io, SimplicialSetRoundTrip) {
  SimplicialSet x = simplex_boundary(3);
  SimplicialSet back = simplicial_set_from_json(to_json(x), Source{});
  EXPECT_EQ(back.counts(), x.counts());
  EXPECT_TRUE(back.satisfies_simplicial_identities());
}

TEST(Io, ErrorsNameTheFileAndPath) {
  EXPECT_NE(error_of([] { read_json_file("/nonexistent/burnside.json"); }).find("/nonexistent/burnside.json"), std::string::npos);
  std::string bad = temp_file("bad.json", "{\"points\": 2,");
  EXPECT_NE(error_of([&] { read_json_file(bad); }).find("ill-formed JSON"), std::string::npos);
  std::string neg = temp_file("neg.json", "{\"points\": -1}");
  std::string msg = error_of([&] { gset_from_json(read_json_file(neg), groups::cyclic(2), Source{neg, ""}); });
  EXPECT_NE(msg.find(neg + ":/points"), std::string::npos) << msg;
  std::string perm = temp_file("perm.json", "{\"points\": 2, \"action\": {\"0\": [0, 0]}}");
  msg = error_of([&] { gset_from_json(read_json_file(perm), groups::cyclic(2), Source{perm, ""}); });
  EXPECT_NE(msg.find("/action/0"), std::string::npos) << msg;
  EXPECT_FALSE(error_of([] { group_from_json(json{{"builtin", "nope"}}, Source{"x.json", ""}); }).empty());
}

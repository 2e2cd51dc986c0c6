#pragma once

// JSON interchange for groups, G-sets, maps, spans, Mackey functors,
// finite categories and simplicial sets. Reader errors are InputError with
// the file and the JSON path of the offending field.

#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "burnside/errors.hpp"
#include "burnside/group.hpp"
#include "burnside/groups.hpp"
#include "burnside/gset.hpp"
#include "burnside/horn.hpp"
#include "burnside/mackey.hpp"
#include "burnside/simplicial.hpp"
#include "burnside/span.hpp"

namespace burnside::io {

using json = nlohmann::json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path + ": cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path + ": ill-formed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

// Where a value came from, for diagnostics.
struct Source {
  std::string file;
  std::string path;  // JSON path inside the file
  std::filesystem::path dir() const { return file.empty() ? std::filesystem::path(".") : std::filesystem::path(file).parent_path(); }
  Source at(const std::string& key) const { return {file, path + "/" + key}; }
  Source at(std::size_t i) const { return {file, path + "/" + std::to_string(i)}; }
  [[noreturn]] void fail(const std::string& msg) const { throw InputError((file.empty() ? "<input>" : file) + ":" + (path.empty() ? "/" : path) + ": " + msg); }
};

namespace detail {

inline const json& field(const json& j, const std::string& key, const Source& src) {
  if (!j.is_object()) src.fail("expected an object");
  auto it = j.find(key);
  if (it == j.end()) src.fail("missing field \"" + key + "\"");
  return *it;
}

template <class T>
T get(const json& j, const Source& src) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    src.fail(std::string("wrong type: ") + e.what());
  }
}

inline IntMatrix matrix_from_json(const json& j, std::size_t rows, std::size_t cols, const Source& src) {
  if (!j.is_array()) src.fail("expected a matrix (list of rows)");
  if (j.size() != rows) src.fail("expected " + std::to_string(rows) + " rows, got " + std::to_string(j.size()));
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    auto row = get<std::vector<long long>>(j[r], src.at(r));
    if (row.size() != cols) src.at(r).fail("expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

template <class Int>
json matrix_to_json(const Matrix<Int>& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if constexpr (std::is_same_v<Int, BigInt>)
        row.push_back(m(r, c).str());
      else
        row.push_back(m(r, c));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace detail

using detail::matrix_to_json;

// ---------------------------------------------------------------------------
// Groups

// Names: 1, C<n>, S<n>, D<2n> (dihedral of order 2n), D4 as the dihedral group
// of the square, C2xC2, Q8.
inline GroupPtr builtin_group(const std::string& name) {
  std::smatch m;
  if (name == "1" || name == "trivial") return groups::trivial();
  if (name == "C2xC2" || name == "V4" || name == "klein") return groups::klein_four();
  if (name == "Q8") return groups::quaternion();
  if (name == "D4") return groups::dihedral(4);
  static const std::regex pat("([CSD])([0-9]+)");
  if (std::regex_match(name, m, pat)) {
    int n = std::stoi(m[2]);
    if (n < 1 || n > 64) throw InputError("builtin group parameter out of range: " + name);
    if (m[1] == "C") return groups::cyclic(n);
    if (m[1] == "S") {
      if (n > 5) throw InputError("symmetric groups above S5 are out of range");
      return groups::symmetric(n);
    }
    if (n % 2 == 0 && n >= 4) return groups::dihedral(n / 2);
  }
  throw InputError("unknown builtin group: " + name);
}

inline GroupPtr group_from_json(const json& j, const Source& src) {
  if (j.is_string()) {
    std::filesystem::path p = src.dir() / detail::get<std::string>(j, src);
    return group_from_json(read_json_file(p.string()), Source{p.string(), ""});
  }
  if (j.is_object() && j.contains("builtin")) {
    try {
      return builtin_group(detail::get<std::string>(j["builtin"], src.at("builtin")));
    } catch (const InputError& e) {
      src.at("builtin").fail(e.what());
    }
  }
  int degree = detail::get<int>(detail::field(j, "degree", src), src.at("degree"));
  if (degree < 1) src.at("degree").fail("degree must be positive");
  const json& gens = detail::field(j, "generators", src);
  if (!gens.is_array()) src.at("generators").fail("expected a list of permutations");
  std::vector<Perm> perms;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    Perm p = detail::get<Perm>(gens[i], src.at("generators").at(i));
    if (!is_permutation_of(p, degree)) src.at("generators").at(i).fail("not a permutation of 0.." + std::to_string(degree - 1));
    perms.push_back(std::move(p));
  }
  std::string name = j.contains("name") ? detail::get<std::string>(j["name"], src.at("name")) : std::string{};
  try {
    return FiniteGroup::make(degree, std::move(perms), name);
  } catch (const ResourceError& e) {
    src.fail(e.what());
  }
}

inline GroupPtr load_group(const std::string& path) { return group_from_json(read_json_file(path), Source{path, ""}); }

inline json to_json(const FiniteGroup& g) {
  return json{{"degree", g.degree()}, {"generators", g.generators()}, {"name", g.name()}};
}

// ---------------------------------------------------------------------------
// G-sets, maps, spans

// The group comes from the "group" field when present, otherwise from `g`.
inline GSet gset_from_json(const json& j, const GroupPtr& g, const Source& src) {
  if (j.is_string()) {
    std::filesystem::path p = src.dir() / detail::get<std::string>(j, src);
    return gset_from_json(read_json_file(p.string()), g, Source{p.string(), ""});
  }
  GroupPtr group = g;
  if (j.is_object() && j.contains("group")) {
    group = group_from_json(j["group"], src.at("group"));
    if (g && !same_group(g, group)) src.at("group").fail("G-set is over a different group than the one supplied");
  }
  if (!group) src.fail("no group given for the G-set");
  int points = detail::get<int>(detail::field(j, "points", src), src.at("points"));
  if (points < 0) src.at("points").fail("negative point count");
  std::vector<Perm> act(static_cast<std::size_t>(group->generator_count()), identity_perm(points));
  if (j.contains("action")) {
    const json& a = j["action"];
    Source as = src.at("action");
    auto set_gen = [&](std::size_t s, const json& v, const Source& vs) {
      if (s >= act.size()) vs.fail("generator index out of range");
      act[s] = detail::get<Perm>(v, vs);
      if (!is_permutation_of(act[s], points)) vs.fail("not a permutation of the points");
    };
    if (a.is_object()) {
      for (auto it = a.begin(); it != a.end(); ++it) {
        std::size_t s = 0;
        try {
          s = static_cast<std::size_t>(std::stoul(it.key()));
        } catch (const std::exception&) {
          as.at(it.key()).fail("generator keys must be indices");
        }
        set_gen(s, it.value(), as.at(it.key()));
      }
    } else if (a.is_array()) {
      if (a.size() != act.size()) as.fail("expected one permutation per generator");
      for (std::size_t s = 0; s < a.size(); ++s) set_gen(s, a[s], as.at(s));
    } else {
      as.fail("expected an object keyed by generator index");
    }
  } else if (group->generator_count() > 0 && points > 0) {
    src.fail("missing field \"action\"");
  }
  try {
    return GSet(group, points, std::move(act));
  } catch (const InputError& e) {
    src.fail(e.what());
  }
}

inline json to_json(const GSet& x, bool with_group = false) {
  json act = json::object();
  for (std::size_t s = 0; s < x.generator_action().size(); ++s) act[std::to_string(s)] = x.generator_action()[s];
  json j{{"points", x.size()}, {"action", act}};
  if (with_group) j["group"] = to_json(x.group());
  return j;
}

inline GMap map_from_json(const json& j, const GroupPtr& g, const Source& src) {
  GSet s = gset_from_json(detail::field(j, "source", src), g, src.at("source"));
  GSet t = gset_from_json(detail::field(j, "target", src), g, src.at("target"));
  auto im = detail::get<std::vector<int>>(detail::field(j, "images", src), src.at("images"));
  try {
    return GMap(s, t, std::move(im));
  } catch (const InputError& e) {
    src.fail(e.what());
  }
}

inline json to_json(const GMap& f) { return json{{"source", to_json(f.source())}, {"target", to_json(f.target())}, {"images", f.images()}}; }

// { "source", "target", "apex", "left": [...], "right": [...] }
inline Span span_from_json(const json& j, const GroupPtr& g, const Source& src) {
  GSet x = gset_from_json(detail::field(j, "source", src), g, src.at("source"));
  GSet y = gset_from_json(detail::field(j, "target", src), g, src.at("target"));
  GSet u = gset_from_json(detail::field(j, "apex", src), g, src.at("apex"));
  try {
    GMap l(u, x, detail::get<std::vector<int>>(detail::field(j, "left", src), src.at("left")));
    GMap r(u, y, detail::get<std::vector<int>>(detail::field(j, "right", src), src.at("right")));
    return Span(l, r);
  } catch (const InputError& e) {
    src.fail(e.what());
  }
}

inline json to_json(const Span& s) {
  return json{{"source", to_json(s.source())}, {"target", to_json(s.target())}, {"apex", to_json(s.apex)},
              {"left", s.left.images()},      {"right", s.right.images()}};
}

inline json to_json(const SpanClass& s) {
  json keys = json::array();
  for (const OrbitKey& k : s.keys()) keys.push_back(json{{"class", k.cls}, {"source_point", k.left}, {"target_point", k.right}});
  return json{{"orbits", keys}, {"apex_points", s.apex_size()}, {"automorphisms", s.automorphism_count().str()},
              {"representative", to_json(s.representative())}};
}

// ---------------------------------------------------------------------------
// Mackey functors

// { "builtin": "zero" | "constant" | "burnside" } or
// { "name", "values": [{"class", "generators", "relations": [[...], ...]}],
//   "maps": [{"from", "to", "point", "res": matrix, "tr": matrix}] }
// Relations are listed as vectors (columns of the relation matrix).
inline MackeyFunctor mackey_from_json(const json& j, const GroupPtr& g, const Source& src) {
  if (j.is_object() && j.contains("builtin")) {
    std::string b = detail::get<std::string>(j["builtin"], src.at("builtin"));
    if (b == "zero") return zero_mackey(g);
    if (b == "constant") return constant_mackey(g);
    if (b == "burnside") return burnside_mackey(g);
    src.at("builtin").fail("unknown builtin functor \"" + b + "\"");
  }
  MackeyFunctor m;
  m.orbits = orbit_category(g);
  m.name = j.contains("name") ? detail::get<std::string>(j["name"], src.at("name")) : "M";
  const std::size_t classes = m.orbits->object_count();
  const json& vals = detail::field(j, "values", src);
  if (!vals.is_array()) src.at("values").fail("expected a list");
  std::vector<std::optional<AbGroupPres>> values(classes);
  for (std::size_t i = 0; i < vals.size(); ++i) {
    Source vs = src.at("values").at(i);
    int c = detail::get<int>(detail::field(vals[i], "class", vs), vs.at("class"));
    if (c < 0 || static_cast<std::size_t>(c) >= classes) vs.at("class").fail("subgroup class out of range");
    if (values[static_cast<std::size_t>(c)]) vs.at("class").fail("duplicate value for class " + std::to_string(c));
    int n = detail::get<int>(detail::field(vals[i], "generators", vs), vs.at("generators"));
    if (n < 0) vs.at("generators").fail("negative generator count");
    std::vector<std::vector<long long>> rels;
    if (vals[i].contains("relations")) rels = detail::get<std::vector<std::vector<long long>>>(vals[i]["relations"], vs.at("relations"));
    BigMatrix r(static_cast<std::size_t>(n), rels.size());
    for (std::size_t k = 0; k < rels.size(); ++k) {
      if (rels[k].size() != static_cast<std::size_t>(n)) vs.at("relations").at(k).fail("relation has the wrong length");
      for (std::size_t t = 0; t < rels[k].size(); ++t) r(t, k) = BigInt(rels[k][t]);
    }
    values[static_cast<std::size_t>(c)] = AbGroupPres(std::move(r));
  }
  for (std::size_t c = 0; c < classes; ++c) {
    if (!values[c]) src.at("values").fail("no value for subgroup class " + std::to_string(c));
    m.values.push_back(*values[c]);
  }
  const std::size_t maps = m.orbits->maps().size();
  std::vector<std::optional<IntMatrix>> res(maps), tr(maps);
  const json& ms = detail::field(j, "maps", src);
  if (!ms.is_array()) src.at("maps").fail("expected a list");
  for (std::size_t i = 0; i < ms.size(); ++i) {
    Source s = src.at("maps").at(i);
    OrbitMap om{detail::get<int>(detail::field(ms[i], "from", s), s.at("from")), detail::get<int>(detail::field(ms[i], "to", s), s.at("to")),
                detail::get<int>(detail::field(ms[i], "point", s), s.at("point"))};
    int idx = -1;
    try {
      idx = m.orbits->index(om);
    } catch (const InputError&) {
      s.fail("not a map of the orbit category");
    }
    const std::size_t a = m.values[static_cast<std::size_t>(om.from)].generators();
    const std::size_t b = m.values[static_cast<std::size_t>(om.to)].generators();
    res[static_cast<std::size_t>(idx)] = detail::matrix_from_json(detail::field(ms[i], "res", s), a, b, s.at("res"));
    tr[static_cast<std::size_t>(idx)] = detail::matrix_from_json(detail::field(ms[i], "tr", s), b, a, s.at("tr"));
  }
  for (std::size_t i = 0; i < maps; ++i) {
    if (!res[i]) src.at("maps").fail("no matrices for the orbit map " + m.orbits->describe(m.orbits->maps()[i]));
    m.res.push_back(*res[i]);
    m.tr.push_back(*tr[i]);
  }
  m.validate_shapes();
  return m;
}

inline json to_json(const MackeyFunctor& m) {
  json vals = json::array();
  for (std::size_t c = 0; c < m.values.size(); ++c) {
    json rels = json::array();
    const BigMatrix& r = m.values[c].relations();
    for (std::size_t k = 0; k < r.cols(); ++k) {
      json v = json::array();
      for (std::size_t t = 0; t < r.rows(); ++t) v.push_back(static_cast<long long>(r(t, k)));
      rels.push_back(v);
    }
    vals.push_back(json{{"class", c}, {"generators", m.values[c].generators()}, {"relations", rels}});
  }
  json maps = json::array();
  for (std::size_t i = 0; i < m.orbits->maps().size(); ++i) {
    const OrbitMap& om = m.orbits->maps()[i];
    maps.push_back(json{{"from", om.from}, {"to", om.to}, {"point", om.point}, {"res", matrix_to_json(m.res[i])}, {"tr", matrix_to_json(m.tr[i])}});
  }
  return json{{"name", m.name}, {"values", vals}, {"maps", maps}};
}

// ---------------------------------------------------------------------------
// Finite categories

// { "builtin": "ordinal", "m": 2 } | { "builtin": "discrete", "n": 3 } | { "builtin": "cyclic_group", "n": 3 }
// | { "poset": { "size": n, "less_equal": [[a, b], ...] } } (closed reflexively and transitively)
// | { "objects": n, "morphisms": [{"source", "target", "label"}], "identities": [...], "compose": [[...]] }
inline FiniteCategory category_from_json(const json& j, const Source& src) {
  if (j.is_object() && j.contains("builtin")) {
    std::string b = detail::get<std::string>(j["builtin"], src.at("builtin"));
    auto param = [&](const char* key, int lo, int hi) {
      int v = detail::get<int>(detail::field(j, key, src), src.at(key));
      if (v < lo || v > hi) src.at(key).fail("parameter out of range");
      return v;
    };
    if (b == "ordinal") return ordinal_category(param("m", 0, 12));
    if (b == "discrete") return discrete_category(param("n", 1, 64));
    if (b == "cyclic_group") return cyclic_group_category(param("n", 1, 64));
    src.at("builtin").fail("unknown builtin category \"" + b + "\"");
  }
  if (j.is_object() && j.contains("poset")) {
    Source ps = src.at("poset");
    int n = detail::get<int>(detail::field(j["poset"], "size", ps), ps.at("size"));
    if (n < 1 || n > 64) ps.at("size").fail("size out of range");
    std::vector<std::vector<char>> le(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
    for (int a = 0; a < n; ++a) le[static_cast<std::size_t>(a)][static_cast<std::size_t>(a)] = 1;
    if (j["poset"].contains("less_equal")) {
      auto rel = detail::get<std::vector<std::vector<int>>>(j["poset"]["less_equal"], ps.at("less_equal"));
      for (std::size_t i = 0; i < rel.size(); ++i) {
        if (rel[i].size() != 2 || rel[i][0] < 0 || rel[i][0] >= n || rel[i][1] < 0 || rel[i][1] >= n)
          ps.at("less_equal").at(i).fail("expected a pair of elements");
        le[static_cast<std::size_t>(rel[i][0])][static_cast<std::size_t>(rel[i][1])] = 1;
      }
    }
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          if (le[static_cast<std::size_t>(a)][static_cast<std::size_t>(k)] && le[static_cast<std::size_t>(k)][static_cast<std::size_t>(b)])
            le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = 1;
    try {
      return poset_category(n, [&](int a, int b) { return le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] != 0; });
    } catch (const InputError& e) {
      ps.fail(e.what());
    }
  }
  int objects = detail::get<int>(detail::field(j, "objects", src), src.at("objects"));
  const json& mj = detail::field(j, "morphisms", src);
  std::vector<FiniteCategory::Morphism> mors;
  for (std::size_t i = 0; i < mj.size(); ++i) {
    Source ms = src.at("morphisms").at(i);
    FiniteCategory::Morphism m;
    m.source = detail::get<int>(detail::field(mj[i], "source", ms), ms.at("source"));
    m.target = detail::get<int>(detail::field(mj[i], "target", ms), ms.at("target"));
    m.label = mj[i].contains("label") ? detail::get<std::string>(mj[i]["label"], ms.at("label")) : "f" + std::to_string(i);
    mors.push_back(std::move(m));
  }
  auto ids = detail::get<std::vector<int>>(detail::field(j, "identities", src), src.at("identities"));
  auto comp = detail::get<std::vector<std::vector<int>>>(detail::field(j, "compose", src), src.at("compose"));
  std::vector<std::string> labels;
  if (j.contains("object_labels")) labels = detail::get<std::vector<std::string>>(j["object_labels"], src.at("object_labels"));
  try {
    return FiniteCategory(objects, std::move(mors), std::move(ids), std::move(comp), std::move(labels));
  } catch (const InputError& e) {
    src.fail(e.what());
  }
}

inline FiniteCategory load_category(const std::string& path) { return category_from_json(read_json_file(path), Source{path, ""}); }

// ---------------------------------------------------------------------------
// Simplicial sets

inline json to_json(const NSimplex& s) { return json{{"dim", s.dim}, {"id", s.id}, {"surj", s.surj}}; }

// Nondegenerate simplices per dimension with their face tables.
inline json to_json(const SimplicialSet& x) {
  json dims = json::array();
  for (int n = 0; n <= x.materialized_dim(); ++n) {
    json simplices = json::array();
    for (std::size_t id = 0; id < x.count(n); ++id) {
      NSimplex s = nondegenerate(n, static_cast<int>(id));
      json faces = json::array();
      for (int i = 0; n > 0 && i <= n; ++i) faces.push_back(to_json(x.face(n, static_cast<int>(id), i)));
      json v = json::array();
      for (int p : x.vertices(s)) v.push_back(p);
      simplices.push_back(json{{"id", id}, {"vertices", v}, {"label", x.label(s)}, {"faces", faces}});
    }
    dims.push_back(json{{"dim", n}, {"count", x.count(n)}, {"simplices", simplices}});
  }
  return json{{"complete", x.is_complete()}, {"vertex_labels", x.vertex_labels()}, {"dimensions", dims}};
}

inline SimplicialSet simplicial_set_from_json(const json& j, const Source& src) {
  bool complete = j.contains("complete") ? detail::get<bool>(j["complete"], src.at("complete")) : true;
  std::vector<std::string> labels;
  if (j.contains("vertex_labels")) labels = detail::get<std::vector<std::string>>(j["vertex_labels"], src.at("vertex_labels"));
  const json& dims = detail::field(j, "dimensions", src);
  SimplicialSet::FaceTable faces;
  for (std::size_t n = 0; n < dims.size(); ++n) {
    Source ds = src.at("dimensions").at(n);
    const json& simplices = detail::field(dims[n], "simplices", ds);
    faces.emplace_back();
    for (std::size_t id = 0; id < simplices.size(); ++id) {
      Source ss = ds.at("simplices").at(id);
      std::vector<NSimplex> fs;
      if (n > 0) {
        const json& fj = detail::field(simplices[id], "faces", ss);
        if (fj.size() != n + 1) ss.at("faces").fail("expected " + std::to_string(n + 1) + " faces");
        for (std::size_t i = 0; i < fj.size(); ++i) {
          Source fsrc = ss.at("faces").at(i);
          NSimplex f{detail::get<int>(detail::field(fj[i], "dim", fsrc), fsrc.at("dim")), detail::get<int>(detail::field(fj[i], "id", fsrc), fsrc.at("id")),
                     detail::get<std::vector<int>>(detail::field(fj[i], "surj", fsrc), fsrc.at("surj"))};
          if (f.surj.empty()) fsrc.at("surj").fail("degeneracy must be a nonempty surjection");
          fs.push_back(std::move(f));
        }
      }
      faces.back().push_back(std::move(fs));
    }
  }
  try {
    return SimplicialSet(std::move(faces), complete, std::move(labels));
  } catch (const InputError& e) {
    src.fail(e.what());
  } catch (const ContractError& e) {
    src.fail(e.what());
  }
}

// ---------------------------------------------------------------------------
// Horn data

inline json faces_to_json(const horn::FaceSet& faces, int m) {
  json arr = json::array();
  for (std::uint32_t f : faces) arr.push_back(json{{"vertices", horn::mask_vertices(f)}, {"label", horn::face_label(f, m)}});
  return arr;
}

inline json to_json(const horn::FillStep& s) { return json{{"simplex", s.simplex}, {"horn", s.horn}}; }

}  // namespace burnside::io

#pragma once

// Finite simplicial sets stored by nondegenerate simplices, finite
// categories and their nerves, edgewise subdivision, twisted arrow
// categories and generalized horns.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burnside/errors.hpp"

namespace burnside {

// A monotone map [p] -> [n] as its list of values.
using Mono = std::vector<int>;

// An element of X_n in Eilenberg-Zilber normal form s^*(y): y is the
// nondegenerate simplex (dim, id) and surj is a monotone surjection
// [n] -> [dim]. Nondegenerate simplices carry the identity surjection.
struct NSimplex {
  int dim = 0;
  int id = 0;
  std::vector<int> surj;

  int total_dim() const { return static_cast<int>(surj.size()) - 1; }
  bool is_degenerate() const { return total_dim() != dim; }
  bool operator==(const NSimplex&) const = default;
  auto operator<=>(const NSimplex&) const = default;
};

inline Mono identity_mono(int n) {
  Mono m(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) m[static_cast<std::size_t>(i)] = i;
  return m;
}

// delta_i: [n-1] -> [n], skipping i.
inline Mono coface(int n, int i) {
  Mono m;
  for (int v = 0; v <= n; ++v)
    if (v != i) m.push_back(v);
  return m;
}

// sigma_i: [n+1] -> [n], hitting i twice.
inline Mono codegeneracy(int n, int i) {
  Mono m;
  for (int v = 0; v <= n; ++v) {
    m.push_back(v);
    if (v == i) m.push_back(v);
  }
  return m;
}

// (a o b)
inline Mono compose_mono(const Mono& a, const Mono& b) {
  Mono r;
  r.reserve(b.size());
  for (int v : b) r.push_back(a[static_cast<std::size_t>(v)]);
  return r;
}

inline NSimplex nondegenerate(int dim, int id) { return NSimplex{dim, id, identity_mono(dim)}; }

class SimplicialSet {
 public:
  // faces[n][id] lists d_0..d_n of the nondegenerate n-simplex id (empty for n = 0).
  using FaceTable = std::vector<std::vector<std::vector<NSimplex>>>;

  SimplicialSet() = default;
  SimplicialSet(FaceTable faces, bool complete, std::vector<std::string> vertex_labels = {})
      : faces_(std::move(faces)), complete_(complete), labels_(std::move(vertex_labels)) {
    validate();
  }

  // Highest dimension for which nondegenerate simplices are recorded.
  int materialized_dim() const { return static_cast<int>(faces_.size()) - 1; }
  // True when no nondegenerate simplices exist above materialized_dim().
  bool is_complete() const { return complete_; }
  bool is_truncated() const { return !complete_; }
  // Every X_n with n <= d is fully known.
  bool materialized_through(int d) const { return complete_ || d <= materialized_dim(); }

  std::size_t count(int n) const {
    if (n < 0 || n > materialized_dim()) return 0;
    return faces_[static_cast<std::size_t>(n)].size();
  }
  std::vector<std::size_t> counts() const {
    std::vector<std::size_t> c;
    for (int n = 0; n <= materialized_dim(); ++n) c.push_back(count(n));
    while (!c.empty() && c.back() == 0 && complete_) c.pop_back();
    return c;
  }
  const NSimplex& face(int n, int id, int i) const {
    return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(id)][static_cast<std::size_t>(i)];
  }
  const FaceTable& face_table() const { return faces_; }
  const std::vector<std::string>& vertex_labels() const { return labels_; }

  // theta^*(x) for a monotone theta: [p] -> [n], where x lies in X_n.
  NSimplex apply(const Mono& theta, const NSimplex& x) const {
    Mono mu = compose_mono(x.surj, theta);
    std::vector<int> image = mu;
    image.erase(std::unique(image.begin(), image.end()), image.end());
    const int q = static_cast<int>(image.size()) - 1;
    Mono pi;
    pi.reserve(mu.size());
    for (int v : mu) pi.push_back(static_cast<int>(std::lower_bound(image.begin(), image.end(), v) - image.begin()));
    if (q == x.dim) return NSimplex{x.dim, x.id, std::move(pi)};
    // Peel off the largest vertex missed by the image.
    int j = x.dim;
    while (std::binary_search(image.begin(), image.end(), j)) --j;
    const NSimplex& z = face(x.dim, x.id, j);
    Mono next;
    next.reserve(pi.size());
    for (int a : pi) {
      int v = image[static_cast<std::size_t>(a)];
      next.push_back(v > j ? v - 1 : v);
    }
    return apply(next, z);
  }

  NSimplex face_of(const NSimplex& x, int i) const { return apply(coface(x.total_dim(), i), x); }
  NSimplex degeneracy_of(const NSimplex& x, int i) const { return apply(codegeneracy(x.total_dim(), i), x); }
  int vertex(const NSimplex& x, int k) const { return apply(Mono{k}, x).id; }
  std::vector<int> vertices(const NSimplex& x) const {
    std::vector<int> v;
    for (int k = 0; k <= x.total_dim(); ++k) v.push_back(vertex(x, k));
    return v;
  }

  std::string label(const NSimplex& x) const {
    std::string s;
    for (int v : vertices(x)) s += labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
    return s;
  }

  // All elements of X_p, degenerate ones included.
  std::vector<NSimplex> elements(int p) const {
    if (!materialized_through(p)) throw ResourceError("simplicial set not materialized in dimension " + std::to_string(p));
    std::vector<NSimplex> out;
    for (int k = 0; k <= std::min(p, materialized_dim()); ++k) {
      if (count(k) == 0) continue;
      // Surjections [p] -> [k] correspond to k-subsets of {1..p} of jump positions.
      std::vector<Mono> surjs;
      std::vector<int> jumps;
      std::function<void(int)> rec = [&](int from) {
        if (static_cast<int>(jumps.size()) == k) {
          Mono m(static_cast<std::size_t>(p + 1), 0);
          int level = 0;
          std::size_t next = 0;
          for (int t = 1; t <= p; ++t) {
            if (next < jumps.size() && jumps[next] == t) {
              ++level;
              ++next;
            }
            m[static_cast<std::size_t>(t)] = level;
          }
          surjs.push_back(std::move(m));
          return;
        }
        for (int t = from; t <= p; ++t) {
          jumps.push_back(t);
          rec(t + 1);
          jumps.pop_back();
        }
      };
      rec(1);
      for (std::size_t id = 0; id < count(k); ++id)
        for (const Mono& s : surjs) out.push_back(NSimplex{k, static_cast<int>(id), s});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // d_i d_j = d_{j-1} d_i for i < j on every nondegenerate simplex.
  bool satisfies_simplicial_identities() const {
    for (int n = 2; n <= materialized_dim(); ++n)
      for (std::size_t id = 0; id < count(n); ++id) {
        NSimplex x = nondegenerate(n, static_cast<int>(id));
        for (int j = 1; j <= n; ++j)
          for (int i = 0; i < j; ++i)
            if (face_of(face_of(x, j), i) != face_of(face_of(x, i), j - 1)) return false;
      }
    return true;
  }

 private:
  void validate() const {
    for (int n = 0; n <= materialized_dim(); ++n)
      for (std::size_t id = 0; id < count(n); ++id) {
        const auto& fs = faces_[static_cast<std::size_t>(n)][id];
        if (static_cast<int>(fs.size()) != (n == 0 ? 0 : n + 1)) throw InputError("simplex has the wrong number of faces");
        for (const NSimplex& f : fs) {
          if (f.total_dim() != n - 1 || f.dim > n - 1 || f.dim < 0) throw InputError("face has the wrong dimension");
          if (f.id < 0 || static_cast<std::size_t>(f.id) >= count(f.dim)) throw InputError("face refers to a missing simplex");
          if (f.surj.front() != 0 || f.surj.back() != f.dim) throw InputError("face degeneracy is not a surjection");
          for (std::size_t t = 1; t < f.surj.size(); ++t)
            if (f.surj[t] - f.surj[t - 1] > 1 || f.surj[t] < f.surj[t - 1]) throw InputError("face degeneracy is not a surjection");
        }
      }
    if (!labels_.empty() && labels_.size() != count(0)) throw InputError("vertex labels do not match the vertex count");
    if (!satisfies_simplicial_identities()) throw InputError("simplicial identities fail");
  }

  FaceTable faces_;
  bool complete_ = true;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Ordered simplicial complexes (simplicial subsets of a standard simplex)

// Every nonempty vertex subset of a maximal face is a simplex; faces delete one vertex.
inline SimplicialSet complex_from_faces(int vertex_count, const std::vector<std::vector<int>>& maximal_faces) {
  std::vector<std::map<std::vector<int>, int>> ids;
  std::vector<std::vector<std::vector<int>>> simplices;
  auto add_dim = [&](std::size_t d) {
    while (ids.size() <= d) {
      ids.emplace_back();
      simplices.emplace_back();
    }
  };
  std::vector<std::vector<int>> all;
  for (auto face : maximal_faces) {
    std::sort(face.begin(), face.end());
    face.erase(std::unique(face.begin(), face.end()), face.end());
    for (int v : face)
      if (v < 0 || v >= vertex_count) throw InputError("face vertex out of range");
    const std::size_t k = face.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
      std::vector<int> s;
      for (std::size_t b = 0; b < k; ++b)
        if (mask & (std::size_t{1} << b)) s.push_back(face[b]);
      all.push_back(std::move(s));
    }
  }
  // Isolated vertices still count.
  for (int v = 0; v < vertex_count; ++v) all.push_back({v});
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const auto& s : all) {
    const std::size_t d = s.size() - 1;
    add_dim(d);
    ids[d].emplace(s, static_cast<int>(simplices[d].size()));
    simplices[d].push_back(s);
  }
  SimplicialSet::FaceTable faces(simplices.size());
  for (std::size_t d = 0; d < simplices.size(); ++d)
    for (const auto& s : simplices[d]) {
      std::vector<NSimplex> fs;
      if (d > 0)
        for (std::size_t i = 0; i <= d; ++i) {
          std::vector<int> f = s;
          f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
          fs.push_back(nondegenerate(static_cast<int>(d) - 1, ids[d - 1].at(f)));
        }
      faces[d].push_back(std::move(fs));
    }
  std::vector<std::string> labels;
  for (int v = 0; v < vertex_count; ++v) labels.push_back(std::to_string(v));
  return SimplicialSet(std::move(faces), true, std::move(labels));
}

inline std::vector<int> range_vertices(int m) {
  std::vector<int> v(static_cast<std::size_t>(m + 1));
  for (int i = 0; i <= m; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

inline SimplicialSet standard_simplex(int m) { return complex_from_faces(m + 1, {range_vertices(m)}); }

inline SimplicialSet simplex_boundary(int m) {
  std::vector<std::vector<int>> faces;
  for (int j = 0; j <= m; ++j) {
    auto f = range_vertices(m);
    f.erase(f.begin() + j);
    if (!f.empty()) faces.push_back(f);
  }
  return complex_from_faces(m + 1, faces);
}

// Union of the codimension-one faces of Δ^m that contain Δ^S.
inline SimplicialSet generalized_horn(int m, const std::vector<int>& s) {
  if (s.empty()) throw InputError("generalized horn needs a nonempty vertex set");
  std::vector<char> in(static_cast<std::size_t>(m + 1), 0);
  for (int v : s) {
    if (v < 0 || v > m) throw InputError("horn vertex out of range");
    in[static_cast<std::size_t>(v)] = 1;
  }
  if (std::all_of(in.begin(), in.end(), [](char c) { return c != 0; }))
    throw InputError("generalized horn needs a proper vertex subset");
  std::vector<std::vector<int>> faces;
  for (int j = 0; j <= m; ++j) {
    if (in[static_cast<std::size_t>(j)]) continue;
    auto f = range_vertices(m);
    f.erase(f.begin() + j);
    faces.push_back(f);
  }
  return complex_from_faces(m + 1, faces);
}

// ---------------------------------------------------------------------------
// Finite categories

class FiniteCategory {
 public:
  struct Morphism {
    int source = 0;
    int target = 0;
    std::string label;
  };

  FiniteCategory() = default;
  // compose[g][f] = g o f, or -1 when target(f) != source(g).
  FiniteCategory(int objects, std::vector<Morphism> morphisms, std::vector<int> identities,
                 std::vector<std::vector<int>> compose, std::vector<std::string> object_labels = {})
      : objects_(objects),
        morphisms_(std::move(morphisms)),
        identities_(std::move(identities)),
        compose_(std::move(compose)),
        object_labels_(std::move(object_labels)) {
    validate();
  }

  int object_count() const { return objects_; }
  int morphism_count() const { return static_cast<int>(morphisms_.size()); }
  const Morphism& morphism(int f) const { return morphisms_[static_cast<std::size_t>(f)]; }
  int source(int f) const { return morphism(f).source; }
  int target(int f) const { return morphism(f).target; }
  int identity(int x) const { return identities_[static_cast<std::size_t>(x)]; }
  bool is_identity(int f) const { return identity(source(f)) == f; }
  int compose(int g, int f) const { return compose_[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)]; }
  const std::vector<std::string>& object_labels() const { return object_labels_; }
  std::string object_label(int x) const {
    return object_labels_.empty() ? std::to_string(x) : object_labels_[static_cast<std::size_t>(x)];
  }

  std::vector<int> hom(int x, int y) const {
    std::vector<int> r;
    for (int f = 0; f < morphism_count(); ++f)
      if (source(f) == x && target(f) == y) r.push_back(f);
    return r;
  }

 private:
  void validate() const {
    const int m = morphism_count();
    if (static_cast<int>(identities_.size()) != objects_) throw InputError("category needs one identity per object");
    if (static_cast<int>(compose_.size()) != m) throw InputError("composition table has the wrong size");
    for (const auto& row : compose_)
      if (static_cast<int>(row.size()) != m) throw InputError("composition table has the wrong size");
    for (const Morphism& f : morphisms_)
      if (f.source < 0 || f.source >= objects_ || f.target < 0 || f.target >= objects_) throw InputError("morphism endpoint out of range");
    for (int x = 0; x < objects_; ++x) {
      int e = identity(x);
      if (e < 0 || e >= m || source(e) != x || target(e) != x) throw InputError("identity has the wrong endpoints");
    }
    for (int g = 0; g < m; ++g)
      for (int f = 0; f < m; ++f) {
        int c = compose(g, f);
        if (target(f) != source(g)) {
          if (c != -1) throw InputError("composite defined for non-composable pair");
          continue;
        }
        if (c < 0 || c >= m || source(c) != source(f) || target(c) != target(g)) throw InputError("composite has the wrong endpoints");
      }
    for (int f = 0; f < m; ++f) {
      if (compose(identity(target(f)), f) != f || compose(f, identity(source(f))) != f) throw InputError("unit law fails");
    }
    for (int h = 0; h < m; ++h)
      for (int g = 0; g < m; ++g) {
        if (target(g) != source(h)) continue;
        for (int f = 0; f < m; ++f) {
          if (target(f) != source(g)) continue;
          if (compose(compose(h, g), f) != compose(h, compose(g, f))) throw InputError("associativity fails");
        }
      }
  }

  int objects_ = 0;
  std::vector<Morphism> morphisms_;
  std::vector<int> identities_;
  std::vector<std::vector<int>> compose_;
  std::vector<std::string> object_labels_;
};

// Poset on n elements given by leq(a, b); must be reflexive, antisymmetric and transitive.
inline FiniteCategory poset_category(int n, const std::function<bool(int, int)>& leq) {
  std::vector<FiniteCategory::Morphism> mors;
  std::map<std::pair<int, int>, int> id_of;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (leq(a, b)) {
        id_of[{a, b}] = static_cast<int>(mors.size());
        mors.push_back({a, b, std::to_string(a) + "<=" + std::to_string(b)});
      }
  const int m = static_cast<int>(mors.size());
  std::vector<std::vector<int>> comp(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), -1));
  for (int g = 0; g < m; ++g)
    for (int f = 0; f < m; ++f)
      if (mors[static_cast<std::size_t>(f)].target == mors[static_cast<std::size_t>(g)].source) {
        auto it = id_of.find({mors[static_cast<std::size_t>(f)].source, mors[static_cast<std::size_t>(g)].target});
        if (it == id_of.end()) throw InputError("order relation is not transitive");
        comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = it->second;
      }
  std::vector<int> ids;
  for (int a = 0; a < n; ++a) {
    auto it = id_of.find({a, a});
    if (it == id_of.end()) throw InputError("order relation is not reflexive");
    ids.push_back(it->second);
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b && leq(a, b) && leq(b, a)) throw InputError("order relation is not antisymmetric");
  std::vector<std::string> labels;
  for (int a = 0; a < n; ++a) labels.push_back(std::to_string(a));
  return FiniteCategory(n, std::move(mors), std::move(ids), std::move(comp), std::move(labels));
}

// The totally ordered set [m].
inline FiniteCategory ordinal_category(int m) {
  return poset_category(m + 1, [](int a, int b) { return a <= b; });
}

inline FiniteCategory discrete_category(int n) {
  return poset_category(n, [](int a, int b) { return a == b; });
}

// One-object category with the given composition table (e.g. a group); element 0 is the identity.
inline FiniteCategory monoid_category(int size, const std::function<int(int, int)>& mul) {
  std::vector<FiniteCategory::Morphism> mors;
  for (int g = 0; g < size; ++g) mors.push_back({0, 0, "g" + std::to_string(g)});
  std::vector<std::vector<int>> comp(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size)));
  for (int g = 0; g < size; ++g)
    for (int f = 0; f < size; ++f) comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = mul(g, f);
  return FiniteCategory(1, std::move(mors), {0}, std::move(comp), {"*"});
}

inline FiniteCategory cyclic_group_category(int n) {
  return monoid_category(n, [n](int a, int b) { return (a + b) % n; });
}

inline FiniteCategory opposite(const FiniteCategory& c) {
  std::vector<FiniteCategory::Morphism> mors;
  for (int f = 0; f < c.morphism_count(); ++f) mors.push_back({c.target(f), c.source(f), c.morphism(f).label + "^op"});
  const std::size_t m = static_cast<std::size_t>(c.morphism_count());
  std::vector<std::vector<int>> comp(m, std::vector<int>(m, -1));
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int f = 0; f < c.morphism_count(); ++f)
      if (c.source(f) == c.target(g)) comp[static_cast<std::size_t>(g)][static_cast<std::size_t>(f)] = c.compose(f, g);
  std::vector<int> ids;
  for (int x = 0; x < c.object_count(); ++x) ids.push_back(c.identity(x));
  return FiniteCategory(c.object_count(), std::move(mors), std::move(ids), std::move(comp), c.object_labels());
}

// Objects (a, b) numbered a * |ob D| + b; morphisms (f, g) numbered f * |mor D| + g.
inline FiniteCategory product_category(const FiniteCategory& c, const FiniteCategory& d) {
  const int om = d.object_count(), mm = d.morphism_count();
  std::vector<FiniteCategory::Morphism> mors;
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g = 0; g < mm; ++g)
      mors.push_back({c.source(f) * om + d.source(g), c.target(f) * om + d.target(g), "(" + c.morphism(f).label + "," + d.morphism(g).label + ")"});
  const std::size_t m = mors.size();
  std::vector<std::vector<int>> comp(m, std::vector<int>(m, -1));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      int f2 = static_cast<int>(a) / mm, g2 = static_cast<int>(a) % mm;
      int f1 = static_cast<int>(b) / mm, g1 = static_cast<int>(b) % mm;
      int cf = c.compose(f2, f1), cg = d.compose(g2, g1);
      if (cf >= 0 && cg >= 0) comp[a][b] = cf * mm + cg;
    }
  std::vector<int> ids;
  std::vector<std::string> labels;
  for (int x = 0; x < c.object_count(); ++x)
    for (int y = 0; y < om; ++y) {
      ids.push_back(c.identity(x) * mm + d.identity(y));
      labels.push_back("(" + c.object_label(x) + "," + d.object_label(y) + ")");
    }
  return FiniteCategory(c.object_count() * om, std::move(mors), std::move(ids), std::move(comp), std::move(labels));
}

struct Functor {
  std::vector<int> on_objects;
  std::vector<int> on_morphisms;
};

inline bool is_functor(const FiniteCategory& c, const FiniteCategory& d, const Functor& f) {
  if (static_cast<int>(f.on_objects.size()) != c.object_count() || static_cast<int>(f.on_morphisms.size()) != c.morphism_count()) return false;
  for (int m = 0; m < c.morphism_count(); ++m) {
    int fm = f.on_morphisms[static_cast<std::size_t>(m)];
    if (d.source(fm) != f.on_objects[static_cast<std::size_t>(c.source(m))] || d.target(fm) != f.on_objects[static_cast<std::size_t>(c.target(m))]) return false;
  }
  for (int x = 0; x < c.object_count(); ++x)
    if (f.on_morphisms[static_cast<std::size_t>(c.identity(x))] != d.identity(f.on_objects[static_cast<std::size_t>(x)])) return false;
  for (int g = 0; g < c.morphism_count(); ++g)
    for (int h = 0; h < c.morphism_count(); ++h) {
      int gh = c.compose(g, h);
      if (gh < 0) continue;
      if (f.on_morphisms[static_cast<std::size_t>(gh)] != d.compose(f.on_morphisms[static_cast<std::size_t>(g)], f.on_morphisms[static_cast<std::size_t>(h)])) return false;
    }
  return true;
}

// Every downstairs morphism out of F(e) has exactly one lift with source e.
inline bool is_discrete_opfibration(const FiniteCategory& total, const FiniteCategory& base, const Functor& f) {
  if (!is_functor(total, base, f)) return false;
  for (int e = 0; e < total.object_count(); ++e) {
    int fe = f.on_objects[static_cast<std::size_t>(e)];
    std::vector<int> lifts(static_cast<std::size_t>(base.morphism_count()), 0);
    for (int m = 0; m < total.morphism_count(); ++m)
      if (total.source(m) == e) ++lifts[static_cast<std::size_t>(f.on_morphisms[static_cast<std::size_t>(m)])];
    for (int phi = 0; phi < base.morphism_count(); ++phi)
      if (base.source(phi) == fe && lifts[static_cast<std::size_t>(phi)] != 1) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Twisted arrow category

// Objects are the morphisms of C; a morphism f => g is a pair (a, b) with
// a: source(g) -> source(f), b: target(f) -> target(g) and b o f o a = g.
struct TwistedArrow {
  FiniteCategory category;
  std::vector<std::pair<int, int>> pairs;  // morphism -> (a, b)
};

inline TwistedArrow twisted_arrow_cat(const FiniteCategory& c) {
  TwistedArrow tw;
  std::vector<FiniteCategory::Morphism> mors;
  std::map<std::tuple<int, int, int, int>, int> id_of;  // (f, g, a, b)
  for (int f = 0; f < c.morphism_count(); ++f)
    for (int g = 0; g < c.morphism_count(); ++g)
      for (int a : c.hom(c.source(g), c.source(f)))
        for (int b : c.hom(c.target(f), c.target(g))) {
          if (c.compose(b, c.compose(f, a)) != g) continue;
          id_of[{f, g, a, b}] = static_cast<int>(mors.size());
          mors.push_back({f, g, "(" + c.morphism(a).label + "," + c.morphism(b).label + ")"});
          tw.pairs.emplace_back(a, b);
        }
  const std::size_t m = mors.size();
  std::vector<std::vector<int>> comp(m, std::vector<int>(m, -1));
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = 0; q < m; ++q) {
      // (a2, b2) o (a1, b1) = (a1 o a2, b2 o b1), with q first.
      if (mors[q].target != mors[p].source) continue;
      auto [a1, b1] = tw.pairs[q];
      auto [a2, b2] = tw.pairs[p];
      comp[p][q] = id_of.at({mors[q].source, mors[p].target, c.compose(a1, a2), c.compose(b2, b1)});
    }
  std::vector<int> ids;
  std::vector<std::string> labels;
  for (int f = 0; f < c.morphism_count(); ++f) {
    ids.push_back(id_of.at({f, f, c.identity(c.source(f)), c.identity(c.target(f))}));
    labels.push_back(c.morphism(f).label);
  }
  tw.category = FiniteCategory(c.morphism_count(), std::move(mors), std::move(ids), std::move(comp), std::move(labels));
  return tw;
}

// tw(C) -> C^op x C: f |-> (source f, target f), (a, b) |-> (a^op, b).
inline Functor twisted_arrow_projection(const FiniteCategory& c, const TwistedArrow& tw) {
  Functor f;
  const int om = c.object_count(), mm = c.morphism_count();
  for (int x = 0; x < tw.category.object_count(); ++x) f.on_objects.push_back(c.source(x) * om + c.target(x));
  for (auto [a, b] : tw.pairs) f.on_morphisms.push_back(a * mm + b);
  return f;
}

// ---------------------------------------------------------------------------
// Nerves

// Nondegenerate n-simplices are chains of n composable non-identity morphisms.
struct Nerve {
  SimplicialSet set;
  std::vector<std::map<std::vector<int>, int>> chain_ids;  // per dimension; dimension 0 keyed by {object}
  std::vector<std::vector<std::vector<int>>> chains;        // per dimension, id -> chain

  // The element of X_n given by a composable chain that may contain identities.
  NSimplex simplex_of_chain(const FiniteCategory& c, int start, const std::vector<int>& morphisms) const {
    std::vector<int> kept;
    Mono surj{0};
    for (int f : morphisms) {
      if (!c.is_identity(f)) kept.push_back(f);
      surj.push_back(static_cast<int>(kept.size()));
    }
    const int k = static_cast<int>(kept.size());
    if (k >= static_cast<int>(chain_ids.size())) throw ResourceError("chain longer than the materialized nerve");
    int id = k == 0 ? chain_ids[0].at({start}) : chain_ids[static_cast<std::size_t>(k)].at(kept);
    return NSimplex{k, id, std::move(surj)};
  }
};

inline Nerve nerve(const FiniteCategory& c, int cap) {
  if (cap < 0) throw InputError("nerve cap must be nonnegative");
  Nerve nv;
  nv.chain_ids.resize(1);
  nv.chains.resize(1);
  for (int x = 0; x < c.object_count(); ++x) {
    nv.chain_ids[0][{x}] = x;
    nv.chains[0].push_back({x});
  }
  std::vector<int> nonid;
  for (int f = 0; f < c.morphism_count(); ++f)
    if (!c.is_identity(f)) nonid.push_back(f);
  bool complete = true;
  std::vector<std::vector<int>> frontier;
  for (int f : nonid) frontier.push_back({f});
  for (int n = 1; !frontier.empty(); ++n) {
    if (n > cap) {
      complete = false;
      break;
    }
    std::sort(frontier.begin(), frontier.end());
    nv.chain_ids.emplace_back();
    nv.chains.push_back(frontier);
    for (std::size_t i = 0; i < frontier.size(); ++i) nv.chain_ids.back()[frontier[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> next;
    for (const auto& ch : frontier)
      for (int f : nonid)
        if (c.source(f) == c.target(ch.back())) {
          auto ext = ch;
          ext.push_back(f);
          next.push_back(std::move(ext));
        }
    frontier = std::move(next);
  }
  // Faces, normalized through simplex_of_chain on a partially built nerve.
  SimplicialSet::FaceTable faces(nv.chains.size());
  faces[0].resize(nv.chains[0].size());
  for (std::size_t n = 1; n < nv.chains.size(); ++n)
    for (const auto& ch : nv.chains[n]) {
      std::vector<NSimplex> fs;
      const int len = static_cast<int>(n);
      for (int i = 0; i <= len; ++i) {
        std::vector<int> mors;
        int start;
        if (i == 0) {
          mors.assign(ch.begin() + 1, ch.end());
          start = c.target(ch.front());
        } else if (i == len) {
          mors.assign(ch.begin(), ch.end() - 1);
          start = c.source(ch.front());
        } else {
          for (int t = 0; t < len; ++t) {
            if (t == i - 1) {
              mors.push_back(c.compose(ch[static_cast<std::size_t>(t + 1)], ch[static_cast<std::size_t>(t)]));
              ++t;
            } else {
              mors.push_back(ch[static_cast<std::size_t>(t)]);
            }
          }
          start = c.source(ch.front());
        }
        fs.push_back(nv.simplex_of_chain(c, start, mors));
      }
      faces[n].push_back(std::move(fs));
    }
  std::vector<std::string> labels;
  for (int x = 0; x < c.object_count(); ++x) labels.push_back(c.object_label(x));
  nv.set = SimplicialSet(std::move(faces), complete, std::move(labels));
  return nv;
}

// ---------------------------------------------------------------------------
// Edgewise subdivision

// epsilon(theta): [2p+1] -> [2n+1] for theta: [p] -> [n], from [n] |-> [n]^op * [n].
// Position t <= p stands for (p - t) in the reversed copy, position p+1+b for b.
inline Mono edgewise_operator(const Mono& theta, int n) {
  const int p = static_cast<int>(theta.size()) - 1;
  Mono e(static_cast<std::size_t>(2 * p + 2));
  for (int t = 0; t <= p; ++t) e[static_cast<std::size_t>(t)] = n - theta[static_cast<std::size_t>(p - t)];
  for (int b = 0; b <= p; ++b) e[static_cast<std::size_t>(p + 1 + b)] = n + 1 + theta[static_cast<std::size_t>(b)];
  return e;
}

struct Subdivision {
  SimplicialSet set;
  std::vector<std::vector<NSimplex>> source;  // per dimension n, id -> element of X_{2n+1}
  std::vector<std::map<NSimplex, int>> index;

  // The comparison map to X^op x X: an n-simplex goes to its restrictions to
  // the first and last n+1 positions (the first read in X^op).
  std::pair<NSimplex, NSimplex> projection(const SimplicialSet& x, int n, int id) const {
    const NSimplex& s = source[static_cast<std::size_t>(n)][static_cast<std::size_t>(id)];
    Mono front, back;
    for (int t = 0; t <= n; ++t) {
      front.push_back(t);
      back.push_back(n + 1 + t);
    }
    return {x.apply(front, s), x.apply(back, s)};
  }
};

namespace detail {

// theta^* on the subdivision, computed on X_{2n+1}.
inline NSimplex edgewise_apply(const SimplicialSet& x, const Mono& theta, int n, const NSimplex& s) {
  return x.apply(edgewise_operator(theta, n), s);
}

inline bool edgewise_degenerate_at(const SimplicialSet& x, const NSimplex& s, int n, int i) {
  NSimplex d = edgewise_apply(x, coface(n, i), n, s);
  return edgewise_apply(x, codegeneracy(n - 1, i), n - 1, d) == s;
}

}  // namespace detail

// (Õ X)_n = X_{2n+1}. When X is complete the result is complete; otherwise it
// is built up to `cap`, which needs X through dimension 2*cap+1.
inline Subdivision edgewise_subdivision(const SimplicialSet& x, std::optional<int> cap = std::nullopt) {
  int top;
  if (cap) {
    top = *cap;
    if (!x.materialized_through(2 * top + 1))
      throw ResourceError("edgewise subdivision up to dimension " + std::to_string(top) + " needs X through dimension " +
                          std::to_string(2 * top + 1));
  } else {
    if (!x.is_complete()) throw ResourceError("edgewise subdivision of a truncated simplicial set needs an explicit cap");
    top = std::max(0, static_cast<int>(x.counts().size()) - 1);
  }
  Subdivision sd;
  for (int n = 0; n <= top; ++n) {
    std::vector<NSimplex> nondeg;
    for (const NSimplex& s : x.elements(2 * n + 1)) {
      bool degenerate = false;
      for (int i = 0; i < n && !degenerate; ++i) degenerate = detail::edgewise_degenerate_at(x, s, n, i);
      if (!degenerate) nondeg.push_back(s);
    }
    sd.index.emplace_back();
    for (std::size_t i = 0; i < nondeg.size(); ++i) sd.index.back()[nondeg[i]] = static_cast<int>(i);
    sd.source.push_back(std::move(nondeg));
  }
  // Normal form of an element of (Õ X)_q, given as an element of X_{2q+1}.
  std::function<NSimplex(const NSimplex&, int)> normalize = [&](const NSimplex& s, int q) -> NSimplex {
    for (int i = 0; i < q; ++i)
      if (detail::edgewise_degenerate_at(x, s, q, i)) {
        NSimplex inner = normalize(detail::edgewise_apply(x, coface(q, i), q, s), q - 1);
        return NSimplex{inner.dim, inner.id, compose_mono(inner.surj, codegeneracy(q - 1, i))};
      }
    auto it = sd.index[static_cast<std::size_t>(q)].find(s);
    if (it == sd.index[static_cast<std::size_t>(q)].end()) throw ResourceError("subdivision face outside the materialized range");
    return nondegenerate(q, it->second);
  };
  SimplicialSet::FaceTable faces(sd.source.size());
  for (int n = 0; n <= top; ++n)
    for (const NSimplex& s : sd.source[static_cast<std::size_t>(n)]) {
      std::vector<NSimplex> fs;
      if (n > 0)
        for (int i = 0; i <= n; ++i) fs.push_back(normalize(detail::edgewise_apply(x, coface(n, i), n, s), n - 1));
      faces[static_cast<std::size_t>(n)].push_back(std::move(fs));
    }
  std::vector<std::string> labels;
  for (const NSimplex& s : sd.source[0]) {
    auto v = x.vertices(s);
    auto lab = [&](int i) { return x.vertex_labels().empty() ? std::to_string(i) : x.vertex_labels()[static_cast<std::size_t>(i)]; };
    labels.push_back(lab(v[0]) + lab(v[1]));
  }
  while (faces.size() > 1 && faces.back().empty() && !cap) faces.pop_back();
  sd.set = SimplicialSet(std::move(faces), !cap.has_value() || x.is_complete(), std::move(labels));
  return sd;
}

// Does the canonical map N(tw C) -> Õ(N C) give a face-compatible bijection of
// nondegenerate simplices through dimension cap?
struct TwistedComparison {
  std::vector<std::size_t> twisted_counts;
  std::vector<std::size_t> subdivision_counts;
  bool bijective = false;
  bool face_compatible = false;
  bool isomorphic() const { return bijective && face_compatible; }
};

inline TwistedComparison compare_twisted_arrow_with_subdivision(const FiniteCategory& c, int cap) {
  TwistedComparison r;
  TwistedArrow tw = twisted_arrow_cat(c);
  Nerve ntw = nerve(tw.category, cap);
  Nerve nc = nerve(c, 2 * cap + 1);
  Subdivision sd = edgewise_subdivision(nc.set, cap);
  r.bijective = true;
  r.face_compatible = true;
  const int top = std::min(cap, ntw.set.materialized_dim());
  for (int n = 0; n <= cap; ++n) {
    r.twisted_counts.push_back(ntw.set.count(n));
    r.subdivision_counts.push_back(sd.set.count(n));
  }
  if (r.twisted_counts != r.subdivision_counts) r.bijective = false;
  // image[n][id] = id in Õ(N C)
  std::vector<std::vector<int>> image(static_cast<std::size_t>(top + 1));
  for (int n = 0; n <= top; ++n) {
    std::vector<char> hit(sd.set.count(n), 0);
    for (std::size_t id = 0; id < ntw.set.count(n); ++id) {
      const auto& ch = ntw.chains[static_cast<std::size_t>(n)][id];
      std::vector<int> seq;
      int f0, start;
      if (n == 0) {
        f0 = ch[0];
      } else {
        f0 = tw.category.source(ch[0]);
      }
      std::vector<int> as, bs;
      for (int t : (n == 0 ? std::vector<int>{} : ch)) {
        as.push_back(tw.pairs[static_cast<std::size_t>(t)].first);
        bs.push_back(tw.pairs[static_cast<std::size_t>(t)].second);
      }
      for (auto it = as.rbegin(); it != as.rend(); ++it) seq.push_back(*it);
      seq.push_back(f0);
      for (int b : bs) seq.push_back(b);
      start = c.source(seq.front());
      NSimplex xs = nc.simplex_of_chain(c, start, seq);
      auto it = sd.index[static_cast<std::size_t>(n)].find(xs);
      if (it == sd.index[static_cast<std::size_t>(n)].end()) {
        r.bijective = false;
        image[static_cast<std::size_t>(n)].push_back(-1);
        continue;
      }
      if (hit[static_cast<std::size_t>(it->second)]) r.bijective = false;
      hit[static_cast<std::size_t>(it->second)] = 1;
      image[static_cast<std::size_t>(n)].push_back(it->second);
    }
  }
  if (!r.bijective) return r;
  for (int n = 1; n <= top; ++n)
    for (std::size_t id = 0; id < ntw.set.count(n); ++id)
      for (int i = 0; i <= n; ++i) {
        NSimplex ft = ntw.set.face(n, static_cast<int>(id), i);
        NSimplex mapped{ft.dim, image[static_cast<std::size_t>(ft.dim)][static_cast<std::size_t>(ft.id)], ft.surj};
        if (mapped != sd.set.face(n, image[static_cast<std::size_t>(n)][id], i)) r.face_compatible = false;
      }
  return r;
}

}  // namespace burnside

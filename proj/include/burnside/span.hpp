#pragma once

// The effective Burnside category of finite G-sets at the level of
// isomorphism classes of spans, with marked classes of ingressive and
// egressive maps.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/gset.hpp"
#include "burnside/parallel.hpp"
#include "burnside/integer_matrix.hpp"

namespace burnside {

enum class Predicate { all, injective, surjective, iso };

inline bool satisfies(Predicate p, const GMap& f) {
  switch (p) {
    case Predicate::all: return true;
    case Predicate::injective: return f.is_injective();
    case Predicate::surjective: return f.is_surjective();
    case Predicate::iso: return f.is_iso();
  }
  return false;
}

inline std::string to_string(Predicate p) {
  switch (p) {
    case Predicate::all: return "all";
    case Predicate::injective: return "injective";
    case Predicate::surjective: return "surjective";
    case Predicate::iso: return "iso";
  }
  return "?";
}

inline Predicate parse_predicate(const std::string& s) {
  if (s == "all") return Predicate::all;
  if (s == "injective") return Predicate::injective;
  if (s == "surjective") return Predicate::surjective;
  if (s == "iso") return Predicate::iso;
  throw InputError("unknown predicate '" + s + "'");
}

// Left legs of spans are egressive, right legs ingressive.
struct TripleStructure {
  Predicate ingressive = Predicate::all;
  Predicate egressive = Predicate::all;
  bool is_maximal() const { return ingressive == Predicate::all && egressive == Predicate::all; }
};

// X <- U -> Y
struct Span {
  GSet apex;
  GMap left;
  GMap right;

  Span() = default;
  Span(GMap l, GMap r) : apex(l.source()), left(std::move(l)), right(std::move(r)) {
    if (!(left.source() == right.source())) throw InputError("span legs have different sources");
  }
  const GSet& source() const { return left.target(); }
  const GSet& target() const { return right.target(); }
};

inline void require_in_triple(const Span& s, const TripleStructure& t) {
  if (!satisfies(t.egressive, s.left)) throw InputError("left leg is not egressive (" + to_string(t.egressive) + ")");
  if (!satisfies(t.ingressive, s.right)) throw InputError("right leg is not ingressive (" + to_string(t.ingressive) + ")");
}

// A transitive span G/H -> X x Y, recorded by the class of H and the image
// (x, y) of the base coset, minimized over the normalizer of H.
struct OrbitKey {
  int cls = 0;
  int left = 0;
  int right = 0;
  bool operator==(const OrbitKey&) const = default;
  auto operator<=>(const OrbitKey&) const = default;
};

namespace detail {

inline OrbitKey minimize_key(const FiniteGroup& g, int cls, int x, int y, const GSet& X, const GSet& Y) {
  const auto& c = g.subgroups().classes[static_cast<std::size_t>(cls)];
  OrbitKey best{cls, x, y};
  for (int n : c.normalizer.elements) {
    OrbitKey k{cls, X.act(n, x), Y.act(n, y)};
    if (k < best) best = k;
  }
  return best;
}

// |N(H) ∩ Stab(x) ∩ Stab(y)| / |H|
inline long long key_automorphisms(const FiniteGroup& g, const OrbitKey& k, const GSet& X, const GSet& Y) {
  const auto& c = g.subgroups().classes[static_cast<std::size_t>(k.cls)];
  long long n = 0;
  for (int e : c.normalizer.elements)
    if (X.act(e, k.left) == k.left && Y.act(e, k.right) == k.right) ++n;
  return n / static_cast<long long>(c.representative.order());
}

}  // namespace detail

class SpanClass {
 public:
  SpanClass() = default;
  SpanClass(GSet source, GSet target, std::vector<OrbitKey> keys)
      : source_(std::move(source)), target_(std::move(target)), keys_(std::move(keys)) {
    std::sort(keys_.begin(), keys_.end());
  }

  const GSet& source() const { return source_; }
  const GSet& target() const { return target_; }
  const std::vector<OrbitKey>& keys() const { return keys_; }
  bool is_zero() const { return keys_.empty(); }
  bool is_transitive() const { return keys_.size() == 1; }

  int apex_size() const {
    const auto& g = source_.group();
    long long n = 0;
    for (const OrbitKey& k : keys_) n += static_cast<long long>(g.order() / g.subgroups().rep(k.cls).order());
    return static_cast<int>(n);
  }

  // Apex automorphisms commuting with both legs: the product over distinct
  // orbit keys of mult! * a^mult.
  BigInt automorphism_count() const {
    BigInt total = 1;
    for (std::size_t i = 0; i < keys_.size();) {
      std::size_t j = i;
      while (j < keys_.size() && keys_[j] == keys_[i]) ++j;
      const long long a = detail::key_automorphisms(source_.group(), keys_[i], source_, target_);
      for (std::size_t m = 1; m <= j - i; ++m) total *= BigInt(a) * BigInt(static_cast<long long>(m));
      i = j;
    }
    return total;
  }

  // A span realizing the class: the apex is ⊔ G/H over the keys, with point
  // c of each block the coset of the c-th minimal coset representative.
  Span representative() const {
    const GroupPtr& gp = source_.group_ptr();
    const auto& g = *gp;
    const int gens = g.generator_count();
    std::vector<Perm> act(static_cast<std::size_t>(gens));
    std::vector<int> l, r;
    for (const OrbitKey& k : keys_) {
      const SubgroupClass& c = g.subgroups().classes[static_cast<std::size_t>(k.cls)];
      const int offset = static_cast<int>(l.size());
      for (int s = 0; s < gens; ++s)
        for (int p : c.coset_action[static_cast<std::size_t>(s)]) act[static_cast<std::size_t>(s)].push_back(offset + p);
      for (int rep : c.coset_reps) {
        l.push_back(source_.act(rep, k.left));
        r.push_back(target_.act(rep, k.right));
      }
    }
    GSet apex(gp, static_cast<int>(l.size()), std::move(act));
    return Span(GMap(apex, source_, std::move(l)), GMap(apex, target_, std::move(r)));
  }

  bool operator==(const SpanClass& o) const { return source_ == o.source_ && target_ == o.target_ && keys_ == o.keys_; }
  bool operator<(const SpanClass& o) const { return keys_ < o.keys_; }

  std::string describe() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < keys_.size(); ++i)
      os << (i ? " " : "") << "(" << keys_[i].cls << ":" << keys_[i].left << "," << keys_[i].right << ")";
    os << "]";
    return os.str();
  }

 private:
  GSet source_;
  GSet target_;
  std::vector<OrbitKey> keys_;
};

inline SpanClass span_class(const Span& s) {
  const FiniteGroup& g = s.apex.group();
  OrbitDecomposition d = decompose(s.apex);
  std::vector<OrbitKey> keys;
  for (const Orbit& o : d.orbits)
    keys.push_back(detail::minimize_key(g, o.class_index, s.left(o.base), s.right(o.base), s.source(), s.target()));
  return SpanClass(s.source(), s.target(), std::move(keys));
}

inline SpanClass span_class(const Span& s, const TripleStructure& t) {
  require_in_triple(s, t);
  return span_class(s);
}

// Composite in diagrammatic order: first s1: X -> Y, then s2: Y -> Z.
inline Span compose_spans(const Span& s1, const Span& s2) {
  if (!(s1.target() == s2.source())) throw InputError("span composition: middle objects differ");
  Pullback pb = pullback(s1.right, s2.left);
  return Span(compose(s1.left, pb.left), compose(s2.right, pb.right));
}

inline SpanClass compose(const SpanClass& a, const SpanClass& b) {
  if (!(a.target() == b.source())) throw InputError("span composition: middle objects differ");
  if (a.is_zero() || b.is_zero()) return SpanClass(a.source(), b.target(), {});
  return span_class(compose_spans(a.representative(), b.representative()));
}

// Sum in the hom-monoid: coproduct of apexes.
inline SpanClass add(const SpanClass& a, const SpanClass& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target())) throw InputError("span sum: endpoints differ");
  std::vector<OrbitKey> keys = a.keys();
  keys.insert(keys.end(), b.keys().begin(), b.keys().end());
  return SpanClass(a.source(), a.target(), std::move(keys));
}

inline SpanClass zero_span(const GSet& x, const GSet& y) { return SpanClass(x, y, {}); }

inline SpanClass identity_span(const GSet& x) { return span_class(Span(GMap::identity(x), GMap::identity(x))); }

// f_* = (X <-id- X -f-> Y)
inline SpanClass embed_covariant(const GMap& f, const TripleStructure& t = {}) {
  if (!satisfies(t.ingressive, f)) throw InputError("covariant embedding needs an ingressive map");
  return span_class(Span(GMap::identity(f.source()), f));
}

// f^* = (Y <-f- X -id-> X)
inline SpanClass embed_contravariant(const GMap& f, const TripleStructure& t = {}) {
  if (!satisfies(t.egressive, f)) throw InputError("contravariant embedding needs an egressive map");
  return span_class(Span(f, GMap::identity(f.source())));
}

inline SpanClass dualize(const SpanClass& s, const TripleStructure& t = {}) {
  Span r = s.representative();
  Span d(r.right, r.left);
  return span_class(d, t);
}

// Brute-force isomorphism test for spans: search every equivariant bijection
// of apexes for one commuting with both legs.
inline std::optional<GMap> find_span_iso(const Span& a, const Span& b) {
  if (!(a.source() == b.source()) || !(a.target() == b.target()) || a.apex.size() != b.apex.size()) return std::nullopt;
  std::optional<GMap> found;
  for_each_equivariant_map(a.apex, b.apex, [&](const GMap& f) {
    if (found || !f.is_iso()) return;
    for (int u = 0; u < a.apex.size(); ++u)
      if (b.left(f(u)) != a.left(u) || b.right(f(u)) != a.right(u)) return;
    found = f;
  });
  return found;
}

// Apex automorphisms commuting with the legs, by enumeration.
inline long long count_span_automorphisms(const Span& s) {
  long long n = 0;
  for (const GMap& f : automorphisms(s.apex)) {
    bool ok = true;
    for (int u = 0; u < s.apex.size() && ok; ++u) ok = s.left(f(u)) == s.left(u) && s.right(f(u)) == s.right(u);
    if (ok) ++n;
  }
  return n;
}

// ---------------------------------------------------------------------------
// Enumeration of span classes

// Classes of transitive spans X <- G/H -> Y, ordered by key.
inline std::vector<OrbitKey> transitive_span_keys(const GSet& x, const GSet& y) {
  const FiniteGroup& g = x.group();
  const auto& table = g.subgroups();
  std::vector<OrbitKey> keys;
  for (int c = 0; c < static_cast<int>(table.size()); ++c) {
    const Subgroup& h = table.rep(c);
    auto fx = fixed_points(x, h).points;
    auto fy = fixed_points(y, h).points;
    for (int a : fx)
      for (int b : fy) keys.push_back(detail::minimize_key(g, c, a, b, x, y));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

// Every span class X -> Y whose apex has at most max_apex points and whose
// legs lie in the triple.
inline std::vector<SpanClass> span_classes(const GSet& x, const GSet& y, int max_apex, const TripleStructure& t = {}) {
  const FiniteGroup& g = x.group();
  std::vector<OrbitKey> basis = transitive_span_keys(x, y);
  std::vector<int> sizes;
  for (const OrbitKey& k : basis) sizes.push_back(static_cast<int>(g.order() / g.subgroups().rep(k.cls).order()));
  std::vector<SpanClass> out;
  std::vector<OrbitKey> cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int used) {
    if (i == basis.size()) {
      SpanClass s(x, y, cur);
      if (t.is_maximal()) {
        out.push_back(std::move(s));
      } else {
        Span r = s.representative();
        if (satisfies(t.egressive, r.left) && satisfies(t.ingressive, r.right)) out.push_back(std::move(s));
      }
      return;
    }
    rec(i + 1, used);
    std::size_t pushed = 0;
    while (used + sizes[i] <= max_apex) {
      cur.push_back(basis[i]);
      ++pushed;
      used += sizes[i];
      rec(i + 1, used);
    }
    cur.resize(cur.size() - pushed);
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// Structural checks

struct CheckReport {
  std::vector<std::pair<std::string, bool>> items;
  std::vector<std::string> violations;

  void record(const std::string& name, bool ok, const std::string& detail = {}) {
    items.emplace_back(name, ok);
    if (!ok) violations.push_back(detail.empty() ? name : name + ": " + detail);
  }
  bool passed() const {
    return std::all_of(items.begin(), items.end(), [](const auto& p) { return p.second; });
  }
  bool passed(const std::string& name) const {
    for (const auto& [n, ok] : items)
      if (n == name && !ok) return false;
    return true;
  }
};

inline std::string describe_map(const GMap& f) {
  std::ostringstream os;
  os << "{source " << f.source().size() << " pts, target " << f.target().size() << " pts, images [";
  for (std::size_t i = 0; i < f.images().size(); ++i) os << (i ? "," : "") << f.images()[i];
  os << "]}";
  return os.str();
}

struct TripleReport {
  bool contains_isos = true;
  bool closed_under_composition = true;
  bool ambigressive_pullbacks = true;
  bool pullback_stable = true;
  bool coproduct_compatible = true;
  bool coproduct_pullbacks = true;
  std::size_t instances = 0;
  std::vector<std::string> violations;

  bool adequate() const { return contains_isos && closed_under_composition && ambigressive_pullbacks && pullback_stable; }
  bool disjunctive() const { return adequate() && coproduct_compatible && coproduct_pullbacks; }
};

// Checks the adequacy and disjunctiveness conditions on every instance whose
// objects have at most `budget` points in total.
inline TripleReport check_triple_adequate(const GroupPtr& g, const TripleStructure& t, int budget) {
  TripleReport rep;
  auto note = [&](bool& flag, const std::string& what) {
    flag = false;
    if (rep.violations.size() < 16) rep.violations.push_back(what);
  };
  std::vector<GSet> objects = gsets_up_to(g, budget);
  auto both = [&](Predicate p, const GMap& f) { return satisfies(p, f); };
  // Isomorphisms.
  for (const GSet& x : objects)
    for (const GMap& a : automorphisms(x)) {
      ++rep.instances;
      if (!both(t.ingressive, a) || !both(t.egressive, a)) note(rep.contains_isos, "isomorphism outside the triple: " + describe_map(a));
    }
  // Composition.
  for (const GSet& x : objects)
    for (const GSet& y : objects)
      for (const GSet& z : objects) {
        if (x.size() + y.size() + z.size() > budget) continue;
        auto fs = equivariant_maps(x, y);
        auto gs = equivariant_maps(y, z);
        for (const GMap& f : fs)
          for (const GMap& h : gs) {
            ++rep.instances;
            GMap c = compose(h, f);
            for (Predicate p : {t.ingressive, t.egressive})
              if (satisfies(p, f) && satisfies(p, h) && !satisfies(p, c))
                note(rep.closed_under_composition, to_string(p) + " maps not closed under composition: " + describe_map(f) + " then " + describe_map(h));
          }
      }
  // Ambigressive pullbacks: i ingressive, p egressive with common target.
  for (const GSet& x : objects)
    for (const GSet& y : objects)
      for (const GSet& z : objects) {
        if (x.size() + y.size() + z.size() > budget) continue;
        auto is = equivariant_maps(y, x);
        auto ps = equivariant_maps(z, x);
        for (const GMap& i : is) {
          if (!satisfies(t.ingressive, i)) continue;
          for (const GMap& p : ps) {
            if (!satisfies(t.egressive, p)) continue;
            ++rep.instances;
            Pullback pb = pullback(i, p);  // apex -> Y (over p), apex -> Z (over i)
            // pb.left: Y' -> Y is the pullback of p; pb.right: Y' -> Z the pullback of i.
            if (!satisfies(t.egressive, pb.left)) note(rep.pullback_stable, "egressive pullback leaves the class: " + describe_map(p) + " along " + describe_map(i));
            if (!satisfies(t.ingressive, pb.right)) note(rep.pullback_stable, "ingressive pullback leaves the class: " + describe_map(i) + " along " + describe_map(p));
          }
        }
      }
  // Coproduct compatibility.
  for (const GSet& z : objects) {
    GMap e(GSet::empty(g), z, {});
    ++rep.instances;
    if (!satisfies(t.ingressive, e) || !satisfies(t.egressive, e)) note(rep.coproduct_compatible, "map from the empty G-set is not in both classes (target " + std::to_string(z.size()) + " pts)");
  }
  for (const GSet& x : objects)
    for (const GSet& y : objects)
      for (const GSet& z : objects) {
        if (x.size() + y.size() + z.size() > budget || x.is_empty() || y.is_empty()) continue;
        Coproduct c = coproduct(x, y);
        for (const GMap& f : equivariant_maps(c.sum, z)) {
          ++rep.instances;
          for (Predicate p : {t.ingressive, t.egressive}) {
            bool whole = satisfies(p, f);
            bool parts = satisfies(p, compose(f, c.in_left)) && satisfies(p, compose(f, c.in_right));
            if (whole != parts) note(rep.coproduct_compatible, to_string(p) + " class not determined by coproduct restrictions: " + describe_map(f));
          }
        }
      }
  // Coproducts of ambigressive pullbacks are pullbacks (I = J = {0, 1}).
  for (const GSet& y : objects)
    for (const GSet& x0 : objects)
      for (const GSet& x1 : objects)
        for (const GSet& w0 : objects)
          for (const GSet& w1 : objects) {
            if (y.size() + x0.size() + x1.size() + w0.size() + w1.size() > budget) continue;
            auto i0s = equivariant_maps(x0, y), i1s = equivariant_maps(x1, y);
            auto p0s = equivariant_maps(w0, y), p1s = equivariant_maps(w1, y);
            for (const GMap& i0 : i0s)
              for (const GMap& i1 : i1s)
                for (const GMap& p0 : p0s)
                  for (const GMap& p1 : p1s) {
                    if (!satisfies(t.ingressive, i0) || !satisfies(t.ingressive, i1) || !satisfies(t.egressive, p0) || !satisfies(t.egressive, p1)) continue;
                    ++rep.instances;
                    Coproduct cx = coproduct(x0, x1), cw = coproduct(w0, w1);
                    Pullback whole = pullback(copair(cx, i0, i1), copair(cw, p0, p1));
                    int parts = 0;
                    for (const GMap* i : std::vector<const GMap*>{&i0, &i1})
                      for (const GMap* p : std::vector<const GMap*>{&p0, &p1}) parts += pullback(*i, *p).apex.size();
                    if (parts != whole.apex.size()) note(rep.coproduct_pullbacks, "coproduct of pullbacks is not a pullback");
                  }
          }
  return rep;
}

// X ⊔ Y as a biproduct: with i = in_*, p = in^*, checks p_X i_X = id,
// p_Y i_X = 0, p_X i_Y = 0, p_Y i_Y = id and i_X p_X + i_Y p_Y = id, and
// that ∅ is a zero object.
inline CheckReport direct_sum_check(const GSet& x, const GSet& y, int max_apex = 0) {
  CheckReport r;
  Coproduct c = coproduct(x, y);
  SpanClass ix = embed_covariant(c.in_left), iy = embed_covariant(c.in_right);
  SpanClass px = embed_contravariant(c.in_left), py = embed_contravariant(c.in_right);
  r.record("p_X i_X = id", compose(ix, px) == identity_span(x));
  r.record("p_Y i_Y = id", compose(iy, py) == identity_span(y));
  r.record("p_Y i_X = 0", compose(ix, py).is_zero());
  r.record("p_X i_Y = 0", compose(iy, px).is_zero());
  r.record("i_X p_X + i_Y p_Y = id", add(compose(px, ix), compose(py, iy)) == identity_span(c.sum));
  GSet empty = GSet::empty(x.group_ptr());
  for (const GSet* z : std::vector<const GSet*>{&x, &y, &c.sum}) {
    r.record("Hom(0, Z) is a point", span_classes(empty, *z, z->size() + 2).size() == 1);
    r.record("Hom(Z, 0) is a point", span_classes(*z, empty, z->size() + 2).size() == 1);
  }
  if (max_apex > 0) {
    // Hom(A, X ⊕ Y) -> Hom(A, X) x Hom(A, Y) is a bijection, apex-size graded, for A = point.
    GSet a = GSet::point(x.group_ptr());
    auto sum_homs = span_classes(a, c.sum, max_apex);
    std::set<std::pair<std::vector<OrbitKey>, std::vector<OrbitKey>>> images;
    for (const SpanClass& w : sum_homs) {
      SpanClass wx = compose(w, px), wy = compose(w, py);
      images.emplace(wx.keys(), wy.keys());
    }
    std::size_t pairs = 0;
    auto hx = span_classes(a, x, max_apex), hy = span_classes(a, y, max_apex);
    for (const SpanClass& u : hx)
      for (const SpanClass& v : hy)
        if (u.apex_size() + v.apex_size() <= max_apex) ++pairs;
    r.record("Hom(A, X+Y) = Hom(A, X) x Hom(A, Y)", images.size() == sum_homs.size() && pairs == sum_homs.size());
  }
  return r;
}

// For a square with i: X' -> X ingressive, p: Y -> X egressive, j: Y' -> Y and
// p': Y' -> X' with i p' = p j: checks that it is a pullback and that
// p^* i_* = j_* p'^* as span classes.
inline bool base_change_check(const GMap& i, const GMap& p, const GMap& j, const GMap& pp, const TripleStructure& t = {}) {
  if (!(i.target() == p.target()) || !(j.target() == p.source()) || !(pp.target() == i.source()) || !(j.source() == pp.source()))
    throw InputError("base change: square does not fit together");
  if (!(compose(i, pp) == compose(p, j))) throw InputError("base change: square does not commute");
  Pullback pb = pullback(i, p);
  GMap cmp = mediate(pb, pp, j);
  if (!cmp.is_iso()) throw InputError("base change: square is not a pullback");
  SpanClass lhs = compose(embed_covariant(i, t), embed_contravariant(p, t));
  SpanClass rhs = compose(embed_contravariant(pp, t), embed_covariant(j, t));
  return lhs == rhs;
}


// Category laws of the effective Burnside category over all G-sets with at
// most max_points points. Associativity is swept over triples of transitive
// span classes; together with bi-additivity of composition this covers every
// effective span. The brute layer additionally checks all effective triples
// (apex ≤ max_points) among objects with at most brute_points points.
struct CategoryLawReport {
  long long associativity = 0;
  long long additivity = 0;
  long long units = 0;
  long long brute = 0;
  long long biproducts = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

inline CategoryLawReport check_category_laws(const GroupPtr& g, int max_points, int brute_points, int jobs = 1) {
  if (max_points < 0 || brute_points < 0) throw InputError("point budgets must be nonnegative");
  CategoryLawReport rep;
  const std::vector<GSet> objs = gsets_up_to(g, max_points);
  const std::size_t n = objs.size();
  auto at = [n](std::size_t i, std::size_t j) { return i * n + j; };

  std::vector<std::vector<SpanClass>> basis(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const OrbitKey& k : transitive_span_keys(objs[i], objs[j])) basis[at(i, j)].emplace_back(objs[i], objs[j], std::vector<OrbitKey>{k});

  // composite[(i, j, k)][a * |basis(j, k)| + b] = basis(i, j)[a] ; basis(j, k)[b]
  std::vector<std::vector<SpanClass>> composite(n * n * n);
  parallel_for(n * n * n, jobs, [&](std::size_t t) {
    const std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
    auto& out = composite[t];
    for (const SpanClass& a : basis[at(i, j)])
      for (const SpanClass& b : basis[at(j, k)]) out.push_back(compose(a, b));
  });
  auto comp = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t a, std::size_t b) -> const SpanClass& {
    return composite[(i * n + j) * n + k][a * basis[at(j, k)].size() + b];
  };

  struct Slot {
    long long count = 0;
    std::vector<std::string> failures;
  };
  auto note = [](Slot& s, const std::string& what) {
    if (s.failures.size() < 5) s.failures.push_back(what);
  };
  auto merge = [&](const std::vector<Slot>& slots, long long& counter) {
    for (const Slot& s : slots) {
      counter += s.count;
      for (const auto& f : s.failures)
        if (rep.failures.size() < 50) rep.failures.push_back(f);
    }
  };
  auto where = [&](std::size_t i, std::size_t j) { return std::to_string(objs[i].size()) + "->" + std::to_string(objs[j].size()) + " pts"; };

  // Associativity on transitive triples, parallel over object quadruples.
  std::vector<Slot> assoc(n * n * n * n);
  parallel_for(assoc.size(), jobs, [&](std::size_t t) {
    const std::size_t i = t / (n * n * n), j = (t / (n * n)) % n, k = (t / n) % n, l = t % n;
    Slot& s = assoc[t];
    const auto &bij = basis[at(i, j)], &bjk = basis[at(j, k)], &bkl = basis[at(k, l)];
    for (std::size_t a = 0; a < bij.size(); ++a)
      for (std::size_t b = 0; b < bjk.size(); ++b)
        for (std::size_t c = 0; c < bkl.size(); ++c) {
          ++s.count;
          if (!(compose(comp(i, j, k, a, b), bkl[c]) == compose(bij[a], comp(j, k, l, b, c))))
            note(s, "associativity fails for " + bij[a].describe() + " ; " + bjk[b].describe() + " ; " + bkl[c].describe() + " over " +
                        where(i, l));
        }
  });
  merge(assoc, rep.associativity);

  // Bi-additivity on pairs of transitive summands.
  std::vector<Slot> addv(n * n * n);
  parallel_for(addv.size(), jobs, [&](std::size_t t) {
    const std::size_t i = t / (n * n), j = (t / n) % n, k = t % n;
    Slot& s = addv[t];
    const auto &bij = basis[at(i, j)], &bjk = basis[at(j, k)];
    for (std::size_t a1 = 0; a1 < bij.size(); ++a1)
      for (std::size_t a2 = a1; a2 < bij.size(); ++a2)
        for (std::size_t b = 0; b < bjk.size(); ++b) {
          ++s.count;
          if (!(compose(add(bij[a1], bij[a2]), bjk[b]) == add(comp(i, j, k, a1, b), comp(i, j, k, a2, b))))
            note(s, "composition not additive on the left at " + bij[a1].describe() + " + " + bij[a2].describe());
        }
    for (std::size_t a = 0; a < bij.size(); ++a)
      for (std::size_t b1 = 0; b1 < bjk.size(); ++b1)
        for (std::size_t b2 = b1; b2 < bjk.size(); ++b2) {
          ++s.count;
          if (!(compose(bij[a], add(bjk[b1], bjk[b2])) == add(comp(i, j, k, a, b1), comp(i, j, k, a, b2))))
            note(s, "composition not additive on the right at " + bjk[b1].describe() + " + " + bjk[b2].describe());
        }
    // Zero spans absorb.
    ++s.count;
    if (!compose(zero_span(objs[i], objs[j]), identity_span(objs[j])).is_zero() || !compose(identity_span(objs[i]), zero_span(objs[i], objs[k])).is_zero())
      note(s, "zero span does not absorb over " + where(i, k));
  });
  merge(addv, rep.additivity);

  // Units on every effective span class.
  std::vector<Slot> unit(n * n);
  parallel_for(unit.size(), jobs, [&](std::size_t t) {
    const std::size_t i = t / n, j = t % n;
    Slot& s = unit[t];
    const SpanClass idx = identity_span(objs[i]), idy = identity_span(objs[j]);
    for (const SpanClass& w : span_classes(objs[i], objs[j], max_points)) {
      ++s.count;
      if (!(compose(idx, w) == w) || !(compose(w, idy) == w)) note(s, "identity is not a unit for " + w.describe() + " over " + where(i, j));
    }
  });
  merge(unit, rep.units);

  // Brute associativity on small objects.
  std::vector<std::size_t> small;
  for (std::size_t i = 0; i < n; ++i)
    if (objs[i].size() <= brute_points) small.push_back(i);
  const std::size_t m = small.size();
  std::vector<std::vector<SpanClass>> all(m * m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) all[a * m + b] = span_classes(objs[small[a]], objs[small[b]], max_points);
  std::vector<Slot> brute(m * m * m);
  parallel_for(brute.size(), jobs, [&](std::size_t t) {
    const std::size_t a = t / (m * m), b = (t / m) % m, c = t % m;
    Slot& s = brute[t];
    const auto& ab = all[a * m + b];
    const auto& bc = all[b * m + c];
    std::vector<SpanClass> left(ab.size() * bc.size());
    for (std::size_t x = 0; x < ab.size(); ++x)
      for (std::size_t y = 0; y < bc.size(); ++y) left[x * bc.size() + y] = compose(ab[x], bc[y]);
    for (std::size_t d = 0; d < m; ++d) {
      const auto& cd = all[c * m + d];
      for (std::size_t y = 0; y < bc.size(); ++y)
        for (std::size_t z = 0; z < cd.size(); ++z) {
          const SpanClass right = compose(bc[y], cd[z]);
          for (std::size_t x = 0; x < ab.size(); ++x) {
            ++s.count;
            if (!(compose(left[x * bc.size() + y], cd[z]) == compose(ab[x], right)))
              note(s, "associativity fails for " + ab[x].describe() + " ; " + bc[y].describe() + " ; " + cd[z].describe());
          }
        }
    }
  });
  merge(brute, rep.brute);

  // Zero object and biproducts for every pair of objects.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      CheckReport d = direct_sum_check(objs[i], objs[j], max_points);
      ++rep.biproducts;
      for (const auto& v : d.violations)
        if (rep.failures.size() < 50) rep.failures.push_back(v + " for " + where(i, j));
    }
  return rep;
}

}  // namespace burnside

#pragma once

// Finite G-sets and equivariant maps: the category of finite G-sets, with
// pullbacks, coproducts, orbit decompositions, fixed points and automorphism
// groups.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/group.hpp"

namespace burnside {

inline bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a.get() == b.get() || (a->degree() == b->degree() && a->generators() == b->generators());
}

// A finite G-set, stored by the action of each generator of G. The action of
// every group element is replayed from the generator words at construction,
// which also validates that the generator actions respect the relations of G.
class GSet {
 public:
  GSet() = default;

  GSet(GroupPtr group, int points, std::vector<Perm> generator_action)
      : group_(std::move(group)), points_(points) {
    if (!group_) throw InputError("G-set without a group");
    if (points < 0) throw InputError("negative point count");
    if (static_cast<int>(generator_action.size()) != group_->generator_count())
      throw InputError("G-set must give one permutation per group generator");
    for (const Perm& p : generator_action)
      if (!is_permutation_of(p, points)) throw InputError("generator action is not a permutation of the points");
    auto data = std::make_shared<Data>();
    data->gen_action = std::move(generator_action);
    build_table(*data);
    data_ = std::move(data);
  }

  static GSet empty(GroupPtr g) { return trivial(std::move(g), 0); }
  static GSet point(GroupPtr g) { return trivial(std::move(g), 1); }
  // n points with trivial action.
  static GSet trivial(GroupPtr g, int n) {
    std::vector<Perm> act(static_cast<std::size_t>(g->generator_count()), identity_perm(n));
    return GSet(std::move(g), n, std::move(act));
  }

  // Left cosets gH ordered by their minimal element; the coset H itself is point 0.
  static GSet coset_space(GroupPtr g, const Subgroup& h) {
    require_subgroup(*g, h);
    std::vector<int> coset_of(g->order(), -1);
    std::vector<int> reps;
    for (int x = 0; x < static_cast<int>(g->order()); ++x) {
      if (coset_of[static_cast<std::size_t>(x)] >= 0) continue;
      for (int e : h.elements) coset_of[static_cast<std::size_t>(g->mul(x, e))] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
    const int n = static_cast<int>(reps.size());
    std::vector<Perm> act;
    for (int s = 0; s < g->generator_count(); ++s) {
      Perm p(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c)
        p[static_cast<std::size_t>(c)] = coset_of[static_cast<std::size_t>(g->mul(g->generator_element(s), reps[static_cast<std::size_t>(c)]))];
      act.push_back(std::move(p));
    }
    return GSet(std::move(g), n, std::move(act));
  }

  const FiniteGroup& group() const { return *group_; }
  const GroupPtr& group_ptr() const { return group_; }
  int size() const { return points_; }
  bool is_empty() const { return points_ == 0; }
  const std::vector<Perm>& generator_action() const { return data_->gen_action; }
  int act(int g, int x) const { return data_->table[static_cast<std::size_t>(g) * static_cast<std::size_t>(points_) + static_cast<std::size_t>(x)]; }

  bool operator==(const GSet& o) const {
    if (points_ != o.points_ || !same_group(group_, o.group_)) return false;
    return data_ == o.data_ || data_->gen_action == o.data_->gen_action;
  }

  // Orbits as sorted point lists, ordered by minimal point.
  std::vector<std::vector<int>> orbits() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<std::size_t>(points_), 0);
    for (int x = 0; x < points_; ++x) {
      if (seen[static_cast<std::size_t>(x)]) continue;
      std::vector<int> orb;
      for (int g = 0; g < static_cast<int>(group_->order()); ++g) {
        int y = act(g, x);
        if (!seen[static_cast<std::size_t>(y)]) {
          seen[static_cast<std::size_t>(y)] = 1;
          orb.push_back(y);
        }
      }
      std::sort(orb.begin(), orb.end());
      out.push_back(std::move(orb));
    }
    return out;
  }

  Subgroup stabilizer(int x) const {
    Subgroup s;
    for (int g = 0; g < static_cast<int>(group_->order()); ++g)
      if (act(g, x) == x) s.elements.push_back(g);
    return s;
  }

  bool is_transitive() const { return points_ > 0 && orbits().size() == 1; }

 private:
  // Immutable and shared between copies.
  struct Data {
    std::vector<Perm> gen_action;
    std::vector<int> table;  // table[g * points + x] = g.x
  };

  void build_table(Data& d) const {
    const std::size_t n = group_->order();
    const std::size_t p = static_cast<std::size_t>(points_);
    auto& table = d.table;
    const auto& gens = d.gen_action;
    auto act = [&](int g, int x) { return table[static_cast<std::size_t>(g) * p + static_cast<std::size_t>(x)]; };
    table.assign(n * p, -1);
    for (std::size_t x = 0; x < p; ++x) table[x] = static_cast<int>(x);
    for (int g : group_->bfs_order()) {
      auto [s, pred] = group_->word_step(g);
      if (s < 0) continue;
      for (std::size_t x = 0; x < p; ++x)
        table[static_cast<std::size_t>(g) * p + x] = gens[static_cast<std::size_t>(s)][static_cast<std::size_t>(act(pred, static_cast<int>(x)))];
    }
    // Homomorphism check: act(s*g) = act(s) o act(g) for every generator s.
    for (int s = 0; s < group_->generator_count(); ++s) {
      int gs = group_->generator_element(s);
      for (int g = 0; g < static_cast<int>(n); ++g) {
        int sg = group_->mul(gs, g);
        for (std::size_t x = 0; x < p; ++x)
          if (act(sg, static_cast<int>(x)) != gens[static_cast<std::size_t>(s)][static_cast<std::size_t>(act(g, static_cast<int>(x)))])
            throw InputError("generator actions do not define a group action (relations violated)");
      }
    }
  }

  GroupPtr group_;
  int points_ = 0;
  std::shared_ptr<const Data> data_ = std::make_shared<const Data>();
};

// An equivariant map, validated on construction.
class GMap {
 public:
  GMap() = default;
  GMap(GSet source, GSet target, std::vector<int> images)
      : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (!same_group(source_.group_ptr(), target_.group_ptr())) throw InputError("map between G-sets over different groups");
    if (static_cast<int>(images_.size()) != source_.size()) throw InputError("map image table has the wrong length");
    for (int y : images_)
      if (y < 0 || y >= target_.size()) throw InputError("map image out of range");
    const int gens = source_.group().generator_count();
    for (int s = 0; s < gens; ++s) {
      int g = source_.group().generator_element(s);
      for (int x = 0; x < source_.size(); ++x)
        if (images_[static_cast<std::size_t>(source_.act(g, x))] != target_.act(g, images_[static_cast<std::size_t>(x)]))
          throw InputError("map is not equivariant");
    }
  }

  static GMap identity(const GSet& x) {
    std::vector<int> im(static_cast<std::size_t>(x.size()));
    for (int i = 0; i < x.size(); ++i) im[static_cast<std::size_t>(i)] = i;
    return GMap(x, x, std::move(im));
  }

  const GSet& source() const { return source_; }
  const GSet& target() const { return target_; }
  const std::vector<int>& images() const { return images_; }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }

  bool is_injective() const {
    std::vector<char> hit(static_cast<std::size_t>(target_.size()), 0);
    for (int y : images_) {
      if (hit[static_cast<std::size_t>(y)]) return false;
      hit[static_cast<std::size_t>(y)] = 1;
    }
    return true;
  }
  bool is_surjective() const {
    std::vector<char> hit(static_cast<std::size_t>(target_.size()), 0);
    for (int y : images_) hit[static_cast<std::size_t>(y)] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  }
  bool is_iso() const { return source_.size() == target_.size() && is_injective(); }

  GMap inverse() const {
    if (!is_iso()) throw InputError("inverse of a non-bijective map");
    std::vector<int> im(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) im[static_cast<std::size_t>(images_[x])] = static_cast<int>(x);
    return GMap(target_, source_, std::move(im));
  }

  bool operator==(const GMap& o) const { return source_ == o.source_ && target_ == o.target_ && images_ == o.images_; }

 private:
  GSet source_;
  GSet target_;
  std::vector<int> images_;
};

// g o f
inline GMap compose(const GMap& g, const GMap& f) {
  if (!(f.target() == g.source())) throw InputError("compose: maps are not composable");
  std::vector<int> im(static_cast<std::size_t>(f.source().size()));
  for (int x = 0; x < f.source().size(); ++x) im[static_cast<std::size_t>(x)] = g(f(x));
  return GMap(f.source(), g.target(), std::move(im));
}

// ---------------------------------------------------------------------------
// Orbit decomposition

struct Orbit {
  int class_index = -1;     // conjugacy class of the stabilizers
  std::vector<int> points;  // sorted
  int base = -1;            // minimal point whose stabilizer is exactly the class representative
};

struct OrbitDecomposition {
  std::vector<Orbit> orbits;  // sorted by (class_index, minimal point)
  std::vector<int> orbit_of;  // point -> orbit position

  std::vector<int> class_multiset() const {
    std::vector<int> m;
    for (const Orbit& o : orbits) m.push_back(o.class_index);
    return m;
  }
  // Number of orbits of each class.
  std::vector<long long> class_counts(std::size_t classes) const {
    std::vector<long long> c(classes, 0);
    for (const Orbit& o : orbits) ++c[static_cast<std::size_t>(o.class_index)];
    return c;
  }
};

inline OrbitDecomposition decompose(const GSet& x) {
  const auto& table = x.group().subgroups();
  OrbitDecomposition d;
  for (auto& pts : x.orbits()) {
    Orbit o;
    o.class_index = table.class_of(x.stabilizer(pts.front()));
    const Subgroup& rep = table.rep(o.class_index);
    for (int p : pts)
      if (x.stabilizer(p) == rep) {
        o.base = p;
        break;
      }
    o.points = std::move(pts);
    d.orbits.push_back(std::move(o));
  }
  std::stable_sort(d.orbits.begin(), d.orbits.end(), [](const Orbit& a, const Orbit& b) {
    if (a.class_index != b.class_index) return a.class_index < b.class_index;
    return a.points.front() < b.points.front();
  });
  d.orbit_of.assign(static_cast<std::size_t>(x.size()), -1);
  for (std::size_t i = 0; i < d.orbits.size(); ++i)
    for (int p : d.orbits[i].points) d.orbit_of[static_cast<std::size_t>(p)] = static_cast<int>(i);
  return d;
}

// ---------------------------------------------------------------------------
// Limits and colimits

struct Pullback {
  GSet apex;
  GMap left;   // apex -> f.source()
  GMap right;  // apex -> g.source()
  std::vector<std::pair<int, int>> pairs;  // apex point -> (x, y)
};

// X x_Z Y for f: X -> Z and g: Y -> Z; points are the pairs (x, y) with f(x) = g(y) in lexicographic order.
inline Pullback pullback(const GMap& f, const GMap& g) {
  if (!(f.target() == g.target())) throw InputError("pullback: maps do not share a target");
  const GSet& X = f.source();
  const GSet& Y = g.source();
  Pullback pb;
  std::map<std::pair<int, int>, int> index;
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < Y.size(); ++y)
      if (f(x) == g(y)) {
        index.emplace(std::make_pair(x, y), static_cast<int>(pb.pairs.size()));
        pb.pairs.emplace_back(x, y);
      }
  const int n = static_cast<int>(pb.pairs.size());
  std::vector<Perm> act;
  for (int s = 0; s < X.group().generator_count(); ++s) {
    int gs = X.group().generator_element(s);
    Perm p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      auto [x, y] = pb.pairs[static_cast<std::size_t>(i)];
      p[static_cast<std::size_t>(i)] = index.at({X.act(gs, x), Y.act(gs, y)});
    }
    act.push_back(std::move(p));
  }
  pb.apex = GSet(X.group_ptr(), n, std::move(act));
  std::vector<int> l, r;
  for (auto [x, y] : pb.pairs) {
    l.push_back(x);
    r.push_back(y);
  }
  pb.left = GMap(pb.apex, X, std::move(l));
  pb.right = GMap(pb.apex, Y, std::move(r));
  return pb;
}

// The unique map W -> X x_Z Y through which a commuting cone (a, b) factors.
inline GMap mediate(const Pullback& pb, const GMap& a, const GMap& b) {
  if (!(a.source() == b.source())) throw InputError("mediate: cone legs have different sources");
  std::map<std::pair<int, int>, int> index;
  for (std::size_t i = 0; i < pb.pairs.size(); ++i) index.emplace(pb.pairs[i], static_cast<int>(i));
  std::vector<int> im;
  for (int w = 0; w < a.source().size(); ++w) {
    auto it = index.find({a(w), b(w)});
    if (it == index.end()) throw InputError("mediate: cone does not commute");
    im.push_back(it->second);
  }
  return GMap(a.source(), pb.apex, std::move(im));
}

inline GSet product(const GSet& x, const GSet& y) {
  GSet pt = GSet::point(x.group_ptr());
  return pullback(GMap(x, pt, std::vector<int>(static_cast<std::size_t>(x.size()), 0)),
                  GMap(y, pt, std::vector<int>(static_cast<std::size_t>(y.size()), 0)))
      .apex;
}

inline GMap terminal_map(const GSet& x) {
  return GMap(x, GSet::point(x.group_ptr()), std::vector<int>(static_cast<std::size_t>(x.size()), 0));
}

struct Coproduct {
  GSet sum;
  GMap in_left;
  GMap in_right;
};

// X ⊔ Y with the points of X first.
inline Coproduct coproduct(const GSet& x, const GSet& y) {
  if (!same_group(x.group_ptr(), y.group_ptr())) throw InputError("coproduct of G-sets over different groups");
  std::vector<Perm> act;
  for (int s = 0; s < x.group().generator_count(); ++s) {
    Perm p;
    for (int v : x.generator_action()[static_cast<std::size_t>(s)]) p.push_back(v);
    for (int v : y.generator_action()[static_cast<std::size_t>(s)]) p.push_back(v + x.size());
    act.push_back(std::move(p));
  }
  Coproduct c;
  c.sum = GSet(x.group_ptr(), x.size() + y.size(), std::move(act));
  std::vector<int> l, r;
  for (int i = 0; i < x.size(); ++i) l.push_back(i);
  for (int i = 0; i < y.size(); ++i) r.push_back(x.size() + i);
  c.in_left = GMap(x, c.sum, std::move(l));
  c.in_right = GMap(y, c.sum, std::move(r));
  return c;
}

// [f, g]: X ⊔ Y -> Z
inline GMap copair(const Coproduct& c, const GMap& f, const GMap& g) {
  if (!(f.target() == g.target())) throw InputError("copair: maps have different targets");
  std::vector<int> im = f.images();
  im.insert(im.end(), g.images().begin(), g.images().end());
  return GMap(c.sum, f.target(), std::move(im));
}

inline GMap map_sum(const Coproduct& src, const Coproduct& dst, const GMap& f, const GMap& g) {
  return copair(src, compose(dst.in_left, f), compose(dst.in_right, g));
}

// n copies of X.
inline GSet multiple(const GSet& x, int n) {
  GSet r = GSet::empty(x.group_ptr());
  for (int i = 0; i < n; ++i) r = coproduct(r, x).sum;
  return r;
}

// Sub-G-set on an invariant set of points, with its inclusion.
inline GMap restrict_to(const GSet& x, const std::vector<int>& points) {
  std::vector<int> pos(static_cast<std::size_t>(x.size()), -1);
  for (std::size_t i = 0; i < points.size(); ++i) pos[static_cast<std::size_t>(points[i])] = static_cast<int>(i);
  std::vector<Perm> act;
  for (const Perm& p : x.generator_action()) {
    Perm q;
    for (int v : points) {
      int w = pos[static_cast<std::size_t>(p[static_cast<std::size_t>(v)])];
      if (w < 0) throw InputError("point set is not invariant");
      q.push_back(w);
    }
    act.push_back(std::move(q));
  }
  GSet sub(x.group_ptr(), static_cast<int>(points.size()), std::move(act));
  return GMap(sub, x, points);
}

// ---------------------------------------------------------------------------
// Maps, isomorphisms, canonical forms

// Calls fn on every equivariant map X -> Y. A map is fixed by the image of
// one point per orbit, which must be fixed by that point's stabilizer.
inline void for_each_equivariant_map(const GSet& x, const GSet& y, const std::function<void(const GMap&)>& fn) {
  if (!same_group(x.group_ptr(), y.group_ptr())) throw InputError("maps between G-sets over different groups");
  auto orbs = x.orbits();
  std::vector<std::vector<int>> choices;
  for (const auto& o : orbs) {
    Subgroup st = x.stabilizer(o.front());
    std::vector<int> c;
    for (int p = 0; p < y.size(); ++p)
      if (is_contained(st, y.stabilizer(p))) c.push_back(p);
    if (c.empty()) return;
    choices.push_back(std::move(c));
  }
  const int n = static_cast<int>(x.group().order());
  std::vector<std::size_t> pick(orbs.size(), 0);
  while (true) {
    std::vector<int> im(static_cast<std::size_t>(x.size()), -1);
    for (std::size_t i = 0; i < orbs.size(); ++i) {
      int x0 = orbs[i].front();
      int y0 = choices[i][pick[i]];
      for (int g = 0; g < n; ++g) im[static_cast<std::size_t>(x.act(g, x0))] = y.act(g, y0);
    }
    fn(GMap(x, y, std::move(im)));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
}

inline std::vector<GMap> equivariant_maps(const GSet& x, const GSet& y) {
  std::vector<GMap> out;
  for_each_equivariant_map(x, y, [&](const GMap& f) { out.push_back(f); });
  return out;
}

// An explicit isomorphism, or nothing when the orbit multisets differ.
inline std::optional<GMap> find_iso(const GSet& x, const GSet& y) {
  if (!same_group(x.group_ptr(), y.group_ptr()) || x.size() != y.size()) return std::nullopt;
  OrbitDecomposition dx = decompose(x), dy = decompose(y);
  if (dx.class_multiset() != dy.class_multiset()) return std::nullopt;
  std::vector<int> im(static_cast<std::size_t>(x.size()), -1);
  const int n = static_cast<int>(x.group().order());
  for (std::size_t i = 0; i < dx.orbits.size(); ++i)
    for (int g = 0; g < n; ++g)
      im[static_cast<std::size_t>(x.act(g, dx.orbits[i].base))] = y.act(g, dy.orbits[i].base);
  return GMap(x, y, std::move(im));
}

// ⊔ G/H_c over the class multiset of X, in class order.
inline GSet canonical_form(const GSet& x) {
  const auto& table = x.group().subgroups();
  GSet r = GSet::empty(x.group_ptr());
  for (int c : decompose(x).class_multiset()) r = coproduct(r, GSet::coset_space(x.group_ptr(), table.rep(c))).sum;
  return r;
}

// G-set with the given number of orbits of each class.
inline GSet from_class_counts(const GroupPtr& g, const std::vector<long long>& counts) {
  const auto& table = g->subgroups();
  GSet r = GSet::empty(g);
  for (std::size_t c = 0; c < counts.size(); ++c)
    for (long long i = 0; i < counts[c]; ++i) r = coproduct(r, GSet::coset_space(g, table.rep(static_cast<int>(c)))).sum;
  return r;
}

// Canonical representatives of all iso classes of G-sets with at most max_points points,
// ordered by size then class multiset.
inline std::vector<GSet> gsets_up_to(const GroupPtr& g, int max_points) {
  const auto& table = g->subgroups();
  std::vector<int> orbit_size;
  for (std::size_t c = 0; c < table.size(); ++c)
    orbit_size.push_back(static_cast<int>(g->order() / table.rep(static_cast<int>(c)).order()));
  std::vector<std::pair<int, std::vector<long long>>> found;
  std::vector<long long> counts(table.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t c, int used) {
    if (c == table.size()) {
      found.emplace_back(used, counts);
      return;
    }
    for (long long k = 0; used + k * orbit_size[c] <= max_points; ++k) {
      counts[c] = k;
      rec(c + 1, used + static_cast<int>(k) * orbit_size[c]);
    }
    counts[c] = 0;
  };
  rec(0, 0);
  std::sort(found.begin(), found.end());
  std::vector<GSet> out;
  for (auto& [n, cnt] : found) out.push_back(from_class_counts(g, cnt));
  return out;
}

// ---------------------------------------------------------------------------
// Fixed points

struct FixedPoints {
  std::vector<int> points;
  std::size_t count() const { return points.size(); }
};

inline FixedPoints fixed_points(const GSet& x, const Subgroup& h) {
  require_subgroup(x.group(), h);
  FixedPoints fp;
  for (int p = 0; p < x.size(); ++p) {
    bool fixed = true;
    for (int e : h.elements)
      if (x.act(e, p) != p) {
        fixed = false;
        break;
      }
    if (fixed) fp.points.push_back(p);
  }
  return fp;
}

// X^K as a set acted on by D/K, where q: D -> D/K and K = ker q. For the
// Weyl quotient this is the N_G(H)/H-set X^H; for a normal N it is the
// G/N-set X^N.
inline GSet fixed_point_set(const GSet& x, const QuotientMap& q) {
  FixedPoints fp = fixed_points(x, q.kernel());
  std::vector<int> pos(static_cast<std::size_t>(x.size()), -1);
  for (std::size_t i = 0; i < fp.points.size(); ++i) pos[static_cast<std::size_t>(fp.points[i])] = static_cast<int>(i);
  std::vector<Perm> act;
  for (int s = 0; s < q.group->generator_count(); ++s) {
    int rep = q.section[static_cast<std::size_t>(q.group->generator_element(s))];
    Perm p;
    for (int v : fp.points) p.push_back(pos[static_cast<std::size_t>(x.act(rep, v))]);
    act.push_back(std::move(p));
  }
  return GSet(q.group, static_cast<int>(fp.points.size()), std::move(act));
}

// Restriction of a Q-set along a surjection G -> Q (every element of G in the domain).
inline GSet inflate(const GSet& y, const GroupPtr& g, const QuotientMap& q) {
  if (q.domain.size() != g->order()) throw InputError("inflation needs a quotient map defined on all of G");
  std::vector<Perm> act;
  for (int s = 0; s < g->generator_count(); ++s) {
    int qs = q.project(g->generator_element(s));
    Perm p;
    for (int v = 0; v < y.size(); ++v) p.push_back(y.act(qs, v));
    act.push_back(std::move(p));
  }
  return GSet(g, y.size(), std::move(act));
}

// ---------------------------------------------------------------------------
// Automorphisms

// All equivariant self-bijections of X.
inline std::vector<GMap> automorphisms(const GSet& x) {
  OrbitDecomposition d = decompose(x);
  const std::size_t k = d.orbits.size();
  const int n = static_cast<int>(x.group().order());
  // Candidate images of each orbit base: points with exactly the same stabilizer.
  std::vector<std::vector<int>> cand(k);
  std::vector<Subgroup> stab(static_cast<std::size_t>(x.size()));
  for (int p = 0; p < x.size(); ++p) stab[static_cast<std::size_t>(p)] = x.stabilizer(p);
  for (std::size_t i = 0; i < k; ++i)
    for (int p = 0; p < x.size(); ++p)
      if (stab[static_cast<std::size_t>(p)] == stab[static_cast<std::size_t>(d.orbits[i].base)]) cand[i].push_back(p);
  std::vector<GMap> out;
  std::vector<int> im(static_cast<std::size_t>(x.size()), -1);
  std::vector<char> used_orbit(k, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == k) {
      out.emplace_back(x, x, im);
      return;
    }
    for (int p : cand[i]) {
      int o = d.orbit_of[static_cast<std::size_t>(p)];
      if (used_orbit[static_cast<std::size_t>(o)]) continue;
      used_orbit[static_cast<std::size_t>(o)] = 1;
      for (int g = 0; g < n; ++g) im[static_cast<std::size_t>(x.act(g, d.orbits[i].base))] = x.act(g, p);
      rec(i + 1);
      used_orbit[static_cast<std::size_t>(o)] = 0;
    }
  };
  rec(0);
  return out;
}

// Aut(X) as a permutation group on the points of X.
inline GroupPtr aut_group(const GSet& x) {
  std::vector<GMap> autos = automorphisms(x);
  std::vector<Perm> gens;
  for (const GMap& a : autos) {
    if (a.images() == identity_perm(x.size())) continue;
    gens.push_back(a.images());
  }
  // Keep a generating subset.
  std::vector<Perm> chosen;
  std::size_t reached = 1;
  for (const Perm& p : gens) {
    std::vector<Perm> trial = chosen;
    trial.push_back(p);
    FiniteGroup probe(x.size(), trial, {}, 0);
    if (probe.order() > reached) {
      chosen = std::move(trial);
      reached = probe.order();
      if (reached == autos.size()) break;
    }
  }
  return FiniteGroup::make(x.size(), std::move(chosen), "Aut");
}

// Explicit isomorphism N_G(H)/H -> Aut(X) for a transitive X with a base point
// x0 of stabilizer H: the coset nH goes to the automorphism x0 |-> n^-1 x0.
struct WeylAutIso {
  QuotientMap weyl;
  GroupPtr aut;
  std::vector<int> map;  // weyl element -> aut element
  bool is_isomorphism = false;
};

inline WeylAutIso weyl_aut_isomorphism(const GSet& x) {
  if (!x.is_transitive()) throw InputError("Weyl comparison needs a transitive G-set");
  const int x0 = 0;
  const FiniteGroup& g = x.group();
  WeylAutIso r;
  r.weyl = weyl_group(g, x.stabilizer(x0));
  r.aut = aut_group(x);
  const int n = static_cast<int>(g.order());
  for (int w = 0; w < static_cast<int>(r.weyl.group->order()); ++w) {
    int rep = r.weyl.section[static_cast<std::size_t>(w)];
    int target = x.act(g.inv(rep), x0);
    Perm im(static_cast<std::size_t>(x.size()), -1);
    for (int e = 0; e < n; ++e) im[static_cast<std::size_t>(x.act(e, x0))] = x.act(e, target);
    r.map.push_back(r.aut->index_of(im));
  }
  std::vector<int> sorted = r.map;
  std::sort(sorted.begin(), sorted.end());
  bool bijective = r.map.size() == r.aut->order() && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end() &&
                   (sorted.empty() || sorted.front() >= 0);
  r.is_isomorphism = bijective && is_homomorphism(*r.weyl.group, *r.aut, r.map);
  return r;
}

}  // namespace burnside

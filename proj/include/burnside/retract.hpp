#pragma once

// Retractive G-sets over a base S, stored by their complements: an object
// S -> S ⊔ U -> S is the triple (S, U, u: U -> S). Their Grothendieck group,
// pushforward and pullback on it, the comparison with spans 1 <- U -> S, the
// decategorified unfurling, and counting checks for the free monoid of G-sets.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/gset.hpp"
#include "burnside/integer_matrix.hpp"
#include "burnside/parallel.hpp"
#include "burnside/ring.hpp"
#include "burnside/span.hpp"

namespace burnside {

// ---------------------------------------------------------------------------
// Summand inclusions and complements

struct Complement {
  GSet rest;
  GMap inclusion;  // rest -> W
};

// The points of W outside the image of i form a sub-G-set, and W = X ⊔ rest.
inline Complement complement(const GMap& i) {
  if (!i.is_injective()) throw InputError("not a summand inclusion: the map is not injective");
  const GSet& w = i.target();
  std::vector<char> hit(static_cast<std::size_t>(w.size()), 0);
  for (int y : i.images()) hit[static_cast<std::size_t>(y)] = 1;
  std::vector<int> rest;
  for (int p = 0; p < w.size(); ++p)
    if (!hit[static_cast<std::size_t>(p)]) rest.push_back(p);
  GMap inc = restrict_to(w, rest);
  return {inc.source(), inc};
}

// Is j a complement of i, i.e. injective with image exactly W minus image(i)?
inline bool is_complement(const GMap& i, const GMap& j) {
  if (!(i.target() == j.target()) || !i.is_injective() || !j.is_injective()) return false;
  std::vector<int> count(static_cast<std::size_t>(i.target().size()), 0);
  for (int y : i.images()) ++count[static_cast<std::size_t>(y)];
  for (int y : j.images()) ++count[static_cast<std::size_t>(y)];
  for (int c : count)
    if (c != 1) return false;
  return true;
}

// The unique iso phi: U1 -> U2 with j2 ∘ phi = j1 between two complements of i.
inline GMap complement_iso(const GMap& i, const GMap& j1, const GMap& j2) {
  if (!is_complement(i, j1) || !is_complement(i, j2)) throw InputError("complement_iso: not complements of the inclusion");
  std::vector<int> back(static_cast<std::size_t>(i.target().size()), -1);
  for (int u = 0; u < j2.source().size(); ++u) back[static_cast<std::size_t>(j2(u))] = u;
  std::vector<int> im;
  for (int u = 0; u < j1.source().size(); ++u) im.push_back(back[static_cast<std::size_t>(j1(u))]);
  GMap phi(j1.source(), j2.source(), std::move(im));
  if (!(compose(j2, phi).images() == j1.images())) throw ContractError("complement comparison does not commute over W");
  return phi;
}

// ---------------------------------------------------------------------------
// Retractive objects

class RetractiveObject {
 public:
  RetractiveObject(GSet base, GMap structure) : base_(std::move(base)), structure_(std::move(structure)) {
    if (!(structure_.target() == base_)) throw InputError("retractive object: structure map does not land in the base");
  }

  // From a retract diagram S -i-> W -r-> S with r ∘ i = id.
  static RetractiveObject from_retract(const GMap& i, const GMap& r) {
    if (!(i.source() == r.target()) || !(i.target() == r.source())) throw InputError("retract diagram has mismatched objects");
    if (!(compose(r, i).images() == identity_perm(i.source().size()))) throw InputError("r ∘ i is not the identity");
    Complement c = complement(i);
    return RetractiveObject(i.source(), compose(r, c.inclusion));
  }

  const GSet& base() const { return base_; }
  const GSet& complement_set() const { return structure_.source(); }
  const GMap& structure() const { return structure_; }

  // The retract diagram S -> S ⊔ U -> S.
  std::pair<GMap, GMap> diagram() const {
    Coproduct c = coproduct(base_, complement_set());
    return {c.in_left, copair(c, GMap::identity(base_), structure_)};
  }

 private:
  GSet base_;
  GMap structure_;
};

inline RetractiveObject retractive_sum(const RetractiveObject& a, const RetractiveObject& b) {
  if (!(a.base() == b.base())) throw InputError("sum of retractive objects over different bases");
  Coproduct c = coproduct(a.complement_set(), b.complement_set());
  return RetractiveObject(a.base(), copair(c, a.structure(), b.structure()));
}

// f_!: (U, u) over X |-> (U, f ∘ u) over Y.
inline RetractiveObject push_forward(const GMap& f, const RetractiveObject& r) {
  if (!(f.source() == r.base())) throw InputError("push_forward: map does not start at the base");
  return RetractiveObject(f.target(), compose(f, r.structure()));
}

// f^*: (V, v) over Y |-> (V x_Y X, projection) over X.
inline RetractiveObject pull_back(const GMap& f, const RetractiveObject& r) {
  if (!(f.target() == r.base())) throw InputError("pull_back: map does not end at the base");
  Pullback pb = pullback(r.structure(), f);
  return RetractiveObject(f.source(), pb.right);
}

// ---------------------------------------------------------------------------
// K0 of retractive objects over S

// Basis element: a transitive G/H_c with a map to S, up to iso over S.
struct RetractiveGenerator {
  int cls = 0;
  std::vector<int> images;  // canonical image table G/H_c -> S
  bool operator==(const RetractiveGenerator&) const = default;
  auto operator<=>(const RetractiveGenerator&) const = default;
};

class RetractiveK0 {
 public:
  explicit RetractiveK0(GSet base) : base_(std::move(base)) {
    const GroupPtr& g = base_.group_ptr();
    const auto& table = g->subgroups();
    for (std::size_t c = 0; c < table.size(); ++c) {
      GSet orbit = GSet::coset_space(g, table.rep(static_cast<int>(c)));
      orbits_.push_back(orbit);
      autos_.push_back(automorphisms(orbit));
      for_each_equivariant_map(orbit, base_, [&](const GMap& u) {
        RetractiveGenerator gen{static_cast<int>(c), canonical(static_cast<int>(c), u.images())};
        if (!index_.count(gen)) index_.emplace(gen, 0);
      });
    }
    for (auto& [gen, i] : index_) {
      i = static_cast<int>(basis_.size());
      basis_.push_back(gen);
    }
  }

  const GSet& base() const { return base_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<RetractiveGenerator>& basis() const { return basis_; }

  RetractiveObject basis_object(std::size_t i) const {
    const RetractiveGenerator& b = basis_[i];
    return RetractiveObject(base_, GMap(orbits_[static_cast<std::size_t>(b.cls)], base_, b.images));
  }

  // Coordinates: each orbit of U is matched, via its base point, with G/H_c -> S.
  IntVector classify(const RetractiveObject& r) const {
    if (!(r.base() == base_)) throw InputError("retractive object over a different base");
    IntVector v(rank(), 0);
    const GSet& u = r.complement_set();
    const int n = static_cast<int>(u.group().order());
    for (const Orbit& o : decompose(u).orbits) {
      const GSet& orbit = orbits_[static_cast<std::size_t>(o.class_index)];
      std::vector<int> im(static_cast<std::size_t>(orbit.size()), -1);
      for (int e = 0; e < n; ++e) im[static_cast<std::size_t>(orbit.act(e, 0))] = r.structure()(u.act(e, o.base));
      RetractiveGenerator gen{o.class_index, canonical(o.class_index, im)};
      auto it = index_.find(gen);
      if (it == index_.end()) throw ContractError("orbit over S missing from the K0 basis");
      ++v[static_cast<std::size_t>(it->second)];
    }
    return v;
  }

 private:
  // Least image table among u ∘ α for automorphisms α of G/H_c.
  std::vector<int> canonical(int cls, const std::vector<int>& images) const {
    std::vector<int> best = images;
    for (const GMap& a : autos_[static_cast<std::size_t>(cls)]) {
      std::vector<int> t(images.size());
      for (std::size_t p = 0; p < images.size(); ++p) t[p] = images[static_cast<std::size_t>(a(static_cast<int>(p)))];
      if (t < best) best = std::move(t);
    }
    return best;
  }

  GSet base_;
  std::vector<GSet> orbits_;
  std::vector<std::vector<GMap>> autos_;
  std::map<RetractiveGenerator, int> index_;
  std::vector<RetractiveGenerator> basis_;
};

// Which pushforward to use; the broken variant exists only to show that the
// functoriality check can fail.
enum class PushforwardMode { correct, broken };

inline IntMatrix k0_pushforward(const GMap& f, const RetractiveK0& from, const RetractiveK0& to,
                                PushforwardMode mode = PushforwardMode::correct) {
  IntMatrix m(to.rank(), from.rank());
  for (std::size_t j = 0; j < from.rank(); ++j) {
    IntVector c = to.classify(push_forward(f, from.basis_object(j)));
    for (std::size_t i = 0; i < to.rank(); ++i) m(i, j) = c[i];
  }
  if (mode == PushforwardMode::broken && !f.is_injective())
    for (std::size_t j = 0; j < from.rank(); ++j)
      for (std::size_t i = 0; i < to.rank(); ++i) m(i, j) *= 2;
  return m;
}

// f: X -> Y gives K0(R_Y) -> K0(R_X).
inline IntMatrix k0_pullback(const GMap& f, const RetractiveK0& over_x, const RetractiveK0& over_y) {
  IntMatrix m(over_x.rank(), over_y.rank());
  for (std::size_t j = 0; j < over_y.rank(); ++j) {
    IntVector c = over_x.classify(pull_back(f, over_y.basis_object(j)));
    for (std::size_t i = 0; i < over_x.rank(); ++i) m(i, j) = c[i];
  }
  return m;
}

// K0(g_! f^*) for X <-f- U -g-> Y.
inline IntMatrix k0_span_functor(const Span& s, PushforwardMode mode = PushforwardMode::correct) {
  RetractiveK0 kx(s.source()), ku(s.apex), ky(s.target());
  return k0_pushforward(s.right, ku, ky, mode) * k0_pullback(s.left, ku, kx);
}

// ---------------------------------------------------------------------------
// The comparison K0(R_S) = A(1, S)

// Column j: the span 1 <- U_j -> S of the j-th basis object, in A(1, S) coordinates.
inline IntMatrix burnside_comparison(const RetractiveK0& k, const BurnsideModule& a) {
  IntMatrix m(a.rank(), k.rank());
  for (std::size_t j = 0; j < k.rank(); ++j) {
    RetractiveObject r = k.basis_object(j);
    IntVector c = a.coordinates(span_class(Span(terminal_map(r.complement_set()), r.structure())));
    for (std::size_t i = 0; i < a.rank(); ++i) m(i, j) = c[i];
  }
  return m;
}

inline bool is_permutation_matrix(const IntMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int ones = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 1)
        ++ones;
      else if (m(i, j) != 0)
        return false;
    }
    if (ones != 1) return false;
  }
  for (std::size_t j = 0; j < m.cols(); ++j) {
    int ones = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) ones += m(i, j) == 1;
    if (ones != 1) return false;
  }
  return true;
}

inline std::string describe_gset(const GSet& x) {
  std::ostringstream os;
  os << "{points:" << x.size() << ",action:[";
  for (std::size_t s = 0; s < x.generator_action().size(); ++s) {
    os << (s ? "," : "") << "[";
    const auto& p = x.generator_action()[s];
    for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
    os << "]";
  }
  os << "]}";
  return os.str();
}

// Checks the iso K0(R_S) = A(1, S): ranks, bijectivity on bases, additivity
// and representative independence of the classification, naturality under
// every span S -> T with |T| and apex at most max_points, and compatibility
// with the A(G)-action on both sides.
inline CheckReport verify_burnside_theorem(const GSet& s, int max_points, int jobs = 1) {
  CheckReport rep;
  const GroupPtr& g = s.group_ptr();
  GSet pt = GSet::point(g);
  RetractiveK0 ks(s);
  BurnsideModule as(pt, s);
  IntMatrix phi_s = burnside_comparison(ks, as);
  rep.record("rank", ks.rank() == as.rank(), "K0 rank " + std::to_string(ks.rank()) + " vs " + std::to_string(as.rank()));
  rep.record("bijection", is_permutation_matrix(phi_s), "comparison is not a bijection of bases over " + describe_gset(s));

  bool additive = true, independent = true;
  for (std::size_t i = 0; i < ks.rank(); ++i) {
    RetractiveObject bi = ks.basis_object(i);
    for (std::size_t j = 0; j < ks.rank(); ++j) {
      IntVector v = ks.classify(retractive_sum(bi, ks.basis_object(j)));
      IntVector e(ks.rank(), 0);
      ++e[i];
      ++e[j];
      additive = additive && v == e;
    }
    for (const GMap& a : automorphisms(bi.complement_set())) {
      IntVector v = ks.classify(RetractiveObject(s, compose(bi.structure(), a)));
      IntVector e(ks.rank(), 0);
      ++e[i];
      independent = independent && v == e;
    }
  }
  rep.record("additivity", additive, "coproduct of basis objects is not the sum of classes");
  rep.record("representative_independence", independent, "classification depends on the representative");

  // A(G) acts by K x (U, u) on one side and by precomposition with [G/K] on the other.
  bool assembly = true;
  BurnsideModule app(pt, pt);
  for (std::size_t k = 0; k < app.rank(); ++k) {
    SpanClass gk = app.basis_span(k);
    const GSet& kset = gk.representative().apex;
    for (std::size_t j = 0; j < ks.rank(); ++j) {
      RetractiveObject r = ks.basis_object(j);
      Pullback prod = pullback(terminal_map(kset), terminal_map(r.complement_set()));
      IntVector lhs = ks.classify(RetractiveObject(s, compose(r.structure(), prod.right)));
      IntVector via = IntVector(phi_s.rows(), 0);
      for (std::size_t i = 0; i < phi_s.rows(); ++i)
        for (std::size_t l = 0; l < lhs.size(); ++l) via[i] += phi_s(i, l) * lhs[l];
      IntVector rhs = as.coordinates(compose(gk, span_class(Span(terminal_map(r.complement_set()), r.structure()))));
      if (via != rhs) {
        assembly = false;
        rep.violations.push_back("assembly: class " + std::to_string(k) + " on basis " + std::to_string(j) + " over " + describe_gset(s));
      }
    }
  }
  rep.record("assembly", assembly);

  std::vector<GSet> targets = gsets_up_to(g, max_points);
  std::vector<std::vector<std::string>> failures(targets.size());
  std::vector<long long> counts(targets.size(), 0);
  parallel_for(targets.size(), jobs, [&](std::size_t ti) {
    const GSet& t = targets[ti];
    RetractiveK0 kt(t);
    BurnsideModule at(pt, t);
    IntMatrix phi_t = burnside_comparison(kt, at);
    for (const SpanClass& w : span_classes(s, t, max_points)) {
      ++counts[ti];
      IntMatrix lhs = phi_t * k0_span_functor(w.representative());
      IntMatrix rhs = post_composition_matrix(as, at, w) * phi_s;
      if (!(lhs == rhs)) failures[ti].push_back("naturality: span " + w.describe() + " from " + describe_gset(s) + " to " + describe_gset(t));
    }
  });
  bool natural = true;
  long long instances = 0;
  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    instances += counts[ti];
    for (auto& f : failures[ti]) {
      natural = false;
      rep.violations.push_back(f);
    }
  }
  rep.record("naturality", natural && instances > 0, std::to_string(instances) + " spans checked");
  return rep;
}

// ---------------------------------------------------------------------------
// Decategorified unfurling

struct UnfurlReport {
  long long instances = 0;
  long long additivity_instances = 0;
  std::vector<std::string> failures;
  bool passed() const { return failures.empty(); }
};

// For all objects X, Y, Z with at most max_points points and transitive
// spans w1: X -> Y, w2: Y -> Z, K0 of the composite span's g_! f^* equals the
// composite of the two; also checks additivity in the span on pairs of basis
// spans, so the identity extends to every span class.
inline UnfurlReport unfurl_functoriality_check(const GroupPtr& g, int max_points, int jobs = 1,
                                               PushforwardMode mode = PushforwardMode::correct) {
  std::vector<GSet> objs = gsets_up_to(g, max_points);
  const std::size_t n = objs.size();
  // Functor matrix of every basis span between every pair of objects.
  struct Hom {
    BurnsideModule module;
    std::vector<IntMatrix> functor;
  };
  std::vector<std::optional<Hom>> homs(n * n);
  parallel_for(n * n, jobs, [&](std::size_t idx) {
    const GSet& x = objs[idx / n];
    const GSet& y = objs[idx % n];
    Hom h{BurnsideModule(x, y), {}};
    for (std::size_t i = 0; i < h.module.rank(); ++i) h.functor.push_back(k0_span_functor(h.module.basis_span(i).representative(), mode));
    homs[idx] = std::move(h);
  });

  struct Partial {
    long long instances = 0;
    long long additivity = 0;
    std::vector<std::string> failures;
  };
  std::vector<Partial> parts(n * n * n);
  parallel_for(n * n * n, jobs, [&](std::size_t idx) {
    const std::size_t xi = idx / (n * n), yi = (idx / n) % n, zi = idx % n;
    const Hom& h1 = *homs[xi * n + yi];
    const Hom& h2 = *homs[yi * n + zi];
    Partial& p = parts[idx];
    for (std::size_t a = 0; a < h1.module.rank(); ++a)
      for (std::size_t b = 0; b < h2.module.rank(); ++b) {
        ++p.instances;
        SpanClass c = compose(h1.module.basis_span(a), h2.module.basis_span(b));
        IntMatrix direct = k0_span_functor(c.representative(), mode);
        if (!(direct == h2.functor[b] * h1.functor[a]))
          p.failures.push_back("composition: " + h1.module.basis_span(a).describe() + " then " + h2.module.basis_span(b).describe() + " over X=" +
                               describe_gset(objs[xi]) + " Y=" + describe_gset(objs[yi]) + " Z=" + describe_gset(objs[zi]));
      }
    if (zi == 0) {
      for (std::size_t a = 0; a < h1.module.rank(); ++a)
        for (std::size_t b = a; b < h1.module.rank(); ++b) {
          ++p.additivity;
          SpanClass sum = add(h1.module.basis_span(a), h1.module.basis_span(b));
          if (!(k0_span_functor(sum.representative(), mode) == h1.functor[a] + h1.functor[b]))
            p.failures.push_back("additivity: " + sum.describe() + " over X=" + describe_gset(objs[xi]) + " Y=" + describe_gset(objs[yi]));
        }
    }
  });
  UnfurlReport rep;
  for (Partial& p : parts) {
    rep.instances += p.instances;
    rep.additivity_instances += p.additivity;
    for (auto& f : p.failures) rep.failures.push_back(std::move(f));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// The free monoid of G-sets and the splitting at π0

namespace detail {

// Do the generator permutations define an action? Replays every element along its word.
inline bool is_action(const FiniteGroup& g, int k, const std::vector<Perm>& gens) {
  const std::size_t n = g.order();
  const std::size_t p = static_cast<std::size_t>(k);
  std::vector<int> table(n * p, -1);
  for (std::size_t x = 0; x < p; ++x) table[x] = static_cast<int>(x);
  for (int e : g.bfs_order()) {
    auto [s, pred] = g.word_step(e);
    if (s < 0) continue;
    for (std::size_t x = 0; x < p; ++x)
      table[static_cast<std::size_t>(e) * p + x] =
          gens[static_cast<std::size_t>(s)][static_cast<std::size_t>(table[static_cast<std::size_t>(pred) * p + x])];
  }
  for (int s = 0; s < g.generator_count(); ++s) {
    int gs = g.generator_element(s);
    for (std::size_t e = 0; e < n; ++e) {
      std::size_t se = static_cast<std::size_t>(g.mul(gs, static_cast<int>(e)));
      for (std::size_t x = 0; x < p; ++x)
        if (table[se * p + x] != gens[static_cast<std::size_t>(s)][static_cast<std::size_t>(table[e * p + x])]) return false;
    }
  }
  return true;
}

inline std::vector<int> orbit_sizes(const GSet& x) {
  std::vector<int> s;
  for (const auto& o : x.orbits()) s.push_back(static_cast<int>(o.size()));
  std::sort(s.begin(), s.end());
  return s;
}

inline bool isomorphic_by_search(const GSet& a, const GSet& b) {
  if (a.size() != b.size() || orbit_sizes(a) != orbit_sizes(b)) return false;
  bool found = false;
  for_each_equivariant_map(a, b, [&](const GMap& f) { found = found || f.is_injective(); });
  return found;
}

}  // namespace detail

struct TomDieckReport {
  std::vector<long long> brute_force_classes;  // by point count 0..n
  std::vector<long long> multiset_counts;      // coefficients of prod 1/(1 - x^[G:H])
  std::vector<long long> actions;              // number of actions on k labelled points
  std::vector<bool> orbit_counting;            // sum over classes of k!/|Aut| equals actions
  std::size_t splitting_rank = 0;
  std::size_t subgroup_classes = 0;
  std::vector<bool> weyl_aut;                  // per subgroup class
  BigInt marks_determinant = 0;
  BigInt weyl_product = 0;
  bool passed() const {
    bool ok = brute_force_classes == multiset_counts && splitting_rank == subgroup_classes && marks_determinant == weyl_product &&
              marks_determinant != 0;
    for (bool b : orbit_counting) ok = ok && b;
    for (bool b : weyl_aut) ok = ok && b;
    return ok;
  }
};

inline std::size_t splitting_rank(const GroupPtr& g) { return burnside_ring(g).rank(); }

// Counts iso classes of G-sets on k <= max_points labelled points by
// enumerating all actions, and compares with the multiset count over
// transitive classes; also the rank, Weyl and marks checks at π0.
inline TomDieckReport tomdieck_monoid_check(const GroupPtr& g, int max_points) {
  const int gens = g->generator_count();
  double work = 1;
  long long fact = 1;
  for (int k = 2; k <= max_points; ++k) fact *= k;
  for (int s = 0; s < gens; ++s) work *= static_cast<double>(fact);
  if (work > 2e7) throw ResourceError("enumerating actions on " + std::to_string(max_points) + " points is too large for this group");

  TomDieckReport rep;
  const auto& table = g->subgroups();
  std::vector<long long> gf(static_cast<std::size_t>(max_points) + 1, 0);
  gf[0] = 1;
  for (std::size_t c = 0; c < table.size(); ++c) {
    const int step = static_cast<int>(g->order() / table.rep(static_cast<int>(c)).order());
    for (int k = step; k <= max_points; ++k) gf[static_cast<std::size_t>(k)] += gf[static_cast<std::size_t>(k - step)];
  }
  rep.multiset_counts = gf;

  for (int k = 0; k <= max_points; ++k) {
    std::vector<Perm> all;
    Perm p = identity_perm(k);
    do all.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    std::vector<GSet> reps;
    long long actions = 0;
    std::vector<std::size_t> pick(static_cast<std::size_t>(gens), 0);
    while (true) {
      std::vector<Perm> act;
      for (std::size_t s : pick) act.push_back(all[s]);
      if (detail::is_action(*g, k, act)) {
        ++actions;
        GSet x(g, k, act);
        bool known = false;
        for (const GSet& r : reps)
          if (detail::isomorphic_by_search(r, x)) {
            known = true;
            break;
          }
        if (!known) reps.push_back(std::move(x));
      }
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == all.size()) pick[i++] = 0;
      if (i == pick.size()) break;
    }
    rep.brute_force_classes.push_back(static_cast<long long>(reps.size()));
    rep.actions.push_back(actions);
    long long orbit_sum = 0;
    long long kfact = 1;
    for (int t = 2; t <= k; ++t) kfact *= t;
    for (const GSet& r : reps) orbit_sum += kfact / static_cast<long long>(automorphisms(r).size());
    rep.orbit_counting.push_back(orbit_sum == actions);
  }

  rep.splitting_rank = splitting_rank(g);
  rep.subgroup_classes = table.size();
  for (std::size_t c = 0; c < table.size(); ++c) {
    WeylAutIso w = weyl_aut_isomorphism(GSet::coset_space(g, table.rep(static_cast<int>(c))));
    rep.weyl_aut.push_back(w.is_isomorphism && w.aut->order() == table.classes[c].weyl_order);
  }
  rep.marks_determinant = determinant(convert<BigInt>(table_of_marks(g)));
  rep.weyl_product = weyl_order_product(g);
  return rep;
}

}  // namespace burnside

#pragma once

// Mackey functors with values in finitely generated abelian groups, stored
// as restriction and transfer matrices along every map of the orbit
// category G/H -> G/K. Conjugations are the automorphisms of G/H.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/group.hpp"
#include "burnside/gset.hpp"
#include "burnside/integer_matrix.hpp"
#include "burnside/ring.hpp"
#include "burnside/span.hpp"

namespace burnside {

// Z^n modulo the column span of an n x r relation matrix.
class AbGroupPres {
 public:
  AbGroupPres() : AbGroupPres(0) {}
  explicit AbGroupPres(std::size_t generators) : AbGroupPres(BigMatrix(generators, 0)) {}
  explicit AbGroupPres(BigMatrix relations) : relations_(std::move(relations)) {
    snf_ = std::make_shared<const SmithForm>(smith_normal_form(relations_));
  }

  std::size_t generators() const { return relations_.rows(); }
  const BigMatrix& relations() const { return relations_; }
  const SmithForm& smith() const { return *snf_; }

  std::size_t free_rank() const { return generators() - snf_->rank(); }
  std::vector<BigInt> torsion() const {
    std::vector<BigInt> t;
    for (const BigInt& d : snf_->invariants)
      if (d != 1) t.push_back(d);
    return t;
  }
  bool is_free() const { return torsion().empty(); }
  bool is_trivial() const { return free_rank() == 0 && torsion().empty(); }

  bool is_zero_element(const std::vector<BigInt>& v) const { return solve_integer(*snf_, v).has_value(); }

  // Do the two matrices (columns = images of source generators) agree as maps into this group?
  bool maps_equal(const IntMatrix& a, const IntMatrix& b) const {
    if (a.rows() != generators() || b.rows() != generators() || a.cols() != b.cols()) return false;
    if (a == b) return true;
    if (relations_.cols() == 0) return false;
    BigMatrix d = convert<BigInt>(a) - convert<BigInt>(b);
    for (std::size_t c = 0; c < d.cols(); ++c)
      if (!is_zero_element(d.column(c))) return false;
    return true;
  }

  // Does m, read as a map from `source` into this group, send relations to zero?
  bool is_homomorphism_from(const AbGroupPres& source, const IntMatrix& m) const {
    if (m.rows() != generators() || m.cols() != source.generators()) return false;
    BigMatrix img = convert<BigInt>(m) * source.relations();
    for (std::size_t c = 0; c < img.cols(); ++c)
      if (!is_zero_element(img.column(c))) return false;
    return true;
  }

  std::string describe() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
      if (!first) os << " + ";
      first = false;
    };
    if (free_rank() > 0) {
      sep();
      os << "Z";
      if (free_rank() > 1) os << "^" << free_rank();
    }
    for (const BigInt& t : torsion()) {
      sep();
      os << "Z/" << t;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  BigMatrix relations_;
  std::shared_ptr<const SmithForm> snf_;
};

inline AbGroupPres block_sum(const AbGroupPres& a, const AbGroupPres& b) {
  BigMatrix r(a.generators() + b.generators(), a.relations().cols() + b.relations().cols());
  for (std::size_t i = 0; i < a.generators(); ++i)
    for (std::size_t j = 0; j < a.relations().cols(); ++j) r(i, j) = a.relations()(i, j);
  for (std::size_t i = 0; i < b.generators(); ++i)
    for (std::size_t j = 0; j < b.relations().cols(); ++j) r(a.generators() + i, a.relations().cols() + j) = b.relations()(i, j);
  return AbGroupPres(std::move(r));
}

// ---------------------------------------------------------------------------
// Orbit category

// The G-map G/H_from -> G/H_to sending the base coset to `point`.
struct OrbitMap {
  int from = 0;
  int to = 0;
  int point = 0;
  bool operator==(const OrbitMap&) const = default;
  auto operator<=>(const OrbitMap&) const = default;
};

class OrbitCategory {
 public:
  explicit OrbitCategory(GroupPtr g) : group_(std::move(g)) {
    const auto& t = group_->subgroups();
    for (std::size_t c = 0; c < t.size(); ++c) orbits_.push_back(GSet::coset_space(group_, t.rep(static_cast<int>(c))));
    for (int a = 0; a < static_cast<int>(t.size()); ++a)
      for (int b = 0; b < static_cast<int>(t.size()); ++b)
        for (int p : fixed_points(orbits_[static_cast<std::size_t>(b)], t.rep(a)).points) {
          index_.emplace(OrbitMap{a, b, p}, static_cast<int>(maps_.size()));
          maps_.push_back({a, b, p});
        }
    for (const OrbitMap& m : maps_) gmaps_.push_back(build(m));
  }

  const GroupPtr& group() const { return group_; }
  std::size_t object_count() const { return orbits_.size(); }
  const GSet& orbit(int c) const { return orbits_[static_cast<std::size_t>(c)]; }
  const std::vector<OrbitMap>& maps() const { return maps_; }
  int index(const OrbitMap& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) throw InputError("not a map of the orbit category");
    return it->second;
  }
  const GMap& gmap(int i) const { return gmaps_[static_cast<std::size_t>(i)]; }
  OrbitMap identity(int c) const { return {c, c, 0}; }

  // psi o phi
  OrbitMap compose(const OrbitMap& psi, const OrbitMap& phi) const {
    if (phi.to != psi.from) throw InputError("orbit maps are not composable");
    return {phi.from, psi.to, gmap(index(psi))(phi.point)};
  }

  std::string describe(const OrbitMap& m) const {
    std::ostringstream os;
    os << "G/H" << m.from << " -> G/H" << m.to << " (base -> " << m.point << ")";
    return os.str();
  }

 private:
  GMap build(const OrbitMap& m) const {
    const GSet& src = orbit(m.from);
    const GSet& dst = orbit(m.to);
    std::vector<int> im(static_cast<std::size_t>(src.size()), -1);
    for (int e = 0; e < static_cast<int>(group_->order()); ++e) im[static_cast<std::size_t>(src.act(e, 0))] = dst.act(e, m.point);
    return GMap(src, dst, std::move(im));
  }

  GroupPtr group_;
  std::vector<GSet> orbits_;
  std::vector<OrbitMap> maps_;
  std::map<OrbitMap, int> index_;
  std::vector<GMap> gmaps_;
};

// ---------------------------------------------------------------------------
// Mackey functors

// res[i]: M(to) -> M(from) and tr[i]: M(from) -> M(to) for the i-th orbit
// map; matrices act on column vectors of generator coordinates.
struct MackeyFunctor {
  std::shared_ptr<const OrbitCategory> orbits;
  std::vector<AbGroupPres> values;
  std::vector<IntMatrix> res;
  std::vector<IntMatrix> tr;
  std::string name;

  const GroupPtr& group() const { return orbits->group(); }
  const AbGroupPres& value(int c) const { return values[static_cast<std::size_t>(c)]; }
  const IntMatrix& restriction(const OrbitMap& m) const { return res[static_cast<std::size_t>(orbits->index(m))]; }
  const IntMatrix& transfer(const OrbitMap& m) const { return tr[static_cast<std::size_t>(orbits->index(m))]; }

  void validate_shapes() const {
    if (values.size() != orbits->object_count()) throw InputError("Mackey functor needs one value per subgroup class");
    if (res.size() != orbits->maps().size() || tr.size() != orbits->maps().size()) throw InputError("Mackey functor needs matrices for every orbit map");
    for (std::size_t i = 0; i < orbits->maps().size(); ++i) {
      const OrbitMap& m = orbits->maps()[i];
      std::size_t a = value(m.from).generators(), b = value(m.to).generators();
      if (res[i].rows() != a || res[i].cols() != b) throw InputError("restriction matrix has the wrong shape along " + orbits->describe(m));
      if (tr[i].rows() != b || tr[i].cols() != a) throw InputError("transfer matrix has the wrong shape along " + orbits->describe(m));
    }
  }
};

inline std::shared_ptr<const OrbitCategory> orbit_category(const GroupPtr& g) { return std::make_shared<const OrbitCategory>(g); }

struct MackeyAxiomReport {
  std::vector<std::pair<std::string, bool>> axioms;
  std::vector<std::string> counterexamples;
  std::size_t instances = 0;

  bool passed() const {
    for (const auto& a : axioms)
      if (!a.second) return false;
    return true;
  }
  bool passed(const std::string& name) const {
    for (const auto& a : axioms)
      if (a.first == name) return a.second;
    return true;
  }
};

// Identity and composition laws for res and tr, homomorphism property, and
// the double-coset formula res_psi tr_phi = sum over orbits of the pullback.
inline MackeyAxiomReport check_mackey_axioms(const MackeyFunctor& m) {
  m.validate_shapes();
  const OrbitCategory& oc = *m.orbits;
  MackeyAxiomReport rep;
  std::map<std::string, bool> ok;
  const std::vector<std::string> names = {"homomorphism", "identity", "restriction composition", "transfer composition", "double coset"};
  for (const auto& n : names) ok[n] = true;
  auto fail = [&](const std::string& axiom, const std::string& where) {
    ok[axiom] = false;
    if (rep.counterexamples.size() < 20) rep.counterexamples.push_back(axiom + " fails for " + m.name + " on " + m.group()->name() + ": " + where);
  };
  const auto& maps = oc.maps();
  for (std::size_t i = 0; i < maps.size(); ++i) {
    const OrbitMap& f = maps[i];
    ++rep.instances;
    if (!m.value(f.from).is_homomorphism_from(m.value(f.to), m.res[i])) fail("homomorphism", "res along " + oc.describe(f));
    if (!m.value(f.to).is_homomorphism_from(m.value(f.from), m.tr[i])) fail("homomorphism", "tr along " + oc.describe(f));
  }
  for (int c = 0; c < static_cast<int>(oc.object_count()); ++c) {
    ++rep.instances;
    IntMatrix id = IntMatrix::identity(m.value(c).generators());
    if (!m.value(c).maps_equal(m.restriction(oc.identity(c)), id)) fail("identity", "res along the identity of G/H" + std::to_string(c));
    if (!m.value(c).maps_equal(m.transfer(oc.identity(c)), id)) fail("identity", "tr along the identity of G/H" + std::to_string(c));
  }
  for (const OrbitMap& phi : maps)
    for (const OrbitMap& psi : maps) {
      if (phi.to != psi.from) continue;
      ++rep.instances;
      OrbitMap comp = oc.compose(psi, phi);
      if (!m.value(phi.from).maps_equal(m.restriction(comp), m.restriction(phi) * m.restriction(psi)))
        fail("restriction composition", oc.describe(phi) + " then " + oc.describe(psi));
      if (!m.value(psi.to).maps_equal(m.transfer(comp), m.transfer(psi) * m.transfer(phi)))
        fail("transfer composition", oc.describe(phi) + " then " + oc.describe(psi));
    }
  for (std::size_t i = 0; i < maps.size(); ++i)
    for (std::size_t j = 0; j < maps.size(); ++j) {
      const OrbitMap& phi = maps[i];
      const OrbitMap& psi = maps[j];
      if (phi.to != psi.to) continue;
      ++rep.instances;
      Pullback pb = pullback(oc.gmap(static_cast<int>(i)), oc.gmap(static_cast<int>(j)));
      IntMatrix lhs = m.restriction(psi) * m.transfer(phi);
      IntMatrix rhs(lhs.rows(), lhs.cols());
      for (const Orbit& o : decompose(pb.apex).orbits) {
        OrbitMap alpha{o.class_index, phi.from, pb.left(o.base)};
        OrbitMap beta{o.class_index, psi.from, pb.right(o.base)};
        rhs = rhs + m.transfer(beta) * m.restriction(alpha);
      }
      if (!m.value(psi.from).maps_equal(lhs, rhs)) fail("double coset", "res along " + oc.describe(psi) + " after tr along " + oc.describe(phi));
    }
  for (const auto& n : names) rep.axioms.emplace_back(n, ok[n]);
  return rep;
}

// ---------------------------------------------------------------------------
// Values on arbitrary G-sets and on spans

// M(X) = ⊕ over the orbits of X (in decomposition order) of M(G/H).
struct OrbitChart {
  OrbitDecomposition decomposition;
  std::vector<int> canonical_point;  // point of X -> point of its canonical orbit G/H
  std::vector<std::size_t> offset;   // generator offset of each orbit block
  std::size_t generators = 0;
};

inline OrbitChart chart(const MackeyFunctor& m, const GSet& x) {
  OrbitChart ch;
  ch.decomposition = decompose(x);
  ch.canonical_point.assign(static_cast<std::size_t>(x.size()), -1);
  for (const Orbit& o : ch.decomposition.orbits) {
    const GSet& canon = m.orbits->orbit(o.class_index);
    for (int e = 0; e < static_cast<int>(x.group().order()); ++e)
      ch.canonical_point[static_cast<std::size_t>(x.act(e, o.base))] = canon.act(e, 0);
    ch.offset.push_back(ch.generators);
    ch.generators += m.value(o.class_index).generators();
  }
  return ch;
}

inline AbGroupPres value_on(const MackeyFunctor& m, const GSet& x) {
  AbGroupPres v(0);
  for (const Orbit& o : decompose(x).orbits) v = block_sum(v, m.value(o.class_index));
  return v;
}

// M(X <- U -> Y) = sum over the orbits of U of tr_beta res_alpha.
inline IntMatrix evaluate_on_span(const MackeyFunctor& m, const Span& s) {
  OrbitChart cx = chart(m, s.source()), cy = chart(m, s.target());
  IntMatrix out(cy.generators, cx.generators);
  for (const Orbit& o : decompose(s.apex).orbits) {
    int x = s.left(o.base), y = s.right(o.base);
    int ox = cx.decomposition.orbit_of[static_cast<std::size_t>(x)];
    int oy = cy.decomposition.orbit_of[static_cast<std::size_t>(y)];
    const Orbit& orbx = cx.decomposition.orbits[static_cast<std::size_t>(ox)];
    const Orbit& orby = cy.decomposition.orbits[static_cast<std::size_t>(oy)];
    OrbitMap alpha{o.class_index, orbx.class_index, cx.canonical_point[static_cast<std::size_t>(x)]};
    OrbitMap beta{o.class_index, orby.class_index, cy.canonical_point[static_cast<std::size_t>(y)]};
    IntMatrix block = m.transfer(beta) * m.restriction(alpha);
    for (std::size_t r = 0; r < block.rows(); ++r)
      for (std::size_t c = 0; c < block.cols(); ++c)
        out(cy.offset[static_cast<std::size_t>(oy)] + r, cx.offset[static_cast<std::size_t>(ox)] + c) += block(r, c);
  }
  return out;
}

inline IntMatrix evaluate_on_span(const MackeyFunctor& m, const SpanClass& s) { return evaluate_on_span(m, s.representative()); }

// Does M(w2 o w1) = M(w2) M(w1) as maps into M(Z)?
inline bool respects_composition(const MackeyFunctor& m, const SpanClass& w1, const SpanClass& w2) {
  IntMatrix whole = evaluate_on_span(m, compose(w1, w2));
  IntMatrix parts = evaluate_on_span(m, w2) * evaluate_on_span(m, w1);
  return value_on(m, w2.target()).maps_equal(whole, parts);
}

// The action A(X, Y) x M(X) -> M(Y) of group-completed span classes.
inline IntVector assembly_action(const MackeyFunctor& m, const BurnsideModule& a, const IntVector& omega, const IntVector& x) {
  if (omega.size() != a.rank()) throw InputError("assembly: span coordinates have the wrong length");
  IntVector out(chart(m, a.target()).generators, 0);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (omega[i] == 0) continue;
    IntMatrix e = evaluate_on_span(m, a.basis_span(i));
    if (e.cols() != x.size()) throw InputError("assembly: element has the wrong length");
    for (std::size_t r = 0; r < e.rows(); ++r)
      for (std::size_t c = 0; c < e.cols(); ++c) out[r] += omega[i] * e(r, c) * x[c];
  }
  return out;
}

// ---------------------------------------------------------------------------
// Built-in functors

inline MackeyFunctor zero_mackey(const GroupPtr& g) {
  MackeyFunctor m;
  m.orbits = orbit_category(g);
  m.name = "zero";
  m.values.assign(m.orbits->object_count(), AbGroupPres(0));
  m.res.assign(m.orbits->maps().size(), IntMatrix(0, 0));
  m.tr.assign(m.orbits->maps().size(), IntMatrix(0, 0));
  return m;
}

// Z everywhere, restriction the identity, transfer multiplication by the index.
inline MackeyFunctor constant_mackey(const GroupPtr& g) {
  MackeyFunctor m;
  m.orbits = orbit_category(g);
  m.name = "constant";
  m.values.assign(m.orbits->object_count(), AbGroupPres(1));
  const auto& t = g->subgroups();
  for (const OrbitMap& f : m.orbits->maps()) {
    m.res.push_back(IntMatrix{{1}});
    long long index = static_cast<long long>(t.rep(f.to).order() / t.rep(f.from).order());
    m.tr.push_back(IntMatrix{{index}});
  }
  return m;
}

// M(G/H) = A(pt, G/H) ≅ A(H); transfer is composition with f_*, restriction with f^*.
inline MackeyFunctor burnside_mackey(const GroupPtr& g) {
  MackeyFunctor m;
  m.orbits = orbit_category(g);
  m.name = "burnside";
  GSet pt = GSet::point(g);
  std::vector<BurnsideModule> mods;
  for (std::size_t c = 0; c < m.orbits->object_count(); ++c) {
    mods.emplace_back(pt, m.orbits->orbit(static_cast<int>(c)));
    m.values.emplace_back(mods.back().rank());
  }
  for (std::size_t i = 0; i < m.orbits->maps().size(); ++i) {
    const OrbitMap& f = m.orbits->maps()[i];
    const GMap& fm = m.orbits->gmap(static_cast<int>(i));
    m.res.push_back(post_composition_matrix(mods[static_cast<std::size_t>(f.to)], mods[static_cast<std::size_t>(f.from)], embed_contravariant(fm)));
    m.tr.push_back(post_composition_matrix(mods[static_cast<std::size_t>(f.from)], mods[static_cast<std::size_t>(f.to)], embed_covariant(fm)));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Duals, sums, morphisms, kernels

namespace detail {

// For a torsion-free presented group: a projection onto a free basis and a section.
struct FreeCoordinates {
  BigMatrix project;  // k x n, kernel = relations
  BigMatrix section;  // n x k
};

inline FreeCoordinates free_coordinates(const AbGroupPres& a) {
  if (!a.is_free()) throw UnsupportedInput("value group has torsion: " + a.describe());
  const SmithForm& s = a.smith();
  const std::size_t n = a.generators(), r = s.rank();
  FreeCoordinates fc{BigMatrix(n - r, n), BigMatrix(n, n - r)};
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) fc.project(i - r, j) = s.u(i, j);
  // Columns r.. of U^{-1}.
  SmithForm su = smith_normal_form(s.u);
  for (std::size_t i = r; i < n; ++i) {
    std::vector<BigInt> e(n, BigInt(0));
    e[i] = 1;
    auto col = solve_integer(su, e);
    if (!col) throw ContractError("unimodular transform is not invertible");
    for (std::size_t j = 0; j < n; ++j) fc.section(j, i - r) = (*col)[j];
  }
  return fc;
}

}  // namespace detail

// Rewrites every value over a free basis (no relations). Needs torsion-free values.
inline MackeyFunctor free_presentation(const MackeyFunctor& m) {
  std::vector<detail::FreeCoordinates> fc;
  for (const AbGroupPres& v : m.values) fc.push_back(detail::free_coordinates(v));
  MackeyFunctor r;
  r.orbits = m.orbits;
  r.name = m.name;
  for (const auto& f : fc) r.values.emplace_back(f.project.rows());
  for (std::size_t i = 0; i < m.orbits->maps().size(); ++i) {
    const OrbitMap& f = m.orbits->maps()[i];
    const auto& a = fc[static_cast<std::size_t>(f.from)];
    const auto& b = fc[static_cast<std::size_t>(f.to)];
    r.res.push_back(to_int(a.project * convert<BigInt>(m.res[i]) * b.section));
    r.tr.push_back(to_int(b.project * convert<BigInt>(m.tr[i]) * a.section));
  }
  return r;
}

// Hom(M(-), Z): restriction and transfer swap roles and transpose.
inline MackeyFunctor dual_mackey(const MackeyFunctor& m) {
  MackeyFunctor f = free_presentation(m);
  MackeyFunctor d;
  d.orbits = f.orbits;
  d.name = "dual(" + m.name + ")";
  d.values = f.values;
  for (std::size_t i = 0; i < f.res.size(); ++i) {
    d.res.push_back(f.tr[i].transpose());
    d.tr.push_back(f.res[i].transpose());
  }
  return d;
}

inline MackeyFunctor direct_sum(const MackeyFunctor& a, const MackeyFunctor& b) {
  if (!same_group(a.group(), b.group())) throw InputError("direct sum of Mackey functors over different groups");
  MackeyFunctor s;
  s.orbits = a.orbits;
  s.name = a.name + "+" + b.name;
  for (std::size_t c = 0; c < a.values.size(); ++c) s.values.push_back(block_sum(a.values[c], b.values[c]));
  for (std::size_t i = 0; i < a.res.size(); ++i) {
    s.res.push_back(block_diagonal(a.res[i], b.res[i]));
    s.tr.push_back(block_diagonal(a.tr[i], b.tr[i]));
  }
  return s;
}

// eta[c]: M(G/H_c) -> N(G/H_c)
struct MackeyMorphism {
  std::vector<IntMatrix> components;
};

inline bool is_mackey_morphism(const MackeyFunctor& m, const MackeyFunctor& n, const MackeyMorphism& eta) {
  if (eta.components.size() != m.values.size()) return false;
  for (std::size_t c = 0; c < m.values.size(); ++c)
    if (!n.values[c].is_homomorphism_from(m.values[c], eta.components[c])) return false;
  for (std::size_t i = 0; i < m.orbits->maps().size(); ++i) {
    const OrbitMap& f = m.orbits->maps()[i];
    const IntMatrix& ea = eta.components[static_cast<std::size_t>(f.from)];
    const IntMatrix& eb = eta.components[static_cast<std::size_t>(f.to)];
    if (!n.value(f.from).maps_equal(ea * m.res[i], n.res[i] * eb)) return false;
    if (!n.value(f.to).maps_equal(eb * m.tr[i], n.tr[i] * ea)) return false;
  }
  return true;
}

// The objectwise kernel, with generators given as elements of M (the inclusion).
struct MackeyKernel {
  MackeyFunctor functor;
  std::vector<BigMatrix> inclusion;  // per class: generators of M x generators of K
};

inline MackeyKernel mackey_kernel(const MackeyFunctor& m, const MackeyFunctor& n, const MackeyMorphism& eta) {
  if (!is_mackey_morphism(m, n, eta)) throw InputError("kernel of something that is not a morphism of Mackey functors");
  MackeyKernel k;
  k.functor.orbits = m.orbits;
  k.functor.name = "ker";
  for (std::size_t c = 0; c < m.values.size(); ++c) {
    // v with eta v in the relations of N: kernel of [eta | -R_N], first block.
    const BigMatrix e = convert<BigInt>(eta.components[c]);
    const BigMatrix& rn = n.values[c].relations();
    const std::size_t gm = m.values[c].generators();
    BigMatrix stacked(e.rows(), gm + rn.cols());
    for (std::size_t i = 0; i < e.rows(); ++i) {
      for (std::size_t j = 0; j < gm; ++j) stacked(i, j) = e(i, j);
      for (std::size_t j = 0; j < rn.cols(); ++j) stacked(i, gm + j) = -rn(i, j);
    }
    BigMatrix ker = integer_kernel(stacked);
    // Generators: the M-parts of the kernel basis (spanning the preimage lattice).
    BigMatrix gens(gm, ker.cols());
    for (std::size_t i = 0; i < gm; ++i)
      for (std::size_t j = 0; j < ker.cols(); ++j) gens(i, j) = ker(i, j);
    // Relations among them: c with gens c in the relations of M.
    const BigMatrix& rm = m.values[c].relations();
    BigMatrix rel_stack(gm, gens.cols() + rm.cols());
    for (std::size_t i = 0; i < gm; ++i) {
      for (std::size_t j = 0; j < gens.cols(); ++j) rel_stack(i, j) = gens(i, j);
      for (std::size_t j = 0; j < rm.cols(); ++j) rel_stack(i, gens.cols() + j) = -rm(i, j);
    }
    BigMatrix rk = integer_kernel(rel_stack);
    BigMatrix rel(gens.cols(), rk.cols());
    for (std::size_t i = 0; i < gens.cols(); ++i)
      for (std::size_t j = 0; j < rk.cols(); ++j) rel(i, j) = rk(i, j);
    k.functor.values.emplace_back(std::move(rel));
    k.inclusion.push_back(std::move(gens));
  }
  // Induced maps: express the image of each kernel generator in the kernel generators of the target, modulo relations of M.
  auto induced = [&](int from, int to, const IntMatrix& mat) {
    const BigMatrix& src = k.inclusion[static_cast<std::size_t>(from)];
    const BigMatrix& dst = k.inclusion[static_cast<std::size_t>(to)];
    const BigMatrix& rm = m.values[static_cast<std::size_t>(to)].relations();
    BigMatrix sys(dst.rows(), dst.cols() + rm.cols());
    for (std::size_t i = 0; i < dst.rows(); ++i) {
      for (std::size_t j = 0; j < dst.cols(); ++j) sys(i, j) = dst(i, j);
      for (std::size_t j = 0; j < rm.cols(); ++j) sys(i, dst.cols() + j) = rm(i, j);
    }
    SmithForm s = smith_normal_form(sys);
    BigMatrix img = convert<BigInt>(mat) * src;
    IntMatrix out(dst.cols(), src.cols());
    for (std::size_t j = 0; j < src.cols(); ++j) {
      auto sol = solve_integer(s, img.column(j));
      if (!sol) throw ContractError("kernel is not preserved by a structure map");
      for (std::size_t i = 0; i < dst.cols(); ++i) {
        const BigInt& v = (*sol)[i];
        out(i, j) = static_cast<long long>(v);
      }
    }
    return out;
  };
  for (std::size_t i = 0; i < m.orbits->maps().size(); ++i) {
    const OrbitMap& f = m.orbits->maps()[i];
    k.functor.res.push_back(induced(f.to, f.from, m.res[i]));
    k.functor.tr.push_back(induced(f.from, f.to, m.tr[i]));
  }
  return k;
}

// Cardinality A(H) -> Z as a morphism from the Burnside functor to the constant one.
inline MackeyMorphism augmentation(const MackeyFunctor& burnside) {
  MackeyMorphism eta;
  const GroupPtr& g = burnside.group();
  GSet pt = GSet::point(g);
  const auto& t = g->subgroups();
  for (std::size_t c = 0; c < burnside.values.size(); ++c) {
    BurnsideModule mod(pt, burnside.orbits->orbit(static_cast<int>(c)));
    IntMatrix row(1, mod.rank());
    for (std::size_t j = 0; j < mod.rank(); ++j)
      row(0, j) = static_cast<long long>(t.rep(static_cast<int>(c)).order() / t.rep(mod.basis()[j].cls).order());
    eta.components.push_back(std::move(row));
  }
  return eta;
}

}  // namespace burnside

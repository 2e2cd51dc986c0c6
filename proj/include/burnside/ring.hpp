#pragma once

// Group completion of span hom-monoids: Burnside modules A(X, Y), the
// Burnside ring A(G), the table of marks, and the ring maps induced by
// N-fixed points and inflation along G -> G/N.

#include <cstddef>
#include <map>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/group.hpp"
#include "burnside/gset.hpp"
#include "burnside/integer_matrix.hpp"
#include "burnside/span.hpp"

namespace burnside {

using IntVector = std::vector<long long>;

// Free abelian group on the classes of transitive spans X <- G/H -> Y.
class BurnsideModule {
 public:
  BurnsideModule(GSet x, GSet y) : x_(std::move(x)), y_(std::move(y)), basis_(transitive_span_keys(x_, y_)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], static_cast<int>(i));
  }

  const GSet& source() const { return x_; }
  const GSet& target() const { return y_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<OrbitKey>& basis() const { return basis_; }
  SpanClass basis_span(std::size_t i) const { return SpanClass(x_, y_, {basis_[i]}); }

  // Coordinates of an effective class; every span class is a sum of basis elements.
  IntVector coordinates(const SpanClass& s) const {
    if (!(s.source() == x_) || !(s.target() == y_)) throw InputError("span class lies in a different hom-set");
    IntVector v(basis_.size(), 0);
    for (const OrbitKey& k : s.keys()) ++v[static_cast<std::size_t>(index_.at(k))];
    return v;
  }

  // The effective class with nonnegative coordinates v.
  SpanClass effective(const IntVector& v) const {
    std::vector<OrbitKey> keys;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) throw InputError("negative coordinate has no effective representative");
      for (long long n = 0; n < v[i]; ++n) keys.push_back(basis_[i]);
    }
    return SpanClass(x_, y_, std::move(keys));
  }

 private:
  GSet x_;
  GSet y_;
  std::vector<OrbitKey> basis_;
  std::map<OrbitKey, int> index_;
};

// Matrix of composition with a fixed span class w: Y -> Z, as a map A(X, Y) -> A(X, Z).
inline IntMatrix post_composition_matrix(const BurnsideModule& from, const BurnsideModule& to, const SpanClass& w) {
  IntMatrix m(to.rank(), from.rank());
  for (std::size_t j = 0; j < from.rank(); ++j) {
    IntVector c = to.coordinates(compose(from.basis_span(j), w));
    for (std::size_t i = 0; i < to.rank(); ++i) m(i, j) = c[i];
  }
  return m;
}

// Bilinear composition A(X, Y) x A(Y, Z) -> A(X, Z) on coordinate vectors.
inline IntVector compose_elements(const BurnsideModule& a, const BurnsideModule& b, const BurnsideModule& out, const IntVector& u,
                                  const IntVector& v) {
  IntVector r(out.rank(), 0);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < b.rank(); ++j) {
      if (v[j] == 0) continue;
      IntVector c = out.coordinates(compose(a.basis_span(i), b.basis_span(j)));
      for (std::size_t k = 0; k < r.size(); ++k) r[k] += u[i] * v[j] * c[k];
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Burnside ring

struct BurnsideRing {
  GroupPtr group;
  // product[h][k] = coordinates of [G/H_h][G/H_k] over subgroup classes.
  std::vector<std::vector<IntVector>> product;
  std::size_t rank() const { return product.size(); }
  IntVector unit() const {
    IntVector u(rank(), 0);
    u.back() = 1;  // G itself is the last class
    return u;
  }
  IntVector multiply(const IntVector& a, const IntVector& b) const {
    IntVector r(rank(), 0);
    for (std::size_t i = 0; i < rank(); ++i)
      for (std::size_t j = 0; j < rank(); ++j) {
        if (a[i] == 0 || b[j] == 0) continue;
        for (std::size_t k = 0; k < rank(); ++k) r[k] += a[i] * b[j] * product[i][j][k];
      }
    return r;
  }
};

// A(G) = A(pt, pt); the transitive span pt <- G/H -> pt is [G/H], and the
// product is composition, i.e. the pullback over the point.
inline BurnsideRing burnside_ring(const GroupPtr& g) {
  GSet pt = GSet::point(g);
  BurnsideModule a(pt, pt);
  const std::size_t n = a.rank();
  if (n != g->subgroups().size()) throw ContractError("A(G) basis does not match the subgroup classes");
  BurnsideRing r;
  r.group = g;
  r.product.assign(n, std::vector<IntVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.product[i][j] = a.coordinates(compose(a.basis_span(i), a.basis_span(j)));
  return r;
}

// Coordinates of a G-set in A(G).
inline IntVector burnside_class(const GSet& x) { return decompose(x).class_counts(x.group().subgroups().size()); }

// m(K, H) = |(G/K)^H|: rows are the G-sets G/K, columns the subgroups H.
inline IntMatrix table_of_marks(const GroupPtr& g) {
  const auto& t = g->subgroups();
  IntMatrix m(t.size(), t.size());
  for (std::size_t k = 0; k < t.size(); ++k) {
    GSet gk = GSet::coset_space(g, t.rep(static_cast<int>(k)));
    for (std::size_t h = 0; h < t.size(); ++h) m(k, h) = static_cast<long long>(fixed_points(gk, t.rep(static_cast<int>(h))).count());
  }
  return m;
}

// The mark homomorphism A(G) -> Z^classes, x |-> (|x^H|)_H.
inline IntVector marks_of(const IntMatrix& marks, const IntVector& x) {
  IntVector r(marks.cols(), 0);
  for (std::size_t k = 0; k < marks.rows(); ++k)
    for (std::size_t h = 0; h < marks.cols(); ++h) r[h] += x[k] * marks(k, h);
  return r;
}

inline BigInt weyl_order_product(const GroupPtr& g) {
  BigInt p = 1;
  for (const auto& c : g->subgroups().classes) p *= BigInt(static_cast<long long>(c.weyl_order));
  return p;
}

// ---------------------------------------------------------------------------
// Fixed points and inflation

// Phi^N: A(G) -> A(G/N), [G/H] |-> [(G/H)^N]. Columns indexed by classes of G.
inline IntMatrix fixed_point_ring_map(const GroupPtr& g, const QuotientMap& q) {
  if (q.domain.size() != g->order()) throw InputError("fixed-point map needs a quotient of the whole group");
  const auto& tg = g->subgroups();
  const auto& tq = q.group->subgroups();
  IntMatrix m(tq.size(), tg.size());
  for (std::size_t h = 0; h < tg.size(); ++h) {
    GSet fp = fixed_point_set(GSet::coset_space(g, tg.rep(static_cast<int>(h))), q);
    IntVector c = burnside_class(fp);
    for (std::size_t i = 0; i < tq.size(); ++i) m(i, h) = c[i];
  }
  return m;
}

// infl: A(G/N) -> A(G), restriction of the action along G -> G/N.
inline IntMatrix inflation_map(const GroupPtr& g, const QuotientMap& q) {
  if (q.domain.size() != g->order()) throw InputError("inflation needs a quotient of the whole group");
  const auto& tg = g->subgroups();
  const auto& tq = q.group->subgroups();
  IntMatrix m(tg.size(), tq.size());
  for (std::size_t k = 0; k < tq.size(); ++k) {
    GSet inf = inflate(GSet::coset_space(q.group, tq.rep(static_cast<int>(k))), g, q);
    IntVector c = burnside_class(inf);
    for (std::size_t i = 0; i < tg.size(); ++i) m(i, k) = c[i];
  }
  return m;
}

inline QuotientMap normal_quotient(const GroupPtr& g, const Subgroup& n) {
  require_subgroup(*g, n);
  if (!is_normal(*g, n)) throw InputError("subgroup is not normal");
  return quotient_group(*g, n);
}

// Is the matrix f: A -> B (columns indexed by the basis of A) a unital ring map?
inline bool is_unital_ring_map(const BurnsideRing& a, const BurnsideRing& b, const IntMatrix& f) {
  auto apply = [&](const IntVector& v) {
    IntVector r(f.rows(), 0);
    for (std::size_t i = 0; i < f.rows(); ++i)
      for (std::size_t j = 0; j < f.cols(); ++j) r[i] += f(i, j) * v[j];
    return r;
  };
  if (apply(a.unit()) != b.unit()) return false;
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) {
      IntVector ei(a.rank(), 0), ej(a.rank(), 0);
      ei[i] = 1;
      ej[j] = 1;
      if (apply(a.product[i][j]) != b.multiply(apply(ei), apply(ej))) return false;
    }
  return true;
}

}  // namespace burnside

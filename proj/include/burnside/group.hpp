#pragma once

// Finite permutation groups with materialized elements, their subgroup
// lattices up to conjugacy, normalizers, Weyl groups, quotients and double
// cosets.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burnside/errors.hpp"

namespace burnside {

// Image table of a permutation of {0, ..., degree-1}.
using Perm = std::vector<int>;

inline Perm identity_perm(int degree) {
  Perm p(static_cast<std::size_t>(degree));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

// (a * b)(x) = a(b(x)): apply b first.
inline Perm compose_perm(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t x = 0; x < b.size(); ++x) r[x] = a[static_cast<std::size_t>(b[x])];
  return r;
}

inline Perm inverse_perm(const Perm& a) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x) r[static_cast<std::size_t>(a[x])] = static_cast<int>(x);
  return r;
}

inline bool is_permutation_of(const Perm& p, int degree) {
  if (static_cast<int>(p.size()) != degree) return false;
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 0 || v >= degree || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

// A subgroup is a sorted set of element indices of its parent group.
struct Subgroup {
  std::vector<int> elements;

  std::size_t order() const { return elements.size(); }
  bool contains(int g) const { return std::binary_search(elements.begin(), elements.end(), g); }
  bool operator==(const Subgroup&) const = default;
  auto operator<=>(const Subgroup&) const = default;
};

struct SubgroupClass {
  Subgroup representative;          // lexicographic minimum of the class
  std::vector<Subgroup> conjugates;  // sorted
  Subgroup normalizer;              // of the representative
  std::size_t weyl_order = 0;       // |N_G(H)| / |H|
  // Left cosets of the representative, ordered by minimal element.
  std::vector<int> coset_reps;
  std::vector<int> coset_of;        // element -> coset index
  std::vector<std::vector<int>> coset_action;  // per generator
};

// Conjugacy classes of subgroups ordered by (order, representative).
struct SubgroupClassTable {
  std::vector<SubgroupClass> classes;
  std::map<std::vector<int>, int> class_of_subgroup;
  std::size_t subgroup_count = 0;

  std::size_t size() const { return classes.size(); }
  const Subgroup& rep(int c) const { return classes[static_cast<std::size_t>(c)].representative; }
  int class_of(const Subgroup& h) const {
    auto it = class_of_subgroup.find(h.elements);
    if (it == class_of_subgroup.end()) throw InputError("not a subgroup of the group");
    return it->second;
  }
};

inline constexpr std::size_t kDefaultSubgroupBound = 64;
inline constexpr std::size_t kMaxGroupOrder = 50000;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

SubgroupClassTable enumerate_subgroups(const FiniteGroup& g, std::size_t bound = kDefaultSubgroupBound);

class FiniteGroup {
 public:
  // Closes the generators under composition. Elements are sorted by image
  // table, so index 0 is the identity.
  FiniteGroup(int degree, std::vector<Perm> generators, std::string name = {},
              std::size_t subgroup_bound = kDefaultSubgroupBound)
      : degree_(degree), generators_(std::move(generators)), name_(std::move(name)) {
    if (degree < 0) throw InputError("group degree must be nonnegative");
    for (const Perm& p : generators_) {
      if (!is_permutation_of(p, degree)) throw InputError("generator is not a permutation of the stated degree");
    }
    close();
    if (order() <= subgroup_bound) classes_ = enumerate_subgroups(*this, subgroup_bound);
  }

  static GroupPtr make(int degree, std::vector<Perm> generators, std::string name = {}) {
    return std::make_shared<const FiniteGroup>(degree, std::move(generators), std::move(name));
  }

  int degree() const { return degree_; }
  const std::string& name() const { return name_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<Perm>& generators() const { return generators_; }
  int generator_count() const { return static_cast<int>(generators_.size()); }
  // Element index of generator s.
  int generator_element(int s) const { return generator_index_[static_cast<std::size_t>(s)]; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int g) const { return elements_[static_cast<std::size_t>(g)]; }

  int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order() + static_cast<std::size_t>(b)]; }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }  // g h g^-1
  static constexpr int identity() { return 0; }

  int index_of(const Perm& p) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
    if (it == elements_.end() || *it != p) return -1;
    return static_cast<int>(it - elements_.begin());
  }

  // Element g written as generator(s) * pred: used to replay actions.
  std::pair<int, int> word_step(int g) const { return word_[static_cast<std::size_t>(g)]; }
  // Elements in breadth-first order from the identity (every element after its word predecessor).
  const std::vector<int>& bfs_order() const { return bfs_order_; }

  bool has_subgroup_table() const { return classes_.has_value(); }
  const SubgroupClassTable& subgroups() const {
    if (!classes_) throw ResourceError("group order " + std::to_string(order()) + " exceeds the subgroup enumeration bound");
    return *classes_;
  }

  bool operator==(const FiniteGroup& o) const { return degree_ == o.degree_ && elements_ == o.elements_; }

 private:
  void close() {
    Perm id = identity_perm(degree_);
    std::map<Perm, int> seen;
    std::vector<Perm> order_found{id};
    std::vector<std::pair<int, int>> words{{-1, -1}};
    seen.emplace(id, 0);
    for (std::size_t q = 0; q < order_found.size(); ++q) {
      for (std::size_t s = 0; s < generators_.size(); ++s) {
        Perm next = compose_perm(generators_[s], order_found[q]);
        if (seen.count(next)) continue;
        if (order_found.size() >= kMaxGroupOrder) throw ResourceError("group closure exceeds the maximal supported order");
        seen.emplace(next, static_cast<int>(order_found.size()));
        order_found.push_back(std::move(next));
        words.emplace_back(static_cast<int>(s), static_cast<int>(q));
      }
    }
    elements_.assign(order_found.begin(), order_found.end());
    std::sort(elements_.begin(), elements_.end());
    const std::size_t n = elements_.size();
    std::vector<int> found_to_sorted(n);
    for (std::size_t i = 0; i < n; ++i) found_to_sorted[i] = index_of(order_found[i]);
    word_.assign(n, {-1, -1});
    bfs_order_.clear();
    for (std::size_t i = 0; i < n; ++i) {
      int idx = found_to_sorted[i];
      bfs_order_.push_back(idx);
      if (words[i].first >= 0) word_[static_cast<std::size_t>(idx)] = {words[i].first, found_to_sorted[static_cast<std::size_t>(words[i].second)]};
    }
    mul_.assign(n * n, 0);
    inv_.assign(n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) mul_[a * n + b] = index_of(compose_perm(elements_[a], elements_[b]));
      inv_[a] = index_of(inverse_perm(elements_[a]));
    }
    generator_index_.clear();
    for (const Perm& p : generators_) generator_index_.push_back(index_of(p));
  }

  int degree_;
  std::vector<Perm> generators_;
  std::string name_;
  std::vector<Perm> elements_;
  std::vector<int> mul_;
  std::vector<int> inv_;
  std::vector<int> generator_index_;
  std::vector<std::pair<int, int>> word_;
  std::vector<int> bfs_order_;
  std::optional<SubgroupClassTable> classes_;
};

// ---------------------------------------------------------------------------
// Subgroup arithmetic

inline bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
  if (elems.empty()) return false;
  std::vector<char> in(g.order(), 0);
  for (int e : elems) {
    if (e < 0 || static_cast<std::size_t>(e) >= g.order()) return false;
    in[static_cast<std::size_t>(e)] = 1;
  }
  if (!in[0]) return false;
  for (int a : elems) {
    if (!in[static_cast<std::size_t>(g.inv(a))]) return false;
    for (int b : elems)
      if (!in[static_cast<std::size_t>(g.mul(a, b))]) return false;
  }
  return true;
}

inline void require_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (!std::is_sorted(h.elements.begin(), h.elements.end()) || !is_subgroup(g, h.elements))
    throw InputError("element set is not a subgroup");
}

// Subgroup generated by a set of elements.
inline Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<int>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> found{0};
  in[0] = 1;
  for (std::size_t q = 0; q < found.size(); ++q) {
    for (int s : gens) {
      int n = g.mul(s, found[q]);
      if (!in[static_cast<std::size_t>(n)]) {
        in[static_cast<std::size_t>(n)] = 1;
        found.push_back(n);
      }
    }
  }
  std::sort(found.begin(), found.end());
  return Subgroup{found};
}

inline Subgroup whole_group(const FiniteGroup& g) {
  std::vector<int> all(g.order());
  std::iota(all.begin(), all.end(), 0);
  return Subgroup{all};
}

inline Subgroup trivial_subgroup() { return Subgroup{{0}}; }

inline Subgroup conjugate_subgroup(const FiniteGroup& g, int x, const Subgroup& h) {
  Subgroup r;
  r.elements.reserve(h.order());
  for (int e : h.elements) r.elements.push_back(g.conj(x, e));
  std::sort(r.elements.begin(), r.elements.end());
  return r;
}

inline Subgroup intersect(const Subgroup& a, const Subgroup& b) {
  Subgroup r;
  std::set_intersection(a.elements.begin(), a.elements.end(), b.elements.begin(), b.elements.end(),
                        std::back_inserter(r.elements));
  return r;
}

inline bool is_contained(const Subgroup& a, const Subgroup& b) {
  return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(), a.elements.end());
}

inline Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  Subgroup n;
  for (int x = 0; x < static_cast<int>(g.order()); ++x)
    if (conjugate_subgroup(g, x, h) == h) n.elements.push_back(x);
  return n;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) { return normalizer(g, h).order() == g.order(); }

inline SubgroupClassTable enumerate_subgroups(const FiniteGroup& g, std::size_t bound) {
  if (g.order() > bound)
    throw ResourceError("group order " + std::to_string(g.order()) + " exceeds subgroup enumeration bound " +
                        std::to_string(bound));
  const int n = static_cast<int>(g.order());
  // Every subgroup is a join of cyclic subgroups.
  std::vector<Subgroup> cyclic;
  for (int x = 0; x < n; ++x) cyclic.push_back(generated_subgroup(g, {x}));
  std::sort(cyclic.begin(), cyclic.end());
  cyclic.erase(std::unique(cyclic.begin(), cyclic.end()), cyclic.end());

  std::map<std::vector<int>, char> all;
  std::vector<Subgroup> work;
  for (const Subgroup& c : cyclic)
    if (all.emplace(c.elements, 1).second) work.push_back(c);
  for (std::size_t q = 0; q < work.size(); ++q) {
    for (const Subgroup& c : cyclic) {
      if (is_contained(c, work[q])) continue;
      std::vector<int> gens = work[q].elements;
      gens.insert(gens.end(), c.elements.begin(), c.elements.end());
      Subgroup j = generated_subgroup(g, gens);
      if (all.emplace(j.elements, 1).second) work.push_back(j);
    }
  }

  SubgroupClassTable table;
  table.subgroup_count = all.size();
  std::map<std::vector<int>, char> assigned;
  std::vector<SubgroupClass> classes;
  for (const auto& [elems, unused] : all) {
    (void)unused;
    if (assigned.count(elems)) continue;
    Subgroup h{elems};
    SubgroupClass cls;
    for (int x = 0; x < n; ++x) cls.conjugates.push_back(conjugate_subgroup(g, x, h));
    std::sort(cls.conjugates.begin(), cls.conjugates.end());
    cls.conjugates.erase(std::unique(cls.conjugates.begin(), cls.conjugates.end()), cls.conjugates.end());
    for (const Subgroup& c : cls.conjugates) assigned.emplace(c.elements, 1);
    cls.representative = cls.conjugates.front();
    cls.normalizer = normalizer(g, cls.representative);
    cls.weyl_order = cls.normalizer.order() / cls.representative.order();
    cls.coset_of.assign(static_cast<std::size_t>(n), -1);
    for (int x = 0; x < n; ++x) {
      if (cls.coset_of[static_cast<std::size_t>(x)] >= 0) continue;
      for (int e : cls.representative.elements) cls.coset_of[static_cast<std::size_t>(g.mul(x, e))] = static_cast<int>(cls.coset_reps.size());
      cls.coset_reps.push_back(x);
    }
    for (int s = 0; s < g.generator_count(); ++s) {
      std::vector<int> p;
      for (int r : cls.coset_reps) p.push_back(cls.coset_of[static_cast<std::size_t>(g.mul(g.generator_element(s), r))]);
      cls.coset_action.push_back(std::move(p));
    }
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
    if (a.representative.order() != b.representative.order())
      return a.representative.order() < b.representative.order();
    return a.representative < b.representative;
  });
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (const Subgroup& s : classes[c].conjugates) table.class_of_subgroup.emplace(s.elements, static_cast<int>(c));
  table.classes = std::move(classes);
  return table;
}

// A subgroup H of G realized as a permutation group in its own right, on the
// same points. Generators are picked greedily from the sorted element list.
inline GroupPtr subgroup_as_group(const FiniteGroup& g, const Subgroup& h, std::string name = {}) {
  require_subgroup(g, h);
  std::vector<int> gens;
  Subgroup span = trivial_subgroup();
  for (int e : h.elements) {
    if (span.contains(e)) continue;
    gens.push_back(e);
    span = generated_subgroup(g, gens);
  }
  std::vector<Perm> perms;
  for (int e : gens) perms.push_back(g.element(e));
  return FiniteGroup::make(g.degree(), std::move(perms), std::move(name));
}

// Quotient D/N of a subgroup D of G by a normal subgroup N of D, realized as
// D acting on the left cosets of N by left multiplication.
struct QuotientMap {
  GroupPtr group;
  std::vector<int> domain;   // G-indices of the elements of D, sorted
  std::vector<int> image;    // image[i] = quotient index of domain[i]
  std::vector<int> section;  // quotient index -> minimal G-index in its coset

  int project(int g_index) const {
    auto it = std::lower_bound(domain.begin(), domain.end(), g_index);
    if (it == domain.end() || *it != g_index) throw InputError("element outside the domain of the quotient map");
    return image[static_cast<std::size_t>(it - domain.begin())];
  }
  // Elements of D mapping to the identity.
  Subgroup kernel() const {
    Subgroup k;
    for (std::size_t i = 0; i < domain.size(); ++i)
      if (image[i] == 0) k.elements.push_back(domain[i]);
    return k;
  }
};

inline QuotientMap quotient_of_subgroup(const FiniteGroup& g, const Subgroup& d, const Subgroup& n) {
  require_subgroup(g, d);
  require_subgroup(g, n);
  if (!is_contained(n, d)) throw InputError("quotient: normal subgroup must lie in the domain");
  for (int x : d.elements)
    if (conjugate_subgroup(g, x, n) != n) throw InputError("quotient: subgroup is not normal");

  // Left cosets xN, ordered by their minimal element.
  std::vector<std::vector<int>> cosets;
  std::map<int, int> coset_of;
  for (int x : d.elements) {
    if (coset_of.count(x)) continue;
    std::vector<int> c;
    for (int e : n.elements) c.push_back(g.mul(x, e));
    std::sort(c.begin(), c.end());
    for (int e : c) coset_of[e] = static_cast<int>(cosets.size());
    cosets.push_back(std::move(c));
  }
  const int deg = static_cast<int>(cosets.size());
  auto action_of = [&](int x) {
    Perm p(static_cast<std::size_t>(deg));
    for (int c = 0; c < deg; ++c) p[static_cast<std::size_t>(c)] = coset_of.at(g.mul(x, cosets[static_cast<std::size_t>(c)].front()));
    return p;
  };
  // Generators: images of a generating set of D.
  std::vector<int> dgens;
  Subgroup span = trivial_subgroup();
  for (int e : d.elements) {
    if (span.contains(e)) continue;
    dgens.push_back(e);
    span = generated_subgroup(g, dgens);
  }
  std::vector<Perm> qgens;
  for (int e : dgens) {
    Perm p = action_of(e);
    if (p != identity_perm(deg)) qgens.push_back(std::move(p));
  }
  QuotientMap q;
  q.group = FiniteGroup::make(deg, std::move(qgens));
  q.domain = d.elements;
  q.section.assign(q.group->order(), -1);
  for (int x : d.elements) {
    int qi = q.group->index_of(action_of(x));
    q.image.push_back(qi);
    if (q.section[static_cast<std::size_t>(qi)] < 0) q.section[static_cast<std::size_t>(qi)] = x;
  }
  return q;
}

// G/N for N normal in G.
inline QuotientMap quotient_group(const FiniteGroup& g, const Subgroup& n) { return quotient_of_subgroup(g, whole_group(g), n); }

// N_G(H)/H with its projection from the normalizer.
inline QuotientMap weyl_group(const FiniteGroup& g, const Subgroup& h) {
  require_subgroup(g, h);
  return quotient_of_subgroup(g, normalizer(g, h), h);
}

// Double coset representatives for H \ G / K: the minimal element of each HgK.
inline std::vector<int> double_cosets(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
  require_subgroup(g, h);
  require_subgroup(g, k);
  std::vector<char> seen(g.order(), 0);
  std::vector<int> reps;
  for (int x = 0; x < static_cast<int>(g.order()); ++x) {
    if (seen[static_cast<std::size_t>(x)]) continue;
    reps.push_back(x);
    for (int a : h.elements)
      for (int b : k.elements) seen[static_cast<std::size_t>(g.mul(g.mul(a, x), b))] = 1;
  }
  return reps;
}

inline std::vector<int> double_coset(const FiniteGroup& g, const Subgroup& h, int x, const Subgroup& k) {
  std::vector<int> r;
  for (int a : h.elements)
    for (int b : k.elements) r.push_back(g.mul(g.mul(a, x), b));
  std::sort(r.begin(), r.end());
  r.erase(std::unique(r.begin(), r.end()), r.end());
  return r;
}

// Is phi (indexed by elements of a) a homomorphism into b?
inline bool is_homomorphism(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& phi) {
  if (phi.size() != a.order()) return false;
  for (int x = 0; x < static_cast<int>(a.order()); ++x)
    for (int y = 0; y < static_cast<int>(a.order()); ++y)
      if (phi[static_cast<std::size_t>(a.mul(x, y))] != b.mul(phi[static_cast<std::size_t>(x)], phi[static_cast<std::size_t>(y)])) return false;
  return true;
}

}  // namespace burnside

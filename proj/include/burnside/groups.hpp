#pragma once

// Standard small groups as permutation groups.

#include <string>
#include <vector>

#include "burnside/group.hpp"

namespace burnside::groups {

inline GroupPtr trivial() { return FiniteGroup::make(1, {}, "1"); }

inline GroupPtr cyclic(int n) {
  Perm r(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) r[static_cast<std::size_t>(i)] = (i + 1) % n;
  return FiniteGroup::make(n, {r}, "C" + std::to_string(n));
}

// Symmetric group on n points, generated by a transposition and an n-cycle.
inline GroupPtr symmetric(int n) {
  if (n <= 1) return FiniteGroup::make(1, {}, "S1");
  Perm t = identity_perm(n);
  std::swap(t[0], t[1]);
  Perm c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = (i + 1) % n;
  return FiniteGroup::make(n, {t, c}, "S" + std::to_string(n));
}

// Dihedral group of order 2n acting on the vertices of an n-gon.
inline GroupPtr dihedral(int n) {
  Perm r(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    r[static_cast<std::size_t>(i)] = (i + 1) % n;
    s[static_cast<std::size_t>(i)] = (n - i) % n;
  }
  return FiniteGroup::make(n, {r, s}, "D" + std::to_string(2 * n));
}

inline GroupPtr klein_four() { return FiniteGroup::make(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, "C2xC2"); }

// Quaternion group in its left regular representation. Points 0..7 stand
// for 1, -1, i, -i, j, -j, k, -k.
inline GroupPtr quaternion() {
  // unit index u in {0:1, 1:i, 2:j, 3:k}, sign bit; point = 2*u + sign.
  static constexpr int table[4][4][2] = {
      // 1*x
      {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
      // i*x: i*1=i, i*i=-1, i*j=k, i*k=-j
      {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
      // j*x: j*1=j, j*i=-k, j*j=-1, j*k=i
      {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
      // k*x: k*1=k, k*i=j, k*j=-i, k*k=-1
      {{3, 0}, {2, 0}, {1, 1}, {0, 1}},
  };
  auto left_mult = [&](int u) {
    Perm p(8);
    for (int v = 0; v < 4; ++v)
      for (int sign = 0; sign < 2; ++sign) {
        int w = table[u][v][0];
        int s = table[u][v][1] ^ sign;
        p[static_cast<std::size_t>(2 * v + sign)] = 2 * w + s;
      }
    return p;
  };
  return FiniteGroup::make(8, {left_mult(1), left_mult(2)}, "Q8");
}

// Direct product acting on the disjoint union of the two point sets.
inline GroupPtr direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  std::vector<Perm> gens;
  const int da = a.degree(), db = b.degree();
  for (const Perm& p : a.generators()) {
    Perm q = identity_perm(da + db);
    for (int x = 0; x < da; ++x) q[static_cast<std::size_t>(x)] = p[static_cast<std::size_t>(x)];
    gens.push_back(q);
  }
  for (const Perm& p : b.generators()) {
    Perm q = identity_perm(da + db);
    for (int x = 0; x < db; ++x) q[static_cast<std::size_t>(da + x)] = da + p[static_cast<std::size_t>(x)];
    gens.push_back(q);
  }
  return FiniteGroup::make(da + db, std::move(gens), a.name() + "x" + b.name());
}

// The groups every acceptance check runs over.
inline std::vector<GroupPtr> corpus() {
  return {cyclic(2), cyclic(3), cyclic(4), klein_four(), symmetric(3), dihedral(4), quaternion()};
}

}  // namespace burnside::groups

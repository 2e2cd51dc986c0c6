#pragma once

// Integral homology of simplicial sets from the normalized chain complex
// (nondegenerate simplices, alternating face sums with degenerate faces
// dropped). Invariant factors come from a sparse elimination on unit pivots
// followed by a dense Smith normal form of whatever is left.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "burnside/errors.hpp"
#include "burnside/integer_matrix.hpp"
#include "burnside/simplicial.hpp"

namespace burnside {

// Sparse integer matrix, row-major.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::map<std::size_t, long long>> entries;

  SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r) {}

  void add(std::size_t r, std::size_t c, long long v) {
    if (v == 0) return;
    long long& e = entries[r][c];
    e += v;
    if (e == 0) entries[r].erase(c);
  }

  BigMatrix dense() const {
    BigMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (auto [c, v] : entries[r]) m(r, c) = BigInt(v);
    return m;
  }

  bool is_zero() const {
    for (const auto& row : entries)
      if (!row.empty()) return false;
    return true;
  }
};

// Product a * b of sparse matrices (exact, via BigInt accumulation).
inline bool product_is_zero(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows) throw ContractError("product of incompatible matrices");
  for (std::size_t r = 0; r < a.rows; ++r) {
    std::map<std::size_t, BigInt> acc;
    for (auto [k, v] : a.entries[r])
      for (auto [c, w] : b.entries[k]) acc[c] += BigInt(v) * BigInt(w);
    for (const auto& [c, v] : acc)
      if (v != 0) return false;
  }
  return true;
}

// Nonzero invariant factors, in no particular order.
inline std::vector<BigInt> sparse_invariant_factors(SparseMatrix m) {
  std::vector<std::set<std::size_t>> col_rows(m.cols);
  for (std::size_t r = 0; r < m.rows; ++r)
    for (auto [c, v] : m.entries[r]) col_rows[c].insert(r);
  std::vector<BigInt> out;
  std::vector<char> alive(m.rows, 1);
  bool overflow = false;
  auto checked = [&overflow](long long a, long long b, long long k) {
    long long p = 0, s = 0;
    if (__builtin_mul_overflow(b, k, &p) || __builtin_sub_overflow(a, p, &s)) overflow = true;
    return s;
  };
  bool progress = true;
  while (progress && !overflow) {
    progress = false;
    for (std::size_t r = 0; r < m.rows && !overflow; ++r) {
      if (!alive[r] || m.entries[r].empty()) continue;
      // A unit pivot in the sparsest column.
      std::size_t pc = m.cols;
      for (auto [c, v] : m.entries[r])
        if ((v == 1 || v == -1) && (pc == m.cols || col_rows[c].size() < col_rows[pc].size())) pc = c;
      if (pc == m.cols) continue;
      const long long p = m.entries[r].at(pc);
      std::vector<std::size_t> others(col_rows[pc].begin(), col_rows[pc].end());
      const auto pivot_row = m.entries[r];
      for (std::size_t o : others) {
        if (o == r) continue;
        const long long k = m.entries[o].at(pc) * p;  // p = ±1, so a/p = a*p
        std::map<std::size_t, long long> row = m.entries[o];
        for (auto [c, v] : pivot_row) {
          long long nv = checked(row.count(c) ? row[c] : 0, v, k);
          if (nv == 0)
            row.erase(c);
          else
            row[c] = nv;
        }
        // On overflow keep the (still equivalent) matrix and finish densely.
        if (overflow) break;
        for (auto [c, v] : m.entries[o]) col_rows[c].erase(o);
        for (auto [c, v] : row) col_rows[c].insert(o);
        m.entries[o] = std::move(row);
      }
      if (overflow) break;
      for (auto [c, v] : pivot_row) col_rows[c].erase(r);
      m.entries[r].clear();
      alive[r] = 0;
      out.push_back(1);
      progress = true;
    }
  }
  // Dense Smith form of the remainder.
  std::vector<std::size_t> rows, cols;
  for (std::size_t r = 0; r < m.rows; ++r)
    if (!m.entries[r].empty()) rows.push_back(r);
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!col_rows[c].empty()) cols.push_back(c);
  if (!rows.empty()) {
    std::map<std::size_t, std::size_t> cpos;
    for (std::size_t i = 0; i < cols.size(); ++i) cpos[cols[i]] = i;
    BigMatrix d(rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (auto [c, v] : m.entries[rows[i]]) d(i, cpos.at(c)) = BigInt(v);
    for (const BigInt& f : invariant_factors(d)) out.push_back(f);
  }
  return out;
}

// Normalized chains of X in degrees 0..top. boundary[n]: C_n -> C_{n-1};
// in the reduced complex boundary[0] is the augmentation C_0 -> Z.
struct ChainComplexZ {
  std::vector<std::size_t> ranks;
  std::vector<SparseMatrix> boundary;
  bool reduced = false;

  bool squares_to_zero() const {
    for (std::size_t n = 1; n < boundary.size(); ++n)
      if (boundary[n - 1].cols == boundary[n].rows && !product_is_zero(boundary[n - 1], boundary[n])) return false;
    return true;
  }
};

inline ChainComplexZ chain_complex(const SimplicialSet& x, int top, bool reduced) {
  if (!x.materialized_through(top)) throw ResourceError("chains up to degree " + std::to_string(top) + " need a larger materialization");
  ChainComplexZ cc;
  cc.reduced = reduced;
  for (int n = 0; n <= top; ++n) cc.ranks.push_back(x.count(n));
  for (int n = 0; n <= top; ++n) {
    if (n == 0) {
      SparseMatrix aug(reduced ? 1 : 0, cc.ranks[0]);
      if (reduced)
        for (std::size_t i = 0; i < cc.ranks[0]; ++i) aug.add(0, i, 1);
      cc.boundary.push_back(std::move(aug));
      continue;
    }
    SparseMatrix d(cc.ranks[static_cast<std::size_t>(n - 1)], cc.ranks[static_cast<std::size_t>(n)]);
    for (std::size_t id = 0; id < cc.ranks[static_cast<std::size_t>(n)]; ++id)
      for (int i = 0; i <= n; ++i) {
        const NSimplex& f = x.face(n, static_cast<int>(id), i);
        if (f.is_degenerate()) continue;
        d.add(static_cast<std::size_t>(f.id), id, (i % 2 == 0) ? 1 : -1);
      }
    cc.boundary.push_back(std::move(d));
  }
  return cc;
}

struct HomologyGroup {
  long long rank = 0;
  std::vector<BigInt> torsion;
  bool is_trivial() const { return rank == 0 && torsion.empty(); }
  std::string describe() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank > 0) {
      os << "Z";
      if (rank > 1) os << "^" << rank;
      first = false;
    }
    for (const BigInt& t : torsion) {
      os << (first ? "" : " + ") << "Z/" << t;
      first = false;
    }
    return os.str();
  }
};

// H_0..H_{max_degree}; needs X through max_degree + 1.
inline std::vector<HomologyGroup> homology(const SimplicialSet& x, int max_degree, bool reduced) {
  ChainComplexZ cc = chain_complex(x, max_degree + 1, reduced);
  if (!cc.squares_to_zero()) throw ContractError("boundary does not square to zero");
  std::vector<std::vector<BigInt>> inv;
  for (const SparseMatrix& d : cc.boundary) inv.push_back(sparse_invariant_factors(d));
  std::vector<HomologyGroup> out;
  for (int n = 0; n <= max_degree; ++n) {
    HomologyGroup h;
    const auto& in = inv[static_cast<std::size_t>(n)];
    const auto& next = inv[static_cast<std::size_t>(n + 1)];
    h.rank = static_cast<long long>(cc.ranks[static_cast<std::size_t>(n)]) - static_cast<long long>(in.size()) -
             static_cast<long long>(next.size());
    for (const BigInt& f : next) {
      BigInt a = f < 0 ? BigInt(-f) : f;
      if (a > 1) h.torsion.push_back(a);
    }
    std::sort(h.torsion.begin(), h.torsion.end());
    out.push_back(std::move(h));
  }
  return out;
}

inline std::vector<HomologyGroup> reduced_homology(const SimplicialSet& x, int max_degree) { return homology(x, max_degree, true); }

}  // namespace burnside

#pragma once

// Combinatorics of completely factored simplices in the opposite of the
// twisted arrow poset of [m]: walks, juts, crossings, essential vertices,
// the intersections with the filtration P_N(k), generalized horns and
// their decomposition into inner horn fillings.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burnside/errors.hpp"

namespace burnside::horn {

inline constexpr int kMaxDimension = 20;

// A simplicial subset of Δ^m given by its maximal faces, each a bitmask of vertices.
using FaceSet = std::vector<std::uint32_t>;

inline std::vector<int> mask_vertices(std::uint32_t mask) {
  std::vector<int> v;
  for (int i = 0; mask >> i; ++i)
    if (mask & (1u << i)) v.push_back(i);
  return v;
}

inline std::uint32_t vertices_mask(const std::vector<int>& v) {
  std::uint32_t m = 0;
  for (int i : v) m |= 1u << i;
  return m;
}

inline std::uint32_t full_mask(int m) { return (m + 1 >= 32) ? 0xffffffffu : ((1u << (m + 1)) - 1); }

// Keeps the faces not contained in another; sorted, no duplicates, empty faces dropped.
inline FaceSet maximal_antichain(std::vector<std::uint32_t> faces) {
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  FaceSet out;
  for (std::uint32_t f : faces) {
    if (f == 0) continue;
    bool covered = false;
    for (std::uint32_t g : faces)
      if (g != f && (f & g) == f) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(f);
  }
  return out;
}

inline void require_dimension(int m) {
  if (m < 1 || m > kMaxDimension) throw InputError("dimension m must lie in [1, " + std::to_string(kMaxDimension) + "]");
}

inline void require_index(int m, std::int64_t n) {
  if (n < 0 || n >= (std::int64_t{1} << m)) throw InputError("N must lie in [0, 2^m)");
}

// ---------------------------------------------------------------------------
// Walks

struct Walk {
  int m = 0;
  std::int64_t n = 0;
  std::vector<int> digits;                   // d_1..d_m, most significant first
  std::vector<std::pair<int, int>> vertices;  // (i_r, j_r) for r = 0..m

  int d(int s) const { return digits[static_cast<std::size_t>(s - 1)]; }
  int i(int r) const { return vertices[static_cast<std::size_t>(r)].first; }
  int j(int r) const { return vertices[static_cast<std::size_t>(r)].second; }
};

inline Walk walk(int m, std::int64_t n) {
  require_dimension(m);
  require_index(m, n);
  Walk w;
  w.m = m;
  w.n = n;
  for (int s = 1; s <= m; ++s) w.digits.push_back(static_cast<int>((n >> (m - s)) & 1));
  int sum = 0;
  w.vertices.emplace_back(0, m);
  for (int r = 1; r <= m; ++r) {
    sum += w.d(r);
    w.vertices.emplace_back(sum, (m - r) + sum);
  }
  return w;
}

inline bool is_completely_factored(const Walk& w) {
  if (w.i(0) != 0 || w.j(0) != w.m) return false;
  for (int r = 1; r <= w.m; ++r)
    if (w.i(r) - w.i(r - 1) + w.j(r - 1) - w.j(r) != 1) return false;
  return true;
}

// z in 1..m with d_z = 1 and (d_{z+1} = 0 or z = m).
inline std::vector<int> juts(int m, std::int64_t n) {
  Walk w = walk(m, n);
  std::vector<int> z;
  for (int s = 1; s <= m; ++s)
    if (w.d(s) == 1 && (s == m || w.d(s + 1) == 0)) z.push_back(s);
  return z;
}

// Crossings away from k, transcribed case by case.
inline std::vector<int> crossings(int m, std::int64_t n, int k) {
  if (k < 0 || k >= m) throw InputError("crossings need 0 <= k < m");
  Walk w = walk(m, n);
  std::vector<int> x;
  for (int c = 0; c < m; ++c) {
    bool hit = false;
    if (c == 0) {
      hit = w.d(1) == 0 || k != 0;
    } else if (w.d(c) == 1 && w.d(c + 1) == 1) {
      hit = w.i(c) != k;
    } else if (w.d(c) == 0 && w.d(c + 1) == 0) {
      hit = w.j(c) != k;
    }
    if (hit) x.push_back(c);
  }
  return x;
}

struct VertexSets {
  std::vector<int> juts;
  std::vector<int> crossings;
  std::vector<int> essential;
};

inline VertexSets essential_vertices(int m, std::int64_t n, int k) {
  VertexSets v;
  v.juts = juts(m, n);
  v.crossings = crossings(m, n, k);
  std::uint32_t taken = vertices_mask(v.juts) | vertices_mask(v.crossings);
  for (int s = 0; s <= m; ++s)
    if (!(taken & (1u << s))) v.essential.push_back(s);
  return v;
}

// ---------------------------------------------------------------------------
// Generalized horns

inline void require_proper_subset(int m, const std::vector<int>& s) {
  if (s.empty()) throw InputError("vertex set S must be nonempty");
  for (int v : s)
    if (v < 0 || v > m) throw InputError("vertex of S out of range");
  if (vertices_mask(s) == full_mask(m)) throw InputError("vertex set S must be a proper subset of {0..m}");
}

// Λ^m_S = union of the faces Δ^{ĵ} for j not in S.
inline FaceSet generalized_horn_faces(int m, const std::vector<int>& s) {
  require_proper_subset(m, s);
  std::uint32_t sm = vertices_mask(s);
  std::vector<std::uint32_t> faces;
  for (int j = 0; j <= m; ++j)
    if (!(sm & (1u << j))) faces.push_back(full_mask(m) & ~(1u << j));
  return maximal_antichain(std::move(faces));
}

// The S with faces = Λ^m_S, if the face set is a generalized horn.
inline std::optional<std::vector<int>> as_generalized_horn(int m, const FaceSet& faces) {
  if (faces.empty()) return std::nullopt;
  std::uint32_t missing = 0;
  for (std::uint32_t f : faces) {
    std::uint32_t c = full_mask(m) & ~f;
    if (std::popcount(c) != 1) return std::nullopt;
    missing |= c;
  }
  std::vector<int> s;
  for (int v = 0; v <= m; ++v)
    if (!(missing & (1u << v))) s.push_back(v);
  if (s.empty()) return std::nullopt;
  return s;
}

// ---------------------------------------------------------------------------
// The intersection σ(N) ∩ P_N(k), from vertex geometry alone

// Positions r of σ(N) whose vertex lies in each of the generating pieces of
// P_N(k): the simplices σ(K) for K < N, and the subdivided faces Õ(Δ^{ĵ})^op
// for j != k. Intersections of simplices of a poset nerve are the faces on
// the shared vertices. Accepts k = m.
inline FaceSet intersection_oracle(int m, std::int64_t n, int k) {
  require_dimension(m);
  require_index(m, n);
  if (k < 0 || k > m) throw InputError("intersection oracle needs 0 <= k <= m");
  const int side = m + 1;
  auto vertex_id = [side](int i, int j) { return i * side + j; };
  // Vertices of σ(N) and the membership table of every earlier σ(K).
  Walk target = walk(m, n);
  std::vector<int> ids;
  for (int r = 0; r <= m; ++r) ids.push_back(vertex_id(target.i(r), target.j(r)));
  std::vector<std::uint32_t> faces;
  std::vector<char> on(static_cast<std::size_t>(side * side), 0);
  for (std::int64_t kk = 0; kk < n; ++kk) {
    std::int64_t sum = 0;
    std::fill(on.begin(), on.end(), 0);
    on[static_cast<std::size_t>(vertex_id(0, m))] = 1;
    for (int r = 1; r <= m; ++r) {
      sum += (kk >> (m - r)) & 1;
      on[static_cast<std::size_t>(vertex_id(static_cast<int>(sum), (m - r) + static_cast<int>(sum)))] = 1;
    }
    std::uint32_t f = 0;
    for (int r = 0; r <= m; ++r)
      if (on[static_cast<std::size_t>(ids[static_cast<std::size_t>(r)])]) f |= 1u << r;
    faces.push_back(f);
  }
  for (int j = 0; j <= m; ++j) {
    if (j == k) continue;
    std::uint32_t f = 0;
    for (int r = 0; r <= m; ++r)
      if (target.i(r) != j && target.j(r) != j) f |= 1u << r;
    faces.push_back(f);
  }
  return maximal_antichain(std::move(faces));
}

// ---------------------------------------------------------------------------
// Condition (*) and inner anodyne decompositions

// There are a < s < b in T with s in S and a, b not in S.
inline bool is_condition_star(const std::vector<int>& t, const std::vector<int>& s) {
  std::uint32_t sm = vertices_mask(s);
  bool outside_below = false;
  std::optional<int> witness;
  for (int v : t) {
    bool in = (sm >> v) & 1u;
    if (!in) {
      if (witness) return true;
      outside_below = true;
    } else if (outside_below) {
      witness = v;
    }
  }
  return false;
}

inline bool is_condition_star(int m, const std::vector<int>& s) {
  require_dimension(m);
  require_proper_subset(m, s);
  std::vector<int> t;
  for (int v = 0; v <= m; ++v) t.push_back(v);
  return is_condition_star(t, s);
}

// Fill the simplex on `simplex` along its inner horn at position `horn`.
struct FillStep {
  std::vector<int> simplex;
  int horn = 0;
  bool operator==(const FillStep&) const = default;
};

struct AnodyneDecomposition {
  int m = 0;
  std::vector<int> s;
  std::vector<FillStep> steps;
  bool verified = false;
};

namespace detail {

inline void decompose(const std::vector<int>& t, std::vector<int> s, std::vector<FillStep>& out) {
  std::sort(s.begin(), s.end());
  if (s.size() == 1) {
    auto pos = std::find(t.begin(), t.end(), s.front()) - t.begin();
    out.push_back({t, static_cast<int>(pos)});
    return;
  }
  int pick;
  if (s.front() == t.front())
    pick = t.front();
  else if (s.back() == t.back())
    pick = t.back();
  else
    pick = s.front();
  std::vector<int> t2, s2;
  for (int v : t)
    if (v != pick) t2.push_back(v);
  for (int v : s)
    if (v != pick) s2.push_back(v);
  // Λ^T_S -> Λ^T_{S-s} is a pushout of Λ^{T-s}_{S-s} -> Δ^{T-s}.
  decompose(t2, s2, out);
  decompose(t, s2, out);
}

}  // namespace detail

// Replays the fillings from Λ^m_S; true when every step fills an inner horn
// already present and the result is all of Δ^m.
inline bool replay_decomposition(int m, const std::vector<int>& s, const std::vector<FillStep>& steps) {
  const std::uint32_t full = full_mask(m);
  std::vector<char> present(static_cast<std::size_t>(full) + 1, 0);
  std::uint32_t sm = vertices_mask(s);
  for (std::uint32_t f = 1; f <= full; ++f) {
    for (int j = 0; j <= m; ++j)
      if (!(sm & (1u << j)) && !(f & (1u << j))) {
        present[f] = 1;
        break;
      }
  }
  for (const FillStep& st : steps) {
    const int n = static_cast<int>(st.simplex.size()) - 1;
    if (st.horn <= 0 || st.horn >= n) return false;
    std::uint32_t v = vertices_mask(st.simplex);
    if (std::popcount(v) != n + 1) return false;
    std::uint32_t missing_face = v & ~(1u << st.simplex[static_cast<std::size_t>(st.horn)]);
    if (present[v] || present[missing_face]) return false;
    for (int p = 0; p <= n; ++p) {
      if (p == st.horn) continue;
      if (!present[v & ~(1u << st.simplex[static_cast<std::size_t>(p)])] && n > 0) return false;
    }
    present[v] = 1;
    present[missing_face] = 1;
  }
  for (std::uint32_t f = 1; f <= full; ++f)
    if (!present[f]) return false;
  return true;
}

// Saturating search: fill any inner horn already present until nothing
// changes; true when Δ^m is reached. Independent of the decomposer.
inline bool inner_horn_saturates(int m, const std::vector<int>& s) {
  require_dimension(m);
  require_proper_subset(m, s);
  const std::uint32_t full = full_mask(m);
  std::vector<char> present(static_cast<std::size_t>(full) + 1, 0);
  std::uint32_t sm = vertices_mask(s);
  for (std::uint32_t f = 1; f <= full; ++f)
    for (int j = 0; j <= m; ++j)
      if (!(sm & (1u << j)) && !(f & (1u << j))) present[f] = 1;
  bool changed = true;
  while (changed && !present[full]) {
    changed = false;
    for (std::uint32_t v = 1; v <= full; ++v) {
      if (present[v] || std::popcount(v) < 3) continue;
      auto verts = mask_vertices(v);
      const int n = static_cast<int>(verts.size()) - 1;
      for (int k = 1; k < n && !present[v]; ++k) {
        std::uint32_t missing = v & ~(1u << verts[static_cast<std::size_t>(k)]);
        if (present[missing]) continue;
        bool horn = true;
        for (int p = 0; p <= n && horn; ++p)
          if (p != k) horn = present[v & ~(1u << verts[static_cast<std::size_t>(p)])];
        if (horn) {
          present[v] = present[missing] = 1;
          changed = true;
        }
      }
    }
  }
  return present[full];
}

inline AnodyneDecomposition anodyne_decomposition(int m, const std::vector<int>& s) {
  if (!is_condition_star(m, s)) throw ContractError("Λ^m_S satisfies no condition (*); no inner anodyne decomposition is produced");
  AnodyneDecomposition d;
  d.m = m;
  d.s = s;
  std::sort(d.s.begin(), d.s.end());
  std::vector<int> t;
  for (int v = 0; v <= m; ++v) t.push_back(v);
  detail::decompose(t, d.s, d.steps);
  d.verified = replay_decomposition(m, d.s, d.steps);
  if (!d.verified) throw ContractError("inner anodyne decomposition failed to replay");
  return d;
}

// ---------------------------------------------------------------------------
// Exceptional cases

struct ExceptionalCase {
  std::int64_t n = 0;
  std::vector<int> essential;
  bool operator==(const ExceptionalCase&) const = default;
};

// N_t has digits 1 in the first t places and 0 after.
inline std::int64_t n_t(int m, int t) { return ((std::int64_t{1} << t) - 1) << (m - t); }

// All N whose essential vertex set fails condition (*).
inline std::vector<ExceptionalCase> exceptional_cases(int m, int k) {
  require_dimension(m);
  if (k < 0 || k >= m) throw InputError("exceptional cases need 0 <= k < m");
  std::vector<ExceptionalCase> out;
  std::vector<int> t;
  for (int v = 0; v <= m; ++v) t.push_back(v);
  for (std::int64_t n = 0; n < (std::int64_t{1} << m); ++n) {
    auto e = essential_vertices(m, n, k).essential;
    if (!is_condition_star(t, e)) out.push_back({n, e});
  }
  return out;
}

// The classification table: two cases for k != 0, m + 1 for k = 0.
inline std::vector<ExceptionalCase> expected_exceptional_cases(int m, int k) {
  std::vector<ExceptionalCase> out;
  if (k != 0) {
    out.push_back({n_t(m, k - 1), {m - 1, m}});
    out.push_back({n_t(m, k), {m}});
  } else {
    out.push_back({0, {m}});
    for (int t = 1; t < m; ++t) out.push_back({n_t(m, t), {0, m}});
    out.push_back({(std::int64_t{1} << m) - 1, {0}});
  }
  std::sort(out.begin(), out.end(), [](const ExceptionalCase& a, const ExceptionalCase& b) { return a.n < b.n; });
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

struct ClassificationMismatch {
  int m = 0;
  int k = 0;
  std::int64_t n = 0;
  FaceSet oracle;
  FaceSet formula;
};

// Compares the oracle with Λ^m_{E(N,k)} at one N.
inline std::optional<ClassificationMismatch> classification_mismatch(int m, int k, std::int64_t n) {
  FaceSet oracle = intersection_oracle(m, n, k);
  auto e = essential_vertices(m, n, k).essential;
  FaceSet formula;
  if (e.empty()) {
    std::vector<std::uint32_t> all;
    for (int j = 0; j <= m; ++j) all.push_back(full_mask(m) & ~(1u << j));
    formula = maximal_antichain(all);
  } else if (static_cast<int>(e.size()) <= m) {
    formula = generalized_horn_faces(m, e);
  }
  if (oracle == formula) return std::nullopt;
  return ClassificationMismatch{m, k, n, oracle, formula};
}

inline std::vector<ClassificationMismatch> classification_mismatches(int m, int k) {
  std::vector<ClassificationMismatch> bad;
  for (std::int64_t n = 0; n < (std::int64_t{1} << m); ++n)
    if (auto b = classification_mismatch(m, k, n)) bad.push_back(*b);
  return bad;
}

struct WarningCase {
  FaceSet faces;
  FaceSet expected;       // Δ^{3̂} ∪ Δ^{5̂} ∪ Δ^{{2,3,4,5}}
  bool contains_expected = false;
  FaceSet additional;     // maximal faces beyond the expected ones
  bool is_generalized_horn = false;
};

inline WarningCase warning_case(int m = 5, std::int64_t n = 13) {
  WarningCase w;
  w.faces = intersection_oracle(m, n, m);
  w.expected = maximal_antichain({full_mask(m) & ~(1u << 3), full_mask(m) & ~(1u << 5), vertices_mask({2, 3, 4, 5})});
  w.contains_expected = true;
  for (std::uint32_t f : w.expected) {
    bool inside = false;
    for (std::uint32_t g : w.faces) inside = inside || (f & g) == f;
    w.contains_expected = w.contains_expected && inside;
  }
  for (std::uint32_t g : w.faces)
    if (std::find(w.expected.begin(), w.expected.end(), g) == w.expected.end()) w.additional.push_back(g);
  w.is_generalized_horn = as_generalized_horn(m, w.faces).has_value();
  return w;
}

inline std::string face_label(std::uint32_t face, int m) {
  std::uint32_t c = full_mask(m) & ~face;
  if (std::popcount(c) == 1) return "hat" + std::to_string(std::countr_zero(c));
  std::string s = "{";
  bool first = true;
  for (int v : mask_vertices(face)) {
    if (!first) s += ",";
    s += std::to_string(v);
    first = false;
  }
  return s + "}";
}

}  // namespace burnside::horn

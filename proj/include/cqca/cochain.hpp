#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "matrix.hpp"

namespace cqca {

struct invalid_cup_spec : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A cell of the unit D-cube: one slot per coordinate, each '0', '1' or '*' (free).
struct cell_label {
  std::string slots;

  cell_label() = default;
  explicit cell_label(std::string s) : slots(std::move(s)) {
    for (char c : slots)
      if (c != '0' && c != '1' && c != '*') throw std::invalid_argument("bad cell slot '" + std::string(1, c) + "'");
  }
  static cell_label top(int D) { return cell_label(std::string(static_cast<std::size_t>(D), '*')); }

  int dim() const { return static_cast<int>(slots.size()); }
  int degree() const { return static_cast<int>(std::count(slots.begin(), slots.end(), '*')); }
  unsigned free_mask() const {
    unsigned m = 0;
    for (int k = 0; k < dim(); ++k)
      if (slots[static_cast<std::size_t>(k)] == '*') m |= 1u << k;
    return m;
  }
  auto operator<=>(const cell_label&) const = default;
};

// Free-coordinate set of a p-cell, as sorted coordinate indices.
using orientation = std::vector<int>;

inline unsigned mask_of(const orientation& s) {
  unsigned m = 0;
  for (int k : s) m |= 1u << k;
  return m;
}

// Cells of each degree are ordered lexicographically by free set; the 3D faces run yz, xz, xy.
inline std::vector<orientation> orientations(int D, int p) {
  std::vector<orientation> out;
  if (p < 0 || p > D) return out;
  std::vector<int> pick(static_cast<std::size_t>(p));
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == p) {
      out.push_back(pick);
      return;
    }
    for (int k = start; k < D; ++k) {
      pick[static_cast<std::size_t>(depth)] = k;
      rec(k + 1, depth + 1);
    }
  };
  rec(0, 0);
  if (D == 3 && p == 2) std::reverse(out.begin(), out.end());
  return out;
}

inline std::size_t orientation_index(int D, int p, unsigned mask) {
  auto os = orientations(D, p);
  for (std::size_t k = 0; k < os.size(); ++k)
    if (mask_of(os[k]) == mask) return k;
  throw std::out_of_range("orientation not found");
}

inline std::string orientation_name(int D, const orientation& s) {
  auto names = variable_names(D);
  if (s.empty()) return "pt";
  std::string out;
  for (int k : s) out += names[static_cast<std::size_t>(k)];
  return out;
}

// Signed boundary of a cell: the l-th free slot set to a contributes (-1)^(l+a).
inline std::vector<std::pair<int, cell_label>> boundary(const cell_label& c) {
  std::vector<std::pair<int, cell_label>> out;
  int l = 0;
  for (std::size_t k = 0; k < c.slots.size(); ++k) {
    if (c.slots[k] != '*') continue;
    ++l;
    for (int a = 0; a < 2; ++a) {
      cell_label f = c;
      f.slots[k] = static_cast<char>('0' + a);
      out.push_back({(l + a) % 2 ? -1 : 1, f});
    }
  }
  return out;
}

inline monomial ones_of(const cell_label& c) {
  monomial m;
  for (std::size_t k = 0; k < c.slots.size(); ++k) m.e[k] = c.slots[k] == '1' ? 1 : 0;
  return m;
}

inline monomial free_of(const cell_label& c) {
  monomial m;
  for (std::size_t k = 0; k < c.slots.size(); ++k) m.e[k] = c.slots[k] == '*' ? 1 : 0;
  return m;
}

// Coboundary p-cells -> (p+1)-cells on the dual-lattice polynomial convention.
// A cell of free set S at lattice point u sits at direct position u - e_S.
inline poly_matrix coboundary_matrix(int D, int p, std::uint32_t d = 2) {
  if (D < 1 || D > max_vars) throw dimension_mismatch("dimension out of range");
  if (p < 0 || p >= D) throw std::out_of_range("coboundary degree out of range: p=" + std::to_string(p));
  auto rows = orientations(D, p + 1), cols = orientations(D, p);
  poly_matrix m = zeros(rows.size(), cols.size(), d, D);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    cell_label a(std::string(static_cast<std::size_t>(D), '0'));
    for (int k : rows[r]) a.slots[static_cast<std::size_t>(k)] = '*';
    const monomial eA = free_of(a);
    for (auto& [s, f] : boundary(a)) {
      std::size_t c = orientation_index(D, p, f.free_mask());
      monomial u = eA * free_of(f).inverse() * ones_of(f).inverse();
      m(r, c) += laurent_poly(d, D, s, u);
    }
  }
  return m;
}

struct cup_spec {
  int D = 3;  // spatial dimension
  int p = 0;  // degree of the right factor
  int i = 0;  // cup level

  int left_degree() const { return D - p + i; }
  bool valid() const {
    return D >= 1 && D <= max_vars && p >= 0 && p <= D && i >= 0 && i <= p && left_degree() <= D;
  }
  void validate() const {
    if (!valid())
      throw invalid_cup_spec("invalid cup spec D=" + std::to_string(D) + " p=" + std::to_string(p) +
                             " i=" + std::to_string(i));
  }
};

struct cup_term {
  int sign;
  cell_label a, b;
};

// Cup-i diagonal of the top D-cell in closed form. Pick i coordinates free in both
// factors; every other coordinate is (0,*) or (*,1) after an even number of picked
// coordinates and (*,0) or (1,*) after an odd number. The sign is (-1)^N, N counting
// coordinate pairs j<k typed (B-only, A-only), (B-only, both) or (both, B-only).
inline std::vector<cup_term> cup_terms(int D, int i) {
  std::vector<cup_term> out;
  if (i < 0 || i > D) return out;
  for (unsigned chosen = 0; chosen < (1u << D); ++chosen) {
    if (std::popcount(chosen) != i) continue;
    std::vector<int> rest;
    for (int k = 0; k < D; ++k)
      if (!(chosen >> k & 1u)) rest.push_back(k);
    for (unsigned bits = 0; bits < (1u << rest.size()); ++bits) {
      std::string a(static_cast<std::size_t>(D), '*'), b = a;
      std::vector<int> type(static_cast<std::size_t>(D), 2);
      for (std::size_t r = 0; r < rest.size(); ++r) {
        int j = rest[r];
        int before = std::popcount(chosen & ((1u << j) - 1u));
        bool pick = bits >> r & 1u;
        auto J = static_cast<std::size_t>(j);
        if (before % 2 == 0) {
          if (!pick) a[J] = '0', type[J] = 1;
          else b[J] = '1', type[J] = 0;
        } else {
          if (!pick) b[J] = '0', type[J] = 0;
          else a[J] = '1', type[J] = 1;
        }
      }
      int n = 0;
      for (int j = 0; j < D; ++j)
        for (int k = j + 1; k < D; ++k) {
          int tj = type[static_cast<std::size_t>(j)], tk = type[static_cast<std::size_t>(k)];
          if ((tj == 1 && tk == 0) || (tj == 1 && tk == 2) || (tj == 2 && tk == 1)) ++n;
        }
      out.push_back({n % 2 ? -1 : 1, cell_label(a), cell_label(b)});
    }
  }
  return out;
}

// Cup matrix for  integral of sigma_{D-p+i} cup_i sigma_p: rows are first-factor cells.
inline poly_matrix cup_matrix(const cup_spec& spec, std::uint32_t d = 2) {
  spec.validate();
  const int D = spec.D;
  auto rows = orientations(D, spec.left_degree()), cols = orientations(D, spec.p);
  poly_matrix m = zeros(rows.size(), cols.size(), d, D);
  for (auto& t : cup_terms(D, spec.i)) {
    if (t.a.degree() != spec.left_degree()) continue;
    std::size_t r = orientation_index(D, spec.left_degree(), t.a.free_mask());
    std::size_t c = orientation_index(D, spec.p, t.b.free_mask());
    monomial u = free_of(t.a) * ones_of(t.a) * free_of(t.b).inverse() * ones_of(t.b).inverse();
    m(r, c) += laurent_poly(d, D, t.sign, u);
  }
  return m;
}

// Shorthand for cup_matrix({D, p, i}) that returns the zero matrix of the right
// shape outside the valid range.
inline poly_matrix cup_matrix_or_zero(int D, int p, int i, std::uint32_t d = 2) {
  cup_spec s{D, p, i};
  if (s.valid()) return cup_matrix(s, d);
  return zeros(orientations(D, D - p + i).size(), orientations(D, p).size(), d, D);
}

inline poly_matrix coboundary_or_zero(int D, int p, std::uint32_t d = 2) {
  if (p >= 0 && p < D) return coboundary_matrix(D, p, d);
  return zeros(orientations(D, p + 1).size(), orientations(D, p).size(), d, D);
}

// ---- brute-force oracle ----

// Recursive cup-i diagonal on an arbitrary cube cell, built as the Koszul tensor
// product of interval diagonals (0,*)+(*,1) and (*,*) and scaled by (-1)^(i(i-1)/2).
namespace detail {

inline int deg(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '*')); }

inline std::vector<std::tuple<int, std::string, std::string>> diag_rec(int i, const std::string& cell) {
  using T = std::tuple<int, std::string, std::string>;
  if (cell.empty()) return i == 0 ? std::vector<T>{{1, "", ""}} : std::vector<T>{};
  const char x = cell[0];
  const std::string rest = cell.substr(1);
  std::map<std::pair<std::string, std::string>, int> acc;
  for (int j = 0; j < 2 && j <= i; ++j) {
    std::vector<T> dx;
    if (j == 0) {
      if (x == '*') dx = {{1, "0", "*"}, {1, "*", "1"}};
      else dx = {{1, std::string(1, x), std::string(1, x)}};
    } else if (x == '*') {
      dx = {{1, "*", "*"}};
    }
    auto dr = diag_rec(i - j, rest);
    if (j == 1)
      for (auto& [s, a, b] : dr) {
        if (deg(a) * deg(b) % 2) s = -s;
        std::swap(a, b);
      }
    const int shift = j * deg(rest) % 2 ? -1 : 1;
    for (auto& [s, a, b] : dx)
      for (auto& [t, c, e] : dr) {
        int sg = s * t * shift * (deg(b) * deg(c) % 2 ? -1 : 1);
        acc[{a + c, b + e}] += sg;
      }
  }
  std::vector<T> out;
  for (auto& [k, v] : acc)
    if (v) out.push_back({v, k.first, k.second});
  return out;
}

}  // namespace detail

inline std::vector<cup_term> cup_diagonal(int i, const cell_label& cell) {
  static std::mutex mu;
  static std::map<std::pair<int, std::string>, std::vector<cup_term>> cache;
  std::lock_guard lock(mu);
  auto key = std::pair{i, cell.slots};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  std::vector<cup_term> out;
  if (i >= 0) {
    const int g = (i * (i - 1) / 2) % 2 ? -1 : 1;
    for (auto& [s, a, b] : detail::diag_rec(i, cell.slots)) out.push_back({g * s, cell_label(a), cell_label(b)});
  }
  return cache[key] = out;
}

// A cell of the lattice: direct (minimal-corner) position and free-coordinate mask.
struct lattice_cell {
  monomial pos;
  unsigned mask = 0;
  auto operator<=>(const lattice_cell&) const = default;
};

struct cochain {
  int degree = 0;
  std::function<long long(const lattice_cell&)> value;
};

inline cochain indicator(int degree, const lattice_cell& at, long long weight = 1) {
  return {degree, [at, weight](const lattice_cell& c) { return c == at ? weight : 0; }};
}

struct cup_value {
  long long value = 0;
  bool degree_mismatch = false;
};

// (a cup_i b) evaluated on the cell with the given label inside the unit cube at base.
inline cup_value cup_eval(const cochain& a, const cochain& b, int i, const monomial& base, const cell_label& cell) {
  if (a.degree + b.degree - i != cell.degree() || i < 0) return {0, true};
  long long tot = 0;
  for (auto& t : cup_diagonal(i, cell)) {
    if (t.a.degree() != a.degree) continue;
    long long va = a.value({base * ones_of(t.a), t.a.free_mask()});
    if (!va) continue;
    long long vb = b.value({base * ones_of(t.b), t.b.free_mask()});
    tot += t.sign * va * vb;
  }
  return {tot, false};
}

// Oracle rebuild of cup_matrix entry (row, col): the coefficient of x^u is the
// cup product of the row cell labelled at u with the column cell labelled at 0,
// summed over every D-cube containing the column cell.
inline laurent_poly cup_entry_oracle(const cup_spec& spec, std::size_t row, std::size_t col, std::uint32_t d = 2) {
  spec.validate();
  const int D = spec.D;
  const orientation SA = orientations(D, spec.left_degree()).at(row);
  const orientation SB = orientations(D, spec.p).at(col);
  monomial eA, eB;
  for (int k : SA) eA.e[static_cast<std::size_t>(k)] = 1;
  for (int k : SB) eB.e[static_cast<std::size_t>(k)] = 1;
  const lattice_cell bcell{eB.inverse(), mask_of(SB)};
  const cochain bco = indicator(spec.p, bcell);
  std::vector<std::pair<monomial, long long>> terms;
  const unsigned fixedB = ((1u << D) - 1u) & ~mask_of(SB);
  for (unsigned w = 0; w < (1u << D); ++w) {
    if (w & ~fixedB) continue;
    monomial t = bcell.pos;
    for (int k = 0; k < D; ++k)
      if (w >> k & 1u) t.e[static_cast<std::size_t>(k)] -= 1;
    const unsigned fixedA = ((1u << D) - 1u) & ~mask_of(SA);
    for (unsigned v = 0; v < (1u << D); ++v) {
      if (v & ~fixedA) continue;
      monomial apos = t;
      for (int k = 0; k < D; ++k)
        if (v >> k & 1u) apos.e[static_cast<std::size_t>(k)] += 1;
      const lattice_cell acell{apos, mask_of(SA)};
      auto r = cup_eval(indicator(spec.left_degree(), acell), bco, spec.i, t, cell_label::top(D));
      if (r.value) terms.push_back({apos * eA, r.value});
    }
  }
  return laurent_poly(d, D, terms);
}

// Cup-i Leibniz identity at matrix level, with q = D-p+i-1:
// dagger(delta_q) M(p,i) + (-1)^q M(p+1,i) delta_p + (-1)^(p+q-i) M(p,i-1) + (-1)^(pq+p+q) dagger(M(q,i-1)) = 0.
inline poly_matrix cup_leibniz_residual(int D, int p, int i, std::uint32_t d = 0) {
  const int q = D - p + i - 1;
  if (d == 0) d = 7;  // any odd modulus keeps every sign visible
  auto sgn = [](int e) { return e % 2 ? -1LL : 1LL; };
  poly_matrix r = dagger(coboundary_or_zero(D, q, d)) * cup_matrix_or_zero(D, p, i, d);
  r += scaled(cup_matrix_or_zero(D, p + 1, i, d) * coboundary_or_zero(D, p, d), sgn(q));
  r += scaled(cup_matrix_or_zero(D, p, i - 1, d), sgn(p + q - i));
  r += scaled(dagger(cup_matrix_or_zero(D, q, i - 1, d)), sgn(p * q + p + q));
  return r;
}

inline bool leibniz_applicable(int D, int p, int i) {
  const int q = D - p + i - 1;
  return D >= 1 && p >= 0 && p <= D && i >= 0 && q >= 0 && q <= D;
}

inline bool verify_cup_leibniz(int D, int p, int i, std::uint32_t d = 0) {
  if (!leibniz_applicable(D, p, i)) return true;
  return cup_leibniz_residual(D, p, i, d).is_zero();
}

}  // namespace cqca

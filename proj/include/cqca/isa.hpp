#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "cochain.hpp"
#include "qca.hpp"
#include "symplectic.hpp"

namespace cqca {

enum class isa_kind { z2, zp };

// Generators A = (I; M) and conjugates Abar = (I; Mbar); H = (A | Abar) with a
// constructive inverse.
struct isa_pair {
  isa_kind kind = isa_kind::z2;
  int l = 1;
  int D = 2;
  std::uint32_t d = 2;
  long long k = 1;
  poly_matrix A, Abar;
  poly_matrix M, Mbar;
  std::optional<poly_matrix> Minv;
  poly_matrix H, Hinv;
  std::size_t q() const { return A.rows() / 2; }
};

// Smallest a with a^2 = -1 mod p, if any.
inline std::optional<long long> sqrt_minus_one(std::uint32_t p) {
  for (long long a = 1; a < p; ++a)
    if ((a * a + 1) % p == 0) return a;
  return std::nullopt;
}

// Lexicographically smallest (a, b) with a^2 + b^2 = -1 mod p.
inline std::pair<long long, long long> two_squares_minus_one(std::uint32_t p) {
  for (long long a = 0; a < p; ++a)
    for (long long b = 0; b < p; ++b)
      if ((a * a + b * b + 1) % p == 0) return {a, b};
  throw invalid_parameters("no solution of a^2 + b^2 = -1 mod " + std::to_string(p));
}

// Inverse of a matrix with exactly one single-term entry in every row and column.
inline poly_matrix monomial_matrix_inverse(const poly_matrix& m) {
  if (m.rows() != m.cols()) throw shape_mismatch("monomial inverse needs a square matrix");
  const auto d = m.zero().modulus();
  const int D = m.zero().dim();
  poly_matrix r = zeros(m.rows(), m.cols(), d, D);
  std::vector<int> seen(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int hits = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      if (!m(i, j).is_monomial() || ++hits > 1 || seen[j]++)
        throw not_invertible("matrix is not a monomial permutation");
      const auto& t = m(i, j).terms()[0];
      r(j, i) = laurent_poly(d, D, mod_inverse(t.c, d), t.m.inverse());
    }
    if (hits != 1) throw not_invertible("matrix is not a monomial permutation");
  }
  return r;
}

// ---- Z_2 pairs in D = 2l: two species on l-cells ----

struct z2_isa_parts {
  int D;
  poly_matrix K;        // M_{c cup c'}
  poly_matrix P, Q;     // delta^dag M_{t cup_1 c} and M_{c cup_1 t} delta
  poly_matrix delta;    // l-cells -> (l+1)-cells
  poly_matrix delta_v;  // (l-1)-cells -> l-cells
  poly_matrix M_tv;     // M_{t cup v}
};

inline z2_isa_parts z2_isa_ingredients(int l) {
  if (l < 1) throw invalid_parameters("ISA degree index must be at least 1");
  const int D = 2 * l;
  z2_isa_parts s{D, cup_matrix({D, l, 0}), {}, {}, coboundary_matrix(D, l), coboundary_matrix(D, l - 1),
                 cup_matrix({D, l - 1, 0})};
  s.P = dagger(s.delta) * cup_matrix({D, l, 1});
  s.Q = cup_matrix({D, l + 1, 1}) * s.delta;
  return s;
}

inline isa_pair build_z2_isa(int l) {
  auto s = z2_isa_ingredients(l);
  const std::size_t n = s.K.rows();
  const int D = s.D;
  poly_matrix Kd = dagger(s.K), z = zeros(n, n, 2, D), one = identity(n, 2, D);
  isa_pair r;
  r.kind = isa_kind::z2;
  r.l = l;
  r.D = D;
  r.M = block_matrix({{Kd + s.P, Kd}, {z, Kd + dagger(s.Q)}});
  r.Mbar = block_matrix({{Kd + dagger(s.Q), z}, {s.K, Kd + s.P}});
  poly_matrix I2 = identity(2 * n, 2, D);
  r.A = vstack({I2, r.M});
  r.Abar = vstack({I2, r.Mbar});
  r.H = hstack({r.A, r.Abar});
  // S = M + Mbar = [[R, K^dag], [K, R]] with K K^dag = 1 and (R K R K^dag)^... = 0 gives
  // S^-1 = J [[1 + BC, B], [C, 1]], J = [[0, K^dag], [K, 0]], B = R K^dag, C = R K.
  poly_matrix R = s.P + dagger(s.Q);
  poly_matrix B = R * Kd, C = R * s.K;
  poly_matrix J = block_matrix({{z, Kd}, {s.K, z}});
  poly_matrix Sinv = J * block_matrix({{one + B * C, B}, {C, one}});
  r.Hinv = block_matrix({{Sinv * r.Mbar, Sinv}, {Sinv * r.M, Sinv}});
  return r;
}

inline isa_pair build_z2_isa_2d() { return build_z2_isa(1); }

// (A^A + Abar^A) delta_{c,v} M^dag_{t cup v}: equals the species-B flux column W^B.
inline poly_matrix z2_flux_from_generators(const isa_pair& r) {
  auto s = z2_isa_ingredients(r.l);
  const std::size_t n = s.K.rows();
  poly_matrix sum = r.A.block(0, 0, r.A.rows(), n) + r.Abar.block(0, 0, r.Abar.rows(), n);
  return sum * s.delta_v * dagger(s.M_tv);
}

inline poly_matrix z2_flux_column(int l) {
  auto s = z2_isa_ingredients(l);
  const std::size_t n = s.K.rows();
  poly_matrix z = zeros(n, s.delta.rows(), 2, s.D);
  return vstack({z, z, z, dagger(s.delta)});
}

// ---- Z_p pairs in D = 4l-2 on (2l-1)-cells ----

struct zp_isa_parts {
  int D;
  poly_matrix K;        // M_{c cup c'}
  poly_matrix delta;    // c -> t
  poly_matrix delta_v;  // v -> c
  poly_matrix M_t1c, M_c1t, M_vt;
};

inline zp_isa_parts zp_isa_ingredients(int l, std::uint32_t p) {
  if (l < 1) throw invalid_parameters("ISA degree index must be at least 1");
  const int D = 4 * l - 2, c = 2 * l - 1;
  return {D,
          cup_matrix({D, c, 0}, p),
          coboundary_matrix(D, c, p),
          coboundary_matrix(D, c - 1, p),
          cup_matrix({D, c, 1}, p),
          cup_matrix({D, c + 1, 1}, p),
          cup_matrix({D, c + 1, 0}, p)};
}

// M = k K + (k/2)((M_{c cup_1 t} delta)^dag - delta^dag M_{t cup_1 c}), and the closed form
// M^-1 = (1/k)[1 - (1/2) delta_{c,v} (M^dag_{v cup t})^-1 (M^dag_{c cup_1 t} - M_{t cup_1 c})] K^-1.
inline isa_pair build_zp_isa(int l, std::uint32_t p, long long k) {
  check_odd_prime_level(p, k);
  auto s = zp_isa_ingredients(l, p);
  const std::size_t n = s.K.rows();
  const int D = s.D;
  const long long half = mod_inverse(2, p), inv_k = mod_inverse(k, p);
  isa_pair r;
  r.kind = isa_kind::zp;
  r.l = l;
  r.D = D;
  r.d = p;
  r.k = residue(k, p);
  poly_matrix one = identity(n, p, D);
  r.M = scaled(s.K, k) + scaled(dagger(s.M_c1t * s.delta) - dagger(s.delta) * s.M_t1c, residue(k, p) * half % p);
  r.Mbar = -r.M;
  poly_matrix inner = one - scaled(s.delta_v * monomial_matrix_inverse(dagger(s.M_vt)) *
                                       (dagger(s.M_c1t) - s.M_t1c),
                                   half);
  r.Minv = scaled(inner * monomial_matrix_inverse(s.K), inv_k);
  r.A = vstack({one, r.M});
  r.Abar = vstack({one, r.Mbar});
  r.H = hstack({r.A, r.Abar});
  r.Hinv = scaled(block_matrix({{one, *r.Minv}, {one, -*r.Minv}}), half);
  return r;
}

inline isa_pair build_zp_isa_2d(std::uint32_t p, long long k) { return build_zp_isa(1, p, k); }

inline isa_pair build_isa_higher(isa_kind kind, int l, std::uint32_t p = 2, long long k = 1) {
  if (kind == isa_kind::z2) {
    if (p != 2) throw invalid_parameters("Z_2 ISA lives over Z_2");
    return build_z2_isa(l);
  }
  return build_zp_isa(l, p, k);
}

// Reorders (X1, Z1, X2, Z2) blocks of size q into (X1, X2, Z1, Z2).
inline poly_matrix copywise_to_global(const poly_matrix& m, std::size_t q) {
  const std::size_t order[4] = {0, 2, 1, 3};
  std::vector<std::size_t> perm;  // global index -> copy-wise index
  for (std::size_t g = 0; g < 4; ++g)
    for (std::size_t i = 0; i < q; ++i) perm.push_back(order[g] * q + i);
  poly_matrix r = zeros(m.rows(), m.cols(), m.zero().modulus(), m.zero().dim());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(perm[i], perm[j]);
  return r;
}

// Two-copy on-site conjugator with a^2 + b^2 = -1, in the global basis.
inline poly_matrix two_copy_conjugator(long long a, long long b, std::size_t q, std::uint32_t p, int D) {
  poly_matrix one = identity(q, p, D), z = zeros(q, q, p, D);
  auto s = [&](long long c) { return scaled(one, c); };
  poly_matrix c = block_matrix({{s(a), z, s(b), z}, {z, s(-a), z, s(-b)}, {s(b), z, s(-a), z}, {z, s(-b), z, s(a)}});
  return copywise_to_global(c, q);
}

// QCA built from the Z_p ISA that squares to -m times the identity. For p = 1 mod 4 it is
// H diag(m, 1) H^-1 diag(-a, a); for p = 3 mod 4 the two-copy form with (a, b) is used.
inline symplectic_map induced_qca(std::uint32_t p, long long k, const laurent_poly& m, int l = 1) {
  if (!m.is_monomial() || m.terms()[0].c != 1) throw invalid_parameters("shift must be a single monomial");
  auto r = build_zp_isa(l, p, k);
  m.same_ring(r.M.zero());
  const std::size_t n = r.q();
  poly_matrix one = identity(n, p, r.D), z = zeros(n, n, p, r.D);
  poly_matrix T = r.H * block_matrix({{times(m, one), z}, {z, one}}) * r.Hinv;
  if (auto a = sqrt_minus_one(p)) {
    poly_matrix c = block_matrix({{scaled(one, -*a), z}, {z, scaled(one, *a)}});
    return symplectic_map(T * c);
  }
  auto [a, b] = two_squares_minus_one(p);
  poly_matrix TT = copywise_to_global(direct_sum(T, T), n);
  return symplectic_map(TT * two_copy_conjugator(a, b, n, p, r.D));
}

// On-site map diag(a, a, -a, -a) that sends A to Abar (times a) when p = 1 mod 4.
inline std::optional<poly_matrix> charge_conjugation_witness(const isa_pair& r) {
  if (r.kind != isa_kind::zp) return std::nullopt;
  auto a = sqrt_minus_one(r.d);
  if (!a) return std::nullopt;
  const std::size_t n = r.q();
  poly_matrix one = identity(n, r.d, r.D), z = zeros(n, n, r.d, r.D);
  return block_matrix({{scaled(one, *a), z}, {z, scaled(one, -*a)}});
}

}  // namespace cqca

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "cochain.hpp"
#include "symplectic.hpp"

namespace cqca {

struct invalid_parameters : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class qca_family { three_fermion, zp_alpha, zp_beta };

struct qca_spec {
  qca_family family = qca_family::three_fermion;
  int l = 2;               // degree index
  std::uint32_t d = 2;     // 2 for the three-fermion family, an odd prime otherwise
  long long k = 1;         // level, for Z_p families
  int dim() const { return family == qca_family::three_fermion ? 2 * l - 1 : 4 * l - 1; }
};

inline void check_odd_prime_level(std::uint32_t p, long long k) {
  if (p == 2 || !is_prime(p)) throw invalid_parameters("p must be an odd prime, got " + std::to_string(p));
  if (residue(k, p) == 0) throw invalid_parameters("k must be a unit mod p, got k=" + std::to_string(k));
}

// Cochain ingredients of the three-fermion family in D = 2l-1: qudits on l-cells
// (two species), gauge constraints on (l-1)-cells.
struct three_fermion_parts {
  int D, l;
  poly_matrix delta;     // (l-1)-cells -> l-cells
  poly_matrix m_lo_hi;   // M_{sigma_{l-1} cup sigma_l}, rows (l-1)-cells
  poly_matrix m_hi_lo;   // M_{sigma_l cup sigma_{l-1}}, rows l-cells
  poly_matrix m_hi_1hi;  // M_{sigma_l cup_1 sigma_l}
  poly_matrix g_x, g_z;  // gauge constraint G = (delta; M^dagger_{c' cup_1 c} delta), per species
};

inline three_fermion_parts three_fermion_ingredients(int l) {
  if (l < 2) throw invalid_parameters("three-fermion degree index must be at least 2");
  const int D = 2 * l - 1;
  three_fermion_parts s{D, l, coboundary_matrix(D, l - 1), cup_matrix({D, l, 0}), cup_matrix({D, l - 1, 0}),
                        cup_matrix({D, l, 1}), {}, {}};
  s.g_x = s.delta;
  s.g_z = dagger(s.m_hi_1hi) * s.delta;
  return s;
}

// Columns ordered X^A, X^B, Z^A, Z^B; rows likewise.
inline symplectic_map assemble_three_fermion(const three_fermion_parts& s) {
  const std::size_t n = s.delta.rows();
  const std::size_t g = s.delta.cols();
  const int D = s.D;
  poly_matrix z = zeros(n, g, 2, D);
  poly_matrix GA = vstack({s.g_x, z, s.g_z, z});
  poly_matrix GB = vstack({z, s.g_x, z, s.g_z});
  auto unit = [&](int block) {
    poly_matrix e = zeros(4 * n, n, 2, D);
    e.set_block(static_cast<std::size_t>(block) * n, 0, identity(n, 2, D));
    return e;
  };
  poly_matrix sepA = GB * dagger(s.m_hi_lo);
  poly_matrix sepB = GA * s.m_lo_hi;
  poly_matrix zA = unit(2) + sepA;
  poly_matrix zB = unit(3) + sepB;
  poly_matrix xA = unit(0) + sepA * s.m_hi_1hi;
  poly_matrix xB = unit(1) + sepB * s.m_hi_1hi;
  return symplectic_map(hstack({xA, xB, zA, zB}));
}

inline symplectic_map build_z2_general(int l) { return assemble_three_fermion(three_fermion_ingredients(l)); }

inline symplectic_map build_3f_3d() {
  three_fermion_parts s{3,
                        2,
                        coboundary_matrix(3, 1),
                        cup_matrix({3, 2, 0}),
                        cup_matrix({3, 1, 0}),
                        cup_matrix({3, 2, 1}),
                        {},
                        {}};
  s.g_x = s.delta;
  s.g_z = dagger(s.m_hi_1hi) * s.delta;
  return assemble_three_fermion(s);
}

inline symplectic_map build_3f_5d() {
  three_fermion_parts s{5,
                        3,
                        coboundary_matrix(5, 2),
                        cup_matrix({5, 3, 0}),
                        cup_matrix({5, 2, 0}),
                        cup_matrix({5, 3, 1}),
                        {},
                        {}};
  s.g_x = s.delta;
  s.g_z = dagger(s.m_hi_1hi) * s.delta;
  return assemble_three_fermion(s);
}

// Hopping columns U^A, U^B = X + Z M_{c' cup_1 c}.
inline poly_matrix three_fermion_hopping(int l) {
  auto s = three_fermion_ingredients(l);
  const std::size_t n = s.delta.rows();
  poly_matrix z = zeros(n, n, 2, s.D), one = identity(n, 2, s.D);
  return hstack({vstack({one, z, s.m_hi_1hi, z}), vstack({z, one, z, s.m_hi_1hi})});
}

// Gauge-constraint columns G^A, G^B as Pauli columns on the full space.
inline poly_matrix three_fermion_gauge(int l) {
  auto s = three_fermion_ingredients(l);
  const std::size_t n = s.delta.rows(), g = s.delta.cols();
  poly_matrix z = zeros(n, g, 2, s.D);
  return hstack({vstack({s.g_x, z, s.g_z, z}), vstack({z, s.g_x, z, s.g_z})});
}

// Cochain ingredients of the Z_p family in D = 4l-1, qudits on 2l-cells.
struct zp_parts {
  int D, l;
  std::uint32_t p;
  poly_matrix delta;    // (2l-1)-cells -> 2l-cells
  poly_matrix m_lo_hi;  // M_{e cup f}
  poly_matrix m_hi_lo;  // M_{f cup e}
  poly_matrix m_1;      // M_{f' cup_1 f}
};

inline zp_parts zp_ingredients(int l, std::uint32_t p) {
  if (l < 1) throw invalid_parameters("Z_p degree index must be at least 1");
  const int D = 4 * l - 1, c = 2 * l;
  return {D, l, p, coboundary_matrix(D, c - 1, p), cup_matrix({D, c, 0}, p), cup_matrix({D, c - 1, 0}, p),
          cup_matrix({D, c, 1}, p)};
}

// alpha^(k): XX = 1 - dM M1/2, ZX = -(k/2) M1^dag dM M1, XZ = dM/(2k), ZZ = 1 + M1^dag dM/2,
// with dM = delta M_{e cup f}.
inline symplectic_map build_zp_general(int l, std::uint32_t p, long long k) {
  check_odd_prime_level(p, k);
  auto s = zp_ingredients(l, p);
  const long long half = mod_inverse(2, p), inv_k = mod_inverse(k, p);
  const std::size_t n = s.delta.rows();
  poly_matrix one = identity(n, p, s.D);
  poly_matrix dM = s.delta * s.m_lo_hi;
  poly_matrix m1d = dagger(s.m_1);
  poly_matrix xx = one - scaled(dM * s.m_1, half);
  poly_matrix zx = scaled(m1d * dM * s.m_1, residue(-k, p) * half % p);
  poly_matrix xz = scaled(dM, half * inv_k % p);
  poly_matrix zz = one + scaled(m1d * dM, half);
  return symplectic_map::from_blocks(xx, xz, zx, zz);
}

inline symplectic_map build_zp_alpha(std::uint32_t p, long long k) {
  check_odd_prime_level(p, k);
  const long long half = mod_inverse(2, p), inv_k = mod_inverse(k, p);
  poly_matrix delta = coboundary_matrix(3, 1, p);
  poly_matrix m_ef = cup_matrix({3, 2, 0}, p), m_ff = cup_matrix({3, 2, 1}, p);
  poly_matrix one = identity(3, p, 3);
  poly_matrix dM = delta * m_ef;
  return symplectic_map::from_blocks(one - scaled(dM * m_ff, half), scaled(dM, half * inv_k % p),
                                     scaled(dagger(m_ff) * dM * m_ff, residue(-k, p) * half % p),
                                     one + scaled(dagger(m_ff) * dM, half));
}

// G^(k) = (delta; k M1^dag delta), columns on (2l-1)-cells.
inline poly_matrix zp_gauge(int l, std::uint32_t p, long long k) {
  auto s = zp_ingredients(l, p);
  return vstack({s.delta, scaled(dagger(s.m_1) * s.delta, k)});
}

// beta^(k): Zbar = Z + G^(-k) M^dag_{f cup e}/(2k), Xbar = X + G^(-k) M^dag_{f cup e} M1/2.
inline symplectic_map build_zp_beta_general(int l, std::uint32_t p, long long k) {
  check_odd_prime_level(p, k);
  auto s = zp_ingredients(l, p);
  const long long half = mod_inverse(2, p), inv_k = mod_inverse(k, p);
  const std::size_t n = s.delta.rows();
  poly_matrix g = zp_gauge(l, p, -k) * dagger(s.m_hi_lo);
  poly_matrix z = zeros(n, n, p, s.D), one = identity(n, p, s.D);
  poly_matrix xcol = vstack({one, z}) + scaled(g * s.m_1, half);
  poly_matrix zcol = vstack({z, one}) + scaled(g, half * inv_k % p);
  return symplectic_map(hstack({xcol, zcol}));
}

inline symplectic_map build_zp_beta(std::uint32_t p, long long k) { return build_zp_beta_general(1, p, k); }

// U^(k) = (I; k M1): the hopping columns fixed by alpha^(k).
inline poly_matrix zp_hopping(int l, std::uint32_t p, long long k) {
  auto s = zp_ingredients(l, p);
  return vstack({identity(s.delta.rows(), p, s.D), scaled(s.m_1, k)});
}

inline symplectic_map build(const qca_spec& s) {
  switch (s.family) {
    case qca_family::three_fermion:
      if (s.d != 2) throw invalid_parameters("the three-fermion family lives over Z_2");
      return build_z2_general(s.l);
    case qca_family::zp_alpha:
      return build_zp_general(s.l, s.d, s.k);
    case qca_family::zp_beta:
      return build_zp_beta_general(s.l, s.d, s.k);
  }
  throw invalid_parameters("unknown family");
}

}  // namespace cqca

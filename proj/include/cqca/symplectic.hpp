#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "matrix.hpp"

namespace cqca {

struct not_symplectic : std::domain_error {
  using std::domain_error::domain_error;
};

// A family of Pauli operators: 2q rows (X blocks then Z blocks), one column per operator.
class pauli_column {
 public:
  pauli_column(poly_matrix v, std::size_t q) : v_(std::move(v)), q_(q) {
    if (v_.rows() != 2 * q_) throw shape_mismatch("Pauli column needs 2q rows");
  }
  static pauli_column from_blocks(const poly_matrix& x, const poly_matrix& z) {
    x.same_shape(z);
    return {vstack({x, z}), x.rows()};
  }

  std::size_t q() const { return q_; }
  std::size_t count() const { return v_.cols(); }
  const poly_matrix& matrix() const { return v_; }
  poly_matrix x_block() const { return v_.block(0, 0, q_, v_.cols()); }
  poly_matrix z_block() const { return v_.block(q_, 0, q_, v_.cols()); }
  bool operator==(const pauli_column& o) const { return q_ == o.q_ && v_ == o.v_; }

 private:
  poly_matrix v_;
  std::size_t q_;
};

// The standard form [[0, I], [-I, 0]].
inline poly_matrix lambda_form(std::size_t q, std::uint32_t d, int D) {
  poly_matrix l = zeros(2 * q, 2 * q, d, D);
  for (std::size_t k = 0; k < q; ++k) {
    l(k, q + k) = laurent_poly::one(d, D);
    l(q + k, k) = laurent_poly(d, D, -1);
  }
  return l;
}

// All pairings v_a^dagger Lambda w_b as a matrix; zero means the families commute.
inline poly_matrix pairing_matrix(const poly_matrix& v, const poly_matrix& w) {
  if (v.rows() != w.rows() || v.rows() % 2) throw shape_mismatch("pairing needs matching even row counts");
  const std::size_t q = v.rows() / 2;
  const auto d = v.zero().modulus();
  const int D = v.zero().dim();
  poly_matrix vx = dagger(v.block(0, 0, q, v.cols())), vz = dagger(v.block(q, 0, q, v.cols()));
  return vx * w.block(q, 0, q, w.cols()) - vz * w.block(0, 0, q, w.cols()) + zeros(v.cols(), w.cols(), d, D);
}

inline laurent_poly symplectic_pair(const pauli_column& v, const pauli_column& w) {
  if (v.q() != w.q() || v.count() != 1 || w.count() != 1) throw shape_mismatch("pairing needs single columns of equal q");
  return pairing_matrix(v.matrix(), w.matrix())(0, 0);
}

// A 2q x 2q matrix whose j-th column is the image of the j-th basis Pauli.
class symplectic_map {
 public:
  symplectic_map() = default;
  explicit symplectic_map(poly_matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() % 2) throw shape_mismatch("symplectic map must be square of even size");
  }
  static symplectic_map identity(std::size_t q, std::uint32_t d, int D) { return symplectic_map(cqca::identity(2 * q, d, D)); }
  static symplectic_map from_blocks(const poly_matrix& xx, const poly_matrix& xz, const poly_matrix& zx,
                                    const poly_matrix& zz) {
    return symplectic_map(block_matrix({{xx, xz}, {zx, zz}}));
  }

  std::size_t q() const { return m_.rows() / 2; }
  std::uint32_t modulus() const { return m_.zero().modulus(); }
  int dim() const { return m_.zero().dim(); }
  const poly_matrix& matrix() const { return m_; }
  const laurent_poly& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  // Theta^{XX}: X rows of X columns; Theta^{XZ}: X rows of Z columns, and so on.
  poly_matrix xx() const { return m_.block(0, 0, q(), q()); }
  poly_matrix xz() const { return m_.block(0, q(), q(), q()); }
  poly_matrix zx() const { return m_.block(q(), 0, q(), q()); }
  poly_matrix zz() const { return m_.block(q(), q(), q(), q()); }

  pauli_column image(const pauli_column& v) const { return {m_ * v.matrix(), v.q()}; }
  bool operator==(const symplectic_map& o) const { return m_ == o.m_; }

 private:
  poly_matrix m_;
};

inline bool is_symplectic(const symplectic_map& t) {
  const auto& m = t.matrix();
  if (m.rows() == 0) return true;
  return pairing_matrix(m, m) == lambda_form(t.q(), t.modulus(), t.dim());
}

inline void same_space(const symplectic_map& a, const symplectic_map& b) {
  if (a.q() != b.q()) throw shape_mismatch("maps act on different numbers of qudits");
  a.matrix().zero().same_ring(b.matrix().zero());
}

// Apply b first, then a.
inline symplectic_map compose(const symplectic_map& a, const symplectic_map& b) {
  same_space(a, b);
  return symplectic_map(a.matrix() * b.matrix());
}

inline symplectic_map inverse(const symplectic_map& t) {
  if (!is_symplectic(t)) throw not_symplectic("inverse requested for a non-symplectic matrix");
  auto l = lambda_form(t.q(), t.modulus(), t.dim());
  return symplectic_map(-(l * dagger(t.matrix()) * l));
}

inline symplectic_map direct_sum(const symplectic_map& a, const symplectic_map& b) {
  return symplectic_map::from_blocks(direct_sum(a.xx(), b.xx()), direct_sum(a.xz(), b.xz()),
                                     direct_sum(a.zx(), b.zx()), direct_sum(a.zz(), b.zz()));
}

// Scalar laurent multiple of the identity on 2q rows.
inline symplectic_map scalar_map(const laurent_poly& s, std::size_t q) {
  return symplectic_map(times(s, identity(2 * q, s.modulus(), s.dim())));
}

}  // namespace cqca

#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ring.hpp"

namespace cqca {

struct shape_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dense row-major matrix; T must provide +, -, * and is_zero().
template <class T>
class basic_matrix {
 public:
  basic_matrix() = default;
  basic_matrix(std::size_t rows, std::size_t cols, T zero)
      : rows_(rows), cols_(cols), zero_(std::move(zero)), a_(rows * cols, zero_) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const T& zero() const { return zero_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  bool operator==(const basic_matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  // First (row, col) where the two matrices differ.
  std::optional<std::pair<std::size_t, std::size_t>> first_difference(const basic_matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) return std::pair<std::size_t, std::size_t>{0, 0};
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!((*this)(i, j) == o(i, j))) return std::pair{i, j};
    return std::nullopt;
  }

  bool is_zero() const {
    for (auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  basic_matrix& operator+=(const basic_matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  basic_matrix& operator-=(const basic_matrix& o) {
    same_shape(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  friend basic_matrix operator+(basic_matrix a, const basic_matrix& b) { return a += b; }
  friend basic_matrix operator-(basic_matrix a, const basic_matrix& b) { return a -= b; }
  basic_matrix operator-() const {
    basic_matrix r = *this;
    for (auto& x : r.a_) x = -x;
    return r;
  }

  basic_matrix transposed() const {
    basic_matrix r(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  basic_matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw shape_mismatch("block out of range");
    basic_matrix r(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) r(i, j) = (*this)(r0 + i, c0 + j);
    return r;
  }

  void set_block(std::size_t r0, std::size_t c0, const basic_matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw shape_mismatch("block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  void same_shape(const basic_matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw shape_mismatch("shape mismatch: " + std::to_string(rows_) + "x" + std::to_string(cols_) + " vs " +
                           std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  T zero_{};
  std::vector<T> a_;
};

template <class T>
basic_matrix<T> operator*(const basic_matrix<T>& a, const basic_matrix<T>& b) {
  if (a.cols() != b.rows())
    throw shape_mismatch("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  basic_matrix<T> c(a.rows(), b.cols(), a.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t l = 0; l < a.cols(); ++l) {
      if (a(i, l).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(l, j).is_zero()) c(i, j) += a(i, l) * b(l, j);
    }
  return c;
}

using poly_matrix = basic_matrix<laurent_poly>;

// Laurent products accumulate raw terms per entry and normalize once.
inline poly_matrix operator*(const poly_matrix& a, const poly_matrix& b) {
  if (a.cols() != b.rows())
    throw shape_mismatch("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  a.zero().same_ring(b.zero());
  const auto d = a.zero().modulus();
  const int D = a.zero().dim();
  poly_matrix c(a.rows(), b.cols(), a.zero());
  std::vector<std::size_t> nz;
  std::vector<laurent_poly::term> buf;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    nz.clear();
    for (std::size_t l = 0; l < a.cols(); ++l)
      if (!a(i, l).is_zero()) nz.push_back(l);
    if (nz.empty()) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      buf.clear();
      for (auto l : nz)
        if (!b(l, j).is_zero()) append_product(buf, a(i, l), b(l, j));
      if (!buf.empty()) c(i, j) = laurent_poly::from_terms(d, D, buf);
    }
  }
  return c;
}

inline poly_matrix zeros(std::size_t r, std::size_t c, std::uint32_t d, int D) {
  return {r, c, laurent_poly::zero(d, D)};
}

inline poly_matrix identity(std::size_t n, std::uint32_t d, int D) {
  poly_matrix m = zeros(n, n, d, D);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = laurent_poly::one(d, D);
  return m;
}

inline poly_matrix scaled(const poly_matrix& m, long long s) {
  poly_matrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).scaled(s);
  return r;
}

inline poly_matrix times(const laurent_poly& s, const poly_matrix& m) {
  poly_matrix r = m;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = s * m(i, j);
  return r;
}

// Transpose followed by the antipode.
inline poly_matrix dagger(const poly_matrix& m) {
  poly_matrix r(m.cols(), m.rows(), m.zero());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = antipode(m(i, j));
  return r;
}

inline poly_matrix hstack(const std::vector<poly_matrix>& parts) {
  if (parts.empty()) throw shape_mismatch("empty hstack");
  std::size_t cols = 0;
  for (auto& p : parts) {
    if (p.rows() != parts[0].rows()) throw shape_mismatch("hstack row mismatch");
    cols += p.cols();
  }
  poly_matrix r(parts[0].rows(), cols, parts[0].zero());
  std::size_t c0 = 0;
  for (auto& p : parts) {
    r.set_block(0, c0, p);
    c0 += p.cols();
  }
  return r;
}

inline poly_matrix vstack(const std::vector<poly_matrix>& parts) {
  if (parts.empty()) throw shape_mismatch("empty vstack");
  std::size_t rows = 0;
  for (auto& p : parts) {
    if (p.cols() != parts[0].cols()) throw shape_mismatch("vstack column mismatch");
    rows += p.rows();
  }
  poly_matrix r(rows, parts[0].cols(), parts[0].zero());
  std::size_t r0 = 0;
  for (auto& p : parts) {
    r.set_block(r0, 0, p);
    r0 += p.rows();
  }
  return r;
}

// Block matrix from a grid of equally partitioned blocks.
inline poly_matrix block_matrix(const std::vector<std::vector<poly_matrix>>& grid) {
  std::vector<poly_matrix> rows;
  for (auto& r : grid) rows.push_back(hstack(r));
  return vstack(rows);
}

inline poly_matrix direct_sum(const poly_matrix& a, const poly_matrix& b) {
  poly_matrix r(a.rows() + b.rows(), a.cols() + b.cols(), a.zero());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

inline bool is_identity(const poly_matrix& m) {
  if (m.rows() != m.cols()) return false;
  return m == identity(m.rows(), m.zero().modulus(), m.zero().dim());
}

}  // namespace cqca

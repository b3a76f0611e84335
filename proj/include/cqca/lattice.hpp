#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <tuple>
#include <utility>
#include <vector>

#include "matrix.hpp"
#include "ring.hpp"
#include "symplectic.hpp"

namespace cqca {

// Sparse matrix over Z_d on a periodic lattice, site-major: index = site * block + i.
class explicit_map {
 public:
  using entry = std::pair<std::size_t, std::uint32_t>;  // column, value

  explicit_map() = default;
  explicit_map(std::uint32_t d, torus_shape L, std::size_t row_block, std::size_t col_block)
      : d_(d), L_(std::move(L)), rb_(row_block), cb_(col_block), rows_(static_cast<std::size_t>(L_.sites()) * rb_) {}

  std::uint32_t modulus() const { return d_; }
  const torus_shape& shape() const { return L_; }
  std::size_t sites() const { return static_cast<std::size_t>(L_.sites()); }
  std::size_t row_block() const { return rb_; }
  std::size_t col_block() const { return cb_; }
  std::size_t rows() const { return rows_.size(); }
  std::size_t cols() const { return sites() * cb_; }
  bool wrapped() const { return wrapped_; }
  void set_wrapped(bool w) { wrapped_ = w; }

  const std::vector<entry>& row(std::size_t i) const { return rows_[i]; }

  // Adds v to (i, j); rows are kept sorted by column.
  void add(std::size_t i, std::size_t j, long long v) {
    auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const entry& e, std::size_t c) { return e.first < c; });
    const auto val = static_cast<std::uint32_t>(residue(v, d_));
    if (it != r.end() && it->first == j) {
      it->second = static_cast<std::uint32_t>((it->second + val) % d_);
      if (it->second == 0) r.erase(it);
    } else if (val != 0) {
      r.insert(it, {j, val});
    }
  }

  std::uint32_t at(std::size_t i, std::size_t j) const {
    auto& r = rows_[i];
    auto it = std::lower_bound(r.begin(), r.end(), j, [](const entry& e, std::size_t c) { return e.first < c; });
    return it != r.end() && it->first == j ? it->second : 0;
  }

  std::size_t nonzeros() const {
    std::size_t n = 0;
    for (auto& r : rows_) n += r.size();
    return n;
  }

  std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> triplets() const {
    std::vector<std::tuple<std::size_t, std::size_t, std::uint32_t>> t;
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (auto& [j, v] : rows_[i]) t.emplace_back(i, j, v);
    return t;
  }

  explicit_map transposed() const {
    explicit_map t(d_, L_, cb_, rb_);
    for (std::size_t i = 0; i < rows_.size(); ++i)
      for (auto& [j, v] : rows_[i]) t.rows_[j].push_back({i, v});
    return t;
  }

  bool is_zero() const {
    return std::all_of(rows_.begin(), rows_.end(), [](auto& r) { return r.empty(); });
  }

  bool operator==(const explicit_map& o) const {
    return d_ == o.d_ && L_.lengths == o.L_.lengths && rb_ == o.rb_ && cb_ == o.cb_ && rows_ == o.rows_;
  }

  friend explicit_map operator*(const explicit_map& a, const explicit_map& b) {
    if (a.d_ != b.d_) throw incompatible_ring("explicit maps over different moduli");
    if (a.cols() != b.rows() || a.L_.lengths != b.L_.lengths) throw shape_mismatch("explicit map shapes differ");
    explicit_map r(a.d_, a.L_, a.rb_, b.cb_);
    std::vector<std::uint64_t> acc(b.cols(), 0);
    std::vector<char> hit(b.cols(), 0);
    std::vector<std::size_t> touched;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (auto& [k, v] : a.rows_[i])
        for (auto& [j, w] : b.rows_[k]) {
          if (!hit[j]) {
            hit[j] = 1;
            touched.push_back(j);
          }
          acc[j] = (acc[j] + static_cast<std::uint64_t>(v) * w) % a.d_;
        }
      std::sort(touched.begin(), touched.end());
      for (auto j : touched) {
        if (acc[j]) r.rows_[i].push_back({j, static_cast<std::uint32_t>(acc[j])});
        acc[j] = 0;
        hit[j] = 0;
      }
      touched.clear();
    }
    return r;
  }

  static explicit_map identity(std::uint32_t d, const torus_shape& L, std::size_t block) {
    explicit_map r(d, L, block, block);
    for (std::size_t i = 0; i < r.rows(); ++i) r.rows_[i].push_back({i, 1});
    return r;
  }

 private:
  std::uint32_t d_ = 2;
  torus_shape L_;
  std::size_t rb_ = 0, cb_ = 0;
  std::vector<std::vector<entry>> rows_;
  bool wrapped_ = false;
};

// Largest L-infinity norm of an exponent vector over all entries and terms.
inline int locality_radius(const poly_matrix& m) {
  int r = 0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      for (auto& t : m(i, j).terms())
        for (int k = 0; k < m(i, j).dim(); ++k) r = std::max(r, std::abs(t.m.e[static_cast<std::size_t>(k)]));
  return r;
}

inline int locality_radius(const symplectic_map& t) { return locality_radius(t.matrix()); }

namespace detail {

// Site index with the first coordinate fastest.
inline std::size_t site_index(const std::vector<int>& c, const torus_shape& L) {
  std::size_t s = 0;
  for (int k = L.dim() - 1; k >= 0; --k)
    s = s * static_cast<std::size_t>(L.lengths[static_cast<std::size_t>(k)]) + static_cast<std::size_t>(c[static_cast<std::size_t>(k)]);
  return s;
}

inline std::vector<int> site_coords(std::size_t s, const torus_shape& L) {
  std::vector<int> c(static_cast<std::size_t>(L.dim()));
  for (int k = 0; k < L.dim(); ++k) {
    auto l = static_cast<std::size_t>(L.lengths[static_cast<std::size_t>(k)]);
    c[static_cast<std::size_t>(k)] = static_cast<int>(s % l);
    s /= l;
  }
  return c;
}

}  // namespace detail

// Block-circulant expansion: a term c x^u in entry (i, j) sends (j at site t) to (i at site t + u).
inline explicit_map instantiate(const poly_matrix& m, const torus_shape& L) {
  const int D = m.zero().dim();
  if (L.dim() != D) throw dimension_mismatch("torus dimension differs from ring dimension");
  const auto d = m.zero().modulus();
  explicit_map r(d, L, m.rows(), m.cols());
  const int rad = locality_radius(m);
  bool wrap = false;
  for (int l : L.lengths) wrap = wrap || l < 2 * rad + 1;
  r.set_wrapped(wrap);
  const std::size_t N = r.sites();
  for (std::size_t t = 0; t < N; ++t) {
    auto base = detail::site_coords(t, L);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        for (auto& term : m(i, j).terms()) {
          auto c = base;
          for (int k = 0; k < D; ++k) {
            auto l = L.lengths[static_cast<std::size_t>(k)];
            auto& x = c[static_cast<std::size_t>(k)];
            x = ((x + term.m.e[static_cast<std::size_t>(k)]) % l + l) % l;
          }
          r.add(detail::site_index(c, L) * m.rows() + i, t * m.cols() + j, term.c);
        }
  }
  return r;
}

inline explicit_map instantiate(const symplectic_map& t, const torus_shape& L) { return instantiate(t.matrix(), L); }

// N-fold block form [[0, 1], [-1, 0]] with per-site blocks of size 2q.
inline explicit_map finite_lambda(std::uint32_t d, const torus_shape& L, std::size_t q) {
  explicit_map r(d, L, 2 * q, 2 * q);
  for (std::size_t s = 0; s < r.sites(); ++s)
    for (std::size_t i = 0; i < q; ++i) {
      r.add(s * 2 * q + i, s * 2 * q + q + i, 1);
      r.add(s * 2 * q + q + i, s * 2 * q + i, -1);
    }
  return r;
}

inline bool is_symplectic(const explicit_map& m) {
  if (m.row_block() != m.col_block() || m.row_block() % 2) return false;
  auto lam = finite_lambda(m.modulus(), m.shape(), m.row_block() / 2);
  return m.transposed() * lam * m == lam;
}

inline bool is_identity(const explicit_map& m) {
  return m.rows() == m.cols() && m == explicit_map::identity(m.modulus(), m.shape(), m.row_block());
}

// Columns of the images of the Z basis operators at every site.
inline explicit_map z_images(const explicit_map& m) {
  const std::size_t q = m.col_block() / 2;
  explicit_map sel(m.modulus(), m.shape(), 2 * q, q);
  for (std::size_t s = 0; s < m.sites(); ++s)
    for (std::size_t i = 0; i < q; ++i) sel.add(s * 2 * q + q + i, s * q + i, 1);
  return m * sel;
}

// Every pair of instantiated Z images has vanishing symplectic pairing.
inline bool stabilizer_commutation(const symplectic_map& t, const torus_shape& L) {
  auto z = z_images(instantiate(t, L));
  auto lam = finite_lambda(t.modulus(), L, t.q());
  return (z.transposed() * lam * z).is_zero();
}

}  // namespace cqca

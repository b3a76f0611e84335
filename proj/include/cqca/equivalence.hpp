#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cochain.hpp"
#include "isa.hpp"
#include "qca.hpp"
#include "symplectic.hpp"

namespace cqca {

struct not_reducible : std::domain_error {
  using std::domain_error::domain_error;
};

struct precondition_failed : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// n-fold composition; power(t, 0) is the identity.
inline symplectic_map power(const symplectic_map& t, unsigned n) {
  auto r = symplectic_map::identity(t.q(), t.modulus(), t.dim());
  auto b = t;
  for (; n; n >>= 1) {
    if (n & 1) r = compose(r, b);
    if (n > 1) b = compose(b, b);
  }
  return r;
}

struct shift_entry {
  monomial m;
  long long c = 1;
};

// Per-row (monomial, unit) if t is diagonal with single-term unit entries.
inline std::optional<std::vector<shift_entry>> is_monomial_shift(const symplectic_map& t) {
  const auto& m = t.matrix();
  std::vector<shift_entry> r;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) return std::nullopt;
    const auto& e = m(i, i);
    if (!e.is_monomial()) return std::nullopt;
    const auto& term = e.terms()[0];
    if (std::gcd(term.c, static_cast<long long>(t.modulus())) != 1) return std::nullopt;
    r.push_back({term.m, term.c});
  }
  return r;
}

inline bool is_monomial_shift_map(const symplectic_map& t) { return is_monomial_shift(t).has_value(); }

// ---- shape predicates ----

inline bool is_unitriangular(const poly_matrix& m, bool upper) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i == j && !(m(i, j) == laurent_poly::one(m.zero().modulus(), m.zero().dim()))) return false;
      if (i != j && (upper ? i > j : i < j) && !m(i, j).is_zero()) return false;
    }
  return true;
}

// Elementary: a CNOT layer (no X-Z mixing, unitriangular X block) or a shear
// (identity diagonal blocks, one off-diagonal block).
inline bool is_elementary(const symplectic_map& t) {
  if (!is_symplectic(t)) return false;
  auto xx = t.xx(), xz = t.xz(), zx = t.zx(), zz = t.zz();
  if (xz.is_zero() && zx.is_zero()) return is_unitriangular(xx, true) || is_unitriangular(xx, false);
  return is_identity(xx) && is_identity(zz) && (xz.is_zero() || zx.is_zero());
}

inline bool is_sign_diagonal(const symplectic_map& t) {
  if (!is_symplectic(t)) return false;
  const auto& m = t.matrix();
  const auto one = laurent_poly::one(t.modulus(), t.dim());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (i != j && !m(i, j).is_zero()) return false;
      if (i == j && !(m(i, i) == one || m(i, i) == -one)) return false;
    }
  return true;
}

// ---- separated reduction ----

struct separated_factors {
  symplectic_map separated;   // diag(Theta^XX, Theta^ZZ)
  symplectic_map elementary;  // [[I, 0], [S, I]] with S = S^dag
};

inline separated_factors separated_reduce(const symplectic_map& t) {
  if (!t.xz().is_zero()) throw not_reducible("X rows of the Z columns are nonzero");
  if (!is_symplectic(t)) throw not_symplectic("separated reduction needs a symplectic map");
  const std::size_t q = t.q();
  auto z = zeros(q, q, t.modulus(), t.dim()), one = identity(q, t.modulus(), t.dim());
  auto xx = t.xx();
  return {symplectic_map::from_blocks(xx, z, z, t.zz()), symplectic_map::from_blocks(one, z, dagger(xx) * t.zx(), one)};
}

// ---- order certificates ----

enum class stage_kind { elementary, sign };

struct certificate_stage {
  std::string name;
  stage_kind kind = stage_kind::elementary;
  symplectic_map map;
};

struct order_certificate {
  qca_spec target;
  bool two_copy = false;
  long long a = 0, b = 0;
  symplectic_map alpha;        // the target, once or twice
  symplectic_map alpha_conj;   // the target at level -k, once or twice
  symplectic_map conjugator;   // on-site c with c alpha c^-1 = alpha_conj
  std::vector<certificate_stage> stages;
  symplectic_map shift;
  int claimed_order = 2;

  symplectic_map circuit() const {
    auto u = symplectic_map::identity(shift.q(), shift.modulus(), shift.dim());
    for (auto& s : stages) u = compose(u, s.map);
    return u;
  }
};

// CNOT stages on the cubic lattice, rows X_yz, X_xz, X_xy, Z_yz, Z_xz, Z_xy.
namespace detail {

using stage_rows = std::array<std::array<const char*, 6>, 6>;

inline const std::array<stage_rows, 4>& stage_table() {
  static const std::array<stage_rows, 4> s{{
      {{{"1", "0", "0", "0", "0", "0"},
        {"0", "1", "0", "0", "0", "0"},
        {"x^-1 - 1", "-y^-1 + 1", "1", "0", "0", "0"},
        {"0", "0", "0", "1", "0", "1 - x"},
        {"0", "0", "0", "0", "1", "-1 + y"},
        {"0", "0", "0", "0", "0", "1"}}},
      {{{"1", "0", "0", "0", "0", "0"},
        {"-x^-1 + 1", "1", "0", "0", "0", "0"},
        {"0", "0", "1", "0", "0", "0"},
        {"0", "0", "0", "1", "-1 + x", "0"},
        {"0", "0", "0", "0", "1", "0"},
        {"0", "0", "0", "0", "0", "1"}}},
      {{{"1", "0", "1 - z", "0", "0", "0"},
        {"0", "1", "-1 + z", "0", "0", "0"},
        {"0", "0", "1", "0", "0", "0"},
        {"0", "0", "0", "1", "0", "0"},
        {"0", "0", "0", "0", "1", "0"},
        {"0", "0", "0", "z^-1 - 1", "-z^-1 + 1", "1"}}},
      {{{"1", "-1 + y", "0", "0", "0", "0"},
        {"0", "1", "0", "0", "0", "0"},
        {"0", "0", "1", "0", "0", "0"},
        {"0", "0", "0", "1", "0", "0"},
        {"0", "0", "0", "-y^-1 + 1", "1", "0"},
        {"0", "0", "0", "0", "0", "1"}}},
  }};
  return s;
}

inline symplectic_map stage_map(const stage_rows& rows, std::uint32_t p) {
  poly_matrix m = zeros(6, 6, p, 3);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) m(i, j) = parse_poly(rows[i][j], p, 3);
  return symplectic_map(m);
}

}  // namespace detail

// U_1 .. U_4 over Z_p.
inline std::vector<symplectic_map> cnot_stages(std::uint32_t p) {
  std::vector<symplectic_map> r;
  for (auto& s : detail::stage_table()) r.push_back(detail::stage_map(s, p));
  return r;
}

inline symplectic_map sign_stage(std::uint32_t p) {
  poly_matrix m = identity(6, p, 3);
  m(1, 1) = -m(1, 1);
  m(4, 4) = -m(4, 4);
  return symplectic_map(m);
}

// diag(M_{e cup f}, M_{e cup f}): the shift left over by U alpha^(-k) alpha^(k).
inline symplectic_map cubic_shift(std::uint32_t p) {
  auto m = cup_matrix({3, 2, 0}, p);
  return symplectic_map(direct_sum(m, m));
}

// Square-lattice property M^dag_{e cup f} M_{e cup f} = 1, and the X block of U equal to
// M^dag_{f cup e} + M_{e cup_1 c} delta_{c,f}.
inline void check_cubic_preconditions(std::uint32_t p, const symplectic_map& u) {
  auto m = cup_matrix({3, 2, 0}, p);
  if (!is_identity(dagger(m) * m)) throw precondition_failed("M^dag_{e cup f} M_{e cup f} is not the identity");
  auto expect = dagger(cup_matrix({3, 1, 0}, p)) + cup_matrix({3, 3, 1}, p) * coboundary_matrix(3, 2, p);
  if (!(u.xx() == expect)) throw precondition_failed("circuit X block differs from M^dag_{f cup e} + M_{e cup_1 c} delta");
}

inline order_certificate zp_order_certificate(std::uint32_t p, long long k) {
  check_odd_prime_level(p, k);
  order_certificate c;
  c.target = {qca_family::zp_alpha, 1, p, residue(k, p)};
  std::vector<certificate_stage> stages{{"sign", stage_kind::sign, sign_stage(p)}};
  auto cnots = cnot_stages(p);
  for (std::size_t i = 0; i < cnots.size(); ++i)
    stages.push_back({"U" + std::to_string(i + 1), stage_kind::elementary, cnots[i]});
  auto a1 = build_zp_alpha(p, k), a2 = build_zp_alpha(p, -k);
  auto sh = cubic_shift(p);
  {
    auto u = symplectic_map::identity(3, p, 3);
    for (auto& s : stages) u = compose(u, s.map);
    check_cubic_preconditions(p, u);
  }
  if (auto a = sqrt_minus_one(p)) {
    c.a = *a;
    auto one = identity(3, p, 3), z = zeros(3, 3, p, 3);
    c.conjugator = symplectic_map::from_blocks(scaled(one, -*a), z, z, scaled(one, *a));
    c.alpha = a1;
    c.alpha_conj = a2;
    c.stages = std::move(stages);
    c.shift = sh;
    c.claimed_order = 2;
    return c;
  }
  auto [a, b] = two_squares_minus_one(p);
  c.two_copy = true;
  c.a = a;
  c.b = b;
  c.conjugator = symplectic_map(two_copy_conjugator(a, b, 3, p, 3));
  c.alpha = direct_sum(a1, a1);
  c.alpha_conj = direct_sum(a2, a2);
  for (auto& s : stages) c.stages.push_back({s.name + "+" + s.name, s.kind, direct_sum(s.map, s.map)});
  c.shift = direct_sum(sh, sh);
  c.claimed_order = 4;
  return c;
}

struct entry_mismatch {
  std::string what;
  std::size_t row = 0, col = 0;
  std::string expected, got;
};

struct certificate_report {
  bool ok = true;
  std::optional<entry_mismatch> failure;
};

inline std::optional<entry_mismatch> compare(const std::string& what, const poly_matrix& expected,
                                             const poly_matrix& got) {
  if (expected.rows() != got.rows() || expected.cols() != got.cols())
    return entry_mismatch{what + " (shape)", 0, 0, std::to_string(expected.rows()) + "x" + std::to_string(expected.cols()),
                          std::to_string(got.rows()) + "x" + std::to_string(got.cols())};
  if (auto d = expected.first_difference(got))
    return entry_mismatch{what, d->first, d->second, to_string(expected(d->first, d->second)),
                          to_string(got(d->first, d->second))};
  return std::nullopt;
}

inline certificate_report check_certificate(const order_certificate& c) {
  certificate_report r;
  auto fail = [&](entry_mismatch m) {
    r.ok = false;
    r.failure = std::move(m);
    return r;
  };
  for (auto& s : c.stages) {
    bool good = s.kind == stage_kind::sign ? is_sign_diagonal(s.map) : is_elementary(s.map);
    if (!good) return fail({"stage " + s.name + " fails its shape predicate", 0, 0, "", ""});
  }
  if (!is_symplectic(c.conjugator)) return fail({"conjugator is not symplectic", 0, 0, "", ""});
  auto conj = compose(compose(c.conjugator, c.alpha), inverse(c.conjugator));
  if (auto m = compare("conjugated target", c.alpha_conj.matrix(), conj.matrix())) return fail(*m);
  if (!is_monomial_shift_map(c.shift)) return fail({"shift is not a monomial shift", 0, 0, "", ""});
  auto prod = compose(compose(c.circuit(), c.alpha_conj), c.alpha);
  if (auto m = compare("circuit times target powers", c.shift.matrix(), prod.matrix())) return fail(*m);
  return r;
}

inline bool verify_certificate(const order_certificate& c) { return check_certificate(c).ok; }

}  // namespace cqca

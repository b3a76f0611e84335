#pragma once

// Sparse Laurent polynomials over Z_d in D commuting variables.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cqca {

inline constexpr int max_vars = 12;

struct incompatible_ring : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct invalid_modulus : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct not_invertible : std::domain_error {
  using std::domain_error::domain_error;
};
struct dimension_mismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct parse_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exponent vector; slots beyond the ambient dimension stay zero.
struct monomial {
  std::array<std::int32_t, max_vars> e{};

  monomial() = default;
  monomial(std::initializer_list<int> exps) {
    if (exps.size() > max_vars) throw dimension_mismatch("too many exponents");
    std::size_t i = 0;
    for (int x : exps) e[i++] = x;
  }
  static monomial unit(int var, int power = 1) {
    monomial m;
    m.e.at(static_cast<std::size_t>(var)) = power;
    return m;
  }

  std::int32_t operator[](std::size_t i) const { return e[i]; }
  std::int32_t& operator[](std::size_t i) { return e[i]; }

  monomial operator*(const monomial& o) const {
    monomial r;
    for (std::size_t i = 0; i < max_vars; ++i) r.e[i] = e[i] + o.e[i];
    return r;
  }
  monomial inverse() const {
    monomial r;
    for (std::size_t i = 0; i < max_vars; ++i) r.e[i] = -e[i];
    return r;
  }
  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }
  auto operator<=>(const monomial&) const = default;
  bool operator==(const monomial&) const = default;
};

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

inline std::uint32_t residue(long long c, std::uint32_t d) {
  long long r = c % static_cast<long long>(d);
  if (r < 0) r += d;
  return static_cast<std::uint32_t>(r);
}

inline std::uint32_t mod_inverse(long long c, std::uint32_t p) {
  if (!is_prime(p)) throw invalid_modulus("modulus " + std::to_string(p) + " is not prime");
  std::uint32_t a = residue(c, p);
  if (a == 0) throw not_invertible("0 has no inverse mod " + std::to_string(p));
  // Fermat: a^(p-2)
  std::uint64_t r = 1, b = a, n = p - 2;
  while (n) {
    if (n & 1) r = r * b % p;
    b = b * b % p;
    n >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

struct torus_shape {
  std::vector<int> lengths;

  torus_shape() = default;
  torus_shape(std::initializer_list<int> l) : lengths(l) { check(); }
  explicit torus_shape(std::vector<int> l) : lengths(std::move(l)) { check(); }

  int dim() const { return static_cast<int>(lengths.size()); }
  long long sites() const {
    long long n = 1;
    for (int l : lengths) n *= l;
    return n;
  }
  void check() const {
    for (int l : lengths)
      if (l < 1) throw std::invalid_argument("torus lengths must be positive");
  }
};

inline std::vector<std::string> variable_names(int D) {
  if (D == 2) return {"x", "y"};
  if (D == 3) return {"x", "y", "z"};
  if (D == 5) return {"a", "b", "c", "d", "e"};
  std::vector<std::string> v;
  for (int i = 1; i <= D; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

class laurent_poly {
 public:
  struct term {
    monomial m;
    std::uint32_t c;
    bool operator==(const term&) const = default;
  };

  laurent_poly() = default;
  laurent_poly(std::uint32_t d, int D) : d_(d), D_(D) { check_ring(); }
  laurent_poly(std::uint32_t d, int D, long long c, const monomial& m = {}) : d_(d), D_(D) {
    check_ring();
    if (auto r = residue(c, d_)) terms_.push_back({m, r});
  }
  laurent_poly(std::uint32_t d, int D, std::vector<std::pair<monomial, long long>> ts)
      : d_(d), D_(D) {
    check_ring();
    for (auto& [m, c] : ts) terms_.push_back({m, residue(c, d_)});
    normalize();
  }

  static laurent_poly zero(std::uint32_t d, int D) { return {d, D}; }
  static laurent_poly one(std::uint32_t d, int D) { return {d, D, 1}; }
  static laurent_poly var(std::uint32_t d, int D, int i, int power = 1) {
    return {d, D, 1, monomial::unit(i, power)};
  }

  std::uint32_t modulus() const { return d_; }
  int dim() const { return D_; }
  const std::vector<term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::size_t size() const { return terms_.size(); }

  std::uint32_t coeff(const monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const term& t, const monomial& k) { return t.m < k; });
    return (it != terms_.end() && it->m == m) ? it->c : 0;
  }

  bool operator==(const laurent_poly& o) const {
    same_ring(o);
    return terms_ == o.terms_;
  }

  laurent_poly operator-() const {
    laurent_poly r = *this;
    for (auto& t : r.terms_) t.c = (d_ - t.c) % d_;
    return r;
  }

  laurent_poly& operator+=(const laurent_poly& o) {
    same_ring(o);
    std::vector<term> out;
    out.reserve(terms_.size() + o.terms_.size());
    auto a = terms_.cbegin(), b = o.terms_.cbegin();
    while (a != terms_.cend() || b != o.terms_.cend()) {
      if (b == o.terms_.cend() || (a != terms_.cend() && a->m < b->m)) {
        out.push_back(*a++);
      } else if (a == terms_.cend() || b->m < a->m) {
        out.push_back(*b++);
      } else {
        std::uint32_t c = static_cast<std::uint32_t>((std::uint64_t{a->c} + b->c) % d_);
        if (c) out.push_back({a->m, c});
        ++a;
        ++b;
      }
    }
    terms_ = std::move(out);
    return *this;
  }
  laurent_poly& operator-=(const laurent_poly& o) { return *this += -o; }

  friend laurent_poly operator+(laurent_poly a, const laurent_poly& b) { return a += b; }
  friend laurent_poly operator-(laurent_poly a, const laurent_poly& b) { return a -= b; }

  friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) { return mul(a, b); }

  laurent_poly scaled(long long s) const {
    std::uint32_t r = residue(s, d_);
    laurent_poly out(d_, D_);
    if (r == 0) return out;
    out.terms_.reserve(terms_.size());
    for (auto& t : terms_)
      if (auto c = static_cast<std::uint32_t>(std::uint64_t{t.c} * r % d_)) out.terms_.push_back({t.m, c});
    return out;
  }

  laurent_poly shifted(const monomial& m) const {
    laurent_poly out = *this;
    for (auto& t : out.terms_) t.m = t.m * m;
    return out;
  }

  friend laurent_poly mul(const laurent_poly& a, const laurent_poly& b) {
    a.same_ring(b);
    laurent_poly r(a.d_, a.D_);
    if (a.is_zero() || b.is_zero()) return r;
    if (a.terms_.size() == 1 && b.terms_.size() == 1) {
      auto c = static_cast<std::uint32_t>(std::uint64_t{a.terms_[0].c} * b.terms_[0].c % a.d_);
      if (c) r.terms_.push_back({a.terms_[0].m * b.terms_[0].m, c});
      return r;
    }
    r.terms_.reserve(a.terms_.size() * b.terms_.size());
    for (auto& s : a.terms_)
      for (auto& t : b.terms_)
        r.terms_.push_back({s.m * t.m, static_cast<std::uint32_t>(std::uint64_t{s.c} * t.c % a.d_)});
    r.normalize();
    return r;
  }

  // Appends the raw terms of a*b to buf; finish with from_terms.
  friend void append_product(std::vector<term>& buf, const laurent_poly& a, const laurent_poly& b) {
    a.same_ring(b);
    for (auto& s : a.terms_)
      for (auto& t : b.terms_)
        buf.push_back({s.m * t.m, static_cast<std::uint32_t>(std::uint64_t{s.c} * t.c % a.d_)});
  }
  static laurent_poly from_terms(std::uint32_t d, int D, std::vector<term> ts) {
    laurent_poly r(d, D);
    r.terms_ = std::move(ts);
    r.normalize();
    return r;
  }

  friend laurent_poly antipode(const laurent_poly& a) {
    laurent_poly r = a;
    for (auto& t : r.terms_) t.m = t.m.inverse();
    std::sort(r.terms_.begin(), r.terms_.end(), [](const term& x, const term& y) { return x.m < y.m; });
    return r;
  }

  friend laurent_poly reduce_torus(const laurent_poly& a, const torus_shape& L) {
    if (L.dim() != a.D_) throw dimension_mismatch("torus dimension differs from ring dimension");
    laurent_poly r(a.d_, a.D_);
    r.terms_.reserve(a.terms_.size());
    for (auto t : a.terms_) {
      for (int i = 0; i < a.D_; ++i) {
        int l = L.lengths[static_cast<std::size_t>(i)];
        t.m[static_cast<std::size_t>(i)] = ((t.m[static_cast<std::size_t>(i)] % l) + l) % l;
      }
      r.terms_.push_back(t);
    }
    r.normalize();
    return r;
  }

  // Merge equal monomials and drop zero coefficients.
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const term& x, const term& y) { return x.m < y.m; });
    std::vector<term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().m == t.m) {
        out.back().c = static_cast<std::uint32_t>((std::uint64_t{out.back().c} + t.c) % d_);
      } else {
        out.push_back({t.m, t.c % d_});
      }
      if (!out.empty() && out.back().c == 0) out.pop_back();
    }
    terms_ = std::move(out);
  }

  void same_ring(const laurent_poly& o) const {
    if (d_ != o.d_ || D_ != o.D_)
      throw incompatible_ring("ring mismatch: Z_" + std::to_string(d_) + " in " + std::to_string(D_) +
                              " vars vs Z_" + std::to_string(o.d_) + " in " + std::to_string(o.D_) + " vars");
  }

 private:
  void check_ring() const {
    if (d_ < 2) throw invalid_modulus("modulus must be at least 2");
    if (D_ < 1 || D_ > max_vars) throw dimension_mismatch("dimension out of range");
  }

  std::uint32_t d_ = 2;
  int D_ = 1;
  std::vector<term> terms_;
};

inline std::string format_monomial(const monomial& m, int D) {
  static constexpr std::string_view bar = "\xcc\x84";
  auto names = variable_names(D);
  std::string s;
  for (int i = 0; i < D; ++i) {
    int e = m[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    s += names[static_cast<std::size_t>(i)];
    if (e < 0) s += bar;
    if (e > 1 || e < -1) s += "^" + std::to_string(e < 0 ? -e : e);
  }
  return s;
}

// Overbar rendering: x̄ for x^-1; coefficient d-1 prints as a minus sign.
inline std::string to_string(const laurent_poly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (auto& t : a.terms()) {
    bool neg = a.modulus() > 2 && t.c == a.modulus() - 1;
    std::string mono = format_monomial(t.m, a.dim());
    std::string coef = neg ? "" : (t.c == 1 && !mono.empty() ? "" : std::to_string(t.c));
    if (neg && mono.empty()) coef = "1";
    if (first) s += neg ? "-" : "";
    else s += neg ? " - " : " + ";
    s += coef + mono;
    first = false;
  }
  return s;
}

// Plain-ASCII form, e.g. "3*x^-1*z^-1 + 2*x^-1"; round-trips through parse_poly.
inline std::string to_ascii(const laurent_poly& a) {
  if (a.is_zero()) return "0";
  auto names = variable_names(a.dim());
  std::string s;
  for (auto& t : a.terms()) {
    if (!s.empty()) s += " + ";
    s += std::to_string(t.c);
    for (int i = 0; i < a.dim(); ++i) {
      int e = t.m[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      s += "*" + names[static_cast<std::size_t>(i)];
      if (e != 1) s += "^" + std::to_string(e);
    }
  }
  return s;
}

// Accepts sums of terms like "3*x^-1*z^-1", "-y", "2", "x y^2"; variables by name.
inline laurent_poly parse_poly(std::string_view text, std::uint32_t d, int D) {
  auto names = variable_names(D);
  laurent_poly out(d, D);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> long long {
    skip();
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = text[i++] == '-';
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw parse_error("expected integer in '" + std::string(text) + "'");
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) v = v * 10 + (text[i++] - '0');
    return neg ? -v : v;
  };
  skip();
  if (text.substr(i) == "0") return out;
  bool any = false;
  while (true) {
    skip();
    if (i >= text.size()) break;
    long long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
    } else if (any) {
      throw parse_error("expected '+' or '-' in '" + std::string(text) + "'");
    }
    skip();
    long long coef = 1;
    monomial m;
    bool got = false;
    while (i < text.size()) {
      skip();
      if (i >= text.size() || text[i] == '+' || text[i] == '-') break;
      if (text[i] == '*') {
        ++i;
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        coef *= read_int();
        got = true;
        continue;
      }
      std::size_t best = names.size(), best_len = 0;
      for (std::size_t v = 0; v < names.size(); ++v)
        if (text.substr(i, names[v].size()) == names[v] && names[v].size() > best_len) {
          best = v;
          best_len = names[v].size();
        }
      if (best == names.size()) throw parse_error("unknown symbol in '" + std::string(text) + "'");
      i += best_len;
      int power = 1;
      if (text.substr(i, 2) == std::string_view("\xcc\x84")) {
        i += 2;
        power = -1;
      }
      skip();
      if (i < text.size() && text[i] == '^') {
        ++i;
        power *= static_cast<int>(read_int());
      }
      m[best] += power;
      got = true;
    }
    if (!got) throw parse_error("empty term in '" + std::string(text) + "'");
    out += laurent_poly(d, D, sign * coef, m);
    any = true;
  }
  return out;
}

}  // namespace cqca

#include <doctest.h>

#include <array>
#include <map>
#include <random>

#include <cqca/ring.hpp>

using namespace cqca;

namespace {

laurent_poly P(std::string_view s, std::uint32_t d = 2, int D = 3) { return parse_poly(s, d, D); }

laurent_poly random_poly(std::mt19937& g, std::uint32_t d, int D, int terms = 4, int span = 2) {
  std::uniform_int_distribution<int> ex(-span, span), co(0, static_cast<int>(d) - 1);
  std::vector<std::pair<monomial, long long>> ts;
  for (int t = 0; t < terms; ++t) {
    monomial m;
    for (int k = 0; k < D; ++k) m.e[static_cast<std::size_t>(k)] = ex(g);
    ts.push_back({m, co(g)});
  }
  return laurent_poly(d, D, ts);
}

}  // namespace

TEST_CASE("monomial inverse times itself is one") {
  laurent_poly x = laurent_poly::var(2, 3, 0);
  CHECK(x * antipode(x) == laurent_poly::one(2, 3));
}

TEST_CASE("mod-2 sign collapse") {
  CHECK(P("1 - x") * P("1 + x") == P("1 + x^2"));
}

TEST_CASE("product of (1-x)(1-y) over Z5 matches a nested-loop convolution") {
  auto a = P("1 - x", 5), b = P("1 - y", 5);
  std::map<std::array<int, 3>, long long> acc;
  for (auto& s : a.terms())
    for (auto& t : b.terms()) acc[{s.m[0] + t.m[0], s.m[1] + t.m[1], s.m[2] + t.m[2]}] += s.c * t.c;
  std::vector<std::pair<monomial, long long>> ts;
  for (auto& [e, c] : acc) ts.push_back({monomial{e[0], e[1], e[2]}, c});
  CHECK(a * b == laurent_poly(5, 3, ts));
  CHECK(a * b == P("1 - x - y + x y", 5));
}

TEST_CASE("antipode") {
  CHECK(antipode(P("x^2 y^-3")) == P("x^-2 y^3"));
  CHECK(antipode(laurent_poly::one(2, 3)) == laurent_poly::one(2, 3));
  std::mt19937 g(1);
  for (int n = 0; n < 50; ++n) {
    auto a = random_poly(g, 5, 3), b = random_poly(g, 5, 3);
    CHECK(antipode(antipode(a)) == a);
    CHECK(antipode(a * b) == antipode(a) * antipode(b));
  }
}

TEST_CASE("mod_inverse") {
  CHECK(mod_inverse(2, 5) == 3);
  CHECK(mod_inverse(2, 7) == 4);
  CHECK_THROWS_AS(mod_inverse(0, 5), not_invertible);
  CHECK_THROWS_AS(mod_inverse(10, 5), not_invertible);
  CHECK_THROWS_AS(mod_inverse(3, 9), invalid_modulus);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u, 17u})
    for (long long c = 1; c < p; ++c) CHECK(c * mod_inverse(c, p) % p == 1);
}

TEST_CASE("reduce_torus") {
  CHECK(reduce_torus(P("x1^5", 2, 1), torus_shape{4}) == P("x1", 2, 1));
  CHECK(reduce_torus(P("x1^-1", 2, 1), torus_shape{4}) == P("x1^3", 2, 1));
  CHECK(reduce_torus(P("x1 + x1^3 + x1^5", 2, 1), torus_shape{2}) == P("x1", 2, 1));
  CHECK_THROWS_AS(reduce_torus(P("x"), torus_shape{2}), dimension_mismatch);
  CHECK_THROWS(torus_shape{0});
}

TEST_CASE("reduce_torus is a ring homomorphism") {
  std::mt19937 g(7);
  torus_shape L{3, 2, 4};
  for (int n = 0; n < 50; ++n) {
    auto a = random_poly(g, 3, 3, 5, 4), b = random_poly(g, 3, 3, 5, 4);
    CHECK(reduce_torus(a * b, L) == reduce_torus(reduce_torus(a, L) * reduce_torus(b, L), L));
    CHECK(reduce_torus(a + b, L) == reduce_torus(a, L) + reduce_torus(b, L));
  }
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 g(3);
  for (std::uint32_t d : {2u, 3u, 5u, 6u}) {
    for (int n = 0; n < 40; ++n) {
      auto a = random_poly(g, d, 3), b = random_poly(g, d, 3), c = random_poly(g, d, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == laurent_poly::zero(d, 3));
    }
  }
}

TEST_CASE("normalization drops zero coefficients and is idempotent") {
  laurent_poly a(5, 2, {{monomial{1, 0}, 2}, {monomial{1, 0}, 3}, {monomial{0, 1}, 10}, {monomial{}, 4}});
  CHECK(a.size() == 1);
  CHECK(a.coeff(monomial{}) == 4);
  for (auto& t : a.terms()) CHECK(t.c != 0);
  laurent_poly b = laurent_poly::from_terms(5, 2, a.terms());
  CHECK(b == a);
}

TEST_CASE("ring mismatch is rejected") {
  CHECK_THROWS_AS(P("x", 2) * P("x", 3), incompatible_ring);
  CHECK_THROWS_AS(P("x", 2, 2) + P("x", 2, 3), incompatible_ring);
  CHECK_THROWS_AS(laurent_poly(1, 2), invalid_modulus);
}

TEST_CASE("overbar and ascii rendering") {
  auto a = P("3 x^-1 z^-1 + 2 x^-1", 5);
  CHECK(to_string(a) == "3x\xcc\x84z\xcc\x84 + 2x\xcc\x84");
  CHECK(to_string(P("-1 + x", 5)) == "-1 + x");
  CHECK(to_string(P("y^-1 z^-1", 2)) == "y\xcc\x84z\xcc\x84");
  CHECK(to_string(laurent_poly::zero(2, 3)) == "0");
  CHECK(parse_poly(to_ascii(a), 5, 3) == a);
  CHECK(parse_poly(to_string(a), 5, 3) == a);
  auto names = variable_names(5);
  CHECK(names[0] == "a");
  CHECK(names[4] == "e");
  CHECK(variable_names(7)[6] == "x7");
  CHECK_THROWS_AS(parse_poly("q", 2, 3), parse_error);
}

TEST_CASE("ascii rendering round-trips on random inputs") {
  std::mt19937 g(11);
  for (int n = 0; n < 50; ++n) {
    auto a = random_poly(g, 7, 7, 5, 3);
    CHECK(parse_poly(to_ascii(a), 7, 7) == a);
    CHECK(parse_poly(to_string(a), 7, 7) == a);
  }
}

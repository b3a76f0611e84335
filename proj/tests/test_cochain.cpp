#include <doctest.h>

#include <cqca/cochain.hpp>

#include "fixture.hpp"

using namespace cqca;

TEST_CASE("orientation ordering") {
  auto f = orientations(3, 2);
  REQUIRE(f.size() == 3);
  CHECK(orientation_name(3, f[0]) == "yz");
  CHECK(orientation_name(3, f[1]) == "xz");
  CHECK(orientation_name(3, f[2]) == "xy");
  auto e5 = orientations(5, 2);
  CHECK(orientation_name(5, e5.front()) == "ab");
  CHECK(orientation_name(5, e5.back()) == "de");
  CHECK(orientations(6, 3).size() == 20);
  CHECK(orientations(4, 5).empty());
}

TEST_CASE("coboundary matrices in three dimensions") {
  for (std::uint32_t d : {2u, 3u, 5u}) {
    CHECK(coboundary_matrix(3, 0, d) == fixture::load("delta_e_dv", d));
    CHECK(coboundary_matrix(3, 1, d) == fixture::load("delta_f_de", d));
    CHECK(coboundary_matrix(3, 2, d) == fixture::load("delta_c_df", d));
  }
  auto col = coboundary_matrix(3, 0, 5);
  CHECK(to_string(col(0, 0)) == "1 - x");
  CHECK_THROWS(coboundary_matrix(3, 3));
  CHECK_THROWS(coboundary_matrix(3, -1));
}

TEST_CASE("chain-complex condition for D <= 6") {
  for (int D = 1; D <= 6; ++D)
    for (int p = 0; p + 1 < D; ++p)
      CHECK((coboundary_matrix(D, p + 1, 7) * coboundary_matrix(D, p, 7)).is_zero());
}

TEST_CASE("three-dimensional cup matrices reproduce the reference displays") {
  for (std::uint32_t d : {2u, 3u, 5u, 7u}) {
    CHECK(cup_matrix({3, 2, 0}, d) == fixture::load("M_e_cup_f", d));
    CHECK(cup_matrix({3, 1, 0}, d) == fixture::load("M_f_cup_e", d));
    CHECK(cup_matrix({3, 2, 1}, d) == fixture::load("M_f_cup1_f", d));
    CHECK(cup_matrix({3, 3, 1}, d) == fixture::load("M_e_cup1_c", d));
    CHECK(cup_matrix({3, 3, 2}, d) == fixture::load("M_f_cup2_c", d));
    CHECK(cup_matrix({3, 2, 2}, d) == fixture::load("M_c_cup2_f", d));
  }
  CHECK(to_string(cup_matrix({3, 2, 0}, 5)(1, 1)) == "-x\xcc\x84z\xcc\x84");
}

TEST_CASE("five-dimensional displays are the daggers of the built matrices") {
  CHECK(coboundary_matrix(5, 2) == fixture::load("delta_c_df_5d"));
  CHECK(dagger(cup_matrix({5, 3, 0})) == fixture::load("M_f_cup_c_5d"));
  CHECK(dagger(cup_matrix({5, 2, 0})) == fixture::load("M_c_cup_f_5d"));
  CHECK(dagger(cup_matrix({5, 3, 1})) == fixture::load("M_c_cup1_c_5d"));
  // Over odd moduli the reference coboundary is the negative of the built one.
  CHECK(-coboundary_matrix(5, 2, 3) == fixture::load("delta_c_df_5d", 3));
}

TEST_CASE("invalid cup specs are rejected") {
  CHECK_THROWS_AS(cup_matrix({3, 1, 2}), invalid_cup_spec);
  CHECK_THROWS_AS(cup_matrix({3, 4, 0}), invalid_cup_spec);
  CHECK_THROWS_AS(cup_matrix({3, 2, -1}), invalid_cup_spec);
}

TEST_CASE("closed-form diagonal equals the recursive diagonal for D <= 6") {
  for (int D = 1; D <= 6; ++D)
    for (int i = 0; i <= D; ++i) {
      std::map<std::pair<std::string, std::string>, int> a, b;
      for (auto& t : cup_terms(D, i)) a[{t.a.slots, t.b.slots}] += t.sign;
      for (auto& t : cup_diagonal(i, cell_label::top(D))) b[{t.a.slots, t.b.slots}] += t.sign;
      CHECK_MESSAGE(a == b, "D=" << D << " i=" << i);
    }
}

TEST_CASE("cup_eval on single cells") {
  SUBCASE("A1 cup B1 on a square") {
    lattice_cell a{monomial{0, 0}, 0b01}, b{monomial{1, 0}, 0b10};
    auto r = cup_eval(indicator(1, a), indicator(1, b), 0, monomial{0, 0}, cell_label::top(2));
    CHECK(!r.degree_mismatch);
    CHECK(r.value == 1);
  }
  SUBCASE("A2 cup1 B2 on the cube") {
    lattice_cell a{monomial{0, 1, 0}, 0b101}, b{monomial{0, 0, 0}, 0b011};
    auto r = cup_eval(indicator(2, a), indicator(2, b), 1, monomial{0, 0, 0}, cell_label::top(3));
    CHECK(r.value == 1);
  }
  SUBCASE("cup level above both degrees gives zero") {
    lattice_cell a{monomial{0, 0, 0}, 0b001}, b{monomial{0, 0, 0}, 0b011};
    auto r = cup_eval(indicator(1, a), indicator(2, b), 2, monomial{0, 0, 0}, cell_label("0*0"));
    CHECK(r.value == 0);
    CHECK(cup_diagonal(3, cell_label("**0")).empty());
  }
  SUBCASE("degree mismatch is flagged") {
    lattice_cell a{monomial{0, 0}, 0b01};
    auto r = cup_eval(indicator(1, a), indicator(1, a), 0, monomial{0, 0}, cell_label("*0"));
    CHECK(r.degree_mismatch);
    CHECK(r.value == 0);
  }
}

TEST_CASE("cup_matrix agrees with the brute-force oracle for D <= 4") {
  for (int D = 1; D <= 4; ++D)
    for (int p = 0; p <= D; ++p)
      for (int i = 0; i <= p; ++i) {
        cup_spec s{D, p, i};
        if (!s.valid()) continue;
        auto m = cup_matrix(s, 7);
        for (std::size_t r = 0; r < m.rows(); ++r)
          for (std::size_t c = 0; c < m.cols(); ++c)
            CHECK_MESSAGE(m(r, c) == cup_entry_oracle(s, r, c, 7), "D=" << D << " p=" << p << " i=" << i);
      }
}

TEST_CASE("Leibniz identity for every valid (D <= 5, p, i)") {
  for (int D = 1; D <= 5; ++D)
    for (int p = 0; p <= D; ++p)
      for (int i = 0; i <= D; ++i)
        if (leibniz_applicable(D, p, i)) CHECK_MESSAGE(verify_cup_leibniz(D, p, i), "D=" << D << " p=" << p << " i=" << i);
}

TEST_CASE("reference three-dimensional Leibniz examples") {
  const std::uint32_t d = 5;
  auto dF = coboundary_matrix(3, 1, d), dC = coboundary_matrix(3, 2, d);
  // -M_{de cup1 f} + M_{e cup1 df} - M_{e cup f} + M^dagger_{f cup e} = 0
  auto r1 = -(dagger(dF) * cup_matrix({3, 2, 1}, d)) + cup_matrix({3, 3, 1}, d) * dC - cup_matrix({3, 2, 0}, d) +
            dagger(cup_matrix({3, 1, 0}, d));
  CHECK(r1.is_zero());
  // M_{df' cup2 f} + M_{f' cup2 df} + M_{f cup1 f'} + M^dagger_{f' cup1 f} = 0
  auto r2 = dagger(dC) * cup_matrix({3, 2, 2}, d) + cup_matrix({3, 3, 2}, d) * dC + cup_matrix({3, 2, 1}, d) +
            dagger(cup_matrix({3, 2, 1}, d));
  CHECK(r2.is_zero());
}

TEST_CASE("cup-0 matrices contracted with coboundaries on both sides vanish") {
  for (int D = 2; D <= 5; ++D)
    for (int b = 1; b < D; ++b) {
      int a = D - b;
      auto m = dagger(coboundary_matrix(D, a - 1, 7)) * cup_matrix({D, b, 0}, 7) * coboundary_matrix(D, b - 1, 7);
      CHECK_MESSAGE(m.is_zero(), "D=" << D << " b=" << b);
    }
}

#include <doctest.h>

#include <cqca/equivalence.hpp>
#include <cqca/lattice.hpp>
#include <cqca/qca.hpp>

using namespace cqca;

TEST_CASE("two-point circulant") {
  poly_matrix m = zeros(1, 1, 2, 1);
  m(0, 0) = parse_poly("1 + x1", 2, 1);
  auto e = instantiate(m, torus_shape{2});
  REQUIRE(e.rows() == 2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(e.at(i, j) == 1);
  CHECK(e.wrapped());
}

TEST_CASE("translation convention") {
  poly_matrix m = zeros(1, 1, 5, 2);
  m(0, 0) = parse_poly("3 x", 5, 2);
  auto e = instantiate(m, torus_shape{3, 3});
  // x sends site (0,0) to site (1,0) and (2,1) to (0,1)
  CHECK(e.at(1, 0) == 3);
  CHECK(e.at(3, 5) == 3);
  CHECK(e.nonzeros() == 9);
  CHECK_FALSE(e.wrapped());
}

TEST_CASE("identity instantiates to the identity") {
  CHECK(is_identity(instantiate(identity(4, 3, 2), torus_shape{3, 4})));
  CHECK_THROWS_AS(instantiate(identity(2, 3, 2), torus_shape{3, 3, 3}), dimension_mismatch);
}

TEST_CASE("three-fermion QCA on the 4x4x4 torus") {
  auto t = build_3f_3d();
  auto e = instantiate(t, torus_shape{4, 4, 4});
  CHECK(e.rows() == 768);
  CHECK(is_symplectic(e));
  CHECK(is_identity(e * e));
  CHECK(stabilizer_commutation(t, torus_shape{4, 4, 4}));
  auto e3 = instantiate(t, torus_shape{3, 3, 3});
  CHECK(is_identity(e3 * e3));
}

TEST_CASE("Z_5 alpha on the 5x5x5 torus") {
  auto a = build_zp_alpha(5, 1);
  auto e = instantiate(a, torus_shape{5, 5, 5});
  CHECK(is_symplectic(e));
  CHECK(stabilizer_commutation(a, torus_shape{5, 5, 5}));
  // Z_0 -> Z_0 + X_1 fails to commute with Z_1
  poly_matrix m = identity(4, 5, 2);
  m(1, 2) = laurent_poly::one(5, 2);
  CHECK_FALSE(stabilizer_commutation(symplectic_map(m), torus_shape{3, 3}));
}

TEST_CASE("instantiation commutes with composition") {
  auto a = build_zp_alpha(5, 1), b = build_zp_beta(5, 2);
  torus_shape L{5, 5, 5};
  CHECK(instantiate(compose(a, b), L) == instantiate(a, L) * instantiate(b, L));
  auto i = build_zp_isa_2d(5, 1);
  torus_shape L2{7, 7};
  CHECK(instantiate(i.H * i.Hinv, L2) == instantiate(i.H, L2) * instantiate(i.Hinv, L2));
  CHECK(is_identity(instantiate(i.H, L2) * instantiate(i.Hinv, L2)));
}

TEST_CASE("locality radius") {
  CHECK(locality_radius(symplectic_map::identity(3, 2, 3)) == 0);
  CHECK(locality_radius(cubic_shift(5)) == 1);
  const int r3f = locality_radius(build_3f_3d());
  CHECK(r3f >= 1);
  CHECK(r3f <= 3);
  auto a = build_zp_alpha(5, 1), b = build_zp_beta(5, -1);
  CHECK(locality_radius(compose(b, a)) <= locality_radius(a) + locality_radius(b));
  auto c = zp_order_certificate(5, 1);
  int sum = locality_radius(c.alpha) + locality_radius(c.alpha_conj);
  for (auto& s : c.stages) sum += locality_radius(s.map);
  CHECK(locality_radius(c.shift) <= sum);
}

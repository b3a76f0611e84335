#pragma once

#include <random>

#include <cqca/symplectic.hpp>

// Random band-diagonal maps with vanishing X rows of the Z columns.
namespace testing_maps {

using namespace cqca;

inline laurent_poly random_poly(std::mt19937& g, std::uint32_t d, int D, int terms) {
  std::uniform_int_distribution<int> ex(-1, 1), co(1, static_cast<int>(d) - 1);
  std::vector<std::pair<monomial, long long>> ts;
  for (int t = 0; t < terms; ++t) {
    monomial m;
    for (int k = 0; k < D; ++k) m.e[static_cast<std::size_t>(k)] = ex(g);
    ts.push_back({m, co(g)});
  }
  return laurent_poly(d, D, ts);
}

// A CNOT layer X_j -> X_j + f X_i, a monomial rescaling, or a symmetric Z shear.
inline symplectic_map random_separated_factor(std::mt19937& g, std::size_t q, std::uint32_t d, int D) {
  auto one = identity(q, d, D), z = zeros(q, q, d, D);
  std::uniform_int_distribution<std::size_t> site(0, q - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  int which = kind(g);
  if (q == 1 && which == 0) which = 1;
  switch (which) {
    case 0: {
      std::size_t i = site(g), j = site(g);
      if (i == j) j = (i + 1) % q;
      auto f = random_poly(g, d, D, 2);
      poly_matrix xx = one, zz = one;
      xx(i, j) = f;
      zz(j, i) = -antipode(f);
      return symplectic_map::from_blocks(xx, z, z, zz);
    }
    case 1: {
      std::size_t i = site(g);
      auto m = random_poly(g, d, D, 1);
      poly_matrix xx = one, zz = one;
      xx(i, i) = m;
      zz(i, i) = laurent_poly(d, D, mod_inverse(m.terms()[0].c, d), m.terms()[0].m);
      return symplectic_map::from_blocks(xx, z, z, zz);
    }
    default: {
      std::size_t i = site(g), j = site(g);
      poly_matrix s = z;
      auto f = random_poly(g, d, D, 2);
      s(i, j) = s(i, j) + f;
      s(j, i) = s(j, i) + antipode(f);
      return symplectic_map::from_blocks(one, z, s, one);
    }
  }
}

// Product of n random factors on q qudits.
inline symplectic_map random_separated_product(std::mt19937& g, std::size_t q, std::uint32_t d, int D, int n) {
  auto t = symplectic_map::identity(q, d, D);
  for (int f = 0; f < n; ++f) t = compose(t, random_separated_factor(g, q, d, D));
  return t;
}

}  // namespace testing_maps

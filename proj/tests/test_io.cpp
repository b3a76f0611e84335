#include <doctest.h>

#include <cqca/io.hpp>

using namespace cqca;

TEST_CASE("matrix JSON round trip") {
  for (auto& m : {build_3f_3d().matrix(), build_zp_alpha(7, 3).matrix(), build_zp_isa_2d(5, 2).Hinv}) {
    auto j = to_json(m);
    CHECK(matrix_from_json(j) == m);
    CHECK(matrix_from_json(json::parse(j.dump())) == m);
  }
  auto j = to_json(build_3f_3d());
  CHECK(j["q"] == 6);
  CHECK(j["symplectic"] == true);
  CHECK(j["matrix"]["rows"] == 12);
  CHECK(j["matrix"]["variables"] == json::array({"x", "y", "z"}));
}

TEST_CASE("malformed matrix JSON") {
  auto j = to_json(identity(2, 3, 2));
  j["rows"] = 3;
  CHECK_THROWS_AS(matrix_from_json(j), shape_mismatch);
  auto k = to_json(identity(2, 3, 2));
  k["entries"][0][0] = "1 + w";
  CHECK_THROWS_AS(matrix_from_json(k), parse_error);
}

TEST_CASE("certificate JSON") {
  auto j = to_json(zp_order_certificate(5, 1));
  CHECK(j["verified"] == true);
  CHECK(j["claimed_order"] == 2);
  CHECK(j["a"] == 2);
  CHECK(j["stages"].size() == 5);
  CHECK(j["stages"][0]["kind"] == "sign");
  CHECK(j["shift"].size() == 6);
  CHECK(j["shift"][1] == "4*x^-1*z^-1");
  CHECK_FALSE(j.contains("failure"));
  auto c = zp_order_certificate(3, 1);
  c.stages.pop_back();
  auto bad = to_json(c);
  CHECK(bad["verified"] == false);
  CHECK(bad["failure"]["what"] == "circuit times target powers");
  CHECK(to_json(zp_order_certificate(3, 1))["b"] == 1);
}

TEST_CASE("text rendering") {
  CHECK(to_text(cup_matrix({3, 2, 0}, 5)).rfind("[y\xcc\x84z\xcc\x84, 0, 0]\n", 0) == 0);
  CHECK(shift_text(cubic_shift(5)) ==
        "diag(y\xcc\x84z\xcc\x84, -x\xcc\x84z\xcc\x84, x\xcc\x84y\xcc\x84, y\xcc\x84z\xcc\x84, -x\xcc\x84z\xcc\x84, "
        "x\xcc\x84y\xcc\x84)");
}

TEST_CASE("coordinate list export") {
  poly_matrix m = zeros(2, 2, 3, 1);
  m(0, 0) = laurent_poly::one(3, 1);
  m(1, 1) = laurent_poly::one(3, 1);
  m(0, 1) = parse_poly("2 x1", 3, 1);
  auto s = coordinate_list(instantiate(m, torus_shape{3}));
  std::istringstream in(s);
  std::string header;
  std::getline(in, header);
  auto h = json::parse(header);
  CHECK(h["d"] == 3);
  CHECK(h["q"] == 1);
  CHECK(h["rows"] == 6);
  CHECK(h["nonzeros"] == 9);
  std::size_t lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 9);
  CHECK(s.find("\n2 1 2\n") != std::string::npos);
}

TEST_CASE("ISA JSON") {
  auto j = to_json(build_zp_isa_2d(5, 1));
  CHECK(j["commuting"] == true);
  CHECK(j["witness_inverts"] == true);
  CHECK(j["q"] == 2);
  CHECK(to_json(build_z2_isa_2d())["kind"] == "z2");
}

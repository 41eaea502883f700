#include <doctest.h>

#include "percy/json_io.hpp"
#include "test_util.hpp"

using namespace percy;
using percy::testing::random_valid_perv;

TEST_CASE("perverse datum roundtrip") {
  std::mt19937 rng(61);
  for (int rep = 0; rep < 10; ++rep) {
    PervData d = random_valid_perv(rng, 3);
    CHECK(perv_from_json(to_json(d)) == d);
  }
  PervData sky = skyscraper(2);  // empty matrices survive the trip
  CHECK(perv_from_json(to_json(sky)) == sky);
}

TEST_CASE("rationals as strings") {
  PervData d;
  d.phi = d.psi = 1;
  d.a = rat_zero(1, 1);
  d.b = rat_zero(1, 1);
  d.a(0, 0) = rat(1, 2);
  d.b(0, 0) = rat(-7, 3);
  Json j = to_json(d);
  CHECK(j["a"][0][0] == "1/2");
  CHECK(j["b"][0][0] == "-7/3");
  CHECK(perv_from_json(j) == d);
  // integer literals are accepted on input
  j["a"][0][0] = 2;
  CHECK(perv_from_json(j).a(0, 0) == Rat(2));
}

TEST_CASE("paracyclic and duplicial roundtrips") {
  std::mt19937 rng(62);
  PervData d = random_valid_perv(rng, 2);
  ParacyclicVec x = paracyclic_nerve(d, 3);
  ParacyclicVec x2 = paracyclic_from_json(to_json(x));
  CHECK(x2.dims == x.dims);
  for (int n = 1; n <= 3; ++n)
    for (int i = 0; i <= n; ++i) CHECK(mat_eq(x2.d(n, i), x.d(n, i)));
  for (int n = 0; n <= 3; ++n) CHECK(mat_eq(x2.t[n], x.t[n]));

  DuplicialVec y = duplicial_restriction(x);
  DuplicialVec y2 = duplicial_from_json(to_json(y));
  for (int n = 1; n <= 3; ++n) CHECK(mat_eq(y2.extra[n], y.extra[n]));

  Ducomplex b = to_ducomplex(y);
  Ducomplex b2 = ducomplex_from_json(to_json(b));
  CHECK(b2.dims == b.dims);
  for (std::size_t n = 1; n < b.dims.size(); ++n) {
    CHECK(mat_eq(b2.d[n], b.d[n]));
    CHECK(mat_eq(b2.delta[n], b.delta[n]));
  }

  Complex c = dold_kan_chains(x);
  Complex c2 = complex_from_json(to_json(c));
  CHECK(c2.dims == c.dims);
}

TEST_CASE("paramap roundtrip") {
  std::mt19937 rng(63);
  for (int rep = 0; rep < 20; ++rep) {
    ParaMap f = percy::testing::random_paramap(rng);
    CHECK(paramap_from_json(to_json(f)) == f);
  }
}

TEST_CASE("surface roundtrip") {
  SurfacePervData s;
  s.genus = 1;
  s.r = 1;
  s.handles.emplace_back(rat_identity(1), rat_identity(1));
  s.locals.push_back(extension_by_zero(rat_identity(1)));
  Json j = to_json(s);
  SurfacePervData s2 = surface_from_json(j);
  CHECK(s2.genus == s.genus);
  CHECK(s2.r == s.r);
  CHECK(s2.locals[0] == s.locals[0]);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(perv_from_json(Json::parse(R"({"phi": 1})")), error);
  CHECK_THROWS_AS(perv_from_json(Json::parse(R"({"phi": -1, "psi": 0, "a": [], "b": []})")),
                  error);
  CHECK_THROWS_AS(perv_from_json(Json::parse(
                      R"({"phi": 1, "psi": 1, "a": [["x"]], "b": [["1"]]})")),
                  error);
  CHECK_THROWS_AS(
      perv_from_json(Json::parse(R"({"phi": 1, "psi": 1, "a": [["1","2"]], "b": [["1"]]})")),
      error);
  CHECK_THROWS_AS(paramap_from_json(Json::parse(R"({"src": 1, "dst": 1, "values": [2, 1]})")),
                  error);
  CHECK_THROWS_AS(
      simplicial_from_json(Json::parse(R"({"n_max": 1, "dims": [-1, 2], "faces": {}})")),
      error);
  CHECK_THROWS_AS(complex_from_json(Json::parse(R"({"dims": [2, -1], "d": {}})")), error);
}

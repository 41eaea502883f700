#include <doctest.h>

#include "percy/linalg.hpp"
#include "test_util.hpp"

using namespace percy;
using percy::testing::random_matrix;

namespace {

RatMat mat(std::initializer_list<std::initializer_list<Rat>> rows) {
  RatMat m(static_cast<Index>(rows.size()),
           rows.size() ? static_cast<Index>(rows.begin()->size()) : 0);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

}  // namespace

TEST_CASE("multiply") {
  CHECK(mat_eq(multiply(rat_identity(2), rat_identity(2)), rat_identity(2)));
  RatMat ones = mat({{1, 1}, {1, 1}});
  RatMat pm = mat({{1}, {-1}});
  CHECK(mat_eq(multiply(ones, pm), rat_zero(2, 1)));
  RatMat halves = mat({{rat(1, 2), rat(1, 3)}});
  CHECK(mat_eq(multiply(halves, mat({{2}, {3}})), mat({{2}})));
  CHECK_THROWS_AS(multiply(rat_identity(2), rat_identity(3)), error);
}

TEST_CASE("multiply is associative") {
  std::mt19937 rng(1);
  for (int rep = 0; rep < 50; ++rep) {
    std::uniform_int_distribution<Index> dim(0, 4);
    Index a = dim(rng), b = dim(rng), c = dim(rng), d = dim(rng);
    RatMat f = random_matrix(rng, a, b), g = random_matrix(rng, b, c),
           h = random_matrix(rng, c, d);
    CHECK(mat_eq((f * g) * h, f * (g * h)));
  }
}

TEST_CASE("kernel basis") {
  RatMat ones = mat({{1, 1}, {1, 1}});
  RatMat k = kernel_basis(ones);
  REQUIRE(k.cols() == 1);
  CHECK(is_zero(ones * k));
  CHECK(k(0, 0) * Rat(-1) == k(1, 0));  // spans (1, -1)

  CHECK(kernel_basis(rat_identity(4)).cols() == 0);

  RatMat wide = mat({{1, 2, 3}});
  RatMat kw = kernel_basis(wide);
  REQUIRE(kw.cols() == 2);
  CHECK(is_zero(wide * kw));
}

TEST_CASE("rank, inverse, solve") {
  CHECK(mat_eq(inverse(rat_identity(3)), rat_identity(3)));
  CHECK(rank(mat({{1, 2, 3}, {2, 4, 6}})) == 1);
  CHECK_THROWS_WITH_AS(inverse(mat({{1, 1}, {1, 1}})), "inverse: singular matrix", error);
  CHECK_THROWS_AS(inverse(mat({{1, 2, 3}})), error);

  std::mt19937 rng(2);
  for (int rep = 0; rep < 40; ++rep) {
    std::uniform_int_distribution<Index> dim(0, 5);
    Index r = dim(rng), c = dim(rng);
    RatMat f = random_matrix(rng, r, c);
    RatMat k = kernel_basis(f);
    CHECK(is_zero(f * k));
    CHECK(rank(f) + k.cols() == f.cols());
    if (is_invertible(f)) {
      RatMat fi = inverse(f);
      CHECK(mat_eq(fi * f, rat_identity(r)));
      CHECK(mat_eq(f * fi, rat_identity(r)));
    }
    RatVec y = random_matrix(rng, r, 1);
    if (auto x = solve(f, y)) CHECK(mat_eq(f * *x, y));
  }
}

TEST_CASE("image basis spans the column space") {
  std::mt19937 rng(3);
  for (int rep = 0; rep < 30; ++rep) {
    RatMat f = random_matrix(rng, 4, 5);
    RatMat im = image_basis(f);
    CHECK(im.cols() == rank(f));
    CHECK(solve_all(im, f).has_value());  // columns of f lie in the span
    CHECK(rank(im) == im.cols());
  }
}

TEST_CASE("direct sum") {
  RatMat s = direct_sum(mat({{2}}), rat_identity(2));
  CHECK(s.rows() == 3);
  CHECK(s(0, 0) == Rat(2));
  CHECK(s(1, 1) == Rat(1));
  CHECK(s(0, 1) == Rat(0));
}

TEST_CASE("fiber product") {
  // x -> x against y -> 2y meet in the line through (2, 1)
  FiberProduct fp = fiber_product(mat({{1}}), mat({{2}}));
  REQUIRE(fp.basis.cols() == 1);
  CHECK(fp.basis(0, 0) == fp.basis(1, 0) * Rat(2));

  std::mt19937 rng(4);
  for (int rep = 0; rep < 30; ++rep) {
    std::uniform_int_distribution<Index> dim(0, 4);
    Index c = dim(rng);
    RatMat f = random_matrix(rng, c, dim(rng));
    RatMat g = random_matrix(rng, c, dim(rng));
    FiberProduct p = fiber_product(f, g);
    CHECK(mat_eq(f * p.proj_a, g * p.proj_b));
    CHECK(p.basis.cols() == kernel_basis(hcat(f, -g)).cols());
  }
}

TEST_CASE("empty matrices are first class") {
  RatMat e03 = rat_zero(0, 3), e30 = rat_zero(3, 0);
  CHECK((e03 * e30).rows() == 0);
  RatMat z = e30 * e03;  // 3x3 zero
  CHECK(is_zero(z));
  CHECK(rank(e03) == 0);
  CHECK(kernel_basis(e03).cols() == 3);
  CHECK(is_invertible(rat_zero(0, 0)));
  CHECK(inverse(rat_zero(0, 0)).rows() == 0);
}

TEST_CASE("rationals parse and print canonically") {
  CHECK(to_string(rat(4, 2)) == "2");
  CHECK(to_string(rat(-1, 2)) == "-1/2");
  CHECK(rat_from_string("6/4") == rat(3, 2));
  CHECK(rat_from_string("-7") == rat(-7));
  CHECK_THROWS_AS(rat_from_string("1/0"), error);
  CHECK_THROWS_AS(rat_from_string("x"), error);
}

#include <doctest.h>

#include "percy/paramap.hpp"
#include "test_util.hpp"

using namespace percy;
using percy::testing::random_paramap;

TEST_CASE("generators") {
  CHECK(tau(2).values == std::vector<std::int64_t>{1, 2, 3});
  CHECK(delta(1, 0).values == std::vector<std::int64_t>{1});
  CHECK(sigma(0, 0).values == std::vector<std::int64_t>{0, 0});
  CHECK_THROWS_AS(delta(2, 3), error);
  CHECK_THROWS_AS(sigma(2, -1), error);
  CHECK_THROWS_AS(delta(0, 0), error);
}

TEST_CASE("compose") {
  ParaMap t1 = tau(1);
  CHECK(compose(t1, t1).values == std::vector<std::int64_t>{2, 3});
  CHECK(compose(sigma(0, 0), delta(1, 0)) == para_identity(0));
  CHECK_THROWS_AS(compose(tau(1), tau(2)), error);

  std::mt19937 rng(11);
  for (int rep = 0; rep < 100; ++rep) {
    ParaMap f = random_paramap(rng);
    CHECK(compose(para_identity(f.dst), f) == f);
    CHECK(compose(f, para_identity(f.src)) == f);
  }
}

TEST_CASE("compose is associative") {
  std::mt19937 rng(13);
  auto with_src = [&rng](int src) {
    for (;;) {
      ParaMap g = random_paramap(rng);
      if (g.src == src) return g;
    }
  };
  for (int rep = 0; rep < 300; ++rep) {
    ParaMap f = random_paramap(rng);
    ParaMap g = with_src(f.dst);
    ParaMap h = with_src(g.dst);
    CHECK(compose(h, compose(g, f)) == compose(compose(h, g), f));
  }
}

// In this normal form (tau = +1 shift, composition (g o f)(i) = g^(f(i)))
// the shift relations read tau_n delta_i = delta_{i+1} tau_{n-1} and
// tau_n delta_n = delta_0; the classical family with lowered indices holds
// verbatim for tau^{-1}.
TEST_CASE("shift relations") {
  for (int n = 1; n <= 6; ++n) {
    for (int i = 0; i <= n - 1; ++i)
      CHECK(compose(tau(n), delta(n, i)) == compose(delta(n, i + 1), tau(n - 1)));
    CHECK(compose(tau(n), delta(n, n)) == delta(n, 0));
    for (int i = 1; i <= n; ++i)
      CHECK(compose(tau_inv(n), delta(n, i)) == compose(delta(n, i - 1), tau_inv(n - 1)));
    CHECK(compose(tau_inv(n), delta(n, 0)) == delta(n, n));
  }
  for (int n = 0; n <= 6; ++n) {
    for (int i = 0; i <= n - 1; ++i)
      CHECK(compose(tau(n), sigma(n, i)) == compose(sigma(n, i + 1), tau(n + 1)));
    CHECK(compose(tau(n), sigma(n, n)) ==
          compose(sigma(n, 0), compose(tau(n + 1), tau(n + 1))));
    for (int i = 1; i <= n; ++i)
      CHECK(compose(tau_inv(n), sigma(n, i)) == compose(sigma(n, i - 1), tau_inv(n + 1)));
    CHECK(compose(tau_inv(n), sigma(n, 0)) ==
          compose(sigma(n, n), compose(tau_inv(n + 1), tau_inv(n + 1))));
  }
}

TEST_CASE("simplicial relations among delta and sigma") {
  for (int n = 1; n <= 5; ++n) {
    for (int j = 1; j <= n + 1; ++j)
      for (int i = 0; i < j; ++i)
        CHECK(compose(delta(n + 1, j), delta(n, i)) ==
              compose(delta(n + 1, i), delta(n, j - 1)));
    for (int j = 0; j <= n - 1; ++j)
      for (int i = 0; i <= j; ++i)
        CHECK(compose(sigma(n - 1, j), sigma(n, i)) ==
              compose(sigma(n - 1, i), sigma(n, j + 1)));
  }
  for (int n = 0; n <= 5; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        ParaMap lhs = compose(sigma(n, j), delta(n + 1, i));
        if (i == j || i == j + 1)
          CHECK(lhs == para_identity(n));
        else if (i < j)
          CHECK(lhs == compose(delta(n, i), sigma(n - 1, j - 1)));
        else
          CHECK(lhs == compose(delta(n, i - 1), sigma(n - 1, j)));
      }
}

TEST_CASE("membership") {
  CHECK(membership(tau(1), CatFlavor::Xi));
  CHECK(!membership(tau(1), CatFlavor::Delta));
  CHECK(membership(delta(2, 1), CatFlavor::Delta));
  CHECK(!membership(delta(2, 1), CatFlavor::LambdaInfinitySurj));
  CHECK(!membership(tau_inv(2), CatFlavor::Xi));
  CHECK(membership(sigma(2, 1), CatFlavor::DeltaSurj));
  CHECK(!membership(delta(2, 1), CatFlavor::DeltaSurj));
  CHECK(membership(compose(tau(2), sigma(2, 1)), CatFlavor::LambdaInfinitySurj));
  std::mt19937 rng(7);
  for (int rep = 0; rep < 20; ++rep)
    CHECK(membership(random_paramap(rng), CatFlavor::LambdaInfinity));
}

TEST_CASE("subcategories are closed under composition") {
  // products of each flavor's generators stay in the flavor
  std::mt19937 rng(18);
  std::uniform_int_distribution<int> len(1, 8), coin(0, 3);
  auto grow = [&](ParaMap f, CatFlavor flavor, bool taus, bool deltas, bool sigmas) {
    int steps = len(rng);
    for (int s = 0; s < steps; ++s) {
      int n = f.dst;
      int kind = coin(rng);
      if (kind == 0 && taus)
        f = compose(tau(n), f);
      else if (kind == 1 && deltas)
        f = compose(delta(n + 1, coin(rng) % (n + 2)), f);
      else if (sigmas && n >= 1)
        f = compose(sigma(n - 1, coin(rng) % n), f);
      CHECK(membership(f, flavor));
    }
    return f;
  };
  for (int rep = 0; rep < 50; ++rep) {
    int n = 1 + rep % 4;
    grow(para_identity(n), CatFlavor::Delta, false, true, true);
    grow(para_identity(n), CatFlavor::DeltaSurj, false, false, true);
    grow(para_identity(n), CatFlavor::Xi, true, true, true);
    grow(para_identity(n), CatFlavor::LambdaInfinitySurj, true, false, true);
  }

  // the generators live where they should
  CHECK(membership(delta(3, 1), CatFlavor::Delta));
  CHECK(membership(sigma(3, 1), CatFlavor::DeltaSurj));
  CHECK(membership(tau(3), CatFlavor::Xi));
  CHECK(membership(tau(3), CatFlavor::LambdaInfinitySurj));
  CHECK(membership(tau_inv(3), CatFlavor::LambdaInfinitySurj));
}

TEST_CASE("factorize") {
  CHECK(factorize(para_identity(3)).empty());

  ParaMap f = compose(tau(2), delta(2, 1));
  CHECK(evaluate_word(factorize(f), f.src) == f);

  std::mt19937 rng(14);
  for (int rep = 0; rep < 200; ++rep) {
    ParaMap g = random_paramap(rng);
    auto word = factorize(g);
    CHECK(evaluate_word(word, g.src) == g);
    for (const auto& l : word) CHECK(membership(letter_map(l), CatFlavor::LambdaInfinity));
  }
}

TEST_CASE("project to lambda") {
  for (int n = 0; n <= 4; ++n) {
    auto p = project_to_lambda(tau_pow(n, n + 1));
    CHECK(p.rep == para_identity(n));
    CHECK(p.winding == 1);
    auto q = project_to_lambda(para_identity(n));
    CHECK(q.rep == para_identity(n));
    CHECK(q.winding == 0);
  }
  ParaMap f = compose(tau_pow(2, 3), delta(2, 1));
  auto p = project_to_lambda(f);
  CHECK(p.rep == delta(2, 1));
  CHECK(p.winding == 1);

  std::mt19937 rng(15);
  for (int rep = 0; rep < 100; ++rep) {
    ParaMap g = random_paramap(rng);
    auto pr = project_to_lambda(g);
    CHECK(pr.rep.values[0] >= 0);
    CHECK(pr.rep.values[0] <= pr.rep.dst);
    CHECK(membership(pr.rep, CatFlavor::Lambda));
    CHECK(compose(tau_pow(g.dst, (g.dst + 1) * pr.winding), pr.rep) == g);
    auto shifted = project_to_lambda(compose(tau_pow(g.dst, g.dst + 1), g));
    CHECK(shifted.rep == pr.rep);
    CHECK(shifted.winding == pr.winding + 1);
  }
}

TEST_CASE("centrality of the full twist") {
  std::mt19937 rng(16);
  for (int rep = 0; rep < 200; ++rep) {
    ParaMap f = random_paramap(rng);
    CHECK(compose(f, tau_pow(f.src, f.src + 1)) == compose(tau_pow(f.dst, f.dst + 1), f));
  }
}

TEST_CASE("duality") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(dual(tau(n)) == tau_inv(n));
    CHECK(dual(para_identity(n)) == para_identity(n));
  }
  std::mt19937 rng(17);
  for (int rep = 0; rep < 200; ++rep) {
    ParaMap f = random_paramap(rng);
    auto with_src = [&rng](int src) {
      for (;;) {
        ParaMap g = random_paramap(rng);
        if (g.src == src) return g;
      }
    };
    ParaMap g = with_src(f.dst);
    CHECK(dual(compose(g, f)) == compose(dual(f), dual(g)));
    // double dual is the shift conjugate, not the identity
    ParaMap dd = dual(dual(f));
    for (int i = 0; i <= f.src; ++i) CHECK(dd.values[i] == eval_at(f, i - 1) + 1);
  }
}

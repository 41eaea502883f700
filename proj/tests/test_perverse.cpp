#include <doctest.h>

#include "percy/perverse.hpp"
#include "test_util.hpp"

using namespace percy;
using percy::testing::random_invertible;
using percy::testing::random_matrix;
using percy::testing::random_valid_perv;

namespace {

PervData scalar(Rat a, Rat b) {
  PervData d;
  d.phi = d.psi = 1;
  d.a = rat_zero(1, 1);
  d.b = rat_zero(1, 1);
  d.a(0, 0) = a;
  d.b(0, 0) = b;
  return d;
}

}  // namespace

TEST_CASE("validate") {
  PervReport bad = validate(scalar(1, 1));
  CHECK(!bad.ok());
  CHECK(bad.shapes_ok);
  CHECK(!bad.t_psi_invertible);

  PervReport good = validate(scalar(1, 2));
  CHECK(good.ok());
  Monodromies m = monodromies(scalar(1, 2));
  CHECK(m.t_phi(0, 0) == Rat(-1));
  CHECK(m.t_psi(0, 0) == Rat(-1));

  CHECK(validate(skyscraper(3)).ok());
  PervData shapeless = scalar(1, 2);
  shapeless.a = rat_zero(2, 1);
  CHECK(!validate(shapeless).shapes_ok);
}

TEST_CASE("monodromies") {
  Monodromies sky = monodromies(skyscraper(2));
  CHECK(mat_eq(sky.t_phi, rat_identity(2)));
  CHECK(sky.t_psi.rows() == 0);

  std::mt19937 rng(21);
  for (int rep = 0; rep < 20; ++rep) {
    RatMat t = random_invertible(rng, 3);
    Monodromies m = monodromies(extension_by_zero(t));
    CHECK(mat_eq(m.t_psi, t));
    CHECK(mat_eq(m.t_phi, t));
    Monodromies md = monodromies(direct_image(t));
    CHECK(mat_eq(md.t_psi, t));
  }
}

TEST_CASE("invertibility of the two monodromies is equivalent") {
  std::mt19937 rng(22);
  std::uniform_int_distribution<Index> dim(0, 6);
  for (int rep = 0; rep < 200; ++rep) {
    Index phi = dim(rng), psi = dim(rng);
    RatMat a = random_matrix(rng, psi, phi);
    RatMat b = random_matrix(rng, phi, psi);
    CHECK(is_invertible(rat_identity(psi) - a * b) ==
          is_invertible(rat_identity(phi) - b * a));
  }
}

TEST_CASE("half monodromy") {
  RatMat p = half_monodromy(scalar(1, 2));
  CHECK(p(0, 0) == Rat(-1));
  CHECK(p(0, 1) == Rat(2));
  CHECK(p(1, 0) == Rat(-1));
  CHECK(p(1, 1) == Rat(1));
  RatMat p2 = p * p;
  CHECK(p2(0, 0) == Rat(-1));
  CHECK(p2(1, 1) == Rat(-1));
  CHECK(p2(0, 1) == Rat(0));

  RatMat psky = half_monodromy(skyscraper(1));
  CHECK(psky(0, 0) == Rat(-1));
  CHECK(mat_eq(psky * psky, rat_identity(1)));

  std::mt19937 rng(23);
  for (int rep = 0; rep < 100; ++rep) {
    PervData d = random_valid_perv(rng);
    Monodromies m = monodromies(d);
    CHECK(mat_eq(half_monodromy(d) * half_monodromy(d), direct_sum(m.t_phi, m.t_psi)));
  }
}

TEST_CASE("hom spaces") {
  CHECK(hom_space(skyscraper(1), skyscraper(1)).size() == 1);
  CHECK(hom_space(skyscraper(1), extension_by_zero(rat_identity(1) * Rat(2))).empty());

  std::mt19937 rng(24);
  for (int rep = 0; rep < 15; ++rep) {
    PervData f = random_valid_perv(rng, 3);
    auto basis = hom_space(f, f);
    if (f.phi + f.psi > 0) CHECK(!basis.empty());  // the identity is nonzero
    for (const auto& m : basis) CHECK(is_morphism(f, f, m));
    // the identity lies in the span: its defining equations are in the kernel
    CHECK(is_morphism(f, f, identity_morphism(f)));
    PervData g = random_valid_perv(rng, 3);
    for (const auto& m : hom_space(f, g)) CHECK(is_morphism(f, g, m));
  }
}

namespace {

RatMat kron(const RatMat& a, const RatMat& b) {
  RatMat k = rat_zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      for (Index p = 0; p < b.rows(); ++p)
        for (Index q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
  return k;
}

// Independent route: vec(f_psi a - a' f_phi) = 0 and vec(f_phi b - b' f_psi)
// = 0 written with Kronecker products, vec being column-major stacking.
Index hom_dimension_kron(const PervData& f, const PervData& g) {
  RatMat eq1 = hcat(RatMat(-kron(rat_identity(f.phi), g.a)),
                    kron(f.a.transpose(), rat_identity(g.psi)));
  RatMat eq2 = hcat(kron(f.b.transpose(), rat_identity(g.phi)),
                    RatMat(-kron(rat_identity(f.psi), g.b)));
  return kernel_basis(vcat(eq1, eq2)).cols();
}

}  // namespace

TEST_CASE("hom dimension agrees with the Kronecker route") {
  std::mt19937 rng(240);
  for (int rep = 0; rep < 15; ++rep) {
    PervData f = random_valid_perv(rng, 3);
    PervData g = random_valid_perv(rng, 3);
    CHECK(hom_space(f, g).size() == static_cast<std::size_t>(hom_dimension_kron(f, g)));
  }
}

TEST_CASE("kernel and cokernel") {
  std::mt19937 rng(25);
  PervData f = random_valid_perv(rng, 3);
  SubObject k = kernel(f, f, identity_morphism(f));
  CHECK(k.data.phi == 0);
  CHECK(k.data.psi == 0);

  PervData g = random_valid_perv(rng, 3);
  PervMorphism zero{rat_zero(g.phi, f.phi), rat_zero(g.psi, f.psi)};
  SubObject c = cokernel(f, g, zero);
  CHECK(c.data.phi == g.phi);
  CHECK(c.data.psi == g.psi);
  CHECK(validate(c.data).ok());

  // canonical map extension_by_zero(T) -> direct_image(T): kernel has
  // dimensions (0, dim ker(I - T)) in the (Phi, Psi) order
  RatMat t = rat_zero(2, 2);
  t(0, 0) = 1;
  t(0, 1) = 1;
  t(1, 1) = 1;  // unipotent: I - T has rank 1
  PervData ez = extension_by_zero(t);
  PervData di = direct_image(t);
  RatMat n = rat_identity(2) - t;
  PervMorphism can{rat_identity(2), n};
  REQUIRE(is_morphism(ez, di, can));
  SubObject kc = kernel(ez, di, can);
  CHECK(kc.data.phi == 0);
  CHECK(kc.data.psi == kernel_basis(n).cols());
}

TEST_CASE("kernel and cokernel satisfy the universal linear conditions") {
  std::mt19937 rng(26);
  int done = 0;
  while (done < 10) {
    PervData f = random_valid_perv(rng, 3);
    PervData g = random_valid_perv(rng, 3);
    auto basis = hom_space(f, g);
    if (basis.empty()) continue;
    const PervMorphism& m = basis[static_cast<std::size_t>(done) % basis.size()];
    SubObject k = kernel(f, g, m);
    CHECK(is_morphism(k.data, f, k.map));
    CHECK(is_zero(m.f_phi * k.map.f_phi));
    CHECK(is_zero(m.f_psi * k.map.f_psi));
    SubObject c = cokernel(f, g, m);
    CHECK(is_morphism(g, c.data, c.map));
    CHECK(is_zero(c.map.f_phi * m.f_phi));
    CHECK(is_zero(c.map.f_psi * m.f_psi));
    // inclusion is injective onto the full kernel, projection surjective
    CHECK(rank(k.map.f_phi) == k.data.phi);
    CHECK(k.data.phi == kernel_basis(m.f_phi).cols());
    CHECK(rank(k.map.f_psi) == k.data.psi);
    CHECK(k.data.psi == kernel_basis(m.f_psi).cols());
    CHECK(rank(c.map.f_phi) == c.data.phi);
    CHECK(rank(c.map.f_psi) == c.data.psi);
    // any test morphism killed by m factors through the inclusion
    for (const auto& t0 : hom_space(random_valid_perv(rng, 2), f)) {
      if (!is_zero(m.f_phi * t0.f_phi) || !is_zero(m.f_psi * t0.f_psi)) continue;
      CHECK(solve_all(k.map.f_phi, t0.f_phi).has_value());
      CHECK(solve_all(k.map.f_psi, t0.f_psi).has_value());
    }
    ++done;
  }
}

TEST_CASE("dualize") {
  CHECK(dualize(skyscraper(2)) == skyscraper(2));
  PervData d = dualize(scalar(1, 2));
  CHECK(d.a(0, 0) == Rat(2));
  CHECK(d.b(0, 0) == Rat(1));
  CHECK(validate(d).ok());

  std::mt19937 rng(27);
  for (int rep = 0; rep < 50; ++rep) {
    PervData f = random_valid_perv(rng, 3);
    CHECK(dualize(dualize(f)) == f);
    Monodromies m = monodromies(f), md = monodromies(dualize(f));
    CHECK(mat_eq(md.t_phi, m.t_phi.transpose()));
    CHECK(mat_eq(md.t_psi, m.t_psi.transpose()));
    PervData g = random_valid_perv(rng, 3);
    CHECK(hom_space(f, g).size() == hom_space(dualize(g), dualize(f)).size());
  }
}

TEST_CASE("dualize is exact") {
  std::mt19937 rng(28);
  int done = 0;
  while (done < 10) {
    PervData f = random_valid_perv(rng, 2);
    PervData g = random_valid_perv(rng, 2);
    auto basis = hom_space(f, g);
    if (basis.empty()) continue;
    const PervMorphism& m = basis[0];
    PervMorphism md{m.f_phi.transpose(), m.f_psi.transpose()};
    REQUIRE(is_morphism(dualize(g), dualize(f), md));
    SubObject k = kernel(f, g, m);
    SubObject cd = cokernel(dualize(g), dualize(f), md);
    CHECK(k.data.phi == cd.data.phi);
    CHECK(k.data.psi == cd.data.psi);
    ++done;
  }
}

TEST_CASE("constructors") {
  RatMat two = rat_identity(1) * Rat(2);
  PervData ez = extension_by_zero(two);
  CHECK(monodromies(ez).t_psi(0, 0) == Rat(2));
  CHECK(ez.a(0, 0) == Rat(1));
  CHECK(ez.b(0, 0) == Rat(-1));

  PervData ie = intermediate_extension(rat_identity(3));
  CHECK(ie.phi == 0);
  CHECK(ie.psi == 3);

  RatMat half = rat_identity(1) * rat(1, 2);
  Monodromies m = monodromies(direct_image(half));
  CHECK(m.t_phi(0, 0) == rat(1, 2));
  CHECK(m.t_psi(0, 0) == rat(1, 2));

  CHECK_THROWS_AS(extension_by_zero(rat_zero(2, 2)), error);

  std::mt19937 rng(29);
  for (int rep = 0; rep < 20; ++rep) {
    RatMat t = random_invertible(rng, 3);
    for (const PervData& d :
         {extension_by_zero(t), direct_image(t), intermediate_extension(t)}) {
      CHECK(validate(d).ok());
      CHECK(mat_eq(monodromies(d).t_psi, t));
    }
    CHECK(intermediate_extension(t).phi == rank(rat_identity(3) - t));
  }
}

TEST_CASE("direct sum of data") {
  std::mt19937 rng(30);
  PervData f = random_valid_perv(rng, 2), g = random_valid_perv(rng, 2);
  PervData s = direct_sum(f, g);
  CHECK(s.phi == f.phi + g.phi);
  CHECK(s.psi == f.psi + g.psi);
  CHECK(validate(s).ok());
  Monodromies ms = monodromies(s);
  CHECK(mat_eq(ms.t_phi, direct_sum(monodromies(f).t_phi, monodromies(g).t_phi)));
}

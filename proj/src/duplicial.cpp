#include "percy/duplicial.hpp"

namespace percy {

void check_shapes(const DuplicialVec& y) {
  check_shapes(static_cast<const SimplicialVec&>(y));
  if (static_cast<int>(y.extra.size()) != y.n_max + 1)
    throw error("duplicial: extra degeneracy table size");
  for (int n = 1; n <= y.n_max; ++n)
    if (y.extra[n].rows() != y.dims[n] || y.extra[n].cols() != y.dims[n - 1])
      throw error("duplicial: extra degeneracy shape at level " + std::to_string(n));
}

Ducomplex make_ducomplex(std::vector<Index> dims, std::vector<RatMat> d,
                         std::vector<RatMat> delta) {
  if (dims.empty()) throw error("ducomplex: needs degree 0");
  if (d.size() != dims.size() || delta.size() != dims.size())
    throw error("ducomplex: table sizes");
  for (std::size_t n = 1; n < dims.size(); ++n) {
    if (d[n].rows() != dims[n - 1] || d[n].cols() != dims[n])
      throw error("ducomplex: d shape at degree -" + std::to_string(n));
    if (delta[n].rows() != dims[n] || delta[n].cols() != dims[n - 1])
      throw error("ducomplex: delta shape at degree -" + std::to_string(n));
    if (n >= 2) {
      if (!is_zero(d[n - 1] * d[n])) throw error("ducomplex: d o d != 0");
      if (!is_zero(delta[n] * delta[n - 1])) throw error("ducomplex: delta o delta != 0");
    }
  }
  Ducomplex b;
  b.dims = std::move(dims);
  b.d = std::move(d);
  b.delta = std::move(delta);
  b.d[0] = rat_zero(0, b.dims[0]);
  b.delta[0] = rat_zero(b.dims[0], 0);
  return b;
}

DuplicialVec duplicial_restriction(const ParacyclicVec& x) {
  check_shapes(x);
  DuplicialVec y;
  static_cast<SimplicialVec&>(y) = static_cast<const SimplicialVec&>(x);
  y.extra.resize(x.n_max + 1);
  for (int n = 1; n <= x.n_max; ++n)
    y.extra[n] = inverse(x.t[n]) * x.s(n - 1, 0) * x.t[n - 1];
  check_shapes(y);
  return y;
}

RelationReport check_duplicial_relations(const DuplicialVec& y) {
  check_shapes(y);
  RelationReport rep = check_relations(static_cast<const SimplicialVec&>(y));
  auto expect = [&rep](bool holds, const std::string& what) {
    if (!holds) rep.violations.push_back(what);
  };
  for (int n = 1; n <= y.n_max; ++n) {
    expect(mat_eq(y.d(n, 0) * y.extra[n], rat_identity(y.dims[n - 1])),
           "d0 e = id, n=" + std::to_string(n));
    for (int i = 1; i <= n - 1; ++i)
      expect(mat_eq(y.d(n, i) * y.extra[n], y.extra[n - 1] * y.d(n - 1, i - 1)),
             "de, n=" + std::to_string(n) + " i=" + std::to_string(i));
  }
  for (int n = 1; n < y.n_max; ++n)
    for (int j = 0; j <= n - 1; ++j)
      expect(mat_eq(y.extra[n + 1] * y.s(n - 1, j), y.s(n, j + 1) * y.extra[n]),
             "es, n=" + std::to_string(n) + " j=" + std::to_string(j));
  return rep;
}

Ducomplex to_ducomplex(const DuplicialVec& y) {
  check_shapes(y);
  std::vector<Index> dims{y.dims[0]};
  std::vector<RatMat> d{rat_zero(0, y.dims[0])};
  std::vector<RatMat> delta{rat_zero(y.dims[0], 0)};
  std::vector<RatMat> bases{rat_identity(y.dims[0])};

  for (int n = 1; n <= y.n_max; ++n) {
    std::vector<RatMat> rows;
    for (int i = 0; i <= n - 1; ++i) rows.push_back(y.d(n, i));
    RatMat k = kernel_basis(vcat(rows, y.dims[n]));
    // d = top face restricted; always lands back in the normalized part
    auto dn = solve_all(bases.back(), y.d(n, n) * k);
    if (!dn) throw error("to_ducomplex: d_n leaves the normalized subspace");
    // delta = e_n - s_0 + s_1 - ...
    RatMat amb = y.extra[n];
    for (int j = 0; j <= n - 1; ++j)
      amb += (j % 2 == 0 ? Rat(-1) : Rat(1)) * y.s(n - 1, j);
    auto dl = solve_all(k, amb * bases.back());
    if (!dl) throw error("to_ducomplex: delta does not preserve the normalized subspace");
    bases.push_back(k);
    dims.push_back(k.cols());
    d.push_back(*dn);
    delta.push_back(*dl);
  }
  while (dims.size() > 1 && dims.back() == 0) {
    dims.pop_back();
    d.pop_back();
    delta.pop_back();
  }
  return make_ducomplex(std::move(dims), std::move(d), std::move(delta));
}

RatMat duplicial_t(const DuplicialVec& y, int n) {
  if (n < 0 || n >= y.n_max)
    throw error("duplicial_t: determined only for levels below the truncation");
  return y.d(n + 1, n + 1) * y.extra[n + 1];
}

bool is_paracyclic(const DuplicialVec& y) {
  for (int n = 0; n < y.n_max; ++n)
    if (!is_invertible(duplicial_t(y, n))) return false;
  return true;
}

CriterionReport paracyclicity_criterion(const Ducomplex& b) {
  CriterionReport rep;
  int amp = b.amplitude();
  for (int n = 0; n <= amp; ++n) {
    RatMat op = rat_identity(b.dims[n]);
    Rat sign = (n % 2 == 0) ? Rat(1) : Rat(-1);
    if (n + 1 <= amp) op += sign * (b.d[n + 1] * b.delta[n + 1]);
    if (n >= 1) op -= sign * (b.delta[n] * b.d[n]);
    rep.invertible.push_back(is_invertible(op));
  }
  return rep;
}

DuplicialVec from_ducomplex_2term(const Ducomplex& b, int n_max) {
  if (b.amplitude() > 1) throw error("from_ducomplex_2term: amplitude exceeds 1");
  if (n_max < 1) throw error("from_ducomplex_2term: n_max must be >= 1");
  Index phi = b.dims[0];
  Index psi = b.amplitude() >= 1 ? b.dims[1] : 0;
  RatMat a = b.amplitude() >= 1 ? b.delta[1] : rat_zero(0, phi);
  RatMat bb = b.amplitude() >= 1 ? RatMat(-b.d[1]) : rat_zero(phi, 0);

  // Same shapes as the paracyclic nerve, built formally (no invertibility
  // requirement on the monodromies).
  DuplicialVec y;
  y.n_max = n_max;
  y.dims.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) y.dims[n] = psi * n + phi;
  y.face.resize(n_max + 1);
  y.degen.resize(n_max);
  y.extra.resize(n_max + 1);

  auto psi_block = [&](RatMat& m, Index row, Index col) {
    m.block(row * psi, col * psi, psi, psi) = rat_identity(psi);
  };
  for (int n = 1; n <= n_max; ++n) {
    y.face[n].resize(n + 1);
    for (int i = 0; i <= n; ++i) {
      RatMat m = rat_zero(y.dims[n - 1], y.dims[n]);
      m.bottomRightCorner(phi, phi) = rat_identity(phi);
      if (i == 0) {
        for (Index k = 0; k + 1 < n; ++k) psi_block(m, k, k + 1);
      } else if (i < n) {
        for (Index k = 0; k + 1 < n; ++k) psi_block(m, k, k < i ? k : k + 1);
        psi_block(m, i - 1, i);
      } else {
        for (Index k = 0; k + 1 < n; ++k) psi_block(m, k, k);
        m.block((n - 1) * psi, (n - 1) * psi, phi, psi) -= bb;
      }
      y.face[n][i] = std::move(m);
    }
  }
  for (int n = 0; n < n_max; ++n) {
    y.degen[n].resize(n + 1);
    for (int j = 0; j <= n; ++j) {
      RatMat m = rat_zero(y.dims[n + 1], y.dims[n]);
      m.bottomRightCorner(phi, phi) = rat_identity(phi);
      for (Index k = 0; k < n; ++k) psi_block(m, k < j ? k : k + 1, k);
      y.degen[n][j] = std::move(m);
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    RatMat m = rat_zero(y.dims[n], y.dims[n - 1]);
    for (Index k = 0; k + 1 < n; ++k) m.block(0, k * psi, psi, psi) = -rat_identity(psi);
    m.block(0, (n - 1) * psi, psi, phi) = a;
    for (Index k = 0; k + 1 < n; ++k) psi_block(m, k + 1, k);
    m.bottomRightCorner(phi, phi) = rat_identity(phi);
    y.extra[n] = std::move(m);
  }
  check_shapes(y);
  return y;
}

}  // namespace percy

#include "percy/nerve.hpp"

#include <map>
#include <random>

namespace percy {

ParacyclicVec paracyclic_nerve(const PervData& f, int n_max) {
  checked(f);
  if (n_max < 1) throw error("paracyclic_nerve: n_max must be >= 1");
  ParacyclicVec x;
  x.n_max = n_max;
  x.dims.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) x.dims[n] = f.psi * n + f.phi;
  x.face.resize(n_max + 1);
  x.degen.resize(n_max);
  x.t.resize(n_max + 1);

  auto psi_block = [&](RatMat& m, Index row, Index col) {
    m.block(row * f.psi, col * f.psi, f.psi, f.psi) = rat_identity(f.psi);
  };

  for (int n = 1; n <= n_max; ++n) {
    x.face[n].resize(n + 1);
    for (int i = 0; i <= n; ++i) {
      RatMat m = rat_zero(x.dims[n - 1], x.dims[n]);
      m.bottomRightCorner(f.phi, f.phi) = rat_identity(f.phi);
      if (i == 0) {
        for (Index k = 0; k + 1 < n; ++k) psi_block(m, k, k + 1);
      } else if (i < n) {
        for (Index k = 0; k + 1 < n; ++k) psi_block(m, k, k < i ? k : k + 1);
        psi_block(m, i - 1, i);  // psi_i + psi_{i+1} share the slot
      } else {
        for (Index k = 0; k + 1 < n; ++k) psi_block(m, k, k);
        m.block((n - 1) * f.psi, (n - 1) * f.psi, f.phi, f.psi) -= f.b;
      }
      x.face[n][i] = std::move(m);
    }
  }

  for (int n = 0; n < n_max; ++n) {
    x.degen[n].resize(n + 1);
    for (int j = 0; j <= n; ++j) {
      RatMat m = rat_zero(x.dims[n + 1], x.dims[n]);
      m.bottomRightCorner(f.phi, f.phi) = rat_identity(f.phi);
      for (Index k = 0; k < n; ++k) psi_block(m, k < j ? k : k + 1, k);
      x.degen[n][j] = std::move(m);
    }
  }

  x.t[0] = rat_identity(f.phi) - f.b * f.a;
  for (int n = 1; n <= n_max; ++n) {
    RatMat m = rat_zero(x.dims[n], x.dims[n]);
    for (Index k = 0; k < n; ++k) m.block(0, k * f.psi, f.psi, f.psi) = -rat_identity(f.psi);
    m.block(0, n * f.psi, f.psi, f.phi) = f.a;
    for (Index k = 0; k + 1 < n; ++k) psi_block(m, k + 1, k);
    m.bottomRightCorner(f.phi, f.phi) = rat_identity(f.phi);
    m.block(n * f.psi, (n - 1) * f.psi, f.phi, f.psi) = -f.b;
    x.t[n] = std::move(m);
  }

  check_shapes(x);
  return x;
}

namespace {

void expect(RelationReport& rep, bool holds, const std::string& what) {
  if (!holds) rep.violations.push_back(what);
}

std::string tag(const char* fam, int n, int i = -1, int j = -1) {
  std::string s = fam;
  s += " n=" + std::to_string(n);
  if (i >= 0) s += " i=" + std::to_string(i);
  if (j >= 0) s += " j=" + std::to_string(j);
  return s;
}

}  // namespace

RelationReport check_relations(const SimplicialVec& x) {
  check_shapes(x);
  RelationReport rep;
  // d_i d_j = d_{j-1} d_i for i < j
  for (int n = 2; n <= x.n_max; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        expect(rep, mat_eq(x.d(n - 1, i) * x.d(n, j), x.d(n - 1, j - 1) * x.d(n, i)),
               tag("dd", n, i, j));
  // s_i s_j = s_{j+1} s_i for i <= j
  for (int n = 0; n + 1 < x.n_max; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        expect(rep, mat_eq(x.s(n + 1, i) * x.s(n, j), x.s(n + 1, j + 1) * x.s(n, i)),
               tag("ss", n, i, j));
  // mixed face-degeneracy identities
  for (int n = 0; n < x.n_max; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        if (i == j || i == j + 1) {
          expect(rep, mat_eq(x.d(n + 1, i) * x.s(n, j), rat_identity(x.dims[n])),
                 tag("ds=id", n, i, j));
        } else if (i < j) {
          expect(rep, mat_eq(x.d(n + 1, i) * x.s(n, j), x.s(n - 1, j - 1) * x.d(n, i)),
                 tag("ds", n, i, j));
        } else {
          expect(rep, mat_eq(x.d(n + 1, i) * x.s(n, j), x.s(n - 1, j) * x.d(n, i - 1)),
                 tag("ds", n, i, j));
        }
      }
  return rep;
}

RelationReport check_relations(const ParacyclicVec& x) {
  check_shapes(x);
  RelationReport rep = check_relations(static_cast<const SimplicialVec&>(x));
  for (int n = 0; n <= x.n_max; ++n)
    expect(rep, is_invertible(x.t[n]), tag("t invertible", n));
  // d_0 t_n = d_n and d_i t_n = t_{n-1} d_{i-1}
  for (int n = 1; n <= x.n_max; ++n) {
    expect(rep, mat_eq(x.d(n, 0) * x.t[n], x.d(n, n)), tag("d0t", n));
    for (int i = 1; i <= n; ++i)
      expect(rep, mat_eq(x.d(n, i) * x.t[n], x.t[n - 1] * x.d(n, i - 1)), tag("dt", n, i));
  }
  // s_i t_n = t_{n+1} s_{i-1} and the tau-squared wrap relation
  for (int n = 0; n < x.n_max; ++n) {
    for (int i = 1; i <= n; ++i)
      expect(rep, mat_eq(x.s(n, i) * x.t[n], x.t[n + 1] * x.s(n, i - 1)), tag("st", n, i));
    expect(rep, mat_eq(x.s(n, 0) * x.t[n], x.t[n + 1] * x.t[n + 1] * x.s(n, n)),
           tag("st-wrap", n));
  }
  return rep;
}

namespace {

// Face composites dropping `count` vertices off the top or the front.
RatMat drop_top(const SimplicialVec& x, int from, int count) {
  RatMat m = rat_identity(x.dims[from]);
  for (int lvl = from; lvl > from - count; --lvl) m = x.d(lvl, lvl) * m;
  return m;
}

RatMat drop_front(const SimplicialVec& x, int from, int count) {
  RatMat m = rat_identity(x.dims[from]);
  for (int lvl = from; lvl > from - count; --lvl) m = x.d(lvl, 0) * m;
  return m;
}

// Restriction to the edge between vertices k-1 and k (1 <= k <= n).
RatMat edge_map(const SimplicialVec& x, int n, int k) {
  return drop_front(x, k, k - 1) * drop_top(x, n, n - k);
}

// Stacked consecutive-edge compatibility constraints at level n >= 2: rows
// express target(w_k) = source(w_{k+1}) with target = d_0, source = d_1.
RatMat segal_constraints(const SimplicialVec& x, int n) {
  Index d0 = x.dims[0], d1 = x.dims[1];
  RatMat c = rat_zero((n - 1) * d0, n * d1);
  for (int k = 0; k + 1 < n; ++k) {
    c.block(k * d0, k * d1, d0, d1) = x.d(1, 0);
    c.block(k * d0, (k + 1) * d1, d0, d1) = -x.d(1, 1);
  }
  return c;
}

RatMat segal_map(const SimplicialVec& x, int n) {
  std::vector<RatMat> rows;
  for (int k = 1; k <= n; ++k) rows.push_back(edge_map(x, n, k));
  return vcat(rows, x.dims[n]);
}

}  // namespace

bool check_segal(const SimplicialVec& x) {
  check_shapes(x);
  if (x.n_max < 2) return true;
  // Compare against the fiber-product model of the 1-truncation: the stacked
  // edge restrictions must be isomorphisms that intertwine every operator.
  // This is what makes the canonical map well defined; a perturbed inner
  // face fails the intertwining even though no window restriction uses it.
  SimplicialVec r;
  try {
    r = reconstruct_from_truncation(truncate(x), x.n_max);
  } catch (const error&) {
    return false;
  }
  if (r.dims != x.dims) return false;

  std::vector<RatMat> rho(x.n_max + 1);
  rho[0] = rat_identity(x.dims[0]);
  rho[1] = rat_identity(x.dims[1]);
  for (int n = 2; n <= x.n_max; ++n) {
    RatMat c = segal_constraints(x, n);
    RatMat s = segal_map(x, n);
    if (!is_zero(c * s)) return false;
    auto coords = solve_all(kernel_basis(c), s);
    if (!coords || !is_invertible(*coords)) return false;
    rho[n] = *coords;
  }
  for (int n = 1; n <= x.n_max; ++n)
    for (int i = 0; i <= n; ++i)
      if (!mat_eq(rho[n - 1] * x.d(n, i), r.d(n, i) * rho[n])) return false;
  for (int n = 0; n < x.n_max; ++n)
    for (int j = 0; j <= n; ++j)
      if (!mat_eq(rho[n + 1] * x.s(n, j), r.s(n, j) * rho[n])) return false;
  return true;
}

bool check_segal_squares(const SimplicialVec& x) {
  check_shapes(x);
  for (int n = 2; n <= x.n_max; ++n)
    for (int m = 1; m < n; ++m) {
      RatMat front = drop_top(x, n, n - m);     // X_n -> X_m
      RatMat back = drop_front(x, n, m);        // X_n -> X_{n-m}
      RatMat last_v = drop_front(x, m, m);      // X_m -> X_0, vertex m
      RatMat first_v = drop_top(x, n - m, n - m);  // X_{n-m} -> X_0, vertex m
      RatMat s = vcat(front, back);
      if (!is_zero(last_v * front - first_v * back)) return false;
      if (rank(s) != x.dims[n]) return false;
      if (x.dims[n] != fiber_product(last_v, first_v).basis.cols()) return false;
    }
  return true;
}

Truncation truncate(const SimplicialVec& x) {
  if (x.n_max < 1) throw error("truncate: need n_max >= 1");
  return {x.dims[0], x.dims[1], x.d(1, 0), x.d(1, 1), x.s(0, 0)};
}

SimplicialVec reconstruct_from_truncation(const Truncation& t, int n_max) {
  if (n_max < 1) throw error("reconstruct: n_max must be >= 1");
  if (t.d0.rows() != t.dim0 || t.d0.cols() != t.dim1 || t.d1.rows() != t.dim0 ||
      t.d1.cols() != t.dim1 || t.s0.rows() != t.dim1 || t.s0.cols() != t.dim0)
    throw error("reconstruct: truncation shapes");
  if (!mat_eq(t.d0 * t.s0, rat_identity(t.dim0)) || !mat_eq(t.d1 * t.s0, rat_identity(t.dim0)))
    throw error("reconstruct: truncation violates the level-1 identities");

  SimplicialVec x;
  x.n_max = n_max;
  x.dims.assign(n_max + 1, 0);
  x.face.resize(n_max + 1);
  x.degen.resize(n_max);
  x.dims[0] = t.dim0;
  x.dims[1] = t.dim1;
  x.face[1] = {t.d0, t.d1};

  // bases[n]: columns span the compatible-chain subspace of X_1^n
  std::vector<RatMat> bases(n_max + 1);
  bases[1] = rat_identity(t.dim1);
  for (int n = 2; n <= n_max; ++n) {
    SimplicialVec probe;  // just enough structure for segal_constraints
    probe.n_max = 1;
    probe.dims = {t.dim0, t.dim1};
    probe.face = {{}, {t.d0, t.d1}};
    bases[n] = kernel_basis(segal_constraints(probe, n));
    x.dims[n] = bases[n].cols();
  }

  Index d1 = t.dim1;
  auto coords = [&](int level, const RatMat& ambient) {
    if (level == 1) return ambient;
    auto c = solve_all(bases[level], ambient);
    if (!c) throw error("reconstruct: image leaves the compatible-chain subspace");
    return *c;
  };

  for (int n = 2; n <= n_max; ++n) {
    x.face[n].resize(n + 1);
    const RatMat& b = bases[n];
    auto chain = [&](int k) { return b.middleRows((k - 1) * d1, d1); };  // w_k on the basis
    for (int i = 0; i <= n; ++i) {
      RatMat ambient(rat_zero((n - 1) * d1, x.dims[n]));
      if (i == 0) {
        for (int k = 2; k <= n; ++k) ambient.middleRows((k - 2) * d1, d1) = chain(k);
      } else if (i == n) {
        for (int k = 1; k < n; ++k) ambient.middleRows((k - 1) * d1, d1) = chain(k);
      } else {
        for (int k = 1; k < i; ++k) ambient.middleRows((k - 1) * d1, d1) = chain(k);
        ambient.middleRows((i - 1) * d1, d1) =
            chain(i) + chain(i + 1) - t.s0 * t.d0 * chain(i);
        for (int k = i + 2; k <= n; ++k) ambient.middleRows((k - 2) * d1, d1) = chain(k);
      }
      x.face[n][i] = coords(n - 1, ambient);
    }
  }

  for (int n = 0; n < n_max; ++n) {
    x.degen[n].resize(n + 1);
    if (n == 0) {
      x.degen[0][0] = coords(1, t.s0);
      continue;
    }
    const RatMat& b = bases[n];
    auto chain = [&](int k) {
      return n == 1 ? RatMat(rat_identity(d1)) : RatMat(b.middleRows((k - 1) * d1, d1));
    };
    for (int j = 0; j <= n; ++j) {
      RatMat ambient(rat_zero((n + 1) * d1, x.dims[n]));
      RatMat vertex = j == 0 ? RatMat(t.d1 * chain(1)) : RatMat(t.d0 * chain(j));
      for (int k = 1; k <= j; ++k) ambient.middleRows((k - 1) * d1, d1) = chain(k);
      ambient.middleRows(j * d1, d1) = t.s0 * vertex;
      for (int k = j + 1; k <= n; ++k) ambient.middleRows(k * d1, d1) = chain(k);
      x.degen[n][j] = coords(n + 1, ambient);
    }
  }

  check_shapes(x);
  return x;
}

RatMat evaluate(const ParacyclicVec& x, const ParaMap& f) {
  if (f.src > x.n_max || f.dst > x.n_max) throw error("evaluate: level exceeds truncation");
  auto letter_matrix = [&](const Letter& l) -> RatMat {
    switch (l.kind) {
      case Letter::Kind::Delta:
        if (l.n > x.n_max) throw error("evaluate: level exceeds truncation");
        return x.d(l.n, l.n - l.i);
      case Letter::Kind::Sigma:
        if (l.n + 1 > x.n_max) throw error("evaluate: level exceeds truncation");
        return x.s(l.n, l.n - l.i);
      case Letter::Kind::Tau:
        return x.t[l.n];
      case Letter::Kind::TauInv:
        return inverse(x.t[l.n]);
    }
    throw error("evaluate: bad letter");
  };
  std::vector<Letter> word = factorize(f);
  RatMat m = rat_identity(x.dims[f.dst]);
  for (const Letter& l : word) m = letter_matrix(l) * m;
  return m;
}

PervData extract_perv(const ParacyclicVec& x) {
  if (x.n_max < 1) throw error("extract_perv: need n_max >= 1");
  if (!check_relations(x).ok()) throw error("extract_perv: relations fail");
  if (!check_segal(x)) throw error("extract_perv: Segal conditions fail");

  PervData f;
  f.phi = x.dims[0];
  RatMat pr = rat_identity(x.dims[1]) - x.s(0, 0) * x.d(1, 1);
  RatMat k = image_basis(pr);  // basis of ker d_1
  f.psi = k.cols();
  f.b = x.d(1, 0) * k;
  auto a = solve_all(k, pr * x.t[1] * x.s(0, 0));
  if (!a) throw error("extract_perv: t_1 s_0 leaves ker d_1 + im s_0 decomposition");
  f.a = *a;
  return checked(std::move(f));
}

Complex dold_kan_chains(const SimplicialVec& x) {
  check_shapes(x);
  std::vector<Index> dims{x.dims[0]};
  std::vector<RatMat> diff{rat_zero(0, x.dims[0])};
  std::vector<RatMat> bases{rat_identity(x.dims[0])};
  for (int n = 1; n <= x.n_max; ++n) {
    std::vector<RatMat> rows;
    for (int i = 1; i <= n; ++i) rows.push_back(x.d(n, i));
    RatMat k = kernel_basis(vcat(rows, x.dims[n]));
    auto d = solve_all(bases.back(), x.d(n, 0) * k);
    if (!d) throw error("dold_kan_chains: d_0 leaves the normalized subspace");
    bases.push_back(k);
    dims.push_back(k.cols());
    diff.push_back(*d);
  }
  while (dims.size() > 1 && dims.back() == 0) {
    dims.pop_back();
    diff.pop_back();
  }
  return make_complex(std::move(dims), std::move(diff));
}

namespace {

// Nondegenerate m-simplices of the n-simplex: strictly increasing
// (m+1)-tuples in [0, n], lexicographic. Cocycles vanish on degenerate
// simplices, so those carry no variables; conditions over degenerate chains
// hold identically (the two equal faces cancel, the rest are degenerate).
std::vector<std::vector<int>> simplices(int n, int m) {
  std::vector<std::vector<int>> out;
  if (m > n) return out;
  std::vector<int> cur(m + 1);
  for (int i = 0; i <= m; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int pos = m;
    while (pos >= 0 && cur[pos] == n - (m - pos)) --pos;
    if (pos < 0) break;
    ++cur[pos];
    for (int q = pos + 1; q <= m; ++q) cur[q] = cur[q - 1] + 1;
  }
  return out;
}

struct CocycleSpace {
  std::vector<std::vector<std::vector<int>>> simp;  // simp[m]: m-simplices
  std::vector<std::map<std::vector<int>, int>> index;
  std::vector<Index> offset;  // variable offset per cochain degree
  Index total = 0;
  RatMat basis;  // kernel of the cocycle conditions
};

CocycleSpace cocycle_space(const Complex& e, int n) {
  int amp = e.amplitude();
  CocycleSpace c;
  c.simp.resize(amp + 1);
  c.index.resize(amp + 1);
  c.offset.resize(amp + 1);
  for (int m = 0; m <= amp; ++m) {
    c.offset[m] = c.total;
    c.simp[m] = simplices(n, m);
    for (std::size_t s = 0; s < c.simp[m].size(); ++s) c.index[m][c.simp[m][s]] = s;
    c.total += static_cast<Index>(c.simp[m].size()) * e.dims[m];
  }

  Index rows = 0;
  for (int m = 0; m + 1 <= amp + 1; ++m)
    rows += static_cast<Index>(simplices(n, m + 1).size()) * e.dims[m];
  RatMat sys = rat_zero(rows, c.total);

  Index eq = 0;
  for (int m = 0; m + 1 <= amp + 1; ++m) {
    auto chains = simplices(n, m + 1);
    for (const auto& tau : chains) {
      // d_E(gamma(tau)) = sum_i (-1)^i gamma(face_i tau), one row per
      // coordinate of E^{-m}
      if (m + 1 <= amp) {
        Index var = c.offset[m + 1] +
                    static_cast<Index>(c.index[m + 1].at(tau)) * e.dims[m + 1];
        for (Index r = 0; r < e.dims[m]; ++r)
          for (Index col = 0; col < e.dims[m + 1]; ++col)
            sys(eq + r, var + col) += e.diff[m + 1](r, col);
      }
      for (int i = 0; i <= m + 1; ++i) {
        std::vector<int> fc(tau);
        fc.erase(fc.begin() + i);
        Index var = c.offset[m] + static_cast<Index>(c.index[m].at(fc)) * e.dims[m];
        Rat sign = (i % 2 == 0) ? Rat(-1) : Rat(1);
        for (Index r = 0; r < e.dims[m]; ++r) sys(eq + r, var + r) += sign;
      }
      eq += e.dims[m];
    }
  }
  c.basis = kernel_basis(sys);
  return c;
}

// Variable transport along a vertex map [m'] -> [n'] (monotone), from the
// cocycle variables over Delta^{n'} to those over Delta^{m'}. A simplex
// whose image degenerates contributes zero.
RatMat transport(const Complex& e, const CocycleSpace& from, const CocycleSpace& to,
                 const std::vector<int>& vertex_map) {
  RatMat p = rat_zero(to.total, from.total);
  int amp = e.amplitude();
  for (int m = 0; m <= amp; ++m)
    for (std::size_t s = 0; s < to.simp[m].size(); ++s) {
      std::vector<int> image(to.simp[m][s]);
      for (auto& v : image) v = vertex_map[v];
      bool degenerate = false;
      for (std::size_t k = 0; k + 1 < image.size(); ++k)
        if (image[k] == image[k + 1]) degenerate = true;
      if (degenerate) continue;
      Index src = from.offset[m] + static_cast<Index>(from.index[m].at(image)) * e.dims[m];
      Index dst = to.offset[m] + static_cast<Index>(s) * e.dims[m];
      for (Index r = 0; r < e.dims[m]; ++r) p(dst + r, src + r) = 1;
    }
  return p;
}

}  // namespace

SimplicialVec dold_kan_nerve(const Complex& e, int n_max) {
  if (n_max < 1) throw error("dold_kan_nerve: n_max must be >= 1");
  std::vector<CocycleSpace> spaces;
  for (int n = 0; n <= n_max; ++n) spaces.push_back(cocycle_space(e, n));

  SimplicialVec x;
  x.n_max = n_max;
  x.dims.resize(n_max + 1);
  for (int n = 0; n <= n_max; ++n) x.dims[n] = spaces[n].basis.cols();
  x.face.resize(n_max + 1);
  x.degen.resize(n_max);

  auto restricted = [&](int from_level, int to_level, const std::vector<int>& vmap) {
    RatMat amb = transport(e, spaces[from_level], spaces[to_level], vmap) *
                 spaces[from_level].basis;
    auto c = solve_all(spaces[to_level].basis, amb);
    if (!c) throw error("dold_kan_nerve: transported cocycle fails the conditions");
    return *c;
  };

  for (int n = 1; n <= n_max; ++n) {
    x.face[n].resize(n + 1);
    for (int i = 0; i <= n; ++i) {
      std::vector<int> vmap(n);
      for (int k = 0; k < n; ++k) vmap[k] = k < i ? k : k + 1;
      x.face[n][i] = restricted(n, n - 1, vmap);
    }
  }
  for (int n = 0; n < n_max; ++n) {
    x.degen[n].resize(n + 1);
    for (int j = 0; j <= n; ++j) {
      std::vector<int> vmap(n + 2);
      for (int k = 0; k <= n + 1; ++k) vmap[k] = k <= j ? k : k - 1;
      x.degen[n][j] = restricted(n, n + 1, vmap);
    }
  }
  check_shapes(x);
  return x;
}

namespace {

bool invertible_combination(const std::vector<std::vector<RatMat>>& solutions) {
  if (solutions.empty()) return false;
  std::size_t levels = solutions[0].size();
  std::mt19937 rng(411);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int attempt = 0; attempt < 60; ++attempt) {
    std::vector<Rat> c(solutions.size());
    for (auto& q : c) q = rat(attempt == 0 ? 1 : coeff(rng));
    bool all = true;
    for (std::size_t lvl = 0; lvl < levels && all; ++lvl) {
      RatMat m = rat_zero(solutions[0][lvl].rows(), solutions[0][lvl].cols());
      for (std::size_t s = 0; s < solutions.size(); ++s) m += c[s] * solutions[s][lvl];
      all = is_invertible(m);
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

bool simplicial_isomorphic(const SimplicialVec& x, const SimplicialVec& y) {
  if (x.n_max != y.n_max || x.dims != y.dims) return false;
  // Unknowns: entries of T_n (dims[n] x dims[n]) for every level, constrained
  // to commute with every face and degeneracy.
  std::vector<Index> offset(x.n_max + 1);
  Index total = 0;
  for (int n = 0; n <= x.n_max; ++n) {
    offset[n] = total;
    total += x.dims[n] * x.dims[n];
  }
  if (total == 0) return true;  // the zero object is isomorphic to itself
  auto var = [&](int n, Index r, Index c) { return offset[n] + c * x.dims[n] + r; };

  std::vector<std::vector<Rat>> rows;
  auto add_commute = [&](int from, int to, const RatMat& fx, const RatMat& fy) {
    // T_to * fx - fy * T_from = 0
    for (Index r = 0; r < fy.rows(); ++r)
      for (Index c = 0; c < fx.cols(); ++c) {
        std::vector<Rat> row(total, Rat(0));
        for (Index k = 0; k < fx.rows(); ++k) row[var(to, r, k)] += fx(k, c);
        for (Index k = 0; k < fy.cols(); ++k) row[var(from, k, c)] -= fy(r, k);
        rows.push_back(std::move(row));
      }
  };
  for (int n = 1; n <= x.n_max; ++n)
    for (int i = 0; i <= n; ++i) add_commute(n, n - 1, x.d(n, i), y.d(n, i));
  for (int n = 0; n < x.n_max; ++n)
    for (int j = 0; j <= n; ++j) add_commute(n, n + 1, x.s(n, j), y.s(n, j));

  RatMat sys = rat_zero(static_cast<Index>(rows.size()), total);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (Index c = 0; c < total; ++c) sys(static_cast<Index>(r), c) = rows[r][c];
  RatMat basis = kernel_basis(sys);

  std::vector<std::vector<RatMat>> solutions;
  for (Index v = 0; v < basis.cols(); ++v) {
    std::vector<RatMat> levels;
    for (int n = 0; n <= x.n_max; ++n) {
      RatMat t = rat_zero(x.dims[n], x.dims[n]);
      for (Index c = 0; c < x.dims[n]; ++c)
        for (Index r = 0; r < x.dims[n]; ++r) t(r, c) = basis(var(n, r, c), v);
      levels.push_back(std::move(t));
    }
    solutions.push_back(std::move(levels));
  }
  return invertible_combination(solutions);
}

bool complex_isomorphic(Complex e, Complex f) {
  auto trim = [](Complex& c) {
    while (c.dims.size() > 1 && c.dims.back() == 0) {
      c.dims.pop_back();
      c.diff.pop_back();
    }
  };
  trim(e);
  trim(f);
  if (e.dims != f.dims) return false;
  std::vector<Index> offset(e.dims.size());
  Index total = 0;
  for (std::size_t n = 0; n < e.dims.size(); ++n) {
    offset[n] = total;
    total += e.dims[n] * e.dims[n];
  }
  if (total == 0) return true;
  auto var = [&](std::size_t n, Index r, Index c) { return offset[n] + c * e.dims[n] + r; };
  std::vector<std::vector<Rat>> rows;
  for (std::size_t n = 1; n < e.dims.size(); ++n) {
    // T_{n-1} d_e - d_f T_n = 0
    for (Index r = 0; r < e.dims[n - 1]; ++r)
      for (Index c = 0; c < e.dims[n]; ++c) {
        std::vector<Rat> row(total, Rat(0));
        for (Index k = 0; k < e.dims[n - 1]; ++k) row[var(n - 1, r, k)] += e.diff[n](k, c);
        for (Index k = 0; k < e.dims[n]; ++k) row[var(n, k, c)] -= f.diff[n](r, k);
        rows.push_back(std::move(row));
      }
  }
  RatMat sys = rat_zero(static_cast<Index>(rows.size()), total);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (Index c = 0; c < total; ++c) sys(static_cast<Index>(r), c) = rows[r][c];
  RatMat basis = kernel_basis(sys);
  std::vector<std::vector<RatMat>> solutions;
  for (Index v = 0; v < basis.cols(); ++v) {
    std::vector<RatMat> levels;
    for (std::size_t n = 0; n < e.dims.size(); ++n) {
      RatMat t = rat_zero(e.dims[n], e.dims[n]);
      for (Index c = 0; c < e.dims[n]; ++c)
        for (Index r = 0; r < e.dims[n]; ++r) t(r, c) = basis(var(n, r, c), v);
      levels.push_back(std::move(t));
    }
    solutions.push_back(std::move(levels));
  }
  return invertible_combination(solutions);
}

}  // namespace percy

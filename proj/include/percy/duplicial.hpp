#pragma once

#include "percy/nerve.hpp"
#include "percy/simplicial.hpp"

namespace percy {

// Duplicial vector space: a simplicial one together with the wrap
// degeneracy extra[n]: X_{n-1} -> X_n stored in the top slot at each level
// (slot n, after the simplicial s_0..s_{n-1}). For the restriction of a
// paracyclic object it is extra[n] = t_n^{-1} s_0 t_{n-1}, and the cyclic
// operator is recovered as t_n = d_{n+1} o extra[n+1].
struct DuplicialVec : SimplicialVec {
  std::vector<RatMat> extra;  // extra[n]: X_{n-1} -> X_n, 1 <= n <= n_max
};

void check_shapes(const DuplicialVec& y);

// Pair of square-zero differentials with no compatibility between them:
// d[n]: B^{-n} -> B^{-n+1} and delta[n]: B^{-n+1} -> B^{-n}.
struct Ducomplex {
  std::vector<Index> dims;
  std::vector<RatMat> d;      // d[0] placeholder
  std::vector<RatMat> delta;  // delta[0] placeholder

  int amplitude() const { return static_cast<int>(dims.size()) - 1; }
};

Ducomplex make_ducomplex(std::vector<Index> dims, std::vector<RatMat> d,
                         std::vector<RatMat> delta);

DuplicialVec duplicial_restriction(const ParacyclicVec& x);

// Simplicial identities plus the wrap-degeneracy family:
//   d_0 e_n = id,   d_i e_n = e_{n-1} d_{i-1}   (1 <= i <= n-1),
//   e_{n+1} s_j = s_{j+1} e_n                   (0 <= j <= n-1),
//   e_{n+1} e_n unconstrained (it is the square of the shift).
RelationReport check_duplicial_relations(const DuplicialVec& y);

// Normalization B^{-n} = ker d_0 cap ... cap ker d_{n-1}, d = d_n
// restricted, delta = e_n - s_0 + s_1 - ... restricted; throws if delta
// does not preserve the normalized subspaces (invalid input object).
Ducomplex to_ducomplex(const DuplicialVec& y);

// t_n = d_0-free corner d_{n+1} o e_{n+1}; defined for n < n_max only (the
// top level's operator is not determined by truncated duplicial data).
RatMat duplicial_t(const DuplicialVec& y, int n);
bool is_paracyclic(const DuplicialVec& y);

// Levelwise exact verdicts for Id + (-1)^n (d delta - delta d).
struct CriterionReport {
  std::vector<bool> invertible;
  bool all() const {
    for (bool b : invertible)
      if (!b) return false;
    return true;
  }
};
CriterionReport paracyclicity_criterion(const Ducomplex& b);

// Inverse equivalence on two-term ducomplexes: level n = (B^{-1})^n + B^0
// with the nerve formulas for (a, b) = (delta, -d) and the closed wrap
// degeneracy (psi_1..psi_{n-1}; phi) -> (-sum psi + a phi, psi_1..; phi).
DuplicialVec from_ducomplex_2term(const Ducomplex& b, int n_max = 5);

}  // namespace percy

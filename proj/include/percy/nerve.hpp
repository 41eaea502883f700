#pragma once

#include "percy/paramap.hpp"
#include "percy/perverse.hpp"
#include "percy/simplicial.hpp"

namespace percy {

// The paracyclic nerve of (Phi, Psi, a, b): X_n = Psi^n + Phi in the basis
// order (psi_1, ..., psi_n, phi), with
//   d_0  drop psi_1
//   d_i  add psi_i + psi_{i+1}              (0 < i < n)
//   d_n  (psi_1..psi_{n-1}; phi - b psi_n)
//   s_j  insert a zero psi after slot j
//   t_n  (-psi_1-...-psi_n + a phi, psi_1..psi_{n-1}; phi - b psi_n),
//   t_0 = T_Phi.
ParacyclicVec paracyclic_nerve(const PervData& f, int n_max = 5);

// Every simplicial identity and every cyclic-operator relation satisfied by
// such nerves, as exact matrix equalities at all levels <= n_max.
RelationReport check_relations(const SimplicialVec& x);
RelationReport check_relations(const ParacyclicVec& x);

// Segal condition at each level 2 <= n <= n_max: the map assembled from the
// n consecutive-edge restrictions is an isomorphism onto the iterated fiber
// product of X_1 over X_0, compatibly with all operators.
bool check_segal(const SimplicialVec& x);

// Pairwise pullback form: X_n is X_m x_{X_0} X_{n-m} through the front and
// back restrictions, for every 1 <= m < n. Agrees with check_segal on
// objects whose operators satisfy the simplicial identities.
bool check_segal_squares(const SimplicialVec& x);

// Right Kan extension of a 1-truncation: levels >= 2 are iterated fiber
// products of consecutive edges, with composition forced by linearity.
struct Truncation {
  Index dim0 = 0, dim1 = 0;
  RatMat d0, d1;  // X_1 -> X_0
  RatMat s0;      // X_0 -> X_1
};
SimplicialVec reconstruct_from_truncation(const Truncation& t, int n_max);
Truncation truncate(const SimplicialVec& x);

// Contravariant functor value on an arbitrary morphism of the paracyclic
// category, via factorize(). Letters act by delta_i -> face n-i,
// sigma_j -> degeneracy n-j, tau -> t; this mirrored assignment is the one
// that extends the stored operators to a functor with evaluate(tau_n) = t_n.
RatMat evaluate(const ParacyclicVec& x, const ParaMap& f);

// Inverse of paracyclic_nerve on its image: Phi = X_0, Psi = ker d_1 with
// b = d_0 restricted and a read off t_1 s_0. Requires relations and Segal.
PervData extract_perv(const ParacyclicVec& x);

// Normalized chains: C^{-n} = ker d_1 cap ... cap ker d_n with differential
// d_0, in the deterministic kernel basis of the stacked face matrix.
Complex dold_kan_chains(const SimplicialVec& x);

// Degree-0 cocycles of the simplex with values in a bounded complex;
// inverse of dold_kan_chains up to natural isomorphism.
SimplicialVec dold_kan_nerve(const Complex& e, int n_max = 5);

// Explicit invertible intertwiner commuting with all faces and degeneracies,
// if one exists (tested levelwise as one linear system).
bool simplicial_isomorphic(const SimplicialVec& x, const SimplicialVec& y);

// Commuting isomorphism of complexes, solved degreewise; trailing zero
// degrees are ignored.
bool complex_isomorphic(Complex e, Complex f);

}  // namespace percy

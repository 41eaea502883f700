#pragma once

#include <string>
#include <vector>

#include "percy/linalg.hpp"

namespace percy {

// Quiver data of a perverse sheaf on the disk: spaces Phi (vanishing cycles)
// and Psi (nearby cycles) with the variation a: Phi -> Psi and the canonical
// map b: Psi -> Phi. The matrix a is psi x phi, b is phi x psi. The datum is
// valid when both monodromies T_Phi = I - ba and T_Psi = I - ab are
// invertible (each is equivalent to the other; both are checked).
struct PervData {
  Index phi = 0;
  Index psi = 0;
  RatMat a;  // psi x phi
  RatMat b;  // phi x psi

  bool operator==(const PervData& o) const {
    return phi == o.phi && psi == o.psi && mat_eq(a, o.a) && mat_eq(b, o.b);
  }
};

struct PervReport {
  bool shapes_ok = false;
  bool t_phi_invertible = false;
  bool t_psi_invertible = false;
  std::string detail;

  bool ok() const { return shapes_ok && t_phi_invertible && t_psi_invertible; }
};

PervReport validate(const PervData& d);
PervData checked(PervData d);  // throws on invalid data

struct Monodromies {
  RatMat t_phi;  // I - ba
  RatMat t_psi;  // I - ab
};
Monodromies monodromies(const PervData& d);

// Half monodromy P = [[-I, b], [-a, I]] on Phi + Psi; P^2 = diag(T_Phi, T_Psi).
RatMat half_monodromy(const PervData& d);

struct PervMorphism {
  RatMat f_phi;  // phi' x phi
  RatMat f_psi;  // psi' x psi
};

bool is_morphism(const PervData& src, const PervData& dst, const PervMorphism& m);
PervMorphism identity_morphism(const PervData& d);

std::vector<PervMorphism> hom_space(const PervData& f, const PervData& g);

struct SubObject {
  PervData data;
  PervMorphism map;  // inclusion into the source (kernel) / projection (cokernel)
};

SubObject kernel(const PervData& src, const PervData& dst, const PervMorphism& m);
SubObject cokernel(const PervData& src, const PervData& dst, const PervMorphism& m);

PervData direct_sum(const PervData& f, const PervData& g);

// D(Phi, Psi, a, b) = (Phi, Psi, b^T, a^T); monodromies transpose, and
// dualize is an involution on the nose.
PervData dualize(const PervData& f);

// Standard objects with nearby-cycle monodromy T (T must be invertible,
// r x r). skyscraper has no nearby cycles at all.
PervData skyscraper(Index d);
PervData extension_by_zero(const RatMat& t);       // (r, r, I, I - T)
PervData direct_image(const RatMat& t);            // (r, r, I - T, I)
PervData intermediate_extension(const RatMat& t);  // (rank(I-T), r, im-basis, corestriction)

}  // namespace percy

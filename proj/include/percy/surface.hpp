#pragma once

#include <string>
#include <utility>
#include <vector>

#include "percy/perverse.hpp"

namespace percy {

// Global perverse-sheaf data on a closed genus-g surface with n >= 1 special
// points. The generic rank r is dim Psi; every local datum shares the same
// Psi = Q^r. Loop conventions: handles first, then points in label order, so
// validity means [A_1,B_1]...[A_g,B_g] T_1 ... T_n = I with T_j = I - a_j b_j.
struct SurfacePervData {
  int genus = 0;
  Index r = 0;
  std::vector<std::pair<RatMat, RatMat>> handles;  // (A_i, B_i), r x r
  std::vector<PervData> locals;                    // psi == r each
};

struct SurfaceReport {
  bool shapes_ok = false;
  bool handles_invertible = false;
  bool locals_valid = false;
  bool relation_holds = false;
  std::vector<std::string> failures;

  bool ok() const {
    return shapes_ok && handles_invertible && locals_valid && relation_holds;
  }
};

SurfaceReport validate(const SurfacePervData& s);
SurfacePervData checked_surface(SurfacePervData s);

RatMat surface_relation(const SurfacePervData& s);  // should be I_r

// (2g-2) r + sum phi_j; equals -r chi(X - N) + sum (phi_j - r).
long euler_characteristic(const SurfacePervData& s);

// Contravariant dual: local data get the transposed swap, handles map to
// ((B^T)^{-1}, (A^T)^{-1}) with handle order and point order reversed (the
// relation transposes to exactly this form). An exact involution.
SurfacePervData dualize(const SurfacePervData& s);

SurfacePervData direct_sum(const SurfacePervData& s, const SurfacePervData& t);

// Morphisms are pairs (h on Psi, f_j on each Phi_j) intertwining all handles
// and all local squares.
struct SurfaceMorphism {
  RatMat h;                   // r' x r
  std::vector<RatMat> f_phi;  // per point
};
std::vector<SurfaceMorphism> hom_space(const SurfacePervData& s, const SurfacePervData& t);

SurfacePervData add_dummy_point(const SurfacePervData& s);
SurfacePervData remove_dummy_point(const SurfacePervData& s, std::size_t j);

PervData restrict_to_disk(const SurfacePervData& s, std::size_t j);

}  // namespace percy

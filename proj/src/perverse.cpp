#include "percy/perverse.hpp"

namespace percy {

PervReport validate(const PervData& d) {
  PervReport r;
  if (d.phi < 0 || d.psi < 0 || d.a.rows() != d.psi || d.a.cols() != d.phi ||
      d.b.rows() != d.phi || d.b.cols() != d.psi) {
    r.detail = "shape mismatch: a must be psi x phi, b must be phi x psi";
    return r;
  }
  r.shapes_ok = true;
  Monodromies m = monodromies(d);
  r.t_phi_invertible = is_invertible(m.t_phi);
  r.t_psi_invertible = is_invertible(m.t_psi);
  if (r.t_phi_invertible != r.t_psi_invertible)
    throw error("validate: invertibility of T_Phi and T_Psi disagree");
  if (!r.ok()) r.detail = r.t_psi_invertible ? "T_Phi is singular" : "T_Psi is singular";
  return r;
}

PervData checked(PervData d) {
  PervReport r = validate(d);
  if (!r.ok()) throw error("invalid quadruple: " + r.detail);
  return d;
}

Monodromies monodromies(const PervData& d) {
  return {rat_identity(d.phi) - d.b * d.a, rat_identity(d.psi) - d.a * d.b};
}

RatMat half_monodromy(const PervData& d) {
  RatMat p = rat_zero(d.phi + d.psi, d.phi + d.psi);
  p.topLeftCorner(d.phi, d.phi) = -rat_identity(d.phi);
  p.topRightCorner(d.phi, d.psi) = d.b;
  p.bottomLeftCorner(d.psi, d.phi) = -d.a;
  p.bottomRightCorner(d.psi, d.psi) = rat_identity(d.psi);
  return p;
}

bool is_morphism(const PervData& src, const PervData& dst, const PervMorphism& m) {
  if (m.f_phi.rows() != dst.phi || m.f_phi.cols() != src.phi) return false;
  if (m.f_psi.rows() != dst.psi || m.f_psi.cols() != src.psi) return false;
  return mat_eq(m.f_psi * src.a, dst.a * m.f_phi) && mat_eq(m.f_phi * src.b, dst.b * m.f_psi);
}

PervMorphism identity_morphism(const PervData& d) {
  return {rat_identity(d.phi), rat_identity(d.psi)};
}

std::vector<PervMorphism> hom_space(const PervData& f, const PervData& g) {
  // Unknowns: entries of f_phi (g.phi x f.phi) then f_psi (g.psi x f.psi),
  // column-major within each block. Equations: f_psi a - a' f_phi = 0 and
  // f_phi b - b' f_psi = 0, probed entry by entry.
  Index n_phi = g.phi * f.phi, n_psi = g.psi * f.psi;
  Index rows = g.psi * f.phi + g.phi * f.psi;
  RatMat sys = rat_zero(rows, n_phi + n_psi);

  auto unknown_phi = [&](Index r, Index c) { return c * g.phi + r; };
  auto unknown_psi = [&](Index r, Index c) { return n_phi + c * g.psi + r; };

  Index eq = 0;
  // (f_psi a)(r,c) - (a' f_phi)(r,c) = 0, r < g.psi, c < f.phi
  for (Index r = 0; r < g.psi; ++r)
    for (Index c = 0; c < f.phi; ++c, ++eq) {
      for (Index k = 0; k < f.psi; ++k) sys(eq, unknown_psi(r, k)) += f.a(k, c);
      for (Index k = 0; k < g.phi; ++k) sys(eq, unknown_phi(k, c)) -= g.a(r, k);
    }
  // (f_phi b)(r,c) - (b' f_psi)(r,c) = 0, r < g.phi, c < f.psi
  for (Index r = 0; r < g.phi; ++r)
    for (Index c = 0; c < f.psi; ++c, ++eq) {
      for (Index k = 0; k < f.phi; ++k) sys(eq, unknown_phi(r, k)) += f.b(k, c);
      for (Index k = 0; k < g.psi; ++k) sys(eq, unknown_psi(k, c)) -= g.b(r, k);
    }

  RatMat basis = kernel_basis(sys);
  std::vector<PervMorphism> out;
  for (Index v = 0; v < basis.cols(); ++v) {
    PervMorphism m{rat_zero(g.phi, f.phi), rat_zero(g.psi, f.psi)};
    for (Index c = 0; c < f.phi; ++c)
      for (Index r = 0; r < g.phi; ++r) m.f_phi(r, c) = basis(unknown_phi(r, c), v);
    for (Index c = 0; c < f.psi; ++c)
      for (Index r = 0; r < g.psi; ++r) m.f_psi(r, c) = basis(unknown_psi(r, c), v);
    out.push_back(std::move(m));
  }
  return out;
}

namespace {

// Express target * x = source columns, i.e. coordinates of `source`'s columns
// in the column span of `target`; throws if not contained.
RatMat coords_in(const RatMat& target, const RatMat& source, const char* what) {
  auto c = solve_all(target, source);
  if (!c) throw error(std::string(what) + ": restriction does not preserve the subspace");
  return *c;
}

}  // namespace

SubObject kernel(const PervData& src, const PervData& dst, const PervMorphism& m) {
  if (!is_morphism(src, dst, m)) throw error("kernel: not a morphism");
  RatMat k_phi = kernel_basis(m.f_phi);
  RatMat k_psi = kernel_basis(m.f_psi);
  // a maps ker f_phi into ker f_psi by the commuting squares; restrict.
  PervData ker;
  ker.phi = k_phi.cols();
  ker.psi = k_psi.cols();
  ker.a = coords_in(k_psi, src.a * k_phi, "kernel");
  ker.b = coords_in(k_phi, src.b * k_psi, "kernel");
  return {checked(std::move(ker)), PervMorphism{k_phi, k_psi}};
}

namespace {

// Quotient of the ambient space by the column span of `img`: returns the
// projection matrix q with q*img = 0 and q surjective, of shape
// (dim - rank) x dim. Built from an echelon completion of img to a basis.
RatMat quotient_projection(const RatMat& img, Index dim) {
  RatMat basis = image_basis(img);
  Echelon e = rref(hcat(img, rat_identity(dim)));
  // pivots past img's block pick unit vectors completing im(img) to a basis
  std::vector<Index> complement;
  for (Index p : e.pivots)
    if (p >= img.cols()) complement.push_back(p - img.cols());
  RatMat full = rat_zero(dim, basis.cols() + static_cast<Index>(complement.size()));
  full.leftCols(basis.cols()) = basis;
  for (std::size_t i = 0; i < complement.size(); ++i)
    full(complement[i], basis.cols() + static_cast<Index>(i)) = 1;
  RatMat inv = inverse(full);
  return inv.bottomRows(static_cast<Index>(complement.size()));
}

}  // namespace

SubObject cokernel(const PervData& src, const PervData& dst, const PervMorphism& m) {
  if (!is_morphism(src, dst, m)) throw error("cokernel: not a morphism");
  RatMat q_phi = quotient_projection(m.f_phi, dst.phi);
  RatMat q_psi = quotient_projection(m.f_psi, dst.psi);
  // a', b' descend to the quotients: q_psi a' = a'' q_phi for the unique a''.
  PervData coker;
  coker.phi = q_phi.rows();
  coker.psi = q_psi.rows();
  auto a2 = solve_all(RatMat(q_phi.transpose()), RatMat((q_psi * dst.a).transpose()));
  auto b2 = solve_all(RatMat(q_psi.transpose()), RatMat((q_phi * dst.b).transpose()));
  if (!a2 || !b2) throw error("cokernel: structure maps do not descend");
  coker.a = a2->transpose();
  coker.b = b2->transpose();
  return {checked(std::move(coker)), PervMorphism{q_phi, q_psi}};
}

PervData direct_sum(const PervData& f, const PervData& g) {
  PervData s;
  s.phi = f.phi + g.phi;
  s.psi = f.psi + g.psi;
  s.a = direct_sum(f.a, g.a);
  s.b = direct_sum(f.b, g.b);
  return s;
}

PervData dualize(const PervData& f) {
  PervData d;
  d.phi = f.phi;
  d.psi = f.psi;
  d.a = f.b.transpose();
  d.b = f.a.transpose();
  return d;
}

PervData skyscraper(Index d) {
  if (d < 0) throw error("skyscraper: negative dimension");
  return {d, 0, rat_zero(0, d), rat_zero(d, 0)};
}

namespace {

RatMat require_invertible(const RatMat& t, const char* what) {
  if (!is_invertible(t)) throw error(std::string(what) + ": singular monodromy");
  return t;
}

}  // namespace

PervData extension_by_zero(const RatMat& t) {
  require_invertible(t, "extension_by_zero");
  Index r = t.rows();
  return {r, r, rat_identity(r), rat_identity(r) - t};
}

PervData direct_image(const RatMat& t) {
  require_invertible(t, "direct_image");
  Index r = t.rows();
  return {r, r, rat_identity(r) - t, rat_identity(r)};
}

PervData intermediate_extension(const RatMat& t) {
  require_invertible(t, "intermediate_extension");
  Index r = t.rows();
  RatMat n = rat_identity(r) - t;
  RatMat m = image_basis(n);  // r x k, a: Phi -> Psi is the inclusion
  auto c = solve_all(m, n);   // k x r, b: Psi -> Phi is the corestriction
  if (!c) throw error("intermediate_extension: factorization failed");
  return {m.cols(), r, m, *c};
}

}  // namespace percy

#include "percy/surface.hpp"

namespace percy {

SurfaceReport validate(const SurfacePervData& s) {
  SurfaceReport rep;
  if (s.genus < 0) {
    rep.failures.push_back("negative genus");
    return rep;
  }
  if (s.locals.empty()) {
    rep.failures.push_back("at least one special point required (dummy points allowed)");
    return rep;
  }
  if (static_cast<int>(s.handles.size()) != s.genus) {
    rep.failures.push_back("expected one (A,B) pair per handle");
    return rep;
  }
  rep.shapes_ok = true;
  for (const auto& [a, b] : s.handles)
    if (a.rows() != s.r || a.cols() != s.r || b.rows() != s.r || b.cols() != s.r) {
      rep.shapes_ok = false;
      rep.failures.push_back("handle matrix is not r x r");
    }
  for (const auto& loc : s.locals)
    if (loc.psi != s.r) {
      rep.shapes_ok = false;
      rep.failures.push_back("local datum has psi != r");
    }
  if (!rep.shapes_ok) return rep;

  rep.handles_invertible = true;
  for (std::size_t i = 0; i < s.handles.size(); ++i) {
    if (!is_invertible(s.handles[i].first)) {
      rep.handles_invertible = false;
      rep.failures.push_back("A_" + std::to_string(i + 1) + " singular");
    }
    if (!is_invertible(s.handles[i].second)) {
      rep.handles_invertible = false;
      rep.failures.push_back("B_" + std::to_string(i + 1) + " singular");
    }
  }
  rep.locals_valid = true;
  for (std::size_t j = 0; j < s.locals.size(); ++j) {
    PervReport r = percy::validate(s.locals[j]);
    if (!r.ok()) {
      rep.locals_valid = false;
      rep.failures.push_back("local datum " + std::to_string(j + 1) + ": " + r.detail);
    }
  }
  if (!rep.handles_invertible || !rep.locals_valid) return rep;

  rep.relation_holds = mat_eq(surface_relation(s), rat_identity(s.r));
  if (!rep.relation_holds) rep.failures.push_back("surface relation fails");
  return rep;
}

SurfacePervData checked_surface(SurfacePervData s) {
  SurfaceReport rep = validate(s);
  if (!rep.ok()) {
    std::string msg = "invalid surface datum:";
    for (const auto& f : rep.failures) msg += " " + f + ";";
    throw error(msg);
  }
  return s;
}

RatMat surface_relation(const SurfacePervData& s) {
  RatMat w = rat_identity(s.r);
  for (const auto& [a, b] : s.handles) w = w * a * b * inverse(a) * inverse(b);
  for (const auto& loc : s.locals) w = w * monodromies(loc).t_psi;
  return w;
}

long euler_characteristic(const SurfacePervData& s) {
  long chi = (2 * s.genus - 2) * static_cast<long>(s.r);
  for (const auto& loc : s.locals) chi += static_cast<long>(loc.phi);
  return chi;
}

SurfacePervData dualize(const SurfacePervData& s) {
  SurfacePervData d;
  d.genus = s.genus;
  d.r = s.r;
  for (auto it = s.handles.rbegin(); it != s.handles.rend(); ++it)
    d.handles.emplace_back(inverse(RatMat(it->second.transpose())),
                           inverse(RatMat(it->first.transpose())));
  for (auto it = s.locals.rbegin(); it != s.locals.rend(); ++it)
    d.locals.push_back(dualize(*it));
  return d;
}

SurfacePervData direct_sum(const SurfacePervData& s, const SurfacePervData& t) {
  if (s.genus != t.genus || s.locals.size() != t.locals.size())
    throw error("direct_sum: surfaces differ");
  SurfacePervData u;
  u.genus = s.genus;
  u.r = s.r + t.r;
  for (std::size_t i = 0; i < s.handles.size(); ++i)
    u.handles.emplace_back(direct_sum(s.handles[i].first, t.handles[i].first),
                           direct_sum(s.handles[i].second, t.handles[i].second));
  for (std::size_t j = 0; j < s.locals.size(); ++j)
    u.locals.push_back(direct_sum(s.locals[j], t.locals[j]));
  return u;
}

std::vector<SurfaceMorphism> hom_space(const SurfacePervData& s, const SurfacePervData& t) {
  if (s.genus != t.genus || s.locals.size() != t.locals.size())
    throw error("hom_space: surfaces differ");
  std::size_t pts = s.locals.size();
  // Unknowns: h (t.r x s.r), then f_j (t.phi_j x s.phi_j) per point.
  Index total = t.r * s.r;
  std::vector<Index> f_off(pts);
  for (std::size_t j = 0; j < pts; ++j) {
    f_off[j] = total;
    total += t.locals[j].phi * s.locals[j].phi;
  }
  auto h_var = [&](Index r, Index c) { return c * t.r + r; };
  auto f_var = [&](std::size_t j, Index r, Index c) {
    return f_off[j] + c * t.locals[j].phi + r;
  };

  std::vector<std::vector<Rat>> rows;
  auto add = [&](std::vector<Rat> row) { rows.push_back(std::move(row)); };
  // h M = M' h for every handle matrix
  auto intertwine_handle = [&](const RatMat& m, const RatMat& m2) {
    for (Index r = 0; r < t.r; ++r)
      for (Index c = 0; c < s.r; ++c) {
        std::vector<Rat> row(total, Rat(0));
        for (Index k = 0; k < s.r; ++k) row[h_var(r, k)] += m(k, c);
        for (Index k = 0; k < t.r; ++k) row[h_var(k, c)] -= m2(r, k);
        add(std::move(row));
      }
  };
  for (std::size_t i = 0; i < s.handles.size(); ++i) {
    intertwine_handle(s.handles[i].first, t.handles[i].first);
    intertwine_handle(s.handles[i].second, t.handles[i].second);
  }
  for (std::size_t j = 0; j < pts; ++j) {
    const PervData& a = s.locals[j];
    const PervData& b = t.locals[j];
    // h a_j = a'_j f_j
    for (Index r = 0; r < t.r; ++r)
      for (Index c = 0; c < a.phi; ++c) {
        std::vector<Rat> row(total, Rat(0));
        for (Index k = 0; k < s.r; ++k) row[h_var(r, k)] += a.a(k, c);
        for (Index k = 0; k < b.phi; ++k) row[f_var(j, k, c)] -= b.a(r, k);
        add(std::move(row));
      }
    // f_j b_j = b'_j h
    for (Index r = 0; r < b.phi; ++r)
      for (Index c = 0; c < s.r; ++c) {
        std::vector<Rat> row(total, Rat(0));
        for (Index k = 0; k < a.phi; ++k) row[f_var(j, r, k)] += a.b(k, c);
        for (Index k = 0; k < t.r; ++k) row[h_var(k, c)] -= b.b(r, k);
        add(std::move(row));
      }
  }

  RatMat sys = rat_zero(static_cast<Index>(rows.size()), total);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (Index c = 0; c < total; ++c) sys(static_cast<Index>(r), c) = rows[r][c];
  RatMat basis = kernel_basis(sys);

  std::vector<SurfaceMorphism> out;
  for (Index v = 0; v < basis.cols(); ++v) {
    SurfaceMorphism m;
    m.h = rat_zero(t.r, s.r);
    for (Index c = 0; c < s.r; ++c)
      for (Index r = 0; r < t.r; ++r) m.h(r, c) = basis(h_var(r, c), v);
    for (std::size_t j = 0; j < pts; ++j) {
      RatMat f = rat_zero(t.locals[j].phi, s.locals[j].phi);
      for (Index c = 0; c < s.locals[j].phi; ++c)
        for (Index r = 0; r < t.locals[j].phi; ++r) f(r, c) = basis(f_var(j, r, c), v);
      m.f_phi.push_back(std::move(f));
    }
    out.push_back(std::move(m));
  }
  return out;
}

SurfacePervData add_dummy_point(const SurfacePervData& s) {
  SurfacePervData t = s;
  t.locals.push_back(PervData{0, s.r, rat_zero(s.r, 0), rat_zero(0, s.r)});
  return t;
}

SurfacePervData remove_dummy_point(const SurfacePervData& s, std::size_t j) {
  if (j >= s.locals.size()) throw error("remove_dummy_point: bad index");
  if (s.locals[j].phi != 0) throw error("remove_dummy_point: point is not a dummy");
  if (s.locals.size() == 1) throw error("remove_dummy_point: at least one point required");
  SurfacePervData t = s;
  t.locals.erase(t.locals.begin() + static_cast<std::ptrdiff_t>(j));
  return t;
}

PervData restrict_to_disk(const SurfacePervData& s, std::size_t j) {
  if (j >= s.locals.size()) throw error("restrict_to_disk: bad index");
  return s.locals[j];
}

}  // namespace percy

#include "percy/json_io.hpp"

#include <algorithm>

namespace percy {

namespace {

Index get_count(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long>() < 0)
    throw error(std::string("expected nonnegative integer field '") + key + "'");
  return j[key].get<Index>();
}

std::string level_key(int n) { return std::to_string(n); }
std::string level_key(int n, int i) { return std::to_string(n) + "," + std::to_string(i); }

std::vector<Index> dims_from_json(const Json& j) {
  if (!j.contains("dims") || !j["dims"].is_array()) throw error("missing dims");
  std::vector<Index> dims;
  for (const auto& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<long>() < 0)
      throw error("dims entries must be nonnegative integers");
    dims.push_back(d.get<Index>());
  }
  return dims;
}

}  // namespace

Json matrix_to_json(const RatMat& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RatMat matrix_from_json(const Json& j, Index rows, Index cols) {
  if (!j.is_array() || static_cast<Index>(j.size()) != rows)
    throw error("matrix: expected " + std::to_string(rows) + " rows");
  RatMat m = rat_zero(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const Json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw error("matrix: expected " + std::to_string(cols) + " columns");
    for (Index c = 0; c < cols; ++c) {
      const Json& cell = row[static_cast<std::size_t>(c)];
      if (cell.is_string())
        m(r, c) = rat_from_string(cell.get<std::string>());
      else if (cell.is_number_integer())
        m(r, c) = rat(cell.get<long>());
      else
        throw error("matrix: entries must be rational strings or integers");
    }
  }
  return m;
}

Json to_json(const PervData& d) {
  Json j;
  j["phi"] = d.phi;
  j["psi"] = d.psi;
  j["a"] = matrix_to_json(d.a);
  j["b"] = matrix_to_json(d.b);
  return j;
}

PervData perv_from_json(const Json& j) {
  PervData d;
  d.phi = get_count(j, "phi");
  d.psi = get_count(j, "psi");
  if (!j.contains("a") || !j.contains("b")) throw error("perverse datum: missing a or b");
  d.a = matrix_from_json(j["a"], d.psi, d.phi);
  d.b = matrix_from_json(j["b"], d.phi, d.psi);
  return d;
}

Json to_json(const ParaMap& f) {
  Json j;
  j["src"] = f.src;
  j["dst"] = f.dst;
  j["values"] = f.values;
  return j;
}

ParaMap paramap_from_json(const Json& j) {
  int src = static_cast<int>(get_count(j, "src"));
  int dst = static_cast<int>(get_count(j, "dst"));
  if (!j.contains("values") || !j["values"].is_array())
    throw error("paracyclic map: missing values");
  std::vector<std::int64_t> v;
  for (const auto& x : j["values"]) {
    if (!x.is_number_integer()) throw error("paracyclic map: values must be integers");
    v.push_back(x.get<std::int64_t>());
  }
  return para_map(src, dst, std::move(v));
}

namespace {

void simplicial_to_json(const SimplicialVec& x, Json& j) {
  j["n_max"] = x.n_max;
  j["dims"] = x.dims;
  Json faces = Json::object();
  for (int n = 1; n <= x.n_max; ++n)
    for (int i = 0; i <= n; ++i) faces[level_key(n, i)] = matrix_to_json(x.d(n, i));
  j["faces"] = std::move(faces);
  Json degens = Json::object();
  for (int n = 0; n < x.n_max; ++n)
    for (int i = 0; i <= n; ++i) degens[level_key(n, i)] = matrix_to_json(x.s(n, i));
  j["degeneracies"] = std::move(degens);
}

void simplicial_from_json(const Json& j, SimplicialVec& x) {
  x.n_max = static_cast<int>(get_count(j, "n_max"));
  x.dims = dims_from_json(j);
  if (static_cast<int>(x.dims.size()) != x.n_max + 1)
    throw error("simplicial: dims must list levels 0..n_max");
  x.face.assign(x.n_max + 1, {});
  x.degen.assign(std::max(x.n_max, 0), {});
  for (int n = 1; n <= x.n_max; ++n) {
    x.face[n].resize(n + 1);
    for (int i = 0; i <= n; ++i)
      x.face[n][i] = matrix_from_json(j.at("faces").at(level_key(n, i)), x.dims[n - 1],
                                      x.dims[n]);
  }
  for (int n = 0; n < x.n_max; ++n) {
    x.degen[n].resize(n + 1);
    for (int i = 0; i <= n; ++i)
      x.degen[n][i] = matrix_from_json(j.at("degeneracies").at(level_key(n, i)),
                                       x.dims[n + 1], x.dims[n]);
  }
  check_shapes(x);
}

}  // namespace

Json to_json(const SimplicialVec& x) {
  Json j;
  simplicial_to_json(x, j);
  return j;
}

SimplicialVec simplicial_from_json(const Json& j) {
  SimplicialVec x;
  simplicial_from_json(j, x);
  return x;
}

Json to_json(const ParacyclicVec& x) {
  Json j;
  simplicial_to_json(x, j);
  Json t = Json::object();
  for (int n = 0; n <= x.n_max; ++n) t[level_key(n)] = matrix_to_json(x.t[n]);
  j["t"] = std::move(t);
  return j;
}

ParacyclicVec paracyclic_from_json(const Json& j) {
  ParacyclicVec x;
  simplicial_from_json(j, x);
  if (!j.contains("t")) throw error("paracyclic: missing t");
  x.t.resize(x.n_max + 1);
  for (int n = 0; n <= x.n_max; ++n)
    x.t[n] = matrix_from_json(j.at("t").at(level_key(n)), x.dims[n], x.dims[n]);
  check_shapes(x);
  return x;
}

Json to_json(const DuplicialVec& y) {
  Json j;
  simplicial_to_json(y, j);
  Json extra = Json::object();
  for (int n = 1; n <= y.n_max; ++n) extra[level_key(n)] = matrix_to_json(y.extra[n]);
  j["extra_degeneracies"] = std::move(extra);
  return j;
}

DuplicialVec duplicial_from_json(const Json& j) {
  DuplicialVec y;
  simplicial_from_json(j, y);
  if (!j.contains("extra_degeneracies")) throw error("duplicial: missing extra_degeneracies");
  y.extra.resize(y.n_max + 1);
  for (int n = 1; n <= y.n_max; ++n)
    y.extra[n] = matrix_from_json(j.at("extra_degeneracies").at(level_key(n)), y.dims[n],
                                  y.dims[n - 1]);
  check_shapes(y);
  return y;
}

Json to_json(const Complex& e) {
  Json j;
  j["dims"] = e.dims;
  Json d = Json::object();
  for (std::size_t n = 1; n < e.dims.size(); ++n)
    d[level_key(static_cast<int>(n))] = matrix_to_json(e.diff[n]);
  j["d"] = std::move(d);
  return j;
}

Complex complex_from_json(const Json& j) {
  std::vector<Index> dims = dims_from_json(j);
  if (dims.empty()) throw error("complex: missing dims");
  std::vector<RatMat> diff(dims.size());
  diff[0] = rat_zero(0, dims[0]);
  for (std::size_t n = 1; n < dims.size(); ++n)
    diff[n] = matrix_from_json(j.at("d").at(level_key(static_cast<int>(n))), dims[n - 1],
                               dims[n]);
  return make_complex(std::move(dims), std::move(diff));
}

Json to_json(const Ducomplex& b) {
  Json j;
  j["dims"] = b.dims;
  Json d = Json::object(), delta = Json::object();
  for (std::size_t n = 1; n < b.dims.size(); ++n) {
    d[level_key(static_cast<int>(n))] = matrix_to_json(b.d[n]);
    delta[level_key(static_cast<int>(n))] = matrix_to_json(b.delta[n]);
  }
  j["d"] = std::move(d);
  j["delta"] = std::move(delta);
  return j;
}

Ducomplex ducomplex_from_json(const Json& j) {
  std::vector<Index> dims = dims_from_json(j);
  if (dims.empty()) throw error("ducomplex: missing dims");
  std::vector<RatMat> d(dims.size()), delta(dims.size());
  d[0] = rat_zero(0, dims[0]);
  delta[0] = rat_zero(dims[0], 0);
  for (std::size_t n = 1; n < dims.size(); ++n) {
    d[n] = matrix_from_json(j.at("d").at(level_key(static_cast<int>(n))), dims[n - 1],
                            dims[n]);
    delta[n] = matrix_from_json(j.at("delta").at(level_key(static_cast<int>(n))), dims[n],
                                dims[n - 1]);
  }
  return make_ducomplex(std::move(dims), std::move(d), std::move(delta));
}

Json to_json(const SurfacePervData& s) {
  Json j;
  j["genus"] = s.genus;
  j["r"] = s.r;
  Json handles = Json::array();
  for (const auto& [a, b] : s.handles)
    handles.push_back(Json::array({matrix_to_json(a), matrix_to_json(b)}));
  j["handles"] = std::move(handles);
  Json locals = Json::array();
  for (const auto& loc : s.locals) {
    Json l;
    l["phi"] = loc.phi;
    l["a"] = matrix_to_json(loc.a);
    l["b"] = matrix_to_json(loc.b);
    locals.push_back(std::move(l));
  }
  j["locals"] = std::move(locals);
  return j;
}

SurfacePervData surface_from_json(const Json& j) {
  SurfacePervData s;
  s.genus = static_cast<int>(get_count(j, "genus"));
  s.r = get_count(j, "r");
  if (!j.contains("handles") || !j["handles"].is_array()) throw error("surface: missing handles");
  for (const auto& h : j["handles"]) {
    if (!h.is_array() || h.size() != 2) throw error("surface: handle must be a pair [A, B]");
    s.handles.emplace_back(matrix_from_json(h[0], s.r, s.r), matrix_from_json(h[1], s.r, s.r));
  }
  if (!j.contains("locals") || !j["locals"].is_array()) throw error("surface: missing locals");
  for (const auto& l : j["locals"]) {
    PervData d;
    d.phi = get_count(l, "phi");
    d.psi = s.r;
    d.a = matrix_from_json(l.at("a"), s.r, d.phi);
    d.b = matrix_from_json(l.at("b"), d.phi, s.r);
    s.locals.push_back(std::move(d));
  }
  return s;
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace percy

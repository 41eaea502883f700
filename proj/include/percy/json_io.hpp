#pragma once

#include <json.hpp>

#include "percy/duplicial.hpp"
#include "percy/nerve.hpp"
#include "percy/paramap.hpp"
#include "percy/perverse.hpp"
#include "percy/surface.hpp"

namespace percy {

// Key order is preserved so reports and object files are byte-deterministic.
using Json = nlohmann::ordered_json;

// Rationals serialize as strings "p/q" or "p"; matrices as row-major arrays
// of arrays of such strings (an r x 0 matrix is r empty rows).
Json matrix_to_json(const RatMat& m);
RatMat matrix_from_json(const Json& j, Index rows, Index cols);

Json to_json(const PervData& d);
PervData perv_from_json(const Json& j);

Json to_json(const ParaMap& f);
ParaMap paramap_from_json(const Json& j);

Json to_json(const SimplicialVec& x);
SimplicialVec simplicial_from_json(const Json& j);

Json to_json(const ParacyclicVec& x);
ParacyclicVec paracyclic_from_json(const Json& j);

Json to_json(const DuplicialVec& y);
DuplicialVec duplicial_from_json(const Json& j);

Json to_json(const Complex& e);
Complex complex_from_json(const Json& j);

Json to_json(const Ducomplex& b);
Ducomplex ducomplex_from_json(const Json& j);

Json to_json(const SurfacePervData& s);
SurfacePervData surface_from_json(const Json& j);

std::string dump_canonical(const Json& j);  // 2-space indent, trailing newline

}  // namespace percy

#pragma once

#include <string>
#include <vector>

#include "percy/linalg.hpp"

namespace percy {

// Truncated simplicial vector space: dims[n] for 0 <= n <= n_max,
// face[n][i]: X_n -> X_{n-1} for 1 <= n <= n_max, 0 <= i <= n,
// degen[n][j]: X_n -> X_{n+1} for 0 <= n < n_max, 0 <= j <= n.
// Constructors check shapes; the simplicial identities are verified by
// check_relations (perturbed and deliberately broken objects are legal
// values, they just fail the check).
struct SimplicialVec {
  int n_max = 0;
  std::vector<Index> dims;
  std::vector<std::vector<RatMat>> face;
  std::vector<std::vector<RatMat>> degen;

  const RatMat& d(int n, int i) const { return face[n][i]; }
  const RatMat& s(int n, int j) const { return degen[n][j]; }
};

// Adds the cyclic operators t[n]: X_n -> X_n.
struct ParacyclicVec : SimplicialVec {
  std::vector<RatMat> t;
};

// Cochain complex in degrees 0, -1, ..., -(dims.size()-1) with
// diff[n]: E^{-n} -> E^{-n+1} for n >= 1; d o d = 0.
struct Complex {
  std::vector<Index> dims;
  std::vector<RatMat> diff;  // diff[0] unused placeholder (0 x dims[0])

  int amplitude() const { return static_cast<int>(dims.size()) - 1; }
};

void check_shapes(const SimplicialVec& x);
void check_shapes(const ParacyclicVec& x);
Complex make_complex(std::vector<Index> dims, std::vector<RatMat> diff);

struct RelationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

}  // namespace percy

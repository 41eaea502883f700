#include "percy/simplicial.hpp"

#include <algorithm>

namespace percy {

void check_shapes(const SimplicialVec& x) {
  if (x.n_max < 0) throw error("simplicial: negative truncation");
  if (static_cast<int>(x.dims.size()) != x.n_max + 1) throw error("simplicial: dims size");
  if (static_cast<int>(x.face.size()) != x.n_max + 1 ||
      static_cast<int>(x.degen.size()) != std::max(x.n_max, 0))
    throw error("simplicial: operator table size");
  for (int n = 1; n <= x.n_max; ++n) {
    if (static_cast<int>(x.face[n].size()) != n + 1)
      throw error("simplicial: face count at level " + std::to_string(n));
    for (const auto& m : x.face[n])
      if (m.rows() != x.dims[n - 1] || m.cols() != x.dims[n])
        throw error("simplicial: face shape at level " + std::to_string(n));
  }
  for (int n = 0; n < x.n_max; ++n) {
    if (static_cast<int>(x.degen[n].size()) != n + 1)
      throw error("simplicial: degeneracy count at level " + std::to_string(n));
    for (const auto& m : x.degen[n])
      if (m.rows() != x.dims[n + 1] || m.cols() != x.dims[n])
        throw error("simplicial: degeneracy shape at level " + std::to_string(n));
  }
}

void check_shapes(const ParacyclicVec& x) {
  check_shapes(static_cast<const SimplicialVec&>(x));
  if (static_cast<int>(x.t.size()) != x.n_max + 1) throw error("paracyclic: t table size");
  for (int n = 0; n <= x.n_max; ++n)
    if (x.t[n].rows() != x.dims[n] || x.t[n].cols() != x.dims[n])
      throw error("paracyclic: t shape at level " + std::to_string(n));
}

Complex make_complex(std::vector<Index> dims, std::vector<RatMat> diff) {
  if (dims.empty()) throw error("complex: needs at least degree 0");
  if (diff.size() != dims.size()) throw error("complex: differential table size");
  for (std::size_t n = 1; n < dims.size(); ++n) {
    if (diff[n].rows() != dims[n - 1] || diff[n].cols() != dims[n])
      throw error("complex: differential shape at degree -" + std::to_string(n));
    if (n >= 2 && !is_zero(diff[n - 1] * diff[n])) throw error("complex: d o d != 0");
  }
  Complex e;
  e.dims = std::move(dims);
  e.diff = std::move(diff);
  e.diff[0] = rat_zero(0, e.dims[0]);
  return e;
}

}  // namespace percy

#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "percy/rational.hpp"

namespace percy {

using Index = Eigen::Index;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline RatMat rat_zero(Index rows, Index cols) { return RatMat::Zero(rows, cols); }
inline RatMat rat_identity(Index n) { return RatMat::Identity(n, n); }

inline bool mat_eq(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

inline bool is_zero(const RatMat& a) { return mat_eq(a, rat_zero(a.rows(), a.cols())); }

RatMat multiply(const RatMat& g, const RatMat& f);

RatMat hcat(const RatMat& a, const RatMat& b);
RatMat vcat(const RatMat& a, const RatMat& b);
RatMat vcat(const std::vector<RatMat>& blocks, Index cols);

// Reduced row echelon form with the deterministic pivot convention:
// scan columns left to right, pivot on the smallest remaining row index.
struct Echelon {
  RatMat r;
  std::vector<Index> pivots;  // pivot column of each pivot row
};
Echelon rref(RatMat a);

Index rank(const RatMat& f);
bool is_invertible(const RatMat& f);
RatMat inverse(const RatMat& f);

// Columns form a basis of ker f; free columns carry coefficient 1.
RatMat kernel_basis(const RatMat& f);

// Pivot columns of f itself (not of its echelon form), left to right.
RatMat image_basis(const RatMat& f);

// One solution of f x = y, if any.
std::optional<RatVec> solve(const RatMat& f, const RatVec& y);

// One solution of f X = Y columnwise, if all columns are consistent.
std::optional<RatMat> solve_all(const RatMat& f, const RatMat& y);

RatMat direct_sum(const RatMat& f, const RatMat& g);

// Basis of {(x, y) : f x = g y} inside the ambient direct sum, with the two
// coordinate projections expressed on that basis.
struct FiberProduct {
  RatMat basis;   // (f.cols + g.cols) x k
  RatMat proj_a;  // f.cols x k
  RatMat proj_b;  // g.cols x k
};
FiberProduct fiber_product(const RatMat& f, const RatMat& g);

}  // namespace percy

#include "percy/linalg.hpp"

namespace percy {

RatMat multiply(const RatMat& g, const RatMat& f) {
  if (g.cols() != f.rows())
    throw error("multiply: dimension mismatch (" + std::to_string(g.rows()) + "x" +
                std::to_string(g.cols()) + " times " + std::to_string(f.rows()) + "x" +
                std::to_string(f.cols()) + ")");
  return g * f;
}

RatMat hcat(const RatMat& a, const RatMat& b) {
  if (a.rows() != b.rows()) throw error("hcat: row mismatch");
  RatMat r(a.rows(), a.cols() + b.cols());
  r.leftCols(a.cols()) = a;
  r.rightCols(b.cols()) = b;
  return r;
}

RatMat vcat(const RatMat& a, const RatMat& b) {
  if (a.cols() != b.cols()) throw error("vcat: column mismatch");
  RatMat r(a.rows() + b.rows(), a.cols());
  r.topRows(a.rows()) = a;
  r.bottomRows(b.rows()) = b;
  return r;
}

RatMat vcat(const std::vector<RatMat>& blocks, Index cols) {
  Index rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  RatMat r(rows, cols);
  Index at = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw error("vcat: column mismatch");
    r.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return r;
}

Echelon rref(RatMat a) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < a.cols() && row < a.rows(); ++col) {
    Index p = -1;
    for (Index i = row; i < a.rows(); ++i)
      if (a(i, col) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != row) a.row(p).swap(a.row(row));
    Rat inv = 1 / a(row, col);
    for (Index j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (Index i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col) == 0) continue;
      Rat factor = a(i, col);
      for (Index j = col; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), std::move(pivots)};
}

Index rank(const RatMat& f) { return static_cast<Index>(rref(f).pivots.size()); }

bool is_invertible(const RatMat& f) { return f.rows() == f.cols() && rank(f) == f.rows(); }

RatMat inverse(const RatMat& f) {
  if (f.rows() != f.cols()) throw error("inverse: matrix not square");
  Index n = f.rows();
  Echelon e = rref(hcat(f, rat_identity(n)));
  if (static_cast<Index>(e.pivots.size()) != n || (n > 0 && e.pivots.back() >= n))
    throw error("inverse: singular matrix");
  return e.r.rightCols(n);
}

RatMat kernel_basis(const RatMat& f) {
  Echelon e = rref(f);
  std::vector<bool> is_pivot(f.cols(), false);
  for (Index p : e.pivots) is_pivot[p] = true;
  Index k = f.cols() - static_cast<Index>(e.pivots.size());
  RatMat basis = rat_zero(f.cols(), k);
  Index v = 0;
  for (Index col = 0; col < f.cols(); ++col) {
    if (is_pivot[col]) continue;
    basis(col, v) = 1;
    for (Index i = 0; i < static_cast<Index>(e.pivots.size()); ++i)
      basis(e.pivots[i], v) = -e.r(i, col);
    ++v;
  }
  return basis;
}

RatMat image_basis(const RatMat& f) {
  Echelon e = rref(f);
  RatMat basis(f.rows(), static_cast<Index>(e.pivots.size()));
  for (Index i = 0; i < static_cast<Index>(e.pivots.size()); ++i)
    basis.col(i) = f.col(e.pivots[i]);
  return basis;
}

std::optional<RatVec> solve(const RatMat& f, const RatVec& y) {
  auto x = solve_all(f, y);
  if (!x) return std::nullopt;
  return RatVec(x->col(0));
}

std::optional<RatMat> solve_all(const RatMat& f, const RatMat& y) {
  if (f.rows() != y.rows()) throw error("solve: dimension mismatch");
  Echelon e = rref(hcat(f, y));
  RatMat x = rat_zero(f.cols(), y.cols());
  for (Index i = 0; i < static_cast<Index>(e.pivots.size()); ++i) {
    if (e.pivots[i] >= f.cols()) return std::nullopt;  // pivot in the rhs block
    x.row(e.pivots[i]) = e.r.block(i, f.cols(), 1, y.cols());
  }
  return x;
}

RatMat direct_sum(const RatMat& f, const RatMat& g) {
  RatMat r = rat_zero(f.rows() + g.rows(), f.cols() + g.cols());
  r.topLeftCorner(f.rows(), f.cols()) = f;
  r.bottomRightCorner(g.rows(), g.cols()) = g;
  return r;
}

FiberProduct fiber_product(const RatMat& f, const RatMat& g) {
  if (f.rows() != g.rows()) throw error("fiber_product: codomain mismatch");
  RatMat k = kernel_basis(hcat(f, -g));
  FiberProduct fp;
  fp.basis = k;
  fp.proj_a = k.topRows(f.cols());
  fp.proj_b = k.bottomRows(g.cols());
  return fp;
}

}  // namespace percy

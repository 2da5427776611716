#include "braidspan/poly_matrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace braidspan {

PolyMatrix::PolyMatrix(int rows, int cols, VarPair vars)
    : rows_(rows), cols_(cols), vars_(vars),
      data_(static_cast<std::size_t>(rows) * cols, LaurentPoly(vars)) {}

PolyMatrix PolyMatrix::identity(int n, VarPair vars) {
  PolyMatrix m(n, n, vars);
  for (int k = 0; k < n; ++k) m(k, k) = LaurentPoly::constant(1, vars);
  return m;
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const LaurentPoly& p) { return p.is_zero(); });
}

bool PolyMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (r == c ? !(*this)(r, c).is_one() : !(*this)(r, c).is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::transform(LaurentPoly (*f)(const LaurentPoly&), VarPair vars) const {
  PolyMatrix out(rows_, cols_, vars);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!data_[k].is_zero()) out.data_[k] = f(data_[k]);
  return out;
}

std::string PolyMatrix::key() const {
  std::ostringstream os;
  os << rows_ << 'x' << cols_;
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!data_[k].is_zero()) os << '|' << k << ':' << data_[k].to_string();
  return os.str();
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  if (a.vars_ != b.vars_) throw TagMismatch("matrix product: variable pair mismatch");
  PolyMatrix out(a.rows_, b.cols_, a.vars_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const LaurentPoly& x = a(i, k);
      if (x.is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) {
        const LaurentPoly& y = b(k, j);
        if (!y.is_zero()) out(i, j) += x * y;
      }
    }
  return out;
}

std::pair<int, int> degree_span(const PolyMatrix& m, Variable which) {
  bool any = false;
  std::pair<int, int> span{0, 0};
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) {
      const LaurentPoly& p = m(r, c);
      if (p.is_zero()) continue;
      const auto [lo, hi] = degree_span(p, which);
      if (!any) {
        span = {lo, hi};
        any = true;
      } else {
        span.first = std::min(span.first, lo);
        span.second = std::max(span.second, hi);
      }
    }
  if (!any) throw ZeroPolynomialError("degree span of an all-zero matrix is undefined");
  return span;
}

namespace {

// det of the minor on rows [0, popcount(mask)) and the columns in mask,
// computed by expansion along the last used row with memoization over masks.
LaurentPoly minor_det(const std::vector<std::vector<const LaurentPoly*>>& a, unsigned mask,
                      std::vector<LaurentPoly>& memo, std::vector<bool>& done, VarPair vars) {
  if (mask == 0) return LaurentPoly::constant(1, vars);
  if (done[mask]) return memo[mask];
  const int row = __builtin_popcount(mask) - 1;
  LaurentPoly acc(vars);
  const int cols = static_cast<int>(a[0].size());
  int pos = 0;  // position of column c among the selected columns
  for (int c = 0; c < cols; ++c) {
    if (!(mask & (1u << c))) continue;
    const LaurentPoly& entry = *a[row][c];
    const bool plus = (row + pos++) % 2 == 0;
    if (entry.is_zero()) continue;
    LaurentPoly term = entry * minor_det(a, mask & ~(1u << c), memo, done, vars);
    if (plus) acc += term; else acc -= term;
  }
  memo[mask] = acc;
  done[mask] = true;
  return acc;
}

LaurentPoly det_of(const PolyMatrix& m, int skip_row, int skip_col) {
  const int n = m.rows();
  std::vector<std::vector<const LaurentPoly*>> a;
  for (int r = 0; r < n; ++r) {
    if (r == skip_row) continue;
    std::vector<const LaurentPoly*> row;
    for (int c = 0; c < n; ++c)
      if (c != skip_col) row.push_back(&m(r, c));
    a.push_back(std::move(row));
  }
  const int k = static_cast<int>(a.size());
  if (k == 0) return LaurentPoly::constant(1, m.vars());
  if (k > 20) throw std::invalid_argument("determinant: matrix too large for cofactor expansion");
  std::vector<LaurentPoly> memo(std::size_t{1} << k, LaurentPoly(m.vars()));
  std::vector<bool> done(std::size_t{1} << k, false);
  return minor_det(a, (1u << k) - 1, memo, done, m.vars());
}

}  // namespace

LaurentPoly determinant(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  return det_of(m, -1, -1);
}

PolyMatrix unit_inverse(const PolyMatrix& m) {
  const LaurentPoly det = determinant(m);
  if (!det.is_unit_monomial())
    throw std::domain_error("unit_inverse: determinant " + det.to_string() + " is not a unit");
  const LaurentPoly inv = det.unit_inverse();
  const int n = m.rows();
  PolyMatrix out(n, n, m.vars());
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      // adj(m)(r, c) = (-1)^(r+c) det(m without row c, column r)
      LaurentPoly cof = det_of(m, c, r) * inv;
      out(r, c) = ((r + c) % 2 == 0) ? cof : -cof;
    }
  return out;
}

}  // namespace braidspan

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidspan/laurent.hpp"

namespace braidspan {

/// Dense rectangular matrix of Laurent polynomials, row-major.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int rows, int cols, VarPair vars = VarPair::qs);
  static PolyMatrix identity(int n, VarPair vars = VarPair::qs);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  VarPair vars() const { return vars_; }

  LaurentPoly& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const LaurentPoly& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool is_zero() const;
  bool is_identity() const;
  PolyMatrix transform(LaurentPoly (*f)(const LaurentPoly&), VarPair vars) const;
  // Canonical text, one entry per nonzero cell; used as a hash key.
  std::string key() const;

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  bool operator==(const PolyMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && vars_ == o.vars_ && data_ == o.data_;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  VarPair vars_ = VarPair::qs;
  std::vector<LaurentPoly> data_;
};

// Span of the selected variable over the nonzero entries. Throws
// ZeroPolynomialError if every entry is zero.
std::pair<int, int> degree_span(const PolyMatrix& m, Variable which);

// Exact determinant by cofactor expansion over column subsets (no division).
LaurentPoly determinant(const PolyMatrix& m);

// Inverse of a square matrix whose determinant is +-(monomial): adjugate
// times the inverse unit. Throws std::domain_error otherwise.
PolyMatrix unit_inverse(const PolyMatrix& m);

}  // namespace braidspan

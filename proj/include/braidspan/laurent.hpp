#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace braidspan {

using BigInt = mpz_class;

// Which pair of indeterminates a polynomial lives over. The quantum side uses
// (q, s); the homological side uses (qh, th). The two rings are never mixed.
enum class VarPair { qs, qhth };

enum class Variable { q, s, qh, th };

class TagMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ZeroPolynomialError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

const char* var_pair_name(VarPair vars);
const char* variable_name(Variable v);
VarPair pair_of(Variable v);

struct Term {
  int a = 0;  // exponent of the first variable of the pair
  int b = 0;  // exponent of the second variable
  BigInt c;

  bool operator==(const Term& o) const { return a == o.a && b == o.b && c == o.c; }
};

/// Sparse Laurent polynomial in two variables with integer coefficients.
///
/// Terms are kept sorted by (a, b) with no zero coefficients, so two equal
/// polynomials always have identical term vectors and serialize identically.
class LaurentPoly {
 public:
  explicit LaurentPoly(VarPair vars = VarPair::qs) : vars_(vars) {}

  static LaurentPoly constant(const BigInt& c, VarPair vars = VarPair::qs);
  static LaurentPoly monomial(const BigInt& c, int a, int b, VarPair vars = VarPair::qs);
  // Accepts duplicates and zeros in any order.
  static LaurentPoly from_terms(std::vector<Term> terms, VarPair vars = VarPair::qs);

  VarPair vars() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  bool is_unit_monomial() const;  // +-q^a s^b

  BigInt coefficient(int a, int b) const;

  // Multiplies every term by c * x^da * y^db.
  LaurentPoly scaled(const BigInt& c, int da, int db) const;
  // Only defined for unit monomials.
  LaurentPoly unit_inverse() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& r);
  LaurentPoly& operator-=(const LaurentPoly& r);
  LaurentPoly& operator*=(const LaurentPoly& r);

  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& r) { return p += r; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& r) { return p -= r; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r);

  bool operator==(const LaurentPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

  // Canonical text: "c*q^a*s^b" terms joined by " + ", sorted by (a, b); "0" if empty.
  std::string to_string() const;

 private:
  void require_same(const LaurentPoly& r) const;
  void add_scaled(const LaurentPoly& r, int sign);

  VarPair vars_;
  std::vector<Term> terms_;
};

LaurentPoly lp_add(const LaurentPoly& p, const LaurentPoly& r);
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& r);

// (m_x(p), M_x(p)). Throws ZeroPolynomialError for p = 0.
std::pair<int, int> degree_span(const LaurentPoly& p, Variable which);

// c q^a s^b -> c (-1)^(a/2) th^(-a/2) qh^(b/2), i.e. s^2 = qh and q^2 = -1/th.
// Throws ParityError if some exponent is odd.
LaurentPoly specialize_entry(const LaurentPoly& p);

}  // namespace braidspan

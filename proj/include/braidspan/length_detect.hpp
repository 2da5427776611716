#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "braidspan/braid_word.hpp"
#include "braidspan/dual_garside.hpp"
#include "braidspan/quantum_rep.hpp"

namespace braidspan {

class LengthFormulaError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct Span {
  int min = 0;
  int max = 0;

  bool operator==(const Span&) const = default;
};

// (m_x(M), M_x(M)) over the nonzero entries of M.
Span matrix_degree_span(const RepMatrix& mat, Variable which);

// (inf, sup, len) read off L_{n,m}(w): sup = -m_qh(L)/m, inf = -M_qh(L)/m.
// Requires m >= 2; throws LengthFormulaError if a division is not exact.
GarsideBounds garside_from_lawrence(int n, int m, const BraidWord& w);

/// Every identity relating degree spans to (inf, sup), evaluated on one braid.
///
///   C1  m_qh(L)  = -m sup          C2a M_qh(L) = -m inf     C2b M_qh(L) = m inf
///   C3  m_s(V)   = -2m sup         C4  m_s(W)  = -2m sup
///   C5  M_s(W)   = -2m inf         C6  M_s(V)  = -2m inf
///
/// C2b and C6 are recorded but are not part of the gate.
struct ClaimsReport {
  BraidWord word;
  int n = 2;
  int m = 1;
  GarsideBounds garside;
  Span v_s;
  Span w_s;
  Span l_qh;

  bool c1 = false;
  bool c2a = false;
  bool c2b = false;
  bool c3 = false;
  bool c4 = false;
  bool c5 = false;
  bool c6 = false;
  // m_s(V) = -2m max(sup, 0) and M_s(V) = -2m min(inf, 0). rho^V always has
  // an entry of s-degree 0, so these are the forms C3 and C6 can take.
  bool c3_clamped = false;
  bool c6_clamped = false;
  // m_s(V)/2 <= m_qh(L) <= M_qh(L) <= M_s(V)/2
  bool degree_chain = false;
  // m_s(V) <= m_s(W) and M_s(W) <= M_s(V)
  bool submatrix_inclusion = false;
  // m divides the qh span; 2m divides m_s(V), m_s(W), M_s(W)
  bool divisible = false;
  // 2 m_qh(L) = m_s(W) and 2 M_qh(L) = M_s(W)
  bool degree_transfer = false;
  int cancellations = 0;
  // m * len = max(0, -m_qh(L)) - min(0, -M_qh(L))
  bool length_formula = false;

  bool gate() const { return c1 && c2a && c3 && c4 && c5; }
  bool operator==(const ClaimsReport&) const = default;
};

ClaimsReport claims_matrix(int n, int m, const BraidWord& w);

// claims_matrix over many words on `threads` workers (0 = every core); results
// are in input order.
std::vector<ClaimsReport> claims_suite(int n, int m, const std::vector<BraidWord>& words, int threads = 0);

}  // namespace braidspan

#pragma once

// Helpers shared by the unit tests and the acceptance runner. Everything here
// is written against raw tensors and plain integer vectors so the checks do
// not lean on the code paths they test.

#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

#include "braidspan/braid_word.hpp"
#include "braidspan/laurent.hpp"
#include "braidspan/poly_matrix.hpp"
#include "braidspan/quantum_rep.hpp"

namespace testsupport {

using braidspan::BraidWord;
using braidspan::LaurentPoly;
using braidspan::PolyMatrix;
using braidspan::WeightIndex;

inline LaurentPoly mono(long c, int qe, int se) { return LaurentPoly::monomial(c, qe, se); }
inline LaurentPoly hmono(long c, int qhe, int the) {
  return LaurentPoly::monomial(c, qhe, the, braidspan::VarPair::qhth);
}

inline PolyMatrix matrix_of(std::vector<std::vector<LaurentPoly>> rows) {
  PolyMatrix out(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()), rows[0][0].vars());
  for (int r = 0; r < out.rows(); ++r)
    for (int c = 0; c < out.cols(); ++c) out(r, c) = rows[r][c];
  return out;
}

inline BraidWord random_word(std::mt19937_64& rng, int n, int maxlen) {
  std::uniform_int_distribution<int> len(0, maxlen);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> w(len(rng));
  for (int& x : w) x = gen(rng) * (neg(rng) ? -1 : 1);
  return BraidWord(n, std::move(w));
}

// Every word of exactly `len` letters over {+-1, ..., +-(n-1)}.
inline std::vector<BraidWord> all_words(int n, int len) {
  std::vector<BraidWord> out{BraidWord(n, {})};
  for (int k = 0; k < len; ++k) {
    std::vector<BraidWord> next;
    for (const auto& w : out)
      for (int g = 1; g < n; ++g)
        for (int sign : {1, -1}) {
          auto letters = w.letters;
          letters.push_back(sign * g);
          next.emplace_back(n, std::move(letters));
        }
    out = std::move(next);
  }
  return out;
}

using RawVector = std::map<WeightIndex, LaurentPoly>;

// Delta-iterated E on v_{e_1} x ... x v_{e_l}, by the recursion
// E(w x rest) = Ew x K(rest) + w x E(rest), with Kv_j = s q^(-2j) v_j, Ev_j = v_{j-1}.
inline RawVector coproduct_e(const WeightIndex& e) {
  RawVector out;
  if (e.empty()) return out;
  const WeightIndex rest(e.begin() + 1, e.end());
  if (e[0] > 0) {
    int weight = 0;
    for (int x : rest) weight += x;
    WeightIndex f = e;
    --f[0];
    out[f] += mono(1, -2 * weight, static_cast<int>(rest.size()));
  }
  for (auto& [g, c] : coproduct_e(rest)) {
    WeightIndex f{e[0]};
    f.insert(f.end(), g.begin(), g.end());
    out[f] += c;
  }
  return out;
}

inline RawVector apply_e(const RawVector& v) {
  RawVector out;
  for (const auto& [e, c] : v)
    for (const auto& [f, d] : coproduct_e(e)) out[f] += c * d;
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

inline LaurentPoly coproduct_k(const WeightIndex& e) {
  LaurentPoly out = LaurentPoly::constant(1);
  for (int x : e) out *= mono(1, -2 * x, 1);
  return out;
}

// Column c of a matrix over the rescaled basis v_e = s^(sum t e_t) raw(e), as a raw tensor.
inline RawVector column_as_raw(const PolyMatrix& mat, const std::vector<WeightIndex>& basis, int c) {
  RawVector out;
  for (int r = 0; r < mat.rows(); ++r) {
    if (mat(r, c).is_zero()) continue;
    int resc = 0;
    for (std::size_t t = 0; t < basis[r].size(); ++t) resc += static_cast<int>(t + 1) * basis[r][t];
    out[basis[r]] = mat(r, c).scaled(1, 0, resc);
  }
  return out;
}

// Product sigma_i ... sigma_{j-1}, or its inverse.
inline BraidWord ascending(int n, int i, int j, int sign) {
  std::vector<int> w;
  for (int k = i; k < j; ++k) w.push_back(k);
  BraidWord b(n, std::move(w));
  return sign > 0 ? b : b.inverse();
}

// Column-wise support and s-degree bounds for rho^V of (sigma_i ... sigma_{j-1})^sign.
// For sign +1, column e may only reach e' = (e_1..e_{i-1}, e_j + sum k, e_i - k_i, ..,
// e_{j-1} - k_{j-1}, e_{j+1}..) with 0 <= k_t <= e_t, and its entry x satisfies
// -2 sum_{t=i}^{j-1} e_t <= m_s(x), M_s(x) <= -2 sum (e_t - k_t).
// For sign -1 the reverse move e' = (.., e_{i+1} - k_{i+1}, .., e_j - k_j, e_i + sum k, ..)
// with 2 sum (e_t - k_t) <= m_s(x), M_s(x) <= 2 sum_{t=i+1}^{j} e_t.
// Returns the number of violating entries.
inline int column_bound_violations(const PolyMatrix& mat, const std::vector<WeightIndex>& basis, int i, int j,
                                   int sign) {
  int bad = 0;
  for (int c = 0; c < mat.cols(); ++c) {
    const WeightIndex& e = basis[c];
    for (int r = 0; r < mat.rows(); ++r) {
      const LaurentPoly& x = mat(r, c);
      if (x.is_zero()) continue;
      const WeightIndex& f = basis[r];
      // 0-based positions; slots i..j are i-1..j-1
      bool ok = true;
      for (int t = 0; t < static_cast<int>(e.size()); ++t)
        if ((t < i - 1 || t > j - 1) && e[t] != f[t]) ok = false;
      int moved = 0;   // sum k
      int kept = 0;    // sum (e_t - k_t)
      int total = 0;   // sum of e_t over the moving range
      if (sign > 0) {
        for (int t = i - 1; t < j - 1; ++t) {
          const int k = e[t] - f[t + 1];
          if (k < 0 || k > e[t]) ok = false;
          moved += k;
          kept += e[t] - k;
          total += e[t];
        }
        if (f[i - 1] != e[j - 1] + moved) ok = false;
      } else {
        for (int t = i; t < j; ++t) {
          const int k = e[t] - f[t - 1];
          if (k < 0 || k > e[t]) ok = false;
          moved += k;
          kept += e[t] - k;
          total += e[t];
        }
        if (f[j - 1] != e[i - 1] + moved) ok = false;
      }
      if (!ok) {
        ++bad;
        continue;
      }
      const auto [lo, hi] = braidspan::degree_span(x, braidspan::Variable::s);
      if (sign > 0 && (lo < -2 * total || hi > -2 * kept)) ++bad;
      if (sign < 0 && (lo < 2 * kept || hi > 2 * total)) ++bad;
    }
  }
  return bad;
}

}  // namespace testsupport

#include "braidspan/qarith.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace braidspan {

LaurentPoly q_integer(int n) {
  if (n < 0) throw std::invalid_argument("q_integer: negative argument");
  std::vector<Term> terms;
  for (int e = n - 1; e >= 1 - n; e -= 2) terms.push_back(Term{e, 0, 1});
  return LaurentPoly::from_terms(std::move(terms));
}

LaurentPoly q_binomial(int n, int j) {
  if (n < 0 || j < 0 || j > n)
    throw std::invalid_argument("q_binomial: need 0 <= j <= n, got n=" + std::to_string(n) +
                                " j=" + std::to_string(j));
  static std::mutex mu;
  static std::map<std::pair<int, int>, LaurentPoly> memo;
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find({n, j}); it != memo.end()) return it->second;
  }
  // [n; j] = q^j [n-1; j] + q^(j-n) [n-1; j-1]
  LaurentPoly result;
  if (j == 0 || j == n) {
    result = LaurentPoly::constant(1);
  } else {
    result = q_binomial(n - 1, j).scaled(1, j, 0) + q_binomial(n - 1, j - 1).scaled(1, j - n, 0);
  }
  std::lock_guard lock(mu);
  memo.emplace(std::pair{n, j}, result);
  return result;
}

}  // namespace braidspan

#include <map>
#include <memory>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "braidspan/dual_garside.hpp"
#include "braidspan/quantum_rep.hpp"

// Brute-force sup/inf. Nothing here touches normal_form or the simple-element
// lattice: dual positivity is decided by listing every product of band
// generators and comparing rho^V_{n,2} images, which is faithful.

namespace braidspan {

namespace {

constexpr int kOracleM = 2;

class PositiveLevels {
 public:
  explicit PositiveLevels(int n) {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        generators_.push_back(rho_v_word(n, kOracleM, BraidWord(n, band_to_artin({i, j}, 1))).entries);
    const int dim = static_cast<int>(weight_space_dim(n + 1, kOracleM));
    frontier_.push_back({PolyMatrix::identity(dim)});
    keys_.push_back({frontier_[0][0].key()});
  }

  bool contains(int length, const PolyMatrix& mat) {
    std::lock_guard lock(mu_);
    while (static_cast<int>(keys_.size()) <= length) grow();
    return keys_[length].count(mat.key()) > 0;
  }

 private:
  void grow() {
    std::vector<PolyMatrix> next;
    std::unordered_set<std::string> seen;
    for (const PolyMatrix& x : frontier_.back())
      for (const PolyMatrix& g : generators_) {
        PolyMatrix y = x * g;
        if (seen.insert(y.key()).second) next.push_back(std::move(y));
      }
    frontier_.push_back(std::move(next));
    keys_.push_back(std::move(seen));
  }

  std::mutex mu_;
  std::vector<PolyMatrix> generators_;
  std::vector<std::vector<PolyMatrix>> frontier_;
  std::vector<std::unordered_set<std::string>> keys_;
};

PositiveLevels& levels_for(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<PositiveLevels>> by_n;
  std::lock_guard lock(mu);
  auto& slot = by_n[n];
  if (!slot) slot = std::make_unique<PositiveLevels>(n);
  return *slot;
}

BraidWord delta_power_word(int n, int power) {
  BraidWord out(n, {});
  const BraidWord d = power >= 0 ? delta_word(n) : delta_word(n).inverse();
  for (int k = 0; k < std::abs(power); ++k) out = out.concat(d);
  return out;
}

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
int ceil_div(int a, int b) { return -floor_div(-a, b); }

}  // namespace

std::pair<int, int> sup_inf_oracle(const BraidWord& w, int limit) {
  const int n = w.strands;
  const int len = static_cast<int>(w.length());
  if (n > 4) throw std::invalid_argument("sup_inf_oracle: n must be at most 4");
  if (limit > 6 || len > limit)
    throw std::invalid_argument("sup_inf_oracle: need |w| <= limit <= 6");
  PositiveLevels& positive = levels_for(n);
  const int e = exponent_sum(w);

  // sup: least m with delta^m w^-1 dual-positive
  std::optional<int> sup;
  for (int m = ceil_div(e, n - 1); m <= len && !sup; ++m) {
    const BraidWord candidate = delta_power_word(n, m).concat(w.inverse());
    if (positive.contains(m * (n - 1) - e, rho_v_word(n, kOracleM, candidate).entries)) sup = m;
  }
  // inf: greatest M with w delta^-M dual-positive
  std::optional<int> inf;
  for (int m = floor_div(e, n - 1); m >= -len && !inf; --m) {
    const BraidWord candidate = w.concat(delta_power_word(n, -m));
    if (positive.contains(e - m * (n - 1), rho_v_word(n, kOracleM, candidate).entries)) inf = m;
  }
  if (!sup || !inf)
    throw std::logic_error("sup_inf_oracle: search window exhausted for word '" + w.to_string() + "'");
  return {*inf, *sup};
}

}  // namespace braidspan

#include "braidspan/quantum_rep.hpp"

#include <cstdlib>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <tuple>

#include "braidspan/qarith.hpp"

namespace braidspan {

namespace {

void compositions(int length, int m, std::vector<WeightIndex>& out) {
  if (length == 1) {
    out.push_back({m});
    return;
  }
  for (int last = 0; last <= m; ++last) {
    std::vector<WeightIndex> head;
    compositions(length - 1, m - last, head);
    for (auto& h : head) {
      h.push_back(last);
      out.push_back(std::move(h));
    }
  }
}

LaurentPoly mono(const BigInt& c, int qe, int se) { return LaurentPoly::monomial(c, qe, se); }

}  // namespace

std::vector<WeightIndex> enumerate_weight_indices(int length, int m) {
  if (length < 1 || m < 0) throw std::invalid_argument("enumerate_weight_indices: need length >= 1, m >= 0");
  std::vector<WeightIndex> out;
  compositions(length, m, out);
  return out;
}

long weight_space_dim(int n, int m) {
  // C(m + n - 2, m)
  long r = 1;
  for (int k = 1; k <= m; ++k) r = r * (n - 2 + k) / k;
  return r;
}

WeightBasis::WeightBasis(int length, int m) : items_(enumerate_weight_indices(length, m)) {
  for (int k = 0; k < size(); ++k) rank_.emplace(items_[k], k);
}

int WeightBasis::rank(const WeightIndex& e) const {
  auto it = rank_.find(e);
  return it == rank_.end() ? -1 : it->second;
}

const char* flavor_name(Flavor f) {
  switch (f) {
    case Flavor::V: return "V";
    case Flavor::W: return "W";
    case Flavor::L: return "L";
  }
  return "?";
}

std::map<std::pair<int, int>, LaurentPoly> r_matrix_image(int i, int j) {
  if (i < 0 || j < 0) throw std::invalid_argument("r_matrix_image: negative index");
  std::map<std::pair<int, int>, LaurentPoly> out;
  LaurentPoly product = LaurentPoly::constant(1);  // prod_{k<n} (s q^(-k-j) - s^-1 q^(k+j))
  for (int n = 0; n <= i; ++n) {
    if (n > 0) {
      const int k = n - 1;
      product *= mono(1, -k - j, 1) - mono(1, k + j, -1);
    }
    // F_{i,j,n}(q) = q^(2(i-n)(j+n)) q^(n(n-1)/2) [n+j; j]_q
    LaurentPoly coeff = q_binomial(n + j, j).scaled(1, 2 * (i - n) * (j + n) + n * (n - 1) / 2,
                                                    -(i + j)) *
                        product;
    if (!coeff.is_zero()) out.emplace(std::pair{j + n, i - n}, std::move(coeff));
  }
  return out;
}

namespace {

PolyMatrix build_positive_generator(int n, int m, int i) {
  const WeightBasis basis(n, m);
  PolyMatrix mat(basis.size(), basis.size());
  for (int col = 0; col < basis.size(); ++col) {
    const WeightIndex& e = basis[col];
    const int a = e[i - 1];
    const int b = e[i];
    for (auto& [target, coeff] : r_matrix_image(a, b)) {
      WeightIndex f = e;
      f[i - 1] = target.first;
      f[i] = target.second;
      // raw coefficient times s^(sum t e_t - sum t f_t)
      const int shift = basis_rescaling(e) - basis_rescaling(f);
      mat(basis.rank(f), col) += coeff.scaled(1, 0, shift);
    }
  }
  return mat;
}

PolyMatrix build_negative_generator(int n, int m, int i) {
  const WeightBasis basis(n, m);
  const PolyMatrix plus = build_positive_generator(n, m, i);
  PolyMatrix mat(basis.size(), basis.size());
  // sigma_i preserves the coordinates outside slots (i, i+1) and e_i + e_{i+1}.
  std::map<WeightIndex, std::vector<int>> blocks;
  for (int col = 0; col < basis.size(); ++col) {
    WeightIndex key = basis[col];
    key[i - 1] += key[i];
    key[i] = 0;
    blocks[key].push_back(col);
  }
  for (const auto& [key, members] : blocks) {
    const int size = static_cast<int>(members.size());
    PolyMatrix block(size, size);
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) block(r, c) = plus(members[r], members[c]);
    const PolyMatrix inv = unit_inverse(block);
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) mat(members[r], members[c]) = inv(r, c);
  }
  return mat;
}

struct GeneratorCache {
  std::mutex mu;
  std::map<std::tuple<int, int, int, int>, std::shared_ptr<const PolyMatrix>> items;
};

std::shared_ptr<const PolyMatrix> cached_generator(int n, int m, int i, int sign) {
  static GeneratorCache cache;
  const auto key = std::tuple{n, m, i, sign};
  {
    std::lock_guard lock(cache.mu);
    if (auto it = cache.items.find(key); it != cache.items.end()) return it->second;
  }
  auto mat = std::make_shared<const PolyMatrix>(
      sign > 0 ? build_positive_generator(n, m, i) : build_negative_generator(n, m, i));
  std::lock_guard lock(cache.mu);
  return cache.items.emplace(key, std::move(mat)).first->second;
}

void check_nm(int n, int m) {
  if (n < 2) throw std::invalid_argument("need n >= 2, got " + std::to_string(n));
  if (m < 0) throw std::invalid_argument("need m >= 0, got " + std::to_string(m));
}

}  // namespace

int basis_rescaling(const WeightIndex& e) {
  int s = 0;
  for (std::size_t t = 0; t < e.size(); ++t) s += static_cast<int>(t + 1) * e[t];
  return s;
}

RepMatrix rho_v_generator(int n, int m, int i, int sign) {
  check_nm(n, m);
  if (i < 1 || i > n - 1) throw std::invalid_argument("generator index out of range");
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  return RepMatrix{Flavor::V, n, m, WeightBasis(n, m).items(), *cached_generator(n, m, i, sign)};
}

RepMatrix rho_v_word(int n, int m, const BraidWord& w) {
  check_nm(n, m);
  if (w.strands != n) throw std::invalid_argument("rho_v_word: word is not in B_" + std::to_string(n));
  WeightBasis basis(n, m);
  PolyMatrix acc = PolyMatrix::identity(basis.size());
  for (int letter : w.letters) acc = acc * *cached_generator(n, m, std::abs(letter), letter > 0 ? 1 : -1);
  return RepMatrix{Flavor::V, n, m, basis.items(), std::move(acc)};
}

TensorVector e_power_action(const WeightIndex& indices, int k) {
  if (k < 0) throw std::invalid_argument("e_power_action: negative power");
  TensorVector cur;
  cur.emplace(indices, LaurentPoly::constant(1));
  const int l = static_cast<int>(indices.size());
  for (int step = 0; step < k && !cur.empty(); ++step) {
    TensorVector next;
    for (const auto& [idx, coeff] : cur) {
      int weight_after = 0;  // sum of indices strictly after slot t
      for (int t = l - 1; t >= 0; --t) {
        if (idx[t] > 0) {
          WeightIndex f = idx;
          --f[t];
          // K on every later slot: s q^(-2 e_u) each
          LaurentPoly term = coeff.scaled(1, -2 * weight_after, l - 1 - t);
          auto [it, fresh] = next.try_emplace(std::move(f), term);
          if (!fresh) it->second += term;
        }
        weight_after += idx[t];
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly k_action(const WeightIndex& indices) {
  int total = 0;
  for (int e : indices) total += e;
  return LaurentPoly::monomial(1, -2 * total, static_cast<int>(indices.size()));
}

namespace {

std::shared_ptr<const PolyMatrix> cached_phi(int n, int m) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const PolyMatrix>> items;
  {
    std::lock_guard lock(mu);
    if (auto it = items.find({n, m}); it != items.end()) return it->second;
  }
  auto mat = std::make_shared<const PolyMatrix>(phi_matrix(n, m));
  std::lock_guard lock(mu);
  return items.emplace(std::pair{n, m}, std::move(mat)).first->second;
}

}  // namespace

PolyMatrix phi_matrix(int n, int m) {
  check_nm(n, m);
  const WeightBasis rows(n, m);
  const WeightBasis cols(n - 1, m);
  PolyMatrix mat(rows.size(), cols.size());
  for (int c = 0; c < cols.size(); ++c) {
    const WeightIndex& e = cols[c];
    WeightIndex lifted{0};
    lifted.insert(lifted.end(), e.begin(), e.end());
    const int prefactor = basis_rescaling(lifted);  // v_{i(e)} = s^prefactor v_0 x u
    for (int k = 0; k <= m; ++k) {
      // (-1)^k q^(2km - k(k+1)) s^(-k(n-1)) v_k x E^k u
      const BigInt sign = (k % 2 == 0) ? 1 : -1;
      for (const auto& [f, coeff] : e_power_action(e, k)) {
        WeightIndex g{k};
        g.insert(g.end(), f.begin(), f.end());
        mat(rows.rank(g), c) +=
            coeff.scaled(sign, 2 * k * m - k * (k + 1), prefactor - k * (n - 1) - basis_rescaling(g));
      }
    }
  }
  return mat;
}

RepMatrix rho_w_word(int n, int m, const BraidWord& w) {
  return null_vector_matrix(rho_v_word(n, m, w));
}

RepMatrix null_vector_matrix(const RepMatrix& v) {
  if (v.flavor != Flavor::V) throw std::invalid_argument("null_vector_matrix expects flavor V");
  const int n = v.n;
  const int m = v.m;
  const WeightBasis full(n, m);
  const WeightBasis reduced(n - 1, m);
  std::vector<WeightIndex> basis;
  PolyMatrix projected(reduced.size(), full.size());
  for (int r = 0; r < reduced.size(); ++r) {
    WeightIndex lifted{0};
    lifted.insert(lifted.end(), reduced[r].begin(), reduced[r].end());
    const int src = full.rank(lifted);
    for (int c = 0; c < full.size(); ++c) projected(r, c) = v.entries(src, c);
    basis.push_back(std::move(lifted));
  }
  return RepMatrix{Flavor::W, n, m, std::move(basis), projected * *cached_phi(n, m)};
}

}  // namespace braidspan

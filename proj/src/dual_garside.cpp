#include "braidspan/dual_garside.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace braidspan {

namespace {

std::vector<int> block_labels(int n, const std::vector<Block>& blocks) {
  std::vector<int> label(n + 1, -1);
  for (std::size_t b = 0; b < blocks.size(); ++b)
    for (int v : blocks[b]) label[v] = static_cast<int>(b);
  return label;
}

Permutation permutation_of_blocks(int n, const std::vector<Block>& blocks) {
  std::vector<int> img(n);
  for (const Block& blk : blocks) {
    const std::size_t k = blk.size();
    for (std::size_t t = 0; t < k; ++t) img[blk[t] - 1] = blk[(t + k - 1) % k] - 1;
  }
  return Permutation(std::move(img));
}

std::string describe(const std::vector<Block>& blocks) {
  std::string s = "{";
  for (const Block& b : blocks) {
    s += "{";
    for (std::size_t k = 0; k < b.size(); ++k) s += (k ? "," : "") + std::to_string(b[k]);
    s += "}";
  }
  return s + "}";
}

}  // namespace

bool is_noncrossing(int n, const std::vector<Block>& blocks) {
  const auto label = block_labels(n, blocks);
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b) {
      if (label[a] == label[b]) continue;
      for (int c = b + 1; c <= n; ++c) {
        if (label[c] != label[a]) continue;
        for (int d = c + 1; d <= n; ++d)
          if (label[d] == label[b]) return false;
      }
    }
  return true;
}

SimpleElement SimpleElement::from_blocks(int n, std::vector<Block> blocks) {
  if (n < 1) throw NotSimpleError("simple elements need n >= 1");
  std::vector<int> count(n + 1, 0);
  for (Block& b : blocks) {
    if (b.empty()) throw NotSimpleError("empty block in " + describe(blocks));
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 1 || v > n) throw NotSimpleError("point out of range in " + describe(blocks));
      ++count[v];
    }
  }
  for (int v = 1; v <= n; ++v)
    if (count[v] != 1) throw NotSimpleError("blocks " + describe(blocks) + " do not partition 1.." + std::to_string(n));
  std::sort(blocks.begin(), blocks.end());
  if (!is_noncrossing(n, blocks)) throw NotSimpleError("crossing partition " + describe(blocks));
  SimpleElement x;
  x.n_ = n;
  x.perm_ = permutation_of_blocks(n, blocks);
  x.blocks_ = std::move(blocks);
  return x;
}

SimpleElement SimpleElement::from_permutation(const Permutation& perm) {
  const int n = perm.size();
  std::vector<Block> blocks;
  for (auto cyc : perm.cycles()) {
    std::sort(cyc.begin(), cyc.end());
    blocks.push_back(std::move(cyc));
  }
  SimpleElement x = from_blocks(n, std::move(blocks));
  if (!(x.perm_ == perm))
    throw NotSimpleError("permutation cycles are not descending on their blocks");
  return x;
}

SimpleElement SimpleElement::identity(int n) {
  std::vector<Block> blocks;
  for (int v = 1; v <= n; ++v) blocks.push_back({v});
  return from_blocks(n, std::move(blocks));
}

SimpleElement SimpleElement::delta(int n) {
  Block all;
  for (int v = 1; v <= n; ++v) all.push_back(v);
  return from_blocks(n, {all});
}

SimpleElement SimpleElement::band(int n, int i, int j) {
  std::vector<Block> blocks{{i, j}};
  for (int v = 1; v <= n; ++v)
    if (v != i && v != j) blocks.push_back({v});
  return from_blocks(n, std::move(blocks));
}

BraidWord simple_to_band_word(const SimpleElement& x) {
  std::vector<int> letters;
  for (const Block& b : x.blocks())
    for (std::size_t t = 0; t + 1 < b.size(); ++t) {
      auto w = band_to_artin({b[t], b[t + 1]}, 1);
      letters.insert(letters.end(), w.begin(), w.end());
    }
  return BraidWord(std::max(2, x.strands()), std::move(letters));
}

SimpleElement meet(const SimpleElement& x, const SimpleElement& y) {
  if (x.strands() != y.strands()) throw std::invalid_argument("meet: strand mismatch");
  std::vector<Block> blocks;
  for (const Block& bx : x.blocks())
    for (const Block& by : y.blocks()) {
      Block common;
      std::set_intersection(bx.begin(), bx.end(), by.begin(), by.end(), std::back_inserter(common));
      if (!common.empty()) blocks.push_back(std::move(common));
    }
  return SimpleElement::from_blocks(x.strands(), std::move(blocks));
}

bool refines(const SimpleElement& x, const SimpleElement& y) { return meet(x, y) == x; }

SimpleElement right_complement(const SimpleElement& x) {
  const int n = x.strands();
  return SimpleElement::from_permutation(
      x.permutation().inverse().then(SimpleElement::delta(n).permutation()));
}

SimpleElement tau(const SimpleElement& x, int power) {
  const int n = x.strands();
  const int shift = ((power % n) + n) % n;
  if (shift == 0) return x;
  std::vector<Block> blocks;
  for (const Block& b : x.blocks()) {
    Block nb;
    for (int v : b) nb.push_back(((v - 1 - shift) % n + n) % n + 1);
    blocks.push_back(std::move(nb));
  }
  return SimpleElement::from_blocks(n, std::move(blocks));
}

SimpleElement simple_product(const SimpleElement& x, const SimpleElement& y) {
  return SimpleElement::from_permutation(x.permutation().then(y.permutation()));
}

SimpleElement simple_left_quotient(const SimpleElement& x, const SimpleElement& y) {
  return SimpleElement::from_permutation(x.permutation().inverse().then(y.permutation()));
}

bool is_left_weighted(const SimpleElement& a, const SimpleElement& b) {
  return meet(right_complement(a), b).is_identity();
}

namespace {

// Slides prefixes leftward until every adjacent pair is left-weighted, moving
// delta factors into the delta power and dropping trivial factors.
void normalize(NormalForm& nf) {
  auto& f = nf.factors;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i].is_delta()) {
        // x_1 ... x_{i-1} delta = delta tau(x_1) ... tau(x_{i-1})
        for (std::size_t k = 0; k < i; ++k) f[k] = tau(f[k], 1);
        f.erase(f.begin() + static_cast<std::ptrdiff_t>(i));
        ++nf.delta_power;
        changed = true;
        break;
      }
    }
    if (changed) continue;
    const auto before = f.size();
    std::erase_if(f, [](const SimpleElement& x) { return x.is_identity(); });
    changed = f.size() != before;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
      const SimpleElement h = meet(right_complement(f[i]), f[i + 1]);
      if (h.is_identity()) continue;
      f[i] = simple_product(f[i], h);
      f[i + 1] = simple_left_quotient(h, f[i + 1]);
      changed = true;
    }
  }
}

}  // namespace

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands;
  NormalForm nf;
  nf.n = n;
  for (int letter : w.letters) {
    const int k = std::abs(letter);
    const SimpleElement a = SimpleElement::band(n, k, k + 1);
    if (letter > 0) {
      nf.factors.push_back(a);
    } else {
      // a^-1 = d(a) delta^-1, and x delta^-1 = delta^-1 tau^-1(x)
      nf.factors.push_back(right_complement(a));
      for (auto& x : nf.factors) x = tau(x, -1);
      --nf.delta_power;
    }
    normalize(nf);
  }
  return nf;
}

BraidWord normal_form_word(const NormalForm& nf) {
  std::vector<int> letters;
  const BraidWord d = delta_word(nf.n);
  for (int k = 0; k < std::abs(nf.delta_power); ++k) {
    const auto& part = nf.delta_power > 0 ? d.letters : d.inverse().letters;
    letters.insert(letters.end(), part.begin(), part.end());
  }
  for (const auto& x : nf.factors) {
    const auto part = simple_to_band_word(x).letters;
    letters.insert(letters.end(), part.begin(), part.end());
  }
  return BraidWord(nf.n, std::move(letters));
}

int garside_length(int inf, int sup) { return std::max(0, sup) - std::min(inf, 0); }

GarsideBounds sup_inf_len(const NormalForm& nf) {
  const int inf = nf.delta_power;
  const int sup = nf.delta_power + static_cast<int>(nf.factors.size());
  return {inf, sup, garside_length(inf, sup)};
}

std::vector<SimpleElement> enumerate_simples(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("enumerate_simples: need 1 <= n <= 8");
  std::vector<SimpleElement> out;
  // Restricted growth strings: rgs[0] = 0, rgs[k] <= 1 + max(rgs[0..k-1]).
  std::vector<int> rgs(n, 0);
  while (true) {
    int blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<Block> part(blocks);
    for (int v = 0; v < n; ++v) part[rgs[v]].push_back(v + 1);
    if (is_noncrossing(n, part)) out.push_back(SimpleElement::from_blocks(n, std::move(part)));
    int k = n - 1;
    for (; k > 0; --k) {
      const int cap = *std::max_element(rgs.begin(), rgs.begin() + k) + 1;
      if (rgs[k] < cap) break;
    }
    if (k == 0) break;
    ++rgs[k];
    std::fill(rgs.begin() + k + 1, rgs.end(), 0);
  }
  return out;
}

bool braids_equal(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands) throw std::invalid_argument("braids_equal: strand mismatch");
  return normal_form(u) == normal_form(v);
}

}  // namespace braidspan

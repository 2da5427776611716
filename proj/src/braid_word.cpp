#include "braidspan/braid_word.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

namespace braidspan {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= size() || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = k;
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i, int j) {
  Permutation p = identity(n);
  std::swap(p.image_[i - 1], p.image_[j - 1]);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw std::invalid_argument("permutation size mismatch");
  std::vector<int> img(image_.size());
  for (std::size_t k = 0; k < img.size(); ++k) img[k] = next.image_[image_[k]];
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(image_.size());
  for (std::size_t k = 0; k < img.size(); ++k) img[image_[k]] = static_cast<int>(k);
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (std::size_t k = 0; k < image_.size(); ++k)
    if (image_[k] != static_cast<int>(k)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(image_.size(), false);
  for (int start = 0; start < size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cyc;
    for (int k = start; !seen[k]; k = image_[k]) {
      seen[k] = true;
      cyc.push_back(k + 1);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

BraidWord::BraidWord(int n, std::vector<int> w) : strands(n), letters(std::move(w)) {
  if (n < 2) throw std::invalid_argument("braid words need at least 2 strands");
  for (int k : letters)
    if (k == 0 || std::abs(k) > n - 1)
      throw std::invalid_argument("letter " + std::to_string(k) + " out of range for B_" +
                                  std::to_string(n));
}

BraidWord BraidWord::inverse() const {
  BraidWord out = *this;
  std::reverse(out.letters.begin(), out.letters.end());
  for (int& k : out.letters) k = -k;
  return out;
}

BraidWord BraidWord::concat(const BraidWord& other) const {
  if (other.strands != strands) throw std::invalid_argument("concat: strand mismatch");
  BraidWord out = *this;
  out.letters.insert(out.letters.end(), other.letters.begin(), other.letters.end());
  return out;
}

std::string BraidWord::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < letters.size(); ++k) os << (k ? " " : "") << letters[k];
  return os.str();
}

std::vector<int> band_to_artin(BandGenerator g, int sign) {
  if (g.i < 1 || g.j <= g.i) throw std::invalid_argument("band generator needs 1 <= i < j");
  std::vector<int> w;
  for (int k = g.j - 1; k > g.i; --k) w.push_back(-k);
  w.push_back(sign > 0 ? g.i : -g.i);
  for (int k = g.i + 1; k < g.j; ++k) w.push_back(k);
  return w;
}

namespace {

int parse_int(std::string_view tok, std::string_view whole) {
  int v = 0;
  const char* first = tok.data();
  if (!tok.empty() && tok.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || first == tok.data() + tok.size())
    throw ParseError("malformed token '" + std::string(whole) + "'");
  return v;
}

}  // namespace

BraidWord parse_word(std::string_view text, int n) {
  if (n < 2) throw ParseError("need n >= 2");
  std::vector<int> letters;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() > 2 && (tok[0] == 'a' || tok[0] == 'A') && tok[1] == ':') {
      const auto comma = tok.find(',', 2);
      if (comma == std::string::npos) throw ParseError("malformed band token '" + tok + "'");
      const std::string_view body(tok);
      BandGenerator g{parse_int(body.substr(2, comma - 2), tok),
                      parse_int(body.substr(comma + 1), tok)};
      if (g.i < 1 || g.j <= g.i || g.j > n)
        throw ParseError("band generator '" + tok + "' out of range for B_" + std::to_string(n));
      auto w = band_to_artin(g, tok[0] == 'a' ? 1 : -1);
      letters.insert(letters.end(), w.begin(), w.end());
    } else {
      const int k = parse_int(tok, tok);
      if (k == 0 || std::abs(k) > n - 1)
        throw ParseError("letter " + tok + " out of range for B_" + std::to_string(n));
      letters.push_back(k);
    }
  }
  return BraidWord(n, std::move(letters));
}

BraidWord delta_word(int n) {
  std::vector<int> w;
  for (int k = 1; k < n; ++k) w.push_back(k);
  return BraidWord(n, std::move(w));
}

Permutation word_permutation(const BraidWord& w) {
  Permutation p = Permutation::identity(w.strands);
  for (int k : w.letters) {
    const int i = std::abs(k);
    p = p.then(Permutation::transposition(w.strands, i, i + 1));
  }
  return p;
}

int exponent_sum(const BraidWord& w) {
  int e = 0;
  for (int k : w.letters) e += k > 0 ? 1 : -1;
  return e;
}

}  // namespace braidspan

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace braidspan {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Permutation of {1..n}, stored 0-based as image[k] = pi(k).
///
/// Products follow the apply-left-first convention used for braid words:
/// then(x, y) is "x, then y", i.e. the function y o x.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);
  static Permutation transposition(int n, int i, int j);  // 1-based points

  int size() const { return static_cast<int>(image_.size()); }
  // 1-based application.
  int operator()(int point) const { return image_[point - 1] + 1; }
  const std::vector<int>& image() const { return image_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;
  // Cycles as 1-based point lists, each starting at its smallest point, ordered by that point.
  std::vector<std::vector<int>> cycles() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

/// Braid word over Artin generators: letter k > 0 is sigma_k, -k is its inverse.
struct BraidWord {
  int strands = 2;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(int n, std::vector<int> w);  // validates

  std::size_t length() const { return letters.size(); }
  BraidWord inverse() const;
  BraidWord concat(const BraidWord& other) const;
  std::string to_string() const;

  bool operator==(const BraidWord&) const = default;
};

struct BandGenerator {
  int i = 1;
  int j = 2;
};

// a_{i,j} = (s_{i+1}...s_{j-1})^{-1} s_i (s_{i+1}...s_{j-1}); sign -1 inverts the middle letter.
std::vector<int> band_to_artin(BandGenerator g, int sign);

// Whitespace-separated integers and tokens "a:i,j" (band generator) or "A:i,j" (its inverse).
BraidWord parse_word(std::string_view text, int n);

// The word sigma_1 sigma_2 ... sigma_{n-1}.
BraidWord delta_word(int n);

Permutation word_permutation(const BraidWord& w);
int exponent_sum(const BraidWord& w);

}  // namespace braidspan

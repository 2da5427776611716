#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "braidspan/braid_word.hpp"

namespace braidspan {

class NotSimpleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

using Block = std::vector<int>;

/// A dual-simple braid, i.e. an element of [1, delta] in the Birman-Ko-Lee
/// monoid, encoded as a non-crossing partition of {1..n}.
///
/// The block {i1 < ... < ik} stands for a_{i1,i2} a_{i2,i3} ... a_{i(k-1),ik}.
/// Its permutation sends each block element to the next smaller one, and the
/// smallest to the largest. The partition drives lattice operations and the
/// permutation drives products.
class SimpleElement {
 public:
  SimpleElement() = default;

  // Throws NotSimpleError if the blocks are not a non-crossing partition of {1..n}.
  static SimpleElement from_blocks(int n, std::vector<Block> blocks);
  // Throws NotSimpleError if perm is not the permutation of a simple.
  static SimpleElement from_permutation(const Permutation& perm);
  static SimpleElement identity(int n);
  static SimpleElement delta(int n);
  static SimpleElement band(int n, int i, int j);

  int strands() const { return n_; }
  // Sorted blocks, ordered by minimum; singletons included.
  const std::vector<Block>& blocks() const { return blocks_; }
  const Permutation& permutation() const { return perm_; }
  bool is_identity() const { return static_cast<int>(blocks_.size()) == n_; }
  bool is_delta() const { return blocks_.size() == 1; }
  // Number of band generators in any positive word for this simple.
  int band_length() const { return n_ - static_cast<int>(blocks_.size()); }

  bool operator==(const SimpleElement& o) const { return n_ == o.n_ && blocks_ == o.blocks_; }
  bool operator<(const SimpleElement& o) const { return blocks_ < o.blocks_; }

 private:
  int n_ = 0;
  std::vector<Block> blocks_;
  Permutation perm_;
};

bool is_noncrossing(int n, const std::vector<Block>& blocks);

BraidWord simple_to_band_word(const SimpleElement& x);

// Common refinement of the two partitions (lattice meet in [1, delta]).
SimpleElement meet(const SimpleElement& x, const SimpleElement& y);
// True when x refines y, i.e. x is a prefix of y.
bool refines(const SimpleElement& x, const SimpleElement& y);

// The simple d(x) with x d(x) = delta (Kreweras complement).
SimpleElement right_complement(const SimpleElement& x);

// delta^-power x delta^power; each application shifts blocks down by one mod n.
SimpleElement tau(const SimpleElement& x, int power);

// Product x y (x applied first); throws NotSimpleError if the result is not simple.
SimpleElement simple_product(const SimpleElement& x, const SimpleElement& y);
// x^-1 y; throws NotSimpleError if the result is not simple.
SimpleElement simple_left_quotient(const SimpleElement& x, const SimpleElement& y);

/// delta^p x_1 ... x_r with every x_i neither trivial nor delta and each
/// adjacent pair left-weighted.
struct NormalForm {
  int n = 2;
  int delta_power = 0;
  std::vector<SimpleElement> factors;

  bool operator==(const NormalForm&) const = default;
};

NormalForm normal_form(const BraidWord& w);
// delta^p followed by each factor's band word.
BraidWord normal_form_word(const NormalForm& nf);
bool is_left_weighted(const SimpleElement& a, const SimpleElement& b);

struct GarsideBounds {
  int inf = 0;
  int sup = 0;
  int len = 0;

  bool operator==(const GarsideBounds&) const = default;
};

// Canonical length from (inf, sup): max(0, sup) - min(inf, 0).
int garside_length(int inf, int sup);
GarsideBounds sup_inf_len(const NormalForm& nf);

// All Catalan(n) simples, ordered by restricted growth string. Requires n <= 8.
std::vector<SimpleElement> enumerate_simples(int n);

bool braids_equal(const BraidWord& u, const BraidWord& v);

// Brute-force (inf, sup) that never consults normal_form: dual positivity is
// decided by enumerating all products of band generators, compared through
// exact rho^V_{n,2} matrices. Requires n <= 4 and |w| <= limit <= 6.
std::pair<int, int> sup_inf_oracle(const BraidWord& w, int limit);

}  // namespace braidspan

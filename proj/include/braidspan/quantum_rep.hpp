#pragma once

#include <map>
#include <utility>
#include <vector>

#include "braidspan/braid_word.hpp"
#include "braidspan/laurent.hpp"
#include "braidspan/poly_matrix.hpp"

namespace braidspan {

// A composition (e_1, ..., e_l) of m; labels the tensor v_{e_1} x ... x v_{e_l}.
using WeightIndex = std::vector<int>;

// Compositions of m into `length` nonnegative parts in colexicographic order:
// compared on the last entry first, e.g. (2,0), (1,1), (0,2).
std::vector<WeightIndex> enumerate_weight_indices(int length, int m);

// d_{n,m} = C(m + n - 2, m).
long weight_space_dim(int n, int m);

/// Ordered basis with rank lookup.
class WeightBasis {
 public:
  WeightBasis(int length, int m);

  int size() const { return static_cast<int>(items_.size()); }
  const WeightIndex& operator[](int k) const { return items_[k]; }
  const std::vector<WeightIndex>& items() const { return items_; }
  // -1 if absent.
  int rank(const WeightIndex& e) const;

 private:
  std::vector<WeightIndex> items_;
  std::map<WeightIndex, int> rank_;
};

enum class Flavor { V, W, L };
const char* flavor_name(Flavor f);

/// Square representation matrix; column j holds the coordinates of the image
/// of basis vector j. V uses E_{n+1,m}; W and L use i(E_{n,m}) = {(0, e)}.
struct RepMatrix {
  Flavor flavor = Flavor::V;
  int n = 2;
  int m = 0;
  std::vector<WeightIndex> basis;
  PolyMatrix entries;

  bool operator==(const RepMatrix&) const = default;
};

// Coordinates of R(v_i x v_j) on v_{j+k} x v_{i-k}, keyed by (j+k, i-k).
std::map<std::pair<int, int>, LaurentPoly> r_matrix_image(int i, int j);

// Matrix of sigma_i^sign on V_{n,m} in the rescaled basis v_e = s^(sum t e_t) v_{e_1} x ... x v_{e_n}.
// Inverses come from exact block inversion over unit determinants.
RepMatrix rho_v_generator(int n, int m, int i, int sign);

// rho^V_{n,m}(w) as a homomorphism: the matrix of a word is the product of its
// letters' matrices in word order, rho(uv) = rho(u) rho(v).
RepMatrix rho_v_word(int n, int m, const BraidWord& w);

using TensorVector = std::map<WeightIndex, LaurentPoly>;

// E^k on the raw tensor v_{e_1} x ... x v_{e_l}, with E acting through the
// iterated coproduct: E (w_1 x ... x w_l) = sum_t w_1 x .. x E w_t x K w_{t+1} x .. x K w_l.
TensorVector e_power_action(const WeightIndex& indices, int k);

// Scalar by which K acts on the raw tensor: prod_t s q^(-2 e_t).
LaurentPoly k_action(const WeightIndex& indices);

// Exponent of s in v_e = s^(sum t e_t) (raw tensor).
int basis_rescaling(const WeightIndex& e);

// M_Phi: d_{n+1,m} x d_{n,m}; column e holds Phi(v_{i(e)}) in the v_e basis of V_{n,m}.
PolyMatrix phi_matrix(int n, int m);

// pi' rho^V_{n,m}(w) M_Phi.
RepMatrix rho_w_word(int n, int m, const BraidWord& w);
// Same, from an already computed V-flavored matrix.
RepMatrix null_vector_matrix(const RepMatrix& v);

}  // namespace braidspan

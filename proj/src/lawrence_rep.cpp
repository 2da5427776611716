#include "braidspan/lawrence_rep.hpp"

#include <string>

namespace braidspan {

RepMatrix specialize_matrix(const RepMatrix& w_matrix) {
  if (w_matrix.flavor != Flavor::W) throw std::invalid_argument("specialize_matrix expects flavor W");
  const PolyMatrix& src = w_matrix.entries;
  PolyMatrix out(src.rows(), src.cols(), VarPair::qhth);
  for (int r = 0; r < src.rows(); ++r)
    for (int c = 0; c < src.cols(); ++c) {
      if (src(r, c).is_zero()) continue;
      try {
        out(r, c) = specialize_entry(src(r, c));
      } catch (const ParityError& err) {
        throw ParityError("entry (" + std::to_string(r) + "," + std::to_string(c) + "): " + err.what());
      }
    }
  return RepMatrix{Flavor::L, w_matrix.n, w_matrix.m, w_matrix.basis, std::move(out)};
}

RepMatrix lawrence_matrix(int n, int m, const BraidWord& w) {
  return specialize_matrix(rho_w_word(n, m, w));
}

int specialization_cancellations(const RepMatrix& w_matrix, const RepMatrix& l_matrix) {
  int count = 0;
  for (int r = 0; r < w_matrix.entries.rows(); ++r)
    for (int c = 0; c < w_matrix.entries.cols(); ++c)
      if (w_matrix.entries(r, c).size() != l_matrix.entries(r, c).size()) ++count;
  return count;
}

}  // namespace braidspan

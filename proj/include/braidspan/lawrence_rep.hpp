#pragma once

#include "braidspan/braid_word.hpp"
#include "braidspan/quantum_rep.hpp"

namespace braidspan {

// L_{n,m}(w): rho^W_{n,m}(w) under s^2 = qh, -q^-2 = th. Basis i(E_{n,m}).
// Throws ParityError (naming the offending entry) if some exponent is odd.
RepMatrix lawrence_matrix(int n, int m, const BraidWord& w);

// Specializes an already computed W-flavored matrix.
RepMatrix specialize_matrix(const RepMatrix& w_matrix);

// Number of entries where the substitution merged (q,s)-monomials. The
// substitution is injective on even exponent pairs, so this is expected to be 0.
int specialization_cancellations(const RepMatrix& w_matrix, const RepMatrix& l_matrix);

}  // namespace braidspan

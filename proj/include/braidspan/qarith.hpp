#pragma once

#include "braidspan/laurent.hpp"

namespace braidspan {

// Balanced quantum integer [n]_q = q^(n-1) + q^(n-3) + ... + q^(1-n), over (q,s).
LaurentPoly q_integer(int n);

// Balanced Gaussian binomial [n; j]_q. Throws std::invalid_argument unless 0 <= j <= n.
LaurentPoly q_binomial(int n, int j);

}  // namespace braidspan

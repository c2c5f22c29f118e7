#ifndef SCHUB_QBINOM_HPP
#define SCHUB_QBINOM_HPP

#include "schub/multipoly.hpp"

namespace schub {

// Gaussian binomial coefficient [n choose k]_q as an exact univariate
// polynomial: prod_{i=0}^{k-1} (q^n - q^i) / prod_{i=0}^{k-1} (q^k - q^i),
// division checked exact. Value at q = 1 is binomial(n, k).
MultiPoly q_binomial(int n, int k);

}  // namespace schub

#endif

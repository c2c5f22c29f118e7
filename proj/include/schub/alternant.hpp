#ifndef SCHUB_ALTERNANT_HPP
#define SCHUB_ALTERNANT_HPP

#include "schub/multipoly.hpp"
#include "schub/partition.hpp"

namespace schub {

// Skew-symmetrization a_{lambda+delta} = sum_{sigma in S_k} sgn(sigma)
// x_{sigma(1)}^{lambda_1+k-1} ... x_{sigma(k)}^{lambda_k}. For the empty
// partition this is the Vandermonde determinant prod_{i<j} (x_i - x_j).
MultiPoly alternant(const Partition& shape, int k);

// Vandermonde product prod_{i<j} (x_i - x_j) in k variables.
MultiPoly vandermonde(int k);

}  // namespace schub

#endif

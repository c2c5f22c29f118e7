#ifndef SCHUB_SCHUR_HPP
#define SCHUB_SCHUR_HPP

#include <map>

#include "schub/multipoly.hpp"
#include "schub/partition.hpp"
#include "schub/tableau.hpp"

namespace schub {

// Integer expansion in the Schur basis; no zero coefficients stored.
using SchurExpansion = std::map<Partition, BigInt>;

// s_lambda as the alternant quotient a_{lambda+delta} / a_delta (exact division).
MultiPoly schur_bialternant(const Partition& shape, int k);

// s_lambda as the sum of x^T over semistandard tableaux with entries <= k.
MultiPoly schur_ssyt(const Partition& shape, int k);

enum class PieriKind { row, column };

// lambda (x) m: partitions obtained by adding m boxes, no two in the same
// column (row kind, multiplies h_m) or no two in the same row (column kind,
// multiplies e_m). Reverse-lexicographic order.
std::vector<Partition> pieri_partition_set(const Partition& shape, int m, PieriKind kind);

// Expands a symmetric polynomial in the Schur basis of partitions with at
// most nvars rows by peeling the lexicographically greatest monomial, whose
// exponent is the index of the Schur polynomial it leads. Checks that the
// remainder stays symmetric at every step; with require_nonnegative set, also
// checks every extracted coefficient is >= 0.
SchurExpansion schur_expand(const MultiPoly& f, bool require_nonnegative = false);

// Littlewood-Richardson coefficient c^{nu}_{lambda, mu}: the coefficient of
// s_nu in s_lambda * s_mu, computed in |lambda| + |mu| variables.
BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

}  // namespace schub

#endif

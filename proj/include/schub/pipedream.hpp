#ifndef SCHUB_PIPEDREAM_HPP
#define SCHUB_PIPEDREAM_HPP

#include <utility>
#include <vector>

#include "schub/multipoly.hpp"
#include "schub/permutation.hpp"

namespace schub {

// Pipe dream on the n x n grid: crosses at 1-based positions (row, col) with
// row + col <= n; everything on and below the antidiagonal is elbows.
struct PipeDream {
    int n;
    std::vector<std::pair<int, int>> crosses;  // kept sorted

    PipeDream(int grid, std::vector<std::pair<int, int>> cross_set);

    bool operator==(const PipeDream& o) const { return n == o.n && crosses == o.crosses; }
    bool operator<(const PipeDream& o) const { return crosses < o.crosses; }
};

// Follows each strand from the top edge to the left edge; the left-edge
// reading (top to bottom) is the permutation of the dream.
Permutation trace_permutation(const PipeDream& p);

// True iff every pair of strands crosses at most once.
bool is_reduced(const PipeDream& p);

// All reduced pipe dreams tracing to w, ordered lexicographically by the
// sorted cross set.
std::vector<PipeDream> enumerate_reduced(const Permutation& w);

// Fomin-Kirillov sum: one monomial per reduced dream, x_k^(crosses in row k).
MultiPoly fk_polynomial(const Permutation& w);

}  // namespace schub

#endif

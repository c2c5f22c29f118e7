#include "schub/pipedream.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace schub {

PipeDream::PipeDream(int grid, std::vector<std::pair<int, int>> cross_set)
    : n(grid), crosses(std::move(cross_set)) {
    if (n < 1) throw std::invalid_argument("PipeDream: grid size must be positive");
    std::sort(crosses.begin(), crosses.end());
    for (size_t i = 0; i < crosses.size(); ++i) {
        auto [r, c] = crosses[i];
        if (r < 1 || c < 1 || r + c > n)
            throw std::invalid_argument("PipeDream: cross outside the staircase region");
        if (i > 0 && crosses[i] == crosses[i - 1])
            throw std::invalid_argument("PipeDream: duplicate cross");
    }
}

namespace {

enum class Dir { north, east };  // side through which the strand enters a cell

struct TraceResult {
    Permutation perm;
    // For each cross cell: the strands passing north->south and east->west.
    std::map<std::pair<int, int>, std::pair<int, int>> cross_strands;
};

TraceResult trace_full(const PipeDream& p) {
    std::set<std::pair<int, int>> crosses(p.crosses.begin(), p.crosses.end());
    std::vector<int> left_labels(p.n + 1, 0);
    TraceResult result{Permutation::identity(p.n), {}};
    for (int start = 1; start <= p.n; ++start) {
        int row = 1, col = start;
        Dir entered = Dir::north;
        while (true) {
            bool cross = crosses.count({row, col}) > 0;
            if (cross) {
                auto& pair = result.cross_strands[{row, col}];
                (entered == Dir::north ? pair.first : pair.second) = start;
            }
            // Cross: straight through; elbow: north<->west, east<->south.
            if (entered == Dir::north) {
                if (cross) {
                    ++row;  // exits south
                    if (row > p.n) throw std::logic_error("PipeDream: strand fell off the grid");
                } else {
                    --col;  // exits west
                    if (col == 0) break;
                    entered = Dir::east;
                }
            } else {
                if (cross) {
                    --col;  // exits west
                    if (col == 0) break;
                } else {
                    ++row;  // exits south
                    if (row > p.n) throw std::logic_error("PipeDream: strand fell off the grid");
                    entered = Dir::north;
                }
            }
        }
        left_labels[row] = start;
    }
    result.perm = Permutation(std::vector<int>(left_labels.begin() + 1, left_labels.end()));
    return result;
}

}  // namespace

Permutation trace_permutation(const PipeDream& p) { return trace_full(p).perm; }

bool is_reduced(const PipeDream& p) {
    TraceResult t = trace_full(p);
    std::set<std::pair<int, int>> seen;
    for (const auto& [cell, strands] : t.cross_strands) {
        auto pair = std::minmax(strands.first, strands.second);
        if (!seen.insert(pair).second) return false;
    }
    return true;
}

namespace {

void enumerate_rec(const std::vector<std::pair<int, int>>& positions, size_t idx, int remaining,
                   std::vector<std::pair<int, int>>& chosen, const Permutation& w,
                   std::vector<PipeDream>& out) {
    if (remaining == 0) {
        PipeDream candidate(w.degree(), chosen);
        if (trace_permutation(candidate) == w) out.push_back(std::move(candidate));
        return;
    }
    if (positions.size() - idx < static_cast<size_t>(remaining)) return;
    chosen.push_back(positions[idx]);
    enumerate_rec(positions, idx + 1, remaining - 1, chosen, w, out);
    chosen.pop_back();
    enumerate_rec(positions, idx + 1, remaining, chosen, w, out);
}

}  // namespace

std::vector<PipeDream> enumerate_reduced(const Permutation& w) {
    int n = w.degree();
    std::vector<std::pair<int, int>> positions;
    for (int i = 1; i < n; ++i)
        for (int j = 1; i + j <= n; ++j) positions.emplace_back(i, j);
    std::vector<std::pair<int, int>> chosen;
    std::vector<PipeDream> out;
    // A dream with l(w) crosses tracing to w is automatically reduced.
    enumerate_rec(positions, 0, w.length(), chosen, w, out);
    std::sort(out.begin(), out.end());
    return out;
}

MultiPoly fk_polynomial(const Permutation& w) {
    int n = w.degree();
    MultiPoly out(std::max(n - 1, 0));
    for (const PipeDream& p : enumerate_reduced(w)) {
        MultiPoly::Exponents e(std::max(n - 1, 0), 0);
        for (const auto& [row, col] : p.crosses) ++e[row - 1];
        out.add_term(e, Rat(1));
    }
    return out;
}

}  // namespace schub

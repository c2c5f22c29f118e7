#include "schub/tableau.hpp"

#include <numeric>
#include <stdexcept>

namespace schub {

bool Tableau::is_semistandard() const {
    if (static_cast<int>(entries.size()) != shape.rows()) return false;
    for (int i = 0; i < shape.rows(); ++i) {
        if (static_cast<int>(entries[i].size()) != shape.part(i + 1)) return false;
        for (size_t j = 0; j < entries[i].size(); ++j) {
            if (entries[i][j] < 1) return false;
            if (j > 0 && entries[i][j] < entries[i][j - 1]) return false;
            if (i > 0 && j < entries[i - 1].size() && entries[i][j] <= entries[i - 1][j]) return false;
        }
    }
    return true;
}

bool Tableau::is_standard() const {
    if (!is_semistandard()) return false;
    int n = shape.size();
    std::vector<bool> seen(n + 1, false);
    for (const auto& row : entries) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j > 0 && row[j] <= row[j - 1]) return false;
            if (row[j] > n || seen[row[j]]) return false;
            seen[row[j]] = true;
        }
    }
    return true;
}

std::vector<int> Tableau::reading_word() const {
    std::vector<int> word;
    for (const auto& row : entries) word.insert(word.end(), row.begin(), row.end());
    return word;
}

std::vector<int> Tableau::content_vector(int k) const {
    std::vector<int> content(k, 0);
    for (const auto& row : entries) {
        for (int v : row) {
            if (v < 1 || v > k) throw std::out_of_range("Tableau::content_vector: entry out of range");
            ++content[v - 1];
        }
    }
    return content;
}

namespace {

// Fill cells in row-major order; candidate values ascend, so the output is in
// lexicographic order of the reading word.
void ssyt_rec(const Partition& shape, int k, int i, int j, Tableau& t,
              std::vector<Tableau>& out) {
    if (i == shape.rows()) {
        out.push_back(t);
        return;
    }
    if (j == shape.part(i + 1)) {
        ssyt_rec(shape, k, i + 1, 0, t, out);
        return;
    }
    int lo = 1;
    if (j > 0) lo = std::max(lo, t.entries[i][j - 1]);
    if (i > 0 && j < static_cast<int>(t.entries[i - 1].size())) lo = std::max(lo, t.entries[i - 1][j] + 1);
    for (int v = lo; v <= k; ++v) {
        t.entries[i].push_back(v);
        ssyt_rec(shape, k, i, j + 1, t, out);
        t.entries[i].pop_back();
    }
}

void syt_rec(const Partition& shape, int next, Tableau& t, std::vector<Tableau>& out) {
    int n = shape.size();
    if (next > n) {
        out.push_back(t);
        return;
    }
    for (int i = 0; i < shape.rows(); ++i) {
        int j = static_cast<int>(t.entries[i].size());
        if (j >= shape.part(i + 1)) continue;
        if (i > 0 && static_cast<int>(t.entries[i - 1].size()) <= j) continue;
        t.entries[i].push_back(next);
        syt_rec(shape, next + 1, t, out);
        t.entries[i].pop_back();
    }
}

}  // namespace

std::vector<Tableau> ssyt_enumerate(const Partition& shape, int k) {
    std::vector<Tableau> out;
    if (shape.rows() > k) return out;
    Tableau t{shape, std::vector<std::vector<int>>(shape.rows())};
    ssyt_rec(shape, k, 0, 0, t, out);
    return out;
}

std::vector<Tableau> syt_enumerate(const Partition& shape) {
    std::vector<Tableau> out;
    Tableau t{shape, std::vector<std::vector<int>>(shape.rows())};
    syt_rec(shape, 1, t, out);
    return out;
}

}  // namespace schub

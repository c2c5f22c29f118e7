#ifndef SCHUB_TABLEAU_HPP
#define SCHUB_TABLEAU_HPP

#include <vector>

#include "schub/partition.hpp"

namespace schub {

// Filling of a Young diagram by positive integers, row by row.
struct Tableau {
    Partition shape;
    std::vector<std::vector<int>> entries;

    bool is_semistandard() const;  // rows weakly increase, columns strictly
    bool is_standard() const;      // semistandard + strict rows + entries 1..|shape|

    std::vector<int> reading_word() const;  // rows concatenated, top to bottom

    // Exponent of x^T: count of each entry value 1..k.
    std::vector<int> content_vector(int k) const;

    bool operator==(const Tableau& o) const {
        return shape == o.shape && entries == o.entries;
    }
};

// All semistandard tableaux of the given shape with entries in {1..k}, in
// lexicographic order of the reading word. Empty when shape has > k rows.
std::vector<Tableau> ssyt_enumerate(const Partition& shape, int k);

// All standard tableaux of the given shape (brute-force; test oracle for the
// hook length formula).
std::vector<Tableau> syt_enumerate(const Partition& shape);

}  // namespace schub

#endif

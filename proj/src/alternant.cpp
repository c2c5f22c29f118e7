#include "schub/alternant.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schub {

MultiPoly alternant(const Partition& shape, int k) {
    if (shape.rows() > k) throw std::domain_error("alternant: partition has more than k parts");
    std::vector<int> strict(k);
    for (int i = 0; i < k; ++i) strict[i] = shape.part(i + 1) + (k - 1 - i);
    MultiPoly out(k);
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inv;
        MultiPoly::Exponents e(k, 0);
        for (int i = 0; i < k; ++i) e[perm[i]] = strict[i];
        out.add_term(e, Rat(inv % 2 ? -1 : 1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

MultiPoly vandermonde(int k) { return alternant(Partition(), k); }

}  // namespace schub

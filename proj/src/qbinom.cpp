#include "schub/qbinom.hpp"

#include <stdexcept>

namespace schub {

MultiPoly q_binomial(int n, int k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("q_binomial: need 0 <= k <= n");
    MultiPoly num = MultiPoly::constant(Rat(1), 1);
    MultiPoly den = MultiPoly::constant(Rat(1), 1);
    for (int i = 0; i < k; ++i) {
        num *= MultiPoly::monomial({n}, Rat(1)) - MultiPoly::monomial({i}, Rat(1));
        den *= MultiPoly::monomial({k}, Rat(1)) - MultiPoly::monomial({i}, Rat(1));
    }
    MultiPoly q = poly_div_exact_univariate(num, den);
    if (!q.has_integer_coefficients())
        throw std::logic_error("q_binomial: non-integer quotient");
    if (q.evaluate({Rat(1)}) != Rat(BigInt::binomial(n, k)))
        throw std::logic_error("q_binomial: value at q=1 disagrees with binomial");
    return q;
}

}  // namespace schub

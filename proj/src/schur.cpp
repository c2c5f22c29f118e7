#include "schub/schur.hpp"

#include <algorithm>
#include <stdexcept>

#include "schub/alternant.hpp"

namespace schub {

MultiPoly schur_bialternant(const Partition& shape, int k) {
    if (shape.rows() > k) throw std::domain_error("schur_bialternant: partition has more than k parts");
    MultiPoly quotient = alternant(shape, k);
    for (int i = 1; i <= k; ++i)
        for (int j = i + 1; j <= k; ++j) quotient = quotient.divide_exact_linear(i, j);
    return quotient;
}

MultiPoly schur_ssyt(const Partition& shape, int k) {
    MultiPoly out(k);
    for (const Tableau& t : ssyt_enumerate(shape, k)) out.add_term(t.content_vector(k), Rat(1));
    return out;
}

namespace {

// All ways to grow `shape` by m boxes with no two in one column (a horizontal
// strip): mu >= lambda rowwise and mu_{i+1} <= lambda_i.
void horizontal_strips(const Partition& shape, int m, int row, int rows_max,
                       std::vector<int>& mu, std::vector<Partition>& out) {
    if (row == rows_max) {
        if (m == 0) out.push_back(Partition(mu));
        return;
    }
    int lo = shape.part(row + 1);
    int hi = row == 0 ? shape.part(1) + m : std::min(shape.part(row), mu[row - 1]);
    for (int v = lo; v <= std::min(hi, lo + m); ++v) {
        mu[row] = v;
        horizontal_strips(shape, m - (v - lo), row + 1, rows_max, mu, out);
    }
    mu[row] = 0;
}

}  // namespace

std::vector<Partition> pieri_partition_set(const Partition& shape, int m, PieriKind kind) {
    if (m < 0) throw std::invalid_argument("pieri_partition_set: negative box count");
    std::vector<Partition> out;
    if (kind == PieriKind::row) {
        int rows_max = shape.rows() + 1;
        std::vector<int> mu(rows_max, 0);
        horizontal_strips(shape, m, 0, rows_max, mu, out);
    } else {
        for (const Partition& conj : pieri_partition_set(shape.conjugate(), m, PieriKind::row))
            out.push_back(conj.conjugate());
    }
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return b < a; });
    return out;
}

SchurExpansion schur_expand(const MultiPoly& f, bool require_nonnegative) {
    if (!f.is_symmetric()) throw std::domain_error("schur_expand: input is not symmetric");
    int k = f.nvars();
    SchurExpansion expansion;
    MultiPoly remainder = f;
    while (!remainder.is_zero()) {
        // The lex-greatest monomial of a symmetric polynomial has weakly
        // decreasing exponent, and it is the leading monomial of s_nu for that
        // exponent nu.
        const auto& [lead, coeff] = *remainder.terms().rbegin();
        Partition nu = [&] {
            std::vector<int> parts = lead;
            for (size_t i = 0; i + 1 < parts.size(); ++i)
                if (parts[i] < parts[i + 1])
                    throw std::logic_error("schur_expand: leading exponent is not a partition");
            return Partition(parts);
        }();
        if (!coeff.is_integer()) throw std::domain_error("schur_expand: non-integer coefficient");
        if (require_nonnegative && coeff.sign() < 0)
            throw std::logic_error("schur_expand: negative coefficient in a positive expansion");
        expansion[nu] = coeff.as_integer();
        remainder -= schur_ssyt(nu, k) * coeff;
        if (!remainder.is_symmetric())
            throw std::logic_error("schur_expand: remainder lost symmetry");
    }
    return expansion;
}

BigInt lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (lambda.size() + mu.size() != nu.size()) return BigInt(0);
    int k = lambda.size() + mu.size();
    if (k == 0) return BigInt(1);  // s_0 * s_0 = s_0
    MultiPoly product = schur_ssyt(lambda, k) * schur_ssyt(mu, k);
    SchurExpansion expansion = schur_expand(product, /*require_nonnegative=*/true);
    auto it = expansion.find(nu);
    return it == expansion.end() ? BigInt(0) : it->second;
}

}  // namespace schub

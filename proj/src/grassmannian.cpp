#include "schub/grassmannian.hpp"

#include <stdexcept>

#include "schub/qbinom.hpp"
#include "schub/schur.hpp"

namespace schub {

GrClassSum::GrClassSum(Box box, const Partition& p) : box_(box) {
    if (!fits_in_box(p, box_)) throw std::domain_error("GrClassSum: partition outside the box");
    terms_[p] = BigInt(1);
}

void GrClassSum::add(const Partition& p, const BigInt& c) {
    if (!fits_in_box(p, box_)) throw std::domain_error("GrClassSum: partition outside the box");
    if (c.is_zero()) return;
    auto it = terms_.find(p);
    if (it == terms_.end()) {
        terms_[p] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BigInt GrClassSum::coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? BigInt(0) : it->second;
}

GrClassSum pieri_multiply(const GrClassSum& x, int m) {
    const Box& box = x.box();
    if (m < 0 || m > box.cols) throw std::domain_error("pieri_multiply: need 0 <= m <= n-k");
    GrClassSum out(box);
    for (const auto& [p, c] : x.terms()) {
        for (const Partition& nu : pieri_partition_set(p, m, PieriKind::row))
            if (fits_in_box(nu, box)) out.add(nu, c);
    }
    return out;
}

GrClassSum gr_product(const GrClassSum& x, const GrClassSum& y) {
    const Box& box = x.box();
    if (box != y.box()) throw std::domain_error("gr_product: context mismatch");
    GrClassSum out(box);
    int area = box.rows * box.cols;
    for (const auto& [lam, a] : x.terms()) {
        for (const auto& [mu, b] : y.terms()) {
            if (lam.size() + mu.size() > area) continue;
            MultiPoly product = schur_ssyt(lam, box.rows) * schur_ssyt(mu, box.rows);
            for (const auto& [nu, c] : schur_expand(product, /*require_nonnegative=*/true)) {
                if (nu.size() != lam.size() + mu.size())
                    throw std::logic_error("gr_product: expansion not graded");
                if (fits_in_box(nu, box)) out.add(nu, a * b * c);
            }
        }
    }
    return out;
}

DualityTable duality_pairing(int k, int n) {
    Box box(k, n - k);
    const Partition full = complement(Partition(), box);
    DualityTable table;
    table.basis = partitions_in_box(box);
    int area = k * (n - k);
    size_t m = table.basis.size();
    table.pairing.assign(m, std::vector<BigInt>(m, BigInt(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < m; ++j) {
            const Partition& lam = table.basis[i];
            const Partition& mu = table.basis[j];
            if (lam.size() + mu.size() != area) continue;
            GrClassSum prod = gr_product(GrClassSum(box, lam), GrClassSum(box, mu));
            table.pairing[i][j] = prod.coefficient(full);
            BigInt expected(mu == complement(lam, box) ? 1 : 0);
            if (table.pairing[i][j] != expected)
                throw std::logic_error("duality_pairing: pairing is not the complement matrix");
        }
    }
    return table;
}

MultiPoly gr_poincare(int k, int n) {
    if (k > n) throw std::domain_error("gr_poincare: need k <= n");
    MultiPoly poly = q_binomial(n, k);
    MultiPoly cells(1);
    for (const Partition& p : partitions_in_box(Box(k, n - k)))
        cells += MultiPoly::monomial({p.size()}, Rat(1));
    if (poly != cells)
        throw std::logic_error("gr_poincare: q-binomial disagrees with the cell count");
    return poly;
}

BigInt schubert_degree_gr(const Partition& p, int k, int n) {
    Box box(k, n - k);
    if (!fits_in_box(p, box)) throw std::domain_error("schubert_degree_gr: partition outside the box");
    BigInt degree = hooks_and_syt_count(complement(p, box)).syt_count;
    if (p.empty()) {
        // Closed formula for the degree of the Grassmannian:
        // (k(n-k))! * prod_{i=0}^{k-1} i! / (n-k+i)!.
        BigInt closed = BigInt::factorial(static_cast<unsigned>(k * (n - k)));
        for (int i = 0; i < k; ++i) {
            closed *= BigInt::factorial(static_cast<unsigned>(i));
            closed = closed / BigInt::factorial(static_cast<unsigned>(n - k + i));
        }
        if (closed != degree)
            throw std::logic_error("schubert_degree_gr: hook count disagrees with the closed formula");
    }
    return degree;
}

namespace {

int pair_index(int i, int j, int n) {
    // Lexicographic rank of (i, j), 1 <= i < j <= n, starting at 1.
    int idx = 0;
    for (int a = 1; a < i; ++a) idx += n - a;
    return idx + (j - i);
}

}  // namespace

std::vector<MultiPoly> plucker_quadrics_k2(int n) {
    if (n < 0) throw std::invalid_argument("plucker_quadrics_k2: negative n");
    int nvars = n * (n - 1) / 2;
    std::vector<MultiPoly> out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    auto coord = [&](int a, int b) { return MultiPoly::variable(pair_index(a, b, n), nvars); };
                    out.push_back(coord(i, j) * coord(k, l) - coord(i, k) * coord(j, l) +
                                  coord(i, l) * coord(j, k));
                }
    return out;
}

bool is_decomposable(const std::vector<Rat>& plucker_coords) {
    int n = 2;
    while (n * (n - 1) / 2 < static_cast<int>(plucker_coords.size())) ++n;
    if (n * (n - 1) / 2 != static_cast<int>(plucker_coords.size()))
        throw std::invalid_argument("is_decomposable: length is not a binomial(n,2)");
    for (const MultiPoly& quad : plucker_quadrics_k2(n))
        if (!quad.evaluate(plucker_coords).is_zero()) return false;
    return true;
}

}  // namespace schub

#include "schub/flag.hpp"

#include <mutex>
#include <stdexcept>

namespace schub {

namespace {

MultiPoly staircase_monomial(int n) {
    MultiPoly::Exponents e(std::max(n - 1, 0), 0);
    for (int i = 0; i < n - 1; ++i) e[i] = n - 1 - i;
    return MultiPoly::monomial(std::move(e), Rat(1));
}

MultiPoly apply_word(MultiPoly f, const ReducedWord& word) {
    for (int letter : word) {
        if (letter + 1 > f.nvars()) f = f.padded(letter + 1);
        f = f.divided_difference(letter);
    }
    return f;
}

void validate_schubert(const Permutation& w, const MultiPoly& poly) {
    int deg = 0;
    if (!poly.is_homogeneous(&deg) || (deg != w.length() && !poly.is_zero()))
        throw std::logic_error("SchubertPoly: not homogeneous of degree l(w)");
    int n = w.degree();
    for (const auto& [e, c] : poly.terms()) {
        if (!c.is_integer() || c.sign() < 0)
            throw std::logic_error("SchubertPoly: coefficients must be nonnegative integers");
        for (size_t i = 0; i < e.size(); ++i) {
            int cap = n - 1 - static_cast<int>(i);
            if (e[i] > std::max(cap, 0))
                throw std::logic_error("SchubertPoly: monomial escapes the staircase");
        }
    }
}

}  // namespace

SchubertPoly::SchubertPoly(Permutation perm, MultiPoly p) : w(std::move(perm)), poly(std::move(p)) {
    validate_schubert(w, poly);
}

namespace {
std::mutex schubert_cache_mutex;
std::map<Permutation, MultiPoly> schubert_cache;
}  // namespace

SchubertPoly schubert_polynomial(const Permutation& w) {
    int n = w.degree();
    {
        std::lock_guard<std::mutex> lock(schubert_cache_mutex);
        auto it = schubert_cache.find(w);
        if (it != schubert_cache.end()) return SchubertPoly(w, it->second);
    }
    Permutation u = compose(Permutation::longest(n), w);
    // S_w = d_{i_l} ... d_{i_1} (staircase) for a reduced word
    // w0*w = s_{i_1} ... s_{i_l}; apply_word consumes letters first-to-last,
    // which applies d_{i_1} first as required.
    MultiPoly poly = apply_word(staircase_monomial(n), u.reduced_word());
    ReducedWord alt = u.reduced_word_alt();
    if (alt != u.reduced_word() && apply_word(staircase_monomial(n), alt) != poly)
        throw std::logic_error("schubert_polynomial: result depends on the reduced word");
    {
        std::lock_guard<std::mutex> lock(schubert_cache_mutex);
        schubert_cache.emplace(w, poly);
    }
    return SchubertPoly(w, poly);
}

FlClassSum::FlClassSum(int n, const Permutation& w) : n_(n) {
    if (w.degree() != n) throw std::domain_error("FlClassSum: permutation degree mismatch");
    terms_[w] = BigInt(1);
}

void FlClassSum::add(const Permutation& w, const BigInt& c) {
    if (w.degree() != n_) throw std::domain_error("FlClassSum: permutation degree mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_[w] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BigInt FlClassSum::coefficient(const Permutation& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? BigInt(0) : it->second;
}

FlClassSum monk_multiply(const FlClassSum& x, int i) {
    int n = x.degree();
    if (i < 1 || i > n - 1) throw std::out_of_range("monk_multiply: index out of range");
    FlClassSum out(n);
    for (const auto& [w, c] : x.terms()) {
        for (int j = 1; j <= i; ++j) {
            for (int k = i + 1; k <= n; ++k) {
                Permutation wt = w.right_multiply_transposition(j, k);
                if (wt.length() == w.length() + 1) out.add(wt, c);
            }
        }
    }
    return out;
}

BigInt schubert_coefficient(const MultiPoly& f, const Permutation& u) {
    ReducedWord word = u.reduced_word();
    MultiPoly cur = f;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        if (*it + 1 > cur.nvars()) cur = cur.padded(*it + 1);
        cur = cur.divided_difference(*it);
    }
    Rat value = cur.constant_value();
    if (!value.is_integer()) throw std::logic_error("schubert_coefficient: non-integer coefficient");
    return value.as_integer();
}

FlClassSum flag_product(const FlClassSum& x, const FlClassSum& y) {
    int n = x.degree();
    if (n != y.degree()) throw std::domain_error("flag_product: degree mismatch");
    int top = n * (n - 1) / 2;
    std::vector<Permutation> sn = all_permutations(n);
    FlClassSum out(n);
    for (const auto& [w, a] : x.terms()) {
        for (const auto& [v, b] : y.terms()) {
            int d = w.length() + v.length();
            if (d > top) continue;
            MultiPoly product = schubert_polynomial(w).poly * schubert_polynomial(v).poly;
            for (const Permutation& u : sn) {
                if (u.length() != d) continue;
                BigInt c = schubert_coefficient(product, u);
                if (c.sign() < 0) throw std::logic_error("flag_product: negative structure constant");
                if (!c.is_zero()) out.add(u, a * b * c);
            }
        }
    }
    return out;
}

std::map<Permutation, BigInt> schubert_expand(const MultiPoly& f, int m) {
    std::map<Permutation, BigInt> out;
    if (f.is_zero()) return out;
    for (const Permutation& u : all_permutations(m)) {
        MultiPoly piece = f.homogeneous_part(u.length());
        if (piece.is_zero()) continue;
        BigInt c = schubert_coefficient(piece, u);
        if (!c.is_zero()) out[u] = c;
    }
    return out;
}

namespace {

// Orders exponent vectors by their last differing position, larger exponent
// there first; the maximal monomial of S_u in this order is x^{code(u)}.
bool peel_less(const MultiPoly::Exponents& a, const MultiPoly::Exponents& b) {
    for (size_t i = std::max(a.size(), b.size()); i-- > 0;) {
        int av = i < a.size() ? a[i] : 0;
        int bv = i < b.size() ? b[i] : 0;
        if (av != bv) return av < bv;
    }
    return false;
}

}  // namespace

std::map<Permutation, BigInt> schubert_expand_by_peeling(const MultiPoly& f) {
    std::map<Permutation, BigInt> out;
    MultiPoly remainder = f;
    while (!remainder.is_zero()) {
        auto lead = remainder.terms().begin();
        for (auto it = remainder.terms().begin(); it != remainder.terms().end(); ++it)
            if (peel_less(lead->first, it->first)) lead = it;
        const MultiPoly::Exponents& code = lead->first;
        int m = static_cast<int>(code.size());
        for (size_t i = 0; i < code.size(); ++i)
            m = std::max(m, code[i] + static_cast<int>(i) + 1);
        Permutation u = Permutation::from_code(code, m);
        Rat c = lead->second;
        if (!c.is_integer()) throw std::domain_error("schubert_expand_by_peeling: non-integer coefficient");
        out[u] = c.as_integer();
        remainder -= schubert_polynomial(u).poly * c;
    }
    return out;
}

MultiPoly flag_poincare(int n) {
    if (n < 1) throw std::domain_error("flag_poincare: need n >= 1");
    MultiPoly num = MultiPoly::constant(Rat(1), 1);
    MultiPoly den = MultiPoly::constant(Rat(1), 1);
    MultiPoly one_minus_q = MultiPoly::constant(Rat(1), 1) - MultiPoly::variable(1, 1);
    for (int i = 1; i <= n; ++i) {
        num *= MultiPoly::constant(Rat(1), 1) - MultiPoly::monomial({i}, Rat(1));
        den *= one_minus_q;
    }
    MultiPoly poly = poly_div_exact_univariate(num, den);
    if (n <= 7) {
        MultiPoly lengths(1);
        for (const Permutation& w : all_permutations(n))
            lengths += MultiPoly::monomial({w.length()}, Rat(1));
        if (poly != lengths)
            throw std::logic_error("flag_poincare: disagrees with the length generating function");
    }
    return poly;
}

bool stability_check(const Permutation& w) {
    return schubert_polynomial(w.stabilized(w.degree() + 1)).poly == schubert_polynomial(w).poly;
}

MultiPoly borel_quotient_residue(const MultiPoly& f, int n) {
    if (f.nvars() > n)
        throw std::invalid_argument("borel_quotient_residue: polynomial has more than n variables");
    MultiPoly residue(std::max(n - 1, 0));
    for (const Permutation& u : all_permutations(n)) {
        MultiPoly piece = f.homogeneous_part(u.length());
        if (piece.is_zero()) continue;
        BigInt c = schubert_coefficient(piece, u);
        if (!c.is_zero()) residue += schubert_polynomial(u).poly * Rat(c);
    }
    return residue;
}

}  // namespace schub

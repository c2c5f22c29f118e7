#ifndef SCHUB_FLAG_HPP
#define SCHUB_FLAG_HPP

#include <map>

#include "schub/multipoly.hpp"
#include "schub/permutation.hpp"

namespace schub {

// Schubert polynomial of w, computed by divided differences along a reduced
// word of w0*w applied to the staircase monomial x1^{n-1} ... x_{n-1}. The
// constructor checks homogeneity of degree l(w), staircase domination and
// nonnegativity of coefficients; schubert_polynomial additionally recomputes
// with a second reduced word when one exists.
struct SchubertPoly {
    Permutation w;
    MultiPoly poly;

    SchubertPoly(Permutation perm, MultiPoly p);
};

SchubertPoly schubert_polynomial(const Permutation& w);

// Integer combination of flag Schubert classes sigma_w, w in S_n.
class FlClassSum {
public:
    explicit FlClassSum(int n) : n_(n) {}
    FlClassSum(int n, const Permutation& w);

    int degree() const { return n_; }
    const std::map<Permutation, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Permutation& w, const BigInt& c);
    BigInt coefficient(const Permutation& w) const;

    bool operator==(const FlClassSum& o) const { return n_ == o.n_ && terms_ == o.terms_; }
    bool operator!=(const FlClassSum& o) const { return !(*this == o); }

private:
    int n_;
    std::map<Permutation, BigInt> terms_;
};

// Chevalley-Monk rule: multiplies by the divisor class sigma_{s_i}, summing
// sigma_{w t_{jk}} over j <= i < k with l(w t_{jk}) = l(w) + 1.
FlClassSum monk_multiply(const FlClassSum& x, int i);

// General product in H*(Fl(n)). For each basis pair the coefficient of
// sigma_u is extracted from the polynomial product S_w * S_v by applying
// divided differences along a reduced word of u, rightmost letter first; the
// result is restricted to u in S_n.
FlClassSum flag_product(const FlClassSum& x, const FlClassSum& y);

// Applies divided differences along the reduced word of u (rightmost letter
// first) and returns the resulting constant: the coefficient of S_u in the
// Schubert expansion of the homogeneous polynomial f of degree l(u).
BigInt schubert_coefficient(const MultiPoly& f, const Permutation& u);

// Expansion of a polynomial in the Schubert basis {S_u : u in S_m}, degree by
// degree, via schubert_coefficient.
std::map<Permutation, BigInt> schubert_expand(const MultiPoly& f, int m);

// Cross-check oracle: expansion by peeling leading monomials x^{code(u)} in
// the order that compares exponent vectors at their last differing position.
std::map<Permutation, BigInt> schubert_expand_by_peeling(const MultiPoly& f);

// Poincare polynomial of Fl(n): (1-q)(1-q^2)...(1-q^n) / (1-q)^n, division
// checked exact; for n <= 7 also checked against the length generating
// function of S_n.
MultiPoly flag_poincare(int n);

// S_{w x 1} computed in S_{n+1} equals S_w computed in S_n.
bool stability_check(const Permutation& w);

// Representative of f modulo the ideal generated by symmetric polynomials
// with zero constant term, obtained by keeping only the S_u with u in S_n in
// the Schubert expansion of f. The residue lies in the staircase span.
MultiPoly borel_quotient_residue(const MultiPoly& f, int n);

}  // namespace schub

#endif

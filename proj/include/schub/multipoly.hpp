#ifndef SCHUB_MULTIPOLY_HPP
#define SCHUB_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "schub/bigint.hpp"

namespace schub {

// Exact multivariate polynomial over the rationals. Terms are kept in a map
// from dense exponent vectors (fixed length = nvars) to nonzero coefficients.
// Variable indices are 1-based in the public API: x1, ..., x_nvars.
class MultiPoly {
public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rat>;

    explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

    static MultiPoly constant(const Rat& c, int nvars = 0);
    static MultiPoly variable(int i, int nvars);
    static MultiPoly monomial(Exponents exp, const Rat& c);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    size_t term_count() const { return terms_.size(); }

    // Re-embeds into a ring with at least `nvars` variables (zero-pads exponents).
    MultiPoly padded(int nvars) const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rat& c) const;
    MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
    MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
    MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    void add_term(const Exponents& exp, const Rat& c);

    Rat evaluate(const std::vector<Rat>& point) const;
    Rat coefficient_of(const Exponents& exp) const;

    bool is_constant() const;
    Rat constant_value() const;  // throws if not constant

    int total_degree() const;                 // -1 for the zero polynomial
    bool is_homogeneous(int* degree_out = nullptr) const;
    MultiPoly homogeneous_part(int degree) const;

    // All coefficients are integers (denominator 1).
    bool has_integer_coefficients() const;

    MultiPoly swap_vars(int i, int j) const;
    bool is_symmetric() const;  // invariant under all adjacent swaps

    MultiPoly derivative(int var, int order = 1) const;

    // Divided difference: (f - swap_{i,i+1} f) / (x_i - x_{i+1}); always exact.
    MultiPoly divided_difference(int i) const;

    // Replaces x_var by an arbitrary polynomial value.
    MultiPoly substituted(int var, const MultiPoly& value) const;

    MultiPoly antiderivative(int var) const;
    MultiPoly definite_integral(int var, const MultiPoly& lo, const MultiPoly& hi) const;

    // Exact division by (x_i - x_j); throws std::domain_error when not divisible.
    MultiPoly divide_exact_linear(int i, int j) const;

    std::string to_string(const std::string& var_prefix = "x") const;

private:
    int nvars_;
    TermMap terms_;
};

// Exact univariate polynomial division; throws std::domain_error when the
// remainder is nonzero. Operands must have nvars <= 1.
MultiPoly poly_div_exact_univariate(const MultiPoly& num, const MultiPoly& den);

// Interprets `op` as a constant-coefficient differential operator (variable i
// acting as d/dx_i) and applies it to f.
MultiPoly apply_diff_operator(const MultiPoly& op, const MultiPoly& f);

// Elementary (e_m) and complete (h_m) symmetric polynomials in k variables.
enum class SymKind { elementary, complete };
MultiPoly sym_generator(SymKind kind, int m, int k);

}  // namespace schub

#endif

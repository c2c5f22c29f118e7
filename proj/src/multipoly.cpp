#include "schub/multipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace schub {

MultiPoly MultiPoly::constant(const Rat& c, int nvars) {
    MultiPoly out(nvars);
    if (!c.is_zero()) out.terms_[Exponents(nvars, 0)] = c;
    return out;
}

MultiPoly MultiPoly::variable(int i, int nvars) {
    if (i < 1 || i > nvars) throw std::invalid_argument("MultiPoly::variable: index out of range");
    MultiPoly out(nvars);
    Exponents e(nvars, 0);
    e[i - 1] = 1;
    out.terms_[e] = Rat(1);
    return out;
}

MultiPoly MultiPoly::monomial(Exponents exp, const Rat& c) {
    for (int e : exp)
        if (e < 0) throw std::invalid_argument("MultiPoly::monomial: negative exponent");
    MultiPoly out(static_cast<int>(exp.size()));
    if (!c.is_zero()) out.terms_[std::move(exp)] = c;
    return out;
}

MultiPoly MultiPoly::padded(int nvars) const {
    if (nvars < nvars_) throw std::invalid_argument("MultiPoly::padded: cannot shrink variable count");
    if (nvars == nvars_) return *this;
    MultiPoly out(nvars);
    for (const auto& [e, c] : terms_) {
        Exponents pe = e;
        pe.resize(nvars, 0);
        out.terms_[std::move(pe)] = c;
    }
    return out;
}

void MultiPoly::add_term(const Exponents& exp, const Rat& c) {
    if (static_cast<int>(exp.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::add_term: exponent arity mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_[exp] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    int n = std::max(nvars_, o.nvars_);
    MultiPoly out = padded(n);
    MultiPoly rhs = o.padded(n);
    for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    int n = std::max(nvars_, o.nvars_);
    MultiPoly a = padded(n), b = o.padded(n), out(n);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            Exponents e(n);
            for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly MultiPoly::operator*(const Rat& c) const {
    MultiPoly out(nvars_);
    if (c.is_zero()) return out;
    for (const auto& [e, coeff] : terms_) out.terms_[e] = coeff * c;
    return out;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    int n = std::max(nvars_, o.nvars_);
    return padded(n).terms_ == o.padded(n).terms_;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("MultiPoly::evaluate: point arity mismatch");
    Rat total(0);
    for (const auto& [e, c] : terms_) {
        Rat term = c;
        for (int i = 0; i < nvars_; ++i) {
            for (int k = 0; k < e[i]; ++k) term *= point[i];
        }
        total += term;
    }
    return total;
}

Rat MultiPoly::coefficient_of(const Exponents& exp) const {
    Exponents e = exp;
    if (static_cast<int>(e.size()) > nvars_) {
        for (size_t i = nvars_; i < e.size(); ++i)
            if (e[i] != 0) return Rat(0);
        e.resize(nvars_);
    } else {
        e.resize(nvars_, 0);
    }
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0));
}

Rat MultiPoly::constant_value() const {
    if (!is_constant()) throw std::domain_error("MultiPoly: not a constant: " + to_string());
    return terms_.empty() ? Rat(0) : terms_.begin()->second;
}

int MultiPoly::total_degree() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int v : e) d += v;
        deg = std::max(deg, d);
    }
    return deg;
}

bool MultiPoly::is_homogeneous(int* degree_out) const {
    int deg = -1;
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int v : e) d += v;
        if (deg == -1)
            deg = d;
        else if (d != deg)
            return false;
    }
    if (degree_out) *degree_out = deg;
    return true;
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        int d = 0;
        for (int v : e) d += v;
        if (d == degree) out.terms_[e] = c;
    }
    return out;
}

bool MultiPoly::has_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (!c.is_integer()) return false;
    return true;
}

MultiPoly MultiPoly::swap_vars(int i, int j) const {
    if (i < 1 || j < 1 || i > nvars_ || j > nvars_)
        throw std::invalid_argument("MultiPoly::swap_vars: index out of range");
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents se = e;
        std::swap(se[i - 1], se[j - 1]);
        out.terms_[std::move(se)] = c;
    }
    return out;
}

bool MultiPoly::is_symmetric() const {
    for (int i = 1; i < nvars_; ++i)
        if (swap_vars(i, i + 1) != *this) return false;
    return true;
}

MultiPoly MultiPoly::derivative(int var, int order) const {
    if (var < 1 || var > nvars_) throw std::invalid_argument("MultiPoly::derivative: index out of range");
    MultiPoly cur = *this;
    for (int k = 0; k < order; ++k) {
        MultiPoly next(nvars_);
        for (const auto& [e, c] : cur.terms_) {
            if (e[var - 1] == 0) continue;
            Exponents de = e;
            --de[var - 1];
            next.add_term(de, c * Rat(e[var - 1]));
        }
        cur = std::move(next);
    }
    return cur;
}

MultiPoly MultiPoly::divided_difference(int i) const {
    if (i < 1 || i + 1 > nvars_)
        throw std::invalid_argument("MultiPoly::divided_difference: index out of range");
    MultiPoly numerator = *this - swap_vars(i, i + 1);
    // The numerator is antisymmetric in x_i, x_{i+1}; each term with
    // e_i > e_{i+1} pairs off with its mirror, and
    // (x^p y^q - x^q y^p)/(x - y) = sum_{t=q}^{p-1} x^t y^{p+q-1-t}.
    MultiPoly out(nvars_);
    for (const auto& [e, c] : numerator.terms_) {
        int p = e[i - 1], q = e[i];
        if (p <= q) continue;
        for (int t = q; t < p; ++t) {
            Exponents te = e;
            te[i - 1] = t;
            te[i] = p + q - 1 - t;
            out.add_term(te, c);
        }
    }
    return out;
}

MultiPoly MultiPoly::substituted(int var, const MultiPoly& value) const {
    if (var < 1 || var > nvars_) throw std::invalid_argument("MultiPoly::substituted: index out of range");
    int n = std::max(nvars_, value.nvars());
    MultiPoly val = value.padded(n);
    // Cache powers of the substituted value.
    std::vector<MultiPoly> powers{MultiPoly::constant(Rat(1), n)};
    MultiPoly out(n);
    for (const auto& [e, c] : terms_) {
        while (static_cast<int>(powers.size()) <= e[var - 1]) powers.push_back(powers.back() * val);
        Exponents re = e;
        re[var - 1] = 0;
        re.resize(n, 0);
        out += MultiPoly::monomial(re, c) * powers[e[var - 1]];
    }
    return out;
}

MultiPoly MultiPoly::antiderivative(int var) const {
    if (var < 1 || var > nvars_) throw std::invalid_argument("MultiPoly::antiderivative: index out of range");
    MultiPoly out(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents ie = e;
        ++ie[var - 1];
        out.terms_[ie] = c / Rat(ie[var - 1]);
    }
    return out;
}

MultiPoly MultiPoly::definite_integral(int var, const MultiPoly& lo, const MultiPoly& hi) const {
    MultiPoly anti = antiderivative(var);
    return anti.substituted(var, hi) - anti.substituted(var, lo);
}

MultiPoly MultiPoly::divide_exact_linear(int i, int j) const {
    if (i < 1 || j < 1 || i > nvars_ || j > nvars_ || i == j)
        throw std::invalid_argument("MultiPoly::divide_exact_linear: bad indices");
    // Synthetic division by (x_i - x_j): view as a polynomial in x_i and run
    // Horner at x_i = x_j; the remainder is the evaluation there.
    int maxdeg = 0;
    for (const auto& [e, c] : terms_) maxdeg = std::max(maxdeg, e[i - 1]);
    std::vector<MultiPoly> coeff(maxdeg + 1, MultiPoly(nvars_));
    for (const auto& [e, c] : terms_) {
        Exponents re = e;
        int d = re[i - 1];
        re[i - 1] = 0;
        coeff[d].add_term(re, c);
    }
    MultiPoly xj = MultiPoly::variable(j, nvars_);
    MultiPoly quotient(nvars_);
    MultiPoly carry(nvars_);  // running q_d as in g = (x_i - x_j) q + r
    for (int d = maxdeg; d >= 1; --d) {
        carry = coeff[d] + carry * xj;
        MultiPoly xi_pow = MultiPoly::monomial([&] {
            Exponents e(nvars_, 0);
            e[i - 1] = d - 1;
            return e;
        }(), Rat(1));
        quotient += carry * xi_pow;
    }
    MultiPoly remainder = coeff[0] + carry * xj;
    if (!remainder.is_zero())
        throw std::domain_error("MultiPoly::divide_exact_linear: not divisible");
    return quotient;
}

std::string MultiPoly::to_string(const std::string& var_prefix) const {
    if (terms_.empty()) return "0";
    std::string out;
    // Iterate in reverse map order so lexicographically greatest monomials
    // (x1-heavy) print first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rat a = c;
        if (!out.empty()) {
            out += (a.sign() < 0) ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        } else if (a.sign() < 0) {
            out += "-";
            a = -a;
        }
        std::string vars;
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += var_prefix;
            if (nvars_ > 1) vars += std::to_string(i + 1);  // univariate: bare name
            if (e[i] > 1) vars += "^" + std::to_string(e[i]);
        }
        if (vars.empty()) {
            out += a.to_string();
        } else if (a == Rat(1)) {
            out += vars;
        } else {
            out += a.to_string() + "*" + vars;
        }
    }
    return out;
}

MultiPoly poly_div_exact_univariate(const MultiPoly& num, const MultiPoly& den) {
    if (num.nvars() > 1 || den.nvars() > 1)
        throw std::invalid_argument("poly_div_exact_univariate: operands must be univariate");
    if (den.is_zero()) throw std::domain_error("poly_div_exact_univariate: zero divisor");
    auto coeffs = [](const MultiPoly& p) {
        std::vector<Rat> c(std::max(p.total_degree() + 1, 1), Rat(0));
        for (const auto& [e, v] : p.terms()) c[p.nvars() == 0 ? 0 : e[0]] = v;
        return c;
    };
    std::vector<Rat> a = coeffs(num.padded(1)), b = coeffs(den.padded(1));
    while (b.size() > 1 && b.back().is_zero()) b.pop_back();
    int db = static_cast<int>(b.size()) - 1;
    MultiPoly q(1);
    while (true) {
        int da = static_cast<int>(a.size()) - 1;
        while (da >= 0 && a[da].is_zero()) --da;
        if (da < db) break;
        Rat factor = a[da] / b[db];
        q.add_term({da - db}, factor);
        for (int k = 0; k <= db; ++k) a[da - db + k] -= factor * b[k];
    }
    for (const Rat& c : a)
        if (!c.is_zero()) throw std::domain_error("poly_div_exact_univariate: nonzero remainder");
    return q;
}

MultiPoly apply_diff_operator(const MultiPoly& op, const MultiPoly& f) {
    int n = std::max(op.nvars(), f.nvars());
    MultiPoly padded_op = op.padded(n);
    MultiPoly out(n);
    for (const auto& [e, c] : padded_op.terms()) {
        MultiPoly term = f.padded(n);
        for (int i = 0; i < n && !term.is_zero(); ++i)
            if (e[i] > 0) term = term.derivative(i + 1, e[i]);
        out += term * c;
    }
    return out;
}

namespace {

void elementary_rec(int m, int k, int next, MultiPoly::Exponents& e, MultiPoly& out) {
    if (m == 0) {
        out.add_term(e, Rat(1));
        return;
    }
    for (int i = next; i <= k - m + 1; ++i) {
        e[i - 1] = 1;
        elementary_rec(m - 1, k, i + 1, e, out);
        e[i - 1] = 0;
    }
}

void complete_rec(int m, int k, int next, MultiPoly::Exponents& e, MultiPoly& out) {
    if (m == 0) {
        out.add_term(e, Rat(1));
        return;
    }
    for (int i = next; i <= k; ++i) {
        ++e[i - 1];
        complete_rec(m - 1, k, i, e, out);
        --e[i - 1];
    }
}

}  // namespace

MultiPoly sym_generator(SymKind kind, int m, int k) {
    if (m < 0 || k < 0) throw std::invalid_argument("sym_generator: negative arguments");
    MultiPoly out(k);
    if (m == 0) return MultiPoly::constant(Rat(1), k);
    if (kind == SymKind::elementary && m > k) return out;  // e_m = 0 for m > k
    if (k == 0) return out;                                // no variables, m > 0
    MultiPoly::Exponents e(k, 0);
    if (kind == SymKind::elementary)
        elementary_rec(m, k, 1, e, out);
    else
        complete_rec(m, k, 1, e, out);
    return out;
}

}  // namespace schub

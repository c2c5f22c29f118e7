#include "schub/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schub {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    int n = degree();
    std::vector<bool> seen(n + 1, false);
    for (int v : images_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("Permutation: not a bijection of {1..n}");
        seen[v] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::longest(int n) {
    std::vector<int> im(n);
    for (int i = 0; i < n; ++i) im[i] = n - i;
    return Permutation(std::move(im));
}

Permutation Permutation::simple_transposition(int i, int n) {
    if (i < 1 || i >= n) throw std::invalid_argument("simple_transposition: index out of range");
    return transposition(i, i + 1, n);
}

Permutation Permutation::transposition(int j, int k, int n) {
    if (j < 1 || k < 1 || j > n || k > n || j == k)
        throw std::invalid_argument("transposition: bad indices");
    Permutation p = identity(n);
    std::swap(p.images_[j - 1], p.images_[k - 1]);
    return p;
}

Permutation Permutation::from_word(const ReducedWord& letters, int n) {
    Permutation acc = identity(n);
    for (int l : letters) acc = compose(acc, simple_transposition(l, n));
    return acc;
}

Permutation Permutation::from_code(const std::vector<int>& code, int n) {
    if (static_cast<int>(code.size()) > n)
        throw std::domain_error("Permutation::from_code: code longer than degree");
    std::vector<int> available(n);
    std::iota(available.begin(), available.end(), 1);
    std::vector<int> im;
    im.reserve(n);
    for (int i = 0; i < n; ++i) {
        int c = i < static_cast<int>(code.size()) ? code[i] : 0;
        if (c < 0 || c >= static_cast<int>(available.size()))
            throw std::domain_error("Permutation::from_code: invalid code entry");
        im.push_back(available[c]);
        available.erase(available.begin() + c);
    }
    return Permutation(std::move(im));
}

int Permutation::operator()(int i) const {
    if (i < 1 || i > degree()) throw std::out_of_range("Permutation: 1-based index out of range");
    return images_[i - 1];
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(degree());
    for (int i = 1; i <= degree(); ++i) inv[images_[i - 1] - 1] = i;
    return Permutation(std::move(inv));
}

int Permutation::length() const {
    int count = 0;
    for (int i = 0; i < degree(); ++i)
        for (int j = i + 1; j < degree(); ++j)
            if (images_[i] > images_[j]) ++count;
    return count;
}

std::vector<int> Permutation::lehmer_code() const {
    std::vector<int> code(degree(), 0);
    for (int i = 0; i < degree(); ++i)
        for (int j = i + 1; j < degree(); ++j)
            if (images_[j] < images_[i]) ++code[i];
    return code;
}

int Permutation::rank(int p, int q) const {
    if (p < 1 || q < 1 || p > degree() || q > degree())
        throw std::out_of_range("Permutation::rank: indices out of range");
    int count = 0;
    for (int i = 1; i <= p; ++i)
        if (images_[i - 1] <= q) ++count;
    return count;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (images_[i] != i + 1) return false;
    return true;
}

namespace {

ReducedWord reduced_word_by_descent(Permutation u, bool largest_first) {
    ReducedWord letters;
    while (true) {
        int pick = -1;
        for (int i = 1; i < u.degree(); ++i) {
            if (u(i) > u(i + 1)) {
                pick = i;
                if (!largest_first) break;
            }
        }
        if (pick == -1) break;
        u = u.right_multiply_simple(pick);
        letters.push_back(pick);
    }
    // u = s_{l_{k-1}} ... s_{l_0} once reduced to the identity, so the word in
    // product order is the reverse of the extraction order.
    std::reverse(letters.begin(), letters.end());
    return letters;
}

}  // namespace

ReducedWord Permutation::reduced_word() const { return reduced_word_by_descent(*this, true); }
ReducedWord Permutation::reduced_word_alt() const { return reduced_word_by_descent(*this, false); }

Permutation Permutation::right_multiply_simple(int i) const {
    if (i < 1 || i >= degree()) throw std::out_of_range("right_multiply_simple: index out of range");
    Permutation out = *this;
    std::swap(out.images_[i - 1], out.images_[i]);
    return out;
}

Permutation Permutation::right_multiply_transposition(int j, int k) const {
    if (j < 1 || k < 1 || j > degree() || k > degree() || j == k)
        throw std::out_of_range("right_multiply_transposition: bad indices");
    Permutation out = *this;
    std::swap(out.images_[j - 1], out.images_[k - 1]);
    return out;
}

Permutation Permutation::stabilized(int m) const {
    if (m < degree()) throw std::invalid_argument("Permutation::stabilized: cannot shrink degree");
    std::vector<int> im = images_;
    for (int v = degree() + 1; v <= m; ++v) im.push_back(v);
    return Permutation(std::move(im));
}

std::string Permutation::to_string() const {
    std::string out;
    bool commas = degree() > 9;
    for (int i = 0; i < degree(); ++i) {
        if (commas && i) out += ",";
        out += std::to_string(images_[i]);
    }
    return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
    if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
    std::vector<int> im(a.degree());
    for (int i = 1; i <= a.degree(); ++i) im[i - 1] = a(b(i));
    return Permutation(std::move(im));
}

bool bruhat_leq(const Permutation& v, const Permutation& w) {
    if (v.degree() != w.degree()) throw std::invalid_argument("bruhat_leq: degree mismatch");
    int n = v.degree();
    for (int p = 1; p <= n; ++p)
        for (int q = 1; q <= n; ++q)
            if (v.rank(p, q) < w.rank(p, q)) return false;
    return true;
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> im(n);
    std::iota(im.begin(), im.end(), 1);
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(im));
    } while (std::next_permutation(im.begin(), im.end()));
    return out;
}

}  // namespace schub

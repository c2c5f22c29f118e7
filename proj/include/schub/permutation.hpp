#ifndef SCHUB_PERMUTATION_HPP
#define SCHUB_PERMUTATION_HPP

#include <string>
#include <vector>

namespace schub {

// Word of simple-transposition indices; reduced when its letter count equals
// the length of the permutation it multiplies out to.
using ReducedWord = std::vector<int>;

// Permutation of {1..n} in one-line notation.
//
// Composition convention used everywhere in this library:
//   compose(a, b)(i) = a(b(i)),
// so a word (l1, ..., lk) of simple transpositions multiplies out as
// s_{l1} o s_{l2} o ... o s_{lk} (the rightmost letter acts first).
class Permutation {
public:
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    static Permutation longest(int n);  // w0 = (n, n-1, ..., 1)
    static Permutation simple_transposition(int i, int n);
    static Permutation transposition(int j, int k, int n);
    static Permutation from_word(const ReducedWord& letters, int n);
    static Permutation from_code(const std::vector<int>& code, int n);

    int degree() const { return static_cast<int>(images_.size()); }
    int operator()(int i) const;  // 1-based
    const std::vector<int>& images() const { return images_; }

    Permutation inverse() const;

    // Number of inversions.
    int length() const;

    // Lehmer code: code_i = #{j > i : w(j) < w(i)}.
    std::vector<int> lehmer_code() const;

    // Rank function r_w(p, q) = #{i <= p : w(i) <= q}.
    int rank(int p, int q) const;

    bool is_identity() const;

    // Deterministic reduced word, largest descent removed first.
    ReducedWord reduced_word() const;
    // Alternative deterministic reduced word (smallest descent first), used to
    // cross-check word-independent constructions.
    ReducedWord reduced_word_alt() const;

    // w * s_i: swaps the entries in positions i, i+1.
    Permutation right_multiply_simple(int i) const;
    // w * t_{jk}: swaps the entries in positions j, k.
    Permutation right_multiply_transposition(int j, int k) const;

    // Image under the embedding S_n -> S_m fixing n+1..m.
    Permutation stabilized(int m) const;

    bool operator==(const Permutation& o) const { return images_ == o.images_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return images_ < o.images_; }

    // One-line notation: digits for n <= 9, comma-separated otherwise.
    std::string to_string() const;

private:
    std::vector<int> images_;
};

Permutation compose(const Permutation& a, const Permutation& b);

// v <= w in Bruhat order: r_v(p,q) >= r_w(p,q) for all p, q.
bool bruhat_leq(const Permutation& v, const Permutation& w);

// All of S_n in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);

}  // namespace schub

#endif

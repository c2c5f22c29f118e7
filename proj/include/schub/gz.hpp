#ifndef SCHUB_GZ_HPP
#define SCHUB_GZ_HPP

#include <map>
#include <utility>
#include <vector>

#include "schub/multipoly.hpp"
#include "schub/permutation.hpp"

namespace schub {

// Weight of GL(n): an integer vector (lambda_1, ..., lambda_n). Gelfand-Zetlin
// polytopes take weakly increasing weights, full-dimensional ones strictly
// increasing.
using Weight = std::vector<long long>;

// Triangular integer array: rows[0] = lambda (length n), row i has length
// n - i, each entry interlacing the two above it.
struct GZPattern {
    std::vector<std::vector<long long>> rows;

    int n() const { return static_cast<int>(rows.empty() ? 0 : rows[0].size()); }
    bool operator<(const GZPattern& o) const { return rows < o.rows; }
    bool operator==(const GZPattern& o) const { return rows == o.rows; }
};

bool is_valid_pattern(const GZPattern& p);

// Kogan face of GZ(lambda): a set of equalities x_{ij} = x_{i-1,j}
// (1-based; x_{0,j} = lambda_j), positions satisfying i, j >= 1, i + j <= n.
struct KoganFace {
    int n;
    std::vector<std::pair<int, int>> equalities;  // kept sorted

    KoganFace(int rank, std::vector<std::pair<int, int>> eqs);

    bool operator<(const KoganFace& o) const { return equalities < o.equalities; }
    bool operator==(const KoganFace& o) const { return n == o.n && equalities == o.equalities; }
};

// Formal character: weight -> multiplicity (all >= 1).
using FormalCharacter = std::map<Weight, BigInt>;

// Weyl dimension product prod_{i<j} (lambda_j - lambda_i + j - i) / (j - i).
BigInt weyl_dimension(const Weight& lambda);

// All integer points of GZ(lambda), row-major lexicographic order; the count
// is checked against weyl_dimension.
std::vector<GZPattern> gz_lattice_points(const Weight& lambda);

// Weight of a pattern: k-th coordinate is (sum of row n-k) - (sum of row
// n-k+1), so the first coordinate is the single bottom entry.
Weight projection_pi(const GZPattern& p);

// Word of a Kogan face: edges read from bottom to top, left to right within a
// row, edge (i-1,j) -> (i,j) contributing the letter i + j - 1.
ReducedWord kogan_face_word(const KoganFace& f);

// Product of the word letters under the library-wide composition convention.
Permutation kogan_face_permutation(const KoganFace& f);

bool kogan_face_reduced(const KoganFace& f);

// All reduced Kogan faces whose word multiplies to w, ordered
// lexicographically by the equality set.
std::vector<KoganFace> enumerate_reduced_kogan_faces(const Permutation& w);

// Integer points of the face polytope (interlacing plus the face equalities).
std::vector<GZPattern> face_lattice_points(const KoganFace& f, const Weight& lambda);

// Normalized volume of the face polytope: iterated exact integration in the
// coordinates of the face's free cells (lattice covolume 1 on the affine
// span); a vertex has volume 1 by convention.
Rat face_volume(const KoganFace& f, const Weight& lambda);

// Demazure character as the lattice character of the union of the reduced
// Kogan faces of w, points deduplicated across faces. Requires strictly
// increasing lambda.
FormalCharacter demazure_character(const Permutation& w, const Weight& lambda);
BigInt demazure_dimension(const Permutation& w, const Weight& lambda);

// Volume polynomial of GZ(lambda) as a polynomial in lambda_1..lambda_n:
// prod_{i>j} (lambda_i - lambda_j) / (1! 2! ... (n-1)!).
MultiPoly gz_volume_polynomial(int n);

// Khovanskii-Pukhlikov pairing: applies S_w(D) S_v(D) to the volume
// polynomial under x_i -> -d/d lambda_i. Requires l(w) + l(v) = n(n-1)/2;
// the result is delta_{v, w0 w}.
BigInt kp_pairing(const Permutation& w, const Permutation& v, int n);

// Degree of the Schubert variety X'_w in P(V(lambda)):
// (n(n-1)/2 - l(w))! times the total normalized volume of the reduced Kogan
// faces of w. Requires strictly increasing lambda.
BigInt flag_schubert_degree(const Permutation& w, const Weight& lambda);

}  // namespace schub

#endif

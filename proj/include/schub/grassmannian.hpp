#ifndef SCHUB_GRASSMANNIAN_HPP
#define SCHUB_GRASSMANNIAN_HPP

#include <map>
#include <vector>

#include "schub/multipoly.hpp"
#include "schub/partition.hpp"

namespace schub {

// Integer combination of Schubert classes of Gr(k, n), indexed by partitions
// inside the k x (n-k) box.
class GrClassSum {
public:
    explicit GrClassSum(Box box) : box_(box) {}
    GrClassSum(Box box, const Partition& p);

    const Box& box() const { return box_; }
    const std::map<Partition, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Partition& p, const BigInt& c);
    BigInt coefficient(const Partition& p) const;

    bool operator==(const GrClassSum& o) const { return box_ == o.box_ && terms_ == o.terms_; }
    bool operator!=(const GrClassSum& o) const { return !(*this == o); }

private:
    Box box_;
    std::map<Partition, BigInt> terms_;
};

// Pieri rule: multiplies by the special class sigma_m, m <= n-k.
GrClassSum pieri_multiply(const GrClassSum& x, int m);

// General product: computed through symmetric functions in k variables, then
// pushed through the epimorphism onto H*(Gr(k,n)) by discarding partitions
// outside the box. Structure constants are checked nonnegative.
GrClassSum gr_product(const GrClassSum& x, const GrClassSum& y);

// Full pairing table: entry (i, j) is the coefficient of the box class in
// sigma_{basis[i]} * sigma_{basis[j]} when the degrees are complementary and 0
// otherwise. Checked to be the permutation matrix of complementation.
struct DualityTable {
    std::vector<Partition> basis;
    std::vector<std::vector<BigInt>> pairing;
};
DualityTable duality_pairing(int k, int n);

// Poincare polynomial of Gr(k, n): the q-binomial [n choose k]_q, checked
// against the cell-count sum over partitions in the box.
MultiPoly gr_poincare(int k, int n);

// Degree of the Schubert variety X_lambda under the Pluecker embedding: the
// number of standard tableaux of the complementary shape. For the empty
// partition the result is also checked against the closed product formula for
// the degree of the Grassmannian.
BigInt schubert_degree_gr(const Partition& p, int k, int n);

// Three-term Pluecker quadrics of Gr(2, n) in the binomial(n,2) coordinates
// p_{ij}, ordered lexicographically by (i, j).
std::vector<MultiPoly> plucker_quadrics_k2(int n);

// Evaluates every quadric on the given coordinates of a bivector; true iff
// all vanish. The length determines n.
bool is_decomposable(const std::vector<Rat>& plucker_coords);

}  // namespace schub

#endif

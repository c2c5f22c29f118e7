#ifndef SCHUB_PARTITION_HPP
#define SCHUB_PARTITION_HPP

#include <string>
#include <vector>

#include "schub/bigint.hpp"

namespace schub {

// Partition: weakly decreasing positive parts, trailing zeros trimmed.
// The empty sequence is the empty partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int rows() const { return static_cast<int>(parts_.size()); }
    int part(int i) const;  // 1-based, 0 beyond the last row
    int size() const;       // number of boxes
    bool empty() const { return parts_.empty(); }

    Partition conjugate() const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string to_string() const;  // "[2,1]", "[]" for empty

private:
    std::vector<int> parts_;
};

// The k x c rectangle framing Grassmannian Schubert classes (c = n-k).
struct Box {
    int rows;  // k >= 1
    int cols;  // c >= 0
    Box(int k, int c);
    bool operator==(const Box& o) const { return rows == o.rows && cols == o.cols; }
    bool operator!=(const Box& o) const { return !(*this == o); }
};

bool fits_in_box(const Partition& p, const Box& box);

// All partitions inside the box, graded by size, reverse-lexicographic within
// a grade; count is binomial(rows+cols, rows).
std::vector<Partition> partitions_in_box(const Box& box);

// Complement inside the box (180-degree rotation of the unfilled region).
Partition complement(const Partition& p, const Box& box);

// Diagram inclusion: inner_i <= outer_i for all rows.
bool contains(const Partition& outer, const Partition& inner);

// Hook lengths (sorted descending) and the standard-tableau count
// |shape|! / prod(hooks); integrality of the quotient is checked.
struct HookData {
    std::vector<int> hooks;
    BigInt syt_count;
};
HookData hooks_and_syt_count(const Partition& shape);

}  // namespace schub

#endif

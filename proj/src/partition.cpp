#include "schub/partition.hpp"

#include <algorithm>
#include <stdexcept>

namespace schub {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("Partition: negative part");
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

int Partition::part(int i) const {
    if (i < 1) throw std::out_of_range("Partition::part: 1-based index");
    return i <= rows() ? parts_[i - 1] : 0;
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition();
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++conj[j];
    return Partition(std::move(conj));
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

Box::Box(int k, int c) : rows(k), cols(c) {
    if (k < 1 || c < 0) throw std::invalid_argument("Box: need rows >= 1, cols >= 0");
}

bool fits_in_box(const Partition& p, const Box& box) {
    return p.rows() <= box.rows && p.part(1) <= box.cols;
}

namespace {

void box_rec(int row, int maxrows, int maxpart, std::vector<int>& cur,
             std::vector<Partition>& out) {
    out.push_back(Partition(std::vector<int>(cur.begin(), cur.begin() + row)));
    if (row == maxrows) return;
    for (int p = maxpart; p >= 1; --p) {
        cur[row] = p;
        box_rec(row + 1, maxrows, p, cur, out);
    }
}

}  // namespace

std::vector<Partition> partitions_in_box(const Box& box) {
    std::vector<Partition> out;
    std::vector<int> cur(box.rows, 0);
    box_rec(0, box.rows, box.cols, cur, out);
    std::sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return b < a;  // reverse-lexicographic within a grade
    });
    return out;
}

Partition complement(const Partition& p, const Box& box) {
    if (!fits_in_box(p, box))
        throw std::domain_error("complement: partition does not fit in the box");
    std::vector<int> out(box.rows);
    for (int i = 1; i <= box.rows; ++i) out[i - 1] = box.cols - p.part(box.rows + 1 - i);
    return Partition(std::move(out));
}

bool contains(const Partition& outer, const Partition& inner) {
    for (int i = 1; i <= inner.rows(); ++i)
        if (inner.part(i) > outer.part(i)) return false;
    return true;
}

HookData hooks_and_syt_count(const Partition& shape) {
    HookData data;
    Partition conj = shape.conjugate();
    for (int i = 1; i <= shape.rows(); ++i) {
        for (int j = 1; j <= shape.part(i); ++j) {
            int arm = shape.part(i) - j;
            int leg = conj.part(j) - i;
            data.hooks.push_back(arm + leg + 1);
        }
    }
    std::sort(data.hooks.rbegin(), data.hooks.rend());
    BigInt num = BigInt::factorial(static_cast<unsigned>(shape.size()));
    BigInt den(1);
    for (int h : data.hooks) den *= BigInt(h);
    BigInt q, r;
    BigInt::divmod(num, den, q, r);
    if (!r.is_zero())
        throw std::logic_error("hooks_and_syt_count: hook product does not divide factorial");
    data.syt_count = q;
    return data;
}

}  // namespace schub

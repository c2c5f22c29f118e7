#include "schub/bigint.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace schub {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    // Avoid UB on LLONG_MIN by widening through unsigned.
    uint64_t m = negative_ ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    while (m) {
        limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
}

BigInt::BigInt(const std::string& decimal) {
    size_t pos = 0;
    bool neg = false;
    if (pos < decimal.size() && (decimal[pos] == '+' || decimal[pos] == '-')) {
        neg = decimal[pos] == '-';
        ++pos;
    }
    if (pos == decimal.size()) throw std::invalid_argument("BigInt: empty literal");
    BigInt acc;
    for (; pos < decimal.size(); ++pos) {
        char c = decimal[pos];
        if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit in literal");
        acc = acc * BigInt(10) + BigInt(c - '0');
    }
    limbs_ = std::move(acc.limbs_);
    negative_ = neg && !limbs_.empty();
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        out.push_back(static_cast<uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    return out;
}

// Precondition: |a| >= |b|.
std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> out(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += kBase;
            borrow = 1;
        } else {
            borrow = 0;
        }
        out[i] = static_cast<uint32_t>(d);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size() || carry; ++j) {
            uint64_t cur = out[i + j] + carry;
            if (j < b.size()) cur += static_cast<uint64_t>(a[i]) * b[j];
            out[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// Bitwise shift-and-subtract long division on magnitudes.
void BigInt::divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    q.clear();
    r.clear();
    if (cmp_mag(a, b) < 0) {
        r = a;
        return;
    }
    size_t bits = a.size() * 32;
    q.assign(a.size(), 0);
    for (size_t i = bits; i-- > 0;) {
        // r = (r << 1) | bit i of a
        uint32_t carry = 0;
        for (size_t k = 0; k < r.size(); ++k) {
            uint32_t nc = r[k] >> 31;
            r[k] = (r[k] << 1) | carry;
            carry = nc;
        }
        if (carry) r.push_back(carry);
        if ((a[i / 32] >> (i % 32)) & 1u) {
            if (r.empty())
                r.push_back(1);
            else
                r[0] |= 1u;
        }
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[i / 32] |= 1u << (i % 32);
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.limbs_.empty()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt out;
    if (negative_ == o.negative_) {
        out.limbs_ = add_mag(limbs_, o.limbs_);
        out.negative_ = negative_;
    } else if (cmp_mag(limbs_, o.limbs_) >= 0) {
        out.limbs_ = sub_mag(limbs_, o.limbs_);
        out.negative_ = negative_;
    } else {
        out.limbs_ = sub_mag(o.limbs_, limbs_);
        out.negative_ = o.negative_;
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt out;
    out.limbs_ = mul_mag(limbs_, o.limbs_);
    out.negative_ = negative_ != o.negative_;
    out.trim();
    return out;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<uint32_t> qm, rm;
    divmod_mag(a.limbs_, b.limbs_, qm, rm);
    q.limbs_ = std::move(qm);
    q.negative_ = a.negative_ != b.negative_;
    q.trim();
    r.limbs_ = std::move(rm);
    r.negative_ = a.negative_;
    r.trim();
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmod(*this, o, q, r);
    return r;
}

BigInt BigInt::pow(unsigned e) const {
    BigInt base = *this, out(1);
    while (e) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt BigInt::factorial(unsigned n) {
    BigInt out(1);
    for (unsigned i = 2; i <= n; ++i) out *= BigInt(i);
    return out;
}

BigInt BigInt::binomial(unsigned n, unsigned k) {
    if (k > n) return BigInt(0);
    k = std::min(k, n - k);
    BigInt out(1);
    for (unsigned i = 1; i <= k; ++i) {
        out *= BigInt(n - k + i);
        out = out / BigInt(i);
    }
    return out;
}

bool BigInt::operator==(const BigInt& o) const {
    return negative_ == o.negative_ && limbs_ == o.limbs_;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = cmp_mag(limbs_, o.limbs_);
    return negative_ ? c > 0 : c < 0;
}

std::string BigInt::to_string() const {
    if (limbs_.empty()) return "0";
    std::vector<uint32_t> m = limbs_;
    std::string digits;
    while (!m.empty()) {
        // short division of the magnitude by 10^9
        uint64_t rem = 0;
        for (size_t i = m.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | m[i];
            m[i] = static_cast<uint32_t>(cur / 1000000000u);
            rem = cur % 1000000000u;
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
        for (int d = 0; d < 9; ++d) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

long long BigInt::to_long_long() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigInt: does not fit long long");
    uint64_t m = 0;
    for (size_t i = limbs_.size(); i-- > 0;) m = (m << 32) | limbs_[i];
    if (negative_) {
        if (m > static_cast<uint64_t>(1) << 63) throw std::overflow_error("BigInt: does not fit long long");
        return static_cast<long long>(~m + 1);
    }
    if (m > static_cast<uint64_t>((1ull << 63) - 1)) throw std::overflow_error("BigInt: does not fit long long");
    return static_cast<long long>(m);
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

Rat::Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
    reduce();
}

void Rat::reduce() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

bool Rat::is_integer() const { return den_ == BigInt(1); }

const BigInt& Rat::as_integer() const {
    if (!is_integer()) throw std::domain_error("Rat: not an integer: " + to_string());
    return num_;
}

Rat Rat::operator-() const {
    Rat out = *this;
    out.num_ = -out.num_;
    return out;
}

Rat Rat::operator+(const Rat& o) const { return Rat(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }
Rat Rat::operator-(const Rat& o) const { return Rat(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }
Rat Rat::operator*(const Rat& o) const { return Rat(num_ * o.num_, den_ * o.den_); }

Rat Rat::operator/(const Rat& o) const {
    if (o.is_zero()) throw std::domain_error("Rat: division by zero");
    return Rat(num_ * o.den_, den_ * o.num_);
}

bool Rat::operator<(const Rat& o) const { return num_ * o.den_ < o.num_ * den_; }

std::string Rat::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rat& v) { return os << v.to_string(); }

}  // namespace schub

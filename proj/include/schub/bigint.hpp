#ifndef SCHUB_BIGINT_HPP
#define SCHUB_BIGINT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace schub {

// Arbitrary-precision signed integer: sign + little-endian base-2^32 magnitude.
// Schoolbook arithmetic throughout; the quantities this library produces
// (structure constants, tableau counts, factorials up to a few dozen) stay
// tiny by bignum standards.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    explicit BigInt(const std::string& decimal);

    static BigInt factorial(unsigned n);
    static BigInt binomial(unsigned n, unsigned k);
    static BigInt gcd(BigInt a, BigInt b);
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    bool is_zero() const { return limbs_.empty(); }
    int sign() const { return limbs_.empty() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const;  // truncated toward zero
    BigInt operator%(const BigInt& o) const;
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    BigInt pow(unsigned e) const;
    BigInt abs() const;

    bool operator==(const BigInt& o) const;
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;
    bool operator>(const BigInt& o) const { return o < *this; }
    bool operator<=(const BigInt& o) const { return !(o < *this); }
    bool operator>=(const BigInt& o) const { return !(*this < o); }

    std::string to_string() const;
    // Throws std::overflow_error if the value does not fit.
    long long to_long_long() const;

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    bool negative_ = false;
    std::vector<uint32_t> limbs_;  // no high zero limbs; empty means 0

    void trim();
    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

// Exact rational with reduced BigInt numerator/denominator, denominator > 0.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long v) : num_(v), den_(1) {}
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt n, BigInt d);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const;
    // Throws std::domain_error when the denominator is not 1.
    const BigInt& as_integer() const;
    int sign() const { return num_.sign(); }

    Rat operator-() const;
    Rat operator+(const Rat& o) const;
    Rat operator-(const Rat& o) const;
    Rat operator*(const Rat& o) const;
    Rat operator/(const Rat& o) const;
    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }
    Rat& operator/=(const Rat& o) { return *this = *this / o; }

    bool operator==(const Rat& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rat& o) const { return !(*this == o); }
    bool operator<(const Rat& o) const;

    std::string to_string() const;  // "p" or "p/q"

    friend std::ostream& operator<<(std::ostream& os, const Rat& v);

private:
    BigInt num_, den_;
    void reduce();
};

}  // namespace schub

#endif

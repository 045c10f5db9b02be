#pragma once

#include <cstdint>
#include <string>
#include <vector>
#include <stdexcept>

namespace bocskit {

// Arbitrary-precision signed integer, sign + little-endian 32-bit magnitude.
// Coefficients in this library stay tiny; clarity beats speed here.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    static BigInt fromString(const std::string& s);

    bool isZero() const { return mag_.empty(); }
    bool isNegative() const { return negative_; }
    int signum() const { return mag_.empty() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt operator+(const BigInt& o) const;
    BigInt operator-(const BigInt& o) const;
    BigInt operator*(const BigInt& o) const;
    BigInt operator/(const BigInt& o) const;  // truncated toward zero
    BigInt operator%(const BigInt& o) const;

    bool operator==(const BigInt& o) const { return negative_ == o.negative_ && mag_ == o.mag_; }
    bool operator!=(const BigInt& o) const { return !(*this == o); }
    bool operator<(const BigInt& o) const;

    BigInt abs() const;
    static BigInt gcd(BigInt a, BigInt b);

    std::string toString() const;
    // Value as long long, throws if out of range.
    long long toLongLong() const;

private:
    bool negative_ = false;
    std::vector<uint32_t> mag_;  // little-endian, no trailing zeros

    void trim();
    static int cmpMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> addMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> subMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static std::vector<uint32_t> mulMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    static void divmodMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                          std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

// Exact rational number in lowest terms with positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d);
    static Rational fromString(const std::string& s);  // "p" or "p/q"

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool isZero() const { return num_.isZero(); }
    int signum() const { return num_.signum(); }

    Rational operator-() const;
    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator/(const Rational& o) const;
    Rational& operator+=(const Rational& o) { *this = *this + o; return *this; }
    Rational& operator-=(const Rational& o) { *this = *this - o; return *this; }
    Rational& operator*=(const Rational& o) { *this = *this * o; return *this; }

    Rational inverse() const;

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;

    std::string toString() const;  // "p" or "p/q"

private:
    BigInt num_;
    BigInt den_;  // > 0
    void normalize();
};

}  // namespace bocskit

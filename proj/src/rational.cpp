#include "bocskit/rational.hpp"

#include <algorithm>

namespace bocskit {

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    unsigned long long u = negative_ ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
    while (u) {
        mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
        u >>= 32;
    }
}

BigInt BigInt::fromString(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt: no digits in '" + s + "'");
    BigInt r(0);
    BigInt ten(10);
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
        r = r * ten + BigInt(s[i] - '0');
    }
    if (neg && !r.isZero()) r.negative_ = true;
    return r;
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) negative_ = false;
}

int BigInt::cmpMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::addMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()) || carry; ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    return r;
}

// requires |a| >= |b|
std::vector<uint32_t> BigInt::subMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r = a;
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t d = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) {
            d += (1ll << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<uint32_t>(d);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<uint32_t> BigInt::mulMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size() || carry; ++j) {
            uint64_t cur = r[i + j] + carry;
            if (j < b.size()) cur += static_cast<uint64_t>(a[i]) * b[j];
            r[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

// Long division on bits; fine for the small numbers seen here.
void BigInt::divmodMag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                       std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    q.assign(a.size(), 0);
    r.clear();
    for (size_t bit = a.size() * 32; bit-- > 0;) {
        // r = r*2 + next bit of a
        uint32_t carry = (a[bit / 32] >> (bit % 32)) & 1u;
        for (size_t i = 0; i < r.size(); ++i) {
            uint32_t nc = r[i] >> 31;
            r[i] = (r[i] << 1) | carry;
            carry = nc;
        }
        if (carry) r.push_back(carry);
        if (cmpMag(r, b) >= 0) {
            r = subMag(r, b);
            q[bit / 32] |= (1u << (bit % 32));
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.mag_.empty()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::operator+(const BigInt& o) const {
    BigInt r;
    if (negative_ == o.negative_) {
        r.mag_ = addMag(mag_, o.mag_);
        r.negative_ = negative_;
    } else {
        int c = cmpMag(mag_, o.mag_);
        if (c == 0) return BigInt();
        if (c > 0) {
            r.mag_ = subMag(mag_, o.mag_);
            r.negative_ = negative_;
        } else {
            r.mag_ = subMag(o.mag_, mag_);
            r.negative_ = o.negative_;
        }
    }
    r.trim();
    return r;
}

BigInt BigInt::operator-(const BigInt& o) const { return *this + (-o); }

BigInt BigInt::operator*(const BigInt& o) const {
    BigInt r;
    r.mag_ = mulMag(mag_, o.mag_);
    r.negative_ = !r.mag_.empty() && (negative_ != o.negative_);
    return r;
}

BigInt BigInt::operator/(const BigInt& o) const {
    BigInt q, r;
    divmodMag(mag_, o.mag_, q.mag_, r.mag_);
    q.negative_ = !q.mag_.empty() && (negative_ != o.negative_);
    q.trim();
    return q;
}

BigInt BigInt::operator%(const BigInt& o) const {
    BigInt q, r;
    divmodMag(mag_, o.mag_, q.mag_, r.mag_);
    r.negative_ = !r.mag_.empty() && negative_;
    r.trim();
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = cmpMag(mag_, o.mag_);
    return negative_ ? c > 0 : c < 0;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
    a.negative_ = false;
    b.negative_ = false;
    while (!b.isZero()) {
        BigInt t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string BigInt::toString() const {
    if (mag_.empty()) return "0";
    std::string digits;
    std::vector<uint32_t> cur = mag_;
    std::vector<uint32_t> ten = {10};
    while (!cur.empty()) {
        std::vector<uint32_t> q, r;
        divmodMag(cur, ten, q, r);
        digits.push_back(static_cast<char>('0' + (r.empty() ? 0 : r[0])));
        cur = q;
    }
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

long long BigInt::toLongLong() const {
    unsigned long long v = 0;
    if (mag_.size() > 2) throw std::overflow_error("BigInt: out of long long range");
    for (size_t i = mag_.size(); i-- > 0;) v = (v << 32) | mag_[i];
    if (!negative_ && v > 0x7fffffffffffffffull) throw std::overflow_error("BigInt: out of long long range");
    if (negative_ && v > 0x8000000000000000ull) throw std::overflow_error("BigInt: out of long long range");
    return negative_ ? -static_cast<long long>(v) : static_cast<long long>(v);
}

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.isZero()) throw std::domain_error("Rational: zero denominator");
    normalize();
}

Rational Rational::fromString(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt::fromString(s), BigInt(1));
    return Rational(BigInt::fromString(s.substr(0, slash)), BigInt::fromString(s.substr(slash + 1)));
}

void Rational::normalize() {
    if (den_.isNegative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.isZero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
    return Rational(num_ * o.num_, den_ * o.den_);
}

Rational Rational::operator/(const Rational& o) const {
    if (o.isZero()) throw std::domain_error("Rational: division by zero");
    return Rational(num_ * o.den_, den_ * o.num_);
}

Rational Rational::inverse() const {
    if (isZero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(den_, num_);
}

bool Rational::operator<(const Rational& o) const {
    return (num_ * o.den_) < (o.num_ * den_);
}

std::string Rational::toString() const {
    if (den_ == BigInt(1)) return num_.toString();
    return num_.toString() + "/" + den_.toString();
}

}  // namespace bocskit

#include "l2b/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace l2b {

BigInt::BigInt(int64_t v) {
    negative_ = v < 0;
    // avoid overflow on INT64_MIN
    uint64_t m = negative_ ? ~static_cast<uint64_t>(v) + 1 : static_cast<uint64_t>(v);
    while (m) {
        limbs_.push_back(static_cast<uint32_t>(m & 0xffffffffu));
        m >>= 32;
    }
    if (limbs_.empty()) negative_ = false;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::cmp_mag(const BigInt& a, const BigInt& b) {
    if (a.limbs_.size() != b.limbs_.size())
        return a.limbs_.size() < b.limbs_.size() ? -1 : 1;
    for (size_t i = a.limbs_.size(); i-- > 0;) {
        if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t s = carry;
        if (i < a.size()) s += a[i];
        if (i < b.size()) s += b[i];
        r.push_back(static_cast<uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<uint32_t>(carry));
    return r;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
    std::vector<uint32_t> r;
    r.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t s = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (s < 0) {
            s += (int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<uint32_t>(s));
    }
    return r;
}

BigInt BigInt::sub_mag_ordered(const BigInt& a, const BigInt& b, bool neg) {
    BigInt r;
    r.limbs_ = sub_mag(a.limbs_, b.limbs_);
    r.negative_ = neg;
    r.trim();
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    if (!r.is_zero()) r.negative_ = !r.negative_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.negative_ = false;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.negative_ == b.negative_) {
        BigInt r;
        r.limbs_ = BigInt::add_mag(a.limbs_, b.limbs_);
        r.negative_ = a.negative_;
        r.trim();
        return r;
    }
    int c = BigInt::cmp_mag(a, b);
    if (c == 0) return BigInt();
    if (c > 0) return BigInt::sub_mag_ordered(a, b, a.negative_);
    return BigInt::sub_mag_ordered(b, a, b.negative_);
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    BigInt r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (size_t i = 0; i < a.limbs_.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] + static_cast<uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        size_t k = i + b.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[k] + carry;
            r.limbs_[k] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    r.negative_ = a.negative_ != b.negative_;
    r.trim();
    return r;
}

bool BigInt::operator<(const BigInt& o) const {
    if (negative_ != o.negative_) return negative_;
    int c = cmp_mag(*this, o);
    return negative_ ? c > 0 : c < 0;
}

void BigInt::shr1() {
    uint32_t carry = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint32_t next = limbs_[i] & 1u;
        limbs_[i] = (limbs_[i] >> 1) | (carry << 31);
        carry = next;
    }
    trim();
}

void BigInt::shl1() {
    uint32_t carry = 0;
    for (size_t i = 0; i < limbs_.size(); ++i) {
        uint32_t next = limbs_[i] >> 31;
        limbs_[i] = (limbs_[i] << 1) | carry;
        carry = next;
    }
    if (carry) limbs_.push_back(carry);
}

BigInt BigInt::gcd(const BigInt& a0, const BigInt& b0) {
    // binary gcd: only shifts, compares and subtraction
    BigInt a = a0.abs(), b = b0.abs();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int shift = 0;
    while (a.is_even() && b.is_even()) {
        a.shr1();
        b.shr1();
        ++shift;
    }
    while (a.is_even()) a.shr1();
    while (!b.is_zero()) {
        while (b.is_even()) b.shr1();
        if (cmp_mag(a, b) > 0) std::swap(a, b);
        b = sub_mag_ordered(b, a, false);
    }
    while (shift--) a.shl1();
    return a;
}

uint32_t BigInt::divmod_small(uint32_t d) {
    uint64_t rem = 0;
    for (size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur / d);
        rem = cur % d;
    }
    trim();
    return static_cast<uint32_t>(rem);
}

BigInt BigInt::divided_by(const BigInt& divisor) const {
    // exact division via reconstructive schoolbook: divisor is known to divide *this.
    // Handles the general case by long division limb-by-limb with a small-word
    // divisor fast path; otherwise binary long division.
    if (divisor.is_zero()) throw std::invalid_argument("BigInt: division by zero");
    if (is_zero()) return BigInt();
    BigInt q;
    if (divisor.limbs_.size() == 1) {
        q = *this;
        q.negative_ = false;
        q.divmod_small(divisor.limbs_[0]);
    } else {
        // binary long division on magnitudes
        BigInt rem;
        BigInt den = divisor.abs();
        for (size_t i = limbs_.size(); i-- > 0;) {
            for (int bit = 31; bit >= 0; --bit) {
                rem.shl1();
                if ((limbs_[i] >> bit) & 1u) {
                    if (rem.limbs_.empty()) rem.limbs_.push_back(1);
                    else rem.limbs_[0] |= 1u;
                }
                q.shl1();
                if (cmp_mag(rem, den) >= 0) {
                    rem = sub_mag_ordered(rem, den, false);
                    if (q.limbs_.empty()) q.limbs_.push_back(1);
                    else q.limbs_[0] |= 1u;
                }
            }
        }
        q.trim();
    }
    q.negative_ = !q.is_zero() && (negative_ != divisor.negative_);
    return q;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    BigInt t = *this;
    std::string digits;
    while (!t.is_zero()) {
        uint32_t rem = t.divmod_small(1000000000u);
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + rem % 10));
            rem /= 10;
        }
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

BigInt BigInt::from_decimal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    size_t pos = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
        neg = s[0] == '-';
        pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt: no digits in '" + s + "'");
    BigInt r;
    BigInt ten(10);
    for (; pos < s.size(); ++pos) {
        if (s[pos] < '0' || s[pos] > '9')
            throw std::invalid_argument("BigInt: bad digit in '" + s + "'");
        r = r * ten + BigInt(s[pos] - '0');
    }
    if (neg && !r.is_zero()) r.negative_ = true;
    return r;
}

bool BigInt::fits_int64() const {
    if (limbs_.size() > 2) return false;
    uint64_t m = 0;
    if (limbs_.size() >= 1) m = limbs_[0];
    if (limbs_.size() == 2) m |= static_cast<uint64_t>(limbs_[1]) << 32;
    return negative_ ? m <= (uint64_t(1) << 63) : m < (uint64_t(1) << 63);
}

int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw std::overflow_error("BigInt: does not fit int64");
    uint64_t m = 0;
    if (limbs_.size() >= 1) m = limbs_[0];
    if (limbs_.size() == 2) m |= static_cast<uint64_t>(limbs_[1]) << 32;
    return negative_ ? -static_cast<int64_t>(m) : static_cast<int64_t>(m);
}

Rational::Rational(int64_t p, int64_t q) : num_(p), den_(q) { normalize(); }

Rational::Rational(BigInt p, BigInt q) : num_(std::move(p)), den_(std::move(q)) { normalize(); }

void Rational::normalize() {
    if (den_.is_zero()) throw std::invalid_argument("Rational: zero denominator");
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_.divided_by(g);
    den_ = den_.divided_by(g);
}

bool Rational::is_one() const { return num_ == BigInt(1) && den_ == BigInt(1); }

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::invalid_argument("Rational: inverse of zero");
    return Rational(den_, num_);
}

std::string Rational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::parse(const std::string& s) {
    size_t slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt::from_decimal(s), BigInt(1));
    if (slash + 1 >= s.size()) throw std::invalid_argument("Rational: malformed '" + s + "'");
    return Rational(BigInt::from_decimal(s.substr(0, slash)), BigInt::from_decimal(s.substr(slash + 1)));
}

} // namespace l2b

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace l2b {

/// Arbitrary-precision signed integer, little-endian 32-bit limbs.
/// Canonical form: no leading zero limbs; zero has empty limbs and positive sign.
class BigInt {
public:
    BigInt() = default;
    BigInt(int64_t v);

    static BigInt from_decimal(const std::string& s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    bool operator==(const BigInt& o) const = default;
    bool operator<(const BigInt& o) const;

    /// gcd of magnitudes; gcd(0,0) = 0.
    static BigInt gcd(const BigInt& a, const BigInt& b);

    /// Exact division by a known divisor of *this (magnitudes; sign handled).
    /// Used for reducing fractions after a gcd computation.
    BigInt divided_by(const BigInt& divisor) const;

    std::string to_string() const;

    /// Value fits in int64? (used only by tests cross-checking small arithmetic)
    bool fits_int64() const;
    int64_t to_int64() const;

private:
    std::vector<uint32_t> limbs_;
    bool negative_ = false;

    void trim();
    static int cmp_mag(const BigInt& a, const BigInt& b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
    void shr1();
    void shl1();
    // divides magnitude in place by small d, returns remainder
    uint32_t divmod_small(uint32_t d);
    static BigInt sub_mag_ordered(const BigInt& a, const BigInt& b, bool neg);
};

/// Exact rational number over BigInt.
/// Invariants: denominator > 0, gcd(|num|, den) = 1, zero is 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(int64_t v) : num_(v), den_(1) {}
    Rational(int64_t p, int64_t q);
    Rational(BigInt p, BigInt q);

    /// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
    static Rational parse(const std::string& s);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_one() const;

    Rational operator-() const;
    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    Rational inverse() const;
    Rational abs() const { return is_negative() ? -*this : *this; }

    bool operator==(const Rational& o) const = default;

    /// Renders as "p/q", or "p" when q = 1.
    std::string to_string() const;

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

inline Rational operator*(int64_t a, const Rational& b) { return Rational(a) * b; }

} // namespace l2b

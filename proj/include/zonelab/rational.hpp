#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "zonelab/error.hpp"

namespace zonelab {

using BigInt = mpz_class;

// Exact rational scalar. Always stored in lowest terms with a positive
// denominator; arithmetic never rounds. Backed by GMP's mpq type.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(long long n) : v_(static_cast<signed long>(n)) {}
    Rational(long num, long den);
    Rational(const BigInt& num, const BigInt& den);
    explicit Rational(const BigInt& n) : v_(n) {}

    // Parses "p" or "p/q" with an optional leading minus and no interior
    // whitespace. q must be a positive integer literal.
    static Rational parse(std::string_view text);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    int sign() const { return sgn(v_); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    double to_double() const { return v_.get_d(); }

    // "p" when integral, "p/q" otherwise.
    std::string str() const;

    Rational operator-() const { return Rational(-v_); }

    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator/(const Rational& o) const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}

    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational max(const Rational& a, const Rational& b);
Rational min(const Rational& a, const Rational& b);

std::ostream& operator<<(std::ostream& os, const Rational& r);

} // namespace zonelab

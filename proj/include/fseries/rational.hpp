#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "fseries/error.hpp"

namespace fseries {

// Arbitrary-precision rational, always reduced with a positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(mpz_class(std::to_string(n))) {}
    Rational(long n, long d);
    Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "n", "-n", "n/d".
    static Rational parse(const std::string& s);

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational inv() const;
    Rational abs() const { return Rational(::abs(v_)); }
    Rational pow(long e) const;

    std::string str() const { return v_.get_str(); }
    double to_double() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    mpq_class v_;
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }

// p-adic valuation of a nonzero rational.
long padic_valuation(const Rational& r, unsigned long p);

// Converts an exact rational to the nearest double via big-float division.
double to_double(const mpz_class& num, const mpz_class& den);

}  // namespace fseries

#pragma once

#include <ostream>
#include <vector>

#include "fseries/rational.hpp"

namespace fseries {

// Integer coefficients of the N-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(unsigned n);
unsigned euler_phi(unsigned n);

// Element of Q[w]/Phi_N(w). Order 1 is the rational scalar field, and
// scalars combine freely with elements of any order.
class CyclotomicElem {
public:
    CyclotomicElem() : n_(1), c_{Rational(0)} {}
    CyclotomicElem(long v) : n_(1), c_{Rational(v)} {}
    CyclotomicElem(const Rational& v) : n_(1), c_{v} {}

    // The primitive root w of order n raised to the power k.
    static CyclotomicElem root_power(unsigned n, long k);

    unsigned order() const { return n_; }
    const std::vector<Rational>& coords() const { return c_; }
    bool is_zero() const;
    bool is_scalar() const;

    CyclotomicElem inv() const;
    CyclotomicElem pow(long e) const;

    friend CyclotomicElem operator+(const CyclotomicElem& a, const CyclotomicElem& b);
    friend CyclotomicElem operator-(const CyclotomicElem& a, const CyclotomicElem& b);
    friend CyclotomicElem operator*(const CyclotomicElem& a, const CyclotomicElem& b);
    friend CyclotomicElem operator/(const CyclotomicElem& a, const CyclotomicElem& b);
    friend CyclotomicElem operator-(const CyclotomicElem& a);
    friend bool operator==(const CyclotomicElem& a, const CyclotomicElem& b);
    friend bool operator!=(const CyclotomicElem& a, const CyclotomicElem& b) { return !(a == b); }

    CyclotomicElem& operator+=(const CyclotomicElem& o) { return *this = *this + o; }
    CyclotomicElem& operator-=(const CyclotomicElem& o) { return *this = *this - o; }
    CyclotomicElem& operator*=(const CyclotomicElem& o) { return *this = *this * o; }
    CyclotomicElem& operator/=(const CyclotomicElem& o) { return *this = *this / o; }

    friend std::ostream& operator<<(std::ostream& os, const CyclotomicElem& e);

    friend CyclotomicElem cyclotomic_reduce(unsigned n, const std::vector<Rational>& raw);

private:
    unsigned n_;
    std::vector<Rational> c_;
};

inline bool is_zero(const CyclotomicElem& e) { return e.is_zero(); }

// Residue of sum raw[k] w^k modulo Phi_N.
CyclotomicElem cyclotomic_reduce(unsigned n, const std::vector<Rational>& raw);

}  // namespace fseries

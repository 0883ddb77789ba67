#pragma once

#include <cstdint>
#include <ostream>

#include "fseries/error.hpp"
#include "fseries/rational.hpp"

namespace fseries {

// Element of F_p. A modulus of 0 marks an untyped small integer constant
// (used for 0, 1 and integer scalars) that adopts the modulus of the first
// typed operand it meets.
class PrimeFieldElem {
public:
    PrimeFieldElem() = default;
    PrimeFieldElem(long n) : p_(0), v_(n) {}
    PrimeFieldElem(std::uint64_t p, long n);

    std::uint64_t modulus() const { return p_; }
    std::uint64_t value() const;
    bool typed() const { return p_ != 0; }
    bool is_zero() const { return typed() ? v_ == 0 : v_ == 0; }

    PrimeFieldElem inv() const;
    PrimeFieldElem pow(std::uint64_t e) const;

    friend PrimeFieldElem operator+(const PrimeFieldElem& a, const PrimeFieldElem& b);
    friend PrimeFieldElem operator-(const PrimeFieldElem& a, const PrimeFieldElem& b);
    friend PrimeFieldElem operator*(const PrimeFieldElem& a, const PrimeFieldElem& b);
    friend PrimeFieldElem operator/(const PrimeFieldElem& a, const PrimeFieldElem& b);
    friend PrimeFieldElem operator-(const PrimeFieldElem& a);
    friend bool operator==(const PrimeFieldElem& a, const PrimeFieldElem& b);
    friend bool operator!=(const PrimeFieldElem& a, const PrimeFieldElem& b) { return !(a == b); }

    PrimeFieldElem& operator+=(const PrimeFieldElem& o) { return *this = *this + o; }
    PrimeFieldElem& operator-=(const PrimeFieldElem& o) { return *this = *this - o; }
    PrimeFieldElem& operator*=(const PrimeFieldElem& o) { return *this = *this * o; }
    PrimeFieldElem& operator/=(const PrimeFieldElem& o) { return *this = *this / o; }

    friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElem& e) {
        return e.typed() ? os << e.value() : os << e.v_;
    }

private:
    std::uint64_t p_ = 0;
    // Residue in [0, p) when typed; plain signed integer otherwise.
    long v_ = 0;
};

inline bool is_zero(const PrimeFieldElem& e) { return e.is_zero(); }

// numerator * denominator^-1 mod p; BadReduction when p divides the denominator.
PrimeFieldElem rational_mod_p(const Rational& r, std::uint64_t p);

bool is_prime(std::uint64_t n);

}  // namespace fseries

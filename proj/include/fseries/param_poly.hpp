#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "fseries/rational.hpp"

namespace fseries {

// Sparse Laurent polynomial with rational coefficients in named parameters.
// Exponents may be negative, so monomials are units; every other divisor
// must divide exactly.
class ParamPolynomial {
public:
    using Exponents = std::vector<int>;
    using Terms = std::map<Exponents, Rational>;

    ParamPolynomial() = default;
    ParamPolynomial(long c) : ParamPolynomial(Rational(c)) {}
    ParamPolynomial(int c) : ParamPolynomial(Rational(c)) {}
    ParamPolynomial(const Rational& c);

    static ParamPolynomial variable(const std::string& name);
    static ParamPolynomial monomial(const std::vector<std::string>& vars, const Exponents& e,
                                    const Rational& c);

    // Parses sums of terms such as "36*a^2*b - 3/2*a + 1".
    static ParamPolynomial parse(const std::string& text);

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    Rational constant_term() const;
    // Valid only for constants.
    Rational to_rational() const;

    int degree(const std::string& var) const;
    int min_degree(const std::string& var) const;
    int total_degree() const;

    Rational eval(const std::map<std::string, Rational>& assignment) const;
    // Partial evaluation / substitution of parameters by polynomials.
    ParamPolynomial substitute(const std::map<std::string, ParamPolynomial>& subs) const;
    ParamPolynomial partial(const std::string& var) const;
    // Coefficient of var^k as a polynomial in the other variables.
    ParamPolynomial coefficient(const std::string& var, int k) const;

    ParamPolynomial pow(long e) const;
    // Quotient when q divides *this exactly; DivisionNotExact otherwise.
    ParamPolynomial divide_exact(const ParamPolynomial& q) const;
    // Least common denominator and gcd of numerators of all coefficients.
    Rational content() const;

    ParamPolynomial& operator+=(const ParamPolynomial& o);
    ParamPolynomial& operator-=(const ParamPolynomial& o);
    ParamPolynomial& operator*=(const ParamPolynomial& o) { return *this = *this * o; }
    ParamPolynomial& operator/=(const ParamPolynomial& o) { return *this = *this / o; }

    friend ParamPolynomial operator+(ParamPolynomial a, const ParamPolynomial& b) { return a += b; }
    friend ParamPolynomial operator-(ParamPolynomial a, const ParamPolynomial& b) { return a -= b; }
    friend ParamPolynomial operator*(const ParamPolynomial& a, const ParamPolynomial& b);
    // Monomial divisors invert; other divisors must divide exactly (NonUnitDivisor).
    friend ParamPolynomial operator/(const ParamPolynomial& a, const ParamPolynomial& b);
    friend ParamPolynomial operator-(const ParamPolynomial& a);
    friend bool operator==(const ParamPolynomial& a, const ParamPolynomial& b);
    friend bool operator!=(const ParamPolynomial& a, const ParamPolynomial& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const ParamPolynomial& p) { return os << p.str(); }

    // Rewrites onto a superset of variables (sorted).
    ParamPolynomial with_vars(const std::vector<std::string>& vars) const;

private:
    std::vector<std::string> vars_;
    Terms terms_;

    void prune();
};

inline bool is_zero(const ParamPolynomial& p) { return p.is_zero(); }

// Sparse polynomial in x, y with exact coefficients.
using BivariatePolynomial = ParamPolynomial;

// Quotient of parameter polynomials, content-normalized.
class ParamRationalFunction {
public:
    ParamRationalFunction() : num_(0), den_(1) {}
    ParamRationalFunction(const ParamPolynomial& n) : num_(n), den_(1) {}
    ParamRationalFunction(long c) : num_(c), den_(1) {}
    ParamRationalFunction(const ParamPolynomial& n, const ParamPolynomial& d);

    const ParamPolynomial& num() const { return num_; }
    const ParamPolynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    Rational eval(const std::map<std::string, Rational>& assignment) const;

    friend ParamRationalFunction operator+(const ParamRationalFunction& a, const ParamRationalFunction& b);
    friend ParamRationalFunction operator-(const ParamRationalFunction& a, const ParamRationalFunction& b);
    friend ParamRationalFunction operator*(const ParamRationalFunction& a, const ParamRationalFunction& b);
    friend ParamRationalFunction operator/(const ParamRationalFunction& a, const ParamRationalFunction& b);
    friend ParamRationalFunction operator-(const ParamRationalFunction& a);
    // Cross-multiplication test.
    friend bool operator==(const ParamRationalFunction& a, const ParamRationalFunction& b);
    friend bool operator!=(const ParamRationalFunction& a, const ParamRationalFunction& b) { return !(a == b); }

    ParamRationalFunction& operator+=(const ParamRationalFunction& o) { return *this = *this + o; }
    ParamRationalFunction& operator-=(const ParamRationalFunction& o) { return *this = *this - o; }
    ParamRationalFunction& operator*=(const ParamRationalFunction& o) { return *this = *this * o; }
    ParamRationalFunction& operator/=(const ParamRationalFunction& o) { return *this = *this / o; }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const ParamRationalFunction& r) { return os << r.str(); }

private:
    ParamPolynomial num_, den_;
    void normalize();
};

inline bool is_zero(const ParamRationalFunction& r) { return r.is_zero(); }

}  // namespace fseries

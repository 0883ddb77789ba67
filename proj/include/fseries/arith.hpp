#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fseries/prime_field.hpp"
#include "fseries/series.hpp"
#include "fseries/special.hpp"

namespace fseries {

using ModPSeries = Series<PrimeFieldElem>;

// Coefficientwise reduction; BadReduction names the first index with p in a denominator.
ModPSeries reduce_mod_p(const QSeries& f, std::uint64_t p);

struct SigmaReport {
    QSeries sigma;              // over Q
    ModPSeries sigma_mod2;
    ModPSeries residual_mod2;   // sigma^2 - sigma + x mod 2
    bool residual_zero = false;
    bool matches_lacunary = false;  // sigma = 1 + x + sum x^(2^k) mod 2
    bool passed() const { return residual_zero && matches_lacunary; }
};

// sigma = (S - 3x)/(96x) + 99x/2 + 1 for S the elliptic one-parameter series at a = 3.
SigmaReport sigma_check(int order);

// Operator D - num/den with polynomial coefficients (constant term first).
struct OperatorOrderOne {
    std::vector<Rational> num, den;
    // D - 1/F for the nome operator F D - 1.
    static OperatorOrderOne nome_operator(const std::vector<Rational>& f_poly);
};

enum class PCurvature { Zero, Nonzero };

// A_1 = r, A_(k+1) = A_k' + r A_k over F_p(x); classifies A_p.
// PoleCollision when the denominator vanishes mod p or a coefficient does not reduce.
PCurvature p_curvature_order_one(const OperatorOrderOne& op, std::uint64_t p);

struct PCurvatureSurvey {
    std::vector<std::uint64_t> zero, nonzero, skipped;
};

PCurvatureSurvey p_curvature_survey(const OperatorOrderOne& op, std::uint64_t lo, std::uint64_t hi);

struct RadiusEstimate {
    double estimate = 0;     // last ratio c_n / c_(n+1)
    double window_mean = 0;  // mean of the last window ratios
    int sign = 0;
    int last_index = 0;
    std::vector<double> trace;  // ratios for the window, oldest first
};

// Ratios of consecutive coefficients in 512-bit floating point.
RadiusEstimate radius_estimate(const QSeries& f, int window);

// Decimal rendering of an exact ratio with the given significant digits.
std::string ratio_to_decimal(const Rational& r, int digits);

struct PrimeGrowth {
    std::uint64_t p = 0;
    int first_index = 0;  // first coefficient with p in the denominator
    int exponent = 0;     // minimal e with p^(e n) c_n integral for all n
    double slope = 0;     // max over n of v_p(den c_n) / n
};

struct BoundednessReport {
    bool integral = false;            // already integer coefficients
    bool rescalable = false;          // f(c x) integral with c <= bound, no late primes
    Rational rescale;                 // minimal c when rescalable
    std::vector<PrimeGrowth> primes;  // all denominator primes
    std::vector<std::uint64_t> late_primes;  // first appearing in the second half of the window
    bool unbounded_evidence() const { return !late_primes.empty(); }
};

// Checks whether a rescale x -> c x makes the first order coefficients integral.
BoundednessReport globally_bounded_probe(const QSeries& f, int order, const Rational& bound = Rational(1000000));

}  // namespace fseries

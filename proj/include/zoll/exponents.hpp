#pragma once

#include <limits>
#include <utility>
#include <vector>

#include "zoll/rational.hpp"

namespace zoll::exponents {

// q = infinity is a legal exponent throughout (sup norms in the sharpness
// arguments); branches are evaluated as limits there.
inline constexpr double kQInfinity = std::numeric_limits<double>::infinity();

// The three exponent branches:
//   s_sm  = (d-1)/2 * (1/2 - 1/q)      (small-q eigenfunction branch)
//   s_lg  = (d-1)/2 - d/q              (large-q eigenfunction branch)
//   s_sob = d/2 - (d+2)/q              (Sobolev branch)
// mu = max of all three, sigma = max of the first two.
double s_small(int d, double q);
double s_large(int d, double q);
double s_sobolev(int d, double q);
double mu(int d, double q);
double sigma(int d, double q);

// Exact-rational versions for tie detection at breakpoints (finite q only).
Rational s_small(int d, const Rational& q);
Rational s_large(int d, const Rational& q);
Rational s_sobolev(int d, const Rational& q);
Rational mu(int d, const Rational& q);
Rational sigma(int d, const Rational& q);

// True iff d(1/2 - 1/q) = 2/p and q lies in the admissible range:
// q in [2, 2d/(d-2)] for d >= 3 and q in [2, infinity) for d = 2.
bool admissible_pair(int d, double p, double q);

// The q values where the active branch of mu changes, increasing:
// {14/3} for d = 2, {2(d+1)/(d-1), 4} for d >= 3 (deduplicated at d = 3).
std::vector<Rational> breakpoints(int d);

struct ExponentFit {
    double slope = 0.0;
    double intercept = 0.0;      // log units
    double max_residual = 0.0;   // log units
    int sample_count = 0;
};

// Unweighted least squares of log(value) against log(lambda).
// drop_smallest discards the smallest-lambda sample first (preasymptotic
// bias control); requires at least 2 surviving samples, distinct lambdas,
// positive values.
ExponentFit fit_power_law(const std::vector<std::pair<double, double>>& samples,
                          bool drop_smallest = false);

}  // namespace zoll::exponents

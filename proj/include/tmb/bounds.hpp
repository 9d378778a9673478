#pragma once

// Closed-form constants for the upper and lower bounds of the sharp
// Trudinger-Moser suprema: ball lower bounds from the chimney and cap
// constructions, linear-in-n upper bounds, subcritical/critical whole-space
// constants, and the asymptotic two-sided constants c(n,beta), C(n,beta).

#include <optional>
#include <string>
#include <vector>

#include "tmb/numerics.hpp"

namespace tmb {

struct BoundsRow {
    int n = 2;
    double beta = 0.0;
    std::optional<double> alpha;
    double lower_tm_ball = 0.0;
    double upper_tm = 0.0;
    double lower_tm_sing = 0.0;
    double upper_tm_sing = 0.0;
    double upper_tm_sing_large_n = 0.0;
    std::optional<double> upper_stm;
    double upper_tm_rn = 0.0;
    double c_asym = 0.0;
    double C_asym = 0.0;
    std::optional<double> thmB_factor;
};

struct ChainValueEstimate {
    double value = 0.0;   // functional value at the test function
    double target = 0.0;  // asymptotic lower-bound it must dominate
    double k = 0.0;       // concentration parameter used
    std::vector<std::pair<std::string, bool>> checks;
    bool holds = false;
};

/// Jensen lower bound for the ball supremum at beta = 0:
/// (n/e)[e^{1/4 + 1/(4(2n-1))} - 1] + (1/e)[(n-1) e^{(n/(n-1))^n - n/(n-1)} + 2].
double lower_bound_ball(int n);

/// Cap-profile Jensen lower bound 2(2n-1)/(e(1-beta/n)) + 1/(1-beta/n)
/// (the S-level value; multiply by v_n^{beta/n} for the TM level).
double lower_bound_singular(int n, double beta);

/// 25n-24 for n >= 4, 36n-35 for n in {2,3}.
double upper_bound_tm(int n);

/// v_n^{beta/n} (25n-24)/(1-beta/n) for n >= 4 (196n-195 for n in {2,3});
/// with large_n set, v_n^{beta/n} (11.5n-10.5)/(1-beta/n).
double upper_bound_tm_singular(int n, double beta, bool large_n = false);

/// Subcritical whole-space constant:
/// e^{alpha(1-beta/n)} [1-(alpha/alpha_n)^{n-1}]^{-(1-beta/n)}
///   (v_n^{beta/n}(25n-24 | 196n-195) + 24)/(1-beta/n).
double upper_bound_stm(int n, double beta, double alpha);

/// Critical whole-space constant:
/// e^{6 alpha_n (1-beta/n)} (v_n^{beta/n} 2^{1/(n-1)} (25n-24 | 196n-195) + 24)/(1-beta/n).
double upper_bound_tm_rn(int n, double beta);

/// Theorem-level asymptotic constants (c, C) bounding the subcritical
/// supremum times (1-beta/n)[1-(alpha/alpha_n)^{n-1}]^{1-beta/n}.
std::pair<double, double> asymptotic_constants(int n, double beta);

/// Critical/subcritical equivalence factor
/// [(1-(alpha/alpha_n)^{n-1}) / (alpha/alpha_n)^{n-1}]^{(n-beta)/n}.
double theoremB_factor(int n, double beta, double alpha);

/// Evaluates the truncated-log test function at k = 1.5/(1-alpha/alpha_n),
/// validates every step of the asymptotic lower-bound chain, and returns the
/// functional value with its target.
ChainValueEstimate subcritical_lower_estimate(int n, double beta, double alpha,
                                              const Tolerance& tol = {});

/// One row of every constant for (n, beta, optional alpha).
BoundsRow bounds_row(int n, double beta, std::optional<double> alpha = std::nullopt);

}  // namespace tmb

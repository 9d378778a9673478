#pragma once

// Special functions and adaptive quadrature shared by every other module:
// gamma, integer-order incomplete gamma, n-ball geometry, the sharp exponent
// alpha_n, the truncated exponential Phi, and a Gauss-Kronrod integrator for
// finite and exponentially decaying semi-infinite integrands.

#include <functional>
#include <optional>

#include "tmb/errors.hpp"

namespace tmb {

struct Tolerance {
    double rel_tol = 1e-10;
    double abs_tol = 1e-12;
    int max_refinements = 2000;

    void validate() const;
};

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int refinements_used = 0;
};

// For integrals over [a, inf): the caller promises |f(t)| <= scale * exp(-rate * t)
// for t beyond some moderate point, which fixes the truncation horizon.
struct DecayWitness {
    double rate;         // > 0
    double scale = 1.0;  // > 0
};

struct Domain {
    double a = 0.0;
    double b = 0.0;  // ignored when semi_infinite
    bool semi_infinite = false;
    std::optional<DecayWitness> decay;

    static Domain finite(double a, double b) { return {a, b, false, std::nullopt}; }
    static Domain half_line(double a, DecayWitness w) { return {a, 0.0, true, w}; }
};

/// Gamma function, >= 12 significant digits on [0.5, 50].
double gamma_fn(double x);

/// \int_0^k t^m e^{-t} dt for integer m >= 0.
double lower_incomplete_gamma(int m, double k);

/// Volume of the unit ball in R^n.
double unit_ball_volume(int n);

/// Surface measure of the unit sphere in R^n, omega_{n-1} = n v_n.
double sphere_area(int n);

/// Sharp Trudinger-Moser exponent (n v_n^{1/n})^{n/(n-1)}.
double alpha_n(int n);

/// Phi(x) = e^x - sum_{j=0}^{n-2} x^j/j!, evaluated without cancellation.
double phi_truncated_exp(int n, double x);

/// Adaptive Gauss-Kronrod integration over a finite interval or a half line.
QuadratureResult integrate(const std::function<double(double)>& f, const Domain& domain,
                           const Tolerance& tol = {});

/// Convenience wrapper returning just the value.
double integrate_value(const std::function<double(double)>& f, const Domain& domain,
                       const Tolerance& tol = {});

}  // namespace tmb

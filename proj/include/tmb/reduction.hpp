#pragma once

// The Moser substitution |x|^n = R^n e^{-t}, w = n^{(n-1)/n} omega_{n-1}^{1/n} u,
// mapping radial nonincreasing functions on a ball to half-line profiles, with
// the induced integral identities checked by independent quadratures.

#include "tmb/profiles.hpp"

namespace tmb {

struct ReductionCheck {
    double energy_radial = 0.0;
    double energy_halfline = 0.0;
    double functional_radial = 0.0;
    double functional_halfline = 0.0;
    double max_rel_gap = 0.0;
};

/// w(t) = n^{(n-1)/n} omega_{n-1}^{1/n} u(R e^{-t/n}); requires u nonincreasing
/// (validated by sampling) with support inside the ball of radius R.
Profile to_halfline(const RadialFunction& u, double R);

/// Inverse map: u(r) = w(n ln(R/r)) / (n^{(n-1)/n} omega_{n-1}^{1/n}), 0 for r > R.
RadialFunction from_halfline(const Profile& p, int n, double R);

/// omega_{n-1} \int_0^R |u'(r)|^n r^{n-1} dr, evaluated through the exponential
/// substitution so r = 0 needs no special treatment.
double dirichlet_energy_radial(const RadialFunction& u, const Tolerance& tol = {});

/// Same integral restricted to r in [r_lo, r_hi].
double dirichlet_energy_between(const RadialFunction& u, double r_lo, double r_hi,
                                const Tolerance& tol = {});

/// \int_{ball} F(u(|x|)) |x|^{-beta} dx = omega_{n-1} \int_0^R F(u(r)) r^{n-1-beta} dr.
double singular_moment(const RadialFunction& u, double beta,
                       const std::function<double(double)>& F, const Tolerance& tol = {});

/// Same integral restricted to r in [r_lo, r_hi].
double singular_moment_between(const RadialFunction& u, double beta,
                               const std::function<double(double)>& F, double r_lo, double r_hi,
                               const Tolerance& tol = {});

/// Computes Dirichlet energies and exponential functionals on both sides of the
/// reduction independently and reports the worst relative gap.
ReductionCheck reduction_isometry_check(const RadialFunction& u, double R, int n, double beta,
                                        const Tolerance& tol = {});

}  // namespace tmb

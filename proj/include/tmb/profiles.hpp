#pragma once

// Half-line profiles (the admissible class: w(0)=0, wdot >= 0, unit n-energy)
// and radial functions on a ball. Provides the explicit test families --
// the Moser chimney profile, the linear cap profile, the truncated-log radial
// family -- plus a piecewise-linear grid representation used by the direct
// optimizer.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tmb/numerics.hpp"

namespace tmb {

struct Profile {
    std::function<double(double)> w;   // t >= 0 -> w(t)
    std::function<double(double)> dw;  // t >= 0 -> wdot(t)
    // point beyond which wdot vanishes identically (inf if none known)
    double support_end = std::numeric_limits<double>::infinity();
    std::optional<double> closed_form_energy;
    std::vector<double> breakpoints;  // interior kinks, strictly increasing
    std::string family = "custom";
    std::map<std::string, double> parameters;

    double plateau_value() const;  // w at support_end (w(large t) if infinite)
};

struct GridProfile {
    std::vector<double> knots;   // t_0 = 0 < t_1 < ... < t_m
    std::vector<double> slopes;  // one per cell, >= 0
    std::vector<double> w_knots; // cumulative values of w at the knots

    double w(double t) const;
    double dw(double t) const;
    double energy(int n) const;  // exact finite sum of slope^n * dt
    double support_end() const;  // end of the last cell with positive slope
    Profile as_profile() const;
};

struct RadialFunction {
    std::function<double(double)> u;   // r >= 0 -> u(r)
    std::function<double(double)> du;  // r >= 0 -> u'(r) (<= 0)
    int dim = 2;
    double outer_radius = 1.0;          // u == 0 beyond
    double inner_plateau_radius = 0.0;  // u' == 0 inside (0 if unknown)
    std::vector<double> breakpoints;    // radii of kinks
    std::string family = "custom";
    std::map<std::string, double> parameters;
};

/// Moser's three-piece extremizing family on the half line; unit energy.
/// Linear with slope ((n-1)/n)(n-1)^{-1/n} up to t=n, then (t-1)^{(n-1)/n}
/// up to N_n, constant after.
Profile moser_chimney_profile(int n);

/// w = a t capped at a b, with b = 2(2n-1)/(1-beta/n) and a^n b = 1.
Profile linear_cap_profile(int n, double beta);

/// Truncated-logarithm radial family on the ball of measure 1: constant
/// k^{(n-1)/n}(n v_n^{1/n})^{-1} inside radius (e^{-k}/v_n)^{1/n}, logarithmic
/// in between, zero outside radius v_n^{-1/n}. Unit gradient n-energy.
RadialFunction truncated_log_radial(int n, double k);

/// Piecewise-linear profile from knots and per-cell slopes.
GridProfile grid_profile_from_slopes(const std::vector<double>& knots,
                                     const std::vector<double>& slopes);

/// \int_0^inf wdot^n dt: closed form when the profile carries one, else
/// quadrature split at the kinks.
double profile_energy(const Profile& p, int n, const Tolerance& tol = {});

/// As above but always by quadrature (ignores closed_form_energy).
double profile_energy_quadrature(const Profile& p, int n, const Tolerance& tol = {});

/// Closed form for the truncated-log family's n-norm:
/// (1/(v_n n^n)) [e^{-k} k^{n-1} + (1/k) \int_0^k t^n e^{-t} dt].
double truncated_log_norm_pow_n(int n, double k);

}  // namespace tmb

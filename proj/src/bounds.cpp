#include "tmb/bounds.hpp"

#include <cmath>

#include "tmb/functional.hpp"
#include "tmb/profiles.hpp"

namespace tmb {

namespace {

void check_n(int n) {
    if (n < 2) throw DomainError("bounds: n must be >= 2");
}

void check_beta(int n, double beta) {
    if (!(beta >= 0.0) || !(beta < n)) throw DomainError("bounds: beta must be in [0, n)");
}

double linear_constant(int n) { return n >= 4 ? 25.0 * n - 24.0 : 196.0 * n - 195.0; }

}  // namespace

double lower_bound_ball(int n) {
    check_n(n);
    const double nd = n;
    const double ratio = nd / (nd - 1.0);
    return (nd / std::exp(1.0)) * (std::exp(0.25 + 1.0 / (4.0 * (2.0 * nd - 1.0))) - 1.0) +
           (1.0 / std::exp(1.0)) * ((nd - 1.0) * std::exp(std::pow(ratio, nd) - ratio) + 2.0);
}

double lower_bound_singular(int n, double beta) {
    check_n(n);
    check_beta(n, beta);
    const double gamma = 1.0 - beta / n;
    return 2.0 * (2.0 * n - 1.0) / (std::exp(1.0) * gamma) + 1.0 / gamma;
}

double upper_bound_tm(int n) {
    check_n(n);
    return n >= 4 ? 25.0 * n - 24.0 : 36.0 * n - 35.0;
}

double upper_bound_tm_singular(int n, double beta, bool large_n) {
    check_n(n);
    check_beta(n, beta);
    const double gamma = 1.0 - beta / n;
    const double vb = std::pow(unit_ball_volume(n), beta / n);
    if (large_n) return vb * (11.5 * n - 10.5) / gamma;
    return vb * linear_constant(n) / gamma;
}

double upper_bound_stm(int n, double beta, double alpha) {
    check_n(n);
    check_beta(n, beta);
    const double an = alpha_n(n);
    if (!(alpha > 0.0) || !(alpha < an))
        throw DomainError("upper_bound_stm: alpha must be in (0, alpha_n)");
    const double gamma = 1.0 - beta / n;
    const double q = alpha / an;
    const double vb = std::pow(unit_ball_volume(n), beta / n);
    return std::exp(alpha * gamma) * std::pow(1.0 - std::pow(q, n - 1), -gamma) *
           (vb * linear_constant(n) + 24.0) / gamma;
}

double upper_bound_tm_rn(int n, double beta) {
    check_n(n);
    check_beta(n, beta);
    const double gamma = 1.0 - beta / n;
    const double vb = std::pow(unit_ball_volume(n), beta / n);
    return std::exp(6.0 * alpha_n(n) * gamma) *
           (vb * std::pow(2.0, 1.0 / (n - 1.0)) * linear_constant(n) + 24.0) / gamma;
}

std::pair<double, double> asymptotic_constants(int n, double beta) {
    check_n(n);
    check_beta(n, beta);
    const double gamma = 1.0 - beta / n;
    const double vn = unit_ball_volume(n);
    const double c = std::pow(vn * std::pow(static_cast<double>(n), n) * (n - 1.0) /
                                  (4.0 * gamma_fn(n + 1.0)),
                              gamma) *
                     std::pow(vn, beta / n) / (2.0 * std::exp(2.0));
    const double C = std::exp(alpha_n(n) * gamma) * (std::pow(vn, beta / n) * linear_constant(n) + 24.0);
    return {c, C};
}

double theoremB_factor(int n, double beta, double alpha) {
    check_n(n);
    check_beta(n, beta);
    const double an = alpha_n(n);
    if (!(alpha > 0.0) || !(alpha < an))
        throw DomainError("theoremB_factor: alpha must be in (0, alpha_n)");
    const double qp = std::pow(alpha / an, n - 1);
    return std::pow((1.0 - qp) / qp, (n - beta) / n);
}

ChainValueEstimate subcritical_lower_estimate(int n, double beta, double alpha,
                                              const Tolerance& tol) {
    check_n(n);
    check_beta(n, beta);
    const double an = alpha_n(n);
    if (!(alpha > 0.0) || !(alpha < an))
        throw DomainError("subcritical_lower_estimate: alpha must be in (0, alpha_n)");
    const double gamma = 1.0 - beta / n;
    const double q = alpha / an;
    const double vn = unit_ball_volume(n);

    ChainValueEstimate est;
    est.k = 1.5 / (1.0 - q);  // midpoint of the admissible window for (q-1)k
    const double k = est.k;

    // window -2 < (q-1)k < -1
    const double window_val = (q - 1.0) * k;
    const bool window_ok = window_val > -2.0 && window_val < -1.0;
    est.checks.emplace_back("window_minus2_minus1", window_ok);

    // Phi must carry at least half of the exponential at the plug-in argument
    const double x = q * gamma * k;
    const bool phi_half = phi_truncated_exp(n, x) > 0.5 * std::exp(x);
    est.checks.emplace_back("phi_exceeds_half_exp", phi_half);
    if (!phi_half)
        throw PreconditionError(
            "subcritical_lower_estimate: Phi(x) > exp(x)/2 fails at x = " + std::to_string(x) +
            " (alpha too far from alpha_n)");

    // geometric-sum ratio (1-q^{n-1})/(1-q) >= (n-1)/2
    const bool ratio_ok =
        (1.0 - std::pow(q, n - 1)) / (1.0 - q) >= (n - 1.0) / 2.0 - 1e-12;
    est.checks.emplace_back("geometric_sum_ratio", ratio_ok);

    // norm bound ||u_k||_n^n <= 2 Gamma(n+1)/(v_n n^n k)
    const double norm_n = truncated_log_norm_pow_n(n, k);
    const bool norm_ok =
        norm_n <= 2.0 * gamma_fn(n + 1.0) / (vn * std::pow(static_cast<double>(n), n) * k);
    est.checks.emplace_back("norm_upper_bound", norm_ok);

    RadialFunction uk = truncated_log_radial(n, k);
    FunctionalParams params{n, beta, alpha};
    est.value = stm_functional(uk, params, tol);

    const auto [c, C] = asymptotic_constants(n, beta);
    est.target = c / (gamma * std::pow(1.0 - std::pow(q, n - 1), gamma));
    est.checks.emplace_back("value_above_target", est.value >= est.target);

    est.holds = true;
    for (const auto& [name, ok] : est.checks) est.holds = est.holds && ok;
    return est;
}

BoundsRow bounds_row(int n, double beta, std::optional<double> alpha) {
    check_n(n);
    check_beta(n, beta);
    BoundsRow row;
    row.n = n;
    row.beta = beta;
    row.alpha = alpha;
    row.lower_tm_ball = lower_bound_ball(n);
    row.upper_tm = upper_bound_tm(n);
    const double vb = std::pow(unit_ball_volume(n), beta / n);
    row.lower_tm_sing = vb * lower_bound_singular(n, beta);
    row.upper_tm_sing = upper_bound_tm_singular(n, beta, false);
    row.upper_tm_sing_large_n = upper_bound_tm_singular(n, beta, true);
    row.upper_tm_rn = upper_bound_tm_rn(n, beta);
    const auto [c, C] = asymptotic_constants(n, beta);
    row.c_asym = c;
    row.C_asym = C;
    if (alpha) {
        row.upper_stm = upper_bound_stm(n, beta, *alpha);
        row.thmB_factor = theoremB_factor(n, beta, *alpha);
    }
    return row;
}

}  // namespace tmb

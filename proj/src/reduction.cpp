#include "tmb/reduction.hpp"

#include <algorithm>
#include <cmath>

#include "tmb/functional.hpp"

namespace tmb {

namespace {

double reduction_constant(int n) {
    // n^{(n-1)/n} omega_{n-1}^{1/n}
    return std::pow(static_cast<double>(n), (n - 1.0) / n) * std::pow(sphere_area(n), 1.0 / n);
}

void validate_nonincreasing(const RadialFunction& u) {
    const double R = u.outer_radius;
    double prev = u.u(0.0);
    const int samples = 1000;
    for (int i = 1; i <= samples; ++i) {
        const double r = R * i / samples;
        const double cur = u.u(r);
        if (cur > prev + 1e-12 * std::max(1.0, std::abs(prev)))
            throw ValidationError("to_halfline: radial function increases near r = " +
                                  std::to_string(r));
        prev = cur;
    }
}

// integrate g over [s_lo, inf) by blocks until the contribution settles
double integrate_until_settled(const std::function<double(double)>& g, double s_lo,
                               double seed_total, const Tolerance& tol) {
    double total = seed_total;
    double a = s_lo;
    double len = std::max(10.0, 0.5 * std::abs(a));
    for (int block = 0; block < 64; ++block) {
        const double piece = integrate_value(g, Domain::finite(a, a + len), tol);
        total += piece;
        a += len;
        len *= 2.0;
        if (std::abs(piece) <= std::max(tol.abs_tol, 0.5 * tol.rel_tol * std::abs(total)))
            return total;
    }
    throw ConvergenceError("radial quadrature tail did not settle", total);
}

}  // namespace

Profile to_halfline(const RadialFunction& u, double R) {
    if (!(R > 0.0)) throw DomainError("to_halfline: R must be > 0");
    const int n = u.dim;
    validate_nonincreasing(u);
    const double C = reduction_constant(n);
    const auto eval_u = u.u;
    const auto eval_du = u.du;

    Profile p;
    p.w = [=](double t) {
        if (t <= 0.0) return C * eval_u(R);
        return C * eval_u(R * std::exp(-t / n));
    };
    p.dw = [=](double t) {
        if (t < 0.0) return 0.0;
        const double r = R * std::exp(-t / n);
        return -C * (r / n) * eval_du(r);
    };
    if (u.inner_plateau_radius > 0.0 && u.inner_plateau_radius < R)
        p.support_end = n * std::log(R / u.inner_plateau_radius);
    for (auto it = u.breakpoints.rbegin(); it != u.breakpoints.rend(); ++it)
        if (*it > 0.0 && *it < R) p.breakpoints.push_back(n * std::log(R / *it));
    std::sort(p.breakpoints.begin(), p.breakpoints.end());
    p.family = "reduced:" + u.family;
    return p;
}

RadialFunction from_halfline(const Profile& p, int n, double R) {
    if (n < 2) throw DomainError("from_halfline: n must be >= 2");
    if (!(R > 0.0)) throw DomainError("from_halfline: R must be > 0");
    const double C = reduction_constant(n);
    const double t_cap = std::isfinite(p.support_end) ? p.support_end : 0.0;
    const auto eval_w = p.w;
    const auto eval_dw = p.dw;
    const bool finite_support = std::isfinite(p.support_end);

    RadialFunction u;
    u.u = [=](double r) {
        if (r >= R) return 0.0;
        if (r <= 0.0) return (finite_support ? eval_w(t_cap) : eval_w(1e6)) / C;
        double t = n * std::log(R / r);
        if (finite_support && t > t_cap) t = t_cap;
        return eval_w(t) / C;
    };
    u.du = [=](double r) {
        if (r >= R || r <= 0.0) return 0.0;
        const double t = n * std::log(R / r);
        if (finite_support && t >= t_cap) return 0.0;
        return -eval_dw(t) * n / (r * C);
    };
    u.dim = n;
    u.outer_radius = R;
    if (finite_support) u.inner_plateau_radius = R * std::exp(-p.support_end / n);
    for (auto it = p.breakpoints.rbegin(); it != p.breakpoints.rend(); ++it)
        u.breakpoints.push_back(R * std::exp(-*it / n));
    std::sort(u.breakpoints.begin(), u.breakpoints.end());
    u.family = "radial:" + p.family;
    return u;
}

double singular_moment_between(const RadialFunction& u, double beta,
                               const std::function<double(double)>& F, double r_lo, double r_hi,
                               const Tolerance& tol) {
    const int n = u.dim;
    if (!(beta < n)) throw DomainError("singular_moment: beta must be < n");
    if (!(beta >= 0.0)) throw DomainError("singular_moment: beta must be >= 0");
    const double R = u.outer_radius;
    r_hi = std::min(r_hi, R);
    if (!(r_lo >= 0.0) || !(r_lo <= r_hi)) throw DomainError("singular_moment: bad radius window");
    if (r_lo == r_hi) return 0.0;

    const double om = sphere_area(n);
    const double gamma = 1.0 - beta / n;
    // r = R e^{-s/n}: the weight becomes a plain exponential in s
    auto g = [&, n](double s) {
        const double r = R * std::exp(-s / n);
        return om * std::pow(R, n - beta) / n * F(u.u(r)) * std::exp(-gamma * s);
    };
    const double s_lo = n * std::log(R / r_hi);
    std::vector<double> cuts = {s_lo};
    for (auto it = u.breakpoints.rbegin(); it != u.breakpoints.rend(); ++it) {
        if (*it <= 0.0 || *it >= R) continue;
        const double s = n * std::log(R / *it);
        if (s > cuts.back() && (r_lo == 0.0 || *it > r_lo)) cuts.push_back(s);
    }
    double total = 0.0;
    if (r_lo > 0.0) {
        const double s_hi = n * std::log(R / r_lo);
        if (s_hi > cuts.back()) cuts.push_back(s_hi);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            total += integrate_value(g, Domain::finite(cuts[i], cuts[i + 1]), tol);
        return total;
    }
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate_value(g, Domain::finite(cuts[i], cuts[i + 1]), tol);
    return integrate_until_settled(g, cuts.back(), total, tol);
}

double singular_moment(const RadialFunction& u, double beta,
                       const std::function<double(double)>& F, const Tolerance& tol) {
    return singular_moment_between(u, beta, F, 0.0, u.outer_radius, tol);
}

double dirichlet_energy_between(const RadialFunction& u, double r_lo, double r_hi,
                                const Tolerance& tol) {
    const int n = u.dim;
    const double R = u.outer_radius;
    if (!std::isfinite(R)) throw ValidationError("dirichlet_energy_radial: infinite support");
    r_hi = std::min(r_hi, R);
    if (!(r_lo >= 0.0) || !(r_lo <= r_hi))
        throw DomainError("dirichlet_energy_between: bad radius window");
    if (r_lo == r_hi) return 0.0;
    const double om = sphere_area(n);
    auto g = [&, n](double s) {
        const double r = R * std::exp(-s / n);
        return om * std::pow(R, n) / n * std::pow(std::abs(u.du(r)), n) * std::exp(-s);
    };
    const double s_lo = n * std::log(R / r_hi);
    std::vector<double> cuts = {s_lo};
    for (auto it = u.breakpoints.rbegin(); it != u.breakpoints.rend(); ++it)
        if (*it > r_lo && *it < r_hi) {
            const double s = n * std::log(R / *it);
            if (s > cuts.back()) cuts.push_back(s);
        }
    double total = 0.0;
    if (r_lo > 0.0) {
        const double s_hi = n * std::log(R / r_lo);
        if (s_hi > cuts.back()) cuts.push_back(s_hi);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            total += integrate_value(g, Domain::finite(cuts[i], cuts[i + 1]), tol);
        return total;
    }
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate_value(g, Domain::finite(cuts[i], cuts[i + 1]), tol);
    if (u.inner_plateau_radius > 0.0) {
        const double s_end = n * std::log(R / u.inner_plateau_radius);
        if (s_end > cuts.back())
            total += integrate_value(g, Domain::finite(cuts.back(), s_end), tol);
        return total;
    }
    return integrate_until_settled(g, cuts.back(), total, tol);
}

double dirichlet_energy_radial(const RadialFunction& u, const Tolerance& tol) {
    return dirichlet_energy_between(u, 0.0, u.outer_radius, tol);
}

ReductionCheck reduction_isometry_check(const RadialFunction& u, double R, int n, double beta,
                                        const Tolerance& tol) {
    if (n < 2) throw DomainError("reduction_isometry_check: n must be >= 2");
    if (!(beta >= 0.0) || !(beta < n))
        throw DomainError("reduction_isometry_check: beta must be in [0, n)");
    const double gamma = 1.0 - beta / n;
    const double an = alpha_n(n);
    const double vn = unit_ball_volume(n);
    const double p_exp = static_cast<double>(n) / (n - 1);

    ReductionCheck chk;
    chk.energy_radial = dirichlet_energy_radial(u, tol);
    Profile w = to_halfline(u, R);
    chk.energy_halfline = profile_energy_quadrature(w, n, tol);

    auto F = [&](double uval) {
        return std::exp(gamma * an * std::pow(std::max(uval, 0.0), p_exp));
    };
    const double ball_measure = vn * std::pow(R, n);
    chk.functional_radial =
        singular_moment(u, beta, F, tol) / std::pow(ball_measure, gamma);
    FunctionalParams params{n, beta, an};
    chk.functional_halfline = std::pow(vn, beta / n) * moser_functional(w, params, tol);

    auto rel_gap = [](double a, double b) {
        return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
    };
    chk.max_rel_gap = std::max(rel_gap(chk.energy_radial, chk.energy_halfline),
                               rel_gap(chk.functional_radial, chk.functional_halfline));
    return chk;
}

}  // namespace tmb

#include "tmb/profiles.hpp"

#include <algorithm>
#include <cmath>

namespace tmb {

double Profile::plateau_value() const {
    if (std::isfinite(support_end)) return w(support_end);
    double t = breakpoints.empty() ? 1.0 : breakpoints.back() + 1.0;
    return w(t + 100.0);
}

double GridProfile::w(double t) const {
    if (t <= 0.0) return 0.0;
    if (t >= knots.back()) return w_knots.back();
    auto it = std::upper_bound(knots.begin(), knots.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - knots.begin()) - 1;
    return w_knots[i] + slopes[i] * (t - knots[i]);
}

double GridProfile::dw(double t) const {
    if (t < 0.0 || t >= knots.back()) return 0.0;
    auto it = std::upper_bound(knots.begin(), knots.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - knots.begin()) - (it == knots.begin() ? 0 : 1);
    return slopes[std::min(i, slopes.size() - 1)];
}

double GridProfile::energy(int n) const {
    double e = 0.0;
    for (std::size_t i = 0; i < slopes.size(); ++i)
        e += std::pow(slopes[i], n) * (knots[i + 1] - knots[i]);
    return e;
}

double GridProfile::support_end() const {
    for (std::size_t i = slopes.size(); i-- > 0;)
        if (slopes[i] > 0.0) return knots[i + 1];
    return 0.0;
}

Profile GridProfile::as_profile() const {
    Profile p;
    GridProfile copy = *this;
    p.w = [copy](double t) { return copy.w(t); };
    p.dw = [copy](double t) { return copy.dw(t); };
    p.support_end = support_end();
    p.closed_form_energy = std::nullopt;  // energy depends on n; exact sum via GridProfile
    p.breakpoints.assign(knots.begin() + 1, knots.end() - (knots.size() > 1 ? 1 : 0));
    p.family = "grid";
    return p;
}

Profile moser_chimney_profile(int n) {
    if (n < 2) throw DomainError("moser_chimney_profile: n must be >= 2");
    const double nd = n;
    const double ratio = nd / (nd - 1.0);
    const double slope1 = ((nd - 1.0) / nd) * std::pow(nd - 1.0, -1.0 / nd);
    const double Nn = (nd - 1.0) * std::exp(std::pow(ratio, nd) - ratio) + 1.0;
    const double plateau = std::pow(Nn - 1.0, (nd - 1.0) / nd);

    Profile p;
    p.w = [=](double t) {
        if (t <= 0.0) return 0.0;
        if (t <= nd) return slope1 * t;
        if (t <= Nn) return std::pow(t - 1.0, (nd - 1.0) / nd);
        return plateau;
    };
    p.dw = [=](double t) {
        if (t < 0.0 || t >= Nn) return 0.0;
        if (t <= nd) return slope1;
        return ((nd - 1.0) / nd) * std::pow(t - 1.0, -1.0 / nd);
    };
    p.support_end = Nn;
    p.closed_form_energy = 1.0;
    p.breakpoints = {nd, Nn};
    p.family = "chimney";
    p.parameters = {{"n", nd}, {"N_n", Nn}};
    return p;
}

Profile linear_cap_profile(int n, double beta) {
    if (n < 2) throw DomainError("linear_cap_profile: n must be >= 2");
    if (!(beta >= 0.0) || !(beta < n)) throw DomainError("linear_cap_profile: beta must be in [0, n)");
    const double gamma = 1.0 - beta / n;
    const double b = 2.0 * (2.0 * n - 1.0) / gamma;
    const double a = std::pow(b, -1.0 / n);

    Profile p;
    p.w = [=](double t) {
        if (t <= 0.0) return 0.0;
        return a * std::min(t, b);
    };
    p.dw = [=](double t) { return (t >= 0.0 && t < b) ? a : 0.0; };
    p.support_end = b;
    p.closed_form_energy = 1.0;  // a^n b = 1 by construction
    p.breakpoints = {b};
    p.family = "cap";
    p.parameters = {{"n", static_cast<double>(n)}, {"beta", beta}, {"a", a}, {"b", b}};
    return p;
}

RadialFunction truncated_log_radial(int n, double k) {
    if (n < 2) throw DomainError("truncated_log_radial: n must be >= 2");
    if (!(k > 0.0)) throw DomainError("truncated_log_radial: k must be > 0");
    const double vn = unit_ball_volume(n);
    const double r_inner = std::pow(std::exp(-k) / vn, 1.0 / n);
    const double r_outer = std::pow(vn, -1.0 / n);
    const double top = std::pow(k, (n - 1.0) / n) / (n * std::pow(vn, 1.0 / n));

    RadialFunction u;
    u.u = [=](double r) {
        if (r <= r_inner) return top;
        if (r >= r_outer) return 0.0;
        return top * (-std::log(vn * std::pow(r, n))) / k;
    };
    u.du = [=](double r) {
        if (r <= r_inner || r >= r_outer) return 0.0;
        return -top * n / (k * r);
    };
    u.dim = n;
    u.outer_radius = r_outer;
    u.inner_plateau_radius = r_inner;
    u.breakpoints = {r_inner, r_outer};
    u.family = "truncated_log";
    u.parameters = {{"n", static_cast<double>(n)}, {"k", k}};
    return u;
}

GridProfile grid_profile_from_slopes(const std::vector<double>& knots,
                                     const std::vector<double>& slopes) {
    if (knots.size() < 2) throw ValidationError("grid_profile_from_slopes: need at least two knots");
    if (knots.front() != 0.0) throw ValidationError("grid_profile_from_slopes: knots must start at 0");
    for (std::size_t i = 1; i < knots.size(); ++i)
        if (!(knots[i] > knots[i - 1]))
            throw ValidationError("grid_profile_from_slopes: knots must be strictly increasing");
    if (slopes.size() != knots.size() - 1)
        throw ValidationError("grid_profile_from_slopes: one slope per cell required");
    for (double s : slopes)
        if (!(s >= 0.0)) throw ValidationError("grid_profile_from_slopes: slopes must be >= 0");

    GridProfile g;
    g.knots = knots;
    g.slopes = slopes;
    g.w_knots.resize(knots.size());
    g.w_knots[0] = 0.0;
    for (std::size_t i = 0; i < slopes.size(); ++i)
        g.w_knots[i + 1] = g.w_knots[i] + slopes[i] * (knots[i + 1] - knots[i]);
    return g;
}

double profile_energy_quadrature(const Profile& p, int n, const Tolerance& tol) {
    if (n < 2) throw DomainError("profile_energy: n must be >= 2");
    auto f = [&](double t) { return std::pow(std::max(p.dw(t), 0.0), n); };
    std::vector<double> cuts = {0.0};
    for (double b : p.breakpoints)
        if (b > cuts.back()) cuts.push_back(b);
    double total = 0.0;
    if (std::isfinite(p.support_end)) {
        if (p.support_end > cuts.back()) cuts.push_back(p.support_end);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
            total += integrate_value(f, Domain::finite(cuts[i], cuts[i + 1]), tol);
        return total;
    }
    // no known support end: extend in blocks until the energy stops moving
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate_value(f, Domain::finite(cuts[i], cuts[i + 1]), tol);
    double a = cuts.back();
    double len = std::max(10.0, a);
    for (int block = 0; block < 60; ++block) {
        const double piece = integrate_value(f, Domain::finite(a, a + len), tol);
        total += piece;
        a += len;
        len *= 2.0;
        if (std::abs(piece) <= std::max(tol.abs_tol, 0.5 * tol.rel_tol * std::abs(total)))
            return total;
    }
    throw ConvergenceError("profile_energy: wdot^n tail did not settle", total);
}

double profile_energy(const Profile& p, int n, const Tolerance& tol) {
    if (p.closed_form_energy) return *p.closed_form_energy;
    return profile_energy_quadrature(p, n, tol);
}

double truncated_log_norm_pow_n(int n, double k) {
    if (n < 2) throw DomainError("truncated_log_norm_pow_n: n must be >= 2");
    if (!(k > 0.0)) throw DomainError("truncated_log_norm_pow_n: k must be > 0");
    const double vn = unit_ball_volume(n);
    return (std::exp(-k) * std::pow(k, n - 1) + lower_incomplete_gamma(n, k) / k) /
           (vn * std::pow(static_cast<double>(n), n));
}

}  // namespace tmb

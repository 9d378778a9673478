#include "tmb/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace tmb {

namespace {

constexpr double kPi = 3.14159265358979323846264338328;
constexpr double kSqrtPi = 1.77245385090551602729816748334;

// Lanczos g=7, 9-term coefficients (Godfrey). Relative error ~1e-15 for x > 0.
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

double gamma_lanczos(double x) {
    // valid for x >= 0.5; callers handle reflection
    const double z = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

bool nearly_integer(double x, double& rounded) {
    rounded = std::round(x);
    return std::abs(x - rounded) < 1e-13 * std::max(1.0, std::abs(x));
}

}  // namespace

void Tolerance::validate() const {
    if (!(rel_tol > 0.0)) throw DomainError("Tolerance: rel_tol must be > 0");
    if (!(abs_tol >= 0.0)) throw DomainError("Tolerance: abs_tol must be >= 0");
    if (max_refinements < 1) throw DomainError("Tolerance: max_refinements must be >= 1");
}

double gamma_fn(double x) {
    if (!(x > 0.0)) throw DomainError("gamma_fn: x must be > 0");
    double r;
    if (nearly_integer(x, r) && r >= 1.0 && r <= 171.0) {
        double g = 1.0;
        for (double k = 2.0; k < r; ++k) g *= k;
        return g;
    }
    if (nearly_integer(x - 0.5, r) && r >= 0.0 && r <= 170.0) {
        // Gamma(m + 1/2) = (2m-1)!! / 2^m * sqrt(pi)
        double g = kSqrtPi;
        for (double k = 0.5; k < x - 0.25; k += 1.0) g *= k;
        return g;
    }
    if (x < 0.5) {
        // reflection keeps the Lanczos argument in its sweet spot
        return kPi / (std::sin(kPi * x) * gamma_lanczos(1.0 - x));
    }
    return gamma_lanczos(x);
}

double lower_incomplete_gamma(int m, double k) {
    if (m < 0) throw DomainError("lower_incomplete_gamma: m must be >= 0");
    if (k < 0.0) throw DomainError("lower_incomplete_gamma: k must be >= 0");
    if (k == 0.0) return 0.0;
    const double mfac = gamma_fn(static_cast<double>(m) + 1.0);
    if (k <= m + 1.0) {
        // m! e^{-k} sum_{j>m} k^j/j!  -- no cancellation for small k
        double term = std::pow(k, m + 1) / (m + 1.0);
        for (int j = 1; j <= m; ++j) term /= j;  // k^{m+1}/(m+1)!
        double sum = 0.0;
        int j = m + 1;
        while (true) {
            sum += term;
            ++j;
            term *= k / j;
            if (term < 1e-18 * sum && j > m + 8) break;
        }
        return mfac * std::exp(-k) * sum;
    }
    // m!(1 - e^{-k} sum_{j<=m} k^j/j!)
    double partial = 1.0, term = 1.0;
    for (int j = 1; j <= m; ++j) {
        term *= k / j;
        partial += term;
    }
    return mfac * (1.0 - std::exp(-k) * partial);
}

double unit_ball_volume(int n) {
    if (n < 1) throw DomainError("unit_ball_volume: n must be >= 1");
    return std::pow(kPi, 0.5 * n) / gamma_fn(0.5 * n + 1.0);
}

double sphere_area(int n) {
    if (n < 1) throw DomainError("sphere_area: n must be >= 1");
    return n * unit_ball_volume(n);
}

double alpha_n(int n) {
    if (n < 2) throw DomainError("alpha_n: n must be >= 2");
    const double vn = unit_ball_volume(n);
    return std::pow(n * std::pow(vn, 1.0 / n), static_cast<double>(n) / (n - 1));
}

double phi_truncated_exp(int n, double x) {
    if (n < 2) throw DomainError("phi_truncated_exp: n must be >= 2");
    if (x < 0.0) throw DomainError("phi_truncated_exp: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < static_cast<double>(n)) {
        // tail series sum_{j>=n-1} x^j/j!; subtraction would cancel for small x
        double term = std::pow(x, n - 1);
        for (int j = 2; j <= n - 1; ++j) term /= j;  // x^{n-1}/(n-1)!
        double sum = 0.0;
        int j = n - 1;
        while (true) {
            sum += term;
            ++j;
            term *= x / j;
            if (term < 1e-18 * sum && j > n + 8) break;
        }
        return sum;
    }
    double partial = 1.0, term = 1.0;
    for (int j = 1; j <= n - 2; ++j) {
        term *= x / j;
        partial += term;
    }
    return std::exp(x) - partial;
}

namespace {

// Gauss-Kronrod 7/15 node pair on [-1, 1].
constexpr std::array<double, 8> kKronrodX = {
    0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
    0.586087235467691, 0.405845151377397, 0.207784955007898, 0.0,
};
constexpr std::array<double, 8> kKronrodW = {
    0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
    0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728,
};
constexpr std::array<double, 4> kGaussW = {
    0.129484966168870, 0.279705391489277, 0.381830050505119, 0.417959183673469,
};

struct GkEstimate {
    double value;
    double error;
};

GkEstimate gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fc = f(c);
    if (!std::isfinite(fc)) throw EvaluationError("integrate: non-finite sample");
    double kron = kKronrodW[7] * fc;
    double gauss = kGaussW[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double fl = f(c - h * kKronrodX[i]);
        const double fr = f(c + h * kKronrodX[i]);
        if (!std::isfinite(fl) || !std::isfinite(fr))
            throw EvaluationError("integrate: non-finite sample");
        kron += kKronrodW[i] * (fl + fr);
        if (i % 2 == 1) gauss += kGaussW[i / 2] * (fl + fr);
    }
    const double value = kron * h;
    const double err = std::abs((kron - gauss) * h);
    // standard Kronrod error sharpening
    return {value, std::pow(200.0 * err, 1.5) < err ? std::pow(200.0 * err, 1.5) : err};
}

struct Segment {
    double a, b, value, error;
};

QuadratureResult adaptive(const std::function<double(double)>& f, double a, double b,
                          const Tolerance& tol) {
    std::vector<Segment> segs;
    GkEstimate e0 = gk15(f, a, b);
    segs.push_back({a, b, e0.value, e0.error});
    int refinements = 0;
    while (true) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        double worst_err = -1.0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err += segs[i].error;
            if (segs[i].error > worst_err) {
                worst_err = segs[i].error;
                worst = i;
            }
        }
        const double target = std::max(tol.abs_tol, tol.rel_tol * std::abs(total));
        if (err <= target)
            return {total, err, refinements};
        if (refinements >= tol.max_refinements)
            throw ConvergenceError("integrate: refinement budget exhausted", total);
        const Segment s = segs[worst];
        const double m = 0.5 * (s.a + s.b);
        if (m <= s.a || m >= s.b)
            throw ConvergenceError("integrate: interval too small to split", total);
        GkEstimate le = gk15(f, s.a, m);
        GkEstimate re = gk15(f, m, s.b);
        segs[worst] = {s.a, m, le.value, le.error};
        segs.push_back({m, s.b, re.value, re.error});
        ++refinements;
    }
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, const Domain& domain,
                           const Tolerance& tol) {
    tol.validate();
    if (domain.semi_infinite) {
        if (!domain.decay)
            throw ValidationError("integrate: half-line domain needs a decay witness");
        const double lambda = domain.decay->rate;
        const double scale = domain.decay->scale;
        if (!(lambda > 0.0) || !(scale > 0.0))
            throw ValidationError("integrate: decay witness must have positive rate and scale");
        // Truncate where the tail bound scale*e^{-lambda T}/lambda dips below abs_tol
        // (or a tiny floor so rel_tol-only callers still terminate).
        const double floor_tol = std::max(tol.abs_tol, 1e-300);
        double T = domain.a + std::max(1.0, std::log(std::max(scale / (lambda * floor_tol), 1.0)) / lambda);
        T = std::min(T, domain.a + 1e6);
        QuadratureResult r = adaptive(f, domain.a, T, tol);
        r.error_estimate += scale * std::exp(-lambda * (T - 0.0)) / lambda;
        return r;
    }
    if (!(domain.a < domain.b)) {
        if (domain.a == domain.b) return {0.0, 0.0, 0};
        throw ValidationError("integrate: domain must satisfy a <= b");
    }
    return adaptive(f, domain.a, domain.b, tol);
}

double integrate_value(const std::function<double(double)>& f, const Domain& domain,
                       const Tolerance& tol) {
    return integrate(f, domain, tol).value;
}

}  // namespace tmb

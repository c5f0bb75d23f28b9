#include "cohpoly/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cohpoly/specfun.hpp"

namespace cohpoly {

namespace {

// Taylor coefficients in tau = t - 1 of U(t) (from tau^1) and of U / (t^2 - 1) (from tau^0).
constexpr std::array<double, 8> kUSeries = {
    2.0,
    1.0 / 5.0,
    -4.0 / 175.0,
    37.0 / 7875.0,
    -3698.0 / 3031875.0,
    71237.0 / 197071875.0,
    -7255672.0 / 62077640625.0,
    30316679.0 / 753799921875.0,
};
constexpr std::array<double, 8> kRatioSeries = {
    1.0,
    -2.0 / 5.0,
    33.0 / 175.0,
    -724.0 / 7875.0,
    137521.0 / 3031875.0,
    -914.0 / 40625.0,
    694697869.0 / 62077640625.0,
    -29418551056.0 / 5276599453125.0,
};

template <std::size_t K>
double horner(const std::array<double, K>& c, double x) {
    double acc = 0.0;
    for (std::size_t i = K; i-- > 0;) acc = acc * x + c[i];
    return acc;
}

void require_order(const Params& p, std::int64_t n) {
    if (n < 1) throw std::domain_error("asymptotic formulas need n >= 1");
    if (p.big_n(n) <= 0.0) throw std::domain_error("asymptotic formulas need N = n + beta - 1 > 0");
}

// N t^2 + (alpha^2 - 1/4) ln(N t^2) / (4 N t^2), shared by all three formulas.
double log_gaussian_part(const Params& p, double big_n, double t) {
    const double nt2 = big_n * t * t;
    const double a2 = p.alpha() * p.alpha() - 0.25;
    return nt2 + a2 * std::log(nt2) / (4.0 * nt2);
}

// ln of (4e)^{-N/2} gamma_n N^{n/2} z^{-(beta-3/2)}, the common factor of the outer and inner formulas.
double log_region_base(const Params& p, std::int64_t n, double z) {
    const double big_n = p.big_n(n);
    return -0.5 * big_n * (2.0 * std::numbers::ln2 + 1.0) + log_gamma_n(p, n) +
           0.5 * static_cast<double>(n) * std::log(big_n) - (p.beta() - 1.5) * std::log(z);
}

double neumaier_sum(double sum, double& comp, double term) {
    const double t = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
        comp += (sum - t) + term;
    } else {
        comp += (term - t) + sum;
    }
    return t;
}

}  // namespace

namespace detail {

UValue u_map_series(double t) {
    const double tau = t - 1.0;
    UValue out;
    out.t = t;
    out.u = tau * horner(kUSeries, tau);
    out.envelope = std::pow(horner(kRatioSeries, tau), 0.25);
    return out;
}

UValue u_map_closed(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("u_map: t must be positive and finite");
    UValue out;
    out.t = t;
    if (t == 1.0) {
        out.u = 0.0;
        out.envelope = 1.0;
        return out;
    }
    // (t - 1)(t + 1) keeps t^2 - 1 accurate near the turning point.
    const double t2m1 = (t - 1.0) * (t + 1.0);
    if (t > 1.0) {
        const double s = std::sqrt(t2m1);
        const double f = t * s - std::acosh(t);
        out.u = std::cbrt(1.5 * f * 1.5 * f);
    } else {
        const double s = std::sqrt(-t2m1);
        const double g = std::acos(t) - t * s;
        out.u = -std::cbrt(1.5 * g * 1.5 * g);
    }
    out.envelope = std::pow(out.u / t2m1, 0.25);
    return out;
}

}  // namespace detail

UValue u_map(double t) {
    if (!(t > 0.0) || !std::isfinite(t)) throw std::domain_error("u_map: t must be positive and finite");
    if (std::abs(t - 1.0) < kTurningWindow) return detail::u_map_series(t);
    return detail::u_map_closed(t);
}

Approximation airy_uniform(const Params& p, std::int64_t n, double t) {
    require_order(p, n);
    if (!(t >= kRegionDelta) || !std::isfinite(t)) {
        throw std::domain_error("airy_uniform: t must be >= " + std::to_string(kRegionDelta));
    }
    const double big_n = p.big_n(n);
    const double a = p.alpha();
    const double b = p.beta();
    const UValue uv = u_map(t);
    const double log_const = log_k_n(p, n) + 0.25 * std::log(std::numbers::pi) +
                             0.5 * (specfun::log_gamma(b + a) + specfun::log_gamma(b - a) -
                                    specfun::log_gamma(b + 0.5));
    const double log_pref = log_const + log_gaussian_part(p, big_n, t) -
                            (b - 1.5) * std::log(2.0 * std::sqrt(big_n) * t) + std::log(uv.envelope) +
                            std::log(big_n) / 6.0;
    const double n23 = std::cbrt(big_n * big_n);
    const specfun::ScaledAi ai = specfun::ai_scaled(n23 * uv.u);
    const double amp = std::max(std::abs(ai.ai), std::abs(ai.ai_prime) / std::cbrt(big_n));
    Approximation out;
    out.value = ai.ai == 0.0 ? ScaledReal{}
                             : ScaledReal::from_log(ai.ai > 0 ? 1 : -1,
                                                    log_pref + ai.log_scale + std::log(std::abs(ai.ai)));
    out.envelope = ScaledReal::from_log(1, log_pref + ai.log_scale + std::log(amp));
    return out;
}

Approximation outer_formula(const Params& p, std::int64_t n, double z) {
    require_order(p, n);
    if (!(z >= 1.0 + kRegionDelta) || !std::isfinite(z)) {
        throw std::domain_error("outer_formula: z must be >= " + std::to_string(1.0 + kRegionDelta));
    }
    const double big_n = p.big_n(n);
    const double a2 = p.alpha() * p.alpha() - 0.25;
    const double nz2 = big_n * z * z;
    const double s = std::sqrt((z - 1.0) * (z + 1.0));
    // N z^2 + N (acosh z - z s) = N z / (z + s) + N acosh z avoids cancelling two large terms.
    const double log_value = log_region_base(p, n, z) + big_n * z / (z + s) + big_n * std::acosh(z) +
                             a2 * std::log(nz2) / (4.0 * nz2) - 0.25 * std::log((z - 1.0) * (z + 1.0));
    Approximation out;
    out.value = ScaledReal::from_log(1, log_value);
    out.envelope = out.value;
    return out;
}

double inner_phase(const Params& p, std::int64_t n, double z) {
    const double big_n = p.big_n(n);
    return big_n * (z * std::sqrt((1.0 - z) * (1.0 + z)) - std::acos(z)) + 0.25 * std::numbers::pi;
}

Approximation inner_formula(const Params& p, std::int64_t n, double z) {
    require_order(p, n);
    if (!(z >= kRegionDelta && z <= 1.0 - kRegionDelta)) {
        throw std::domain_error("inner_formula: z must lie in [" + std::to_string(kRegionDelta) + ", " +
                                std::to_string(1.0 - kRegionDelta) + "]");
    }
    const double big_n = p.big_n(n);
    const double log_amp = log_region_base(p, n, z) + log_gaussian_part(p, big_n, z) -
                           0.25 * std::log((1.0 - z) * (1.0 + z)) + std::numbers::ln2;
    const double c = std::cos(inner_phase(p, n, z));
    Approximation out;
    out.envelope = ScaledReal::from_log(1, log_amp);
    out.value = c == 0.0 ? ScaledReal{} : ScaledReal::from_log(c > 0 ? 1 : -1, log_amp + std::log(std::abs(c)));
    return out;
}

double inner_phase_point(const Params& p, std::int64_t n, double t, double offset) {
    require_order(p, n);
    const double lo_edge = kRegionDelta;
    const double hi_edge = 1.0 - kRegionDelta;
    const double t0 = std::clamp(t, lo_edge, hi_edge);
    const double pi = std::numbers::pi;
    const double f_lo = inner_phase(p, n, lo_edge) - offset;
    const double f_hi = inner_phase(p, n, hi_edge) - offset;
    // The phase is strictly increasing in z, so each target k pi has at most one root.
    const auto solve = [&](double target) {
        double lo = lo_edge;
        double hi = hi_edge;
        for (int it = 0; it < 200 && hi - lo > 4.0 * std::numeric_limits<double>::epsilon(); ++it) {
            const double mid = 0.5 * (lo + hi);
            if (inner_phase(p, n, mid) - offset < target) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        return 0.5 * (lo + hi);
    };
    const double k0 = std::round((inner_phase(p, n, t0) - offset) / pi);
    double best = std::numeric_limits<double>::quiet_NaN();
    for (double k = k0 - 1.0; k <= k0 + 1.0; k += 1.0) {
        const double target = k * pi;
        if (target < f_lo || target > f_hi) continue;
        const double z = solve(target);
        if (std::isnan(best) || std::abs(z - t) < std::abs(best - t)) best = z;
    }
    if (std::isnan(best)) throw std::domain_error("inner_phase_point: no phase point in the oscillatory region");
    return best;
}

double ratio_w_k(const Params& p, std::int64_t n, std::int64_t k, double z) {
    require_order(p, n);
    if (k < 1 || k > n) throw std::domain_error("ratio_w_k: k must lie in [1, n]");
    if (!(std::abs(z) >= 1.0 + kRegionDelta) || !std::isfinite(z)) {
        throw std::domain_error("ratio_w_k: |z| must be >= " + std::to_string(1.0 + kRegionDelta));
    }
    const double big_n = p.big_n(n);
    const double lk = lambda_n(p, k);
    const double lkm1 = k == 1 ? 0.0 : lambda_n(p, k - 1);
    const double disc = big_n * z * z - 2.0 * lk;
    if (!(disc > 0.0)) throw std::domain_error("ratio_w_k: N z^2 - 2 lambda_k must be positive");
    const double root = std::copysign(std::sqrt(z * z - 2.0 * lk / big_n), z);
    return std::sqrt(big_n) * (z + root) / 2.0 * (1.0 + (lk - lkm1) / (2.0 * disc));
}

ScaledReal pi_from_ratios(const Params& p, std::int64_t n, double z) {
    double sum = 0.0;
    double comp = 0.0;
    int sign = 1;
    for (std::int64_t k = 1; k <= n; ++k) {
        const double w = ratio_w_k(p, n, k, z);
        if (w < 0) sign = -sign;
        sum = neumaier_sum(sum, comp, std::log(std::abs(w)));
    }
    return ScaledReal::from_log(sign, sum + comp);
}

SumLemma sum_lemma(double beta, std::int64_t n, double x) {
    if (!(beta > 0.0) || !std::isfinite(beta)) throw std::domain_error("sum_lemma: beta must be positive");
    if (n < 1) throw std::domain_error("sum_lemma: n must be >= 1");
    const double sqrt_n = std::sqrt(static_cast<double>(n));
    if (!(x >= (1.0 + kRegionDelta) * sqrt_n) || !std::isfinite(x)) {
        throw std::domain_error("sum_lemma: x must be >= (1 + delta) sqrt(n)");
    }
    const double x2 = x * x;
    double sum = 0.0;
    double comp = 0.0;
    for (std::int64_t k = 1; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        const double term = 1.0 / ((kd + beta - 0.5) * (x2 - kd + x * std::sqrt(x2 - kd)));
        sum = neumaier_sum(sum, comp, term);
    }
    SumLemma out;
    out.lhs = sum + comp;
    out.rhs = std::log(x2) / (2.0 * x2);
    return out;
}

EvalReport evaluate(const Params& p, std::int64_t n, double t) {
    if (n < 0) throw std::domain_error("evaluate: n must be >= 0");
    if (!std::isfinite(t)) throw std::domain_error("evaluate: t must be finite");
    EvalReport r;
    r.n = n;
    r.big_n = p.big_n(n);
    r.t = t;
    if (r.big_n <= 0.0) throw std::domain_error("evaluate: N = n + beta - 1 must be positive");
    r.x = std::sqrt(r.big_n) * t;
    r.exact = eval_phi(p, n, r.x);
    if (n == 0) return r;

    const double z = std::abs(t);
    const bool flip = t < 0 && (n % 2 != 0);
    const auto oriented = [&](ScaledReal v) { return flip ? -v : v; };

    if (z >= kRegionDelta) {
        const Approximation a = airy_uniform(p, n, z);
        r.airy_uniform = oriented(a.value);
        r.rel_err_uniform = relative_gap(*r.airy_uniform, r.exact, a.envelope);
    }
    if (z >= 1.0 + kRegionDelta) {
        const Approximation a = outer_formula(p, n, z);
        r.outer = oriented(a.value);
        r.rel_err_outer = relative_error(*r.outer, r.exact);
    }
    if (z >= kRegionDelta && z <= 1.0 - kRegionDelta) {
        const Approximation a = inner_formula(p, n, z);
        r.inner = oriented(a.value);
        r.rel_err_inner = relative_gap(*r.inner, r.exact, a.envelope);
    }
    return r;
}

ConvergencePoint convergence_point(const Params& p, std::int64_t n, double t) {
    ConvergencePoint c;
    c.n = n;
    c.big_n = p.big_n(n);
    c.t = t;
    const double z = std::abs(t);
    c.t_eval = t;
    if (n >= 1 && z >= kRegionDelta && z <= 1.0 - kRegionDelta) {
        const double zm = phase_maximum_near(p, n, z);
        c.t_eval = t < 0 ? -zm : zm;
    }
    const EvalReport r = evaluate(p, n, c.t_eval);
    c.err_uniform = r.rel_err_uniform;
    c.err_outer = r.rel_err_outer;
    c.err_inner = r.rel_err_inner;
    return c;
}

}  // namespace cohpoly

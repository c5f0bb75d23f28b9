#include "cohpoly/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "cohpoly/specfun.hpp"

namespace cohpoly {

using specfun::log_gamma;

namespace {

void require_index(std::int64_t n, std::int64_t min, const char* what) {
    if (n < min) {
        throw std::invalid_argument(std::string(what) + ": index " + std::to_string(n) + " below " +
                                    std::to_string(min));
    }
}

// Scales a and b by the same power of two so the larger lands in [1, 2).
// Returns the binary exponent that was removed.
int renormalize(double& a, double& b) {
    const double m = std::max(std::abs(a), std::abs(b));
    if (m == 0.0 || !std::isfinite(m)) return 0;
    const int e = std::ilogb(m);
    a = std::ldexp(a, -e);
    b = std::ldexp(b, -e);
    return e;
}

}  // namespace

Params::Params(double alpha, double beta) : alpha_(alpha), beta_(beta) {
    if (!std::isfinite(alpha) || !std::isfinite(beta) || !(alpha >= 0.0) || !(alpha < beta)) {
        throw std::invalid_argument("parameters must satisfy 0 <= alpha < beta (got alpha=" +
                                    std::to_string(alpha) + ", beta=" + std::to_string(beta) + ")");
    }
}

RationalParams::RationalParams(BigRational alpha, BigRational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.sign() < 0 || !(alpha_ < beta_)) {
        throw std::invalid_argument("rational parameters must satisfy 0 <= alpha < beta");
    }
}

RationalParams RationalParams::parse(std::string_view alpha, std::string_view beta) {
    return {BigRational::parse(alpha), BigRational::parse(beta)};
}

double lambda_n(const Params& p, std::int64_t n) {
    require_index(n, 1, "lambda_n");
    const double m = static_cast<double>(n) + p.beta();
    return (m + p.alpha() - 1.0) * (m - p.alpha() - 1.0) / (2.0 * (m - 0.5));
}

double lambda_n_rewritten(const Params& p, std::int64_t n) {
    require_index(n, 1, "lambda_n_rewritten");
    const double m = static_cast<double>(n) + p.beta();
    return 0.5 * (m - 1.5 - (p.alpha() * p.alpha() - 0.25) / (m - 0.5));
}

double log_moment(const Params& p, std::int64_t n) {
    require_index(n, 0, "log_moment");
    const double a = p.beta() + p.alpha();
    const double b = p.beta() - p.alpha();
    const double c = p.beta() + 0.5;
    double sum = 0.0;
    for (std::int64_t j = 0; j < n; ++j) {
        const auto dj = static_cast<double>(j);
        sum += std::log(a + dj) + std::log(b + dj) - std::log(c + dj) - std::numbers::ln2;
    }
    return sum;
}

double lambda_from_moments(const Params& p, std::int64_t n) {
    require_index(n, 1, "lambda_from_moments");
    return std::exp(log_moment(p, n) - log_moment(p, n - 1));
}

BigRational lambda_n_exact(const RationalParams& p, std::int64_t n) {
    require_index(n, 1, "lambda_n_exact");
    const BigRational m = BigRational(static_cast<long>(n)) + p.beta();
    const BigRational one(1);
    return (m + p.alpha() - one) * (m - p.alpha() - one) / (BigRational(2) * (m - BigRational(1, 2)));
}

double log_k_n(const Params& p, std::int64_t n) {
    require_index(n, 0, "log_k_n");
    const double m = static_cast<double>(n) + p.beta();
    const double a = p.alpha();
    return 0.5 * (log_gamma((m + a) / 2.0) + log_gamma((m - a) / 2.0) + log_gamma((m + 1.5) / 2.0) -
                  log_gamma((m + a + 1.0) / 2.0) - log_gamma((m - a + 1.0) / 2.0) -
                  log_gamma((m + 0.5) / 2.0));
}

double log_gamma_n(const Params& p, std::int64_t n) {
    require_index(n, 0, "log_gamma_n");
    if (n == 0) return 0.0;
    const double a = p.alpha();
    const double b = p.beta();
    const double m = static_cast<double>(n) + b;
    return static_cast<double>(n) * std::numbers::ln2 +
           0.5 * (log_gamma(b + a) + log_gamma(b - a) + log_gamma(m + 0.5) - log_gamma(m + a) -
                  log_gamma(m - a) - log_gamma(b + 0.5));
}

CoeffSet coefficients(const Params& p, std::int64_t n) {
    require_index(n, 1, "coefficients");
    CoeffSet c;
    c.n = n;
    c.lambda = lambda_n(p, n);
    c.b = std::sqrt(c.lambda / 2.0);
    c.a_n = std::sqrt(2.0 / c.lambda) * std::exp(log_k_n(p, n) - log_k_n(p, n - 1));
    c.big_n = p.big_n(n);
    return c;
}

PhiPair eval_phi_pair(const Params& p, std::int64_t n, double x) {
    require_index(n, 0, "eval_phi");
    if (!std::isfinite(x)) throw std::domain_error("eval_phi: x must be finite");
    if (n == 0) return {ScaledReal::from_double(1.0), ScaledReal{}};

    double lam_prev = lambda_n(p, 1);
    double prev = 1.0;
    double cur = std::sqrt(2.0 / lam_prev) * x;
    std::int64_t exponent = renormalize(cur, prev);
    for (std::int64_t k = 1; k < n; ++k) {
        const double lam_next = lambda_n(p, k + 1);
        const double next = std::sqrt(2.0 / lam_next) * x * cur - std::sqrt(lam_prev / lam_next) * prev;
        prev = cur;
        cur = next;
        lam_prev = lam_next;
        exponent += renormalize(cur, prev);
    }
    return {ScaledReal::from_parts(cur, exponent), ScaledReal::from_parts(prev, exponent)};
}

BigRational eval_pi_exact(const RationalParams& p, std::int64_t n, const BigRational& x) {
    require_index(n, 0, "eval_pi_exact");
    if (n == 0) return BigRational(1);
    BigRational prev(1);
    BigRational cur = x;
    const BigRational half(1, 2);
    for (std::int64_t k = 1; k < n; ++k) {
        BigRational next = x * cur - lambda_n_exact(p, k) * half * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

ScaledReal eval_p_standard(const Params& p, std::int64_t n, double x) {
    return eval_phi(p, n, x) * ScaledReal::from_log(1, -log_k_n(p, n));
}

PhiPair hermite_reference_pair(std::int64_t n, double x) {
    require_index(n, 0, "hermite_reference");
    if (!std::isfinite(x)) throw std::domain_error("hermite_reference: x must be finite");
    if (n == 0) return {ScaledReal::from_double(1.0), ScaledReal{}};

    const double y = std::numbers::sqrt2 * x;
    double prev = 1.0;     // H_0
    double cur = 2.0 * y;  // H_1
    std::int64_t exponent = renormalize(cur, prev);
    // 2^n n! accumulated alongside, so the pair can be normalized at the end.
    ScaledReal norm = ScaledReal::from_double(2.0);
    for (std::int64_t k = 1; k < n; ++k) {
        const double next = 2.0 * y * cur - 2.0 * static_cast<double>(k) * prev;
        prev = cur;
        cur = next;
        exponent += renormalize(cur, prev);
        norm = norm * ScaledReal::from_double(2.0 * static_cast<double>(k + 1));
    }
    const ScaledReal norm_prev = norm / ScaledReal::from_double(2.0 * static_cast<double>(n));
    return {ScaledReal::from_parts(cur, exponent) / norm.sqrt(),
            ScaledReal::from_parts(prev, exponent) / norm_prev.sqrt()};
}

}  // namespace cohpoly

#include "cohpoly/specfun.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cohpoly::specfun {

namespace {

// B_{2k} / (2k (2k-1)), k = 1..10.
constexpr std::array<double, 10> kStirlingCoeffs = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

constexpr double kStirlingThreshold = 10.0;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

double stirling(double z) {
    const double inv = 1.0 / z;
    const double inv2 = inv * inv;
    double corr = 0.0;
    // Horner from the smallest term; at z >= 10 the last term is ~1e-20.
    for (auto it = kStirlingCoeffs.rbegin(); it != kStirlingCoeffs.rend(); ++it) {
        corr = corr * inv2 + *it;
    }
    corr *= inv;
    return (z - 0.5) * std::log(z) - z + kHalfLog2Pi + corr;
}

// Double-double arithmetic built from error-free transforms.
struct DD {
    double hi = 0.0;
    double lo = 0.0;
};

inline DD quick_two_sum(double a, double b) {
    const double s = a + b;
    return {s, b - (s - a)};
}

inline DD two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    return {s, (a - (s - bb)) + (b - bb)};
}

inline DD two_prod(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

inline DD operator+(DD a, DD b) {
    DD s = two_sum(a.hi, b.hi);
    const DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}

inline DD operator*(DD a, double b) {
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD a, double b) {
    const double q1 = a.hi / b;
    const DD p = two_prod(q1, b);
    DD s = two_sum(a.hi, -p.hi);
    s.lo -= p.lo;
    s.lo += a.lo;
    const double q2 = (s.hi + s.lo) / b;
    return quick_two_sum(q1, q2);
}

inline double to_double(DD a) { return a.hi + a.lo; }

// Ai(0), -Ai'(0) and sqrt(3) to double-double precision.
constexpr DD kAi0{0.3550280538878172, 2.05233632436212e-17};
constexpr DD kMinusAiPrime0{0.2588194037928068, -2.522243111610832e-17};
constexpr DD kSqrt3{1.7320508075688772, 1.0035084221806903e-16};

constexpr double kInvSqrtPi = 0.56418958354775628695;
constexpr int kMaxSeriesTerms = 400;
constexpr double kSeriesCutoff = 1e-34;

// Sum of a power series whose consecutive terms satisfy
// term_{k} = term_{k-1} * x^3 / denom(k).
template <class Denominator>
DD power_series(DD first, DD x3, Denominator denom) {
    DD sum = first;
    DD term = first;
    for (int k = 1; k < kMaxSeriesTerms; ++k) {
        term = (term * x3) / denom(k);
        sum = sum + term;
        if (std::abs(term.hi) <= kSeriesCutoff * std::abs(sum.hi)) break;
    }
    return sum;
}

// Coefficients u_k of the Airy asymptotic expansions, and v_k.
struct AsymptoticTerms {
    static constexpr int kMax = 64;
    std::array<double, kMax> u{};
    std::array<double, kMax> v{};
    int count = 0;
};

// Terms u_k / zeta^k and v_k / zeta^k up to the smallest one in magnitude.
AsymptoticTerms asymptotic_terms(double zeta) {
    AsymptoticTerms out;
    double u = 1.0;
    double zk = 1.0;
    out.u[0] = 1.0;
    out.v[0] = 1.0;
    out.count = 1;
    double prev = 1.0;
    for (int k = 1; k < AsymptoticTerms::kMax; ++k) {
        u *= (6.0 * k - 5.0) * (6.0 * k - 3.0) * (6.0 * k - 1.0) / ((2.0 * k - 1.0) * 216.0 * k);
        zk *= zeta;
        const double uk = u / zk;
        const double vk = -(6.0 * k + 1.0) / (6.0 * k - 1.0) * uk;
        const double mag = std::max(std::abs(uk), std::abs(vk));
        if (mag >= prev) break;
        out.u[k] = uk;
        out.v[k] = vk;
        out.count = k + 1;
        prev = mag;
        if (mag < 1e-18) break;
    }
    return out;
}

void check_finite(double x) {
    if (!std::isfinite(x)) throw std::domain_error("airy: argument must be finite");
}

}  // namespace

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("log_gamma: argument must be finite and positive");
    }
    if (x >= kStirlingThreshold) return stirling(x);
    double z = x;
    double prod = 1.0;
    while (z < kStirlingThreshold) {
        prod *= z;
        z += 1.0;
    }
    return stirling(z) - std::log(prod);
}

namespace detail {

AiryQuad airy_series(double x) {
    const DD x2 = two_prod(x, x);
    const DD x3 = x2 * x;

    // f = sum 3^k (1/3)_k x^{3k} / (3k)!, g = sum 3^k (2/3)_k x^{3k+1} / (3k+1)!
    const DD f = power_series(DD{1.0, 0.0}, x3, [](int k) { return (3.0 * k - 1.0) * (3.0 * k); });
    const DD g = power_series(DD{x, 0.0}, x3, [](int k) { return (3.0 * k) * (3.0 * k + 1.0); });
    const DD fp = power_series(x2 / 2.0, x3, [](int k) { return (3.0 * k) * (3.0 * k + 2.0); });
    const DD gp = power_series(DD{1.0, 0.0}, x3, [](int k) { return (3.0 * k - 2.0) * (3.0 * k); });

    const DD c1f = kAi0 * f;
    const DD c2g = kMinusAiPrime0 * g;
    const DD c1fp = kAi0 * fp;
    const DD c2gp = kMinusAiPrime0 * gp;

    AiryQuad out;
    out.ai = to_double(c1f - c2g);
    out.ai_prime = to_double(c1fp - c2gp);
    out.bi = to_double(kSqrt3 * (c1f + c2g));
    out.bi_prime = to_double(kSqrt3 * (c1fp + c2gp));
    return out;
}

AiryQuad airy_asymptotic(double x) {
    const double z = std::abs(x);
    const double sz = std::sqrt(z);
    const double zeta = 2.0 / 3.0 * z * sz;
    const double z14 = std::sqrt(sz);
    const AsymptoticTerms terms = asymptotic_terms(zeta);

    AiryQuad out;
    if (x > 0.0) {
        double s_ai = 0.0, s_aip = 0.0, s_bi = 0.0, s_bip = 0.0;
        for (int k = terms.count - 1; k >= 0; --k) {
            const double sign = (k % 2 == 0) ? 1.0 : -1.0;
            s_ai += sign * terms.u[k];
            s_aip += sign * terms.v[k];
            s_bi += terms.u[k];
            s_bip += terms.v[k];
        }
        const double log_pref = std::log(kInvSqrtPi / z14);
        out.ai = 0.5 * std::exp(log_pref - zeta) * s_ai;
        out.ai_prime = -0.5 * kInvSqrtPi * z14 * std::exp(-zeta) * s_aip;
        out.bi = std::exp(log_pref + zeta) * s_bi;
        out.bi_prime = std::exp(std::log(kInvSqrtPi * z14) + zeta) * s_bip;
        return out;
    }

    // Even-index terms feed the cosine-like sums, odd-index terms the
    // sine-like ones; signs alternate within each.
    double pu = 0.0, qu = 0.0, pv = 0.0, qv = 0.0;
    for (int k = terms.count - 1; k >= 0; --k) {
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            pu += sign * terms.u[k];
            pv += sign * terms.v[k];
        } else {
            qu += sign * terms.u[k];
            qv += sign * terms.v[k];
        }
    }
    // cos(zeta - pi/4) and sin(zeta - pi/4) without rounding pi/4 into zeta.
    const double c = std::cos(zeta);
    const double s = std::sin(zeta);
    const double cm = (c + s) * std::numbers::sqrt2 * 0.5;
    const double sm = (s - c) * std::numbers::sqrt2 * 0.5;
    const double a = kInvSqrtPi / z14;
    const double b = kInvSqrtPi * z14;
    out.ai = a * (cm * pu + sm * qu);
    out.ai_prime = b * (sm * pv - cm * qv);
    out.bi = a * (-sm * pu + cm * qu);
    out.bi_prime = b * (cm * pv + sm * qv);
    return out;
}

}  // namespace detail

AiryQuad airy(double x) {
    check_finite(x);
    if (std::abs(x) <= kAirySeriesLimit) return detail::airy_series(x);
    return detail::airy_asymptotic(x);
}

ScaledAi ai_scaled(double x) {
    check_finite(x);
    if (x <= kAirySeriesLimit) {
        const AiryQuad q = airy(x);
        return {q.ai, q.ai_prime, 0.0};
    }
    const double sz = std::sqrt(x);
    const double zeta = 2.0 / 3.0 * x * sz;
    const double z14 = std::sqrt(sz);
    const AsymptoticTerms terms = asymptotic_terms(zeta);
    double s_ai = 0.0, s_aip = 0.0;
    for (int k = terms.count - 1; k >= 0; --k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        s_ai += sign * terms.u[k];
        s_aip += sign * terms.v[k];
    }
    return {0.5 * kInvSqrtPi / z14 * s_ai, -0.5 * kInvSqrtPi * z14 * s_aip, -zeta};
}

}  // namespace cohpoly::specfun

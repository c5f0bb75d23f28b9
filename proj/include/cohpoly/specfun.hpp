#pragma once

// Real-line special functions used by the asymptotic formulas.
//
// Everything here is a pure function of its arguments.

namespace cohpoly::specfun {

/// ln Gamma(x) for finite x > 0. Throws std::domain_error otherwise.
///
/// Arguments below 10 are shifted upward with the recurrence
/// ln Gamma(x) = ln Gamma(x + k) - ln(x (x+1) ... (x+k-1)), then the Stirling
/// series with Bernoulli corrections is summed at x + k >= 10.
double log_gamma(double x);

struct AiryQuad {
    double ai = 0.0;
    double ai_prime = 0.0;
    double bi = 0.0;
    double bi_prime = 0.0;
};

/// Ai, Ai', Bi, Bi' at a finite real argument.
///
/// |x| <= kAirySeriesLimit: Maclaurin series summed in double-double.
/// |x| >  kAirySeriesLimit: optimally truncated asymptotic expansions
/// (exponential form for x > 0, modulus/phase form for x < 0).
/// Bi and Bi' overflow to +inf for large positive x; Ai and Ai' stay finite.
AiryQuad airy(double x);

/// Ai and Ai' with the exponential decay factored out:
/// Ai(x) = ai * exp(log_scale), Ai'(x) = ai_prime * exp(log_scale).
/// log_scale is -2/3 x^{3/2} beyond the series limit on the positive axis
/// and 0 elsewhere.
struct ScaledAi {
    double ai = 0.0;
    double ai_prime = 0.0;
    double log_scale = 0.0;
};
ScaledAi ai_scaled(double x);

inline constexpr double kAirySeriesLimit = 9.0;

namespace detail {
// The two evaluation paths, exposed for the overlap consistency tests.
AiryQuad airy_series(double x);
AiryQuad airy_asymptotic(double x);
}  // namespace detail

}  // namespace cohpoly::specfun

#pragma once

#include <cstdint>
#include <optional>

#include "cohpoly/recurrence.hpp"
#include "cohpoly/scaled_real.hpp"

namespace cohpoly {

/// Distance kept from the origin and from the turning point t = 1 by the
/// region-restricted formulas.
inline constexpr double kRegionDelta = 0.05;
/// Half-width of the window around t = 1 where U(t) is taken from its Taylor series.
inline constexpr double kTurningWindow = 1e-3;

/// U(t) from 2/3 U^{3/2} = t sqrt(t^2-1) - ln(t + sqrt(t^2-1)) for t >= 1 and
/// 2/3 (-U)^{3/2} = acos t - t sqrt(1-t^2) for t < 1.
struct UValue {
    double t = 0.0;
    double u = 0.0;
    double envelope = 1.0;  // (U / (t^2 - 1))^{1/4}, equal to 1 at t = 1
};

/// t > 0, else std::domain_error.
UValue u_map(double t);

namespace detail {
// Both evaluation paths of u_map, for the dual-evaluation tests.
UValue u_map_series(double t);
UValue u_map_closed(double t);
}  // namespace detail

/// An approximation to phi_n together with the local scale its error is
/// measured against (the approximant's modulus with the oscillating factor
/// replaced by its amplitude).
struct Approximation {
    ScaledReal value;
    ScaledReal envelope;
};

/// Leading term of the Airy-type uniform expansion of phi_n(sqrt(N) t), t >= kRegionDelta.
Approximation airy_uniform(const Params& p, std::int64_t n, double t);

/// Exponential-region formula for phi_n(sqrt(N) z), z >= 1 + kRegionDelta.
Approximation outer_formula(const Params& p, std::int64_t n, double z);

/// Oscillatory-region formula for phi_n(sqrt(N) z), kRegionDelta <= z <= 1 - kRegionDelta.
Approximation inner_formula(const Params& p, std::int64_t n, double z);

/// Argument of the cosine in inner_formula: N (z sqrt(1-z^2) - acos z) + pi/4.
double inner_phase(const Params& p, std::int64_t n, double z);

/// The point z in [kRegionDelta, 1 - kRegionDelta] nearest t where
/// inner_phase(z) = k pi + offset for some integer k. offset = 0 gives the
/// cosine's extrema, offset = pi/2 its zeros.
double inner_phase_point(const Params& p, std::int64_t n, double t, double offset);

inline double phase_maximum_near(const Params& p, std::int64_t n, double t) {
    return inner_phase_point(p, n, t, 0.0);
}

/// Approximation to w_k(sqrt(N) z) = pi_k / pi_{k-1} at sqrt(N) z, |z| >= 1 + kRegionDelta.
/// The correction bracket uses lambda_0 = 0 at k = 1.
double ratio_w_k(const Params& p, std::int64_t n, std::int64_t k, double z);

/// prod_{k=1}^{n} ratio_w_k(p, n, k, z), an approximation to pi_n(sqrt(N) z).
ScaledReal pi_from_ratios(const Params& p, std::int64_t n, double z);

struct SumLemma {
    double lhs = 0.0;  // sum_{k=1}^n 1 / ((k+beta-1/2)(x^2 - k + x sqrt(x^2-k)))
    double rhs = 0.0;  // ln(x^2) / (2 x^2)
    double gap() const { return lhs - rhs; }
};

/// beta > 0, x >= (1 + kRegionDelta) sqrt(n).
SumLemma sum_lemma(double beta, std::int64_t n, double x);

/// Exact value and every applicable approximation at x = sqrt(N) t.
struct EvalReport {
    std::int64_t n = 0;
    double big_n = 0.0;
    double t = 0.0;
    double x = 0.0;
    ScaledReal exact;
    std::optional<ScaledReal> airy_uniform;
    std::optional<ScaledReal> outer;
    std::optional<ScaledReal> inner;
    std::optional<double> rel_err_uniform;
    std::optional<double> rel_err_outer;
    std::optional<double> rel_err_inner;
};

/// Negative t is handled through phi_n(-x) = (-1)^n phi_n(x).
EvalReport evaluate(const Params& p, std::int64_t n, double t);

/// Errors of each applicable formula at one n, as read by convergence studies.
/// If t lies in the oscillatory region the evaluation point t_eval is the
/// inner cosine's extremum nearest t; otherwise t_eval = t.
struct ConvergencePoint {
    std::int64_t n = 0;
    double big_n = 0.0;
    double t = 0.0;
    double t_eval = 0.0;
    std::optional<double> err_uniform;
    std::optional<double> err_outer;
    std::optional<double> err_inner;
};

ConvergencePoint convergence_point(const Params& p, std::int64_t n, double t);

}  // namespace cohpoly

#pragma once

#include <cstdint>
#include <vector>

#include "cohpoly/recurrence.hpp"

namespace cohpoly {

/// Symmetric tridiagonal matrix. offdiag[i] couples rows i and i+1.
struct Tridiagonal {
    std::int64_t dim = 0;
    std::vector<double> diag;
    std::vector<double> offdiag;
};

/// Jacobi matrix of phi_0..phi_{n-1}: zero diagonal, offdiag[k-1] = sqrt(lambda_k / 2).
Tridiagonal jacobi_matrix(const Params& p, std::int64_t n);

/// Number of eigenvalues of T strictly below x.
std::int64_t sturm_count(const Tridiagonal& T, double x);

/// [lo, hi] containing the whole spectrum, padded slightly beyond the Gershgorin discs.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;
};
Interval gershgorin_bounds(const Tridiagonal& T);

/// Default bisection width: 1e-12 times the Gershgorin radius.
double default_tolerance(const Tridiagonal& T);

/// All eigenvalues in increasing order by Sturm-count bisection, each
/// bracketed to width <= tol. Output is identical for every thread count.
/// Throws std::invalid_argument for an invalid matrix or tol <= 0 and
/// std::runtime_error if a bisection fails to converge.
std::vector<double> eigen_sturm(const Tridiagonal& T, double tol, int threads = 1);

/// CDF of the density (2 / (pi c)) sqrt(c - t^2) on (-sqrt c, sqrt c).
double semicircle_cdf(double c, double t);

/// (2 / (pi c)) sqrt(c - t^2) inside the support, 0 outside.
double semicircle_density(double c, double t);

/// Kolmogorov-Smirnov distance between the empirical CDF of sorted samples
/// and semicircle_cdf(c, .), checking both one-sided limits at every sample.
double ks_distance(const std::vector<double>& sorted, double c);

inline constexpr int kHistogramBins = 64;

struct Histogram {
    double lo = 0.0;
    double hi = 0.0;
    std::vector<std::int64_t> counts;    // samples outside [lo, hi] go into the edge bins
    std::vector<double> centers;
    std::vector<double> model_density;   // semicircle density at each center
};

Histogram zero_histogram(const std::vector<double>& rescaled, double c, int bins = kHistogramBins);

struct ZeroReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    double c = 0.0;                // n / m
    std::vector<double> zeros;     // increasing
    std::vector<double> rescaled;  // zeros / sqrt(m)
    double ks = 0.0;
    Histogram histogram;
};

/// Zeros of phi_n with m = round(n / c_target). Requires n >= 2, c_target > 0.
ZeroReport zero_report(const Params& p, std::int64_t n, double c_target, int threads = 1);

}  // namespace cohpoly

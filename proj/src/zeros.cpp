#include "cohpoly/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace cohpoly {

namespace {

constexpr int kBisectionCap = 400;

void validate(const Tridiagonal& T) {
    if (T.dim < 1) throw std::invalid_argument("Tridiagonal: dim must be positive");
    if (static_cast<std::int64_t>(T.diag.size()) != T.dim ||
        static_cast<std::int64_t>(T.offdiag.size()) != T.dim - 1) {
        throw std::invalid_argument("Tridiagonal: inconsistent sizes");
    }
    for (double b : T.offdiag) {
        if (!(b > 0.0) || !std::isfinite(b)) throw std::invalid_argument("Tridiagonal: offdiag must be positive");
    }
    for (double a : T.diag) {
        if (!std::isfinite(a)) throw std::invalid_argument("Tridiagonal: non-finite diagonal");
    }
}

// Smallest pivot magnitude allowed in the LDL^T sweep; a zero pivot is nudged to -pivmin.
double pivot_floor(const Tridiagonal& T) {
    double big = 1.0;
    for (double b : T.offdiag) big = std::max(big, b * b);
    return std::numeric_limits<double>::min() * big;
}

std::int64_t count_below(const Tridiagonal& T, double x, double pivmin) {
    std::int64_t count = 0;
    double d = T.diag[0] - x;
    if (std::abs(d) < pivmin) d = -pivmin;
    if (d < 0) ++count;
    for (std::int64_t i = 1; i < T.dim; ++i) {
        const double b = T.offdiag[static_cast<std::size_t>(i - 1)];
        d = (T.diag[static_cast<std::size_t>(i)] - x) - b * b / d;
        if (std::abs(d) < pivmin) d = -pivmin;
        if (d < 0) ++count;
    }
    return count;
}

double bisect(const Tridiagonal& T, std::int64_t index, Interval box, double tol, double pivmin) {
    double lo = box.lo;
    double hi = box.hi;
    for (int it = 0; it < kBisectionCap; ++it) {
        if (hi - lo <= tol) return 0.5 * (lo + hi);
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) return mid;  // bracket at floating-point resolution
        if (count_below(T, mid, pivmin) > index) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    throw std::runtime_error("eigen_sturm: bisection exceeded the iteration cap");
}

}  // namespace

Tridiagonal jacobi_matrix(const Params& p, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("jacobi_matrix: n must be >= 1");
    Tridiagonal T;
    T.dim = n;
    T.diag.assign(static_cast<std::size_t>(n), 0.0);
    T.offdiag.reserve(static_cast<std::size_t>(n - 1));
    for (std::int64_t k = 1; k < n; ++k) T.offdiag.push_back(std::sqrt(lambda_n(p, k) / 2.0));
    return T;
}

std::int64_t sturm_count(const Tridiagonal& T, double x) {
    validate(T);
    return count_below(T, x, pivot_floor(T));
}

Interval gershgorin_bounds(const Tridiagonal& T) {
    validate(T);
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::int64_t i = 0; i < T.dim; ++i) {
        const auto u = static_cast<std::size_t>(i);
        double r = 0.0;
        if (i > 0) r += T.offdiag[u - 1];
        if (i + 1 < T.dim) r += T.offdiag[u];
        lo = std::min(lo, T.diag[u] - r);
        hi = std::max(hi, T.diag[u] + r);
    }
    const double pad = 1e-9 * std::max({std::abs(lo), std::abs(hi), 1.0});
    return {lo - pad, hi + pad};
}

double default_tolerance(const Tridiagonal& T) {
    const Interval g = gershgorin_bounds(T);
    return 1e-12 * std::max(0.5 * (g.hi - g.lo), std::numeric_limits<double>::min());
}

std::vector<double> eigen_sturm(const Tridiagonal& T, double tol, int threads) {
    validate(T);
    if (!(tol > 0.0)) throw std::invalid_argument("eigen_sturm: tol must be positive");
    const Interval box = gershgorin_bounds(T);
    const double pivmin = pivot_floor(T);
    const auto dim = static_cast<std::size_t>(T.dim);
    std::vector<double> out(dim);

    const auto work = [&](std::size_t first, std::size_t last) {
        for (std::size_t j = first; j < last; ++j) {
            out[j] = bisect(T, static_cast<std::int64_t>(j), box, tol, pivmin);
        }
    };
    const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(threads, 1)), 1, dim);
    if (workers == 1) {
        work(0, dim);
    } else {
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(workers);
        const std::size_t chunk = (dim + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t first = std::min(dim, w * chunk);
            const std::size_t last = std::min(dim, first + chunk);
            pool.emplace_back([&, w, first, last] {
                try {
                    work(first, last);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }
    for (std::size_t j = 1; j < dim; ++j) {
        if (!(out[j] > out[j - 1])) throw std::runtime_error("eigen_sturm: eigenvalues not strictly increasing");
    }
    return out;
}

double semicircle_cdf(double c, double t) {
    if (!(c > 0.0)) throw std::invalid_argument("semicircle_cdf: c must be positive");
    const double r = std::sqrt(c);
    if (t <= -r) return 0.0;
    if (t >= r) return 1.0;
    return 0.5 + t * std::sqrt(c - t * t) / (std::numbers::pi * c) + std::asin(t / r) / std::numbers::pi;
}

double semicircle_density(double c, double t) {
    if (!(c > 0.0)) throw std::invalid_argument("semicircle_density: c must be positive");
    if (t * t >= c) return 0.0;
    return 2.0 / (std::numbers::pi * c) * std::sqrt(c - t * t);
}

double ks_distance(const std::vector<double>& sorted, double c) {
    if (sorted.empty()) return 0.0;
    const double n = static_cast<double>(sorted.size());
    double worst = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double f = semicircle_cdf(c, sorted[i]);
        const double below = static_cast<double>(i) / n;
        const double above = static_cast<double>(i + 1) / n;
        worst = std::max({worst, std::abs(f - below), std::abs(above - f)});
    }
    return worst;
}

Histogram zero_histogram(const std::vector<double>& rescaled, double c, int bins) {
    if (!(c > 0.0)) throw std::invalid_argument("zero_histogram: c must be positive");
    if (bins < 1) throw std::invalid_argument("zero_histogram: bins must be positive");
    Histogram h;
    h.hi = std::sqrt(c);
    h.lo = -h.hi;
    const auto nb = static_cast<std::size_t>(bins);
    h.counts.assign(nb, 0);
    const double width = (h.hi - h.lo) / bins;
    for (int k = 0; k < bins; ++k) {
        const double center = h.lo + (k + 0.5) * width;
        h.centers.push_back(center);
        h.model_density.push_back(semicircle_density(c, center));
    }
    for (double v : rescaled) {
        const double pos = std::floor((v - h.lo) / width);
        const auto k = static_cast<std::size_t>(std::clamp(pos, 0.0, static_cast<double>(bins - 1)));
        ++h.counts[k];
    }
    return h;
}

ZeroReport zero_report(const Params& p, std::int64_t n, double c_target, int threads) {
    if (n < 2) throw std::invalid_argument("zero_report: n must be >= 2");
    if (!(c_target > 0.0) || !std::isfinite(c_target)) throw std::invalid_argument("zero_report: c must be positive");
    ZeroReport r;
    r.n = n;
    r.m = std::max<std::int64_t>(1, std::llround(static_cast<double>(n) / c_target));
    r.c = static_cast<double>(n) / static_cast<double>(r.m);
    const Tridiagonal T = jacobi_matrix(p, n);
    r.zeros = eigen_sturm(T, default_tolerance(T), threads);
    const double scale = std::sqrt(static_cast<double>(r.m));
    r.rescaled.reserve(r.zeros.size());
    for (double z : r.zeros) r.rescaled.push_back(z / scale);
    r.ks = ks_distance(r.rescaled, r.c);
    r.histogram = zero_histogram(r.rescaled, r.c);
    return r;
}

}  // namespace cohpoly

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "cohpoly/asymptotics.hpp"
#include "cohpoly/zeros.hpp"

using namespace cohpoly;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const Params kHermite(0.5, 1.5);
const Params kGeneric(0.3, 1.7);

}  // namespace

TEST_SUITE("asymptotics") {

TEST_CASE("u_map at the turning point") {
    const UValue v = u_map(1.0);
    CHECK(v.u == 0.0);
    CHECK(v.envelope == 1.0);
    CHECK(u_map(1.0 + 1e-9).envelope == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(u_map(1.0 - 1e-9).envelope == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("u_map reference values") {
    const double ts[] = {0.05, 0.3, 0.9, 1.5, 3.0, 10.0};
    const double want[] = {-1.6947438590199564819, -1.2927716476278576032, -0.19797666044521768266,
                           1.0474032602590194029,  4.6674841617314504685,  27.569503529323373584};
    for (int i = 0; i < 6; ++i) {
        CAPTURE(ts[i]);
        CHECK(rel(u_map(ts[i]).u, want[i]) <= 1e-13);
    }
}

TEST_CASE("u_map limit at the origin") {
    const double limit = -std::pow(0.75 * std::numbers::pi, 2.0 / 3.0);
    CHECK(rel(limit, -1.7706827540002271116) <= 1e-15);
    CHECK(std::abs(u_map(1e-12).u - limit) <= 1e-9);
}

TEST_CASE("u_map slope at the turning point") {
    const double h = 1e-5;
    CHECK(std::abs((u_map(1.0 + h).u - u_map(1.0 - h).u) / (2.0 * h) - 2.0) <= 1e-6);
}

TEST_CASE("series and closed form agree at the window edge") {
    for (double t : {1.0 - kTurningWindow, 1.0 + kTurningWindow}) {
        CAPTURE(t);
        CHECK(std::abs(detail::u_map_series(t).u - detail::u_map_closed(t).u) <= 1e-10);
        CHECK(std::abs(detail::u_map_series(t).envelope - detail::u_map_closed(t).envelope) <= 1e-10);
    }
}

TEST_CASE("u_map sign and monotonicity") {
    double prev = -std::numeric_limits<double>::infinity();
    for (double t = 0.01; t <= 4.0; t += 0.0005) {
        const UValue v = u_map(t);
        if (t < 1.0 - 1e-12) CHECK(v.u < 0.0);
        if (t > 1.0 + 1e-12) CHECK(v.u > 0.0);
        CHECK(v.u > prev);
        CHECK(v.envelope > 0.0);
        prev = v.u;
    }
    CHECK_THROWS_AS(u_map(0.0), std::domain_error);
    CHECK_THROWS_AS(u_map(-0.5), std::domain_error);
}

TEST_CASE("uniform formula in the Hermite case") {
    const EvalReport r = evaluate(kHermite, 80, 1.0);
    REQUIRE(r.rel_err_uniform);
    CHECK(*r.rel_err_uniform <= 0.01 / r.big_n);
}

TEST_CASE("uniform formula carries the oscillation sign") {
    const Approximation a = airy_uniform(kGeneric, 60, 0.5);
    CHECK(a.value.sign() == eval_phi(kGeneric, 60, std::sqrt(kGeneric.big_n(60)) * 0.5).sign());
    CHECK_THROWS_AS(airy_uniform(kGeneric, 60, 0.04), std::domain_error);
}

TEST_CASE("outer formula decays like 1/N") {
    double prev = 0.0;
    for (std::int64_t n : {100, 200, 400, 800}) {
        const EvalReport r = evaluate(kGeneric, n, 1.5);
        REQUIRE(r.rel_err_outer);
        if (prev > 0.0) {
            CAPTURE(n);
            CHECK(prev / *r.rel_err_outer >= 1.6);
            CHECK(prev / *r.rel_err_outer <= 2.6);
        }
        prev = *r.rel_err_outer;
    }
    CHECK_THROWS_AS(outer_formula(kGeneric, 100, 1.0), std::domain_error);
}

TEST_CASE("outer formula tends to the leading monomial") {
    const std::int64_t n = 10;
    const double big_n = kGeneric.big_n(n);
    double prev = 1.0;
    for (double z : {10.0, 100.0, 1000.0, 10000.0}) {
        const double d = outer_formula(kGeneric, n, z).value.log_abs() -
                         (log_gamma_n(kGeneric, n) + static_cast<double>(n) * std::log(std::sqrt(big_n) * z));
        CHECK(std::abs(d) < prev);
        prev = std::abs(d);
    }
    CHECK(prev <= 1e-7);
}

TEST_CASE("inner formula decays like 1/N at phase maxima") {
    double prev = 0.0;
    for (std::int64_t n : {100, 200, 400, 800}) {
        const ConvergencePoint c = convergence_point(kGeneric, n, 0.5);
        REQUIRE(c.err_inner);
        CHECK(std::abs(std::cos(inner_phase(kGeneric, n, c.t_eval))) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(std::abs(c.t_eval - 0.5) <= 2.0 * std::numbers::pi / c.big_n);
        if (prev > 0.0) {
            CAPTURE(n);
            CHECK(prev / *c.err_inner >= 1.6);
            CHECK(prev / *c.err_inner <= 2.6);
        }
        prev = *c.err_inner;
    }
    CHECK_THROWS_AS(inner_formula(kGeneric, 100, 0.96), std::domain_error);
    CHECK_THROWS_AS(inner_formula(kGeneric, 100, 0.01), std::domain_error);
}

TEST_CASE("inner phase predicts the zeros") {
    const std::int64_t n = 400;
    const double big_n = kGeneric.big_n(n);
    const double z = inner_phase_point(kGeneric, n, 0.5, 0.5 * std::numbers::pi);
    const double x = z * std::sqrt(big_n);
    const Tridiagonal T = jacobi_matrix(kGeneric, n);
    const auto zeros = eigen_sturm(T, default_tolerance(T));
    double gap = std::numeric_limits<double>::infinity();
    for (double q : zeros) gap = std::min(gap, std::abs(q - x));
    CHECK(gap / std::sqrt(big_n) < 5.0 / big_n);
}

TEST_CASE("uniform formula near the turning point decays like 1/N") {
    double prev = 0.0;
    for (std::int64_t n : {100, 200, 400, 800}) {
        const ConvergencePoint c = convergence_point(kGeneric, n, 1.0);
        REQUIRE(c.err_uniform);
        CHECK_FALSE(c.err_outer);
        CHECK_FALSE(c.err_inner);
        if (prev > 0.0) {
            CHECK(prev / *c.err_uniform >= 1.6);
            CHECK(prev / *c.err_uniform <= 2.6);
        }
        prev = *c.err_uniform;
    }
}

TEST_CASE("uniform and region formulas approach each other") {
    double prev_outer = 1.0;
    double prev_inner = 1.0;
    for (std::int64_t n : {100, 200, 400, 800}) {
        const double gap_outer =
            relative_error(airy_uniform(kGeneric, n, 1.5).value, outer_formula(kGeneric, n, 1.5).value);
        CHECK(gap_outer < prev_outer);
        prev_outer = gap_outer;
        const double z = phase_maximum_near(kGeneric, n, 0.5);
        const Approximation inner = inner_formula(kGeneric, n, z);
        const double gap_inner = relative_gap(airy_uniform(kGeneric, n, z).value, inner.value, inner.envelope);
        CHECK(gap_inner < prev_inner);
        prev_inner = gap_inner;
    }
}

TEST_CASE("ratio asymptotics at k = 1") {
    for (std::int64_t n : {50, 100, 200}) {
        const double big_n = kGeneric.big_n(n);
        CHECK(std::abs(ratio_w_k(kGeneric, n, 1, 2.0) / (std::sqrt(big_n) * 2.0) - 1.0) <= 10.0 / (big_n * big_n));
    }
    CHECK_THROWS_AS(ratio_w_k(kGeneric, 100, 0, 2.0), std::domain_error);
    CHECK_THROWS_AS(ratio_w_k(kGeneric, 100, 101, 2.0), std::domain_error);
    CHECK_THROWS_AS(ratio_w_k(kGeneric, 100, 5, 1.01), std::domain_error);
}

TEST_CASE("product law is even in z for even n") {
    const ScaledReal plus = pi_from_ratios(kGeneric, 100, 2.0);
    const ScaledReal minus = pi_from_ratios(kGeneric, 100, -2.0);
    CHECK(relative_error(minus, plus) <= 1e-13);
    CHECK(ratio_w_k(kGeneric, 100, 7, -2.0) == doctest::Approx(-ratio_w_k(kGeneric, 100, 7, 2.0)).epsilon(1e-15));
}

TEST_CASE("product law tracks the exact monic polynomial") {
    const RationalParams q = RationalParams::parse("3/10", "17/10");
    const Params p = q.to_params();
    double prev = 0.0;
    for (std::int64_t n : {100, 200, 400}) {
        const double x = 2.0 * std::sqrt(p.big_n(n));
        const double z = x / std::sqrt(p.big_n(n));
        const ScaledReal exact = eval_pi_exact(q, n, BigRational::from_double(x)).to_scaled();
        const double err = relative_error(pi_from_ratios(p, n, z), exact);
        if (prev > 0.0) {
            CHECK(prev / err >= 1.6);
            CHECK(prev / err <= 2.6);
        }
        prev = err;
    }
}

TEST_CASE("sum lemma") {
    const SumLemma one = sum_lemma(0.5, 1, 2.0);
    CHECK(rel(one.lhs, 1.0 / (3.0 + 2.0 * std::sqrt(3.0))) <= 1e-15);
    CHECK(rel(one.rhs, std::log(4.0) / 8.0) <= 1e-15);
    for (double beta : {0.5, 1.5, 3.0}) {
        const double a = std::abs(sum_lemma(beta, 10000, 200.0).gap());
        const double b = std::abs(sum_lemma(beta, 40000, 400.0).gap());
        CAPTURE(beta);
        CHECK(a / b >= 3.0);
        CHECK(a / b <= 5.0);
    }
    CHECK_THROWS_AS(sum_lemma(1.5, 100, 10.0), std::domain_error);
    CHECK_THROWS_AS(sum_lemma(0.0, 100, 20.0), std::domain_error);
}

TEST_CASE("evaluate gates the regions") {
    const EvalReport at_one = evaluate(kHermite, 80, 1.0);
    CHECK(at_one.airy_uniform);
    CHECK_FALSE(at_one.outer);
    CHECK_FALSE(at_one.inner);

    const EvalReport outside = evaluate(kGeneric, 80, 1.2);
    CHECK(outside.outer);
    CHECK_FALSE(outside.inner);

    const EvalReport inside = evaluate(kGeneric, 80, 0.4);
    CHECK(inside.inner);
    CHECK_FALSE(inside.outer);

    const EvalReport origin = evaluate(kGeneric, 80, 0.01);
    CHECK_FALSE(origin.airy_uniform);
    CHECK_FALSE(origin.inner);

    for (const EvalReport& r : {at_one, outside, inside}) {
        if (r.rel_err_uniform) CHECK(*r.rel_err_uniform >= 0.0);
        if (r.rel_err_outer) CHECK(*r.rel_err_outer >= 0.0);
        if (r.rel_err_inner) CHECK(*r.rel_err_inner >= 0.0);
    }
}

TEST_CASE("evaluate reflects negative t") {
    for (std::int64_t n : {81, 82}) {
        for (double t : {0.4, 1.0, 1.7}) {
            const EvalReport a = evaluate(kGeneric, n, t);
            const EvalReport b = evaluate(kGeneric, n, -t);
            const double s = n % 2 == 0 ? 1.0 : -1.0;
            CHECK(relative_error(b.exact, a.exact * s) <= 1e-13);
            CHECK(relative_error(*b.airy_uniform, *a.airy_uniform * s) == 0.0);
            CHECK(*b.rel_err_uniform == doctest::Approx(*a.rel_err_uniform).epsilon(1e-9));
        }
    }
}

TEST_CASE("no overflow up to n = 10^4, t = 10") {
    for (double t : {0.5, 1.0, 3.0, 10.0}) {
        const EvalReport r = evaluate(kGeneric, 10000, t);
        CHECK(std::isfinite(r.exact.log_abs()));
        CHECK(std::isfinite(r.airy_uniform->log_abs()));
        if (r.outer) CHECK(std::isfinite(r.outer->log_abs()));
        if (r.inner) CHECK(std::isfinite(r.inner->log_abs()));
        CHECK(*r.rel_err_uniform < 1e-2);
    }
}

}  // TEST_SUITE

// One PASS/FAIL line per acceptance criterion. Every tolerance is fixed here.
//
//   acceptance            run all criteria
//   acceptance --only N   run criterion N

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "cohpoly/asymptotics.hpp"
#include "cohpoly/recurrence.hpp"
#include "cohpoly/specfun.hpp"
#include "cohpoly/zeros.hpp"

using namespace cohpoly;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string join_ratios(const std::vector<double>& r) {
    std::string s;
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? ", " : "") + fmt("%.3f", r[i]);
    return s;
}

bool in_band(const std::vector<double>& r, double lo, double hi) {
    return std::all_of(r.begin(), r.end(), [&](double v) { return v >= lo && v <= hi; });
}

std::vector<double> ratios(const std::vector<double>& errs) {
    std::vector<double> out;
    for (std::size_t i = 1; i < errs.size(); ++i) out.push_back(errs[i - 1] / errs[i]);
    return out;
}

const std::vector<std::int64_t> kLadder = {100, 200, 400, 800};
constexpr double kDecayLo = 1.6;
constexpr double kDecayHi = 2.6;

std::vector<Params> parameter_grid() {
    std::vector<Params> out;
    for (double a : {0.0, 0.3, 0.49, 0.5, 0.9}) {
        for (double b : {0.6, 1.0, 1.5, 2.4}) {
            if (a < b) out.emplace_back(a, b);
        }
    }
    return out;
}

Outcome hermite_reduction() {
    constexpr double kTol = 1e-10;
    const Params p(0.5, 1.5);
    double worst = 0.0;
    for (std::int64_t n = 0; n <= 50; ++n) {
        for (double x : {0.3, 1.1, 2.7, 5.0}) {
            const PhiPair e = eval_phi_pair(p, n, x);
            worst = std::max(worst, relative_gap(e.current, hermite_reference(n, x), e.magnitude()));
        }
    }
    return {worst <= kTol, "max envelope-relative deviation " + fmt("%.3e", worst) + " (tol 1e-10)"};
}

Outcome oracle_equivalence() {
    constexpr double kTol = 1e-9;
    constexpr double kGuard = 1e-6;
    const std::pair<const char*, const char*> params[] = {{"0", "1"}, {"3/10", "17/10"}, {"1/2", "3/2"}};
    const BigRational xs[] = {BigRational(1, 4), BigRational(13, 4), BigRational(6)};
    double worst = 0.0;
    int checked = 0;
    for (const auto& [a, b] : params) {
        const RationalParams q = RationalParams::parse(a, b);
        const Params p = q.to_params();
        for (const BigRational& x : xs) {
            ScaledReal running_max;
            BigRational prev(0);
            BigRational cur(1);
            for (std::int64_t n = 0; n <= 60; ++n) {
                if (n == 1) {
                    prev = cur;
                    cur = x;
                } else if (n > 1) {
                    BigRational next = x * cur - lambda_n_exact(q, n - 1) / BigRational(2) * prev;
                    prev = cur;
                    cur = std::move(next);
                }
                const ScaledReal pi = cur.to_scaled();
                if (abs_less(running_max, pi)) running_max = pi.abs();
                if (pi.is_zero() || abs_less(pi, running_max * kGuard)) continue;
                const ScaledReal want = pi * ScaledReal::from_log(1, log_gamma_n(p, n));
                worst = std::max(worst, relative_error(eval_phi(p, n, x.to_double()), want));
                ++checked;
            }
        }
    }
    return {worst <= kTol, std::to_string(checked) + " guarded points, max relative error " + fmt("%.3e", worst) +
                               " (tol 1e-9)"};
}

Outcome moment_consistency() {
    constexpr double kTol = 1e-12;
    double worst = 0.0;
    for (const Params& p : parameter_grid()) {
        for (std::int64_t n = 1; n <= 200; ++n) {
            const double l = lambda_n(p, n);
            worst = std::max(worst, std::abs(lambda_from_moments(p, n) - l) / l);
        }
    }
    return {worst <= kTol, "max relative gap " + fmt("%.3e", worst) + " over 18 parameter pairs (tol 1e-12)"};
}

Outcome outer_decay() {
    const Params p(0.3, 1.7);
    std::vector<double> errs;
    for (std::int64_t n : kLadder) errs.push_back(*evaluate(p, n, 1.5).rel_err_outer);
    const auto r = ratios(errs);
    return {in_band(r, kDecayLo, kDecayHi), "t=1.5 error ratios [" + join_ratios(r) + "] (band [1.6, 2.6])"};
}

Outcome inner_decay() {
    const Params p(0.3, 1.7);
    std::vector<double> errs;
    for (std::int64_t n : kLadder) errs.push_back(*convergence_point(p, n, 0.5).err_inner);
    const auto r = ratios(errs);
    return {in_band(r, kDecayLo, kDecayHi),
            "phase maxima near t=0.5 error ratios [" + join_ratios(r) + "] (band [1.6, 2.6])"};
}

Outcome turning_point() {
    constexpr double kUniformityFactor = 3.0;
    const Params p(0.3, 1.7);
    std::vector<double> errs;
    for (std::int64_t n : kLadder) errs.push_back(*convergence_point(p, n, 1.0).err_uniform);
    const auto r = ratios(errs);
    const bool decay = in_band(r, kDecayLo, kDecayHi);

    const std::int64_t n = kLadder.back();
    const ConvergencePoint outside = convergence_point(p, n, 1.5);
    const ConvergencePoint inside = convergence_point(p, n, 0.5);
    const auto spread = [](double a, double b) { return std::max(a / b, b / a); };
    const double f_out = spread(*outside.err_uniform, *outside.err_outer);
    const double f_in = spread(*inside.err_uniform, *inside.err_inner);
    const bool uniform = f_out <= kUniformityFactor && f_in <= kUniformityFactor;

    std::string detail = "t=1 error ratios [" + join_ratios(r) + "] (band [1.6, 2.6]); n=800 uniform/outer at t=1.5 " +
                         fmt("%.3f", f_out) + "x, uniform/inner at t=" + fmt("%.6f", inside.t_eval) + " " +
                         fmt("%.3f", f_in) + "x (limit 3x)";
    return {decay && uniform, detail};
}

Outcome ratio_lemma() {
    const RationalParams q = RationalParams::parse("3/10", "17/10");
    const Params p = q.to_params();
    std::vector<double> errs;
    for (std::int64_t n : {100, 200, 400}) {
        // The oracle needs a rational point, so use the double nearest 2 sqrt(N) and the z it implies.
        const double x = 2.0 * std::sqrt(p.big_n(n));
        const double z = x / std::sqrt(p.big_n(n));
        const ScaledReal exact = eval_pi_exact(q, n, BigRational::from_double(x)).to_scaled();
        errs.push_back(relative_error(pi_from_ratios(p, n, z), exact));
    }
    const auto r = ratios(errs);
    return {in_band(r, kDecayLo, kDecayHi), "z=2 product-law error ratios [" + join_ratios(r) + "] (band [1.6, 2.6])"};
}

Outcome sum_lemma_decay() {
    constexpr double kLo = 3.0;
    constexpr double kHi = 5.0;
    std::vector<double> r;
    for (double beta : {0.5, 1.5, 3.0}) {
        const double a = std::abs(sum_lemma(beta, 10000, 2.0 * std::sqrt(10000.0)).gap());
        const double b = std::abs(sum_lemma(beta, 40000, 2.0 * std::sqrt(40000.0)).gap());
        r.push_back(a / b);
    }
    return {in_band(r, kLo, kHi), "gap shrink factors for beta 0.5, 1.5, 3: [" + join_ratios(r) + "] (band [3, 5])"};
}

Outcome zero_distribution() {
    constexpr double kKsMax = 0.06;
    constexpr double kConfinement = 1.2;
    constexpr double kParamSpread = 0.01;
    const Params p(0.3, 1.7);
    const ZeroReport small = zero_report(p, 100, 1.0);
    const ZeroReport large = zero_report(p, 400, 1.0);
    const ZeroReport hermite = zero_report(Params(0.5, 1.5), 400, 1.0);

    bool symmetric = true;
    const auto& h = large.histogram.counts;
    for (std::size_t k = 0; k < h.size(); ++k) symmetric = symmetric && std::abs(h[k] - h[h.size() - 1 - k]) <= 1;
    double reach = 0.0;
    for (double v : large.rescaled) reach = std::max(reach, std::abs(v));

    const bool pass = large.ks < small.ks && large.ks <= kKsMax && symmetric && reach <= kConfinement &&
                      std::abs(large.ks - hermite.ks) <= kParamSpread;
    const std::string detail = "KS(100)=" + fmt("%.5f", small.ks) + ", KS(400)=" + fmt("%.5f", large.ks) +
                               " (max 0.06), Hermite KS(400)=" + fmt("%.5f", hermite.ks) + " (spread max 0.01), " +
                               (symmetric ? "histogram symmetric" : "histogram NOT symmetric") +
                               ", max |rescaled zero| " + fmt("%.4f", reach) + " (max 1.2)";
    return {pass, detail};
}

Outcome special_functions() {
    constexpr double kWronskianTol = 1e-12;
    constexpr double kOriginTol = 1e-12;
    constexpr double kGammaTol = 1e-11;
    double w = 0.0;
    for (double m = 1e-3; m <= 10.0; m *= 1.15) {
        for (double x : {m, -m}) {
            if (x > 8.0) continue;
            const specfun::AiryQuad a = specfun::airy(x);
            const double wr = a.ai * a.bi_prime - a.ai_prime * a.bi;
            w = std::max(w, std::abs(wr * std::numbers::pi - 1.0));
        }
    }
    const specfun::AiryQuad z = specfun::airy(0.0);
    const double origin = std::max({std::abs(z.ai / 0.3550280538878172392600632 - 1.0),
                                    std::abs(z.ai_prime / -0.2588194037928067984051836 - 1.0),
                                    std::abs(z.bi / 0.6149266274460007351509224 - 1.0),
                                    std::abs(z.bi_prime / 0.4482883573538263579148237 - 1.0)});
    double g = 0.0;
    for (double x = 0.1; x <= 50.0; x *= 1.07) {
        const double lhs = specfun::log_gamma(x + 1.0);
        g = std::max(g, std::abs(lhs - specfun::log_gamma(x) - std::log(x)) / std::max(1.0, std::abs(lhs)));
    }
    for (double x = 0.5; x <= 20.0; x += 0.37) {
        const double lhs = specfun::log_gamma(2.0 * x);
        const double rhs = specfun::log_gamma(x) + specfun::log_gamma(x + 0.5) + (2.0 * x - 0.5) * std::numbers::ln2 -
                           0.5 * std::log(2.0 * std::numbers::pi);
        g = std::max(g, std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs)));
    }
    return {w <= kWronskianTol && origin <= kOriginTol && g <= kGammaTol,
            "Wronskian " + fmt("%.2e", w) + " (tol 1e-12), airy(0) " + fmt("%.2e", origin) +
                " (tol 1e-12), log_gamma identities " + fmt("%.2e", g) + " (tol 1e-11)"};
}

}  // namespace

int main(int argc, char** argv) {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"Hermite reduction", hermite_reduction},
        {"oracle equivalence", oracle_equivalence},
        {"moment consistency", moment_consistency},
        {"outer-formula decay", outer_decay},
        {"inner-formula decay", inner_decay},
        {"turning-point decay and uniformity", turning_point},
        {"ratio lemma", ratio_lemma},
        {"sum lemma", sum_lemma_decay},
        {"zero distribution", zero_distribution},
        {"special functions", special_functions},
    };
    int only = 0;
    if (argc == 3 && std::string(argv[1]) == "--only") only = std::atoi(argv[2]);
    if (argc != 1 && (only < 1 || only > static_cast<int>(criteria.size()))) {
        std::fprintf(stderr, "usage: acceptance [--only 1..%zu]\n", criteria.size());
        return 1;
    }
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        if (only && static_cast<int>(i) + 1 != only) continue;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %zu (%s): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str());
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}

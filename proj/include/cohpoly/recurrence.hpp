#pragma once

#include <cstdint>
#include <string_view>

#include "cohpoly/big_rational.hpp"
#include "cohpoly/scaled_real.hpp"

namespace cohpoly {

/// The family parameters (alpha, beta) with 0 <= alpha < beta.
class Params {
public:
    /// Throws std::invalid_argument unless 0 <= alpha < beta (both finite).
    Params(double alpha, double beta);

    double alpha() const { return alpha_; }
    double beta() const { return beta_; }

    /// N = n + beta - 1, the large parameter of the asymptotic formulas.
    double big_n(std::int64_t n) const { return static_cast<double>(n) + beta_ - 1.0; }

private:
    double alpha_;
    double beta_;
};

/// Exact parameters for the rational oracle.
class RationalParams {
public:
    /// Throws std::invalid_argument unless 0 <= alpha < beta.
    RationalParams(BigRational alpha, BigRational beta);
    /// Parses both values with BigRational::parse (std::domain_error on failure).
    static RationalParams parse(std::string_view alpha, std::string_view beta);

    const BigRational& alpha() const { return alpha_; }
    const BigRational& beta() const { return beta_; }
    Params to_params() const { return {alpha_.to_double(), beta_.to_double()}; }

private:
    BigRational alpha_;
    BigRational beta_;
};

/// Recurrence data at one index n >= 1.
struct CoeffSet {
    std::int64_t n = 0;
    double lambda = 0.0;  // lambda_n
    double b = 0.0;       // sqrt(lambda_n / 2), the Jacobi off-diagonal
    double a_n = 0.0;     // A_n of p_{n+1} - A_n x p_n + p_{n-1} = 0
    double big_n = 0.0;   // N = n + beta - 1
};

/// lambda_n = (n+beta+alpha-1)(n+beta-alpha-1) / (2(n+beta-1/2)), n >= 1.
double lambda_n(const Params& p, std::int64_t n);

/// The same coefficient in the form 1/2 (n+beta-3/2 - (alpha^2-1/4)/(n+beta-1/2)).
double lambda_n_rewritten(const Params& p, std::int64_t n);

/// lambda_n as the ratio of even moments mu_{2n} / mu_{2n-2}, with
/// mu_{2n} = (beta+alpha)_n (beta-alpha)_n / (2^n (beta+1/2)_n) accumulated in log space.
double lambda_from_moments(const Params& p, std::int64_t n);

/// ln mu_{2n}.
double log_moment(const Params& p, std::int64_t n);

/// Exact lambda_n for rational parameters.
BigRational lambda_n_exact(const RationalParams& p, std::int64_t n);

/// ln k_n, the normalization that maps phi_n onto the standard form p_n.
double log_k_n(const Params& p, std::int64_t n);

/// ln gamma_n, with gamma_n the leading coefficient of phi_n.
double log_gamma_n(const Params& p, std::int64_t n);

CoeffSet coefficients(const Params& p, std::int64_t n);

/// phi_n(x) together with phi_{n-1}(x) (the latter is zero for n = 0).
struct PhiPair {
    ScaledReal current;
    ScaledReal previous;

    /// sqrt(phi_n^2 + phi_{n-1}^2): a local magnitude that never vanishes.
    ScaledReal magnitude() const { return hypot(current, previous); }
};

/// Forward three-term recurrence with per-step binary renormalization of
/// the two-term window, so no intermediate overflows.
PhiPair eval_phi_pair(const Params& p, std::int64_t n, double x);

inline ScaledReal eval_phi(const Params& p, std::int64_t n, double x) {
    return eval_phi_pair(p, n, x).current;
}

/// Exact pi_n(x) = phi_n(x) / gamma_n from the monic recurrence
/// pi_{k+1} = x pi_k - (lambda_k / 2) pi_{k-1}.
BigRational eval_pi_exact(const RationalParams& p, std::int64_t n, const BigRational& x);

/// p_n(x) = phi_n(x) / k_n.
ScaledReal eval_p_standard(const Params& p, std::int64_t n, double x);

/// 2^{-n/2} (n!)^{-1/2} H_n(sqrt(2) x) from the physicists' Hermite recurrence.
/// Shares no code path with eval_phi.
PhiPair hermite_reference_pair(std::int64_t n, double x);

inline ScaledReal hermite_reference(std::int64_t n, double x) {
    return hermite_reference_pair(n, x).current;
}

}  // namespace cohpoly

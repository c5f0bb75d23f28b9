#include "cohpoly/scaled_real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cohpoly {

namespace {

// ln 2 split so that k * kLn2Hi is exact for |k| < 2^20.
constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;
constexpr double kLog10of2 = 0.30102999566398119521;
constexpr double kLog10of2Hi = 0.3010299955494702;  // low 21 bits clear
constexpr double kLog10of2Lo = 1.1451100898021838e-10;

}  // namespace

ScaledReal ScaledReal::from_parts(double v, std::int64_t exponent2) {
    if (!std::isfinite(v)) throw std::domain_error("ScaledReal: non-finite input");
    ScaledReal out;
    if (v == 0.0) return out;
    int e = 0;
    const double m = std::frexp(std::abs(v), &e);  // m in [0.5, 1)
    out.sign_ = v > 0 ? 1 : -1;
    out.mantissa_ = 2.0 * m;
    out.exponent2_ = exponent2 + e - 1;
    return out;
}

ScaledReal ScaledReal::from_double(double v) { return from_parts(v, 0); }

ScaledReal ScaledReal::from_log(int sign, double log_abs) {
    if (sign == 0) return {};
    if (std::isnan(log_abs)) throw std::domain_error("ScaledReal: NaN logarithm");
    if (log_abs == -std::numeric_limits<double>::infinity()) return {};
    if (!std::isfinite(log_abs)) throw std::domain_error("ScaledReal: infinite logarithm");
    const double k = std::floor(log_abs / std::numbers::ln2);
    // Cody-Waite reduction keeps the residual accurate for large k.
    const double r = (log_abs - k * kLn2Hi) - k * kLn2Lo;
    return from_parts(sign > 0 ? std::exp(r) : -std::exp(r), static_cast<std::int64_t>(k));
}

ScaledReal ScaledReal::from_log10(int sign, double log10_abs) {
    if (sign == 0) return {};
    if (!std::isfinite(log10_abs)) throw std::domain_error("ScaledReal: non-finite logarithm");
    const double k = std::floor(log10_abs / kLog10of2);
    const double r = (log10_abs - k * kLog10of2Hi) - k * kLog10of2Lo;
    const double m = std::pow(10.0, r);
    return from_parts(sign > 0 ? m : -m, static_cast<std::int64_t>(k));
}

double ScaledReal::log_abs() const {
    if (sign_ == 0) return -std::numeric_limits<double>::infinity();
    return std::log(mantissa_) + static_cast<double>(exponent2_) * std::numbers::ln2;
}

double ScaledReal::log10_abs() const {
    if (sign_ == 0) return -std::numeric_limits<double>::infinity();
    return std::log10(mantissa_) + static_cast<double>(exponent2_) * kLog10of2;
}

double ScaledReal::to_double() const {
    if (sign_ == 0) return 0.0;
    constexpr std::int64_t kClamp = 1 << 20;
    const auto e = static_cast<int>(std::clamp<std::int64_t>(exponent2_, -kClamp, kClamp));
    return sign_ * std::ldexp(mantissa_, e);
}

ScaledReal ScaledReal::abs() const {
    ScaledReal out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

ScaledReal ScaledReal::sqrt() const {
    if (sign_ < 0) throw std::domain_error("ScaledReal::sqrt of a negative value");
    if (sign_ == 0) return {};
    std::int64_t e = exponent2_;
    double m = mantissa_;
    if (e % 2 != 0) {
        m *= 2.0;
        e -= 1;
    }
    return from_parts(std::sqrt(m), e / 2);
}

ScaledReal ScaledReal::operator-() const {
    ScaledReal out = *this;
    out.sign_ = -out.sign_;
    return out;
}

ScaledReal operator*(const ScaledReal& a, const ScaledReal& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return {};
    return ScaledReal::from_parts(a.sign_ * b.sign_ * a.mantissa_ * b.mantissa_,
                                  a.exponent2_ + b.exponent2_);
}

ScaledReal operator/(const ScaledReal& a, const ScaledReal& b) {
    if (b.sign_ == 0) throw std::domain_error("ScaledReal: division by zero");
    if (a.sign_ == 0) return {};
    return ScaledReal::from_parts(a.sign_ * b.sign_ * a.mantissa_ / b.mantissa_,
                                  a.exponent2_ - b.exponent2_);
}

ScaledReal operator+(const ScaledReal& a, const ScaledReal& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    const std::int64_t e = std::max(a.exponent2_, b.exponent2_);
    const std::int64_t da = a.exponent2_ - e;
    const std::int64_t db = b.exponent2_ - e;
    // Anything more than ~1100 binades down underflows to zero anyway.
    const double va = da < -1100 ? 0.0 : a.sign_ * std::ldexp(a.mantissa_, static_cast<int>(da));
    const double vb = db < -1100 ? 0.0 : b.sign_ * std::ldexp(b.mantissa_, static_cast<int>(db));
    return ScaledReal::from_parts(va + vb, e);
}

ScaledReal operator-(const ScaledReal& a, const ScaledReal& b) { return a + (-b); }

bool abs_less(const ScaledReal& a, const ScaledReal& b) {
    if (b.sign_ == 0) return false;
    if (a.sign_ == 0) return true;
    if (a.exponent2_ != b.exponent2_) return a.exponent2_ < b.exponent2_;
    return a.mantissa_ < b.mantissa_;
}

std::string ScaledReal::to_string() const {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s%.17g*2^%lld", sign_ < 0 ? "-" : "", mantissa_,
                  static_cast<long long>(exponent2_));
    return buf;
}

double relative_gap(const ScaledReal& a, const ScaledReal& b, const ScaledReal& scale) {
    const ScaledReal diff = a - b;
    if (diff.is_zero()) return 0.0;
    if (scale.is_zero()) return std::numeric_limits<double>::infinity();
    return (diff / scale).abs().to_double();
}

ScaledReal hypot(const ScaledReal& a, const ScaledReal& b) {
    if (a.is_zero()) return b.abs();
    if (b.is_zero()) return a.abs();
    const std::int64_t e = std::max(a.exponent2(), b.exponent2());
    const ScaledReal shift = ScaledReal::from_parts(1.0, -e);
    const double va = (a * shift).to_double();
    const double vb = (b * shift).to_double();
    return ScaledReal::from_parts(std::hypot(va, vb), e);
}

}  // namespace cohpoly

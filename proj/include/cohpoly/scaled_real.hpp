#pragma once

#include <cstdint>
#include <string>

namespace cohpoly {

/// Real number stored as sign * mantissa * 2^exponent2 with mantissa in
/// [1, 2), or the exact zero (sign 0, mantissa 0, exponent2 0).
///
/// Used for polynomial values that grow like exp(N t^2) and leave the
/// binary64 range long before the formulas stop being interesting.
class ScaledReal {
public:
    constexpr ScaledReal() = default;

    static ScaledReal from_double(double v);
    /// v * 2^exponent2, for finite v.
    static ScaledReal from_parts(double v, std::int64_t exponent2);
    /// sign * exp(log_abs). sign == 0 gives zero regardless of log_abs.
    static ScaledReal from_log(int sign, double log_abs);
    static ScaledReal from_log10(int sign, double log10_abs);

    int sign() const { return sign_; }
    double mantissa() const { return mantissa_; }
    std::int64_t exponent2() const { return exponent2_; }
    bool is_zero() const { return sign_ == 0; }

    /// Natural log of |value|; -inf for zero.
    double log_abs() const;
    double log10_abs() const;
    /// Plain double; overflows to +-inf or underflows to 0 outside range.
    double to_double() const;

    ScaledReal abs() const;
    ScaledReal sqrt() const;
    ScaledReal operator-() const;

    friend ScaledReal operator*(const ScaledReal& a, const ScaledReal& b);
    friend ScaledReal operator/(const ScaledReal& a, const ScaledReal& b);
    friend ScaledReal operator+(const ScaledReal& a, const ScaledReal& b);
    friend ScaledReal operator-(const ScaledReal& a, const ScaledReal& b);
    friend ScaledReal operator*(const ScaledReal& a, double b) { return a * from_double(b); }

    /// Compare magnitudes.
    friend bool abs_less(const ScaledReal& a, const ScaledReal& b);

    std::string to_string() const;

private:
    int sign_ = 0;
    std::int64_t exponent2_ = 0;
    double mantissa_ = 0.0;
};

/// |a - b| / |scale| as a plain double (may be +inf if scale is zero).
double relative_gap(const ScaledReal& a, const ScaledReal& b, const ScaledReal& scale);

/// |a - b| / |b|.
inline double relative_error(const ScaledReal& a, const ScaledReal& b) {
    return relative_gap(a, b, b);
}

/// sqrt(a^2 + b^2).
ScaledReal hypot(const ScaledReal& a, const ScaledReal& b);

}  // namespace cohpoly

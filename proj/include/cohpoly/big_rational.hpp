#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

#include "cohpoly/scaled_real.hpp"

namespace cohpoly {

/// Exact rational, always in lowest terms with a positive denominator.
class BigRational {
public:
    BigRational() = default;
    BigRational(long num) : value_(num) {}  // NOLINT(google-explicit-constructor)
    BigRational(long num, long den);

    /// Exact binary value of a finite double.
    static BigRational from_double(double v);
    /// Parses "p", "p/q", or a decimal literal such as "-0.3" or "1.25e-2".
    /// Throws std::domain_error on anything that is not an exact rational.
    static BigRational parse(std::string_view text);

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    double to_double() const { return value_.get_d(); }
    /// Value as ScaledReal, with no overflow for huge numerators/denominators.
    ScaledReal to_scaled() const;
    std::string to_string() const { return value_.get_str(); }

    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    BigRational operator-() const;
    BigRational abs() const;

    friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b);

private:
    explicit BigRational(mpq_class v);
    mpq_class value_;
};

}  // namespace cohpoly

#include "cohpoly/big_rational.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>

namespace cohpoly {

namespace {

ScaledReal scaled_from_mpz(const mpz_class& z) {
    if (sgn(z) == 0) return {};
    long exp = 0;
    const double d = mpz_get_d_2exp(&exp, z.get_mpz_t());  // |d| in [0.5, 1)
    return ScaledReal::from_parts(d, exp);
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

mpz_class pow10(unsigned long e) {
    mpz_class out;
    mpz_ui_pow_ui(out.get_mpz_t(), 10, e);
    return out;
}

}  // namespace

BigRational::BigRational(long num, long den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

BigRational::BigRational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

BigRational BigRational::from_double(double v) {
    if (!std::isfinite(v)) throw std::domain_error("BigRational: non-finite double is not rational");
    return BigRational(mpq_class(v));
}

BigRational BigRational::parse(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    const auto fail = [&] {
        return std::domain_error("BigRational: not an exact rational literal: '" + std::string(text) + "'");
    };
    if (s.empty()) throw fail();

    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
        const BigRational num = parse(s.substr(0, slash));
        const BigRational den = parse(s.substr(slash + 1));
        if (den.sign() == 0) throw fail();
        return num / den;
    }

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view es = s.substr(e + 1);
        bool eneg = false;
        if (!es.empty() && (es.front() == '+' || es.front() == '-')) {
            eneg = es.front() == '-';
            es.remove_prefix(1);
        }
        if (!all_digits(es) || es.size() > 6) throw fail();
        exponent = std::stol(std::string(es));
        if (eneg) exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string_view int_part = s;
    std::string_view frac_part;
    if (const auto dot = s.find('.'); dot != std::string_view::npos) {
        int_part = s.substr(0, dot);
        frac_part = s.substr(dot + 1);
    }
    if (int_part.empty() && frac_part.empty()) throw fail();
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part))) {
        throw fail();
    }
    const std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    exponent -= static_cast<long>(frac_part.size());
    mpq_class q(num);
    if (exponent > 0) q *= mpq_class(pow10(static_cast<unsigned long>(exponent)));
    if (exponent < 0) q /= mpq_class(pow10(static_cast<unsigned long>(-exponent)));
    if (negative) q = -q;
    return BigRational(q);
}

ScaledReal BigRational::to_scaled() const {
    if (sign() == 0) return {};
    return scaled_from_mpz(value_.get_num()) / scaled_from_mpz(value_.get_den());
}

BigRational& BigRational::operator+=(const BigRational& o) {
    value_ += o.value_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
    value_ -= o.value_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
    value_ *= o.value_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.sign() == 0) throw std::domain_error("BigRational: division by zero");
    value_ /= o.value_;
    return *this;
}

BigRational BigRational::operator-() const { return BigRational(mpq_class(-value_)); }

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(value_))); }

std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace cohpoly

#include "subcone/rational.hpp"

#include <cctype>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace subcone {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (s.empty()) {
        return false;
    }
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
        i = 1;
    }
    if (i == s.size()) {
        return false;
    }
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational::Rational(mpq_class v) : value_(std::move(v)) { value_.canonicalize(); }

Rational::Rational(std::int64_t value) : value_(mpz_class(std::to_string(value)), 1) {}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw std::invalid_argument("rational with zero denominator");
    }
    value_ = mpq_class(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_integer_literal(num, true) || (slash != std::string_view::npos && !is_integer_literal(den, false))) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    std::string n(num);
    if (n[0] == '+') {
        n.erase(0, 1);
    }
    mpz_class zn(n, 10);
    mpz_class zd(slash == std::string_view::npos ? std::string("1") : std::string(den), 10);
    if (zd == 0) {
        throw std::invalid_argument("rational with zero denominator '" + std::string(text) + "'");
    }
    return Rational(mpq_class(zn, zd));
}

Rational Rational::pow2(int exponent)
{
    mpz_class p = 1;
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(std::abs(exponent)));
    return exponent >= 0 ? Rational(mpq_class(p, 1)) : Rational(mpq_class(1, p));
}

std::string Rational::str() const { return value_.get_str(10); }

long double Rational::to_long_double() const
{
    if (is_zero()) {
        return 0.0L;
    }
    // Scale so the integer quotient carries ~66 significant bits, then keep
    // the top 64 of them (the x87 mantissa width).
    mpz_class n = value_.get_num();
    mpz_abs(n.get_mpz_t(), n.get_mpz_t());
    mpz_class d = value_.get_den();
    const long scale = 66 - static_cast<long>(mpz_sizeinbase(n.get_mpz_t(), 2))
                       + static_cast<long>(mpz_sizeinbase(d.get_mpz_t(), 2));
    if (scale > 0) {
        mpz_mul_2exp(n.get_mpz_t(), n.get_mpz_t(), static_cast<mp_bitcnt_t>(scale));
    } else if (scale < 0) {
        mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(-scale));
    }
    mpz_class q = n / d;
    const long drop = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2)) - 64;
    if (drop > 0) {
        mpz_fdiv_q_2exp(q.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(drop));
    }
    unsigned long long top = 0;
    mpz_export(&top, nullptr, -1, sizeof(top), 0, 0, q.get_mpz_t());
    const long double mag = std::ldexp(static_cast<long double>(top), static_cast<int>(std::max(drop, 0L) - scale));
    return sign() < 0 ? -mag : mag;
}

double Rational::to_double() const { return value_.get_d(); }

bool Rational::is_integer() const { return value_.get_den() == 1; }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::operator-() const
{
    Rational r;
    mpq_neg(r.value_.get_mpq_t(), value_.get_mpq_t());
    return r;
}

Rational& Rational::operator+=(const Rational& rhs)
{
    mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs)
{
    mpq_sub(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs)
{
    mpq_mul(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs)
{
    if (rhs.is_zero()) {
        throw std::domain_error("rational division by zero");
    }
    mpq_div(value_.get_mpq_t(), value_.get_mpq_t(), rhs.value_.get_mpq_t());
    return *this;
}

std::size_t Rational::hash() const
{
    return std::hash<std::string>{}(str());
}

}  // namespace subcone

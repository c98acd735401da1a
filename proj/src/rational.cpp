#include "conifold/rational.hpp"

#include "conifold/errors.hpp"

#include <cctype>
#include <cmath>

namespace conifold {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

[[noreturn]] void bad_literal(std::string_view text)
{
    throw Error(ErrorCode::SyntaxError, "malformed number '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }

    Rational result;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view num = body.substr(0, slash);
        std::string_view den = body.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            bad_literal(text);
        BigInt d(std::string(den), 10);
        if (d == 0)
            throw Error(ErrorCode::SyntaxError, "zero denominator in '" + std::string(text) + "'");
        result = Rational(BigInt(std::string(num), 10), d);
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole))
            || (!frac.empty() && !all_digits(frac)))
            bad_literal(text);
        std::string digits = std::string(whole) + std::string(frac);
        BigInt scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
        result = Rational(BigInt(digits.empty() ? std::string("0") : digits, 10), scale);
    } else {
        if (!all_digits(body))
            bad_literal(text);
        result = Rational(BigInt(std::string(body), 10));
    }
    result.canonicalize();
    return negative ? Rational(-result) : result;
}

std::string to_string(const Rational& value)
{
    return value.get_str();
}

double log_abs(const BigInt& value)
{
    if (value == 0)
        return -HUGE_VAL;
    long exponent = 0;
    double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return std::log(std::fabs(mantissa)) + static_cast<double>(exponent) * std::log(2.0);
}

double log_abs(const Rational& value)
{
    return log_abs(BigInt(value.get_num())) - log_abs(BigInt(value.get_den()));
}

std::vector<BigInt> primitive_integer_vector(const std::vector<Rational>& values)
{
    BigInt common = 1;
    for (const auto& v : values)
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), v.get_den_mpz_t());
    std::vector<BigInt> out;
    out.reserve(values.size());
    BigInt content = 0;
    for (const auto& v : values) {
        BigInt scaled = v.get_num() * (common / v.get_den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), scaled.get_mpz_t());
        out.push_back(std::move(scaled));
    }
    if (content > 1)
        for (auto& v : out)
            v /= content;
    return out;
}

}  // namespace conifold

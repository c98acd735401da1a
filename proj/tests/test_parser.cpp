#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "conifold/errors.hpp"
#include "conifold/laurent.hpp"
#include "corpus.hpp"

using namespace conifold;

namespace {

ErrorCode code_of(const std::string& text)
{
    try {
        parse_polynomial(text);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a parse error for: " << text);
    return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("grammar examples")
{
    const auto p1 = parse_polynomial("x1 + x1^-1");
    CHECK(p1.dimension() == 1);
    CHECK(p1.terms() == LaurentPolynomial::TermMap{{{1}, 1}, {{-1}, 1}});

    const auto orb = parse_polynomial("x1^2*x2^-1 + x1^-1*x2^2 + x1^-1*x2^-1");
    CHECK(orb.dimension() == 2);
    CHECK(orb.terms()
          == LaurentPolynomial::TermMap{{{2, -1}, 1}, {{-1, 2}, 1}, {{-1, -1}, 1}});

    const auto frac = parse_polynomial("3/2*x1 + 0.5*x1^-2");
    CHECK(frac.terms() == LaurentPolynomial::TermMap{{{1}, Rational(3, 2)}, {{-2}, Rational(1, 2)}});

    CHECK(code_of("x1 - x2") == ErrorCode::NegativeCoefficient);
}

TEST_CASE("decimals are exact rationals")
{
    const auto w = parse_polynomial("0.1*x1 + 2.50*x1^-1 + .25");
    CHECK(w.terms().at({1}) == Rational(1, 10));
    CHECK(w.terms().at({-1}) == Rational(5, 2));
    CHECK(w.terms().at({0}) == Rational(1, 4));
}

TEST_CASE("whitespace, repeated factors, merging")
{
    const auto w = parse_polynomial("  x1 *x1*x2^ -1+x1^2 *x2^-1 + 3 ");
    CHECK(w.terms() == LaurentPolynomial::TermMap{{{0, 0}, 3}, {{2, -1}, 2}});
    CHECK(parse_polynomial("2*x1 - x1 + x1^-1").terms().at({1}) == 1);
    CHECK(parse_polynomial("x1^+2 + x1^-1").terms().count({2}) == 1);
    CHECK(parse_polynomial("x2^0 + x1", 3).dimension() == 3);
}

TEST_CASE("semantic sign errors")
{
    CHECK(code_of("-x1 + x1^-1") == ErrorCode::NegativeCoefficient);
    CHECK(code_of("x1 + -2*x1^-1") == ErrorCode::NegativeCoefficient);
    CHECK(code_of("x1 - x1 + x2") == ErrorCode::NegativeCoefficient);
    CHECK(code_of("0*x1 + x1^-1") == ErrorCode::NegativeCoefficient);
}

TEST_CASE("syntax errors")
{
    for (const char* bad : {"", "   ", "x1 +", "x0 + x1", "y1", "x1^", "x1 x2", "3/0*x1", "3/*x1", "x1*3",
                            "x1 ++ x2 ++", "x1^99999999999", "(x1)", "1.2.3*x1", "x"}) {
        CAPTURE(bad);
        CHECK(code_of(bad) == ErrorCode::SyntaxError);
    }
    CHECK(code_of("1 + 2") == ErrorCode::SyntaxError);  // no variables, no declared dimension
    CHECK_THROWS_AS(parse_polynomial("x3 + x1", 2), Error);
}

TEST_CASE("property: serialize then parse reproduces the term map")
{
    for (const auto& entry : corpus::polynomials()) {
        const auto w = corpus::parse(entry);
        CHECK(parse_polynomial(serialize(w), w.dimension()) == w);
    }

    std::mt19937_64 rng(21);
    std::uniform_int_distribution<int> exp(-4, 4);
    std::uniform_int_distribution<int> num(1, 50);
    for (int trial = 0; trial < 200; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 4);
        std::vector<std::pair<Exponent, Rational>> terms;
        const int count = 1 + static_cast<int>(rng() % 6);
        for (int t = 0; t < count; ++t) {
            Exponent n(d);
            for (auto& x : n)
                x = exp(rng);
            Rational c(num(rng), num(rng));
            c.canonicalize();
            terms.emplace_back(std::move(n), c);
        }
        const auto w = LaurentPolynomial::from_terms(d, terms);
        CHECK(parse_polynomial(serialize(w), d) == w);
    }
}

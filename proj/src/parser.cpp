#include "conifold/errors.hpp"
#include "conifold/laurent.hpp"

#include <cctype>
#include <charconv>
#include <limits>

namespace conifold {

namespace {

class PolynomialParser {
public:
    explicit PolynomialParser(std::string_view text) : text_(text) {}

    std::vector<std::pair<Exponent, Rational>> parse()
    {
        std::vector<std::pair<Exponent, Rational>> terms;
        skip_space();
        if (at_end())
            fail("empty polynomial");
        terms.push_back(term(read_sign()));
        while (true) {
            skip_space();
            if (at_end())
                break;
            const char c = peek();
            if (c != '+' && c != '-')
                fail(std::string("expected '+' or '-', found '") + c + "'");
            ++pos_;
            const bool negative = (c == '-') != read_sign();
            terms.push_back(term(negative));
        }
        return terms;
    }

    int max_index() const noexcept { return max_index_; }

private:
    using Factors = std::vector<std::pair<int, int>>;

    std::pair<Exponent, Rational> term(bool negative)
    {
        skip_space();
        Rational coefficient = 1;
        Factors factors;
        if (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.')) {
            coefficient = number();
            skip_space();
            if (!at_end() && peek() == '*') {
                ++pos_;
                factors.push_back(factor());
            }
        } else {
            factors.push_back(factor());
        }
        while (true) {
            skip_space();
            if (at_end() || peek() != '*')
                break;
            ++pos_;
            factors.push_back(factor());
        }
        if (negative)
            coefficient = -coefficient;

        Exponent n;
        for (const auto& [index, power] : factors) {
            if (n.size() < static_cast<std::size_t>(index))
                n.resize(index, 0);
            long long sum = static_cast<long long>(n[index - 1]) + power;
            if (sum > std::numeric_limits<int>::max() || sum < std::numeric_limits<int>::min())
                fail("exponent out of range");
            n[index - 1] = static_cast<int>(sum);
        }
        return {std::move(n), std::move(coefficient)};
    }

    // Optional sign in coefficient position; returns true for '-'.
    bool read_sign()
    {
        skip_space();
        if (!at_end() && (peek() == '-' || peek() == '+')) {
            const bool negative = peek() == '-';
            ++pos_;
            return negative;
        }
        return false;
    }

    Rational number()
    {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (!at_end() && peek() == '.') {
            ++pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
        } else if (!at_end() && peek() == '/') {
            ++pos_;
            const std::size_t den = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
                ++pos_;
            if (den == pos_)
                fail("missing denominator");
        }
        return parse_rational(text_.substr(start, pos_ - start));
    }

    std::pair<int, int> factor()
    {
        skip_space();
        if (at_end() || peek() != 'x')
            fail("expected variable 'x<index>'");
        ++pos_;
        const int index = integer(false);
        if (index < 1)
            fail("variable indices start at 1");
        max_index_ = std::max(max_index_, index);
        skip_space();
        int power = 1;
        if (!at_end() && peek() == '^') {
            ++pos_;
            skip_space();
            power = integer(true);
        }
        return {index, power};
    }

    int integer(bool allow_sign)
    {
        const std::size_t start = pos_;
        if (allow_sign && !at_end() && (peek() == '-' || peek() == '+'))
            ++pos_;
        const std::size_t digits = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos_;
        if (digits == pos_)
            fail("expected an integer");
        std::string_view token = text_.substr(start, pos_ - start);
        if (token.front() == '+')
            token.remove_prefix(1);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            fail("integer out of range");
        return value;
    }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos_;
    }

    bool at_end() const noexcept { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(pos_));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int max_index_ = 0;
};

}  // namespace

LaurentPolynomial parse_polynomial(std::string_view text, std::optional<int> dimension)
{
    PolynomialParser parser(text);
    auto terms = parser.parse();

    int d = parser.max_index();
    if (dimension) {
        if (*dimension < 1)
            throw Error(ErrorCode::InvalidInput, "declared dimension must be at least 1");
        if (*dimension < d)
            throw Error(ErrorCode::SyntaxError, "variable x" + std::to_string(d)
                                                    + " exceeds declared dimension "
                                                    + std::to_string(*dimension));
        d = *dimension;
    }
    if (d < 1)
        throw Error(ErrorCode::SyntaxError, "no variables; declare the dimension explicitly");

    LaurentPolynomial::TermMap merged;
    for (auto& [n, a] : terms) {
        n.resize(d, 0);
        merged[n] += a;
    }
    for (const auto& [n, a] : merged)
        if (sgn(a) <= 0)
            throw Error(ErrorCode::NegativeCoefficient,
                        "merged coefficient " + to_string(a) + " is not strictly positive");
    return LaurentPolynomial(d, std::move(merged));
}

}  // namespace conifold

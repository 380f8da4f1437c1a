#include "ultrafree/rational.hpp"

#include "ultrafree/errors.hpp"

#include <cctype>

namespace ultrafree {

namespace {

BigInt parse_integer(std::string_view text, std::size_t offset)
{
    if (text.empty())
        throw ParseError("empty integer in rational", 1, offset + 1);
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size())
        throw ParseError("missing digits in rational", 1, offset + i + 1);
    BigInt value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("expected digit in rational, got '" + std::string(1, text[i]) + "'", 1, offset + i + 1);
        value = value * 10 + (text[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(text, 0));
    BigInt num = parse_integer(text.substr(0, slash), 0);
    BigInt den = parse_integer(text.substr(slash + 1), slash + 1);
    if (den == 0)
        throw ParseError("zero denominator in rational", 1, slash + 2);
    return Rational(num, den);
}

std::string to_string(const Rational& q)
{
    auto num = boost::multiprecision::numerator(q);
    auto den = boost::multiprecision::denominator(q);
    if (den == 1)
        return num.str();
    return num.str() + "/" + den.str();
}

BigInt floor(const Rational& q)
{
    BigInt num = boost::multiprecision::numerator(q);
    BigInt den = boost::multiprecision::denominator(q);
    BigInt quotient = num / den;  // truncates toward zero
    if (num < 0 && quotient * den != num)
        quotient -= 1;
    return quotient;
}

BigInt ceil(const Rational& q)
{
    return -floor(-q);
}

Rational e_upper()
{
    return Rational(2718282, 1000000);
}

Rational pow(const Rational& base, unsigned exponent)
{
    Rational result = 1;
    for (unsigned i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    if (k > n - k)
        k = n - k;
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace ultrafree

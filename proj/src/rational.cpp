#include "chaincover/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace chaincover {

Rational parse_decimal(const std::string& text) {
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::string digits;
    std::size_t frac_len = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            digits.push_back(c);
            seen_digit = true;
            if (seen_dot) ++frac_len;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            throw std::invalid_argument("not an exact decimal: '" + text + "'");
        }
    }
    if (!seen_digit)
        throw std::invalid_argument("not an exact decimal: '" + text + "'");

    // Leading zeros would read as an octal prefix.
    std::size_t first = digits.find_first_not_of('0');
    digits = first == std::string::npos ? "0" : digits.substr(first);
    BigInt numerator(digits);
    BigInt denominator = 1;
    for (std::size_t k = 0; k < frac_len; ++k) denominator *= 10;
    if (negative) numerator = -numerator;
    return Rational(numerator, denominator);
}

std::string format_exact(const Rational& value) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    // Count factors of 2 and 5 in the denominator.
    BigInt d = den;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return num.str() + "/" + den.str();
    // Scale to a power of ten.
    int digits = twos > fives ? twos : fives;
    BigInt scale = 1;
    for (int k = 0; k < digits; ++k) scale *= 10;
    BigInt scaled = num * (scale / den);
    bool neg = scaled < 0;
    std::string body = (neg ? -scaled : scaled).str();
    if (digits == 0) return (neg ? "-" : "") + body;
    while (body.size() <= static_cast<std::size_t>(digits))
        body.insert(body.begin(), '0');
    body.insert(body.end() - digits, '.');
    // Trim trailing zeros after the point, but keep at least one digit.
    while (body.back() == '0') body.pop_back();
    if (body.back() == '.') body.pop_back();
    return (neg ? "-" : "") + body;
}

}  // namespace chaincover

#include "ga/scalar.hpp"

#include <cctype>

namespace ga {

namespace {

bool scan_digits(std::string_view text, std::size_t& pos, Integer& out) {
    std::size_t start = pos;
    out = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        out = out * 10 + (text[pos] - '0');
        ++pos;
    }
    return pos > start;
}

} // namespace

Rational parse_rational_literal(std::string_view text) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }

    Integer int_part;
    if (!scan_digits(text, pos, int_part))
        throw Error("invalid number '" + std::string(text) + "'");

    Rational value(int_part);

    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        Integer den;
        if (!scan_digits(text, pos, den))
            throw Error("invalid number '" + std::string(text) + "'");
        if (den == 0)
            throw Error("zero denominator in '" + std::string(text) + "'");
        value = Rational(int_part, den);
    } else {
        if (pos < text.size() && text[pos] == '.') {
            ++pos;
            std::size_t frac_start = pos;
            Integer frac;
            if (!scan_digits(text, pos, frac))
                throw Error("invalid number '" + std::string(text) + "'");
            Integer scale = 1;
            for (std::size_t i = frac_start; i < pos; ++i) scale *= 10;
            value += Rational(frac, scale);
        }
        if (pos < text.size() && (text[pos] == 'e' || text[pos] == 'E')) {
            ++pos;
            bool exp_neg = false;
            if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
                exp_neg = text[pos] == '-';
                ++pos;
            }
            Integer exp;
            if (!scan_digits(text, pos, exp) || exp > 4096)
                throw Error("invalid exponent in '" + std::string(text) + "'");
            Integer pow = 1;
            for (Integer i = 0; i < exp; ++i) pow *= 10;
            if (exp_neg)
                value /= Rational(pow);
            else
                value *= Rational(pow);
        }
    }

    if (pos != text.size())
        throw Error("invalid number '" + std::string(text) + "'");
    return negative ? Rational(-value) : value;
}

} // namespace ga

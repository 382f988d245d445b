#pragma once

// Exact rational numbers used throughout the library (GMP backed).

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace hornfb {

using rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;

// "n" for integers, "p/q" otherwise.
inline std::string to_string(const rational &r) { return r.str(); }

// Accepts "123", "-7", "3/4", "1.25", "-0.5".
inline rational parse_rational(std::string_view text) {
    if (text.empty())
        throw std::invalid_argument("empty rational literal");
    bool negative = false;
    if (text.front() == '-' || text.front() == '+') {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto digits_only = [](std::string_view s) {
        if (s.empty())
            return false;
        for (char c : s)
            if (c < '0' || c > '9')
                return false;
        return true;
    };
    rational result;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        auto num = text.substr(0, slash), den = text.substr(slash + 1);
        if (!digits_only(num) || !digits_only(den))
            throw std::invalid_argument("malformed rational literal");
        integer d{std::string(den)};
        if (d == 0)
            throw std::invalid_argument("zero denominator");
        result = rational(integer{std::string(num)}, d);
    } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
        auto whole = text.substr(0, dot), frac = text.substr(dot + 1);
        if (!digits_only(whole) || !digits_only(frac))
            throw std::invalid_argument("malformed decimal literal");
        integer scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i)
            scale *= 10;
        result = rational(integer(std::string(whole) + std::string(frac)), scale);
    } else {
        if (!digits_only(text))
            throw std::invalid_argument("malformed integer literal");
        result = rational(integer(std::string(text)));
    }
    return negative ? rational(-result) : result;
}

} // namespace hornfb

#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <string_view>

#include "rdist/error.hpp"

namespace rdist {

// Expression templates are disabled so that `auto` captures values, not proxies.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// num/den in lowest terms with a positive denominator. Use this instead of
/// the two-argument built-in-integer constructor, which mishandles a negative
/// denominator under the GMP backend.
inline Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw Error(Errc::singular, "zero denominator");
    return Rational(num, den);
}

inline Integer numerator_of(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator_of(const Rational& q) { return boost::multiprecision::denominator(q); }

/// `p/q` in lowest terms; integers print without the `/1`.
inline std::string to_string(const Rational& q) {
    const Integer den = denominator_of(q);
    if (den == 1) return numerator_of(q).str();
    return numerator_of(q).str() + "/" + den.str();
}

/// Rounds half away from zero to `decimals` fractional digits.
inline std::string to_decimal(const Rational& q, unsigned decimals) {
    const Integer num = numerator_of(q);
    const Integer den = denominator_of(q);
    Integer scale = 1;
    for (unsigned i = 0; i < decimals; ++i) scale *= 10;

    const Integer scaled = abs(num) * scale;
    Integer quot = scaled / den;
    const Integer rem = scaled - quot * den;
    if (2 * rem >= den) quot += 1;

    std::string digits = quot.str();
    if (digits.size() <= decimals) digits.insert(0, decimals + 1 - digits.size(), '0');

    std::string out;
    if (num < 0 && quot != 0) out.push_back('-');
    out.append(digits, 0, digits.size() - decimals);
    if (decimals > 0) {
        out.push_back('.');
        out.append(digits, digits.size() - decimals, decimals);
    }
    return out;
}

/// Accepts `p`, `-p`, `p/q` with q nonzero; the result is canonical.
inline Rational parse_rational(std::string_view text) {
    auto valid_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return true;
    };
    const auto slash = text.find('/');
    const std::string_view num_text = text.substr(0, slash);
    const std::string_view den_text =
        slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num_text) || !valid_int(den_text))
        throw Error(Errc::parse_error, "malformed rational '" + std::string(text) + "'");
    const Integer num(std::string(num_text.front() == '+' ? num_text.substr(1) : num_text));
    const Integer den(std::string(den_text.front() == '+' ? den_text.substr(1) : den_text));
    if (den == 0) throw Error(Errc::parse_error, "zero denominator in '" + std::string(text) + "'");
    return ratio(num, den);
}

}  // namespace rdist

#include "ccstop/rational.hpp"

#include <cctype>

#include "ccstop/errors.hpp"

namespace ccstop {

std::string to_string(const Rational& r) {
    const BigInt num = boost::multiprecision::numerator(r);
    const BigInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

namespace {

BigInt parse_integer(std::string_view s, bool allow_sign) {
    if (s.empty()) throw ParameterError("empty number");
    std::size_t i = 0;
    bool negative = false;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) {
        negative = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw ParameterError("malformed number '" + std::string(s) + "'");
    BigInt value = 0;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
            throw ParameterError("malformed number '" + std::string(s) + "'");
        }
        value = value * 10 + (s[i] - '0');
    }
    return negative ? BigInt(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash), true);
        BigInt den = parse_integer(text.substr(slash + 1), false);
        if (den == 0) throw ParameterError("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string_view whole = text.substr(0, dot);
        std::string_view frac = text.substr(dot + 1);
        bool negative = !whole.empty() && whole[0] == '-';
        if (!whole.empty() && (whole[0] == '-' || whole[0] == '+')) whole.remove_prefix(1);
        if (whole.empty() && frac.empty()) throw ParameterError("malformed number '" + std::string(text) + "'");
        BigInt int_part = whole.empty() ? BigInt(0) : parse_integer(whole, false);
        BigInt frac_part = frac.empty() ? BigInt(0) : parse_integer(frac, false);
        BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(frac.size()));
        Rational r(int_part * scale + frac_part, scale);
        return negative ? Rational(-r) : r;
    }
    return Rational(parse_integer(text, true));
}

std::int64_t ceil_mul(const Rational& r, std::int64_t n) {
    Rational x = r * n;
    BigInt num = boost::multiprecision::numerator(x);
    BigInt den = boost::multiprecision::denominator(x);
    BigInt q = num / den;
    if (q * den < num) q += 1;
    return q.convert_to<std::int64_t>();
}

BigInt falling_factorial(std::int64_t x, std::int64_t k) {
    BigInt out = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        if (x - i <= 0) return 0;
        out *= (x - i);
    }
    return out;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt out = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        out *= (n - k + i);
        out /= i;
    }
    return out;
}

}  // namespace ccstop

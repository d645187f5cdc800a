#include "turanlab/rational.hpp"

#include <cctype>

#include "turanlab/errors.hpp"

namespace turanlab {

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

namespace {

BigInt parse_integer(std::string_view s, std::string_view whole) {
    if (s.empty()) throw ArgumentError("malformed rational '" + std::string(whole) + "'");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ArgumentError("malformed rational '" + std::string(whole) + "'");
    return BigInt(std::string(s));
}

BigInt pow10(long e) {
    BigInt p = 1;
    for (long i = 0; i < e; ++i) p *= 10;
    return p;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::string_view whole = text;
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    Rational value;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(text.substr(0, slash), whole);
        BigInt den = parse_integer(text.substr(slash + 1), whole);
        if (den == 0) throw ArgumentError("zero denominator in '" + std::string(whole) + "'");
        value = Rational(num, den);
    } else {
        long exponent = 0;
        if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
            std::string_view exp = text.substr(e + 1);
            bool eneg = false;
            if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
                eneg = exp.front() == '-';
                exp.remove_prefix(1);
            }
            if (exp.size() > 6) throw ArgumentError("exponent too large in '" + std::string(whole) + "'");
            exponent = static_cast<long>(parse_integer(exp, whole));
            if (eneg) exponent = -exponent;
            text = text.substr(0, e);
        }
        std::string digits;
        long scale = 0;
        if (auto dot = text.find('.'); dot != std::string_view::npos) {
            std::string_view ip = text.substr(0, dot);
            std::string_view fp = text.substr(dot + 1);
            if (ip.empty() && fp.empty()) throw ArgumentError("malformed rational '" + std::string(whole) + "'");
            digits = std::string(ip) + std::string(fp);
            scale = static_cast<long>(fp.size());
        } else {
            digits = std::string(text);
        }
        value = Rational(parse_integer(digits, whole));
        scale -= exponent;
        if (scale > 0)
            value /= Rational(pow10(scale));
        else if (scale < 0)
            value *= Rational(pow10(-scale));
    }
    return negative ? -value : value;
}

long long floor_to_ll(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);
    if (r < 0 && q * denominator(r) != numerator(r)) q -= 1;
    return static_cast<long long>(q);
}

double to_double(const Rational& r) { return static_cast<double>(r); }

}  // namespace turanlab

#include "egt/rational.hpp"

#include "egt/errors.hpp"

#include <cctype>

namespace egt {

Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

Rational rational_pow(const Rational& b, long e) {
    if (e < 0) {
        if (b == 0) throw precondition_error("rational_pow: 0 to negative power");
        return rational_pow(Rational(1) / b, -e);
    }
    Rational r = 1, base = b;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

namespace {

// Decimal-only integer parse; Int's own string constructor would read a
// leading zero as an octal prefix.
Int parse_decimal_int(const std::string& s) {
    if (s.empty()) throw io_error("empty integer literal");
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '+' || s[0] == '-') {
        neg = s[0] == '-';
        i = 1;
    }
    if (i == s.size()) throw io_error("bad integer literal: " + s);
    Int v = 0;
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9') throw io_error("bad integer literal: " + s);
        v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
}

}  // namespace

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw io_error("empty rational literal");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        Int num = parse_decimal_int(s.substr(0, slash));
        Int den = parse_decimal_int(s.substr(slash + 1));
        if (den == 0) throw io_error("rational with zero denominator: " + s);
        return Rational(num, den);
    }
    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        Int den = 1;
        for (size_t i = dot + 1; i < s.size(); ++i) den *= 10;
        return Rational(parse_decimal_int(digits), den);
    }
    return Rational(parse_decimal_int(s));
}

std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

Int ceil_int(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (q * denominator(r) != numerator(r) && r > 0) ++q;
    return q;
}

Int floor_int(const Rational& r) {
    Int q = numerator(r) / denominator(r);
    if (q * denominator(r) != numerator(r) && r < 0) --q;
    return q;
}

}  // namespace egt

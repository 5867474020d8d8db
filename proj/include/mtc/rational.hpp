#pragma once

// Exact coefficient arithmetic. Everything downstream (polynomials, matrix
// ranks, index formulas) assumes these values are kept in lowest terms with
// a positive denominator, which cpp_rational guarantees by construction.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mtc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt num(const Rational& r) { return boost::multiprecision::numerator(r); }
inline BigInt den(const Rational& r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(BigInt n, BigInt d) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    return Rational(std::move(n), std::move(d));
}

inline Rational rat(long long n, long long d = 1) { return make_rational(BigInt(n), BigInt(d)); }

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << num(r);
    if (den(r) != 1) os << '/' << den(r);
    return os.str();
}

// Accepts "p", "p/q" and plain decimal literals ("-0.125"); everything is
// converted exactly, no floating point on the way.
inline Rational parse_rational(std::string_view s) {
    auto fail = [&] { throw std::invalid_argument("cannot parse rational: '" + std::string(s) + "'"); };
    if (s.empty()) fail();
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (n.empty() || d.empty()) fail();
        BigInt dd(d);
        if (dd == 0) fail();
        return make_rational(BigInt(n), dd);
    }
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string head(s.substr(0, dot)), tail(s.substr(dot + 1));
        if (tail.empty()) fail();
        bool neg = !head.empty() && head[0] == '-';
        if (head == "-" || head == "+") head += '0';
        if (head.empty()) head = "0";
        BigInt scale = 1;
        for (size_t i = 0; i < tail.size(); ++i) scale *= 10;
        BigInt whole(head), frac(tail);
        BigInt total = whole * scale + (neg ? -frac : frac);
        return Rational(total, scale);
    }
    return Rational(BigInt(std::string(s)));
}

inline BigInt factorial(unsigned n) {
    BigInt f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= (n - i);
        b /= (i + 1);  // exact at every step
    }
    return b;
}

inline bool is_canonical(const Rational& r) {
    if (den(r) <= 0) return false;
    if (num(r) == 0) return den(r) == 1;
    return boost::multiprecision::gcd(boost::multiprecision::abs(num(r)), den(r)) == 1;
}

}  // namespace mtc

#include "focklab/rational.hpp"

#include <charconv>
#include <limits>

namespace focklab {

namespace {

long long narrow(__int128 v) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min())
        throw std::overflow_error("rational overflow");
    return static_cast<long long>(v);
}

__int128 iabs(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
    a = iabs(a);
    b = iabs(b);
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long parse_ll(std::string_view s) {
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size())
        throw ParseError("bad integer: '" + std::string(s) + "'");
    return v;
}

} // namespace

void Rational::reduce() {
    if (den_ == 0) throw DomainError("zero denominator");
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = narrow(-i128(num_));
        den_ = narrow(-i128(den_));
    }
    long long g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    num_ /= g;
    den_ /= g;
}

Rational Rational::make(i128 n, i128 d) {
    if (d == 0) throw DomainError("zero denominator");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    i128 g = gcd128(n, d);
    Rational r;
    r.num_ = narrow(n / g);
    r.den_ = narrow(d / g);
    return r;
}

Rational Rational::parse(std::string_view s) {
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    if (slash != std::string_view::npos) {
        long long n = parse_ll(s.substr(0, slash));
        long long d = parse_ll(s.substr(slash + 1));
        if (d == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
        return Rational(n, d);
    }
    auto dot = s.find('.');
    if (dot == std::string_view::npos) return Rational(parse_ll(s));
    // exact decimal: sign, integer part, fraction digits
    bool neg = !s.empty() && s.front() == '-';
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    if (fp.empty() && (ip.empty() || ip == "-" || ip == "+"))
        throw ParseError("bad rational: '" + std::string(s) + "'");
    long long ipart = (ip.empty() || ip == "-" || ip == "+") ? 0 : parse_ll(ip);
    i128 num = iabs(i128(ipart));
    i128 den = 1;
    for (char c : fp) {
        if (c < '0' || c > '9')
            throw ParseError("bad rational: '" + std::string(s) + "'");
        num = num * 10 + (c - '0');
        den *= 10;
        if (den > i128(1000000000000000000LL))
            throw ParseError("decimal too long: '" + std::string(s) + "'");
    }
    if (neg) num = -num;
    return make(num, den);
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

} // namespace focklab

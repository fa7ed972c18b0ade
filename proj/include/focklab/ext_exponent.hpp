#pragma once

// Exponents p in [1, inf] with exact conjugate/reciprocal arithmetic.
// Infinity is a separate state, never a sentinel value.

#include <string>
#include <string_view>

#include "focklab/rational.hpp"

namespace focklab {

class ExtExponent {
  public:
    ExtExponent() : finite_(1), inf_(false) {}
    explicit ExtExponent(Rational p) : finite_(p), inf_(false) {
        if (p < Rational(1)) throw DomainError("exponent below 1: " + p.str());
    }
    static ExtExponent infinity() {
        ExtExponent e;
        e.inf_ = true;
        return e;
    }
    // "inf" / "infinity" / "oo", otherwise a rational >= 1
    static ExtExponent parse(std::string_view s);

    bool is_inf() const { return inf_; }
    const Rational& finite() const {
        if (inf_) throw DomainError("infinite exponent has no finite value");
        return finite_;
    }

    // 1/inf = 0 exactly
    Rational reciprocal() const {
        return inf_ ? Rational(0) : finite_.reciprocal();
    }

    // 1/p + 1/p' = 1; conjugate(1) = inf, conjugate(inf) = 1
    ExtExponent conjugate() const {
        if (inf_) return ExtExponent(Rational(1));
        if (finite_ == Rational(1)) return infinity();
        return ExtExponent(finite_ / (finite_ - Rational(1)));
    }

    double to_double() const;
    std::string str() const { return inf_ ? "inf" : finite_.str(); }

    friend bool operator==(const ExtExponent& a, const ExtExponent& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.finite_ == b.finite_;
    }
    friend bool operator<(const ExtExponent& a, const ExtExponent& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.finite_ < b.finite_;
    }
    friend bool operator<=(const ExtExponent& a, const ExtExponent& b) {
        return a == b || a < b;
    }
    friend bool operator>(const ExtExponent& a, const ExtExponent& b) { return b < a; }
    friend bool operator>=(const ExtExponent& a, const ExtExponent& b) { return b <= a; }

  private:
    Rational finite_;
    bool inf_;
};

} // namespace focklab

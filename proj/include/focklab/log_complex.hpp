#pragma once

// Complex values stored as (log magnitude, phase). The kernel grows like
// e^{alpha |z|^{2 ell}}, far past double range, so magnitudes are carried in
// log space end to end. Phases are reduced to the principal branch; at
// astronomically large magnitudes the reduced phase carries the usual
// argument-reduction uncertainty.

#include <cmath>
#include <complex>
#include <numbers>

namespace focklab {

inline double principal_phase(double ph) {
    if (ph > -std::numbers::pi && ph <= std::numbers::pi) return ph;
    ph = std::remainder(ph, 2.0 * std::numbers::pi);
    if (ph <= -std::numbers::pi) ph += 2.0 * std::numbers::pi;
    return ph;
}

struct LogComplex {
    double log_mag = -std::numeric_limits<double>::infinity();
    double phase = 0.0; // in (-pi, pi]

    static LogComplex from(std::complex<double> v) {
        if (v == std::complex<double>(0.0, 0.0)) return {};
        return {std::log(std::abs(v)), std::arg(v)};
    }
    static LogComplex from_log(double lm, double ph) {
        return {lm, principal_phase(ph)};
    }
    static LogComplex zero() { return {}; }

    bool is_zero() const { return std::isinf(log_mag) && log_mag < 0; }

    std::complex<double> value() const {
        if (is_zero()) return {0.0, 0.0};
        return std::polar(std::exp(log_mag), phase);
    }
    // value() scaled by e^{-offset}
    std::complex<double> value_scaled(double offset) const {
        if (is_zero()) return {0.0, 0.0};
        return std::polar(std::exp(log_mag - offset), phase);
    }

    friend LogComplex operator*(const LogComplex& a, const LogComplex& b) {
        if (a.is_zero() || b.is_zero()) return {};
        return from_log(a.log_mag + b.log_mag, a.phase + b.phase);
    }
    LogComplex conj() const { return from_log(log_mag, -phase); }
    LogComplex scaled(double log_factor) const {
        return {log_mag + log_factor, phase};
    }
};

} // namespace focklab

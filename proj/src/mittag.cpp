#include "focklab/mittag.hpp"

#include <algorithm>
#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "focklab/errors.hpp"
#include "focklab/gamma.hpp"

namespace focklab::ml {

namespace {

constexpr int kMaxTerms = 1000000;
constexpr double kSafeExpLog = 680.0; // keep e^{|z|^{1/a}} clear of overflow

using mpf = boost::multiprecision::cpp_bin_float_50;
using mpc = boost::multiprecision::cpp_complex_50;

double machine_eps() { return std::numeric_limits<double>::epsilon(); }

} // namespace

void MLParams::validate() const {
    if (!(a > 0.0) || a > 1.0) throw DomainError("ml: a must be in (0, 1]");
    if (!(b > 0.0)) throw DomainError("ml: b must be positive");
    if (m < 0) throw DomainError("ml: derivative order must be >= 0");
}

Evaluator::Evaluator(MLParams p, Policy policy, double tol)
    : p_(p), policy_(policy), tol_(tol) {
    p_.validate();
    crossover_ = std::min(std::max(15.0, std::pow(700.0 * p_.a, p_.a)),
                          std::pow(kSafeExpLog, p_.a));
    log_t0_ = log_gamma(p_.m + 1.0) - log_gamma(p_.a * p_.m + p_.b);

    // ratio table sized for arguments up to 1.25 * crossover plus the
    // convergence tail of the series
    const double lam_max = 1.25 * crossover_;
    const double k_peak = std::pow(lam_max, 1.0 / p_.a) / p_.a;
    const int k_table = static_cast<int>(1.7 * k_peak) + 160;
    ratio_.resize(k_table);
    for (int j = 0; j < k_table; ++j) {
        const double x = p_.a * (j + p_.m) + p_.b;
        ratio_[j] = (double(j + 1 + p_.m) / double(j + 1)) *
                    std::exp(log_gamma(x) - log_gamma(x + p_.a));
    }

    asym_c_ = (1.0 - p_.b) / p_.a;
    asym_s_ = 1.0 / p_.a;
    asym_coef_.assign(1, 1.0);
    for (int t = 0; t < p_.m; ++t) {
        std::vector<double> next(asym_coef_.size() + 1, 0.0);
        for (std::size_t i = 0; i < asym_coef_.size(); ++i) {
            const double e = asym_c_ + double(i) * asym_s_ - double(t);
            next[i] += asym_coef_[i] * e;
            next[i + 1] += asym_coef_[i] * asym_s_;
        }
        asym_coef_ = std::move(next);
    }
}

LogComplex Evaluator::series_fast(std::complex<double> lambda, double tol,
                                  SeriesDiag& diag) const {
    std::complex<double> term(std::exp(log_t0_), 0.0);
    double sum_re = term.real(), sum_im = 0.0;
    double c_re = 0.0, c_im = 0.0; // Kahan compensation
    double max_norm = std::norm(term);
    int max_idx = 0;
    int consec = 0;

    const int table = static_cast<int>(ratio_.size());
    for (int j = 0;; ++j) {
        if (j >= table) {
            // argument past the table's design radius; defer to the
            // extended-precision path
            diag.terms = j;
            return series_extended(lambda, tol, diag);
        }
        term *= lambda * ratio_[j];
        const double tr = term.real(), ti = term.imag();
        double y = tr - c_re, t2 = sum_re + y;
        c_re = (t2 - sum_re) - y;
        sum_re = t2;
        y = ti - c_im;
        t2 = sum_im + y;
        c_im = (t2 - sum_im) - y;
        sum_im = t2;

        const double tn = tr * tr + ti * ti;
        if (tn > max_norm) {
            max_norm = tn;
            max_idx = j + 1;
        }
        const double sn = sum_re * sum_re + sum_im * sum_im;
        if (tn < tol * tol * sn) {
            if (++consec >= 3 && j + 1 > max_idx) {
                diag.terms = j + 2;
                break;
            }
        } else {
            consec = 0;
        }
        if (j + 2 >= kMaxTerms)
            throw NonConvergence("ml series did not converge within 10^6 terms");
    }

    const std::complex<double> acc(sum_re, sum_im);
    const double amag = std::abs(acc);
    diag.cancellation =
        amag > 0.0 ? 0.5 * std::log(max_norm) - std::log(amag) : 1e9;
    diag.est_rel_err = 8.0 * machine_eps() * std::exp(std::max(0.0, diag.cancellation));
    diag.used_extended = false;
    return LogComplex::from(acc);
}

LogComplex Evaluator::series_extended(std::complex<double> lambda, double tol,
                                      SeriesDiag& diag) const {
    const mpc lam(lambda.real(), lambda.imag());
    mpc term = boost::math::tgamma(mpf(p_.m + 1)) /
               boost::math::tgamma(mpf(p_.a) * p_.m + p_.b);
    mpc acc = term;
    mpf max_mag = abs(term);
    int max_idx = 0;
    int consec = 0;
    const mpf stop_tol = mpf(std::max(tol * 1e-4, 1e-30));
    for (int j = 0;; ++j) {
        const mpf x = mpf(p_.a) * (j + p_.m) + p_.b;
        const mpf ratio = (mpf(j + 1 + p_.m) / (j + 1)) *
                          exp(boost::math::lgamma(x) - boost::math::lgamma(x + mpf(p_.a)));
        term *= lam * ratio;
        acc += term;
        const mpf tm = abs(term);
        if (tm > max_mag) {
            max_mag = tm;
            max_idx = j + 1;
        }
        if (tm < stop_tol * abs(acc)) {
            if (++consec >= 3 && j + 1 > max_idx) {
                diag.terms = j + 2;
                break;
            }
        } else {
            consec = 0;
        }
        if (j + 2 >= kMaxTerms)
            throw NonConvergence("ml series did not converge within 10^6 terms");
    }
    diag.used_extended = true;
    const mpf amag = abs(acc);
    if (amag == 0) return LogComplex::zero();
    diag.cancellation = static_cast<double>(log(max_mag / amag));
    diag.est_rel_err = 1e-46 * std::exp(std::max(0.0, diag.cancellation));
    const double lm = static_cast<double>(log(amag));
    const double ph = std::atan2(static_cast<double>(acc.imag()),
                                 static_cast<double>(acc.real()));
    return LogComplex::from_log(lm, ph);
}

LogComplex Evaluator::series_log(std::complex<double> lambda, double tol,
                                 SeriesDiag* diag_out) const {
    SeriesDiag diag;
    if (lambda == std::complex<double>(0.0, 0.0)) {
        diag.terms = 1;
        if (diag_out) *diag_out = diag;
        return LogComplex::from_log(log_t0_, 0.0);
    }
    // estimated worst-case cancellation decides the path up front
    const double grow = std::pow(std::abs(lambda), 1.0 / p_.a);
    const double cancel_est =
        grow * (1.0 - std::cos(std::min(std::numbers::pi,
                                        std::abs(std::arg(lambda)) / p_.a)));
    LogComplex r;
    if (policy_ == Policy::Accurate &&
        (machine_eps() * 8.0 * std::exp(std::min(700.0, cancel_est)) > 0.25 * tol ||
         grow > kSafeExpLog)) {
        r = series_extended(lambda, tol, diag);
    } else {
        r = series_fast(lambda, tol, diag);
        if (policy_ == Policy::Accurate && diag.est_rel_err > 0.25 * tol)
            r = series_extended(lambda, tol, diag);
    }
    if (diag_out) *diag_out = diag;
    return r;
}

LogComplex Evaluator::asymptotic(std::complex<double> lambda,
                                 unsigned* warn) const {
    const double mag = std::abs(lambda);
    if (mag == 0.0) throw DomainError("ml asymptotic at zero");
    const double th = std::arg(lambda);
    const double boundary = p_.a * 3.0 * std::numbers::pi / 4.0;
    unsigned w = WarnNone;
    if (std::abs(std::abs(th) - boundary) < 0.08 * boundary)
        w |= WarnSectorBoundary;

    if (std::abs(th) >= boundary) {
        // algebraic-decay regime: report the O(z^{-1-m}) envelope
        w |= WarnAlgebraicDecay;
        if (warn) *warn = w;
        return LogComplex::from_log(-(1.0 + p_.m) * std::log(mag), 0.0);
    }

    const double lmag = std::log(mag);
    // scaled sum of q_i z^{c + i s - m}
    double mx = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < asym_coef_.size(); ++i) {
        if (asym_coef_[i] == 0.0) continue;
        const double e = asym_c_ + double(i) * asym_s_ - p_.m;
        mx = std::max(mx, std::log(std::abs(asym_coef_[i])) + e * lmag);
    }
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t i = 0; i < asym_coef_.size(); ++i) {
        if (asym_coef_[i] == 0.0) continue;
        const double e = asym_c_ + double(i) * asym_s_ - p_.m;
        const double lt = std::log(std::abs(asym_coef_[i])) + e * lmag - mx;
        double ph = e * th;
        acc += std::polar(std::exp(lt), ph) * (asym_coef_[i] < 0 ? -1.0 : 1.0);
    }
    if (warn) *warn = w;
    if (acc == std::complex<double>(0.0, 0.0)) return LogComplex::zero();
    const double pow_s = std::pow(mag, asym_s_);
    const double exp_re = pow_s * std::cos(asym_s_ * th);
    const double exp_im = pow_s * std::sin(asym_s_ * th);
    return LogComplex::from_log(
        std::log(std::abs(acc)) + mx + exp_re - std::log(p_.a),
        std::arg(acc) + exp_im);
}

MLValue Evaluator::eval(std::complex<double> lambda) const {
    MLValue out;
    if (std::abs(lambda) <= crossover_) {
        SeriesDiag diag;
        out.value = series_log(lambda, tol_, &diag);
        out.branch = Branch::Series;
        if (!diag.used_extended && diag.est_rel_err > 1e-6)
            out.warn |= WarnPrecisionLoss;
    } else {
        out.branch = Branch::Asymptotic;
        out.value = asymptotic(lambda, &out.warn);
    }
    return out;
}

std::complex<double> ml_series(const MLParams& p, std::complex<double> lambda,
                               double tol) {
    if (!(tol > 0.0)) throw DomainError("ml_series: tol must be positive");
    Evaluator ev(p, Policy::Accurate, tol);
    return ev.series_log(lambda, tol).value();
}

LogComplex ml_asymptotic(const MLParams& p, std::complex<double> lambda) {
    Evaluator ev(p, Policy::Fast);
    return ev.asymptotic(lambda);
}

MLValue ml_eval(const MLParams& p, std::complex<double> lambda) {
    Evaluator ev(p, Policy::Accurate);
    return ev.eval(lambda);
}

} // namespace focklab::ml

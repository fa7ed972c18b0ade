#pragma once

// Two-parametric Mittag-Leffler functions E_{a,b} and their derivatives
// E^{(m)}_{a,b} for complex arguments, a in (0,1], b > 0. Below a crossover
// radius the defining power series is summed; above it the evaluator
// switches to the large-argument form: in the sector |arg z| <= a 3pi/4 the
// value is (1/a) d^m/dz^m ( z^{(1-b)/a} e^{z^{1/a}} ), expanded by a product
// rule recurrence; outside that sector the function decays like z^{-1-m}.

#include <complex>
#include <vector>

#include "focklab/log_complex.hpp"

namespace focklab::ml {

struct MLParams {
    double a = 1.0; // in (0, 1]
    double b = 1.0; // > 0
    int m = 0;      // derivative order, >= 0

    void validate() const;
};

enum class Branch { Series, Asymptotic };

enum Warn : unsigned {
    WarnNone = 0,
    // value near the sector boundary |arg z| ~ a 3pi/4 where neither
    // expansion is certified
    WarnSectorBoundary = 1u << 0,
    // double-precision series lost digits to cancellation beyond the
    // requested tolerance
    WarnPrecisionLoss = 1u << 1,
    // algebraic-decay regime: magnitude is the O(z^{-1-m}) envelope, not a
    // computed value
    WarnAlgebraicDecay = 1u << 2,
};

struct MLValue {
    LogComplex value;
    Branch branch = Branch::Series;
    unsigned warn = WarnNone;
};

struct SeriesDiag {
    int terms = 0;
    double cancellation = 0.0; // log(max term / |sum|)
    double est_rel_err = 0.0;
    bool used_extended = false;
};

// How series evaluations respond to cancellation past the tolerance:
// Fast flags it, Accurate re-sums in extended precision.
enum class Policy { Fast, Accurate };

class Evaluator {
  public:
    explicit Evaluator(MLParams p, Policy policy = Policy::Accurate,
                       double tol = 1e-12);

    const MLParams& params() const { return p_; }
    double crossover() const { return crossover_; }
    Policy policy() const { return policy_; }

    LogComplex series_log(std::complex<double> lambda, double tol,
                          SeriesDiag* diag = nullptr) const;
    LogComplex asymptotic(std::complex<double> lambda,
                          unsigned* warn = nullptr) const;
    MLValue eval(std::complex<double> lambda) const;

  private:
    MLParams p_;
    Policy policy_;
    double tol_;
    double crossover_;
    double log_t0_;                  // log of the j = 0 term
    std::vector<double> ratio_;      // term_{j+1} = term_j * lambda * ratio_[j]
    std::vector<double> asym_coef_;  // product-rule coefficients q_i
    double asym_c_;                  // (1 - b)/a
    double asym_s_;                  // 1/a

    LogComplex series_fast(std::complex<double> lambda, double tol,
                           SeriesDiag& diag) const;
    LogComplex series_extended(std::complex<double> lambda, double tol,
                               SeriesDiag& diag) const;
};

// One-shot wrappers over Evaluator for the module-level operations.

// Partial sum of the defining series, truncated once the running term stays
// below tol * |partial sum| for three consecutive terms past the largest
// term. Throws NonConvergence after 10^6 terms.
std::complex<double> ml_series(const MLParams& p, std::complex<double> lambda,
                               double tol);

LogComplex ml_asymptotic(const MLParams& p, std::complex<double> lambda);

MLValue ml_eval(const MLParams& p, std::complex<double> lambda);

} // namespace focklab::ml

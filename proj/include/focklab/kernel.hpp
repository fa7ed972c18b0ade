#pragma once

// The generalized Fock space reproducing kernel on C^n:
//   K_alpha(z, w) = H_alpha(z . conj w),
//   H_alpha(t)   = (ell alpha^{n/ell} / n!) E^{(n-1)}_{1/ell,1/ell}(alpha^{1/ell} t),
// together with the monomial norms behind it, the sector machinery for the
// two-sided pointwise estimate, and the rescaling identity
// K_alpha(z, delta w) = delta^{-n} K_{alpha delta^ell}(z, w).

#include <complex>
#include <span>
#include <vector>

#include "focklab/log_complex.hpp"
#include "focklab/mittag.hpp"

namespace focklab::kernel {

struct FockParams {
    int n = 1;
    double ell = 1.0;   // >= 1
    double alpha = 1.0; // > 0

    void validate() const;
};

struct MultiIndex {
    std::vector<int> nu;

    int total() const;
    double log_factorial() const; // log of nu!
    void validate() const;
};

// S^delta_N = D(0, delta) union {0} union { |arg t| <= pi/(N ell) }
struct Sector {
    double delta = 0.25;
    double N = 8.0; // > 2
    double ell = 1.0;

    bool contains(std::complex<double> lambda) const;
};

// log of || w^nu ||^2_{F^2_alpha} =
//   (1/ell) alpha^{-(|nu|+n)/ell} n! nu! Gamma((|nu|+n)/ell) / (n-1+|nu|)!
double monomial_norm_sq_log(const FockParams& fp, const MultiIndex& nu);

class KernelEvaluator {
  public:
    explicit KernelEvaluator(FockParams fp,
                             ml::Policy policy = ml::Policy::Fast);

    const FockParams& params() const { return fp_; }
    const ml::Evaluator& ml() const { return ml_; }

    ml::MLValue h_alpha(std::complex<double> lambda) const;
    LogComplex h(std::complex<double> lambda) const {
        return h_alpha(lambda).value;
    }

    // K_alpha(z, w) = H_alpha(z . conj w); dimensions must equal n
    LogComplex kernel(std::span<const std::complex<double>> z,
                      std::span<const std::complex<double>> w) const;

    // |H_alpha(t)| / [ (1+|t|)^{n(ell-1)} |e^{alpha t^ell}| ] for t in the
    // sector; throws SectorViolation outside it.
    double pointwise_estimate_ratio(const Sector& s,
                                    std::complex<double> lambda) const;

    // |H_alpha(t)| / [ (1+|t|)^{n(ell-1)} e^{alpha |t|^ell} ], valid on all
    // of C as an upper-bound ratio.
    double rough_bound_ratio(std::complex<double> lambda) const;

  private:
    FockParams fp_;
    ml::Evaluator ml_;
    double log_pref_; // log(ell alpha^{n/ell} / n!)
    double mu_scale_; // alpha^{1/ell}

    double rough_ratio_impl(std::complex<double> lambda,
                            bool signed_exponential) const;
};

std::complex<double> hermitian_pairing(std::span<const std::complex<double>> z,
                                       std::span<const std::complex<double>> w);

} // namespace focklab::kernel

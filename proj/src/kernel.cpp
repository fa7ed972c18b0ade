#include "focklab/kernel.hpp"

#include <cmath>

#include "focklab/errors.hpp"
#include "focklab/gamma.hpp"

namespace focklab::kernel {

void FockParams::validate() const {
    if (n < 1) throw DomainError("kernel: n must be a positive integer");
    if (!(ell >= 1.0)) throw DomainError("kernel: ell must be >= 1");
    if (!(alpha > 0.0)) throw DomainError("kernel: alpha must be positive");
}

void MultiIndex::validate() const {
    for (int v : nu)
        if (v < 0) throw DomainError("multi-index entries must be >= 0");
}

int MultiIndex::total() const {
    int s = 0;
    for (int v : nu) s += v;
    return s;
}

double MultiIndex::log_factorial() const {
    double s = 0.0;
    for (int v : nu) s += log_gamma(v + 1.0);
    return s;
}

bool Sector::contains(std::complex<double> lambda) const {
    if (lambda == std::complex<double>(0.0, 0.0)) return true;
    if (std::abs(lambda) < delta) return true;
    return std::abs(std::arg(lambda)) <= std::numbers::pi / (N * ell);
}

double monomial_norm_sq_log(const FockParams& fp, const MultiIndex& nu) {
    fp.validate();
    nu.validate();
    if (static_cast<int>(nu.nu.size()) != fp.n)
        throw DimensionMismatch("multi-index length != n");
    const double k = nu.total();
    const double x = (k + fp.n) / fp.ell;
    return -std::log(fp.ell) - x * std::log(fp.alpha) + log_gamma(fp.n + 1.0) +
           nu.log_factorial() + log_gamma(x) - log_gamma(fp.n + k);
}

KernelEvaluator::KernelEvaluator(FockParams fp, ml::Policy policy)
    : fp_(fp),
      ml_(ml::MLParams{1.0 / fp.ell, 1.0 / fp.ell, fp.n - 1}, policy),
      log_pref_(0.0),
      mu_scale_(0.0) {
    fp_.validate();
    log_pref_ = std::log(fp_.ell) + (fp_.n / fp_.ell) * std::log(fp_.alpha) -
                log_gamma(fp_.n + 1.0);
    mu_scale_ = std::pow(fp_.alpha, 1.0 / fp_.ell);
}

ml::MLValue KernelEvaluator::h_alpha(std::complex<double> lambda) const {
    ml::MLValue v = ml_.eval(mu_scale_ * lambda);
    v.value = v.value.scaled(log_pref_);
    return v;
}

LogComplex KernelEvaluator::kernel(std::span<const std::complex<double>> z,
                                   std::span<const std::complex<double>> w) const {
    if (static_cast<int>(z.size()) != fp_.n || static_cast<int>(w.size()) != fp_.n)
        throw DimensionMismatch("kernel: point dimension != n");
    return h(hermitian_pairing(z, w));
}

double KernelEvaluator::pointwise_estimate_ratio(const Sector& s,
                                                 std::complex<double> lambda) const {
    if (!s.contains(lambda))
        throw SectorViolation("lambda outside S^delta_N");
    return rough_ratio_impl(lambda, /*signed_exponential=*/true);
}

double KernelEvaluator::rough_bound_ratio(std::complex<double> lambda) const {
    return rough_ratio_impl(lambda, /*signed_exponential=*/false);
}

double KernelEvaluator::rough_ratio_impl(std::complex<double> lambda,
                                         bool signed_exponential) const {
    const double mag = std::abs(lambda);
    const double growth =
        signed_exponential
            ? fp_.alpha * std::pow(mag, fp_.ell) *
                  std::cos(fp_.ell * std::arg(lambda))
            : fp_.alpha * std::pow(mag, fp_.ell);
    const double denom_log =
        fp_.n * (fp_.ell - 1.0) * std::log1p(mag) + growth;
    return std::exp(h(lambda).log_mag - denom_log);
}

std::complex<double> hermitian_pairing(std::span<const std::complex<double>> z,
                                       std::span<const std::complex<double>> w) {
    if (z.size() != w.size()) throw DimensionMismatch("pairing: dimensions differ");
    std::complex<double> s(0.0, 0.0);
    for (std::size_t i = 0; i < z.size(); ++i) s += z[i] * std::conj(w[i]);
    return s;
}

} // namespace focklab::kernel

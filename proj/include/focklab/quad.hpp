#pragma once

// Weighted quadrature over C (normalized so the unit disk has measure 1)
// and the brute-force oracles for the three technical estimates backing the
// kernel norm bounds. Integrands are supplied in log space (log magnitude
// plus phase) and combined against a global offset, so weights like
// e^{alpha |z|^{2 ell}} never overflow. Radial direction: adaptive
// Gauss-Kronrod 7/15 panels. Angular direction: periodic trapezoid with
// doubling until the integral stabilizes.

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "focklab/log_complex.hpp"

namespace focklab::quad {

struct QuadSpec {
    int radial_nodes = 48;         // initial radial panel count
    int angular_nodes = 64;        // starting angular node count (even)
    double truncation_factor = 46; // integrate until e^{-truncation_factor} of peak
    double rel_tol = 1e-10;
    int max_refinements = 10;

    void validate() const;
    QuadSpec doubled() const; // node-doubled variant for stability checks
};

// asserts the integrand tail is <~ e^{-c r^{2 ell}}
struct DecayHint {
    double c = 1.0;
    double ell = 1.0;
};

struct WeightedIntegrand {
    std::function<LogComplex(std::complex<double>)> eval;
    DecayHint decay;
};

struct PlaneResult {
    std::complex<double> scaled{0.0, 0.0}; // integral = scaled * e^{log_offset}
    double log_offset = 0.0;
    double abs_err = 0.0; // on the scaled value
    bool converged = true;
    double r_max = 0.0;
    long evals = 0;
    int angular_used = 0;

    std::complex<double> value() const { return scaled * std::exp(log_offset); }
    double log_abs() const { return std::log(std::abs(scaled)) + log_offset; }
};

PlaneResult integrate_plane_ex(const WeightedIntegrand& f, const QuadSpec& spec);

// Plain real value; meaningful when the result fits in double range.
double integrate_plane(const WeightedIntegrand& f, const QuadSpec& spec);

// log of int_{|w| <= R} |f| dA for each R of an increasing list; used to
// exhibit divergence of non-integrable kernels as R grows.
std::vector<double> integrate_disk_log_abs(const WeightedIntegrand& f,
                                           std::span<const double> r_maxes,
                                           const QuadSpec& spec);

// 1-D adaptive integral of a log-space integrand over [0, r_max].
struct RadialResult {
    double scaled = 0.0;
    double log_offset = 0.0;
    double abs_err = 0.0;
    bool converged = true;
};
RadialResult integrate_radial_log(const std::function<double(double)>& log_g,
                                  double r_max, const QuadSpec& spec);

// sup_{x>=0} (1+x)^beta e^{-alpha (x-a)^2} / (1+a)^beta per grid value, by
// dense scan plus local refinement around the maximizer.
std::vector<double> lemma_est_sup_check(double alpha, double beta,
                                        std::span<const double> a_grid);

// Radial reduction of the C^{n-1} integral of (1+y+|w|)^b e^{-a(y^2+|w|^2)^ell}
// against (1+y)^{b-2(n-1)(ell-1)} e^{-a y^{2 ell}}; the suite asserts the
// ratio family is constant up to bounded factors, not any specific constant.
std::vector<double> lemma_est_cm_check(double a, double b, double ell, int n,
                                       std::span<const double> y_grid,
                                       const QuadSpec& spec);

struct UvRatios {
    std::vector<double> I; // against (1+|z|)^{-b}
    std::vector<double> J; // against (1+|z|)^{1-b}
};
UvRatios lemma_estuv_check(double a, double b, std::span<const double> z_grid,
                           const QuadSpec& spec);

} // namespace focklab::quad

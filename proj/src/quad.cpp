#include "focklab/quad.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "focklab/errors.hpp"
#include "focklab/parallel.hpp"

namespace focklab::quad {

namespace {

// QUADPACK 7/15 Gauss-Kronrod constants
constexpr double kXgk[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0,
};
constexpr double kWgk[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728,
};
constexpr double kWg[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469,
};

struct Panel {
    double a = 0.0, b = 0.0;
    std::complex<double> val{0.0, 0.0};
    double err = 0.0;
    bool fresh = true;
};

template <class F>
void eval_panel(Panel& p, const F& f, long& evals) {
    const double mid = 0.5 * (p.a + p.b);
    const double half = 0.5 * (p.b - p.a);
    std::complex<double> k15(0.0, 0.0), g7(0.0, 0.0);
    for (int i = 0; i < 8; ++i) {
        if (i == 7) {
            const std::complex<double> v = f(mid);
            k15 += kWgk[7] * v;
            g7 += kWg[3] * v;
            ++evals;
            break;
        }
        const std::complex<double> vl = f(mid - half * kXgk[i]);
        const std::complex<double> vr = f(mid + half * kXgk[i]);
        k15 += kWgk[i] * (vl + vr);
        if (i % 2 == 1) g7 += kWg[i / 2] * (vl + vr);
        evals += 2;
    }
    p.val = half * k15;
    p.err = std::abs(half * (k15 - g7));
    p.fresh = false;
}

std::complex<double> sum_panels(std::vector<Panel>& panels, double& err_tot) {
    std::sort(panels.begin(), panels.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    std::vector<std::complex<double>> vals(panels.size());
    err_tot = 0.0;
    for (std::size_t i = 0; i < panels.size(); ++i) {
        vals[i] = panels[i].val;
        err_tot += panels[i].err;
    }
    return par::pairwise_sum(vals);
}

// Adaptive GK over [0, r_max] of a scaled complex integrand.
template <class F>
void run_radial(const F& f, double r_max, const QuadSpec& spec,
                std::complex<double>& out, double& err_out, bool& converged,
                long& evals) {
    std::vector<Panel> panels;
    const int n0 = std::max(4, spec.radial_nodes);
    panels.reserve(n0);
    for (int i = 0; i < n0; ++i)
        panels.push_back({r_max * i / n0, r_max * (i + 1) / n0});

    converged = false;
    for (int round = 0; round <= spec.max_refinements; ++round) {
        std::vector<std::size_t> todo;
        for (std::size_t i = 0; i < panels.size(); ++i)
            if (panels[i].fresh) todo.push_back(i);
        std::vector<long> cnt(todo.size(), 0);
        par::parallel_for(static_cast<std::ptrdiff_t>(todo.size()),
                          [&](std::size_t k) { eval_panel(panels[todo[k]], f, cnt[k]); });
        for (long c : cnt) evals += c;

        double err_tot = 0.0;
        out = sum_panels(panels, err_tot);
        err_out = err_tot;
        const double scale = std::max(std::abs(out), 1e-300);
        if (err_tot <= spec.rel_tol * scale) {
            converged = true;
            return;
        }
        if (round == spec.max_refinements || panels.size() > 16384) return;

        // split every panel holding more than its share of the error budget
        const double cut =
            std::max(0.25 * spec.rel_tol * scale / double(panels.size()),
                     0.05 * err_tot / double(panels.size()));
        std::vector<Panel> next;
        next.reserve(panels.size() * 2);
        for (const Panel& p : panels) {
            if (p.err > cut) {
                const double m = 0.5 * (p.a + p.b);
                next.push_back({p.a, m});
                next.push_back({m, p.b});
            } else {
                next.push_back(p);
            }
        }
        panels = std::move(next);
    }
}

struct Profile {
    double peak_log = -std::numeric_limits<double>::infinity();
    double r_max = 0.0;
    bool decayed = true;
};

Profile probe_profile(const WeightedIntegrand& f, const QuadSpec& spec) {
    Profile pr;
    const double c = std::max(f.decay.c, 1e-8);
    const double ell = std::max(f.decay.ell, 0.5);
    const double r_hint =
        std::pow(spec.truncation_factor / c, 1.0 / (2.0 * ell));
    constexpr int kAngles = 16;
    auto h = [&](double r) {
        double m = -std::numeric_limits<double>::infinity();
        for (int j = 0; j < kAngles; ++j) {
            const double th = 2.0 * std::numbers::pi * j / kAngles;
            m = std::max(m, f.eval(std::polar(r, th)).log_mag);
        }
        return m;
    };
    double r = 0.0;
    const double step0 = std::max(r_hint, 0.5) / 24.0;
    double last = h(1e-8);
    pr.peak_log = last;
    for (int i = 1; i <= 32; ++i) {
        r = step0 * i;
        last = h(r);
        pr.peak_log = std::max(pr.peak_log, last);
    }
    int guard = 0;
    while (last > pr.peak_log - spec.truncation_factor && guard < 400) {
        r *= 1.12;
        last = h(r);
        pr.peak_log = std::max(pr.peak_log, last);
        ++guard;
    }
    pr.decayed = guard < 400;
    pr.r_max = r * 1.05;
    return pr;
}

} // namespace

void QuadSpec::validate() const {
    if (radial_nodes < 1 || angular_nodes < 2 || angular_nodes % 2 != 0)
        throw DomainError("quad: bad node counts (angular must be even)");
    if (!(rel_tol > 0.0) || rel_tol >= 1.0)
        throw DomainError("quad: rel_tol must be in (0, 1)");
    if (!(truncation_factor > 0.0) || max_refinements < 1)
        throw DomainError("quad: bad truncation/refinement settings");
}

QuadSpec QuadSpec::doubled() const {
    QuadSpec s = *this;
    s.radial_nodes *= 2;
    s.angular_nodes *= 2;
    return s;
}

PlaneResult integrate_plane_ex(const WeightedIntegrand& f, const QuadSpec& spec) {
    spec.validate();
    PlaneResult out;
    const Profile pr = probe_profile(f, spec);
    out.r_max = pr.r_max;
    if (std::isinf(pr.peak_log) && pr.peak_log < 0) return out; // identically 0
    if (!pr.decayed) {
        out.converged = false;
        return out;
    }
    const double M = pr.peak_log;
    out.log_offset = M;

    int K = spec.angular_nodes;
    std::complex<double> prev(0.0, 0.0);
    bool have_prev = false;
    for (int doubling = 0; doubling <= 7; ++doubling) {
        long evals = 0;
        auto g = [&](double r) {
            std::complex<double> s(0.0, 0.0);
            for (int j = 0; j < K; ++j) {
                const double th = 2.0 * std::numbers::pi * j / K;
                s += f.eval(std::polar(r, th)).value_scaled(M);
            }
            return s * (2.0 * r / double(K));
        };
        std::complex<double> val;
        double err;
        bool conv;
        run_radial(g, pr.r_max, spec, val, err, conv, evals);
        out.evals += evals;
        out.scaled = val;
        out.abs_err = err;
        out.converged = conv;
        out.angular_used = K;
        if (have_prev) {
            const double diff = std::abs(val - prev);
            if (diff <= 0.5 * spec.rel_tol * std::max(std::abs(val), 1e-300)) {
                out.abs_err += diff;
                return out;
            }
        }
        prev = val;
        have_prev = true;
        K *= 2;
    }
    out.converged = false;
    return out;
}

double integrate_plane(const WeightedIntegrand& f, const QuadSpec& spec) {
    return integrate_plane_ex(f, spec).value().real();
}

std::vector<double> integrate_disk_log_abs(const WeightedIntegrand& f,
                                           std::span<const double> r_maxes,
                                           const QuadSpec& spec) {
    spec.validate();
    std::vector<double> out;
    out.reserve(r_maxes.size());
    const int K = spec.angular_nodes * 4;
    double acc_log = -std::numeric_limits<double>::infinity();
    double lo = 0.0;
    for (double hi : r_maxes) {
        if (!(hi > lo)) throw DomainError("integrate_disk_log_abs: radii must increase");
        // peak of |f| on the segment, probed along the angular grid
        double M = -std::numeric_limits<double>::infinity();
        for (int i = 0; i <= 24; ++i) {
            const double r = lo + (hi - lo) * i / 24.0;
            for (int j = 0; j < 16; ++j)
                M = std::max(M, f.eval(std::polar(std::max(r, 1e-9),
                                                  2.0 * std::numbers::pi * j / 16.0))
                                    .log_mag);
        }
        if (std::isinf(M) && M < 0) {
            out.push_back(acc_log);
            lo = hi;
            continue;
        }
        // run_radial integrates [0, hi-lo]; shift to the absolute radius
        auto g = [&, lo](double t) -> std::complex<double> {
            const double r = std::max(lo + t, 1e-9);
            double s = 0.0;
            for (int j = 0; j < K; ++j) {
                const double th = 2.0 * std::numbers::pi * j / K;
                s += std::exp(f.eval(std::polar(r, th)).log_mag - M);
            }
            return {s * (2.0 * r / double(K)), 0.0};
        };
        std::complex<double> val;
        double err;
        bool conv;
        long evals = 0;
        run_radial(g, hi - lo, spec, val, err, conv, evals);
        const double seg_log = std::log(std::max(val.real(), 1e-300)) + M;
        acc_log = (std::isinf(acc_log) && acc_log < 0)
                      ? seg_log
                      : std::max(acc_log, seg_log) +
                            std::log1p(std::exp(-std::abs(acc_log - seg_log)));
        out.push_back(acc_log);
        lo = hi;
    }
    return out;
}

RadialResult integrate_radial_log(const std::function<double(double)>& log_g,
                                  double r_max, const QuadSpec& spec) {
    spec.validate();
    RadialResult out;
    double M = -std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 64; ++i)
        M = std::max(M, log_g(r_max * i / 64.0));
    if (std::isinf(M) && M < 0) return out;
    out.log_offset = M;
    auto f = [&](double r) -> std::complex<double> {
        return {std::exp(log_g(std::max(r, 1e-12)) - M), 0.0};
    };
    std::complex<double> val;
    long evals = 0;
    run_radial(f, r_max, spec, val, out.abs_err, out.converged, evals);
    out.scaled = val.real();
    return out;
}

std::vector<double> lemma_est_sup_check(double alpha, double beta,
                                        std::span<const double> a_grid) {
    if (!(alpha > 0.0)) throw DomainError("est_sup: alpha must be positive");
    std::vector<double> out;
    out.reserve(a_grid.size());
    for (double a : a_grid) {
        if (a < 0.0) throw DomainError("est_sup: grid values must be >= 0");
        auto lg = [&](double x) {
            return beta * std::log1p(x) - alpha * (x - a) * (x - a);
        };
        const double hi = a + std::sqrt(64.0 / alpha) + 1.0;
        double best_x = 0.0, best = lg(0.0);
        const int N = 20000;
        for (int i = 1; i <= N; ++i) {
            const double x = hi * i / N;
            const double v = lg(x);
            if (v > best) {
                best = v;
                best_x = x;
            }
        }
        // local ternary refinement around the best grid point
        double lo_x = std::max(0.0, best_x - hi / N), hi_x = best_x + hi / N;
        for (int it = 0; it < 200; ++it) {
            const double m1 = lo_x + (hi_x - lo_x) / 3.0;
            const double m2 = hi_x - (hi_x - lo_x) / 3.0;
            if (lg(m1) < lg(m2))
                lo_x = m1;
            else
                hi_x = m2;
        }
        best = std::max(best, lg(0.5 * (lo_x + hi_x)));
        out.push_back(std::exp(best - beta * std::log1p(a)));
    }
    return out;
}

std::vector<double> lemma_est_cm_check(double a, double b, double ell, int n,
                                       std::span<const double> y_grid,
                                       const QuadSpec& spec) {
    if (n < 2) throw DomainError("est_cm: requires n >= 2");
    if (!(a > 0.0) || !(ell >= 1.0)) throw DomainError("est_cm: bad parameters");
    std::vector<double> out;
    out.reserve(y_grid.size());
    for (double y : y_grid) {
        auto lg = [&](double r) {
            return b * std::log1p(y + r) +
                   (2 * n - 3) * std::log(std::max(r, 1e-300)) -
                   a * std::pow(y * y + r * r, ell);
        };
        // truncation radius from the pure tail decay
        double rmx = std::pow((spec.truncation_factor + a * std::pow(y, 2 * ell) +
                               std::abs(b) * 5.0 + 60.0) /
                                  a,
                              1.0 / (2.0 * ell)) +
                     1.0;
        RadialResult rr = integrate_radial_log(lg, rmx, spec);
        const double log_lhs = std::log(rr.scaled) + rr.log_offset;
        const double log_rhs = (b - 2.0 * (n - 1) * (ell - 1.0)) * std::log1p(y) -
                               a * std::pow(y, 2.0 * ell);
        out.push_back(std::exp(log_lhs - log_rhs));
    }
    return out;
}

UvRatios lemma_estuv_check(double a, double b, std::span<const double> z_grid,
                           const QuadSpec& spec) {
    if (!(a > 0.0)) throw DomainError("estuv: a must be positive");
    UvRatios out;
    for (double z : z_grid) {
        WeightedIntegrand fi{
            [=](std::complex<double> v) {
                const double d2 = std::norm(v - std::complex<double>(z, 0.0));
                return LogComplex::from_log(-a * d2 - b * std::log1p(std::abs(v)),
                                            0.0);
            },
            DecayHint{a, 1.0}};
        WeightedIntegrand fj{
            [=](std::complex<double> v) {
                const double d = std::abs(v) - z;
                return LogComplex::from_log(-a * d * d - b * std::log1p(std::abs(v)),
                                            0.0);
            },
            DecayHint{a, 1.0}};
        const double li = integrate_plane_ex(fi, spec).log_abs();
        const double lj = integrate_plane_ex(fj, spec).log_abs();
        out.I.push_back(std::exp(li + b * std::log1p(z)));
        out.J.push_back(std::exp(lj + (b - 1.0) * std::log1p(z)));
    }
    return out;
}

} // namespace focklab::quad

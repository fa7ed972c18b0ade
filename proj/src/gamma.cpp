#include "focklab/gamma.hpp"

#include <cmath>

#include "focklab/errors.hpp"

namespace focklab {

namespace {

constexpr double kHalfLog2Pi = 0.918938533204672742;
constexpr double kEulerGamma = 0.577215664901532861;

// B_{2k} / (2k (2k-1)) for the Stirling tail.
constexpr double kStirling[] = {
    1.0 / 12.0,           -1.0 / 360.0,        1.0 / 1260.0,
    -1.0 / 1680.0,        1.0 / 1188.0,        -691.0 / 360360.0,
    1.0 / 156.0,          -3617.0 / 122400.0,  43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

constexpr double kZeta[] = {
    1.64493406684822644, 1.20205690315959429, 1.08232323371113819,
    1.03692775514336993, 1.01734306198444914, 1.00834927738192283,
    1.00407735619794434, 1.00200839282608221, 1.00099457512781809,
    1.00049418860411946, 1.00024608655330805, 1.00012271334757849,
    1.00006124813505870, 1.00003058823630702, 1.00001528225940865,
    1.00000763719763790, 1.00000381729326500, 1.00000190821271655,
    1.00000095396203387, 1.00000047693298679, 1.00000023845050273,
    1.00000011921992597, 1.00000005960818905, 1.00000002980350351,
    1.00000001490155483, 1.00000000745071179, 1.00000000372533402,
};

double stirling(double x) {
    double s = (x - 0.5) * std::log(x) - x + kHalfLog2Pi;
    const double x2 = x * x;
    double xp = x;
    for (double c : kStirling) {
        s += c / xp;
        xp *= x2;
    }
    return s;
}

// ln Gamma(1+u) = -gamma u + sum_{k>=2} (-1)^k zeta(k) u^k / k, |u| <= 0.2
double taylor_at_one(double u) {
    double s = 0.0;
    double up = u * u;
    double sign = 1.0;
    for (int k = 2; k < 2 + int(sizeof(kZeta) / sizeof(double)); ++k) {
        s += sign * kZeta[k - 2] * up / k;
        up *= u;
        sign = -sign;
    }
    return s - kEulerGamma * u;
}

} // namespace

double log_gamma(double x) {
    if (!(x > 0.0)) throw DomainError("log_gamma requires x > 0");
    if (x == 1.0 || x == 2.0) return 0.0;
    if (std::abs(x - 1.0) <= 0.2) return taylor_at_one(x - 1.0);
    if (std::abs(x - 2.0) <= 0.2) return taylor_at_one(x - 2.0) + std::log1p(x - 2.0);
    if (x >= 12.0) return stirling(x);
    // shift up and undo
    double shift = 0.0;
    double y = x;
    while (y < 12.0) {
        shift += std::log(y);
        y += 1.0;
    }
    return stirling(y) - shift;
}

} // namespace focklab

#include "gausslab/erf.hpp"

#include <cmath>
#include <limits>

namespace gausslab {

namespace {

constexpr double kSqrtPi = 1.7724538509055160273;
constexpr double kSplit = 3.0;

// erf(x) = (2/sqrt(pi)) x e^{-x^2} sum_{n>=0} (2x^2)^n / (1*3*...*(2n+1)).
// All terms positive, so no cancellation anywhere on |x| <= kSplit.
double erf_series(double x) {
    const double x2 = x * x;
    const double twox2 = 2.0 * x2;
    double term = 1.0;
    double sum = 1.0;
    for (int n = 1; n < 200; ++n) {
        term *= twox2 / (2.0 * n + 1.0);
        sum += term;
        if (term < sum * 1e-17) break;
    }
    return (2.0 / kSqrtPi) * x * std::exp(-x2) * sum;
}

// Legendre continued fraction for x >= kSplit:
//   sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + 2/(x + ...)))))
// evaluated by the modified Lentz algorithm.
double erfc_cf(double x) {
    const double tiny = 1e-300;
    double f = x;
    double c = x;
    double d = 0.0;
    for (int n = 1; n < 300; ++n) {
        const double an = 0.5 * n;
        d = x + an * d;
        if (d == 0.0) d = tiny;
        c = x + an / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x * x) / (kSqrtPi * f);
}

}  // namespace

double erfc_local(double x) {
    if (std::isnan(x)) return x;
    if (x >= kSplit) return erfc_cf(x);
    if (x <= -kSplit) return 2.0 - erfc_cf(-x);
    return 1.0 - erf_series(x);
}

double erf_local(double x) {
    if (std::isnan(x)) return x;
    if (x >= kSplit) return 1.0 - erfc_cf(x);
    if (x <= -kSplit) return erfc_cf(-x) - 1.0;
    return erf_series(x);
}

namespace {

// Factored 20-point Gauss-Legendre rule for (1/sqrt(pi)) int_lo^hi e^{-t^2} dt.
// The peak magnitude e^{-m^2} is pulled out so that only the well-conditioned
// factor e^{m^2 - t^2} = e^{-(t-m)(t+m)} is summed. Used when lo and hi are so
// close that an erfc difference would cancel.
double seg_mass_quad(double lo, double hi) {
    static const double nodes[10] = {
        0.076526521133497333755, 0.227785851141645078080, 0.373706088715419560673,
        0.510867001950827098004, 0.636053680726515025453, 0.746331906460150792614,
        0.839116971822218823395, 0.912234428251325905868, 0.963971927277913791268,
        0.993128599185094924786};
    static const double wts[10] = {
        0.152753387130725850698, 0.149172986472603746788, 0.142096109318382051329,
        0.131688638449176626898, 0.118194531961518417312, 0.101930119817240435037,
        0.083276741576704748725, 0.062672048334109063570, 0.040601429800386941331,
        0.017614007139152118312};
    const double m = 0.5 * (lo + hi);
    const double h = 0.5 * (hi - lo);
    double s = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double t1 = m + h * nodes[i];
        const double t2 = m - h * nodes[i];
        s += wts[i] * (std::exp(-(t1 - m) * (t1 + m)) + std::exp(-(t2 - m) * (t2 + m)));
    }
    return std::exp(-m * m) * h * s / kSqrtPi;
}

// Mass of [lo, hi] with 0 <= lo <= hi.
double seg_mass_positive(double lo, double hi) {
    const double el = erfc_local(lo);
    const double eh = erfc_local(hi);
    if (eh < 0.9 * el) return 0.5 * (el - eh);
    return seg_mass_quad(lo, hi);
}

}  // namespace

double gauss_seg_mass(double lo, double hi) {
    if (!(lo < hi)) return 0.0;
    if (lo >= 0.0) return seg_mass_positive(lo, hi);
    if (hi <= 0.0) return seg_mass_positive(-hi, -lo);
    // Straddles the origin: both erf values positive, plain sum.
    return 0.5 * (erf_local(hi) + erf_local(-lo));
}

double tilt_seg_mass(double lo, double hi, double c) {
    if (!(lo < hi)) return 0.0;
    if (c == 0.0) return hi - lo;
    const double r = std::sqrt(c);
    return (kSqrtPi / r) * gauss_seg_mass(r * lo, r * hi);
}

}  // namespace gausslab

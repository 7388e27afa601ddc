#pragma once

namespace gausslab {

// Error function and complement, series/continued-fraction split at |t| = 3.
// Relative accuracy ~1e-15, well below every tolerance used downstream.
double erf_local(double x);
double erfc_local(double x);

// One-dimensional standard Gaussian mass of [lo, hi]:
//   (1/sqrt(pi)) * integral_lo^hi exp(-t^2) dt = (erf(hi) - erf(lo)) / 2.
// Evaluated without cancellation: erfc differences in the tails, a factored
// Gauss-Legendre rule when the interval is too short for the difference to
// retain precision.
double gauss_seg_mass(double lo, double hi);

// integral_lo^hi exp(-c * t^2) dt for c >= 0 (c = 0 gives hi - lo).
double tilt_seg_mass(double lo, double hi, double c);

}  // namespace gausslab

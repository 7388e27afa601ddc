#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <limits>

#include "gausslab/errors.hpp"

namespace gausslab {

inline constexpr int kMaxDim = 3;

// Point in R^d; only the first `dim` entries of the owning context are meaningful.
using Pt = std::array<double, kMaxDim>;

inline Pt make_pt(double x0 = 0.0, double x1 = 0.0, double x2 = 0.0) {
    return Pt{x0, x1, x2};
}

inline double norm2(const Pt& x, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s += x[i] * x[i];
    return std::sqrt(s);
}

inline double norm2_sq(const Pt& x, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s += x[i] * x[i];
    return s;
}

inline double norm_max(const Pt& x, int dim) {
    double s = 0.0;
    for (int i = 0; i < dim; ++i) s = std::max(s, std::abs(x[i]));
    return s;
}

// Axis-parallel cube given by center and side length. Membership is half-open,
// [c - s/2, c + s/2) per axis, so dyadic tilings are exact partitions.
struct Cube {
    Pt center{};
    double side = 0.0;
    int dim = 1;

    double lo(int i) const { return center[i] - 0.5 * side; }
    double hi(int i) const { return center[i] + 0.5 * side; }

    bool contains(const Pt& x) const {
        for (int i = 0; i < dim; ++i) {
            if (!(lo(i) <= x[i] && x[i] < hi(i))) return false;
        }
        return true;
    }

    Cube dilated(double factor) const { return Cube{center, side * factor, dim}; }

    bool valid() const {
        if (!(side > 0.0) || !std::isfinite(side)) return false;
        for (int i = 0; i < dim; ++i)
            if (!std::isfinite(center[i])) return false;
        return dim >= 1 && dim <= kMaxDim;
    }

    bool intersects(const Cube& o) const {
        for (int i = 0; i < dim; ++i) {
            if (!(lo(i) < o.hi(i) && o.lo(i) < hi(i))) return false;
        }
        return true;
    }

    bool contained_in(const Cube& o) const {
        for (int i = 0; i < dim; ++i) {
            if (!(o.lo(i) <= lo(i) && hi(i) <= o.hi(i))) return false;
        }
        return true;
    }
};

// Dyadic cube at level k: prod_i [2^k z_i, 2^k (z_i + 1)).
struct DyadicCube {
    int level = 0;
    std::array<std::int64_t, kMaxDim> corner{};
    int dim = 1;

    double side() const { return std::ldexp(1.0, level); }

    Cube to_cube() const {
        Cube q;
        q.dim = dim;
        q.side = side();
        for (int i = 0; i < dim; ++i)
            q.center[i] = (static_cast<double>(corner[i]) + 0.5) * q.side;
        return q;
    }

    bool operator==(const DyadicCube& o) const {
        if (level != o.level || dim != o.dim) return false;
        for (int i = 0; i < dim; ++i)
            if (corner[i] != o.corner[i]) return false;
        return true;
    }
};

// Axis-aligned box (working domain for grids and cube families).
struct Box {
    Pt lo{};
    Pt hi{};
    int dim = 1;

    double extent(int i) const { return hi[i] - lo[i]; }
};

// Finite discretization of the admissible-cube supremum at a point: a geometric
// side ladder below max_scale, candidate centers on a per-side lattice.
struct AdmissibleEnum {
    double side_ladder_ratio = 2.0;  // > 1
    int ladder_depth = 4;            // >= 1
    double center_pitch = 0.25;      // center lattice step, as a fraction of the side
    double max_scale = 1.0;          // top rung of the side ladder

    AdmissibleEnum refined() const {
        AdmissibleEnum e = *this;
        e.center_pitch *= 0.5;
        e.ladder_depth += 1;
        return e;
    }
};

// Exponent tuple (p, q, alpha, a, d) with the derived alpha/d and conjugate p'.
struct ExponentParams {
    double p = 2.0;
    double q = 2.0;
    double alpha = 0.0;
    double a = 1.0;
    int dim = 1;

    double alpha_dot() const { return alpha / dim; }

    // Conjugate exponent; +inf sentinel when p = 1.
    double p_prime() const {
        if (p == 1.0) return std::numeric_limits<double>::infinity();
        return p / (p - 1.0);
    }

    void validate(bool need_p_le_q = false) const {
        if (dim < 1 || dim > kMaxDim) throw InvalidExponents("dimension out of range");
        if (!(p >= 1.0) || !(q >= 1.0)) throw InvalidExponents("p and q must be >= 1");
        if (!(alpha >= 0.0) || !(alpha < dim)) throw InvalidExponents("alpha must lie in [0, d)");
        if (!(a > 0.0)) throw InvalidExponents("a must be positive");
        if (need_p_le_q && !(p <= q)) throw InvalidExponents("p <= q required");
    }
};

}  // namespace gausslab

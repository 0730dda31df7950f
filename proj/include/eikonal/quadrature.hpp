#pragma once

#include <functional>

#include "eikonal/types.hpp"

namespace eikonal {

struct QuadratureResult {
    Complex value;
    double est_abs_err = 0.0;
    double l1 = 0.0;  // integral of |f|, used to judge cancellation
};

using RealToComplex = std::function<Complex(double)>;

/// Adaptive Gauss-Kronrod (7/15) on a finite interval, a > b allowed.
QuadratureResult integrate_interval(const RealToComplex& f, double a, double b,
                                    double rel_tol = 1e-13, unsigned max_depth = 18);

/// Double-exponential (exp-sinh) quadrature on [0, inf).
/// Integrable endpoint singularities at 0 are fine.
QuadratureResult integrate_half_line(const RealToComplex& f, double rel_tol = 1e-14);

}  // namespace eikonal

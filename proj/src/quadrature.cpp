#include "eikonal/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "eikonal/errors.hpp"

namespace eikonal {

QuadratureResult integrate_interval(const RealToComplex& f, double a, double b, double rel_tol,
                                    unsigned max_depth) {
    QuadratureResult out;
    if (a == b) {
        return out;
    }
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    try {
        out.value = sign * boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
                               f, a, b, max_depth, rel_tol, &out.est_abs_err, &out.l1);
    } catch (const std::exception& e) {
        throw ConvergenceError(std::string("Gauss-Kronrod failed: ") + e.what());
    }
    return out;
}

QuadratureResult integrate_half_line(const RealToComplex& f, double rel_tol) {
    // Abscissa tables are costly to build and integrate() mutates lazily
    // extended rows, so each thread keeps its own rule.
    thread_local boost::math::quadrature::exp_sinh<double> rule;
    QuadratureResult out;
    try {
        out.value = rule.integrate(f, rel_tol, &out.est_abs_err, &out.l1);
    } catch (const std::exception& e) {
        throw ConvergenceError(std::string("exp-sinh failed: ") + e.what());
    }
    return out;
}

}  // namespace eikonal

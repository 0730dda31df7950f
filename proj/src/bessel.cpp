#include <cmath>
#include <limits>

#include "eikonal/errors.hpp"
#include "eikonal/quadrature.hpp"
#include "eikonal/specfun.hpp"

namespace eikonal {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// sqrt(pi/(2z)) e^{-z}, with the branch of the square root fixed by lz.
Complex leading(Complex z, Complex lz) {
    return std::sqrt(pi / 2.0) * std::exp(-0.5 * lz - z);
}

// K_{m+1/2}(z) = sqrt(pi/(2z)) e^{-z} sum_k (m+k)!/(k!(m-k)!) (2z)^{-k}.
AccuracyReport half_integer(int m, Complex z, Complex lz) {
    Complex sum = 0.0;
    double magnitude = 0.0;
    double coeff = 1.0;  // (m+k)!/(k!(m-k)!)
    Complex power = 1.0;
    for (int k = 0; k <= m; ++k) {
        const Complex term = coeff * power;
        sum += term;
        magnitude += std::abs(term);
        coeff = coeff * double(m + k + 1) * double(m - k) / double(k + 1);
        power /= 2.0 * z;
    }
    const Complex lead = leading(z, lz);
    return {lead * sum, std::abs(lead) * 4.0 * eps * (m + 1) * magnitude, Method::series};
}

bool asymptotic(Complex nu, Complex z, Complex lz, AccuracyReport& out) {
    const Complex mu4 = 4.0 * nu * nu;
    Complex term = 1.0;
    Complex sum = 1.0;
    double previous = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu4 - odd * odd) / (8.0 * k * z);
        const double size = std::abs(term);
        if (size > previous) {
            return false;
        }
        sum += term;
        if (size < 0.5 * eps * std::abs(sum)) {
            const Complex lead = leading(z, lz);
            out = {lead * sum, std::abs(lead) * (size + 4.0 * eps * std::abs(sum)),
                   Method::asymptotic};
            return true;
        }
        previous = size;
    }
    return false;
}

// K_nu(z) = int_0^inf exp(-z cosh t) cosh(nu t) dt with the path bent to
// 0 -> i*gamma -> i*gamma + inf, gamma = -arg z, so that z cosh t is real and
// positive far out on the second leg.
AccuracyReport schlaefli(Complex nu, Complex z, double argument) {
    const double gam = -argument;
    // Beyond this the leg integrand is below exp(-1000).
    const double cutoff = std::log(4000.0 / std::abs(z)) + std::abs(nu.real());
    auto arc = [&](double y) -> Complex {
        return I * std::exp(-z * std::cos(y)) * std::cos(nu * y);
    };
    auto leg = [&](double u) -> Complex {
        if (u > cutoff) {
            return 0.0;
        }
        const Complex t(u, gam);
        // cosh(nu t) e^{-z cosh t} folded into exponentials to avoid overflow.
        const Complex e = -z * std::cosh(t);
        return 0.5 * (std::exp(e + nu * t) + std::exp(e - nu * t));
    };
    const QuadratureResult first = integrate_interval(arc, 0.0, gam, 1e-14);
    const QuadratureResult second = integrate_half_line(leg, 1e-14);
    return {first.value + second.value,
            first.est_abs_err + second.est_abs_err + 1e-15 * (first.l1 + second.l1),
            Method::quadrature};
}

}  // namespace

AccuracyReport bessel_k(Complex nu, Complex z, CutSide side) {
    if (z == 0.0) {
        throw SingularPointError("bessel_k: z = 0");
    }
    const double argument = arg_on_side(z, side);
    const Complex lz{std::log(std::abs(z)), argument};
    // K is even in the order.
    if (nu.real() < 0.0) {
        nu = -nu;
    }
    const double twice = 2.0 * nu.real();
    if (nu.imag() == 0.0 && twice == std::round(twice) && std::fmod(twice, 2.0) == 1.0) {
        return half_integer(int(nu.real() - 0.5), z, lz);
    }
    AccuracyReport out;
    if (std::abs(z) > 12.0 && asymptotic(nu, z, lz, out)) {
        return out;
    }
    return schlaefli(nu, z, argument);
}

}  // namespace eikonal

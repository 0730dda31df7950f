#include <algorithm>
#include <cmath>
#include <limits>

#include "eikonal/errors.hpp"
#include "eikonal/quadrature.hpp"
#include "eikonal/specfun.hpp"

namespace eikonal {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

bool nonpositive_integer(Complex a) {
    return a.imag() == 0.0 && a.real() <= 0.0 && a.real() == std::round(a.real());
}

// U(-m, b, z) = (-1)^m sum_s C(m,s) (b+s)_{m-s} (-z)^s, valid for every b.
AccuracyReport terminating(int m, Complex b, Complex z) {
    Complex sum = 0.0;
    double magnitude = 0.0;
    double binom = 1.0;
    Complex zpow = 1.0;
    for (int s = 0; s <= m; ++s) {
        Complex rising = 1.0;
        for (int j = 0; j < m - s; ++j) {
            rising *= b + double(s + j);
        }
        const Complex term = binom * rising * zpow;
        sum += term;
        magnitude += std::abs(term);
        binom = binom * double(m - s) / double(s + 1);
        zpow *= -z;
    }
    if (m % 2 == 1) {
        sum = -sum;
    }
    return {sum, 4.0 * eps * (m + 1) * magnitude, Method::series};
}

// z^{-a} sum_s (a)_s (a-b+1)_s / s! (-z)^{-s}, optimally truncated.
// Returns false when the smallest term is not below the target.
bool asymptotic(Complex a, Complex b, Complex z, Complex lz, AccuracyReport& out) {
    const Complex ap = a - b + 1.0;
    Complex term = 1.0;
    Complex sum = 1.0;
    double previous = 1.0;
    for (int s = 1; s < 200; ++s) {
        term *= (a + double(s - 1)) * (ap + double(s - 1)) / (double(s) * -z);
        const double size = std::abs(term);
        if (size > previous) {
            return false;
        }
        sum += term;
        if (size < 0.5 * eps * std::abs(sum)) {
            const Complex scale = std::exp(-a * lz);
            out = {scale * sum, std::abs(scale) * (size + 4.0 * eps * std::abs(sum)),
                   Method::asymptotic};
            return true;
        }
        previous = size;
    }
    return false;
}

// Laplace integral along the ray arg t = beta, beta = -arg z clamped so the
// ray keeps clear of the branch point of (1+t) at t = -1. Needs Re a > 0.
AccuracyReport laplace(Complex a, Complex b, double modulus, double argument) {
    const double beta = -std::clamp(argument, -0.75 * pi, 0.75 * pi);
    const Complex w = std::polar(1.0, argument + beta);
    const Complex ray = std::polar(1.0 / modulus, beta);
    const Complex c = b - a - 1.0;
    auto integrand = [&](double x) -> Complex {
        return std::exp(-x * w + (a - 1.0) * std::log(x) + c * std::log(1.0 + ray * x));
    };
    const QuadratureResult q = integrate_half_line(integrand, 1e-14);
    const Complex scale = std::exp(I * beta * a - a * std::log(modulus)) * rgamma(a);
    return {scale * q.value, std::abs(scale) * (q.est_abs_err + 1e-15 * q.l1),
            Method::quadrature};
}

// Re a may be small or negative: start where the integral converges well and
// recur downward, the stable direction for U.
AccuracyReport laplace_recurred(Complex a, Complex b, Complex z, double modulus, double argument) {
    if (a.real() >= 0.5) {
        return laplace(a, b, modulus, argument);
    }
    const int m = int(std::ceil(0.5 - a.real()));
    AccuracyReport upper = laplace(a + double(m + 1), b, modulus, argument);
    AccuracyReport current = laplace(a + double(m), b, modulus, argument);
    double err = std::max(upper.est_abs_err, current.est_abs_err);
    double size = std::max(std::abs(upper.value), std::abs(current.value));
    for (int k = m; k > 0; --k) {
        const Complex ak = a + double(k);
        const Complex lower = -(b - 2.0 * ak - z) * current.value - ak * (1.0 + ak - b) * upper.value;
        upper = current;
        current.value = lower;
        size = std::max(size, std::abs(lower));
    }
    // Downward recurrence loses roughly the ratio of the largest
    // intermediate to the final value.
    const double growth = size / std::max(std::abs(current.value), 1e-300);
    return {current.value, err * growth + 8.0 * eps * size * m, Method::recurrence};
}

}  // namespace

AccuracyReport tricomi_u(Complex a, Complex b, Complex z, CutSide side) {
    if (z == 0.0) {
        throw SingularPointError("tricomi_u: z = 0");
    }
    const double argument = arg_on_side(z, side);
    const double modulus = std::abs(z);
    const Complex lz{std::log(modulus), argument};

    if (a == 0.0) {
        return {1.0, 0.0, Method::series};
    }
    if (nonpositive_integer(a)) {
        return terminating(int(-a.real()), b, z);
    }
    const Complex ap = a - b + 1.0;
    const Complex kummer = std::exp((1.0 - b) * lz);
    if (nonpositive_integer(ap)) {
        AccuracyReport r = terminating(int(-ap.real()), 2.0 - b, z);
        return {kummer * r.value, std::abs(kummer) * r.est_abs_err, Method::series};
    }

    AccuracyReport out;
    if (modulus > 6.0 && asymptotic(a, b, z, lz, out)) {
        return out;
    }

    if (ap.real() > a.real()) {
        AccuracyReport r = laplace_recurred(ap, 2.0 - b, z, modulus, argument);
        return {kummer * r.value, std::abs(kummer) * r.est_abs_err, r.method};
    }
    return laplace_recurred(a, b, z, modulus, argument);
}

AccuracyReport whittaker_w(Complex kappa, Complex mu, Complex z, CutSide side) {
    const Complex lz = log_on_side(z, side);
    const AccuracyReport u = tricomi_u(mu - kappa + 0.5, 1.0 + 2.0 * mu, z, side);
    const Complex scale = std::exp(-0.5 * z + (mu + 0.5) * lz);
    return {scale * u.value, std::abs(scale) * u.est_abs_err, u.method};
}

}  // namespace eikonal

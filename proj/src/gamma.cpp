#include <array>
#include <cmath>
#include <limits>

#include "eikonal/errors.hpp"
#include "eikonal/specfun.hpp"

namespace eikonal {

const char* to_string(Method m) {
    switch (m) {
        case Method::series: return "series";
        case Method::asymptotic: return "asymptotic";
        case Method::recurrence: return "recurrence";
        case Method::quadrature: return "quadrature";
    }
    return "?";
}

double arg_on_side(Complex z, CutSide side) {
    if (z.imag() == 0.0 && z.real() < 0.0) {
        switch (side) {
            case CutSide::above: return pi;
            case CutSide::below: return -pi;
            case CutSide::none:
                throw BranchError("argument lies on the negative real axis; a cut side is required");
        }
    }
    // std::arg maps -0.0 imaginary parts to -pi; the sign of zero is not a
    // side selection here.
    return std::atan2(z.imag() == 0.0 ? 0.0 : z.imag(), z.real());
}

Complex log_on_side(Complex z, CutSide side) {
    return {std::log(std::abs(z)), arg_on_side(z, side)};
}

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

// B_{2k} / (2k (2k-1)) for k = 1..10.
constexpr std::array<double, 10> stirling_coeff = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real());
}

}  // namespace

AccuracyReport log_gamma(Complex z) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw InputError("log_gamma: non-finite argument");
    }
    if (is_nonpositive_integer(z)) {
        throw GammaPole("log_gamma: pole at non-positive integer");
    }
    // Shift right until Stirling is accurate, then undo the shift with
    // principal logs; the sum of principal logs is the continuous branch.
    Complex shift_sum = 0.0;
    Complex w = z;
    int steps = 0;
    while (w.real() < 0.5 || std::abs(w) < 18.0) {
        shift_sum += std::log(w);
        w += 1.0;
        ++steps;
    }
    const Complex inv = 1.0 / w;
    const Complex inv2 = inv * inv;
    Complex series = 0.0;
    Complex power = inv;
    double last = 0.0;
    for (double c : stirling_coeff) {
        const Complex term = c * power;
        series += term;
        last = std::abs(term);
        power *= inv2;
    }
    const Complex value =
        (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * pi) + series - shift_sum;
    const double scale = std::abs((w - 0.5) * std::log(w)) + std::abs(shift_sum);
    return {value, last + 8.0 * eps * (scale + steps), Method::asymptotic};
}

Complex gamma(Complex z) {
    return std::exp(log_gamma(z).value);
}

Complex rgamma(Complex z) {
    if (is_nonpositive_integer(z)) {
        return 0.0;
    }
    return std::exp(-log_gamma(z).value);
}

}  // namespace eikonal

#pragma once

#include "eikonal/types.hpp"

namespace eikonal {

enum class Method { series, asymptotic, recurrence, quadrature };

const char* to_string(Method m);

struct AccuracyReport {
    Complex value;
    double est_abs_err = 0.0;
    Method method = Method::series;
};

/// Which side of the negative real axis an argument sits on.
/// `none` means the caller asserts it is off the cut; a negative real
/// argument then raises BranchError.
enum class CutSide { none, above, below };

/// Argument of z honouring the side rule: on the negative real axis
/// `above` gives +pi and `below` gives -pi.
double arg_on_side(Complex z, CutSide side);

/// Log z with the same rule.
Complex log_on_side(Complex z, CutSide side);

/// Principal branch of log Gamma, continuous off the negative real axis
/// (the branch that is real on the positive axis).
/// Throws GammaPole at non-positive integers.
AccuracyReport log_gamma(Complex z);

/// Gamma(z); throws GammaPole at poles.
Complex gamma(Complex z);

/// 1/Gamma(z), entire; exactly 0 at the poles of Gamma.
Complex rgamma(Complex z);

/// Tricomi confluent hypergeometric U(a, b, z), principal branch.
AccuracyReport tricomi_u(Complex a, Complex b, Complex z, CutSide side = CutSide::none);

/// W_{kappa,mu}(z) = exp(-z/2) z^{mu+1/2} U(mu-kappa+1/2, 1+2mu, z).
AccuracyReport whittaker_w(Complex kappa, Complex mu, Complex z, CutSide side = CutSide::none);

/// Modified Bessel function K_nu(z), complex order and argument.
AccuracyReport bessel_k(Complex nu, Complex z, CutSide side = CutSide::none);

}  // namespace eikonal

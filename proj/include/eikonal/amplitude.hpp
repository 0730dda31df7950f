#pragma once

#include <string>

#include "eikonal/types.hpp"

namespace eikonal {

enum class AmplitudeMethod {
    dyon_closed,
    two_monopoles_whittaker,
    identical_monopoles_bessel,
    oracle,
};

const char* to_string(AmplitudeMethod m);

/// `printed` evaluates the closed forms exactly as published. `corrected`
/// uses forms re-derived from the contour factorisation; these agree with
/// the oracle including the overall constant.
enum class AmplitudeForm { corrected, printed };

const char* to_string(AmplitudeForm f);

struct AmplitudeSample {
    Complex p;
    Complex f;
    AmplitudeMethod method = AmplitudeMethod::dyon_closed;
    std::string convention_note;
};

struct TwoMonopoleParameters {
    Complex kappa;     // (n2 - n1)/4
    Complex mu;        // 1/2 - (n1 + n2)/4
    Complex mu_prime;  // 1 - mu
    Complex tau;       // (i p/2) conj(b2 - b1)
};

TwoMonopoleParameters two_monopole_parameters(double n1, double n2, Complex b1, Complex b2,
                                              Complex p);

/// Single dyon at b0 with string angle theta.
/// Throws ForwardSingularity at p = 0. The printed form raises GammaPole
/// where its Gamma ratio genuinely diverges.
AmplitudeSample amplitude_dyon(double alpha, double n, Complex b0, double theta, double p0,
                               Complex p, AmplitudeForm form = AmplitudeForm::corrected);

/// Two monopoles with Dirac numbers n1, n2.
AmplitudeSample amplitude_two_monopoles(double n1, double n2, Complex b1, Complex b2, double p0,
                                        Complex p,
                                        AmplitudeForm form = AmplitudeForm::corrected);

/// Two identical monopoles. The printed form is the Bessel-K expression;
/// the corrected form feeds U(a, 2a, z) through its Bessel-K reduction into
/// the corrected two-centre formula.
AmplitudeSample amplitude_two_identical_monopoles(double n, Complex b1, Complex b2, double p0,
                                                  Complex p,
                                                  AmplitudeForm form = AmplitudeForm::corrected);

/// Corrected two-centre formula for two arbitrary dyons (string angles
/// included). Requires config.size() == 2.
AmplitudeSample amplitude_two_dyons(const ScatteringConfig& config, Complex p);

/// Closed form for one or two charges; InputError for larger systems,
/// which only the oracle covers.
AmplitudeSample amplitude_closed(const ScatteringConfig& config, Complex p,
                                 AmplitudeForm form = AmplitudeForm::corrected);

}  // namespace eikonal

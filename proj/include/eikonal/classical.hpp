#pragma once

#include <array>
#include <string>
#include <vector>

#include "eikonal/types.hpp"

namespace eikonal {

// Conventions for this module:
//   V(b)   = sum_k 2 Q_k log((b - b_k) e^{i theta_k})
//   p*(b)  = -V'(b)/p0,  momentum_map returns p = conj(p*)
//   sigma  = p0^4 sum over preimages |V''(b)|^-2

struct PotentialEval {
    Complex v;   // V(b), principal log per term
    Complex d1;  // V'(b)
    Complex d2;  // V''(b)
};

/// Throws SingularPointError at a charge position.
PotentialEval potential(const ScatteringConfig& config, Complex b);

/// p = conj(-V'(b)/p0). Throws SingularPointError at a charge position.
Complex momentum_map(const ScatteringConfig& config, Complex b);

/// Every finite b with momentum_map(b) == p, polished by Newton on the
/// rational map. Throws DegenerateError if the cleared polynomial vanishes.
std::vector<Complex> preimages(const ScatteringConfig& config, Complex p);

struct ClassicalSigma {
    double sigma = 0.0;  // +inf when `focal` is set
    bool focal = false;  // p within 1e-9 relative of a focal momentum
    std::size_t branches = 0;
};

/// Throws ForwardSingularity at p = 0.
ClassicalSigma classical_cross_section(const ScatteringConfig& config, Complex p);

struct FocalPoint {
    Complex b_f;               // infinite when at_infinity
    Complex p_f;               // momentum_map(b_f), 0 at infinity
    bool at_infinity = false;
    bool degenerate = false;   // produced by a leading-coefficient collapse
    double residual = 0.0;     // |V''(b_f)|
};

/// Zeros of V''. A drop in degree of the cleared polynomial is reported as
/// one at-infinity point per lost degree, listed after the finite points.
std::vector<FocalPoint> focal_points(const ScatteringConfig& config);

/// Paper-convention formulas for two dyons at b1 = R, b2 = -R. These are
/// reproduced as printed and do not share this module's normalisation.
struct PaperSigma {
    double sigma = 0.0;
    std::array<Complex, 2> focal{};  // the paper's p^f_{1,2}
    std::string provenance;
};

/// p^f_{1,2} = -(Q1+Q2)^2 / (4 R p0 (sqrt Q1 +- i sqrt Q2)^2).
std::array<Complex, 2> paper_focal_momenta(Complex q1, Complex q2, double r, double p0);

/// General two-dyon form. Throws FocalSingularity at p = p^f_i and
/// DegenerateError when Q1 + Q2 = 0 (the form is 0 * undefined there).
PaperSigma cross_section_two_dyons_closed(Complex q1, Complex q2, double r, double p0, Complex p);

/// Equal monopoles eg = n/2: (n^2 p0^2 / 2|p|^4)(1 + |1/(1 - p^2 R^2/n^2)|).
PaperSigma cross_section_equal_monopoles_closed(double n, double r, double p0, Complex p);

/// Monopole-antimonopole: (n R p0^2 / 2|p|^3) / |1 - i R p/n|.
PaperSigma cross_section_monopole_antimonopole_closed(double n, double r, double p0, Complex p);

}  // namespace eikonal

#pragma once

#include <string>
#include <vector>

#include "eikonal/amplitude.hpp"
#include "eikonal/types.hpp"

namespace eikonal {

// Integrands, for charge exponents s_k = i alpha_k/p0 - n_k/2 and
// s'_k = i alpha_k/p0 + n_k/2:
//   b-plane:          A(b) = exp(-i b p*/2) prod_k ((b - b_k) e^{i theta_k})^{s_k}
//   conjugate plane:  G(w) = exp(-i w p/2) prod_k ((w - conj b_k) e^{-i theta_k})^{s'_k}
// With psi = -pi/2 + arg p (possibly rotated), the b-plane legs leave along
// psi and the conjugate-plane legs along -psi - pi; both decay like
// exp(-|p| u cos(rotation)/2). The cut of every other charge runs from it
// along psi (b-plane) or -psi (conjugate plane).

enum class Plane { b, b_conj };

/// loop: in from infinity, clockwise round the centre, back out (Hankel).
/// ray:  from the centre out to infinity; needs an integrable start.
enum class ContourShape { loop, ray };

struct ContourSpec {
    Complex center;              // b_j or conj(b_j)
    double ray_direction = 0.0;  // angle of the outgoing leg
    double loop_radius = 0.1;
    double leg_length = 0.0;     // 0: march until the tail is negligible
    double panel_length = 0.0;   // 0: one decay length
    ContourShape shape = ContourShape::loop;
};

struct ContourResult {
    Complex value;
    double est_err = 0.0;
    double leg_length = 0.0;  // where the legs were truncated
};

/// psi for momentum p, rotated by `rotation` radians.
double ray_angle(Complex p, Plane plane, double rotation = 0.0);

/// Default contour for charge j: loop radius from the exponent and the
/// distance to the other cuts. Throws CutCollision if the geometry leaves
/// no room (callers normally rotate first; see choose_rotation).
ContourSpec default_contour(const ScatteringConfig& config, std::size_t j, Plane plane, Complex p,
                            double rotation = 0.0);

/// Smallest rotation (5 degree steps, alternating sign, up to 60 degrees)
/// keeping every charge clear of the other charges' cut lines.
double choose_rotation(const ScatteringConfig& config, Complex p);

/// One factor of the amplitude. Throws IndexError, CutCollision when a leg
/// or the loop meets another cut, ConvergenceError when the legs fail to decay.
ContourResult contour_integral(const ScatteringConfig& config, std::size_t j, Plane plane,
                               Complex p, const ContourSpec& spec, double tol = 1e-12);

enum class OracleMode {
    automatic,  // regulate charges whose term is 0 * infinity, otherwise direct
    regulated,  // always regulate the pure-magnetic charges
    exact,      // integer-exponent rays instead of the regulator
};

struct OracleOptions {
    OracleMode mode = OracleMode::automatic;
    std::vector<double> epsilons{1e-2, 5e-3, 2.5e-3};  // alpha = eps * p0
    double rotation_offset = 0.0;   // extra rigid rotation of all contours
    double radius_scale = 1.0;      // multiplies every default loop radius
};

struct OracleTerm {
    Complex i_p;      // conjugate-plane factor I_j(p)
    Complex i_pstar;  // b-plane factor I_j(p*)
};

struct OracleResult {
    Complex f;
    double est_err = 0.0;
    double regulator_alpha = 0.0;  // smallest alpha used, 0 without regulator
    double rotation = 0.0;
    bool shortfall = false;        // est_err above the requested tolerance
    std::vector<OracleTerm> per_term;  // from the last evaluation
};

/// f = (p0/4pi) sum_j I_j(p) I_j(p*). Throws ForwardSingularity at p = 0
/// and RegulatorFailure when the extrapolation does not settle.
OracleResult amplitude_oracle(const ScatteringConfig& config, Complex p, double tol = 1e-10,
                              const OracleOptions& options = {});

enum class ComparisonMethod {
    closed_vs_oracle,          // corrected closed form against the oracle
    printed_vs_oracle,         // paper-verbatim closed form against the oracle
    identical_vs_generic,      // printed Bessel form against printed Whittaker form
    paper_sigma_vs_classical,  // paper two-dyon sigma against classical_cross_section
};

const char* to_string(ComparisonMethod m);

struct ComparisonRow {
    Complex p;
    Complex f_closed;  // first evaluator (sigma for the cross-section comparison)
    Complex f_oracle;  // second evaluator
    double abs_ratio = 0.0;
    double arg_ratio = 0.0;
    double est_err = 0.0;
    std::string error;  // non-empty when a point failed; values are then NaN
};

struct ComparisonReport {
    ComparisonMethod method = ComparisonMethod::closed_vs_oracle;
    std::vector<ComparisonRow> rows;
    Complex mean_ratio;
    double abs_spread = 0.0;  // max |abs_ratio/mean - 1|
    double arg_spread = 0.0;  // max |arg_ratio - mean arg|, radians
    double abs_tolerance = 1e-4;
    double arg_tolerance = 1e-4;
    bool passed = false;
};

/// Per-point failures are recorded in the rows, never thrown.
/// The cross-section comparison expects charges at b1 = R, b2 = -R.
ComparisonReport compare_amplitudes(const ScatteringConfig& config,
                                    const std::vector<Complex>& p_grid,
                                    ComparisonMethod method = ComparisonMethod::closed_vs_oracle,
                                    double tol = 1e-10);

/// CSV with header re_p, im_p, re_f_closed, im_f_closed, re_f_oracle,
/// im_f_oracle, abs_ratio, arg_ratio, est_err.
std::string comparison_csv(const ComparisonReport& report);

}  // namespace eikonal

#pragma once

#include <complex>
#include <numbers>
#include <vector>

namespace eikonal {

using Complex = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr Complex I{0.0, 1.0};

/// Unit conventions shared by every module.
///
/// Natural units hbar = c = 1. The projectile's electric charge e is folded
/// into the couplings: a scatterer with electric charge q contributes
/// alpha = e*q, and a magnetic charge g contributes the Dirac integer
/// n = 2*e*g (quantisation e*g = n/2). Lengths are impact-parameter lengths,
/// momenta are transverse momentum transfers, p0 is the incident momentum.
struct UnitsConvention {
    static constexpr double hbar = 1.0;
    static constexpr double c = 1.0;
    /// e*g for a given Dirac integer.
    static constexpr double eg(double dirac_n) { return 0.5 * dirac_n; }
};

/// One point scatterer projected onto the impact-parameter plane.
struct ChargeSpec {
    Complex position;          // b_k
    double electric = 0.0;     // alpha_k = e*q_k
    double dirac_n = 0.0;      // n_k, e*g_k = n_k/2
    double string_angle = 0.0; // theta_k in [0, 2*pi)

    bool operator==(const ChargeSpec&) const = default;
};

/// Q_k = alpha_k + i*p0*n_k/2.
struct ComplexCharge {
    Complex value;

    bool operator==(const ComplexCharge&) const = default;
};

/// A validated scattering problem. Construct through make_config() or
/// parse_config(); both enforce the invariants.
class ScatteringConfig {
public:
    ScatteringConfig() = default;

    const std::vector<ChargeSpec>& charges() const noexcept { return charges_; }
    double p0() const noexcept { return p0_; }
    bool allow_noninteger() const noexcept { return allow_noninteger_; }
    std::size_t size() const noexcept { return charges_.size(); }
    const ChargeSpec& operator[](std::size_t k) const { return charges_[k]; }

    bool operator==(const ScatteringConfig&) const = default;

private:
    friend ScatteringConfig make_config(std::vector<ChargeSpec>, double, bool);

    std::vector<ChargeSpec> charges_;
    double p0_ = 1.0;
    bool allow_noninteger_ = false;
};

}  // namespace eikonal

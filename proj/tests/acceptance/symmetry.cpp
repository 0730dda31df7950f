#include <algorithm>
#include <cmath>
#include <random>

#include "acceptance.hpp"
#include "eikonal/amplitude.hpp"
#include "eikonal/classical.hpp"
#include "eikonal/oracle.hpp"
#include "support.hpp"

namespace acceptance {

using eikonal::Complex;
using eikonal::I;
using eikonal::pi;
using support::charge;
using support::rel_err;

namespace {

using Charges = std::vector<eikonal::ChargeSpec>;

eikonal::ScatteringConfig transformed(const Charges& charges, double p0, Complex scale, Complex shift,
                                      double theta_shift = 0.0) {
    Charges out = charges;
    for (auto& c : out) {
        c.position = scale * c.position + shift;
        c.string_angle = std::fmod(c.string_angle + theta_shift, 2.0 * pi);
    }
    return eikonal::make_config(out, p0);
}

// Sum of n_k theta_k after adding theta_shift to every angle, modulo the wrap.
double dirac_angle_sum(const eikonal::ScatteringConfig& config) {
    double sum = 0.0;
    for (const auto& c : config.charges()) {
        sum += c.dirac_n * c.string_angle;
    }
    return sum;
}

struct Tally {
    double worst = 0.0;
    void add(double v) { worst = std::max(worst, v); }
};

}  // namespace

Outcome symmetry_suite() {
    Outcome out;
    const Charges classical_set[] = {
        {charge(Complex(0.4, -0.3), 0.5, 1, 0.2), charge(Complex(-1.1, 0.7), -0.2, -2, 1.0)},
        {charge(1.0, 0.0, 3), charge(-1.0, 0.0, 3), charge(Complex(0.2, 1.5), 0.8, 0, 0.0)},
        {charge(Complex(0.0, 0.5), 0.3, 2, 2.0), charge(Complex(1.2, -0.4), 0.0, 1, 0.5),
         charge(Complex(-0.9, -1.0), -0.6, -1, 4.0), charge(Complex(-0.2, 1.7), 0.0, 2, 3.0)},
    };
    const Complex momenta[] = {Complex(0.7, 0.0), Complex(2.1, -0.8), Complex(-0.4, 1.9)};
    const Complex shift(1.7, -2.3);
    const double phi = 0.83;

    // Classical: translation, rotation, string angles.
    Tally c_trans, c_rot;
    bool theta_exact = true;
    for (const auto& charges : classical_set) {
        const auto base = eikonal::make_config(charges, 1.3);
        const auto moved = transformed(charges, 1.3, 1.0, shift);
        const auto turned = transformed(charges, 1.3, std::polar(1.0, phi), 0.0);
        const auto restrung = transformed(charges, 1.3, 1.0, 0.0, 1.1);
        for (Complex p : momenta) {
            const double s = eikonal::classical_cross_section(base, p).sigma;
            c_trans.add(std::abs(eikonal::classical_cross_section(moved, p).sigma / s - 1.0));
            c_rot.add(std::abs(eikonal::classical_cross_section(turned, std::polar(1.0, phi) * p).sigma / s - 1.0));
            theta_exact = theta_exact && eikonal::classical_cross_section(restrung, p).sigma == s;
            const Complex b(0.3, 0.9);
            theta_exact = theta_exact && eikonal::momentum_map(restrung, b) == eikonal::momentum_map(base, b);
        }
        const auto f0 = eikonal::focal_points(base);
        const auto f1 = eikonal::focal_points(restrung);
        theta_exact = theta_exact && f0.size() == f1.size();
        for (std::size_t k = 0; theta_exact && k < f0.size(); ++k) {
            theta_exact = f0[k].b_f == f1[k].b_f && f0[k].p_f == f1[k].p_f;
        }
    }
    const bool classical_ok = c_trans.worst <= 1e-10 && c_rot.worst <= 1e-10 && theta_exact;
    out.details << "    classical: translation " << c_trans.worst << ", rotation " << c_rot.worst
                << ", string angles " << (theta_exact ? "exact" : "NOT exact") << "\n";

    // Amplitudes: string angles move the phase by -sum n_k theta_k and leave
    // |f| alone; translations move it by -Re(d p*). Two-centre closed form
    // and, for three charges, the oracle.
    Tally a_theta_mod, a_theta_phase, a_trans_mod, a_trans_phase;
    auto amplitude = [](const eikonal::ScatteringConfig& c, Complex p) {
        return c.size() <= 2 ? eikonal::amplitude_closed(c, p).f : eikonal::amplitude_oracle(c, p).f;
    };
    const Charges amplitude_set[] = {
        classical_set[0],
        {charge(1.0, 0.0, 2), charge(-1.0, 0.0, 1)},
        {charge(Complex(0.3, 0.2), 0.4, 1, 0.3), charge(Complex(-0.8, -0.5), -0.2, -1, 0.0),
         charge(Complex(0.1, -1.3), 0.5, 1, 2.0)},
    };
    for (const auto& charges : amplitude_set) {
        const auto base = eikonal::make_config(charges, 1.3);
        const auto restrung = transformed(charges, 1.3, 1.0, 0.0, 0.9);
        const auto moved = transformed(charges, 1.3, 1.0, shift);
        const double dtheta = dirac_angle_sum(restrung) - dirac_angle_sum(base);
        for (Complex p : momenta) {
            const Complex f = amplitude(base, p);
            const Complex g = amplitude(restrung, p);
            const Complex h = amplitude(moved, p);
            a_theta_mod.add(std::abs(std::abs(g) / std::abs(f) - 1.0));
            a_theta_phase.add(rel_err(g, f * std::exp(-I * dtheta)));
            a_trans_mod.add(std::abs(std::abs(h) / std::abs(f) - 1.0));
            a_trans_phase.add(rel_err(h, f * std::exp(-I * (shift * std::conj(p)).real())));
        }
    }
    const bool amplitude_ok = a_theta_mod.worst <= 1e-9 && a_theta_phase.worst <= 1e-9 &&
                              a_trans_mod.worst <= 1e-10 && a_trans_phase.worst <= 1e-9;
    out.details << "    amplitude string angles: |f| " << a_theta_mod.worst << ", phase -sum n theta "
                << a_theta_phase.worst << "\n"
                << "    amplitude translation: |f| " << a_trans_mod.worst << ", phase -Re(d p*) "
                << a_trans_phase.worst << "\n";

    // Exchange: relabelling the two monopoles.
    Tally x_corrected, x_printed;
    for (auto [n1, n2] : {std::pair{1, 2}, std::pair{2, 4}, std::pair{3, 1}, std::pair{2, 2}}) {
        const Complex b1(0.6, 0.2), b2(-0.9, -0.4);
        for (Complex p : momenta) {
            const double a = std::abs(eikonal::amplitude_two_monopoles(n1, n2, b1, b2, 1.0, p).f);
            const double b = std::abs(eikonal::amplitude_two_monopoles(n2, n1, b2, b1, 1.0, p).f);
            x_corrected.add(std::abs(a / b - 1.0));
            const auto printed = eikonal::AmplitudeForm::printed;
            const double c = std::abs(eikonal::amplitude_two_monopoles(n1, n2, b1, b2, 1.0, p, printed).f);
            const double d = std::abs(eikonal::amplitude_two_monopoles(n2, n1, b2, b1, 1.0, p, printed).f);
            x_printed.add(std::abs(c / d - 1.0));
        }
    }
    const bool exchange_ok = x_corrected.worst <= 1e-9;
    out.details << "    exchange |f(n1,n2,b1,b2)| = |f(n2,n1,b2,b1)|: corrected " << x_corrected.worst
                << ", printed " << x_printed.worst << "\n";

    out.pass = classical_ok && amplitude_ok && exchange_ok;
    std::ostringstream s;
    s << "classical " << (classical_ok ? "ok" : "FAILED") << ", amplitude phases "
      << (amplitude_ok ? "ok" : "FAILED") << ", exchange " << (exchange_ok ? "ok" : "FAILED");
    out.summary = s.str();
    return out;
}

}  // namespace acceptance

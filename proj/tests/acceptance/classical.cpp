#include <algorithm>
#include <cmath>
#include <random>

#include "acceptance.hpp"
#include "eikonal/classical.hpp"
#include "eikonal/errors.hpp"
#include "support.hpp"

namespace acceptance {

using eikonal::Complex;
using eikonal::I;
using eikonal::pi;
using support::charge;

Outcome focal_points() {
    Outcome out;
    const auto equal = eikonal::make_config({charge(1.0, 0.0, 2), charge(-1.0, 0.0, 2)}, 1.0);
    const auto fe = eikonal::focal_points(equal);
    bool equal_ok = fe.size() == 2;
    double b_err = 0.0, p_err = 0.0;
    if (equal_ok) {
        // Sorted by real then imaginary part: b_f = -i first.
        b_err = std::max(std::abs(fe[0].b_f - Complex(0.0, -1.0)), std::abs(fe[1].b_f - Complex(0.0, 1.0)));
        p_err = std::max(std::abs(fe[0].p_f - 2.0), std::abs(fe[1].p_f + 2.0));
        equal_ok = b_err <= 1e-10 && p_err <= 1e-12;
    }
    for (const auto& f : fe) {
        out.details << "    equal monopoles: b_f " << f.b_f << ", p_f " << f.p_f << "\n";
    }

    const double n = 2.0, r = 1.0;
    const auto dipole = eikonal::make_config({charge(r, 0.0, n), charge(-r, 0.0, -n)}, 1.0);
    const auto fd = eikonal::focal_points(dipole);
    const auto infinite = std::find_if(fd.begin(), fd.end(), [](const auto& f) { return f.at_infinity; });
    const auto finite = std::find_if(fd.begin(), fd.end(), [](const auto& f) { return !f.at_infinity; });
    const bool dipole_ok = infinite != fd.end() && infinite->degenerate && infinite->p_f == Complex(0.0) &&
                           finite != fd.end();
    Complex ratio;
    if (finite != fd.end()) {
        ratio = finite->p_f / (-I * n / r);
        out.details << "    monopole-antimonopole: finite b_f " << finite->b_f << ", p_f " << finite->p_f
                    << ", ratio to -i n/R = " << ratio << "\n";
    }
    out.details << "    monopole-antimonopole: at-infinity point present "
                << (infinite != fd.end() ? "yes (p_f = 0, degenerate)" : "no") << "\n";

    out.pass = equal_ok && dipole_ok;
    std::ostringstream s;
    s << "equal monopoles |b_f - (-+i)| " << b_err << ", |p_f - (+-2)| " << p_err
      << "; antimonopole pair: at-infinity p_f = 0 " << (dipole_ok ? "found" : "missing")
      << ", finite p_f / (-i n/R) = " << ratio;
    out.summary = s.str();
    return out;
}

namespace {

// p0^2 / |det J| of the real map (x, y) -> (Re p, Im p) by central differences.
double jacobian_weight(const eikonal::ScatteringConfig& config, Complex b) {
    double nearest = 1.0;
    for (const auto& c : config.charges()) {
        nearest = std::min(nearest, std::abs(b - c.position));
    }
    const double h = 1e-5 * nearest;
    const Complex dx = (eikonal::momentum_map(config, b + h) - eikonal::momentum_map(config, b - h)) / (2.0 * h);
    const Complex dy = (eikonal::momentum_map(config, b + I * h) - eikonal::momentum_map(config, b - I * h)) /
                       (2.0 * h);
    const double det = dx.real() * dy.imag() - dx.imag() * dy.real();
    return config.p0() * config.p0() / std::abs(det);
}

}  // namespace

Outcome jacobian_cross_check() {
    Outcome out;
    std::mt19937_64 rng(314159);
    std::uniform_real_distribution<double> pos_d(-2.0, 2.0), alpha_d(-1.0, 1.0), p0_d(0.5, 2.0),
        lnp_d(std::log(0.2), std::log(5.0)), arg_d(-pi, pi), theta_d(0.0, 2.0 * pi);
    std::uniform_int_distribution<int> count_d(1, 4), n_d(-3, 3);

    double worst = 0.0;
    int evaluated = 0, skipped = 0, errors = 0;
    for (int c = 0; c < 20; ++c) {
        std::vector<eikonal::ChargeSpec> charges;
        const int count = count_d(rng);
        while (int(charges.size()) < count) {
            const Complex pos(pos_d(rng), pos_d(rng));
            const bool crowded = std::any_of(charges.begin(), charges.end(), [&](const auto& o) {
                return std::abs(o.position - pos) < 0.3;
            });
            const double alpha = alpha_d(rng);
            const int n = n_d(rng);
            const double theta = theta_d(rng);
            if (!crowded) {
                charges.push_back(charge(pos, alpha, n, theta));
            }
        }
        const auto config = eikonal::make_config(charges, p0_d(rng));
        for (int k = 0; k < 10; ++k) {
            const Complex p = std::polar(std::exp(lnp_d(rng)), arg_d(rng));
            try {
                const auto s = eikonal::classical_cross_section(config, p);
                if (s.focal) {
                    ++skipped;
                    continue;
                }
                double fd = 0.0;
                for (Complex b : eikonal::preimages(config, p)) {
                    fd += jacobian_weight(config, b);
                }
                worst = std::max(worst, std::abs(fd / s.sigma - 1.0));
                ++evaluated;
            } catch (const eikonal::Error& e) {
                ++errors;
                out.details << "    config " << c << " p " << p << ": " << e.what() << "\n";
            }
        }
    }
    out.pass = worst <= 1e-6 && errors == 0 && evaluated > 0;
    std::ostringstream s;
    s << "max rel deviation " << worst << " over " << evaluated << " points (" << skipped
      << " on focal points, " << errors << " errors)";
    out.summary = s.str();
    return out;
}

Outcome dipole_limit() {
    Outcome out;
    double worst_real = 0.0;
    double worst_disc = 0.0;
    Complex worst_disc_p;
    for (double n : {1.0, 2.0, 4.0, 8.0}) {
        for (double r : {0.5, 1.0, 2.0}) {
            for (double p0 : {1.0, 2.5}) {
                const double limit = n * r * p0 * p0 / 2.0;
                const double edge = 0.1 * n / r;
                for (int k = 0; k < 20; ++k) {
                    const double size = edge * std::pow(1e-3, k / 19.0);
                    for (double sign : {1.0, -1.0}) {
                        const double p = sign * size;
                        const double s = eikonal::cross_section_monopole_antimonopole_closed(n, r, p0, p).sigma;
                        worst_real = std::max(worst_real, std::abs(s * std::pow(size, 3) / limit - 1.0));
                    }
                    for (int j = 0; j < 16; ++j) {
                        const Complex p = std::polar(size, 2.0 * pi * j / 16.0);
                        const double s = eikonal::cross_section_monopole_antimonopole_closed(n, r, p0, p).sigma;
                        const double dev = std::abs(s * std::pow(size, 3) / limit - 1.0);
                        if (dev > worst_disc) {
                            worst_disc = dev;
                            worst_disc_p = p * r / n;
                        }
                    }
                }
            }
        }
    }
    out.details << "    over the complex disc |p| <= 0.1 n/R the worst deviation is " << worst_disc
                << " at p R/n = " << worst_disc_p << "\n";
    out.pass = worst_real <= 0.05;
    std::ostringstream s;
    s << "sigma |p|^3 / (n R p0^2 / 2) on real p, |p| <= 0.1 n/R: max deviation " << worst_real;
    out.summary = s.str();
    return out;
}

}  // namespace acceptance

#include "eikonal/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eikonal/config.hpp"
#include "eikonal/csv.hpp"
#include "eikonal/errors.hpp"
#include "eikonal/quadrature.hpp"

namespace eikonal {

namespace {

constexpr double degree = pi / 180.0;

// arg z in (lo, lo + 2 pi]
double arg_in(Complex z, double lo) {
    double a = std::arg(z);
    while (a <= lo) {
        a += 2.0 * pi;
    }
    while (a > lo + 2.0 * pi) {
        a -= 2.0 * pi;
    }
    return a;
}

Complex exponent(const ChargeSpec& c, double p0, Plane plane) {
    const double half = 0.5 * c.dirac_n;
    return {plane == Plane::b ? -half : half, c.electric / p0};
}

Complex centre(const ChargeSpec& c, Plane plane) {
    return plane == Plane::b ? c.position : std::conj(c.position);
}

bool is_integer(Complex s) {
    return s.imag() == 0.0 && s.real() == std::round(s.real());
}

// The integrand of one plane, evaluated as a single exponential so that
// large and small factors never meet in floating point.
class Integrand {
public:
    Integrand(const ScatteringConfig& config, std::size_t j, Plane plane, Complex p,
              double window_lo)
        : j_(j), window_lo_(window_lo) {
        const Complex q = plane == Plane::b ? std::conj(p) : p;
        linear_ = -0.5 * I * q;
        const double sign = plane == Plane::b ? 1.0 : -1.0;
        for (const ChargeSpec& c : config.charges()) {
            const Complex s = exponent(c, config.p0(), plane);
            s_.push_back(s);
            centres_.push_back(centre(c, plane));
            constant_ += I * sign * c.string_angle * s;
        }
    }

    // Value at x with the own-charge argument pinned to arg_j.
    Complex operator()(Complex x, double arg_j) const {
        Complex e = linear_ * x + constant_;
        for (std::size_t m = 0; m < s_.size(); ++m) {
            if (s_[m] == 0.0) {
                continue;
            }
            const Complex d = x - centres_[m];
            const double a = m == j_ ? arg_j : arg_in(d, window_lo_);
            e += s_[m] * Complex(std::log(std::abs(d)), a);
        }
        return std::exp(e);
    }

    Complex own_exponent() const { return s_[j_]; }
    Complex linear() const { return linear_; }

private:
    std::size_t j_;
    double window_lo_;
    Complex linear_;
    Complex constant_ = 0.0;
    std::vector<Complex> s_;
    std::vector<Complex> centres_;
};

double window_lo(Plane plane, double ray_direction) {
    return plane == Plane::b ? ray_direction : ray_direction - pi;
}

// Perpendicular distance from `point` to the line through `origin` with
// direction angle phi.
double line_distance(Complex origin, double phi, Complex point) {
    return std::abs(((point - origin) * std::polar(1.0, -phi)).imag());
}

double min_separation(const ScatteringConfig& config) {
    double sep = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < config.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            sep = std::min(sep, std::abs(config[a].position - config[b].position));
        }
    }
    return sep;
}

bool active(const ChargeSpec& c) {
    return c.electric != 0.0 || c.dirac_n != 0.0;
}

ScatteringConfig regulated(const ScatteringConfig& config, double eps) {
    std::vector<ChargeSpec> charges = config.charges();
    for (ChargeSpec& c : charges) {
        if (c.electric == 0.0 && c.dirac_n != 0.0) {
            c.electric = eps * config.p0();
        }
    }
    return make_config(std::move(charges), config.p0(), config.allow_noninteger());
}

struct Evaluation {
    Complex f;
    double err = 0.0;
    std::vector<OracleTerm> terms;
};

Evaluation evaluate(const ScatteringConfig& config, Complex p, double rotation, double tol,
                    const OracleOptions& options, bool exact_rays) {
    Evaluation out;
    Complex sum = 0.0;
    for (std::size_t j = 0; j < config.size(); ++j) {
        if (!active(config[j])) {
            out.terms.push_back({0.0, 0.0});
            continue;
        }
        ContourSpec spec_b = default_contour(config, j, Plane::b, p, rotation);
        ContourSpec spec_c = default_contour(config, j, Plane::b_conj, p, rotation);
        spec_b.loop_radius *= options.radius_scale;
        spec_c.loop_radius *= options.radius_scale;

        const Complex sc = exponent(config[j], config.p0(), Plane::b_conj);
        const ContourResult ib = contour_integral(config, j, Plane::b, p, spec_b, tol);
        ContourResult ic;
        Complex i_p;
        double err_p;
        if (is_integer(sc)) {
            if (!exact_rays) {
                throw DegenerateError("oracle term needs the regulator or exact rays");
            }
            if (sc.real() < 0.0) {
                throw DegenerateError("exact ray starts at a pole; use the regulator");
            }
            spec_c.shape = ContourShape::ray;
            ic = contour_integral(config, j, Plane::b_conj, p, spec_c, tol);
            i_p = ic.value;
            err_p = ic.est_err;
        } else {
            ic = contour_integral(config, j, Plane::b_conj, p, spec_c, tol);
            const Complex weight = 1.0 / (1.0 - std::exp(2.0 * pi * I * sc));
            i_p = ic.value * weight;
            err_p = ic.est_err * std::abs(weight);
        }
        out.terms.push_back({i_p, ib.value});
        sum += i_p * ib.value;
        out.err += std::abs(i_p) * ib.est_err + std::abs(ib.value) * err_p;
    }
    const double scale = config.p0() / (4.0 * pi);
    out.f = scale * sum;
    out.err *= scale;
    return out;
}

bool has_degenerate_term(const ScatteringConfig& config) {
    for (const ChargeSpec& c : config.charges()) {
        if (active(c) && is_integer(exponent(c, config.p0(), Plane::b_conj))) {
            return true;
        }
    }
    return false;
}

// Value at 0 of the polynomial through (x_k, y_k), by Neville's scheme.
Complex extrapolate_to_zero(const std::vector<double>& x, std::vector<Complex> y) {
    const std::size_t n = x.size();
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = 0; i + level < n; ++i) {
            const double xa = x[i];
            const double xb = x[i + level];
            y[i] = (xb * y[i] - xa * y[i + 1]) / (xb - xa);
        }
    }
    return y[0];
}

}  // namespace

double ray_angle(Complex p, Plane plane, double rotation) {
    const double psi = -0.5 * pi + std::arg(p) + rotation;
    return plane == Plane::b ? psi : -psi - pi;
}

double choose_rotation(const ScatteringConfig& config, Complex p) {
    if (config.size() < 2) {
        return 0.0;
    }
    const double need = 0.2 * min_separation(config);
    for (int step = 0; step <= 24; ++step) {
        const double delta = (step % 2 == 1 ? 1.0 : -1.0) * ((step + 1) / 2) * 5.0 * degree;
        const double psi = ray_angle(p, Plane::b, delta);
        double clearance = std::numeric_limits<double>::infinity();
        for (std::size_t a = 0; a < config.size(); ++a) {
            for (std::size_t b = 0; b < config.size(); ++b) {
                if (a != b && active(config[a]) && active(config[b])) {
                    clearance = std::min(
                        clearance, line_distance(config[a].position, psi, config[b].position));
                }
            }
        }
        if (clearance >= need) {
            return delta;
        }
    }
    throw CutCollision("no contour rotation up to 60 degrees clears the cuts");
}

ContourSpec default_contour(const ScatteringConfig& config, std::size_t j, Plane plane, Complex p,
                            double rotation) {
    if (j >= config.size()) {
        throw IndexError("charge index out of range");
    }
    ContourSpec spec;
    spec.center = centre(config[j], plane);
    spec.ray_direction = ray_angle(p, plane, rotation);
    const Complex s = exponent(config[j], config.p0(), plane);
    double radius = 2.0 * std::max(std::abs(s), 0.5) / std::abs(p);
    for (std::size_t m = 0; m < config.size(); ++m) {
        if (m == j || !active(config[m])) {
            continue;
        }
        const Complex other = centre(config[m], plane);
        radius = std::min(radius, 0.45 * line_distance(spec.center, spec.ray_direction, other));
    }
    if (!(radius > 0.0)) {
        throw CutCollision("another charge sits on this contour's line");
    }
    spec.loop_radius = radius;
    return spec;
}

ContourResult contour_integral(const ScatteringConfig& config, std::size_t j, Plane plane,
                               Complex p, const ContourSpec& spec, double tol) {
    if (j >= config.size()) {
        throw IndexError("charge index out of range");
    }
    if (p == 0.0) {
        throw ForwardSingularity("contour integrals need p != 0");
    }
    const double phi = spec.ray_direction;
    const double r = spec.loop_radius;
    if (!(r > 0.0)) {
        throw InputError("loop radius must be positive");
    }
    for (std::size_t m = 0; m < config.size(); ++m) {
        if (m != j && active(config[m]) &&
            line_distance(spec.center, phi, centre(config[m], plane)) <= r) {
            throw CutCollision("contour meets the cut of charge " + std::to_string(m));
        }
    }
    const Integrand f(config, j, plane, p, window_lo(plane, phi));
    const Complex direction = std::polar(1.0, phi);
    const double rate = -(f.linear() * direction).real();
    if (rate <= 0.05 * 0.5 * std::abs(p)) {
        throw ConvergenceError("contour legs do not decay in this direction");
    }

    ContourResult out;
    Complex circle = 0.0;
    double scale = 0.0;
    if (spec.shape == ContourShape::loop) {
        // Clockwise from phi + 2 pi down to phi.
        auto g = [&](double theta) {
            const Complex w = std::polar(r, theta);
            return f(spec.center + w, theta) * I * w;
        };
        const int panels = 8;
        for (int k = 0; k < panels; ++k) {
            const double a = phi + 2.0 * pi * (1.0 - double(k) / panels);
            const double b = phi + 2.0 * pi * (1.0 - double(k + 1) / panels);
            const QuadratureResult q = integrate_interval(g, a, b, tol);
            circle += q.value;
            out.est_err += q.est_abs_err;
            scale = std::max(scale, q.l1);
        }
    }

    // Outgoing leg with the own argument at phi; the incoming leg is the same
    // integrand times e^{2 pi i s_j}, so the pair folds into (1 - omega).
    auto leg = [&](double u) { return f(spec.center + u * direction, phi) * direction; };
    const double start = spec.shape == ContourShape::loop ? r : 0.0;
    const double h = spec.panel_length > 0.0 ? spec.panel_length : 1.0 / rate;
    Complex legs = 0.0;
    double u = start;
    int quiet = 0;
    for (int panel = 0;; ++panel) {
        if (panel > 4000) {
            throw ConvergenceError("contour legs did not converge");
        }
        double next = u + h;
        if (spec.leg_length > 0.0) {
            next = std::min(next, start + spec.leg_length);
        }
        const QuadratureResult q = integrate_interval(leg, u, next, tol);
        legs += q.value;
        out.est_err += q.est_abs_err;
        scale = std::max(scale, q.l1);
        u = next;
        if (spec.leg_length > 0.0) {
            if (u >= start + spec.leg_length) {
                // Bound on the dropped tail: |f(u)| / rate.
                out.est_err += std::abs(leg(u)) / rate;
                break;
            }
            continue;
        }
        const double tail = std::abs(leg(u)) / rate;
        const double level = std::max({std::abs(legs), std::abs(circle), scale});
        quiet = (std::abs(q.value) <= tol * level && tail <= tol * level) ? quiet + 1 : 0;
        if (quiet >= 2) {
            out.est_err += tail;
            break;
        }
    }
    out.leg_length = u - start;
    if (spec.shape == ContourShape::loop) {
        const Complex weight = 1.0 - std::exp(2.0 * pi * I * f.own_exponent());
        out.value = circle + weight * legs;
    } else {
        out.value = legs;
    }
    out.est_err += 1e-15 * scale;
    return out;
}

OracleResult amplitude_oracle(const ScatteringConfig& config, Complex p, double tol,
                              const OracleOptions& options) {
    if (p == 0.0) {
        throw ForwardSingularity("amplitude diverges at p = 0");
    }
    OracleResult out;
    out.rotation = choose_rotation(config, p) + options.rotation_offset;
    const double quad_tol = std::min(1e-12, tol * 1e-2);

    bool regulate = false;
    switch (options.mode) {
        case OracleMode::automatic: regulate = has_degenerate_term(config); break;
        case OracleMode::regulated: regulate = true; break;
        case OracleMode::exact: regulate = false; break;
    }
    const bool exact_rays = options.mode == OracleMode::exact;

    if (!regulate) {
        Evaluation e = evaluate(config, p, out.rotation, quad_tol, options, exact_rays);
        out.f = e.f;
        out.est_err = e.err;
        out.per_term = std::move(e.terms);
        out.shortfall = out.est_err > tol * std::max(1.0, std::abs(out.f));
        return out;
    }

    const std::vector<double>& eps = options.epsilons;
    if (eps.size() < 2) {
        throw InputError("the regulator needs at least two epsilon values");
    }
    std::vector<Complex> values;
    double quad_err = 0.0;
    for (double e : eps) {
        Evaluation ev = evaluate(regulated(config, e), p, out.rotation, quad_tol, options, false);
        if (!std::isfinite(ev.f.real()) || !std::isfinite(ev.f.imag())) {
            throw RegulatorFailure("non-finite regulated amplitude");
        }
        values.push_back(ev.f);
        quad_err = std::max(quad_err, ev.err);
        out.per_term = std::move(ev.terms);
    }
    // Successive differences must shrink as epsilon does.
    for (std::size_t k = 2; k < values.size(); ++k) {
        const double before = std::abs(values[k - 1] - values[k - 2]);
        const double after = std::abs(values[k] - values[k - 1]);
        if (after > before && after > 1e-12 * std::abs(values[k])) {
            throw RegulatorFailure("regulated amplitudes do not settle as epsilon shrinks");
        }
    }
    out.f = extrapolate_to_zero(eps, values);
    const std::vector<double> tail_x(eps.end() - 2, eps.end());
    const std::vector<Complex> tail_y(values.end() - 2, values.end());
    const Complex lower = extrapolate_to_zero(tail_x, tail_y);
    const double ratio = eps.back() / eps.front();
    // Amplification of the quadrature error by the extrapolation weights.
    double weights = 0.0;
    for (std::size_t k = 0; k < eps.size(); ++k) {
        double w = 1.0;
        for (std::size_t m = 0; m < eps.size(); ++m) {
            if (m != k) {
                w *= eps[m] / (eps[m] - eps[k]);
            }
        }
        weights += std::abs(w);
    }
    out.est_err = std::abs(out.f - lower) * ratio + quad_err * weights;
    out.regulator_alpha = *std::min_element(eps.begin(), eps.end()) * config.p0();
    out.shortfall = out.est_err > tol * std::max(1.0, std::abs(out.f));
    return out;
}

}  // namespace eikonal

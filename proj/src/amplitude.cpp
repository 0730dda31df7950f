#include "eikonal/amplitude.hpp"

#include <cmath>
#include <functional>

#include "eikonal/config.hpp"
#include "eikonal/errors.hpp"
#include "eikonal/specfun.hpp"

namespace eikonal {

const char* to_string(AmplitudeMethod m) {
    switch (m) {
        case AmplitudeMethod::dyon_closed: return "dyon_closed";
        case AmplitudeMethod::two_monopoles_whittaker: return "two_monopoles_whittaker";
        case AmplitudeMethod::identical_monopoles_bessel: return "identical_monopoles_bessel";
        case AmplitudeMethod::oracle: return "oracle";
    }
    return "?";
}

const char* to_string(AmplitudeForm f) {
    return f == AmplitudeForm::corrected ? "corrected" : "printed";
}

namespace {

constexpr const char* printed_note = "paper-verbatim";
constexpr const char* corrected_note = "corrected, oracle-normalised";

// x^s on the principal branch, negative reals taken from above.
Complex cpow(Complex x, Complex s) {
    return std::exp(s * log_on_side(x, CutSide::above));
}

bool nonpositive_integer(double x) {
    return x <= 0.0 && x == std::round(x);
}

void require_nonzero(Complex p) {
    if (p == 0.0) {
        throw ForwardSingularity("amplitude diverges at p = 0");
    }
}

// Evaluates U(a, b, z) with z on the principal branch (cut approached from
// above). The two-centre formula is written against this hook so the
// identical-monopole variant can substitute the Bessel-K reduction.
using UEvaluator = std::function<Complex(Complex, Complex, Complex)>;

Complex u_direct(Complex a, Complex b, Complex z) {
    return tricomi_u(a, b, z, CutSide::above).value;
}

// U(a, 2a, z) = e^{z/2} z^{1/2-a} K_{a-1/2}(z/2) / sqrt(pi).
Complex u_via_bessel(Complex a, Complex b, Complex z) {
    if (std::abs(b - 2.0 * a) > 1e-14 * std::abs(b)) {
        throw InputError("Bessel reduction needs b = 2a");
    }
    const Complex k = bessel_k(a - 0.5, 0.5 * z, CutSide::above).value;
    return std::exp(0.5 * z) * cpow(z, 0.5 - a) * k / std::sqrt(pi);
}

struct Centre {
    double alpha;
    double n;
    Complex b;
    double theta;
};

// f = (p0/4pi) sum_k T_k R^A_k R^G_k; see the decisions recorded with the
// oracle for the ray/loop factorisation this comes from.
Complex two_centre(const Centre (&c)[2], double p0, Complex p, const UEvaluator& u) {
    const Complex pstar = std::conj(p);
    const double ap = std::abs(p);
    const double psi = -0.5 * pi + std::arg(p);
    const Complex lambda = 0.5 * I * pstar;
    const Complex lambda_c = 0.5 * I * p;
    const double log_scale = std::log(2.0 / ap);
    Complex s[2], sc[2];
    for (int k = 0; k < 2; ++k) {
        s[k] = Complex(-0.5 * c[k].n, c[k].alpha / p0);
        sc[k] = Complex(0.5 * c[k].n, c[k].alpha / p0);
    }
    Complex total = 0.0;
    for (int k = 0; k < 2; ++k) {
        const int m = 1 - k;
        const Complex d = c[m].b - c[k].b;

        const Complex z = -lambda * d;
        const double wrap = z.imag() < 0.0 ? 1.0 : 0.0;
        const Complex e = 1.0 + s[k] + s[m];
        const Complex ra = std::exp(-lambda * c[k].b + e * (log_scale + I * psi) +
                                    2.0 * pi * I * wrap * s[m] +
                                    e * log_on_side(z, CutSide::above) +
                                    I * (c[k].theta * s[k] + c[m].theta * s[m])) *
                           u(1.0 + s[k], 1.0 + e, z);

        const Complex zc = -lambda_c * std::conj(d);
        const Complex ec = 1.0 + sc[k] + sc[m];
        const Complex rg = std::exp(-lambda_c * std::conj(c[k].b) +
                                    ec * (log_scale - I * (psi + pi)) +
                                    ec * log_on_side(zc, CutSide::above) -
                                    I * (c[k].theta * sc[k] + c[m].theta * sc[m])) *
                           u(1.0 + sc[k], 1.0 + ec, zc);

        Complex t;
        if (c[k].alpha == 0.0) {
            // Gamma(1+s')/Gamma(-s) with s' = -s.
            t = -2.0 * pi * I * std::exp(I * pi * s[k]) * s[k];
        } else {
            t = 2.0 * pi * I * std::exp(I * pi * s[k] + log_gamma(1.0 + sc[k]).value) *
                rgamma(-s[k]);
        }
        total += t * ra * rg;
    }
    return p0 / (4.0 * pi) * total;
}

void require_distinct(Complex b1, Complex b2) {
    if (b1 == b2) {
        throw InputError("two-centre amplitude needs distinct positions");
    }
}

}  // namespace

TwoMonopoleParameters two_monopole_parameters(double n1, double n2, Complex b1, Complex b2,
                                              Complex p) {
    TwoMonopoleParameters out;
    out.kappa = (n2 - n1) / 4.0;
    out.mu = 0.5 - (n1 + n2) / 4.0;
    out.mu_prime = 1.0 - out.mu;
    out.tau = 0.5 * I * p * std::conj(b2 - b1);
    return out;
}

AmplitudeSample amplitude_dyon(double alpha, double n, Complex b0, double theta, double p0,
                               Complex p, AmplitudeForm form) {
    require_nonzero(p);
    const Complex pstar = std::conj(p);
    const double ap = std::abs(p);
    const Complex z(0.0, alpha / p0);
    const double half = 0.5 * n;
    const double shift = std::real(b0 * pstar);
    AmplitudeSample out{p, 0.0, AmplitudeMethod::dyon_closed, {}};

    if (form == AmplitudeForm::printed) {
        // Gamma(z+n/2)/Gamma(z-n/2); the reciprocal is entire, so an
        // exact zero comes out where the printed ratio has its pole below.
        if (alpha == 0.0 && nonpositive_integer(half)) {
            throw GammaPole("printed dyon form: Gamma(n/2) diverges");
        }
        const Complex ratio = std::exp(log_gamma(z + half).value) * rgamma(z - half);
        out.f = 2.0 * I * p0 / (ap * ap) * cpow(p / pstar, n / 4.0) *
                std::exp(2.0 * I * alpha / p0 * std::log(2.0 * p0 / ap)) * (z + half) *
                std::exp(I * (-shift - pi * half + n * theta)) * ratio;
        out.convention_note = printed_note;
        return out;
    }

    Complex ratio;
    if (alpha == 0.0) {
        ratio = nonpositive_integer(half) ? -1.0 : 1.0;
    } else {
        ratio = std::exp(log_gamma(z + half).value - log_gamma(half - z).value);
    }
    out.f = -2.0 * I * p0 / (ap * ap) *
            std::exp(2.0 * I * alpha / p0 * std::log(2.0 / ap)) * (z + half) *
            std::exp(I * (-pi * half - n * std::arg(p) - shift - n * theta)) * ratio;
    out.convention_note = corrected_note;
    return out;
}

AmplitudeSample amplitude_two_monopoles(double n1, double n2, Complex b1, Complex b2, double p0,
                                        Complex p, AmplitudeForm form) {
    require_nonzero(p);
    require_distinct(b1, b2);
    AmplitudeSample out{p, 0.0, AmplitudeMethod::two_monopoles_whittaker, {}};
    if (form == AmplitudeForm::corrected) {
        const Centre c[2] = {{0.0, n1, b1, 0.0}, {0.0, n2, b2, 0.0}};
        out.f = two_centre(c, p0, p, u_direct);
        out.convention_note = corrected_note;
        return out;
    }
    const Complex pstar = std::conj(p);
    const TwoMonopoleParameters par = two_monopole_parameters(n1, n2, b1, b2, p);
    const Complex tau = par.tau;
    const Complex tauc = std::conj(tau);
    const double sum = n1 + n2;
    const double ap = std::abs(p);
    const Complex pre = -I * p0 / (ap * ap) * cpow(-pstar / p, sum / 2.0) *
                        cpow(tau / tauc, sum / 4.0) *
                        std::exp(-0.25 * I * std::real((b1 + b2) * pstar));
    auto w = [](Complex k, Complex m, Complex x) {
        return whittaker_w(k, m, x, CutSide::above).value;
    };
    const Complex t1 = std::exp(I * pi * (n1 / 2.0 - sum / 4.0)) * n1 *
                       w(-par.kappa, par.mu, tauc) * w(par.kappa, par.mu_prime, -tau);
    const Complex t2 = std::exp(I * pi * (n2 / 2.0 + sum / 4.0)) * n2 *
                       w(par.kappa, par.mu, -tauc) * w(-par.kappa, par.mu_prime, tau);
    out.f = pre * (t1 + t2);
    out.convention_note = printed_note;
    return out;
}

AmplitudeSample amplitude_two_identical_monopoles(double n, Complex b1, Complex b2, double p0,
                                                  Complex p, AmplitudeForm form) {
    require_nonzero(p);
    require_distinct(b1, b2);
    AmplitudeSample out{p, 0.0, AmplitudeMethod::identical_monopoles_bessel, {}};
    if (form == AmplitudeForm::corrected) {
        const Centre c[2] = {{0.0, n, b1, 0.0}, {0.0, n, b2, 0.0}};
        out.f = two_centre(c, p0, p, u_via_bessel);
        out.convention_note = corrected_note;
        return out;
    }
    const Complex pstar = std::conj(p);
    const Complex tau = 0.5 * I * p * std::conj(b2 - b1);
    const Complex tauc = std::conj(tau);
    const Complex pre = n / (2.0 * pi) * p0 * std::abs(b2 - b1) / std::abs(p) *
                        cpow(-pstar / p, n) * cpow(tauc / tau, n / 2.0) *
                        std::exp(-0.25 * I * std::real((b1 + b2) * pstar));
    auto k = [](double nu, Complex x) { return bessel_k(nu, x, CutSide::above).value; };
    const double sign = std::fmod(std::abs(n), 2.0) == 0.0 ? 1.0 : -1.0;
    const Complex bracket = k((1.0 - n) / 2.0, 0.5 * tauc) * k((1.0 + n) / 2.0, -0.5 * tau) -
                            sign * k((1.0 - n) / 2.0, -0.5 * tauc) * k((1.0 + n) / 2.0, 0.5 * tau);
    out.f = pre * bracket;
    out.convention_note = printed_note;
    return out;
}

AmplitudeSample amplitude_two_dyons(const ScatteringConfig& config, Complex p) {
    if (config.size() != 2) {
        throw InputError("two-centre formula needs exactly two charges");
    }
    require_nonzero(p);
    Centre c[2];
    for (int k = 0; k < 2; ++k) {
        const ChargeSpec& q = config[std::size_t(k)];
        c[k] = {q.electric, q.dirac_n, q.position, q.string_angle};
    }
    AmplitudeSample out{p, two_centre(c, config.p0(), p, u_direct),
                        AmplitudeMethod::two_monopoles_whittaker, corrected_note};
    return out;
}

AmplitudeSample amplitude_closed(const ScatteringConfig& config, Complex p, AmplitudeForm form) {
    if (config.size() == 1) {
        const ChargeSpec& c = config[0];
        return amplitude_dyon(c.electric, c.dirac_n, c.position, c.string_angle, config.p0(), p,
                              form);
    }
    if (config.size() == 2) {
        if (form == AmplitudeForm::corrected) {
            return amplitude_two_dyons(config, p);
        }
        const ChargeSpec& a = config[0];
        const ChargeSpec& b = config[1];
        if (a.electric != 0.0 || b.electric != 0.0 || a.string_angle != 0.0 ||
            b.string_angle != 0.0) {
            throw InputError("the printed two-centre form covers pure monopoles without string angles");
        }
        return amplitude_two_monopoles(a.dirac_n, b.dirac_n, a.position, b.position, config.p0(),
                                       p, form);
    }
    throw InputError("no closed form for more than two charges; use the oracle");
}

}  // namespace eikonal

#include "eikonal/classical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "eikonal/config.hpp"
#include "eikonal/errors.hpp"
#include "eikonal/polyroots.hpp"

namespace eikonal {

namespace {

struct Terms {
    std::vector<Complex> q;
    std::vector<Complex> pos;
    std::vector<double> theta;
    double scale = 1.0;  // length scale of the layout
};

Terms terms_of(const ScatteringConfig& config) {
    Terms t;
    for (const ChargeSpec& c : config.charges()) {
        t.q.push_back(complex_charge(c, config.p0()).value);
        t.pos.push_back(c.position);
        t.theta.push_back(c.string_angle);
        t.scale = std::max(t.scale, std::abs(c.position));
    }
    return t;
}

void check_regular(const Terms& t, Complex b) {
    for (Complex pos : t.pos) {
        if (b == pos) {
            throw SingularPointError("b coincides with a charge position");
        }
    }
}

// sum_k Q_k/(b-b_k)^power
Complex inverse_power_sum(const Terms& t, Complex b, int power) {
    Complex sum = 0.0;
    for (std::size_t k = 0; k < t.q.size(); ++k) {
        Complex d = 1.0 / (b - t.pos[k]);
        Complex term = t.q[k];
        for (int j = 0; j < power; ++j) {
            term *= d;
        }
        sum += term;
    }
    return sum;
}

// prod_{j != skip} (b - b_j)^power, skip = npos for the full product.
Polynomial product_except(const Terms& t, std::size_t skip, int power) {
    Polynomial out{1.0};
    for (std::size_t j = 0; j < t.pos.size(); ++j) {
        if (j == skip) {
            continue;
        }
        for (int r = 0; r < power; ++r) {
            out = poly_multiply(out, {-t.pos[j], 1.0});
        }
    }
    return out;
}

// Newton on f(b) = target + c*sum Q/(b-b_k)^power; keeps the best iterate.
Complex polish(const Terms& t, Complex b, Complex target, Complex c, int power) {
    auto f = [&](Complex x) { return target + c * inverse_power_sum(t, x, power); };
    Complex best = b;
    double best_res = std::abs(f(b));
    for (int it = 0; it < 12 && best_res > 0.0; ++it) {
        const Complex df = -double(power) * c * inverse_power_sum(t, b, power + 1);
        if (df == 0.0) {
            break;
        }
        b -= f(b) / df;
        const double res = std::abs(f(b));
        if (!std::isfinite(res)) {
            break;
        }
        if (res < best_res) {
            best = b;
            best_res = res;
        } else {
            break;
        }
    }
    return best;
}

bool near_charge(const Terms& t, Complex b) {
    for (Complex pos : t.pos) {
        if (std::abs(b - pos) <= 1e-9 * t.scale) {
            return true;
        }
    }
    return false;
}

}  // namespace

PotentialEval potential(const ScatteringConfig& config, Complex b) {
    const Terms t = terms_of(config);
    check_regular(t, b);
    PotentialEval out{0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < t.q.size(); ++k) {
        const Complex d = b - t.pos[k];
        out.v += 2.0 * t.q[k] * std::log(d * std::polar(1.0, t.theta[k]));
        out.d1 += 2.0 * t.q[k] / d;
        out.d2 -= 2.0 * t.q[k] / (d * d);
    }
    return out;
}

Complex momentum_map(const ScatteringConfig& config, Complex b) {
    const Terms t = terms_of(config);
    check_regular(t, b);
    return std::conj(-2.0 / config.p0() * inverse_power_sum(t, b, 1));
}

std::vector<Complex> preimages(const ScatteringConfig& config, Complex p) {
    const Terms t = terms_of(config);
    const Complex pstar = std::conj(p);
    const double c = 2.0 / config.p0();
    // p* prod(b-b_j) + c sum_k Q_k prod_{j!=k}(b-b_j) = 0
    Polynomial poly = poly_scale(product_except(t, std::size_t(-1), 1), pstar);
    for (std::size_t k = 0; k < t.q.size(); ++k) {
        poly = poly_add(poly, poly_scale(product_except(t, k, 1), c * t.q[k]));
    }
    if (std::all_of(poly.begin(), poly.end(), [](Complex x) { return x == 0.0; })) {
        throw DegenerateError("preimages: cleared polynomial is identically zero");
    }
    std::vector<Complex> out;
    for (Complex root : poly_roots(poly)) {
        root = polish(t, root, pstar, c, 1);
        if (near_charge(t, root)) {
            continue;
        }
        const Complex image = std::conj(-c * inverse_power_sum(t, root, 1));
        if (std::abs(image - p) > 1e-8 * std::max(1.0, std::abs(p))) {
            throw ConvergenceError("preimages: root failed the map residual check");
        }
        out.push_back(root);
    }
    return out;
}

ClassicalSigma classical_cross_section(const ScatteringConfig& config, Complex p) {
    if (p == 0.0) {
        throw ForwardSingularity("classical cross section diverges at p = 0");
    }
    ClassicalSigma out;
    for (const FocalPoint& f : focal_points(config)) {
        if (!f.at_infinity && std::abs(p - f.p_f) <= 1e-9 * std::max(std::abs(f.p_f), std::abs(p))) {
            out.sigma = std::numeric_limits<double>::infinity();
            out.focal = true;
            return out;
        }
    }
    const Terms t = terms_of(config);
    const double p0 = config.p0();
    const double p04 = p0 * p0 * p0 * p0;
    for (Complex b : preimages(config, p)) {
        const double d2 = std::abs(2.0 * inverse_power_sum(t, b, 2));
        if (d2 == 0.0) {
            out.sigma = std::numeric_limits<double>::infinity();
            out.focal = true;
            return out;
        }
        out.sigma += p04 / (d2 * d2);
        ++out.branches;
    }
    return out;
}

std::vector<FocalPoint> focal_points(const ScatteringConfig& config) {
    std::vector<FocalPoint> out;
    if (config.size() < 2) {
        return out;
    }
    const Terms t = terms_of(config);
    // sum_k Q_k prod_{j!=k} (b-b_j)^2 = 0
    Polynomial poly;
    for (std::size_t k = 0; k < t.q.size(); ++k) {
        poly = poly_add(poly, poly_scale(product_except(t, k, 2), t.q[k]));
    }
    double largest = 0.0;
    for (Complex c : poly) {
        largest = std::max(largest, std::abs(c));
    }
    const std::size_t full_degree = poly.size() - 1;
    while (!poly.empty() && std::abs(poly.back()) <= 1e-12 * largest) {
        poly.pop_back();
    }
    const std::size_t lost = poly.empty() ? full_degree : full_degree - (poly.size() - 1);
    if (!poly.empty()) {
        for (Complex root : poly_roots(poly)) {
            root = polish(t, root, 0.0, 1.0, 2);
            if (near_charge(t, root)) {
                continue;
            }
            FocalPoint f;
            f.b_f = root;
            f.p_f = std::conj(-2.0 / config.p0() * inverse_power_sum(t, root, 1));
            f.residual = std::abs(2.0 * inverse_power_sum(t, root, 2));
            out.push_back(f);
        }
    }
    const double tie = 1e-9 * t.scale;
    std::sort(out.begin(), out.end(), [tie](const FocalPoint& a, const FocalPoint& b) {
        if (std::abs(a.b_f.real() - b.b_f.real()) > tie) {
            return a.b_f.real() < b.b_f.real();
        }
        return a.b_f.imag() < b.b_f.imag();
    });
    for (std::size_t k = 0; k < lost; ++k) {
        FocalPoint f;
        f.b_f = Complex(std::numeric_limits<double>::infinity(), 0.0);
        f.p_f = 0.0;
        f.at_infinity = true;
        f.degenerate = true;
        out.push_back(f);
    }
    return out;
}

std::array<Complex, 2> paper_focal_momenta(Complex q1, Complex q2, double r, double p0) {
    const Complex sum = q1 + q2;
    const Complex s1 = std::sqrt(q1);
    const Complex s2 = std::sqrt(q2);
    std::array<Complex, 2> out;
    for (int k = 0; k < 2; ++k) {
        const Complex root = k == 0 ? s1 + I * s2 : s1 - I * s2;
        out[k] = -sum * sum / (4.0 * r * p0 * root * root);
    }
    return out;
}

PaperSigma cross_section_two_dyons_closed(Complex q1, Complex q2, double r, double p0, Complex p) {
    if (p == 0.0) {
        throw ForwardSingularity("two-dyon cross section diverges at p = 0");
    }
    const Complex sum = q1 + q2;
    if (sum == 0.0) {
        throw DegenerateError("Q1 + Q2 = 0: use the monopole-antimonopole form");
    }
    PaperSigma out;
    out.provenance = "paper-verbatim two-dyon form";
    out.focal = paper_focal_momenta(q1, q2, r, p0);
    // p/p^f - 1 written without dividing by p^f, which may be infinite.
    std::array<Complex, 2> x;
    const Complex s1 = std::sqrt(q1);
    const Complex s2 = std::sqrt(q2);
    for (int k = 0; k < 2; ++k) {
        const Complex root = k == 0 ? s1 + I * s2 : s1 - I * s2;
        x[k] = -4.0 * r * p0 * p * root * root / (sum * sum) - 1.0;
        if (std::abs(x[k]) <= 1e-14) {
            throw FocalSingularity("two-dyon cross section diverges at a focal momentum");
        }
    }
    const double p2 = std::norm(p);
    out.sigma = std::norm(sum) / (2.0 * p2 * p2) *
                (1.0 + 0.25 * std::abs(2.0 + x[0] / x[1] + x[1] / x[0]));
    return out;
}

PaperSigma cross_section_equal_monopoles_closed(double n, double r, double p0, Complex p) {
    if (p == 0.0) {
        throw ForwardSingularity("cross section diverges at p = 0");
    }
    const Complex denom = 1.0 - p * p * r * r / (n * n);
    if (std::abs(denom) <= 1e-14) {
        throw FocalSingularity("equal-monopole cross section diverges at p = +-n/R");
    }
    PaperSigma out;
    out.provenance = "paper-verbatim equal-monopole form";
    out.focal = {Complex(n / r, 0.0), Complex(-n / r, 0.0)};
    const double p2 = std::norm(p);
    out.sigma = n * n * p0 * p0 / (2.0 * p2 * p2) * (1.0 + std::abs(1.0 / denom));
    return out;
}

PaperSigma cross_section_monopole_antimonopole_closed(double n, double r, double p0, Complex p) {
    if (p == 0.0) {
        throw ForwardSingularity("cross section diverges at p = 0");
    }
    const Complex denom = 1.0 - I * r * p / n;
    if (std::abs(denom) <= 1e-14) {
        throw FocalSingularity("monopole-antimonopole cross section diverges at p = -in/R");
    }
    PaperSigma out;
    out.provenance = "paper-verbatim monopole-antimonopole form";
    out.focal = {Complex(0.0, 0.0), Complex(0.0, -n / r)};
    const double pa = std::abs(p);
    out.sigma = n * r * p0 * p0 / (2.0 * pa * pa * pa) / std::abs(denom);
    return out;
}

}  // namespace eikonal

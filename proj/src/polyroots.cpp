#include "eikonal/polyroots.hpp"

#include <Eigen/Eigenvalues>

#include "eikonal/errors.hpp"

namespace eikonal {

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Polynomial out(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b) {
    Polynomial out(std::max(a.size(), b.size()), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] += b[i];
    }
    return out;
}

Polynomial poly_scale(const Polynomial& a, Complex s) {
    Polynomial out(a);
    for (Complex& c : out) {
        c *= s;
    }
    return out;
}

Complex poly_eval(const Polynomial& a, Complex x) {
    Complex acc = 0.0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial poly_from_roots(const std::vector<Complex>& roots) {
    Polynomial out{1.0};
    for (Complex r : roots) {
        out = poly_multiply(out, {-r, 1.0});
    }
    return out;
}

std::vector<Complex> poly_roots(Polynomial coeffs) {
    while (!coeffs.empty() && coeffs.back() == 0.0) {
        coeffs.pop_back();
    }
    if (coeffs.empty()) {
        throw DegenerateError("poly_roots: zero polynomial");
    }
    const std::size_t degree = coeffs.size() - 1;
    if (degree == 0) {
        return {};
    }
    if (degree == 1) {
        return {-coeffs[0] / coeffs[1]};
    }
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
    for (std::size_t i = 1; i < degree; ++i) {
        companion(i, i - 1) = 1.0;
    }
    for (std::size_t i = 0; i < degree; ++i) {
        companion(i, degree - 1) = -coeffs[i] / coeffs[degree];
    }
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    if (solver.info() != Eigen::Success) {
        throw ConvergenceError("poly_roots: eigenvalue iteration failed");
    }
    std::vector<Complex> roots(degree);
    for (std::size_t i = 0; i < degree; ++i) {
        roots[i] = solver.eigenvalues()[Eigen::Index(i)];
    }
    return roots;
}

}  // namespace eikonal

#pragma once

#include <vector>

#include "eikonal/types.hpp"

namespace eikonal {

/// Coefficients in ascending order: c[0] + c[1] x + ... + c[d] x^d.
using Polynomial = std::vector<Complex>;

Polynomial poly_multiply(const Polynomial& a, const Polynomial& b);
Polynomial poly_add(const Polynomial& a, const Polynomial& b);
Polynomial poly_scale(const Polynomial& a, Complex s);
Complex poly_eval(const Polynomial& a, Complex x);

/// prod_k (x - r_k).
Polynomial poly_from_roots(const std::vector<Complex>& roots);

/// All roots of a polynomial whose leading coefficient is nonzero, via the
/// eigenvalues of the companion matrix. Leading exact zeros are stripped.
std::vector<Complex> poly_roots(Polynomial coeffs);

}  // namespace eikonal

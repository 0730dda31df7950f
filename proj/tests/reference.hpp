#pragma once

#include <vector>

#include "eikonal/types.hpp"

namespace ref {

using eikonal::Complex;

struct RefGamma {
    Complex z;
    Complex log_gamma;
};

struct RefU {
    Complex a, b, z;
    Complex value;
};

struct RefK {
    Complex nu, z;
    Complex value;
};

struct RefCharge {
    double alpha, n;
    Complex b;
    double theta;
};

struct RefAmplitude {
    double p0;
    std::vector<RefCharge> charges;
    Complex p;
    Complex f;
};

#include "reference_values.inc"

}  // namespace ref

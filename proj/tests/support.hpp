#pragma once

#include <cmath>
#include <complex>

#include "eikonal/config.hpp"

namespace support {

inline double rel_err(std::complex<double> got, std::complex<double> want) {
    return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

inline eikonal::ChargeSpec charge(eikonal::Complex pos, double alpha, double n, double theta = 0.0) {
    eikonal::ChargeSpec c;
    c.position = pos;
    c.electric = alpha;
    c.dirac_n = n;
    c.string_angle = theta;
    return c;
}

}  // namespace support

#pragma once

// Independent 2x2 oracle for the numerical radius: a dense angle grid with
// the closed-form top eigenvalue of a 2x2 Hermitian matrix. Deliberately
// avoids the library's eigensolver and rotation-bracket code paths.

#include <cmath>
#include <complex>
#include <cstddef>

#include "numrad/complex_matrix.hpp"

namespace oracle {

// lambda_max of [[a, c], [conj(c), b]] with a, b real: mean + radius.
inline double lambda_max_2x2(double a, double b, std::complex<double> c) {
    const double mean = 0.5 * (a + b);
    const double half_gap = 0.5 * (a - b);
    return mean + std::hypot(half_gap, std::abs(c));
}

// max over a dense theta grid of lambda_max(Re(e^{i theta} A)) for 2x2 A.
inline double radius_grid_2x2(const numrad::ComplexMatrix& a, std::size_t angles = 100000) {
    // Cartesian parts, straight from the defining formulas.
    const std::complex<double> p00 = 0.5 * (a(0, 0) + std::conj(a(0, 0)));
    const std::complex<double> p11 = 0.5 * (a(1, 1) + std::conj(a(1, 1)));
    const std::complex<double> p01 = 0.5 * (a(0, 1) + std::conj(a(1, 0)));
    const std::complex<double> i_unit(0.0, 1.0);
    const std::complex<double> q00 = (a(0, 0) - std::conj(a(0, 0))) / (2.0 * i_unit);
    const std::complex<double> q11 = (a(1, 1) - std::conj(a(1, 1))) / (2.0 * i_unit);
    const std::complex<double> q01 = (a(0, 1) - std::conj(a(1, 0))) / (2.0 * i_unit);

    const double pi = 3.14159265358979323846;
    double best = -1e300;
    for (std::size_t k = 0; k < angles; ++k) {
        const double theta = 2.0 * pi * static_cast<double>(k) / static_cast<double>(angles);
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        const double h00 = c * p00.real() - s * q00.real();
        const double h11 = c * p11.real() - s * q11.real();
        const std::complex<double> h01 = c * p01 - s * q01;
        best = std::max(best, lambda_max_2x2(h00, h11, h01));
    }
    return best;
}

}  // namespace oracle

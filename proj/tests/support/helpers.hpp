#pragma once

#include <complex>

#include "numrad/complex_matrix.hpp"

namespace testsup {

inline double fro_diff(const numrad::ComplexMatrix& a, const numrad::ComplexMatrix& b) {
    return (a - b).frobenius_norm();
}

// Nilpotent Jordan block [[0,1],[0,0]]; omega = 1/2, ||J|| = 1.
inline numrad::ComplexMatrix jordan2() {
    return numrad::ComplexMatrix{{0.0, 1.0}, {0.0, 0.0}};
}

inline numrad::ComplexMatrix diag_1_i() {
    return numrad::ComplexMatrix{{1.0, 0.0}, {0.0, numrad::cplx(0.0, 1.0)}};
}

}  // namespace testsup

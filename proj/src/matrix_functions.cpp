#include "numrad/matrix_functions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace numrad {

double pad_for(const ComplexMatrix& a) {
    const double n = static_cast<double>(std::max(a.rows(), a.cols()));
    return 100.0 * n * std::numeric_limits<double>::epsilon() *
           std::max(1.0, a.frobenius_norm());
}

ComplexMatrix psd_sqrt(const ComplexMatrix& h) {
    HermitianEigen eig = hermitian_eigen(h);
    const std::size_t n = h.rows();
    std::vector<double> roots(n);
    for (std::size_t i = 0; i < n; ++i) {
        roots[i] = eig.eigenvalues[i] > 0.0 ? std::sqrt(eig.eigenvalues[i]) : 0.0;
    }
    // Q diag(sqrt(lambda)) Q*, then exact symmetrization of the rounding skew.
    const ComplexMatrix& q = eig.eigenvectors;
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            cplx sum(0.0, 0.0);
            for (std::size_t k = 0; k < n; ++k) {
                sum += roots[k] * q(i, k) * std::conj(q(j, k));
            }
            if (i == j) {
                out(i, i) = cplx(sum.real(), 0.0);
            } else {
                out(i, j) = sum;
                out(j, i) = std::conj(sum);
            }
        }
    }
    return out;
}

ComplexMatrix abs_value(const ComplexMatrix& a) {
    require_square(a, "abs_value");
    require_finite(a, "abs_value");
    return psd_sqrt(a.adjoint() * a);
}

Interval op_norm(const ComplexMatrix& a) {
    if (a.empty()) throw std::invalid_argument("op_norm: empty matrix");
    require_finite(a, "op_norm");
    const ComplexMatrix gram = a.adjoint() * a;
    const std::vector<double> values = hermitian_eigenvalues(gram);
    const double top = std::max(0.0, values.front());
    const double sigma = std::sqrt(top);
    const double half = 0.5 * pad_for(a);
    return Interval(std::max(0.0, sigma - half), sigma + half);
}

}  // namespace numrad

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "numrad/complex_matrix.hpp"
#include "numrad/interval.hpp"

namespace numrad {

/// Certified enclosure of the numerical radius plus convergence metadata.
struct RadiusBracket {
    Interval enclosure;                 // contains omega(A); lo >= 0
    std::size_t angles_used = 0;        // support-function evaluations
    std::size_t refinement_rounds = 0;  // grid doublings performed
    bool converged = false;             // width <= requested tolerance
};

/// Boundary samples of the numerical range W(A).
struct FovBoundary {
    std::vector<cplx> points;    // z_k = <A x_k, x_k> for the support witness x_k
    std::vector<double> angles;  // matching support angles in [0, 2pi)
};

/// One support-function evaluation f(theta) = lambda_max(Re(e^{i theta} A)).
struct SupportSample {
    Interval value;              // encloses f(theta)
    std::vector<cplx> witness;   // top eigenvector; <A w, w> lies in W(A)
};

/// Per-round bracket snapshot, for refinement-monotonicity checks.
struct RefinementRound {
    std::size_t angles = 0;
    double lo = 0.0;
    double hi = 0.0;
};

SupportSample support_value(const ComplexMatrix& a, double theta);

/// Default radius tolerance 1e-8 * max(1, ||A||_F).
double default_radius_tol(const ComplexMatrix& a);

/// Rotation-method bracket for omega(A).
///
/// With m_n = max_k f(2 pi k / n) over n equispaced angles,
/// omega(A) lies in [m_n - pad, m_n / cos(pi/n) + pad]: every f(theta) is a
/// Rayleigh value (lower bound), and any z in W(A) has an angle within pi/n
/// of a grid angle (upper bound). The grid starts at 64 angles and doubles
/// (nested, so earlier evaluations are reused) until the bracket width is
/// at most `tol` or the grid exceeds 2^20 angles; `converged` reports which.
RadiusBracket numerical_radius(const ComplexMatrix& a, double tol,
                               std::vector<RefinementRound>* trace = nullptr);
RadiusBracket numerical_radius(const ComplexMatrix& a);

FovBoundary fov_boundary(const ComplexMatrix& a, std::size_t samples);

/// Monte-Carlo lower-bound oracle: max over seeded random unit vectors x of
/// |<Ax, x>|. Never exceeds omega(A).
double rayleigh_sample_sup(const ComplexMatrix& a, std::size_t trials, std::uint64_t seed);

/// |<Ax, x>| for an explicit vector (also used by pointwise checkers).
cplx quadratic_form(const ComplexMatrix& a, std::span<const cplx> x);

}  // namespace numrad

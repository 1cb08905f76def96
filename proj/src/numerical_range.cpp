#include "numrad/numerical_range.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "numrad/generators.hpp"
#include "numrad/hermitian_eigen.hpp"
#include "numrad/matrix_functions.hpp"

namespace numrad {

namespace {

constexpr std::size_t kInitialAngles = 64;
constexpr std::size_t kMaxAngles = std::size_t{1} << 20;

// Workspace for repeated evaluations of f(theta) on one matrix.
// Re(e^{i theta} A) = cos(theta) ReA - sin(theta) ImA, so the two Cartesian
// parts are formed once and blended per angle.
struct SupportEvaluator {
    std::size_t n;
    std::vector<cplx> re;    // ReA, row-major
    std::vector<cplx> im;    // ImA, row-major
    std::vector<cplx> work;  // per-evaluation Hermitian buffer
    double fro;

    explicit SupportEvaluator(const ComplexMatrix& a)
        : n(a.rows()), re(n * n), im(n * n), work(n * n), fro(a.frobenius_norm()) {
        const ComplexMatrix p = real_part(a);
        const ComplexMatrix q = imag_part(a);
        std::copy(p.data().begin(), p.data().end(), re.begin());
        std::copy(q.data().begin(), q.data().end(), im.begin());
    }

    double lambda_max(double theta) {
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        for (std::size_t k = 0; k < n * n; ++k) {
            work[k] = c * re[k] - s * im[k];
        }
        return detail::top_eigenvalue_inplace(work.data(), n, fro);
    }
};

}  // namespace

SupportSample support_value(const ComplexMatrix& a, double theta) {
    require_square(a, "support_value");
    require_finite(a, "support_value");
    if (!std::isfinite(theta)) throw std::invalid_argument("support_value: non-finite angle");

    const std::size_t n = a.rows();
    const cplx rot(std::cos(theta), std::sin(theta));
    const ComplexMatrix h = real_part(a * rot);
    const HermitianEigen eig = hermitian_eigen(h);

    SupportSample out;
    const double half = 0.5 * pad_for(a);
    out.value = Interval(eig.eigenvalues.front() - half, eig.eigenvalues.front() + half);
    out.witness.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.witness[i] = eig.eigenvectors(i, 0);
    return out;
}

double default_radius_tol(const ComplexMatrix& a) {
    return 1e-8 * std::max(1.0, a.frobenius_norm());
}

RadiusBracket numerical_radius(const ComplexMatrix& a, double tol,
                               std::vector<RefinementRound>* trace) {
    require_square(a, "numerical_radius");
    require_finite(a, "numerical_radius");
    if (!(tol > 0.0) || !std::isfinite(tol)) {
        throw std::invalid_argument("numerical_radius: tol must be positive");
    }

    if (a.is_zero()) {
        RadiusBracket out;
        out.enclosure = Interval(0.0, 0.0);
        out.converged = true;
        if (trace) trace->push_back({0, 0.0, 0.0});
        return out;
    }

    SupportEvaluator eval(a);
    const double pad = pad_for(a);
    const double two_pi = 2.0 * std::numbers::pi;

    std::size_t grid = kInitialAngles;
    double m = -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < grid; ++k) {
        m = std::max(m, eval.lambda_max(two_pi * static_cast<double>(k) / static_cast<double>(grid)));
    }

    // Running best endpoints: the grid max only grows, and each round's
    // secant bound is a valid upper bound, so max/min keep both monotone.
    double best_lo_raw = m;
    double best_hi_raw = m / std::cos(std::numbers::pi / static_cast<double>(grid));

    RadiusBracket out;
    out.refinement_rounds = 0;

    while (true) {
        const double lo = std::max(0.0, best_lo_raw - pad);
        const double hi = best_hi_raw + pad;
        out.enclosure = Interval(lo, hi);
        out.angles_used = grid;
        if (trace) trace->push_back({grid, lo, hi});

        if (hi - lo <= tol) {
            out.converged = true;
            return out;
        }
        if (2 * grid > kMaxAngles) {
            out.converged = false;
            return out;
        }

        // Nested doubling: the new grid of 2N angles adds the N midpoints.
        const std::size_t next = 2 * grid;
        for (std::size_t k = 0; k < grid; ++k) {
            const double theta = two_pi * (2.0 * static_cast<double>(k) + 1.0) / static_cast<double>(next);
            m = std::max(m, eval.lambda_max(theta));
        }
        grid = next;
        best_lo_raw = std::max(best_lo_raw, m);
        best_hi_raw = std::min(best_hi_raw, m / std::cos(std::numbers::pi / static_cast<double>(grid)));
        ++out.refinement_rounds;
    }
}

RadiusBracket numerical_radius(const ComplexMatrix& a) {
    return numerical_radius(a, default_radius_tol(a));
}

FovBoundary fov_boundary(const ComplexMatrix& a, std::size_t samples) {
    require_square(a, "fov_boundary");
    require_finite(a, "fov_boundary");
    if (samples < 3) throw std::invalid_argument("fov_boundary: samples must be at least 3");

    const double two_pi = 2.0 * std::numbers::pi;
    FovBoundary out;
    out.points.reserve(samples);
    out.angles.reserve(samples);
    for (std::size_t k = 0; k < samples; ++k) {
        const double theta = two_pi * static_cast<double>(k) / static_cast<double>(samples);
        const SupportSample sample = support_value(a, theta);
        out.points.push_back(quadratic_form(a, sample.witness));
        out.angles.push_back(theta);
    }
    return out;
}

double rayleigh_sample_sup(const ComplexMatrix& a, std::size_t trials, std::uint64_t seed) {
    require_square(a, "rayleigh_sample_sup");
    require_finite(a, "rayleigh_sample_sup");
    if (trials == 0) throw std::invalid_argument("rayleigh_sample_sup: trials must be positive");

    double best = 0.0;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::vector<cplx> x = generate_unit_vector(a.rows(), mix_seed(seed, t));
        best = std::max(best, std::abs(quadratic_form(a, x)));
    }
    return best;
}

cplx quadratic_form(const ComplexMatrix& a, std::span<const cplx> x) {
    if (x.size() != a.cols() || !a.is_square()) {
        throw std::invalid_argument("quadratic_form: dimension mismatch");
    }
    const std::size_t n = a.rows();
    cplx sum(0.0, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        cplx row(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) row += a(i, j) * x[j];
        sum += std::conj(x[i]) * row;
    }
    return sum;
}

}  // namespace numrad

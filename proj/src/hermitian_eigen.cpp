#include "numrad/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace numrad {

namespace {

constexpr int kMaxSweeps = 30;
constexpr double kOffTargetFactor = 1e-14;

double off_diagonal_mass(const cplx* a, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* row = a + i * n;
        for (std::size_t j = i + 1; j < n; ++j) sum += std::norm(row[j]);
    }
    return std::sqrt(2.0 * sum);
}

// Symmetrized copy (H + H*)/2, exactly Hermitian entrywise.
std::vector<cplx> symmetrized(const ComplexMatrix& h) {
    const std::size_t n = h.rows();
    std::vector<cplx> a(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i * n + i] = cplx(h(i, i).real(), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            const cplx v = 0.5 * (h(i, j) + std::conj(h(j, i)));
            a[i * n + j] = v;
            a[j * n + i] = std::conj(v);
        }
    }
    return a;
}

void check_eigen_input(const ComplexMatrix& h) {
    require_square(h, "hermitian_eigen");
    require_finite(h, "hermitian_eigen");
    double asym = 0.0;
    const std::size_t n = h.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            asym += std::norm(h(i, j) - std::conj(h(j, i)));
        }
    }
    const double fro = h.frobenius_norm();
    if (std::sqrt(asym) > 1e-12 * std::max(1.0, fro)) {
        throw std::invalid_argument("hermitian_eigen: input is not Hermitian within tolerance");
    }
}

std::vector<std::size_t> descending_order(const std::vector<double>& values) {
    std::vector<std::size_t> idx(values.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    return idx;
}

}  // namespace

namespace detail {

bool jacobi_hermitian(cplx* a, cplx* v, std::size_t n, double off_target, int max_sweeps) {
    if (n < 2) return true;
    // Entries below this cannot push the off-diagonal mass back over target.
    const double skip = off_target / (4.0 * static_cast<double>(n));
    const double target_sq = off_target * off_target;

    // The inner loops run on raw doubles (std::complex array-access
    // guarantee); the expanded form vectorizes where operator* does not.
    double* d = reinterpret_cast<double*>(a);

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double off = off_diagonal_mass(a, n);
        if (off <= off_target) return true;
        // Rotations redistribute no off-diagonal mass; each one removes
        // 2|a_pq|^2 exactly, so the running total allows mid-sweep exit.
        double off_sq = off * off;

        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx w = a[p * n + q];
                const double r = std::abs(w);
                if (r <= skip) continue;

                const double app = a[p * n + p].real();
                const double aqq = a[q * n + q].real();
                const double tau = (app - aqq) / (2.0 * r);
                const double root = std::sqrt(1.0 + tau * tau);
                const double t = tau >= 0.0 ? 1.0 / (tau + root) : 1.0 / (tau - root);
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double pr = s * w.real() / r;  // s e^{i phi}
                const double pi = s * w.imag() / r;

                // Rows p and q:
                //   row_p <- c row_p + s e^{i phi} row_q
                //   row_q <- c row_q - s e^{-i phi} row_p
                double* rp = d + 2 * p * n;
                double* rq = d + 2 * q * n;
                for (std::size_t k = 0; k < 2 * n; k += 2) {
                    const double xr = rp[k], xi = rp[k + 1];
                    const double yr = rq[k], yi = rq[k + 1];
                    rp[k] = c * xr + pr * yr - pi * yi;
                    rp[k + 1] = c * xi + pr * yi + pi * yr;
                    rq[k] = c * yr - (pr * xr + pi * xi);
                    rq[k + 1] = c * yi - (pr * xi - pi * xr);
                }
                // Hermitian mirror instead of a second arithmetic pass:
                // updated columns p, q are the conjugates of the new rows.
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double* row = d + 2 * (k * n);
                    row[2 * p] = rp[2 * k];
                    row[2 * p + 1] = -rp[2 * k + 1];
                    row[2 * q] = rq[2 * k];
                    row[2 * q + 1] = -rq[2 * k + 1];
                }
                // The (p,q) pair is annihilated by construction; pin the block.
                const double new_pp = c * c * app + 2.0 * c * s * r + s * s * aqq;
                const double new_qq = s * s * app - 2.0 * c * s * r + c * c * aqq;
                a[p * n + p] = cplx(new_pp, 0.0);
                a[q * n + q] = cplx(new_qq, 0.0);
                a[p * n + q] = cplx(0.0, 0.0);
                a[q * n + p] = cplx(0.0, 0.0);

                if (v != nullptr) {
                    double* vd = reinterpret_cast<double*>(v);
                    for (std::size_t k = 0; k < n; ++k) {
                        double* row = vd + 2 * (k * n);
                        const double xr = row[2 * p], xi = row[2 * p + 1];
                        const double yr = row[2 * q], yi = row[2 * q + 1];
                        row[2 * p] = c * xr + pr * yr + pi * yi;
                        row[2 * p + 1] = c * xi + pr * yi - pi * yr;
                        row[2 * q] = c * yr - (pr * xr - pi * xi);
                        row[2 * q + 1] = c * yi - (pr * xi + pi * xr);
                    }
                }

                off_sq -= 2.0 * r * r;
                if (off_sq <= target_sq) break;
            }
            if (off_sq <= target_sq) break;
        }
    }
    return off_diagonal_mass(a, n) <= off_target;
}

double top_eigenvalue_inplace(cplx* a, std::size_t n, double fro) {
    if (n == 1) return a[0].real();
    const double target = kOffTargetFactor * fro;
    if (!jacobi_hermitian(a, nullptr, n, target, kMaxSweeps)) {
        throw std::runtime_error("eigensolver failed to converge");
    }
    double best = a[0].real();
    for (std::size_t i = 1; i < n; ++i) best = std::max(best, a[i * n + i].real());
    return best;
}

}  // namespace detail

HermitianEigen hermitian_eigen(const ComplexMatrix& h) {
    check_eigen_input(h);
    const std::size_t n = h.rows();
    std::vector<cplx> a = symmetrized(h);
    std::vector<cplx> v(n * n, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;

    const double fro = h.frobenius_norm();
    if (!detail::jacobi_hermitian(a.data(), v.data(), n, kOffTargetFactor * fro, kMaxSweeps)) {
        throw std::runtime_error("hermitian_eigen: Jacobi sweeps did not converge");
    }

    std::vector<double> raw(n);
    for (std::size_t i = 0; i < n; ++i) raw[i] = a[i * n + i].real();
    const std::vector<std::size_t> order = descending_order(raw);

    HermitianEigen out;
    out.eigenvalues.resize(n);
    out.eigenvectors = ComplexMatrix(n, n);
    for (std::size_t col = 0; col < n; ++col) {
        const std::size_t src = order[col];
        out.eigenvalues[col] = raw[src];
        for (std::size_t row = 0; row < n; ++row) {
            out.eigenvectors(row, col) = v[row * n + src];
        }
    }
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
    check_eigen_input(h);
    const std::size_t n = h.rows();
    std::vector<cplx> a = symmetrized(h);
    const double fro = h.frobenius_norm();
    if (!detail::jacobi_hermitian(a.data(), nullptr, n, kOffTargetFactor * fro, kMaxSweeps)) {
        throw std::runtime_error("hermitian_eigenvalues: Jacobi sweeps did not converge");
    }
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = a[i * n + i].real();
    std::sort(values.begin(), values.end(), std::greater<double>());
    return values;
}

}  // namespace numrad

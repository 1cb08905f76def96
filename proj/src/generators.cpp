#include "numrad/generators.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace numrad {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

ComplexMatrix ginibre(std::size_t n, SplitMix64& rng) {
    ComplexMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            g(i, j) = rng.next_complex_gaussian();
        }
    }
    return g;
}

// Modified Gram-Schmidt with one re-orthogonalization pass. Column norms in
// MGS are real and positive, which is exactly the phase-fixed-diagonal
// convention for a Haar draw.
ComplexMatrix orthonormalized(const ComplexMatrix& g) {
    const std::size_t n = g.rows();
    ComplexMatrix q = g;
    for (std::size_t j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                cplx proj(0.0, 0.0);
                for (std::size_t i = 0; i < n; ++i) proj += std::conj(q(i, k)) * q(i, j);
                for (std::size_t i = 0; i < n; ++i) q(i, j) -= proj * q(i, k);
            }
        }
        double norm_sq = 0.0;
        for (std::size_t i = 0; i < n; ++i) norm_sq += std::norm(q(i, j));
        const double norm = std::sqrt(norm_sq);
        if (norm == 0.0) throw std::runtime_error("orthonormalized: rank-deficient sample");
        for (std::size_t i = 0; i < n; ++i) q(i, j) /= norm;
    }
    return q;
}

ComplexMatrix positive_sample(std::size_t n, std::uint64_t seed, double scale) {
    SplitMix64 rng(seed);
    const ComplexMatrix g = ginibre(n, rng);
    ComplexMatrix m = g.adjoint() * g;
    const double shift = 1e-6;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += shift;
    return m * cplx(scale, 0.0);
}

}  // namespace

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += kGamma);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - next_double();  // (0, 1]
    const double u2 = next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

cplx SplitMix64::next_complex_gaussian() {
    const double re = next_gaussian();
    const double im = next_gaussian();
    return cplx(re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0);
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 g(seed ^ (kGamma * (stream + 0x632BE59BD9B4E019ULL)));
    return g.next();
}

ComplexMatrix generate(const GeneratorSpec& spec) {
    if (spec.n == 0) throw std::invalid_argument("generate: n must be positive");
    if (spec.scale <= 0.0 || !std::isfinite(spec.scale)) {
        throw std::invalid_argument("generate: scale must be positive and finite");
    }
    const std::size_t n = spec.n;

    switch (spec.op_class) {
        case OperatorClass::General: {
            SplitMix64 rng(spec.seed);
            return ginibre(n, rng) * cplx(spec.scale, 0.0);
        }
        case OperatorClass::SelfAdjoint: {
            SplitMix64 rng(spec.seed);
            return real_part(ginibre(n, rng) * cplx(spec.scale, 0.0));
        }
        case OperatorClass::Positive:
            return positive_sample(n, spec.seed, spec.scale);
        case OperatorClass::Normal: {
            const ComplexMatrix u = generate({OperatorClass::Unitary, n, mix_seed(spec.seed, 1), 1.0});
            SplitMix64 rng(mix_seed(spec.seed, 2));
            ComplexMatrix d(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                d(i, i) = rng.next_complex_gaussian() * spec.scale;
            }
            return u * d * u.adjoint();
        }
        case OperatorClass::Unitary: {
            SplitMix64 rng(spec.seed);
            return orthonormalized(ginibre(n, rng));
        }
        case OperatorClass::AccretiveDissipative: {
            const ComplexMatrix p1 = positive_sample(n, mix_seed(spec.seed, 1), spec.scale);
            const ComplexMatrix p2 = positive_sample(n, mix_seed(spec.seed, 2), spec.scale);
            return p1 + p2 * cplx(0.0, 1.0);
        }
    }
    throw std::invalid_argument("generate: invalid class tag");
}

std::vector<cplx> generate_unit_vector(std::size_t n, std::uint64_t seed) {
    if (n == 0) throw std::invalid_argument("generate_unit_vector: n must be positive");
    SplitMix64 rng(seed);
    std::vector<cplx> x(n);
    double norm_sq = 0.0;
    for (cplx& z : x) {
        z = rng.next_complex_gaussian();
        norm_sq += std::norm(z);
    }
    if (norm_sq == 0.0) {
        x[0] = 1.0;  // astronomically unlikely; keep the contract total
        return x;
    }
    const double norm = std::sqrt(norm_sq);
    for (cplx& z : x) z /= norm;
    return x;
}

}  // namespace numrad

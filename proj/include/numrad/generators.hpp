#pragma once

#include <cstdint>
#include <vector>

#include "numrad/classify.hpp"
#include "numrad/complex_matrix.hpp"

namespace numrad {

/// Counter-based 64-bit PRNG (SplitMix64): output k is a fixed avalanche
/// hash of seed + k*gamma, so streams are pure functions of the seed.
/// Bitwise reproducible within this implementation; no global state.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();

    /// Uniform double in [0, 1) with 53 random bits.
    double next_double();

    /// Standard normal via Box-Muller (two uniforms per pair).
    double next_gaussian();

    /// Standard complex Gaussian: E|z|^2 = 1.
    cplx next_complex_gaussian();

private:
    std::uint64_t state_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Deterministic child-stream derivation for concurrent trials.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Recipe for one random operator draw.
struct GeneratorSpec {
    OperatorClass op_class = OperatorClass::General;
    std::size_t n = 1;
    std::uint64_t seed = 0;
    double scale = 1.0;
};

/// Draws a matrix whose classify() set contains spec.op_class:
///   GENERAL   entrywise standard complex Gaussian (Ginibre)
///   SELF_ADJOINT  (G + G*)/2
///   POSITIVE  scale * (G*G + 1e-6 I)
///   NORMAL    U diag(complex Gaussian) U*
///   UNITARY   orthonormalized Ginibre sample, phase-fixed diagonal
///             (scale does not apply; scaling would break unitarity)
///   ACCRETIVE_DISSIPATIVE  P1 + i P2 with independent POSITIVE draws
ComplexMatrix generate(const GeneratorSpec& spec);

/// Random unit vector: complex Gaussian entries normalized to unit norm.
std::vector<cplx> generate_unit_vector(std::size_t n, std::uint64_t seed);

}  // namespace numrad

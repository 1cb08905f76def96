#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "numrad/classify.hpp"
#include "numrad/complex_matrix.hpp"
#include "numrad/interval.hpp"

namespace numrad {

/// Identifiers for the checked inequalities. The set is closed; each id maps
/// to exactly one checker.
enum class InequalityId : std::uint8_t {
    NormRadiusSandwich = 0,  // 0.5||A|| <= omega(A) <= ||A||
    ScalarRotation,          // |a+b| <= sqrt(2)|a+ib| for real a, b
    Kittaneh,                // 0.25||A*A+AA*|| <= omega^2(A) <= 0.5||A*A+AA*||
    MixedSchwarz,            // |<Ax,x>| <= sqrt(<|A|x,x><|A*|x,x>)
    SaJensen,                // <Ax,x>^2 <= <A^2 x,x> for self-adjoint A
    NormRotationPositive,    // ||A+iB|| <= ||A+B|| for positive A, B
    CartesianSandwich,       // 0.5||A^2+B^2|| <= omega^2(A+iB) <= ||A^2+B^2||
    SumRotationV1,           // omega(A+B) <= (1/sqrt 2) omega((|A|+|B|)+i(|A*|+|B*|))
    RadiusKittanehRefine,    // omega^2(A) <= 0.5 omega^2(|A|+i|A*|) <= 0.5||A*A+AA*||
    SumRotationV2,           // omega(A+B) <= (1/sqrt 2) omega((|A|+|A*|)+i(|B|+|B*|))
    NormalSumRotation,       // omega(A+B) <= sqrt(2) omega(|A|+i|B|), A, B normal
    AdNormLower,             // (1/sqrt 2)||ReT+ImT|| <= omega(T), (1/sqrt 2)||T|| <= omega(T)
    Submult,                 // omega(ST) <= c omega(S) omega(T), c by operand classes
    ReverseKittanehRefine,   // 0.25||T*T+TT*|| <= (sqrt2/2) omega(A^2+iB^2) <= omega^2(T)
    TriangleRefine,          // ||A+B|| <= sqrt(omega^2(A+iB)+2||A|| ||B||) <= ||A||+||B||
};

inline constexpr std::array<InequalityId, 15> kAllInequalities = {
    InequalityId::NormRadiusSandwich, InequalityId::ScalarRotation,
    InequalityId::Kittaneh,           InequalityId::MixedSchwarz,
    InequalityId::SaJensen,           InequalityId::NormRotationPositive,
    InequalityId::CartesianSandwich,  InequalityId::SumRotationV1,
    InequalityId::RadiusKittanehRefine, InequalityId::SumRotationV2,
    InequalityId::NormalSumRotation,  InequalityId::AdNormLower,
    InequalityId::Submult,            InequalityId::ReverseKittanehRefine,
    InequalityId::TriangleRefine,
};

std::string inequality_name(InequalityId id);
InequalityId inequality_from_name(const std::string& name);  // throws on unknown id

enum class Verdict : std::uint8_t { Confirmed, Violated, Inconclusive };

std::string verdict_name(Verdict v);

/// One checker evaluation. Both sides are certified intervals; the verdict
/// is three-state because omega is only known as a bracket:
///   CONFIRMED     lhs.hi <= rhs.lo + tolerance
///   VIOLATED      lhs.lo >  rhs.hi + tolerance
///   INCONCLUSIVE  otherwise (brackets overlap beyond tolerance)
struct InequalityReport {
    InequalityId id{};
    std::string chain;  // "", ".left", ".right", ".sum", ".norm", ...
    std::vector<OperatorClass> operand_classes;
    std::size_t n = 0;
    std::optional<std::uint64_t> seed;
    Interval lhs;
    Interval rhs;
    double slack = 0.0;  // rhs.lo - lhs.hi
    Verdict verdict = Verdict::Inconclusive;
    double tolerance = 0.0;
    std::string detail;  // e.g. which submult constant applied and why
};

/// Shared evaluation knobs threaded through the checkers.
struct CheckOptions {
    /// omega-bracket tolerance is omega_tol_factor * max(1, ||M||_F) for each
    /// radius computed. Campaign runs pass a loose factor and refine on
    /// INCONCLUSIVE; equality-case tests pass a tight one.
    double omega_tol_factor = 1e-6;
    /// Verdict tolerance is verdict_tol_factor * max(1, scale) with
    /// scale = max(|lhs.hi|, |rhs.hi|).
    double verdict_tol_factor = 1e-8;
    std::optional<std::uint64_t> seed;  // recorded in reports (campaign trials)
    std::vector<OperatorClass> declared_classes;  // recorded; defaults per checker
};

/// Builds a report for the claim "lhs <= rhs" and assigns the verdict.
InequalityReport make_report(InequalityId id, std::string chain, Interval lhs, Interval rhs,
                             std::size_t n, const CheckOptions& opts);

std::vector<InequalityReport> check_norm_radius_sandwich(const ComplexMatrix& a,
                                                         const CheckOptions& opts = {});
InequalityReport check_scalar_rotation(double a, double b, const CheckOptions& opts = {});
std::vector<InequalityReport> check_kittaneh(const ComplexMatrix& a, const CheckOptions& opts = {});
InequalityReport check_mixed_schwarz(const ComplexMatrix& a, std::span<const cplx> x,
                                     const CheckOptions& opts = {});
InequalityReport check_sa_jensen(const ComplexMatrix& a, std::span<const cplx> x,
                                 const CheckOptions& opts = {});
InequalityReport check_norm_rotation_positive(const ComplexMatrix& a, const ComplexMatrix& b,
                                              const CheckOptions& opts = {});
std::vector<InequalityReport> check_cartesian_sandwich(const ComplexMatrix& a,
                                                       const ComplexMatrix& b,
                                                       const CheckOptions& opts = {});
InequalityReport check_sum_rotation_v1(const ComplexMatrix& a, const ComplexMatrix& b,
                                       const CheckOptions& opts = {});
std::vector<InequalityReport> check_radius_kittaneh_refine(const ComplexMatrix& a,
                                                           const CheckOptions& opts = {});
InequalityReport check_sum_rotation_v2(const ComplexMatrix& a, const ComplexMatrix& b,
                                       const CheckOptions& opts = {});

/// Main report for normal operands; when both operands are also
/// self-adjoint, the specialization chain
/// ||A+B|| <= sqrt(2) omega(A+iB) <= sqrt(2)||A+iB|| is appended
/// (".remark.left" / ".remark.right").
std::vector<InequalityReport> check_normal_sum_rotation(const ComplexMatrix& a,
                                                        const ComplexMatrix& b,
                                                        const CheckOptions& opts = {});

/// Two lower bounds on omega(T) for accretive-dissipative T:
/// ".sum"  (1/sqrt 2)||ReT + ImT|| <= omega(T)
/// ".norm" (1/sqrt 2)||T||         <= omega(T)
std::vector<InequalityReport> check_ad_norm_lower(const ComplexMatrix& t,
                                                  const CheckOptions& opts = {});

/// omega(ST) <= c omega(S) omega(T) with the smallest constant the declared
/// operand classes admit: both normal 1, both AD 2, one normal 2,
/// one AD 2*sqrt(2), otherwise 4. Declared classes are verified.
InequalityReport check_submult(const ComplexMatrix& s, const ComplexMatrix& t,
                               OperatorClass s_class, OperatorClass t_class,
                               const CheckOptions& opts = {});

std::vector<InequalityReport> check_reverse_kittaneh_refine(const ComplexMatrix& t,
                                                            const CheckOptions& opts = {});
std::vector<InequalityReport> check_triangle_refine(const ComplexMatrix& a,
                                                    const ComplexMatrix& b,
                                                    const CheckOptions& opts = {});

}  // namespace numrad

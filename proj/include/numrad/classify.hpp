#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "numrad/complex_matrix.hpp"

namespace numrad {

/// Operator class tags. GENERAL applies to every square matrix; the rest
/// are predicate memberships decided at a tolerance.
enum class OperatorClass : std::uint8_t {
    General = 0,
    SelfAdjoint,
    Positive,
    Normal,
    AccretiveDissipative,
    Unitary,
};

inline constexpr std::array<OperatorClass, 6> kAllOperatorClasses = {
    OperatorClass::General,       OperatorClass::SelfAdjoint,
    OperatorClass::Positive,      OperatorClass::Normal,
    OperatorClass::AccretiveDissipative, OperatorClass::Unitary,
};

std::string class_name(OperatorClass c);
OperatorClass class_from_name(const std::string& name);  // throws on unknown tag

/// Small set of class tags, iterated in canonical enum order.
class ClassSet {
public:
    void insert(OperatorClass c) { bits_ |= bit(c); }
    bool contains(OperatorClass c) const { return (bits_ & bit(c)) != 0; }
    std::size_t size() const;
    std::vector<OperatorClass> to_vector() const;
    bool operator==(const ClassSet&) const = default;

private:
    static std::uint8_t bit(OperatorClass c) {
        return static_cast<std::uint8_t>(1u << static_cast<std::uint8_t>(c));
    }
    std::uint8_t bits_ = 0;
};

/// Default classification tolerance 1e-8 * max(1, ||A||_F).
double default_class_tol(const ComplexMatrix& a);

/// All class tags whose defining predicate holds within `tol`:
///   SELF_ADJOINT          ||A - A*||_F <= tol
///   POSITIVE              self-adjoint and lambda_min >= -tol
///   NORMAL                ||AA* - A*A||_F <= tol
///   ACCRETIVE_DISSIPATIVE lambda_min(Re A) >= -tol and lambda_min(Im A) >= -tol
///   UNITARY               ||A*A - I||_F <= tol
/// GENERAL is always included. Predicates use >= -tol thresholds since
/// strict positivity is not decidable in floating point.
ClassSet classify(const ComplexMatrix& a, double tol);
ClassSet classify(const ComplexMatrix& a);

}  // namespace numrad

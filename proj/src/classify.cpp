#include "numrad/classify.hpp"

#include <cmath>
#include <stdexcept>

#include "numrad/hermitian_eigen.hpp"

namespace numrad {

namespace {

double fro_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    double sum = 0.0;
    for (std::size_t k = 0; k < a.data().size(); ++k) {
        sum += std::norm(a.data()[k] - b.data()[k]);
    }
    return std::sqrt(sum);
}

double min_eigenvalue(const ComplexMatrix& h) {
    return hermitian_eigenvalues(h).back();
}

}  // namespace

std::string class_name(OperatorClass c) {
    switch (c) {
        case OperatorClass::General: return "GENERAL";
        case OperatorClass::SelfAdjoint: return "SELF_ADJOINT";
        case OperatorClass::Positive: return "POSITIVE";
        case OperatorClass::Normal: return "NORMAL";
        case OperatorClass::AccretiveDissipative: return "ACCRETIVE_DISSIPATIVE";
        case OperatorClass::Unitary: return "UNITARY";
    }
    throw std::invalid_argument("class_name: invalid tag");
}

OperatorClass class_from_name(const std::string& name) {
    for (OperatorClass c : kAllOperatorClasses) {
        if (class_name(c) == name) return c;
    }
    throw std::invalid_argument("unknown operator class: " + name);
}

std::size_t ClassSet::size() const {
    std::size_t count = 0;
    for (OperatorClass c : kAllOperatorClasses) {
        if (contains(c)) ++count;
    }
    return count;
}

std::vector<OperatorClass> ClassSet::to_vector() const {
    std::vector<OperatorClass> out;
    for (OperatorClass c : kAllOperatorClasses) {
        if (contains(c)) out.push_back(c);
    }
    return out;
}

double default_class_tol(const ComplexMatrix& a) {
    return 1e-8 * std::max(1.0, a.frobenius_norm());
}

ClassSet classify(const ComplexMatrix& a, double tol) {
    require_square(a, "classify");
    require_finite(a, "classify");
    const std::size_t n = a.rows();

    ClassSet out;
    out.insert(OperatorClass::General);

    const ComplexMatrix adj = a.adjoint();
    const bool self_adjoint = fro_diff(a, adj) <= tol;
    if (self_adjoint) out.insert(OperatorClass::SelfAdjoint);

    if (fro_diff(a * adj, adj * a) <= tol) out.insert(OperatorClass::Normal);
    if (fro_diff(adj * a, ComplexMatrix::identity(n)) <= tol) out.insert(OperatorClass::Unitary);

    // One eigensolve each for the Cartesian parts covers both the POSITIVE
    // and the ACCRETIVE_DISSIPATIVE predicates.
    const double re_min = min_eigenvalue(real_part(a));
    const double im_min = min_eigenvalue(imag_part(a));
    if (self_adjoint && re_min >= -tol) out.insert(OperatorClass::Positive);
    if (re_min >= -tol && im_min >= -tol) out.insert(OperatorClass::AccretiveDissipative);

    return out;
}

ClassSet classify(const ComplexMatrix& a) { return classify(a, default_class_tol(a)); }

}  // namespace numrad

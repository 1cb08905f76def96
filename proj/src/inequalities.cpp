#include "numrad/inequalities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "numrad/matrix_functions.hpp"
#include "numrad/numerical_range.hpp"

namespace numrad {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

const std::array<std::string, 15> kIdNames = {
    "NORM_RADIUS_SANDWICH", "SCALAR_ROTATION", "KITTANEH", "MIXED_SCHWARZ", "SA_JENSEN",
    "NORM_ROTATION_POSITIVE", "CARTESIAN_SANDWICH", "SUM_ROTATION_V1", "RADIUS_KITTANEH_REFINE",
    "SUM_ROTATION_V2", "NORMAL_SUM_ROTATION", "AD_NORM_LOWER", "SUBMULT",
    "REVERSE_KITTANEH_REFINE", "TRIANGLE_REFINE"};

Interval radius_interval(const ComplexMatrix& m, const CheckOptions& opts) {
    const double tol = opts.omega_tol_factor * std::max(1.0, m.frobenius_norm());
    return numerical_radius(m, tol).enclosure;
}

void require_class(const ComplexMatrix& m, OperatorClass cls, const char* checker) {
    if (!classify(m).contains(cls)) {
        throw std::invalid_argument(std::string(checker) + ": operand is not " + class_name(cls));
    }
}

void require_same_square(const ComplexMatrix& a, const ComplexMatrix& b, const char* checker) {
    require_square(a, checker);
    require_square(b, checker);
    if (a.rows() != b.rows()) {
        throw std::invalid_argument(std::string(checker) + ": dimension mismatch");
    }
}

void require_unit(std::span<const cplx> x, const char* checker) {
    double norm_sq = 0.0;
    for (const cplx& z : x) norm_sq += std::norm(z);
    if (std::abs(std::sqrt(norm_sq) - 1.0) > 1e-12) {
        throw std::invalid_argument(std::string(checker) + ": x is not a unit vector");
    }
}

std::vector<OperatorClass> classes_or(const CheckOptions& opts,
                                      std::initializer_list<OperatorClass> fallback) {
    if (!opts.declared_classes.empty()) return opts.declared_classes;
    return fallback;
}

// Real inner product <Hx, x> for Hermitian H (imaginary part is roundoff).
double hermitian_form(const ComplexMatrix& h, std::span<const cplx> x) {
    return quadratic_form(h, x).real();
}

// ||T*T + TT* - 2((ReT)^2 + (ImT)^2)||_F, the Cartesian identity residual.
double kittaneh_identity_residual(const ComplexMatrix& sum_sq, const ComplexMatrix& cart_sq) {
    return (sum_sq - cart_sq * cplx(2.0, 0.0)).frobenius_norm();
}

}  // namespace

std::string inequality_name(InequalityId id) {
    return kIdNames.at(static_cast<std::size_t>(id));
}

InequalityId inequality_from_name(const std::string& name) {
    for (std::size_t k = 0; k < kIdNames.size(); ++k) {
        if (kIdNames[k] == name) return static_cast<InequalityId>(k);
    }
    throw std::invalid_argument("unknown inequality id: " + name);
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Confirmed: return "CONFIRMED";
        case Verdict::Violated: return "VIOLATED";
        case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    throw std::invalid_argument("verdict_name: invalid verdict");
}

InequalityReport make_report(InequalityId id, std::string chain, Interval lhs, Interval rhs,
                             std::size_t n, const CheckOptions& opts) {
    InequalityReport rep;
    rep.id = id;
    rep.chain = std::move(chain);
    rep.operand_classes = opts.declared_classes;
    rep.n = n;
    rep.seed = opts.seed;
    rep.lhs = lhs;
    rep.rhs = rhs;
    const double scale = std::max(std::abs(lhs.hi()), std::abs(rhs.hi()));
    rep.tolerance = opts.verdict_tol_factor * std::max(1.0, scale);
    rep.slack = rhs.lo() - lhs.hi();
    if (lhs.hi() <= rhs.lo() + rep.tolerance) {
        rep.verdict = Verdict::Confirmed;
    } else if (lhs.lo() > rhs.hi() + rep.tolerance) {
        rep.verdict = Verdict::Violated;
    } else {
        rep.verdict = Verdict::Inconclusive;
    }
    return rep;
}

std::vector<InequalityReport> check_norm_radius_sandwich(const ComplexMatrix& a,
                                                         const CheckOptions& opts) {
    require_square(a, "check_norm_radius_sandwich");
    CheckOptions o = opts;
    o.declared_classes = classes_or(opts, {OperatorClass::General});

    const Interval norm = op_norm(a);
    const Interval omega = radius_interval(a, o);
    std::vector<InequalityReport> out;
    out.push_back(make_report(InequalityId::NormRadiusSandwich, ".left", norm.scaled(0.5), omega,
                              a.rows(), o));
    out.push_back(make_report(InequalityId::NormRadiusSandwich, ".right", omega, norm, a.rows(), o));
    return out;
}

InequalityReport check_scalar_rotation(double a, double b, const CheckOptions& opts) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("check_scalar_rotation: non-finite input");
    }
    CheckOptions o = opts;
    o.declared_classes = opts.declared_classes;  // scalars carry no operator class
    const Interval lhs = Interval::point(std::abs(a + b));
    const Interval rhs = Interval::point(std::hypot(a, b)).scaled(std::numbers::sqrt2);
    return make_report(InequalityId::ScalarRotation, "", lhs, rhs, 1, o);
}

std::vector<InequalityReport> check_kittaneh(const ComplexMatrix& a, const CheckOptions& opts) {
    require_square(a, "check_kittaneh");
    CheckOptions o = opts;
    o.declared_classes = classes_or(opts, {OperatorClass::General});

    // |A|^2 = A*A and |A*|^2 = AA*; no square roots needed.
    const ComplexMatrix adj = a.adjoint();
    const Interval sum_norm = op_norm(adj * a + a * adj);
    const Interval omega_sq = radius_interval(a, o).square_nonneg();

    std::vector<InequalityReport> out;
    out.push_back(make_report(InequalityId::Kittaneh, ".left", sum_norm.scaled(0.25), omega_sq,
                              a.rows(), o));
    out.push_back(make_report(InequalityId::Kittaneh, ".right", omega_sq, sum_norm.scaled(0.5),
                              a.rows(), o));
    return out;
}

InequalityReport check_mixed_schwarz(const ComplexMatrix& a, std::span<const cplx> x,
                                     const CheckOptions& opts) {
    require_square(a, "check_mixed_schwarz");
    require_unit(x, "check_mixed_schwarz");
    CheckOptions o = opts;
    o.declared_classes = classes_or(opts, {OperatorClass::General});

    const double lhs = std::abs(quadratic_form(a, x));
    // <|A|x,x> and <|A*|x,x> are Rayleigh values of PSD matrices; clamp the
    // roundoff negativity before the product.
    const double fa = std::max(0.0, hermitian_form(abs_value(a), x));
    const double fas = std::max(0.0, hermitian_form(abs_value(a.adjoint()), x));
    const double rhs = std::sqrt(fa * fas);
    return make_report(InequalityId::MixedSchwarz, "", Interval::point(lhs), Interval::point(rhs),
                       a.rows(), o);
}

InequalityReport check_sa_jensen(const ComplexMatrix& a, std::span<const cplx> x,
                                 const CheckOptions& opts) {
    require_square(a, "check_sa_jensen");
    require_class(a, OperatorClass::SelfAdjoint, "check_sa_jensen");
    require_unit(x, "check_sa_jensen");
    CheckOptions o = opts;
    o.declared_classes = classes_or(opts, {OperatorClass::SelfAdjoint});

    const double form = quadratic_form(a, x).real();
    // <A^2 x, x> = ||Ax||^2 for self-adjoint A.
    const std::size_t n = a.rows();
    double ax_sq = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        cplx row(0.0, 0.0);
        for (std::size_t j = 0; j < n; ++j) row += a(i, j) * x[j];
        ax_sq += std::norm(row);
    }
    return make_report(InequalityId::SaJensen, "", Interval::point(form * form),
                       Interval::point(ax_sq), n, o);
}

InequalityReport check_norm_rotation_positive(const ComplexMatrix& a, const ComplexMatrix& b,
                                              const CheckOptions& opts) {
    require_same_square(a, b, "check_norm_rotation_positive");
    require_class(a, OperatorClass::Positive, "check_norm_rotation_positive");
    require_class(b, OperatorClass::Positive, "check_norm_rotation_positive");
    CheckOptions o = opts;
    o.declared_classes = classes_or(opts, {OperatorClass::Positive, OperatorClass::Positive});

    const Interval lhs = op_norm(a + b * cplx(0.0, 1.0));
    const Interval rhs = op_norm(a + b);
    return make_report(InequalityId::NormRotationPositive, "", lhs, rhs, a.rows(), o);
}

std::vector<InequalityReport> check_cartesian_sandwich(const ComplexMatrix& a,
                                                       const ComplexMatrix& b,
                                                       const CheckOptions& opts) {
    require_same_square(a, b, "check_cartesian_sandwich");
    require_class(a, OperatorClass::SelfAdjoint, "check_cartesian_sandwich");
    require_class(b, OperatorClass::SelfAdjoint, "check_cartesian_sandwich");
    CheckOptions o = opts;
    o.declared_classes = classes_or(opts, {OperatorClass::SelfAdjoint, OperatorClass::SelfAdjoint});

    const Interval sq_norm = op_norm(a * a + b * b);
    const Interval omega_sq = radius_interval(a + b * cplx(0.0, 1.0), o).square_nonneg();

    std::vector<InequalityReport> out;
    out.push_back(make_report(InequalityId::CartesianSandwich, ".left", sq_norm.scaled(0.5),
                              omega_sq, a.rows(), o));
    out.push_back(make_report(InequalityId::CartesianSandwich, ".right", omega_sq, sq_norm,
                              a.rows(), o));
    return out;
}

InequalityReport check_sum_rotation_v1(const ComplexMatrix& a, const ComplexMatrix& b,
                                       const CheckOptions& opts) {
    require_same_square(a, b, "check_sum_rotation_v1");
    CheckOptions o = opts;
    o.declared_classes = classes_or(opts, {OperatorClass::General, OperatorClass::General});

    const Interval lhs = radius_interval(a + b, o);
    const ComplexMatrix re = abs_value(a) + abs_value(b);
    const ComplexMatrix im = abs_value(a.adjoint()) + abs_value(b.adjoint());
    const Interval rhs = radius_interval(re + im * cplx(0.0, 1.0), o).scaled(kInvSqrt2);
    return make_report(InequalityId::SumRotationV1, "", lhs, rhs, a.rows(), o);
}

std::vector<InequalityReport> check_radius_kittaneh_refine(const ComplexMatrix& a,
                                                           const CheckOptions& opts) {
    require_square(a, "check_radius_kittaneh_refine");
    CheckOptions o = opts;
    o.declared_classes = classes_or(opts, {OperatorClass::General});

    const ComplexMatrix adj = a.adjoint();
    const ComplexMatrix abs_a = abs_value(a);
    const ComplexMatrix abs_adj = abs_value(adj);

    const Interval omega_sq = radius_interval(a, o).square_nonneg();
    const Interval mid =
        radius_interval(abs_a + abs_adj * cplx(0.0, 1.0), o).square_nonneg().scaled(0.5);
    const Interval right = op_norm(adj * a + a * adj).scaled(0.5);

    std::vector<InequalityReport> out;
    out.push_back(make_report(InequalityId::RadiusKittanehRefine, ".left", omega_sq, mid,
                              a.rows(), o));
    out.push_back(make_report(InequalityId::RadiusKittanehRefine, ".right", mid, right,
                              a.rows(), o));
    return out;
}

InequalityReport check_sum_rotation_v2(const ComplexMatrix& a, const ComplexMatrix& b,
                                       const CheckOptions& opts) {
    require_same_square(a, b, "check_sum_rotation_v2");
    CheckOptions o = opts;
    o.declared_classes = classes_or(opts, {OperatorClass::General, OperatorClass::General});

    const Interval lhs = radius_interval(a + b, o);
    const ComplexMatrix re = abs_value(a) + abs_value(a.adjoint());
    const ComplexMatrix im = abs_value(b) + abs_value(b.adjoint());
    const Interval rhs = radius_interval(re + im * cplx(0.0, 1.0), o).scaled(kInvSqrt2);
    return make_report(InequalityId::SumRotationV2, "", lhs, rhs, a.rows(), o);
}

std::vector<InequalityReport> check_normal_sum_rotation(const ComplexMatrix& a,
                                                        const ComplexMatrix& b,
                                                        const CheckOptions& opts) {
    require_same_square(a, b, "check_normal_sum_rotation");
    require_class(a, OperatorClass::Normal, "check_normal_sum_rotation");
    require_class(b, OperatorClass::Normal, "check_normal_sum_rotation");
    CheckOptions o = opts;
    o.declared_classes = classes_or(opts, {OperatorClass::Normal, OperatorClass::Normal});

    const Interval lhs = radius_interval(a + b, o);
    const Interval rhs =
        radius_interval(abs_value(a) + abs_value(b) * cplx(0.0, 1.0), o).scaled(std::numbers::sqrt2);

    std::vector<InequalityReport> out;
    out.push_back(make_report(InequalityId::NormalSumRotation, "", lhs, rhs, a.rows(), o));

    // Specialization for self-adjoint pairs:
    // ||A+B|| <= sqrt(2) omega(A+iB) <= sqrt(2) ||A+iB||.
    const ClassSet ca = classify(a);
    const ClassSet cb = classify(b);
    if (ca.contains(OperatorClass::SelfAdjoint) && cb.contains(OperatorClass::SelfAdjoint)) {
        const ComplexMatrix rotated = a + b * cplx(0.0, 1.0);
        const Interval mid = radius_interval(rotated, o).scaled(std::numbers::sqrt2);
        out.push_back(make_report(InequalityId::NormalSumRotation, ".remark.left", op_norm(a + b),
                                  mid, a.rows(), o));
        out.push_back(make_report(InequalityId::NormalSumRotation, ".remark.right", mid,
                                  op_norm(rotated).scaled(std::numbers::sqrt2), a.rows(), o));
    }
    return out;
}

std::vector<InequalityReport> check_ad_norm_lower(const ComplexMatrix& t,
                                                  const CheckOptions& opts) {
    require_square(t, "check_ad_norm_lower");
    require_class(t, OperatorClass::AccretiveDissipative, "check_ad_norm_lower");
    CheckOptions o = opts;
    o.declared_classes = classes_or(opts, {OperatorClass::AccretiveDissipative});

    const Interval omega = radius_interval(t, o);
    const Interval sum_norm = op_norm(real_part(t) + imag_part(t));

    std::vector<InequalityReport> out;
    out.push_back(make_report(InequalityId::AdNormLower, ".sum", sum_norm.scaled(kInvSqrt2), omega,
                              t.rows(), o));
    out.push_back(make_report(InequalityId::AdNormLower, ".norm", op_norm(t).scaled(kInvSqrt2),
                              omega, t.rows(), o));
    return out;
}

InequalityReport check_submult(const ComplexMatrix& s, const ComplexMatrix& t,
                               OperatorClass s_class, OperatorClass t_class,
                               const CheckOptions& opts) {
    require_same_square(s, t, "check_submult");
    if (s_class != OperatorClass::General) require_class(s, s_class, "check_submult");
    if (t_class != OperatorClass::General) require_class(t, t_class, "check_submult");
    CheckOptions o = opts;
    o.declared_classes = classes_or(opts, {s_class, t_class});

    const bool s_normal = s_class == OperatorClass::Normal;
    const bool t_normal = t_class == OperatorClass::Normal;
    const bool s_ad = s_class == OperatorClass::AccretiveDissipative;
    const bool t_ad = t_class == OperatorClass::AccretiveDissipative;

    // Smallest constant admitted by the declared classes.
    double c = 4.0;
    std::string why = "general operands";
    if (s_ad || t_ad) {
        c = 2.0 * std::numbers::sqrt2;
        why = "one accretive-dissipative operand";
    }
    if (s_normal || t_normal) {
        c = 2.0;
        why = "one normal operand";
    }
    if (s_ad && t_ad) {
        c = 2.0;
        why = "both operands accretive-dissipative";
    }
    if (s_normal && t_normal) {
        c = 1.0;
        why = "both operands normal";
    }

    const Interval lhs = radius_interval(s * t, o);
    const Interval rhs = radius_interval(s, o).mul_nonneg(radius_interval(t, o)).scaled(c);
    InequalityReport rep = make_report(InequalityId::Submult, "", lhs, rhs, s.rows(), o);
    rep.detail = "c=" + std::to_string(c) + " (" + why + ")";
    return rep;
}

std::vector<InequalityReport> check_reverse_kittaneh_refine(const ComplexMatrix& t,
                                                            const CheckOptions& opts) {
    require_square(t, "check_reverse_kittaneh_refine");
    CheckOptions o = opts;
    o.declared_classes = classes_or(opts, {OperatorClass::General});

    const ComplexMatrix a = real_part(t);
    const ComplexMatrix b = imag_part(t);
    const ComplexMatrix a_sq = a * a;
    const ComplexMatrix b_sq = b * b;
    const ComplexMatrix adj = t.adjoint();
    const ComplexMatrix sum_sq = adj * t + t * adj;

    // T*T + TT* = 2((ReT)^2 + (ImT)^2) must hold before the chain means anything.
    const double residual = kittaneh_identity_residual(sum_sq, a_sq + b_sq);
    const double fro = t.frobenius_norm();
    if (residual > 1e-10 * std::max(1.0, fro * fro)) {
        throw std::runtime_error("check_reverse_kittaneh_refine: Cartesian identity failed");
    }

    const Interval left = op_norm(sum_sq).scaled(0.25);
    const Interval mid =
        radius_interval(a_sq + b_sq * cplx(0.0, 1.0), o).scaled(std::numbers::sqrt2 / 2.0);
    const Interval right = radius_interval(t, o).square_nonneg();

    std::vector<InequalityReport> out;
    out.push_back(make_report(InequalityId::ReverseKittanehRefine, ".left", left, mid, t.rows(), o));
    out.push_back(make_report(InequalityId::ReverseKittanehRefine, ".right", mid, right,
                              t.rows(), o));
    return out;
}

std::vector<InequalityReport> check_triangle_refine(const ComplexMatrix& a, const ComplexMatrix& b,
                                                    const CheckOptions& opts) {
    require_same_square(a, b, "check_triangle_refine");
    require_class(a, OperatorClass::SelfAdjoint, "check_triangle_refine");
    require_class(b, OperatorClass::SelfAdjoint, "check_triangle_refine");
    CheckOptions o = opts;
    o.declared_classes = classes_or(opts, {OperatorClass::SelfAdjoint, OperatorClass::SelfAdjoint});

    const Interval norm_a = op_norm(a);
    const Interval norm_b = op_norm(b);
    const Interval omega_sq = radius_interval(a + b * cplx(0.0, 1.0), o).square_nonneg();
    const Interval mid = omega_sq.add(norm_a.mul_nonneg(norm_b).scaled(2.0)).sqrt_nonneg();

    std::vector<InequalityReport> out;
    out.push_back(make_report(InequalityId::TriangleRefine, ".left", op_norm(a + b), mid,
                              a.rows(), o));
    out.push_back(make_report(InequalityId::TriangleRefine, ".right", mid, norm_a.add(norm_b),
                              a.rows(), o));
    return out;
}

}  // namespace numrad

#include "numrad/campaign.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "numrad/generators.hpp"
#include "numrad/version.hpp"

namespace numrad {

namespace {

using nlohmann::json;

constexpr std::size_t kPointwiseVectorsPerTrial = 16;

ComplexMatrix draw(OperatorClass cls, std::size_t n, std::uint64_t seed) {
    return generate({cls, n, seed, 1.0});
}

OperatorClass single_class(const std::vector<OperatorClass>& override_classes,
                           OperatorClass fallback, std::size_t slot) {
    if (override_classes.size() > slot) return override_classes[slot];
    return fallback;
}

// SUBMULT rotates through the class pairs that select each constant.
std::pair<OperatorClass, OperatorClass> submult_combo(std::size_t trial) {
    using OC = OperatorClass;
    switch (trial % 5) {
        case 0: return {OC::AccretiveDissipative, OC::AccretiveDissipative};
        case 1: return {OC::AccretiveDissipative, OC::General};
        case 2: return {OC::Normal, OC::Normal};
        case 3: return {OC::Normal, OC::General};
        default: return {OC::General, OC::General};
    }
}

std::vector<InequalityReport> run_trial(InequalityId id, std::size_t n, std::size_t trial,
                                        std::uint64_t trial_seed, double omega_tol_factor,
                                        const CampaignConfig& config) {
    CheckOptions opts;
    opts.omega_tol_factor = omega_tol_factor;
    opts.verdict_tol_factor = config.verdict_tol_factor;
    opts.seed = trial_seed;

    const auto it = config.class_overrides.find(id);
    const std::vector<OperatorClass> over =
        it == config.class_overrides.end() ? std::vector<OperatorClass>{} : it->second;

    const std::uint64_t s0 = mix_seed(trial_seed, 0);
    const std::uint64_t s1 = mix_seed(trial_seed, 1);

    // Reports carry the classes actually drawn for the trial.
    const auto declare1 = [&opts](OperatorClass c) { opts.declared_classes = {c}; };
    const auto declare2 = [&opts](OperatorClass c1, OperatorClass c2) {
        opts.declared_classes = {c1, c2};
    };

    using OC = OperatorClass;
    switch (id) {
        case InequalityId::NormRadiusSandwich: {
            const OC cls = single_class(over, OC::General, 0);
            declare1(cls);
            return check_norm_radius_sandwich(draw(cls, n, s0), opts);
        }
        case InequalityId::ScalarRotation: {
            SplitMix64 rng(s0);
            return {check_scalar_rotation(rng.next_gaussian(), rng.next_gaussian(), opts)};
        }
        case InequalityId::Kittaneh: {
            const OC cls = single_class(over, OC::General, 0);
            declare1(cls);
            return check_kittaneh(draw(cls, n, s0), opts);
        }
        case InequalityId::MixedSchwarz: {
            const OC cls = single_class(over, OC::General, 0);
            declare1(cls);
            const ComplexMatrix a = draw(cls, n, s0);
            std::vector<InequalityReport> out;
            for (std::size_t k = 0; k < kPointwiseVectorsPerTrial; ++k) {
                const auto x = generate_unit_vector(n, mix_seed(trial_seed, 100 + k));
                InequalityReport rep = check_mixed_schwarz(a, x, opts);
                rep.detail = "x=" + std::to_string(k);
                out.push_back(std::move(rep));
            }
            return out;
        }
        case InequalityId::SaJensen: {
            const OC cls = single_class(over, OC::SelfAdjoint, 0);
            declare1(cls);
            const ComplexMatrix a = draw(cls, n, s0);
            std::vector<InequalityReport> out;
            for (std::size_t k = 0; k < kPointwiseVectorsPerTrial; ++k) {
                const auto x = generate_unit_vector(n, mix_seed(trial_seed, 100 + k));
                InequalityReport rep = check_sa_jensen(a, x, opts);
                rep.detail = "x=" + std::to_string(k);
                out.push_back(std::move(rep));
            }
            return out;
        }
        case InequalityId::NormRotationPositive: {
            const OC c0 = single_class(over, OC::Positive, 0);
            const OC c1 = single_class(over, OC::Positive, 1);
            declare2(c0, c1);
            return {check_norm_rotation_positive(draw(c0, n, s0), draw(c1, n, s1), opts)};
        }
        case InequalityId::CartesianSandwich: {
            const OC c0 = single_class(over, OC::SelfAdjoint, 0);
            const OC c1 = single_class(over, OC::SelfAdjoint, 1);
            declare2(c0, c1);
            return check_cartesian_sandwich(draw(c0, n, s0), draw(c1, n, s1), opts);
        }
        case InequalityId::SumRotationV1: {
            const OC c0 = single_class(over, OC::General, 0);
            const OC c1 = single_class(over, OC::General, 1);
            declare2(c0, c1);
            return {check_sum_rotation_v1(draw(c0, n, s0), draw(c1, n, s1), opts)};
        }
        case InequalityId::RadiusKittanehRefine: {
            const OC cls = single_class(over, OC::General, 0);
            declare1(cls);
            return check_radius_kittaneh_refine(draw(cls, n, s0), opts);
        }
        case InequalityId::SumRotationV2: {
            const OC c0 = single_class(over, OC::General, 0);
            const OC c1 = single_class(over, OC::General, 1);
            declare2(c0, c1);
            return {check_sum_rotation_v2(draw(c0, n, s0), draw(c1, n, s1), opts)};
        }
        case InequalityId::NormalSumRotation: {
            // Alternate normal pairs with self-adjoint pairs so the
            // specialization chain gets exercised too.
            const OC rotated = trial % 2 == 0 ? OC::Normal : OC::SelfAdjoint;
            const OC c0 = single_class(over, rotated, 0);
            const OC c1 = single_class(over, rotated, 1);
            declare2(c0, c1);
            return check_normal_sum_rotation(draw(c0, n, s0), draw(c1, n, s1), opts);
        }
        case InequalityId::AdNormLower: {
            const OC cls = single_class(over, OC::AccretiveDissipative, 0);
            declare1(cls);
            return check_ad_norm_lower(draw(cls, n, s0), opts);
        }
        case InequalityId::Submult: {
            auto [cs, ct] = submult_combo(trial);
            cs = single_class(over, cs, 0);
            ct = single_class(over, ct, 1);
            declare2(cs, ct);
            return {check_submult(draw(cs, n, s0), draw(ct, n, s1), cs, ct, opts)};
        }
        case InequalityId::ReverseKittanehRefine: {
            const OC cls = single_class(over, OC::General, 0);
            declare1(cls);
            return check_reverse_kittaneh_refine(draw(cls, n, s0), opts);
        }
        case InequalityId::TriangleRefine: {
            const OC c0 = single_class(over, OC::SelfAdjoint, 0);
            const OC c1 = single_class(over, OC::SelfAdjoint, 1);
            declare2(c0, c1);
            return check_triangle_refine(draw(c0, n, s0), draw(c1, n, s1), opts);
        }
    }
    throw std::invalid_argument("run_trial: invalid inequality id");
}

bool any_inconclusive(const std::vector<InequalityReport>& reports) {
    return std::any_of(reports.begin(), reports.end(), [](const InequalityReport& r) {
        return r.verdict == Verdict::Inconclusive;
    });
}

std::string classes_key(const std::vector<OperatorClass>& classes) {
    std::string key;
    for (OperatorClass c : classes) {
        key += class_name(c);
        key += ',';
    }
    return key;
}

json interval_to_json(const Interval& iv) { return json{{"lo", iv.lo()}, {"hi", iv.hi()}}; }

json report_to_json(const InequalityReport& rep, const std::string& timestamp) {
    json classes = json::array();
    for (OperatorClass c : rep.operand_classes) classes.push_back(class_name(c));
    json out{
        {"id", inequality_name(rep.id) + rep.chain},
        {"operand_classes", std::move(classes)},
        {"n", rep.n},
        {"seed", rep.seed ? json(*rep.seed) : json(nullptr)},
        {"lhs", interval_to_json(rep.lhs)},
        {"rhs", interval_to_json(rep.rhs)},
        {"slack", rep.slack},
        {"verdict", verdict_name(rep.verdict)},
        {"tolerance", rep.tolerance},
        {"detail", rep.detail},
        {"timestamp", timestamp},
        {"version", kVersion},
    };
    return out;
}

json config_to_json(const CampaignConfig& config) {
    json ids = json::array();
    for (InequalityId id : config.inequalities) ids.push_back(inequality_name(id));
    json overrides = json::object();
    for (const auto& [id, classes] : config.class_overrides) {
        json tags = json::array();
        for (OperatorClass c : classes) tags.push_back(class_name(c));
        overrides[inequality_name(id)] = std::move(tags);
    }
    return json{
        {"inequalities", std::move(ids)},
        {"dims", config.dims},
        {"trials", config.trials},
        {"master_seed", config.master_seed},
        {"omega_tol_factor", config.omega_tol_factor},
        {"verdict_tol_factor", config.verdict_tol_factor},
        {"inconclusive_threshold", config.inconclusive_threshold},
        {"class_overrides", std::move(overrides)},
    };
}

}  // namespace

std::size_t CampaignResult::total_violated() const {
    std::size_t count = 0;
    for (const auto& [id, counts] : summary) count += counts.violated;
    return count;
}

std::size_t CampaignResult::total_inconclusive() const {
    std::size_t count = 0;
    for (const auto& [id, counts] : summary) count += counts.inconclusive;
    return count;
}

bool CampaignResult::passes(double inconclusive_threshold) const {
    if (total_violated() > 0) return false;
    if (reports.empty()) return true;
    const double frac =
        static_cast<double>(total_inconclusive()) / static_cast<double>(reports.size());
    return frac <= inconclusive_threshold;
}

void validate_config(const CampaignConfig& config) {
    if (config.trials == 0) throw std::invalid_argument("campaign config: trials must be >= 1");
    if (config.dims.empty()) throw std::invalid_argument("campaign config: dims must be non-empty");
    for (std::size_t d : config.dims) {
        if (d == 0) throw std::invalid_argument("campaign config: dims must be positive");
    }
    if (!(config.omega_tol_factor > 0.0)) {
        throw std::invalid_argument("campaign config: omega_tol_factor must be positive");
    }
    if (!(config.verdict_tol_factor > 0.0)) {
        throw std::invalid_argument("campaign config: verdict_tol_factor must be positive");
    }
    if (config.inconclusive_threshold < 0.0 || config.inconclusive_threshold > 1.0) {
        throw std::invalid_argument("campaign config: inconclusive_threshold must be in [0, 1]");
    }
    for (const auto& [id, classes] : config.class_overrides) {
        if (classes.empty() || classes.size() > 2) {
            throw std::invalid_argument("campaign config: class override needs 1 or 2 tags for " +
                                        inequality_name(id));
        }
    }
}

CampaignResult run_campaign(const CampaignConfig& config) {
    validate_config(config);
    const auto start = std::chrono::steady_clock::now();

    std::vector<InequalityId> ids = config.inequalities;
    if (ids.empty()) ids.assign(kAllInequalities.begin(), kAllInequalities.end());
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

    std::vector<std::size_t> dims = config.dims;
    std::sort(dims.begin(), dims.end());

    CampaignResult result;
    for (InequalityId id : ids) {
        const std::uint64_t id_seed =
            mix_seed(config.master_seed, static_cast<std::uint64_t>(id) + 1);
        for (std::size_t dim : dims) {
            const std::uint64_t dim_seed = mix_seed(id_seed, dim);
            for (std::size_t trial = 0; trial < config.trials; ++trial) {
                const std::uint64_t trial_seed = mix_seed(dim_seed, trial);
                std::vector<InequalityReport> reports =
                    run_trial(id, dim, trial, trial_seed, config.omega_tol_factor, config);
                if (any_inconclusive(reports)) {
                    // One automatic re-check with the omega tolerance
                    // tightened 100x before the verdicts are counted.
                    reports = run_trial(id, dim, trial, trial_seed,
                                        config.omega_tol_factor / 100.0, config);
                    ++result.refined_trials;
                }
                for (InequalityReport& rep : reports) {
                    result.reports.push_back(std::move(rep));
                }
            }
        }
    }

    // Canonical report order: inequality, operand classes, dimension, then
    // emission (= trial) order, independent of how trials were executed.
    std::stable_sort(result.reports.begin(), result.reports.end(),
                     [](const InequalityReport& a, const InequalityReport& b) {
                         if (a.id != b.id) return a.id < b.id;
                         const std::string ka = classes_key(a.operand_classes);
                         const std::string kb = classes_key(b.operand_classes);
                         if (ka != kb) return ka < kb;
                         return a.n < b.n;
                     });

    for (const InequalityReport& rep : result.reports) {
        VerdictCounts& counts = result.summary[rep.id];
        switch (rep.verdict) {
            case Verdict::Confirmed: ++counts.confirmed; break;
            case Verdict::Violated: ++counts.violated; break;
            case Verdict::Inconclusive: ++counts.inconclusive; break;
        }
    }

    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

std::vector<InequalityId> parse_inequality_list(const std::string& text) {
    std::vector<InequalityId> out;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const auto first = token.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        const auto last = token.find_last_not_of(" \t");
        out.push_back(inequality_from_name(token.substr(first, last - first + 1)));
    }
    if (out.empty()) throw std::invalid_argument("empty inequality list");
    return out;
}

std::string report_to_json_string(const InequalityReport& report, const std::string& timestamp) {
    return report_to_json(report, timestamp).dump(2);
}

std::string campaign_result_to_json_string(const CampaignResult& result,
                                           const CampaignConfig& config,
                                           const std::string& timestamp) {
    json reports = json::array();
    for (const InequalityReport& rep : result.reports) {
        reports.push_back(report_to_json(rep, timestamp));
    }
    json summary = json::object();
    for (const auto& [id, counts] : result.summary) {
        summary[inequality_name(id)] = json{{"confirmed", counts.confirmed},
                                            {"violated", counts.violated},
                                            {"inconclusive", counts.inconclusive}};
    }
    json doc{
        {"version", kVersion},
        {"timestamp", timestamp},
        {"config", config_to_json(config)},
        {"summary", std::move(summary)},
        {"refined_trials", result.refined_trials},
        {"wall_time_seconds", result.wall_seconds},
        {"reports", std::move(reports)},
    };
    return doc.dump(2);
}

std::string iso8601_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm_utc{};
    gmtime_r(&t, &tm_utc);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

}  // namespace numrad

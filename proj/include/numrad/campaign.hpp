#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "numrad/inequalities.hpp"

namespace numrad {

/// Configuration for a verification campaign over random operator classes.
struct CampaignConfig {
    std::vector<InequalityId> inequalities;           // empty = all checkers
    std::vector<std::size_t> dims = {2, 3, 5, 8, 16};
    std::size_t trials = 200;                         // per (inequality, dim)
    std::uint64_t master_seed = 42;

    /// omega-bracket tolerance factor for campaign checks. The default keeps
    /// every first-level bracket (64 angles) convergent; equality-adjacent
    /// trials are caught by the INCONCLUSIVE refinement pass instead.
    double omega_tol_factor = 2e-3;
    double verdict_tol_factor = 1e-8;

    /// Fraction of reports allowed to stay INCONCLUSIVE after refinement.
    double inconclusive_threshold = 0.01;

    /// Optional per-inequality operand-class override (one tag per operand).
    /// Without an override each checker uses its natural classes; SUBMULT and
    /// NORMAL_SUM_ROTATION rotate through class combinations by trial index.
    std::map<InequalityId, std::vector<OperatorClass>> class_overrides;
};

struct VerdictCounts {
    std::size_t confirmed = 0;
    std::size_t violated = 0;
    std::size_t inconclusive = 0;
    std::size_t total() const { return confirmed + violated + inconclusive; }
};

struct CampaignResult {
    std::vector<InequalityReport> reports;  // canonical order: id, classes, n, trial
    std::map<InequalityId, VerdictCounts> summary;
    std::size_t refined_trials = 0;  // trials re-checked with 100x tighter omega tol
    double wall_seconds = 0.0;

    std::size_t total_reports() const { return reports.size(); }
    std::size_t total_violated() const;
    std::size_t total_inconclusive() const;
    bool passes(double inconclusive_threshold) const;
};

/// Throws std::invalid_argument on an invalid configuration.
void validate_config(const CampaignConfig& config);

/// Runs every configured checker over seeded random operands. Any trial with
/// an INCONCLUSIVE report is automatically re-checked once with the omega
/// tolerance tightened 100x before counting. Deterministic given the config.
CampaignResult run_campaign(const CampaignConfig& config);

/// Parses a comma-separated list of inequality ids ("KITTANEH,SUBMULT").
std::vector<InequalityId> parse_inequality_list(const std::string& text);

/// JSON serialization (one object per report, plus timestamp and version;
/// schema shipped in docs/report_schema.json).
std::string report_to_json_string(const InequalityReport& report, const std::string& timestamp);
std::string campaign_result_to_json_string(const CampaignResult& result,
                                           const CampaignConfig& config,
                                           const std::string& timestamp);

/// Current UTC time as ISO-8601 (e.g. "2026-01-01T12:00:00Z").
std::string iso8601_now();

}  // namespace numrad

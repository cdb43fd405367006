#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "spanlf/extremal.hpp"

namespace spanlf {

enum class VerdictStatus { pass, fail, inconclusive };

const char* to_string(VerdictStatus status);

struct Verdict {
    VerdictStatus status = VerdictStatus::inconclusive;
    bool bounds_checked = false;
    std::vector<std::string> failures;
    ExtremalResult result;
};

/// Runs the exact search and checks it against the bounds (when they apply)
/// and the G0 witness rule: G0 is a witness iff the exact value equals the
/// lower bound. Budget exhaustion gives "inconclusive", never "fail".
Verdict verify_instance(int n, int k, const BudgetLimits& budget, int workers = 1);

struct SweepCell {
    int n = 0;
    int k = 0;
    bool complete = false;
    std::int64_t exact = 0;  // meaningful only when complete
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;
    bool theorem_applicable = false;
    std::size_t witness_count = 0;
    std::uint64_t classes_enumerated = 0;
    bool g0_is_witness = false;

    std::optional<std::int64_t> gap_to_lower() const {
        if (!complete) return std::nullopt;
        return exact - lower;
    }
};

struct SweepReport {
    std::vector<SweepCell> grid;  // ordered by (n, k)
    /// Largest k such that every k' <= k in the range has at least one
    /// theorem-applicable cell and all of them completed with gap 0.
    std::optional<int> k0_evidence;
};

struct Range {
    int first = 0;
    int last = 0;
};

SweepReport sweep(Range n_range, Range k_range, const BudgetLimits& budget, int workers = 1);

nlohmann::ordered_json result_to_json(const ExtremalResult& result, bool with_timing,
                                      const std::string& witnesses_file = {});
nlohmann::ordered_json sweep_to_json(const SweepReport& report);
std::string sweep_to_table(const SweepReport& report);
std::string sweep_to_csv(const SweepReport& report);

}  // namespace spanlf

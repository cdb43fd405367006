#include "spanlf/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "spanlf/bounds.hpp"
#include "spanlf/canonical.hpp"
#include "spanlf/errors.hpp"

namespace spanlf {

const char* to_string(VerdictStatus status) {
    switch (status) {
        case VerdictStatus::pass: return "pass";
        case VerdictStatus::fail: return "fail";
        case VerdictStatus::inconclusive: return "inconclusive";
    }
    return "unknown";
}

Verdict verify_instance(int n, int k, const BudgetLimits& budget, int workers) {
    SearchSpec spec{n, k, std::nullopt, budget, workers, false};
    Verdict v;
    v.result = ex_exact(spec);
    if (!v.result.complete) {
        v.status = VerdictStatus::inconclusive;
        return v;
    }
    const auto& r = v.result;
    if (r.exact_value < r.lower)
        v.failures.push_back("exact " + std::to_string(r.exact_value) + " below lower bound " +
                             std::to_string(r.lower));
    if (r.upper) {
        v.bounds_checked = true;
        if (r.exact_value > *r.upper)
            v.failures.push_back("exact " + std::to_string(r.exact_value) + " above upper bound " +
                                 std::to_string(*r.upper));
    }
    const std::string g0 = canonical_code(build_g0(n, k)).bytes;
    const bool g0_witness = std::binary_search(r.witnesses.begin(), r.witnesses.end(), g0);
    if (g0_witness != (r.exact_value == r.lower))
        v.failures.push_back("G0 witness membership disagrees with exact == lower");
    v.status = v.failures.empty() ? VerdictStatus::pass : VerdictStatus::fail;
    return v;
}

SweepReport sweep(Range n_range, Range k_range, const BudgetLimits& budget, int workers) {
    SweepReport report;
    for (int n = n_range.first; n <= n_range.last; ++n) {
        for (int k = k_range.first; k <= k_range.last; ++k) {
            if (k < 1 || k > n) continue;
            SweepCell cell;
            cell.n = n;
            cell.k = k;
            cell.lower = lower_bound(n, k);
            cell.theorem_applicable = bounds_apply(n, k);
            if (cell.theorem_applicable) cell.upper = upper_bound(n, k);
            const Verdict v = verify_instance(n, k, budget, workers);
            if (v.status == VerdictStatus::fail)
                throw InvariantViolation("sweep cell n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                         " violates: " + v.failures.front());
            cell.complete = v.result.complete;
            cell.exact = v.result.exact_value;
            cell.witness_count = v.result.witnesses.size();
            cell.classes_enumerated = v.result.enumerated;
            cell.g0_is_witness = cell.complete && cell.exact == cell.lower;
            report.grid.push_back(cell);
        }
    }

    std::map<int, std::vector<const SweepCell*>> by_k;
    for (const auto& c : report.grid)
        if (c.theorem_applicable) by_k[c.k].push_back(&c);
    for (int k = std::max(k_range.first, 2); k <= k_range.last; ++k) {
        auto it = by_k.find(k);
        if (it == by_k.end()) break;
        const bool all_zero = std::all_of(it->second.begin(), it->second.end(), [](const SweepCell* c) {
            return c->complete && c->exact == c->lower;
        });
        if (!all_zero) break;
        report.k0_evidence = k;
    }
    return report;
}

nlohmann::ordered_json result_to_json(const ExtremalResult& r, bool with_timing,
                                      const std::string& witnesses_file) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["n"] = r.n;
    j["k"] = r.k;
    j["exact"] = r.complete ? nlohmann::ordered_json(r.exact_value) : nlohmann::ordered_json(nullptr);
    j["lower"] = r.lower;
    j["upper"] = r.upper ? nlohmann::ordered_json(*r.upper) : nlohmann::ordered_json(nullptr);
    j["within_bounds"] =
        r.within_bounds ? nlohmann::ordered_json(*r.within_bounds) : nlohmann::ordered_json(nullptr);
    j["witness_count"] = r.witnesses.size();
    j["witnesses"] = r.witnesses;
    j["witnesses_file"] = witnesses_file.empty() ? nlohmann::ordered_json(nullptr)
                                                 : nlohmann::ordered_json(witnesses_file);
    j["complement_cap"] = r.complement_cap;
    j["classes_enumerated"] = r.enumerated;
    if (with_timing) j["elapsed_ms"] = static_cast<std::int64_t>(r.elapsed_ms);
    j["complete"] = r.complete;
    return j;
}

nlohmann::ordered_json sweep_to_json(const SweepReport& report) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    auto cells = nlohmann::ordered_json::array();
    for (const auto& c : report.grid) {
        nlohmann::ordered_json cell;
        cell["n"] = c.n;
        cell["k"] = c.k;
        cell["complete"] = c.complete;
        cell["exact"] = c.complete ? nlohmann::ordered_json(c.exact) : nlohmann::ordered_json(nullptr);
        cell["lower"] = c.lower;
        cell["upper"] = c.upper ? nlohmann::ordered_json(*c.upper) : nlohmann::ordered_json(nullptr);
        cell["gap_to_lower"] =
            c.gap_to_lower() ? nlohmann::ordered_json(*c.gap_to_lower()) : nlohmann::ordered_json(nullptr);
        cell["theorem_applicable"] = c.theorem_applicable;
        cell["witness_count"] = c.witness_count;
        cell["classes_enumerated"] = c.classes_enumerated;
        cells.push_back(cell);
    }
    j["cells"] = cells;
    j["k0_evidence"] = report.k0_evidence ? nlohmann::ordered_json(*report.k0_evidence)
                                          : nlohmann::ordered_json(nullptr);
    return j;
}

namespace {

std::string exact_text(const SweepCell& c) {
    if (c.complete) return std::to_string(c.exact);
    return "[" + std::to_string(c.lower) + "," + (c.upper ? std::to_string(*c.upper) : "?") + "]";
}

}  // namespace

std::string sweep_to_table(const SweepReport& report) {
    std::ostringstream out;
    out << std::setw(4) << "n" << std::setw(4) << "k" << std::setw(10) << "exact" << std::setw(8) << "lower"
        << std::setw(8) << "upper" << std::setw(6) << "gap" << std::setw(10) << "witnesses"
        << std::setw(10) << "classes" << "  note\n";
    for (const auto& c : report.grid) {
        out << std::setw(4) << c.n << std::setw(4) << c.k << std::setw(10) << exact_text(c) << std::setw(8)
            << c.lower << std::setw(8) << (c.upper ? std::to_string(*c.upper) : "-") << std::setw(6)
            << (c.gap_to_lower() ? std::to_string(*c.gap_to_lower()) : "-") << std::setw(10)
            << c.witness_count << std::setw(10) << c.classes_enumerated << "  ";
        if (!c.theorem_applicable) out << "theorem N/A";
        if (!c.complete) out << (c.theorem_applicable ? "" : "; ") << "budget exhausted";
        out << "\n";
    }
    out << "k0_evidence: " << (report.k0_evidence ? std::to_string(*report.k0_evidence) : "none") << "\n";
    return out.str();
}

std::string sweep_to_csv(const SweepReport& report) {
    std::ostringstream out;
    out << "n,k,complete,exact,lower,upper,gap_to_lower,theorem_applicable,witness_count,classes_enumerated\n";
    for (const auto& c : report.grid) {
        out << c.n << ',' << c.k << ',' << (c.complete ? "true" : "false") << ','
            << (c.complete ? std::to_string(c.exact) : "") << ',' << c.lower << ','
            << (c.upper ? std::to_string(*c.upper) : "") << ','
            << (c.gap_to_lower() ? std::to_string(*c.gap_to_lower()) : "") << ','
            << (c.theorem_applicable ? "true" : "false") << ',' << c.witness_count << ','
            << c.classes_enumerated << '\n';
    }
    return out.str();
}

}  // namespace spanlf

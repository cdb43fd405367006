#include "spanlf/linear_forest.hpp"

#include <algorithm>
#include <json.hpp>

#include "spanlf/errors.hpp"

namespace spanlf {

int LinearForest::vertex_count() const {
    int total = 0;
    for (const auto& p : paths) total += static_cast<int>(p.size());
    return total;
}

int LinearForest::isolated_count() const {
    return static_cast<int>(
        std::count_if(paths.begin(), paths.end(), [](const auto& p) { return p.size() == 1; }));
}

void LinearForest::normalize() {
    for (auto& p : paths)
        if (p.size() > 1 && p.front() > p.back()) std::reverse(p.begin(), p.end());
    std::sort(paths.begin(), paths.end());
}

LinearForest LinearForest::trivial(int n) {
    LinearForest f;
    for (int v = 0; v < n; ++v) f.paths.push_back({v});
    return f;
}

ForestValidation validate_forest(const Graph& g, const LinearForest& f) {
    const int n = g.order();
    VertexSet seen = 0;
    for (std::size_t i = 0; i < f.paths.size(); ++i) {
        const auto& p = f.paths[i];
        if (p.empty()) return {false, "path " + std::to_string(i) + " is empty"};
        for (std::size_t j = 0; j < p.size(); ++j) {
            const int v = p[j];
            if (v < 0 || v >= n)
                return {false, "vertex " + std::to_string(v) + " out of range"};
            if (seen & bit(v)) return {false, "vertex " + std::to_string(v) + " used twice"};
            seen |= bit(v);
            if (j > 0 && !g.has_edge(p[j - 1], v))
                return {false, "non-edge " + std::to_string(p[j - 1]) + "-" + std::to_string(v)};
        }
    }
    if (seen != full_set(n)) {
        const int missing = lowest(full_set(n) & ~seen);
        return {false, "vertex " + std::to_string(missing) + " not covered"};
    }
    return {};
}

ForestStructure forest_structure(const LinearForest& f) {
    ForestStructure s;
    for (const auto& p : f.paths) {
        if (p.empty()) continue;
        s.endpoint_set |= bit(p.front()) | bit(p.back());
        if (p.size() == 1) ++s.isolated_count;
    }
    s.component_count = static_cast<int>(f.paths.size());
    return s;
}

std::string forest_to_json(const LinearForest& f) {
    nlohmann::json j;
    j["paths"] = f.paths;
    return j.dump();
}

LinearForest forest_from_json(const std::string& text) {
    LinearForest f;
    try {
        auto j = nlohmann::json::parse(text);
        f.paths = j.at("paths").get<std::vector<VertexSequence>>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(ParseErrorKind::malformed_json, std::string("forest json: ") + e.what());
    }
    return f;
}

}  // namespace spanlf

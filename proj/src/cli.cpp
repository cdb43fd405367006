#include "spanlf/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spanlf/augmentation.hpp"
#include "spanlf/errors.hpp"
#include "spanlf/extremal.hpp"
#include "spanlf/graph6.hpp"
#include "spanlf/report.hpp"
#include "spanlf/solver.hpp"

namespace spanlf {
namespace {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
    std::string subcommand;
    std::string inline_graph;
    std::string input_path;
    int n = 0;
    int k = 0;
    std::uint64_t budget_nodes = BudgetLimits{}.nodes;
    double budget_secs = BudgetLimits{}.seconds;
    int workers = 1;
    std::string format = "json";
    std::string out_path;
    std::string witnesses_out;
    std::string method = "auto";
    std::string forest_text;
    std::string forest_path;
    int u = -1;
    int v = -1;
    int max_complement = -1;
    std::string strategy = "closure";
    bool timing = false;
    bool allow_large = false;
    std::string n_range;
    std::string k_range;

    BudgetLimits budget() const { return {budget_nodes, budget_secs}; }
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot open " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::vector<Graph> load_graphs(const RunConfig& cfg, std::istream& in) {
    if (!cfg.inline_graph.empty() && !cfg.input_path.empty())
        throw DomainError("give either --graph or --input, not both");
    if (!cfg.inline_graph.empty()) return {from_graph6(cfg.inline_graph)};
    std::vector<Graph> graphs;
    if (cfg.input_path.empty() || cfg.input_path == "-") {
        graphs = read_graph6_catalog(in);
    } else {
        std::ifstream f(cfg.input_path);
        if (!f) throw DomainError("cannot open " + cfg.input_path);
        graphs = read_graph6_catalog(f);
    }
    if (graphs.empty()) throw DomainError("no graph6 input");
    return graphs;
}

SolverOptions solver_options(const RunConfig& cfg) {
    SolverOptions opt;
    opt.budget = cfg.budget();
    if (cfg.method == "dp") opt.method = SolverMethod::subset_dp;
    else if (cfg.method == "bnb") opt.method = SolverMethod::branch_and_bound;
    return opt;
}

Range parse_range(const std::string& text, const char* name) {
    Range r{};
    const auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            r.first = r.last = std::stoi(text);
        } else {
            r.first = std::stoi(text.substr(0, colon));
            r.last = std::stoi(text.substr(colon + 1));
        }
    } catch (const std::exception&) {
        throw DomainError(std::string("invalid ") + name + " range '" + text + "', expected a:b");
    }
    if (r.first > r.last) throw DomainError(std::string("empty ") + name + " range");
    return r;
}

void require_format(const RunConfig& cfg, std::initializer_list<const char*> allowed) {
    for (const char* f : allowed)
        if (cfg.format == f) return;
    throw DomainError("format '" + cfg.format + "' is not supported by " + cfg.subcommand);
}

int cmd_maxlf(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    require_format(cfg, {"json", "table"});
    const auto options = solver_options(cfg);
    for (const Graph& g : load_graphs(cfg, in)) {
        const auto r = max_linear_forest(g, options);
        if (cfg.format == "table") {
            out << to_graph6(g) << '\t' << r.size << '\t' << forest_to_json(r.witness) << '\n';
            continue;
        }
        ordered_json j;
        j["schema"] = 1;
        j["graph"] = to_graph6(g);
        j["n"] = g.order();
        j["size"] = r.size;
        j["witness"] = {{"paths", r.witness.paths}};
        out << j.dump() << '\n';
    }
    return kExitOk;
}

int cmd_hcn(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    require_format(cfg, {"json", "table"});
    const auto options = solver_options(cfg);
    for (const Graph& g : load_graphs(cfg, in)) {
        const int h = hamiltonian_completion(g, options);
        if (cfg.format == "table") {
            out << to_graph6(g) << '\t' << h << '\n';
            continue;
        }
        ordered_json j;
        j["schema"] = 1;
        j["graph"] = to_graph6(g);
        j["n"] = g.order();
        j["h"] = h;
        out << j.dump() << '\n';
    }
    return kExitOk;
}

int cmd_augment(const RunConfig& cfg, std::istream& in, std::ostream& out) {
    require_format(cfg, {"json"});
    const auto graphs = load_graphs(cfg, in);
    if (graphs.size() != 1) throw DomainError("augment takes exactly one graph");
    if (cfg.forest_text.empty() == cfg.forest_path.empty())
        throw DomainError("give exactly one of --forest or --forest-file");
    const LinearForest f =
        forest_from_json(cfg.forest_text.empty() ? read_file(cfg.forest_path) : cfg.forest_text);
    if (cfg.u < 0 || cfg.v < 0) throw DomainError("--u and --v are required");
    const LinearForest g = lemma3_augment(graphs.front(), f, cfg.u, cfg.v);
    ordered_json j;
    j["schema"] = 1;
    j["edges"] = g.edge_count();
    j["paths"] = g.paths;
    out << j.dump() << '\n';
    return kExitOk;
}

SearchSpec search_spec(const RunConfig& cfg) {
    SearchSpec spec;
    spec.n = cfg.n;
    spec.k = cfg.k;
    if (cfg.max_complement >= 0) spec.max_complement_edges = cfg.max_complement;
    spec.budget = cfg.budget();
    spec.workers = cfg.workers;
    spec.allow_large = cfg.allow_large;
    return spec;
}

int cmd_ex(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"json", "table", "graph6"});
    if (cfg.n < 1 || cfg.k < 1) throw DomainError("--n and --k are required");
    const auto strategy = cfg.strategy == "complete" ? SearchStrategy::complete : SearchStrategy::closure;
    const ExtremalResult r = ex_exact(search_spec(cfg), strategy);
    if (!cfg.witnesses_out.empty()) {
        std::ofstream w(cfg.witnesses_out, std::ios::binary);
        if (!w) throw DomainError("cannot write " + cfg.witnesses_out);
        w << witness_catalog(r);
    }
    if (cfg.format == "graph6") {
        out << witness_catalog(r);
    } else if (cfg.format == "table") {
        out << "n=" << r.n << " k=" << r.k << " exact="
            << (r.complete ? std::to_string(r.exact_value) : std::string("?")) << " lower=" << r.lower
            << " upper=" << (r.upper ? std::to_string(*r.upper) : std::string("N/A"))
            << " witnesses=" << r.witnesses.size() << " classes=" << r.enumerated
            << " complete=" << (r.complete ? "yes" : "no") << '\n';
    } else {
        out << result_to_json(r, cfg.timing, cfg.witnesses_out).dump(2) << '\n';
    }
    if (!r.complete) return kExitBudget;
    if (r.within_bounds && !*r.within_bounds) return kExitInternal;
    return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out) {
    require_format(cfg, {"json", "table", "csv"});
    const Range n_range = parse_range(cfg.n_range, "--n-range");
    const Range k_range = parse_range(cfg.k_range, "--k-range");
    const SweepReport report = sweep(n_range, k_range, cfg.budget(), cfg.workers);
    if (cfg.format == "table") out << sweep_to_table(report);
    else if (cfg.format == "csv") out << sweep_to_csv(report);
    else out << sweep_to_json(report).dump(2) << '\n';
    const bool all_complete =
        std::all_of(report.grid.begin(), report.grid.end(), [](const SweepCell& c) { return c.complete; });
    return all_complete ? kExitOk : kExitBudget;
}

void add_budget(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--budget-nodes", cfg.budget_nodes, "Node budget for searches")->capture_default_str();
    sub->add_option("--budget-secs", cfg.budget_secs,
                    "Wall-clock budget in seconds (default from SPANLF_BUDGET_SECS if set)")
        ->capture_default_str();
    sub->add_option("--workers", cfg.workers, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--out", cfg.out_path, "Write output to this file instead of stdout");
}

void add_graph_input(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--graph", cfg.inline_graph, "Inline graph6 string");
    sub->add_option("--input", cfg.input_path, "graph6 catalog file, one graph per line ('-' for stdin)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* env = std::getenv("SPANLF_BUDGET_SECS")) {
        try {
            cfg.budget_secs = std::stod(env);
        } catch (const std::exception&) {
            err << "spanlf: ignoring invalid SPANLF_BUDGET_SECS='" << env << "'\n";
        }
    }

    CLI::App app{"spanlf: exact spanning linear forests, Hamiltonian completion and Turan numbers "
                 "of linear forest families",
                 "spanlf"};
    app.require_subcommand(1);

    auto* maxlf = app.add_subcommand("maxlf", "Maximum spanning linear forest of each input graph");
    add_graph_input(maxlf, cfg);
    add_budget(maxlf, cfg);
    maxlf->add_option("--method", cfg.method, "Solver: auto, dp or bnb")
        ->check(CLI::IsMember({"auto", "dp", "bnb"}))
        ->capture_default_str();
    maxlf->add_option("--format", cfg.format, "Output format: json or table")->capture_default_str();

    auto* hcn = app.add_subcommand("hcn", "Hamiltonian completion number of each input graph");
    add_graph_input(hcn, cfg);
    add_budget(hcn, cfg);
    hcn->add_option("--method", cfg.method, "Solver: auto, dp or bnb")
        ->check(CLI::IsMember({"auto", "dp", "bnb"}))
        ->capture_default_str();
    hcn->add_option("--format", cfg.format, "Output format: json or table")->capture_default_str();

    auto* augment = app.add_subcommand("augment", "Add one edge to a forest with n-k edges via the join-graph rotation");
    add_graph_input(augment, cfg);
    add_budget(augment, cfg);
    augment->add_option("--forest", cfg.forest_text, "Forest JSON {\"paths\": [[...], ...]}");
    augment->add_option("--forest-file", cfg.forest_path, "File holding the forest JSON");
    augment->add_option("--u", cfg.u, "First endpoint")->required();
    augment->add_option("--v", cfg.v, "Second endpoint")->required();
    augment->add_option("--format", cfg.format, "Output format: json")->capture_default_str();

    auto* ex = app.add_subcommand("ex", "Exact Turan number ex(n; L_n^k) by exhaustive search");
    ex->add_option("--n", cfg.n, "Order n")->required();
    ex->add_option("--k", cfg.k, "Parameter k")->required();
    add_budget(ex, cfg);
    ex->add_option("--format", cfg.format, "Output format: json, table or graph6")->capture_default_str();
    ex->add_option("--witnesses-out", cfg.witnesses_out, "Write the witness catalog (graph6) here");
    ex->add_option("--max-complement", cfg.max_complement, "Override the complement edge cap");
    ex->add_option("--strategy", cfg.strategy, "closure (default) or complete")
        ->check(CLI::IsMember({"closure", "complete"}))
        ->capture_default_str();
    ex->add_flag("--timing", cfg.timing, "Include elapsed_ms in the JSON report");
    ex->add_flag("--allow-large", cfg.allow_large, "Allow n up to 16");

    auto* sw = app.add_subcommand("sweep", "Exact values over an (n, k) grid");
    sw->add_option("--n-range", cfg.n_range, "Orders as a:b")->required();
    sw->add_option("--k-range", cfg.k_range, "Parameters as a:b")->required();
    add_budget(sw, cfg);
    sw->add_option("--format", cfg.format, "Output format: json, table or csv")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInput;
    }
    for (auto* sub : app.get_subcommands()) cfg.subcommand = sub->get_name();

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out_path.empty()) {
        file.open(cfg.out_path, std::ios::binary);
        if (!file) {
            err << "spanlf: cannot write " << cfg.out_path << '\n';
            return kExitInput;
        }
        sink = &file;
    }

    try {
        if (cfg.subcommand == "maxlf") return cmd_maxlf(cfg, in, *sink);
        if (cfg.subcommand == "hcn") return cmd_hcn(cfg, in, *sink);
        if (cfg.subcommand == "augment") return cmd_augment(cfg, in, *sink);
        if (cfg.subcommand == "ex") return cmd_ex(cfg, *sink);
        if (cfg.subcommand == "sweep") return cmd_sweep(cfg, *sink);
    } catch (const ParseError& e) {
        err << "spanlf: parse error (" << to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitInput;
    } catch (const DomainError& e) {
        err << "spanlf: " << e.what() << '\n';
        return kExitInput;
    } catch (const BudgetExceeded& e) {
        err << "spanlf: budget exhausted: " << e.what() << '\n';
        return kExitBudget;
    } catch (const PreconditionError& e) {
        err << "spanlf: precondition failed: " << e.what() << '\n';
        return kExitPrecondition;
    } catch (const InvariantViolation& e) {
        err << "spanlf: internal invariant violated: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInput;
}

}  // namespace spanlf

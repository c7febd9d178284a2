#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "d2tf/canonical.hpp"
#include "d2tf/cayley.hpp"
#include "d2tf/constructions.hpp"
#include "d2tf/graph6.hpp"
#include "d2tf/process.hpp"
#include "d2tf/properties.hpp"
#include "d2tf/search.hpp"

using json = nlohmann::ordered_json;
using namespace d2tf;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPredicateFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitParseError = 3;

int default_workers() {
    if (const char* env = std::getenv("D2TF_WORKERS")) {
        const int w = std::atoi(env);
        if (w >= 1) return w;
    }
    return 1;
}

std::vector<std::string> read_lines(std::istream& in) {
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) lines.push_back(line);
    }
    return lines;
}

std::vector<std::string> read_lines_from(const std::string& path) {
    if (path == "-") return read_lines(std::cin);
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_lines(in);
}

json degrees_json(const std::vector<std::pair<int, int>>& degrees) {
    json arr = json::array();
    for (auto [d, m] : degrees) arr.push_back({d, m});
    return arr;
}

std::vector<std::pair<int, int>> degrees_from_json(const json& arr) {
    std::vector<std::pair<int, int>> out;
    for (const auto& item : arr) out.emplace_back(item.at(0).get<int>(), item.at(1).get<int>());
    return out;
}

std::string degrees_pretty(const std::vector<std::pair<int, int>>& degrees) {
    std::ostringstream os;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i) os << ' ';
        os << degrees[i].first;
        if (degrees[i].second > 1) os << '^' << degrees[i].second;
    }
    return os.str();
}

json census_row_json(const CensusRow& row) {
    json j;
    j["n"] = row.n;
    j["edges"] = row.edges;
    j["degrees"] = degrees_json(row.degrees);
    j["girth"] = girth_class_name(row.girth);
    j["aut_min"] = row.aut_min;
    j["aut_max"] = row.aut_max;
    j["orbit_min"] = row.orbit_min;
    j["orbit_max"] = row.orbit_max;
    j["count"] = row.count;
    return j;
}

struct VerifyOptions {
    std::string input = "-";
    int s = 2, t = 3;
    bool theorems = false;
};

int cmd_verify(const VerifyOptions& opt) {
    std::vector<std::string> lines;
    try {
        lines = read_lines_from(opt.input);
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitParseError;
    }
    bool parse_failed = false, predicate_failed = false;
    int line_no = 0;
    for (const auto& line : lines) {
        ++line_no;
        std::optional<Graph> g;
        try {
            g = from_graph6(line);
        } catch (const Graph6ParseError& e) {
            std::cerr << "line " << line_no << ": " << e.what() << "\n";
            parse_failed = true;
            continue;
        }
        const auto rep = witness_report(*g, opt.s, opt.t);
        if (!rep.is_witness) predicate_failed = true;
        json j = json::parse(witness_report_json(*g, rep));
        if (opt.theorems) {
            json th;
            th["degree_bound"] = nullptr;
            th["degree_sums"] = nullptr;
            th["max_degree_floor"] = nullptr;
            if (rep.is_witness && opt.s == 2) th["degree_bound"] = check_degree_bound(*g, opt.t);
            if (rep.triangle_free && rep.kst_free && rep.diameter_two && opt.s == 2) {
                const auto sums = check_degree_sum_inequalities(*g, opt.t);
                th["degree_sums"] = {{"lhs", sums.lhs},
                                     {"mid", sums.mid},
                                     {"rhs", sums.rhs},
                                     {"holds", sums.holds}};
            }
            if (rep.diameter_two) th["max_degree_floor"] = max_degree_floor(*g);
            j["theorems"] = th;
        }
        std::cout << j.dump() << "\n";
    }
    if (parse_failed) return kExitParseError;
    return predicate_failed ? kExitPredicateFailure : kExitOk;
}

struct EnumerateOptions {
    int n_max = 13;
    int s = 2, t = 3;
    int workers = 1;
    std::string output, census;
};

int cmd_enumerate(const EnumerateOptions& opt) {
    SearchConfig cfg;
    cfg.n_max = opt.n_max;
    cfg.s = opt.s;
    cfg.t = opt.t;
    cfg.workers = opt.workers;
    const auto res = enumerate_witnesses(cfg);

    for (const auto& row : res.census) {
        std::cout << "n=" << row.n << " edges=" << row.edges << " degrees="
                  << degrees_pretty(row.degrees) << " girth=" << girth_class_name(row.girth)
                  << " group=" << row.aut_min;
        if (row.aut_max != row.aut_min) std::cout << "-" << row.aut_max;
        std::cout << " orbits=" << row.orbit_min;
        if (row.orbit_max != row.orbit_min) std::cout << "-" << row.orbit_max;
        std::cout << " count=" << row.count << "\n";
    }
    int total = 0;
    for (int n = 0; n <= cfg.n_max; ++n) total += res.counts_per_order[n];
    std::cout << "total=" << total << " theorem_violations=" << res.theorem_violations << "\n";

    if (!opt.output.empty()) {
        std::ofstream out(opt.output);
        for (const auto& w : res.witnesses) out << w.graph6 << "\n";
    }
    if (!opt.census.empty()) {
        std::ofstream out(opt.census);
        json rows = json::array();
        for (const auto& row : res.census) rows.push_back(census_row_json(row));
        json j;
        j["n_max"] = cfg.n_max;
        j["s"] = cfg.s;
        j["t"] = cfg.t;
        j["total"] = total;
        j["rows"] = rows;
        out << j.dump(2) << "\n";
    }
    return res.theorem_violations == 0 ? kExitOk : kExitPredicateFailure;
}

struct CayleyOptions {
    std::string group;
    int k = 0;
    bool all_k = false;
    int max_k = 20;
};

int cmd_cayley(const CayleyOptions& opt) {
    std::vector<int> factors;
    std::stringstream ss(opt.group);
    std::string tok;
    while (std::getline(ss, tok, ',')) factors.push_back(std::atoi(tok.c_str()));
    AbelianGroup group(factors);

    std::vector<int> ks;
    if (opt.all_k) {
        for (int k = 1; k <= std::min(opt.max_k, group.order() - 1); ++k) ks.push_back(k);
    } else {
        if (opt.k < 1) {
            std::cerr << "cayley: provide --k or --all-k\n";
            return kExitUsage;
        }
        ks.push_back(opt.k);
    }

    int total = 0;
    for (int k : ks) {
        for (const auto& cls : enumerate_connection_sets(group, k)) {
            ++total;
            json j;
            j["group"] = group.spec();
            j["k"] = k;
            j["connection_set"] = cls.set.elements;
            j["graph6"] = cls.report.canonical_form;
            j["aut_order"] = cls.report.aut_order;
            j["orbit_count"] = cls.report.orbit_count;
            if (const auto p = srg_params(cls.graph))
                j["srg"] = {p->v, p->k, p->lambda, p->mu};
            std::cout << j.dump() << "\n";
        }
    }
    json summary;
    summary["group"] = group.spec();
    summary["classes"] = total;
    std::cout << summary.dump() << "\n";
    return kExitOk;
}

int cmd_construct(const std::string& name, bool list) {
    if (list) {
        for (const auto& n : named_graph_names()) std::cout << n << "\n";
        return kExitOk;
    }
    std::cout << to_graph6(named_graph(name)) << "\n";
    return kExitOk;
}

struct ClosureCmdOptions {
    std::string seeds;
    std::string ops = "rotation,switch,subgraph";
    int s = 2, t = 3;
    std::size_t max_graphs = 100000;
    std::uint64_t max_steps = 1000000;
    std::string output;
};

int cmd_closure(const ClosureCmdOptions& opt) {
    std::vector<Graph> seeds;
    int line_no = 0;
    try {
        for (const auto& line : read_lines_from(opt.seeds)) {
            ++line_no;
            seeds.push_back(from_graph6(line));
        }
    } catch (const Graph6ParseError& e) {
        std::cerr << "line " << line_no + 1 << ": " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitParseError;
    }

    ClosureOptions copts;
    copts.rotations = opt.ops.find("rotation") != std::string::npos;
    copts.switches = opt.ops.find("switch") != std::string::npos;
    copts.induced_subgraphs = opt.ops.find("subgraph") != std::string::npos;
    copts.s = opt.s;
    copts.t = opt.t;
    copts.max_graphs = opt.max_graphs;
    copts.max_expansions = opt.max_steps;
    const auto res = closure(seeds, copts);

    if (!opt.output.empty()) {
        std::ofstream out(opt.output);
        for (const auto& [form, g] : res.members) out << form << "\n";
    }
    json j;
    j["seeds"] = seeds.size();
    j["members"] = res.members.size();
    j["truncated"] = res.truncated;
    std::cout << j.dump() << "\n";
    return kExitOk;
}

struct ProcessOptions {
    int n = 100;
    int s = 3, t = 4;
    int trials = 1;
    std::uint64_t seed = 0;
    int exact_limit = 20;
    int workers = 1;
    std::string dump;
};

int cmd_process(const ProcessOptions& opt) {
    ProbeOptions probe;
    probe.exact_limit = opt.exact_limit;
    const auto sum = experiment(opt.n, opt.s, opt.t, opt.trials, opt.seed, opt.workers, probe);
    for (const auto& ts : sum.per_trial) {
        json j;
        j["trial"] = ts.trial;
        j["seed"] = ts.seed;
        j["permutation_id"] = ts.permutation_id;
        j["edges"] = ts.edges;
        j["rejected"] = ts.rejected;
        j["edges_over_mstar"] = ts.edges_over_mstar;
        j["saturated"] = ts.saturated;
        j["probe_order"] = ts.probe_order;
        j["probe_exact"] = ts.probe_exact;
        std::cout << j.dump() << "\n";
    }
    json j;
    j["n"] = sum.n;
    j["s"] = sum.s;
    j["t"] = sum.t;
    j["trials"] = sum.trials;
    j["seed"] = sum.seed;
    j["edges_min"] = sum.edges_min;
    j["edges_mean"] = sum.edges_mean;
    j["edges_max"] = sum.edges_max;
    j["ratio_mean"] = sum.ratio_mean;
    j["probe_max"] = sum.probe_max;
    j["all_saturated"] = sum.all_saturated;
    std::cout << j.dump() << "\n";
    if (!opt.dump.empty()) {
        std::ofstream out(opt.dump);
        for (const auto& ts : sum.per_trial) out << ts.final_graph6 << "\n";
    }
    return sum.all_saturated ? kExitOk : kExitPredicateFailure;
}

struct CorpusOptions {
    std::string input;
    std::string manifest;
};

int cmd_corpus(const CorpusOptions& opt) {
    json manifest;
    try {
        std::ifstream in(opt.manifest);
        if (!in) throw std::runtime_error("cannot open " + opt.manifest);
        in >> manifest;
    } catch (const std::exception& e) {
        std::cerr << "manifest: " << e.what() << "\n";
        return kExitParseError;
    }
    const int s = manifest.value("s", 2);
    const int t = manifest.value("t", 3);

    std::vector<Graph> graphs;
    int line_no = 0;
    try {
        for (const auto& line : read_lines_from(opt.input)) {
            ++line_no;
            graphs.push_back(from_graph6(line));
        }
    } catch (const Graph6ParseError& e) {
        std::cerr << "line " << line_no + 1 << ": " << e.what() << "\n";
        return kExitParseError;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitParseError;
    }

    bool ok = true;
    json report;
    report["file"] = opt.input;
    report["graphs"] = graphs.size();
    if (manifest.contains("expected_graph_count")) {
        const auto expected = manifest["expected_graph_count"].get<std::size_t>();
        report["expected_graph_count"] = expected;
        if (expected != graphs.size()) ok = false;
    }

    int non_witnesses = 0;
    std::vector<WitnessRecord> records;
    for (const auto& g : graphs) {
        const auto rep = witness_report(g, s, t);
        if (!rep.is_witness) ++non_witnesses;
        WitnessRecord rec;
        rec.n = g.order();
        const auto canon = canonicalize(g);
        rec.graph6 = canon.canonical_form;
        rec.edges = g.edge_count();
        rec.degrees = degree_multiset(g);
        rec.girth = girth_class(g);
        rec.aut_order = canon.aut_order;
        rec.orbit_count = canon.orbit_count;
        records.push_back(std::move(rec));
    }
    report["non_witnesses"] = non_witnesses;
    if (non_witnesses > 0) ok = false;

    const auto rows = census_rows(records);
    json rows_json = json::array();
    for (const auto& row : rows) rows_json.push_back(census_row_json(row));
    report["rows"] = rows_json;

    if (manifest.contains("rows")) {
        json mismatches = json::array();
        for (const auto& want : manifest["rows"]) {
            const int n = want.at("n").get<int>();
            const int edges = want.at("edges").get<int>();
            bool found = false;
            for (const auto& row : rows) {
                if (row.n != n || row.edges != edges) continue;
                found = true;
                if (want.contains("degrees") &&
                    degrees_from_json(want["degrees"]) != row.degrees)
                    found = false;
                if (want.contains("girth") &&
                    want["girth"].get<std::string>() != girth_class_name(row.girth))
                    found = false;
                if (want.contains("count") && want["count"].get<int>() != row.count)
                    found = false;
                if (want.contains("aut") &&
                    (row.aut_min != row.aut_max ||
                     want["aut"].get<std::uint64_t>() != row.aut_min))
                    found = false;
                if (want.contains("orbits") &&
                    (row.orbit_min != row.orbit_max ||
                     want["orbits"].get<int>() != row.orbit_min))
                    found = false;
                break;
            }
            if (!found) {
                ok = false;
                mismatches.push_back(want);
            }
        }
        report["row_mismatches"] = mismatches;
        if (manifest["rows"].size() != rows.size()) ok = false;
    }
    report["pass"] = ok;
    std::cout << report.dump(2) << "\n";
    return ok ? kExitOk : kExitPredicateFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Explorer for triangle-free K_{s,t}-free diameter-2 graphs"};
    app.require_subcommand(1);

    VerifyOptions vopt;
    auto* verify = app.add_subcommand("verify", "check graph6 input against the witness predicate");
    verify->add_option("--input", vopt.input, "graph6 file, '-' for stdin");
    verify->add_option("--s", vopt.s, "forbidden biclique small side")->check(CLI::Range(1, 4));
    verify->add_option("--t", vopt.t, "forbidden biclique large side");
    verify->add_flag("--theorems", vopt.theorems, "also run the degree oracles");

    EnumerateOptions eopt;
    eopt.workers = default_workers();
    auto* enumerate = app.add_subcommand("enumerate", "isomorph-free census of witnesses");
    enumerate->add_option("--n-max", eopt.n_max, "largest order")->check(CLI::Range(1, 20));
    enumerate->add_option("--s", eopt.s, "forbidden biclique small side")->check(CLI::Range(2, 4));
    enumerate->add_option("--t", eopt.t, "forbidden biclique large side");
    enumerate->add_option("--workers", eopt.workers, "worker threads");
    enumerate->add_option("--output", eopt.output, "write witnesses (graph6)");
    enumerate->add_option("--census", eopt.census, "write census rows (JSON)");

    CayleyOptions copt;
    auto* cayley = app.add_subcommand("cayley", "classify Cayley connection sets");
    cayley->add_option("--group", copt.group, "cyclic factors, e.g. 2,2,2,2")->required();
    cayley->add_option("--k", copt.k, "connection set size");
    cayley->add_flag("--all-k", copt.all_k, "scan every k");
    cayley->add_option("--max-k", copt.max_k, "cap for --all-k");

    std::string cname;
    bool clist = false;
    auto* construct = app.add_subcommand("construct", "emit a named graph as graph6");
    construct->add_option("--name", cname, "graph name");
    construct->add_flag("--list", clist, "list known names");

    ClosureCmdOptions clopt;
    auto* closure_cmd = app.add_subcommand("closure", "fixpoint under witness-preserving operations");
    closure_cmd->add_option("--seeds", clopt.seeds, "graph6 seed file")->required();
    closure_cmd->add_option("--ops", clopt.ops, "subset of rotation,switch,subgraph");
    closure_cmd->add_option("--s", clopt.s, "witness parameter s")->check(CLI::Range(1, 4));
    closure_cmd->add_option("--t", clopt.t, "witness parameter t");
    closure_cmd->add_option("--max-graphs", clopt.max_graphs, "budget: member cap");
    closure_cmd->add_option("--max-steps", clopt.max_steps, "budget: expansion cap");
    closure_cmd->add_option("--output", clopt.output, "write members (graph6)");

    ProcessOptions popt;
    popt.workers = default_workers();
    auto* process = app.add_subcommand("process", "constrained random process trials");
    process->add_option("--n", popt.n, "vertex count")->check(CLI::Range(4, 512));
    process->add_option("--s", popt.s, "forbidden biclique small side")->check(CLI::Range(2, 4));
    process->add_option("--t", popt.t, "forbidden biclique large side");
    process->add_option("--trials", popt.trials, "trial count");
    process->add_option("--seed", popt.seed, "RNG seed")->required();
    process->add_option("--exact-limit", popt.exact_limit, "exact probe cutoff");
    process->add_option("--workers", popt.workers, "worker threads");
    process->add_option("--dump-graphs", popt.dump, "write final graphs (graph6)");

    CorpusOptions corpopt;
    auto* corpus = app.add_subcommand("corpus", "verify a graph6 corpus against a manifest");
    corpus->add_option("--input", corpopt.input, "graph6 file")->required();
    corpus->add_option("--manifest", corpopt.manifest, "manifest JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(verify)) return cmd_verify(vopt);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(eopt);
        if (app.got_subcommand(cayley)) return cmd_cayley(copt);
        if (app.got_subcommand(construct)) return cmd_construct(cname, clist);
        if (app.got_subcommand(closure_cmd)) return cmd_closure(clopt);
        if (app.got_subcommand(process)) return cmd_process(popt);
        if (app.got_subcommand(corpus)) return cmd_corpus(corpopt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

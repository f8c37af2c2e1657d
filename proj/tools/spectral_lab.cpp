// spectral-lab: command-line front end for graph construction, spectra,
// theorem certificates, and exhaustive small-order searches.
//
// graph6 is the universal interchange format on stdin/stdout; structured
// results are JSON with fixed field order and floats rounded to 12
// significant digits, so identical invocations produce identical bytes.
// Exit codes: 0 ok, 1 at least one non-probe certificate violated, 2 usage
// or input errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "speclab/speclab.hpp"

namespace {

using namespace speclab;

int default_workers() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int enumeration_cap() {
    if (const char* env = std::getenv("SPECTRAL_LAB_MAX_N")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
            throw std::invalid_argument("SPECTRAL_LAB_MAX_N is not an integer");
        }
    }
    return 10;
}

std::vector<int> parse_sizes(const std::string& csv) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    return out;
}

Graph read_graph_line(std::istream& in, const char* what) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument(std::string("expected a graph6 line for ") + what);
    return from_graph6(line);
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty()) return std::cout;
    file.open(path);
    if (!file) throw std::invalid_argument("cannot open output file: " + path);
    return file;
}

struct StreamStats {
    long long line_no = 0;
    bool any_violation = false;
    bool any_error = false;
};

// Apply `fn` to each graph6 line on the stream; parse failures either stop
// the run (exit 2) or are logged and skipped with --continue-on-error.
template <typename Fn>
void for_each_graph(std::istream& in, bool continue_on_error, StreamStats& stats, Fn&& fn) {
    std::string line;
    while (std::getline(in, line)) {
        ++stats.line_no;
        if (line.empty()) continue;
        Graph g;
        try {
            g = from_graph6(line);
        } catch (const std::exception& e) {
            std::cerr << "line " << stats.line_no << ": " << e.what() << "\n";
            stats.any_error = true;
            if (continue_on_error) continue;
            throw std::invalid_argument("malformed graph6 input on line " + std::to_string(stats.line_no));
        }
        fn(g);
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral-lab: spectra, certificates and exhaustive search for graphs without short odd cycles"};
    app.require_subcommand(1);

    int workers = default_workers();
    double tolerance = kDefaultZeroTol;
    std::string format = "text";
    std::string out_path;
    app.add_option("--workers", workers, "worker threads for search (results are worker-count independent)");
    app.add_option("--tolerance", tolerance, "eigenvalue zero-classification tolerance (default 1e-7)");
    app.add_option("--format", format, "output format: text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    // ---- construct ----------------------------------------------------
    auto* construct = app.add_subcommand("construct", "build a graph family member, print graph6");
    std::string kind;
    construct->add_option("kind", kind, "path|cycle|complete|biclique|ttree|blowup|rk|split|join|union")
        ->required();
    int c_n = 0, c_s = 0, c_t = 0, c_k = 1, c_a = 1, c_b = 1, c_c = 1;
    std::string c_base, c_base_g6, c_sizes;
    construct->add_option("--n", c_n, "order");
    construct->add_option("--s", c_s, "first side size");
    construct->add_option("--t", c_t, "second side size");
    construct->add_option("--k", c_k, "odd-girth parameter / clique size");
    construct->add_option("--a", c_a, "first leg (ttree)");
    construct->add_option("--b", c_b, "second leg (ttree)");
    construct->add_option("--c", c_c, "third leg (ttree)");
    construct->add_option("--base", c_base, "blow-up base: p2k1|2p2k1|p4k1|p5k1");
    construct->add_option("--base-g6", c_base_g6, "blow-up base as graph6");
    construct->add_option("--sizes", c_sizes, "blow-up class sizes, comma separated");

    // ---- spectrum ------------------------------------------------------
    auto* spectrum_cmd = app.add_subcommand("spectrum", "eigenvalues for each graph6 line on stdin");
    bool continue_on_error = false;
    spectrum_cmd->add_flag("--continue-on-error", continue_on_error, "skip malformed lines instead of stopping");

    // ---- canonical -------------------------------------------------------
    auto* canonical_cmd = app.add_subcommand("canonical", "canonical graph6 form for each line on stdin (n <= 12)");
    canonical_cmd->add_flag("--continue-on-error", continue_on_error, "skip malformed lines instead of stopping");

    // ---- certify ---------------------------------------------------------
    auto* certify = app.add_subcommand("certify", "run a claim certifier over a graph6 stream");
    std::string claim;
    int k_param = 1, r_param = 3;
    certify->add_option("--claim", claim, "thm1.1|thm1.3|thm1.04|thm1.4|conj1.1|conj5.1|all-classical")->required();
    certify->add_option("--k", k_param, "theorem parameter k");
    certify->add_option("--r", r_param, "clique parameter r for conj1.1");
    certify->add_flag("--continue-on-error", continue_on_error, "skip malformed lines instead of stopping");

    // ---- search ---------------------------------------------------------
    auto* search = app.add_subcommand("search", "exhaustive scans over isomorphism classes");
    std::string mode;
    int s_n = 0, s_k = 1;
    std::string s_claim = "thm1.1";
    bool timing = false;
    search->add_option("mode", mode, "extremal|census|scan")->required();
    search->add_option("--n", s_n, "order to scan")->required();
    search->add_option("--k", s_k, "theorem parameter k");
    search->add_option("--claim", s_claim, "claim id for scan mode");
    search->add_flag("--timing", timing, "include runtime_ms in the report (breaks byte-identity)");

    for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::ofstream out_file;
        std::ostream& out = open_out(out_file, out_path);

        if (*construct) {
            Graph g;
            if (kind == "path") g = path_graph(c_n);
            else if (kind == "cycle") g = cycle_graph(c_n);
            else if (kind == "complete") g = complete_graph(c_n);
            else if (kind == "biclique") g = complete_bipartite(c_s, c_t);
            else if (kind == "ttree") g = t_tree(c_a, c_b, c_c);
            else if (kind == "rk") g = rk_bipartite(c_k, c_s, c_t);
            else if (kind == "split") g = split_graph(c_n, c_k);
            else if (kind == "blowup") {
                Graph base;
                if (!c_base_g6.empty()) base = from_graph6(c_base_g6);
                else if (c_base == "p2k1") base = blowup_base_graph(BlowupBaseKind::p2_k1);
                else if (c_base == "2p2k1") base = blowup_base_graph(BlowupBaseKind::two_p2_k1);
                else if (c_base == "p4k1") base = blowup_base_graph(BlowupBaseKind::p4_k1);
                else if (c_base == "p5k1") base = blowup_base_graph(BlowupBaseKind::p5_k1);
                else throw std::invalid_argument("blowup: give --base p2k1|2p2k1|p4k1|p5k1 or --base-g6");
                g = blow_up(base, parse_sizes(c_sizes));
            } else if (kind == "join" || kind == "union") {
                const Graph a = read_graph_line(std::cin, "the first operand");
                const Graph b = read_graph_line(std::cin, "the second operand");
                g = kind == "join" ? graph_join(a, b) : disjoint_union(a, b);
            } else {
                throw std::invalid_argument("unknown construction kind: " + kind);
            }
            out << to_graph6(g) << "\n";
            return 0;
        }

        if (*spectrum_cmd) {
            StreamStats stats;
            for_each_graph(std::cin, continue_on_error, stats, [&](const Graph& g) {
                if (g.order() == 0) {
                    out << (format == "json" ? "{\"graph6\":\"?\",\"eigenvalues\":[]}" : "") << "\n";
                    return;
                }
                const Spectrum s = spectrum(g, tolerance);
                if (format == "json") {
                    OrderedJson j;
                    j["graph6"] = to_graph6(g);
                    OrderedJson vals = OrderedJson::array();
                    for (double v : s.values) vals.push_back(round_sig12(v));
                    j["eigenvalues"] = vals;
                    out << j.dump() << "\n";
                } else {
                    const char* sep = format == "csv" ? "," : ", ";
                    for (std::size_t i = 0; i < s.values.size(); ++i)
                        out << (i ? sep : "") << format_fixed9(s.values[i]);
                    out << "\n";
                }
            });
            return stats.any_error && !continue_on_error ? 2 : 0;
        }

        if (*canonical_cmd) {
            StreamStats stats;
            for_each_graph(std::cin, continue_on_error, stats, [&](const Graph& g) {
                out << canonical_form(g) << "\n";
            });
            return stats.any_error && !continue_on_error ? 2 : 0;
        }

        if (*certify) {
            StreamStats stats;
            ClaimParams params;
            params.k = k_param;
            params.r = r_param;
            params.zero_tol = tolerance;
            if (format == "csv")
                out << "claim_id,graph6,applicable,lhs,rhs,margin,verdict,structure_note\n";
            for_each_graph(std::cin, continue_on_error, stats, [&](const Graph& g) {
                for (const Certificate& c : run_claim(claim, g, params)) {
                    stats.any_violation |= c.violated_hard();
                    if (format == "csv") {
                        out << c.claim_id << ',' << c.graph6 << ',' << (c.applicable ? "true" : "false") << ','
                            << (c.lhs ? format_sig12(*c.lhs) : "") << ',' << (c.rhs ? format_sig12(*c.rhs) : "")
                            << ',' << (c.margin ? format_sig12(*c.margin) : "") << ',' << verdict_name(c.verdict)
                            << ',' << '"' << c.structure_note << '"' << "\n";
                    } else if (format == "text") {
                        out << c.claim_id << " on " << c.graph6 << ": " << verdict_name(c.verdict);
                        if (c.margin) out << " (margin " << format_sig12(*c.margin) << ")";
                        if (!c.structure_note.empty()) out << " [" << c.structure_note << "]";
                        out << "\n";
                    } else {
                        out << to_json(c).dump() << "\n";
                    }
                }
            });
            if (stats.any_error && !continue_on_error) return 2;
            return stats.any_violation ? 1 : 0;
        }

        if (*search) {
            SearchOptions opt;
            opt.workers = workers;
            opt.cap = enumeration_cap();
            opt.zero_tol = tolerance;
            EnumerationCache cache;
            opt.cache = &cache;
            SearchReport report;
            if (mode == "extremal") report = extremal_radius_search(s_n, s_k, opt);
            else if (mode == "census") report = equality_census(s_n, s_k, opt);
            else if (mode == "scan") report = counterexample_scan(s_n, s_k, s_claim, opt);
            else throw std::invalid_argument("unknown search mode: " + mode);

            out << to_json(report, opt, timing).dump(2) << "\n";
            if (!out_path.empty()) {
                // graph6 sidecar with every graph referenced by the report
                std::vector<std::string> side;
                side.insert(side.end(), report.extremal_graphs.begin(), report.extremal_graphs.end());
                side.insert(side.end(), report.equality_graphs.begin(), report.equality_graphs.end());
                side.insert(side.end(), report.counterexamples.begin(), report.counterexamples.end());
                std::sort(side.begin(), side.end());
                side.erase(std::unique(side.begin(), side.end()), side.end());
                std::ofstream g6(out_path + ".g6");
                for (const auto& s : side) g6 << s << "\n";
            }
            return report.hard_violations == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

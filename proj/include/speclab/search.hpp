#pragma once

#include <algorithm>
#include <chrono>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "speclab/certify.hpp"
#include "speclab/enumerate.hpp"
#include "speclab/format.hpp"

namespace speclab {

struct SearchOptions {
    int workers = 1;
    int cap = 10;
    double zero_tol = kDefaultZeroTol;
    double tie_band = 1e-7;  // lambda1 near-tie collection band before iso dedup
    EnumerationCache* cache = nullptr;
};

// Result of an exhaustive scan. Graph lists hold canonical graph6 strings;
// an empty counterexample list means the scanned claim held on the whole
// scanned universe.
struct SearchReport {
    int n = 0;
    int k = 0;
    std::string claim_id;
    long long total_canonical = 0;
    long long admissible = 0;
    std::optional<double> extremal_value;
    std::vector<std::string> extremal_graphs;
    std::vector<std::string> equality_graphs;
    std::vector<std::string> counterexamples;
    long long hard_violations = 0;  // non-probe violations only; probes are informational
    long long runtime_ms = 0;
};

// Report serialization. The config echo carries every option that affects
// results; worker count and runtime are execution telemetry (runtime is
// omitted when byte-stable output is required).
inline OrderedJson to_json(const SearchReport& r, const SearchOptions& opt, bool include_timing = true) {
    OrderedJson j;
    j["n"] = r.n;
    j["k"] = r.k;
    j["claim_id"] = r.claim_id.empty() ? OrderedJson(nullptr) : OrderedJson(r.claim_id);
    j["total_canonical"] = r.total_canonical;
    j["admissible"] = r.admissible;
    j["extremal_value"] = r.extremal_value ? OrderedJson(round_sig12(*r.extremal_value)) : OrderedJson(nullptr);
    j["extremal_graphs"] = r.extremal_graphs;
    j["equality_graphs"] = r.equality_graphs;
    j["counterexamples"] = r.counterexamples;
    OrderedJson cfg;
    cfg["zero_tol"] = round_sig12(opt.zero_tol);
    cfg["tie_band"] = round_sig12(opt.tie_band);
    cfg["cap"] = opt.cap;
    j["config"] = cfg;
    if (include_timing) j["runtime_ms"] = r.runtime_ms;
    return j;
}

namespace detail {

// Deterministic parallel map over the (sorted) class list: chunk results are
// merged in input order, so the outcome is independent of the worker count.
template <typename Result, typename Fn>
inline std::vector<Result> map_classes(const std::vector<Graph>& classes, int workers, Fn&& fn) {
    std::vector<Result> out(classes.size());
    if (workers <= 1 || classes.size() < 2) {
        for (std::size_t i = 0; i < classes.size(); ++i) out[i] = fn(classes[i]);
        return out;
    }
    const std::size_t nw = std::min<std::size_t>(workers, classes.size());
    const std::size_t chunk = (classes.size() + nw - 1) / nw;
    std::vector<std::future<void>> futs;
    for (std::size_t w = 0; w < nw; ++w) {
        const std::size_t b = w * chunk, e = std::min(classes.size(), b + chunk);
        if (b >= e) break;
        futs.push_back(std::async(std::launch::async, [&, b, e] {
            for (std::size_t i = b; i < e; ++i) out[i] = fn(classes[i]);
        }));
    }
    for (auto& f : futs) f.get();
    return out;
}

}  // namespace detail

// Scan the non-bipartite {C_3..C_{2k+1}}-free classes on n vertices for the
// lambda1 maximizer. Near-ties within opt.tie_band are collected first so
// floating noise cannot fabricate extra extremal graphs; the enumeration
// already yields one representative per class, so distinct survivors are
// genuinely non-isomorphic.
inline SearchReport extremal_radius_search(int n, int k, const SearchOptions& opt = {}) {
    if (k < 1) throw std::invalid_argument("extremal_radius_search: need k >= 1");
    if (n < 2 * k + 4) throw std::invalid_argument("extremal_radius_search: need n >= 2k+4");
    const auto start = std::chrono::steady_clock::now();
    SearchReport r;
    r.n = n;
    r.k = k;
    r.claim_id = "thm1.4";

    EnumFilter filter;
    filter.forbid_k = k;
    const auto free_classes = enumerate_classes(n, filter, {opt.workers, opt.cap}, opt.cache);
    r.total_canonical = static_cast<long long>(free_classes.size());

    std::vector<Graph> admissible;
    for (const auto& g : free_classes)
        if (!odd_girth(g).bipartite()) admissible.push_back(g);
    r.admissible = static_cast<long long>(admissible.size());

    const auto values = detail::map_classes<double>(admissible, opt.workers, [&](const Graph& g) {
        return spectrum(g, opt.zero_tol).lambda1();
    });
    double best = 0;
    for (double v : values) best = std::max(best, v);
    for (std::size_t i = 0; i < admissible.size(); ++i) {
        if (values[i] < best - opt.tie_band) continue;
        const std::string form = to_graph6(admissible[i]);
        r.extremal_graphs.push_back(form);
        const Certificate c = certify_extremal_radius(admissible[i], k, opt.zero_tol);
        if (c.verdict == Verdict::holds_equality) r.equality_graphs.push_back(form);
        if (c.violated_hard()) {
            r.counterexamples.push_back(form);
            ++r.hard_violations;
        }
    }
    if (!admissible.empty()) r.extremal_value = best;
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start).count();
    return r;
}

// Scan the {C_3..C_{2k+1}}-free classes on n vertices for the thm1.1
// equality cases. The report is self-checking: a graph whose certificate
// verdict disagrees with the blow-up recognizer lands in counterexamples.
inline SearchReport equality_census(int n, int k, const SearchOptions& opt = {}) {
    if (k < 1) throw std::invalid_argument("equality_census: need k >= 1");
    if (n < 2 * k + 1) throw std::invalid_argument("equality_census: need n >= 2k+1");
    if (n > 9) throw std::invalid_argument("equality_census: capped at n <= 9");
    const auto start = std::chrono::steady_clock::now();
    SearchReport r;
    r.n = n;
    r.k = k;
    r.claim_id = "thm1.1";

    EnumFilter filter;
    filter.forbid_k = k;
    const auto classes = enumerate_classes(n, filter, {opt.workers, opt.cap}, opt.cache);
    r.total_canonical = static_cast<long long>(classes.size());
    r.admissible = r.total_canonical;

    struct Row {
        Verdict verdict = Verdict::not_applicable;
        bool recognized = false;
        bool hard_violation = false;
    };
    const auto rows = detail::map_classes<Row>(classes, opt.workers, [&](const Graph& g) {
        const Certificate c = certify_sum_of_powers(g, k, opt.zero_tol);
        return Row{c.verdict, recognize_blowup_base(g).in_family(), c.violated_hard()};
    });
    for (std::size_t i = 0; i < classes.size(); ++i) {
        const std::string form = to_graph6(classes[i]);
        const bool eq = rows[i].verdict == Verdict::holds_equality;
        if (eq) r.equality_graphs.push_back(form);
        if (rows[i].hard_violation || eq != rows[i].recognized) {
            r.counterexamples.push_back(form);
            ++r.hard_violations;
        }
    }
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start).count();
    return r;
}

// Run a registered certifier over every isomorphism class on n vertices
// (the certifier's own gates decide applicability). Counterexamples are
// graphs with a non-probe violated certificate; for proven claims this
// list must come back empty, for probes it is informational.
inline SearchReport counterexample_scan(int n, int k, const std::string& claim_id,
                                        const SearchOptions& opt = {}) {
    if (n > 9) throw std::invalid_argument("counterexample_scan: capped at n <= 9");
    const auto start = std::chrono::steady_clock::now();
    SearchReport r;
    r.n = n;
    r.k = k;
    r.claim_id = claim_id;

    const auto classes = enumerate_classes(n, {}, {opt.workers, opt.cap}, opt.cache);
    r.total_canonical = static_cast<long long>(classes.size());

    struct Row {
        bool applicable = false;
        bool equality = false;
        bool violated_any = false;
        bool violated_hard = false;
    };
    ClaimParams params;
    params.k = k;
    params.zero_tol = opt.zero_tol;
    const auto rows = detail::map_classes<Row>(classes, opt.workers, [&](const Graph& g) {
        Row row;
        for (const Certificate& c : run_claim(claim_id, g, params)) {
            row.applicable |= c.applicable;
            row.equality |= c.verdict == Verdict::holds_equality;
            row.violated_any |= c.verdict == Verdict::violated;
            row.violated_hard |= c.violated_hard();
        }
        return row;
    });
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!rows[i].applicable) continue;
        ++r.admissible;
        const std::string form = to_graph6(classes[i]);
        if (rows[i].equality) r.equality_graphs.push_back(form);
        if (rows[i].violated_any) r.counterexamples.push_back(form);
        if (rows[i].violated_hard) ++r.hard_violations;
    }
    r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start).count();
    return r;
}

}  // namespace speclab

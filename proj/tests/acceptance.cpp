// Acceptance suite: reproduces the headline results exhaustively at small
// order and prints one pass/fail line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "speclab/speclab.hpp"

using namespace speclab;
using std::numbers::pi;

namespace {

constexpr int kWorkers = 2;

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail << (detail.tellp() > 0 ? "; " : "") << "FAILED: " << what;
        }
    }
    void note(const std::string& what) {
        detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
};

EnumerationCache g_cache;

SearchOptions options(EnumerationCache* cache = &g_cache) {
    SearchOptions opt;
    opt.workers = kWorkers;
    opt.cache = cache;
    return opt;
}

// ---------------------------------------------------------------------------

Check criterion1_walk_identity() {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    for (int k = 1; k <= 10; ++k)
        c.require(verify_walk_identity(k), "walk identity at k=" + std::to_string(k));
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    c.require(ms < 1000.0, "runtime under one second");
    c.note("Tr(A^{2k}(C_{2k+3})) = (2k+3) C(2k,k) exactly, k = 1..10, " + std::to_string(static_cast<int>(ms)) + " ms");
    return c;
}

Check criterion2_sum_of_powers_exhaustive() {
    Check c;
    long long scanned = 0, eq_total = 0;
    auto sweep = [&](int k, int n_max, long long expect_top) {
        for (int n = 1; n <= n_max; ++n) {
            const SearchReport scan = counterexample_scan(n, k, "thm1.1", options());
            scanned += scan.total_canonical;
            eq_total += static_cast<long long>(scan.equality_graphs.size());
            c.require(scan.counterexamples.empty(),
                      "violations at n=" + std::to_string(n) + ", k=" + std::to_string(k));
            if (n == n_max)
                c.require(scan.total_canonical == expect_top,
                          "class count at n=" + std::to_string(n_max) + " (got " +
                              std::to_string(scan.total_canonical) + ")");
            if (n >= 2 * k + 1) {
                const SearchReport census = equality_census(n, k, options());
                c.require(census.counterexamples.empty(),
                          "equality set vs blow-up recognizer at n=" + std::to_string(n) +
                              ", k=" + std::to_string(k));
                c.require(census.equality_graphs == scan.equality_graphs,
                          "census and full-universe scan disagree at n=" + std::to_string(n) +
                              ", k=" + std::to_string(k));
            }
        }
    };
    sweep(1, 8, 12346);
    sweep(2, 9, 274668);
    c.note("zero violations over " + std::to_string(scanned) + " scanned classes, " +
           std::to_string(eq_total) + " equality cases all blow-up-confirmed, tolerance 1e-8 relative");
    return c;
}

Check criterion3_extremal_radius() {
    Check c;
    const std::vector<std::pair<int, int>> cases{{6, 1}, {7, 1}, {8, 1}, {9, 1}, {8, 2}, {9, 2}};
    for (const auto [n, k] : cases) {
        const int s = (n - 2 * k + 1) / 2;
        const int t = n - 2 * k + 1 - s;
        const SearchReport r = extremal_radius_search(n, k, options());
        const std::string tag = "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
        c.require(r.counterexamples.empty(), "violations at " + tag);
        c.require(r.extremal_graphs == std::vector<std::string>{canonical_form(rk_bipartite(k, s, t))},
                  "unique maximizer is R_k at " + tag);
        c.require(r.equality_graphs == r.extremal_graphs, "equality clause at " + tag);
        c.require(r.extremal_value &&
                      std::abs(*r.extremal_value - rk_spectral_radius(k, s, t)) <= 1e-9,
                  "extremal value matches the quotient root at " + tag);
    }
    c.note("unique maximizer R_k(K_{floor,ceil}) confirmed for all six (n,k) pairs, radius to 1e-9");
    return c;
}

Check criterion4_nonbipartite_power() {
    Check c;
    std::set<std::string> eq_found;
    for (int n = 1; n <= 8; ++n) {
        const SearchReport scan = counterexample_scan(n, 1, "thm1.3", options());
        c.require(scan.counterexamples.empty(), "violations at n=" + std::to_string(n) + ", k=1");
        eq_found.insert(scan.equality_graphs.begin(), scan.equality_graphs.end());
    }
    std::set<std::string> eq_expected;
    for (int i = 0; i <= 3; ++i)
        eq_expected.insert(canonical_form(disjoint_union(cycle_graph(5), Graph(i))));
    c.require(eq_found == eq_expected, "k=1 equality set is exactly {C_5 + i K_1 : 0 <= i <= 3}");

    for (int n = 1; n <= 9; ++n) {
        const SearchReport scan = counterexample_scan(n, 2, "thm1.3", options());
        c.require(scan.counterexamples.empty(), "violations at n=" + std::to_string(n) + ", k=2");
        c.require(scan.equality_graphs.empty(), "no equality at n=" + std::to_string(n) + ", k=2");
    }

    const Certificate c5 = certify_nonbipartite_power(cycle_graph(5), 1);
    c.require(c5.verdict == Verdict::holds_equality, "C_5 equality certificate");
    c.require(std::abs(*c5.lhs - 4.0) <= 1e-8, "lambda1^2 = 4 on C_5");
    c.require(closed_walks(cycle_graph(5), 2) == 10, "Tr(A^2(C_5)) = 10 exactly");
    c.require(std::abs(*c5.rhs - 4.0) <= 1e-9, "10/2 - (2cos(pi/3))^2 = 4");
    c.note("k=1 equality set = {C_5 + iK_1}, k=2 all strict on n <= 9, C_5 reproduces 4 = 5 - 1");
    return c;
}

Check criterion5_radius_monotonicity() {
    Check c;
    int pairs = 0;
    for (int k = 1; k <= 4; ++k)
        for (int s = 2; s <= 11; ++s)
            for (int t = s + 2; s + t <= 24; ++t) {
                ++pairs;
                std::optional<bool> r;
                try {
                    r = verify_radius_monotonicity(k, s, t);  // throws if the two routes disagree > 1e-9
                } catch (const std::exception& e) {
                    c.require(false, std::string("route disagreement: ") + e.what());
                    continue;
                }
                c.require(r.has_value() && *r,
                          "monotonicity at (k,s,t)=(" + std::to_string(k) + "," + std::to_string(s) + "," +
                              std::to_string(t) + ")");
            }
    c.note("lambda1(R_k(K_{s+1,t-1})) > lambda1(R_k(K_{s,t})) on all " + std::to_string(pairs) +
           " admissible triples, quotient-root and dense routes agreeing to 1e-9");
    return c;
}

Check criterion6_t_tree_spectra() {
    Check c;
    for (int leg = 1; leg <= 20; ++leg) {
        const int n = leg + 3;
        std::vector<double> expected{0.0};
        for (int j = 1; j <= n - 1; ++j) expected.push_back(2 * std::cos((2 * j - 1) * pi / (2 * n - 2)));
        std::sort(expected.begin(), expected.end());
        std::vector<double> got = spectrum(t_tree(1, 1, leg)).values;
        std::sort(got.begin(), got.end());
        double worst = 0;
        for (std::size_t i = 0; i < got.size(); ++i) worst = std::max(worst, std::abs(got[i] - expected[i]));
        c.require(worst <= 1e-9, "T_{1,1," + std::to_string(leg) + "} spectrum (max dev " + std::to_string(worst) + ")");
    }
    const double l122 = spectrum(t_tree(1, 2, 2)).lambda1();
    const double l123 = spectrum(t_tree(1, 2, 3)).lambda1();
    const double l124 = spectrum(t_tree(1, 2, 4)).lambda1();
    c.require(std::abs(l122 - 2 * std::cos(pi / 12)) <= 1e-9, "lambda1(T_{1,2,2}) = 2cos(pi/12)");
    c.require(std::abs(l123 - 2 * std::cos(pi / 18)) <= 1e-9, "lambda1(T_{1,2,3}) = 2cos(pi/18)");
    c.require(l124 < 2 * std::cos(pi / 31) - 1e-9, "lambda1(T_{1,2,4}) < 2cos(pi/31)");
    // The stated strict lower bound is attained with equality: T_{1,2,4} is
    // the E_8 tree and its radius is exactly 2cos(pi/30). We assert the
    // stronger true statement.
    c.require(std::abs(l124 - 2 * std::cos(pi / 30)) <= 1e-9,
              "lambda1(T_{1,2,4}) = 2cos(pi/30) (E_8), so the bracket's lower bound holds as equality");
    c.note("T_{1,1,c} closed form to 1e-9 for c <= 20; radii of T_{1,2,2}, T_{1,2,3} exact; "
           "lambda1(T_{1,2,4}) = 2cos(pi/30) exactly (E_8), within the stated bracket as [2cos(pi/30), 2cos(pi/31))");
    return c;
}

Check criterion7_edge_bound() {
    Check c;
    long long scanned = 0;
    for (int n = 1; n <= 8; ++n) {
        const SearchReport scan = counterexample_scan(n, 1, "thm1.04", options());
        scanned += scan.total_canonical;
        c.require(scan.counterexamples.empty(), "violations at n=" + std::to_string(n) + ", k=1");
    }
    for (int n = 1; n <= 9; ++n) {
        const SearchReport scan = counterexample_scan(n, 2, "thm1.04", options());
        scanned += scan.total_canonical;
        c.require(scan.counterexamples.empty(), "violations at n=" + std::to_string(n) + ", k=2");
    }
    c.require(certify_edge_bound(cycle_graph(5), 1).verdict == Verdict::holds_equality, "equality at (C_5, k=1)");
    c.require(certify_edge_bound(rk_bipartite(1, 3, 3), 1).verdict == Verdict::holds_equality,
              "equality at (R_1(K_{3,3}), k=1)");
    c.note("zero violations over " + std::to_string(scanned) + " scanned classes; both stated equality cases attained");
    return c;
}

Check criterion8_observatory() {
    Check c;
    long long classes = 0, triangle_free = 0, cq_equalities = 0;
    for (int n = 1; n <= 8; ++n) {
        const auto& level = g_cache.level(n, 0, {kWorkers, 10});
        classes += static_cast<long long>(level.size());
        std::vector<std::string> faults(level.size());
        std::vector<long long> tf_count(kWorkers + 1, 0), cq_count(kWorkers + 1, 0);
        auto run = [&](std::size_t lo, std::size_t hi, int slot) {
            for (std::size_t i = lo; i < hi; ++i) {
                const Graph& g = level[i];
                std::ostringstream fault;
                const bool connected = g.is_connected();
                const long long m = g.size();
                const bool complete = m == static_cast<long long>(g.order()) * (g.order() - 1) / 2;
                const bool star = connected && g.order() >= 2 && m == g.order() - 1 &&
                                  g.max_degree() == g.order() - 1;
                if (closed_walks(g, 3) == 0) ++tf_count[slot];
                for (const Certificate& cert : classical_bounds_report(g)) {
                    if (cert.violated_hard()) fault << cert.claim_id << " violated; ";
                    if (cert.claim_id == "hong" && cert.applicable) {
                        const bool eq = cert.verdict == Verdict::holds_equality;
                        if (eq != (complete || star)) fault << "hong equality structure; ";
                    }
                    if (cert.claim_id == "wilf" && complete && cert.verdict != Verdict::holds_equality)
                        fault << "wilf equality on K_n; ";
                    if (cert.claim_id.rfind("chen-qian.l=", 0) == 0 && cert.applicable) {
                        const int l = std::stoi(cert.claim_id.substr(12));
                        const bool eq = cert.verdict == Verdict::holds_equality;
                        const bool structural =
                            l % 2 == 0 && detail::all_nontrivial_components_are_kdd(g, g.max_degree());
                        if (eq != structural) fault << cert.claim_id << " equality structure; ";
                        if (eq) ++cq_count[slot];
                    }
                }
                faults[i] = fault.str();
            }
        };
        auto upper = std::async(std::launch::async, run, level.size() / 2, level.size(), 1);
        run(0, level.size() / 2, 0);
        upper.get();
        for (const auto& f : faults)
            if (!f.empty()) c.require(false, f);
        for (long long x : tf_count) triangle_free += x;
        for (long long x : cq_count) cq_equalities += x;
    }
    c.note("no proven bound violated on " + std::to_string(classes) + " classes (Nosal gated on " +
           std::to_string(triangle_free) + " triangle-free); Hong equality = stars/completes; " +
           std::to_string(cq_equalities) + " Chen-Qian equalities all K_{Delta,Delta} unions at even l");
    return c;
}

Check criterion9_quotient_oracle() {
    Check c;
    std::mt19937 rng(424242);
    int done = 0;
    double worst = 0;
    while (done < 200) {
        const int k = 1 + static_cast<int>(rng() % 4);
        const int s = 2 + static_cast<int>(rng() % 11);
        const int t = s + static_cast<int>(rng() % 9);
        if (s + t + 2 * k - 1 > 40) continue;
        const double root = rk_spectral_radius(k, s, t);
        const double dense = spectrum(rk_bipartite(k, s, t)).lambda1();
        worst = std::max(worst, std::abs(root - dense));
        c.require(std::abs(root - dense) <= 1e-9,
                  "quotient root vs dense at (k,s,t)=(" + std::to_string(k) + "," + std::to_string(s) + "," +
                      std::to_string(t) + ")");
        ++done;
    }
    std::ostringstream w;
    w.precision(3);
    w << std::scientific << worst;
    c.note("200 sampled (k,s,t): largest f_k root matches dense lambda1 to 1e-9 (worst dev " + w.str() + ")");
    return c;
}

Check criterion10_determinism() {
    Check c;
    auto byte_equal = [&](const std::string& what, const std::function<std::string(int)>& render) {
        const std::string a = render(1);
        const std::string b = render(3);
        c.require(a == b, what + " differs between 1 and 3 workers");
    };
    byte_equal("census(8,1)", [](int workers) {
        EnumerationCache cache;
        SearchOptions opt;
        opt.workers = workers;
        opt.cache = &cache;
        return to_json(equality_census(8, 1, opt), opt, false).dump();
    });
    byte_equal("census(9,2)", [](int workers) {
        EnumerationCache cache;
        SearchOptions opt;
        opt.workers = workers;
        opt.cache = &cache;
        return to_json(equality_census(9, 2, opt), opt, false).dump();
    });
    byte_equal("scan(8,1,thm1.1)", [](int workers) {
        EnumerationCache cache;
        SearchOptions opt;
        opt.workers = workers;
        opt.cache = &cache;
        return to_json(counterexample_scan(8, 1, "thm1.1", opt), opt, false).dump();
    });
    byte_equal("scan(9,2,thm1.1)", [](int workers) {
        EnumerationCache cache;
        SearchOptions opt;
        opt.workers = workers;
        opt.cache = &cache;
        return to_json(counterexample_scan(9, 2, "thm1.1", opt), opt, false).dump();
    });
    byte_equal("extremal(9,1)", [](int workers) {
        EnumerationCache cache;
        SearchOptions opt;
        opt.workers = workers;
        opt.cache = &cache;
        return to_json(extremal_radius_search(9, 1, opt), opt, false).dump();
    });
    byte_equal("extremal(8,2)", [](int workers) {
        EnumerationCache cache;
        SearchOptions opt;
        opt.workers = workers;
        opt.cache = &cache;
        return to_json(extremal_radius_search(8, 2, opt), opt, false).dump();
    });
    byte_equal("extremal(9,2)", [](int workers) {
        EnumerationCache cache;
        SearchOptions opt;
        opt.workers = workers;
        opt.cache = &cache;
        return to_json(extremal_radius_search(9, 2, opt), opt, false).dump();
    });
    c.note("criteria 2-3 pipelines re-run with 1 and 3 workers: byte-identical JSON "
           "(runtime_ms telemetry excluded from serialization)");
    return c;
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        std::function<Check()> run;
    };
    const std::vector<Entry> criteria{
        {1, "walk identity", criterion1_walk_identity},
        {2, "thm1.1 sum-of-powers exhaustive", criterion2_sum_of_powers_exhaustive},
        {3, "thm1.4 extremal radius exhaustive", criterion3_extremal_radius},
        {4, "thm1.3 equality set", criterion4_nonbipartite_power},
        {5, "radius monotonicity", criterion5_radius_monotonicity},
        {6, "T-tree spectra and radii", criterion6_t_tree_spectra},
        {7, "thm1.04 edge bound", criterion7_edge_bound},
        {8, "inequality observatory", criterion8_observatory},
        {9, "quotient-matrix oracle", criterion9_quotient_oracle},
        {10, "determinism", criterion10_determinism},
    };
    int failures = 0;
    for (const auto& entry : criteria) {
        Check result;
        try {
            result = entry.run();
        } catch (const std::exception& e) {
            result.ok = false;
            result.detail << "exception: " << e.what();
        }
        if (!result.ok) ++failures;
        std::printf("criterion %2d [%s] %s: %s\n", entry.id, result.ok ? "PASS" : "FAIL", entry.name,
                    result.detail.str().c_str());
        std::fflush(stdout);
    }
    return failures;
}

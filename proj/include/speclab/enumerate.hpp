#pragma once

#include <algorithm>
#include <functional>
#include <future>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "speclab/canonical.hpp"
#include "speclab/cycles.hpp"
#include "speclab/graph.hpp"
#include "speclab/graph6.hpp"

namespace speclab {

struct EnumFilter {
    // Hereditary part, used to prune the augmentation tree: restrict to
    // {C_3,...,C_{2k+1}}-free graphs when forbid_k > 0 (deleting a vertex
    // never creates a short odd cycle, so the pruned tree stays complete).
    int forbid_k = 0;
    // Final per-graph predicate (non-hereditary conditions: connectivity,
    // non-bipartiteness, ...). Applied to the yielded level only.
    std::function<bool(const Graph&)> pred;
};

struct EnumOptions {
    int workers = 1;
    int cap = 10;  // default order cap; CLI may override via SPECTRAL_LAB_MAX_N
};

namespace detail {

// One canonical-augmentation step: all accepted children of `parents`
// (canonical n-1 vertex representatives). A child is kept iff deleting the
// highest canonically-labeled vertex of its canonical form recovers its
// parent, so every isomorphism class surfaces exactly once and no global
// dedup table is needed.
inline std::vector<Graph> extend_level(const std::vector<Graph>& parents, int forbid_k, int workers) {
    if (parents.empty()) return {};
    const int pn = parents.front().order();
    const std::uint32_t subsets = std::uint32_t{1} << pn;

    auto process = [&](std::size_t begin, std::size_t end) {
        std::vector<Graph> accepted;
        std::unordered_set<std::string> seen;
        for (std::size_t pi = begin; pi < end; ++pi) {
            const Graph& parent = parents[pi];
            const std::string parent_form = to_graph6(parent);
            seen.clear();
            for (std::uint32_t mask = 0; mask < subsets; ++mask) {
                Graph child(pn + 1);
                for (int j = 1; j < pn; ++j)
                    for (int i = 0; i < j; ++i)
                        if (parent.has_edge(i, j)) child.add_edge(i, j);
                for (int i = 0; i < pn; ++i)
                    if ((mask >> i) & 1u) child.add_edge(i, pn);
                if (forbid_k > 0 && !is_forbidden_free(child, forbid_k)) continue;
                Graph canon = canonical_graph(child);
                std::string form = to_graph6(canon);
                if (!seen.insert(form).second) continue;
                if (canonical_form(canon.without_last_vertex()) == parent_form)
                    accepted.push_back(std::move(canon));
            }
        }
        return accepted;
    };

    std::vector<Graph> all;
    if (workers <= 1 || parents.size() < 2) {
        all = process(0, parents.size());
    } else {
        const std::size_t nw = std::min<std::size_t>(workers, parents.size());
        std::vector<std::future<std::vector<Graph>>> futs;
        const std::size_t chunk = (parents.size() + nw - 1) / nw;
        for (std::size_t w = 0; w < nw; ++w) {
            const std::size_t b = w * chunk;
            const std::size_t e = std::min(parents.size(), b + chunk);
            if (b >= e) break;
            futs.push_back(std::async(std::launch::async, process, b, e));
        }
        for (auto& f : futs) {
            auto part = f.get();
            all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
        }
    }
    std::sort(all.begin(), all.end(), [](const Graph& a, const Graph& b) {
        return to_graph6(a) < to_graph6(b);
    });
    return all;
}

}  // namespace detail

// Canonical representatives of every isomorphism class at each order,
// shared between searches. Levels are keyed by (order, hereditary filter).
// Not thread-safe; searches parallelize internally instead.
class EnumerationCache {
public:
    const std::vector<Graph>& level(int n, int forbid_k, const EnumOptions& opt) {
        const auto key = std::make_pair(n, forbid_k);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::vector<Graph> result;
        if (n == 0) {
            result = {};
        } else if (n == 1) {
            result = {Graph(1)};
        } else {
            const auto& parents = level(n - 1, forbid_k, opt);
            result = detail::extend_level(parents, forbid_k, opt.workers);
        }
        return memo_.emplace(key, std::move(result)).first->second;
    }

private:
    std::map<std::pair<int, int>, std::vector<Graph>> memo_;
};

// Exactly one representative per isomorphism class on n vertices passing
// the filter, in canonical form, sorted by canonical encoding.
inline std::vector<Graph> enumerate_classes(int n, const EnumFilter& filter = {},
                                            const EnumOptions& opt = {},
                                            EnumerationCache* cache = nullptr) {
    if (n < 0) throw std::invalid_argument("enumerate_classes: negative order");
    if (n > opt.cap)
        throw std::invalid_argument("enumerate_classes: order " + std::to_string(n) +
                                    " exceeds the enumeration cap " + std::to_string(opt.cap));
    EnumerationCache local;
    EnumerationCache& c = cache ? *cache : local;
    std::vector<Graph> out = c.level(n, filter.forbid_k, opt);
    if (filter.pred) {
        std::vector<Graph> kept;
        for (auto& g : out)
            if (filter.pred(g)) kept.push_back(std::move(g));
        out = std::move(kept);
    }
    return out;
}

}  // namespace speclab

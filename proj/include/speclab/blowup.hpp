#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "speclab/canonical.hpp"
#include "speclab/exact.hpp"
#include "speclab/graph.hpp"
#include "speclab/isomorphism.hpp"

namespace speclab {

// The four blow-up bases of the sum-of-powers equality characterization,
// plus the two non-members: `other` for graphs that are proper blow-ups of
// some base outside the family, `none` for twin-free graphs outside it.
enum class BlowupBaseKind { p2_k1, two_p2_k1, p4_k1, p5_k1, other, none };

inline const char* blowup_base_name(BlowupBaseKind k) {
    switch (k) {
        case BlowupBaseKind::p2_k1: return "P2+K1";
        case BlowupBaseKind::two_p2_k1: return "2P2+K1";
        case BlowupBaseKind::p4_k1: return "P4+K1";
        case BlowupBaseKind::p5_k1: return "P5+K1";
        case BlowupBaseKind::other: return "other";
        case BlowupBaseKind::none: return "none";
    }
    return "?";
}

// Base graph with its documented labeling (K_1 class last). Sizes returned
// by recognize_blowup_base() line up with these labels.
inline Graph blowup_base_graph(BlowupBaseKind k) {
    switch (k) {
        case BlowupBaseKind::p2_k1: return disjoint_union(path_graph(2), Graph(1));
        case BlowupBaseKind::two_p2_k1:
            return disjoint_union(disjoint_union(path_graph(2), path_graph(2)), Graph(1));
        case BlowupBaseKind::p4_k1: return disjoint_union(path_graph(4), Graph(1));
        case BlowupBaseKind::p5_k1: return disjoint_union(path_graph(5), Graph(1));
        default: throw std::invalid_argument("blowup_base_graph: kind has no base graph");
    }
}

struct BlowupBase {
    BlowupBaseKind kind = BlowupBaseKind::none;
    std::vector<int> class_sizes;  // per base vertex, K_1 class last

    bool in_family() const {
        return kind != BlowupBaseKind::other && kind != BlowupBaseKind::none;
    }
};

// Computes twin classes (identical open neighborhoods; such vertices are
// never adjacent), contracts each class to one vertex, strips the isolated
// class, and matches the residue against {P_2, 2P_2, P_4, P_5}. The result
// is cross-validated by blow-up reconstruction and by the exact rank
// (rank 2 for P2+K1 blow-ups with edges, rank 4 for the other three).
inline BlowupBase recognize_blowup_base(const Graph& g) {
    const int n = g.order();
    if (g.size() == 0) {
        // Edgeless graphs are blow-ups of P2+K1 with both edge classes empty.
        return {BlowupBaseKind::p2_k1, {0, 0, n}};
    }

    // Twin classes keyed by open neighborhood, ordered by smallest member.
    std::map<std::vector<int>, std::vector<int>> by_nbhd;
    for (int v = 0; v < n; ++v) by_nbhd[g.neighbors(v)].push_back(v);
    std::vector<std::vector<int>> classes;
    int isolated = 0;
    for (auto& [nb, verts] : by_nbhd) {
        if (nb.empty())
            isolated = static_cast<int>(verts.size());
        else
            classes.push_back(verts);
    }
    std::sort(classes.begin(), classes.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });

    const int r = static_cast<int>(classes.size());
    Graph residue(r);
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j)
            if (g.has_edge(classes[i].front(), classes[j].front())) residue.add_edge(i, j);

    auto sizes_of = [&](int i) { return static_cast<int>(classes[i].size()); };
    const bool nontrivial = isolated > 0 ||
        std::any_of(classes.begin(), classes.end(), [](const auto& c) { return c.size() > 1; });

    BlowupBase result;
    const long long rm = residue.size();
    if (r == 2 && rm == 1) {
        result.kind = BlowupBaseKind::p2_k1;
        int a = sizes_of(0), b = sizes_of(1);
        if (a > b) std::swap(a, b);
        result.class_sizes = {a, b, isolated};
    } else if (r == 4 && rm == 2 && residue.max_degree() == 1) {
        result.kind = BlowupBaseKind::two_p2_k1;
        // Collect the two edges with endpoint sizes sorted, edges sorted.
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                if (residue.has_edge(i, j)) {
                    int a = sizes_of(i), b = sizes_of(j);
                    if (a > b) std::swap(a, b);
                    edges.emplace_back(a, b);
                }
        std::sort(edges.begin(), edges.end());
        result.class_sizes = {edges[0].first, edges[0].second, edges[1].first, edges[1].second, isolated};
    } else if ((r == 4 || r == 5) && rm == r - 1) {
        // Candidate path residue: trace it from a degree-1 endpoint.
        std::vector<int> ends;
        bool is_path = true;
        for (int i = 0; i < r; ++i) {
            const int d = residue.degree(i);
            if (d == 1) ends.push_back(i);
            else if (d != 2) is_path = false;
        }
        if (is_path && ends.size() == 2 && residue.is_connected()) {
            std::vector<int> walk{ends.front()};
            int prev = -1;
            while (static_cast<int>(walk.size()) < r) {
                for (int u = 0; u < r; ++u)
                    if (u != prev && u != walk.back() && residue.has_edge(walk.back(), u)) {
                        prev = walk.back();
                        walk.push_back(u);
                        break;
                    }
            }
            std::vector<int> fwd, rev;
            for (int v : walk) fwd.push_back(sizes_of(v));
            rev.assign(fwd.rbegin(), fwd.rend());
            result.kind = r == 4 ? BlowupBaseKind::p4_k1 : BlowupBaseKind::p5_k1;
            result.class_sizes = std::min(fwd, rev);
            result.class_sizes.push_back(isolated);
        }
    }

    if (!result.in_family()) {
        result.kind = nontrivial ? BlowupBaseKind::other : BlowupBaseKind::none;
        result.class_sizes.clear();
        return result;
    }

    // Reconstruction check: the recognized base and sizes must rebuild the
    // input graph up to isomorphism.
    const Graph rebuilt = blow_up(blowup_base_graph(result.kind), result.class_sizes);
    const bool same = n <= 12 ? canonical_form(rebuilt) == canonical_form(g)
                              : is_isomorphic(rebuilt, g);
    if (!same) throw std::logic_error("recognize_blowup_base: reconstruction mismatch");

    const int rank = rank_exact(g);
    if (result.kind == BlowupBaseKind::p2_k1 ? rank != 2 : rank != 4)
        throw std::logic_error("recognize_blowup_base: rank cross-validation failed");
    return result;
}

}  // namespace speclab

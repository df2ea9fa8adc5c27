#ifndef ARBOR_DFS_HPP
#define ARBOR_DFS_HPP

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "arbor/arborescence.hpp"
#include "arbor/digraph.hpp"
#include "arbor/normality.hpp"

namespace arbor {

/// Depth-first search from root along out-edges. Unvisited out-neighbours are
/// explored in decreasing priority; `preference` lists vertices from highest to
/// lowest priority, unlisted vertices rank below all listed ones by id.
inline Arborescence dfs_build(const Digraph& d, VertexId root, std::span<const VertexId> preference = {}) {
    if (!d.contains(root)) {
        throw Error(ErrorCode::RootMissing, "root " + std::to_string(root));
    }
    const std::size_t n = d.vertex_count();
    std::vector<std::size_t> priority(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        priority[v] = n - v; // unlisted: smaller id first, below listed vertices
    }
    for (std::size_t i = 0; i < preference.size(); ++i) {
        if (preference[i] < n) {
            priority[preference[i]] = 2 * n - i;
        }
    }
    std::vector<std::vector<VertexId>> explore(n);
    for (VertexId v = 0; v < n; ++v) {
        auto out = d.out(v);
        explore[v].assign(out.begin(), out.end());
        std::sort(explore[v].begin(), explore[v].end(),
                  [&](VertexId a, VertexId b) { return priority[a] > priority[b]; });
    }

    std::vector<VertexId> parent(n, kNoVertex);
    std::vector<char> visited(n, 0);
    std::vector<std::pair<VertexId, std::size_t>> frames{{root, 0}};
    visited[root] = 1;
    while (!frames.empty()) {
        auto& [v, pos] = frames.back();
        if (pos < explore[v].size()) {
            VertexId w = explore[v][pos++];
            if (!visited[w]) {
                visited[w] = 1;
                parent[w] = v;
                frames.emplace_back(w, 0);
            }
            continue;
        }
        frames.pop_back();
    }
    return Arborescence::from_parents(root, parent);
}

/// A spanning arborescence of the part of d reachable from its root is a DFS
/// tree exactly when it is normal there.
inline bool is_dfs_tree(const Digraph& d, const Arborescence& t) {
    t.require_within(d);
    const VertexId roots[] = {t.root()};
    const auto reach = reachable_from(d, roots);
    VertexSet reachable;
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        if (reach[v]) {
            reachable.push_back(v);
        }
    }
    if (reachable != t.vertices()) {
        throw Error(ErrorCode::NotSpanningReachableSet,
                    "tree has " + std::to_string(t.size()) + " vertices, root reaches " +
                        std::to_string(reachable.size()));
    }
    return is_normal(induced(d, reachable), t).normal;
}

} // namespace arbor

#endif

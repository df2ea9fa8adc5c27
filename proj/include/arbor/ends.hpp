#ifndef ARBOR_ENDS_HPP
#define ARBOR_ENDS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arbor/arborescence.hpp"
#include "arbor/digraph.hpp"
#include "arbor/error.hpp"
#include "arbor/family.hpp"
#include "arbor/normality.hpp"

namespace arbor {

using VertexPredicate = std::function<bool(VertexId)>;

/// Position of an end (or tree ray) relative to a separator X inside a window.
struct Thread {
    /// strong component of window - X holding the ray tail; nullopt when the
    /// whole visible prefix lies in X
    std::optional<std::size_t> component;
    /// the component meets the clipped boundary of the window
    bool approximate = false;
    /// every visible tail vertex lies in that component
    bool consistent = true;
};

/// Tail of a ray prefix after its last vertex in X.
inline std::vector<VertexId> tail_after(const std::vector<VertexId>& prefix, const std::vector<char>& in_x) {
    std::size_t start = 0;
    for (std::size_t i = 0; i < prefix.size(); ++i) {
        if (in_x[prefix[i]]) {
            start = i + 1;
        }
    }
    return {prefix.begin() + static_cast<std::ptrdiff_t>(start), prefix.end()};
}

inline Thread thread_of(const SCCPartition& scc, const std::vector<VertexId>& prefix, const std::vector<char>& in_x,
                        const std::vector<char>& on_boundary) {
    Thread t;
    const auto tail = tail_after(prefix, in_x);
    if (tail.empty()) {
        return t;
    }
    t.component = scc.label(tail.front());
    for (VertexId v : tail) {
        if (scc.label(v) != *t.component) {
            t.consistent = false;
        }
    }
    for (VertexId v : scc.members(*t.component)) {
        if (on_boundary[v]) {
            t.approximate = true;
            break;
        }
    }
    return t;
}

/// Strong components of a window minus each separator X_0, ..., X_depth.
struct ComponentTower {
    std::size_t depth = 0;
    std::size_t window_size = 0;
    std::vector<SCCPartition> levels;
    std::vector<char> boundary;

    std::vector<char> separator_mask(std::size_t n) const {
        std::vector<char> mask(window_size, 0);
        for (std::size_t i = 0; i < std::min(n, window_size); ++i) {
            mask[i] = 1;
        }
        return mask;
    }

    /// components of window - X_n that contain no clipped vertex
    std::size_t interior_components(std::size_t n) const {
        std::size_t count = 0;
        for (const auto& c : levels[n].components) {
            bool touches = std::any_of(c.begin(), c.end(), [&](VertexId v) { return boundary[v] != 0; });
            count += touches ? 0 : 1;
        }
        return count;
    }
};

inline ComponentTower component_tower(const Digraph& window, const VertexSet& boundary, std::size_t depth) {
    ComponentTower tower;
    tower.depth = depth;
    tower.window_size = window.vertex_count();
    tower.boundary = membership(window.vertex_count(), boundary);
    for (std::size_t n = 0; n <= depth; ++n) {
        VertexSet x;
        for (std::size_t i = 0; i < std::min(n, window.vertex_count()); ++i) {
            x.push_back(i);
        }
        tower.levels.push_back(strong_components(window, x));
    }
    return tower;
}

inline ComponentTower component_tower(const Truncation& w) { return component_tower(w.window, w.boundary, w.depth); }

struct SolidityProbe {
    std::size_t depth = 0;
    std::optional<std::size_t> declared_bound;
    /// per n: all components, and those not touching the boundary
    std::vector<std::size_t> components;
    std::vector<std::size_t> interior;
    bool within_bound = true;
};

/// Compares component counts of the depth-d window against the declared bound.
inline SolidityProbe solidity_probe(const LazyFamily& f, std::size_t depth) {
    const Truncation w = truncate(f, depth);
    const ComponentTower tower = component_tower(w);
    SolidityProbe probe;
    probe.depth = depth;
    probe.declared_bound = f.component_bound();
    for (std::size_t n = 0; n <= depth; ++n) {
        probe.components.push_back(tower.levels[n].count());
        probe.interior.push_back(tower.interior_components(n));
        if (!probe.declared_bound || probe.interior.back() > *probe.declared_bound) {
            probe.within_bound = false;
        }
    }
    return probe;
}

struct SeparatorRow {
    std::size_t n = 0;
    std::size_t components = 0;
    /// indexed like EndsReport::ends
    std::vector<Thread> threads;
};

struct EndsReport {
    std::string family;
    std::size_t depth = 0;
    std::size_t slack = 0;
    std::size_t window_size = 0;
    std::vector<std::size_t> ends;
    std::vector<std::string> end_names;
    std::vector<SeparatorRow> rows;
    /// classes of visible ends separated by some X_n, n <= depth
    std::size_t thread_count = 0;
    /// thread_count recomputed at every depth 1..depth (index 0 is depth 1)
    std::vector<std::size_t> thread_count_by_depth;
    /// smallest depth from which the thread count no longer changes
    std::size_t stabilization_depth = 0;
    std::optional<std::size_t> oracle_count;
    bool agrees = false;
    bool tails_consistent = true;
    /// oracle-free guess: components of the window minus X_depth that touch the boundary
    std::size_t oracle_free_candidates = 0;
};

namespace detail {

struct ThreadTable {
    std::vector<std::size_t> ends;
    std::vector<std::vector<VertexId>> prefixes;
    ComponentTower tower;
    std::vector<std::vector<Thread>> threads;  // [n][end]
};

inline ThreadTable thread_table(const LazyFamily& f, std::size_t depth) {
    ThreadTable table;
    const Truncation w = truncate(f, depth);
    const EndOracle oracle = f.oracle();
    table.ends = oracle.ends.visible(w.size());
    for (std::size_t e : table.ends) {
        table.prefixes.push_back(oracle.ends.prefix(e, w.size()));
    }
    table.tower = component_tower(w);
    for (std::size_t n = 0; n <= depth; ++n) {
        const auto mask = table.tower.separator_mask(n);
        std::vector<Thread> row;
        for (const auto& prefix : table.prefixes) {
            row.push_back(thread_of(table.tower.levels[n], prefix, mask, table.tower.boundary));
        }
        table.threads.push_back(std::move(row));
    }
    return table;
}

/// Number of classes of ends under "never separated by a tested X_n".
inline std::size_t count_threads(const ThreadTable& table) {
    const std::size_t m = table.ends.size();
    std::vector<std::size_t> cls(m);
    for (std::size_t i = 0; i < m; ++i) {
        cls[i] = i;
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            bool separated = false;
            for (const auto& row : table.threads) {
                if (row[i].component && row[j].component && *row[i].component != *row[j].component) {
                    separated = true;
                    break;
                }
            }
            if (!separated) {
                cls[i] = cls[j];
                break;
            }
        }
    }
    std::vector<std::size_t> distinct = cls;
    std::sort(distinct.begin(), distinct.end());
    return static_cast<std::size_t>(std::unique(distinct.begin(), distinct.end()) - distinct.begin());
}

} // namespace detail

inline EndsReport ends_approx(const LazyFamily& f, std::size_t depth) {
    if (depth == 0) {
        throw Error(ErrorCode::BadParameters, "depth must be at least 1");
    }
    EndsReport report;
    report.family = f.name();
    report.depth = depth;
    report.slack = f.slack();
    const auto table = detail::thread_table(f, depth);
    report.window_size = table.tower.window_size;
    report.ends = table.ends;
    const EndOracle oracle = f.oracle();
    for (std::size_t e : table.ends) {
        report.end_names.push_back(oracle.ends.name(e));
    }
    for (std::size_t n = 0; n <= depth; ++n) {
        SeparatorRow row;
        row.n = n;
        row.components = table.tower.levels[n].count();
        row.threads = table.threads[n];
        for (const auto& t : row.threads) {
            report.tails_consistent = report.tails_consistent && t.consistent;
        }
        report.rows.push_back(std::move(row));
    }
    report.thread_count = detail::count_threads(table);
    for (std::size_t dd = 1; dd <= depth; ++dd) {
        report.thread_count_by_depth.push_back(dd == depth ? report.thread_count
                                                           : detail::count_threads(detail::thread_table(f, dd)));
    }
    report.stabilization_depth = depth;
    while (report.stabilization_depth > 1 &&
           report.thread_count_by_depth[report.stabilization_depth - 2] == report.thread_count) {
        --report.stabilization_depth;
    }
    report.oracle_count = table.ends.size();
    report.agrees = report.thread_count == table.ends.size();
    for (const auto& c : table.tower.levels[depth].components) {
        if (std::any_of(c.begin(), c.end(), [&](VertexId v) { return table.tower.boundary[v] != 0; })) {
            ++report.oracle_free_candidates;
        }
    }
    return report;
}

inline void require_end(const EndOracle& oracle, std::size_t end, std::size_t bound) {
    const auto vis = oracle.ends.visible(bound);
    if (std::find(vis.begin(), vis.end(), end) == vis.end()) {
        throw Error(ErrorCode::UnknownEnd, "end " + std::to_string(end) + " is not visible in the window");
    }
}

/// True iff C(X_n, omega) meets U in the window for every n <= depth at which
/// the end is still visible.
inline bool closure_contains(const LazyFamily& f, const VertexPredicate& u, std::size_t end, std::size_t depth) {
    const Truncation w = truncate(f, depth);
    const EndOracle oracle = f.oracle();
    require_end(oracle, end, w.size());
    const auto prefix = oracle.ends.prefix(end, w.size());
    const auto tower = component_tower(w);
    for (std::size_t n = 0; n <= depth; ++n) {
        const Thread t = thread_of(tower.levels[n], prefix, tower.separator_mask(n), tower.boundary);
        if (!t.component) {
            continue;
        }
        const auto& members = tower.levels[n].members(*t.component);
        if (std::none_of(members.begin(), members.end(), u)) {
            return false;
        }
    }
    return true;
}

struct TracedRay {
    std::size_t end = 0;
    std::string name;
    bool in_closure = false;
    std::vector<VertexId> ray;
    /// tree ray of the presentation whose window prefix is the traced ray
    std::optional<std::size_t> tree_ray;
    std::size_t ambiguous_steps = 0;
    /// C(X_n, omega) meets the ray for every tested n
    bool represents = false;
};

struct FaithfulReport {
    std::size_t depth = 0;
    std::size_t window_size = 0;
    std::vector<TracedRay> rays;
    std::size_t ambiguous = 0;
    bool distinct_rays = true;
    bool separated = true;
    std::vector<std::string> problems;

    bool ok() const { return problems.empty(); }
};

namespace detail {

/// Follows omega up the tree: from x, move to the unique child whose up-closure
/// meets the component of omega in window - down(x).
inline TracedRay trace_end(const Digraph& window, const Arborescence& t, const std::vector<VertexId>& prefix) {
    TracedRay traced;
    VertexId x = t.root();
    traced.ray.push_back(x);
    const std::vector<char> no_boundary(window.vertex_count(), 0);
    while (true) {
        const auto chain = t.down_closure(x);
        const auto scc = strong_components(window, chain);
        const auto in_x = membership(window.vertex_count(), chain);
        const Thread th = thread_of(scc, prefix, in_x, no_boundary);
        if (!th.component) {
            break;
        }
        std::vector<VertexId> qualifying;
        for (VertexId c : t.children(x)) {
            for (VertexId y : t.up_closure(c)) {
                if (!scc.is_deleted(y) && scc.label(y) == *th.component) {
                    qualifying.push_back(c);
                    break;
                }
            }
        }
        if (qualifying.empty()) {
            break;
        }
        if (qualifying.size() > 1) {
            ++traced.ambiguous_steps;
        }
        x = qualifying.front();
        traced.ray.push_back(x);
    }
    return traced;
}

inline std::optional<std::size_t> match_tree_ray(const TreePresentation& p, const std::vector<VertexId>& ray,
                                                 std::size_t bound) {
    std::optional<std::size_t> best;
    std::size_t best_gap = 0;
    bool tie = false;
    for (std::size_t r : p.rays.visible(bound)) {
        const auto prefix = p.rays.prefix(r, bound);
        if (prefix.size() < ray.size() || !std::equal(ray.begin(), ray.end(), prefix.begin())) {
            continue;
        }
        const std::size_t gap = prefix.size() - ray.size();
        if (!best || gap < best_gap) {
            best = r;
            best_gap = gap;
            tie = false;
        } else if (gap == best_gap) {
            tie = true;
        }
    }
    if (tie) {
        return std::nullopt;
    }
    return best;
}

} // namespace detail

/// Arborescence of a presentation inside the depth-d window of f, checked to
/// be normal there.
inline Arborescence normal_window_tree(const LazyFamily& f, const TreePresentation& p, const Truncation& w) {
    Arborescence t = p.window(w.size());
    t.require_within(w.window);
    if (!is_normal(induced(w.window, t.vertices()), t).normal) {
        throw Error(ErrorCode::NotNormalAtDepth, p.name + " is not normal in the window of " + f.name() + " at depth " +
                                                     std::to_string(w.depth));
    }
    return t;
}

inline FaithfulReport end_faithful_check(const LazyFamily& f, const TreePresentation& p, const VertexPredicate& u,
                                         std::size_t depth) {
    const Truncation w = truncate(f, depth);
    const Arborescence t = normal_window_tree(f, p, w);
    const EndOracle oracle = f.oracle();
    const auto tower = component_tower(w);
    FaithfulReport report;
    report.depth = depth;
    report.window_size = w.size();

    for (std::size_t e : oracle.ends.visible(w.size())) {
        const auto prefix = oracle.ends.prefix(e, w.size());
        bool in_closure = true;
        for (std::size_t n = 0; n <= depth && in_closure; ++n) {
            const Thread th = thread_of(tower.levels[n], prefix, tower.separator_mask(n), tower.boundary);
            if (th.component) {
                const auto& members = tower.levels[n].members(*th.component);
                in_closure = std::any_of(members.begin(), members.end(), u);
            }
        }
        if (!in_closure) {
            continue;
        }
        TracedRay traced = detail::trace_end(w.window, t, prefix);
        traced.end = e;
        traced.name = oracle.ends.name(e);
        traced.in_closure = true;
        traced.tree_ray = detail::match_tree_ray(p, traced.ray, w.size());
        traced.represents = true;
        const auto on_ray = membership(w.size(), traced.ray);
        for (std::size_t n = 0; n <= depth; ++n) {
            const Thread th = thread_of(tower.levels[n], prefix, tower.separator_mask(n), tower.boundary);
            if (!th.component) {
                continue;
            }
            const auto& members = tower.levels[n].members(*th.component);
            if (std::none_of(members.begin(), members.end(), [&](VertexId v) { return on_ray[v] != 0; })) {
                traced.represents = false;
            }
        }
        report.ambiguous += traced.ambiguous_steps;
        if (traced.ambiguous_steps > 0) {
            report.problems.push_back("ambiguous child while tracing " + traced.name);
        }
        if (!traced.represents) {
            report.problems.push_back("traced ray does not represent " + traced.name);
        }
        if (traced.ray.size() < 2) {
            report.problems.push_back("no ray traced for " + traced.name);
        }
        report.rays.push_back(std::move(traced));
    }

    // distinct ends: distinct rays whose tails lie in different components once
    // the common initial segment is deleted
    for (std::size_t i = 0; i < report.rays.size(); ++i) {
        for (std::size_t j = i + 1; j < report.rays.size(); ++j) {
            const auto& a = report.rays[i];
            const auto& b = report.rays[j];
            if (a.ray == b.ray) {
                report.distinct_rays = false;
                report.problems.push_back(a.name + " and " + b.name + " trace the same ray");
                continue;
            }
            VertexSet common;
            for (std::size_t k = 0; k < std::min(a.ray.size(), b.ray.size()) && a.ray[k] == b.ray[k]; ++k) {
                common.push_back(a.ray[k]);
            }
            const auto scc = strong_components(w.window, common);
            const auto in_x = membership(w.size(), common);
            const Thread ta = thread_of(scc, oracle.ends.prefix(a.end, w.size()), in_x, tower.boundary);
            const Thread tb = thread_of(scc, oracle.ends.prefix(b.end, w.size()), in_x, tower.boundary);
            if (!ta.component || !tb.component || *ta.component == *tb.component) {
                report.separated = false;
                report.problems.push_back(a.name + " and " + b.name + " are not separated by their common prefix");
            }
        }
    }
    return report;
}

enum class StarCombKind { CombPrefix, StarPrefix, Exhausted };

inline std::string_view to_string(StarCombKind k) {
    switch (k) {
    case StarCombKind::CombPrefix: return "CombPrefix";
    case StarCombKind::StarPrefix: return "StarPrefix";
    case StarCombKind::Exhausted: return "Exhausted";
    }
    return "?";
}

/// Undirected comb or subdivided star. For a comb, `core` is the spine; for a
/// star it holds the centre only. Each path starts on the core and ends in W.
struct StarCombResult {
    StarCombKind kind = StarCombKind::Exhausted;
    std::vector<VertexId> core;
    std::vector<std::vector<VertexId>> paths;
    VertexSet ends_in_w;
};

/// Star-comb extraction in the undirected tree underlying a window.
inline StarCombResult star_comb(const LazyFamily& f, const VertexPredicate& w_set, std::size_t k, std::size_t depth) {
    const Truncation w = truncate(f, depth);
    const std::size_t n = w.size();
    std::vector<std::vector<VertexId>> adj(n);
    std::size_t undirected_edges = 0;
    for (const auto& [a, b] : w.window.edges()) {
        if (a < b || !w.window.has_edge(b, a)) {
            adj[a].push_back(b);
            adj[b].push_back(a);
            ++undirected_edges;
        }
    }
    std::size_t pieces = 0;
    {
        std::vector<char> seen(n, 0);
        for (VertexId s = 0; s < n; ++s) {
            if (seen[s]) continue;
            ++pieces;
            std::vector<VertexId> stack{s};
            seen[s] = 1;
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                for (VertexId x : adj[v]) {
                    if (!seen[x]) {
                        seen[x] = 1;
                        stack.push_back(x);
                    }
                }
            }
        }
    }
    if (undirected_edges + pieces != n) {
        throw Error(ErrorCode::NotATree, f.name() + " window is not a forest");
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
    }

    StarCombResult result;
    if (k == 0) {
        return result;
    }
    // root at s; has_w[v]: subtree of v meets W
    auto rooted = [&](VertexId s, std::vector<VertexId>& parent, std::vector<char>& has_w) {
        parent.assign(n, kNoVertex);
        has_w.assign(n, 0);
        std::vector<VertexId> order{s};
        std::vector<char> seen(n, 0);
        seen[s] = 1;
        for (std::size_t i = 0; i < order.size(); ++i) {
            for (VertexId x : adj[order[i]]) {
                if (!seen[x]) {
                    seen[x] = 1;
                    parent[x] = order[i];
                    order.push_back(x);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            if (w_set(*it)) has_w[*it] = 1;
            if (parent[*it] != kNoVertex && has_w[*it]) has_w[parent[*it]] = 1;
        }
        return order;
    };
    auto descend = [&](VertexId c, const std::vector<VertexId>& parent, const std::vector<char>& has_w,
                       std::vector<VertexId> path) {
        // nearest W vertex below c (breadth first, smallest id)
        std::vector<VertexId> from(n, kNoVertex);
        std::vector<VertexId> queue{c};
        from[c] = c;
        for (std::size_t i = 0; i < queue.size(); ++i) {
            VertexId v = queue[i];
            if (w_set(v)) {
                std::vector<VertexId> tail;
                for (VertexId x = v; x != c; x = from[x]) tail.push_back(x);
                tail.push_back(c);
                std::reverse(tail.begin(), tail.end());
                path.insert(path.end(), tail.begin(), tail.end());
                return path;
            }
            for (VertexId x : adj[v]) {
                if (parent[x] == v && has_w[x] && from[x] == kNoVertex) {
                    from[x] = v;
                    queue.push_back(x);
                }
            }
        }
        return path;
    };

    std::vector<VertexId> parent;
    std::vector<char> has_w;
    for (VertexId s = 0; s < n; ++s) {
        rooted(s, parent, has_w);
        for (VertexId e = 0; e < n; ++e) {
            if (e != s && parent[e] == kNoVertex) continue;
            std::vector<VertexId> spine;
            for (VertexId x = e; x != kNoVertex; x = parent[x]) spine.push_back(x);
            std::reverse(spine.begin(), spine.end());
            const auto on_spine = membership(n, spine);
            std::vector<std::vector<VertexId>> paths;
            for (VertexId v : spine) {
                if (w_set(v)) {
                    paths.push_back({v});
                    continue;
                }
                for (VertexId c : adj[v]) {
                    if (!on_spine[c] && parent[c] == v && has_w[c]) {
                        paths.push_back(descend(c, parent, has_w, {v}));
                        break;
                    }
                }
            }
            if (paths.size() >= k) {
                paths.resize(k);
                result.kind = StarCombKind::CombPrefix;
                result.core = spine;
                for (auto& p : paths) result.ends_in_w.push_back(p.back());
                result.paths = std::move(paths);
                result.ends_in_w = normalized(result.ends_in_w);
                return result;
            }
        }
    }
    for (VertexId c = 0; c < n; ++c) {
        rooted(c, parent, has_w);
        std::vector<std::vector<VertexId>> paths;
        for (VertexId x : adj[c]) {
            if (has_w[x]) {
                paths.push_back(descend(x, parent, has_w, {c}));
            }
            if (paths.size() == k) break;
        }
        if (paths.size() >= k) {
            result.kind = StarCombKind::StarPrefix;
            result.core = {c};
            for (auto& p : paths) result.ends_in_w.push_back(p.back());
            result.paths = std::move(paths);
            result.ends_in_w = normalized(result.ends_in_w);
            return result;
        }
    }
    return result;
}

struct NecklacePrefix {
    std::size_t end = 0;
    std::vector<VertexSet> beads;
    /// links[i] joins bead i to bead i+1; back_links[i] joins bead i+1 to bead i
    std::vector<DirectedPath> links;
    std::vector<DirectedPath> back_links;
    /// vertices declared to send a limit edge to the end, with the beads they reach
    std::vector<VertexId> attached_vertices;
    bool attachments_verified = true;
};

/// First k beads of a necklace along the oracle ray of the end: singleton beads
/// on the ray, forward links along the ray and backward links found in the
/// window avoiding the other beads.
inline NecklacePrefix necklace_prefix(const LazyFamily& f, std::size_t end, std::size_t k, std::size_t depth) {
    const Truncation w = truncate(f, depth);
    const EndOracle oracle = f.oracle();
    require_end(oracle, end, w.size());
    const auto prefix = oracle.ends.prefix(end, w.size());
    if (prefix.size() < k || k == 0) {
        throw Error(ErrorCode::NoNecklaceInWindow, "ray prefix has " + std::to_string(prefix.size()) + " vertices");
    }
    NecklacePrefix result;
    result.end = end;
    for (std::size_t i = 0; i < k; ++i) {
        result.beads.push_back({prefix[i]});
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        std::vector<VertexId> others;
        for (std::size_t j = 0; j < k; ++j) {
            if (j != i && j != i + 1) others.push_back(prefix[j]);
        }
        auto forward = find_path(w.window, std::array<VertexId, 1>{prefix[i]}, std::array<VertexId, 1>{prefix[i + 1]},
                                 others);
        auto backward = find_path(w.window, std::array<VertexId, 1>{prefix[i + 1]}, std::array<VertexId, 1>{prefix[i]},
                                  others);
        if (!forward || !backward) {
            throw Error(ErrorCode::NoNecklaceInWindow,
                        "no link between beads " + std::to_string(i) + " and " + std::to_string(i + 1));
        }
        result.links.push_back(*forward);
        result.back_links.push_back(*backward);
    }
    for (const auto& le : oracle.limit_edges) {
        if (le.kind != LimitKind::VertexEnd || le.to != end) {
            continue;
        }
        result.attached_vertices.push_back(le.from);
        for (const auto& bead : result.beads) {
            bool hit = std::any_of(bead.begin(), bead.end(), [&](VertexId v) { return w.window.has_edge(le.from, v); });
            result.attachments_verified = result.attachments_verified && hit;
        }
    }
    return result;
}

} // namespace arbor

#endif

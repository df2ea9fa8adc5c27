#ifndef ARBOR_DIGRAPH_HPP
#define ARBOR_DIGRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "arbor/error.hpp"

namespace arbor {

/// Dense vertex index. The numeric order is the canonical tie-break order.
using VertexId = std::size_t;
using Edge = std::pair<VertexId, VertexId>;
/// Sorted, duplicate-free list of vertices.
using VertexSet = std::vector<VertexId>;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

inline VertexSet normalized(VertexSet set) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

inline std::vector<char> membership(std::size_t universe, std::span<const VertexId> set) {
    std::vector<char> mask(universe, 0);
    for (VertexId v : set) {
        if (v < universe) {
            mask[v] = 1;
        }
    }
    return mask;
}

inline std::string edge_string(VertexId tail, VertexId head) {
    return "(" + std::to_string(tail) + "," + std::to_string(head) + ")";
}

/// Finite simple digraph on the vertices 0..n-1. Loops and parallel edges are
/// rejected, inverse pairs are allowed. Adjacency lists are kept sorted.
class Digraph {
public:
    Digraph() = default;

    explicit Digraph(std::size_t vertex_count)
        : out_(vertex_count), in_(vertex_count), labels_(identity_labels(vertex_count)) {}

    Digraph(std::size_t vertex_count, std::span<const Edge> edges) : Digraph(vertex_count) {
        for (const auto& [tail, head] : edges) {
            if (tail >= vertex_count || head >= vertex_count) {
                throw Error(ErrorCode::UnknownVertex, "edge " + edge_string(tail, head));
            }
            if (tail == head) {
                throw Error(ErrorCode::LoopEdge, "edge " + edge_string(tail, head));
            }
            out_[tail].push_back(head);
            in_[head].push_back(tail);
        }
        for (VertexId v = 0; v < vertex_count; ++v) {
            std::sort(out_[v].begin(), out_[v].end());
            auto dup = std::adjacent_find(out_[v].begin(), out_[v].end());
            if (dup != out_[v].end()) {
                throw Error(ErrorCode::DuplicateEdge, "edge " + edge_string(v, *dup));
            }
            std::sort(in_[v].begin(), in_[v].end());
        }
        edge_count_ = edges.size();
    }

    Digraph(std::size_t vertex_count, std::initializer_list<Edge> edges)
        : Digraph(vertex_count, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t vertex_count() const noexcept { return out_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    bool contains(VertexId v) const noexcept { return v < out_.size(); }

    std::span<const VertexId> out(VertexId v) const { return out_.at(v); }
    std::span<const VertexId> in(VertexId v) const { return in_.at(v); }

    bool has_edge(VertexId tail, VertexId head) const {
        if (!contains(tail) || !contains(head)) {
            return false;
        }
        return std::binary_search(out_[tail].begin(), out_[tail].end(), head);
    }

    /// All edges, sorted lexicographically.
    std::vector<Edge> edges() const {
        std::vector<Edge> result;
        result.reserve(edge_count_);
        for (VertexId v = 0; v < out_.size(); ++v) {
            for (VertexId w : out_[v]) {
                result.emplace_back(v, w);
            }
        }
        return result;
    }

    /// External integer ids used in documents; identity unless loaded from a
    /// document with non-dense ids.
    std::int64_t label(VertexId v) const { return labels_.at(v); }
    const std::vector<std::int64_t>& labels() const noexcept { return labels_; }
    const std::map<VertexId, std::string>& names() const noexcept { return names_; }

    std::optional<VertexId> find_label(std::int64_t label) const {
        auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
        if (it == labels_.end() || *it != label) {
            return std::nullopt;
        }
        return static_cast<VertexId>(it - labels_.begin());
    }

    /// Labels must be strictly increasing so that dense order equals label order.
    void set_symbols(std::vector<std::int64_t> labels, std::map<VertexId, std::string> names) {
        if (labels.size() != vertex_count() ||
            std::adjacent_find(labels.begin(), labels.end(),
                               [](auto a, auto b) { return a >= b; }) != labels.end()) {
            throw Error(ErrorCode::BadDocument, "symbol table does not match vertex set");
        }
        labels_ = std::move(labels);
        names_ = std::move(names);
    }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.out_ == b.out_ && a.labels_ == b.labels_ && a.names_ == b.names_;
    }

private:
    static std::vector<std::int64_t> identity_labels(std::size_t n) {
        std::vector<std::int64_t> labels(n);
        for (std::size_t i = 0; i < n; ++i) {
            labels[i] = static_cast<std::int64_t>(i);
        }
        return labels;
    }

    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
    std::size_t edge_count_ = 0;
    std::vector<std::int64_t> labels_;
    std::map<VertexId, std::string> names_;
};

/// Nonempty sequence of distinct vertices joined by consecutive edges.
struct DirectedPath {
    std::vector<VertexId> vertices;

    bool nontrivial() const noexcept { return vertices.size() >= 2; }
    VertexId first() const { return vertices.front(); }
    VertexId last() const { return vertices.back(); }
    std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }

    friend bool operator==(const DirectedPath&, const DirectedPath&) = default;
};

inline bool is_path_in(const Digraph& d, const DirectedPath& path) {
    if (path.vertices.empty()) {
        return false;
    }
    std::vector<VertexId> sorted = path.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    for (VertexId v : path.vertices) {
        if (!d.contains(v)) {
            return false;
        }
    }
    for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
        if (!d.has_edge(path.vertices[i], path.vertices[i + 1])) {
            return false;
        }
    }
    return true;
}

/// Strong components of d - deleted. Labels are assigned in increasing order of
/// the smallest vertex each component contains.
struct SCCPartition {
    static constexpr std::size_t kDeleted = std::numeric_limits<std::size_t>::max();

    std::vector<std::size_t> component_of;
    VertexSet deleted;
    std::vector<VertexSet> components;

    std::size_t count() const noexcept { return components.size(); }
    bool is_deleted(VertexId v) const { return component_of.at(v) == kDeleted; }
    std::size_t label(VertexId v) const { return component_of.at(v); }
    bool same(VertexId v, VertexId w) const {
        return !is_deleted(v) && component_of.at(v) == component_of.at(w);
    }
    const VertexSet& members(std::size_t label) const { return components.at(label); }
};

inline SCCPartition strong_components(const Digraph& d, std::span<const VertexId> deleted = {}) {
    const std::size_t n = d.vertex_count();
    const auto removed = membership(n, deleted);

    constexpr std::size_t unvisited = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> index(n, unvisited);
    std::vector<std::size_t> low(n, 0);
    std::vector<char> on_stack(n, 0);
    std::vector<VertexId> stack;
    std::vector<std::size_t> raw(n, SCCPartition::kDeleted);
    std::vector<VertexSet> raw_components;
    std::size_t counter = 0;

    // iterative Tarjan; frames hold (vertex, next out-neighbour position)
    std::vector<std::pair<VertexId, std::size_t>> frames;
    for (VertexId start = 0; start < n; ++start) {
        if (removed[start] || index[start] != unvisited) {
            continue;
        }
        frames.emplace_back(start, 0);
        index[start] = low[start] = counter++;
        stack.push_back(start);
        on_stack[start] = 1;
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            auto out = d.out(v);
            if (pos < out.size()) {
                VertexId w = out[pos++];
                if (removed[w]) {
                    continue;
                }
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                VertexSet component;
                VertexId w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = 0;
                    raw[w] = raw_components.size();
                    component.push_back(w);
                } while (w != v);
                std::sort(component.begin(), component.end());
                raw_components.push_back(std::move(component));
            }
            VertexId finished = v;
            frames.pop_back();
            if (!frames.empty()) {
                VertexId parent = frames.back().first;
                low[parent] = std::min(low[parent], low[finished]);
            }
        }
    }

    std::vector<std::size_t> order(raw_components.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return raw_components[a].front() < raw_components[b].front();
    });
    std::vector<std::size_t> relabel(order.size());
    SCCPartition result;
    result.components.reserve(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        relabel[order[i]] = i;
        result.components.push_back(std::move(raw_components[order[i]]));
    }
    result.component_of.assign(n, SCCPartition::kDeleted);
    for (VertexId v = 0; v < n; ++v) {
        if (raw[v] != SCCPartition::kDeleted) {
            result.component_of[v] = relabel[raw[v]];
        }
    }
    result.deleted = normalized(VertexSet(deleted.begin(), deleted.end()));
    return result;
}

inline Digraph reverse(const Digraph& d) {
    std::vector<Edge> reversed;
    reversed.reserve(d.edge_count());
    for (const auto& [tail, head] : d.edges()) {
        reversed.emplace_back(head, tail);
    }
    Digraph result(d.vertex_count(), reversed);
    result.set_symbols(d.labels(), d.names());
    return result;
}

/// Subdigraph on the same vertex range keeping only edges with both ends in keep.
inline Digraph induced(const Digraph& d, std::span<const VertexId> keep) {
    const auto inside = membership(d.vertex_count(), keep);
    std::vector<Edge> kept;
    for (const auto& [tail, head] : d.edges()) {
        if (inside[tail] && inside[head]) {
            kept.emplace_back(tail, head);
        }
    }
    Digraph result(d.vertex_count(), kept);
    result.set_symbols(d.labels(), d.names());
    return result;
}

/// Union of the edges of d with extra edges; extra edges already present are skipped.
inline Digraph with_edges(const Digraph& d, std::span<const Edge> extra) {
    std::vector<Edge> all = d.edges();
    for (const auto& e : extra) {
        if (!d.has_edge(e.first, e.second)) {
            all.push_back(e);
        }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    Digraph result(d.vertex_count(), all);
    result.set_symbols(d.labels(), d.names());
    return result;
}

/// Vertices reachable from sources without entering forbidden vertices
/// (sources themselves are always included).
inline std::vector<char> reachable_from(const Digraph& d, std::span<const VertexId> sources,
                                        std::span<const VertexId> forbidden = {}) {
    std::vector<char> seen(d.vertex_count(), 0);
    const auto blocked = membership(d.vertex_count(), forbidden);
    std::vector<VertexId> stack;
    for (VertexId s : sources) {
        if (d.contains(s) && !seen[s]) {
            seen[s] = 1;
            stack.push_back(s);
        }
    }
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (VertexId w : d.out(v)) {
            if (!seen[w] && !blocked[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
        }
    }
    return seen;
}

/// Shortest path that meets sources only in its first vertex and targets only
/// in its last; interior vertices also avoid forbidden_interior. Among shortest
/// paths the lexicographically smallest id sequence is returned. If sources and
/// targets intersect, the trivial path on their smallest common vertex is the
/// answer.
inline std::optional<DirectedPath> find_path(const Digraph& d, std::span<const VertexId> sources,
                                             std::span<const VertexId> targets,
                                             std::span<const VertexId> forbidden_interior = {}) {
    const std::size_t n = d.vertex_count();
    const auto is_source = membership(n, sources);
    const auto is_target = membership(n, targets);
    const auto forbidden = membership(n, forbidden_interior);

    for (VertexId v = 0; v < n; ++v) {
        if (is_source[v] && is_target[v]) {
            return DirectedPath{{v}};
        }
    }

    constexpr std::size_t inf = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(n, inf);
    std::deque<VertexId> queue;
    for (VertexId t = 0; t < n; ++t) {
        if (is_target[t]) {
            dist[t] = 0;
            queue.push_back(t);
        }
    }
    auto interior_ok = [&](VertexId v) { return !is_source[v] && !is_target[v] && !forbidden[v]; };
    // backward BFS: sources are terminal, only admissible interior vertices expand
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        if (is_source[v]) {
            continue;
        }
        for (VertexId p : d.in(v)) {
            if (dist[p] != inf || is_target[p]) {
                continue;
            }
            if (is_source[p] || interior_ok(p)) {
                dist[p] = dist[v] + 1;
                queue.push_back(p);
            }
        }
    }

    VertexId start = kNoVertex;
    for (VertexId s = 0; s < n; ++s) {
        if (is_source[s] && dist[s] != inf && (start == kNoVertex || dist[s] < dist[start])) {
            start = s;
        }
    }
    if (start == kNoVertex) {
        return std::nullopt;
    }
    DirectedPath path{{start}};
    VertexId current = start;
    while (dist[current] > 0) {
        for (VertexId w : d.out(current)) {
            if (dist[w] + 1 != dist[current] || dist[w] == inf) {
                continue;
            }
            if (dist[w] == 0 ? is_target[w] : interior_ok(w)) {
                path.vertices.push_back(w);
                current = w;
                break;
            }
        }
    }
    return path;
}

/// Kahn's algorithm taking the smallest available id first; nullopt if d has a cycle.
inline std::optional<std::vector<VertexId>> topological_order(const Digraph& d) {
    const std::size_t n = d.vertex_count();
    std::vector<std::size_t> in_degree(n);
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
    for (VertexId v = 0; v < n; ++v) {
        in_degree[v] = d.in(v).size();
        if (in_degree[v] == 0) {
            ready.push(v);
        }
    }
    std::vector<VertexId> order;
    order.reserve(n);
    while (!ready.empty()) {
        VertexId v = ready.top();
        ready.pop();
        order.push_back(v);
        for (VertexId w : d.out(v)) {
            if (--in_degree[w] == 0) {
                ready.push(w);
            }
        }
    }
    if (order.size() != n) {
        return std::nullopt;
    }
    return order;
}

/// Some directed cycle of d (as its vertex sequence, first vertex not repeated),
/// or nullopt if d is acyclic. Deterministic: the cycle closed first by a DFS in
/// id order.
inline std::optional<std::vector<VertexId>> find_cycle_in(const Digraph& d,
                                                          std::vector<char> allowed) {
    const std::size_t n = d.vertex_count();
    std::vector<char> state(n, 0); // 0 new, 1 on stack, 2 done
    std::vector<VertexId> stack;
    std::vector<std::pair<VertexId, std::size_t>> frames;
    for (VertexId start = 0; start < n; ++start) {
        if (!allowed[start] || state[start] != 0) {
            continue;
        }
        frames.emplace_back(start, 0);
        state[start] = 1;
        stack.push_back(start);
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            auto out = d.out(v);
            if (pos < out.size()) {
                VertexId w = out[pos++];
                if (!allowed[w]) {
                    continue;
                }
                if (state[w] == 1) {
                    auto it = std::find(stack.begin(), stack.end(), w);
                    return std::vector<VertexId>(it, stack.end());
                }
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back(w);
                    frames.emplace_back(w, 0);
                }
                continue;
            }
            state[v] = 2;
            stack.pop_back();
            frames.pop_back();
        }
    }
    return std::nullopt;
}

inline std::optional<std::vector<VertexId>> find_cycle(const Digraph& d) {
    return find_cycle_in(d, std::vector<char>(d.vertex_count(), 1));
}

/// Cycle of the subdigraph induced on within.
inline std::optional<std::vector<VertexId>> find_cycle(const Digraph& d,
                                                       std::span<const VertexId> within) {
    return find_cycle_in(d, membership(d.vertex_count(), within));
}

inline bool is_acyclic(const Digraph& d) { return !find_cycle(d).has_value(); }

} // namespace arbor

#endif

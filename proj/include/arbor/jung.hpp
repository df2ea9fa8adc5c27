#ifndef ARBOR_JUNG_HPP
#define ARBOR_JUNG_HPP

#include <algorithm>
#include <array>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "arbor/arborescence.hpp"
#include "arbor/digraph.hpp"
#include "arbor/error.hpp"
#include "arbor/family.hpp"
#include "arbor/normality.hpp"
#include "arbor/sensitive.hpp"

namespace arbor {

/// Spine path plus disjoint paths that meet the spine exactly in their first
/// vertex and end in the target set (the teeth). Teeth may lie on the spine,
/// in which case their path is trivial.
struct DirectedComb {
    DirectedPath spine;
    std::vector<DirectedPath> paths;
    VertexSet teeth;
};

inline bool is_comb_in(const Digraph& d, const DirectedComb& comb, const std::function<bool(VertexId)>& in_u) {
    if (!is_path_in(d, comb.spine) || comb.paths.size() != comb.teeth.size()) {
        return false;
    }
    const auto on_spine = membership(d.vertex_count(), comb.spine.vertices);
    std::vector<char> used(d.vertex_count(), 0);
    VertexSet teeth;
    for (const auto& p : comb.paths) {
        if (!is_path_in(d, p) || !on_spine[p.first()] || used[p.first()] || !in_u(p.last())) {
            return false;
        }
        used[p.first()] = 1;
        for (std::size_t i = 1; i < p.vertices.size(); ++i) {
            if (on_spine[p.vertices[i]] || used[p.vertices[i]]) {
                return false;
            }
            used[p.vertices[i]] = 1;
        }
        teeth.push_back(p.last());
    }
    return normalized(teeth) == comb.teeth;
}

struct CombSearchResult {
    std::optional<DirectedComb> comb;
    /// true when the absence of a comb is certain (always true if one was found)
    bool exhaustive = false;
    std::size_t spines_examined = 0;
};

namespace detail {

/// Unit-capacity flow on a split-vertex network; small inputs only.
class ToothFlow {
public:
    ToothFlow(const Digraph& d, const std::vector<VertexId>& spine, const std::function<bool(VertexId)>& in_u)
        : d_(d), n_(d.vertex_count()) {
        on_spine_ = membership(n_, spine);
        // nodes: 2v = v_in, 2v+1 = v_out, 2n = source, 2n+1 = sink
        adj_.assign(2 * n_ + 2, {});
        const std::size_t s = 2 * n_, t = 2 * n_ + 1;
        for (VertexId v = 0; v < n_; ++v) {
            add(in(v), out(v));
            if (in_u(v)) {
                add(out(v), t);
            }
            for (VertexId w : d.out(v)) {
                if (!on_spine_[w]) {
                    add(out(v), in(w));
                }
            }
        }
        for (VertexId v : spine) {
            add(s, in(v));
        }
        source_ = s;
        sink_ = t;
    }

    std::size_t run(std::size_t target) {
        std::size_t flow = 0;
        while (flow < target && augment()) {
            ++flow;
        }
        return flow;
    }

    std::vector<DirectedPath> paths() const {
        std::vector<DirectedPath> result;
        for (const auto& e : adj_[source_]) {
            if (e.cap != 0) {
                continue;
            }
            VertexId v = e.to / 2;
            DirectedPath p{{v}};
            VertexId current = v;
            while (true) {
                bool ended = false, moved = false;
                for (const auto& f : adj_[out(current)]) {
                    if (!f.forward || f.cap != 0) {
                        continue;
                    }
                    if (f.to == sink_) {
                        ended = true;
                        break;
                    }
                    if (f.to % 2 == 0 && f.to / 2 != current) {
                        current = f.to / 2;
                        p.vertices.push_back(current);
                        moved = true;
                        break;
                    }
                }
                if (ended || !moved) {
                    break;
                }
            }
            result.push_back(std::move(p));
        }
        return result;
    }

private:
    struct Arc {
        std::size_t to;
        std::size_t rev;
        int cap;
        bool forward;
    };

    std::size_t in(VertexId v) const { return 2 * v; }
    std::size_t out(VertexId v) const { return 2 * v + 1; }

    void add(std::size_t a, std::size_t b) {
        adj_[a].push_back({b, adj_[b].size(), 1, true});
        adj_[b].push_back({a, adj_[a].size() - 1, 0, false});
    }

    bool augment() {
        std::vector<std::pair<std::size_t, std::size_t>> pred(adj_.size(), {kNoVertex, 0});
        std::deque<std::size_t> queue{source_};
        pred[source_] = {source_, 0};
        while (!queue.empty() && pred[sink_].first == kNoVertex) {
            std::size_t x = queue.front();
            queue.pop_front();
            for (std::size_t i = 0; i < adj_[x].size(); ++i) {
                const Arc& a = adj_[x][i];
                if (a.cap > 0 && pred[a.to].first == kNoVertex) {
                    pred[a.to] = {x, i};
                    queue.push_back(a.to);
                }
            }
        }
        if (pred[sink_].first == kNoVertex) {
            return false;
        }
        for (std::size_t x = sink_; x != source_;) {
            auto [p, i] = pred[x];
            Arc& a = adj_[p][i];
            a.cap -= 1;
            adj_[x][a.rev].cap += 1;
            x = p;
        }
        return true;
    }

    const Digraph& d_;
    std::size_t n_;
    std::vector<char> on_spine_;
    std::vector<std::vector<Arc>> adj_;
    std::size_t source_ = 0, sink_ = 0;
};

} // namespace detail

/// Searches for a comb with at least k teeth in U. Spines are enumerated
/// depth-first from each start vertex in id order; each spine of length >= k
/// gets a max-flow tooth count. A negative answer is exhaustive when k
/// exceeds |V| or |U|, or when every spine was examined within the budget.
inline CombSearchResult comb_search(const Digraph& d, const std::function<bool(VertexId)>& in_u, std::size_t k,
                                    std::size_t budget = 200000) {
    CombSearchResult result;
    const std::size_t n = d.vertex_count();
    std::size_t u_count = 0;
    for (VertexId v = 0; v < n; ++v) {
        u_count += in_u(v) ? 1 : 0;
    }
    if (k == 0) {
        if (n > 0) {
            result.comb = DirectedComb{DirectedPath{{0}}, {}, {}};
        }
        result.exhaustive = true;
        return result;
    }
    if (k > n || k > u_count) {
        result.exhaustive = true;
        return result;
    }
    const auto can_reach_u = [&] {
        std::vector<VertexId> targets;
        for (VertexId v = 0; v < n; ++v) {
            if (in_u(v)) targets.push_back(v);
        }
        auto r = reachable_from(reverse(d), targets);
        return r;
    }();

    bool exhausted_budget = false;
    std::vector<VertexId> spine;
    std::vector<char> on_spine(n, 0);
    std::function<bool()> extend = [&]() -> bool {
        if (result.spines_examined >= budget) {
            exhausted_budget = true;
            return false;
        }
        if (spine.size() >= k) {
            ++result.spines_examined;
            detail::ToothFlow flow(d, spine, in_u);
            if (flow.run(k) >= k) {
                DirectedComb comb;
                comb.spine.vertices = spine;
                comb.paths = flow.paths();
                for (const auto& p : comb.paths) {
                    comb.teeth.push_back(p.last());
                }
                comb.teeth = normalized(comb.teeth);
                result.comb = std::move(comb);
                return true;
            }
        }
        for (VertexId w : d.out(spine.back())) {
            if (on_spine[w] || !can_reach_u[w]) {
                continue;
            }
            spine.push_back(w);
            on_spine[w] = 1;
            if (extend()) {
                return true;
            }
            on_spine[w] = 0;
            spine.pop_back();
            if (exhausted_budget) {
                return false;
            }
        }
        return false;
    };
    for (VertexId s = 0; s < n && !exhausted_budget; ++s) {
        if (!can_reach_u[s]) {
            continue;
        }
        spine = {s};
        on_spine[s] = 1;
        if (extend()) {
            result.exhaustive = true;
            return result;
        }
        on_spine[s] = 0;
    }
    result.exhaustive = !exhausted_budget;
    return result;
}

/// Comb search in the depth-d window of a family.
inline CombSearchResult comb_search(const LazyFamily& f, const std::function<bool(VertexId)>& in_u, std::size_t k,
                                    std::size_t depth, std::size_t budget = 200000) {
    Truncation window = truncate(f, depth);
    CombSearchResult r = comb_search(window.window, in_u, k, budget);
    if (!r.comb && !f.vertex_count()) {
        // a window is only a finite piece of an infinite family
        r.exhaustive = false;
    }
    return r;
}

/// Well-ordered target set given by a sequence; blocks are an optional
/// grouping kept for reporting.
struct WellOrderedTargets {
    std::vector<VertexId> order;
    std::vector<VertexSet> blocks;
};

/// Concatenates blocks into one well-order, keeping the first occurrence of
/// any repeated vertex.
inline WellOrderedTargets order_from_blocks(const std::vector<VertexSet>& blocks) {
    WellOrderedTargets targets;
    targets.blocks = blocks;
    std::vector<VertexId> seen;
    for (const auto& block : blocks) {
        for (VertexId v : block) {
            if (std::find(targets.order.begin(), targets.order.end(), v) == targets.order.end()) {
                targets.order.push_back(v);
            }
        }
    }
    return targets;
}

struct JungStep {
    VertexId target = kNoVertex;
    /// tree vertex the new path starts at; kNoVertex for the first path and for
    /// targets already in the tree
    VertexId start = kNoVertex;
    DirectedPath path;
};

struct JungResult {
    Arborescence tree;
    LinearExtension order;
    std::vector<JungStep> steps;
};

/// Called after each step with the tree and order built so far.
using JungObserver = std::function<void(const JungStep&, const Arborescence&, const LinearExtension&)>;

/// Grows a normal arborescence from r containing the targets, in target order.
/// The first target is reached by a shortest path. Each later target u not yet
/// covered is joined by a shortest path P from the tree whose start v_P is
/// maximal in the current order among all possible starts; P - v_P is then
/// inserted right after v_P in the order. The final tree is normal in d and
/// the order is sensitive; both are checked before returning.
inline JungResult jung_build(const Digraph& d, VertexId r, const WellOrderedTargets& targets,
                             const JungObserver& observer = {}) {
    if (!d.contains(r)) {
        throw Error(ErrorCode::RootMissing, "root " + std::to_string(r) + " is not a vertex");
    }
    const std::size_t n = d.vertex_count();
    const std::array<VertexId, 1> root{r};
    const auto reach = reachable_from(d, root);
    for (VertexId u : targets.order) {
        if (!d.contains(u)) {
            throw Error(ErrorCode::UnknownVertex, "target " + std::to_string(u));
        }
        if (!reach[u]) {
            throw Error(ErrorCode::UnreachableTarget, "target " + std::to_string(u) + " is not reachable from the root");
        }
    }

    std::vector<VertexId> parent(n, kNoVertex);
    std::vector<char> in_tree(n, 0);
    in_tree[r] = 1;
    std::vector<VertexId> sequence{r};
    JungResult result;
    auto tree_now = [&] { return Arborescence::from_parents(r, parent); };

    bool first = true;
    for (VertexId u : targets.order) {
        JungStep step;
        step.target = u;
        if (in_tree[u]) {
            step.path = DirectedPath{{u}};
            if (first) {
                first = false;
            }
        } else if (first) {
            first = false;
            auto path = find_path(d, root, std::array<VertexId, 1>{u});
            step.path = *path;
            for (std::size_t i = 1; i < path->vertices.size(); ++i) {
                parent[path->vertices[i]] = path->vertices[i - 1];
                in_tree[path->vertices[i]] = 1;
                sequence.push_back(path->vertices[i]);
            }
        } else {
            // non-tree vertices from which u is reachable inside D - T
            std::vector<VertexId> tree_vertices;
            for (VertexId v = 0; v < n; ++v) {
                if (in_tree[v]) tree_vertices.push_back(v);
            }
            const auto reaches_u = reachable_from(reverse(d), std::array<VertexId, 1>{u}, tree_vertices);
            std::size_t best_rank = 0;
            VertexId best = kNoVertex;
            for (std::size_t i = 0; i < sequence.size(); ++i) {
                VertexId x = sequence[i];
                for (VertexId y : d.out(x)) {
                    if (!in_tree[y] && reaches_u[y]) {
                        if (best == kNoVertex || i > best_rank) {
                            best = x;
                            best_rank = i;
                        }
                        break;
                    }
                }
            }
            if (best == kNoVertex) {
                throw std::logic_error("jung_build: reachable target has no path from the tree");
            }
            auto path = find_path(d, std::array<VertexId, 1>{best}, std::array<VertexId, 1>{u}, tree_vertices);
            step.start = best;
            step.path = *path;
            std::vector<VertexId> block;
            for (std::size_t i = 1; i < path->vertices.size(); ++i) {
                parent[path->vertices[i]] = path->vertices[i - 1];
                in_tree[path->vertices[i]] = 1;
                block.push_back(path->vertices[i]);
            }
            sequence.insert(sequence.begin() + static_cast<std::ptrdiff_t>(best_rank) + 1, block.begin(), block.end());
        }
        result.steps.push_back(step);
        if (observer) {
            observer(step, tree_now(), LinearExtension(sequence));
        }
    }

    result.tree = tree_now();
    result.order = LinearExtension(sequence);
    if (!is_normal(d, result.tree).normal || !is_sensitive(d, result.tree, result.order).sensitive) {
        throw std::logic_error("jung_build: produced tree failed its own normality check");
    }
    return result;
}

/// The same construction in the reverse digraph: the returned tree is normal in
/// reverse(d) and its edges point towards r in d.
inline JungResult reverse_jung_build(const Digraph& d, VertexId r, const WellOrderedTargets& targets,
                                     const JungObserver& observer = {}) {
    return jung_build(reverse(d), r, targets, observer);
}

} // namespace arbor

#endif

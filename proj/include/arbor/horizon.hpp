#ifndef ARBOR_HORIZON_HPP
#define ARBOR_HORIZON_HPP

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "arbor/arborescence.hpp"
#include "arbor/digraph.hpp"
#include "arbor/ends.hpp"
#include "arbor/error.hpp"
#include "arbor/family.hpp"
#include "arbor/normality.hpp"

namespace arbor {

/// g plus the reverse of every edge of t.
inline Digraph solidify(const Digraph& g, const Arborescence& t) {
    std::vector<Edge> extra;
    for (const auto& [p, c] : t.edges()) {
        extra.emplace_back(c, p);
    }
    if (t.universe() > g.vertex_count()) {
        std::vector<Edge> all = g.edges();
        all.insert(all.end(), extra.begin(), extra.end());
        std::sort(all.begin(), all.end());
        all.erase(std::unique(all.begin(), all.end()), all.end());
        return Digraph(t.universe(), all);
    }
    return with_edges(g, extra);
}

/// Solidification of an assistant: only its tree edges are reversed.
inline Digraph solidify(const NormalAssistant& h) { return solidify(h.graph(), h.base()); }

/// Edge witnessing E(X, omega eta); nullopt when the bundle is empty. X is the
/// prefix separator X_n, or the single vertex `single` when that is set.
struct SeparatorWitness {
    std::size_t n = 0;
    std::optional<VertexId> single;
    std::optional<Edge> edge;

    VertexSet separator() const {
        if (single) return {*single};
        VertexSet x(n);
        for (std::size_t i = 0; i < n; ++i) x[i] = i;
        return x;
    }
    std::string name() const { return single ? "{" + std::to_string(*single) + "}" : "X_" + std::to_string(n); }
};

struct HorizonNode {
    std::size_t id = 0;
    std::string name;
    std::vector<VertexId> prefix;
};

struct HorizonArc {
    std::size_t from = 0;
    std::size_t to = 0;
    bool declared = false;
    /// one entry per tested separator that separates the pair
    std::vector<SeparatorWitness> witnesses;
};

struct VertexEndArc {
    VertexId vertex = 0;
    std::size_t node = 0;
    bool verified = false;
    std::vector<SeparatorWitness> witnesses;
};

struct HorizonGraph {
    std::string source;
    std::size_t depth = 0;
    std::size_t window_size = 0;
    std::vector<HorizonNode> nodes;
    std::vector<HorizonArc> arcs;
    /// ordered pairs refuted by some separator, with the failing separator
    std::vector<HorizonArc> refuted;
    /// node pairs (i < j) that no tested separator tells apart
    std::vector<std::pair<std::size_t, std::size_t>> unseparated;
    std::vector<VertexEndArc> vertex_arcs;
    /// sharing[n][i]: other nodes whose thread lies in node i's component of g - X_n
    std::vector<std::vector<std::size_t>> sharing;
    std::vector<std::vector<Thread>> threads;

    std::optional<std::size_t> node_index(std::size_t id) const {
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            if (nodes[i].id == id) return i;
        }
        return std::nullopt;
    }

    const HorizonArc* find_arc(std::size_t from_index, std::size_t to_index) const {
        for (const auto& a : arcs) {
            if (a.from == from_index && a.to == to_index) return &a;
        }
        return nullptr;
    }

    bool isolated(std::size_t i, std::size_t n) const { return sharing.at(n).at(i) == 0; }

    /// Smallest sharing count of node i over the separators X_0..X_upto.
    std::size_t accumulation(std::size_t i, std::size_t upto = 2) const {
        std::size_t best = nodes.size();
        for (std::size_t n = 0; n <= std::min(upto, depth); ++n) {
            if (threads[n][i].component) {
                best = std::min(best, sharing[n][i]);
            }
        }
        return best == nodes.size() && nodes.size() > 0 ? 0 : best;
    }
};

namespace detail {

inline std::optional<Edge> bundle_edge(const Digraph& g, const SCCPartition& scc, std::size_t from, std::size_t to) {
    for (VertexId v : scc.members(from)) {
        for (VertexId w : g.out(v)) {
            if (!scc.is_deleted(w) && scc.label(w) == to) {
                return Edge{v, w};
            }
        }
    }
    return std::nullopt;
}

/// Separators tested for limit edges: every prefix X_n (n <= depth) and every
/// single window vertex.
struct SeparatorFamily {
    std::vector<SeparatorWitness> labels;
    std::vector<SCCPartition> levels;
    std::vector<std::vector<Thread>> threads;
};

inline SeparatorFamily separator_family(const Digraph& g, const std::vector<HorizonNode>& nodes,
                                        const ComponentTower& tower) {
    SeparatorFamily family;
    for (std::size_t n = 0; n <= tower.depth; ++n) {
        family.labels.push_back({n, std::nullopt, std::nullopt});
        family.levels.push_back(tower.levels[n]);
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        family.labels.push_back({0, v, std::nullopt});
        family.levels.push_back(strong_components(g, std::array<VertexId, 1>{v}));
    }
    for (std::size_t k = 0; k < family.labels.size(); ++k) {
        const auto mask = membership(g.vertex_count(), family.labels[k].separator());
        std::vector<Thread> row;
        for (const auto& node : nodes) {
            row.push_back(thread_of(family.levels[k], node.prefix, mask, tower.boundary));
        }
        family.threads.push_back(std::move(row));
    }
    return family;
}

inline HorizonGraph horizon_of(const Digraph& g, std::vector<HorizonNode> nodes, const VertexSet& boundary,
                               std::size_t depth) {
    HorizonGraph hg;
    hg.depth = depth;
    hg.window_size = g.vertex_count();
    hg.nodes = std::move(nodes);
    const auto tower = component_tower(g, boundary, depth);
    const auto family = separator_family(g, hg.nodes, tower);
    const std::size_t m = hg.nodes.size();
    for (std::size_t n = 0; n <= depth; ++n) {
        const auto& row = family.threads[n];
        std::vector<std::size_t> share(m, 0);
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (i != j && row[i].component && row[j].component && *row[i].component == *row[j].component) {
                    ++share[i];
                }
            }
        }
        hg.threads.push_back(row);
        hg.sharing.push_back(std::move(share));
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            HorizonArc arc{i, j, false, {}};
            bool separated = false, holds = true;
            for (std::size_t k = 0; k < family.labels.size(); ++k) {
                const auto& a = family.threads[k][i];
                const auto& b = family.threads[k][j];
                if (!a.component || !b.component || *a.component == *b.component) {
                    continue;
                }
                separated = true;
                SeparatorWitness w = family.labels[k];
                w.edge = bundle_edge(g, family.levels[k], *a.component, *b.component);
                arc.witnesses.push_back(w);
                if (!w.edge) {
                    holds = false;
                    break;
                }
            }
            if (!separated) {
                if (i < j) hg.unseparated.emplace_back(i, j);
            } else if (holds) {
                hg.arcs.push_back(std::move(arc));
            } else {
                hg.refuted.push_back(std::move(arc));
            }
        }
    }
    return hg;
}

} // namespace detail

/// Horizon of the host at depth d: oracle ends with detected limit edges, plus
/// the declared vertex-end limit edges checked against every separator.
inline HorizonGraph host_horizon(const LazyFamily& f, std::size_t depth) {
    const Truncation w = truncate(f, depth);
    const EndOracle oracle = f.oracle();
    std::vector<HorizonNode> nodes;
    for (std::size_t e : oracle.ends.visible(w.size())) {
        nodes.push_back({e, oracle.ends.name(e), oracle.ends.prefix(e, w.size())});
    }
    HorizonGraph hg = detail::horizon_of(w.window, std::move(nodes), w.boundary, depth);
    hg.source = "host";
    for (auto& arc : hg.arcs) {
        for (const auto& le : oracle.limit_edges) {
            if (le.kind == LimitKind::EndEnd && le.from == hg.nodes[arc.from].id && le.to == hg.nodes[arc.to].id) {
                arc.declared = true;
            }
        }
    }
    const auto tower = component_tower(w);
    std::vector<HorizonNode> end_nodes = hg.nodes;
    const auto family = detail::separator_family(w.window, end_nodes, tower);
    for (const auto& le : oracle.limit_edges) {
        if (le.kind != LimitKind::VertexEnd) continue;
        auto idx = hg.node_index(le.to);
        if (!idx || le.from >= w.size()) continue;
        VertexEndArc va{le.from, *idx, true, {}};
        for (std::size_t k = 0; k < family.labels.size(); ++k) {
            const auto& th = family.threads[k][*idx];
            const auto& level = family.levels[k];
            if (!th.component || (!level.is_deleted(le.from) && level.label(le.from) == *th.component)) {
                continue;
            }
            SeparatorWitness sw = family.labels[k];
            for (VertexId x : w.window.out(le.from)) {
                if (!level.is_deleted(x) && level.label(x) == *th.component) {
                    sw.edge = Edge{le.from, x};
                    break;
                }
            }
            va.verified = va.verified && sw.edge.has_value();
            va.witnesses.push_back(sw);
        }
        hg.vertex_arcs.push_back(std::move(va));
    }
    return hg;
}

struct TreeWindow {
    Truncation truncation;
    Arborescence tree;
    NormalAssistant assistant;
    Digraph solid;
};

inline TreeWindow tree_window(const LazyFamily& f, const TreePresentation& p, std::size_t depth) {
    TreeWindow tw;
    tw.truncation = truncate(f, depth);
    tw.tree = normal_window_tree(f, p, tw.truncation);
    tw.assistant = normal_assistant(induced(tw.truncation.window, tw.tree.vertices()), tw.tree);
    tw.solid = solidify(tw.assistant);
    return tw;
}

/// Horizon of the solidified assistant: its nodes are the tree rays.
inline HorizonGraph tree_horizon(const LazyFamily& f, const TreePresentation& p, std::size_t depth) {
    const TreeWindow tw = tree_window(f, p, depth);
    std::vector<HorizonNode> nodes;
    for (std::size_t r : p.rays.visible(tw.truncation.size())) {
        nodes.push_back({r, p.rays.name(r), p.rays.prefix(r, tw.truncation.size())});
    }
    HorizonGraph hg = detail::horizon_of(tw.solid, std::move(nodes), tw.truncation.boundary, depth);
    hg.source = "solidified-assistant";
    return hg;
}

struct WitnessResult {
    std::size_t end = 0;
    VertexSet x;
    VertexSet x_prime;
    /// tree vertex v with X' = down(v) - v (forward direction only)
    VertexId top = kNoVertex;
    VertexSet host_component;
    VertexSet tree_component;
    bool contained = false;
};

namespace detail {

inline VertexSet thread_members(const Digraph& g, const VertexSet& x, const std::vector<VertexId>& prefix) {
    const auto scc = strong_components(g, x);
    const auto th = thread_of(scc, prefix, membership(g.vertex_count(), x), std::vector<char>(g.vertex_count(), 0));
    if (!th.component) {
        return {};
    }
    return scc.members(*th.component);
}

inline std::size_t tree_ray_of(const LazyFamily& f, const TreePresentation& p, const Truncation& w,
                               const Arborescence& t, std::size_t end) {
    const EndOracle oracle = f.oracle();
    require_end(oracle, end, w.size());
    TracedRay traced = trace_end(w.window, t, oracle.ends.prefix(end, w.size()));
    auto r = match_tree_ray(p, traced.ray, w.size());
    if (!r) {
        throw Error(ErrorCode::NoWitnessInWindow, "no tree ray found for " + oracle.ends.name(end));
    }
    return *r;
}

inline void require_solid(const LazyFamily& f) {
    if (!f.declared_solid()) {
        throw Error(ErrorCode::NotSolidFamily, f.name() + " is not solid");
    }
}

} // namespace detail

/// Given X, finds X' = down(v) - v for the lowest vertex v on the normal ray of
/// the end whose window up-closure lies inside C(X, omega), and checks that
/// C(X', omega') in the solidified assistant is contained in C(X, omega).
inline WitnessResult horizon_witness_forward(const LazyFamily& f, const TreePresentation& p, std::size_t end,
                                             const VertexSet& x, std::size_t depth) {
    detail::require_solid(f);
    const TreeWindow tw = tree_window(f, p, depth);
    const auto& w = tw.truncation;
    const EndOracle oracle = f.oracle();
    require_end(oracle, end, w.size());
    WitnessResult result;
    result.end = end;
    result.x = normalized(x);
    result.host_component = detail::thread_members(w.window, result.x, oracle.ends.prefix(end, w.size()));
    if (result.host_component.empty()) {
        throw Error(ErrorCode::NoWitnessInWindow, "end is not visible outside X in the window");
    }
    const auto inside = membership(w.size(), result.host_component);
    const TracedRay traced = detail::trace_end(w.window, tw.tree, oracle.ends.prefix(end, w.size()));
    for (VertexId v : traced.ray) {
        const auto up = tw.tree.up_closure(v);
        if (std::all_of(up.begin(), up.end(), [&](VertexId y) { return inside[y] != 0; })) {
            result.top = v;
            break;
        }
    }
    if (result.top == kNoVertex) {
        throw Error(ErrorCode::NoWitnessInWindow, "no vertex of the normal ray lies above C(X, omega)");
    }
    auto chain = tw.tree.down_closure(result.top);
    chain.pop_back();
    result.x_prime = normalized(chain);
    const std::size_t ray = detail::tree_ray_of(f, p, w, tw.tree, end);
    result.tree_component = detail::thread_members(tw.solid, result.x_prime, p.rays.prefix(ray, w.size()));
    result.contained = !result.tree_component.empty() &&
                       std::includes(result.host_component.begin(), result.host_component.end(),
                                     result.tree_component.begin(), result.tree_component.end());
    return result;
}

/// Given X' inside the tree, X is its down-closure; checks that C(X, omega)
/// is contained in C(X', omega') of the solidified assistant.
inline WitnessResult horizon_witness_backward(const LazyFamily& f, const TreePresentation& p, std::size_t end,
                                              const VertexSet& x_prime, std::size_t depth) {
    detail::require_solid(f);
    const TreeWindow tw = tree_window(f, p, depth);
    const auto& w = tw.truncation;
    const EndOracle oracle = f.oracle();
    require_end(oracle, end, w.size());
    WitnessResult result;
    result.end = end;
    result.x_prime = normalized(x_prime);
    VertexSet x;
    for (VertexId v : result.x_prime) {
        if (!tw.tree.contains(v)) {
            throw Error(ErrorCode::VertexNotInTree, std::to_string(v) + " is not a tree vertex in the window");
        }
        const auto chain = tw.tree.down_closure(v);
        x.insert(x.end(), chain.begin(), chain.end());
    }
    result.x = normalized(x);
    const std::size_t ray = detail::tree_ray_of(f, p, w, tw.tree, end);
    result.tree_component = detail::thread_members(tw.solid, result.x_prime, p.rays.prefix(ray, w.size()));
    result.host_component = detail::thread_members(w.window, result.x, oracle.ends.prefix(end, w.size()));
    if (result.host_component.empty()) {
        throw Error(ErrorCode::NoWitnessInWindow, "end is not visible outside X in the window");
    }
    result.contained = std::includes(result.tree_component.begin(), result.tree_component.end(),
                                     result.host_component.begin(), result.host_component.end());
    return result;
}

struct PsiEntry {
    std::size_t end = 0;
    std::string name;
    std::optional<std::size_t> tree_ray;
};

struct LimitEdgeVerdict {
    std::size_t from_end = 0;
    std::size_t to_end = 0;
    bool host = false;
    bool tree = false;
    bool agree() const { return host == tree; }
    std::vector<SeparatorWitness> host_witnesses;
    std::vector<SeparatorWitness> tree_witnesses;
};

namespace detail {

inline std::vector<PsiEntry> psi_table(const FaithfulReport& faithful) {
    std::vector<PsiEntry> psi;
    for (const auto& r : faithful.rays) {
        psi.push_back({r.end, r.name, r.tree_ray});
    }
    return psi;
}

inline std::vector<LimitEdgeVerdict> compare_arcs(const HorizonGraph& host, const HorizonGraph& tree,
                                                  const std::vector<PsiEntry>& psi) {
    std::vector<LimitEdgeVerdict> result;
    auto image = [&](std::size_t end) -> std::optional<std::size_t> {
        for (const auto& e : psi) {
            if (e.end == end && e.tree_ray) return tree.node_index(*e.tree_ray);
        }
        return std::nullopt;
    };
    for (std::size_t i = 0; i < host.nodes.size(); ++i) {
        for (std::size_t j = 0; j < host.nodes.size(); ++j) {
            if (i == j) continue;
            LimitEdgeVerdict v;
            v.from_end = host.nodes[i].id;
            v.to_end = host.nodes[j].id;
            if (const auto* a = host.find_arc(i, j)) {
                v.host = true;
                v.host_witnesses = a->witnesses;
            }
            auto ti = image(v.from_end), tj = image(v.to_end);
            if (ti && tj) {
                if (const auto* a = tree.find_arc(*ti, *tj)) {
                    v.tree = true;
                    v.tree_witnesses = a->witnesses;
                }
            }
            result.push_back(std::move(v));
        }
    }
    return result;
}

} // namespace detail

/// Ordered pairs of host ends with the host arc and the arc between their
/// images in the solidified assistant.
inline std::vector<LimitEdgeVerdict> limit_edge_correspondence(const LazyFamily& f, const TreePresentation& p,
                                                               std::size_t depth) {
    detail::require_solid(f);
    const auto all = [](VertexId) { return true; };
    const auto psi = detail::psi_table(end_faithful_check(f, p, all, depth));
    return detail::compare_arcs(host_horizon(f, depth), tree_horizon(f, p, depth), psi);
}

struct HorizonVerdict {
    std::size_t depth = 0;
    bool reflects = false;
    std::vector<std::string> reasons;
    std::vector<std::string> details;

    std::vector<PsiEntry> psi;
    bool psi_total = true;
    bool psi_injective = true;
    bool psi_surjective = true;
    bool zeta_injective = true;
    bool zeta_surjective = true;
    std::vector<LimitEdgeVerdict> limit_edges;
    std::vector<WitnessResult> witnesses;
    std::size_t witness_failures = 0;
    HorizonGraph host;
    HorizonGraph tree;
    /// tree-horizon nodes sharing components with other threads at every small separator
    std::vector<std::size_t> accumulating;

    bool has_reason(const std::string& r) const { return std::find(reasons.begin(), reasons.end(), r) != reasons.end(); }
};

/// Composite horizon check at depth d. Ends of the solidified assistant are
/// the tree rays of the presentation.
inline HorizonVerdict verify_horizon(const LazyFamily& f, const TreePresentation& p, std::size_t depth,
                                     std::size_t witness_depth = 10) {
    HorizonVerdict verdict;
    verdict.depth = depth;
    auto reason = [&](const std::string& r, const std::string& detail) {
        if (!verdict.has_reason(r)) verdict.reasons.push_back(r);
        verdict.details.push_back(r + ": " + detail);
    };

    TreeWindow tw;
    try {
        tw = tree_window(f, p, depth);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::NotNormalAtDepth) throw;
        reason("not-normal", e.what());
        return verdict;
    }
    const auto& w = tw.truncation;
    verdict.host = host_horizon(f, depth);
    verdict.tree = tree_horizon(f, p, depth);

    // zeta: tree rays are told apart by their common initial segment, and every
    // nontrivial boundary component holds a tree-ray tail
    const auto& nodes = verdict.tree.nodes;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) {
            VertexSet common;
            const auto& a = nodes[i].prefix;
            const auto& b = nodes[j].prefix;
            for (std::size_t k = 0; k < std::min(a.size(), b.size()) && a[k] == b[k]; ++k) {
                common.push_back(a[k]);
            }
            const auto scc = strong_components(tw.solid, common);
            const auto in_x = membership(w.size(), common);
            const std::vector<char> none(w.size(), 0);
            auto ta = thread_of(scc, a, in_x, none);
            auto tb = thread_of(scc, b, in_x, none);
            if (!ta.component || !tb.component) {
                continue;
            }
            if (*ta.component == *tb.component) {
                verdict.zeta_injective = false;
                reason("zeta-not-injective", nodes[i].name + " and " + nodes[j].name);
            }
        }
    }
    const auto solid_tower = component_tower(tw.solid, w.boundary, depth);
    for (std::size_t n = 0; n <= depth; ++n) {
        for (std::size_t c = 0; c < solid_tower.levels[n].count(); ++c) {
            const auto& members = solid_tower.levels[n].members(c);
            // a component can only carry a ray if it reaches the boundary along
            // the tree; a fan of children reaching it does not count
            std::size_t top = std::numeric_limits<std::size_t>::max();
            for (VertexId v : members) {
                if (tw.tree.contains(v)) top = std::min(top, tw.tree.depth(v));
            }
            const bool deep = std::any_of(members.begin(), members.end(), [&](VertexId v) {
                return solid_tower.boundary[v] != 0 && tw.tree.contains(v) && tw.tree.depth(v) >= top + 2;
            });
            if (members.size() < 2 || !deep) continue;
            bool held = false;
            for (const auto& th : verdict.tree.threads[n]) {
                held = held || (th.component && *th.component == c);
            }
            if (!held) {
                verdict.zeta_surjective = false;
                reason("zeta-not-surjective", "component of vertex " + std::to_string(members.front()) +
                                                  " at X_" + std::to_string(n));
            }
        }
    }

    // psi: every host end is traced to a tree ray
    const auto all = [](VertexId) { return true; };
    const FaithfulReport faithful = end_faithful_check(f, p, all, depth);
    verdict.psi = detail::psi_table(faithful);
    std::vector<std::size_t> hit;
    for (const auto& e : verdict.psi) {
        if (!e.tree_ray) {
            verdict.psi_total = false;
            reason("psi-not-total", e.name + " has no normal ray");
        } else if (std::find(hit.begin(), hit.end(), *e.tree_ray) != hit.end()) {
            verdict.psi_injective = false;
            reason("psi-not-injective", e.name);
        } else {
            hit.push_back(*e.tree_ray);
        }
    }
    for (const auto& node : nodes) {
        if (std::find(hit.begin(), hit.end(), node.id) == hit.end()) {
            verdict.psi_surjective = false;
            reason("psi-not-surjective", node.name + " has no preimage among the ends of " + f.name());
        }
    }

    // accumulation: a tree-horizon node glued to other threads at every prefix
    // separator; a mismatch when no host end maps onto it
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (verdict.tree.accumulation(i, depth) == 0) continue;
        verdict.accumulating.push_back(i);
        const bool has_preimage = std::any_of(verdict.psi.begin(), verdict.psi.end(),
                                              [&](const PsiEntry& e) { return e.tree_ray == nodes[i].id; });
        if (!has_preimage) {
            reason("accumulation-mismatch", nodes[i].name + " shares its component with " +
                                                std::to_string(verdict.tree.accumulation(i, depth)) +
                                                " other threads at every prefix separator");
        }
    }

    verdict.limit_edges = detail::compare_arcs(verdict.host, verdict.tree, verdict.psi);
    for (const auto& le : verdict.limit_edges) {
        if (!le.agree()) {
            reason("limit-edge-disagreement", std::to_string(le.from_end) + "->" + std::to_string(le.to_end));
        }
    }

    if (f.declared_solid()) {
        const EndOracle oracle = f.oracle();
        for (const auto& e : verdict.psi) {
            if (!e.tree_ray) continue;
            for (std::size_t n = 0; n <= std::min(depth, witness_depth); ++n) {
                const VertexSet x = f.separator(n);
                if (detail::thread_members(w.window, x, oracle.ends.prefix(e.end, w.size())).empty()) {
                    continue;
                }
                for (int direction = 0; direction < 2; ++direction) {
                    try {
                        WitnessResult r = direction == 0 ? horizon_witness_forward(f, p, e.end, x, depth)
                                                         : horizon_witness_backward(f, p, e.end, x, depth);
                        if (!r.contained) {
                            ++verdict.witness_failures;
                            reason("witness-failure", e.name + " at X_" + std::to_string(n));
                        }
                        verdict.witnesses.push_back(std::move(r));
                    } catch (const Error& err) {
                        ++verdict.witness_failures;
                        reason("witness-failure", e.name + " at X_" + std::to_string(n) + ": " + err.what());
                    }
                }
            }
        }
    }

    verdict.reflects = verdict.reasons.empty();
    return verdict;
}

} // namespace arbor

#endif

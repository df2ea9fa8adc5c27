#ifndef ARBOR_NORMALITY_HPP
#define ARBOR_NORMALITY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arbor/arborescence.hpp"
#include "arbor/digraph.hpp"
#include "arbor/error.hpp"

namespace arbor {

/// Edge v->w of the assistant between tree-incomparable vertices, together with
/// the T-path that justifies it.
struct AssistantEdge {
    VertexId from = 0;
    VertexId to = 0;
    DirectedPath witness;
};

/// The tree plus an edge v->w for every pair of incomparable tree vertices that
/// admits a T-path from the up-closure of v to the up-closure of w.
class NormalAssistant {
public:
    NormalAssistant() = default;

    NormalAssistant(Arborescence base, std::vector<AssistantEdge> added, std::size_t universe)
        : base_(std::move(base)), added_(std::move(added)) {
        std::sort(added_.begin(), added_.end(), [](const auto& a, const auto& b) {
            return std::pair(a.from, a.to) < std::pair(b.from, b.to);
        });
        std::vector<Edge> edges = base_.edges();
        for (const auto& e : added_) {
            edges.emplace_back(e.from, e.to);
        }
        graph_ = Digraph(std::max(universe, base_.universe()), edges);
    }

    const Arborescence& base() const noexcept { return base_; }
    const std::vector<AssistantEdge>& added() const noexcept { return added_; }
    /// H itself: tree edges together with the added edges.
    const Digraph& graph() const noexcept { return graph_; }

    const AssistantEdge* find_added(VertexId from, VertexId to) const {
        auto it = std::lower_bound(added_.begin(), added_.end(), std::pair(from, to),
                                   [](const AssistantEdge& e, const std::pair<VertexId, VertexId>& key) {
                                       return std::pair(e.from, e.to) < key;
                                   });
        if (it == added_.end() || it->from != from || it->to != to) {
            return nullptr;
        }
        return &*it;
    }

    bool has_added(VertexId from, VertexId to) const { return find_added(from, to) != nullptr; }

    std::vector<Edge> added_pairs() const {
        std::vector<Edge> pairs;
        pairs.reserve(added_.size());
        for (const auto& e : added_) {
            pairs.emplace_back(e.from, e.to);
        }
        return pairs;
    }

private:
    Arborescence base_;
    std::vector<AssistantEdge> added_;
    Digraph graph_;
};

namespace detail {

/// For every tree vertex a, the tree vertices b != a at which some T-path
/// starting at a ends.
inline std::vector<VertexSet> t_path_endpoints(const Digraph& d, const Arborescence& t) {
    const std::size_t n = d.vertex_count();
    const auto in_tree = membership(n, t.vertices());
    std::vector<VertexSet> result(n);
    std::vector<std::size_t> seen(n, kNoVertex);
    std::vector<VertexId> stack;
    for (VertexId a : t.vertices()) {
        VertexSet& ends = result[a];
        stack.clear();
        for (VertexId x : d.out(a)) {
            if (in_tree[x]) {
                ends.push_back(x);
            } else if (seen[x] != a) {
                seen[x] = a;
                stack.push_back(x);
            }
        }
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (VertexId y : d.out(x)) {
                if (in_tree[y]) {
                    if (y != a) {
                        ends.push_back(y);
                    }
                } else if (seen[y] != a) {
                    seen[y] = a;
                    stack.push_back(y);
                }
            }
        }
        ends = normalized(std::move(ends));
    }
    return result;
}

} // namespace detail

/// Builds the normal assistant of t in d. Each T-path endpoint pair (a, b) of
/// incomparable vertices settles every pair (v, w) with v on the branch from
/// meet(a, b) up to a and w on the branch up to b; witnesses are then the
/// shortest, id-lexicographic T-paths between the two up-closures.
inline NormalAssistant normal_assistant(const Digraph& d, const Arborescence& t) {
    t.require_within(d);
    const auto endpoints = detail::t_path_endpoints(d, t);

    std::vector<std::size_t> slot(d.vertex_count(), kNoVertex);
    for (std::size_t i = 0; i < t.vertices().size(); ++i) {
        slot[t.vertices()[i]] = i;
    }
    const std::size_t m = t.size();
    std::vector<char> marked(m * m, 0);

    auto branch = [&](VertexId bottom, VertexId top) {
        // vertices strictly above bottom on the chain ending at top
        std::vector<VertexId> chain;
        for (VertexId x = top; x != bottom; x = *t.parent(x)) {
            chain.push_back(x);
        }
        return chain;
    };

    for (VertexId a : t.vertices()) {
        for (VertexId b : endpoints[a]) {
            if (t.comparable(a, b)) {
                continue;
            }
            const VertexId m_ab = t.meet(a, b);
            const auto left = branch(m_ab, a);
            const auto right = branch(m_ab, b);
            for (VertexId v : left) {
                // ancestors of an already marked pair are marked too
                if (marked[slot[v] * m + slot[right.front()]]) {
                    break;
                }
                for (VertexId w : right) {
                    marked[slot[v] * m + slot[w]] = 1;
                }
            }
        }
    }

    std::vector<AssistantEdge> added;
    const VertexSet& tree_vertices = t.vertices();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (!marked[i * m + j]) {
                continue;
            }
            const VertexId v = tree_vertices[i];
            const VertexId w = tree_vertices[j];
            auto witness = find_path(d, t.up_closure(v), t.up_closure(w), tree_vertices);
            if (!witness || !witness->nontrivial()) {
                throw Error(ErrorCode::NotAnArborescence,
                            "internal: no witness for assistant edge " + edge_string(v, w));
            }
            added.push_back({v, w, std::move(*witness)});
        }
    }
    return NormalAssistant(t, std::move(added), d.vertex_count());
}

/// Cycle of the assistant; when normalized, consecutive vertices (cyclically)
/// are incomparable in the tree order.
struct CycleCertificate {
    std::vector<VertexId> vertices;
    bool normalized = false;
};

inline bool is_cycle_of(const Digraph& g, std::span<const VertexId> cycle) {
    if (cycle.size() < 2) {
        return false;
    }
    VertexSet sorted(cycle.begin(), cycle.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        return false;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()])) {
            return false;
        }
    }
    return true;
}

/// Rewrites a cycle of H into one whose consecutive vertices are pairwise
/// tree-incomparable.
///
/// The cycle is read as anchors (x_i, y_i): a climb x_i <=_T y_i along tree
/// edges followed by an added edge y_i -> x_{i+1}. Since the up-closure of y_i
/// lies in that of x_i, x_i -> x_{i+1} is an added edge whenever the two are
/// incomparable; this collapses the whole climb (repeating the uvw -> uw
/// shortcut). If instead x_i <_T x_{i+1}, the climb to y_{i+1} starts at x_i
/// and the two anchors merge. Repeated anchors and chords of added edges are
/// then cut away, so the result is never longer than the input.
inline CycleCertificate normalize_cycle(const NormalAssistant& h, std::span<const VertexId> cycle) {
    const Digraph& g = h.graph();
    const Arborescence& t = h.base();
    if (!is_cycle_of(g, cycle)) {
        throw Error(ErrorCode::NotACycle, "input is not a directed cycle of the assistant");
    }
    const std::size_t k = cycle.size();
    auto is_tree_edge = [&](VertexId a, VertexId b) {
        return t.contains(b) && b != t.root() && *t.parent(b) == a;
    };

    // rotate so that the closing edge is an added edge
    std::size_t shift = k;
    for (std::size_t i = 0; i < k; ++i) {
        if (!is_tree_edge(cycle[(i + k - 1) % k], cycle[i])) {
            shift = i;
            break;
        }
    }
    if (shift == k) {
        throw Error(ErrorCode::NotACycle, "cycle consists of tree edges only");
    }
    std::vector<VertexId> rotated(k);
    for (std::size_t i = 0; i < k; ++i) {
        rotated[i] = cycle[(i + shift) % k];
    }

    struct Anchor {
        VertexId low;
        VertexId high;
    };
    std::vector<Anchor> anchors;
    for (std::size_t i = 0; i < k;) {
        Anchor a{rotated[i], rotated[i]};
        std::size_t j = i;
        while (j + 1 < k && is_tree_edge(rotated[j], rotated[j + 1])) {
            ++j;
        }
        a.high = rotated[j];
        anchors.push_back(a);
        i = j + 1;
    }

    bool changed = true;
    while (changed) {
        changed = false;
        const std::size_t m = anchors.size();
        for (std::size_t i = 0; i < m && !changed; ++i) {
            const std::size_t j = (i + 1) % m;
            if (m > 1 && t.leq(anchors[i].low, anchors[j].low) && anchors[i].low != anchors[j].low) {
                anchors[i].high = anchors[j].high;
                anchors.erase(anchors.begin() + static_cast<std::ptrdiff_t>(j));
                changed = true;
            }
        }
        if (changed) {
            continue;
        }
        // a repeated anchor splits the closed walk into two shorter ones
        for (std::size_t i = 0; i < m && !changed; ++i) {
            for (std::size_t j = i + 1; j < m && !changed; ++j) {
                if (anchors[i].low != anchors[j].low) {
                    continue;
                }
                if (j - i <= m - (j - i)) {
                    anchors = std::vector<Anchor>(anchors.begin() + static_cast<std::ptrdiff_t>(i),
                                                  anchors.begin() + static_cast<std::ptrdiff_t>(j));
                } else {
                    anchors.erase(anchors.begin() + static_cast<std::ptrdiff_t>(i),
                                  anchors.begin() + static_cast<std::ptrdiff_t>(j));
                }
                changed = true;
            }
        }
    }

    std::vector<VertexId> result;
    for (const auto& a : anchors) {
        result.push_back(a.low);
    }

    // drop chords: jump ahead along the longest added edge available
    changed = true;
    while (changed && result.size() > 2) {
        changed = false;
        const std::size_t m = result.size();
        for (std::size_t i = 0; i < m && !changed; ++i) {
            for (std::size_t skip = m - 1; skip >= 2 && !changed; --skip) {
                const std::size_t j = (i + skip) % m;
                if (!h.has_added(result[i], result[j])) {
                    continue;
                }
                std::vector<VertexId> shorter;
                for (std::size_t s = 0; s <= m - skip; ++s) {
                    shorter.push_back(result[(j + s) % m]);
                }
                // shorter = result[j], ..., result[i]
                result = std::move(shorter);
                changed = true;
            }
        }
    }

    for (std::size_t i = 0; i < result.size(); ++i) {
        const VertexId a = result[i];
        const VertexId b = result[(i + 1) % result.size()];
        if (t.comparable(a, b) || !h.has_added(a, b)) {
            throw Error(ErrorCode::NotACycle, "internal: normalization produced an invalid cycle");
        }
    }
    return CycleCertificate{std::move(result), true};
}

struct NormalityVerdict {
    bool normal = false;
    NormalAssistant assistant;
    std::optional<CycleCertificate> certificate;
};

/// t is normal in d iff its normal assistant is acyclic. Non-normal verdicts
/// carry a normalized cycle.
inline NormalityVerdict is_normal(const Digraph& d, const Arborescence& t) {
    NormalityVerdict verdict;
    verdict.assistant = normal_assistant(d, t);
    auto cycle = find_cycle(verdict.assistant.graph());
    verdict.normal = !cycle.has_value();
    if (cycle) {
        verdict.certificate = normalize_cycle(verdict.assistant, *cycle);
    }
    return verdict;
}

} // namespace arbor

#endif

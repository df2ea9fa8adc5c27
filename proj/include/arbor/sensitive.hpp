#ifndef ARBOR_SENSITIVE_HPP
#define ARBOR_SENSITIVE_HPP

#include <algorithm>
#include <optional>
#include <queue>
#include <string>
#include <vector>

#include "arbor/arborescence.hpp"
#include "arbor/digraph.hpp"
#include "arbor/error.hpp"
#include "arbor/normality.hpp"

namespace arbor {

/// Total order on the vertices of a tree, stored as the sequence from smallest
/// to largest together with the inverse rank lookup.
class LinearExtension {
public:
    LinearExtension() = default;

    explicit LinearExtension(std::vector<VertexId> sequence) : sequence_(std::move(sequence)) {
        VertexId top = 0;
        for (VertexId v : sequence_) {
            top = std::max(top, v);
        }
        rank_.assign(sequence_.empty() ? 0 : top + 1, kNoVertex);
        for (std::size_t i = 0; i < sequence_.size(); ++i) {
            if (rank_[sequence_[i]] != kNoVertex) {
                throw Error(ErrorCode::NotALinearExtension,
                            "vertex " + std::to_string(sequence_[i]) + " listed twice");
            }
            rank_[sequence_[i]] = i;
        }
    }

    const std::vector<VertexId>& sequence() const noexcept { return sequence_; }
    std::size_t size() const noexcept { return sequence_.size(); }
    bool contains(VertexId v) const noexcept { return v < rank_.size() && rank_[v] != kNoVertex; }

    std::size_t rank(VertexId v) const {
        if (!contains(v)) {
            throw Error(ErrorCode::NotALinearExtension, "vertex " + std::to_string(v) + " unranked");
        }
        return rank_[v];
    }

    /// v precedes-or-equals w.
    bool precedes(VertexId v, VertexId w) const { return rank(v) <= rank(w); }

    friend bool operator==(const LinearExtension& a, const LinearExtension& b) {
        return a.sequence_ == b.sequence_;
    }

private:
    std::vector<VertexId> sequence_;
    std::vector<std::size_t> rank_;
};

inline bool extends_tree_order(const Arborescence& t, const LinearExtension& order) {
    if (order.size() != t.size()) {
        return false;
    }
    for (VertexId v : t.vertices()) {
        if (!order.contains(v)) {
            return false;
        }
        if (v != t.root() && order.rank(*t.parent(v)) >= order.rank(v)) {
            return false;
        }
    }
    return true;
}

struct SensitiveOrderResult {
    std::optional<LinearExtension> order;
    std::optional<CycleCertificate> certificate;

    bool normal() const noexcept { return order.has_value(); }
};

/// Sibling-block construction: children of every vertex are ordered by a
/// topological order of the assistant restricted to them (ties by id) and the
/// order is the resulting preorder.
inline SensitiveOrderResult sensitive_order_build(const Digraph& d, const Arborescence& t) {
    auto verdict = is_normal(d, t);
    if (!verdict.normal) {
        return {std::nullopt, verdict.certificate};
    }
    const NormalAssistant& h = verdict.assistant;

    auto sorted_children = [&](VertexId parent) {
        auto kids = t.children(parent);
        std::vector<VertexId> siblings(kids.begin(), kids.end());
        std::vector<std::size_t> in_degree(siblings.size(), 0);
        for (std::size_t i = 0; i < siblings.size(); ++i) {
            for (std::size_t j = 0; j < siblings.size(); ++j) {
                if (i != j && h.has_added(siblings[i], siblings[j])) {
                    ++in_degree[j];
                }
            }
        }
        std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
        for (std::size_t i = 0; i < siblings.size(); ++i) {
            if (in_degree[i] == 0) {
                ready.push(i);
            }
        }
        std::vector<VertexId> ordered;
        while (!ready.empty()) {
            std::size_t i = ready.top();
            ready.pop();
            ordered.push_back(siblings[i]);
            for (std::size_t j = 0; j < siblings.size(); ++j) {
                if (i != j && h.has_added(siblings[i], siblings[j]) && --in_degree[j] == 0) {
                    ready.push(j);
                }
            }
        }
        return ordered;
    };

    std::vector<VertexId> sequence;
    sequence.reserve(t.size());
    std::vector<VertexId> stack{t.root()};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        sequence.push_back(v);
        auto kids = sorted_children(v);
        for (auto it = kids.rbegin(); it != kids.rend(); ++it) {
            stack.push_back(*it);
        }
    }
    return {LinearExtension(std::move(sequence)), std::nullopt};
}

enum class SensitivityCondition { Branch, Path };

inline std::string_view to_string(SensitivityCondition c) {
    return c == SensitivityCondition::Branch ? "branch" : "path";
}

/// Incomparable pair v before w that breaks one of the two conditions. For a
/// branch violation, above is a vertex of the up-closure of v not before w; for
/// a path violation, witness is a T-path starting exactly at w and ending
/// exactly at v.
struct SensitivityViolation {
    VertexId v = 0;
    VertexId w = 0;
    SensitivityCondition condition = SensitivityCondition::Branch;
    VertexId above = kNoVertex;
    std::optional<DirectedPath> witness;
};

struct SensitivityVerdict {
    bool sensitive = false;
    std::optional<SensitivityViolation> violation;
};

inline SensitivityVerdict is_sensitive(const Digraph& d, const Arborescence& t,
                                       const LinearExtension& order) {
    t.require_within(d);
    if (!extends_tree_order(t, order)) {
        throw Error(ErrorCode::NotALinearExtension, "order does not extend the tree order");
    }
    // largest rank in each up-closure
    std::vector<VertexId> top_of(d.vertex_count(), kNoVertex);
    const auto& pre = t.preorder();
    for (auto it = pre.rbegin(); it != pre.rend(); ++it) {
        VertexId v = *it;
        VertexId best = v;
        for (VertexId c : t.children(v)) {
            if (order.rank(top_of[c]) > order.rank(best)) {
                best = top_of[c];
            }
        }
        top_of[v] = best;
    }
    const auto endpoints = detail::t_path_endpoints(d, t);
    const auto& seq = order.sequence();
    for (std::size_t i = 0; i < seq.size(); ++i) {
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            const VertexId v = seq[i];
            const VertexId w = seq[j];
            if (t.comparable(v, w)) {
                continue;
            }
            if (order.rank(top_of[v]) >= order.rank(w)) {
                return {false, SensitivityViolation{v, w, SensitivityCondition::Branch, top_of[v], std::nullopt}};
            }
            if (std::binary_search(endpoints[w].begin(), endpoints[w].end(), v)) {
                const VertexId from[] = {w};
                const VertexId to[] = {v};
                auto path = find_path(d, from, to, t.vertices());
                return {false, SensitivityViolation{v, w, SensitivityCondition::Path, kNoVertex, path}};
            }
        }
    }
    return {true, std::nullopt};
}

} // namespace arbor

#endif

#ifndef ARBOR_ARBORESCENCE_HPP
#define ARBOR_ARBORESCENCE_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "arbor/digraph.hpp"
#include "arbor/error.hpp"

namespace arbor {

/// Rooted tree with all edges oriented away from the root. Vertex ids live in
/// the id space of a host digraph; the tree need not be spanning.
///
/// Ancestor queries use preorder intervals, so leq/meet are cheap once built.
class Arborescence {
public:
    Arborescence() = default;

    /// Single-vertex arborescence.
    explicit Arborescence(VertexId root) : Arborescence(root, std::span<const Edge>{}) {}

    /// edges are (parent, child) pairs.
    Arborescence(VertexId root, std::span<const Edge> edges) : root_(root) {
        VertexId top = root;
        for (const auto& [p, c] : edges) {
            top = std::max({top, p, c});
        }
        universe_ = top + 1;
        parent_.assign(universe_, kNoVertex);
        present_.assign(universe_, 0);
        present_[root] = 1;
        for (const auto& [p, c] : edges) {
            if (p == c) {
                throw Error(ErrorCode::NotAnArborescence, "loop " + edge_string(p, c));
            }
            if (c == root) {
                throw Error(ErrorCode::NotAnArborescence, "edge into root " + edge_string(p, c));
            }
            if (parent_[c] != kNoVertex) {
                throw Error(ErrorCode::NotAnArborescence,
                            "vertex " + std::to_string(c) + " has two parents");
            }
            parent_[c] = p;
            present_[c] = 1;
        }
        for (const auto& [p, c] : edges) {
            if (!present_[p]) {
                throw Error(ErrorCode::NotAnArborescence,
                            "parent " + std::to_string(p) + " is not connected to the root");
            }
        }
        children_.assign(universe_, {});
        for (const auto& [p, c] : edges) {
            children_[p].push_back(c);
        }
        for (auto& list : children_) {
            std::sort(list.begin(), list.end());
        }
        index_preorder();
        if (vertices_.size() != edges.size() + 1) {
            throw Error(ErrorCode::NotAnArborescence, "parent mapping has a cycle");
        }
    }

    Arborescence(VertexId root, std::initializer_list<Edge> edges)
        : Arborescence(root, std::span<const Edge>(edges.begin(), edges.size())) {}

    /// Builds from a parent array (kNoVertex marks non-members; root's entry is ignored).
    static Arborescence from_parents(VertexId root, std::span<const VertexId> parent) {
        std::vector<Edge> edges;
        for (VertexId v = 0; v < parent.size(); ++v) {
            if (v != root && parent[v] != kNoVertex) {
                edges.emplace_back(parent[v], v);
            }
        }
        return Arborescence(root, edges);
    }

    VertexId root() const noexcept { return root_; }
    std::size_t size() const noexcept { return vertices_.size(); }
    /// One past the largest id that can belong to the tree.
    std::size_t universe() const noexcept { return universe_; }
    const VertexSet& vertices() const noexcept { return vertices_; }

    bool contains(VertexId v) const noexcept { return v < universe_ && present_[v]; }

    std::optional<VertexId> parent(VertexId v) const {
        require(v);
        if (v == root_) {
            return std::nullopt;
        }
        return parent_[v];
    }

    std::span<const VertexId> children(VertexId v) const {
        require(v);
        return children_[v];
    }

    std::size_t depth(VertexId v) const {
        require(v);
        return depth_[v];
    }

    /// Tree edges (parent, child), sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> result;
        for (VertexId v : vertices_) {
            if (v != root_) {
                result.emplace_back(parent_[v], v);
            }
        }
        std::sort(result.begin(), result.end());
        return result;
    }

    /// v <=_T w: the root-to-w path passes through v.
    bool leq(VertexId v, VertexId w) const {
        require(v);
        require(w);
        return tin_[v] <= tin_[w] && tout_[w] <= tout_[v];
    }

    bool comparable(VertexId v, VertexId w) const { return leq(v, w) || leq(w, v); }

    /// Greatest common lower bound in the tree order.
    VertexId meet(VertexId v, VertexId w) const {
        require(v);
        require(w);
        while (depth_[v] > depth_[w]) v = parent_[v];
        while (depth_[w] > depth_[v]) w = parent_[w];
        while (v != w) {
            v = parent_[v];
            w = parent_[w];
        }
        return v;
    }

    /// Up-closure of v: v and all its descendants, sorted.
    VertexSet up_closure(VertexId v) const {
        require(v);
        VertexSet result(preorder_.begin() + static_cast<std::ptrdiff_t>(tin_[v]),
                         preorder_.begin() + static_cast<std::ptrdiff_t>(tout_[v]));
        std::sort(result.begin(), result.end());
        return result;
    }

    /// Down-closure of v as the chain root, ..., v.
    std::vector<VertexId> down_closure(VertexId v) const {
        require(v);
        std::vector<VertexId> chain;
        for (VertexId x = v; x != kNoVertex; x = (x == root_ ? kNoVertex : parent_[x])) {
            chain.push_back(x);
        }
        std::reverse(chain.begin(), chain.end());
        return chain;
    }

    /// Child of ancestor a on the way to its strict descendant v.
    VertexId child_toward(VertexId a, VertexId v) const {
        require(a);
        require(v);
        if (!leq(a, v) || a == v) {
            throw Error(ErrorCode::VertexNotInTree,
                        std::to_string(v) + " is not above " + std::to_string(a));
        }
        while (parent_[v] != a) {
            v = parent_[v];
        }
        return v;
    }

    /// Level n: all vertices at distance n from the root.
    std::vector<VertexSet> levels() const {
        std::vector<VertexSet> result;
        for (VertexId v : vertices_) {
            if (depth_[v] >= result.size()) {
                result.resize(depth_[v] + 1);
            }
            result[depth_[v]].push_back(v);
        }
        return result;
    }

    /// Preorder visiting children in increasing id order.
    const std::vector<VertexId>& preorder() const noexcept { return preorder_; }

    /// Tree edges must be edges of d and vertices must be vertices of d.
    void require_within(const Digraph& d) const {
        for (VertexId v : vertices_) {
            if (!d.contains(v)) {
                throw Error(ErrorCode::VertexNotInHost, "vertex " + std::to_string(v));
            }
        }
        for (const auto& [p, c] : edges()) {
            if (!d.has_edge(p, c)) {
                throw Error(ErrorCode::EdgeMissingFromHost, "tree edge " + edge_string(p, c));
            }
        }
    }

    friend bool operator==(const Arborescence& a, const Arborescence& b) {
        return a.root_ == b.root_ && a.edges() == b.edges();
    }

private:
    void require(VertexId v) const {
        if (!contains(v)) {
            throw Error(ErrorCode::VertexNotInTree, "vertex " + std::to_string(v));
        }
    }

    void index_preorder() {
        tin_.assign(universe_, 0);
        tout_.assign(universe_, 0);
        depth_.assign(universe_, 0);
        preorder_.clear();
        std::vector<std::pair<VertexId, std::size_t>> frames{{root_, 0}};
        tin_[root_] = 0;
        preorder_.push_back(root_);
        while (!frames.empty()) {
            auto& [v, pos] = frames.back();
            if (pos < children_[v].size()) {
                VertexId c = children_[v][pos++];
                depth_[c] = depth_[v] + 1;
                tin_[c] = preorder_.size();
                preorder_.push_back(c);
                frames.emplace_back(c, 0);
                continue;
            }
            tout_[v] = preorder_.size();
            frames.pop_back();
        }
        vertices_ = preorder_;
        std::sort(vertices_.begin(), vertices_.end());
    }

    VertexId root_ = 0;
    std::size_t universe_ = 0;
    std::vector<VertexId> parent_;
    std::vector<char> present_;
    std::vector<std::vector<VertexId>> children_;
    std::vector<std::size_t> depth_;
    std::vector<std::size_t> tin_;
    std::vector<std::size_t> tout_;
    std::vector<VertexId> preorder_;
    VertexSet vertices_;
};

enum class TreeQueryKind { Leq, UpClosure, DownClosure, Meet, Level };

using TreeAnswer = std::variant<bool, VertexId, VertexSet>;

/// Uniform entry point for the tree-order queries; level answers are depths.
inline TreeAnswer tree_query(const Arborescence& t, TreeQueryKind kind,
                             std::span<const VertexId> args) {
    auto arg = [&](std::size_t i) {
        if (i >= args.size()) {
            throw Error(ErrorCode::BadParameters, "tree query needs more arguments");
        }
        return args[i];
    };
    switch (kind) {
    case TreeQueryKind::Leq: return t.leq(arg(0), arg(1));
    case TreeQueryKind::UpClosure: return t.up_closure(arg(0));
    case TreeQueryKind::DownClosure: return t.down_closure(arg(0));
    case TreeQueryKind::Meet: return t.meet(arg(0), arg(1));
    case TreeQueryKind::Level: return static_cast<VertexId>(t.depth(arg(0)));
    }
    return false;
}

} // namespace arbor

#endif

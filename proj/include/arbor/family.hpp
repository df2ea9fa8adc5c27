#ifndef ARBOR_FAMILY_HPP
#define ARBOR_FAMILY_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arbor/arborescence.hpp"
#include "arbor/digraph.hpp"
#include "arbor/error.hpp"

namespace arbor {

/// Countable collection of rays whose vertex ids strictly increase along each
/// ray, so the part of a ray inside a window of the first `bound` vertices is
/// a prefix of it.
struct RaySet {
    /// ids of the rays having at least one vertex below bound
    std::function<std::vector<std::size_t>(std::size_t bound)> visible;
    /// vertices of the ray below bound, in ray order
    std::function<std::vector<VertexId>(std::size_t ray, std::size_t bound)> prefix;
    std::function<std::string(std::size_t ray)> name;

    static RaySet none() {
        return {[](std::size_t) { return std::vector<std::size_t>{}; },
                [](std::size_t, std::size_t) { return std::vector<VertexId>{}; },
                [](std::size_t ray) { return "ray" + std::to_string(ray); }};
    }
};

enum class LimitKind { EndEnd, VertexEnd, EndVertex };

/// Limit edge known to exist in the family. For EndEnd both ids are ends; for
/// VertexEnd `from` is a vertex and `to` an end; EndVertex is the mirror.
struct DeclaredLimitEdge {
    LimitKind kind = LimitKind::EndEnd;
    std::size_t from = 0;
    std::size_t to = 0;
};

struct EndOracle {
    RaySet ends;
    std::vector<DeclaredLimitEdge> limit_edges;
    /// nullopt for infinitely many ends
    std::optional<std::size_t> end_count;
};

/// Arborescence of a family given by a parent rule. Parents always have smaller
/// ids than their children, so every window restricts to an arborescence.
struct TreePresentation {
    std::string name;
    VertexId root = 0;
    /// parent of a non-root tree vertex; nullopt for the root and non-members
    std::function<std::optional<VertexId>(VertexId)> parent;
    std::function<bool(VertexId)> contains;
    /// the rays of the tree starting at the root
    RaySet rays = RaySet::none();

    Arborescence window(std::size_t bound) const {
        std::vector<Edge> edges;
        for (VertexId v = 0; v < bound; ++v) {
            if (v == root || !contains(v)) {
                continue;
            }
            auto p = parent(v);
            if (p && *p < bound) {
                edges.emplace_back(*p, v);
            }
        }
        return Arborescence(root, edges);
    }

    static TreePresentation from(const Arborescence& t) {
        TreePresentation p;
        p.name = "explicit";
        p.root = t.root();
        p.parent = [t](VertexId v) -> std::optional<VertexId> {
            if (!t.contains(v) || v == t.root()) {
                return std::nullopt;
            }
            return t.parent(v);
        };
        p.contains = [t](VertexId v) { return t.contains(v); };
        return p;
    }
};

/// Finitely presented, possibly infinite digraph. Vertex ids are enumeration
/// indices; neighbourhoods are always queried below a bound, which also covers
/// vertices of infinite degree.
class LazyFamily {
public:
    virtual ~LazyFamily() = default;

    virtual std::string name() const = 0;
    /// nullopt for infinite families
    virtual std::optional<std::size_t> vertex_count() const { return std::nullopt; }
    virtual std::vector<VertexId> out_neighbors(VertexId v, std::size_t bound) const = 0;
    virtual std::vector<VertexId> in_neighbors(VertexId v, std::size_t bound) const = 0;
    /// v has a neighbour (either direction) with id >= bound
    virtual bool clipped(VertexId v, std::size_t bound) const = 0;
    virtual std::string label(VertexId v) const { return std::to_string(v); }
    virtual bool declared_solid() const = 0;
    /// longest link between consecutive beads/rungs; drives the window slack
    virtual std::size_t link_length() const { return 1; }
    virtual EndOracle oracle() const = 0;
    virtual std::optional<TreePresentation> canonical_tree() const { return std::nullopt; }
    /// upper bound on the number of strong components of D - X_n, for solid families
    virtual std::optional<std::size_t> component_bound() const { return std::nullopt; }

    std::size_t slack() const { return slack_ ? *slack_ : 2 * std::max<std::size_t>(link_length(), 2); }
    void set_slack(std::size_t s) { slack_ = s; }

    /// X_n: the first n enumerated vertices.
    VertexSet separator(std::size_t n) const {
        VertexSet x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = i;
        }
        return x;
    }

private:
    std::optional<std::size_t> slack_;
};

namespace detail {

inline std::vector<VertexId> below(std::initializer_list<VertexId> candidates, std::size_t bound) {
    std::vector<VertexId> result;
    for (VertexId v : candidates) {
        if (v < bound) {
            result.push_back(v);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

inline std::vector<VertexId> range_below(VertexId first, VertexId last_exclusive) {
    std::vector<VertexId> result;
    for (VertexId v = first; v < last_exclusive; ++v) {
        result.push_back(v);
    }
    return result;
}

template <class F>
std::vector<VertexId> ray_prefix(std::size_t bound, F vertex_at) {
    std::vector<VertexId> result;
    for (std::size_t i = 0;; ++i) {
        VertexId v = vertex_at(i);
        if (v >= bound) {
            break;
        }
        result.push_back(v);
    }
    return result;
}

inline constexpr VertexId kFar = std::numeric_limits<VertexId>::max() / 4;

} // namespace detail

/// v0 <-> v1 <-> v2 <-> ...; a single end.
class SymmetricRay final : public LazyFamily {
public:
    std::string name() const override { return "symmetric_ray"; }
    std::vector<VertexId> out_neighbors(VertexId v, std::size_t bound) const override {
        return v == 0 ? detail::below({1}, bound) : detail::below({v - 1, v + 1}, bound);
    }
    std::vector<VertexId> in_neighbors(VertexId v, std::size_t bound) const override {
        return out_neighbors(v, bound);
    }
    bool clipped(VertexId v, std::size_t bound) const override { return v + 1 >= bound; }
    std::string label(VertexId v) const override { return "v" + std::to_string(v); }
    bool declared_solid() const override { return true; }
    std::optional<std::size_t> component_bound() const override { return 1; }

    EndOracle oracle() const override {
        EndOracle o;
        o.ends = path_ray("omega");
        o.end_count = 1;
        return o;
    }

    std::optional<TreePresentation> canonical_tree() const override {
        TreePresentation t;
        t.name = "path";
        t.root = 0;
        t.parent = [](VertexId v) -> std::optional<VertexId> {
            return v == 0 ? std::nullopt : std::optional<VertexId>(v - 1);
        };
        t.contains = [](VertexId) { return true; };
        t.rays = path_ray("path");
        return t;
    }

private:
    static RaySet path_ray(std::string name) {
        return {[](std::size_t bound) { return bound > 0 ? std::vector<std::size_t>{0} : std::vector<std::size_t>{}; },
                [](std::size_t, std::size_t bound) { return detail::range_below(0, bound); },
                [name](std::size_t) { return name; }};
    }
};

/// Two symmetric rays a, b with rungs a_i -> b_i. a_i = 2i, b_i = 2i + 1.
/// Ends omega_a, omega_b and the limit edge omega_a omega_b.
class DirectedLadder final : public LazyFamily {
public:
    static constexpr VertexId a(std::size_t i) { return 2 * i; }
    static constexpr VertexId b(std::size_t i) { return 2 * i + 1; }

    std::string name() const override { return "directed_ladder"; }

    std::vector<VertexId> out_neighbors(VertexId v, std::size_t bound) const override {
        const std::size_t i = v / 2;
        if (v % 2 == 0) {
            return i == 0 ? detail::below({a(1), b(0)}, bound) : detail::below({a(i - 1), a(i + 1), b(i)}, bound);
        }
        return i == 0 ? detail::below({b(1)}, bound) : detail::below({b(i - 1), b(i + 1)}, bound);
    }

    std::vector<VertexId> in_neighbors(VertexId v, std::size_t bound) const override {
        const std::size_t i = v / 2;
        if (v % 2 == 0) {
            return i == 0 ? detail::below({a(1)}, bound) : detail::below({a(i - 1), a(i + 1)}, bound);
        }
        return i == 0 ? detail::below({a(0), b(1)}, bound) : detail::below({a(i), b(i - 1), b(i + 1)}, bound);
    }

    bool clipped(VertexId v, std::size_t bound) const override { return v + 2 >= bound; }

    std::string label(VertexId v) const override {
        return std::string(v % 2 == 0 ? "a" : "b") + std::to_string(v / 2);
    }
    bool declared_solid() const override { return true; }
    std::optional<std::size_t> component_bound() const override { return 2; }

    EndOracle oracle() const override {
        EndOracle o;
        o.ends = {[](std::size_t bound) {
                      std::vector<std::size_t> vis;
                      if (bound > a(0)) vis.push_back(0);
                      if (bound > b(0)) vis.push_back(1);
                      return vis;
                  },
                  [](std::size_t ray, std::size_t bound) {
                      return detail::ray_prefix(bound, [ray](std::size_t i) { return ray == 0 ? a(i) : b(i); });
                  },
                  [](std::size_t ray) { return std::string(ray == 0 ? "omega_a" : "omega_b"); }};
        o.limit_edges.push_back({LimitKind::EndEnd, 0, 1});
        o.end_count = 2;
        return o;
    }

    /// a-path from a_0, the rung a_0 -> b_0, then the b-path.
    std::optional<TreePresentation> canonical_tree() const override {
        TreePresentation t;
        t.name = "ladder_canonical";
        t.root = a(0);
        t.parent = [](VertexId v) -> std::optional<VertexId> {
            if (v == a(0)) return std::nullopt;
            if (v == b(0)) return a(0);
            return v - 2;
        };
        t.contains = [](VertexId) { return true; };
        t.rays = {[](std::size_t bound) {
                      std::vector<std::size_t> vis;
                      if (bound > a(1)) vis.push_back(0);
                      if (bound > b(0)) vis.push_back(1);
                      return vis;
                  },
                  [](std::size_t ray, std::size_t bound) {
                      return detail::ray_prefix(bound, [ray](std::size_t i) {
                          if (ray == 0) return a(i);
                          return i == 0 ? a(0) : b(i - 1);
                      });
                  },
                  [](std::size_t ray) { return std::string(ray == 0 ? "T_a" : "T_b"); }};
        return t;
    }
};

/// One-way bottom ray b_0 -> b_1 -> ..., and symmetric columns
/// b_i <-> v_{i,1} <-> v_{i,2} <-> ... . Vertex (i, 0) is b_i, (i, j) is v_{i,j}.
///
/// Enumeration runs in stages k = 0, 1, ...: stage k lists b_k, v_{k,1} and,
/// for odd k, one more vertex on column c = trailing-zero count of (k+1)/2.
/// Columns appear at a linear rate while every column keeps growing.
class CombOfColumns final : public LazyFamily {
public:
    struct Coord {
        std::size_t column = 0;
        std::size_t height = 0;
        friend bool operator==(const Coord&, const Coord&) = default;
    };

    /// First id of stage k.
    static constexpr VertexId stage_start(std::size_t k) { return 2 * k + k / 2; }

    static VertexId id(Coord c) {
        if (c.height == 0) {
            return stage_start(c.column);
        }
        if (c.height == 1) {
            return stage_start(c.column) + 1;
        }
        // height t+2 is emitted at stage 2^{column+1} (2t+1) - 1
        const std::size_t t = c.height - 2;
        if (c.column >= 40 || t >= (std::size_t{1} << 20)) {
            return detail::kFar;
        }
        const std::size_t k = (std::size_t{1} << (c.column + 1)) * (2 * t + 1) - 1;
        return stage_start(k) + 2;
    }

    static Coord coord(VertexId v) {
        std::size_t k = v / 3;
        while (stage_start(k + 1) <= v) ++k;
        while (stage_start(k) > v) --k;
        const std::size_t offset = v - stage_start(k);
        if (offset < 2) {
            return {k, offset};
        }
        const std::size_t half = (k + 1) / 2;
        const std::size_t c = static_cast<std::size_t>(std::countr_zero(half));
        const std::size_t t = ((half >> c) - 1) / 2;
        return {c, t + 2};
    }

    /// Number of columns whose first column vertex lies below bound.
    static std::size_t columns_below(std::size_t bound) {
        std::size_t k = 0;
        while (stage_start(k) + 1 < bound) ++k;
        return k;
    }

    std::string name() const override { return "comb_of_columns"; }

    std::vector<VertexId> out_neighbors(VertexId v, std::size_t bound) const override {
        const Coord c = coord(v);
        if (c.height == 0) {
            return detail::below({id({c.column + 1, 0}), id({c.column, 1})}, bound);
        }
        return detail::below({id({c.column, c.height - 1}), id({c.column, c.height + 1})}, bound);
    }

    std::vector<VertexId> in_neighbors(VertexId v, std::size_t bound) const override {
        const Coord c = coord(v);
        if (c.height == 0) {
            if (c.column == 0) {
                return detail::below({id({0, 1})}, bound);
            }
            return detail::below({id({c.column - 1, 0}), id({c.column, 1})}, bound);
        }
        return out_neighbors(v, bound);
    }

    bool clipped(VertexId v, std::size_t bound) const override {
        const Coord c = coord(v);
        if (c.height == 0) {
            return std::max(id({c.column + 1, 0}), id({c.column, 1})) >= bound;
        }
        return id({c.column, c.height + 1}) >= bound;
    }

    std::string label(VertexId v) const override {
        const Coord c = coord(v);
        if (c.height == 0) {
            return "b" + std::to_string(c.column);
        }
        return "v" + std::to_string(c.column) + "." + std::to_string(c.height);
    }

    bool declared_solid() const override { return false; }

    EndOracle oracle() const override {
        EndOracle o;
        o.ends = {[](std::size_t bound) {
                      std::vector<std::size_t> vis(columns_below(bound));
                      for (std::size_t i = 0; i < vis.size(); ++i) vis[i] = i;
                      return vis;
                  },
                  [](std::size_t ray, std::size_t bound) {
                      return detail::ray_prefix(bound, [ray](std::size_t i) { return id({ray, i + 1}); });
                  },
                  [](std::size_t ray) { return "omega_" + std::to_string(ray); }};
        return o;
    }

    /// Rooted at b_0: the bottom ray plus every column hanging off its b_i.
    /// Tree ray 0 is the bottom; tree ray i + 1 climbs column i.
    std::optional<TreePresentation> canonical_tree() const override {
        TreePresentation t;
        t.name = "comb_canonical";
        t.root = 0;
        t.parent = [](VertexId v) -> std::optional<VertexId> {
            const Coord c = coord(v);
            if (c.height == 0) {
                return c.column == 0 ? std::nullopt : std::optional<VertexId>(id({c.column - 1, 0}));
            }
            return id({c.column, c.height - 1});
        };
        t.contains = [](VertexId) { return true; };
        t.rays = {[](std::size_t bound) {
                      std::vector<std::size_t> vis{0};
                      for (std::size_t i = 0; i < columns_below(bound); ++i) vis.push_back(i + 1);
                      return vis;
                  },
                  [](std::size_t ray, std::size_t bound) {
                      if (ray == 0) {
                          return detail::ray_prefix(bound, [](std::size_t i) { return id({i, 0}); });
                      }
                      const std::size_t col = ray - 1;
                      return detail::ray_prefix(bound, [col](std::size_t i) {
                          return i <= col ? id({i, 0}) : id({col, i - col});
                      });
                  },
                  [](std::size_t ray) {
                      return ray == 0 ? std::string("T_bottom") : "T_column_" + std::to_string(ray - 1);
                  }};
        return t;
    }
};

/// Symmetric ray v_i (id i + 1) plus an apex u (id 0) with u -> v_i for all i.
/// The apex sends a limit edge to the single end.
class ApexNecklace final : public LazyFamily {
public:
    std::string name() const override { return "apex_necklace"; }

    std::vector<VertexId> out_neighbors(VertexId v, std::size_t bound) const override {
        if (v == 0) {
            return detail::range_below(1, bound);
        }
        return v == 1 ? detail::below({2}, bound) : detail::below({v - 1, v + 1}, bound);
    }

    std::vector<VertexId> in_neighbors(VertexId v, std::size_t bound) const override {
        if (v == 0) {
            return {};
        }
        return v == 1 ? detail::below({0, 2}, bound) : detail::below({0, v - 1, v + 1}, bound);
    }

    bool clipped(VertexId v, std::size_t bound) const override { return v == 0 || v + 1 >= bound; }

    std::string label(VertexId v) const override { return v == 0 ? "u" : "v" + std::to_string(v - 1); }
    bool declared_solid() const override { return true; }
    std::optional<std::size_t> component_bound() const override { return 2; }

    EndOracle oracle() const override {
        EndOracle o;
        o.ends = {[](std::size_t bound) { return bound > 1 ? std::vector<std::size_t>{0} : std::vector<std::size_t>{}; },
                  [](std::size_t, std::size_t bound) { return detail::range_below(1, bound); },
                  [](std::size_t) { return std::string("omega"); }};
        o.limit_edges.push_back({LimitKind::VertexEnd, 0, 0});
        o.end_count = 1;
        return o;
    }

    /// u -> v_0 -> v_1 -> ...
    std::optional<TreePresentation> canonical_tree() const override {
        TreePresentation t;
        t.name = "apex_path";
        t.root = 0;
        t.parent = [](VertexId v) -> std::optional<VertexId> {
            return v == 0 ? std::nullopt : std::optional<VertexId>(v - 1);
        };
        t.contains = [](VertexId) { return true; };
        t.rays = {[](std::size_t bound) { return bound > 1 ? std::vector<std::size_t>{0} : std::vector<std::size_t>{}; },
                  [](std::size_t, std::size_t bound) { return detail::range_below(0, bound); },
                  [](std::size_t) { return std::string("T_path"); }};
        return t;
    }
};

/// Vertices 0, 1, 2, ... with i -> j for all i < j. No solid rays, hence no ends.
class TransitiveOmega final : public LazyFamily {
public:
    std::string name() const override { return "transitive_omega"; }
    std::vector<VertexId> out_neighbors(VertexId v, std::size_t bound) const override {
        return detail::range_below(v + 1, bound);
    }
    std::vector<VertexId> in_neighbors(VertexId v, std::size_t bound) const override {
        return detail::range_below(0, std::min<std::size_t>(v, bound));
    }
    bool clipped(VertexId, std::size_t) const override { return true; }
    bool declared_solid() const override { return false; }

    EndOracle oracle() const override {
        EndOracle o;
        o.ends = RaySet::none();
        o.end_count = 0;
        return o;
    }

    /// all edges with tail 0
    std::optional<TreePresentation> canonical_tree() const override {
        TreePresentation t;
        t.name = "star_from_0";
        t.root = 0;
        t.parent = [](VertexId v) -> std::optional<VertexId> {
            return v == 0 ? std::nullopt : std::optional<VertexId>(0);
        };
        t.contains = [](VertexId) { return true; };
        return t;
    }
};

/// Root 0 with leaf children 1, 2, 3, ...; a tree with a vertex of infinite degree.
class InfiniteStar final : public LazyFamily {
public:
    std::string name() const override { return "infinite_star"; }
    std::vector<VertexId> out_neighbors(VertexId v, std::size_t bound) const override {
        return v == 0 ? detail::range_below(1, bound) : std::vector<VertexId>{};
    }
    std::vector<VertexId> in_neighbors(VertexId v, std::size_t bound) const override {
        return v == 0 ? std::vector<VertexId>{} : detail::below({0}, bound);
    }
    bool clipped(VertexId v, std::size_t) const override { return v == 0; }
    bool declared_solid() const override { return false; }

    EndOracle oracle() const override {
        EndOracle o;
        o.ends = RaySet::none();
        o.end_count = 0;
        return o;
    }

    std::optional<TreePresentation> canonical_tree() const override {
        TreePresentation t;
        t.name = "star";
        t.root = 0;
        t.parent = [](VertexId v) -> std::optional<VertexId> {
            return v == 0 ? std::nullopt : std::optional<VertexId>(0);
        };
        t.contains = [](VertexId) { return true; };
        return t;
    }
};

/// A finite digraph viewed as a family; it has no ends.
class FiniteFamily final : public LazyFamily {
public:
    explicit FiniteFamily(Digraph d) : d_(std::move(d)) {}

    std::string name() const override { return "finite"; }
    std::optional<std::size_t> vertex_count() const override { return d_.vertex_count(); }

    std::vector<VertexId> out_neighbors(VertexId v, std::size_t bound) const override {
        return filter(d_.out(v), bound);
    }
    std::vector<VertexId> in_neighbors(VertexId v, std::size_t bound) const override {
        return filter(d_.in(v), bound);
    }
    bool clipped(VertexId v, std::size_t bound) const override {
        auto out = d_.out(v);
        auto in = d_.in(v);
        return (!out.empty() && out.back() >= bound) || (!in.empty() && in.back() >= bound);
    }
    std::string label(VertexId v) const override {
        auto it = d_.names().find(v);
        return it != d_.names().end() ? it->second : std::to_string(d_.label(v));
    }
    bool declared_solid() const override { return true; }
    std::optional<std::size_t> component_bound() const override { return d_.vertex_count(); }

    EndOracle oracle() const override {
        EndOracle o;
        o.ends = RaySet::none();
        o.end_count = 0;
        return o;
    }

    const Digraph& digraph() const noexcept { return d_; }

private:
    static std::vector<VertexId> filter(std::span<const VertexId> list, std::size_t bound) {
        std::vector<VertexId> result;
        for (VertexId v : list) {
            if (v < bound) {
                result.push_back(v);
            }
        }
        return result;
    }

    Digraph d_;
};

/// Finite induced window of a family: the first depth + slack vertices.
struct Truncation {
    std::size_t depth = 0;
    std::size_t slack = 0;
    Digraph window;
    /// vertices with a neighbour outside the window
    VertexSet boundary;

    std::size_t size() const noexcept { return window.vertex_count(); }
    bool on_boundary(VertexId v) const { return std::binary_search(boundary.begin(), boundary.end(), v); }
};

inline Truncation truncate(const LazyFamily& f, std::size_t depth) {
    Truncation t;
    t.depth = depth;
    t.slack = f.slack();
    std::size_t bound = depth + t.slack;
    if (auto n = f.vertex_count()) {
        bound = std::min(bound, *n);
    }
    std::vector<Edge> edges;
    for (VertexId v = 0; v < bound; ++v) {
        for (VertexId w : f.out_neighbors(v, bound)) {
            edges.emplace_back(v, w);
        }
        if (f.clipped(v, bound)) {
            t.boundary.push_back(v);
        }
    }
    t.window = Digraph(bound, edges);
    return t;
}

/// Builds a catalog family by name. `finite` needs the digraph supplied separately.
inline std::unique_ptr<LazyFamily> make_family(const std::string& name) {
    if (name == "symmetric_ray") return std::make_unique<SymmetricRay>();
    if (name == "directed_ladder") return std::make_unique<DirectedLadder>();
    if (name == "comb_of_columns") return std::make_unique<CombOfColumns>();
    if (name == "apex_necklace") return std::make_unique<ApexNecklace>();
    if (name == "transitive_omega") return std::make_unique<TransitiveOmega>();
    if (name == "infinite_star") return std::make_unique<InfiniteStar>();
    throw Error(ErrorCode::UnknownFamily, name);
}

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names{"symmetric_ray",    "directed_ladder", "comb_of_columns",
                                                "apex_necklace",    "transitive_omega", "infinite_star",
                                                "finite"};
    return names;
}

} // namespace arbor

#endif

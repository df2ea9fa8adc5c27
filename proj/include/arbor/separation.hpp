#ifndef ARBOR_SEPARATION_HPP
#define ARBOR_SEPARATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "arbor/arborescence.hpp"
#include "arbor/digraph.hpp"
#include "arbor/normality.hpp"

namespace arbor {

struct SeparationResult {
    bool holds = false;
    /// down(v) ∩ down(w), as a chain from the root
    std::vector<VertexId> separator;
    /// a w-v path avoiding the separator, if one exists
    std::optional<DirectedPath> counter_path;
};

/// Normal order of a normal tree: v ⊴ w iff w is reachable from v in the assistant.
inline bool normal_order_leq(const NormalAssistant& h, VertexId v, VertexId w) {
    const VertexId from[] = {v};
    return reachable_from(h.graph(), from)[w] != 0;
}

/// Incomparable v, w qualify for the separation check when no vertex of w's
/// branch above the meet lies below v in the normal order, i.e. the child of
/// meet(v, w) towards w is not below v.
inline bool separation_qualifies(const NormalAssistant& h, const Arborescence& t, VertexId v, VertexId w) {
    return !t.comparable(v, w) && !normal_order_leq(h, t.child_toward(t.meet(v, w), w), v);
}

/// For a qualifying pair v, w of a normal t, checks that every w-v path in d
/// meets the common down-closure of v and w.
inline SeparationResult separation_check(const Digraph& d, const Arborescence& t, VertexId v, VertexId w) {
    auto verdict = is_normal(d, t);
    if (!verdict.normal) {
        throw Error(ErrorCode::NotNormalInput, "separation needs a normal arborescence");
    }
    if (t.comparable(v, w)) {
        throw Error(ErrorCode::ComparableVertices, std::to_string(v) + " and " + std::to_string(w));
    }
    if (!separation_qualifies(verdict.assistant, t, v, w)) {
        const VertexId branch = t.child_toward(t.meet(v, w), w);
        throw Error(ErrorCode::PreconditionOrderViolated,
                    std::to_string(branch) + " lies below " + std::to_string(v) + " in the normal order");
    }
    SeparationResult result;
    result.separator = t.down_closure(t.meet(v, w));
    const VertexId from[] = {w};
    const VertexId to[] = {v};
    result.counter_path = find_path(d, from, to, normalized(result.separator));
    result.holds = !result.counter_path.has_value();
    return result;
}

struct LevelReport {
    std::vector<VertexSet> levels;
    /// acyclic[n]: d induced on level n has no directed cycle
    std::vector<bool> acyclic;
    /// first cycle found, per level, when not acyclic
    std::vector<std::optional<std::vector<VertexId>>> cycles;

    bool all_acyclic() const {
        for (bool ok : acyclic) {
            if (!ok) {
                return false;
            }
        }
        return true;
    }
};

inline LevelReport level_partition(const Digraph& d, const Arborescence& t) {
    if (!is_normal(d, t).normal) {
        throw Error(ErrorCode::NotNormalInput, "level partition needs a normal arborescence");
    }
    LevelReport report;
    report.levels = t.levels();
    for (const auto& level : report.levels) {
        auto cycle = find_cycle(d, level);
        report.acyclic.push_back(!cycle.has_value());
        report.cycles.push_back(std::move(cycle));
    }
    return report;
}

} // namespace arbor

#endif

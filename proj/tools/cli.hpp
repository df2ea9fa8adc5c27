#ifndef ARBOR_TOOLS_CLI_HPP
#define ARBOR_TOOLS_CLI_HPP

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "arbor/arbor.hpp"
#include "arbor/testing/acceptance.hpp"

namespace arbor::cli {

struct Options {
    std::string digraph;
    std::string tree;
    std::optional<std::int64_t> root;
    std::vector<std::int64_t> priority;
    std::string family;
    std::size_t depth = 20;
    std::string targets;
    std::string format;
    std::string out;
    std::vector<std::int64_t> subset;
    std::vector<std::int64_t> order;
    std::vector<std::int64_t> separator;
    std::optional<std::int64_t> v;
    std::optional<std::int64_t> w;
    std::size_t end = 0;
    std::size_t k = 3;
    std::size_t count = 200;
    bool reverse = false;
    bool backward = false;
};

/// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kNegative = 1;
inline constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

struct Context {
    const Options& opt;
    std::ostream& out;

    void emit(const std::string& text) const {
        if (opt.out.empty()) {
            out << text;
            return;
        }
        std::ofstream file(opt.out);
        if (!file) {
            throw Error(ErrorCode::BadDocument, "cannot write " + opt.out);
        }
        file << text;
    }
    void emit(const json& doc) const { emit(doc.dump(2) + "\n"); }
    bool dot() const { return opt.format == "dot"; }
    bool text() const { return opt.format == "text"; }

    Digraph digraph() const {
        if (opt.digraph.empty()) throw UsageError("--digraph is required");
        return load_digraph(read_json_file(opt.digraph));
    }
    Arborescence tree(const Digraph& d) const {
        if (opt.tree.empty()) throw UsageError("--tree is required");
        return load_arborescence(read_json_file(opt.tree), d);
    }
    VertexId root(const Digraph& d) const {
        if (!opt.root) throw UsageError("--root is required");
        return vertex_of(d, *opt.root, ErrorCode::RootMissing);
    }
    std::unique_ptr<LazyFamily> family() const {
        if (opt.family.empty()) throw UsageError("--family is required");
        if (opt.family == "finite") return std::make_unique<FiniteFamily>(digraph());
        return make_family(opt.family);
    }
    TreePresentation presentation(const LazyFamily& f) const {
        if (auto p = f.canonical_tree()) return *p;
        if (const auto* finite = dynamic_cast<const FiniteFamily*>(&f)) {
            return TreePresentation::from(tree(finite->digraph()));
        }
        throw Error(ErrorCode::BadParameters, f.name() + " has no tree presentation");
    }
    /// --subset as a predicate on family ids; everything when absent
    VertexPredicate subset() const {
        if (opt.subset.empty()) return [](VertexId) { return true; };
        std::vector<VertexId> s;
        for (auto x : opt.subset) s.push_back(static_cast<VertexId>(x));
        return [s = normalized(s)](VertexId v) { return std::binary_search(s.begin(), s.end(), v); };
    }
    VertexSet ids(const std::vector<std::int64_t>& list) const {
        VertexSet s;
        for (auto x : list) s.push_back(static_cast<VertexId>(x));
        return normalized(s);
    }
};

inline json witnesses_json(const std::vector<SeparatorWitness>& ws) {
    json list = json::array();
    for (const auto& w : ws) {
        json e{{"separator", w.name()}};
        if (w.edge) e["edge"] = {w.edge->first, w.edge->second};
        list.push_back(e);
    }
    return list;
}

inline json thread_json(const Thread& t) {
    json j{{"approximate", t.approximate}, {"consistent", t.consistent}};
    j["component"] = t.component ? json(*t.component) : json(nullptr);
    return j;
}

inline json horizon_json(const HorizonGraph& h) {
    json doc{{"source", h.source}, {"depth", h.depth}, {"window", h.window_size}};
    json nodes = json::array();
    for (std::size_t i = 0; i < h.nodes.size(); ++i) {
        nodes.push_back({{"id", h.nodes[i].id}, {"name", h.nodes[i].name}, {"accumulation", h.accumulation(i)}});
    }
    doc["nodes"] = nodes;
    json arcs = json::array();
    for (const auto& a : h.arcs) {
        arcs.push_back({{"from", h.nodes[a.from].name},
                        {"to", h.nodes[a.to].name},
                        {"declared", a.declared},
                        {"witnesses", witnesses_json(a.witnesses)}});
    }
    doc["arcs"] = arcs;
    json vertex_arcs = json::array();
    for (const auto& a : h.vertex_arcs) {
        vertex_arcs.push_back({{"vertex", a.vertex}, {"to", h.nodes[a.node].name}, {"verified", a.verified}});
    }
    doc["vertex_arcs"] = vertex_arcs;
    return doc;
}

inline json combs_json(const DirectedComb& c) {
    json paths = json::array();
    for (const auto& p : c.paths) paths.push_back(p.vertices);
    return {{"spine", c.spine.vertices}, {"paths", paths}, {"teeth", c.teeth}};
}

// -- verbs on explicit digraphs

inline int assistant(const Context& c) {
    const Digraph d = c.digraph();
    const Arborescence t = c.tree(d);
    const NormalAssistant h = normal_assistant(d, t);
    if (c.dot()) {
        DotStyle style;
        style.tree = &t;
        style.assistant = &h;
        c.emit(to_dot(d, style));
    } else {
        c.emit(to_json(h, d));
    }
    return kOk;
}

inline int check_normal(const Context& c) {
    const Digraph d = c.digraph();
    const Arborescence t = c.tree(d);
    const auto verdict = is_normal(d, t);
    if (c.dot()) {
        DotStyle style;
        style.tree = &t;
        style.assistant = &verdict.assistant;
        c.emit(to_dot(d, style));
    } else {
        json doc{{"normal", verdict.normal}};
        if (verdict.certificate) doc["certificate"] = to_json(*verdict.certificate, d);
        c.emit(doc);
    }
    return verdict.normal ? kOk : kNegative;
}

inline int order(const Context& c) {
    const Digraph d = c.digraph();
    const Arborescence t = c.tree(d);
    if (!c.opt.order.empty()) {
        std::vector<VertexId> seq;
        for (auto x : c.opt.order) seq.push_back(vertex_of(d, x));
        const auto verdict = is_sensitive(d, t, LinearExtension(seq));
        json doc{{"sensitive", verdict.sensitive}};
        if (const auto& v = verdict.violation) {
            json viol{{"v", d.label(v->v)}, {"w", d.label(v->w)}, {"condition", std::string(to_string(v->condition))}};
            if (v->above != kNoVertex) viol["above"] = d.label(v->above);
            if (v->witness) viol["witness"] = to_json(*v->witness, d);
            doc["violation"] = viol;
        }
        c.emit(doc);
        return verdict.sensitive ? kOk : kNegative;
    }
    const auto result = sensitive_order_build(d, t);
    json doc{{"normal", result.normal()}};
    if (result.order) doc["order"] = label_list(d, result.order->sequence());
    if (result.certificate) doc["certificate"] = to_json(*result.certificate, d);
    c.emit(doc);
    return result.normal() ? kOk : kNegative;
}

inline int dfs(const Context& c) {
    const Digraph d = c.digraph();
    std::vector<VertexId> pref;
    for (auto x : c.opt.priority) pref.push_back(vertex_of(d, x));
    const Arborescence t = dfs_build(d, c.root(d), pref);
    if (c.dot()) {
        DotStyle style;
        style.tree = &t;
        c.emit(to_dot(d, style));
    } else {
        c.emit(to_json(t, d));
    }
    return kOk;
}

inline int is_dfs(const Context& c) {
    const Digraph d = c.digraph();
    const Arborescence t = c.tree(d);
    const bool dfs = is_dfs_tree(d, t);
    json doc{{"dfs", dfs}};
    if (!dfs) {
        if (auto cert = is_normal(d, t).certificate) doc["certificate"] = to_json(*cert, d);
    }
    c.emit(doc);
    return dfs ? kOk : kNegative;
}

inline int separate(const Context& c) {
    const Digraph d = c.digraph();
    const Arborescence t = c.tree(d);
    if (!c.opt.v || !c.opt.w) throw UsageError("--v and --w are required");
    const auto r = separation_check(d, t, vertex_of(d, *c.opt.v), vertex_of(d, *c.opt.w));
    json doc{{"holds", r.holds}, {"separator", label_list(d, r.separator)}};
    if (r.counter_path) doc["counter_path"] = to_json(*r.counter_path, d);
    c.emit(doc);
    return r.holds ? kOk : kNegative;
}

inline int levels(const Context& c) {
    const Digraph d = c.digraph();
    const Arborescence t = c.tree(d);
    const auto report = level_partition(d, t);
    json rows = json::array();
    for (std::size_t i = 0; i < report.levels.size(); ++i) {
        json row{{"level", i}, {"vertices", label_list(d, report.levels[i])}, {"acyclic", bool(report.acyclic[i])}};
        if (report.cycles[i]) row["cycle"] = label_list(d, *report.cycles[i]);
        rows.push_back(row);
    }
    c.emit(json{{"levels", rows}, {"all_acyclic", report.all_acyclic()}});
    return report.all_acyclic() ? kOk : kNegative;
}

inline int jung(const Context& c) {
    const Digraph d = c.digraph();
    if (c.opt.targets.empty()) throw UsageError("--targets is required");
    const auto targets = load_targets(read_json_file(c.opt.targets), d);
    const VertexId r = c.root(d);
    const JungResult result = c.opt.reverse ? reverse_jung_build(d, r, targets) : jung_build(d, r, targets);
    if (c.dot()) {
        DotStyle style;
        style.tree = &result.tree;
        c.emit(to_dot(c.opt.reverse ? reverse(d) : d, style));
        return kOk;
    }
    json steps = json::array();
    for (const auto& s : result.steps) {
        json step{{"target", d.label(s.target)}, {"path", to_json(s.path, d)}};
        if (s.start != kNoVertex) step["start"] = d.label(s.start);
        steps.push_back(step);
    }
    json doc{{"tree", to_json(result.tree, d)},
             {"order", label_list(d, result.order.sequence())},
             {"steps", steps},
             {"reversed", c.opt.reverse}};
    c.emit(doc);
    return kOk;
}

inline int comb(const Context& c) {
    CombSearchResult result;
    json doc;
    if (!c.opt.family.empty()) {
        const auto f = c.family();
        result = comb_search(*f, c.subset(), c.opt.k, c.opt.depth);
        doc["family"] = f->name();
        if (result.comb) doc["comb"] = combs_json(*result.comb);
    } else {
        const Digraph d = c.digraph();
        std::vector<VertexId> u;
        for (auto x : c.opt.subset) u.push_back(vertex_of(d, x));
        u = normalized(u);
        auto in_u = [&](VertexId v) { return c.opt.subset.empty() || std::binary_search(u.begin(), u.end(), v); };
        result = comb_search(d, in_u, c.opt.k);
        if (result.comb) {
            json paths = json::array();
            for (const auto& p : result.comb->paths) paths.push_back(to_json(p, d));
            doc["comb"] = {{"spine", to_json(result.comb->spine, d)},
                           {"paths", paths},
                           {"teeth", label_list(d, result.comb->teeth)}};
        }
    }
    doc["found"] = result.comb.has_value();
    doc["exhaustive"] = result.exhaustive;
    doc["spines_examined"] = result.spines_examined;
    c.emit(doc);
    return result.comb ? kOk : kNegative;
}

inline int solidify(const Context& c) {
    const Digraph d = c.digraph();
    const Arborescence t = c.tree(d);
    const auto verdict = is_normal(d, t);
    if (!verdict.normal) throw Error(ErrorCode::NotNormalInput, "solidification needs a normal arborescence");
    Digraph solid = solidify(verdict.assistant);
    solid.set_symbols(d.labels(), d.names());
    if (c.dot()) {
        DotStyle style;
        style.tree = &t;
        c.emit(to_dot(solid, style));
    } else {
        c.emit(to_json(solid));
    }
    return kOk;
}

inline int export_dot(const Context& c) {
    if (!c.opt.family.empty()) {
        const auto f = c.family();
        const Truncation w = truncate(*f, c.opt.depth);
        DotStyle style;
        style.separator = c.ids(c.opt.separator);
        style.label = [&](VertexId v) { return f->label(v); };
        std::optional<Arborescence> t;
        if (auto p = f->canonical_tree()) {
            t = p->window(w.size());
            style.tree = &*t;
        }
        const auto oracle = f->oracle();
        const auto vis = oracle.ends.visible(w.size());
        for (std::size_t i = 0; i < vis.size(); ++i) {
            for (VertexId v : oracle.ends.prefix(vis[i], w.size())) style.colour.emplace(v, i);
        }
        c.emit(to_dot(w.window, style));
        return kOk;
    }
    const Digraph d = c.digraph();
    DotStyle style;
    std::optional<Arborescence> t;
    std::optional<NormalAssistant> h;
    if (!c.opt.tree.empty()) {
        t = c.tree(d);
        h = normal_assistant(d, *t);
        style.tree = &*t;
        style.assistant = &*h;
    }
    for (auto x : c.opt.separator) style.separator.push_back(vertex_of(d, x));
    style.separator = normalized(style.separator);
    c.emit(to_dot(d, style));
    return kOk;
}

// -- verbs on families

inline int ends(const Context& c) {
    const auto f = c.family();
    const EndsReport r = ends_approx(*f, c.opt.depth);
    json rows = json::array();
    for (const auto& row : r.rows) {
        json threads = json::array();
        for (const auto& t : row.threads) threads.push_back(thread_json(t));
        rows.push_back({{"n", row.n}, {"components", row.components}, {"threads", threads}});
    }
    json doc{{"family", r.family},
             {"depth", r.depth},
             {"slack", r.slack},
             {"window", r.window_size},
             {"ends", r.end_names},
             {"thread_count", r.thread_count},
             {"thread_count_by_depth", r.thread_count_by_depth},
             {"stabilization_depth", r.stabilization_depth},
             {"agrees", r.agrees},
             {"tails_consistent", r.tails_consistent},
             {"oracle_free_candidates", r.oracle_free_candidates},
             {"rows", rows}};
    doc["oracle_count"] = r.oracle_count ? json(*r.oracle_count) : json(nullptr);
    c.emit(doc);
    return r.agrees ? kOk : kNegative;
}

inline int closure(const Context& c) {
    const auto f = c.family();
    const bool in = closure_contains(*f, c.subset(), c.opt.end, c.opt.depth);
    c.emit(json{{"family", f->name()}, {"end", f->oracle().ends.name(c.opt.end)}, {"in_closure", in}});
    return in ? kOk : kNegative;
}

inline int faithful(const Context& c) {
    const auto f = c.family();
    const auto p = c.presentation(*f);
    const FaithfulReport r = end_faithful_check(*f, p, c.subset(), c.opt.depth);
    json rays = json::array();
    for (const auto& t : r.rays) {
        json ray{{"end", t.name},
                 {"in_closure", t.in_closure},
                 {"ray", t.ray},
                 {"ambiguous_steps", t.ambiguous_steps},
                 {"represents", t.represents}};
        ray["tree_ray"] = t.tree_ray ? json(p.rays.name(*t.tree_ray)) : json(nullptr);
        rays.push_back(ray);
    }
    c.emit(json{{"family", f->name()},
                {"tree", p.name},
                {"depth", r.depth},
                {"window", r.window_size},
                {"rays", rays},
                {"ambiguous", r.ambiguous},
                {"distinct_rays", r.distinct_rays},
                {"separated", r.separated},
                {"problems", r.problems},
                {"ok", r.ok()}});
    return r.ok() ? kOk : kNegative;
}

inline int necklace(const Context& c) {
    const auto f = c.family();
    const NecklacePrefix n = necklace_prefix(*f, c.opt.end, c.opt.k, c.opt.depth);
    json links = json::array(), back = json::array();
    for (const auto& p : n.links) links.push_back(p.vertices);
    for (const auto& p : n.back_links) back.push_back(p.vertices);
    c.emit(json{{"family", f->name()},
                {"end", f->oracle().ends.name(n.end)},
                {"beads", n.beads},
                {"links", links},
                {"back_links", back},
                {"attached_vertices", n.attached_vertices},
                {"attachments_verified", n.attachments_verified}});
    return n.attachments_verified ? kOk : kNegative;
}

inline int horizon(const Context& c) {
    const auto f = c.family();
    const auto p = c.presentation(*f);
    const HorizonVerdict v = verify_horizon(*f, p, c.opt.depth);
    const std::string label =
        v.reflects ? "Reflects(" + std::to_string(v.depth) + ")" : "CounterExample(" + std::to_string(v.depth) + ")";
    json psi = json::array();
    for (const auto& e : v.psi) {
        psi.push_back({{"end", e.name}, {"tree_ray", e.tree_ray ? json(p.rays.name(*e.tree_ray)) : json(nullptr)}});
    }
    json limits = json::array();
    for (const auto& l : v.limit_edges) {
        if (!l.host && !l.tree) continue;
        limits.push_back({{"from", f->oracle().ends.name(l.from_end)},
                          {"to", f->oracle().ends.name(l.to_end)},
                          {"host", l.host},
                          {"tree", l.tree}});
    }
    c.emit(json{{"family", f->name()},
                {"tree", p.name},
                {"verdict", label},
                {"reflects", v.reflects},
                {"reasons", v.reasons},
                {"details", v.details},
                {"psi", psi},
                {"limit_edges", limits},
                {"witness_failures", v.witness_failures},
                {"accumulating", v.accumulating},
                {"host", horizon_json(v.host)},
                {"solidified", horizon_json(v.tree)}});
    return v.reflects ? kOk : kNegative;
}

inline int witness(const Context& c) {
    const auto f = c.family();
    const auto p = c.presentation(*f);
    const VertexSet x = c.ids(c.opt.separator);
    const WitnessResult r = c.opt.backward ? horizon_witness_backward(*f, p, c.opt.end, x, c.opt.depth)
                                           : horizon_witness_forward(*f, p, c.opt.end, x, c.opt.depth);
    json doc{{"family", f->name()},
             {"end", f->oracle().ends.name(r.end)},
             {"direction", c.opt.backward ? "backward" : "forward"},
             {"x", r.x},
             {"x_prime", r.x_prime},
             {"host_component", r.host_component},
             {"tree_component", r.tree_component},
             {"contained", r.contained}};
    if (r.top != kNoVertex) doc["top"] = r.top;
    c.emit(doc);
    return r.contained ? kOk : kNegative;
}

// -- aggregate verbs

inline int suite(const Context& c) {
    const auto results = acceptance::run_all();
    bool all = true;
    if (!c.text()) {
        json rows = json::array();
        for (const auto& r : results) {
            all = all && r.passed;
            rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        }
        c.emit(json{{"criteria", rows}, {"passed", all}});
    } else {
        std::string table;
        for (const auto& r : results) {
            all = all && r.passed;
            table += acceptance::format_line(r) + "\n";
        }
        c.emit(table);
    }
    return all ? kOk : kNegative;
}

inline std::uint64_t seed_from_env() {
    const char* s = std::getenv("ARBOR_SEED");
    if (!s || !*s) return corpus::kDefaultSeed;
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        throw UsageError(std::string("ARBOR_SEED is not a number: ") + s);
    }
}

/// Library verdicts against brute force on a random corpus.
inline int oracle(const Context& c) {
    const std::uint64_t seed = seed_from_env();
    std::size_t instances = 0, dfs_checked = 0;
    json mismatches = json::array();
    for (const auto& inst : corpus::mixed(c.opt.count, seed)) {
        ++instances;
        const bool normal = is_normal(inst.d, inst.t).normal;
        const bool expected = oracle::is_normal(inst.d, inst.t);
        const bool ordered = sensitive_order_build(inst.d, inst.t).normal();
        auto report = [&](const std::string& what) {
            mismatches.push_back({{"check", what}, {"origin", inst.origin}, {"digraph", to_json(inst.d)},
                                  {"tree", to_json(inst.t, inst.d)}});
        };
        if (normal != expected) report("normality");
        if (ordered != expected) report("sensitive-order");
        const std::array<VertexId, 1> r{inst.t.root()};
        const auto seen = reachable_from(inst.d, r);
        if (static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1)) == inst.t.size()) {
            ++dfs_checked;
            const auto trees = oracle::dfs_trees(inst.d, inst.t.root());
            const bool listed = trees.count(oracle::parents_of(inst.t, inst.d.vertex_count())) > 0;
            if (is_dfs_tree(inst.d, inst.t) != listed) {
                report("dfs");
            }
        }
    }
    c.emit(json{{"seed", seed},
                {"instances", instances},
                {"dfs_checked", dfs_checked},
                {"mismatch_count", mismatches.size()},
                {"mismatches", mismatches}});
    return mismatches.empty() ? kOk : kNegative;
}

} // namespace detail

/// Parses argv, runs one verb and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Options opt;
    CLI::App app{"normal arborescences in digraphs", "arbor"};
    app.require_subcommand(1);

    using Verb = std::function<int(const detail::Context&)>;
    const std::vector<std::tuple<std::string, std::string, Verb>> verbs{
        {"assistant", "normal assistant of a tree", detail::assistant},
        {"check-normal", "normality verdict with a cycle certificate", detail::check_normal},
        {"order", "build a sensitive order, or check one given with --order", detail::order},
        {"dfs", "depth-first search tree", detail::dfs},
        {"is-dfs", "whether a spanning tree is a DFS tree", detail::is_dfs},
        {"separate", "check that down(v) and down(w) separate w from v", detail::separate},
        {"levels", "level partition and per-level acyclicity", detail::levels},
        {"jung", "grow a normal arborescence through well-ordered targets", detail::jung},
        {"comb", "search a directed comb with teeth in --subset", detail::comb},
        {"ends", "approximate ends of a family at --depth", detail::ends},
        {"closure", "whether an end lies in the closure of --subset", detail::closure},
        {"faithful", "end-faithfulness of the canonical tree", detail::faithful},
        {"necklace", "necklace prefix along an end", detail::necklace},
        {"solidify", "solidified normal assistant", detail::solidify},
        {"horizon", "compare host and tree horizons", detail::horizon},
        {"witness", "separator witness for a horizon component", detail::witness},
        {"suite", "run every acceptance check", detail::suite},
        {"export-dot", "render a digraph or family window as DOT", detail::export_dot},
        {"oracle", "cross-check the library against brute force", detail::oracle},
    };
    std::map<CLI::App*, Verb> dispatch;
    for (const auto& [name, help, verb] : verbs) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("-d,--digraph", opt.digraph, "digraph JSON file");
        sub->add_option("-t,--tree", opt.tree, "arborescence JSON file");
        sub->add_option("--root", opt.root, "root vertex id");
        sub->add_option("--priority", opt.priority, "DFS preference, highest first")->delimiter(',');
        sub->add_option("--family", opt.family, "catalog family name");
        sub->add_option("--depth", opt.depth, "truncation depth");
        sub->add_option("--targets", opt.targets, "targets JSON file");
        sub->add_option("--format", opt.format, "json, dot, or text (suite only)")->check(CLI::IsMember({"json", "dot", "text"}));
        sub->add_option("--out", opt.out, "write the document here");
        sub->add_option("--subset", opt.subset, "vertex set U or W")->delimiter(',');
        sub->add_option("--order", opt.order, "linear order to check, smallest first")->delimiter(',');
        sub->add_option("--separator", opt.separator, "separator vertex set")->delimiter(',');
        sub->add_option("--v", opt.v, "first vertex");
        sub->add_option("--w", opt.w, "second vertex");
        sub->add_option("--end", opt.end, "end id of the family");
        sub->add_option("--k", opt.k, "number of teeth, beads or leaves");
        sub->add_option("--count", opt.count, "corpus size for oracle");
        sub->add_flag("--reverse", opt.reverse, "in-arborescence variant of jung");
        sub->add_flag("--backward", opt.backward, "backward witness direction");
        dispatch[sub] = verb;
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "arbor: " << e.what() << "\n";
        return kUsage;
    }

    const detail::Context ctx{opt, out};
    static const std::set<std::string> dot_verbs{"assistant", "check-normal", "dfs", "jung", "solidify", "export-dot"};
    const bool dot_verb = dot_verbs.count(app.get_subcommands().front()->get_name()) > 0;
    const std::string name = app.get_subcommands().front()->get_name();
    try {
        if ((opt.format == "dot" && !dot_verb) || (opt.format == "text" && name != "suite")) {
            throw UsageError("format " + opt.format + " is not available for " + name);
        }
        return dispatch.at(app.get_subcommands().front())(ctx);
    } catch (const UsageError& e) {
        err << "arbor: " << e.what() << "\n";
    } catch (const Error& e) {
        err << "arbor: " << e.what() << "\n";
    } catch (const json::exception& e) {
        err << "arbor: BadDocument: " << e.what() << "\n";
    } catch (const std::exception& e) {
        err << "arbor: internal error: " << e.what() << "\n";
    }
    return kUsage;
}

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    std::vector<const char*> argv{"arbor"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

} // namespace arbor::cli

#endif

#ifndef ARBOR_IO_HPP
#define ARBOR_IO_HPP

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "arbor/arborescence.hpp"
#include "arbor/digraph.hpp"
#include "arbor/error.hpp"
#include "arbor/jung.hpp"
#include "arbor/normality.hpp"

namespace arbor {

using json = nlohmann::json;

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::BadDocument, "cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::BadDocument, path + ": " + e.what());
    }
}

namespace detail {

inline const json& field(const json& doc, const char* key) {
    if (!doc.is_object() || !doc.contains(key)) {
        throw Error(ErrorCode::BadDocument, std::string("missing field \"") + key + "\"");
    }
    return doc.at(key);
}

inline std::int64_t integer(const json& value, const char* what) {
    if (!value.is_number_integer()) {
        throw Error(ErrorCode::BadDocument, std::string(what) + " must be an integer");
    }
    return value.get<std::int64_t>();
}

inline Edge pair_of(const json& e) {
    if (!e.is_array() || e.size() != 2) {
        throw Error(ErrorCode::BadDocument, "edge must be a two-element array");
    }
    auto a = integer(e[0], "edge endpoint");
    auto b = integer(e[1], "edge endpoint");
    return {static_cast<VertexId>(a), static_cast<VertexId>(b)};
}

} // namespace detail

/// Digraph document {"vertices":[...], "edges":[[tail, head], ...], "names":{...}}.
/// Vertex ids may be any distinct integers; they are mapped to dense ids in
/// increasing order.
inline Digraph load_digraph(const json& doc) {
    std::vector<std::int64_t> labels;
    for (const auto& v : detail::field(doc, "vertices")) {
        labels.push_back(detail::integer(v, "vertex id"));
    }
    std::sort(labels.begin(), labels.end());
    if (auto dup = std::adjacent_find(labels.begin(), labels.end()); dup != labels.end()) {
        throw Error(ErrorCode::DuplicateVertex, "vertex " + std::to_string(*dup));
    }
    auto dense = [&](std::int64_t label, const std::string& edge) {
        auto it = std::lower_bound(labels.begin(), labels.end(), label);
        if (it == labels.end() || *it != label) {
            throw Error(ErrorCode::UnknownVertex, "edge " + edge);
        }
        return static_cast<VertexId>(it - labels.begin());
    };
    std::vector<Edge> edges;
    for (const auto& e : detail::field(doc, "edges")) {
        if (!e.is_array() || e.size() != 2) {
            throw Error(ErrorCode::BadDocument, "edge must be a two-element array");
        }
        const auto a = detail::integer(e[0], "edge endpoint");
        const auto b = detail::integer(e[1], "edge endpoint");
        const std::string name = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
        if (a == b) {
            throw Error(ErrorCode::LoopEdge, "edge " + name);
        }
        edges.emplace_back(dense(a, name), dense(b, name));
    }
    std::map<VertexId, std::string> names;
    if (doc.contains("names")) {
        for (const auto& [key, value] : doc.at("names").items()) {
            std::int64_t label = 0;
            try {
                label = std::stoll(key);
            } catch (const std::exception&) {
                throw Error(ErrorCode::BadDocument, "name key " + key + " is not an integer");
            }
            names[dense(label, "name " + key)] = value.get<std::string>();
        }
    }
    Digraph d;
    try {
        d = Digraph(labels.size(), edges);
    } catch (const Error& e) {
        // restate the offending edge in document ids
        std::string what = e.what();
        for (const auto& [a, b] : edges) {
            if (what.find(edge_string(a, b)) != std::string::npos) {
                throw Error(e.code(), "edge " + edge_string(static_cast<VertexId>(labels[a]),
                                                            static_cast<VertexId>(labels[b])));
            }
        }
        throw;
    }
    d.set_symbols(labels, names);
    return d;
}

inline json to_json(const Digraph& d) {
    json doc;
    doc["vertices"] = d.labels();
    json edges = json::array();
    for (const auto& [a, b] : d.edges()) {
        edges.push_back({d.label(a), d.label(b)});
    }
    doc["edges"] = edges;
    if (!d.names().empty()) {
        json names = json::object();
        for (const auto& [v, name] : d.names()) {
            names[std::to_string(d.label(v))] = name;
        }
        doc["names"] = names;
    }
    return doc;
}

inline VertexId vertex_of(const Digraph& d, std::int64_t label, ErrorCode code = ErrorCode::UnknownVertex) {
    auto v = d.find_label(label);
    if (!v) {
        throw Error(code, "vertex " + std::to_string(label));
    }
    return *v;
}

inline json label_list(const Digraph& d, const std::vector<VertexId>& vertices) {
    json list = json::array();
    for (VertexId v : vertices) {
        list.push_back(v < d.vertex_count() ? d.label(v) : static_cast<std::int64_t>(v));
    }
    return list;
}

/// Arborescence document {"root": r, "edges": [[parent, child], ...]} in the ids of d.
inline Arborescence load_arborescence(const json& doc, const Digraph& d) {
    const VertexId root = vertex_of(d, detail::integer(detail::field(doc, "root"), "root"), ErrorCode::VertexNotInHost);
    std::vector<Edge> edges;
    for (const auto& e : detail::field(doc, "edges")) {
        const Edge p = detail::pair_of(e);
        edges.emplace_back(vertex_of(d, static_cast<std::int64_t>(p.first), ErrorCode::VertexNotInHost),
                           vertex_of(d, static_cast<std::int64_t>(p.second), ErrorCode::VertexNotInHost));
    }
    Arborescence t(root, edges);
    t.require_within(d);
    return t;
}

inline json to_json(const Arborescence& t, const Digraph& d) {
    json doc;
    doc["root"] = d.label(t.root());
    json edges = json::array();
    for (const auto& [p, c] : t.edges()) {
        edges.push_back({d.label(p), d.label(c)});
    }
    doc["edges"] = edges;
    return doc;
}

/// Targets document {"order": [...], "blocks": [[...], ...]}; without an order
/// the blocks are concatenated.
inline WellOrderedTargets load_targets(const json& doc, const Digraph& d) {
    std::vector<VertexSet> blocks;
    if (doc.contains("blocks")) {
        for (const auto& block : doc.at("blocks")) {
            VertexSet b;
            for (const auto& v : block) {
                b.push_back(vertex_of(d, detail::integer(v, "target")));
            }
            blocks.push_back(std::move(b));
        }
    }
    WellOrderedTargets targets;
    if (doc.contains("order")) {
        for (const auto& v : doc.at("order")) {
            targets.order.push_back(vertex_of(d, detail::integer(v, "target")));
        }
        targets.blocks = blocks;
    } else if (!blocks.empty()) {
        targets = order_from_blocks(blocks);
    } else {
        throw Error(ErrorCode::BadDocument, "targets need \"order\" or \"blocks\"");
    }
    return targets;
}

inline json to_json(const DirectedPath& p, const Digraph& d) { return label_list(d, p.vertices); }

inline json to_json(const NormalAssistant& h, const Digraph& d) {
    json doc;
    doc["tree"] = to_json(h.base(), d);
    json added = json::array();
    for (const auto& e : h.added()) {
        added.push_back({{"from", d.label(e.from)}, {"to", d.label(e.to)}, {"witness", to_json(e.witness, d)}});
    }
    doc["added"] = added;
    return doc;
}

inline json to_json(const CycleCertificate& c, const Digraph& d) {
    return json{{"cycle", label_list(d, c.vertices)}, {"normalized", c.normalized}};
}

/// DOT rendering options.
struct DotStyle {
    const Arborescence* tree = nullptr;
    const NormalAssistant* assistant = nullptr;
    VertexSet separator;
    /// vertex -> colour index, used for end threads
    std::map<VertexId, std::size_t> colour;
    std::function<std::string(VertexId)> label;
};

inline std::string dot_colour(std::size_t i) {
    static const char* palette[] = {"red", "blue", "darkgreen", "orange", "purple", "brown", "magenta", "cyan4"};
    return palette[i % 8];
}

inline std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

inline std::string to_dot(const Digraph& d, const DotStyle& style = {}) {
    std::ostringstream out;
    out << "digraph G {\n";
    const auto sep = membership(d.vertex_count(), style.separator);
    for (VertexId v = 0; v < d.vertex_count(); ++v) {
        std::string name;
        if (style.label) {
            name = style.label(v);
        } else if (auto it = d.names().find(v); it != d.names().end()) {
            name = it->second;
        } else {
            name = std::to_string(d.label(v));
        }
        out << "  " << d.label(v) << " [label=" << quote(name);
        if (sep[v]) out << ", peripheries=2";
        if (auto it = style.colour.find(v); it != style.colour.end()) out << ", color=" << dot_colour(it->second);
        out << "];\n";
    }
    auto tree_edge = [&](VertexId a, VertexId b) {
        return style.tree && style.tree->contains(b) && b != style.tree->root() && style.tree->parent(b) == a;
    };
    for (const auto& [a, b] : d.edges()) {
        out << "  " << d.label(a) << " -> " << d.label(b);
        if (tree_edge(a, b)) {
            out << " [penwidth=2]";
        } else if (style.tree) {
            out << " [color=gray]";
        }
        out << ";\n";
    }
    if (style.assistant) {
        for (const auto& e : style.assistant->added()) {
            out << "  " << d.label(e.from) << " -> " << d.label(e.to) << " [style=dashed];\n";
        }
    }
    out << "}\n";
    return out.str();
}

} // namespace arbor

#endif

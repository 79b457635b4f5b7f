#include "lrauzy/export.hpp"

#include <json.hpp>

#include <sstream>

namespace lrauzy {

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\')
            out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

} // namespace

std::string to_dot(const DirectedGraph& g, const GraphMeta& meta) {
    std::ostringstream os;
    std::string name = meta.word_source + " k=" + std::to_string(meta.k) +
                       " ell=" + std::to_string(meta.ell);
    os << "digraph " << dot_quote(name) << " {\n";
    os << "  rankdir=LR;\n";
    for (const Word& v : g.vertices)
        os << "  " << dot_quote(v) << ";\n";
    for (const Arc& a : g.arcs)
        os << "  " << dot_quote(g.vertices[a.from]) << " -> "
           << dot_quote(g.vertices[a.to])
           << " [label=" << dot_quote(a.label) << "];\n";
    os << "}\n";
    return os.str();
}

std::string to_json(const DirectedGraph& g, const GraphMeta& meta) {
    nlohmann::ordered_json j;
    j["word_source"] = meta.word_source;
    j["k"] = meta.k;
    j["ell"] = meta.ell;
    j["vertices"] = g.vertices;
    auto arcs = nlohmann::ordered_json::array();
    for (const Arc& a : g.arcs)
        arcs.push_back({{"from", a.from}, {"to", a.to}, {"label", a.label}});
    j["arcs"] = std::move(arcs);

    SccResult scc = strongly_connected_components(g);
    DegreeReport deg = degrees(g);
    auto table = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        table.push_back({{"word", g.vertices[i]},
                         {"in", deg.in_degree[i]},
                         {"out", deg.out_degree[i]}});
    j["analyses"] = {{"scc_count", scc.component_count},
                     {"strongly_connected", scc.strongly_connected},
                     {"degree_table", std::move(table)}};
    return j.dump(2) + "\n";
}

std::string to_json(const FactorSet& fs, const std::string& word_source) {
    nlohmann::ordered_json j;
    j["word_source"] = word_source;
    j["k"] = fs.k;
    auto list = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < fs.size(); ++i)
        list.push_back({{"word", fs.factors[i]},
                        {"first_occurrence", fs.first_occurrence[i]}});
    j["factors"] = std::move(list);
    return j.dump(2) + "\n";
}

} // namespace lrauzy

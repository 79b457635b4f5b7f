#ifndef LRAUZY_EXPORT_HPP
#define LRAUZY_EXPORT_HPP

#include "lrauzy/graph.hpp"

#include <string>

namespace lrauzy {

/// Graph provenance carried into serialized output.
struct GraphMeta {
    std::string word_source; // e.g. "fibonacci", "periodic:010"
    std::size_t k = 0;
    std::size_t ell = 0;
};

/// DOT rendering: one node statement per vertex (labelled by its word, in
/// construction order) and one edge statement per arc (labelled by the word
/// it spells). Output is byte-stable for identical inputs.
std::string to_dot(const DirectedGraph& g, const GraphMeta& meta);

/// JSON rendering:
/// { word_source, k, ell, vertices: [...],
///   arcs: [{from, to, label}, ...]   (0-based indices into vertices),
///   analyses: {scc_count, strongly_connected, degree_table} }
std::string to_json(const DirectedGraph& g, const GraphMeta& meta);

/// Ordered factor listing:
/// { word_source, k, factors: [{word, first_occurrence}, ...] }
std::string to_json(const FactorSet& fs, const std::string& word_source);

} // namespace lrauzy

#endif

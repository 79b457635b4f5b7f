#ifndef LRAUZY_GRAPH_HPP
#define LRAUZY_GRAPH_HPP

#include "lrauzy/words.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lrauzy {

/// A directed arc between vertex indices, labeled by the word it spells.
struct Arc {
    std::size_t from;
    std::size_t to;
    Word label;
};

/// A directed multigraph whose vertices are length-k words in
/// first-occurrence order. Loops are permitted; arc labels are pairwise
/// distinct within one graph.
struct DirectedGraph {
    std::vector<Word> vertices;
    std::vector<Arc> arcs;

    std::size_t vertex_count() const { return vertices.size(); }
    std::size_t arc_count() const { return arcs.size(); }
    std::optional<std::size_t> index_of(const Word& v) const;
};

/// ℓ-Rauzy graph of order k: vertices are the length-k factors of w; an arc
/// u→v exists iff the length-ℓ suffix of u equals the length-ℓ prefix of v
/// and the length-(2k−ℓ) word u·v[ℓ+1..k] is itself a factor of w.
/// Requires 1 ≤ ℓ ≤ k−1 and a prefix long enough to exhibit the factor
/// language at length 2k−ℓ (checked against the prefix policy for
/// Fibonacci-family words).
DirectedGraph build_l_rauzy(const WordPrefix& w, std::size_t k, std::size_t ell);

/// Classic Rauzy graph of order k; coincides with the ℓ-Rauzy graph at
/// ℓ = k−1. Defined for k ≥ 1 (arcs are the length-(k+1) factors).
DirectedGraph build_rauzy(const WordPrefix& w, std::size_t k);

/// de Bruijn graph of order k > 1 over {0,1}: all 2^k words as vertices,
/// an arc u→v iff u[2..k] = v[1..k−1], labeled u·v_k.
DirectedGraph build_debruijn(std::size_t k);

enum class HrrVariant { even, odd_type_one, odd_type_two };

/// Overlap length used by a half-range Rauzy variant:
/// k/2 (even), (k+1)/2 (odd type I), (k−1)/2 (odd type II).
std::size_t hrr_overlap(std::size_t k, HrrVariant variant);

/// Half-range Rauzy graph; the even variant requires even k, the odd
/// variants odd k. Arc labels have length 3k/2, (3k−1)/2, (3k+1)/2.
DirectedGraph build_hrr(const WordPrefix& w, std::size_t k, HrrVariant variant);

struct DegreeReport {
    std::vector<std::size_t> in_degree;
    std::vector<std::size_t> out_degree;
    std::size_t isolated = 0; // vertices with in = out = 0
    std::size_t min_in = 0;
    std::size_t min_out = 0;
};

DegreeReport degrees(const DirectedGraph& g);

struct SccResult {
    std::vector<std::size_t> component_of; // per vertex
    std::size_t component_count = 0;
    bool strongly_connected = false;
};

/// Strongly connected components (iterative Kosaraju); components are
/// numbered in deterministic discovery order.
SccResult strongly_connected_components(const DirectedGraph& g);

/// An arc given by vertex indices only (0-based).
struct IndexArc {
    std::size_t from;
    std::size_t to;

    friend bool operator==(const IndexArc&, const IndexArc&) = default;
    friend auto operator<=>(const IndexArc&, const IndexArc&) = default;
};

/// Whether the closed-form arc map applies: k+1 must be a Fibonacci number
/// F_{n+1} and F_{n−1} ≤ k−ℓ ≤ F_n.
bool closed_form_applicable(std::size_t k, std::size_t ell);

/// The arc set of the ℓ-Rauzy graph of the Fibonacci word predicted in
/// closed form for k = F_{n+1}−1, as 0-based index pairs under
/// first-occurrence vertex order. With s = k−ℓ and 1-based i:
///   i → i+s          for 1 ≤ i ≤ F_{n+1}−s
///   i → i+s−F_{n+1}  for F_{n+1}−s+1 ≤ i ≤ F_{n+1}
///   i → i+s−F_n      for F_n−s+1 ≤ i ≤ F_n
/// Total F_{n+1}+s arcs. Throws unless closed_form_applicable(k, ell).
std::vector<IndexArc> closed_form_arcs(std::size_t k, std::size_t ell);

/// Order-insensitive equality: same vertex label set and same
/// (source word, target word, label) arc set.
bool graph_equal(const DirectedGraph& a, const DirectedGraph& b);

} // namespace lrauzy

#endif

#ifndef LRAUZY_ISOMORPHISM_HPP
#define LRAUZY_ISOMORPHISM_HPP

#include "lrauzy/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace lrauzy {

/// Vertex bijection a → b: mapping[i] is the b-index of a-vertex i.
using IsoMapping = std::vector<std::size_t>;

inline constexpr std::size_t kIsomorphismVertexCap = 200;

/// Exact directed-graph isomorphism via color refinement plus backtracking.
/// Arc labels are ignored; arc multiplicities are respected. Returns a
/// mapping when one exists. Throws when either graph exceeds the vertex cap.
std::optional<IsoMapping> isomorphic(const DirectedGraph& a,
                                     const DirectedGraph& b);

/// Checks that the given vertex mapping preserves arc multiplicities in
/// both directions.
bool is_isomorphism(const DirectedGraph& a, const DirectedGraph& b,
                    const IsoMapping& mapping);

/// Builds the ℓ-Rauzy graphs of order k for the Fibonacci word and its
/// complement and verifies that letterwise complement of vertex labels is an
/// arc-preserving bijection. Returns the mapping, or nullopt if the check
/// fails (which would falsify the complement symmetry).
std::optional<IsoMapping> complement_isomorphism(std::size_t k, std::size_t ell);

/// Result of comparing the words spelled by the (k−ℓ)-arc paths of the
/// order-k Rauzy graph against the arc labels of the ℓ-Rauzy graph.
///
/// The graph may contain paths that no occurrence in the word realizes:
/// already at k=3, ℓ=1 the walk 101→010→101 spells 10101, which is not a
/// factor of the Fibonacci word. Those paths land in `beyond_language`.
/// The bijection holds between arc labels and word-realized paths: `ok`
/// requires every arc label to be spelled by exactly one path.
struct PsiCheck {
    bool ok = false;
    std::size_t path_count = 0;     // all (k−ℓ)-arc paths in the Rauzy graph
    std::size_t realized_count = 0; // paths whose spelled word is an arc label
    std::vector<Word> duplicated;      // words spelled by more than one path
    std::vector<Word> missing;         // arc labels never spelled
    std::vector<Word> beyond_language; // spelled words that are not factors
};

/// Path↔arc correspondence for the Fibonacci word: each arc label of the
/// ℓ-Rauzy graph of order k is spelled by exactly one directed path of
/// k−ℓ arcs in the order-k Rauzy graph.
PsiCheck psi_bijection_check(std::size_t k, std::size_t ell);

/// Same comparison on the graphs of an arbitrary word prefix.
PsiCheck psi_bijection_check(const WordPrefix& w, std::size_t k,
                             std::size_t ell);

} // namespace lrauzy

#endif

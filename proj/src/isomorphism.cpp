#include "lrauzy/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace lrauzy {

namespace {

// Adjacency multiplicities, n x n, row = from.
std::vector<std::vector<std::size_t>> adjacency(const DirectedGraph& g) {
    std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> m(n, std::vector<std::size_t>(n, 0));
    for (const Arc& a : g.arcs)
        ++m[a.from][a.to];
    return m;
}

// Iterated directed color refinement. Two vertices can only correspond under
// an isomorphism if they end up with the same color. New color ids are ranks
// in signature order, so they are comparable across graphs.
std::vector<std::size_t> refine_colors(
    const std::vector<std::vector<std::size_t>>& adj) {
    using Sig = std::tuple<std::size_t,
                           std::vector<std::pair<std::size_t, std::size_t>>,
                           std::vector<std::pair<std::size_t, std::size_t>>>;
    std::size_t n = adj.size();
    std::vector<std::size_t> color(n, 0);
    for (std::size_t round = 0; round < n; ++round) {
        std::vector<Sig> sigs(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::pair<std::size_t, std::size_t>> outs, ins;
            for (std::size_t u = 0; u < n; ++u) {
                if (adj[v][u])
                    outs.emplace_back(color[u], adj[v][u]);
                if (adj[u][v])
                    ins.emplace_back(color[u], adj[u][v]);
            }
            std::sort(outs.begin(), outs.end());
            std::sort(ins.begin(), ins.end());
            sigs[v] = Sig{color[v], std::move(outs), std::move(ins)};
        }
        std::map<Sig, std::size_t> palette;
        for (const Sig& s : sigs)
            palette.emplace(s, 0);
        std::size_t rank = 0;
        for (auto& [sig, id] : palette)
            id = rank++;
        std::vector<std::size_t> next(n);
        for (std::size_t v = 0; v < n; ++v)
            next[v] = palette[sigs[v]];
        if (next == color)
            break;
        color = std::move(next);
    }
    return color;
}

bool extend(const std::vector<std::vector<std::size_t>>& adj_a,
            const std::vector<std::vector<std::size_t>>& adj_b,
            const std::vector<std::size_t>& order, std::size_t depth,
            const std::vector<std::vector<std::size_t>>& candidates,
            std::vector<std::size_t>& mapping, std::vector<char>& used) {
    if (depth == order.size())
        return true;
    std::size_t v = order[depth];
    for (std::size_t w : candidates[v]) {
        if (used[w])
            continue;
        bool consistent = true;
        for (std::size_t d = 0; d < depth && consistent; ++d) {
            std::size_t p = order[d];
            consistent = adj_a[v][p] == adj_b[w][mapping[p]] &&
                         adj_a[p][v] == adj_b[mapping[p]][w];
        }
        if (!consistent || adj_a[v][v] != adj_b[w][w])
            continue;
        mapping[v] = w;
        used[w] = 1;
        if (extend(adj_a, adj_b, order, depth + 1, candidates, mapping, used))
            return true;
        used[w] = 0;
    }
    return false;
}

} // namespace

bool is_isomorphism(const DirectedGraph& a, const DirectedGraph& b,
                    const IsoMapping& mapping) {
    if (a.vertex_count() != b.vertex_count() ||
        mapping.size() != a.vertex_count() || a.arc_count() != b.arc_count())
        return false;
    std::vector<char> hit(b.vertex_count(), 0);
    for (std::size_t w : mapping) {
        if (w >= b.vertex_count() || hit[w])
            return false;
        hit[w] = 1;
    }
    auto adj_a = adjacency(a);
    auto adj_b = adjacency(b);
    for (std::size_t u = 0; u < a.vertex_count(); ++u)
        for (std::size_t v = 0; v < a.vertex_count(); ++v)
            if (adj_a[u][v] != adj_b[mapping[u]][mapping[v]])
                return false;
    return true;
}

std::optional<IsoMapping> isomorphic(const DirectedGraph& a,
                                     const DirectedGraph& b) {
    if (a.vertex_count() > kIsomorphismVertexCap ||
        b.vertex_count() > kIsomorphismVertexCap)
        throw std::invalid_argument("isomorphic: graph exceeds vertex cap");
    if (a.vertex_count() != b.vertex_count() || a.arc_count() != b.arc_count())
        return std::nullopt;
    std::size_t n = a.vertex_count();
    if (n == 0)
        return IsoMapping{};

    auto adj_a = adjacency(a);
    auto adj_b = adjacency(b);
    auto color_a = refine_colors(adj_a);
    auto color_b = refine_colors(adj_b);

    // Refinement assigns palette ids in a canonical order per graph, so the
    // color histograms are directly comparable.
    {
        std::map<std::size_t, std::size_t> hist_a, hist_b;
        for (std::size_t c : color_a)
            ++hist_a[c];
        for (std::size_t c : color_b)
            ++hist_b[c];
        if (hist_a != hist_b)
            return std::nullopt;
    }

    std::vector<std::vector<std::size_t>> candidates(n);
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = 0; w < n; ++w)
            if (color_a[v] == color_b[w])
                candidates[v].push_back(w);

    // Most-constrained vertices first.
    std::vector<std::size_t> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        if (candidates[x].size() != candidates[y].size())
            return candidates[x].size() < candidates[y].size();
        return x < y;
    });

    IsoMapping mapping(n, 0);
    std::vector<char> used(n, 0);
    if (extend(adj_a, adj_b, order, 0, candidates, mapping, used))
        return mapping;
    return std::nullopt;
}

std::optional<IsoMapping> complement_isomorphism(std::size_t k,
                                                 std::size_t ell) {
    std::size_t need = fibonacci_prefix_policy(2 * k - ell);
    WordPrefix f = fibonacci_prefix(need);
    WordPrefix fc = complement(f);
    DirectedGraph ga = build_l_rauzy(f, k, ell);
    DirectedGraph gb = build_l_rauzy(fc, k, ell);
    if (ga.vertex_count() != gb.vertex_count() ||
        ga.arc_count() != gb.arc_count())
        return std::nullopt;

    IsoMapping mapping(ga.vertex_count());
    for (std::size_t i = 0; i < ga.vertex_count(); ++i) {
        auto j = gb.index_of(complement_word(ga.vertices[i]));
        if (!j)
            return std::nullopt;
        mapping[i] = *j;
    }
    if (!is_isomorphism(ga, gb, mapping))
        return std::nullopt;
    // labels must complement too, arc by arc
    for (const Arc& a : ga.arcs) {
        Word want = complement_word(a.label);
        bool found = false;
        for (const Arc& b : gb.arcs) {
            if (b.from == mapping[a.from] && b.to == mapping[a.to] &&
                b.label == want) {
                found = true;
                break;
            }
        }
        if (!found)
            return std::nullopt;
    }
    return mapping;
}

PsiCheck psi_bijection_check(std::size_t k, std::size_t ell) {
    return psi_bijection_check(
        fibonacci_prefix(fibonacci_prefix_policy(2 * k - ell)), k, ell);
}

PsiCheck psi_bijection_check(const WordPrefix& w, std::size_t k,
                             std::size_t ell) {
    if (k < 2 || ell < 1 || ell > k - 1)
        throw std::invalid_argument("psi_bijection_check: need 1 <= ell <= k-1");
    DirectedGraph rauzy = build_rauzy(w, k);
    DirectedGraph lrauzy = build_l_rauzy(w, k, ell);

    std::vector<std::vector<const Arc*>> out(rauzy.vertex_count());
    for (const Arc& a : rauzy.arcs)
        out[a.from].push_back(&a);

    // Spell every directed path with exactly k−ℓ arcs. Consecutive Rauzy
    // arcs overlap on k symbols, so each further arc contributes one letter.
    std::size_t steps = k - ell;
    std::map<Word, std::size_t> spelled;
    std::size_t path_count = 0;

    struct Frame {
        std::size_t vertex;
        std::size_t depth;
        Word word;
    };
    std::vector<Frame> stack;
    for (std::size_t v = 0; v < rauzy.vertex_count(); ++v)
        stack.push_back(Frame{v, 0, rauzy.vertices[v]});
    while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        if (fr.depth == steps) {
            ++spelled[fr.word];
            ++path_count;
            continue;
        }
        for (const Arc* a : out[fr.vertex])
            stack.push_back(
                Frame{a->to, fr.depth + 1, fr.word + a->label.back()});
    }

    PsiCheck res;
    res.path_count = path_count;
    std::map<Word, std::size_t> labels;
    for (const Arc& a : lrauzy.arcs)
        ++labels[a.label];
    for (const auto& [word, count] : spelled) {
        if (count > 1)
            res.duplicated.push_back(word);
        if (labels.contains(word))
            res.realized_count += count;
        else
            res.beyond_language.push_back(word);
    }
    for (const auto& [word, count] : labels)
        if (!spelled.contains(word))
            res.missing.push_back(word);
    // Arc labels are exactly the length-(2k−ℓ) factors, so a spelled word
    // outside the label set lies outside the word's language; the bijection
    // claim concerns realized paths only.
    res.ok = res.duplicated.empty() && res.missing.empty();
    return res;
}

} // namespace lrauzy

#include "lrauzy/graph.hpp"

#include "lrauzy/fibnum.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_set>

namespace lrauzy {

namespace {

void check_prefix_length(const WordPrefix& w, std::size_t label_len) {
    if (w.size() < label_len)
        throw std::invalid_argument(
            "insufficient prefix: need at least " + std::to_string(label_len) +
            " symbols, have " + std::to_string(w.size()));
    if (w.is_fibonacci_family() &&
        w.size() < fibonacci_prefix_policy(label_len))
        throw std::invalid_argument(
            "insufficient prefix: the fibonacci prefix policy requires " +
            std::to_string(fibonacci_prefix_policy(label_len)) +
            " symbols for factor length " + std::to_string(label_len));
}

// Shared arc construction; ell = 0 is allowed here so that the order-1
// Rauzy graph (whose overlap is empty) can reuse it.
DirectedGraph build_overlap_graph(const WordPrefix& w, std::size_t k,
                                  std::size_t ell) {
    std::size_t label_len = 2 * k - ell;
    check_prefix_length(w, label_len);

    DirectedGraph g;
    FactorSet vk = factors(w, k);
    g.vertices = vk.factors;

    FactorSet labels = factors(w, label_len);
    std::unordered_set<Word> label_set(labels.factors.begin(),
                                       labels.factors.end());

    for (std::size_t ui = 0; ui < g.vertices.size(); ++ui) {
        const Word& u = g.vertices[ui];
        for (std::size_t vi = 0; vi < g.vertices.size(); ++vi) {
            const Word& v = g.vertices[vi];
            if (u.compare(k - ell, ell, v, 0, ell) != 0)
                continue;
            Word label = u + v.substr(ell);
            if (!label_set.contains(label))
                continue;
            g.arcs.push_back(Arc{ui, vi, std::move(label)});
        }
    }
    return g;
}

} // namespace

std::optional<std::size_t> DirectedGraph::index_of(const Word& v) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == v)
            return i;
    return std::nullopt;
}

DirectedGraph build_l_rauzy(const WordPrefix& w, std::size_t k,
                            std::size_t ell) {
    if (k < 2)
        throw std::invalid_argument("build_l_rauzy: k must be >= 2");
    if (ell < 1 || ell > k - 1)
        throw std::invalid_argument("build_l_rauzy: ell must be in 1..k-1");
    return build_overlap_graph(w, k, ell);
}

DirectedGraph build_rauzy(const WordPrefix& w, std::size_t k) {
    if (k < 1)
        throw std::invalid_argument("build_rauzy: k must be >= 1");
    return build_overlap_graph(w, k, k - 1);
}

DirectedGraph build_debruijn(std::size_t k) {
    if (k < 2)
        throw std::invalid_argument("build_debruijn: k must be > 1");
    if (k > 20)
        throw std::invalid_argument("build_debruijn: k above supported size");

    DirectedGraph g;
    std::size_t count = std::size_t{1} << k;
    g.vertices.reserve(count);
    for (std::size_t bits = 0; bits < count; ++bits) {
        Word v(k, '0');
        for (std::size_t i = 0; i < k; ++i)
            if (bits & (std::size_t{1} << (k - 1 - i)))
                v[i] = '1';
        g.vertices.push_back(std::move(v));
    }
    // u -> v iff v is u shifted left by one with a fresh last symbol
    for (std::size_t bits = 0; bits < count; ++bits) {
        std::size_t shifted = (bits << 1) & (count - 1);
        for (std::size_t last : {std::size_t{0}, std::size_t{1}}) {
            std::size_t target = shifted | last;
            Word label = g.vertices[bits] + (last ? '1' : '0');
            g.arcs.push_back(Arc{bits, target, std::move(label)});
        }
    }
    return g;
}

std::size_t hrr_overlap(std::size_t k, HrrVariant variant) {
    switch (variant) {
    case HrrVariant::even:
        return k / 2;
    case HrrVariant::odd_type_one:
        return (k + 1) / 2;
    case HrrVariant::odd_type_two:
        return (k - 1) / 2;
    }
    throw std::invalid_argument("hrr_overlap: bad variant");
}

DirectedGraph build_hrr(const WordPrefix& w, std::size_t k,
                        HrrVariant variant) {
    bool even = (k % 2 == 0);
    if (variant == HrrVariant::even && !even)
        throw std::invalid_argument("build_hrr: even variant needs even k");
    if (variant != HrrVariant::even && even)
        throw std::invalid_argument("build_hrr: odd variants need odd k");
    if (k < 2)
        throw std::invalid_argument("build_hrr: k must be > 1");
    return build_l_rauzy(w, k, hrr_overlap(k, variant));
}

DegreeReport degrees(const DirectedGraph& g) {
    DegreeReport rep;
    rep.in_degree.assign(g.vertex_count(), 0);
    rep.out_degree.assign(g.vertex_count(), 0);
    for (const Arc& a : g.arcs) {
        ++rep.out_degree[a.from];
        ++rep.in_degree[a.to];
    }
    rep.min_in = g.vertex_count() ? *std::min_element(rep.in_degree.begin(),
                                                      rep.in_degree.end())
                                  : 0;
    rep.min_out = g.vertex_count() ? *std::min_element(rep.out_degree.begin(),
                                                       rep.out_degree.end())
                                   : 0;
    for (std::size_t i = 0; i < g.vertex_count(); ++i)
        if (rep.in_degree[i] == 0 && rep.out_degree[i] == 0)
            ++rep.isolated;
    return rep;
}

SccResult strongly_connected_components(const DirectedGraph& g) {
    std::size_t n = g.vertex_count();
    std::vector<std::vector<std::size_t>> out(n), in(n);
    for (const Arc& a : g.arcs) {
        out[a.from].push_back(a.to);
        in[a.to].push_back(a.from);
    }

    // First pass: record vertices in order of DFS completion.
    std::vector<std::size_t> finish_order;
    finish_order.reserve(n);
    std::vector<char> seen(n, 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack; // (vertex, next edge)
    for (std::size_t root = 0; root < n; ++root) {
        if (seen[root])
            continue;
        seen[root] = 1;
        stack.emplace_back(root, 0);
        while (!stack.empty()) {
            auto& [v, next] = stack.back();
            if (next < out[v].size()) {
                std::size_t to = out[v][next++];
                if (!seen[to]) {
                    seen[to] = 1;
                    stack.emplace_back(to, 0);
                }
            } else {
                finish_order.push_back(v);
                stack.pop_back();
            }
        }
    }

    // Second pass: reverse-graph DFS in reverse finish order.
    SccResult res;
    res.component_of.assign(n, 0);
    std::vector<char> assigned(n, 0);
    std::vector<std::size_t> work;
    for (auto it = finish_order.rbegin(); it != finish_order.rend(); ++it) {
        if (assigned[*it])
            continue;
        std::size_t comp = res.component_count++;
        work.push_back(*it);
        assigned[*it] = 1;
        while (!work.empty()) {
            std::size_t v = work.back();
            work.pop_back();
            res.component_of[v] = comp;
            for (std::size_t from : in[v]) {
                if (!assigned[from]) {
                    assigned[from] = 1;
                    work.push_back(from);
                }
            }
        }
    }
    res.strongly_connected = (n > 0 && res.component_count == 1);
    return res;
}

bool closed_form_applicable(std::size_t k, std::size_t ell) {
    if (k < 2 || ell < 1 || ell > k - 1)
        return false;
    std::size_t np1 = 3;
    while (np1 <= kMaxFibIndex && fibonacci_number(np1) < k + 1)
        ++np1;
    if (np1 > kMaxFibIndex || fibonacci_number(np1) != k + 1)
        return false;
    std::size_t n = np1 - 1;
    std::uint64_t s = k - ell;
    return fibonacci_number(n - 1) <= s && s <= fibonacci_number(n);
}

std::vector<IndexArc> closed_form_arcs(std::size_t k, std::size_t ell) {
    if (!closed_form_applicable(k, ell))
        throw std::invalid_argument(
            "closed_form_arcs: requires k+1 = F_{n+1} and F_{n-1} <= k-ell <= F_n");
    std::size_t np1 = 3;
    while (fibonacci_number(np1) != k + 1)
        ++np1;
    std::size_t n = np1 - 1;
    std::size_t fn = fibonacci_number(n);
    std::size_t fnp1 = fibonacci_number(n + 1); // == k+1
    std::size_t s = k - ell;

    std::vector<IndexArc> arcs;
    arcs.reserve(fnp1 + s);
    for (std::size_t i = 1; i <= fnp1 - s; ++i)
        arcs.push_back(IndexArc{i - 1, i + s - 1});
    for (std::size_t i = fnp1 - s + 1; i <= fnp1; ++i)
        arcs.push_back(IndexArc{i - 1, i + s - fnp1 - 1});
    for (std::size_t i = fn - s + 1; i <= fn; ++i)
        arcs.push_back(IndexArc{i - 1, i + s - fn - 1});
    return arcs;
}

bool graph_equal(const DirectedGraph& a, const DirectedGraph& b) {
    auto labels = [](const DirectedGraph& g) {
        std::vector<Word> v = g.vertices;
        std::sort(v.begin(), v.end());
        return v;
    };
    auto arc_triples = [](const DirectedGraph& g) {
        std::vector<std::tuple<Word, Word, Word>> t;
        t.reserve(g.arcs.size());
        for (const Arc& a : g.arcs)
            t.emplace_back(g.vertices[a.from], g.vertices[a.to], a.label);
        std::sort(t.begin(), t.end());
        return t;
    };
    return labels(a) == labels(b) && arc_triples(a) == arc_triples(b);
}

} // namespace lrauzy

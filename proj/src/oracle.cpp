#include "strongcliques/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace strongcliques {

namespace {

// Bron-Kerbosch with greatest-coverage pivoting over bitset adjacency.
// `cb` returns false to stop the enumeration early.
template <typename Cb>
bool bron_kerbosch(const std::vector<Bitset>& adj, Bitset r, Bitset p, Bitset x,
                   const Cb& cb) {
    if (p.none() && x.none()) return cb(r);
    // Pivot: vertex of P|X covering the most of P.
    int pivot = -1, best = -1;
    (p | x).for_each([&](int u) {
        int c = (p & adj[u]).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    Bitset cand = p - adj[pivot];
    bool keep_going = true;
    cand.for_each([&](int v) {
        if (!keep_going) return;
        Bitset r2 = r;
        r2.set(v);
        if (!bron_kerbosch(adj, r2, p & adj[v], x & adj[v], cb))
            keep_going = false;
        p.reset(v);
        x.set(v);
    });
    return keep_going;
}

std::vector<Bitset> complement_adjacency(const Graph& g) {
    std::vector<Bitset> out(g.n(), Bitset(g.n()));
    Bitset all = Bitset::all(g.n());
    for (int v = 0; v < g.n(); ++v) {
        out[v] = all - g.adj(v);
        out[v].reset(v);
    }
    return out;
}

std::vector<VertexSet> collect_all(const std::vector<Bitset>& adj, int n) {
    std::vector<VertexSet> out;
    bron_kerbosch(adj, Bitset(n), Bitset::all(n), Bitset(n), [&](const Bitset& s) {
        out.push_back(s.to_vector());
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Bitset> graph_adjacency(const Graph& g) {
    std::vector<Bitset> adj(g.n());
    for (int v = 0; v < g.n(); ++v) adj[v] = g.adj(v);
    return adj;
}

bool dominates(const Graph& g, const Bitset& s, const VertexSet& c) {
    for (int v : c)
        if (!g.adj(v).intersects(s)) return false;
    return true;
}

}  // namespace

void require_clique(const Graph& g, const VertexSet& c, bool allow_empty) {
    if (c.empty()) {
        if (allow_empty) return;
        throw std::invalid_argument("clique must be nonempty");
    }
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] < 0 || c[i] >= g.n())
            throw std::invalid_argument("clique vertex " + std::to_string(c[i]) +
                                        " out of range");
        if (i > 0 && c[i] <= c[i - 1])
            throw std::invalid_argument("clique must be sorted and duplicate-free");
    }
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = i + 1; j < c.size(); ++j)
            if (!g.adjacent(c[i], c[j]))
                throw std::invalid_argument(
                    "not a clique: vertices " + std::to_string(c[i]) + " and " +
                    std::to_string(c[j]) + " are non-adjacent");
}

std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    return collect_all(complement_adjacency(g), g.n());
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    return collect_all(graph_adjacency(g), g.n());
}

std::optional<VertexSet> find_disjoint_mis(const Graph& g, const VertexSet& c) {
    // Maximal independent sets of G disjoint from C are exactly the maximal
    // independent sets of G - C that dominate C.
    Bitset mask = Bitset::all(g.n());
    for (int v : c) mask.reset(v);
    auto co_adj = complement_adjacency(g);
    std::optional<VertexSet> found;
    std::vector<Bitset> masked(g.n());
    for (int v = 0; v < g.n(); ++v) masked[v] = co_adj[v] & mask;
    bron_kerbosch(masked, Bitset(g.n()), mask, Bitset(g.n()),
                  [&](const Bitset& s) {
                      if (dominates(g, s, c)) {
                          found = s.to_vector();
                          return false;
                      }
                      return true;
                  });
    return found;
}

StrongCliqueWitness is_strong_clique(const Graph& g, const VertexSet& c) {
    require_clique(g, c, /*allow_empty=*/false);
    auto witness = find_disjoint_mis(g, c);
    if (witness) return {false, *witness};
    return {true, {}};
}

std::vector<VertexSet> strong_cliques_all(const Graph& g) {
    auto mis = maximal_independent_sets(g);
    std::vector<Bitset> mis_bits;
    mis_bits.reserve(mis.size());
    for (const auto& s : mis) mis_bits.push_back(Bitset::of(g.n(), s));
    std::vector<VertexSet> out;
    for (const auto& q : maximal_cliques(g)) {
        Bitset qb = Bitset::of(g.n(), q);
        bool strong = true;
        for (const auto& s : mis_bits)
            if (!qb.intersects(s)) {
                strong = false;
                break;
            }
        if (strong && !q.empty()) out.push_back(q);
    }
    return out;
}

namespace {

struct ColoringSearch {
    const Graph& g;
    std::vector<int> order;
    std::vector<int> color;
    int k;

    bool assign(size_t pos, int used) {
        if (pos == order.size()) return true;
        int v = order[pos];
        int limit = std::min(used + 1, k);
        for (int col = 0; col < limit; ++col) {
            bool ok = true;
            for (size_t i = 0; i < pos && ok; ++i)
                if (g.adjacent(v, order[i]) && color[order[i]] == col) ok = false;
            if (!ok) continue;
            color[v] = col;
            if (assign(pos + 1, std::max(used, col + 1))) return true;
        }
        color[v] = -1;
        return false;
    }
};

}  // namespace

VertexSet maximum_clique(const Graph& g) {
    Bitset best(g.n());
    bron_kerbosch(graph_adjacency(g), Bitset(g.n()), Bitset::all(g.n()),
                  Bitset(g.n()), [&](const Bitset& s) {
                      if (s.count() > best.count()) best = s;
                      return true;
                  });
    return best.to_vector();
}

namespace {

int max_clique_size(const Graph& g) { return int(maximum_clique(g).size()); }

}  // namespace

int chromatic_number_exact(const Graph& g) {
    if (g.n() == 0) return 0;
    if (g.m() == 0) return 1;
    std::vector<int> order(g.n());
    for (int v = 0; v < g.n(); ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });
    for (int k = max_clique_size(g);; ++k) {
        ColoringSearch search{g, order, std::vector<int>(g.n(), -1), k};
        if (search.assign(0, 0)) return k;
    }
}

int chromatic_index_exact(const Graph& g) {
    return chromatic_number_exact(line_graph(g).graph);
}

InvariantsReport invariants_report(const Graph& g) {
    auto mis = maximal_independent_sets(g);
    int alpha = 0, idom = g.n() == 0 ? 0 : g.n() + 1;
    for (const auto& s : mis) {
        alpha = std::max(alpha, int(s.size()));
        idom = std::min(idom, int(s.size()));
    }
    if (g.n() == 0) idom = 0;
    int omega = max_clique_size(g);
    int theta = chromatic_number_exact(complement(g));
    return {alpha, idom, theta, omega, idom == alpha, theta == alpha};
}

namespace {

bool exact_cover(const std::vector<VertexSet>& sets,
                 const std::vector<Bitset>& set_bits, Bitset uncovered,
                 std::vector<int>& chosen) {
    int v = uncovered.find_first();
    if (v < 0) return true;
    for (size_t i = 0; i < sets.size(); ++i) {
        if (!set_bits[i].test(v)) continue;
        if (!set_bits[i].is_subset_of(uncovered)) continue;
        chosen.push_back(int(i));
        if (exact_cover(sets, set_bits, uncovered - set_bits[i], chosen))
            return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

LocalizableReport localizable_exact(const Graph& g) {
    if (g.n() == 0) return {true, std::vector<VertexSet>{}};
    auto strong = strong_cliques_all(g);
    std::vector<Bitset> bits;
    bits.reserve(strong.size());
    for (const auto& s : strong) bits.push_back(Bitset::of(g.n(), s));
    std::vector<int> chosen;
    if (!exact_cover(strong, bits, Bitset::all(g.n()), chosen))
        return {false, std::nullopt};
    std::vector<VertexSet> parts;
    parts.reserve(chosen.size());
    for (int i : chosen) parts.push_back(strong[i]);
    return {true, parts};
}

}  // namespace strongcliques

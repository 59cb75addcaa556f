#include "strongcliques/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace strongcliques {

namespace {

// Iterated refinement: a vertex color is the pair (old color, sorted multiset
// of neighbor colors), renumbered each round until stable.
std::vector<int> refine_colors(const Graph& g) {
    std::vector<int> color(g.n());
    for (int v = 0; v < g.n(); ++v) color[v] = g.degree(v);
    for (int round = 0; round < g.n(); ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(g.n());
        for (int v = 0; v < g.n(); ++v) {
            std::vector<int> nb;
            g.adj(v).for_each([&](int u) { nb.push_back(color[u]); });
            std::sort(nb.begin(), nb.end());
            nb.push_back(color[v]);
            sig[v] = {std::move(nb), v};
        }
        std::map<std::vector<int>, int> ids;
        for (auto& [s, v] : sig) ids.emplace(s, int(ids.size()));
        std::vector<int> next(g.n());
        for (auto& [s, v] : sig) next[v] = ids[s];
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

bool extend(const Graph& a, const Graph& b, const std::vector<int>& order,
            size_t pos, std::vector<int>& map_ab, std::vector<bool>& used,
            const std::vector<int>& ca, const std::vector<int>& cb) {
    if (pos == order.size()) return true;
    int u = order[pos];
    for (int w = 0; w < b.n(); ++w) {
        if (used[w] || cb[w] != ca[u]) continue;
        bool ok = true;
        for (size_t i = 0; i < pos && ok; ++i) {
            int prev = order[i];
            if (a.adjacent(u, prev) != b.adjacent(w, map_ab[prev])) ok = false;
        }
        if (!ok) continue;
        map_ab[u] = w;
        used[w] = true;
        if (extend(a, b, order, pos + 1, map_ab, used, ca, cb)) return true;
        used[w] = false;
        map_ab[u] = -1;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.m() != b.m()) return std::nullopt;
    std::vector<int> ca = refine_colors(a), cb = refine_colors(b);
    {
        std::vector<int> ha = ca, hb = cb;
        std::sort(ha.begin(), ha.end());
        std::sort(hb.begin(), hb.end());
        if (ha != hb) return std::nullopt;
    }
    // Rarest color classes first, ties by higher degree.
    std::vector<int> class_size(a.n() + 1, 0);
    for (int c : ca) ++class_size[c];
    std::vector<int> order(a.n());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        if (class_size[ca[x]] != class_size[ca[y]])
            return class_size[ca[x]] < class_size[ca[y]];
        if (a.degree(x) != a.degree(y)) return a.degree(x) > a.degree(y);
        return x < y;
    });
    std::vector<int> map_ab(a.n(), -1);
    std::vector<bool> used(b.n(), false);
    if (extend(a, b, order, 0, map_ab, used, ca, cb)) return map_ab;
    return std::nullopt;
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    return find_isomorphism(a, b).has_value();
}

uint64_t invariant_key(const Graph& g) {
    std::vector<int> colors = refine_colors(g);
    std::sort(colors.begin(), colors.end());
    uint64_t h = 1469598103934665603ull;
    auto mix = [&](uint64_t x) {
        h ^= x + 0x9e3779b97f4a7c15ull;
        h *= 1099511628211ull;
    };
    mix(uint64_t(g.n()));
    mix(uint64_t(g.m()));
    for (int c : colors) mix(uint64_t(c));
    mix(uint64_t(all_triangles(g).size()));
    return h;
}

}  // namespace strongcliques

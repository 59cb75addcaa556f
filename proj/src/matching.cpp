#include "strongcliques/matching.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

namespace strongcliques {

namespace {

// O(n^3) maximum-weight matching over general graphs. Vertices are 1-based
// internally; ids above n denote blossoms. Edge weights are doubled inside
// the reduced-cost computation so the vertex duals stay integral throughout.
class Blossom {
public:
    explicit Blossom(int n) : n_(n), cap_(n + n / 2 + 2) {
        g_.assign(cap_, std::vector<EdgeRec>(cap_));
        for (int u = 0; u < cap_; ++u)
            for (int v = 0; v < cap_; ++v) g_[u][v] = {u, v, 0};
        lab_.assign(cap_, 0);
        match_.assign(cap_, 0);
        slack_.assign(cap_, 0);
        st_.assign(cap_, 0);
        pa_.assign(cap_, 0);
        s_.assign(cap_, -1);
        vis_.assign(cap_, 0);
        flower_.assign(cap_, {});
        flower_from_.assign(cap_, std::vector<int>(n + 1, 0));
    }

    void add_edge(int u, int v, long long w) {  // 1-based, w > 0
        g_[u][v].w = g_[v][u].w = w;
    }

    // Mate array (1-based, 0 = unmatched).
    std::vector<int> solve() {
        std::fill(match_.begin(), match_.end(), 0);
        n_x_ = n_;
        long long w_max = 0;
        for (int u = 0; u <= n_; ++u) {
            st_[u] = u;
            flower_[u].clear();
        }
        for (int u = 1; u <= n_; ++u)
            for (int v = 1; v <= n_; ++v) {
                flower_from_[u][v] = (u == v ? u : 0);
                w_max = std::max(w_max, g_[u][v].w);
            }
        for (int u = 1; u <= n_; ++u) lab_[u] = w_max;
        while (phase()) {
        }
        return {match_.begin(), match_.begin() + n_ + 1};
    }

private:
    struct EdgeRec {
        int u, v;
        long long w;
    };

    static constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

    long long delta(const EdgeRec& e) const {
        return lab_[e.u] + lab_[e.v] - g_[e.u][e.v].w * 2;
    }

    void update_slack(int u, int x) {
        if (!slack_[x] || delta(g_[u][x]) < delta(g_[slack_[x]][x])) slack_[x] = u;
    }

    void set_slack(int x) {
        slack_[x] = 0;
        for (int u = 1; u <= n_; ++u)
            if (g_[u][x].w > 0 && st_[u] != x && s_[st_[u]] == 0) update_slack(u, x);
    }

    void push_queue(int x) {
        if (x <= n_)
            queue_.push_back(x);
        else
            for (int y : flower_[x]) push_queue(y);
    }

    void set_st(int x, int b) {
        st_[x] = b;
        if (x > n_)
            for (int y : flower_[x]) set_st(y, b);
    }

    int petal_index(int b, int xr) {
        int pr = int(std::find(flower_[b].begin(), flower_[b].end(), xr) -
                     flower_[b].begin());
        if (pr % 2 == 1) {
            std::reverse(flower_[b].begin() + 1, flower_[b].end());
            return int(flower_[b].size()) - pr;
        }
        return pr;
    }

    void set_match(int u, int v) {
        match_[u] = g_[u][v].v;
        if (u <= n_) return;
        EdgeRec e = g_[u][v];
        int xr = flower_from_[u][e.u];
        int pr = petal_index(u, xr);
        for (int i = 0; i < pr; ++i) set_match(flower_[u][i], flower_[u][i ^ 1]);
        set_match(xr, v);
        std::rotate(flower_[u].begin(), flower_[u].begin() + pr, flower_[u].end());
    }

    void augment(int u, int v) {
        for (;;) {
            int xnv = st_[match_[u]];
            set_match(u, v);
            if (!xnv) return;
            set_match(xnv, st_[pa_[xnv]]);
            u = st_[pa_[xnv]];
            v = xnv;
        }
    }

    int lca(int u, int v) {
        for (++timestamp_; u || v; std::swap(u, v)) {
            if (u == 0) continue;
            if (vis_[u] == timestamp_) return u;
            vis_[u] = timestamp_;
            u = st_[match_[u]];
            if (u) u = st_[pa_[u]];
        }
        return 0;
    }

    void add_blossom(int u, int anchor, int v) {
        int b = n_ + 1;
        while (b <= n_x_ && st_[b]) ++b;
        if (b > n_x_) ++n_x_;
        lab_[b] = 0;
        s_[b] = 0;
        match_[b] = match_[anchor];
        flower_[b].clear();
        flower_[b].push_back(anchor);
        for (int x = u, y; x != anchor; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            push_queue(y);
        }
        std::reverse(flower_[b].begin() + 1, flower_[b].end());
        for (int x = v, y; x != anchor; x = st_[pa_[y]]) {
            flower_[b].push_back(x);
            flower_[b].push_back(y = st_[match_[x]]);
            push_queue(y);
        }
        set_st(b, b);
        for (int x = 1; x <= n_x_; ++x) g_[b][x].w = g_[x][b].w = 0;
        for (int x = 1; x <= n_; ++x) flower_from_[b][x] = 0;
        for (int xs : flower_[b]) {
            for (int x = 1; x <= n_x_; ++x)
                if (g_[b][x].w == 0 || delta(g_[xs][x]) < delta(g_[b][x])) {
                    g_[b][x] = g_[xs][x];
                    g_[x][b] = g_[x][xs];
                }
            for (int x = 1; x <= n_; ++x)
                if (flower_from_[xs][x]) flower_from_[b][x] = xs;
        }
        set_slack(b);
    }

    void expand_blossom(int b) {  // s_[b] == 1
        for (int x : flower_[b]) set_st(x, x);
        int xr = flower_from_[b][g_[b][pa_[b]].u];
        int pr = petal_index(b, xr);
        for (int i = 0; i < pr; i += 2) {
            int xs = flower_[b][i];
            int xns = flower_[b][i + 1];
            pa_[xs] = g_[xns][xs].u;
            s_[xs] = 1;
            s_[xns] = 0;
            slack_[xs] = 0;
            set_slack(xns);
            push_queue(xns);
        }
        s_[xr] = 1;
        pa_[xr] = pa_[b];
        for (size_t i = pr + 1; i < flower_[b].size(); ++i) {
            int xs = flower_[b][i];
            s_[xs] = -1;
            set_slack(xs);
        }
        st_[b] = 0;
    }

    bool on_found_edge(const EdgeRec& e) {
        int u = st_[e.u], v = st_[e.v];
        if (s_[v] == -1) {
            pa_[v] = e.u;
            s_[v] = 1;
            int nu = st_[match_[v]];
            slack_[v] = slack_[nu] = 0;
            s_[nu] = 0;
            push_queue(nu);
        } else if (s_[v] == 0) {
            int a = lca(u, v);
            if (!a) {
                augment(u, v);
                augment(v, u);
                return true;
            }
            add_blossom(u, a, v);
        }
        return false;
    }

    bool phase() {
        std::fill(s_.begin(), s_.begin() + n_x_ + 1, -1);
        std::fill(slack_.begin(), slack_.begin() + n_x_ + 1, 0);
        queue_.clear();
        for (int x = 1; x <= n_x_; ++x)
            if (st_[x] == x && !match_[x]) {
                pa_[x] = 0;
                s_[x] = 0;
                push_queue(x);
            }
        if (queue_.empty()) return false;
        for (;;) {
            while (!queue_.empty()) {
                int u = queue_.front();
                queue_.pop_front();
                if (s_[st_[u]] == 1) continue;
                for (int v = 1; v <= n_; ++v)
                    if (g_[u][v].w > 0 && st_[u] != st_[v]) {
                        if (delta(g_[u][v]) == 0) {
                            if (on_found_edge(g_[u][v])) return true;
                        } else {
                            update_slack(u, st_[v]);
                        }
                    }
            }
            long long d = kInf;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1) d = std::min(d, lab_[b] / 2);
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x]) {
                    if (s_[x] == -1)
                        d = std::min(d, delta(g_[slack_[x]][x]));
                    else if (s_[x] == 0)
                        d = std::min(d, delta(g_[slack_[x]][x]) / 2);
                }
            for (int u = 1; u <= n_; ++u) {
                if (s_[st_[u]] == 0) {
                    if (lab_[u] <= d) return false;
                    lab_[u] -= d;
                } else if (s_[st_[u]] == 1) {
                    lab_[u] += d;
                }
            }
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b) {
                    if (s_[b] == 0)
                        lab_[b] += d * 2;
                    else if (s_[b] == 1)
                        lab_[b] -= d * 2;
                }
            queue_.clear();
            for (int x = 1; x <= n_x_; ++x)
                if (st_[x] == x && slack_[x] && st_[slack_[x]] != x &&
                    delta(g_[slack_[x]][x]) == 0)
                    if (on_found_edge(g_[slack_[x]][x])) return true;
            for (int b = n_ + 1; b <= n_x_; ++b)
                if (st_[b] == b && s_[b] == 1 && lab_[b] == 0) expand_blossom(b);
        }
    }

    int n_, cap_, n_x_ = 0, timestamp_ = 0;
    std::vector<std::vector<EdgeRec>> g_;
    std::vector<long long> lab_;
    std::vector<int> match_, slack_, st_, pa_, s_, vis_;
    std::vector<std::vector<int>> flower_;
    std::vector<std::vector<int>> flower_from_;
    std::deque<int> queue_;
};

}  // namespace

WeightedGraph WeightedGraph::uniform(const Graph& g, long long w) {
    return {g, std::vector<long long>(g.m(), w)};
}

WeightedGraph WeightedGraph::from_pairs(
    const Graph& g, const std::vector<std::pair<Edge, long long>>& weights) {
    WeightedGraph wg{g, std::vector<long long>(g.m(), 0)};
    for (auto [e, w] : weights) {
        int idx = g.edge_index(e.first, e.second);
        if (idx < 0)
            throw std::invalid_argument("weight given for non-edge (" +
                                        std::to_string(e.first) + "," +
                                        std::to_string(e.second) + ")");
        if (w < 0) throw std::invalid_argument("edge weights must be nonnegative");
        wg.edge_weight[idx] = w;
    }
    return wg;
}

long long WeightedGraph::weight_of(int u, int v) const {
    int idx = graph.edge_index(u, v);
    if (idx < 0) throw std::invalid_argument("weight_of: not an edge");
    return edge_weight[idx];
}

MatchingResult max_weight_matching(const WeightedGraph& wg) {
    const Graph& g = wg.graph;
    if (int(wg.edge_weight.size()) != g.m())
        throw std::invalid_argument("edge weight vector size mismatch");
    for (long long w : wg.edge_weight)
        if (w < 0) throw std::invalid_argument("edge weights must be nonnegative");
    if (g.n() == 0) return {{}, 0};
    Blossom solver(g.n());
    for (int i = 0; i < g.m(); ++i) {
        auto [u, v] = g.edges()[i];
        if (wg.edge_weight[i] > 0)
            solver.add_edge(u + 1, v + 1, wg.edge_weight[i]);
    }
    auto mate = solver.solve();
    MatchingResult out{{}, 0};
    for (int u = 1; u <= g.n(); ++u) {
        int v = mate[u];
        if (v && v < u) {
            out.matching.edges.push_back(make_edge(u - 1, v - 1));
            out.weight += wg.weight_of(u - 1, v - 1);
        }
    }
    std::sort(out.matching.edges.begin(), out.matching.edges.end());
    return out;
}

PerfectMatchingResult has_perfect_matching(const Graph& g) {
    if (g.n() % 2 != 0) return {false, std::nullopt};
    auto res = max_weight_matching(WeightedGraph::uniform(g, 1));
    if (res.weight == g.n() / 2) return {true, res.matching};
    return {false, std::nullopt};
}

namespace {

MatchingResult saturating_optimum(const Graph& g, const VertexSet& s,
                                  const std::vector<Edge>& forbidden) {
    Bitset sb = Bitset::of(g.n(), s);
    std::vector<Edge> sorted_forbidden = forbidden;
    for (auto& e : sorted_forbidden) e = make_edge(e.first, e.second);
    std::sort(sorted_forbidden.begin(), sorted_forbidden.end());
    WeightedGraph wg{g, std::vector<long long>(g.m(), 0)};
    for (int i = 0; i < g.m(); ++i) {
        auto [u, v] = g.edges()[i];
        if (std::binary_search(sorted_forbidden.begin(), sorted_forbidden.end(),
                               g.edges()[i]))
            continue;
        wg.edge_weight[i] = (sb.test(u) ? 1 : 0) + (sb.test(v) ? 1 : 0);
    }
    return max_weight_matching(wg);
}

}  // namespace

bool exists_matching_saturating(const Graph& g, const VertexSet& s,
                                const std::vector<Edge>& forbidden,
                                int threshold) {
    for (int v : s)
        if (v < 0 || v >= g.n())
            throw std::invalid_argument("saturation target out of range");
    int t = threshold < 0 ? int(s.size()) : threshold;
    // Total weight of a matching equals the number of s-vertices it saturates.
    return saturating_optimum(g, s, forbidden).weight >= t;
}

std::optional<Matching> find_matching_saturating(const Graph& g,
                                                 const VertexSet& s,
                                                 const std::vector<Edge>& forbidden,
                                                 int threshold) {
    int t = threshold < 0 ? int(s.size()) : threshold;
    auto res = saturating_optimum(g, s, forbidden);
    if (res.weight < t) return std::nullopt;
    return res.matching;
}

}  // namespace strongcliques

#include "strongcliques/generators.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace strongcliques {

namespace {

int var_of(int literal) { return literal > 0 ? literal : -literal; }

uint64_t uniform_below(std::mt19937_64& rng, uint64_t k) {
    // Rejection sampling keeps the draw unbiased and the stream portable.
    uint64_t limit = ~uint64_t{0} - (~uint64_t{0} % k);
    uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % k;
}

}  // namespace

bool SatInstance::assumption_ii() const {
    std::vector<bool> pos(num_vars + 1, false), neg(num_vars + 1, false);
    for (const auto& cl : clauses)
        for (int lit : cl) (lit > 0 ? pos : neg)[var_of(lit)] = true;
    for (int v = 1; v <= num_vars; ++v)
        if (!pos[v] || !neg[v]) return false;
    return true;
}

bool SatInstance::assumption_iii() const {
    for (int v = 1; v <= num_vars; ++v) {
        bool some_clause_avoids = false;
        for (const auto& cl : clauses) {
            bool mentions = false;
            for (int lit : cl)
                if (var_of(lit) == v) mentions = true;
            if (!mentions) {
                some_clause_avoids = true;
                break;
            }
        }
        if (!some_clause_avoids) return false;
    }
    return true;
}

SatInstance make_sat_instance(int num_vars,
                              const std::vector<std::array<int, 3>>& clauses) {
    if (num_vars < 0) throw std::invalid_argument("negative variable count");
    SatInstance phi;
    phi.num_vars = num_vars;
    for (auto cl : clauses) {
        for (int lit : cl) {
            if (lit == 0 || var_of(lit) > num_vars)
                throw std::invalid_argument("literal " + std::to_string(lit) +
                                            " out of range");
        }
        std::sort(cl.begin(), cl.end(), [](int a, int b) {
            return std::pair(var_of(a), a) < std::pair(var_of(b), b);
        });
        if (cl[0] == cl[1] || cl[1] == cl[2])
            throw std::invalid_argument("clause repeats a literal");
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (cl[i] == -cl[j])
                    throw std::invalid_argument(
                        "assumption (i) violated: clause contains x" +
                        std::to_string(var_of(cl[i])) + " and its negation");
        phi.clauses.push_back(cl);
    }
    return phi;
}

int GadgetGraph::literal_vertex(int literal) const {
    int i = var_of(literal) - 1;
    return literal > 0 ? literal_pairs[i].first : literal_pairs[i].second;
}

GadgetGraph sat_gadget(const SatInstance& phi) {
    int m = int(phi.clauses.size());
    int n = phi.num_vars;
    GadgetGraph gg;
    gg.variant = GadgetGraph::Variant::G;
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
        gg.clause_clique.push_back(i);
        for (int j = i + 1; j < m; ++j) edges.push_back({i, j});
    }
    for (int v = 0; v < n; ++v) {
        int pos = m + 2 * v, neg = m + 2 * v + 1;
        gg.literal_pairs.push_back({pos, neg});
        edges.push_back({pos, neg});
    }
    for (int i = 0; i < m; ++i)
        for (int lit : phi.clauses[i])
            edges.push_back(make_edge(i, gg.literal_vertex(lit)));
    gg.graph = Graph::build(m + 2 * n, edges);
    std::vector<std::string> labels(m + 2 * n);
    for (int i = 0; i < m; ++i) labels[i] = "c" + std::to_string(i + 1);
    for (int v = 0; v < n; ++v) {
        labels[m + 2 * v] = "x" + std::to_string(v + 1);
        labels[m + 2 * v + 1] = "~x" + std::to_string(v + 1);
    }
    gg.graph.set_labels(labels);
    return gg;
}

GadgetGraph sat_gadget_prime(const SatInstance& phi) {
    if (!phi.assumption_ii())
        throw std::invalid_argument(
            "assumption (ii) violated: some literal appears in no clause");
    if (!phi.assumption_iii())
        throw std::invalid_argument(
            "assumption (iii) violated: some variable meets every clause");
    GadgetGraph base = sat_gadget(phi);
    int m = int(phi.clauses.size());
    int n = phi.num_vars;
    std::vector<Edge> edges = base.graph.edges();
    std::vector<std::string> labels = base.graph.labels();
    labels.resize(m + 6 * n);
    for (int i = 0; i < n; ++i) {
        int x = base.literal_pairs[i].first;
        int nx = base.literal_pairs[i].second;
        int u = m + 2 * n + 4 * i;
        int v = u + 1, nu = u + 2, nv = u + 3;
        for (Edge e : {make_edge(x, u), make_edge(x, v), make_edge(u, v),
                       make_edge(u, nu), make_edge(u, nv), make_edge(v, nu),
                       make_edge(nu, nv), make_edge(nx, nu), make_edge(nx, nv)})
            edges.push_back(e);
        labels[u] = "u" + std::to_string(i + 1);
        labels[v] = "v" + std::to_string(i + 1);
        labels[nu] = "~u" + std::to_string(i + 1);
        labels[nv] = "~v" + std::to_string(i + 1);
    }
    GadgetGraph gg;
    gg.variant = GadgetGraph::Variant::GPrime;
    gg.clause_clique = base.clause_clique;
    gg.literal_pairs = base.literal_pairs;
    gg.graph = Graph::build(m + 6 * n, edges);
    gg.graph.set_labels(labels);
    return gg;
}

std::string gadget_labels(const GadgetGraph& gg) {
    std::ostringstream out;
    const auto& labels = gg.graph.labels();
    int m = int(gg.clause_clique.size());
    int first_quad = m + 2 * int(gg.literal_pairs.size());
    for (int v = 0; v < gg.graph.n(); ++v) {
        const char* role = v < m ? "clause" : (v < first_quad ? "literal" : "gadget");
        out << v << ' ' << role << ' ' << labels[v] << '\n';
    }
    return out.str();
}

SatInstance random_3sat(int num_vars, int num_clauses, uint64_t seed,
                        bool enforce_ii, bool enforce_iii) {
    if (num_vars < 3)
        throw std::invalid_argument("random_3sat: need at least 3 variables");
    if (enforce_iii && num_vars < 4)
        throw std::invalid_argument(
            "random_3sat: assumption (iii) needs at least 4 variables");
    if (enforce_ii && 2 * num_vars > 3 * num_clauses)
        throw std::invalid_argument(
            "random_3sat: too few clauses to mention every literal");
    std::mt19937_64 rng(seed);
    const int budget = 2000;
    for (int attempt = 0; attempt < budget; ++attempt) {
        std::vector<std::array<int, 3>> clauses;
        for (int c = 0; c < num_clauses; ++c) {
            int a = int(uniform_below(rng, num_vars)) + 1;
            int b, d;
            do {
                b = int(uniform_below(rng, num_vars)) + 1;
            } while (b == a);
            do {
                d = int(uniform_below(rng, num_vars)) + 1;
            } while (d == a || d == b);
            uint64_t signs = rng();
            auto lit = [&](int var, int bit) {
                return (signs >> bit) & 1 ? var : -var;
            };
            clauses.push_back({lit(a, 0), lit(b, 1), lit(d, 2)});
        }
        SatInstance phi = make_sat_instance(num_vars, clauses);
        if (enforce_ii && !phi.assumption_ii()) continue;
        if (enforce_iii && !phi.assumption_iii()) continue;
        return phi;
    }
    throw std::runtime_error(
        "random_3sat: could not meet the requested assumptions within " +
        std::to_string(budget) + " attempts");
}

SatResult sat_bruteforce(const SatInstance& phi) {
    if (phi.num_vars > 24)
        throw std::invalid_argument("sat_bruteforce: too many variables");
    uint32_t limit = uint32_t{1} << phi.num_vars;
    for (uint32_t mask = 0; mask < limit; ++mask) {
        bool ok = true;
        for (const auto& cl : phi.clauses) {
            bool sat = false;
            for (int lit : cl) {
                bool value = (mask >> (var_of(lit) - 1)) & 1;
                if (lit < 0) value = !value;
                if (value) {
                    sat = true;
                    break;
                }
            }
            if (!sat) {
                ok = false;
                break;
            }
        }
        if (ok) {
            std::vector<bool> assignment(phi.num_vars);
            for (int v = 0; v < phi.num_vars; ++v)
                assignment[v] = (mask >> v) & 1;
            return {true, assignment};
        }
    }
    return {false, std::nullopt};
}

SatInstance parse_dimacs_cnf(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<std::array<int, 3>> clauses;
    std::vector<int> current;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        if (first == "c") continue;
        if (first == "%") break;
        if (first == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0)
                throw std::invalid_argument("dimacs: malformed header at line " +
                                            std::to_string(lineno));
            continue;
        }
        if (n < 0)
            throw std::invalid_argument("dimacs: clause before header at line " +
                                        std::to_string(lineno));
        ls.clear();
        ls.seekg(0);
        long lit;
        while (ls >> lit) {
            if (lit == 0) {
                if (current.size() != 3)
                    throw std::invalid_argument(
                        "dimacs: clause of width " +
                        std::to_string(current.size()) + " at line " +
                        std::to_string(lineno) + " (need width 3)");
                clauses.push_back({current[0], current[1], current[2]});
                current.clear();
            } else {
                current.push_back(int(lit));
            }
        }
        if (ls.fail() && !ls.eof())
            throw std::invalid_argument("dimacs: bad token at line " +
                                        std::to_string(lineno));
    }
    if (n < 0) throw std::invalid_argument("dimacs: missing header");
    if (!current.empty())
        throw std::invalid_argument("dimacs: clause missing terminating 0");
    if (long(clauses.size()) != m)
        throw std::invalid_argument("dimacs: header declares " +
                                    std::to_string(m) + " clauses, found " +
                                    std::to_string(clauses.size()));
    return make_sat_instance(int(n), clauses);
}

std::string to_dimacs(const SatInstance& phi) {
    std::ostringstream out;
    out << "p cnf " << phi.num_vars << ' ' << phi.clauses.size() << '\n';
    for (const auto& cl : phi.clauses)
        out << cl[0] << ' ' << cl[1] << ' ' << cl[2] << " 0\n";
    return out.str();
}

}  // namespace strongcliques

// Brute-force reference implementations used only by the tests. Everything
// here recomputes from first principles (adjacency matrices, Floyd-Warshall,
// exhaustive enumeration) and deliberately shares no code path with the
// library algorithms it checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "versenet/corpus.hpp"
#include "versenet/graph.hpp"

namespace oracles {

using versenet::CoocGraph;

constexpr double kInf = std::numeric_limits<double>::infinity();

// ---- adjacency-matrix views -------------------------------------------------

inline std::vector<std::vector<double>> weight_matrix(const CoocGraph& g) {
    std::size_t n = static_cast<std::size_t>(g.node_count());
    std::vector<std::vector<double>> a(n, std::vector<double>(n, 0.0));
    for (const versenet::Edge& e : g.edges()) {
        a[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(e.b)] = static_cast<double>(e.weight);
        a[static_cast<std::size_t>(e.b)][static_cast<std::size_t>(e.a)] = static_cast<double>(e.weight);
    }
    return a;
}

inline std::vector<double> degree_by_row_count(const CoocGraph& g) {
    auto a = weight_matrix(g);
    std::vector<double> out(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j)
            if (a[i][j] > 0.0) out[i] += 1.0;
    return out;
}

inline std::vector<double> weighted_degree_by_row_sum(const CoocGraph& g) {
    auto a = weight_matrix(g);
    std::vector<double> out(a.size(), 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a.size(); ++j) out[i] += a[i][j];
    return out;
}

// ---- Floyd-Warshall distances ----------------------------------------------

// use_weights: edge length 1/weight, else hop length 1.
inline std::vector<std::vector<double>> fw_distances(const CoocGraph& g, bool use_weights = false) {
    std::size_t n = static_cast<std::size_t>(g.node_count());
    std::vector<std::vector<double>> d(n, std::vector<double>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    for (const versenet::Edge& e : g.edges()) {
        double len = use_weights ? 1.0 / static_cast<double>(e.weight) : 1.0;
        d[static_cast<std::size_t>(e.a)][static_cast<std::size_t>(e.b)] = len;
        d[static_cast<std::size_t>(e.b)][static_cast<std::size_t>(e.a)] = len;
    }
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

inline double tic_from_matrix(const std::vector<std::vector<double>>& d) {
    double total = 0.0;
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (std::isfinite(d[i][j]) && d[i][j] > 0.0) total += 1.0 / d[i][j];
    return total;
}

// ---- shortest-path counting betweenness -------------------------------------

// sigma[s][t] from the distance matrix by dynamic programming over nodes in
// increasing distance from s; pair contributions sigma_sv*sigma_vt/sigma_st.
inline std::vector<double> betweenness_by_path_counting(const CoocGraph& g, bool use_weights = false,
                                                        double eps = 1e-12) {
    std::size_t n = static_cast<std::size_t>(g.node_count());
    auto dist = fw_distances(g, use_weights);
    auto a = weight_matrix(g);
    std::vector<std::vector<double>> sigma(n, std::vector<double>(n, 0.0));
    for (std::size_t s = 0; s < n; ++s) {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](std::size_t x, std::size_t y) { return dist[s][x] < dist[s][y]; });
        sigma[s][s] = 1.0;
        for (std::size_t t : order) {
            if (t == s || !std::isfinite(dist[s][t])) continue;
            for (std::size_t u = 0; u < n; ++u) {
                if (a[u][t] <= 0.0) continue;
                double len = use_weights ? 1.0 / a[u][t] : 1.0;
                if (std::abs(dist[s][u] + len - dist[s][t]) <= eps) sigma[s][t] += sigma[s][u];
            }
        }
    }
    std::vector<double> bc(n, 0.0);
    for (std::size_t s = 0; s < n; ++s) {
        for (std::size_t t = s + 1; t < n; ++t) {
            if (!std::isfinite(dist[s][t]) || sigma[s][t] == 0.0) continue;
            for (std::size_t v = 0; v < n; ++v) {
                if (v == s || v == t) continue;
                if (std::abs(dist[s][v] + dist[v][t] - dist[s][t]) <= eps)
                    bc[v] += sigma[s][v] * sigma[v][t] / sigma[s][t];
            }
        }
    }
    return bc;
}

inline std::vector<double> harmonic_closeness_from_matrix(const std::vector<std::vector<double>>& d) {
    std::vector<double> out(d.size(), 0.0);
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = 0; j < d.size(); ++j)
            if (i != j && std::isfinite(d[i][j]) && d[i][j] > 0.0) out[i] += 1.0 / d[i][j];
    return out;
}

inline std::vector<double> classic_closeness_from_matrix(const std::vector<std::vector<double>>& d) {
    std::vector<double> out(d.size(), 0.0);
    for (std::size_t i = 0; i < d.size(); ++i) {
        double sum = 0.0;
        int reachable = 0;
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (i != j && std::isfinite(d[i][j])) {
                sum += d[i][j];
                ++reachable;
            }
        }
        out[i] = reachable == 0 ? 0.0 : static_cast<double>(reachable) / sum;
    }
    return out;
}

// ---- graph surgery -----------------------------------------------------------

// The graph minus one node, rebuilt from scratch. Remaining isolated names
// keep a row in the caller's accounting but drop out of the CoocGraph; the
// returned node list tells which survived.
inline CoocGraph remove_node_rebuild(const CoocGraph& g, int victim) {
    std::vector<std::tuple<std::string, std::string, std::int64_t>> edges;
    for (const versenet::Edge& e : g.edges()) {
        if (e.a == victim || e.b == victim) continue;
        edges.emplace_back(g.name(e.a), g.name(e.b), e.weight);
    }
    return CoocGraph::from_edges(std::move(edges));
}

// TIC of g with `removed` masked out, recomputed from a fresh subgraph.
inline double tic_after_removals(const CoocGraph& g, const std::set<std::string>& removed) {
    std::vector<std::tuple<std::string, std::string, std::int64_t>> edges;
    for (const versenet::Edge& e : g.edges()) {
        if (removed.count(g.name(e.a)) || removed.count(g.name(e.b))) continue;
        edges.emplace_back(g.name(e.a), g.name(e.b), e.weight);
    }
    if (edges.empty()) return 0.0;
    CoocGraph h = CoocGraph::from_edges(std::move(edges));
    return tic_from_matrix(fw_distances(h));
}

// ---- modularity ---------------------------------------------------------------

// Direct double-loop evaluation of
//   Q = (1/2m) sum_ij [A_ij - k_i k_j / 2m] delta(c_i, c_j), i = j included.
inline double modularity_double_loop(const CoocGraph& g, const std::vector<int>& assignment) {
    auto a = weight_matrix(g);
    std::size_t n = a.size();
    std::vector<double> k(n, 0.0);
    double two_m = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            k[i] += a[i][j];
            two_m += a[i][j];
        }
    double q = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (assignment[i] == assignment[j]) q += a[i][j] - k[i] * k[j] / two_m;
    return q / two_m;
}

// Exhaustive maximum over all set partitions (restricted growth strings).
// Bell(10) = 115975, fine at test scale.
inline double max_modularity_exhaustive(const CoocGraph& g, std::vector<int>* best_out = nullptr) {
    int n = g.node_count();
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    std::vector<int> best;
    double best_q = -2.0;
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == n) {
            double q = modularity_double_loop(g, rgs);
            if (q > best_q) {
                best_q = q;
                best = rgs;
            }
            return;
        }
        for (int c = 0; c <= used; ++c) {
            rgs[static_cast<std::size_t>(i)] = c;
            rec(i + 1, std::max(used, c + 1));
        }
    };
    rec(0, 0);
    if (best_out) *best_out = best;
    return best_q;
}

// ---- co-occurrence recount ----------------------------------------------------

// Flat-list recount of (verse, pair) incidences, aggregated at the end.
inline std::map<std::pair<std::string, std::string>, std::int64_t>
pair_recount(std::span<const versenet::Verse> verses, const versenet::Lexicon& lexicon) {
    std::vector<std::pair<std::string, std::string>> incidences;
    for (const versenet::Verse& v : verses) {
        std::set<std::string> names = versenet::match_names(v, lexicon);
        for (auto it = names.begin(); it != names.end(); ++it) {
            auto jt = std::next(it);
            for (; jt != names.end(); ++jt) incidences.emplace_back(*it, *jt);
        }
    }
    std::map<std::pair<std::string, std::string>, std::int64_t> counts;
    for (auto& p : incidences) counts[p] += 1;
    return counts;
}

// ---- deterministic random graphs ----------------------------------------------

// Erdos-Renyi-style weighted graph; isolated vertices drop out (CoocGraph
// semantics), so node_count() may come back smaller than n.
inline CoocGraph random_graph(std::uint64_t seed, int n, double p, int max_weight = 5) {
    std::mt19937_64 rng(seed);
    auto unit = [&]() { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    std::vector<std::tuple<std::string, std::string, std::int64_t>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (unit() < p) {
                std::int64_t w = 1 + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_weight));
                edges.emplace_back("n" + std::to_string(i), "n" + std::to_string(j), w);
            }
        }
    }
    if (edges.empty()) edges.emplace_back("n0", "n1", 1);
    return CoocGraph::from_edges(std::move(edges));
}

inline bool is_connected(const CoocGraph& g) {
    if (g.empty()) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.node_count()), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [u, w] : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == g.node_count();
}

}  // namespace oracles

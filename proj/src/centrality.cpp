#include "versenet/centrality.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>

#include "versenet/errors.hpp"
#include "versenet/paths.hpp"

namespace versenet {

namespace {

void require_nonempty(const CoocGraph& g, const char* op) {
    if (g.empty()) throw_data(std::string(op) + ": empty graph");
}

CentralityTable make_table(const CoocGraph& g, Measure m, std::vector<double> scores) {
    CentralityTable t;
    t.measure = m;
    t.names = g.nodes();
    t.scores = std::move(scores);
    t.ranks = competition_ranks(t.names, t.scores);
    return t;
}

}  // namespace

std::vector<int> ranked_order(std::span<const std::string> names, std::span<const double> scores) {
    std::vector<int> order(names.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        double sa = scores[static_cast<std::size_t>(a)];
        double sb = scores[static_cast<std::size_t>(b)];
        if (sa != sb) return sa > sb;
        return names[static_cast<std::size_t>(a)] < names[static_cast<std::size_t>(b)];
    });
    return order;
}

std::vector<int> competition_ranks(std::span<const std::string> names,
                                   std::span<const double> scores) {
    std::vector<int> order = ranked_order(names, scores);
    std::vector<int> ranks(names.size(), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        std::size_t v = static_cast<std::size_t>(order[pos]);
        if (pos > 0 && scores[v] == scores[static_cast<std::size_t>(order[pos - 1])]) {
            ranks[v] = ranks[static_cast<std::size_t>(order[pos - 1])];
        } else {
            ranks[v] = static_cast<int>(pos) + 1;
        }
    }
    return ranks;
}

CentralityTable degree_centrality(const CoocGraph& g) {
    require_nonempty(g, "degree");
    std::vector<double> scores(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v)
        scores[static_cast<std::size_t>(v)] = static_cast<double>(g.degree(v));
    return make_table(g, Measure::degree, std::move(scores));
}

CentralityTable weighted_degree_centrality(const CoocGraph& g) {
    require_nonempty(g, "weighted_degree");
    std::vector<double> scores(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v)
        scores[static_cast<std::size_t>(v)] = static_cast<double>(g.weighted_degree(v));
    return make_table(g, Measure::weighted_degree, std::move(scores));
}

namespace {

// Tolerance for "same length" when comparing weighted path sums.
constexpr double kPathEps = 1e-12;

// One Brandes pass rooted at s, unweighted.
void accumulate_from_source_bfs(const CoocGraph& g, int s, std::vector<double>& bc) {
    const int n = g.node_count();
    std::vector<int> dist(static_cast<std::size_t>(n), kUnreachable);
    std::vector<double> sigma(static_cast<std::size_t>(n), 0.0);
    std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));

    std::queue<int> queue;
    dist[static_cast<std::size_t>(s)] = 0;
    sigma[static_cast<std::size_t>(s)] = 1.0;
    queue.push(s);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        order.push_back(v);
        for (auto [u, w] : g.neighbors(v)) {
            auto ui = static_cast<std::size_t>(u);
            if (dist[ui] == kUnreachable) {
                dist[ui] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push(u);
            }
            if (dist[ui] == dist[static_cast<std::size_t>(v)] + 1) {
                sigma[ui] += sigma[static_cast<std::size_t>(v)];
                preds[ui].push_back(v);
            }
        }
    }

    std::vector<double> delta(static_cast<std::size_t>(n), 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto wi = static_cast<std::size_t>(*it);
        for (int v : preds[wi]) {
            auto vi = static_cast<std::size_t>(v);
            delta[vi] += sigma[vi] / sigma[wi] * (1.0 + delta[wi]);
        }
        if (*it != s) bc[wi] += delta[wi];
    }
}

// One Brandes pass rooted at s, Dijkstra with edge length 1/weight.
void accumulate_from_source_dijkstra(const CoocGraph& g, int s, std::vector<double>& bc) {
    const int n = g.node_count();
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(n), inf);
    std::vector<double> sigma(static_cast<std::size_t>(n), 0.0);
    std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));
    std::vector<char> settled(static_cast<std::size_t>(n), 0);
    std::vector<int> order;

    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    dist[static_cast<std::size_t>(s)] = 0.0;
    sigma[static_cast<std::size_t>(s)] = 1.0;
    queue.push({0.0, s});
    while (!queue.empty()) {
        auto [d, v] = queue.top();
        queue.pop();
        auto vi = static_cast<std::size_t>(v);
        if (settled[vi]) continue;
        settled[vi] = 1;
        order.push_back(v);
        for (auto [u, w] : g.neighbors(v)) {
            auto ui = static_cast<std::size_t>(u);
            double nd = dist[vi] + 1.0 / static_cast<double>(w);
            if (nd < dist[ui] - kPathEps) {
                dist[ui] = nd;
                sigma[ui] = sigma[vi];
                preds[ui].assign(1, v);
                queue.push({nd, u});
            } else if (std::abs(nd - dist[ui]) <= kPathEps) {
                sigma[ui] += sigma[vi];
                preds[ui].push_back(v);
            }
        }
    }

    std::vector<double> delta(static_cast<std::size_t>(n), 0.0);
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto wi = static_cast<std::size_t>(*it);
        for (int v : preds[wi]) {
            auto vi = static_cast<std::size_t>(v);
            delta[vi] += sigma[vi] / sigma[wi] * (1.0 + delta[wi]);
        }
        if (*it != s) bc[wi] += delta[wi];
    }
}

}  // namespace

CentralityTable betweenness_centrality(const CoocGraph& g, bool use_weights) {
    require_nonempty(g, "betweenness");
    const int n = g.node_count();
    std::vector<double> bc(static_cast<std::size_t>(n), 0.0);
    for (int s = 0; s < n; ++s) {
        if (use_weights)
            accumulate_from_source_dijkstra(g, s, bc);
        else
            accumulate_from_source_bfs(g, s, bc);
    }
    // each unordered pair was seen from both endpoints
    for (double& x : bc) x /= 2.0;
    return make_table(g, Measure::betweenness, std::move(bc));
}

CentralityTable closeness_centrality(const CoocGraph& g, ClosenessVariant variant,
                                     bool use_weights) {
    require_nonempty(g, "closeness");
    const int n = g.node_count();
    std::vector<double> scores(static_cast<std::size_t>(n), 0.0);
    for (int v = 0; v < n; ++v) {
        double sum = 0.0;
        double inv_sum = 0.0;
        int reachable = 0;
        if (use_weights) {
            std::vector<double> dist = dijkstra_distances(g, v);
            for (int u = 0; u < n; ++u) {
                double d = dist[static_cast<std::size_t>(u)];
                if (u == v || !std::isfinite(d)) continue;
                sum += d;
                inv_sum += 1.0 / d;
                ++reachable;
            }
        } else {
            std::vector<int> dist = bfs_distances(g, v);
            for (int u = 0; u < n; ++u) {
                int d = dist[static_cast<std::size_t>(u)];
                if (u == v || d == kUnreachable) continue;
                sum += d;
                inv_sum += 1.0 / static_cast<double>(d);
                ++reachable;
            }
        }
        if (variant == ClosenessVariant::harmonic) {
            scores[static_cast<std::size_t>(v)] = inv_sum;
        } else {
            // classic within component; singleton components score 0
            scores[static_cast<std::size_t>(v)] =
                reachable == 0 ? 0.0 : static_cast<double>(reachable) / sum;
        }
    }
    return make_table(g, Measure::closeness, std::move(scores));
}

std::vector<RankedEntry> top_k(const CentralityTable& table, int k) {
    if (k < 1) throw_validation("top_k: k must be >= 1");
    std::vector<int> order = ranked_order(table.names, table.scores);
    std::size_t take = std::min<std::size_t>(static_cast<std::size_t>(k), order.size());
    std::vector<RankedEntry> result;
    result.reserve(take);
    for (std::size_t i = 0; i < take; ++i) {
        auto v = static_cast<std::size_t>(order[i]);
        result.push_back({table.names[v], table.scores[v], table.ranks[v]});
    }
    return result;
}

std::string measure_name(Measure m) {
    switch (m) {
        case Measure::degree: return "degree";
        case Measure::weighted_degree: return "weighted_degree";
        case Measure::betweenness: return "betweenness";
        case Measure::closeness: return "closeness";
    }
    return "unknown";
}

}  // namespace versenet

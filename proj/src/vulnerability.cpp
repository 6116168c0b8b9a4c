#include "versenet/vulnerability.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <queue>
#include <random>
#include <tuple>

#include "versenet/centrality.hpp"
#include "versenet/errors.hpp"
#include "versenet/format.hpp"
#include "versenet/paths.hpp"

namespace versenet {

double total_inverse_connectivity(const CoocGraph& g) {
    if (g.node_count() < 2) throw_data("total_inverse_connectivity: need at least 2 nodes");
    return sum_inverse_distances(g);
}

namespace {

std::vector<std::vector<int>> all_pairs_hop_distances(const CoocGraph& g,
                                                      std::span<const char> alive = {}) {
    std::vector<std::vector<int>> dist;
    dist.reserve(static_cast<std::size_t>(g.node_count()));
    for (int v = 0; v < g.node_count(); ++v) dist.push_back(bfs_distances(g, v, alive));
    return dist;
}

}  // namespace

NodeLossTable node_deletion_loss(const CoocGraph& g, LossMetric metric) {
    const int n = g.node_count();
    if (n < 3) throw_data("node_deletion_loss: need at least 3 nodes");

    NodeLossTable table;
    table.metric = metric;
    table.names = g.nodes();
    table.loss.assign(static_cast<std::size_t>(n), 0.0);
    table.loss_adjusted.assign(static_cast<std::size_t>(n), 0.0);
    table.disconnected_pairs.assign(static_cast<std::size_t>(n), 0);

    const std::vector<std::vector<int>> base = all_pairs_hop_distances(g);

    std::vector<char> alive(static_cast<std::size_t>(n), 1);
    for (int v = 0; v < n; ++v) {
        auto vi = static_cast<std::size_t>(v);
        alive[vi] = 0;

        double raw = 0.0;
        std::int64_t surviving = 0;
        std::int64_t severed = 0;
        double incident_inverse = 0.0;

        for (int u = 0; u < n; ++u) {
            if (u == v) continue;
            std::vector<int> after = bfs_distances(g, u, alive);
            for (int w = u + 1; w < n; ++w) {
                if (w == v) continue;
                int d0 = base[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)];
                int d1 = after[static_cast<std::size_t>(w)];
                if (d0 == kUnreachable) continue;  // deletion cannot connect a pair
                if (d1 == kUnreachable) {
                    ++severed;
                    if (metric == LossMetric::closeness_sum_inverse_distances)
                        raw += 1.0 / static_cast<double>(d0);
                } else {
                    ++surviving;
                    if (metric == LossMetric::connectivity_sum_distances)
                        raw += static_cast<double>(d1 - d0);
                    else
                        raw += 1.0 / static_cast<double>(d0) - 1.0 / static_cast<double>(d1);
                }
            }
            int dv = base[vi][static_cast<std::size_t>(u)];
            if (dv != kUnreachable) incident_inverse += 1.0 / static_cast<double>(dv);
        }

        table.disconnected_pairs[vi] = severed;
        if (metric == LossMetric::connectivity_sum_distances) {
            table.loss[vi] = raw;
            table.loss_adjusted[vi] = surviving > 0 ? raw / static_cast<double>(surviving) : 0.0;
        } else {
            // TIC(g) - TIC(g minus v): the remaining-pair change plus every
            // pair v itself took part in.
            double total = raw + incident_inverse;
            table.loss[vi] = total;
            double pair_count = static_cast<double>(n) * (n - 1) / 2.0;
            table.loss_adjusted[vi] = total / pair_count;
        }

        alive[vi] = 1;
    }

    // rank key: severed pairs dominate for the sum-of-distances metric
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    auto key = [&](int v) {
        auto vi = static_cast<std::size_t>(v);
        double primary = metric == LossMetric::connectivity_sum_distances
                             ? static_cast<double>(table.disconnected_pairs[vi])
                             : table.loss[vi];
        double secondary = metric == LossMetric::connectivity_sum_distances ? table.loss[vi] : 0.0;
        return std::make_tuple(-primary, -secondary, std::string_view(table.names[vi]));
    };
    std::sort(order.begin(), order.end(), [&](int a, int b) { return key(a) < key(b); });
    table.ranks.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        auto v = static_cast<std::size_t>(order[pos]);
        auto prev = pos > 0 ? static_cast<std::size_t>(order[pos - 1]) : v;
        bool tied = pos > 0 && std::get<0>(key(static_cast<int>(v))) == std::get<0>(key(static_cast<int>(prev))) &&
                    std::get<1>(key(static_cast<int>(v))) == std::get<1>(key(static_cast<int>(prev)));
        table.ranks[v] = tied ? table.ranks[prev] : static_cast<int>(pos) + 1;
    }
    return table;
}

namespace {

// Deterministic Fisher-Yates; std::shuffle is implementation-defined.
void seeded_shuffle(std::vector<int>& values, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (std::size_t i = values.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(values[i - 1], values[j]);
    }
}

// Betweenness over the alive subgraph; Brandes with a mask so isolated
// survivors keep existing (score 0) instead of dropping out of the universe.
std::vector<double> masked_betweenness(const CoocGraph& g, std::span<const char> alive) {
    const int n = g.node_count();
    std::vector<double> bc(static_cast<std::size_t>(n), 0.0);
    std::vector<int> dist(static_cast<std::size_t>(n));
    std::vector<double> sigma(static_cast<std::size_t>(n));
    std::vector<double> delta(static_cast<std::size_t>(n));
    std::vector<std::vector<int>> preds(static_cast<std::size_t>(n));

    for (int s = 0; s < n; ++s) {
        if (!alive[static_cast<std::size_t>(s)]) continue;
        std::fill(dist.begin(), dist.end(), kUnreachable);
        std::fill(sigma.begin(), sigma.end(), 0.0);
        for (auto& p : preds) p.clear();
        std::vector<int> order;
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
                if (!alive[ui]) continue;
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
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            auto wi = static_cast<std::size_t>(*it);
            for (int v : preds[wi]) {
                auto vi2 = static_cast<std::size_t>(v);
                delta[vi2] += sigma[vi2] / sigma[wi] * (1.0 + delta[wi]);
            }
            if (*it != s) bc[wi] += delta[wi];
        }
    }
    for (double& x : bc) x /= 2.0;
    return bc;
}

}  // namespace

RemovalCurve removal_curve(const CoocGraph& g, RemovalStrategy strategy,
                           std::optional<std::uint64_t> seed) {
    const int n = g.node_count();
    if (n < 3) throw_data("removal_curve: need at least 3 nodes");
    if (strategy == RemovalStrategy::random_order && !seed)
        throw_validation("removal_curve: random strategy requires a seed");

    RemovalCurve curve;
    curve.strategy = strategy;
    if (strategy == RemovalStrategy::random_order) curve.seed = seed;

    const double tic0 = total_inverse_connectivity(g);
    std::vector<char> alive(static_cast<std::size_t>(n), 1);

    // precomputed removal order for everything but the cascading scenario
    std::vector<int> order;
    switch (strategy) {
        case RemovalStrategy::betweenness_static: {
            CentralityTable t = betweenness_centrality(g);
            order = ranked_order(t.names, t.scores);
            break;
        }
        case RemovalStrategy::degree_static: {
            CentralityTable t = degree_centrality(g);
            order = ranked_order(t.names, t.scores);
            break;
        }
        case RemovalStrategy::random_order: {
            order.resize(static_cast<std::size_t>(n));
            std::iota(order.begin(), order.end(), 0);
            seeded_shuffle(order, *seed);
            break;
        }
        case RemovalStrategy::betweenness_cascading:
            break;
    }

    curve.points.push_back({0.0, 0.0});
    for (int k = 1; k <= n; ++k) {
        int victim;
        if (strategy == RemovalStrategy::betweenness_cascading) {
            std::vector<double> bc = masked_betweenness(g, alive);
            victim = -1;
            for (int v = 0; v < n; ++v) {
                if (!alive[static_cast<std::size_t>(v)]) continue;
                if (victim == -1 || bc[static_cast<std::size_t>(v)] > bc[static_cast<std::size_t>(victim)] ||
                    (bc[static_cast<std::size_t>(v)] == bc[static_cast<std::size_t>(victim)] &&
                     g.name(v) < g.name(victim)))
                    victim = v;
            }
        } else {
            victim = order[static_cast<std::size_t>(k - 1)];
        }
        alive[static_cast<std::size_t>(victim)] = 0;
        curve.removal_order.push_back(g.name(victim));

        double loss;
        if (k == n) {
            loss = 1.0;  // no pairs remain
        } else {
            loss = 1.0 - sum_inverse_distances(g, alive) / tic0;
        }
        curve.points.push_back({static_cast<double>(k) / static_cast<double>(n), loss});
    }
    return curve;
}

void write_curves_csv(std::ostream& out, std::span<const RemovalCurve> curves) {
    out << "strategy,fraction_removed,loss,seed\n";
    for (const RemovalCurve& c : curves) {
        std::string seed_field = c.seed ? std::to_string(*c.seed) : std::string();
        for (const CurvePoint& p : c.points) {
            out << strategy_name(c.strategy) << ',' << fmt_double(p.fraction_removed) << ','
                << fmt_double(p.loss) << ',' << seed_field << '\n';
        }
    }
}

std::string strategy_name(RemovalStrategy s) {
    switch (s) {
        case RemovalStrategy::betweenness_static: return "betweenness_static";
        case RemovalStrategy::degree_static: return "degree_static";
        case RemovalStrategy::betweenness_cascading: return "betweenness_cascading";
        case RemovalStrategy::random_order: return "random";
    }
    return "unknown";
}

std::optional<RemovalStrategy> parse_strategy(std::string_view name) {
    if (name == "betweenness_static") return RemovalStrategy::betweenness_static;
    if (name == "degree_static") return RemovalStrategy::degree_static;
    if (name == "betweenness_cascading") return RemovalStrategy::betweenness_cascading;
    if (name == "random") return RemovalStrategy::random_order;
    return std::nullopt;
}

std::string loss_metric_name(LossMetric m) {
    return m == LossMetric::connectivity_sum_distances ? "loss_connectivity" : "loss_closeness";
}

}  // namespace versenet

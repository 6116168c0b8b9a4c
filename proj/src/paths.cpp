#include "versenet/paths.hpp"

#include <queue>

namespace versenet {

namespace {

inline bool is_alive(std::span<const char> alive, int v) {
    return alive.empty() || alive[static_cast<std::size_t>(v)] != 0;
}

}  // namespace

std::vector<int> bfs_distances(const CoocGraph& g, int source, std::span<const char> alive) {
    std::vector<int> dist(static_cast<std::size_t>(g.node_count()), kUnreachable);
    if (!is_alive(alive, source)) return dist;
    std::vector<int> frontier{source};
    dist[static_cast<std::size_t>(source)] = 0;
    int d = 0;
    std::vector<int> next;
    while (!frontier.empty()) {
        ++d;
        next.clear();
        for (int v : frontier) {
            for (auto [u, w] : g.neighbors(v)) {
                if (!is_alive(alive, u)) continue;
                if (dist[static_cast<std::size_t>(u)] == kUnreachable) {
                    dist[static_cast<std::size_t>(u)] = d;
                    next.push_back(u);
                }
            }
        }
        frontier.swap(next);
    }
    return dist;
}

std::vector<double> dijkstra_distances(const CoocGraph& g, int source, std::span<const char> alive) {
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> dist(static_cast<std::size_t>(g.node_count()), inf);
    if (!is_alive(alive, source)) return dist;
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> queue;
    dist[static_cast<std::size_t>(source)] = 0.0;
    queue.push({0.0, source});
    while (!queue.empty()) {
        auto [d, v] = queue.top();
        queue.pop();
        if (d > dist[static_cast<std::size_t>(v)]) continue;
        for (auto [u, w] : g.neighbors(v)) {
            if (!is_alive(alive, u)) continue;
            double nd = d + 1.0 / static_cast<double>(w);
            if (nd < dist[static_cast<std::size_t>(u)]) {
                dist[static_cast<std::size_t>(u)] = nd;
                queue.push({nd, u});
            }
        }
    }
    return dist;
}

double sum_inverse_distances(const CoocGraph& g, std::span<const char> alive) {
    double total = 0.0;
    const int n = g.node_count();
    for (int v = 0; v < n; ++v) {
        if (!is_alive(alive, v)) continue;
        std::vector<int> dist = bfs_distances(g, v, alive);
        for (int u = v + 1; u < n; ++u) {
            int d = dist[static_cast<std::size_t>(u)];
            if (d > 0) total += 1.0 / static_cast<double>(d);
        }
    }
    return total;
}

}  // namespace versenet

#include "versenet/graph.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "versenet/errors.hpp"

namespace versenet {

int CoocGraph::index_of(std::string_view name) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), name);
    if (it == nodes_.end() || *it != name) return -1;
    return static_cast<int>(it - nodes_.begin());
}

std::int64_t CoocGraph::weighted_degree(int v) const {
    std::int64_t sum = 0;
    for (auto [u, w] : neighbors(v)) sum += w;
    return sum;
}

void CoocGraph::index_edges() {
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& x, const Edge& y) { return std::tie(x.a, x.b) < std::tie(y.a, y.b); });

    const std::size_t n = nodes_.size();
    std::vector<std::size_t> counts(n, 0);
    total_weight_ = 0;
    for (const Edge& e : edges_) {
        counts[static_cast<std::size_t>(e.a)]++;
        counts[static_cast<std::size_t>(e.b)]++;
        total_weight_ += e.weight;
    }
    offsets_.assign(n + 1, 0);
    for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] = offsets_[i] + counts[i];
    adjacency_.resize(offsets_[n]);

    std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
    for (const Edge& e : edges_) {
        adjacency_[cursor[static_cast<std::size_t>(e.a)]++] = {e.b, e.weight};
        adjacency_[cursor[static_cast<std::size_t>(e.b)]++] = {e.a, e.weight};
    }
    for (std::size_t v = 0; v < n; ++v) {
        std::sort(adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]),
                  adjacency_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]));
    }
}

namespace {

CoocGraph from_pair_counts(const std::map<std::pair<std::string, std::string>, std::int64_t>& weights) {
    std::vector<std::tuple<std::string, std::string, std::int64_t>> edges;
    edges.reserve(weights.size());
    for (const auto& [pair, w] : weights) edges.emplace_back(pair.first, pair.second, w);
    return CoocGraph::from_edges(std::move(edges));
}

}  // namespace

CoocGraph CoocGraph::from_edges(std::vector<std::tuple<std::string, std::string, std::int64_t>> edges) {
    std::map<std::pair<std::string, std::string>, std::int64_t> seen;
    for (auto& [a, b, w] : edges) {
        if (a == b) throw_data("graph: self-loop on \"" + a + "\"");
        if (w < 1) throw_data("graph: edge " + a + " -- " + b + " has non-positive weight");
        auto key = a < b ? std::make_pair(a, b) : std::make_pair(b, a);
        if (!seen.emplace(std::move(key), w).second)
            throw_data("graph: duplicate edge " + a + " -- " + b);
    }

    CoocGraph g;
    for (const auto& [pair, w] : seen) {
        g.nodes_.push_back(pair.first);
        g.nodes_.push_back(pair.second);
    }
    std::sort(g.nodes_.begin(), g.nodes_.end());
    g.nodes_.erase(std::unique(g.nodes_.begin(), g.nodes_.end()), g.nodes_.end());

    g.edges_.reserve(seen.size());
    for (const auto& [pair, w] : seen) {
        int a = g.index_of(pair.first);
        int b = g.index_of(pair.second);
        g.edges_.push_back({std::min(a, b), std::max(a, b), w});
    }
    g.index_edges();
    return g;
}

CoocGraph build_graph(std::span<const Verse> verses, const Lexicon& lexicon) {
    std::map<std::pair<std::string, std::string>, std::int64_t> weights;
    for (const Verse& v : verses) {
        // match_names returns a sorted set, so pairs come out ordered
        std::set<std::string> names = match_names(v, lexicon);
        for (auto it = names.begin(); it != names.end(); ++it) {
            auto jt = it;
            for (++jt; jt != names.end(); ++jt) {
                weights[{*it, *jt}] += 1;
            }
        }
    }
    return from_pair_counts(weights);
}

CoocGraph subgraph_by_book(std::span<const Verse> verses, const Lexicon& lexicon,
                           std::string_view book) {
    std::vector<Verse> selected;
    for (const Verse& v : verses) {
        if (v.book == book) selected.push_back(v);
    }
    if (selected.empty())
        throw_data("graph: book \"" + std::string(book) + "\" not present in corpus");
    return build_graph(selected, lexicon);
}

double density(const CoocGraph& g) {
    const int n = g.node_count();
    if (n < 2) throw_data("graph: density undefined for fewer than 2 nodes");
    double possible = static_cast<double>(n) * (n - 1) / 2.0;
    return static_cast<double>(g.edges().size()) / possible;
}

}  // namespace versenet

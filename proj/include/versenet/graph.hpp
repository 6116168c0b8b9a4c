#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "versenet/corpus.hpp"

namespace versenet {

struct Edge {
    int a = 0;  // node index, a < b
    int b = 0;
    std::int64_t weight = 0;  // number of verses the pair co-occurs in
};

// Weighted undirected co-occurrence network. Immutable after construction:
// no self-loops, every weight >= 1, every node has degree >= 1 (names that
// never co-occur are dropped at build time). Nodes are canonical lexicon
// strings, sorted lexicographically; all read access is safe to share
// across threads.
class CoocGraph {
public:
    CoocGraph() = default;

    // Validates and indexes an explicit edge list. Duplicate pairs (in
    // either orientation) and self-loops are data errors.
    static CoocGraph from_edges(std::vector<std::tuple<std::string, std::string, std::int64_t>> edges);

    int node_count() const { return static_cast<int>(nodes_.size()); }
    bool empty() const { return nodes_.empty(); }
    const std::vector<std::string>& nodes() const { return nodes_; }
    const std::string& name(int v) const { return nodes_[static_cast<std::size_t>(v)]; }

    // -1 when the name is not a node.
    int index_of(std::string_view name) const;

    const std::vector<Edge>& edges() const { return edges_; }
    std::int64_t total_edge_weight() const { return total_weight_; }

    // (neighbor index, weight) pairs sorted by neighbor index.
    std::span<const std::pair<int, std::int64_t>> neighbors(int v) const {
        std::size_t b = offsets_[static_cast<std::size_t>(v)];
        std::size_t e = offsets_[static_cast<std::size_t>(v) + 1];
        return {adjacency_.data() + b, e - b};
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
    std::int64_t weighted_degree(int v) const;

private:
    void index_edges();

    std::vector<std::string> nodes_;            // sorted
    std::vector<Edge> edges_;                   // sorted by (a, b)
    std::vector<std::size_t> offsets_;          // CSR offsets, size N+1
    std::vector<std::pair<int, std::int64_t>> adjacency_;
    std::int64_t total_weight_ = 0;
};

// Counts, for every verse, each unordered pair of distinct matched names.
// Names without any co-occurrence do not become nodes. An all-isolated or
// matchless corpus yields an empty graph, not an error.
CoocGraph build_graph(std::span<const Verse> verses, const Lexicon& lexicon);

// build_graph restricted to one book's verses. Unknown book id is an error.
CoocGraph subgraph_by_book(std::span<const Verse> verses, const Lexicon& lexicon,
                           std::string_view book);

// |edges| / (N * (N - 1) / 2). Requires N >= 2.
double density(const CoocGraph& g);

}  // namespace versenet

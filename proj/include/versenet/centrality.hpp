#pragma once

#include <span>
#include <string>
#include <vector>

#include "versenet/graph.hpp"

namespace versenet {

enum class Measure { degree, weighted_degree, betweenness, closeness };

// Per-node scores with competition ranks: equal scores share the smallest
// rank, and ordering among ties is lexicographic by name, so rank tables
// are deterministic.
struct CentralityTable {
    Measure measure = Measure::degree;
    std::vector<std::string> names;  // aligned with scores/ranks
    std::vector<double> scores;
    std::vector<int> ranks;          // 1 = most central
};

CentralityTable degree_centrality(const CoocGraph& g);
CentralityTable weighted_degree_centrality(const CoocGraph& g);

// Unnormalized shortest-path betweenness (Brandes accumulation, one rooted
// pass per source). Each unordered pair is counted once and contributions
// split equally among equal-length shortest paths. With use_weights, edge
// length is 1/weight.
CentralityTable betweenness_centrality(const CoocGraph& g, bool use_weights = false);

enum class ClosenessVariant { harmonic, classic_within_component };

// harmonic: sum of 1/d(v,u) with 1/infinity = 0, well-defined on the
// disconnected book graphs. classic: (n_C - 1) / sum of d(v,u) within v's
// component; 0 for singleton components.
CentralityTable closeness_centrality(const CoocGraph& g,
                                     ClosenessVariant variant = ClosenessVariant::harmonic,
                                     bool use_weights = false);

struct RankedEntry {
    std::string name;
    double score = 0.0;
    int rank = 0;
};

// First k entries in rank order (clamped to table size).
std::vector<RankedEntry> top_k(const CentralityTable& table, int k);

// Competition ranks for arbitrary score vectors; shared by the centrality
// tables and the vulnerability module's removal orders.
std::vector<int> competition_ranks(std::span<const std::string> names,
                                   std::span<const double> scores);

// Node indices sorted by (score desc, name asc): the deterministic order
// behind ranks and static removal strategies.
std::vector<int> ranked_order(std::span<const std::string> names,
                              std::span<const double> scores);

std::string measure_name(Measure m);

}  // namespace versenet

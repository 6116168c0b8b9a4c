#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "versenet/centrality.hpp"

namespace versenet {

// Everything a subcommand needs, config-file- and flag-fillable. Seed
// counts: `random_seeds` drives the random removal strategy (one curve per
// seed), `community_seeds` the best-of-S Louvain sweep.
struct RunConfig {
    std::string corpus_path = "data/web_corpus.tsv";
    std::string lexicon_path = "data/lexicon.txt";
    std::string out_dir = "out";
    std::vector<std::string> books;       // empty or {"all"} = every book
    std::vector<std::string> measures;    // empty = all six
    std::vector<std::string> strategies;  // empty or {"all"} = all four
    std::vector<std::string> focus;
    std::string format = "csv";  // csv | json | graphml | dot
    std::uint64_t seed = 1;      // base seed
    int random_seeds = 20;
    int community_seeds = 10;
    bool weighted = false;
    ClosenessVariant closeness = ClosenessVariant::harmonic;
};

inline const std::vector<std::string> kAllMeasures = {
    "degree", "weighted_degree", "betweenness", "closeness",
    "loss_connectivity", "loss_closeness"};

// Each command throws versenet::Error on failure; the CLI maps validation
// errors to exit code 1 and data errors to 2. Outputs are written
// atomically (temp file + rename) under out_dir.
void cmd_build(const RunConfig& config);
void cmd_centrality(const RunConfig& config);
void cmd_vulnerability(const RunConfig& config);
void cmd_communities(const RunConfig& config);
void cmd_export(const RunConfig& config);
void cmd_report(const RunConfig& config);

}  // namespace versenet

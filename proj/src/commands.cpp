#include "versenet/commands.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <span>

#include <json.hpp>

#include "versenet/community.hpp"
#include "versenet/corpus.hpp"
#include "versenet/errors.hpp"
#include "versenet/format.hpp"
#include "versenet/graph.hpp"
#include "versenet/graph_io.hpp"
#include "versenet/vulnerability.hpp"

namespace versenet {

namespace fs = std::filesystem;

namespace {

constexpr const char* kUnionKey = "all";

void ensure_out_dir(const RunConfig& config) {
    std::error_code ec;
    fs::create_directories(config.out_dir, ec);
    if (ec) throw_data("cannot create output directory \"" + config.out_dir + "\": " + ec.message());
}

// write-then-rename so a failed run never leaves a truncated file behind
void atomic_write(const fs::path& path, const std::function<void(std::ostream&)>& emit) {
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw_data("cannot open \"" + tmp.string() + "\" for writing");
        emit(out);
        out.flush();
        if (!out) throw_data("write failed for \"" + tmp.string() + "\"");
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) throw_data("cannot rename \"" + tmp.string() + "\" to \"" + path.string() + "\": " + ec.message());
}

std::string file_key(const std::string& book) {
    std::string key;
    for (char c : book) key += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return key;
}

fs::path graph_path(const RunConfig& config, const std::string& book) {
    return fs::path(config.out_dir) / ("graph_" + file_key(book) + ".csv");
}

void validate_format(const RunConfig& config) {
    if (config.format != "csv" && config.format != "json" && config.format != "graphml" &&
        config.format != "dot")
        throw_validation("--format must be one of csv, json, graphml, dot (got \"" + config.format + "\")");
}

bool wants_all_books(const std::vector<std::string>& books) {
    return books.empty() ||
           (books.size() == 1 && books.front() == kUnionKey);
}

// Books in corpus order, honoring the filter.
std::vector<std::string> select_books(std::span<const Verse> verses,
                                      const std::vector<std::string>& filter) {
    std::vector<std::string> present;
    for (const Verse& v : verses) {
        if (std::find(present.begin(), present.end(), v.book) == present.end())
            present.push_back(v.book);
    }
    if (wants_all_books(filter)) return present;
    for (const std::string& b : filter) {
        if (std::find(present.begin(), present.end(), b) == present.end())
            throw_data("book \"" + b + "\" not present in corpus");
    }
    std::vector<std::string> selected;
    for (const std::string& b : present) {
        if (std::find(filter.begin(), filter.end(), b) != filter.end()) selected.push_back(b);
    }
    return selected;
}

struct BuiltGraphs {
    std::vector<std::string> books;  // in stats.csv order; may end with "all"
    std::map<std::string, CoocGraph> graphs;
};

// Downstream commands consume what cmd_build wrote.
BuiltGraphs load_built_graphs(const RunConfig& config) {
    fs::path stats = fs::path(config.out_dir) / "stats.csv";
    std::ifstream in(stats, std::ios::binary);
    if (!in)
        throw_data("missing \"" + stats.string() + "\"; run the build subcommand first");
    BuiltGraphs built;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::string book = line.substr(0, line.find(','));
        built.books.push_back(book);
    }
    std::vector<std::string> wanted = built.books;
    if (!wants_all_books(config.books)) {
        wanted.clear();
        for (const std::string& b : config.books) {
            if (std::find(built.books.begin(), built.books.end(), b) == built.books.end())
                throw_data("book \"" + b + "\" was not built (not in " + stats.string() + ")");
            wanted.push_back(b);
        }
        built.books = wanted;
    }
    for (const std::string& b : built.books) {
        built.graphs.emplace(b, read_edge_csv_file(graph_path(config, b).string()));
    }
    return built;
}

std::vector<std::string> selected_measures(const RunConfig& config) {
    if (config.measures.empty()) return kAllMeasures;
    for (const std::string& m : config.measures) {
        if (std::find(kAllMeasures.begin(), kAllMeasures.end(), m) == kAllMeasures.end())
            throw_validation("unknown measure \"" + m + "\"");
    }
    return config.measures;
}

CentralityTable compute_measure(const CoocGraph& g, const std::string& measure,
                                const RunConfig& config) {
    if (measure == "degree") return degree_centrality(g);
    if (measure == "weighted_degree") return weighted_degree_centrality(g);
    if (measure == "betweenness") return betweenness_centrality(g, config.weighted);
    if (measure == "closeness") return closeness_centrality(g, config.closeness, config.weighted);
    throw_validation("unknown measure \"" + measure + "\"");
}

// Loss tables presented in the per-measure report shape. The deletion
// sweeps are the expensive part, so each book computes them at most once.
struct MeasureReport {
    std::vector<std::string> names;
    std::vector<double> scores;
    std::vector<int> ranks;
};

struct LossCache {
    std::optional<NodeLossTable> connectivity;
    std::optional<NodeLossTable> closeness;

    const NodeLossTable& get(const CoocGraph& g, LossMetric metric) {
        auto& slot = metric == LossMetric::connectivity_sum_distances ? connectivity : closeness;
        if (!slot) slot = node_deletion_loss(g, metric);
        return *slot;
    }
};

MeasureReport report_for(const CoocGraph& g, const std::string& measure, const RunConfig& config,
                         LossCache& losses) {
    MeasureReport r;
    if (measure == "loss_connectivity" || measure == "loss_closeness") {
        const NodeLossTable& t = losses.get(g, measure == "loss_connectivity"
                                                   ? LossMetric::connectivity_sum_distances
                                                   : LossMetric::closeness_sum_inverse_distances);
        r.names = t.names;
        r.scores = t.loss;
        r.ranks = t.ranks;
    } else {
        CentralityTable t = compute_measure(g, measure, config);
        r.names = std::move(t.names);
        r.scores = std::move(t.scores);
        r.ranks = std::move(t.ranks);
    }
    return r;
}

Partition best_of_seeds(const CoocGraph& g, const RunConfig& config,
                        std::vector<Partition>* all_runs = nullptr) {
    if (config.community_seeds < 1) throw_validation("--seeds must be >= 1 for communities");
    Partition best;
    bool have = false;
    for (int i = 0; i < config.community_seeds; ++i) {
        Partition p = louvain(g, config.seed + static_cast<std::uint64_t>(i));
        if (!have || p.modularity > best.modularity) {
            best = p;
            have = true;
        }
        if (all_runs) all_runs->push_back(std::move(p));
    }
    return best;
}

}  // namespace

void cmd_build(const RunConfig& config) {
    validate_format(config);
    if (!fs::exists(config.corpus_path))
        throw_validation("corpus file \"" + config.corpus_path + "\" does not exist");
    if (!fs::exists(config.lexicon_path))
        throw_validation("lexicon file \"" + config.lexicon_path + "\" does not exist");
    ensure_out_dir(config);
    std::vector<Verse> verses = parse_corpus_file(config.corpus_path);
    if (verses.empty()) throw_data("corpus \"" + config.corpus_path + "\" has no verses");
    LexiconLoad lex = load_lexicon_file(config.lexicon_path);
    for (const std::string& w : lex.warnings) std::cerr << "warning: " << w << '\n';

    std::vector<std::string> books = select_books(verses, config.books);
    for (const std::string& b : books) {
        if (b == kUnionKey)
            throw_data("book id \"all\" is reserved for the union graph");
    }

    std::vector<std::pair<std::string, CoocGraph>> built;
    for (const std::string& book : books) {
        built.emplace_back(book, subgraph_by_book(verses, lex.lexicon, book));
    }
    if (books.size() > 1) {
        std::vector<Verse> selected;
        for (const Verse& v : verses) {
            if (std::find(books.begin(), books.end(), v.book) != books.end()) selected.push_back(v);
        }
        built.emplace_back(kUnionKey, build_graph(selected, lex.lexicon));
    }

    for (const auto& [book, g] : built) {
        atomic_write(graph_path(config, book), [&](std::ostream& out) { write_edge_csv(out, g); });
        if (config.format != "csv") {
            fs::path extra = fs::path(config.out_dir) / ("graph_" + file_key(book) + "." + config.format);
            atomic_write(extra, [&](std::ostream& out) {
                if (config.format == "json") write_graph_json(out, g);
                else if (config.format == "graphml") write_graphml(out, g);
                else write_dot(out, g);
            });
        }
    }

    atomic_write(fs::path(config.out_dir) / "stats.csv", [&](std::ostream& out) {
        out << "book,nodes,edges,density\n";
        for (const auto& [book, g] : built) {
            out << book << ',' << g.node_count() << ',' << g.edges().size() << ',';
            if (g.node_count() >= 2) out << fmt_double(density(g));
            out << '\n';
        }
    });
}

void cmd_centrality(const RunConfig& config) {
    ensure_out_dir(config);
    std::vector<std::string> measures = selected_measures(config);
    if (measures.empty()) throw_validation("empty measure selection");
    BuiltGraphs built = load_built_graphs(config);

    // per-book per-measure CSVs, plus the cross-book top-10 rank matrix
    std::map<std::string, std::map<std::string, int>> matrix;  // name -> column -> rank
    std::vector<std::string> columns;
    for (const std::string& book : built.books) {
        const CoocGraph& g = built.graphs.at(book);
        if (g.empty()) throw_data("graph for \"" + book + "\" is empty; nothing to rank");

        LossCache losses;
        bool wants_loss_detail = false;
        for (const std::string& measure : measures) {
            MeasureReport r = report_for(g, measure, config, losses);
            wants_loss_detail |= measure.rfind("loss_", 0) == 0;

            fs::path path = fs::path(config.out_dir) /
                            ("centrality_" + file_key(book) + "_" + measure + ".csv");
            atomic_write(path, [&](std::ostream& out) {
                out << "measure,name,score,rank\n";
                std::vector<int> order = ranked_order(r.names, r.scores);
                for (int idx : order) {
                    auto i = static_cast<std::size_t>(idx);
                    out << measure << ',' << r.names[i] << ',' << fmt_double(r.scores[i]) << ','
                        << r.ranks[i] << '\n';
                }
            });

            std::string column = book + ":" + measure;
            columns.push_back(column);
            for (std::size_t i = 0; i < r.names.size(); ++i) {
                if (r.ranks[i] <= 10) matrix[r.names[i]][column] = r.ranks[i];
            }
        }

        if (wants_loss_detail) {
            fs::path path = fs::path(config.out_dir) / ("loss_detail_" + file_key(book) + ".csv");
            atomic_write(path, [&](std::ostream& out) {
                out << "metric,name,loss,loss_adjusted,disconnected_pairs,rank\n";
                for (LossMetric metric : {LossMetric::connectivity_sum_distances,
                                          LossMetric::closeness_sum_inverse_distances}) {
                    const NodeLossTable& t = losses.get(g, metric);
                    for (std::size_t i = 0; i < t.names.size(); ++i) {
                        out << loss_metric_name(metric) << ',' << t.names[i] << ','
                            << fmt_double(t.loss[i]) << ',' << fmt_double(t.loss_adjusted[i]) << ','
                            << t.disconnected_pairs[i] << ',' << t.ranks[i] << '\n';
                    }
                }
            });
        }
    }

    atomic_write(fs::path(config.out_dir) / "rank_matrix.csv", [&](std::ostream& out) {
        out << "name";
        for (const std::string& c : columns) out << ',' << c;
        out << '\n';
        for (const auto& [name, cells] : matrix) {
            out << name;
            for (const std::string& c : columns) {
                out << ',';
                auto it = cells.find(c);
                if (it != cells.end()) out << it->second;
            }
            out << '\n';
        }
    });
}

void cmd_vulnerability(const RunConfig& config) {
    validate_format(config);
    ensure_out_dir(config);
    std::vector<std::string> strategies = config.strategies;
    if (strategies.empty() || (strategies.size() == 1 && strategies.front() == "all"))
        strategies = {"betweenness_static", "degree_static", "betweenness_cascading", "random"};
    for (const std::string& s : strategies) {
        if (!parse_strategy(s)) throw_validation("unknown strategy \"" + s + "\"");
    }
    if (config.random_seeds < 1) throw_validation("--seeds must be >= 1");

    BuiltGraphs built = load_built_graphs(config);
    for (const std::string& book : built.books) {
        const CoocGraph& g = built.graphs.at(book);
        std::vector<RemovalCurve> curves;
        for (const std::string& name : strategies) {
            RemovalStrategy strategy = *parse_strategy(name);
            if (strategy == RemovalStrategy::random_order) {
                for (int i = 0; i < config.random_seeds; ++i)
                    curves.push_back(removal_curve(g, strategy, config.seed + static_cast<std::uint64_t>(i)));
            } else {
                curves.push_back(removal_curve(g, strategy));
            }
        }
        fs::path path = fs::path(config.out_dir) / ("vulnerability_" + file_key(book) + ".csv");
        atomic_write(path, [&](std::ostream& out) { write_curves_csv(out, curves); });
        if (config.format == "json") {
            fs::path jpath = fs::path(config.out_dir) / ("vulnerability_" + file_key(book) + ".json");
            atomic_write(jpath, [&](std::ostream& out) {
                nlohmann::json j = nlohmann::json::array();
                for (const RemovalCurve& c : curves) {
                    nlohmann::json jc;
                    jc["strategy"] = strategy_name(c.strategy);
                    if (c.seed) jc["seed"] = *c.seed;
                    else jc["seed"] = nullptr;
                    jc["points"] = nlohmann::json::array();
                    for (const CurvePoint& p : c.points)
                        jc["points"].push_back({{"fraction_removed", p.fraction_removed}, {"loss", p.loss}});
                    jc["removal_order"] = c.removal_order;
                    j.push_back(std::move(jc));
                }
                out << j.dump(2) << '\n';
            });
        }
    }
}

void cmd_communities(const RunConfig& config) {
    ensure_out_dir(config);
    BuiltGraphs built = load_built_graphs(config);

    std::vector<std::tuple<std::string, double, int, int>> summary;  // book, Q, nodes, clusters
    for (const std::string& book : built.books) {
        const CoocGraph& g = built.graphs.at(book);
        std::vector<Partition> runs;
        Partition best = best_of_seeds(g, config, &runs);
        summary.emplace_back(book, best.modularity, g.node_count(), best.n_clusters);

        fs::path csv = fs::path(config.out_dir) / ("communities_" + file_key(book) + ".csv");
        atomic_write(csv, [&](std::ostream& out) {
            out << "name,community,community_size,weight\n";
            for (const CommunityReportRow& row : community_report_rows(best)) {
                out << row.name << ',' << row.community << ',' << row.community_size << ','
                    << fmt_double(row.weight) << '\n';
            }
        });

        fs::path jpath = fs::path(config.out_dir) / ("communities_" + file_key(book) + ".json");
        atomic_write(jpath, [&](std::ostream& out) {
            nlohmann::json j;
            j["book"] = book;
            j["seed"] = best.seed;
            j["modularity"] = best.modularity;
            j["n_clusters"] = best.n_clusters;
            j["n_nodes"] = best.names.size();
            nlohmann::json assignment = nlohmann::json::object();
            for (std::size_t i = 0; i < best.names.size(); ++i)
                assignment[best.names[i]] = best.assignment[i];
            j["assignment"] = std::move(assignment);
            nlohmann::json per_seed = nlohmann::json::array();
            for (const Partition& p : runs)
                per_seed.push_back({{"seed", p.seed}, {"modularity", p.modularity},
                                    {"n_clusters", p.n_clusters}});
            j["per_seed"] = std::move(per_seed);
            out << j.dump(2) << '\n';
        });
    }

    atomic_write(fs::path(config.out_dir) / "communities_summary.csv", [&](std::ostream& out) {
        out << "book,modularity,n_nodes,n_clusters\n";
        for (const auto& [book, q, nodes, clusters] : summary)
            out << book << ',' << fmt_double(q) << ',' << nodes << ',' << clusters << '\n';
    });
}

void cmd_export(const RunConfig& config) {
    validate_format(config);
    ensure_out_dir(config);
    BuiltGraphs built = load_built_graphs(config);
    for (const std::string& book : built.books) {
        const CoocGraph& g = built.graphs.at(book);
        fs::path path = fs::path(config.out_dir) / ("export_" + file_key(book) + "." + config.format);

        if (config.format == "csv") {
            atomic_write(path, [&](std::ostream& out) { write_edge_csv(out, g); });
            continue;
        }
        if (config.format == "json") {
            atomic_write(path, [&](std::ostream& out) { write_graph_json(out, g); });
            continue;
        }

        Partition best = best_of_seeds(g, config);
        std::vector<std::string> warnings;
        GraphAnnotation ann;
        ann.partition = &best;
        ann.highlighted_communities = communities_of(best, config.focus, &warnings);
        for (const std::string& w : warnings) std::cerr << "warning: " << book << ": " << w << '\n';
        atomic_write(path, [&](std::ostream& out) {
            if (config.format == "graphml") write_graphml(out, g, ann);
            else write_dot(out, g, ann);
        });
    }
}

void cmd_report(const RunConfig& config) {
    cmd_build(config);
    cmd_centrality(config);
    cmd_vulnerability(config);
    cmd_communities(config);
    cmd_export(config);
}

}  // namespace versenet

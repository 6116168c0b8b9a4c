#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "versenet/commands.hpp"
#include "versenet/errors.hpp"

namespace {

using versenet::RunConfig;

void add_common_options(CLI::App* cmd, RunConfig& config) {
    cmd->fallthrough();  // lets `versenet <cmd> --config PATH` reach the top-level flag
    cmd->add_option("--corpus", config.corpus_path, "Corpus TSV (book<TAB>chapter<TAB>verse<TAB>text)")
        ->capture_default_str();
    cmd->add_option("--lexicon", config.lexicon_path, "Name lexicon ('#' comments, '!' exclusions)")
        ->capture_default_str();
    cmd->add_option("--books", config.books, "Book ids to process (default: all)");
    cmd->add_option("--out", config.out_dir, "Output directory")->capture_default_str();
    cmd->add_option("--format", config.format, "Output format: csv, json, graphml, dot")
        ->capture_default_str();
    cmd->add_option("--seed", config.seed, "Base seed for seeded operations")->capture_default_str();
}

void add_closeness_options(CLI::App* cmd, RunConfig& config) {
    cmd->add_flag("--weighted", config.weighted,
                  "Use edge weights (distance = 1/weight) for path-based measures");
    cmd->add_option_function<std::string>(
           "--closeness-variant",
           [&config](const std::string& v) {
               if (v == "harmonic")
                   config.closeness = versenet::ClosenessVariant::harmonic;
               else if (v == "classic")
                   config.closeness = versenet::ClosenessVariant::classic_within_component;
               else
                   throw CLI::ValidationError("--closeness-variant must be harmonic or classic");
           },
           "Closeness variant: harmonic (default) or classic");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"versenet: co-occurrence network toolkit for verse-structured corpora"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat key/value config file with one section per subcommand");

    RunConfig config;

    CLI::App* build = app.add_subcommand("build", "Build per-book and union co-occurrence graphs");
    add_common_options(build, config);

    CLI::App* centrality =
        app.add_subcommand("centrality", "Centrality tables and the cross-book top-10 rank matrix");
    add_common_options(centrality, config);
    add_closeness_options(centrality, config);
    centrality->add_option("--measures", config.measures,
                           "Measures: degree, weighted_degree, betweenness, closeness, "
                           "loss_connectivity, loss_closeness");

    CLI::App* vulnerability =
        app.add_subcommand("vulnerability", "Node-removal loss curves per strategy");
    add_common_options(vulnerability, config);
    vulnerability->add_option("--strategies", config.strategies,
                              "Strategies: betweenness_static, degree_static, "
                              "betweenness_cascading, random (default: all)");
    vulnerability->add_option("--seeds", config.random_seeds, "Random-strategy seed count")
        ->capture_default_str();

    CLI::App* communities = app.add_subcommand("communities", "Louvain community detection");
    add_common_options(communities, config);
    communities->add_option("--seeds", config.community_seeds, "Louvain seed sweep size (best-of-S)")
        ->capture_default_str();

    CLI::App* exporter = app.add_subcommand("export", "Graph export with community annotation");
    add_common_options(exporter, config);
    exporter->add_option("--focus", config.focus, "Names whose communities get highlight=true");
    exporter->add_option("--seeds", config.community_seeds, "Louvain seed sweep size (best-of-S)")
        ->capture_default_str();

    CLI::App* report = app.add_subcommand("report", "Run the full pipeline: build + all analyses");
    add_common_options(report, config);
    add_closeness_options(report, config);
    report->add_option("--measures", config.measures, "Measure selection for the centrality step");
    report->add_option("--strategies", config.strategies, "Strategy selection for the vulnerability step");
    report->add_option("--seeds", config.random_seeds, "Random-strategy seed count")
        ->capture_default_str();
    report->add_option("--focus", config.focus, "Names whose communities get highlight=true");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;  // flag/config mistakes are validation errors
    }

    try {
        if (build->parsed()) versenet::cmd_build(config);
        if (centrality->parsed()) versenet::cmd_centrality(config);
        if (vulnerability->parsed()) versenet::cmd_vulnerability(config);
        if (communities->parsed()) versenet::cmd_communities(config);
        if (exporter->parsed()) versenet::cmd_export(config);
        if (report->parsed()) versenet::cmd_report(config);
    } catch (const versenet::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.kind() == versenet::Error::Kind::validation ? 1 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "versenet/centrality.hpp"
#include "versenet/errors.hpp"

using namespace versenet;

namespace {

CoocGraph star4() {
    return CoocGraph::from_edges(
        {{"hub", "l1", 1}, {"hub", "l2", 1}, {"hub", "l3", 1}, {"hub", "l4", 1}});
}

CoocGraph path3() { return CoocGraph::from_edges({{"a", "b", 1}, {"b", "c", 1}}); }

double score_of(const CentralityTable& t, const std::string& name) {
    for (std::size_t i = 0; i < t.names.size(); ++i)
        if (t.names[i] == name) return t.scores[i];
    FAIL("missing node ", name);
    return 0.0;
}

int rank_of(const CentralityTable& t, const std::string& name) {
    for (std::size_t i = 0; i < t.names.size(); ++i)
        if (t.names[i] == name) return t.ranks[i];
    return -1;
}

}  // namespace

TEST_CASE("degree on the star") {
    auto t = degree_centrality(star4());
    CHECK(score_of(t, "hub") == 4);
    CHECK(score_of(t, "l1") == 1);
    CHECK(rank_of(t, "hub") == 1);
    CHECK(rank_of(t, "l1") == 2);  // ties share the smaller rank
    CHECK(rank_of(t, "l4") == 2);
}

TEST_CASE("degree on the anointing graph") {
    CoocGraph g = CoocGraph::from_edges({{"Jesus", "Bethany", 1},
                                         {"Jesus", "Lazarus", 1},
                                         {"Bethany", "Lazarus", 1},
                                         {"Lazarus", "Martha", 1},
                                         {"Jesus", "Mary", 1}});
    auto t = degree_centrality(g);
    CHECK(score_of(t, "Jesus") == 3);
    CHECK(score_of(t, "Lazarus") == 3);
    CHECK(score_of(t, "Bethany") == 2);
    CHECK(score_of(t, "Mary") == 1);
    CHECK(score_of(t, "Martha") == 1);
    // all weights are 1, so weighted degree ranks match plain degree ranks
    auto w = weighted_degree_centrality(g);
    for (std::size_t i = 0; i < t.names.size(); ++i) CHECK(t.ranks[i] == w.ranks[i]);
}

TEST_CASE("weighted degree sums incident weights") {
    CoocGraph g = CoocGraph::from_edges({{"a", "b", 5}});
    auto t = weighted_degree_centrality(g);
    CHECK(score_of(t, "a") == 5);
    CHECK(score_of(t, "b") == 5);
}

TEST_CASE("betweenness on small fixtures") {
    auto t = betweenness_centrality(path3());
    CHECK(score_of(t, "b") == doctest::Approx(1.0));
    CHECK(score_of(t, "a") == doctest::Approx(0.0));

    auto s = betweenness_centrality(star4());
    CHECK(score_of(s, "hub") == doctest::Approx(6.0));  // C(4,2) leaf pairs
    CHECK(score_of(s, "l1") == doctest::Approx(0.0));
}

TEST_CASE("closeness on small fixtures") {
    auto t = closeness_centrality(path3());
    CHECK(score_of(t, "b") == doctest::Approx(2.0));
    CHECK(score_of(t, "a") == doctest::Approx(1.5));

    // two disconnected edges: unreachable pairs contribute nothing
    CoocGraph g = CoocGraph::from_edges({{"a", "b", 1}, {"c", "d", 1}});
    auto h = closeness_centrality(g);
    for (double s : h.scores) CHECK(s == doctest::Approx(1.0));
}

TEST_CASE("centrality measures match the brute-force oracles on random graphs") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        CoocGraph g = oracles::random_graph(seed, 8 + static_cast<int>(seed * 3 % 43),
                                            0.05 + 0.02 * static_cast<double>(seed % 10));
        if (g.node_count() < 3) continue;

        auto deg = degree_centrality(g);
        auto deg_oracle = oracles::degree_by_row_count(g);
        auto wdeg = weighted_degree_centrality(g);
        auto wdeg_oracle = oracles::weighted_degree_by_row_sum(g);
        auto bet = betweenness_centrality(g);
        auto bet_oracle = oracles::betweenness_by_path_counting(g);
        auto close = closeness_centrality(g);
        auto dist = oracles::fw_distances(g);
        auto close_oracle = oracles::harmonic_closeness_from_matrix(dist);
        auto classic = closeness_centrality(g, ClosenessVariant::classic_within_component);
        auto classic_oracle = oracles::classic_closeness_from_matrix(dist);

        for (int v = 0; v < g.node_count(); ++v) {
            auto i = static_cast<std::size_t>(v);
            CHECK(deg.scores[i] == doctest::Approx(deg_oracle[i]).epsilon(1e-12));
            CHECK(wdeg.scores[i] == doctest::Approx(wdeg_oracle[i]).epsilon(1e-12));
            CHECK(std::abs(bet.scores[i] - bet_oracle[i]) < 1e-9);
            CHECK(std::abs(close.scores[i] - close_oracle[i]) < 1e-9);
            CHECK(std::abs(classic.scores[i] - classic_oracle[i]) < 1e-9);
        }
    }
}

TEST_CASE("weighted betweenness matches the path-counting oracle") {
    for (std::uint64_t seed = 31; seed <= 40; ++seed) {
        CoocGraph g = oracles::random_graph(seed, 20, 0.2, 7);
        if (g.node_count() < 3) continue;
        auto bet = betweenness_centrality(g, /*use_weights=*/true);
        auto oracle = oracles::betweenness_by_path_counting(g, /*use_weights=*/true);
        for (int v = 0; v < g.node_count(); ++v)
            CHECK(std::abs(bet.scores[static_cast<std::size_t>(v)] -
                           oracle[static_cast<std::size_t>(v)]) < 1e-9);
    }
}

TEST_CASE("betweenness of a degree-1 node is zero") {
    for (std::uint64_t seed = 50; seed < 56; ++seed) {
        CoocGraph g = oracles::random_graph(seed, 20, 0.12);
        if (g.node_count() < 3) continue;
        auto t = betweenness_centrality(g);
        for (int v = 0; v < g.node_count(); ++v) {
            if (g.degree(v) == 1)
                CHECK(t.scores[static_cast<std::size_t>(v)] == doctest::Approx(0.0));
        }
    }
}

TEST_CASE("adding an edge never lowers harmonic closeness") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 8; ++trial) {
        CoocGraph g = oracles::random_graph(rng(), 12, 0.25);
        if (g.node_count() < 4) continue;
        // pick a currently-missing pair
        int a = -1, b = -1;
        for (int i = 0; i < g.node_count() && a < 0; ++i) {
            for (int j = i + 1; j < g.node_count(); ++j) {
                bool linked = false;
                for (auto [u, w] : g.neighbors(i))
                    if (u == j) linked = true;
                if (!linked) {
                    a = i;
                    b = j;
                    break;
                }
            }
        }
        if (a < 0) continue;
        std::vector<std::tuple<std::string, std::string, std::int64_t>> edges;
        for (const Edge& e : g.edges()) edges.emplace_back(g.name(e.a), g.name(e.b), e.weight);
        edges.emplace_back(g.name(a), g.name(b), 1);
        CoocGraph bigger = CoocGraph::from_edges(std::move(edges));

        auto before = closeness_centrality(g);
        auto after = closeness_centrality(bigger);
        for (int v = 0; v < g.node_count(); ++v) {
            int u = bigger.index_of(g.name(v));
            REQUIRE(u >= 0);
            CHECK(after.scores[static_cast<std::size_t>(u)] >=
                  before.scores[static_cast<std::size_t>(v)] - 1e-12);
        }
    }
}

TEST_CASE("top_k clamps, orders and breaks ties by name") {
    auto table = degree_centrality(star4());
    auto first = top_k(table, 1);
    REQUIRE(first.size() == 1);
    CHECK(first[0].name == "hub");
    CHECK(first[0].score == 4);
    CHECK(first[0].rank == 1);

    auto all = top_k(table, 100);
    REQUIRE(all.size() == 5);
    CHECK(all[1].name == "l1");  // tied leaves come out lexicographically
    CHECK(all[4].name == "l4");

    CHECK_THROWS_AS(top_k(table, 0), Error);
}

TEST_CASE("empty graphs are rejected") {
    CoocGraph empty;
    CHECK_THROWS_AS(degree_centrality(empty), Error);
    CHECK_THROWS_AS(betweenness_centrality(empty), Error);
    CHECK_THROWS_AS(closeness_centrality(empty), Error);
}

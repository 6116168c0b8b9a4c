#include "versenet/community.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "versenet/errors.hpp"

namespace versenet {

double modularity(const CoocGraph& g, std::span<const int> assignment) {
    if (g.empty()) throw_data("modularity: undefined on an empty graph");
    const int n = g.node_count();
    if (static_cast<int>(assignment.size()) != n)
        throw_validation("modularity: assignment must cover every node");
    for (int c : assignment) {
        if (c < 0 || c >= n) throw_validation("modularity: community id out of range");
    }

    const double two_m = 2.0 * static_cast<double>(g.total_edge_weight());
    std::vector<double> intra(static_cast<std::size_t>(n), 0.0);  // sum_in per community
    std::vector<double> total(static_cast<std::size_t>(n), 0.0);  // sum_tot per community
    for (const Edge& e : g.edges()) {
        if (assignment[static_cast<std::size_t>(e.a)] == assignment[static_cast<std::size_t>(e.b)])
            intra[static_cast<std::size_t>(assignment[static_cast<std::size_t>(e.a)])] +=
                static_cast<double>(e.weight);
    }
    for (int v = 0; v < n; ++v)
        total[static_cast<std::size_t>(assignment[static_cast<std::size_t>(v)])] +=
            static_cast<double>(g.weighted_degree(v));

    double q = 0.0;
    for (int c = 0; c < n; ++c) {
        auto ci = static_cast<std::size_t>(c);
        if (total[ci] == 0.0 && intra[ci] == 0.0) continue;
        q += 2.0 * intra[ci] / two_m - (total[ci] / two_m) * (total[ci] / two_m);
    }
    return q;
}

namespace {

// Louvain working graph; unlike CoocGraph it allows self-loops, which the
// aggregation step produces.
struct WorkGraph {
    int n = 0;
    std::vector<std::vector<std::pair<int, double>>> adj;  // neighbor != self
    std::vector<double> self;                              // self-loop weight, counted once
    std::vector<double> wdeg;                              // sum of incident weights + 2*self
    double m = 0.0;                                        // total weight incl. self-loops

    static WorkGraph from_cooc(const CoocGraph& g) {
        WorkGraph wg;
        wg.n = g.node_count();
        wg.adj.resize(static_cast<std::size_t>(wg.n));
        wg.self.assign(static_cast<std::size_t>(wg.n), 0.0);
        wg.wdeg.assign(static_cast<std::size_t>(wg.n), 0.0);
        for (const Edge& e : g.edges()) {
            auto w = static_cast<double>(e.weight);
            wg.adj[static_cast<std::size_t>(e.a)].push_back({e.b, w});
            wg.adj[static_cast<std::size_t>(e.b)].push_back({e.a, w});
            wg.wdeg[static_cast<std::size_t>(e.a)] += w;
            wg.wdeg[static_cast<std::size_t>(e.b)] += w;
            wg.m += w;
        }
        return wg;
    }
};

struct LevelState {
    std::vector<int> comm;        // node -> community id (ids are node indices)
    std::vector<double> sum_tot;  // per community: sum of member degrees
    std::vector<double> sum_in;   // per community: 2*intra weight + 2*self
};

double level_quality(const WorkGraph& wg, const LevelState& st) {
    double q = 0.0;
    const double two_m = 2.0 * wg.m;
    for (int c = 0; c < wg.n; ++c) {
        auto ci = static_cast<std::size_t>(c);
        if (st.sum_tot[ci] == 0.0 && st.sum_in[ci] == 0.0) continue;
        q += st.sum_in[ci] / two_m - (st.sum_tot[ci] / two_m) * (st.sum_tot[ci] / two_m);
    }
    return q;
}

constexpr double kGainTolerance = 1e-7;

// Local-move phase. Returns true if any node changed community.
bool one_level(const WorkGraph& wg, LevelState& st, std::mt19937_64& rng) {
    const int n = wg.n;
    std::vector<int> visit(static_cast<std::size_t>(n));
    std::iota(visit.begin(), visit.end(), 0);
    for (std::size_t i = visit.size(); i > 1; --i)
        std::swap(visit[i - 1], visit[static_cast<std::size_t>(rng() % i)]);

    std::vector<double> neigh_w(static_cast<std::size_t>(n), 0.0);
    std::vector<int> touched;

    bool any_move = false;
    bool pass_moved = true;
    double q_prev = level_quality(wg, st);
    while (pass_moved) {
        pass_moved = false;
        for (int node : visit) {
            auto ni = static_cast<std::size_t>(node);
            const int old_comm = st.comm[ni];
            const double k_i = wg.wdeg[ni];

            // weights from node into each adjacent community (old one included)
            touched.clear();
            neigh_w[static_cast<std::size_t>(old_comm)] = 0.0;
            touched.push_back(old_comm);
            for (auto [u, w] : wg.adj[ni]) {
                int c = st.comm[static_cast<std::size_t>(u)];
                auto csz = static_cast<std::size_t>(c);
                if (neigh_w[csz] == 0.0 &&
                    std::find(touched.begin(), touched.end(), c) == touched.end())
                    touched.push_back(c);
                neigh_w[csz] += w;
            }

            // take node out of its community
            st.sum_tot[static_cast<std::size_t>(old_comm)] -= k_i;
            st.sum_in[static_cast<std::size_t>(old_comm)] -=
                2.0 * neigh_w[static_cast<std::size_t>(old_comm)] + 2.0 * wg.self[ni];

            // best insertion; gain common terms dropped, ties to smallest id
            int best = old_comm;
            double best_gain = neigh_w[static_cast<std::size_t>(old_comm)] -
                               st.sum_tot[static_cast<std::size_t>(old_comm)] * k_i / (2.0 * wg.m);
            for (int c : touched) {
                if (c == old_comm) continue;
                auto csz = static_cast<std::size_t>(c);
                double gain = neigh_w[csz] - st.sum_tot[csz] * k_i / (2.0 * wg.m);
                if (gain > best_gain || (gain == best_gain && c < best)) {
                    best = c;
                    best_gain = gain;
                }
            }

            st.sum_tot[static_cast<std::size_t>(best)] += k_i;
            st.sum_in[static_cast<std::size_t>(best)] +=
                2.0 * neigh_w[static_cast<std::size_t>(best)] + 2.0 * wg.self[ni];
            st.comm[ni] = best;
            if (best != old_comm) {
                pass_moved = true;
                any_move = true;
            }
            for (int c : touched) neigh_w[static_cast<std::size_t>(c)] = 0.0;
        }
        if (pass_moved) {
            double q_now = level_quality(wg, st);
            if (q_now - q_prev <= kGainTolerance) break;
            q_prev = q_now;
        }
    }
    return any_move;
}

// Community aggregation into the next level's super-graph.
WorkGraph aggregate(const WorkGraph& wg, const std::vector<int>& comm,
                    std::vector<int>& renumber_out) {
    renumber_out.assign(static_cast<std::size_t>(wg.n), -1);
    int next = 0;
    for (int v = 0; v < wg.n; ++v) {
        int c = comm[static_cast<std::size_t>(v)];
        if (renumber_out[static_cast<std::size_t>(c)] == -1)
            renumber_out[static_cast<std::size_t>(c)] = next++;
    }

    WorkGraph out;
    out.n = next;
    out.adj.resize(static_cast<std::size_t>(next));
    out.self.assign(static_cast<std::size_t>(next), 0.0);
    out.wdeg.assign(static_cast<std::size_t>(next), 0.0);
    out.m = wg.m;

    std::vector<std::vector<double>> between(static_cast<std::size_t>(next));
    for (auto& row : between) row.assign(static_cast<std::size_t>(next), 0.0);

    for (int v = 0; v < wg.n; ++v) {
        auto vi = static_cast<std::size_t>(v);
        int cv = renumber_out[static_cast<std::size_t>(comm[vi])];
        out.self[static_cast<std::size_t>(cv)] += wg.self[vi];
        for (auto [u, w] : wg.adj[vi]) {
            if (u < v) continue;  // each undirected edge once
            int cu = renumber_out[static_cast<std::size_t>(comm[static_cast<std::size_t>(u)])];
            if (cu == cv)
                out.self[static_cast<std::size_t>(cv)] += w;
            else
                between[static_cast<std::size_t>(cv)][static_cast<std::size_t>(cu)] += w;
        }
    }
    for (int a = 0; a < next; ++a) {
        for (int b = a + 1; b < next; ++b) {
            double w = between[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] +
                       between[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)];
            if (w > 0.0) {
                out.adj[static_cast<std::size_t>(a)].push_back({b, w});
                out.adj[static_cast<std::size_t>(b)].push_back({a, w});
                out.wdeg[static_cast<std::size_t>(a)] += w;
                out.wdeg[static_cast<std::size_t>(b)] += w;
            }
        }
    }
    for (int c = 0; c < next; ++c)
        out.wdeg[static_cast<std::size_t>(c)] += 2.0 * out.self[static_cast<std::size_t>(c)];
    return out;
}

}  // namespace

Partition louvain(const CoocGraph& g, std::uint64_t seed) {
    if (g.empty()) throw_data("louvain: empty graph");
    const int n = g.node_count();

    std::mt19937_64 rng(seed);
    WorkGraph wg = WorkGraph::from_cooc(g);

    // flat[i]: original node -> community in the current working graph
    std::vector<int> flat(static_cast<std::size_t>(n));
    std::iota(flat.begin(), flat.end(), 0);

    Partition p;
    p.seed = seed;
    double q_prev = 0.0;  // singletons on the original graph score 0 only by accident; track real value
    {
        LevelState init;
        init.comm.resize(static_cast<std::size_t>(wg.n));
        std::iota(init.comm.begin(), init.comm.end(), 0);
        init.sum_tot = wg.wdeg;
        init.sum_in.assign(static_cast<std::size_t>(wg.n), 0.0);
        for (int v = 0; v < wg.n; ++v)
            init.sum_in[static_cast<std::size_t>(v)] = 2.0 * wg.self[static_cast<std::size_t>(v)];
        q_prev = level_quality(wg, init);
    }

    while (true) {
        LevelState st;
        st.comm.resize(static_cast<std::size_t>(wg.n));
        std::iota(st.comm.begin(), st.comm.end(), 0);
        st.sum_tot = wg.wdeg;
        st.sum_in.assign(static_cast<std::size_t>(wg.n), 0.0);
        for (int v = 0; v < wg.n; ++v)
            st.sum_in[static_cast<std::size_t>(v)] = 2.0 * wg.self[static_cast<std::size_t>(v)];

        bool moved = one_level(wg, st, rng);
        double q_now = level_quality(wg, st);
        p.level_quality.push_back(q_now);

        std::vector<int> renumber;
        WorkGraph next = aggregate(wg, st.comm, renumber);
        for (int& c : flat)
            c = renumber[static_cast<std::size_t>(st.comm[static_cast<std::size_t>(c)])];

        if (!moved || q_now - q_prev <= kGainTolerance || next.n == wg.n) break;
        q_prev = q_now;
        wg = std::move(next);
    }

    // renumber by decreasing community size; ties by smallest member index
    std::vector<int> size_by_id(static_cast<std::size_t>(n), 0);
    std::vector<int> first_member(static_cast<std::size_t>(n), n);
    int id_count = 0;
    for (int v = 0; v < n; ++v) {
        int c = flat[static_cast<std::size_t>(v)];
        if (size_by_id[static_cast<std::size_t>(c)] == 0) ++id_count;
        size_by_id[static_cast<std::size_t>(c)]++;
        first_member[static_cast<std::size_t>(c)] =
            std::min(first_member[static_cast<std::size_t>(c)], v);
    }
    std::vector<int> ids;
    for (int c = 0; c < n; ++c)
        if (size_by_id[static_cast<std::size_t>(c)] > 0) ids.push_back(c);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        if (size_by_id[static_cast<std::size_t>(a)] != size_by_id[static_cast<std::size_t>(b)])
            return size_by_id[static_cast<std::size_t>(a)] > size_by_id[static_cast<std::size_t>(b)];
        return first_member[static_cast<std::size_t>(a)] < first_member[static_cast<std::size_t>(b)];
    });
    std::vector<int> remap(static_cast<std::size_t>(n), -1);
    for (std::size_t i = 0; i < ids.size(); ++i) remap[static_cast<std::size_t>(ids[i])] = static_cast<int>(i);

    p.names = g.nodes();
    p.assignment.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        p.assignment[static_cast<std::size_t>(v)] = remap[static_cast<std::size_t>(flat[static_cast<std::size_t>(v)])];
    p.n_clusters = id_count;
    p.modularity = modularity(g, p.assignment);
    return p;
}

std::vector<int> community_sizes(const Partition& p) {
    std::vector<int> sizes(static_cast<std::size_t>(p.n_clusters), 0);
    for (int c : p.assignment) sizes[static_cast<std::size_t>(c)]++;
    return sizes;
}

double cluster_weight(const Partition& p, std::string_view name) {
    auto it = std::lower_bound(p.names.begin(), p.names.end(), name);
    if (it == p.names.end() || *it != name) return 0.0;
    auto v = static_cast<std::size_t>(it - p.names.begin());
    std::vector<int> sizes = community_sizes(p);
    int c = p.assignment[v];
    return static_cast<double>(sizes[static_cast<std::size_t>(c)]) /
           static_cast<double>(p.names.size());
}

std::vector<CommunityReportRow> community_report_rows(const Partition& p) {
    std::vector<int> sizes = community_sizes(p);
    std::vector<CommunityReportRow> rows;
    rows.reserve(p.names.size());
    for (std::size_t v = 0; v < p.names.size(); ++v) {
        int c = p.assignment[v];
        int size = sizes[static_cast<std::size_t>(c)];
        rows.push_back({p.names[v], c, size,
                        static_cast<double>(size) / static_cast<double>(p.names.size())});
    }
    return rows;
}

}  // namespace versenet

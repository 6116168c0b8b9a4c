#pragma once

#include <iosfwd>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "versenet/community.hpp"
#include "versenet/graph.hpp"

namespace versenet {

// Optional community annotation for the GraphML/DOT exporters: a
// `community` id per node and a `highlight` flag on every node whose
// community contains a focus name. With no annotation the exporters emit
// the plain weighted graph.
struct GraphAnnotation {
    const Partition* partition = nullptr;
    std::set<int> highlighted_communities;
};

// Communities of the focus names; unknown names produce a warning line and
// are skipped.
std::set<int> communities_of(const Partition& p, std::span<const std::string> focus,
                             std::vector<std::string>* warnings = nullptr);

// source,target,weight; the pipeline interchange format.
void write_edge_csv(std::ostream& out, const CoocGraph& g);
CoocGraph read_edge_csv(std::istream& in);
CoocGraph read_edge_csv_file(const std::string& path);

// {"nodes": [...], "edges": [{"s":..,"t":..,"w":..}]}
void write_graph_json(std::ostream& out, const CoocGraph& g);

// GraphML 1.0 with a `weight` edge attribute (+ community/highlight node
// attributes when annotated).
void write_graphml(std::ostream& out, const CoocGraph& g, const GraphAnnotation& ann = {});

// Graphviz DOT with weight and penwidth edge attributes.
void write_dot(std::ostream& out, const CoocGraph& g, const GraphAnnotation& ann = {});

}  // namespace versenet

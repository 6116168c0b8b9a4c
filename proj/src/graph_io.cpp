#include "versenet/graph_io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "versenet/errors.hpp"
#include "versenet/format.hpp"

namespace versenet {

std::set<int> communities_of(const Partition& p, std::span<const std::string> focus,
                             std::vector<std::string>* warnings) {
    std::set<int> result;
    for (const std::string& name : focus) {
        auto it = std::lower_bound(p.names.begin(), p.names.end(), name);
        if (it == p.names.end() || *it != name) {
            if (warnings) warnings->push_back("focus name \"" + name + "\" is not a graph node; skipped");
            continue;
        }
        result.insert(p.assignment[static_cast<std::size_t>(it - p.names.begin())]);
    }
    return result;
}

namespace {

void require_csv_safe(const std::string& name) {
    if (name.find_first_of(",\"\n\r") != std::string::npos)
        throw_data("edge csv: node name \"" + name + "\" contains a delimiter character");
}

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    out += '"';
    return out;
}

}  // namespace

void write_edge_csv(std::ostream& out, const CoocGraph& g) {
    out << "source,target,weight\n";
    for (const Edge& e : g.edges()) {
        require_csv_safe(g.name(e.a));
        require_csv_safe(g.name(e.b));
        out << g.name(e.a) << ',' << g.name(e.b) << ',' << e.weight << '\n';
    }
}

CoocGraph read_edge_csv(std::istream& in) {
    std::string line;
    std::vector<std::tuple<std::string, std::string, std::int64_t>> edges;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line_no == 1 && line == "source,target,weight") continue;
        std::size_t c1 = line.find(',');
        std::size_t c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw_data("edge csv: line " + std::to_string(line_no) + ": expected source,target,weight");
        std::string a = line.substr(0, c1);
        std::string b = line.substr(c1 + 1, c2 - c1 - 1);
        std::string w = line.substr(c2 + 1);
        std::int64_t weight = 0;
        try {
            weight = std::stoll(w);
        } catch (const std::exception&) {
            throw_data("edge csv: line " + std::to_string(line_no) + ": bad weight \"" + w + "\"");
        }
        edges.emplace_back(std::move(a), std::move(b), weight);
    }
    return CoocGraph::from_edges(std::move(edges));
}

CoocGraph read_edge_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw_data("edge csv: cannot open \"" + path + "\" (run the build step first?)");
    return read_edge_csv(in);
}

void write_graph_json(std::ostream& out, const CoocGraph& g) {
    nlohmann::json j;
    j["nodes"] = g.nodes();
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : g.edges()) {
        j["edges"].push_back({{"s", g.name(e.a)}, {"t", g.name(e.b)}, {"w", e.weight}});
    }
    out << j.dump(2) << '\n';
}

void write_graphml(std::ostream& out, const CoocGraph& g, const GraphAnnotation& ann) {
    const bool annotated = ann.partition != nullptr;
    const bool highlight = annotated && !ann.highlighted_communities.empty();
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"w\" for=\"edge\" attr.name=\"weight\" attr.type=\"long\"/>\n";
    if (annotated)
        out << "  <key id=\"c\" for=\"node\" attr.name=\"community\" attr.type=\"int\"/>\n";
    if (highlight)
        out << "  <key id=\"h\" for=\"node\" attr.name=\"highlight\" attr.type=\"boolean\"/>\n";
    out << "  <graph id=\"G\" edgedefault=\"undirected\">\n";
    for (int v = 0; v < g.node_count(); ++v) {
        out << "    <node id=\"" << xml_escape(g.name(v)) << "\"";
        if (!annotated) {
            out << "/>\n";
            continue;
        }
        int c = ann.partition->assignment[static_cast<std::size_t>(v)];
        out << ">\n      <data key=\"c\">" << c << "</data>\n";
        if (highlight) {
            bool on = ann.highlighted_communities.count(c) > 0;
            out << "      <data key=\"h\">" << (on ? "true" : "false") << "</data>\n";
        }
        out << "    </node>\n";
    }
    for (const Edge& e : g.edges()) {
        out << "    <edge source=\"" << xml_escape(g.name(e.a)) << "\" target=\""
            << xml_escape(g.name(e.b)) << "\"><data key=\"w\">" << e.weight << "</data></edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

void write_dot(std::ostream& out, const CoocGraph& g, const GraphAnnotation& ann) {
    const bool annotated = ann.partition != nullptr;
    const bool highlight = annotated && !ann.highlighted_communities.empty();
    out << "graph cooccurrence {\n";
    for (int v = 0; v < g.node_count(); ++v) {
        out << "  " << dot_quote(g.name(v));
        if (annotated) {
            int c = ann.partition->assignment[static_cast<std::size_t>(v)];
            out << " [community=" << c;
            if (highlight)
                out << ", highlight=" << (ann.highlighted_communities.count(c) ? "true" : "false");
            out << "]";
        }
        out << ";\n";
    }
    for (const Edge& e : g.edges()) {
        double penwidth = 1.0 + std::log2(static_cast<double>(e.weight));
        out << "  " << dot_quote(g.name(e.a)) << " -- " << dot_quote(g.name(e.b)) << " [weight="
            << e.weight << ", penwidth=" << fmt_double(penwidth) << "];\n";
    }
    out << "}\n";
}

}  // namespace versenet

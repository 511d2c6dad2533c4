#include <sstream>

#include "repute/ingest.hpp"

namespace repute {

namespace {

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string label_of(const DirectedGraph& g, const std::vector<std::string>* labels,
                     std::uint32_t index) {
    if (labels) return (*labels)[index];
    return std::to_string(g.id_of(index));
}

}  // namespace

GraphFormat parse_graph_format(const std::string& name) {
    if (name == "dot") return GraphFormat::Dot;
    if (name == "graphml") return GraphFormat::GraphML;
    if (name == "edge-csv") return GraphFormat::EdgeCsv;
    throw UnsupportedFormat(name);
}

std::string export_graph(const DirectedGraph& g, GraphFormat format,
                         const std::vector<std::string>* labels,
                         const NodeScores* scores) {
    std::ostringstream out;
    const std::size_t n = g.vertex_count();
    switch (format) {
        case GraphFormat::Dot: {
            out << "digraph G {\n";
            for (std::uint32_t v = 0; v < n; ++v) {
                out << "  \"" << dot_escape(label_of(g, labels, v)) << "\";\n";
            }
            for (std::uint32_t u = 0; u < n; ++u) {
                for (std::uint32_t v : g.successors(u)) {
                    out << "  \"" << dot_escape(label_of(g, labels, u)) << "\" -> \""
                        << dot_escape(label_of(g, labels, v)) << "\";\n";
                }
            }
            out << "}\n";
            break;
        }
        case GraphFormat::GraphML: {
            out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
            if (scores) {
                out << "  <key id=\"d0\" for=\"node\" attr.name=\"in_degree\" "
                       "attr.type=\"long\"/>\n"
                    << "  <key id=\"d1\" for=\"node\" attr.name=\"out_degree\" "
                       "attr.type=\"long\"/>\n"
                    << "  <key id=\"d2\" for=\"node\" attr.name=\"closeness\" "
                       "attr.type=\"double\"/>\n"
                    << "  <key id=\"d3\" for=\"node\" attr.name=\"betweenness\" "
                       "attr.type=\"double\"/>\n"
                    << "  <key id=\"d4\" for=\"node\" attr.name=\"pagerank\" "
                       "attr.type=\"double\"/>\n";
            }
            out << "  <graph id=\"G\" edgedefault=\"directed\">\n";
            for (std::uint32_t v = 0; v < n; ++v) {
                const std::string id = xml_escape(label_of(g, labels, v));
                if (!scores) {
                    out << "    <node id=\"" << id << "\"/>\n";
                    continue;
                }
                out << "    <node id=\"" << id << "\">\n"
                    << "      <data key=\"d0\">" << scores->in_degree[v] << "</data>\n"
                    << "      <data key=\"d1\">" << scores->out_degree[v] << "</data>\n"
                    << "      <data key=\"d2\">" << format_double(scores->closeness[v])
                    << "</data>\n"
                    << "      <data key=\"d3\">" << format_double(scores->betweenness[v])
                    << "</data>\n"
                    << "      <data key=\"d4\">" << format_double(scores->pagerank[v])
                    << "</data>\n"
                    << "    </node>\n";
            }
            for (std::uint32_t u = 0; u < n; ++u) {
                for (std::uint32_t v : g.successors(u)) {
                    out << "    <edge source=\"" << xml_escape(label_of(g, labels, u))
                        << "\" target=\"" << xml_escape(label_of(g, labels, v))
                        << "\"/>\n";
                }
            }
            out << "  </graph>\n</graphml>\n";
            break;
        }
        case GraphFormat::EdgeCsv: {
            out << "source,target\n";
            for (std::uint32_t u = 0; u < n; ++u) {
                for (std::uint32_t v : g.successors(u)) {
                    out << label_of(g, labels, u) << ',' << label_of(g, labels, v)
                        << '\n';
                }
            }
            break;
        }
    }
    return out.str();
}

}  // namespace repute

#include "partilab/edgelist.hpp"

#include "partilab/errors.hpp"

#include <fstream>
#include <sstream>

namespace partilab {

Graph read_edge_list(std::istream& in)
{
    std::string line;
    int lineno = 0;
    int n = -1, m = -1;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag))
            continue;
        if (tag == "c")
            continue;
        if (tag == "p") {
            std::string kind;
            if (!(ls >> kind >> n >> m) || kind != "graph" || n < 0 || m < 0)
                throw error(errc::syntax_error,
                    "line " + std::to_string(lineno) + ": bad problem line");
            continue;
        }
        if (tag == "e") {
            if (n < 0)
                throw error(errc::syntax_error,
                    "line " + std::to_string(lineno) + ": edge before problem line");
            int u, v;
            if (!(ls >> u >> v))
                throw error(errc::syntax_error,
                    "line " + std::to_string(lineno) + ": bad edge line");
            edges.emplace_back(u - 1, v - 1);
            continue;
        }
        throw error(errc::syntax_error,
            "line " + std::to_string(lineno) + ": unknown line tag '" + tag + "'");
    }
    if (n < 0)
        throw error(errc::syntax_error, "missing problem line");
    if (static_cast<int>(edges.size()) != m)
        throw error(errc::syntax_error, "edge count does not match header");
    return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw error(errc::syntax_error, "cannot open " + path);
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g)
{
    out << "p graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

std::string to_edge_list(const Graph& g)
{
    std::ostringstream out;
    write_edge_list(out, g);
    return out.str();
}

} // namespace partilab

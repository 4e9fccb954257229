#include "secg/io.hpp"

#include <sstream>
#include <vector>

namespace secg {

namespace {

// Splits into lines, keeping 1-based numbering for diagnostics.
std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in(text);
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        if (line[start] == '#') continue;
        size_t end = line.find_last_not_of(" \t\r");
        out.emplace_back(no, line.substr(start, end - start + 1));
    }
    return out;
}

}  // namespace

ParsedGraph parse_graph_text(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError(1, "empty input");

    size_t idx = 0;
    {
        std::istringstream in(lines[idx].second);
        std::string tag;
        int version = 0;
        if (!(in >> tag >> version) || tag != "secg" || version != 1)
            throw ParseError(lines[idx].first, "expected header 'secg 1'");
        ++idx;
    }
    if (idx >= lines.size()) throw ParseError(lines.back().first, "missing 'v' line");
    int n = -1;
    {
        std::istringstream in(lines[idx].second);
        std::string tag;
        if (!(in >> tag >> n) || tag != "v" || n < 0)
            throw ParseError(lines[idx].first, "expected 'v <count>'");
        ++idx;
    }

    Graph g(n);
    std::vector<std::vector<int>> rot(n);
    std::vector<char> has_rot(n, 0);
    bool any_rot = false;
    for (; idx < lines.size(); ++idx) {
        int line_no = lines[idx].first;
        std::istringstream in(lines[idx].second);
        std::string tag;
        in >> tag;
        if (tag == "e") {
            int u, w;
            if (!(in >> u >> w)) throw ParseError(line_no, "expected 'e <u> <w>'");
            std::string rest;
            if (in >> rest) throw ParseError(line_no, "trailing tokens on edge line");
            try {
                g.add_edge(u, w);
            } catch (const std::invalid_argument& err) {
                throw ParseError(line_no, err.what());
            }
        } else if (tag == "r") {
            std::string vtok;
            if (!(in >> vtok) || vtok.back() != ':')
                throw ParseError(line_no, "expected 'r <v>: <neighbors>'");
            int v;
            try {
                v = std::stoi(vtok.substr(0, vtok.size() - 1));
            } catch (...) {
                throw ParseError(line_no, "bad vertex id on rotation line");
            }
            if (v < 0 || v >= n)
                throw ParseError(line_no, "rotation vertex out of range");
            if (has_rot[v]) throw ParseError(line_no, "duplicate rotation line");
            has_rot[v] = 1;
            any_rot = true;
            int w;
            while (in >> w) {
                if (w < 0 || w >= n)
                    throw ParseError(line_no, "rotation neighbor out of range");
                rot[v].push_back(w);
            }
        } else {
            throw ParseError(line_no, "unknown line '" + tag + "'");
        }
    }

    ParsedGraph out{std::move(g), std::nullopt};
    if (any_rot) {
        for (int v = 0; v < n; ++v)
            if (!has_rot[v] && out.graph.degree(v) > 0)
                throw ParseError(lines.back().first,
                                 "rotation lines must cover every vertex (missing " +
                                     std::to_string(v) + ")");
        try {
            out.embedding = PlaneEmbedding(out.graph, std::move(rot));
        } catch (const std::invalid_argument& err) {
            throw ParseError(lines.back().first, err.what());
        }
    }
    return out;
}

std::string write_graph_text(const Graph& g) {
    std::ostringstream out;
    out << "secg 1\n";
    out << "v " << g.vertex_count() << "\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        out << "e " << u << " " << v << "\n";
    }
    return out.str();
}

std::string write_graph_text(const PlaneEmbedding& e) {
    std::ostringstream out;
    out << write_graph_text(e.graph());
    for (int v = 0; v < e.graph().vertex_count(); ++v) {
        out << "r " << v << ":";
        for (int w : e.rotation(v)) out << " " << w;
        out << "\n";
    }
    return out.str();
}

std::string write_coloring_text(const Graph& g, const StrongColoring& c) {
    std::ostringstream out;
    out << "palette " << c.palette << "\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!c.assigned(e)) continue;
        auto [u, v] = g.edge(e);
        out << u << " " << v << " " << c.color[e] + 1 << "\n";
    }
    return out.str();
}

StrongColoring parse_coloring_text(const Graph& g, const std::string& text) {
    auto lines = content_lines(text);
    StrongColoring c = StrongColoring::empty(g.edge_count(), 0);
    int max_color = -1;
    bool palette_given = false;
    for (const auto& [line_no, line] : lines) {
        std::istringstream in(line);
        if (line.rfind("palette", 0) == 0) {
            std::string tag;
            int p;
            if (!(in >> tag >> p) || p < 1)
                throw ParseError(line_no, "expected 'palette <size>'");
            c.palette = p;
            palette_given = true;
            continue;
        }
        int u, v, color;
        if (!(in >> u >> v >> color))
            throw ParseError(line_no, "expected '<u> <v> <color>'");
        if (color < 1) throw ParseError(line_no, "colors are 1-based and positive");
        if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
            throw ParseError(line_no, "vertex id out of range");
        int e = g.edge_id(u, v);
        if (e < 0) throw ParseError(line_no, "no such edge in the graph");
        if (c.assigned(e)) throw ParseError(line_no, "edge colored twice");
        c.color[e] = color - 1;
        max_color = std::max(max_color, color - 1);
    }
    if (!palette_given) c.palette = max_color + 1;
    if (max_color >= c.palette)
        throw ParseError(lines.empty() ? 1 : lines.back().first,
                         "color exceeds declared palette");
    return c;
}

}  // namespace secg

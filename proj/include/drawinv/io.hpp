#ifndef DRAWINV_IO_HPP
#define DRAWINV_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "drawinv/cochain.hpp"
#include "drawinv/combinatorics.hpp"
#include "drawinv/drawing.hpp"
#include "drawinv/tverberg.hpp"

namespace drawinv {

namespace detail {

inline std::vector<std::pair<int, std::string>> content_lines(const std::string& text) {
    std::vector<std::pair<int, std::string>> out;
    std::stringstream ss(text);
    std::string line;
    int ln = 0;
    while (std::getline(ss, line)) {
        ++ln;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r");
        out.emplace_back(ln, line.substr(a, b - a + 1));
    }
    return out;
}

inline std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace detail

// --- point lists: one `x y` pair of rationals per line -----------------------

inline std::vector<Point> parse_points(const std::string& text) {
    std::vector<Point> pts;
    for (const auto& [ln, line] : detail::content_lines(text)) {
        std::stringstream ss(line);
        std::string xs, ys, extra;
        if (!(ss >> xs >> ys) || (ss >> extra))
            throw parse_error("expected `x y`", ln);
        try {
            pts.emplace_back(rat_from_string(xs), rat_from_string(ys));
        } catch (const error& e) {
            throw parse_error(e.what(), ln);
        }
    }
    return pts;
}

inline std::string emit_points(const std::vector<Point>& pts) {
    std::string out;
    for (const Point& p : pts) out += point_to_string(p) + "\n";
    return out;
}

// --- graphs and 2-hypergraphs ------------------------------------------------

inline Graph parse_graph(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw parse_error("empty graph file", 0);
    int n = 0;
    {
        std::stringstream ss(lines[0].second);
        if (!(ss >> n) || n < 1) throw parse_error("first line must be the vertex count",
                                                   lines[0].first);
    }
    std::vector<EdgeId> edges;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::stringstream ss(lines[i].second);
        int a, b;
        std::string extra;
        if (!(ss >> a >> b) || (ss >> extra)) throw parse_error("expected `a b`", lines[i].first);
        if (a < 1 || b < 1 || a > n || b > n || a == b)
            throw parse_error("bad edge", lines[i].first);
        edges.push_back(make_edge(a, b));
    }
    return Graph(n, std::move(edges));
}

inline std::string emit_graph(const Graph& g) {
    std::string out = std::to_string(g.n) + "\n";
    for (const EdgeId& e : g.edges)
        out += std::to_string(e[0]) + " " + std::to_string(e[1]) + "\n";
    return out;
}

inline Hypergraph2 parse_hypergraph(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw parse_error("empty hypergraph file", 0);
    int n = 0;
    {
        std::stringstream ss(lines[0].second);
        if (!(ss >> n) || n < 1) throw parse_error("first line must be the vertex count",
                                                   lines[0].first);
    }
    std::vector<FaceId> faces;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::stringstream ss(lines[i].second);
        int a, b, c;
        std::string extra;
        if (!(ss >> a >> b >> c) || (ss >> extra))
            throw parse_error("expected `a b c`", lines[i].first);
        if (a < 1 || b < 1 || c < 1 || a > n || b > n || c > n)
            throw parse_error("bad face", lines[i].first);
        try {
            faces.push_back(make_face(a, b, c));
        } catch (const error& e) {
            throw parse_error(e.what(), lines[i].first);
        }
    }
    return Hypergraph2(n, std::move(faces));
}

inline std::string emit_hypergraph(const Hypergraph2& k) {
    std::string out = std::to_string(k.n) + "\n";
    for (const FaceId& f : k.faces)
        out += std::to_string(f[0]) + " " + std::to_string(f[1]) + " " +
               std::to_string(f[2]) + "\n";
    return out;
}

// --- drawings -----------------------------------------------------------------
// format: vertex count, then `vertex i: x y` lines, then `edge a b: x1 y1 ; ...`
// with the interior bend chain after the colon (possibly empty), and optional
// `face a b c` lines when the drawing is of a 2-hypergraph's skeleton.

inline Drawing parse_drawing(const std::string& text) {
    auto lines = detail::content_lines(text);
    if (lines.empty()) throw parse_error("empty drawing file", 0);
    int n = 0;
    {
        std::stringstream ss(lines[0].second);
        if (!(ss >> n) || n < 1) throw parse_error("first line must be the vertex count",
                                                   lines[0].first);
    }
    std::vector<Point> vpos(n + 1);
    std::vector<bool> seen(n + 1, false);
    std::vector<EdgeId> edges;
    std::map<EdgeId, std::vector<Point>> bends;
    std::vector<FaceId> faces;
    bool any_face = false;

    for (std::size_t i = 1; i < lines.size(); ++i) {
        int ln = lines[i].first;
        std::stringstream ss(lines[i].second);
        std::string kind;
        ss >> kind;
        if (kind == "vertex") {
            int v;
            std::string colon, xs, ys;
            if (!(ss >> v >> colon >> xs >> ys) || colon != ":")
                throw parse_error("expected `vertex i: x y`", ln);
            if (v < 1 || v > n || seen[v]) throw parse_error("bad vertex id", ln);
            vpos[v] = Point(rat_from_string(xs), rat_from_string(ys));
            seen[v] = true;
        } else if (kind == "edge") {
            int a, b;
            std::string colon;
            if (!(ss >> a >> b >> colon) || colon != ":")
                throw parse_error("expected `edge a b: ...`", ln);
            EdgeId e = make_edge(a, b);
            edges.push_back(e);
            std::vector<Point> chain;
            std::string xs, ys;
            while (ss >> xs) {
                if (xs == ";") continue;
                if (!(ss >> ys)) throw parse_error("dangling coordinate", ln);
                chain.emplace_back(rat_from_string(xs), rat_from_string(ys));
            }
            // bends listed from a to b for the sorted edge
            bends[e] = std::move(chain);
        } else if (kind == "face") {
            int a, b, c;
            std::string colon;
            ss >> a >> b >> c;
            if (!ss) throw parse_error("expected `face a b c`", ln);
            faces.push_back(make_face(a, b, c));
            any_face = true;
        } else {
            throw parse_error("unknown record '" + kind + "'", ln);
        }
    }
    for (int v = 1; v <= n; ++v)
        if (!seen[v]) throw parse_error("missing vertex " + std::to_string(v), 0);

    Graph g(n, edges);
    std::map<EdgeId, Polyline> lines_map;
    for (const EdgeId& e : g.edges) {
        std::vector<Point> chain{vpos[e[0]]};
        for (const Point& p : bends[e]) chain.push_back(p);
        chain.push_back(vpos[e[1]]);
        lines_map.emplace(e, Polyline(std::move(chain), false));
    }
    if (any_face) {
        Hypergraph2 k(n, faces);
        if (k.edges() != g.edges)
            throw parse_error("edge records do not match the faces' skeleton", 0);
        return make_drawing(k, std::move(vpos), std::move(lines_map));
    }
    return make_drawing(g, std::move(vpos), std::move(lines_map));
}

inline std::string emit_drawing(const Drawing& d) {
    std::string out = std::to_string(d.skeleton.n) + "\n";
    for (int v = 1; v <= d.skeleton.n; ++v)
        out += "vertex " + std::to_string(v) + ": " + point_to_string(d.at(v)) + "\n";
    for (const EdgeId& e : d.skeleton.edges) {
        out += "edge " + std::to_string(e[0]) + " " + std::to_string(e[1]) + ":";
        const Polyline& pl = d.line(e);
        for (std::size_t i = 1; i + 1 < pl.vertices.size(); ++i) {
            if (i > 1) out += " ;";
            out += " " + point_to_string(pl.vertices[i]);
        }
        out += "\n";
    }
    if (d.hyper)
        for (const FaceId& f : d.hyper->faces)
            out += "face " + std::to_string(f[0]) + " " + std::to_string(f[1]) + " " +
                   std::to_string(f[2]) + "\n";
    return out;
}

// --- sign maps ------------------------------------------------------------------
// one line per spherical partition: `({a,b},{c,d},{e,f,7}) = +1`

inline std::string partition_to_string(const Partition& p) {
    std::string out = "(";
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
        if (b) out += ",";
        out += "{";
        for (std::size_t i = 0; i < p.blocks[b].size(); ++i) {
            if (i) out += ",";
            out += std::to_string(p.blocks[b][i]);
        }
        out += "}";
    }
    return out + ")";
}

inline Partition partition_from_string(const std::string& s, int ln = 0) {
    Partition p;
    std::size_t i = 0;
    auto expect = [&](char c) {
        if (i >= s.size() || s[i] != c)
            throw parse_error(std::string("expected '") + c + "' in partition", ln);
        ++i;
    };
    expect('(');
    while (i < s.size() && s[i] != ')') {
        if (s[i] == ',') ++i;
        expect('{');
        std::vector<int> block;
        while (i < s.size() && s[i] != '}') {
            if (s[i] == ',') ++i;
            std::size_t j = i;
            while (j < s.size() && isdigit(static_cast<unsigned char>(s[j]))) ++j;
            if (j == i) throw parse_error("expected element in partition block", ln);
            block.push_back(std::stoi(s.substr(i, j - i)));
            i = j;
        }
        expect('}');
        std::sort(block.begin(), block.end());
        p.blocks.push_back(std::move(block));
    }
    expect(')');
    return p;
}

inline std::string emit_sign_map(const SignMap& s) {
    std::string out;
    for (const Partition& p : spherical_partitions_7_in_t3())
        out += partition_to_string(p) + " = " + (s.at(p) > 0 ? "+1" : "-1") + "\n";
    return out;
}

inline SignMap parse_sign_map(const std::string& text) {
    SignMap s;
    for (const auto& [ln, line] : detail::content_lines(text)) {
        std::string t;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) t += c;
        auto eq = t.find('=');
        if (eq == std::string::npos) throw parse_error("expected `partition = sign`", ln);
        Partition p = partition_from_string(t.substr(0, eq), ln);
        std::string v = t.substr(eq + 1);
        if (v != "+1" && v != "-1" && v != "1") throw parse_error("sign must be +1 or -1", ln);
        if (!s.values.emplace(p, v == "-1" ? -1 : +1).second)
            throw parse_error("duplicate partition", ln);
    }
    validate_sign_map(s);  // rejects missing entries
    return s;
}

}  // namespace drawinv

#endif

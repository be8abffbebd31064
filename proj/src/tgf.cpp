#include "topograph/tgf.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace topograph {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            if (!current.empty() && current.back() == '\r') current.pop_back();
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(ch);
        }
    }
    if (!current.empty()) {
        if (current.back() == '\r') current.pop_back();
        lines.push_back(current);
    }
    return lines;
}

std::vector<std::string> tokenize(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream in(line);
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    return tokens;
}

double parse_real(const std::string& tok, int line_number) {
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError(line_number, "bad coordinate '" + tok + "'");
    return value;
}

std::string format_real(double value) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double distance(Vec2 a, Vec2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

} // namespace

TopoGraph parse(const std::string& text) {
    TopoGraph g;
    bool saw_header = false;

    std::vector<std::string> lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int line_number = static_cast<int>(i) + 1;
        std::string trimmed = trim(lines[i]);
        if (trimmed.empty() || trimmed[0] == '#') continue;

        std::vector<std::string> tokens = tokenize(trimmed);
        const std::string& directive = tokens[0];

        if (directive == "g") {
            if (saw_header) throw ParseError(line_number, "second g line");
            saw_header = true;
            g.set_name(trim(trimmed.substr(1)));
            continue;
        }
        if (!saw_header) throw ParseError(line_number, "expected a g line first");

        if (directive == "v") {
            if (tokens.size() != 2 && tokens.size() != 4)
                throw ParseError(line_number, "v takes an id and optionally two coordinates");
            if (g.has_vertex(tokens[1]))
                throw ParseError(line_number, "duplicate vertex id '" + tokens[1] + "'");
            if (tokens.size() == 2) {
                g.add_vertex(tokens[1]);
            } else {
                g.add_vertex(tokens[1], Vec2{parse_real(tokens[2], line_number),
                                             parse_real(tokens[3], line_number)});
            }
        } else if (directive == "e") {
            if (tokens.size() != 4)
                throw ParseError(line_number, "e takes an id and two endpoint ids");
            if (g.has_edge(tokens[1]))
                throw ParseError(line_number, "duplicate edge id '" + tokens[1] + "'");
            if (!g.has_vertex(tokens[2]))
                throw ParseError(line_number, "dangling endpoint '" + tokens[2] + "'");
            if (!g.has_vertex(tokens[3]))
                throw ParseError(line_number, "dangling endpoint '" + tokens[3] + "'");
            g.add_edge(tokens[1], tokens[2], tokens[3]);
        } else {
            throw ParseError(line_number, "unknown directive '" + directive + "'");
        }
    }

    if (!saw_header) throw ParseError(1, "missing g line");
    return g;
}

std::string serialize(const TopoGraph& g) {
    std::ostringstream out;
    out << "g " << g.name() << "\n";
    for (const auto& [v, pos] : g.vertices()) {
        out << "v " << v;
        if (pos) out << " " << format_real(pos->x) << " " << format_real(pos->y);
        out << "\n";
    }
    for (const auto& [id, e] : g.edges()) out << "e " << id << " " << e.u << " " << e.v << "\n";
    return out.str();
}

TopoGraph from_polylines(const std::vector<Polyline>& ps, double tol, const std::string& name) {
    if (tol <= 0.0) throw Error("tolerance must be positive");
    for (const Polyline& p : ps) {
        if (p.points.size() < 2) throw Error("polyline needs at least two points");
        for (std::size_t i = 0; i + 1 < p.points.size(); ++i)
            if (p.points[i] == p.points[i + 1])
                throw Error("polyline has two equal consecutive points");
    }

    // Single-link clustering of stroke endpoints: first/last points only.
    struct Endpoint {
        std::size_t polyline;
        bool last;
        Vec2 at;
    };
    std::vector<Endpoint> endpoints;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        endpoints.push_back({i, false, ps[i].points.front()});
        endpoints.push_back({i, true, ps[i].points.back()});
    }

    std::vector<std::size_t> cluster(endpoints.size());
    for (std::size_t i = 0; i < cluster.size(); ++i) cluster[i] = i;
    auto find = [&cluster](std::size_t a) {
        while (cluster[a] != a) {
            cluster[a] = cluster[cluster[a]];
            a = cluster[a];
        }
        return a;
    };
    for (std::size_t i = 0; i < endpoints.size(); ++i)
        for (std::size_t j = i + 1; j < endpoints.size(); ++j)
            if (distance(endpoints[i].at, endpoints[j].at) <= tol)
                cluster[find(i)] = find(j);

    TopoGraph g(name);

    // One junction vertex per cluster, named after its lowest endpoint index.
    std::map<std::size_t, VertexId> junction;
    for (std::size_t i = 0; i < endpoints.size(); ++i) {
        std::size_t root = find(i);
        if (junction.count(root)) continue;
        VertexId id = "j" + std::to_string(junction.size() + 1);
        g.add_vertex(id, endpoints[i].at);
        junction.emplace(root, id);
    }

    for (std::size_t i = 0; i < ps.size(); ++i) {
        const std::vector<Vec2>& pts = ps[i].points;
        std::vector<VertexId> chain;
        chain.push_back(junction.at(find(2 * i)));
        for (std::size_t k = 1; k + 1 < pts.size(); ++k) {
            VertexId id = "p" + std::to_string(i + 1) + "." + std::to_string(k);
            g.add_vertex(id, pts[k]);
            chain.push_back(id);
        }
        chain.push_back(junction.at(find(2 * i + 1)));
        for (std::size_t k = 0; k + 1 < chain.size(); ++k) {
            EdgeId id = "s" + std::to_string(i + 1) + "." + std::to_string(k + 1);
            g.add_edge(id, chain[k], chain[k + 1]);
        }
    }
    return g;
}

std::vector<Polyline> parse_paths(const std::string& text) {
    std::vector<Polyline> out;
    std::vector<std::string> lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        int line_number = static_cast<int>(i) + 1;
        std::string trimmed = trim(lines[i]);
        if (trimmed.empty() || trimmed[0] == '#') continue;

        Polyline p;
        for (const std::string& tok : tokenize(trimmed)) {
            std::size_t comma = tok.find(',');
            if (comma == std::string::npos)
                throw ParseError(line_number, "expected x,y but got '" + tok + "'");
            p.points.push_back(Vec2{parse_real(tok.substr(0, comma), line_number),
                                    parse_real(tok.substr(comma + 1), line_number)});
        }
        if (p.points.size() < 2)
            throw ParseError(line_number, "polyline needs at least two points");
        out.push_back(std::move(p));
    }
    return out;
}

double default_tolerance(const std::vector<Polyline>& ps) {
    bool any = false;
    double min_x = 0, min_y = 0, max_x = 0, max_y = 0;
    for (const Polyline& p : ps) {
        for (Vec2 pt : p.points) {
            if (!any) {
                min_x = max_x = pt.x;
                min_y = max_y = pt.y;
                any = true;
            } else {
                min_x = std::min(min_x, pt.x);
                max_x = std::max(max_x, pt.x);
                min_y = std::min(min_y, pt.y);
                max_y = std::max(max_y, pt.y);
            }
        }
    }
    double diagonal = std::hypot(max_x - min_x, max_y - min_y);
    return diagonal * 1e-6;
}

} // namespace topograph

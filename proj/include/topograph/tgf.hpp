#pragma once

#include <string>
#include <vector>

#include "topograph/graph.hpp"

namespace topograph {

struct ParseError : Error {
    ParseError(int line_number, const std::string& message)
        : Error("line " + std::to_string(line_number) + ": " + message), line(line_number) {}
    int line;
};

// Text format, one record per line:
//
//   g <name>            exactly one, first; the rest of the line is the name
//   v <id> [<x> <y>]    vertex, optional display coordinates
//   e <id> <u> <v>      edge between declared vertices (u == v is a loop)
//   # comment
//
// Ids are ASCII tokens without whitespace. Blank lines are ignored. LF
// newlines, with or without a trailing one. Unknown directives, duplicate
// ids and dangling endpoints are errors carrying the offending line number.
TopoGraph parse(const std::string& text);

// Deterministic inverse: one g line, vertices then edges, each sorted by id,
// coordinates in shortest round-trip decimal form. parse(serialize(g))
// structurally equals g, and equal graphs serialize to identical bytes.
std::string serialize(const TopoGraph& g);

// An open polygonal stroke: at least two points, consecutive points distinct.
struct Polyline {
    std::vector<Vec2> points;
};

// Builds a complex from stroke skeletons. Each polyline becomes a chain of
// edges through degree-2 vertices; first/last points of polylines that lie
// within tol of each other (single-link, transitively) merge into one
// junction vertex. Interior points are never merged and interior crossings
// are not detected — strokes must already be split at junctions.
TopoGraph from_polylines(const std::vector<Polyline>& ps, double tol,
                         const std::string& name = "paths");

// One polyline per line: "x,y x,y ...". Blank lines and # comments ignored.
std::vector<Polyline> parse_paths(const std::string& text);

// Default merge tolerance: 1e-6 of the bounding-box diagonal of all points.
double default_tolerance(const std::vector<Polyline>& ps);

} // namespace topograph

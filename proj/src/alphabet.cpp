#include "topograph/alphabet.hpp"

#include "topograph/homeo.hpp"

namespace topograph {

namespace {

// One stroke with two free ends. Where the glyph bends (C, S, Z, ...) the
// bends are corners, not junctions, so a single edge carries the whole
// stroke.
TopoGraph segment(const std::string& name, Vec2 a, Vec2 b) {
    TopoGraph g(name);
    g.add_vertex("a", a);
    g.add_vertex("b", b);
    g.add_edge("e1", "a", "b");
    return g;
}

// Three free ends meeting at one 3-way junction.
TopoGraph star3(const std::string& name, Vec2 center, Vec2 l1, Vec2 l2, Vec2 l3) {
    TopoGraph g(name);
    g.add_vertex("c", center);
    g.add_vertex("l1", l1);
    g.add_vertex("l2", l2);
    g.add_vertex("l3", l3);
    g.add_edge("e1", "c", "l1");
    g.add_edge("e2", "c", "l2");
    g.add_edge("e3", "c", "l3");
    return g;
}

// One closed curve, written as a 4-cycle of degree-2 corners so that
// reduction has real work to do.
TopoGraph circle4(const std::string& name, Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    TopoGraph g(name);
    g.add_vertex("a", a);
    g.add_vertex("b", b);
    g.add_vertex("c", c);
    g.add_vertex("d", d);
    g.add_edge("e1", "a", "b");
    g.add_edge("e2", "b", "c");
    g.add_edge("e3", "c", "d");
    g.add_edge("e4", "d", "a");
    return g;
}

// Two 3-way junctions joined by a bridge, two free ends at each. H literally;
// K via its spine, with the diagonals attached at two distinct spine points.
TopoGraph h_shape(const std::string& name, Vec2 u, Vec2 v, Vec2 a, Vec2 b, Vec2 c, Vec2 d) {
    TopoGraph g(name);
    g.add_vertex("u", u);
    g.add_vertex("v", v);
    g.add_vertex("a", a);
    g.add_vertex("b", b);
    g.add_vertex("c", c);
    g.add_vertex("d", d);
    g.add_edge("bar", "u", "v");
    g.add_edge("e1", "u", "a");
    g.add_edge("e2", "u", "b");
    g.add_edge("e3", "v", "c");
    g.add_edge("e4", "v", "d");
    return g;
}

// A 3-cycle with pendant edges hung on two distinct cycle vertices: the
// closed counter plus the two strokes that leave it.
TopoGraph a_shape(const std::string& name, Vec2 top, Vec2 j1, Vec2 j2, Vec2 f1, Vec2 f2) {
    TopoGraph g(name);
    g.add_vertex("t", top);
    g.add_vertex("j1", j1);
    g.add_vertex("j2", j2);
    g.add_vertex("f1", f1);
    g.add_vertex("f2", f2);
    g.add_edge("c1", "t", "j1");
    g.add_edge("c2", "t", "j2");
    g.add_edge("c3", "j1", "j2");
    g.add_edge("p1", "j1", "f1");
    g.add_edge("p2", "j2", "f2");
    return g;
}

TopoGraph letter_b() {
    // Theta graph: stem, inner arc and outer arc all join the same two
    // junctions. Every point has order 1, matching the circle's table.
    TopoGraph g("B");
    g.add_vertex("u", Vec2{0.25, 0.95});
    g.add_vertex("v", Vec2{0.25, 0.05});
    g.add_edge("e1", "u", "v");
    g.add_edge("e2", "u", "v");
    g.add_edge("e3", "u", "v");
    return g;
}

TopoGraph letter_p() {
    // 3-cycle (bowl plus upper stem) with the lower stem pendant at the
    // bowl-return junction.
    TopoGraph g("P");
    g.add_vertex("j", Vec2{0.25, 0.5});
    g.add_vertex("t", Vec2{0.25, 0.95});
    g.add_vertex("m", Vec2{0.75, 0.72});
    g.add_vertex("f", Vec2{0.25, 0.0});
    g.add_edge("c1", "j", "t");
    g.add_edge("c2", "t", "m");
    g.add_edge("c3", "m", "j");
    g.add_edge("p1", "j", "f");
    return g;
}

TopoGraph letter_q() {
    // Bowl loop and two tail stubs at one 4-way crossing. A tail that only
    // touched the bowl would give the junction order 2 instead of 3.
    TopoGraph g("Q");
    g.add_vertex("x", Vec2{0.62, 0.18});
    g.add_vertex("t1", Vec2{0.5, 0.3});
    g.add_vertex("t2", Vec2{0.85, -0.08});
    g.add_edge("bowl", "x", "x");
    g.add_edge("e1", "x", "t1");
    g.add_edge("e2", "x", "t2");
    return g;
}

TopoGraph letter_x() {
    TopoGraph g("X");
    g.add_vertex("c", Vec2{0.5, 0.5});
    g.add_vertex("l1", Vec2{0.1, 1.0});
    g.add_vertex("l2", Vec2{0.9, 1.0});
    g.add_vertex("l3", Vec2{0.1, 0.0});
    g.add_vertex("l4", Vec2{0.9, 0.0});
    g.add_edge("e1", "c", "l1");
    g.add_edge("e2", "c", "l2");
    g.add_edge("e3", "c", "l3");
    g.add_edge("e4", "c", "l4");
    return g;
}

TopoGraph letter_enye() {
    // The stroke of N plus a detached tilde: two pieces, each an arc.
    TopoGraph g("Ñ");
    g.add_vertex("a", Vec2{0.15, 0.0});
    g.add_vertex("b", Vec2{0.85, 1.0});
    g.add_vertex("c", Vec2{0.3, 1.25});
    g.add_vertex("d", Vec2{0.7, 1.35});
    g.add_edge("n", "a", "b");
    g.add_edge("tilde", "c", "d");
    return g;
}

std::vector<LetterEntry> build_entries() {
    std::vector<LetterEntry> entries;
    auto add = [&entries](TopoGraph g, std::string notes) {
        std::string name = g.name();
        entries.push_back(LetterEntry{std::move(name), std::move(g), std::move(notes)});
    };

    add(a_shape("A", {0.5, 1.0}, {0.3, 0.4}, {0.7, 0.4}, {0.12, 0.0}, {0.88, 0.0}),
        "counter (apex + crossbar) is the 3-cycle; the legs below the crossbar are the pendants");
    add(letter_b(), "theta graph: the two bowls and the stem bound three arcs between the "
                    "stem's top and bottom junctions");
    add(segment("C", {0.8, 0.88}, {0.8, 0.12}), "open curve, one stroke");
    add(circle4("D", {0.25, 1.0}, {0.72, 0.88}, {0.72, 0.12}, {0.25, 0.0}),
        "stem and bowl close up into a single closed curve");
    add(star3("E", {0.2, 0.5}, {0.82, 1.0}, {0.78, 0.5}, {0.82, 0.0}),
        "top and bottom arms reach the spine at its ends (corners); only the middle arm "
        "makes a junction");
    add(star3("F", {0.2, 0.55}, {0.82, 1.0}, {0.75, 0.55}, {0.2, 0.0}),
        "same junction layout as E minus the bottom arm's stroke length; still one 3-way point");
    add(star3("G", {0.78, 0.38}, {0.78, 0.9}, {0.42, 0.38}, {0.82, 0.12}),
        "the inward bar meets the curve before its end, leaving a short stub; grouped with "
        "E F T Y, which forces the 3-way junction");
    add(h_shape("H", {0.2, 0.5}, {0.8, 0.5}, {0.2, 1.0}, {0.2, 0.0}, {0.8, 1.0}, {0.8, 0.0}),
        "two stems joined by the crossbar");
    add(segment("I", {0.5, 1.0}, {0.5, 0.0}), "single stroke");
    add(segment("J", {0.62, 1.0}, {0.15, 0.12}), "single hooked stroke");
    add(h_shape("K", {0.22, 0.55}, {0.22, 0.45}, {0.22, 1.0}, {0.82, 1.0}, {0.22, 0.0},
                {0.82, 0.0}),
        "the diagonals meet the spine at two distinct points (a single meeting point would "
        "make a 4-way junction and break the pairing with H)");
    add(segment("L", {0.2, 1.0}, {0.8, 0.0}), "two strokes joined at a corner");
    add(segment("M", {0.1, 0.0}, {0.9, 0.0}), "four strokes joined at corners");
    add(segment("N", {0.15, 0.0}, {0.85, 1.0}), "three strokes joined at corners");
    add(circle4("O", {0.5, 1.0}, {0.14, 0.5}, {0.5, 0.0}, {0.86, 0.5}), "closed curve");
    add(letter_p(), "bowl returns to the stem at one junction; the stem continues below it");
    add(letter_q(), "tail crosses the bowl: one 4-way crossing with a stub inside and "
                    "a stub outside");
    add(a_shape("R", {0.2, 1.0}, {0.2, 0.48}, {0.62, 0.48}, {0.2, 0.0}, {0.85, 0.0}),
        "bowl and upper stem form the cycle; lower stem and leg hang from two distinct "
        "junctions (one shared junction would create an order-4 point absent from A)");
    add(segment("S", {0.78, 0.9}, {0.22, 0.1}), "single doubly-curved stroke");
    add(star3("T", {0.5, 1.0}, {0.1, 1.0}, {0.9, 1.0}, {0.5, 0.0}),
        "stem meets the middle of the top bar");
    add(segment("U", {0.2, 1.0}, {0.8, 1.0}), "single curved stroke");
    add(segment("V", {0.1, 1.0}, {0.9, 1.0}), "two strokes joined at the bottom corner");
    add(segment("W", {0.05, 1.0}, {0.95, 1.0}), "four strokes joined at corners");
    add(letter_x(), "two full diagonals crossing once: a 4-way point");
    add(star3("Y", {0.5, 0.55}, {0.1, 1.0}, {0.9, 1.0}, {0.5, 0.0}),
        "the two upper strokes and the stem meet at one 3-way junction");
    add(segment("Z", {0.15, 1.0}, {0.85, 0.0}), "three strokes joined at corners");
    add(letter_enye(), "disjoint union: the N stroke and the tilde never touch");
    return entries;
}

} // namespace

const std::vector<LetterEntry>& letter_entries(bool with_enye) {
    static const std::vector<LetterEntry> all = build_entries();
    static const std::vector<LetterEntry> plain(all.begin(), all.end() - 1);
    return with_enye ? all : plain;
}

std::vector<std::string> builtin_names(bool with_enye) {
    std::vector<std::string> names;
    for (const LetterEntry& entry : letter_entries(with_enye)) names.push_back(entry.name);
    return names;
}

TopoGraph builtin(const std::string& name) {
    const std::string& wanted = (name == "Ntilde") ? "Ñ" : name;
    for (const LetterEntry& entry : letter_entries(true))
        if (entry.name == wanted) return entry.graph;
    throw Error("unknown builtin letter '" + name + "'");
}

std::vector<std::vector<std::string>> classify_builtin_alphabet(bool with_enye) {
    std::vector<TopoGraph> graphs;
    for (const LetterEntry& entry : letter_entries(with_enye)) graphs.push_back(entry.graph);
    return classify(graphs);
}

} // namespace topograph

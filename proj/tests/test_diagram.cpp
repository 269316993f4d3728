#include <doctest.h>

#include <numeric>

#include "dstokes/corpus.hpp"
#include "dstokes/diagram.hpp"

using namespace dstokes;

namespace {
Diagram corpus_diagram(const std::string& name) {
    return parse_diagram(corpus::curve(name).text);
}
} // namespace

TEST_CASE("embedded circle: no crossings, one strand, two regions") {
    Diagram d = corpus_diagram("circle");
    CHECK(d.num_vertices() == 0);
    CHECK(d.num_arcs() == 0);
    CHECK(d.num_regions() == 2);
    CHECK(d.strand_count() == 1);
}

TEST_CASE("figure-eight: counts forced by the Euler relation") {
    Diagram d = corpus_diagram("figure-eight");
    CHECK(d.num_vertices() == 1);
    CHECK(d.num_arcs() == 2);
    CHECK(d.num_faces() == 3);
    CHECK(d.strand_count() == 1);
    // 1 - 2 + 3 == 2 is what the parser enforced.
}

TEST_CASE("face boundary lengths in half-edge incidences") {
    Diagram d = corpus_diagram("figure-eight");
    std::vector<int> lengths;
    for (int f = 0; f < d.num_faces(); ++f)
        lengths.push_back(d.face_boundary_length(f));
    std::sort(lengths.begin(), lengths.end());
    CHECK(lengths == std::vector<int>{2, 2, 4});

    // Tracing partitions the half-edges: orbit sizes sum to the dart count.
    int total = 0;
    for (int f = 0; f < d.num_faces(); ++f)
        total += static_cast<int>(d.face_darts[f].size());
    CHECK(total == d.num_darts());

    Diagram k = corpus_diagram("one-kink");
    CHECK(k.num_faces() == 3);
}

TEST_CASE("cell adjacency keeps slot multiplicity") {
    Diagram d = corpus_diagram("figure-eight");
    auto lists = cells(d);
    REQUIRE(lists.vertices.size() == 1);
    CHECK(lists.vertices[0].faces.size() == 4);
    CHECK(lists.vertices[0].edges.size() == 4);
    // The outer face touches the crossing in two sectors.
    int outer_slots = 0;
    long long outer_id = lists.faces[0].id;
    for (const auto& f : lists.faces)
        if (d.face_of[d.dart_index(f.id)] == d.outer_face)
            outer_id = f.id;
    for (long long f : lists.vertices[0].faces)
        if (f == outer_id)
            ++outer_slots;
    CHECK(outer_slots == 2);
    for (const auto& e : lists.edges)
        CHECK(e.faces.size() == 2);

    // The kink loop edge borders the loop face and the middle face.
    Diagram k = corpus_diagram("one-kink");
    auto klists = cells(k);
    for (const auto& e : klists.edges)
        CHECK(e.faces[0] != e.faces[1]);
}

TEST_CASE("serialization round-trips up to isomorphism") {
    for (const char* name : {"figure-eight", "one-kink", "two-kink"}) {
        Diagram d = corpus_diagram(name);
        Diagram again = parse_diagram(serialize(d));
        CHECK(isomorphic(d, again));
        CHECK(serialize(d) == serialize(again));
    }
    Diagram c = corpus_diagram("circle");
    CHECK(isomorphic(c, parse_diagram(serialize(c))));
}

TEST_CASE("vertex rotations must embed in the sphere") {
    // Swapping one vertex's cyclic order in the two-kink diagram changes the
    // face count away from V+2.
    std::string text = corpus::curve("two-kink").text;
    auto pos = text.find("vertex 1 0 1 2 3");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, 16, "vertex 1 0 2 1 3");
    CHECK_THROWS_AS(parse_diagram(text), ParseError);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_diagram("curve x\nvertex 1 0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_diagram("vertex 1 0 1 2 3\n"), ParseError); // no name
    // missing outer face
    CHECK_THROWS_AS(
        parse_diagram("curve x\nvertex 1 0 1 2 3\ntwin 0 1\ntwin 2 3\nstrand 1 2\nstrand 2 1\n"),
        ParseError);
    // twin fixed point
    CHECK_THROWS_AS(parse_diagram("curve x\nvertex 1 0 1 2 3\ntwin 0 0\n"), ParseError);
    // non-transverse strand pairing
    CHECK_THROWS_AS(parse_diagram("curve x\nvertex 1 0 1 2 3\ntwin 0 1\ntwin 2 3\n"
                                  "strand 1 3\nstrand 3 1\nouter 1\n"),
                    ParseError);
    // unknown loop container
    CHECK_THROWS_AS(parse_diagram("curve x\nloop 0 ccw in in:5\n"), ParseError);
}

TEST_CASE("orientation reversal is an involution and flips loops") {
    Diagram d = corpus_diagram("two-kink");
    Diagram r = reverse_orientation(d);
    CHECK_FALSE(isomorphic(d, r)); // two positive kinks become two negative ones
    CHECK(isomorphic(d, reverse_orientation(r)));

    Diagram c = corpus_diagram("circle");
    CHECK_FALSE(reverse_orientation(c).loops[0].ccw);
}

TEST_CASE("isomorphism distinguishes outer-face choice") {
    Diagram eight = corpus_diagram("figure-eight");
    Diagram kink = corpus_diagram("one-kink");
    // Same abstract rotation system, different unbounded region.
    CHECK_FALSE(isomorphic(eight, kink));
}

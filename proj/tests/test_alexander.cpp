#include <doctest.h>

#include <algorithm>

#include "dstokes/alexander.hpp"
#include "dstokes/corpus.hpp"

using namespace dstokes;

namespace {
Diagram corpus_diagram(const std::string& name) {
    return parse_diagram(corpus::curve(name).text);
}

std::vector<Rational> sorted_values(const Diagram& d, const AlexanderCochain& phi) {
    auto v = phi.value;
    std::sort(v.begin(), v.end());
    return v;
}
} // namespace

TEST_CASE("counterclockwise circle: outer 0, inner 1") {
    Diagram d = corpus_diagram("circle");
    auto phi = compute_alexander(d);
    CHECK(phi.value[d.outer_region()] == Rational(0));
    CHECK(phi.value[d.loop_region(0)] == Rational(1));
}

TEST_CASE("figure-eight lobes carry +1 and -1") {
    Diagram d = corpus_diagram("figure-eight");
    auto phi = compute_alexander(d);
    CHECK(phi.value[d.outer_region()] == Rational(0));
    CHECK(sorted_values(d, phi) == std::vector<Rational>{Rational(-1), Rational(0), Rational(1)});
    auto ix = cell_indices(d, phi);
    CHECK(ix.vertex[0] == Rational(0)); // slots {1,0,0,-1}
}

TEST_CASE("one-kink regions are 0,1,2 and the crossing has index 1") {
    Diagram d = corpus_diagram("one-kink");
    auto phi = compute_alexander(d);
    CHECK(sorted_values(d, phi) == std::vector<Rational>{Rational(0), Rational(1), Rational(2)});
    auto ix = cell_indices(d, phi);
    CHECK(ix.vertex[0] == Rational(1));
    // every edge index is the average of its two sides
    for (int a = 0; a < d.num_arcs(); ++a) {
        CHECK(ix.arc[a] ==
              (phi.value[d.left_region(a)] + phi.value[d.right_region(a)]) / Rational(2));
        CHECK(phi.value[d.left_region(a)] - phi.value[d.right_region(a)] == Rational(1));
    }
}

TEST_CASE("surface-shifted convention subtracts 3/2 everywhere") {
    Diagram d = corpus_diagram("two-kink");
    auto curve = compute_alexander(d, Convention::Curve);
    auto shifted = compute_alexander(d, Convention::SurfaceShifted);
    for (int r = 0; r < d.num_regions(); ++r)
        CHECK(shifted.value[r] == curve.value[r] - Rational(3, 2));
    auto ic = cell_indices(d, curve);
    auto is = cell_indices(d, shifted);
    for (int v = 0; v < d.num_vertices(); ++v)
        CHECK(is.vertex[v] == ic.vertex[v] - Rational(3, 2));
}

TEST_CASE("slot pattern {i+1, i, i, i-1} at every corpus crossing") {
    for (const char* name : {"figure-eight", "one-kink", "two-kink"}) {
        Diagram d = corpus_diagram(name);
        auto phi = compute_alexander(d);
        auto ix = cell_indices(d, phi);
        for (int v = 0; v < d.num_vertices(); ++v) {
            auto slots = vertex_slots(d, phi, v);
            std::sort(slots.begin(), slots.end());
            Rational i = ix.vertex[v];
            CHECK(slots == std::vector<Rational>{i - Rational(1), i, i, i + Rational(1)});
        }
    }
}

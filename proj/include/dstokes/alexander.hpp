#pragma once

#include <vector>

#include "dstokes/diagram.hpp"
#include "dstokes/rational.hpp"

namespace dstokes {

/// Base value of the unbounded region: 0 for plane curves, -3/2 for the
/// slice/surface convention. Only the constant differs; steps are identical.
enum class Convention { Curve, SurfaceShifted };

/// Region labelling obtained by propagating across arcs with the left normal
/// as coorientation: the region on the left of an oriented arc is one more
/// than the region on its right.
struct AlexanderCochain {
    Convention convention = Convention::Curve;
    std::vector<Rational> value; // indexed by region

    Rational base() const {
        return convention == Convention::Curve ? Rational(0) : Rational(-3, 2);
    }
};

AlexanderCochain compute_alexander(const Diagram& d, Convention conv = Convention::Curve);

/// Indices of cells: averages of adjacent region values with slot
/// multiplicity. Region indices are the values themselves; an edge averages
/// its two sides; a vertex averages its four sector slots.
struct CellIndex {
    std::vector<Rational> region; // by region index
    std::vector<Rational> arc;    // by arc index
    std::vector<Rational> vertex; // by vertex index
};

CellIndex cell_indices(const Diagram& d, const AlexanderCochain& phi);

/// The four sector values around a vertex, in rotation order. For a valid
/// numbering this is always {i+1, i, i, i-1} up to rotation, with
/// i = ind(vertex).
std::vector<Rational> vertex_slots(const Diagram& d, const AlexanderCochain& phi, int v);

/// Darts at a vertex in rotation order starting from the smallest id.
std::vector<int> vertex_darts(const Diagram& d, int v);

} // namespace dstokes

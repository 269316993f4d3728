#pragma once

#include <vector>

#include "dstokes/alexander.hpp"
#include "dstokes/diagram.hpp"

namespace dstokes {

/// Local signs that need no base point. Edge germs carry +1 when the arc
/// index is half a step above the vertex index and -1 half a step below;
/// region slots carry -1 when the two germs bounding the sector are both
/// entering or both leaving (those are exactly the two middle-value slots)
/// and +1 otherwise.
struct UntwistedSigns {
    std::vector<int> germ; // per dart
    std::vector<int> slot; // per dart (the sector on its left)
};

UntwistedSigns untwisted_signs(const Diagram& d, const AlexanderCochain& phi);

/// Encoding of the crossing sign picture. With both branch directions drawn
/// upward, the first-traversed branch entering from the lower right gives
/// +1; combinatorially that happens when the second pass leaves along the
/// germ one rotation step clockwise from the first pass's outgoing germ.
/// "Opposite" flips every sign; the identities hold under both because all
/// twisted data scales linearly in epsilon, so the default is fixed by the
/// geometric picture rather than by an internal consistency check.
enum class EpsilonConvention { Paper, Opposite };

/// Traversal order signs: walk the single closed strand from the midpoint of
/// the base edge (which must border the unbounded region) and compare, at
/// each double point, the outgoing directions of the first and second pass.
std::vector<int> epsilon(const Diagram& d, int base_arc,
                         EpsilonConvention conv = EpsilonConvention::Paper);

/// Base-point-dependent sign system: epsilon per double point, edge signs,
/// and the half-integer gleam weights on region slots.
struct TwistedSigns {
    std::vector<int> eps;            // per vertex
    std::vector<int> germ;           // per dart: epsilon * untwisted germ sign
    std::vector<int> arc;            // per arc, assembled from both end germs
    std::vector<Rational> gleam_local; // per dart (slot), +-1/2
    std::vector<Rational> gleam;     // per region
};

/// Throws if the two end germs of some arc disagree on the assembled edge
/// sign; with a correct traversal-sign system that never happens.
TwistedSigns gleams(const Diagram& d, const AlexanderCochain& phi, const std::vector<int>& eps);

} // namespace dstokes

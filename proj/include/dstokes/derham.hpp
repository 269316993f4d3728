#pragma once

#include <map>
#include <vector>

#include "dstokes/dual.hpp"

namespace dstokes {

/// Function on dual k-cells with exact rational values.
struct Cochain {
    int degree = 0;
    std::map<int, Rational> values; // primal cell index -> value
};

/// Germ counting rule for the degree-1 evaluation at a double point: either
/// only the two germs directed toward the point, or all four germs followed
/// by division by the resulting multiplicity 2.
enum class GermRule { Incoming, AllGerms };

/// Value of the degree-1 map on the dual 1-cell of an arc: the signed square
/// of the arc index, with sign +1 when the arc index exceeds the index of
/// the vertex the germ points at.  Under the incoming rule only the head
/// germ counts, so the value is attached to the arc once.
Rational d1_curve(const Diagram& d, const AlexanderCochain& phi, const CellIndex& ix, int arc);

/// Contribution of a single germ (dart) to the degree-1 evaluation at its
/// vertex; zero for outgoing germs under the incoming rule.
Rational d1_germ(const Diagram& d, const CellIndex& ix, int dart, GermRule rule);

/// Degree-2 map on the dual 2-cell at a double point: signed sum of the
/// cubes of the four sector values, +1 on the extreme slots and -1 on the
/// two middle slots, which telescopes to 6*ind(p).
Rational d2_curve(const Diagram& d, const AlexanderCochain& phi, int vertex);

Cochain d1_cochain(const Diagram& d, const AlexanderCochain& phi);
Cochain d2_cochain(const Diagram& d, const AlexanderCochain& phi);

Rational evaluate(const Cochain& psi, const DualCell& cell);
Rational evaluate(const Cochain& psi, const std::vector<BoundaryTerm>& chain);

/// Evaluation of the degree-1 map over the boundary loop of the dual 2-cell
/// at a vertex, germ by germ.
Rational evaluate_d1_on_vertex_loop(const Diagram& d, const AlexanderCochain& phi,
                                    const CellIndex& ix, int vertex,
                                    GermRule rule = GermRule::Incoming);

struct StokesRow {
    long long vertex_id = 0;
    Rational lhs; // d2 evaluation / 3!
    Rational rhs; // d1 evaluation over the boundary / 2!
    Rational ind;
    bool pass = false;
};
struct StokesReport {
    std::vector<StokesRow> rows;
    bool all_pass = true;
};

/// Checks, at every double point, that the normalized degree-2 evaluation on
/// the dual 2-cell and the normalized degree-1 evaluation on its boundary
/// both equal the point index.
StokesReport check_stokes_curve(const Diagram& d, GermRule rule = GermRule::Incoming);

} // namespace dstokes

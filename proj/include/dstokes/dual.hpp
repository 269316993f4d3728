#pragma once

#include <vector>

#include "dstokes/alexander.hpp"
#include "dstokes/diagram.hpp"
#include "dstokes/rational.hpp"

namespace dstokes {

/// Dual cell of a curve diagram: dual 0-cells sit in regions, dual 1-cells
/// cross arcs, dual 2-cells are disks around double points.
struct DualCell {
    int dim = 0;
    int index = 0; // region / arc / vertex index of the primal cell

    bool operator==(const DualCell&) const = default;
};

/// A term of a boundary: a signed dual cell. Terms of a dual 2-cell boundary
/// also remember the germ (dart) where the loop crosses the arc, because the
/// four crossings around a double point may hit the same arc twice and local
/// evaluations need the germs, not the collapsed sum.
struct BoundaryTerm {
    DualCell cell;
    int sign = 1;
    int germ = -1; // dart at the double point, for dual-2 boundaries
};

struct DualComplex {
    const Diagram* diagram = nullptr;
    AlexanderCochain phi; // curve convention; fixes the loop start sector

    int num_cells(int dim) const;

    /// Boundary with orientation signs.
    ///  dim 1: head (left region) minus tail (right region).
    ///  dim 2: the four arc germs in counterclockwise loop order around the
    ///         double point, starting at the sector of maximal value; the
    ///         sign is +1 where the loop crosses in the coorientation
    ///         direction (at outgoing germs) and -1 at incoming germs.
    std::vector<BoundaryTerm> boundary(const DualCell& cell) const;

    /// Boundary of a formal sum, collapsed by cell (germ tags dropped).
    std::vector<BoundaryTerm> boundary(const std::vector<BoundaryTerm>& chain) const;
};

DualComplex build_dual(const Diagram& d);

/// Collapses a list of terms to signed multiplicities per cell, dropping
/// zero terms. Used by the chain tests (e.g. boundary of a boundary).
std::vector<BoundaryTerm> collapse(const std::vector<BoundaryTerm>& terms);

} // namespace dstokes

#include "dstokes/dual.hpp"

#include <algorithm>
#include <map>

namespace dstokes {

DualComplex build_dual(const Diagram& d) {
    DualComplex dc;
    dc.diagram = &d;
    dc.phi = compute_alexander(d, Convention::Curve);
    return dc;
}

int DualComplex::num_cells(int dim) const {
    switch (dim) {
    case 0:
        return diagram->num_regions();
    case 1:
        return diagram->num_arcs();
    case 2:
        return diagram->num_vertices();
    default:
        return 0;
    }
}

std::vector<BoundaryTerm> DualComplex::boundary(const DualCell& cell) const {
    const Diagram& d = *diagram;
    std::vector<BoundaryTerm> out;
    if (cell.dim == 1) {
        int a = cell.index;
        out.push_back({{0, d.left_region(a)}, +1, -1});
        out.push_back({{0, d.right_region(a)}, -1, -1});
        return out;
    }
    if (cell.dim == 2) {
        int v = cell.index;
        auto darts = vertex_darts(d, v);
        // Start the loop at the germ whose left sector has maximal value, so
        // the first dual 0-cell visited is the maximal region slot.
        int start = 0;
        for (int k = 1; k < 4; ++k)
            if (phi.value[d.face_of[darts[k]]] > phi.value[d.face_of[darts[start]]])
                start = k;
        for (int k = 0; k < 4; ++k) {
            int g = darts[(start + k + 1) % 4]; // germ crossed when leaving slot k
            out.push_back({{1, d.arc_of[g]}, d.is_forward[g] ? +1 : -1, g});
        }
        return out;
    }
    return out; // dual 0-cells have empty boundary
}

std::vector<BoundaryTerm> DualComplex::boundary(const std::vector<BoundaryTerm>& chain) const {
    std::vector<BoundaryTerm> out;
    for (const auto& t : chain)
        for (auto b : boundary(t.cell)) {
            b.sign *= t.sign;
            out.push_back(b);
        }
    return collapse(out);
}

std::vector<BoundaryTerm> collapse(const std::vector<BoundaryTerm>& terms) {
    std::map<std::pair<int, int>, int> acc;
    for (const auto& t : terms)
        acc[{t.cell.dim, t.cell.index}] += t.sign;
    std::vector<BoundaryTerm> out;
    for (const auto& [k, s] : acc)
        if (s != 0)
            out.push_back({{k.first, k.second}, s, -1});
    return out;
}

} // namespace dstokes

#include "dstokes/derham.hpp"

namespace dstokes {

namespace {
// Sign of a germ by index: +1 when the arc sits half a step above the
// vertex, -1 half a step below.
int germ_index_sign(const Diagram& d, const CellIndex& ix, int dart) {
    int v = d.vert[dart];
    Rational diff = ix.arc[d.arc_of[dart]] - ix.vertex[v];
    if (diff == Rational(1, 2))
        return +1;
    if (diff == Rational(-1, 2))
        return -1;
    throw ValidationError("arc index is not a half step from its vertex index");
}
} // namespace

Rational d1_germ(const Diagram& d, const CellIndex& ix, int dart, GermRule rule) {
    bool incoming = !d.is_forward[dart]; // backward dart: the arc arrives here
    if (rule == GermRule::Incoming && !incoming)
        return Rational(0);
    Rational v = ix.arc[d.arc_of[dart]];
    return Rational(germ_index_sign(d, ix, dart)) * v * v;
}

Rational d1_curve(const Diagram& d, const AlexanderCochain& phi, const CellIndex& ix, int arc) {
    (void)phi;
    int head_germ = d.alpha[d.arc_fwd[arc]];
    return d1_germ(d, ix, head_germ, GermRule::Incoming);
}

Rational d2_curve(const Diagram& d, const AlexanderCochain& phi, int vertex) {
    Rational acc(0);
    auto slots = vertex_slots(d, phi, vertex);
    Rational ind(0);
    for (const auto& s : slots)
        ind += s;
    ind = ind / Rational(4);
    for (const auto& s : slots) {
        int sign = (s == ind) ? -1 : +1; // middle slots negative, extremes positive
        acc += Rational(sign) * s * s * s;
    }
    return acc;
}

Cochain d1_cochain(const Diagram& d, const AlexanderCochain& phi) {
    Cochain c;
    c.degree = 1;
    auto ix = cell_indices(d, phi);
    for (int a = 0; a < d.num_arcs(); ++a)
        c.values[a] = d1_curve(d, phi, ix, a);
    return c;
}

Cochain d2_cochain(const Diagram& d, const AlexanderCochain& phi) {
    Cochain c;
    c.degree = 2;
    for (int v = 0; v < d.num_vertices(); ++v)
        c.values[v] = d2_curve(d, phi, v);
    return c;
}

Rational evaluate(const Cochain& psi, const DualCell& cell) {
    if (cell.dim != psi.degree)
        throw ValidationError("evaluation degree mismatch");
    auto it = psi.values.find(cell.index);
    if (it == psi.values.end())
        throw ValidationError("cochain not defined on cell");
    return it->second;
}

Rational evaluate(const Cochain& psi, const std::vector<BoundaryTerm>& chain) {
    Rational acc(0);
    for (const auto& t : chain)
        acc += Rational(t.sign) * evaluate(psi, t.cell);
    return acc;
}

Rational evaluate_d1_on_vertex_loop(const Diagram& d, const AlexanderCochain& phi,
                                    const CellIndex& ix, int vertex, GermRule rule) {
    Rational acc(0);
    for (int dart : vertex_darts(d, vertex))
        acc += d1_germ(d, ix, dart, rule);
    (void)phi;
    if (rule == GermRule::AllGerms)
        acc = acc / Rational(2); // every contribution appears once incoming, once outgoing
    return acc;
}

StokesReport check_stokes_curve(const Diagram& d, GermRule rule) {
    StokesReport rep;
    auto phi = compute_alexander(d, Convention::Curve);
    auto ix = cell_indices(d, phi);
    for (int v = 0; v < d.num_vertices(); ++v) {
        StokesRow row;
        row.vertex_id = d.vertex_id[v];
        row.ind = ix.vertex[v];
        row.lhs = d2_curve(d, phi, v) / Rational(6);
        row.rhs = evaluate_d1_on_vertex_loop(d, phi, ix, v, rule) / Rational(2);
        row.pass = (row.lhs == row.ind) && (row.rhs == row.ind);
        rep.all_pass = rep.all_pass && row.pass;
        rep.rows.push_back(row);
    }
    return rep;
}

} // namespace dstokes

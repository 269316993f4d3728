#include "dstokes/invariants.hpp"

namespace dstokes {

bool InvariantReport::all_pass() const {
    bool ok = st1.pass();
    for (const auto& r : st1_ledger)
        ok = ok && r.pass();
    if (st)
        ok = ok && st->pass();
    for (const auto& r : st_ledger)
        ok = ok && r.pass();
    return ok;
}

ThreeLevel st1(const Diagram& d, const AlexanderCochain& phi) {
    ThreeLevel t{Rational(0), Rational(0), Rational(0)};
    auto ix = cell_indices(d, phi);
    auto u = untwisted_signs(d, phi);
    for (int v = 0; v < d.num_vertices(); ++v)
        t.point += ix.vertex[v];
    for (int h = 0; h < d.num_darts(); ++h) {
        if (!d.is_forward[h]) { // incoming germ incidence at its vertex
            Rational e = ix.arc[d.arc_of[h]];
            t.edge += Rational(u.germ[h]) * e * e;
        }
        Rational r = phi.value[d.face_of[h]]; // slot incidence
        t.region += Rational(u.slot[h]) * r * r * r;
    }
    t.edge = t.edge / Rational(2);
    t.region = t.region / Rational(6);
    return t;
}

ThreeLevel st_original(const Diagram& d, const AlexanderCochain& phi, const TwistedSigns& tw) {
    ThreeLevel t{Rational(0), Rational(0), Rational(0)};
    auto ix = cell_indices(d, phi);
    for (int v = 0; v < d.num_vertices(); ++v)
        t.point += Rational(tw.eps[v]) * ix.vertex[v];
    for (int a = 0; a < d.num_arcs(); ++a) {
        Rational e = ix.arc[a];
        t.edge += Rational(tw.arc[a]) * e * e;
    }
    for (int r = 0; r < d.num_regions(); ++r) {
        Rational v = phi.value[r];
        t.region += tw.gleam[r] * v * v * v;
    }
    t.edge = t.edge / Rational(2);
    t.region = t.region / Rational(3);
    return t;
}

namespace {
std::vector<LedgerRow> ledger(const Diagram& d, const AlexanderCochain& phi,
                              const std::vector<int>* eps, const TwistedSigns* tw) {
    std::vector<LedgerRow> rows;
    auto ix = cell_indices(d, phi);
    auto u = untwisted_signs(d, phi);
    for (int v = 0; v < d.num_vertices(); ++v) {
        LedgerRow row;
        row.vertex_id = d.vertex_id[v];
        row.eps = eps ? (*eps)[v] : +1;
        row.ind = ix.vertex[v];
        row.point_level = Rational(row.eps) * row.ind;
        Rational edge(0), region(0);
        for (int h : vertex_darts(d, v)) {
            if (!d.is_forward[h]) {
                Rational e = ix.arc[d.arc_of[h]];
                edge += Rational(tw ? tw->germ[h] : u.germ[h]) * e * e;
            }
            Rational rv = phi.value[d.face_of[h]];
            if (tw)
                region += tw->gleam_local[h] * rv * rv * rv;
            else
                region += Rational(u.slot[h]) * rv * rv * rv;
        }
        row.edge_level = edge / Rational(2);
        row.region_level = region / Rational(tw ? 3 : 6);
        rows.push_back(row);
    }
    return rows;
}
} // namespace

std::vector<LedgerRow> per_vertex_ledger(const Diagram& d, const AlexanderCochain& phi,
                                         const TwistedSigns& tw) {
    return ledger(d, phi, &tw.eps, &tw);
}

std::vector<LedgerRow> per_vertex_ledger_untwisted(const Diagram& d,
                                                   const AlexanderCochain& phi) {
    return ledger(d, phi, nullptr, nullptr);
}

InvariantReport invariant_report(const Diagram& d, EpsilonConvention conv,
                                 bool use_default_base) {
    InvariantReport rep;
    auto phi = compute_alexander(d, Convention::Curve);
    rep.st1 = st1(d, phi);
    rep.st1_ledger = per_vertex_ledger_untwisted(d, phi);

    std::optional<int> base = d.base_arc;
    if (!base && use_default_base && d.num_vertices() > 0 && d.crossing_strand_count() == 1) {
        auto arcs = outer_adjacent_arcs(d);
        if (!arcs.empty())
            base = arcs.front();
    }
    if (base && d.num_vertices() > 0) {
        auto eps = epsilon(d, *base, conv);
        auto tw = gleams(d, phi, eps);
        rep.st = st_original(d, phi, tw);
        rep.st_ledger = per_vertex_ledger(d, phi, tw);
    }
    return rep;
}

} // namespace dstokes

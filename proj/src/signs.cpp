#include "dstokes/signs.hpp"

namespace dstokes {

UntwistedSigns untwisted_signs(const Diagram& d, const AlexanderCochain& phi) {
    UntwistedSigns s;
    auto ix = cell_indices(d, phi);
    s.germ.assign(d.num_darts(), 0);
    s.slot.assign(d.num_darts(), 0);
    for (int h = 0; h < d.num_darts(); ++h) {
        Rational diff = ix.arc[d.arc_of[h]] - ix.vertex[d.vert[h]];
        s.germ[h] = (diff == Rational(1, 2)) ? +1 : -1;
        // Sector between h and sigma[h]: both-entering or both-leaving -> -1.
        bool h_out = d.is_forward[h];
        bool n_out = d.is_forward[d.sigma[h]];
        s.slot[h] = (h_out == n_out) ? -1 : +1;
        // The -1 slots are exactly the middle-value slots.
        bool middle = phi.value[d.face_of[h]] == ix.vertex[d.vert[h]];
        if ((s.slot[h] == -1) != middle)
            throw ValidationError("slot sign pattern does not match slot values");
    }
    return s;
}

std::vector<int> epsilon(const Diagram& d, int base_arc, EpsilonConvention conv) {
    if (d.crossing_strand_count() != 1)
        throw ValidationError("traversal signs need a single closed strand");
    if (base_arc < 0 || base_arc >= d.num_arcs())
        throw ValidationError("bad base edge");
    if (d.left_region(base_arc) != d.outer_region() &&
        d.right_region(base_arc) != d.outer_region())
        throw ValidationError("base edge does not border the outer face");

    std::vector<int> first_out(d.num_vertices(), -1);
    std::vector<int> eps(d.num_vertices(), 0);
    int h = d.arc_fwd[base_arc];
    for (int step = 0; step < 2 * d.num_vertices(); ++step) {
        int out = d.snext[h]; // outgoing germ at the head of h
        int v = d.vert[out];
        if (first_out[v] == -1) {
            first_out[v] = out;
        } else {
            int o1 = first_out[v];
            int sign;
            if (out == d.sigma_inv[o1])
                sign = +1; // second pass leaves one step clockwise of the first
            else if (out == d.sigma[o1])
                sign = -1;
            else
                throw ValidationError("pass directions at a vertex are not transverse");
            eps[v] = (conv == EpsilonConvention::Paper) ? sign : -sign;
        }
        h = out;
    }
    for (int v = 0; v < d.num_vertices(); ++v)
        if (eps[v] == 0)
            throw ValidationError("strand walk missed a vertex");
    return eps;
}

TwistedSigns gleams(const Diagram& d, const AlexanderCochain& phi, const std::vector<int>& eps) {
    TwistedSigns t;
    t.eps = eps;
    auto u = untwisted_signs(d, phi);
    auto ix = cell_indices(d, phi);

    t.germ.assign(d.num_darts(), 0);
    for (int h = 0; h < d.num_darts(); ++h)
        t.germ[h] = eps[d.vert[h]] * u.germ[h];

    t.arc.assign(d.num_arcs(), 0);
    for (int a = 0; a < d.num_arcs(); ++a) {
        int fwd = d.arc_fwd[a];
        int from_head = t.germ[d.alpha[fwd]];
        int from_tail = t.germ[fwd];
        if (from_head != from_tail)
            throw ValidationError("edge sign disagrees between the two end germs of edge " +
                                  std::to_string(d.arc_external_id(a)));
        t.arc[a] = from_head;
    }

    t.gleam_local.assign(d.num_darts(), Rational(0));
    for (int h = 0; h < d.num_darts(); ++h) {
        bool middle = phi.value[d.face_of[h]] == ix.vertex[d.vert[h]];
        // epsilon = -1 puts +1/2 on the two equal-value slots.
        Rational g = middle ? Rational(-1, 2) : Rational(1, 2);
        t.gleam_local[h] = Rational(eps[d.vert[h]]) * g;
    }
    t.gleam.assign(d.num_regions(), Rational(0));
    for (int h = 0; h < d.num_darts(); ++h)
        t.gleam[d.face_of[h]] += t.gleam_local[h];
    return t;
}

} // namespace dstokes

#include "dstokes/movie.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "dstokes/invariants.hpp"
#include "dstokes/signs.hpp"

namespace dstokes {

namespace {

using detail::DiagramData;

long long next_dart_id(const Diagram& d) {
    long long m = 0;
    for (long long id : d.dart_id)
        m = std::max(m, id + 1);
    return m;
}
long long next_vertex_id(const Diagram& d) {
    long long m = 1;
    for (long long id : d.vertex_id)
        m = std::max(m, id + 1);
    return m;
}
long long next_loop_id(const Diagram& d) {
    long long m = 0;
    for (const auto& l : d.loops)
        m = std::max(m, l.id + 1);
    return m;
}

bool loop_has_children(const Diagram& d, long long loop_id) {
    for (const auto& l : d.loops)
        if (l.container.kind == RegionRef::LoopInterior && l.container.id == loop_id)
            return true;
    return false;
}

void erase_loop(DiagramData& data, long long id) {
    std::erase_if(data.loops, [&](const auto& l) { return l.id == id; });
}

void erase_twin(DiagramData& data, long long a, long long b) {
    std::erase_if(data.twins, [&](const auto& t) {
        return (t.first == a && t.second == b) || (t.first == b && t.second == a);
    });
}

void erase_strand_from(DiagramData& data, long long a) {
    std::erase_if(data.strands, [&](const auto& s) { return s.first == a; });
}

int find_arc(const Diagram& d, long long edge_id) {
    for (int a = 0; a < d.num_arcs(); ++a)
        if (d.arc_external_id(a) == edge_id)
            return a;
    throw ValidationError("no edge " + std::to_string(edge_id));
}

Rational rot_number(const Diagram& d);

Diagram rebuild(DiagramData data, const std::string& name) {
    data.name = name;
    return detail::build(data);
}

// ---------------------------------------------------------------- birth/death

ApplyOutcome apply_birth(const Diagram& d, const SliceEvent& e) {
    d.resolve_region(e.region);
    auto data = detail::records_of(d);
    long long id = next_loop_id(d);
    data.loops.push_back({id, e.ccw, e.region});
    ApplyOutcome out;
    out.next = rebuild(data, d.name);
    SliceEvent inv;
    inv.kind = EventKind::Death;
    inv.site_a = StrandSite::loop(id);
    out.inverse = inv;
    return out;
}

ApplyOutcome apply_death(const Diagram& d, const SliceEvent& e) {
    int li = d.loop_index(e.site_a.id);
    if (loop_has_children(d, e.site_a.id))
        throw ValidationError("cannot remove a loop that contains other loops");
    auto data = detail::records_of(d);
    SliceEvent inv;
    inv.kind = EventKind::Birth;
    inv.ccw = d.loops[li].ccw;
    inv.region = d.loops[li].container;
    erase_loop(data, e.site_a.id);
    ApplyOutcome out;
    out.next = rebuild(data, d.name);
    out.inverse = inv;
    return out;
}

// -------------------------------------------------------------------- saddles

ApplyOutcome saddle_merge_loops(const Diagram& d, long long ida, long long idb) {
    int ia = d.loop_index(ida), ib = d.loop_index(idb);
    const auto& A = d.loops[ia];
    const auto& B = d.loops[ib];
    auto data = detail::records_of(d);
    long long nid = next_loop_id(d);
    SliceEvent inv;
    inv.kind = EventKind::Saddle;
    inv.site_a = inv.site_b = StrandSite::loop(nid);

    int ra = d.resolve_region(A.container);
    int rb = d.resolve_region(B.container);
    if (ra == rb) {
        // side-by-side tube: orientations must match
        if (A.ccw != B.ccw)
            throw ValidationError("saddle between side-by-side loops of opposite handedness");
        erase_loop(data, ida);
        erase_loop(data, idb);
        for (auto& l : data.loops)
            if (l.container.kind == RegionRef::LoopInterior &&
                (l.container.id == ida || l.container.id == idb))
                l.container = RegionRef::loop(nid);
        data.loops.push_back({nid, A.ccw, A.container});
    } else if (rb == d.loop_region(ia) || ra == d.loop_region(ib)) {
        // nested tube: inner loop must run opposite to the outer one
        const auto& outer = (rb == d.loop_region(ia)) ? A : B;
        const auto& inner = (rb == d.loop_region(ia)) ? B : A;
        if (outer.ccw == inner.ccw)
            throw ValidationError("saddle between nested loops of equal handedness");
        erase_loop(data, ida);
        erase_loop(data, idb);
        for (auto& l : data.loops) {
            if (l.container.kind == RegionRef::LoopInterior && l.container.id == outer.id)
                l.container = RegionRef::loop(nid);
            else if (l.container.kind == RegionRef::LoopInterior && l.container.id == inner.id)
                l.container = outer.container; // the pinched hole opens outward
        }
        data.loops.push_back({nid, outer.ccw, outer.container});
    } else {
        throw ValidationError("saddle loops do not co-bound a region");
    }
    ApplyOutcome out;
    out.next = rebuild(data, d.name);
    out.inverse = inv;
    return out;
}

ApplyOutcome saddle_split_loop(const Diagram& d, long long id) {
    int li = d.loop_index(id);
    if (loop_has_children(d, id))
        throw ValidationError("cannot split a loop that contains other loops");
    auto data = detail::records_of(d);
    long long id1 = next_loop_id(d), id2 = id1 + 1;
    erase_loop(data, id);
    data.loops.push_back({id1, d.loops[li].ccw, d.loops[li].container});
    data.loops.push_back({id2, d.loops[li].ccw, d.loops[li].container});
    SliceEvent inv;
    inv.kind = EventKind::Saddle;
    inv.site_a = StrandSite::loop(id1);
    inv.site_b = StrandSite::loop(id2);
    ApplyOutcome out;
    out.next = rebuild(data, d.name);
    out.inverse = inv;
    return out;
}

ApplyOutcome saddle_splice_arcs(const Diagram& d, long long ea, long long eb) {
    int a = find_arc(d, ea), b = find_arc(d, eb);
    int fa = d.arc_fwd[a], ha = d.alpha[fa];
    int fb = d.arc_fwd[b], hb = d.alpha[fb];
    // Loops sitting in a face that the band may split cannot be replaced.
    std::set<int> affected{d.left_region(a), d.right_region(a), d.left_region(b),
                           d.right_region(b)};
    for (const auto& l : d.loops)
        if (affected.count(d.resolve_region(l.container)))
            throw ValidationError("saddle would make a loop's region ambiguous");

    auto data = detail::records_of(d);
    erase_twin(data, d.dart_id[fa], d.dart_id[ha]);
    erase_twin(data, d.dart_id[fb], d.dart_id[hb]);
    data.twins.emplace_back(std::min(d.dart_id[fa], d.dart_id[hb]),
                            std::max(d.dart_id[fa], d.dart_id[hb]));
    data.twins.emplace_back(std::min(d.dart_id[fb], d.dart_id[ha]),
                            std::max(d.dart_id[fb], d.dart_id[ha]));
    long long na = d.dart_id[d.snext[fa]], nb = d.dart_id[d.snext[fb]];
    erase_strand_from(data, d.dart_id[fa]);
    erase_strand_from(data, d.dart_id[fb]);
    data.strands.emplace_back(d.dart_id[fa], nb);
    data.strands.emplace_back(d.dart_id[fb], na);
    std::sort(data.twins.begin(), data.twins.end());
    std::sort(data.strands.begin(), data.strands.end());

    ApplyOutcome out;
    out.next = rebuild(data, d.name);
    SliceEvent inv;
    inv.kind = EventKind::Saddle;
    inv.site_a = StrandSite::arc(std::min(d.dart_id[fa], d.dart_id[hb]));
    inv.site_b = StrandSite::arc(std::min(d.dart_id[fb], d.dart_id[ha]));
    out.inverse = inv;
    return out;
}

ApplyOutcome saddle_shed(const Diagram& d, long long ea, int side) {
    int a = find_arc(d, ea);
    int face = side > 0 ? d.left_region(a) : d.right_region(a);
    auto data = detail::records_of(d);
    long long id = next_loop_id(d);
    // A finger pinched off to the left curls clockwise, to the right
    // counterclockwise.
    data.loops.push_back({id, side < 0, d.region_ref(face)});
    ApplyOutcome out;
    out.next = rebuild(data, d.name);
    SliceEvent inv;
    inv.kind = EventKind::Saddle;
    inv.site_a = StrandSite::arc(ea);
    inv.site_b = StrandSite::loop(id);
    out.inverse = inv;
    return out;
}

ApplyOutcome saddle_absorb(const Diagram& d, long long ea, long long loop_id) {
    int a = find_arc(d, ea);
    int li = d.loop_index(loop_id);
    if (loop_has_children(d, loop_id))
        throw ValidationError("cannot absorb a loop that contains other loops");
    int c = d.resolve_region(d.loops[li].container);
    int side;
    if (c == d.left_region(a))
        side = +1;
    else if (c == d.right_region(a))
        side = -1;
    else
        throw ValidationError("loop does not sit beside the edge");
    if (d.loops[li].ccw != (side < 0))
        throw ValidationError("loop handedness does not match the absorbing side");
    auto data = detail::records_of(d);
    erase_loop(data, loop_id);
    ApplyOutcome out;
    out.next = rebuild(data, d.name);
    SliceEvent inv;
    inv.kind = EventKind::Saddle;
    inv.site_a = inv.site_b = StrandSite::arc(ea);
    inv.side = side;
    out.inverse = inv;
    return out;
}

ApplyOutcome apply_saddle(const Diagram& d, const SliceEvent& e) {
    if (e.site_a.is_loop && e.site_b.is_loop) {
        if (e.site_a.id == e.site_b.id)
            return saddle_split_loop(d, e.site_a.id);
        return saddle_merge_loops(d, e.site_a.id, e.site_b.id);
    }
    if (!e.site_a.is_loop && !e.site_b.is_loop) {
        if (e.site_a.id == e.site_b.id)
            return saddle_shed(d, e.site_a.id, e.side);
        return saddle_splice_arcs(d, e.site_a.id, e.site_b.id);
    }
    const StrandSite& arc = e.site_a.is_loop ? e.site_b : e.site_a;
    const StrandSite& loop = e.site_a.is_loop ? e.site_a : e.site_b;
    return saddle_absorb(d, arc.id, loop.id);
}

// ----------------------------------------------------------------- rii-create
//
// Local frame: the finger leaves the travel region f northward, crossing the
// target strand twice. u is the first crossing along the finger. With the
// target running so that f is on its right it travels east; the tip turn
// (chir) decides whether the target meets u or v first. The eight new darts
// are allocated E,N,W,S at u then at v.

struct RiiFrame {
    long long uE, uN, uW, uS, vE, vN, vW, vS;
    bool f_on_left; // side of the crossed strand facing the travel region
    long long u_id, v_id;

    long long B_out(bool at_u) const { return f_on_left ? (at_u ? uW : vW) : (at_u ? uE : vE); }
    long long B_in(bool at_u) const { return f_on_left ? (at_u ? uE : vE) : (at_u ? uW : vW); }
    long long F_out(bool at_u) const { return at_u ? uN : vS; }
    long long F_in(bool at_u) const { return at_u ? uS : vN; }
};

ApplyOutcome apply_rii_create(const Diagram& d, const SliceEvent& e) {
    int f = d.resolve_region(e.region);

    RiiFrame fr;
    long long base = next_dart_id(d);
    fr.uE = base + 0;
    fr.uN = base + 1;
    fr.uW = base + 2;
    fr.uS = base + 3;
    fr.vE = base + 4;
    fr.vN = base + 5;
    fr.vW = base + 6;
    fr.vS = base + 7;
    fr.u_id = next_vertex_id(d);
    fr.v_id = fr.u_id + 1;

    auto data = detail::records_of(d);

    // Crossed site: which side faces f.
    bool same_site = (e.site_a == e.site_b);
    if (e.site_b.is_loop) {
        int li = d.loop_index(e.site_b.id);
        bool f_is_interior = (f == d.loop_region(li));
        if (!f_is_interior && f != d.resolve_region(d.loops[li].container))
            throw ValidationError("crossed loop does not bound the travel region");
        fr.f_on_left = (d.loops[li].ccw == f_is_interior);
    } else {
        int b = find_arc(d, e.site_b.id);
        bool l = d.left_region(b) == f, r = d.right_region(b) == f;
        if (l == r)
            throw ValidationError(l ? "crossed edge borders the region on both sides"
                                    : "crossed edge does not border the travel region");
        fr.f_on_left = l;
    }
    bool chir_left = e.chir > 0;
    bool u_first_on_B = (fr.f_on_left == chir_left);

    // A loop pushed as the finger traverses the created circuit in the
    // direction of the tip turn: counterclockwise loops must turn left.
    if (e.site_a.is_loop && d.loops[d.loop_index(e.site_a.id)].ccw != chir_left)
        throw ValidationError("loop handedness does not match the tip turn");

    // Only configurations whose loops stay strictly inside map faces are
    // supported; in particular a crossed loop may not enclose the rest.
    for (const auto& l : d.loops) {
        bool is_site = (e.site_a.is_loop && l.id == e.site_a.id) ||
                       (e.site_b.is_loop && l.id == e.site_b.id);
        if (!is_site && d.resolve_region(l.container) == f)
            throw ValidationError("another loop sits in the travel region");
    }
    if ((e.site_a.is_loop || e.site_b.is_loop) && d.num_vertices() == 0) {
        if (d.loops.size() != (same_site ? 1u : 2u))
            throw ValidationError("unsupported: extra loops during a first crossing event");
    }
    for (const StrandSite& s : {e.site_a, e.site_b})
        if (s.is_loop && loop_has_children(d, s.id))
            throw ValidationError("cannot cross a loop that contains other loops");

    data.vertices.push_back({fr.u_id, {fr.uE, fr.uN, fr.uW, fr.uS}});
    data.vertices.push_back({fr.v_id, {fr.vE, fr.vN, fr.vW, fr.vS}});

    bool w1u = u_first_on_B, w2u = !u_first_on_B;

    if (same_site && e.site_a.is_loop) {
        // A loop pushed across itself: only the configuration with the loop
        // innermost in the unbounded region is representable.
        int li = d.loop_index(e.site_a.id);
        if (d.num_vertices() != 0 || d.loops.size() != 1)
            throw ValidationError("unsupported: loop self-crossing inside a larger diagram");
        if (f != d.resolve_region(d.loops[li].container) || f != d.outer_region())
            throw ValidationError("unsupported: loop self-crossing away from the outer region");
        erase_loop(data, e.site_a.id);
        data.twins.emplace_back(fr.uN, fr.vN);
        data.twins.emplace_back(fr.vS, fr.B_in(w1u));
        data.twins.emplace_back(fr.B_out(w1u), fr.B_in(w2u));
        data.twins.emplace_back(fr.B_out(w2u), fr.uS);
        data.strands.emplace_back(fr.uN, fr.vS);
        data.strands.emplace_back(fr.vS, fr.B_out(w1u));
        data.strands.emplace_back(fr.B_out(w1u), fr.B_out(w2u));
        data.strands.emplace_back(fr.B_out(w2u), fr.uN);
        data.outer_witness = fr.B_in(w1u);
    } else if (same_site) {
        // An arc pushed across itself; the finger comes first along the arc.
        int a = find_arc(d, e.site_a.id);
        if (d.left_region(a) != f && d.right_region(a) != f)
            throw ValidationError("finger edge does not border the travel region");
        long long fa = d.dart_id[d.arc_fwd[a]], ha = d.dart_id[d.alpha[d.arc_fwd[a]]];
        long long na = d.dart_id[d.snext[d.arc_fwd[a]]];
        erase_twin(data, fa, ha);
        erase_strand_from(data, fa);
        data.twins.emplace_back(fa, fr.uS);
        data.twins.emplace_back(fr.uN, fr.vN);
        data.twins.emplace_back(fr.vS, fr.B_in(w1u));
        data.twins.emplace_back(fr.B_out(w1u), fr.B_in(w2u));
        data.twins.emplace_back(fr.B_out(w2u), ha);
        data.strands.emplace_back(fa, fr.uN);
        data.strands.emplace_back(fr.uN, fr.vS);
        data.strands.emplace_back(fr.vS, fr.B_out(w1u));
        data.strands.emplace_back(fr.B_out(w1u), fr.B_out(w2u));
        data.strands.emplace_back(fr.B_out(w2u), na);
    } else {
        // Finger pieces.
        if (e.site_a.is_loop) {
            erase_loop(data, e.site_a.id);
            data.twins.emplace_back(fr.uN, fr.vN);
            data.twins.emplace_back(fr.vS, fr.uS);
            data.strands.emplace_back(fr.uN, fr.vS);
            data.strands.emplace_back(fr.vS, fr.uN);
        } else {
            int a = find_arc(d, e.site_a.id);
            if (d.left_region(a) != f && d.right_region(a) != f)
                throw ValidationError("finger edge does not border the travel region");
            long long fa = d.dart_id[d.arc_fwd[a]], ha = d.dart_id[d.alpha[d.arc_fwd[a]]];
            long long na = d.dart_id[d.snext[d.arc_fwd[a]]];
            erase_twin(data, fa, ha);
            erase_strand_from(data, fa);
            data.twins.emplace_back(fa, fr.uS);
            data.twins.emplace_back(fr.uN, fr.vN);
            data.twins.emplace_back(fr.vS, ha);
            data.strands.emplace_back(fa, fr.uN);
            data.strands.emplace_back(fr.uN, fr.vS);
            data.strands.emplace_back(fr.vS, na);
        }
        // Crossed pieces.
        if (e.site_b.is_loop) {
            erase_loop(data, e.site_b.id);
            data.twins.emplace_back(fr.B_out(w1u), fr.B_in(w2u));
            data.twins.emplace_back(fr.B_out(w2u), fr.B_in(w1u));
            data.strands.emplace_back(fr.B_out(w1u), fr.B_out(w2u));
            data.strands.emplace_back(fr.B_out(w2u), fr.B_out(w1u));
        } else {
            int b = find_arc(d, e.site_b.id);
            long long fb = d.dart_id[d.arc_fwd[b]], hb = d.dart_id[d.alpha[d.arc_fwd[b]]];
            long long nb = d.dart_id[d.snext[d.arc_fwd[b]]];
            erase_twin(data, fb, hb);
            erase_strand_from(data, fb);
            data.twins.emplace_back(fb, fr.B_in(w1u));
            data.twins.emplace_back(fr.B_out(w1u), fr.B_in(w2u));
            data.twins.emplace_back(fr.B_out(w2u), hb);
            data.strands.emplace_back(fb, fr.B_out(w1u));
            data.strands.emplace_back(fr.B_out(w1u), fr.B_out(w2u));
            data.strands.emplace_back(fr.B_out(w2u), nb);
        }
        if (e.site_a.is_loop && d.num_vertices() == 0)
            throw ValidationError("unsupported: crossing of two separate loops");
    }
    std::sort(data.twins.begin(), data.twins.end());
    std::sort(data.strands.begin(), data.strands.end());

    ApplyOutcome out;
    out.next = rebuild(data, d.name);

    // The inverse removes the fresh bigon between the fingertip and the
    // crossed strand: the unique two-sided face made only of new darts.
    long long bw = -1;
    for (int face = 0; face < out.next.num_faces(); ++face) {
        const auto& darts = out.next.face_darts[face];
        if (darts.size() != 2)
            continue;
        bool fresh = true;
        for (int h : darts)
            fresh = fresh && out.next.dart_id[h] >= base;
        if (fresh && out.next.vert[darts[0]] != out.next.vert[darts[1]])
            bw = out.next.dart_id[darts[0]];
    }
    if (bw < 0)
        throw ValidationError("crossing event produced no fresh bigon");
    SliceEvent inv;
    inv.kind = EventKind::RiiAnnihilate;
    inv.face_witness = bw;
    out.inverse = inv;
    return out;
}

// ------------------------------------------------------------- rii-annihilate

ApplyOutcome apply_rii_annihilate(const Diagram& d, const SliceEvent& e) {
    int wd = d.dart_index(e.face_witness);
    int face = d.face_of[wd];
    const auto& orbit = d.face_darts[face];
    if (orbit.size() != 2)
        throw ValidationError("face is not a bigon");
    int d1 = orbit[0], d2 = orbit[1];
    int u = d.vert[d1], v = d.vert[d2];
    if (u == v)
        throw ValidationError("bigon with a single vertex cannot be removed");
    int e1 = d.arc_of[d1], e2 = d.arc_of[d2];
    if (e1 == e2)
        throw ValidationError("face is bounded by one edge only");

    std::set<int> deleted;
    for (int h = 0; h < d.num_darts(); ++h)
        if (d.vert[h] == u || d.vert[h] == v)
            deleted.insert(h);

    auto data = detail::records_of(d);
    std::erase_if(data.vertices, [&](const auto& vr) {
        return vr.id == d.vertex_id[u] || vr.id == d.vertex_id[v];
    });
    data.twins.clear();
    data.strands.clear();
    data.base_edge.reset();

    // Chains of arcs through the removed crossings merge into single arcs.
    std::vector<char> consumed(d.num_arcs(), 0);
    for (int a = 0; a < d.num_arcs(); ++a) {
        int fwd = d.arc_fwd[a];
        if (deleted.count(fwd))
            continue; // continuation of some chain, handled from its start
        if (!deleted.count(d.alpha[fwd])) {
            consumed[a] = 1; // untouched arc: copy records verbatim
            data.twins.emplace_back(std::min(d.dart_id[fwd], d.dart_id[d.alpha[fwd]]),
                                    std::max(d.dart_id[fwd], d.dart_id[d.alpha[fwd]]));
            data.strands.emplace_back(d.dart_id[fwd], d.dart_id[d.snext[fwd]]);
            continue;
        }
        int cur = a;
        consumed[a] = 1;
        while (deleted.count(d.alpha[d.arc_fwd[cur]])) {
            int head = d.alpha[d.arc_fwd[cur]];
            int out = d.sigma[d.sigma[head]]; // continuation of the pass
            cur = d.arc_of[out];
            if (consumed[cur])
                throw ValidationError("bigon removal produced a tangled chain");
            consumed[cur] = 1;
        }
        int head = d.alpha[d.arc_fwd[cur]];
        data.twins.emplace_back(std::min(d.dart_id[fwd], d.dart_id[head]),
                                std::max(d.dart_id[fwd], d.dart_id[head]));
        // successor of the merged arc = successor of the chain's last arc
        data.strands.emplace_back(d.dart_id[fwd], d.dart_id[d.snext[d.arc_fwd[cur]]]);
    }

    // Arcs supported entirely on the removed crossings close into a loop.
    bool collapse = false;
    for (int a = 0; a < d.num_arcs(); ++a)
        collapse = collapse || !consumed[a];
    SliceEvent inv;
    inv.kind = EventKind::RiiCreate;
    if (collapse) {
        if (d.num_vertices() != 2 || !d.loops.empty() || d.crossing_strand_count() != 1)
            throw ValidationError("unsupported: crossing removal would strand nested pieces");
        Rational rot = rot_number(d);
        bool ccw;
        if (rot == Rational(1))
            ccw = true;
        else if (rot == Rational(-1))
            ccw = false;
        else
            throw ValidationError("collapsed strand is not embeddable");
        data.loops.push_back({0, ccw, RegionRef::outer()});
        data.outer_witness.reset();
    } else {
        // Re-witness regions whose named dart disappeared; a loop in the
        // vanishing bigon lands in the region beyond either crossing.
        auto survivor = [&](int f0) -> long long {
            long long best = -1;
            for (int h : d.face_darts[f0])
                if (!deleted.count(h) && (best == -1 || d.dart_id[h] < best))
                    best = d.dart_id[h];
            return best;
        };
        int endface = d.face_of[d.sigma[d.sigma[d1]]];
        auto rewitness = [&](const RegionRef& ref) -> RegionRef {
            if (ref.kind != RegionRef::Face)
                return ref;
            int f0 = d.face_of[d.dart_index(ref.id)];
            long long s = survivor(f0);
            if (s < 0 && f0 == face)
                s = survivor(endface);
            if (s < 0)
                throw ValidationError("region lost all its named half-edges");
            return RegionRef::face(s);
        };
        for (auto& l : data.loops)
            l.container = rewitness(l.container);
        long long ow = survivor(d.outer_face);
        if (ow < 0 && d.outer_face == face)
            ow = survivor(endface);
        if (ow < 0)
            throw ValidationError("outer face lost all its named half-edges");
        data.outer_witness = ow;
    }
    std::sort(data.twins.begin(), data.twins.end());
    std::sort(data.strands.begin(), data.strands.end());

    ApplyOutcome out;
    out.next = rebuild(data, d.name);
    out.inverse = inv; // sites filled by the caller via trial
    return out;
}

// ----------------------------------------------------------------------- riii

ApplyOutcome apply_riii(const Diagram& d, const SliceEvent& e) {
    int wd = d.dart_index(e.face_witness);
    int face = d.face_of[wd];
    if (face == d.outer_face)
        throw ValidationError("cannot flip the unbounded region");
    const auto& orbit = d.face_darts[face];
    if (orbit.size() != 3)
        throw ValidationError("face is not a triangle");
    std::set<int> vset, aset;
    for (int h : orbit) {
        vset.insert(d.vert[h]);
        aset.insert(d.arc_of[h]);
    }
    if (vset.size() != 3 || aset.size() != 3)
        throw ValidationError("degenerate triangle");

    // Per side: the strand enters at s1 and leaves at s2; collect the four
    // germs of each pass.
    struct Side {
        int out1, in1, in2, out2;
    };
    std::vector<Side> sides;
    for (int a : aset) {
        int f = d.arc_fwd[a];
        Side s;
        s.out1 = f;
        s.in2 = d.alpha[f];
        s.in1 = d.sigma[d.sigma[s.out1]];
        s.out2 = d.sigma[d.sigma[s.in2]];
        sides.push_back(s);
    }
    std::map<int, int> rho; // dart substitution on external arc endpoints
    for (const auto& s : sides) {
        rho[s.in1] = s.in2;
        rho[s.out2] = s.out1;
    }
    // Loops and the outer witness must be re-anchored away from the sectors
    // that change owner (the triangle sector and the opposite one at each
    // corner).
    std::set<int> critical;
    for (int h : orbit) {
        critical.insert(h);
        critical.insert(d.sigma[d.sigma[h]]);
    }
    auto rewitness = [&](const RegionRef& ref, const char* what) -> RegionRef {
        if (ref.kind != RegionRef::Face)
            return ref;
        int f0 = d.face_of[d.dart_index(ref.id)];
        if (f0 == face)
            throw ValidationError("a loop sits inside the flipped region");
        long long best = -1;
        for (int h : d.face_darts[f0])
            if (!critical.count(h) && (best == -1 || d.dart_id[h] < best))
                best = d.dart_id[h];
        if (best < 0)
            throw ValidationError(std::string(what) + " would be swept by the flip");
        return RegionRef::face(best);
    };

    auto data = detail::records_of(d);
    data.twins.clear();
    data.strands.clear();
    auto sub = [&](int h) { return rho.count(h) ? rho[h] : h; };
    for (int a = 0; a < d.num_arcs(); ++a) {
        if (aset.count(a))
            continue;
        int f = sub(d.arc_fwd[a]);
        int h = sub(d.alpha[d.arc_fwd[a]]);
        data.twins.emplace_back(std::min(d.dart_id[f], d.dart_id[h]),
                                std::max(d.dart_id[f], d.dart_id[h]));
        data.strands.emplace_back(d.dart_id[f], d.dart_id[d.sigma[d.sigma[h]]]);
    }
    for (const auto& s : sides) {
        data.twins.emplace_back(std::min(d.dart_id[s.out2], d.dart_id[s.in1]),
                                std::max(d.dart_id[s.out2], d.dart_id[s.in1]));
        data.strands.emplace_back(d.dart_id[s.out2], d.dart_id[d.sigma[d.sigma[s.in1]]]);
    }
    std::sort(data.twins.begin(), data.twins.end());
    std::sort(data.strands.begin(), data.strands.end());

    for (auto& l : data.loops)
        l.container = rewitness(l.container, "a loop's region");
    data.outer_witness =
        rewitness(RegionRef::face(*data.outer_witness), "the unbounded region").id;
    if (data.base_edge) {
        // keep the base only if its arc was not rewired
        int ba = find_arc(d, *data.base_edge);
        if (aset.count(ba) || rho.count(d.arc_fwd[ba]) || rho.count(d.alpha[d.arc_fwd[ba]]))
            data.base_edge.reset();
    }

    ApplyOutcome out;
    out.next = rebuild(data, d.name);

    // New triangle: bounded by the three new side arcs.
    std::set<long long> mid_darts;
    for (const auto& s : sides) {
        mid_darts.insert(d.dart_id[s.out2]);
        mid_darts.insert(d.dart_id[s.in1]);
    }
    long long tw = -1;
    for (int fidx = 0; fidx < out.next.num_faces(); ++fidx) {
        const auto& darts = out.next.face_darts[fidx];
        if (darts.size() != 3)
            continue;
        bool all = true;
        for (int h : darts)
            all = all && mid_darts.count(out.next.dart_id[h]);
        if (all)
            tw = out.next.dart_id[darts[0]];
    }
    if (tw < 0)
        throw ValidationError("flip did not produce the opposite triangle");
    SliceEvent inv;
    inv.kind = EventKind::Riii;
    inv.face_witness = tw;
    out.inverse = inv;
    return out;
}

// Rotation number of a single closed strand: +-1 for the boundary of an
// embedded disk. Sum of traversal-order crossing signs plus a unit from the
// side of the unbounded region along a base edge on it.
Rational rot_number(const Diagram& d) {
    auto arcs = outer_adjacent_arcs(d);
    if (arcs.empty())
        throw ValidationError("no outer-adjacent edge");
    int base = arcs.front();
    auto eps = epsilon(d, base, EpsilonConvention::Paper);
    int mu = d.right_region(base) == d.outer_region() ? +1 : -1;
    Rational rot(mu);
    for (int v = 0; v < d.num_vertices(); ++v)
        rot += Rational(eps[v]);
    return rot;
}

} // namespace

ApplyOutcome apply_event_impl(const Diagram& d, const SliceEvent& e) {
    switch (e.kind) {
    case EventKind::Birth:
        return apply_birth(d, e);
    case EventKind::Death:
        return apply_death(d, e);
    case EventKind::Saddle:
        return apply_saddle(d, e);
    case EventKind::RiiCreate:
        return apply_rii_create(d, e);
    case EventKind::RiiAnnihilate:
        return apply_rii_annihilate(d, e);
    case EventKind::Riii:
        return apply_riii(d, e);
    }
    throw ValidationError("unknown event");
}

ApplyOutcome apply_event(const Diagram& d, const SliceEvent& e) {
    ApplyOutcome out = apply_event_impl(d, e);
    // The annihilation inverse needs sites; recover them by trial against the
    // original diagram.
    if (e.kind == EventKind::RiiAnnihilate) {
        std::vector<StrandSite> sites;
        for (int a = 0; a < out.next.num_arcs(); ++a)
            sites.push_back(StrandSite::arc(out.next.arc_external_id(a)));
        for (const auto& l : out.next.loops)
            sites.push_back(StrandSite::loop(l.id));
        std::vector<RegionRef> regions;
        for (int r = 0; r < out.next.num_regions(); ++r)
            regions.push_back(out.next.region_ref(r));
        bool found = false;
        for (const auto& sa : sites)
            for (const auto& sb : sites)
                for (const auto& reg : regions)
                    for (int chir : {+1, -1}) {
                        if (found)
                            continue;
                        SliceEvent cand;
                        cand.kind = EventKind::RiiCreate;
                        cand.site_a = sa;
                        cand.site_b = sb;
                        cand.region = reg;
                        cand.chir = chir;
                        try {
                            if (isomorphic(apply_event_impl(out.next, cand).next, d)) {
                                out.inverse = cand;
                                found = true;
                            }
                        } catch (const ValidationError&) {
                        }
                    }
        if (!found)
            throw ValidationError("could not reconstruct the inverse crossing event");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Movie assembly, parsing, serialization

namespace {

bool frame_is_empty(const Diagram& d) { return d.num_vertices() == 0 && d.loops.empty(); }

Diagram empty_frame(const std::string& name) {
    detail::DiagramData data;
    data.name = name;
    return detail::build(data);
}

std::string site_str(const StrandSite& s) {
    return (s.is_loop ? "loop:" : "arc:") + std::to_string(s.id);
}
StrandSite parse_site(const std::string& t) {
    if (t.rfind("loop:", 0) == 0)
        return StrandSite::loop(std::stoll(t.substr(5)));
    if (t.rfind("arc:", 0) == 0)
        return StrandSite::arc(std::stoll(t.substr(4)));
    throw ParseError("bad site '" + t + "'");
}
std::string region_str(const RegionRef& r) {
    switch (r.kind) {
    case RegionRef::Outer:
        return "outer";
    case RegionRef::Face:
        return "face:" + std::to_string(r.id);
    case RegionRef::LoopInterior:
        return "in:" + std::to_string(r.id);
    }
    return "?";
}
RegionRef parse_region(const std::string& s) {
    if (s == "outer")
        return RegionRef::outer();
    if (s.rfind("face:", 0) == 0)
        return RegionRef::face(std::stoll(s.substr(5)));
    if (s.rfind("in:", 0) == 0)
        return RegionRef::loop(std::stoll(s.substr(3)));
    throw ParseError("bad region '" + s + "'");
}

std::string event_str(const SliceEvent& e) {
    std::ostringstream s;
    s << "event ";
    switch (e.kind) {
    case EventKind::Birth:
        s << "birth " << (e.ccw ? "ccw" : "cw") << " in " << region_str(e.region);
        break;
    case EventKind::Death:
        s << "death " << e.site_a.id;
        break;
    case EventKind::Saddle:
        s << "saddle " << site_str(e.site_a) << " " << site_str(e.site_b);
        if (!e.site_a.is_loop && e.site_a == e.site_b)
            s << " " << (e.side > 0 ? "left" : "right");
        break;
    case EventKind::RiiCreate:
        s << "rii-create " << site_str(e.site_a) << " across " << site_str(e.site_b) << " in "
          << region_str(e.region) << " " << (e.chir > 0 ? "left" : "right");
        break;
    case EventKind::RiiAnnihilate:
        s << "rii-annihilate face:" << e.face_witness;
        break;
    case EventKind::Riii:
        s << "riii face:" << e.face_witness;
        break;
    }
    return s.str();
}

SliceEvent parse_event(const std::vector<std::string>& t) {
    SliceEvent e;
    if (t.size() < 2)
        throw ParseError("empty event record");
    const std::string& k = t[1];
    if (k == "birth") {
        e.kind = EventKind::Birth;
        if (t.size() < 3 || (t[2] != "ccw" && t[2] != "cw"))
            throw ParseError("birth needs ccw|cw");
        e.ccw = (t[2] == "ccw");
        e.region = (t.size() >= 5 && t[3] == "in") ? parse_region(t[4]) : RegionRef::outer();
    } else if (k == "death") {
        e.kind = EventKind::Death;
        e.site_a = StrandSite::loop(std::stoll(t.at(2)));
    } else if (k == "saddle") {
        e.kind = EventKind::Saddle;
        e.site_a = parse_site(t.at(2));
        e.site_b = parse_site(t.at(3));
        if (t.size() >= 5)
            e.side = (t[4] == "left") ? +1 : -1;
    } else if (k == "rii-create") {
        e.kind = EventKind::RiiCreate;
        if (t.size() < 8 || t[3] != "across" || t[5] != "in")
            throw ParseError("rii-create <site> across <site> in <region> <left|right>");
        e.site_a = parse_site(t[2]);
        e.site_b = parse_site(t[4]);
        e.region = parse_region(t[6]);
        e.chir = (t[7] == "left") ? +1 : -1;
    } else if (k == "rii-annihilate") {
        e.kind = EventKind::RiiAnnihilate;
        e.face_witness = std::stoll(t.at(2).substr(t.at(2).find(':') + 1));
    } else if (k == "riii") {
        e.kind = EventKind::Riii;
        e.face_witness = std::stoll(t.at(2).substr(t.at(2).find(':') + 1));
    } else {
        throw ParseError("unknown event kind '" + k + "'");
    }
    return e;
}

} // namespace

Movie assemble_movie(std::string name, Rational shift, Diagram first,
                     std::vector<SliceEvent> events) {
    Movie m;
    m.name = std::move(name);
    m.shift = shift;
    if (!frame_is_empty(first))
        throw ValidationError("movie must start with an empty slice");
    first.name = m.name + "-0";
    m.frames.push_back(std::move(first));
    for (size_t i = 0; i < events.size(); ++i) {
        ApplyOutcome out = apply_event(m.frames.back(), events[i]);
        out.next.name = m.name + "-" + std::to_string(i + 1);
        m.frames.push_back(std::move(out.next));
        m.events.push_back(events[i]);
        m.inverses.push_back(out.inverse);
    }
    if (!frame_is_empty(m.frames.back()))
        throw ValidationError("movie must end with an empty slice");
    return m;
}

Movie parse_movie(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::string name;
    Rational shift(-3, 2);
    bool have_header = false;
    std::vector<SliceEvent> events;
    std::vector<std::pair<size_t, Diagram>> checkpoints; // after event index
    bool first_frame_seen = false;
    Diagram first;

    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> t;
        std::string tok;
        while (ls >> tok)
            t.push_back(tok);
        if (t.empty())
            continue;
        if (t[0] == "movie") {
            if (t.size() != 4 || t[2] != "shift")
                throw ParseError("movie header: movie <name> shift <q>");
            name = t[1];
            shift = parse_rational(t[3]);
            have_header = true;
        } else if (t[0] == "frame") {
            std::string body;
            while (std::getline(in, line)) {
                auto h2 = line.find('#');
                std::string stripped = h2 == std::string::npos ? line : line.substr(0, h2);
                std::istringstream cs(stripped);
                std::string w;
                if (cs >> w && w == "}")
                    break;
                body += line + "\n";
            }
            Diagram f = parse_diagram(body);
            if (!first_frame_seen) {
                first = std::move(f);
                first_frame_seen = true;
            } else {
                checkpoints.emplace_back(events.size(), std::move(f));
            }
        } else if (t[0] == "event") {
            if (!first_frame_seen) {
                first = empty_frame(name.empty() ? "frame" : name);
                first_frame_seen = true;
            }
            events.push_back(parse_event(t));
        } else {
            throw ParseError("unknown movie record '" + t[0] + "'");
        }
    }
    if (!have_header)
        throw ParseError("missing movie header");
    if (!first_frame_seen)
        first = empty_frame(name);
    Movie m = assemble_movie(name, shift, std::move(first), std::move(events));
    for (const auto& [after, f] : checkpoints) {
        if (!isomorphic(m.frames.at(after), f))
            throw ValidationError("frame checkpoint after event " + std::to_string(after) +
                                  " does not match the computed slice");
    }
    return m;
}

std::string serialize(const Movie& m) {
    std::ostringstream out;
    out << "movie " << m.name << " shift " << m.shift.str() << "\n";
    for (size_t i = 0; i < m.frames.size(); ++i) {
        out << "frame {\n" << serialize(m.frames[i]) << "}\n";
        if (i < m.events.size())
            out << event_str(m.events[i]) << "\n";
    }
    return out.str();
}

Movie reverse_movie(const Movie& m) {
    std::vector<SliceEvent> rev(m.inverses.rbegin(), m.inverses.rend());
    return assemble_movie(m.name + "-reversed", m.shift, m.frames.back(), std::move(rev));
}

// ---------------------------------------------------------------------------
// Invariants of movies

St2Result st2_of_movie(const Movie& m) {
    St2Result res;
    res.st2 = Rational(0);
    for (size_t i = 0; i < m.events.size(); ++i) {
        if (m.events[i].kind != EventKind::Riii)
            continue;
        const Diagram& before = m.frames[i];
        const Diagram& after = m.frames[i + 1];
        auto phi_b = compute_alexander(before, Convention::Curve);
        auto phi_a = compute_alexander(after, Convention::Curve);

        int face_b = before.face_of[before.dart_index(m.events[i].face_witness)];
        int face_a = after.face_of[after.dart_index(m.inverses[i].face_witness)];

        TriplePointRecord rec;
        rec.event_index = static_cast<int>(i);
        rec.before_value = phi_b.value[face_b];
        rec.after_value = phi_a.value[face_a];
        int k = 0;
        Rational sum = rec.before_value + rec.after_value;
        std::set<int> corner_faces;
        for (int h : before.face_darts[face_b]) {
            rec.sectors[k] = phi_b.value[before.face_of[before.alpha[h]]]; // across a side
            rec.sectors[3 + k] =
                phi_b.value[before.face_of[before.sigma[before.sigma[h]]]]; // opposite corner
            sum += rec.sectors[k] + rec.sectors[3 + k];
            ++k;
        }
        rec.ind = sum / Rational(8) + m.shift;

        // The eight values, shifted, must be the octant pattern of the ball.
        std::vector<Rational> got{rec.before_value + m.shift, rec.after_value + m.shift};
        for (const auto& s : rec.sectors)
            got.push_back(s + m.shift);
        std::vector<Rational> want;
        for (const auto& o : build_ball(rec.ind).octants)
            want.push_back(o.value);
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        if (got != want)
            throw ValidationError("triangle flip neighborhood does not match the "
                                  "triple-point pattern at event " +
                                  std::to_string(i));
        res.st2 += rec.ind;
        res.records.push_back(rec);
    }
    return res;
}

std::vector<Rational> st1_trace(const Movie& m) {
    std::vector<Rational> out;
    for (const auto& f : m.frames) {
        auto phi = compute_alexander(f, Convention::Curve);
        out.push_back(st1(f, phi).point);
    }
    return out;
}

SliceCompareReport slice_formula_check(const Movie& before, const Movie& after,
                                       const Rational& dst1, int sigma) {
    SliceCompareReport rep;
    rep.dst2 = st2_of_movie(after).st2 - st2_of_movie(before).st2;
    rep.dst1 = dst1;
    rep.sigma = sigma;
    rep.holds = (rep.dst2 == rep.dst1 + Rational(sigma));
    return rep;
}

} // namespace dstokes

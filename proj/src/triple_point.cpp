#include "dstokes/triple_point.hpp"

#include "dstokes/diagram.hpp"

namespace dstokes {

TriplePointBall build_ball(const Rational& x) {
    TriplePointBall b;
    b.x = x;

    int oi = 0;
    for (int s0 : {+1, -1})
        for (int s1 : {+1, -1})
            for (int s2 : {+1, -1}) {
                TriplePointBall::Octant o;
                o.s = {s0, s1, s2};
                o.value = x + Rational(s0 + s1 + s2, 2);
                o.sign = s0 * s1 * s2;
                b.octants[oi++] = o;
            }

    int si = 0;
    for (int plane = 0; plane < 3; ++plane)
        for (int qa : {+1, -1})
            for (int qb : {+1, -1}) {
                TriplePointBall::SheetPiece p;
                p.plane = plane;
                p.q = {qa, qb};
                // Octant values on the two sides of the plane differ by one;
                // the average shifts by half the quadrant signs.
                p.value = x + Rational(qa + qb, 2);
                // Boundary germs lie on the two lines inside the plane, on
                // sides qa and qb; both point away exactly when both signs
                // are positive, both toward when both are negative.
                p.sign = (qa == qb) ? +1 : -1;
                b.sheets[si++] = p;
            }

    int li = 0;
    for (int line = 0; line < 3; ++line)
        for (int side : {+1, -1}) {
            TriplePointBall::LineGerm g;
            g.line = line;
            g.side = side;
            g.value = x + Rational(side, 2);
            g.sign = side; // oriented toward increasing index
            b.lines[li++] = g;
        }
    return b;
}

namespace {
LevelCheck make_check(Level level, Rational raw, Rational norm, Rational expected) {
    LevelCheck c;
    c.level = level;
    c.raw = raw;
    c.normalization = norm;
    c.value = raw * norm;
    c.expected = expected;
    c.pass = (c.value == expected);
    return c;
}
} // namespace

LevelCheck d1_surface_eval(const TriplePointBall& b) {
    Rational raw(0);
    for (const auto& g : b.lines)
        raw += Rational(g.sign) * g.value * g.value;
    return make_check(Level::Edge, raw, Rational(1, 6), b.x);
}

LevelCheck d2_surface_eval(const TriplePointBall& b) {
    Rational raw(0);
    for (const auto& p : b.sheets)
        raw += Rational(p.sign) * p.value * p.value * p.value;
    return make_check(Level::Face, raw, Rational(1, 18), b.x);
}

LevelCheck d3_surface_eval(const TriplePointBall& b) {
    Rational raw(0);
    for (const auto& o : b.octants)
        raw += Rational(o.sign) * o.value * o.value * o.value * o.value;
    return make_check(Level::Region, raw, Rational(1, 24), b.x);
}

LevelCheck check_stokes_surface(const TriplePointBall& b) {
    auto face = d2_surface_eval(b);
    auto region = d3_surface_eval(b);
    LevelCheck c;
    c.level = Level::Stokes;
    c.raw = region.value;
    c.normalization = Rational(1);
    c.value = region.value;
    c.expected = face.value;
    c.pass = region.pass && face.pass && region.value == face.value;
    return c;
}

SurfaceTotals shumakovitch_surface(const std::vector<TriplePointBall>& balls) {
    SurfaceTotals t{Rational(0), Rational(0), Rational(0), Rational(0)};
    for (const auto& b : balls) {
        t.point += b.x;
        t.edge += d1_surface_eval(b).value;
        t.face += d2_surface_eval(b).value;
        t.region += d3_surface_eval(b).value;
    }
    return t;
}

std::array<long long, 4> region_sign_profile(const TriplePointBall& b) {
    std::array<long long, 4> profile{0, 0, 0, 0};
    for (const auto& o : b.octants) {
        // group index by value from the top: x+3/2 -> 0, ..., x-3/2 -> 3
        Rational off = b.x + Rational(3, 2) - o.value;
        if (!off.is_integer() || off.num < 0 || off.num > 3)
            throw ValidationError("octant value outside the cubical pattern");
        profile[static_cast<int>(off.num)] += o.sign;
    }
    return profile;
}

} // namespace dstokes

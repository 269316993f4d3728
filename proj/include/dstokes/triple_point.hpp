#pragma once

#include <array>
#include <vector>

#include "dstokes/rational.hpp"

namespace dstokes {

/// Local model of a surface triple point: three cooriented sheets through a
/// ball, meeting pairwise in three double lines and cutting the ball into
/// eight octants. Octants are labelled by sign vectors in {+,-}^3 relative
/// to the three coorientations, so the octant value is
/// x + (s1+s2+s3)/2 for x the triple point index.
struct TriplePointBall {
    Rational x; // ind of the triple point

    struct Octant {
        std::array<int, 3> s; // +-1 per sheet side
        Rational value;
        int sign; // s1*s2*s3: the alternating cubical weight
    };
    /// Quarter-plane piece of one sheet: plane k is cut by the two double
    /// lines it contains into four quadrants indexed by the side signs of
    /// the other two sheets (in cyclic order k+1, k+2).
    struct SheetPiece {
        int plane;            // 0,1,2
        std::array<int, 2> q; // quadrant signs
        Rational value;       // average of its two octants
        int sign;             // +1 iff its two boundary germs point the same way
    };
    /// Germ of a double line at the triple point. Lines are oriented toward
    /// increasing index, so the germ on the positive side points away.
    struct LineGerm {
        int line;  // 0,1,2 (line k = intersection of the two planes != k)
        int side;  // +-1
        Rational value; // average of its four octants
        int sign;  // -1 toward the point, +1 away
    };

    std::array<Octant, 8> octants;
    std::array<SheetPiece, 12> sheets;
    std::array<LineGerm, 6> lines;
};

TriplePointBall build_ball(const Rational& x);

enum class Level { Edge, Face, Region, Stokes };

struct LevelCheck {
    Level level = Level::Edge;
    Rational raw;
    Rational normalization;
    Rational value;
    Rational expected;
    bool pass = false;
};

/// Edge level: signed squares over the six line germs; raw sum 6x.
LevelCheck d1_surface_eval(const TriplePointBall& ball);
/// Face level: signed cubes over the twelve sheet pieces; raw sum 18x.
LevelCheck d2_surface_eval(const TriplePointBall& ball);
/// Region level: signed fourth powers over the eight octants; raw sum 24x.
LevelCheck d3_surface_eval(const TriplePointBall& ball);
/// Highest-degree pairing: region evaluation over 24 must match the face
/// evaluation over 18 (both equal x).
LevelCheck check_stokes_surface(const TriplePointBall& ball);

struct SurfaceTotals {
    Rational point, edge, face, region;
    bool pass() const { return point == edge && edge == face && face == region; }
};

/// Four-level totals over a collection of triple points.
SurfaceTotals shumakovitch_surface(const std::vector<TriplePointBall>& balls);

/// Signed coefficients of the region level grouped by octant value, from the
/// top value down; for every ball this is {1, -3, 3, -1}.
std::array<long long, 4> region_sign_profile(const TriplePointBall& ball);

} // namespace dstokes

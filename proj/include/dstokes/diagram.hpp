#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dstokes {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Reference to a region of the plane cut out by a diagram: either a face of
/// the 4-valent map, the interior of a crossing-free loop, or (for diagrams
/// with no crossings) the unbounded region.
struct RegionRef {
    enum Kind { Face, LoopInterior, Outer } kind = Outer;
    long long id = 0; // face: witness half-edge external id; loop: loop id

    static RegionRef face(long long witness) { return {Face, witness}; }
    static RegionRef loop(long long loop_id) { return {LoopInterior, loop_id}; }
    static RegionRef outer() { return {Outer, 0}; }

    bool operator==(const RegionRef&) const = default;
};

/// An oriented generic immersed plane curve (or several), modelled as an
/// oriented combinatorial map: every double point is a 4-valent vertex
/// carrying the counterclockwise order of its four half-edge germs, twin
/// pairs the two germs of each arc, and the strand successor chains arcs
/// along the curve orientation.  Closed components without crossings are
/// carried separately as "free loops" nested in regions.
///
/// File format (line oriented, '#' comments):
///   curve <name>
///   vertex <id> <h0> <h1> <h2> <h3>    half-edges counterclockwise at vertex
///   twin <h> <h'>                      the two germs of one arc
///   strand <h> <h'>                    h' follows h along the orientation
///   outer <witness-half-edge>          face whose trace is the unbounded region
///   base <edge-id>                     optional; edge id = min half-edge id of pair
///   loop <id> <ccw|cw> [in <region>]   crossing-free closed component
/// Region references are "outer", "face:<half-edge>" or "in:<loop-id>".
/// Lines beginning with "geom" carry optional coordinate data and are ignored
/// by the parser (the geometric test oracle consumes them).
struct Diagram {
    std::string name;

    // Dart arrays, indexed by internal dart index. A dart is a half-edge
    // germ rooted at its tail vertex.
    std::vector<long long> dart_id;   // external id
    std::vector<int> sigma;           // next dart counterclockwise at vertex
    std::vector<int> sigma_inv;
    std::vector<int> alpha;           // twin dart (other end of the arc)
    std::vector<int> vert;            // tail vertex index
    std::vector<char> is_forward;     // dart points along the curve orientation
    std::vector<int> snext;           // forward dart -> next forward dart; -1 on backward darts

    std::vector<long long> vertex_id; // vertex index -> external id

    // Faces: orbits of dart -> sigma_inv[alpha[dart]]; the face of a dart is
    // the region on its left.
    std::vector<int> face_of;                // dart -> face index
    std::vector<std::vector<int>> face_darts; // face index -> orbit, in trace order
    int outer_face = -1;                      // face index; -1 iff no vertices

    // Arcs: arc k is identified by its forward dart.
    std::vector<int> arc_fwd;    // arc index -> forward dart
    std::vector<int> arc_of;     // dart -> arc index

    std::optional<int> base_arc; // arc index of the designated base edge

    struct FreeLoop {
        long long id = 0;
        bool ccw = true;
        RegionRef container = RegionRef::outer();
    };
    std::vector<FreeLoop> loops;

    int num_vertices() const { return static_cast<int>(vertex_id.size()); }
    int num_darts() const { return static_cast<int>(dart_id.size()); }
    int num_arcs() const { return static_cast<int>(arc_fwd.size()); }
    int num_faces() const { return static_cast<int>(face_darts.size()); }

    /// Regions: faces first (indices [0,F)), then loop interiors. A diagram
    /// with no vertices has a single synthetic outer region at index 0.
    int num_regions() const {
        int f = num_vertices() > 0 ? num_faces() : 1;
        return f + static_cast<int>(loops.size());
    }
    int outer_region() const { return num_vertices() > 0 ? outer_face : 0; }
    int loop_region(int loop_index) const {
        return (num_vertices() > 0 ? num_faces() : 1) + loop_index;
    }
    bool region_is_loop(int region) const {
        return region >= (num_vertices() > 0 ? num_faces() : 1);
    }
    int region_loop_index(int region) const {
        return region - (num_vertices() > 0 ? num_faces() : 1);
    }

    int resolve_region(const RegionRef& ref) const;
    RegionRef region_ref(int region) const;

    int dart_index(long long external_id) const;
    int loop_index(long long loop_id) const;

    /// Number of closed strands in the crossing part plus free loops.
    int strand_count() const;
    int crossing_strand_count() const;

    /// Left/right regions of an arc with respect to the curve orientation.
    int left_region(int arc) const { return face_of[arc_fwd[arc]]; }
    int right_region(int arc) const { return face_of[alpha[arc_fwd[arc]]]; }

    /// External edge id of an arc (min of its two half-edge ids).
    long long arc_external_id(int arc) const;

    /// Boundary length of a face counted in half-edge germ incidences
    /// (each arc traversal contributes its two end germs).
    int face_boundary_length(int face) const {
        return 2 * static_cast<int>(face_darts[face].size());
    }
};

Diagram parse_diagram(const std::string& text);
std::string serialize(const Diagram& d);

/// Re-runs the structural checks (permutation shapes, transversality,
/// connectivity, Euler count, loop nesting). parse_diagram calls this; event
/// rewiring uses it to validate rebuilt diagrams.
void validate(const Diagram& d);

/// Curve with reversed orientation on every component: forward darts swap
/// with their twins and free loops flip handedness. The rotation system is
/// unchanged (the plane keeps its orientation).
Diagram reverse_orientation(const Diagram& d);

/// Map isomorphism preserving rotation, twins, orientation, the outer face
/// and the free-loop nesting forest. The base edge is ignored.
bool isomorphic(const Diagram& a, const Diagram& b);

/// Cells of the decomposition induced by the curve, with adjacency lists
/// that keep slot multiplicity (a region touching a vertex in two sectors
/// appears twice).
struct MapCell {
    int dimension = 0;
    long long id = 0; // vertex id / edge id / face witness id
    std::vector<long long> vertices;
    std::vector<long long> edges;
    std::vector<long long> faces;
};
struct CellLists {
    std::vector<MapCell> vertices, edges, faces;
};
CellLists cells(const Diagram& d);

/// Arcs adjacent to the outer face, sorted by external edge id.
std::vector<int> outer_adjacent_arcs(const Diagram& d);

namespace detail {
/// Builder used by the parser and by move rewiring: raw records from which
/// a Diagram is assembled and validated.
struct DiagramData {
    std::string name;
    struct VertexRec {
        long long id;
        long long darts[4];
    };
    std::vector<VertexRec> vertices;
    std::vector<std::pair<long long, long long>> twins;
    std::vector<std::pair<long long, long long>> strands;
    std::optional<long long> outer_witness;
    std::optional<long long> base_edge;
    struct LoopRec {
        long long id;
        bool ccw;
        RegionRef container;
    };
    std::vector<LoopRec> loops;
};
Diagram build(const DiagramData& data);
DiagramData records_of(const Diagram& d);
} // namespace detail

} // namespace dstokes

#pragma once

#include <array>
#include <optional>
#include <vector>

#include "dstokes/alexander.hpp"
#include "dstokes/diagram.hpp"
#include "dstokes/triple_point.hpp"

namespace dstokes {

enum class EventKind { Birth, Death, Saddle, RiiCreate, RiiAnnihilate, Riii };

/// A site on the curve: an arc (by external edge id) or a free loop (by id).
struct StrandSite {
    bool is_loop = false;
    long long id = 0;

    static StrandSite arc(long long edge) { return {false, edge}; }
    static StrandSite loop(long long id) { return {true, id}; }
    bool operator==(const StrandSite&) const = default;
};

/// One slice event. Field use per kind:
///   Birth:         ccw, region
///   Death:         site_a (loop)
///   Saddle:        site_a, site_b; side for an arc shed onto itself
///   RiiCreate:     site_a (finger), site_b (crossed), region, chir
///   RiiAnnihilate: face_witness (half-edge on the bigon)
///   Riii:          face_witness (half-edge on the triangle)
struct SliceEvent {
    EventKind kind = EventKind::Birth;
    bool ccw = true;
    RegionRef region = RegionRef::outer();
    StrandSite site_a, site_b;
    int side = +1; // +1 left, -1 right
    int chir = +1; // finger tip turn: +1 left, -1 right
    long long face_witness = 0;
};

struct ApplyOutcome {
    Diagram next;
    SliceEvent inverse; // verified: applying it to `next` restores the input
};

/// Applies a slice event and revalidates the result. Throws ValidationError
/// on invalid sites or on rewirings that break planarity.
ApplyOutcome apply_event(const Diagram& d, const SliceEvent& e);

/// Height-slice presentation of a closed surface: frames connected by
/// events, first and last frames empty.
struct Movie {
    std::string name;
    Rational shift = Rational(-3, 2); // slice-to-surface numbering shift
    std::vector<Diagram> frames;
    std::vector<SliceEvent> events;
    std::vector<SliceEvent> inverses; // per event, recorded while assembling
};

Movie parse_movie(const std::string& text);
std::string serialize(const Movie& m);

/// Builds a movie from an initial frame and events, validating every step.
Movie assemble_movie(std::string name, Rational shift, Diagram first,
                     std::vector<SliceEvent> events);

Movie reverse_movie(const Movie& m);

/// Data extracted at one triangle-flip event: the flipped region's value
/// before and after, the six persistent sector values, and the shifted
/// eight-value average, which must fit the triple-point octant pattern.
struct TriplePointRecord {
    int event_index = 0;
    Rational before_value, after_value;
    std::array<Rational, 6> sectors;
    Rational ind;
};

struct St2Result {
    Rational st2;
    std::vector<TriplePointRecord> records;
};

St2Result st2_of_movie(const Movie& m);

/// Point-level untwisted invariant of each frame.
std::vector<Rational> st1_trace(const Movie& m);

struct SliceCompareReport {
    Rational dst2;  // st2(after) - st2(before)
    Rational dst1;  // caller-designated slice jump
    int sigma = +1; // caller-supplied transition sign
    bool holds = false;
};

SliceCompareReport slice_formula_check(const Movie& before, const Movie& after,
                                       const Rational& dst1, int sigma);

} // namespace dstokes

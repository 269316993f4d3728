#pragma once

#include <optional>
#include <vector>

#include "dstokes/derham.hpp"
#include "dstokes/signs.hpp"

namespace dstokes {

/// Three evaluations of one invariant, which must agree exactly.
struct ThreeLevel {
    Rational point, edge, region;
    bool pass() const { return point == edge && edge == region; }
};

struct LedgerRow {
    long long vertex_id = 0;
    int eps = +1; // +1 for the untwisted family
    Rational ind;
    Rational point_level, edge_level, region_level;
    bool pass() const {
        Rational expect = Rational(eps) * ind;
        return point_level == expect && edge_level == expect && region_level == expect;
    }
};

struct InvariantReport {
    ThreeLevel st1;
    std::vector<LedgerRow> st1_ledger;
    std::optional<ThreeLevel> st; // present when a base edge is available
    std::vector<LedgerRow> st_ledger;
    bool all_pass() const;
};

/// Sum of double-point indices, with the edge-level sum over incoming germ
/// incidences (halved) and the region-level sum over sector slots (divided
/// by six) as independent evaluations.
ThreeLevel st1(const Diagram& d, const AlexanderCochain& phi);

/// Base-pointed invariant: traversal-signed point sum, edge-sign-weighted
/// square sum over arcs (halved), and gleam-weighted cube sum over regions
/// (divided by three).
ThreeLevel st_original(const Diagram& d, const AlexanderCochain& phi, const TwistedSigns& tw);

std::vector<LedgerRow> per_vertex_ledger(const Diagram& d, const AlexanderCochain& phi,
                                         const TwistedSigns& tw);
std::vector<LedgerRow> per_vertex_ledger_untwisted(const Diagram& d, const AlexanderCochain& phi);

/// Full report; computes the twisted family when the diagram has a base edge
/// (or a single strand with at least one outer-adjacent edge and
/// `use_default_base`).
InvariantReport invariant_report(const Diagram& d,
                                 EpsilonConvention conv = EpsilonConvention::Paper,
                                 bool use_default_base = false);

} // namespace dstokes

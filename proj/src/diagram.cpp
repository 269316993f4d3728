#include "dstokes/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace dstokes {

int Diagram::dart_index(long long external_id) const {
    for (int i = 0; i < num_darts(); ++i)
        if (dart_id[i] == external_id)
            return i;
    throw ValidationError("unknown half-edge id " + std::to_string(external_id));
}

int Diagram::loop_index(long long id) const {
    for (int i = 0; i < static_cast<int>(loops.size()); ++i)
        if (loops[i].id == id)
            return i;
    throw ValidationError("unknown loop id " + std::to_string(id));
}

int Diagram::resolve_region(const RegionRef& ref) const {
    switch (ref.kind) {
    case RegionRef::Outer:
        return outer_region();
    case RegionRef::Face:
        if (num_vertices() == 0)
            throw ValidationError("face reference in a diagram without crossings");
        return face_of[dart_index(ref.id)];
    case RegionRef::LoopInterior:
        return loop_region(loop_index(ref.id));
    }
    throw ValidationError("bad region reference");
}

RegionRef Diagram::region_ref(int region) const {
    if (region == outer_region() && !region_is_loop(region))
        return RegionRef::outer();
    if (region_is_loop(region))
        return RegionRef::loop(loops[region_loop_index(region)].id);
    long long witness = dart_id[face_darts[region][0]];
    for (int dart : face_darts[region])
        witness = std::min(witness, dart_id[dart]);
    return RegionRef::face(witness);
}

int Diagram::crossing_strand_count() const {
    std::vector<char> seen(num_darts(), 0);
    int n = 0;
    for (int h = 0; h < num_darts(); ++h) {
        if (!is_forward[h] || seen[h])
            continue;
        ++n;
        for (int c = h; !seen[c]; c = snext[c])
            seen[c] = 1;
    }
    return n;
}

int Diagram::strand_count() const {
    return crossing_strand_count() + static_cast<int>(loops.size());
}

long long Diagram::arc_external_id(int arc) const {
    int f = arc_fwd[arc];
    return std::min(dart_id[f], dart_id[alpha[f]]);
}

std::vector<int> outer_adjacent_arcs(const Diagram& d) {
    std::vector<int> arcs;
    for (int a = 0; a < d.num_arcs(); ++a)
        if (d.left_region(a) == d.outer_region() || d.right_region(a) == d.outer_region())
            arcs.push_back(a);
    std::sort(arcs.begin(), arcs.end(),
              [&](int x, int y) { return d.arc_external_id(x) < d.arc_external_id(y); });
    return arcs;
}

namespace detail {

Diagram build(const DiagramData& data) {
    Diagram d;
    d.name = data.name;

    const int V = static_cast<int>(data.vertices.size());
    if (V == 0) {
        if (!data.twins.empty() || !data.strands.empty())
            throw ValidationError("twin/strand records without vertices");
        if (data.outer_witness)
            throw ValidationError("outer witness without vertices");
        if (data.base_edge)
            throw ValidationError("base edge without vertices");
    } else if (!data.outer_witness) {
        throw ValidationError("missing outer face designation");
    }

    std::map<long long, int> dart_of;
    std::set<long long> vids;
    for (const auto& vr : data.vertices) {
        if (!vids.insert(vr.id).second)
            throw ValidationError("duplicate vertex id " + std::to_string(vr.id));
        for (long long h : vr.darts) {
            if (dart_of.count(h))
                throw ValidationError("half-edge " + std::to_string(h) +
                                      " listed at two vertex slots");
            int idx = static_cast<int>(dart_of.size());
            dart_of[h] = idx;
            d.dart_id.push_back(h);
        }
    }
    const int n = d.num_darts();
    d.sigma.assign(n, -1);
    d.sigma_inv.assign(n, -1);
    d.alpha.assign(n, -1);
    d.vert.assign(n, -1);
    d.is_forward.assign(n, 0);
    d.snext.assign(n, -1);

    for (int vi = 0; vi < V; ++vi) {
        const auto& vr = data.vertices[vi];
        d.vertex_id.push_back(vr.id);
        for (int k = 0; k < 4; ++k) {
            int h = dart_of.at(vr.darts[k]);
            int nxt = dart_of.at(vr.darts[(k + 1) % 4]);
            d.sigma[h] = nxt;
            d.sigma_inv[nxt] = h;
            d.vert[h] = vi;
        }
    }

    for (auto [a, b] : data.twins) {
        if (!dart_of.count(a) || !dart_of.count(b))
            throw ValidationError("twin record references unknown half-edge");
        int i = dart_of[a], j = dart_of[b];
        if (i == j)
            throw ValidationError("half-edge twinned with itself");
        if (d.alpha[i] != -1 || d.alpha[j] != -1)
            throw ValidationError("half-edge in two twin pairs");
        d.alpha[i] = j;
        d.alpha[j] = i;
    }
    for (int h = 0; h < n; ++h)
        if (d.alpha[h] == -1)
            throw ValidationError("half-edge " + std::to_string(d.dart_id[h]) + " has no twin");

    // Strand records list the forward half of every arc exactly once.
    for (auto [a, b] : data.strands) {
        if (!dart_of.count(a) || !dart_of.count(b))
            throw ValidationError("strand record references unknown half-edge");
        int i = dart_of[a], j = dart_of[b];
        if (d.is_forward[i])
            throw ValidationError("half-edge " + std::to_string(a) + " has two strand successors");
        d.is_forward[i] = 1;
        d.snext[i] = j;
    }
    if (V > 0) {
        std::vector<char> is_target(n, 0);
        for (int h = 0; h < n; ++h) {
            if (d.is_forward[h] && d.is_forward[d.alpha[h]])
                throw ValidationError("both half-edges of an arc marked forward");
            if (!d.is_forward[h] && !d.is_forward[d.alpha[h]])
                throw ValidationError("arc at half-edge " + std::to_string(d.dart_id[h]) +
                                      " missing a strand record");
            if (d.is_forward[h]) {
                int t = d.snext[h];
                if (!d.is_forward[t])
                    throw ValidationError("strand successor is not a forward half-edge");
                if (is_target[t])
                    throw ValidationError("half-edge has two strand predecessors");
                is_target[t] = 1;
                // Transverse crossing: the continuation leaves along the germ
                // opposite the arrival germ in the rotation.
                if (t != d.sigma[d.sigma[d.alpha[h]]])
                    throw ValidationError("strand is not transverse at vertex " +
                                          std::to_string(d.vertex_id[d.vert[d.alpha[h]]]));
            }
        }

        // Connectivity of the crossing part under rotation + twins.
        std::vector<char> seen(n, 0);
        std::vector<int> stack{0};
        seen[0] = 1;
        while (!stack.empty()) {
            int h = stack.back();
            stack.pop_back();
            for (int t : {d.sigma[h], d.alpha[h]}) {
                if (!seen[t]) {
                    seen[t] = 1;
                    stack.push_back(t);
                }
            }
        }
        if (std::find(seen.begin(), seen.end(), 0) != seen.end())
            throw ValidationError("crossing part of the diagram is disconnected");
    }

    // Arcs indexed by forward dart, in dart order.
    for (int h = 0; h < n; ++h) {
        if (d.is_forward[h]) {
            d.arc_fwd.push_back(h);
        }
    }
    d.arc_of.assign(n, -1);
    for (int a = 0; a < d.num_arcs(); ++a) {
        d.arc_of[d.arc_fwd[a]] = a;
        d.arc_of[d.alpha[d.arc_fwd[a]]] = a;
    }

    // Face tracing: orbits of h -> sigma_inv[alpha[h]]; the orbit of h is the
    // region on the left of h.
    d.face_of.assign(n, -1);
    for (int h = 0; h < n; ++h) {
        if (d.face_of[h] != -1)
            continue;
        int f = d.num_faces();
        d.face_darts.emplace_back();
        for (int c = h; d.face_of[c] == -1; c = d.sigma_inv[d.alpha[c]]) {
            d.face_of[c] = f;
            d.face_darts[f].push_back(c);
        }
    }

    if (V > 0) {
        int E = n / 2;
        int F = d.num_faces();
        if (V - E + F != 2)
            throw ValidationError("rotation system is not planar: V-E+F = " +
                                  std::to_string(V - E + F) + " (expected 2)");
        d.outer_face = d.face_of[dart_of.at(*data.outer_witness)];
    }

    if (data.base_edge) {
        int found = -1;
        for (int a = 0; a < d.num_arcs(); ++a)
            if (d.arc_external_id(a) == *data.base_edge)
                found = a;
        if (found < 0)
            throw ValidationError("base edge " + std::to_string(*data.base_edge) + " not found");
        if (d.left_region(found) != d.outer_region() && d.right_region(found) != d.outer_region())
            throw ValidationError("base edge does not border the outer face");
        d.base_arc = found;
    }

    std::set<long long> loop_ids;
    for (const auto& lr : data.loops) {
        if (!loop_ids.insert(lr.id).second)
            throw ValidationError("duplicate loop id " + std::to_string(lr.id));
        if (lr.container.kind == RegionRef::LoopInterior && !loop_ids.count(lr.container.id))
            throw ValidationError("loop " + std::to_string(lr.id) +
                                  " nested in a loop declared later");
        d.loops.push_back({lr.id, lr.ccw, lr.container});
    }
    for (const auto& l : d.loops)
        d.resolve_region(l.container); // throws on dangling references

    return d;
}

DiagramData records_of(const Diagram& d) {
    DiagramData data;
    data.name = d.name;
    for (int v = 0; v < d.num_vertices(); ++v) {
        // Rotation emitted starting from the smallest half-edge id at the vertex.
        int start = -1;
        for (int h = 0; h < d.num_darts(); ++h)
            if (d.vert[h] == v && (start == -1 || d.dart_id[h] < d.dart_id[start]))
                start = h;
        DiagramData::VertexRec vr;
        vr.id = d.vertex_id[v];
        int c = start;
        for (int k = 0; k < 4; ++k, c = d.sigma[c])
            vr.darts[k] = d.dart_id[c];
        data.vertices.push_back(vr);
    }
    std::sort(data.vertices.begin(), data.vertices.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    for (int a = 0; a < d.num_arcs(); ++a) {
        int f = d.arc_fwd[a];
        long long x = d.dart_id[f], y = d.dart_id[d.alpha[f]];
        data.twins.emplace_back(std::min(x, y), std::max(x, y));
        data.strands.emplace_back(d.dart_id[f], d.dart_id[d.snext[f]]);
    }
    std::sort(data.twins.begin(), data.twins.end());
    std::sort(data.strands.begin(), data.strands.end());
    if (d.num_vertices() > 0) {
        long long w = d.dart_id[d.face_darts[d.outer_face][0]];
        for (int h : d.face_darts[d.outer_face])
            w = std::min(w, d.dart_id[h]);
        data.outer_witness = w;
    }
    if (d.base_arc)
        data.base_edge = d.arc_external_id(*d.base_arc);
    for (const auto& l : d.loops)
        data.loops.push_back({l.id, l.ccw, l.container});
    std::sort(data.loops.begin(), data.loops.end(),
              [](const auto& a, const auto& b) { return a.id < b.id; });
    return data;
}

} // namespace detail

void validate(const Diagram& d) { detail::build(detail::records_of(d)); }

// ---------------------------------------------------------------------------
// Parsing and serialization

namespace {

std::vector<std::vector<std::string>> tokenize(const std::string& text) {
    std::vector<std::vector<std::string>> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t)
            toks.push_back(t);
        if (!toks.empty())
            lines.push_back(std::move(toks));
    }
    return lines;
}

long long parse_int(const std::string& s) {
    try {
        size_t pos = 0;
        long long v = std::stoll(s, &pos);
        if (pos != s.size())
            throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + s + "'");
    }
}

RegionRef parse_region_ref(const std::string& s) {
    if (s == "outer")
        return RegionRef::outer();
    if (s.rfind("face:", 0) == 0)
        return RegionRef::face(parse_int(s.substr(5)));
    if (s.rfind("in:", 0) == 0)
        return RegionRef::loop(parse_int(s.substr(3)));
    throw ParseError("bad region reference '" + s + "'");
}

std::string region_ref_str(const RegionRef& r) {
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

} // namespace

Diagram parse_diagram(const std::string& text) {
    detail::DiagramData data;
    bool named = false;
    for (const auto& toks : tokenize(text)) {
        const std::string& kw = toks[0];
        if (kw == "curve") {
            if (toks.size() != 2)
                throw ParseError("curve record needs a name");
            data.name = toks[1];
            named = true;
        } else if (kw == "vertex") {
            if (toks.size() != 6)
                throw ParseError("vertex record needs id and four half-edges");
            detail::DiagramData::VertexRec vr;
            vr.id = parse_int(toks[1]);
            for (int k = 0; k < 4; ++k)
                vr.darts[k] = parse_int(toks[2 + k]);
            data.vertices.push_back(vr);
        } else if (kw == "twin") {
            if (toks.size() != 3)
                throw ParseError("twin record needs two half-edges");
            data.twins.emplace_back(parse_int(toks[1]), parse_int(toks[2]));
        } else if (kw == "strand") {
            if (toks.size() != 3)
                throw ParseError("strand record needs two half-edges");
            data.strands.emplace_back(parse_int(toks[1]), parse_int(toks[2]));
        } else if (kw == "outer") {
            if (toks.size() != 2)
                throw ParseError("outer record needs a witness half-edge");
            data.outer_witness = parse_int(toks[1]);
        } else if (kw == "base") {
            if (toks.size() != 2)
                throw ParseError("base record needs an edge id");
            data.base_edge = parse_int(toks[1]);
        } else if (kw == "loop") {
            if (toks.size() != 3 && !(toks.size() == 5 && toks[3] == "in"))
                throw ParseError("loop record: loop <id> <ccw|cw> [in <region>]");
            detail::DiagramData::LoopRec lr;
            lr.id = parse_int(toks[1]);
            if (toks[2] == "ccw")
                lr.ccw = true;
            else if (toks[2] == "cw")
                lr.ccw = false;
            else
                throw ParseError("loop orientation must be ccw or cw");
            lr.container = toks.size() == 5 ? parse_region_ref(toks[4]) : RegionRef::outer();
            data.loops.push_back(lr);
        } else if (kw == "geom") {
            continue; // coordinate payload, consumed by the geometric oracle
        } else {
            throw ParseError("unknown record '" + kw + "'");
        }
    }
    if (!named)
        throw ParseError("missing curve record");
    try {
        return detail::build(data);
    } catch (const ValidationError& e) {
        throw ParseError(std::string(e.what()) + " (curve " + data.name + ")");
    }
}

std::string serialize(const Diagram& d) {
    auto data = detail::records_of(d);
    std::ostringstream out;
    out << "curve " << data.name << "\n";
    for (const auto& vr : data.vertices) {
        out << "vertex " << vr.id;
        for (long long h : vr.darts)
            out << " " << h;
        out << "\n";
    }
    for (auto [a, b] : data.twins)
        out << "twin " << a << " " << b << "\n";
    for (auto [a, b] : data.strands)
        out << "strand " << a << " " << b << "\n";
    if (data.outer_witness)
        out << "outer " << *data.outer_witness << "\n";
    if (data.base_edge)
        out << "base " << *data.base_edge << "\n";
    for (const auto& l : data.loops)
        out << "loop " << l.id << " " << (l.ccw ? "ccw" : "cw") << " in "
            << region_ref_str(l.container) << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Orientation reversal

Diagram reverse_orientation(const Diagram& d) {
    auto data = detail::records_of(d);
    data.strands.clear();
    for (int a = 0; a < d.num_arcs(); ++a) {
        int f = d.arc_fwd[a];
        // Old chain ... f -> snext[f] ... becomes ... alpha[snext[f]] -> alpha[f] ...
        data.strands.emplace_back(d.dart_id[d.alpha[d.snext[f]]], d.dart_id[d.alpha[f]]);
    }
    std::sort(data.strands.begin(), data.strands.end());
    for (auto& l : data.loops)
        l.ccw = !l.ccw;
    return detail::build(data);
}

// ---------------------------------------------------------------------------
// Isomorphism via canonical encoding

namespace {

// Canonical string of the loop forest inside a given region key.
std::string loop_forest_encoding(const Diagram& d,
                                 const std::vector<std::string>& region_key) {
    // children per loop, encoded bottom-up; roots grouped by container key.
    int L = static_cast<int>(d.loops.size());
    std::vector<std::vector<int>> children(L);
    std::vector<int> parent(L, -1);
    for (int i = 0; i < L; ++i) {
        if (d.loops[i].container.kind == RegionRef::LoopInterior) {
            parent[i] = d.loop_index(d.loops[i].container.id);
            children[parent[i]].push_back(i);
        }
    }
    std::vector<std::string> enc(L);
    // loops were validated container-before-use, so reverse order is bottom-up
    for (int i = L - 1; i >= 0; --i) {
        std::vector<std::string> kids;
        for (int c : children[i])
            kids.push_back(enc[c]);
        std::sort(kids.begin(), kids.end());
        std::string s = d.loops[i].ccw ? "(+" : "(-";
        for (auto& k : kids)
            s += k;
        s += ")";
        enc[i] = s;
    }
    std::vector<std::string> entries;
    for (int i = 0; i < L; ++i) {
        if (parent[i] != -1)
            continue;
        int region = d.resolve_region(d.loops[i].container);
        entries.push_back(region_key[region] + "=" + enc[i]);
    }
    std::sort(entries.begin(), entries.end());
    std::string out;
    for (auto& e : entries)
        out += e + ";";
    return out;
}

std::string canonical_encoding(const Diagram& d) {
    const int n = d.num_darts();
    if (n == 0) {
        std::vector<std::string> region_key(d.num_regions());
        region_key[0] = "outer";
        return "loops:" + loop_forest_encoding(d, region_key);
    }
    std::string best;
    for (int start = 0; start < n; ++start) {
        std::vector<int> label(n, -1), order;
        order.reserve(n);
        label[start] = 0;
        order.push_back(start);
        for (size_t q = 0; q < order.size(); ++q) {
            int h = order[q];
            for (int t : {d.sigma[h], d.alpha[h]}) {
                if (label[t] == -1) {
                    label[t] = static_cast<int>(order.size());
                    order.push_back(t);
                }
            }
        }
        std::ostringstream s;
        for (int h : order)
            s << label[d.sigma[h]] << "," << label[d.alpha[h]] << ","
              << (d.is_forward[h] ? 1 : 0) << ";";
        int outer_min = n;
        for (int h : d.face_darts[d.outer_face])
            outer_min = std::min(outer_min, label[h]);
        s << "outer:" << outer_min << ";";
        // region keys for loop placement: smallest label in the face orbit
        std::vector<std::string> region_key(d.num_regions());
        for (int f = 0; f < d.num_faces(); ++f) {
            int m = n;
            for (int h : d.face_darts[f])
                m = std::min(m, label[h]);
            region_key[f] = "f" + std::to_string(m);
        }
        s << "loops:" << loop_forest_encoding(d, region_key);
        std::string enc = s.str();
        if (best.empty() || enc < best)
            best = enc;
    }
    return best;
}

} // namespace

bool isomorphic(const Diagram& a, const Diagram& b) {
    if (a.num_vertices() != b.num_vertices() || a.num_darts() != b.num_darts() ||
        a.loops.size() != b.loops.size() || a.num_faces() != b.num_faces())
        return false;
    return canonical_encoding(a) == canonical_encoding(b);
}

// ---------------------------------------------------------------------------
// Cell lists

CellLists cells(const Diagram& d) {
    CellLists out;
    auto face_id = [&](int f) {
        long long w = d.dart_id[d.face_darts[f][0]];
        for (int h : d.face_darts[f])
            w = std::min(w, d.dart_id[h]);
        return w;
    };
    for (int v = 0; v < d.num_vertices(); ++v) {
        MapCell c;
        c.dimension = 0;
        c.id = d.vertex_id[v];
        int h0 = -1;
        for (int h = 0; h < d.num_darts(); ++h)
            if (d.vert[h] == v && (h0 == -1 || d.dart_id[h] < d.dart_id[h0]))
                h0 = h;
        int h = h0;
        for (int k = 0; k < 4; ++k, h = d.sigma[h]) {
            c.edges.push_back(d.arc_external_id(d.arc_of[h])); // edge germs, with multiplicity
            c.faces.push_back(face_id(d.face_of[h]));          // sector on the left of each germ
        }
        out.vertices.push_back(c);
    }
    for (int a = 0; a < d.num_arcs(); ++a) {
        MapCell c;
        c.dimension = 1;
        c.id = d.arc_external_id(a);
        int f = d.arc_fwd[a];
        c.vertices.push_back(d.vertex_id[d.vert[f]]);          // tail
        c.vertices.push_back(d.vertex_id[d.vert[d.alpha[f]]]); // head
        c.faces.push_back(face_id(d.face_of[f]));
        c.faces.push_back(face_id(d.face_of[d.alpha[f]]));
        out.edges.push_back(c);
    }
    for (int f = 0; f < d.num_faces(); ++f) {
        MapCell c;
        c.dimension = 2;
        c.id = face_id(f);
        for (int h : d.face_darts[f]) {
            c.edges.push_back(d.arc_external_id(d.arc_of[h]));
            c.vertices.push_back(d.vertex_id[d.vert[h]]); // corner slots
        }
        out.faces.push_back(c);
    }
    return out;
}

} // namespace dstokes

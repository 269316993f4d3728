#include "dstokes/alexander.hpp"

#include <algorithm>
#include <queue>

namespace dstokes {

std::vector<int> vertex_darts(const Diagram& d, int v) {
    int start = -1;
    for (int h = 0; h < d.num_darts(); ++h)
        if (d.vert[h] == v && (start == -1 || d.dart_id[h] < d.dart_id[start]))
            start = h;
    std::vector<int> out;
    int c = start;
    for (int k = 0; k < 4; ++k, c = d.sigma[c])
        out.push_back(c);
    return out;
}

AlexanderCochain compute_alexander(const Diagram& d, Convention conv) {
    AlexanderCochain phi;
    phi.convention = conv;
    const int R = d.num_regions();
    phi.value.assign(R, Rational(0));
    std::vector<char> known(R, 0);

    // Propagation edges: arcs step +1 from right to left; a loop interior is
    // one above (ccw) or below (cw) its container.
    struct Step {
        int from, to;
        int delta;
    };
    std::vector<Step> steps;
    for (int a = 0; a < d.num_arcs(); ++a)
        steps.push_back({d.right_region(a), d.left_region(a), 1});
    for (int i = 0; i < static_cast<int>(d.loops.size()); ++i) {
        int container = d.resolve_region(d.loops[i].container);
        steps.push_back({container, d.loop_region(i), d.loops[i].ccw ? 1 : -1});
    }
    std::vector<std::vector<std::pair<int, int>>> adj(R); // region -> (region, delta)
    for (const auto& s : steps) {
        adj[s.from].push_back({s.to, s.delta});
        adj[s.to].push_back({s.from, -s.delta});
    }

    int outer = d.outer_region();
    phi.value[outer] = phi.base();
    known[outer] = 1;
    std::queue<int> q;
    q.push(outer);
    while (!q.empty()) {
        int r = q.front();
        q.pop();
        for (auto [t, delta] : adj[r]) {
            Rational v = phi.value[r] + Rational(delta);
            if (!known[t]) {
                known[t] = 1;
                phi.value[t] = v;
                q.push(t);
            } else if (phi.value[t] != v) {
                // Cannot happen once the Euler check passed; kept as a guard
                // against broken rewiring.
                throw ValidationError("inconsistent numbering at region " + std::to_string(t));
            }
        }
    }
    for (int r = 0; r < R; ++r)
        if (!known[r])
            throw ValidationError("region unreachable while numbering");

    // Every vertex must see the sector pattern {i+1, i, i, i-1}.
    for (int v = 0; v < d.num_vertices(); ++v) {
        auto slots = vertex_slots(d, phi, v);
        auto sorted = slots;
        std::sort(sorted.begin(), sorted.end());
        Rational i = (sorted[0] + sorted[3]) / Rational(2);
        if (sorted[0] != i - Rational(1) || sorted[1] != i || sorted[2] != i ||
            sorted[3] != i + Rational(1))
            throw ValidationError("sector values at vertex " +
                                  std::to_string(d.vertex_id[v]) + " are not {i+1,i,i,i-1}");
    }
    return phi;
}

std::vector<Rational> vertex_slots(const Diagram& d, const AlexanderCochain& phi, int v) {
    std::vector<Rational> out;
    for (int h : vertex_darts(d, v))
        out.push_back(phi.value[d.face_of[h]]);
    return out;
}

CellIndex cell_indices(const Diagram& d, const AlexanderCochain& phi) {
    CellIndex ix;
    ix.region = phi.value;
    for (int a = 0; a < d.num_arcs(); ++a)
        ix.arc.push_back((phi.value[d.left_region(a)] + phi.value[d.right_region(a)]) /
                         Rational(2));
    for (int v = 0; v < d.num_vertices(); ++v) {
        Rational sum(0);
        for (const auto& s : vertex_slots(d, phi, v))
            sum += s;
        ix.vertex.push_back(sum / Rational(4));
    }
    return ix;
}

} // namespace dstokes

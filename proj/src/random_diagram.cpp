#include "dstokes/random_diagram.hpp"

#include <algorithm>
#include <random>

namespace dstokes {

Diagram generate_random_diagram(int n, std::uint64_t seed, int max_attempts) {
    if (n < 1)
        throw ValidationError("random diagram needs at least one crossing");
    std::mt19937_64 rng(seed);

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::vector<int> seq;
        seq.reserve(2 * n);
        for (int v = 0; v < n; ++v) {
            seq.push_back(v);
            seq.push_back(v);
        }
        std::shuffle(seq.begin(), seq.end(), rng);
        std::vector<int> chirality(n);
        for (int v = 0; v < n; ++v)
            chirality[v] = static_cast<int>(rng() & 1);

        // Dart 4v+p is the germ at rotation position p of vertex v.
        // Position 0/2: outgoing/incoming germ of the first pass; the second
        // pass occupies 1/3 with the chirality bit choosing which is which.
        std::vector<int> visit_count(n, 0);
        std::vector<long long> out_dart(2 * n), in_dart(2 * n);
        for (int k = 0; k < 2 * n; ++k) {
            int v = seq[k];
            int visit = visit_count[v]++;
            long long base = 4LL * v;
            if (visit == 0) {
                out_dart[k] = base + 0;
                in_dart[k] = base + 2;
            } else if (chirality[v] == 0) {
                out_dart[k] = base + 1;
                in_dart[k] = base + 3;
            } else {
                out_dart[k] = base + 3;
                in_dart[k] = base + 1;
            }
        }

        detail::DiagramData data;
        data.name = "random-n" + std::to_string(n) + "-s" + std::to_string(seed);
        for (int v = 0; v < n; ++v)
            data.vertices.push_back({v + 1, {4LL * v, 4LL * v + 1, 4LL * v + 2, 4LL * v + 3}});
        for (int k = 0; k < 2 * n; ++k) {
            int next = (k + 1) % (2 * n);
            data.twins.emplace_back(out_dart[k], in_dart[next]);
            data.strands.emplace_back(out_dart[k], out_dart[next]);
        }
        data.outer_witness = 0;

        Diagram d;
        try {
            d = detail::build(data);
        } catch (const ValidationError&) {
            continue; // non-planar rotation system; resample
        }

        // Re-anchor: uniform outer face, then a base edge on it.
        int f = static_cast<int>(rng() % d.num_faces());
        data.outer_witness = d.dart_id[d.face_darts[f][0]];
        d = detail::build(data);
        auto arcs = outer_adjacent_arcs(d);
        data.base_edge = d.arc_external_id(arcs[rng() % arcs.size()]);
        return detail::build(data);
    }
    throw ValidationError("random diagram sampling exhausted after " +
                          std::to_string(max_attempts) + " attempts (n=" + std::to_string(n) +
                          ")");
}

} // namespace dstokes

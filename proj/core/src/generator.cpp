#include "annular/generator.hpp"

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "annular/crossing_analysis.hpp"
#include "annular/errors.hpp"

namespace annular {

namespace {

// Connected plane multigraph as a rotation system. Half-edges 2e and 2e+1
// are the two ends of edge e; each vertex lists its half-edges in
// counterclockwise order. The corner after half-edge h (the wedge between
// h and its rotation successor) is identified by h itself, so corners
// stay stable while edges are added.
struct PlaneGraph {
    std::vector<int> vertex_of;              // half-edge -> vertex
    std::vector<std::vector<int>> rotation;  // vertex -> CCW half-edges

    int half_edge_count() const { return static_cast<int>(vertex_of.size()); }
    int edge_count() const { return half_edge_count() / 2; }

    std::size_t position(int h) const {
        const auto& ring = rotation[vertex_of[h]];
        return std::find(ring.begin(), ring.end(), h) - ring.begin();
    }
    int sigma(int h) const {
        const auto& ring = rotation[vertex_of[h]];
        return ring[(position(h) + 1) % ring.size()];
    }
    int sigma_inv(int h) const {
        const auto& ring = rotation[vertex_of[h]];
        return ring[(position(h) + ring.size() - 1) % ring.size()];
    }

    // Faces as corner cycles: the boundary walk leaves a corner along the
    // rotation successor and arrives at that edge's other end.
    std::vector<std::vector<int>> faces() const {
        std::vector<std::vector<int>> out;
        std::vector<char> seen(vertex_of.size(), 0);
        for (int start = 0; start < half_edge_count(); ++start) {
            if (seen[start]) continue;
            std::vector<int> cycle;
            int h = start;
            do {
                seen[h] = 1;
                cycle.push_back(h);
                h = sigma(h) ^ 1;
            } while (h != start);
            out.push_back(std::move(cycle));
        }
        return out;
    }

    void insert_after(int anchor, int fresh) {
        auto& ring = rotation[vertex_of[anchor]];
        ring.insert(ring.begin() + static_cast<long>(position(anchor)) + 1, fresh);
    }

    // New edge drawn through a face, one end in the corner after a, the
    // other in the corner after b. With a == b the edge is a trivial loop
    // nested inside that corner.
    void add_edge(int a, int b) {
        const int p = half_edge_count();
        const int q = p + 1;
        vertex_of.push_back(vertex_of[a]);
        vertex_of.push_back(vertex_of[b]);
        insert_after(a, p);
        insert_after(a == b ? p : b, q);
    }

    // New pendant vertex hanging into the corner after a.
    void add_leaf(int a) {
        const int p = half_edge_count();
        const int q = p + 1;
        vertex_of.push_back(vertex_of[a]);
        vertex_of.push_back(static_cast<int>(rotation.size()));
        insert_after(a, p);
        rotation.push_back({q});
    }
};

PlaneGraph random_plane_graph(std::mt19937_64& rng, int edges) {
    PlaneGraph g;
    if (uniform_below(rng, 2) == 0) {
        g.vertex_of = {0, 0};  // one vertex with a loop
        g.rotation = {{0, 1}};
    } else {
        g.vertex_of = {0, 1};  // two vertices joined by a bridge
        g.rotation = {{0}, {1}};
    }
    while (g.edge_count() < edges) {
        const int a = static_cast<int>(uniform_below(rng, g.half_edge_count()));
        if (uniform_below(rng, 10) < 7) {
            const auto faces = g.faces();
            const std::vector<int>* home = nullptr;
            for (const auto& f : faces) {
                if (std::find(f.begin(), f.end(), a) != f.end()) {
                    home = &f;
                    break;
                }
            }
            const int b = (*home)[uniform_below(rng, home->size())];
            g.add_edge(a, b);
        } else {
            g.add_leaf(a);
        }
    }
    return g;
}

// Medial construction: one crossing per edge of g, one diagram edge per
// corner of g. Around edge e with ends h (at u) and h' (at v), the four
// neighbouring corners in counterclockwise order are: before h at u,
// after h' at v, before h' at v, after h at u. Corner c becomes edge
// label c+1.
AnnularDiagram medial_diagram(const PlaneGraph& g) {
    AnnularDiagram d;
    d.crossings.reserve(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        const int h = 2 * e;
        const int hb = 2 * e + 1;
        Crossing x;
        x.slots = {g.sigma_inv(h) + 1, hb + 1, g.sigma_inv(hb) + 1, h + 1};
        d.crossings.push_back(x);
    }
    return d;
}

// Two-colors the faces so neighbours across every edge differ. Every
// 4-valent plane graph admits such a colouring; a conflict would mean the
// construction above produced a broken embedding.
std::vector<int> checkerboard_colors(const Embedding& emb) {
    const int nfaces = static_cast<int>(emb.face_corners.size());
    std::vector<std::vector<int>> adjacent(nfaces);
    for (const auto& [label, ends] : emb.edges.by_label()) {
        const int f1 = emb.face_of[ends.first];
        const int f2 = emb.face_of[ends.second];
        adjacent[f1].push_back(f2);
        adjacent[f2].push_back(f1);
    }
    std::vector<int> color(nfaces, -1);
    for (int start = 0; start < nfaces; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        std::vector<int> queue{start};
        while (!queue.empty()) {
            const int f = queue.back();
            queue.pop_back();
            for (int g : adjacent[f]) {
                if (color[g] < 0) {
                    color[g] = 1 - color[f];
                    queue.push_back(g);
                } else if (color[g] == color[f]) {
                    throw ValidationError("generator: face two-coloring failed");
                }
            }
        }
    }
    return color;
}

Crossing rotated(const Crossing& x) {
    Crossing y;
    for (int s = 0; s < 4; ++s) y.slots[s] = x.slots[(s + 1) % 4];
    return y;
}

}  // namespace

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw ValidationError("uniform_below: zero bound");
    // Discard draws from the incomplete block at the bottom of the range so
    // every residue class is hit equally often.
    const std::uint64_t cutoff = (0 - bound) % bound;
    std::uint64_t r = rng();
    while (r < cutoff) r = rng();
    return r % bound;
}

DiagramGenerator::DiagramGenerator(const GeneratorConfig& cfg) : cfg_(cfg), rng_(cfg.seed) {
    if (cfg_.min_crossings < 1 || cfg_.min_crossings > cfg_.max_crossings) {
        throw ValidationError("generator: crossing range must satisfy 1 <= min <= max");
    }
}

AnnularDiagram DiagramGenerator::next() {
    const int n = cfg_.min_crossings +
                  static_cast<int>(uniform_below(
                      rng_, static_cast<std::uint64_t>(cfg_.max_crossings - cfg_.min_crossings) + 1));
    AnnularDiagram d = medial_diagram(random_plane_graph(rng_, n));

    // Strand assignment. The medial record puts an arbitrary strand on
    // top; rotating a record one slot swaps its strands. Making the
    // rotation follow a checkerboard colouring yields an alternating
    // diagram; coin flips leave the strands unconstrained.
    if (cfg_.alternating) {
        const Embedding emb = compute_embedding(d);
        const std::vector<int> color = checkerboard_colors(emb);
        for (int c = 0; c < d.crossing_count(); ++c) {
            if (color[emb.face_of[dart_of(c, 0)]] == 1) d.crossings[c] = rotated(d.crossings[c]);
        }
    } else {
        for (int c = 0; c < d.crossing_count(); ++c) {
            if (uniform_below(rng_, 2) == 1) d.crossings[c] = rotated(d.crossings[c]);
        }
    }

    const Embedding emb = compute_embedding(d);
    d.outer_corner = Corner{0, 0};
    switch (cfg_.policy) {
        case PuncturePolicy::outer:
            d.puncture_corner = Corner{0, 0};
            break;
        case PuncturePolicy::uniform_random_face: {
            const auto& cycle = emb.face_corners[uniform_below(rng_, emb.face_corners.size())];
            d.puncture_corner = cycle.front();
            break;
        }
        case PuncturePolicy::adversarial_inner: {
            std::vector<Corner> pool;
            for (int c : nugatory_crossings(d)) {
                for (int s = 0; s < 4; ++s) pool.push_back(Corner{c, s});
            }
            if (pool.empty()) {
                const auto& cycle = emb.face_corners[uniform_below(rng_, emb.face_corners.size())];
                d.puncture_corner = cycle.front();
            } else {
                d.puncture_corner = pool[uniform_below(rng_, pool.size())];
            }
            break;
        }
    }

    if (!validate(d).ok) throw ValidationError("generator: produced an invalid diagram");
    return d;
}

}  // namespace annular

#include "gtop/graphs.hpp"

#include <random>

#include "gtop/config.hpp"

namespace gtop::graphs {

using topo::OrientedGraph;
using topo::PlanarComplex;

std::shared_ptr<const OrientedGraph> house_graph() {
    auto g = std::make_shared<OrientedGraph>();
    g->vertex_ids = {"v1", "v2", "v3", "v4", "v5"};
    auto vi = [&](const char* id) { return g->vertex_index(id); };
    g->edges = {
        {"e1", vi("v1"), vi("v2")}, {"e2", vi("v2"), vi("v3")}, {"e3", vi("v1"), vi("v5")},
        {"e4", vi("v2"), vi("v4")}, {"e5", vi("v3"), vi("v4")}, {"e6", vi("v4"), vi("v5")},
    };
    g->validate();
    return g;
}

PlanarComplex house_complex(bool sphere) {
    PlanarComplex k;
    k.graph = *house_graph();
    auto e = [&](const char* id) { return k.graph.edge_index(id); };
    k.faces.push_back({"f1", {{e("e1"), 1}, {e("e4"), 1}, {e("e6"), 1}, {e("e3"), -1}}});
    k.faces.push_back({"f2", {{e("e2"), 1}, {e("e5"), 1}, {e("e4"), -1}}});
    if (sphere) {
        k.faces.push_back(
            {"f0", {{e("e3"), 1}, {e("e6"), -1}, {e("e5"), -1}, {e("e2"), -1}, {e("e1"), -1}}});
        k.embedding = PlanarComplex::Embedding::Sphere;
    } else {
        k.embedding = PlanarComplex::Embedding::Plane;
    }
    return k;
}

std::shared_ptr<const OrientedGraph> ring_graph(int n) {
    if (n < 3) throw ValidationError("ring needs at least 3 vertices");
    auto g = std::make_shared<OrientedGraph>();
    for (int i = 0; i < n; ++i) g->vertex_ids.push_back("v" + std::to_string(i));
    for (int i = 0; i < n; ++i)
        g->edges.push_back({"e" + std::to_string(i), i, (i + 1) % n});
    g->validate();
    return g;
}

PlanarComplex ring_complex(int n) {
    PlanarComplex k;
    k.graph = *ring_graph(n);
    PlanarComplex::Face inner{"fin", {}}, outer{"fout", {}};
    for (int i = 0; i < n; ++i) {
        inner.boundary.push_back({i, 1});
        outer.boundary.push_back({i, -1});
    }
    k.faces = {inner, outer};
    k.embedding = PlanarComplex::Embedding::Sphere;
    return k;
}

std::shared_ptr<const OrientedGraph> random_connected_graph(unsigned long long seed,
                                                            int max_vertices, int max_edges) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<unsigned long long>(n)); };
    int nv = 3 + pick(std::max(1, max_vertices - 2));
    int extra_cap = max_edges - (nv - 1);
    int extra = extra_cap > 0 ? pick(extra_cap + 1) : 0;

    auto g = std::make_shared<OrientedGraph>();
    for (int v = 0; v < nv; ++v) g->vertex_ids.push_back("v" + std::to_string(v));
    int eid = 0;
    for (int v = 1; v < nv; ++v) {
        int parent = pick(v);
        bool flip = rng() & 1;
        g->edges.push_back({"e" + std::to_string(eid++), flip ? v : parent, flip ? parent : v});
    }
    for (int i = 0; i < extra; ++i) {
        int a = pick(nv), b = pick(nv);
        if (a == b) continue;  // no self-loops; multi-edges are fine
        g->edges.push_back({"e" + std::to_string(eid++), a, b});
    }
    g->validate();
    return g;
}

}  // namespace gtop::graphs

#include <doctest.h>

#include <random>

#include "gtop/config.hpp"
#include "gtop/gcode.hpp"
#include "gtop/graphs.hpp"
#include "gtop/json_io.hpp"
#include "gtop/spaces.hpp"
#include "gtop/topo.hpp"

using namespace gtop;
using topo::OrientedGraph;
using topo::PlanarComplex;

namespace {
constexpr long long kCap = 1 << 20;

topo::SpanningTree paper_tree(const OrientedGraph& g) {
    return topo::spanning_tree(g, {"e1", "e2", "e4", "e6"});
}
}  // namespace

TEST_CASE("connection matrix of the house graph") {
    auto g = graphs::house_graph();
    auto m = topo::connection_matrix(*g);
    topo::Matrix want = {{-1, 1, 0, 0, 0}, {0, -1, 1, 0, 0}, {-1, 0, 0, 0, 1},
                         {0, -1, 0, 1, 0}, {0, 0, -1, 1, 0}, {0, 0, 0, -1, 1}};
    CHECK(m == want);
    for (const auto& row : m) {
        int sum = 0, nonzero = 0;
        for (int v : row) { sum += v; nonzero += v != 0; }
        CHECK(sum == 0);
        CHECK(nonzero == 2);
    }
    // Column degree identity: total nonzeros = 2|E|.
    int total = 0;
    for (const auto& row : m)
        for (int v : row) total += v != 0;
    CHECK(total == 2 * static_cast<int>(g->edges.size()));
}

TEST_CASE("single edge and self-loop validation") {
    OrientedGraph g;
    g.vertex_ids = {"u", "w"};
    g.edges = {{"e", 0, 1}};
    CHECK(topo::connection_matrix(g) == topo::Matrix{{-1, 1}});

    OrientedGraph bad;
    bad.vertex_ids = {"u"};
    bad.edges = {{"e", 0, 0}};
    CHECK_THROWS_WITH_AS(topo::connection_matrix(bad),
                         doctest::Contains("no self-loops"), ValidationError);
}

TEST_CASE("betti numbers") {
    CHECK(topo::betti(*graphs::house_graph()) == std::pair<int, int>{1, 2});

    OrientedGraph tree;
    tree.vertex_ids = {"a", "b", "c"};
    tree.edges = {{"e1", 0, 1}, {"e2", 1, 2}};
    CHECK(topo::betti(tree) == std::pair<int, int>{1, 0});

    OrientedGraph two_triangles;
    two_triangles.vertex_ids = {"a", "b", "c", "d", "e", "f"};
    two_triangles.edges = {{"e1", 0, 1}, {"e2", 1, 2}, {"e3", 2, 0},
                           {"e4", 3, 4}, {"e5", 4, 5}, {"e6", 5, 3}};
    CHECK(topo::betti(two_triangles) == std::pair<int, int>{2, 2});
}

TEST_CASE("deterministic spanning tree") {
    // A cycle keeps its lexicographically-first edges.
    auto ring = graphs::ring_graph(6);
    auto t = topo::spanning_tree(*ring);
    CHECK(t.tree_edges == std::vector<int>{0, 1, 2, 3, 4});

    auto g = graphs::house_graph();
    auto t2 = topo::spanning_tree(*g);  // depth-first from v1 in edge-id order
    std::vector<std::string> default_ids;
    for (int e : t2.tree_edges) default_ids.push_back(g->edges[e].id);
    CHECK(default_ids == std::vector<std::string>{"e1", "e2", "e5", "e6"});
    auto t3 = paper_tree(*g);
    std::vector<std::string> ids;
    for (int e : t3.tree_edges) ids.push_back(g->edges[e].id);
    CHECK(ids == std::vector<std::string>{"e1", "e2", "e4", "e6"});

    CHECK_THROWS_AS(topo::spanning_tree(*g, {"e1", "e2", "e3"}), ValidationError);
    // e1, e3, e4, e6 close the square v1-v2-v4-v5 and leave v3 uncovered.
    CHECK_THROWS_AS(topo::spanning_tree(*g, {"e1", "e3", "e4", "e6"}), ValidationError);

    OrientedGraph disconnected;
    disconnected.vertex_ids = {"a", "b", "c", "d"};
    disconnected.edges = {{"e1", 0, 1}, {"e2", 2, 3}};
    CHECK_THROWS_AS(topo::spanning_tree(disconnected), ValidationError);
}

TEST_CASE("fundamental cut sets on the house graph") {
    auto g = graphs::house_graph();
    auto t = paper_tree(*g);
    auto cuts = topo::fundamental_cut_sets(*g, t);
    auto ids = [&](int e) {
        std::vector<std::string> out;
        for (int c : cuts.at(e)) out.push_back(g->edges[c].id);
        return out;
    };
    CHECK(ids(g->edge_index("e1")) == std::vector<std::string>{"e1", "e3"});
    CHECK(ids(g->edge_index("e2")) == std::vector<std::string>{"e2", "e5"});
    CHECK(ids(g->edge_index("e4")) == std::vector<std::string>{"e3", "e4", "e5"});
    CHECK(ids(g->edge_index("e6")) == std::vector<std::string>{"e3", "e6"});

    // Cut sets stay inside {tree edge} + cotree, and their tree supports are disjoint.
    for (const auto& [e, cut] : cuts)
        for (int c : cut) CHECK((c == e || !t.in_tree(c)));

    // A tree graph cuts to singletons.
    OrientedGraph tree;
    tree.vertex_ids = {"a", "b", "c"};
    tree.edges = {{"e1", 0, 1}, {"e2", 1, 2}};
    auto tt = topo::spanning_tree(tree);
    auto tcuts = topo::fundamental_cut_sets(tree, tt);
    CHECK(tcuts.at(0) == std::vector<int>{0});
    CHECK(tcuts.at(1) == std::vector<int>{1});
}

TEST_CASE("fundamental cycles close over the integers") {
    auto g = graphs::house_graph();
    auto t = paper_tree(*g);
    auto cycles = topo::fundamental_cycles(*g, t);
    auto sig = [&](int e) {
        std::vector<std::pair<std::string, int>> out;
        for (const auto& s : cycles.at(e)) out.push_back({g->edges[s.edge].id, s.sign});
        return out;
    };
    CHECK(sig(g->edge_index("e3")) ==
          std::vector<std::pair<std::string, int>>{{"e3", 1}, {"e6", -1}, {"e4", -1}, {"e1", -1}});
    CHECK(sig(g->edge_index("e5")) ==
          std::vector<std::pair<std::string, int>>{{"e5", 1}, {"e4", -1}, {"e2", 1}});

    // Triangle with one cotree edge: the cycle is the whole triangle.
    OrientedGraph tri;
    tri.vertex_ids = {"a", "b", "c"};
    tri.edges = {{"e1", 0, 1}, {"e2", 1, 2}, {"e3", 0, 2}};
    auto tt = topo::spanning_tree(tri);
    auto tcyc = topo::fundamental_cycles(tri, tt);
    CHECK(tcyc.at(2).size() == 3);

    // Integer kernel oracle on random graphs: y(p) . M = 0 exactly.
    std::mt19937_64 rng(321);
    for (int trial = 0; trial < 8; ++trial) {
        auto rg = graphs::random_connected_graph(1000 + trial, 6, 9);
        auto rt = topo::spanning_tree(*rg);
        auto m = topo::connection_matrix(*rg);
        for (const auto& [e, cyc] : topo::fundamental_cycles(*rg, rt)) {
            auto vec = topo::edge_vector(*rg, cyc);
            for (size_t v = 0; v < rg->vertex_ids.size(); ++v) {
                int acc = 0;
                for (size_t i = 0; i < rg->edges.size(); ++i) acc += vec[i] * m[i][v];
                CHECK(acc == 0);
            }
            // A fundamental path is closed and head-to-tail consistent.
            int at = -1;
            for (const auto& s : cyc) {
                int tail = s.sign > 0 ? rg->edges[s.edge].tail : rg->edges[s.edge].head;
                int head = s.sign > 0 ? rg->edges[s.edge].head : rg->edges[s.edge].tail;
                if (at >= 0) CHECK(at == tail);
                at = head;
            }
            int start = cyc.front().sign > 0 ? rg->edges[cyc.front().edge].tail
                                             : rg->edges[cyc.front().edge].head;
            CHECK(at == start);
        }
    }
    (void)rng;
}

TEST_CASE("theorem: cut-set cross-sections are one-dimensional with full support") {
    auto g = graphs::house_graph();
    auto t = paper_tree(*g);
    for (const char* spec : {"Z2", "Z3"}) {
        auto a = group::FiniteAbelianGroup::parse(spec);
        auto b1 = spaces::coboundary(*g, a, kCap);
        for (const auto& [e, cut] : topo::fundamental_cut_sets(*g, t)) {
            std::vector<std::string> labels;
            for (int c : cut) labels.push_back(g->edges[c].id);
            auto cs = b1.cross_section(labels, kCap);
            CHECK(cs.size(kCap) == a.order());
            CHECK(cs.support(kCap).size() == labels.size());
        }
    }
}

TEST_CASE("theorem: fundamental cycles generate one-dimensional cycle subcodes") {
    auto g = graphs::house_graph();
    auto t = paper_tree(*g);
    for (const char* spec : {"Z2", "Z3"}) {
        auto a = group::FiniteAbelianGroup::parse(spec);
        auto z1 = spaces::zero_boundary(*g, a, kCap);
        for (const auto& [e, cyc] : topo::fundamental_cycles(*g, t)) {
            auto vec = topo::edge_vector(*g, cyc);
            for (int coeff = 0; coeff < a.order(); ++coeff) {
                gcode::Codeword w(g->edges.size(), 0);
                for (size_t i = 0; i < vec.size(); ++i) {
                    if (vec[i] == 1) w[i] = coeff;
                    else if (vec[i] == -1) w[i] = a.neg(coeff);
                }
                CHECK(z1.contains(w, kCap));
            }
        }
    }
}

TEST_CASE("second connection matrix on plane and sphere") {
    auto plane = graphs::house_complex(false);
    topo::Matrix m2p = topo::second_connection_matrix(plane);
    CHECK(m2p == topo::Matrix{{1, 0, -1, 1, 0, 1}, {0, 1, 0, -1, 1, 0}});

    auto sphere = graphs::house_complex(true);
    topo::Matrix m2s = topo::second_connection_matrix(sphere);
    CHECK(m2s == topo::Matrix{{1, 0, -1, 1, 0, 1}, {0, 1, 0, -1, 1, 0}, {-1, -1, 1, 0, -1, -1}});
    for (size_t e = 0; e < sphere.graph.edges.size(); ++e) {
        int sum = 0;
        for (size_t f = 0; f < sphere.faces.size(); ++f) sum += m2s[f][e];
        CHECK(sum == 0);
    }

    // Every row is a cycle of the graph.
    auto z2 = group::FiniteAbelianGroup::parse("Z2");
    auto z1 = spaces::zero_boundary(sphere.graph, z2, kCap);
    for (const auto& row : m2s) {
        gcode::Codeword w;
        for (int v : row) w.push_back(v == 0 ? 0 : 1);
        CHECK(z1.contains(w, kCap));
    }
}

TEST_CASE("second connection matrix validation") {
    auto k = graphs::house_complex(true);
    k.faces[0].boundary[0].sign = -1;  // breaks closure
    CHECK_THROWS_WITH_AS(topo::second_connection_matrix(k),
                         doctest::Contains("not closed"), ValidationError);

    auto k2 = graphs::house_complex(true);
    k2.faces.pop_back();
    CHECK_THROWS_WITH_AS(topo::second_connection_matrix(k2),
                         doctest::Contains("beta1+1"), ValidationError);

    auto k3 = graphs::house_complex(false);
    k3.faces.pop_back();
    CHECK_THROWS_WITH_AS(topo::second_connection_matrix(k3),
                         doctest::Contains("beta1"), ValidationError);
}

TEST_CASE("dual graph of the house complex") {
    auto k = graphs::house_complex(true);
    auto d = topo::dual_graph(k);
    CHECK(d.graph.vertex_ids == std::vector<std::string>{"f1", "f2", "f0"});
    CHECK(d.graph.edges.size() == 6);
    CHECK(topo::betti(d.graph) == std::pair<int, int>{1, 4});

    auto m1 = topo::connection_matrix(k.graph);
    auto m2 = topo::second_connection_matrix(k);
    auto dm1 = topo::connection_matrix(d.graph);
    auto dm2 = topo::second_connection_matrix(d);
    for (size_t e = 0; e < 6; ++e) {
        for (size_t f = 0; f < 3; ++f) CHECK(dm1[e][f] == m2[f][e]);
        for (size_t v = 0; v < 5; ++v) CHECK(dm2[v][e] == m1[e][v]);
    }
    // The double dual restores the original matrix exactly.
    CHECK(topo::connection_matrix(topo::dual_graph(d).graph) == m1);

    CHECK_THROWS_AS(topo::dual_graph(graphs::house_complex(false)), ValidationError);
}

TEST_CASE("dual of a triangle is a triple edge between two vertices") {
    PlanarComplex k;
    k.graph.vertex_ids = {"a", "b", "c"};
    k.graph.edges = {{"e1", 0, 1}, {"e2", 1, 2}, {"e3", 2, 0}};
    PlanarComplex::Face inner{"fin", {{0, 1}, {1, 1}, {2, 1}}};
    PlanarComplex::Face outer{"fout", {{0, -1}, {1, -1}, {2, -1}}};
    k.faces = {inner, outer};
    k.embedding = PlanarComplex::Embedding::Sphere;
    auto d = topo::dual_graph(k);
    CHECK(d.graph.vertex_ids.size() == 2);
    CHECK(d.graph.edges.size() == 3);
    auto m2 = topo::second_connection_matrix(k);
    auto dm1 = topo::connection_matrix(d.graph);
    for (size_t e = 0; e < 3; ++e)
        for (size_t f = 0; f < 2; ++f) CHECK(dm1[e][f] == m2[f][e]);
}

TEST_CASE("dangling vertices block the dual graph") {
    // A dangling edge cannot appear in any well-formed face boundary, so the
    // complex fails validation before or at the degree check.
    PlanarComplex k;
    k.graph.vertex_ids = {"a", "b", "c", "d"};
    k.graph.edges = {{"e1", 0, 1}, {"e2", 1, 2}, {"e3", 2, 0}, {"e4", 2, 3}};
    k.embedding = PlanarComplex::Embedding::Sphere;
    k.faces = {{"fin", {{0, 1}, {1, 1}, {2, 1}}}, {"fout", {{0, -1}, {1, -1}, {2, -1}}}};
    CHECK_THROWS_AS(topo::dual_graph(k), ValidationError);
}

TEST_CASE("degenerate graphs stay well-defined") {
    topo::OrientedGraph lone;
    lone.vertex_ids = {"a"};
    CHECK(topo::betti(lone) == std::pair<int, int>{1, 0});
    auto t = topo::spanning_tree(lone);
    CHECK(t.tree_edges.empty());
    auto z2 = group::FiniteAbelianGroup::parse("Z2");
    CHECK(spaces::zero_coboundary(lone, z2, kCap).size(kCap) == 2);
    CHECK(spaces::coboundary(lone, z2, kCap).size(kCap) == 1);

    // Two vertices joined by parallel edges (multi-edges are legal).
    topo::OrientedGraph multi;
    multi.vertex_ids = {"a", "b"};
    multi.edges = {{"e1", 0, 1}, {"e2", 1, 0}, {"e3", 0, 1}};
    CHECK(topo::betti(multi) == std::pair<int, int>{1, 2});
    auto mt = topo::spanning_tree(multi);
    CHECK(mt.tree_edges == std::vector<int>{0});
    CHECK(spaces::zero_boundary(multi, z2, kCap).size(kCap) == 4);
}

TEST_CASE("graph and complex json round trips") {
    auto k = graphs::house_complex(true);
    auto back = io::parse_complex(io::complex_to_json(k));
    CHECK(topo::connection_matrix(back.graph) == topo::connection_matrix(k.graph));
    CHECK(topo::second_connection_matrix(back) == topo::second_connection_matrix(k));
    auto g = graphs::house_graph();
    auto gback = io::parse_graph(io::graph_to_json(*g));
    CHECK(topo::connection_matrix(gback) == topo::connection_matrix(*g));
}

TEST_CASE("homology dimensions") {
    auto probe = group::FiniteAbelianGroup::parse("Z2");
    CHECK(topo::homology_dimensions(graphs::house_complex(false), probe, kCap) ==
          std::array<int, 3>{1, 0, 0});
    CHECK(topo::homology_dimensions(graphs::house_complex(true), probe, kCap) ==
          std::array<int, 3>{1, 0, 1});

    // One-dimensional complex: H0 and H1 match the Betti numbers.
    PlanarComplex bare;
    bare.graph = *graphs::house_graph();
    bare.embedding = PlanarComplex::Embedding::Plane;
    auto dims = topo::homology_dimensions(bare, probe, kCap);
    CHECK(dims == std::array<int, 3>{1, 2, 0});

    auto z3 = group::FiniteAbelianGroup::parse("Z3");
    CHECK(topo::homology_dimensions(graphs::house_complex(true), z3, kCap) ==
          std::array<int, 3>{1, 0, 1});
}

#include "gtop/topo.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gtop/config.hpp"

namespace gtop::topo {

int OrientedGraph::vertex_index(const std::string& id) const {
    for (size_t i = 0; i < vertex_ids.size(); ++i)
        if (vertex_ids[i] == id) return static_cast<int>(i);
    throw ValidationError("unknown vertex '" + id + "'");
}

int OrientedGraph::edge_index(const std::string& id) const {
    for (size_t i = 0; i < edges.size(); ++i)
        if (edges[i].id == id) return static_cast<int>(i);
    throw ValidationError("unknown edge '" + id + "'");
}

void OrientedGraph::validate() const {
    std::set<std::string> vids(vertex_ids.begin(), vertex_ids.end());
    if (vids.size() != vertex_ids.size()) throw ValidationError("duplicate vertex id");
    std::set<std::string> eids;
    for (const auto& e : edges) {
        if (!eids.insert(e.id).second) throw ValidationError("duplicate edge id '" + e.id + "'");
        if (e.tail < 0 || e.tail >= static_cast<int>(vertex_ids.size()) || e.head < 0 ||
            e.head >= static_cast<int>(vertex_ids.size()))
            throw ValidationError("edge endpoint out of range");
        if (e.tail == e.head)
            throw ValidationError("no self-loops: edge '" + e.id + "' has equal head and tail");
    }
}

Matrix connection_matrix(const OrientedGraph& g) {
    g.validate();
    Matrix m(g.edges.size(), std::vector<int>(g.vertex_ids.size(), 0));
    for (size_t e = 0; e < g.edges.size(); ++e) {
        m[e][g.edges[e].head] = 1;
        m[e][g.edges[e].tail] = -1;
    }
    return m;
}

namespace {
int find_root(std::vector<int>& up, int x) {
    while (up[x] != x) { up[x] = up[up[x]]; x = up[x]; }
    return x;
}
}  // namespace

int component_count(const OrientedGraph& g) {
    std::vector<int> up(g.vertex_ids.size());
    std::iota(up.begin(), up.end(), 0);
    int comps = static_cast<int>(g.vertex_ids.size());
    for (const auto& e : g.edges) {
        int a = find_root(up, e.tail), b = find_root(up, e.head);
        if (a != b) { up[a] = b; --comps; }
    }
    return comps;
}

bool is_connected(const OrientedGraph& g) { return component_count(g) == 1; }

std::pair<int, int> betti(const OrientedGraph& g) {
    g.validate();
    int b0 = component_count(g);
    int b1 = static_cast<int>(g.edges.size()) - static_cast<int>(g.vertex_ids.size()) + b0;
    return {b0, b1};
}

bool SpanningTree::in_tree(int edge) const {
    return std::find(tree_edges.begin(), tree_edges.end(), edge) != tree_edges.end();
}

namespace {

SpanningTree finish_tree(const OrientedGraph& g, const std::vector<int>& tree_edges, int root) {
    SpanningTree t;
    t.tree_edges = tree_edges;
    t.root = root;
    std::set<int> in_tree(tree_edges.begin(), tree_edges.end());
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        if (!in_tree.count(e)) t.cotree_edges.push_back(e);

    int n = static_cast<int>(g.vertex_ids.size());
    t.parent_edge.assign(n, -1);
    t.parent_vertex.assign(n, -1);
    std::vector<std::vector<int>> incident(n);
    for (int e : tree_edges) {
        incident[g.edges[e].tail].push_back(e);
        incident[g.edges[e].head].push_back(e);
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        t.order.push_back(v);
        for (int e : incident[v]) {
            int w = g.edges[e].tail == v ? g.edges[e].head : g.edges[e].tail;
            if (!seen[w]) {
                seen[w] = true;
                t.parent_edge[w] = e;
                t.parent_vertex[w] = v;
                stack.push_back(w);
            }
        }
    }
    for (int v = 0; v < n; ++v)
        if (!seen[v]) throw ValidationError("tree does not span the graph");
    return t;
}

}  // namespace

SpanningTree spanning_tree(const OrientedGraph& g) {
    g.validate();
    if (!is_connected(g)) throw ValidationError("graph must be connected for a spanning tree");
    int n = static_cast<int>(g.vertex_ids.size());

    int root = 0;
    for (int v = 1; v < n; ++v)
        if (g.vertex_ids[v] < g.vertex_ids[root]) root = v;

    // Incident edges per vertex, lexicographic by edge id.
    std::vector<std::vector<int>> incident(n);
    std::vector<int> order(g.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return g.edges[a].id < g.edges[b].id; });
    for (int e : order) {
        incident[g.edges[e].tail].push_back(e);
        incident[g.edges[e].head].push_back(e);
    }

    std::vector<bool> seen(n, false);
    std::vector<int> tree_edges;
    // Recursive lexicographic DFS via explicit stack of (vertex, next slot).
    std::vector<std::pair<int, size_t>> stack{{root, 0}};
    seen[root] = true;
    while (!stack.empty()) {
        auto& [v, slot] = stack.back();
        if (slot >= incident[v].size()) { stack.pop_back(); continue; }
        int e = incident[v][slot++];
        int w = g.edges[e].tail == v ? g.edges[e].head : g.edges[e].tail;
        if (!seen[w]) {
            seen[w] = true;
            tree_edges.push_back(e);
            stack.push_back({w, 0});
        }
    }
    std::sort(tree_edges.begin(), tree_edges.end());
    return finish_tree(g, tree_edges, root);
}

SpanningTree spanning_tree(const OrientedGraph& g, const std::vector<std::string>& edge_ids) {
    g.validate();
    if (!is_connected(g)) throw ValidationError("graph must be connected for a spanning tree");
    if (edge_ids.size() != g.vertex_ids.size() - 1)
        throw ValidationError("tree override must have |V|-1 edges");
    std::vector<int> tree_edges;
    for (const auto& id : edge_ids) tree_edges.push_back(g.edge_index(id));
    std::sort(tree_edges.begin(), tree_edges.end());
    // Acyclic check: |V|-1 edges joining all vertices without a repeat merge.
    std::vector<int> up(g.vertex_ids.size());
    std::iota(up.begin(), up.end(), 0);
    for (int e : tree_edges) {
        int a = find_root(up, g.edges[e].tail), b = find_root(up, g.edges[e].head);
        if (a == b) throw ValidationError("tree override contains a cycle");
        up[a] = b;
    }
    int root = 0;
    for (int v = 1; v < static_cast<int>(g.vertex_ids.size()); ++v)
        if (g.vertex_ids[v] < g.vertex_ids[root]) root = v;
    return finish_tree(g, tree_edges, root);
}

std::map<int, std::vector<int>> fundamental_cut_sets(const OrientedGraph& g,
                                                     const SpanningTree& t) {
    std::map<int, std::vector<int>> out;
    int n = static_cast<int>(g.vertex_ids.size());
    for (int cut : t.tree_edges) {
        // Vertex side containing the tail of the removed tree edge.
        std::vector<std::vector<int>> incident(n);
        for (int e : t.tree_edges) {
            if (e == cut) continue;
            incident[g.edges[e].tail].push_back(e);
            incident[g.edges[e].head].push_back(e);
        }
        std::vector<bool> side(n, false);
        std::vector<int> stack{g.edges[cut].tail};
        side[g.edges[cut].tail] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int e : incident[v]) {
                int w = g.edges[e].tail == v ? g.edges[e].head : g.edges[e].tail;
                if (!side[w]) { side[w] = true; stack.push_back(w); }
            }
        }
        std::vector<int> cutset;
        for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
            if (side[g.edges[e].tail] != side[g.edges[e].head]) cutset.push_back(e);
        out[cut] = std::move(cutset);
    }
    return out;
}

std::map<int, std::vector<SignedEdge>> fundamental_cycles(const OrientedGraph& g,
                                                          const SpanningTree& t) {
    std::map<int, std::vector<SignedEdge>> out;
    int n = static_cast<int>(g.vertex_ids.size());
    // Tree path between two vertices via parent pointers: lift both to root.
    auto depth = [&](int v) {
        int d = 0;
        while (t.parent_vertex[v] != -1) { v = t.parent_vertex[v]; ++d; }
        return d;
    };
    (void)n;
    for (int ce : t.cotree_edges) {
        int from = g.edges[ce].head;   // walk back from the head ...
        int to = g.edges[ce].tail;     // ... to the tail through the tree
        std::vector<SignedEdge> up_from, up_to;
        int a = from, b = to;
        int da = depth(a), db = depth(b);
        auto step_up = [&](int v, std::vector<SignedEdge>& path) {
            int e = t.parent_edge[v];
            int p = t.parent_vertex[v];
            // Traversing v -> p: forward if v is the tail of e.
            path.push_back({e, g.edges[e].tail == v ? +1 : -1});
            return p;
        };
        while (da > db) { a = step_up(a, up_from); --da; }
        while (db > da) { b = step_up(b, up_to); --db; }
        while (a != b) {
            a = step_up(a, up_from);
            b = step_up(b, up_to);
        }
        std::vector<SignedEdge> cycle;
        cycle.push_back({ce, +1});
        for (const auto& s : up_from) cycle.push_back(s);
        for (auto it = up_to.rbegin(); it != up_to.rend(); ++it)
            cycle.push_back({it->edge, -it->sign});
        out[ce] = std::move(cycle);
    }
    return out;
}

std::vector<int> edge_vector(const OrientedGraph& g, const std::vector<SignedEdge>& path) {
    std::vector<int> v(g.edges.size(), 0);
    for (const auto& s : path) v[s.edge] += s.sign;
    return v;
}

int PlanarComplex::face_index(const std::string& id) const {
    for (size_t i = 0; i < faces.size(); ++i)
        if (faces[i].id == id) return static_cast<int>(i);
    throw ValidationError("unknown face '" + id + "'");
}

Matrix second_connection_matrix(const PlanarComplex& k) {
    k.graph.validate();
    Matrix m1 = connection_matrix(k.graph);
    auto [b0, b1] = betti(k.graph);
    (void)b0;
    int expected = k.embedding == PlanarComplex::Embedding::Sphere ? b1 + 1 : b1;
    if (static_cast<int>(k.faces.size()) != expected)
        throw ValidationError(k.embedding == PlanarComplex::Embedding::Sphere
                                  ? "sphere face count must be beta1+1"
                                  : "plane face count must be beta1");
    std::set<std::string> fids;
    for (const auto& f : k.faces)
        if (!fids.insert(f.id).second) throw ValidationError("duplicate face id '" + f.id + "'");

    Matrix m2(k.faces.size(), std::vector<int>(k.graph.edges.size(), 0));
    for (size_t f = 0; f < k.faces.size(); ++f) {
        for (const auto& s : k.faces[f].boundary) {
            if (s.sign != 1 && s.sign != -1) throw ValidationError("face boundary signs must be +-1");
            if (m2[f][s.edge] != 0)
                throw ValidationError("edge repeated in face boundary '" + k.faces[f].id + "'");
            m2[f][s.edge] = s.sign;
        }
        // Each face boundary must be a cycle of the graph: row . M1 = 0 over Z.
        for (size_t v = 0; v < k.graph.vertex_ids.size(); ++v) {
            int acc = 0;
            for (size_t e = 0; e < k.graph.edges.size(); ++e) acc += m2[f][e] * m1[e][v];
            if (acc != 0)
                throw ValidationError("face boundary not closed for face '" + k.faces[f].id + "'");
        }
    }
    for (size_t e = 0; e < k.graph.edges.size(); ++e) {
        int nonzero = 0, sum = 0;
        for (size_t f = 0; f < k.faces.size(); ++f) {
            if (m2[f][e] != 0) { ++nonzero; sum += m2[f][e]; }
        }
        if (k.embedding == PlanarComplex::Embedding::Sphere) {
            if (nonzero != 2 || sum != 0)
                throw ValidationError("sphere columns must have exactly 2 nonzeros of opposite sign");
        } else {
            if (nonzero < 1 || nonzero > 2)
                throw ValidationError("plane columns must have 1 or 2 nonzeros");
        }
    }
    return m2;
}

PlanarComplex dual_graph(const PlanarComplex& k) {
    if (k.embedding != PlanarComplex::Embedding::Sphere)
        throw ValidationError("dual graph requires a sphere embedding");
    Matrix m2 = second_connection_matrix(k);
    // No dangling degree-1 vertices.
    std::vector<int> degree(k.graph.vertex_ids.size(), 0);
    for (const auto& e : k.graph.edges) { ++degree[e.tail]; ++degree[e.head]; }
    for (size_t v = 0; v < degree.size(); ++v)
        if (degree[v] <= 1)
            throw ValidationError("dangling vertex '" + k.graph.vertex_ids[v] + "' has degree <= 1");

    PlanarComplex d;
    d.embedding = PlanarComplex::Embedding::Sphere;
    for (const auto& f : k.faces) d.graph.vertex_ids.push_back(f.id);
    // Dual edge e: tail at the -1 face, head at the +1 face of column e.
    for (size_t e = 0; e < k.graph.edges.size(); ++e) {
        int head = -1, tail = -1;
        for (size_t f = 0; f < k.faces.size(); ++f) {
            if (m2[f][e] == 1) head = static_cast<int>(f);
            if (m2[f][e] == -1) tail = static_cast<int>(f);
        }
        d.graph.edges.push_back({k.graph.edges[e].id, tail, head});
    }
    // Dual faces: one per primal vertex, boundary signs from M1's columns so
    // that the dual complex's second connection matrix equals M1 transposed.
    Matrix m1 = connection_matrix(k.graph);
    for (size_t v = 0; v < k.graph.vertex_ids.size(); ++v) {
        PlanarComplex::Face f;
        f.id = k.graph.vertex_ids[v];
        for (size_t e = 0; e < k.graph.edges.size(); ++e)
            if (m1[e][v] != 0) f.boundary.push_back({static_cast<int>(e), m1[e][v]});
        d.faces.push_back(std::move(f));
    }
    d.graph.validate();
    return d;
}

namespace {

/// Enumerate the subgroup of A^n generated by integer row vectors (the rows
/// applied to every alphabet element), i.e. {sum_i a_i * rows_i : a in A^k}.
std::set<std::vector<int>> span_over(const group::FiniteAbelianGroup& a,
                                     const std::vector<std::vector<int>>& rows, long long cap) {
    size_t n = rows.empty() ? 0 : rows[0].size();
    std::set<std::vector<int>> s;
    s.insert(std::vector<int>(n, 0));
    for (const auto& row : rows) {
        // Cyclic span of row scaled by each alphabet element, added in.
        std::vector<std::vector<int>> current(s.begin(), s.end());
        for (long long coeff = 1; coeff < a.order(); ++coeff) {
            std::vector<int> scaled(n);
            for (size_t i = 0; i < n; ++i) {
                int acc = 0;
                int reps = row[i] >= 0 ? row[i] : -row[i];
                int unit = static_cast<int>(coeff);
                if (row[i] < 0) unit = a.neg(unit);
                for (int r = 0; r < reps; ++r) acc = a.add(acc, unit);
                scaled[i] = acc;
            }
            for (const auto& w : current) {
                std::vector<int> sum(n);
                for (size_t i = 0; i < n; ++i) sum[i] = a.add(w[i], scaled[i]);
                s.insert(std::move(sum));
                if (static_cast<long long>(s.size()) > cap)
                    throw CapExceeded("span enumeration exceeds cap");
            }
        }
    }
    return s;
}

long long int_log(long long value, long long base) {
    int k = 0;
    long long p = 1;
    while (p < value) { p *= base; ++k; }
    if (p != value) throw ValidationError("quotient size is not a power of the probe alphabet order");
    return k;
}

}  // namespace

std::array<int, 3> homology_dimensions(const PlanarComplex& k,
                                       const group::FiniteAbelianGroup& probe, long long cap) {
    k.graph.validate();
    if (!is_connected(k.graph)) throw ValidationError("homology computation requires a connected graph");
    Matrix m1 = connection_matrix(k.graph);
    long long q = probe.order();
    size_t nv = k.graph.vertex_ids.size(), ne = k.graph.edges.size();

    // B0 = im d1^T (row space of M1^T = boundary images), as rows over vertices.
    std::vector<std::vector<int>> m1_rows(ne, std::vector<int>(nv));
    for (size_t e = 0; e < ne; ++e)
        for (size_t v = 0; v < nv; ++v) m1_rows[e][v] = m1[e][v];
    auto b0_set = span_over(probe, m1_rows, cap);
    long long c0_size = 1;
    for (size_t i = 0; i < nv; ++i) c0_size *= q;
    int dim_h0 = static_cast<int>(int_log(c0_size / static_cast<long long>(b0_set.size()), q));

    // Z1 = kernel of the boundary operator on edge vectors.
    long long z1_size = 0;
    {
        std::vector<int> w(ne, 0);
        std::vector<int> radix(ne, static_cast<int>(q));
        long long steps = 0;
        do {
            if (++steps > cap) throw CapExceeded("Z1 enumeration exceeds cap");
            bool ker = true;
            for (size_t v = 0; v < nv && ker; ++v) {
                int acc = 0;
                for (size_t e = 0; e < ne; ++e) {
                    if (m1[e][v] == 1) acc = probe.add(acc, w[e]);
                    else if (m1[e][v] == -1) acc = probe.add(acc, probe.neg(w[e]));
                }
                if (acc != 0) ker = false;
            }
            if (ker) ++z1_size;
        } while (group::detail::next_tuple(w, radix));
    }

    long long b1_size = 1;
    long long z2_size = 1;
    if (!k.faces.empty()) {
        Matrix m2 = second_connection_matrix(k);
        std::vector<std::vector<int>> m2_rows(k.faces.size(), std::vector<int>(ne));
        for (size_t f = 0; f < k.faces.size(); ++f)
            for (size_t e = 0; e < ne; ++e) m2_rows[f][e] = m2[f][e];
        b1_size = static_cast<long long>(span_over(probe, m2_rows, cap).size());

        // Z2 = kernel of the second boundary operator on face vectors.
        z2_size = 0;
        std::vector<int> w(k.faces.size(), 0);
        std::vector<int> radix(k.faces.size(), static_cast<int>(q));
        do {
            bool ker = true;
            for (size_t e = 0; e < ne && ker; ++e) {
                int acc = 0;
                for (size_t f = 0; f < k.faces.size(); ++f) {
                    if (m2[f][e] == 1) acc = probe.add(acc, w[f]);
                    else if (m2[f][e] == -1) acc = probe.add(acc, probe.neg(w[f]));
                }
                if (acc != 0) ker = false;
            }
            if (ker) ++z2_size;
        } while (group::detail::next_tuple(w, radix));
    }

    int dim_h1 = static_cast<int>(int_log(z1_size / b1_size, q));
    int dim_h2 = static_cast<int>(int_log(z2_size, q));
    return {dim_h0, dim_h1, dim_h2};
}

}  // namespace gtop::topo

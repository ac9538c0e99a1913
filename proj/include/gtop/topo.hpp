#ifndef GTOP_TOPO_HPP
#define GTOP_TOPO_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gtop/group.hpp"

namespace gtop::topo {

using Matrix = std::vector<std::vector<int>>;

/// Finite graph with oriented edges; no self-loops.  Multi-edges between the
/// same vertex pair are allowed (dual graphs need them).  Orientations come
/// from the input and are never changed.
struct OrientedGraph {
    std::vector<std::string> vertex_ids;
    struct Edge {
        std::string id;
        int tail;
        int head;
    };
    std::vector<Edge> edges;

    int vertex_index(const std::string& id) const;
    int edge_index(const std::string& id) const;
    void validate() const;
};

/// Row e: +1 at the head of e, -1 at its tail.
Matrix connection_matrix(const OrientedGraph& g);

int component_count(const OrientedGraph& g);
bool is_connected(const OrientedGraph& g);

/// (beta0, beta1) = (#components, |E| - |V| + beta0).
std::pair<int, int> betti(const OrientedGraph& g);

struct SpanningTree {
    std::vector<int> tree_edges;    // |V|-1 edge indices
    std::vector<int> cotree_edges;  // the rest, ascending
    int root;                       // root vertex index
    std::vector<int> parent_edge;   // per vertex: tree edge toward the root (-1 at root)
    std::vector<int> parent_vertex; // per vertex: parent vertex (-1 at root)
    std::vector<int> order;         // vertices in visit order (root first)

    bool in_tree(int edge) const;
};

/// Deterministic tree: depth-first from the lexicographically first vertex,
/// neighbors tried in lexicographic edge-id order.
SpanningTree spanning_tree(const OrientedGraph& g);

/// Tree from a user-supplied edge set (validated: spanning and acyclic).
SpanningTree spanning_tree(const OrientedGraph& g, const std::vector<std::string>& edge_ids);

/// For each tree edge e, the cut set of the partition obtained by removing e
/// from the tree.  Always a subset of {e} plus the cotree edges.
std::map<int, std::vector<int>> fundamental_cut_sets(const OrientedGraph& g,
                                                     const SpanningTree& t);

struct SignedEdge {
    int edge;
    int sign;  // +1 traversed forward, -1 reversed
    bool operator==(const SignedEdge& o) const { return edge == o.edge && sign == o.sign; }
};

/// For each cotree edge e, the closed path starting with e and returning to
/// its tail through the tree.  The signed edge vector of each cycle is in
/// the kernel of the boundary operator over the integers.
std::map<int, std::vector<SignedEdge>> fundamental_cycles(const OrientedGraph& g,
                                                          const SpanningTree& t);

/// Integer edge vector of a signed path (coefficient per edge).
std::vector<int> edge_vector(const OrientedGraph& g, const std::vector<SignedEdge>& path);

/// Graph plus oriented faces, drawn on a plane or a sphere.
struct PlanarComplex {
    enum class Embedding { Plane, Sphere };
    OrientedGraph graph;
    struct Face {
        std::string id;
        std::vector<SignedEdge> boundary;
    };
    std::vector<Face> faces;
    Embedding embedding = Embedding::Plane;

    int face_index(const std::string& id) const;
};

/// |F| x |E| matrix of face/edge incidences; validates closed boundaries,
/// per-edge face counts and the face-count identity for the embedding.
Matrix second_connection_matrix(const PlanarComplex& k);

/// Sphere only: swap vertices and faces, keeping edge ids.  The dual's
/// connection matrices are the transposes of the primal's.
PlanarComplex dual_graph(const PlanarComplex& k);

/// (dim H0, dim H1, dim H2) over a probe alphabet, by quotient-size
/// enumeration: H0 = C0/B0, H1 = Z1/B1, H2 = Z2.
std::array<int, 3> homology_dimensions(const PlanarComplex& k,
                                       const group::FiniteAbelianGroup& probe,
                                       long long cap);

}  // namespace gtop::topo

#endif

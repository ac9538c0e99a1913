#ifndef GTOP_NR_HPP
#define GTOP_NR_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gtop/gcode.hpp"
#include "gtop/group.hpp"
#include "gtop/topo.hpp"

namespace gtop::nr {

/// Constraint kinds of an elementary normal realization.  Zero (all ports
/// forced to 0) and Free (no constraint) arise in I/O variants; they are
/// each other's duals, as Repetition and ZeroSum are.
enum class NodeKind { Repetition, ZeroSum, Zero, Free };

std::string node_kind_name(NodeKind k);
NodeKind node_kind_from_name(const std::string& s);

/// Bipartite constraint structure: nodes carry constraints, internal edges
/// link two node ports (optionally through a sign inverter), half-edges are
/// labeled external ports.  An inverting edge reads s at end a and -s at
/// end b.  Constraints are permutation-invariant, so ports are implicit.
struct NormalRealization {
    group::FiniteAbelianGroup alphabet;
    struct Node {
        NodeKind kind;
        std::string id;
    };
    struct Edge {
        int a;
        int b;
        bool invert;
    };
    struct HalfEdge {
        int node;
        std::string label;
    };
    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::vector<HalfEdge> half_edges;

    /// Construction metadata for the standard graph-derived realizations;
    /// carried so I/O variants and information-set extenders can be built.
    struct Meta {
        std::shared_ptr<const topo::OrientedGraph> graph;
        std::string tag;                   // "W01", "Z0", "B1", "Z1", "B0", ...
        std::vector<int> vertex_node;      // graph vertex -> node index (-1 if none)
        std::vector<int> edge_node;        // graph edge -> node index (-1 if none)
        std::optional<topo::SpanningTree> tree;
        int base_vertex = -1;
    };
    std::optional<Meta> meta;

    int degree(int node) const;
    void validate() const;

    long long total_state_size() const;       // |A_E|
    long long total_constraint_size() const;  // |C_V|
};

/// Realization of the coboundary I/O behavior {(x, Mx)}: a repetition node
/// per vertex, a degree-3 zero-sum node per edge, an inverter on the replica
/// feeding edge e from its head vertex.
NormalRealization build_w01(const std::shared_ptr<const topo::OrientedGraph>& g,
                            const group::FiniteAbelianGroup& a);

enum class SpaceKind { Z0, B1 };

/// Z0: zero the edge half-edges of W01 and simplify (repetition nodes joined
/// by plain edges).  B1: drop the vertex half-edges, keeping the replicas.
NormalRealization derive_space_realization(const NormalRealization& w01, SpaceKind which);

/// Swap Repetition<->ZeroSum and Zero<->Free, toggle every edge inverter.
/// External behavior of the result is the dual code of the input's.
NormalRealization dualize(const NormalRealization& r);

/// Remove internal degree-2 Repetition/ZeroSum nodes by merging their two
/// edges (a degree-2 zero-sum acts as a sign inverter).
NormalRealization simplify(const NormalRealization& r);

enum class IoKind { Z0Io, B1Io, Z1Io, B0Io, W01Io, W10Io };

/// Observable-and-controllable variants of the standard realizations:
/// Z0Io keeps only tree-edge constraints; B1Io fixes the base vertex replica
/// to zero; Z1Io frees one vertex constraint; B0Io dualizes Z0Io; W01Io is
/// the composite with information set (x_base, y_tree); W10Io is its dual.
NormalRealization make_io_realization(const NormalRealization& r, IoKind kind,
                                      const std::optional<topo::SpanningTree>& tree = std::nullopt,
                                      int base_vertex = 0);

struct BehaviorSummary {
    long long behavior_size;             // |B|
    gcode::GroupCode external_behavior;  // C
    long long unobservable_size;         // |B^u|
    long long total_state_size;          // |A_E|
    long long total_constraint_size;     // |C_V|
};

/// Exhaustive behavior enumeration by backtracking with constraint
/// propagation; the cap bounds the search work, not |A|^(edges+halves).
BehaviorSummary analyze(const NormalRealization& r, long long cap);

/// Visit every valid configuration (edge values, half-edge values).
void enumerate_behavior(const NormalRealization& r, long long cap,
                        const std::function<void(const std::vector<int>&, const std::vector<int>&)>& visit);

/// degree = |B| * |A_E| / |C_V|; controllable iff degree == 1.  The degree
/// equals the unobservable-behavior size of the dual realization.
std::pair<bool, long long> controllability_test(const NormalRealization& r, long long cap);

}  // namespace gtop::nr

#endif

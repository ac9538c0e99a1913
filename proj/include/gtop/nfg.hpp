#ifndef GTOP_NFG_HPP
#define GTOP_NFG_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "gtop/group.hpp"
#include "gtop/nr.hpp"
#include "gtop/rational.hpp"

namespace gtop::nfg {

using group::cplx;

/// Normal factor graph: complex-valued node functions over their incident
/// variables.  Each internal edge carries one variable (an inverting edge
/// reads s at end 0 and -s at end 1); each half-edge carries an external
/// variable.  Node tables are indexed mixed-radix over the node's ports in
/// order, first port most significant.
struct NormalFactorGraph {
    struct Port {
        enum class Kind { Edge, Half } kind;
        int index;
        int end;  // 0 or 1 for edges
    };
    struct Node {
        std::string id;
        std::vector<Port> ports;
        std::vector<cplx> table;
    };
    struct Edge {
        group::FiniteAbelianGroup alphabet;
        bool invert;
    };
    struct HalfEdge {
        group::FiniteAbelianGroup alphabet;
        std::string label;
    };

    std::vector<Node> nodes;
    std::vector<Edge> edges;
    std::vector<HalfEdge> half_edges;

    void validate() const;
    long long internal_size() const;  // |A_E|
    group::FiniteAbelianGroup port_group(const Node& n) const;
};

/// Z(a) = sum over internal configurations of the product of node values.
cplx evaluate(const NormalFactorGraph& n, const std::vector<int>& external_assignment,
              long long cap);

/// All external assignments in canonical order with their Z values.
std::vector<cplx> evaluate_all(const NormalFactorGraph& n, long long cap);

/// Fourier-transform every node function and toggle every edge inverter.
/// The result's partition function is |A_E| times the Fourier transform of
/// the input's, as a function of the dualized external variables.
NormalFactorGraph dual_nfg(const NormalFactorGraph& n);

/// Replace edge e by Fourier node / inverter / Fourier node plus a
/// disconnected 1/|A| constant; the partition function is unchanged.
NormalFactorGraph insert_edge_replacement(const NormalFactorGraph& n, int edge);

/// Indicator-function NFG of a normal realization.
NormalFactorGraph to_nfg(const nr::NormalRealization& r);

/// Closed NFG: weight nodes attached to every half-edge of the base.
struct EdgeWeightedNfg {
    nr::NormalRealization base;
    std::map<std::string, group::GroupFunction> weights;  // half-edge label -> weight
};

NormalFactorGraph to_closed_nfg(const EdgeWeightedNfg& e);

struct PartitionValue {
    cplx value;
    std::string method;
    Rational declared_scale;  // value = declared_scale * reference Z
    long long info_set_size = -1;
    double wall_ms = 0.0;
};

/// (half-edge indices forming an information set, extender info -> full).
struct IoSpec {
    std::vector<int> info_half_edges;
    std::function<std::vector<int>(const std::vector<int>&)> extend;
};

enum class EvalStrategy { Full, InfoSet };

/// Full: enumerate the base behavior (the correctness anchor).  InfoSet:
/// enumerate only the information set and extend; valid for observable I/O
/// bases, where both strategies agree exactly.
cplx evaluate_ewnfg(const EdgeWeightedNfg& e, long long cap, EvalStrategy strategy,
                    const IoSpec* io = nullptr);

/// Unscaled dual: base dualized with plain dual indicators, weights Fourier
/// transformed.  Second return value is the exact factor
/// |A_H| * |A_E| / |C_V| by which the dual's value exceeds the primal's.
std::pair<EdgeWeightedNfg, Rational> dual_ewnfg(const EdgeWeightedNfg& e);

}  // namespace gtop::nfg

#endif

#ifndef GTOP_ISING_HPP
#define GTOP_ISING_HPP

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gtop/group.hpp"
#include "gtop/nfg.hpp"
#include "gtop/rational.hpp"
#include "gtop/topo.hpp"

namespace gtop::ising {

using group::cplx;
using nfg::PartitionValue;

/// Boltzmann model on a graph whose configuration weight depends only on
/// edge differences y_e = x_head - x_tail through per-edge weights, plus an
/// optional per-vertex external field.  beta is recorded for provenance;
/// the weight tables are the operative data.
struct IsingTypeModel {
    std::shared_ptr<const topo::OrientedGraph> graph;
    group::FiniteAbelianGroup alphabet;
    std::map<std::string, group::GroupFunction> edge_weights;
    std::map<std::string, group::GroupFunction> vertex_weights;  // empty = no field
    double beta = 0.0;

    bool has_field() const { return !vertex_weights.empty(); }
    void validate() const;
};

/// f_e(0) = exp(beta J_e), f_e(1) = exp(-beta J_e), over Z2.
std::map<std::string, group::GroupFunction> ising_weights(const topo::OrientedGraph& g, double beta,
                                                          const std::map<std::string, double>& j);

/// f_e(0) = exp(beta J_e), f_e(y) = 1 otherwise, over Zq.
std::map<std::string, group::GroupFunction> potts_weights(const topo::OrientedGraph& g, double beta,
                                                          const std::map<std::string, double>& j,
                                                          int q);

/// Brute-force sum over all vertex configurations; the reference value for
/// every other method.  Weights must be real for the Boltzmann reading, but
/// complex tables are accepted and summed as-is.
cplx partition_exact(const IsingTypeModel& m, long long cap);

/// Coboundary-space sum over the spanning-tree information set, returned at
/// scale 1 (a full-space realization's redundancy puts it at the reference).
PartitionValue partition_primal(const IsingTypeModel& m, const topo::SpanningTree& t, long long cap);

/// Cycle-space sum of the Fourier-transformed weights over the cotree
/// information set; declared scale |A|^(|E|-|V|), from the structural ledger.
PartitionValue partition_dual(const IsingTypeModel& m, const topo::SpanningTree& t, long long cap);

enum class FieldMethod { PrimalW01, DualW10, Hybrid };

/// With an external field: the coboundary I/O sum, the dual (boundary I/O)
/// sum with transformed weights, or the hybrid split with Fourier link
/// nodes between the vertex side and the dualized edge side.
PartitionValue partition_with_field(const IsingTypeModel& m, FieldMethod method,
                                    const topo::SpanningTree& t, int base_vertex, long long cap);

struct PlanarRepresentation {
    std::string space;    // which code the sum runs over
    std::string graph;    // "primal" or "dual"
    std::string weights;  // "f" or "f_hat"
    int dimension;        // information-set size
    PartitionValue pv;
};

struct PlanarReport {
    cplx exact_primal;                           // brute force on G
    cplx exact_dual;                             // brute force on the dual graph
    std::vector<PlanarRepresentation> primal_z;  // four routes to Z(G)
    std::vector<PlanarRepresentation> dual_z;    // four routes to Z(dual)
};

/// The four sum representations of Z(G) and of Z(dual graph) for a model on
/// a sphere complex, each with its exact declared scale.
PlanarReport planar_representations(const IsingTypeModel& m, const topo::PlanarComplex& k,
                                    long long cap);

struct McEstimate {
    double estimate;   // estimates declared_scale * exact partition value
    double std_error;  // sample standard deviation / sqrt(num_samples)
    long long num_samples;
    unsigned long long seed;
    topo::SpanningTree tree_used;
    Rational declared_scale;
};

/// Importance sampling of the coboundary-space sum: tree-edge values drawn
/// from the product proposal f_e / Z_e by inverse CDF in canonical order,
/// extended to the full edge configuration, weighted by the cotree factors.
/// Deterministic for a fixed seed.
McEstimate importance_sampling(const IsingTypeModel& m, const topo::SpanningTree& t,
                               long long num_samples, unsigned long long seed);

/// Extend tree-edge values to the full coboundary codeword (x_base = 0).
std::vector<int> extend_tree_assignment(const topo::OrientedGraph& g,
                                        const group::FiniteAbelianGroup& a,
                                        const topo::SpanningTree& t,
                                        const std::vector<int>& y_tree);

}  // namespace gtop::ising

#endif

#ifndef GTOP_GRAPHS_HPP
#define GTOP_GRAPHS_HPP

#include <memory>

#include "gtop/topo.hpp"

namespace gtop::graphs {

/// Five vertices, six edges, two independent cycles: a square sharing an
/// edge with a triangle.  The standing demo graph for the test suites.
std::shared_ptr<const topo::OrientedGraph> house_graph();

/// The house graph drawn on a plane (2 faces) or a sphere (3 faces).
topo::PlanarComplex house_complex(bool sphere);

/// Single cycle of length n: edges e_i from v_i to v_{i+1 mod n}.
std::shared_ptr<const topo::OrientedGraph> ring_graph(int n);

/// The ring on a sphere: inner face with all edges forward, outer reversed.
topo::PlanarComplex ring_complex(int n);

/// Deterministic random connected graph: a random spanning tree plus random
/// extra edges, no self-loops.
std::shared_ptr<const topo::OrientedGraph> random_connected_graph(unsigned long long seed,
                                                                  int max_vertices, int max_edges);

}  // namespace gtop::graphs

#endif

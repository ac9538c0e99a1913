#ifndef GTOP_SPACES_HPP
#define GTOP_SPACES_HPP

#include "gtop/gcode.hpp"
#include "gtop/topo.hpp"

namespace gtop::spaces {

/// Brute-force kernel/image enumeration from the connection matrix.  These
/// are the reference constructions the realization-based routes are checked
/// against.

/// {x in A^V : Mx = 0}.
gcode::GroupCode zero_coboundary(const topo::OrientedGraph& g, const group::FiniteAbelianGroup& a,
                                 long long cap);

/// {Mx : x in A^V}.
gcode::GroupCode coboundary(const topo::OrientedGraph& g, const group::FiniteAbelianGroup& a,
                            long long cap);

/// {y in A^E : yM = 0}.
gcode::GroupCode zero_boundary(const topo::OrientedGraph& g, const group::FiniteAbelianGroup& a,
                               long long cap);

/// {yM : y in A^E}.
gcode::GroupCode boundary(const topo::OrientedGraph& g, const group::FiniteAbelianGroup& a,
                          long long cap);

}  // namespace gtop::spaces

#endif

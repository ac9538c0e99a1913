#ifndef GTOP_JSON_IO_HPP
#define GTOP_JSON_IO_HPP

#include <json.hpp>

#include "gtop/ising.hpp"
#include "gtop/nfg.hpp"
#include "gtop/nr.hpp"
#include "gtop/topo.hpp"

namespace gtop::io {

using json = nlohmann::ordered_json;

topo::OrientedGraph parse_graph(const json& j);
bool has_faces(const json& j);
topo::PlanarComplex parse_complex(const json& j);
json graph_to_json(const topo::OrientedGraph& g);
json complex_to_json(const topo::PlanarComplex& k);

/// Model file: alphabet spec, inline graph or graph_file reference, weights
/// (ising/potts parameters or explicit tables), optional per-vertex field.
ising::IsingTypeModel parse_model(const json& j, const std::string& base_dir);

json nr_to_json(const nr::NormalRealization& r);
nr::NormalRealization nr_from_json(const json& j);

json nfg_to_json(const nfg::NormalFactorGraph& n);
nfg::NormalFactorGraph nfg_from_json(const json& j);

json load_file(const std::string& path);

/// Flatten a report to "key,value" CSV lines (arrays/objects descend with
/// dotted keys).
std::string to_csv(const json& report);

}  // namespace gtop::io

#endif

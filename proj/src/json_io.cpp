#include "gtop/json_io.hpp"

#include <fstream>
#include <sstream>

#include "gtop/config.hpp"

namespace gtop::io {

using group::cplx;
using group::FiniteAbelianGroup;
using group::GroupFunction;

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ValidationError("parse failure in '" + path + "': " + e.what());
    }
    return j;
}

topo::OrientedGraph parse_graph(const json& j) {
    topo::OrientedGraph g;
    if (!j.contains("vertices") || !j.contains("edges"))
        throw ValidationError("graph file needs 'vertices' and 'edges'");
    for (const auto& v : j.at("vertices")) g.vertex_ids.push_back(v.get<std::string>());
    for (const auto& e : j.at("edges")) {
        topo::OrientedGraph::Edge edge;
        edge.id = e.at("id").get<std::string>();
        edge.tail = g.vertex_index(e.at("tail").get<std::string>());
        edge.head = g.vertex_index(e.at("head").get<std::string>());
        g.edges.push_back(std::move(edge));
    }
    g.validate();
    return g;
}

bool has_faces(const json& j) { return j.contains("faces") && !j.at("faces").empty(); }

topo::PlanarComplex parse_complex(const json& j) {
    topo::PlanarComplex k;
    k.graph = parse_graph(j);
    std::string emb = j.value("embedding", "plane");
    if (emb == "plane") k.embedding = topo::PlanarComplex::Embedding::Plane;
    else if (emb == "sphere") k.embedding = topo::PlanarComplex::Embedding::Sphere;
    else throw ValidationError("embedding must be 'plane' or 'sphere'");
    if (!j.contains("faces")) throw ValidationError("complex needs 'faces'");
    for (const auto& f : j.at("faces")) {
        topo::PlanarComplex::Face face;
        face.id = f.at("id").get<std::string>();
        for (const auto& b : f.at("boundary")) {
            int e = k.graph.edge_index(b.at(0).get<std::string>());
            int sign = b.at(1).get<int>();
            face.boundary.push_back({e, sign});
        }
        k.faces.push_back(std::move(face));
    }
    return k;
}

json graph_to_json(const topo::OrientedGraph& g) {
    json j;
    j["vertices"] = g.vertex_ids;
    j["edges"] = json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"id", e.id}, {"tail", g.vertex_ids[e.tail]}, {"head", g.vertex_ids[e.head]}});
    return j;
}

json complex_to_json(const topo::PlanarComplex& k) {
    json j = graph_to_json(k.graph);
    j["faces"] = json::array();
    for (const auto& f : k.faces) {
        json b = json::array();
        for (const auto& s : f.boundary) b.push_back({k.graph.edges[s.edge].id, s.sign});
        j["faces"].push_back({{"id", f.id}, {"boundary", b}});
    }
    j["embedding"] = k.embedding == topo::PlanarComplex::Embedding::Sphere ? "sphere" : "plane";
    return j;
}

namespace {

cplx parse_value(const json& v) {
    if (v.is_array()) {
        if (v.size() != 2) throw ValidationError("complex value must be [re, im]");
        return cplx(v.at(0).get<double>(), v.at(1).get<double>());
    }
    return cplx(v.get<double>(), 0.0);
}

GroupFunction parse_table(const FiniteAbelianGroup& a, const json& v) {
    if (!v.is_array() || static_cast<long long>(v.size()) != a.order())
        throw ValidationError("weight table must list one value per group element");
    std::vector<cplx> vals;
    for (const auto& x : v) vals.push_back(parse_value(x));
    return GroupFunction(a, std::move(vals));
}

}  // namespace

ising::IsingTypeModel parse_model(const json& j, const std::string& base_dir) {
    ising::IsingTypeModel m;
    m.alphabet = FiniteAbelianGroup::parse(j.at("alphabet").get<std::string>());
    if (j.contains("graph")) {
        m.graph = std::make_shared<const topo::OrientedGraph>(parse_graph(j.at("graph")));
    } else if (j.contains("graph_file")) {
        std::string path = j.at("graph_file").get<std::string>();
        if (!path.empty() && path[0] != '/' && !base_dir.empty()) path = base_dir + "/" + path;
        m.graph = std::make_shared<const topo::OrientedGraph>(parse_graph(load_file(path)));
    } else {
        throw ValidationError("model needs 'graph' or 'graph_file'");
    }

    const json& w = j.at("weights");
    std::string kind = w.value("kind", "table");
    if (kind == "ising") {
        if (m.alphabet.order() != 2 || m.alphabet.rank() != 1)
            throw ValidationError("ising weights need alphabet Z2");
        m.beta = w.at("beta").get<double>();
        std::map<std::string, double> jmap;
        if (w.contains("J"))
            for (const auto& [k, v] : w.at("J").items()) jmap[k] = v.get<double>();
        m.edge_weights = ising::ising_weights(*m.graph, m.beta, jmap);
    } else if (kind == "potts") {
        if (m.alphabet.rank() != 1) throw ValidationError("potts weights need a cyclic alphabet Zq");
        m.beta = w.at("beta").get<double>();
        std::map<std::string, double> jmap;
        if (w.contains("J"))
            for (const auto& [k, v] : w.at("J").items()) jmap[k] = v.get<double>();
        m.edge_weights = ising::potts_weights(*m.graph, m.beta, jmap,
                                              static_cast<int>(m.alphabet.order()));
    } else if (kind == "table") {
        m.beta = w.value("beta", 0.0);
        if (!w.contains("values")) throw ValidationError("table weights need 'values'");
        for (const auto& [k, v] : w.at("values").items())
            m.edge_weights.emplace(k, parse_table(m.alphabet, v));
    } else {
        throw ValidationError("weights kind must be ising, potts or table");
    }

    if (j.contains("field"))
        for (const auto& [k, v] : j.at("field").items())
            m.vertex_weights.emplace(k, parse_table(m.alphabet, v));
    m.validate();
    return m;
}

json nr_to_json(const nr::NormalRealization& r) {
    json j;
    j["alphabet"] = r.alphabet.spec_string();
    j["nodes"] = json::array();
    for (const auto& n : r.nodes)
        j["nodes"].push_back({{"id", n.id}, {"kind", nr::node_kind_name(n.kind)}});
    j["edges"] = json::array();
    for (const auto& e : r.edges) j["edges"].push_back({{"a", e.a}, {"b", e.b}, {"invert", e.invert}});
    j["half_edges"] = json::array();
    for (const auto& h : r.half_edges) j["half_edges"].push_back({{"node", h.node}, {"label", h.label}});
    return j;
}

nr::NormalRealization nr_from_json(const json& j) {
    nr::NormalRealization r{FiniteAbelianGroup::parse(j.at("alphabet").get<std::string>()),
                            {}, {}, {}, std::nullopt};
    for (const auto& n : j.at("nodes"))
        r.nodes.push_back({nr::node_kind_from_name(n.at("kind").get<std::string>()),
                           n.at("id").get<std::string>()});
    for (const auto& e : j.at("edges"))
        r.edges.push_back({e.at("a").get<int>(), e.at("b").get<int>(), e.at("invert").get<bool>()});
    for (const auto& h : j.at("half_edges"))
        r.half_edges.push_back({h.at("node").get<int>(), h.at("label").get<std::string>()});
    r.validate();
    return r;
}

json nfg_to_json(const nfg::NormalFactorGraph& n) {
    json j;
    j["edges"] = json::array();
    for (const auto& e : n.edges)
        j["edges"].push_back({{"alphabet", e.alphabet.spec_string()}, {"invert", e.invert}});
    j["half_edges"] = json::array();
    for (const auto& h : n.half_edges)
        j["half_edges"].push_back({{"alphabet", h.alphabet.spec_string()}, {"label", h.label}});
    j["nodes"] = json::array();
    for (const auto& node : n.nodes) {
        json ports = json::array();
        for (const auto& p : node.ports)
            ports.push_back({p.kind == nfg::NormalFactorGraph::Port::Kind::Edge ? "edge" : "half",
                             p.index, p.end});
        json table = json::array();
        for (const auto& v : node.table) table.push_back({v.real(), v.imag()});
        j["nodes"].push_back({{"id", node.id}, {"ports", ports}, {"table", table}});
    }
    return j;
}

nfg::NormalFactorGraph nfg_from_json(const json& j) {
    nfg::NormalFactorGraph n;
    for (const auto& e : j.at("edges"))
        n.edges.push_back({FiniteAbelianGroup::parse(e.at("alphabet").get<std::string>()),
                           e.at("invert").get<bool>()});
    for (const auto& h : j.at("half_edges"))
        n.half_edges.push_back({FiniteAbelianGroup::parse(h.at("alphabet").get<std::string>()),
                                h.at("label").get<std::string>()});
    for (const auto& node : j.at("nodes")) {
        nfg::NormalFactorGraph::Node out;
        out.id = node.at("id").get<std::string>();
        for (const auto& p : node.at("ports")) {
            nfg::NormalFactorGraph::Port port;
            port.kind = p.at(0).get<std::string>() == "edge"
                            ? nfg::NormalFactorGraph::Port::Kind::Edge
                            : nfg::NormalFactorGraph::Port::Kind::Half;
            port.index = p.at(1).get<int>();
            port.end = p.at(2).get<int>();
            out.ports.push_back(port);
        }
        for (const auto& v : node.at("table"))
            out.table.push_back(cplx(v.at(0).get<double>(), v.at(1).get<double>()));
        n.nodes.push_back(std::move(out));
    }
    n.validate();
    return n;
}

namespace {
void flatten(const json& j, const std::string& prefix, std::ostringstream& os) {
    if (j.is_object()) {
        for (const auto& [k, v] : j.items())
            flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    } else if (j.is_array()) {
        size_t i = 0;
        for (const auto& v : j) flatten(v, prefix + "[" + std::to_string(i++) + "]", os);
    } else {
        os << prefix << "," << j.dump() << "\n";
    }
}
}  // namespace

std::string to_csv(const json& report) {
    std::ostringstream os;
    os << "key,value\n";
    flatten(report, "", os);
    return os.str();
}

}  // namespace gtop::io

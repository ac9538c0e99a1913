#include "gtop/nr.hpp"

#include <algorithm>
#include <set>

#include "gtop/config.hpp"

namespace gtop::nr {

using group::FiniteAbelianGroup;

std::string node_kind_name(NodeKind k) {
    switch (k) {
        case NodeKind::Repetition: return "repetition";
        case NodeKind::ZeroSum: return "zero_sum";
        case NodeKind::Zero: return "zero";
        case NodeKind::Free: return "free";
    }
    return "?";
}

NodeKind node_kind_from_name(const std::string& s) {
    if (s == "repetition") return NodeKind::Repetition;
    if (s == "zero_sum") return NodeKind::ZeroSum;
    if (s == "zero") return NodeKind::Zero;
    if (s == "free") return NodeKind::Free;
    throw ValidationError("unknown node kind '" + s + "'");
}

int NormalRealization::degree(int node) const {
    int d = 0;
    for (const auto& e : edges) {
        if (e.a == node) ++d;
        if (e.b == node) ++d;
    }
    for (const auto& h : half_edges)
        if (h.node == node) ++d;
    return d;
}

void NormalRealization::validate() const {
    for (const auto& e : edges)
        if (e.a < 0 || e.a >= static_cast<int>(nodes.size()) || e.b < 0 ||
            e.b >= static_cast<int>(nodes.size()))
            throw ValidationError("edge references a missing node");
    for (const auto& h : half_edges)
        if (h.node < 0 || h.node >= static_cast<int>(nodes.size()))
            throw ValidationError("half-edge references a missing node");
    for (size_t v = 0; v < nodes.size(); ++v)
        if (degree(static_cast<int>(v)) == 0)
            throw ValidationError("node '" + nodes[v].id + "' has no attached ports");
}

long long NormalRealization::total_state_size() const {
    long long s = 1;
    for (size_t i = 0; i < edges.size(); ++i) s *= alphabet.order();
    return s;
}

long long NormalRealization::total_constraint_size() const {
    long long s = 1;
    for (size_t v = 0; v < nodes.size(); ++v) {
        int d = degree(static_cast<int>(v));
        switch (nodes[v].kind) {
            case NodeKind::Repetition: s *= alphabet.order(); break;
            case NodeKind::ZeroSum:
                for (int i = 0; i + 1 < d; ++i) s *= alphabet.order();
                break;
            case NodeKind::Zero: break;
            case NodeKind::Free:
                for (int i = 0; i < d; ++i) s *= alphabet.order();
                break;
        }
    }
    return s;
}

NormalRealization build_w01(const std::shared_ptr<const topo::OrientedGraph>& g,
                            const FiniteAbelianGroup& a) {
    g->validate();
    if (!topo::is_connected(*g)) throw ValidationError("W01 realization requires a connected graph");
    NormalRealization r{a, {}, {}, {}, {}};
    NormalRealization::Meta meta;
    meta.graph = g;
    meta.tag = "W01";
    for (const auto& vid : g->vertex_ids) {
        meta.vertex_node.push_back(static_cast<int>(r.nodes.size()));
        r.nodes.push_back({NodeKind::Repetition, vid});
    }
    for (const auto& e : g->edges) {
        meta.edge_node.push_back(static_cast<int>(r.nodes.size()));
        r.nodes.push_back({NodeKind::ZeroSum, e.id});
    }
    for (size_t e = 0; e < g->edges.size(); ++e) {
        // Replica from each endpoint to the edge constraint; the inverter sits
        // on the head replica so the constraint reads y_e - x_head + x_tail = 0.
        r.edges.push_back({meta.vertex_node[g->edges[e].head], meta.edge_node[e], true});
        r.edges.push_back({meta.vertex_node[g->edges[e].tail], meta.edge_node[e], false});
    }
    for (size_t v = 0; v < g->vertex_ids.size(); ++v)
        r.half_edges.push_back({meta.vertex_node[v], g->vertex_ids[v]});
    for (size_t e = 0; e < g->edges.size(); ++e)
        r.half_edges.push_back({meta.edge_node[e], g->edges[e].id});
    r.meta = std::move(meta);
    return r;
}

NormalRealization derive_space_realization(const NormalRealization& w01, SpaceKind which) {
    if (!w01.meta || w01.meta->tag != "W01")
        throw ValidationError("space realizations derive from a W01 realization");
    const auto& g = *w01.meta->graph;
    const auto& a = w01.alphabet;
    NormalRealization r{a, {}, {}, {}, {}};
    NormalRealization::Meta meta;
    meta.graph = w01.meta->graph;
    if (which == SpaceKind::Z0) {
        // Edge constraints with y_e = 0 collapse to plain edges between the
        // endpoint repetition nodes.
        meta.tag = "Z0";
        for (const auto& vid : g.vertex_ids) {
            meta.vertex_node.push_back(static_cast<int>(r.nodes.size()));
            r.nodes.push_back({NodeKind::Repetition, vid});
        }
        meta.edge_node.assign(g.edges.size(), -1);
        for (const auto& e : g.edges)
            r.edges.push_back({meta.vertex_node[e.head], meta.vertex_node[e.tail], false});
        for (size_t v = 0; v < g.vertex_ids.size(); ++v)
            r.half_edges.push_back({meta.vertex_node[v], g.vertex_ids[v]});
    } else {
        // Drop the vertex half-edges of W01, keeping all replicas.
        meta.tag = "B1";
        for (const auto& vid : g.vertex_ids) {
            meta.vertex_node.push_back(static_cast<int>(r.nodes.size()));
            r.nodes.push_back({NodeKind::Repetition, vid});
        }
        for (const auto& e : g.edges) {
            meta.edge_node.push_back(static_cast<int>(r.nodes.size()));
            r.nodes.push_back({NodeKind::ZeroSum, e.id});
        }
        for (size_t e = 0; e < g.edges.size(); ++e) {
            r.edges.push_back({meta.vertex_node[g.edges[e].head], meta.edge_node[e], true});
            r.edges.push_back({meta.vertex_node[g.edges[e].tail], meta.edge_node[e], false});
        }
        for (size_t e = 0; e < g.edges.size(); ++e)
            r.half_edges.push_back({meta.edge_node[e], g.edges[e].id});
    }
    r.meta = std::move(meta);
    return r;
}

NormalRealization dualize(const NormalRealization& r) {
    NormalRealization d = r;
    for (auto& n : d.nodes) {
        switch (n.kind) {
            case NodeKind::Repetition: n.kind = NodeKind::ZeroSum; break;
            case NodeKind::ZeroSum: n.kind = NodeKind::Repetition; break;
            case NodeKind::Zero: n.kind = NodeKind::Free; break;
            case NodeKind::Free: n.kind = NodeKind::Zero; break;
        }
    }
    for (auto& e : d.edges) e.invert = !e.invert;
    if (d.meta) {
        static const std::vector<std::pair<std::string, std::string>> dual_tag = {
            {"W01", "W10"}, {"W10", "W01"}, {"Z0", "B0"},     {"B0", "Z0"},
            {"B1", "Z1"},   {"Z1", "B1"},   {"Z0io", "B0io"}, {"B0io", "Z0io"},
            {"B1io", "Z1io"}, {"Z1io", "B1io"}, {"W01io", "W10io"}, {"W10io", "W01io"}};
        for (const auto& [from, to] : dual_tag)
            if (d.meta->tag == from) { d.meta->tag = to; break; }
    }
    return d;
}

NormalRealization simplify(const NormalRealization& r) {
    NormalRealization s = r;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < static_cast<int>(s.nodes.size()); ++v) {
            if (s.nodes[v].kind != NodeKind::Repetition && s.nodes[v].kind != NodeKind::ZeroSum)
                continue;
            bool has_half = false;
            for (const auto& h : s.half_edges)
                if (h.node == v) { has_half = true; break; }
            if (has_half) continue;
            std::vector<int> inc;
            for (int e = 0; e < static_cast<int>(s.edges.size()); ++e) {
                if (s.edges[e].a == v) inc.push_back(e);
                if (s.edges[e].b == v) inc.push_back(e);
            }
            if (inc.size() != 2 || inc[0] == inc[1]) continue;  // keep self-paired loops
            int e1 = inc[0], e2 = inc[1];
            // An inverting edge flips once between its two ends, regardless of
            // orientation; a degree-2 zero-sum flips once more.
            int n1 = s.edges[e1].a == v ? s.edges[e1].b : s.edges[e1].a;
            int n2 = s.edges[e2].a == v ? s.edges[e2].b : s.edges[e2].a;
            bool invert =
                s.edges[e1].invert ^ s.edges[e2].invert ^ (s.nodes[v].kind == NodeKind::ZeroSum);
            NormalRealization next{s.alphabet, {}, {}, {}, std::nullopt};
            std::vector<int> remap(s.nodes.size(), -1);
            for (int w = 0; w < static_cast<int>(s.nodes.size()); ++w) {
                if (w == v) continue;
                remap[w] = static_cast<int>(next.nodes.size());
                next.nodes.push_back(s.nodes[w]);
            }
            for (int e = 0; e < static_cast<int>(s.edges.size()); ++e) {
                if (e == e1 || e == e2) continue;
                next.edges.push_back({remap[s.edges[e].a], remap[s.edges[e].b], s.edges[e].invert});
            }
            next.edges.push_back({remap[n1], remap[n2], invert});
            for (const auto& h : s.half_edges) next.half_edges.push_back({remap[h.node], h.label});
            s = std::move(next);
            changed = true;
            break;
        }
    }
    return s;
}

NormalRealization make_io_realization(const NormalRealization& r, IoKind kind,
                                      const std::optional<topo::SpanningTree>& tree_opt,
                                      int base_vertex) {
    if (!r.meta || !r.meta->graph)
        throw ValidationError("I/O realizations require a standard graph-derived realization");
    const auto& g = *r.meta->graph;
    auto tree = tree_opt ? *tree_opt : topo::spanning_tree(g);

    switch (kind) {
        case IoKind::Z0Io: {
            if (r.meta->tag != "Z0")
                throw ValidationError("Z0 I/O variant derives from the Z0 realization");
            NormalRealization io = r;
            std::vector<NormalRealization::Edge> kept;
            for (size_t e = 0; e < io.edges.size(); ++e)
                if (tree.in_tree(static_cast<int>(e))) kept.push_back(io.edges[e]);
            io.edges = std::move(kept);
            io.meta->tag = "Z0io";
            io.meta->tree = tree;
            io.meta->base_vertex = base_vertex;
            return io;
        }
        case IoKind::B1Io: {
            if (r.meta->tag != "B1")
                throw ValidationError("B1 I/O variant derives from the B1 realization");
            NormalRealization io = r;
            io.nodes[io.meta->vertex_node[base_vertex]].kind = NodeKind::Zero;
            io.meta->tag = "B1io";
            io.meta->tree = tree;
            io.meta->base_vertex = base_vertex;
            return io;
        }
        case IoKind::Z1Io: {
            if (r.meta->tag != "Z1")
                throw ValidationError("Z1 I/O variant derives from the Z1 realization");
            NormalRealization io = r;
            io.nodes[io.meta->vertex_node[base_vertex]].kind = NodeKind::Free;
            io.meta->tag = "Z1io";
            io.meta->tree = tree;
            io.meta->base_vertex = base_vertex;
            return io;
        }
        case IoKind::B0Io: {
            if (r.meta->tag != "B0")
                throw ValidationError("B0 I/O variant derives from the B0 realization");
            NormalRealization z0 = dualize(r);
            return dualize(make_io_realization(z0, IoKind::Z0Io, tree, base_vertex));
        }
        case IoKind::W01Io: {
            if (r.meta->tag != "W01")
                throw ValidationError("W01 I/O variant derives from the W01 realization");
            // Left block: a repetition node fanning x_base out to |V|-1 adders.
            // Right block: W01 with the base vertex constraint zeroed (its
            // vertex half-edges feed the adders instead of leaving directly).
            NormalRealization io{r.alphabet, {}, {}, {}, {}};
            NormalRealization::Meta meta;
            meta.graph = r.meta->graph;
            meta.tag = "W01io";
            meta.tree = tree;
            meta.base_vertex = base_vertex;
            int nv = static_cast<int>(g.vertex_ids.size());

            int rep = static_cast<int>(io.nodes.size());
            io.nodes.push_back({NodeKind::Repetition, "x_fanout"});
            io.half_edges.push_back({rep, g.vertex_ids[base_vertex]});

            meta.vertex_node.assign(nv, -1);
            for (int v = 0; v < nv; ++v) {
                meta.vertex_node[v] = static_cast<int>(io.nodes.size());
                io.nodes.push_back(
                    {v == base_vertex ? NodeKind::Zero : NodeKind::Repetition, g.vertex_ids[v]});
            }
            for (size_t e = 0; e < g.edges.size(); ++e) {
                meta.edge_node.push_back(static_cast<int>(io.nodes.size()));
                io.nodes.push_back({NodeKind::ZeroSum, g.edges[e].id});
            }
            for (size_t e = 0; e < g.edges.size(); ++e) {
                io.edges.push_back({meta.vertex_node[g.edges[e].head], meta.edge_node[e], true});
                io.edges.push_back({meta.vertex_node[g.edges[e].tail], meta.edge_node[e], false});
            }
            for (size_t e = 0; e < g.edges.size(); ++e)
                io.half_edges.push_back({meta.edge_node[e], g.edges[e].id});
            // Adders x_out = x_base + x_v(y_T), inverter on the output port.
            for (int v = 0; v < nv; ++v) {
                if (v == base_vertex) continue;
                int adder = static_cast<int>(io.nodes.size());
                io.nodes.push_back({NodeKind::ZeroSum, "add_" + g.vertex_ids[v]});
                io.edges.push_back({rep, adder, false});
                io.edges.push_back({meta.vertex_node[v], adder, false});
                io.half_edges.push_back({adder, g.vertex_ids[v]});
                // Half-edge reads the adder's port directly; make the adder an
                // "x_out - x_base - x_v = 0" constraint by negating the two
                // inputs instead: equivalently invert both input edges.
                io.edges[io.edges.size() - 2].invert = true;
                io.edges[io.edges.size() - 1].invert = true;
            }
            io.meta = std::move(meta);
            return io;
        }
        case IoKind::W10Io: {
            if (r.meta->tag != "W10")
                throw ValidationError("W10 I/O variant derives from the W10 realization");
            NormalRealization w01 = dualize(r);
            return dualize(make_io_realization(w01, IoKind::W01Io, tree, base_vertex));
        }
    }
    throw ValidationError("unknown I/O kind");
}

namespace {

struct Solver {
    const NormalRealization& r;
    long long cap;
    const std::function<void(const std::vector<int>&, const std::vector<int>&)>& visit;
    long long q;
    int n_edges, n_half, n_vars;
    // Var order: edges then half-edges.
    std::vector<int> value;
    std::vector<bool> assigned;
    std::vector<std::vector<std::pair<int, int>>> node_vars;  // node -> (var, sign)
    std::vector<int> var_node_a, var_node_b;                  // incident nodes per var
    long long work = 0;

    Solver(const NormalRealization& r_, long long cap_,
           const std::function<void(const std::vector<int>&, const std::vector<int>&)>& visit_)
        : r(r_), cap(cap_), visit(visit_) {
        q = r.alphabet.order();
        n_edges = static_cast<int>(r.edges.size());
        n_half = static_cast<int>(r.half_edges.size());
        n_vars = n_edges + n_half;
        value.assign(n_vars, 0);
        assigned.assign(n_vars, false);
        node_vars.resize(r.nodes.size());
        var_node_a.assign(n_vars, -1);
        var_node_b.assign(n_vars, -1);
        for (int e = 0; e < n_edges; ++e) {
            node_vars[r.edges[e].a].push_back({e, +1});
            node_vars[r.edges[e].b].push_back({e, r.edges[e].invert ? -1 : +1});
            var_node_a[e] = r.edges[e].a;
            var_node_b[e] = r.edges[e].b;
        }
        for (int h = 0; h < n_half; ++h) {
            node_vars[r.half_edges[h].node].push_back({n_edges + h, +1});
            var_node_a[n_edges + h] = r.half_edges[h].node;
        }
    }

    int read(int var, int sign) const { return sign > 0 ? value[var] : r.alphabet.neg(value[var]); }
    void write(int var, int sign, int reading) {
        value[var] = sign > 0 ? reading : r.alphabet.neg(reading);
        assigned[var] = true;
    }

    // Returns false on contradiction; fills `fixed` with vars it assigned.
    bool propagate_node(int node, std::vector<int>& fixed) {
        const auto& vars = node_vars[node];
        switch (r.nodes[node].kind) {
            case NodeKind::Free:
                return true;
            case NodeKind::Zero: {
                for (auto [v, s] : vars) {
                    if (assigned[v]) {
                        if (read(v, s) != 0) return false;
                    } else {
                        write(v, s, 0);
                        fixed.push_back(v);
                    }
                }
                return true;
            }
            case NodeKind::Repetition: {
                int shared = -1;
                for (auto [v, s] : vars)
                    if (assigned[v]) { shared = read(v, s); break; }
                if (shared < 0) return true;
                for (auto [v, s] : vars) {
                    if (assigned[v]) {
                        if (read(v, s) != shared) return false;
                    } else {
                        write(v, s, shared);
                        fixed.push_back(v);
                    }
                }
                return true;
            }
            case NodeKind::ZeroSum: {
                int unassigned = -1, usign = 0, count = 0, acc = 0;
                for (auto [v, s] : vars) {
                    if (assigned[v]) {
                        acc = r.alphabet.add(acc, read(v, s));
                    } else {
                        ++count;
                        unassigned = v;
                        usign = s;
                    }
                }
                if (count == 0) return acc == 0;
                if (count == 1) {
                    write(unassigned, usign, r.alphabet.neg(acc));
                    fixed.push_back(unassigned);
                }
                return true;
            }
        }
        return true;
    }

    // Propagate from a queue of touched nodes; record assignments in `trail`.
    bool propagate(std::vector<int> queue, std::vector<int>& trail) {
        while (!queue.empty()) {
            int node = queue.back();
            queue.pop_back();
            std::vector<int> fixed;
            if (!propagate_node(node, fixed)) {
                for (int v : fixed) assigned[v] = false;
                for (int v : trail) assigned[v] = false;
                trail.clear();
                return false;
            }
            for (int v : fixed) {
                trail.push_back(v);
                if (var_node_a[v] >= 0 && var_node_a[v] != node) queue.push_back(var_node_a[v]);
                if (var_node_b[v] >= 0 && var_node_b[v] != node) queue.push_back(var_node_b[v]);
            }
        }
        return true;
    }

    void run() {
        // Initial pass: Zero nodes and any already-forced constraints.
        std::vector<int> all_nodes(r.nodes.size());
        for (size_t i = 0; i < r.nodes.size(); ++i) all_nodes[i] = static_cast<int>(i);
        std::vector<int> trail;
        if (!propagate(all_nodes, trail)) return;
        search();
        for (int v : trail) assigned[v] = false;
    }

    void search() {
        if (++work > cap) throw CapExceeded("behavior enumeration exceeds cap");
        int var = -1;
        for (int v = 0; v < n_vars; ++v)
            if (!assigned[v]) { var = v; break; }
        if (var < 0) {
            std::vector<int> edge_vals(value.begin(), value.begin() + n_edges);
            std::vector<int> half_vals(value.begin() + n_edges, value.end());
            visit(edge_vals, half_vals);
            return;
        }
        for (long long val = 0; val < q; ++val) {
            value[var] = static_cast<int>(val);
            assigned[var] = true;
            std::vector<int> trail;
            std::vector<int> queue;
            if (var_node_a[var] >= 0) queue.push_back(var_node_a[var]);
            if (var_node_b[var] >= 0) queue.push_back(var_node_b[var]);
            if (propagate(queue, trail)) {
                search();
                for (int v : trail) assigned[v] = false;
            }
            assigned[var] = false;
        }
    }
};

}  // namespace

void enumerate_behavior(const NormalRealization& r, long long cap,
                        const std::function<void(const std::vector<int>&, const std::vector<int>&)>& visit) {
    r.validate();
    Solver s(r, cap, visit);
    s.run();
}

BehaviorSummary analyze(const NormalRealization& r, long long cap) {
    long long behavior = 0, unobs = 0;
    std::set<std::vector<int>> external;
    enumerate_behavior(r, cap, [&](const std::vector<int>&, const std::vector<int>& half) {
        ++behavior;
        if (behavior > cap) throw CapExceeded("behavior size exceeds cap");
        external.insert(half);
        if (std::all_of(half.begin(), half.end(), [](int v) { return v == 0; })) ++unobs;
    });
    std::vector<std::string> labels;
    for (const auto& h : r.half_edges) labels.push_back(h.label);
    std::vector<gcode::Codeword> words(external.begin(), external.end());
    gcode::GroupCode code = gcode::GroupCode::from_words(r.alphabet, labels, std::move(words));
    return BehaviorSummary{behavior, std::move(code), unobs, r.total_state_size(),
                           r.total_constraint_size()};
}

std::pair<bool, long long> controllability_test(const NormalRealization& r, long long cap) {
    auto s = analyze(r, cap);
    long long num = s.behavior_size * s.total_state_size;
    if (num % s.total_constraint_size != 0)
        throw ValidationError("controllability degree must be an integer");
    long long degree = num / s.total_constraint_size;
    return {degree == 1, degree};
}

}  // namespace gtop::nr

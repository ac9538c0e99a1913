#include "gtop/nfg.hpp"

#include <algorithm>

#include "gtop/config.hpp"

namespace gtop::nfg {

using group::FiniteAbelianGroup;
using group::GroupFunction;

void NormalFactorGraph::validate() const {
    std::vector<int> edge_end_seen(edges.size() * 2, 0);
    std::vector<int> half_seen(half_edges.size(), 0);
    for (const auto& n : nodes) {
        long long expect = 1;
        for (const auto& p : n.ports) {
            if (p.kind == Port::Kind::Edge) {
                if (p.index < 0 || p.index >= static_cast<int>(edges.size()) || p.end < 0 || p.end > 1)
                    throw ValidationError("node port references a bad edge end");
                ++edge_end_seen[p.index * 2 + p.end];
                expect *= edges[p.index].alphabet.order();
            } else {
                if (p.index < 0 || p.index >= static_cast<int>(half_edges.size()))
                    throw ValidationError("node port references a bad half-edge");
                ++half_seen[p.index];
                expect *= half_edges[p.index].alphabet.order();
            }
        }
        if (static_cast<long long>(n.table.size()) != expect)
            throw ValidationError("node '" + n.id + "' table size does not match its ports");
    }
    for (size_t i = 0; i < edges.size(); ++i)
        if (edge_end_seen[i * 2] != 1 || edge_end_seen[i * 2 + 1] != 1)
            throw ValidationError("each edge must attach exactly one node port per end");
    for (size_t i = 0; i < half_edges.size(); ++i)
        if (half_seen[i] != 1) throw ValidationError("each half-edge must attach exactly one node port");
}

long long NormalFactorGraph::internal_size() const {
    long long s = 1;
    for (const auto& e : edges) s *= e.alphabet.order();
    return s;
}

FiniteAbelianGroup NormalFactorGraph::port_group(const Node& n) const {
    std::vector<FiniteAbelianGroup> parts;
    for (const auto& p : n.ports)
        parts.push_back(p.kind == Port::Kind::Edge ? edges[p.index].alphabet
                                                   : half_edges[p.index].alphabet);
    return group::product_group(parts);
}

namespace {

cplx node_value(const NormalFactorGraph& n, const NormalFactorGraph::Node& node,
                const std::vector<int>& edge_vals, const std::vector<int>& half_vals) {
    long long idx = 0;
    for (const auto& p : node.ports) {
        long long sz;
        int reading;
        if (p.kind == NormalFactorGraph::Port::Kind::Edge) {
            const auto& e = n.edges[p.index];
            sz = e.alphabet.order();
            reading = edge_vals[p.index];
            if (p.end == 1 && e.invert) reading = e.alphabet.neg(reading);
        } else {
            sz = n.half_edges[p.index].alphabet.order();
            reading = half_vals[p.index];
        }
        idx = idx * sz + reading;
    }
    return node.table[idx];
}

}  // namespace

namespace {
long long capped_product(long long acc, long long factor, long long cap, const char* what) {
    if (acc > cap / factor) throw CapExceeded(what);
    return acc * factor;
}
}  // namespace

cplx evaluate(const NormalFactorGraph& n, const std::vector<int>& external_assignment,
              long long cap) {
    n.validate();
    if (external_assignment.size() != n.half_edges.size())
        throw ValidationError("external assignment size mismatch");
    for (long long internal = 1; const auto& e : n.edges)
        internal = capped_product(internal, e.alphabet.order(), cap,
                                  "internal configuration space exceeds cap");
    std::vector<int> radix;
    for (const auto& e : n.edges) radix.push_back(static_cast<int>(e.alphabet.order()));
    std::vector<int> edge_vals(n.edges.size(), 0);
    cplx total(0.0, 0.0);
    do {
        cplx prod(1.0, 0.0);
        for (const auto& node : n.nodes) {
            prod *= node_value(n, node, edge_vals, external_assignment);
            if (prod == cplx(0.0, 0.0)) break;
        }
        total += prod;
    } while (group::detail::next_tuple(edge_vals, radix));
    return total;
}

std::vector<cplx> evaluate_all(const NormalFactorGraph& n, long long cap) {
    std::vector<int> radix;
    long long ext = 1;
    for (const auto& h : n.half_edges) {
        radix.push_back(static_cast<int>(h.alphabet.order()));
        ext = capped_product(ext, h.alphabet.order(), cap, "configuration space exceeds cap");
    }
    for (const auto& e : n.edges)
        ext = capped_product(ext, e.alphabet.order(), cap, "configuration space exceeds cap");
    std::vector<int> half_vals(n.half_edges.size(), 0);
    std::vector<cplx> out;
    out.reserve(ext);
    do {
        out.push_back(evaluate(n, half_vals, cap));
    } while (group::detail::next_tuple(half_vals, radix));
    return out;
}

NormalFactorGraph dual_nfg(const NormalFactorGraph& n) {
    n.validate();
    NormalFactorGraph d = n;
    for (auto& node : d.nodes) {
        if (node.ports.empty()) continue;  // constants transform to themselves
        FiniteAbelianGroup pg = d.port_group(node);
        GroupFunction f(pg, node.table);
        node.table = group::fourier_transform(f).values();
    }
    for (auto& e : d.edges) e.invert = !e.invert;
    return d;
}

NormalFactorGraph insert_edge_replacement(const NormalFactorGraph& n, int edge) {
    n.validate();
    if (edge < 0 || edge >= static_cast<int>(n.edges.size()))
        throw ValidationError("no such edge");
    NormalFactorGraph out = n;
    const FiniteAbelianGroup a = n.edges[edge].alphabet;
    long long q = a.order();

    // Fourier node table F(s, s_hat) = e^{2 pi i <s_hat, s>}, port order (s, s_hat).
    std::vector<cplx> ftab(q * q);
    for (long long s = 0; s < q; ++s)
        for (long long sh = 0; sh < q; ++sh)
            ftab[s * q + sh] = a.character(static_cast<int>(sh), static_cast<int>(s));

    // Original edge ends stay attached where they were; the segment between
    // them becomes: end0 --e-- F1 --new1(inverting)-- F2 --new2-- end1.
    bool orig_invert = n.edges[edge].invert;
    int new1 = static_cast<int>(out.edges.size());
    out.edges.push_back({a, true});
    int new2 = static_cast<int>(out.edges.size());
    // Keep the original edge's inverter on the tail segment so the composite
    // relation between the two original ports is unchanged.
    out.edges.push_back({a, orig_invert});
    out.edges[edge].invert = false;

    using Port = NormalFactorGraph::Port;
    // Reattach the old end-1 port to new2's end 1.
    for (auto& node : out.nodes)
        for (auto& p : node.ports)
            if (p.kind == Port::Kind::Edge && p.index == edge && p.end == 1) {
                p.index = new2;
                p.end = 1;
            }
    NormalFactorGraph::Node f1{"fourier_a", {{Port::Kind::Edge, edge, 1}, {Port::Kind::Edge, new1, 0}}, ftab};
    NormalFactorGraph::Node f2{"fourier_b", {{Port::Kind::Edge, new2, 0}, {Port::Kind::Edge, new1, 1}}, ftab};
    out.nodes.push_back(std::move(f1));
    out.nodes.push_back(std::move(f2));
    NormalFactorGraph::Node scale{"scale", {}, {cplx(1.0 / static_cast<double>(q), 0.0)}};
    out.nodes.push_back(std::move(scale));
    out.validate();
    return out;
}

namespace {

std::vector<cplx> indicator_table(const nr::NormalRealization& r, nr::NodeKind kind, int degree) {
    const auto& a = r.alphabet;
    long long q = a.order();
    long long size = 1;
    for (int i = 0; i < degree; ++i) size *= q;
    std::vector<cplx> t(size, cplx(0.0, 0.0));
    std::vector<int> vals(degree, 0);
    std::vector<int> radix(degree, static_cast<int>(q));
    long long idx = 0;
    do {
        bool ok = true;
        switch (kind) {
            case nr::NodeKind::Repetition:
                for (int i = 1; i < degree && ok; ++i) ok = vals[i] == vals[0];
                break;
            case nr::NodeKind::ZeroSum: {
                int acc = 0;
                for (int i = 0; i < degree; ++i) acc = a.add(acc, vals[i]);
                ok = acc == 0;
                break;
            }
            case nr::NodeKind::Zero:
                for (int i = 0; i < degree && ok; ++i) ok = vals[i] == 0;
                break;
            case nr::NodeKind::Free:
                ok = true;
                break;
        }
        if (ok) t[idx] = cplx(1.0, 0.0);
        ++idx;
    } while (group::detail::next_tuple(vals, radix));
    return t;
}

}  // namespace

NormalFactorGraph to_nfg(const nr::NormalRealization& r) {
    r.validate();
    NormalFactorGraph n;
    for (const auto& e : r.edges) n.edges.push_back({r.alphabet, e.invert});
    for (const auto& h : r.half_edges) n.half_edges.push_back({r.alphabet, h.label});
    using Port = NormalFactorGraph::Port;
    std::vector<std::vector<Port>> ports(r.nodes.size());
    for (size_t e = 0; e < r.edges.size(); ++e) {
        ports[r.edges[e].a].push_back({Port::Kind::Edge, static_cast<int>(e), 0});
        ports[r.edges[e].b].push_back({Port::Kind::Edge, static_cast<int>(e), 1});
    }
    for (size_t h = 0; h < r.half_edges.size(); ++h)
        ports[r.half_edges[h].node].push_back({Port::Kind::Half, static_cast<int>(h), 0});
    for (size_t v = 0; v < r.nodes.size(); ++v) {
        NormalFactorGraph::Node node;
        node.id = r.nodes[v].id;
        node.ports = ports[v];
        node.table = indicator_table(r, r.nodes[v].kind, static_cast<int>(ports[v].size()));
        n.nodes.push_back(std::move(node));
    }
    n.validate();
    return n;
}

NormalFactorGraph to_closed_nfg(const EdgeWeightedNfg& e) {
    NormalFactorGraph n = to_nfg(e.base);
    // Each half-edge becomes an internal edge into a weight node.
    using Port = NormalFactorGraph::Port;
    for (size_t h = 0; h < e.base.half_edges.size(); ++h) {
        auto it = e.weights.find(e.base.half_edges[h].label);
        if (it == e.weights.end())
            throw ValidationError("missing weight for half-edge '" + e.base.half_edges[h].label + "'");
        if (it->second.domain() != e.base.alphabet)
            throw ValidationError("weight domain mismatch on '" + e.base.half_edges[h].label + "'");
        int ne = static_cast<int>(n.edges.size());
        n.edges.push_back({e.base.alphabet, false});
        for (auto& node : n.nodes)
            for (auto& p : node.ports)
                if (p.kind == Port::Kind::Half && p.index == static_cast<int>(h)) {
                    p.kind = Port::Kind::Edge;
                    p.index = ne;
                    p.end = 0;
                }
        NormalFactorGraph::Node w;
        w.id = "weight_" + e.base.half_edges[h].label;
        w.ports = {{Port::Kind::Edge, ne, 1}};
        w.table = it->second.values();
        n.nodes.push_back(std::move(w));
    }
    n.half_edges.clear();
    n.validate();
    return n;
}

cplx evaluate_ewnfg(const EdgeWeightedNfg& e, long long cap, EvalStrategy strategy,
                    const IoSpec* io) {
    for (const auto& h : e.base.half_edges)
        if (!e.weights.count(h.label))
            throw ValidationError("missing weight for half-edge '" + h.label + "'");
    if (strategy == EvalStrategy::Full) {
        cplx total(0.0, 0.0);
        nr::enumerate_behavior(e.base, cap, [&](const std::vector<int>&, const std::vector<int>& half) {
            cplx prod(1.0, 0.0);
            for (size_t h = 0; h < half.size(); ++h)
                prod *= e.weights.at(e.base.half_edges[h].label)(half[h]);
            total += prod;
        });
        return total;
    }
    if (!io) throw ValidationError("information-set evaluation needs an IoSpec");
    const auto& a = e.base.alphabet;
    long long q = a.order();
    long long terms = 1;
    for (size_t i = 0; i < io->info_half_edges.size(); ++i) {
        terms *= q;
        if (terms > cap) throw CapExceeded("information-set enumeration exceeds cap");
    }
    std::vector<int> info(io->info_half_edges.size(), 0);
    std::vector<int> radix(info.size(), static_cast<int>(q));
    cplx total(0.0, 0.0);
    do {
        std::vector<int> full = io->extend(info);
        cplx prod(1.0, 0.0);
        for (size_t h = 0; h < full.size(); ++h)
            prod *= e.weights.at(e.base.half_edges[h].label)(full[h]);
        total += prod;
    } while (group::detail::next_tuple(info, radix));
    return total;
}

std::pair<EdgeWeightedNfg, Rational> dual_ewnfg(const EdgeWeightedNfg& e) {
    EdgeWeightedNfg d;
    d.base = nr::dualize(e.base);
    for (const auto& [label, f] : e.weights) d.weights.emplace(label, group::fourier_transform(f));
    long long a_h = 1;
    for (size_t i = 0; i < e.base.half_edges.size(); ++i) a_h *= e.base.alphabet.order();
    Rational scale(a_h * e.base.total_state_size(), e.base.total_constraint_size());
    return {std::move(d), scale};
}

}  // namespace gtop::nfg

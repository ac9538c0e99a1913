#include "gtop/ising.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "gtop/config.hpp"

namespace gtop::ising {

using group::FiniteAbelianGroup;
using group::GroupFunction;
using topo::OrientedGraph;
using topo::SpanningTree;

void IsingTypeModel::validate() const {
    if (!graph) throw ValidationError("model has no graph");
    graph->validate();
    for (const auto& e : graph->edges) {
        auto it = edge_weights.find(e.id);
        if (it == edge_weights.end())
            throw ValidationError("missing edge weight for '" + e.id + "'");
        if (it->second.domain() != alphabet)
            throw ValidationError("edge weight domain mismatch on '" + e.id + "'");
    }
    for (const auto& [vid, f] : vertex_weights) {
        graph->vertex_index(vid);
        if (f.domain() != alphabet)
            throw ValidationError("vertex weight domain mismatch on '" + vid + "'");
    }
}

std::map<std::string, GroupFunction> ising_weights(const OrientedGraph& g, double beta,
                                                   const std::map<std::string, double>& j) {
    if (beta < 0) throw ValidationError("inverse temperature must be >= 0");
    FiniteAbelianGroup z2({2});
    std::map<std::string, GroupFunction> out;
    for (const auto& e : g.edges) {
        auto it = j.find(e.id);
        double je = it == j.end() ? 1.0 : it->second;
        out.emplace(e.id, GroupFunction(z2, {cplx(std::exp(beta * je), 0.0),
                                             cplx(std::exp(-beta * je), 0.0)}));
    }
    return out;
}

std::map<std::string, GroupFunction> potts_weights(const OrientedGraph& g, double beta,
                                                   const std::map<std::string, double>& j, int q) {
    if (q < 2) throw ValidationError("Potts model needs q >= 2");
    FiniteAbelianGroup zq({q});
    std::map<std::string, GroupFunction> out;
    for (const auto& e : g.edges) {
        auto it = j.find(e.id);
        double je = it == j.end() ? 1.0 : it->second;
        std::vector<cplx> vals(q, cplx(1.0, 0.0));
        vals[0] = cplx(std::exp(beta * je), 0.0);
        out.emplace(e.id, GroupFunction(zq, std::move(vals)));
    }
    return out;
}

namespace {

long long checked_power(long long base, int exp, long long cap) {
    long long p = 1;
    for (int i = 0; i < exp; ++i) {
        p *= base;
        if (p > cap) throw CapExceeded("configuration space exceeds cap");
    }
    return p;
}

Rational power_scale(long long q, int exp) {
    Rational r(1);
    for (int i = 0; i < exp; ++i) r = r * Rational(q, 1);
    return r;
}

std::map<std::string, GroupFunction> transformed_weights(
    const std::map<std::string, GroupFunction>& w) {
    std::map<std::string, GroupFunction> out;
    for (const auto& [k, f] : w) out.emplace(k, group::fourier_transform(f));
    return out;
}

double now_ms() {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

/// Tree rooted at `root` as parent pointers, from an arbitrary SpanningTree.
struct RootedTree {
    int root;
    std::vector<int> parent_vertex;
    std::vector<int> parent_edge;
    std::vector<int> order;  // root first
};

RootedTree reroot(const OrientedGraph& g, const SpanningTree& t, int root) {
    RootedTree rt;
    rt.root = root;
    int n = static_cast<int>(g.vertex_ids.size());
    rt.parent_vertex.assign(n, -1);
    rt.parent_edge.assign(n, -1);
    std::vector<std::vector<int>> incident(n);
    for (int e : t.tree_edges) {
        incident[g.edges[e].tail].push_back(e);
        incident[g.edges[e].head].push_back(e);
    }
    std::vector<bool> seen(n, false);
    std::vector<int> stack{root};
    seen[root] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        rt.order.push_back(v);
        for (int e : incident[v]) {
            int w = g.edges[e].tail == v ? g.edges[e].head : g.edges[e].tail;
            if (!seen[w]) {
                seen[w] = true;
                rt.parent_vertex[w] = v;
                rt.parent_edge[w] = e;
                stack.push_back(w);
            }
        }
    }
    return rt;
}

}  // namespace

std::vector<int> extend_tree_assignment(const OrientedGraph& g, const FiniteAbelianGroup& a,
                                        const SpanningTree& t, const std::vector<int>& y_tree) {
    std::vector<int> x(g.vertex_ids.size(), 0);
    std::vector<int> y(g.edges.size(), 0);
    for (size_t i = 0; i < t.tree_edges.size(); ++i) y[t.tree_edges[i]] = y_tree[i];
    // Propagate vertex values from the root: y_e = x_head - x_tail.
    for (size_t k = 1; k < t.order.size(); ++k) {
        int v = t.order[k];
        int pe = t.parent_edge[v];
        int pv = t.parent_vertex[v];
        x[v] = g.edges[pe].head == v ? a.add(x[pv], y[pe]) : a.sub(x[pv], y[pe]);
    }
    for (int ce : t.cotree_edges) y[ce] = a.sub(x[g.edges[ce].head], x[g.edges[ce].tail]);
    return y;
}

cplx partition_exact(const IsingTypeModel& m, long long cap) {
    m.validate();
    const auto& g = *m.graph;
    const auto& a = m.alphabet;
    checked_power(a.order(), static_cast<int>(g.vertex_ids.size()), cap);
    std::vector<int> x(g.vertex_ids.size(), 0);
    std::vector<int> radix(g.vertex_ids.size(), static_cast<int>(a.order()));
    std::vector<const GroupFunction*> fe;
    for (const auto& e : g.edges) fe.push_back(&m.edge_weights.at(e.id));
    std::vector<const GroupFunction*> gv(g.vertex_ids.size(), nullptr);
    for (const auto& [vid, f] : m.vertex_weights) gv[g.vertex_index(vid)] = &f;
    cplx total(0.0, 0.0);
    do {
        cplx prod(1.0, 0.0);
        for (size_t e = 0; e < g.edges.size(); ++e)
            prod *= (*fe[e])(a.sub(x[g.edges[e].head], x[g.edges[e].tail]));
        for (size_t v = 0; v < g.vertex_ids.size(); ++v)
            if (gv[v]) prod *= (*gv[v])(x[v]);
        total += prod;
    } while (group::detail::next_tuple(x, radix));
    return total;
}

PartitionValue partition_primal(const IsingTypeModel& m, const SpanningTree& t, long long cap) {
    m.validate();
    if (m.has_field()) throw ValidationError("primal coboundary sum does not take a field");
    if (!topo::is_connected(*m.graph)) throw ValidationError("graph must be connected");
    double t0 = now_ms();
    const auto& g = *m.graph;
    const auto& a = m.alphabet;
    int k = static_cast<int>(t.tree_edges.size());
    checked_power(a.order(), k, cap);
    std::vector<const GroupFunction*> fe;
    for (const auto& e : g.edges) fe.push_back(&m.edge_weights.at(e.id));
    std::vector<int> info(k, 0);
    std::vector<int> radix(k, static_cast<int>(a.order()));
    cplx sum(0.0, 0.0);
    do {
        std::vector<int> y = extend_tree_assignment(g, a, t, info);
        cplx prod(1.0, 0.0);
        for (size_t e = 0; e < y.size(); ++e) prod *= (*fe[e])(y[e]);
        sum += prod;
    } while (group::detail::next_tuple(info, radix));
    // The redundancy of the full coboundary realization restores the
    // reference scale: value = |A| * sum over the coboundary space.
    PartitionValue pv;
    pv.value = sum * static_cast<double>(a.order());
    pv.method = "primal";
    pv.declared_scale = Rational(1);
    pv.info_set_size = k;
    pv.wall_ms = now_ms() - t0;
    return pv;
}

PartitionValue partition_dual(const IsingTypeModel& m, const SpanningTree& t, long long cap) {
    m.validate();
    if (m.has_field()) throw ValidationError("dual cycle sum does not take a field");
    if (!topo::is_connected(*m.graph)) throw ValidationError("graph must be connected");
    double t0 = now_ms();
    const auto& g = *m.graph;
    const auto& a = m.alphabet;
    auto fhat = transformed_weights(m.edge_weights);
    auto cycles = topo::fundamental_cycles(g, t);
    int k = static_cast<int>(t.cotree_edges.size());
    checked_power(a.order(), k, cap);
    std::vector<const GroupFunction*> fe;
    for (const auto& e : g.edges) fe.push_back(&fhat.at(e.id));

    std::vector<std::vector<int>> cycle_vec;  // per cotree edge: signed incidence
    for (int ce : t.cotree_edges) cycle_vec.push_back(topo::edge_vector(g, cycles.at(ce)));

    std::vector<int> info(k, 0);
    std::vector<int> radix(k, static_cast<int>(a.order()));
    cplx sum(0.0, 0.0);
    do {
        std::vector<int> y(g.edges.size(), 0);
        for (int i = 0; i < k; ++i) {
            if (info[i] == 0) continue;
            for (size_t e = 0; e < g.edges.size(); ++e) {
                if (cycle_vec[i][e] == 1) y[e] = a.add(y[e], info[i]);
                else if (cycle_vec[i][e] == -1) y[e] = a.add(y[e], a.neg(info[i]));
            }
        }
        cplx prod(1.0, 0.0);
        for (size_t e = 0; e < y.size(); ++e) prod *= (*fe[e])(y[e]);
        sum += prod;
    } while (group::detail::next_tuple(info, radix));

    // Structural scale from the coboundary-space base, |A_H| |A_E| / |C_V|,
    // carried as an exponent of |A| so large realizations cannot overflow.
    auto base = nr::derive_space_realization(nr::build_w01(m.graph, a), nr::SpaceKind::B1);
    long long exp = static_cast<long long>(base.half_edges.size()) +
                    static_cast<long long>(base.edges.size());
    for (size_t v = 0; v < base.nodes.size(); ++v) {
        int d = base.degree(static_cast<int>(v));
        switch (base.nodes[v].kind) {
            case nr::NodeKind::Repetition: exp -= 1; break;
            case nr::NodeKind::ZeroSum: exp -= d - 1; break;
            case nr::NodeKind::Zero: break;
            case nr::NodeKind::Free: exp -= d; break;
        }
    }
    Rational scale = exp >= 0 ? power_scale(a.order(), static_cast<int>(exp))
                              : Rational(1) / power_scale(a.order(), static_cast<int>(-exp));
    PartitionValue pv;
    pv.value = sum;
    pv.method = "dual";
    pv.declared_scale = scale;
    pv.info_set_size = k;
    pv.wall_ms = now_ms() - t0;
    return pv;
}

namespace {

/// Solve the tree-edge dual values from x_hat on the non-base vertices and
/// the cotree dual values: at each vertex u != base, sum_e y_e M_{e,u} = -x_hat_u.
std::vector<int> solve_w10_tree(const OrientedGraph& g, const FiniteAbelianGroup& a,
                                const std::vector<int>& x_hat_by_vertex,
                                const std::vector<int>& y, const RootedTree& rt) {
    std::vector<int> yy = y;  // cotree coordinates pre-filled
    for (size_t k = rt.order.size(); k-- > 1;) {
        int u = rt.order[k];
        int pe = rt.parent_edge[u];
        // Accumulate the known incident contributions at u.
        int acc = 0;
        for (size_t e = 0; e < g.edges.size(); ++e) {
            if (static_cast<int>(e) == pe) continue;
            if (g.edges[e].head == u) acc = a.add(acc, yy[e]);
            else if (g.edges[e].tail == u) acc = a.add(acc, a.neg(yy[e]));
        }
        int rhs = a.sub(a.neg(x_hat_by_vertex[u]), acc);
        yy[pe] = g.edges[pe].head == u ? rhs : a.neg(rhs);
    }
    return yy;
}

}  // namespace

PartitionValue partition_with_field(const IsingTypeModel& m, FieldMethod method,
                                    const SpanningTree& t, int base_vertex, long long cap) {
    m.validate();
    if (!m.has_field()) throw ValidationError("field methods need vertex weights");
    if (!topo::is_connected(*m.graph)) throw ValidationError("graph must be connected");
    const auto& g = *m.graph;
    const auto& a = m.alphabet;
    int nv = static_cast<int>(g.vertex_ids.size());
    int ne = static_cast<int>(g.edges.size());
    if (base_vertex < 0 || base_vertex >= nv) throw ValidationError("base vertex out of range");
    for (const auto& vid : g.vertex_ids)
        if (!m.vertex_weights.count(vid))
            throw ValidationError("missing vertex weight for '" + vid + "'");
    double t0 = now_ms();

    std::vector<const GroupFunction*> fe, gv;
    for (const auto& e : g.edges) fe.push_back(&m.edge_weights.at(e.id));
    for (const auto& vid : g.vertex_ids) gv.push_back(&m.vertex_weights.at(vid));

    PartitionValue pv;
    switch (method) {
        case FieldMethod::PrimalW01: {
            // Coboundary I/O sum: the vertex vector is the information set.
            pv.value = partition_exact(m, cap);
            pv.method = "field-primal";
            pv.declared_scale = Rational(1);
            pv.info_set_size = nv;
            break;
        }
        case FieldMethod::DualW10: {
            // High-temperature expansion over the dual I/O behavior:
            // sum over y_hat of prod f_hat(y_hat_e) prod g_hat(-(y_hat M)_v).
            auto fhat = transformed_weights(m.edge_weights);
            auto ghat = transformed_weights(m.vertex_weights);
            std::vector<const GroupFunction*> fh, gh;
            for (const auto& e : g.edges) fh.push_back(&fhat.at(e.id));
            for (const auto& vid : g.vertex_ids) gh.push_back(&ghat.at(vid));
            checked_power(a.order(), ne, cap);
            std::vector<int> y(ne, 0);
            std::vector<int> radix(ne, static_cast<int>(a.order()));
            cplx sum(0.0, 0.0);
            do {
                cplx prod(1.0, 0.0);
                for (int e = 0; e < ne; ++e) prod *= (*fh[e])(y[e]);
                for (int v = 0; v < nv; ++v) {
                    int acc = 0;
                    for (int e = 0; e < ne; ++e) {
                        if (g.edges[e].head == v) acc = a.add(acc, y[e]);
                        else if (g.edges[e].tail == v) acc = a.add(acc, a.neg(y[e]));
                    }
                    prod *= (*gh[v])(a.neg(acc));
                }
                sum += prod;
            } while (group::detail::next_tuple(y, radix));
            pv.value = sum;
            pv.method = "field-dual";
            pv.declared_scale = power_scale(a.order(), ne);
            pv.info_set_size = ne;
            break;
        }
        case FieldMethod::Hybrid: {
            // Vertex side primal, edge side dual, linked through |V|-1
            // Fourier-transform nodes on the non-base vertex replicas.
            auto fhat = transformed_weights(m.edge_weights);
            std::vector<const GroupFunction*> fh;
            for (const auto& e : g.edges) fh.push_back(&fhat.at(e.id));
            RootedTree rt = reroot(g, t, base_vertex);
            int beta1 = static_cast<int>(t.cotree_edges.size());
            checked_power(a.order(), nv - 1 + beta1 + 2, cap);

            // Dual-side information set: x_hat on non-base vertices plus the
            // cotree dual edge values; the tree dual values are solved.
            std::vector<int> digits(nv - 1 + beta1, 0);
            std::vector<int> radix(digits.size(), static_cast<int>(a.order()));
            std::vector<int> non_base;
            for (int v = 0; v < nv; ++v)
                if (v != base_vertex) non_base.push_back(v);
            cplx sum(0.0, 0.0);
            do {
                std::vector<int> x_hat(nv, 0);
                for (size_t i = 0; i < non_base.size(); ++i) x_hat[non_base[i]] = digits[i];
                std::vector<int> y(ne, 0);
                for (int i = 0; i < beta1; ++i)
                    y[t.cotree_edges[i]] = digits[non_base.size() + i];
                y = solve_w10_tree(g, a, x_hat, y, rt);

                cplx prod(1.0, 0.0);
                for (int e = 0; e < ne; ++e) prod *= (*fh[e])(y[e]);
                // Left side: sum over the base value and the link replicas;
                // each Fourier link couples x_hat_u to the replica offset.
                cplx left(0.0, 0.0);
                for (long long xb = 0; xb < a.order(); ++xb) {
                    cplx term = (*gv[base_vertex])(static_cast<int>(xb));
                    for (int u : non_base) {
                        cplx inner(0.0, 0.0);
                        for (long long d = 0; d < a.order(); ++d) {
                            int w = a.add(static_cast<int>(xb), static_cast<int>(d));
                            inner += (*gv[u])(w) * a.character(x_hat[u], static_cast<int>(d));
                        }
                        term *= inner;
                    }
                    left += term;
                }
                sum += prod * left;
            } while (group::detail::next_tuple(digits, radix));
            pv.value = sum;
            pv.method = "hybrid";
            pv.declared_scale = power_scale(a.order(), ne);
            pv.info_set_size = 1 + beta1;
            break;
        }
    }
    pv.wall_ms = now_ms() - t0;
    return pv;
}

namespace {

cplx sum_over_coboundary(const OrientedGraph& g, const FiniteAbelianGroup& a,
                         const std::map<std::string, GroupFunction>& weights, long long cap) {
    SpanningTree t = topo::spanning_tree(g);
    std::vector<const GroupFunction*> fe;
    for (const auto& e : g.edges) fe.push_back(&weights.at(e.id));
    int k = static_cast<int>(t.tree_edges.size());
    checked_power(a.order(), k, cap);
    std::vector<int> info(k, 0);
    std::vector<int> radix(k, static_cast<int>(a.order()));
    cplx sum(0.0, 0.0);
    do {
        std::vector<int> y = extend_tree_assignment(g, a, t, info);
        cplx prod(1.0, 0.0);
        for (size_t e = 0; e < y.size(); ++e) prod *= (*fe[e])(y[e]);
        sum += prod;
    } while (group::detail::next_tuple(info, radix));
    return sum;
}

cplx sum_over_cycles(const OrientedGraph& g, const FiniteAbelianGroup& a,
                     const std::map<std::string, GroupFunction>& weights, long long cap) {
    SpanningTree t = topo::spanning_tree(g);
    auto cycles = topo::fundamental_cycles(g, t);
    std::vector<std::vector<int>> cycle_vec;
    for (int ce : t.cotree_edges) cycle_vec.push_back(topo::edge_vector(g, cycles.at(ce)));
    std::vector<const GroupFunction*> fe;
    for (const auto& e : g.edges) fe.push_back(&weights.at(e.id));
    int k = static_cast<int>(t.cotree_edges.size());
    checked_power(a.order(), k, cap);
    std::vector<int> info(k, 0);
    std::vector<int> radix(k, static_cast<int>(a.order()));
    cplx sum(0.0, 0.0);
    do {
        std::vector<int> y(g.edges.size(), 0);
        for (int i = 0; i < k; ++i) {
            if (info[i] == 0) continue;
            for (size_t e = 0; e < g.edges.size(); ++e) {
                if (cycle_vec[i][e] == 1) y[e] = a.add(y[e], info[i]);
                else if (cycle_vec[i][e] == -1) y[e] = a.add(y[e], a.neg(info[i]));
            }
        }
        cplx prod(1.0, 0.0);
        for (size_t e = 0; e < y.size(); ++e) prod *= (*fe[e])(y[e]);
        sum += prod;
    } while (group::detail::next_tuple(info, radix));
    return sum;
}

}  // namespace

PlanarReport planar_representations(const IsingTypeModel& m, const topo::PlanarComplex& k,
                                    long long cap) {
    m.validate();
    if (m.has_field()) throw ValidationError("planar representations do not take a field");
    if (k.embedding != topo::PlanarComplex::Embedding::Sphere)
        throw ValidationError("planar representations need a sphere complex");
    const auto& a = m.alphabet;
    topo::PlanarComplex dual = topo::dual_graph(k);
    auto dual_graph_ptr = std::make_shared<const OrientedGraph>(dual.graph);

    IsingTypeModel md;
    md.graph = dual_graph_ptr;
    md.alphabet = a;
    md.edge_weights = m.edge_weights;  // same edge ids on the dual graph
    md.beta = m.beta;

    auto fhat = transformed_weights(m.edge_weights);
    int ne = static_cast<int>(m.graph->edges.size());
    int nv = static_cast<int>(m.graph->vertex_ids.size());
    int nf = static_cast<int>(k.faces.size());
    int beta1 = ne - nv + 1;

    PlanarReport rep;
    rep.exact_primal = partition_exact(m, cap);
    rep.exact_dual = partition_exact(md, cap);

    Rational inv_a = Rational(1, a.order());
    Rational hi_primal = ne >= nv ? power_scale(a.order(), ne - nv)
                                  : Rational(1) / power_scale(a.order(), nv - ne);
    Rational hi_dual = ne >= nf ? power_scale(a.order(), ne - nf)
                                : Rational(1) / power_scale(a.order(), nf - ne);

    auto make = [&](const std::string& space, const std::string& graph, const std::string& w,
                    int dim, cplx value, Rational scale) {
        PlanarRepresentation r;
        r.space = space;
        r.graph = graph;
        r.weights = w;
        r.dimension = dim;
        r.pv.value = value;
        r.pv.method = "planar:" + space + ":" + graph + ":" + w;
        r.pv.declared_scale = scale;
        r.pv.info_set_size = dim;
        return r;
    };

    rep.primal_z.push_back(make("B1", "primal", "f", ne - beta1,
                                sum_over_coboundary(*m.graph, a, m.edge_weights, cap), inv_a));
    rep.primal_z.push_back(make("Z1", "dual", "f", ne - beta1,
                                sum_over_cycles(dual.graph, a, m.edge_weights, cap), inv_a));
    rep.primal_z.push_back(
        make("Z1", "primal", "f_hat", beta1, sum_over_cycles(*m.graph, a, fhat, cap), hi_primal));
    rep.primal_z.push_back(make("B1", "dual", "f_hat", beta1,
                                sum_over_coboundary(dual.graph, a, fhat, cap), hi_primal));

    rep.dual_z.push_back(make("B1", "dual", "f", beta1,
                              sum_over_coboundary(dual.graph, a, m.edge_weights, cap), inv_a));
    rep.dual_z.push_back(
        make("Z1", "primal", "f", beta1, sum_over_cycles(*m.graph, a, m.edge_weights, cap), inv_a));
    rep.dual_z.push_back(
        make("Z1", "dual", "f_hat", ne - beta1, sum_over_cycles(dual.graph, a, fhat, cap), hi_dual));
    rep.dual_z.push_back(make("B1", "primal", "f_hat", ne - beta1,
                              sum_over_coboundary(*m.graph, a, fhat, cap), hi_dual));
    return rep;
}

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

McEstimate importance_sampling(const IsingTypeModel& m, const SpanningTree& t,
                               long long num_samples, unsigned long long seed) {

    m.validate();
    if (m.has_field()) throw ValidationError("importance sampling does not take a field");
    if (num_samples < 1) throw ValidationError("need at least one sample");
    const auto& g = *m.graph;
    const auto& a = m.alphabet;
    long long q = a.order();

    // The proposal needs real, nonnegative weights with positive mass on
    // every tree-edge value.
    std::vector<std::vector<double>> fe(g.edges.size());
    for (size_t e = 0; e < g.edges.size(); ++e) {
        const auto& f = m.edge_weights.at(g.edges[e].id);
        for (long long v = 0; v < q; ++v) {
            cplx c = f(static_cast<int>(v));
            if (c.imag() != 0.0 || c.real() < 0.0)
                throw ValidationError("importance sampling needs real nonnegative weights");
            fe[e].push_back(c.real());
        }
    }
    double z_tree = 1.0;
    std::vector<std::vector<double>> cdf(t.tree_edges.size());
    for (size_t i = 0; i < t.tree_edges.size(); ++i) {
        double ze = 0.0;
        for (double v : fe[t.tree_edges[i]]) {
            if (v <= 0.0)
                throw ValidationError("zero-mass proposal: tree edge weight has a zero value");
            ze += v;
        }
        double acc = 0.0;
        for (double v : fe[t.tree_edges[i]]) {
            acc += v / ze;
            cdf[i].push_back(acc);
        }
        cdf[i].back() = 1.0;
        z_tree *= ze;
    }

    // Welford accumulation over deterministic per-block generators.
    const long long block_size = 1 << 16;
    double mean = 0.0, m2 = 0.0;
    long long count = 0;
    std::vector<int> y_tree(t.tree_edges.size(), 0);
    for (long long block = 0; block * block_size < num_samples; ++block) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(static_cast<uint64_t>(block) + 1)));
        long long in_block = std::min(block_size, num_samples - block * block_size);
        for (long long s = 0; s < in_block; ++s) {
            for (size_t i = 0; i < y_tree.size(); ++i) {
                double u = unit_double(rng);
                int v = 0;
                while (u >= cdf[i][v]) ++v;
                y_tree[i] = v;
            }
            std::vector<int> y = extend_tree_assignment(g, a, t, y_tree);
            double w = z_tree;
            for (int ce : t.cotree_edges) w *= fe[ce][y[ce]];
            ++count;
            double delta = w - mean;
            mean += delta / static_cast<double>(count);
            m2 += delta * (w - mean);
        }
    }
    double variance = num_samples > 1 ? m2 / static_cast<double>(num_samples - 1) : 0.0;
    McEstimate est;
    est.estimate = mean;
    est.std_error = std::sqrt(variance / static_cast<double>(num_samples));
    est.num_samples = num_samples;
    est.seed = seed;
    est.tree_used = t;
    est.declared_scale = Rational(1, q);
    return est;
}

}  // namespace gtop::ising

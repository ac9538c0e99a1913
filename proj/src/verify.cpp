#include "gtop/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "gtop/gcode.hpp"
#include "gtop/graphs.hpp"
#include "gtop/ising.hpp"
#include "gtop/nfg.hpp"
#include "gtop/nr.hpp"
#include "gtop/spaces.hpp"
#include "gtop/topo.hpp"

namespace gtop::verify {

using gcode::GroupCode;
using group::cplx;
using group::FiniteAbelianGroup;
using group::GroupFunction;

namespace {

std::vector<std::shared_ptr<const topo::OrientedGraph>> suite_graphs(unsigned long long seed) {
    std::vector<std::shared_ptr<const topo::OrientedGraph>> gs;
    gs.push_back(graphs::house_graph());
    for (int i = 0; i < 5; ++i) gs.push_back(graphs::random_connected_graph(seed + i, 6, 9));
    return gs;
}

PropertyResult space_duality(const RunConfig& cfg) {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& g : suite_graphs(cfg.seed)) {
        for (const char* spec : {"Z2", "Z3"}) {
            auto a = FiniteAbelianGroup::parse(spec);
            auto z0 = spaces::zero_coboundary(*g, a, cfg.enumeration_cap);
            auto b1 = spaces::coboundary(*g, a, cfg.enumeration_cap);
            auto z1 = spaces::zero_boundary(*g, a, cfg.enumeration_cap);
            auto b0 = spaces::boundary(*g, a, cfg.enumeration_cap);
            auto [beta0, beta1] = topo::betti(*g);
            (void)beta0;
            long long q = a.order();
            long long expect_b1 = 1, expect_z1 = 1;
            for (size_t i = 0; i + 1 < g->vertex_ids.size(); ++i) expect_b1 *= q;
            for (int i = 0; i < beta1; ++i) expect_z1 *= q;
            // repetition()/zero_sum() use index labels; rebind to vertex ids.
            GroupCode rep(a, z0.labels(),
                          GroupCode::repetition(a, static_cast<int>(g->vertex_ids.size())).generators());
            GroupCode zsum(a, b0.labels(),
                           GroupCode::zero_sum(a, static_cast<int>(g->vertex_ids.size())).generators());
            bool ok = z0.same_code(rep, cfg.enumeration_cap) &&
                      b0.same_code(zsum, cfg.enumeration_cap) &&
                      b1.size(cfg.enumeration_cap) == expect_b1 &&
                      z1.size(cfg.enumeration_cap) == expect_z1 &&
                      z1.same_code(b1.dual(cfg.enumeration_cap), cfg.enumeration_cap) &&
                      b0.same_code(z0.dual(cfg.enumeration_cap), cfg.enumeration_cap);
            if (!ok) {
                pass = false;
                detail << "failed on |V|=" << g->vertex_ids.size() << " |E|=" << g->edges.size()
                       << " over " << spec << "; ";
            }
        }
    }
    return {"kernel-image-duality", pass, pass ? "repetition/zero-sum/cut/cycle identities hold" : detail.str()};
}

PropertyResult nr_duality(const RunConfig& cfg) {
    bool pass = true;
    std::ostringstream detail;
    for (const auto& g : suite_graphs(cfg.seed)) {
        for (const char* spec : {"Z2", "Z3"}) {
            auto a = FiniteAbelianGroup::parse(spec);
            auto w01 = nr::build_w01(g, a);
            auto z0 = nr::derive_space_realization(w01, nr::SpaceKind::Z0);
            auto b1 = nr::derive_space_realization(w01, nr::SpaceKind::B1);
            auto tree = topo::spanning_tree(*g);
            std::vector<nr::NormalRealization> rs = {
                z0, b1, nr::dualize(z0), nr::dualize(b1),
                nr::make_io_realization(z0, nr::IoKind::Z0Io, tree),
                nr::make_io_realization(b1, nr::IoKind::B1Io, tree),
                nr::make_io_realization(nr::dualize(b1), nr::IoKind::Z1Io, tree),
                nr::make_io_realization(nr::dualize(z0), nr::IoKind::B0Io, tree)};
            for (const auto& r : rs) {
                auto s = nr::analyze(r, cfg.enumeration_cap);
                auto sd = nr::analyze(nr::dualize(r), cfg.enumeration_cap);
                bool ok = sd.external_behavior.same_code(
                    s.external_behavior.dual(cfg.enumeration_cap), cfg.enumeration_cap);
                // Fiber property and the duality of defects.
                ok = ok && s.behavior_size ==
                               s.unobservable_size * s.external_behavior.size(cfg.enumeration_cap);
                long long degree = s.behavior_size * s.total_state_size / s.total_constraint_size;
                ok = ok && degree == sd.unobservable_size;
                if (!ok) {
                    pass = false;
                    detail << "failed for tag " << (r.meta ? r.meta->tag : "?") << " over " << spec
                           << "; ";
                }
            }
        }
    }
    return {"nr-duality", pass,
            pass ? "dual realizations realize the dual code; defect degrees match" : detail.str()};
}

PropertyResult information_set_complement(const RunConfig& cfg) {
    bool pass = true;
    std::ostringstream detail;
    auto z2 = FiniteAbelianGroup::parse("Z2");
    auto z3 = FiniteAbelianGroup::parse("Z3");
    std::vector<GroupCode> codes = {GroupCode::zero_sum(z2, 3), GroupCode::repetition(z3, 3),
                                    spaces::coboundary(*graphs::house_graph(), z2,
                                                       cfg.enumeration_cap)};
    for (const auto& c : codes) {
        auto dual = c.dual(cfg.enumeration_cap);
        int n = c.length();
        for (int mask = 0; mask < (1 << n); ++mask) {
            std::vector<std::string> j, jbar;
            for (int i = 0; i < n; ++i)
                (mask >> i & 1 ? j : jbar).push_back(c.labels()[i]);
            bool info = c.is_information_set(j, cfg.enumeration_cap);
            bool dual_info = dual.is_information_set(jbar, cfg.enumeration_cap);
            if (info != dual_info) {
                pass = false;
                detail << "mask " << mask << " on n=" << n << "; ";
            }
        }
    }
    return {"information-set-complement", pass,
            pass ? "information sets of the dual are the check sets" : detail.str()};
}

PropertyResult adjoint_kernel_image(const RunConfig& cfg) {
    bool pass = true;
    std::ostringstream detail;
    std::mt19937_64 rng(cfg.seed ^ 0xad70123ULL);
    for (int trial = 0; trial < 6; ++trial) {
        auto a = FiniteAbelianGroup::parse(trial % 2 ? "Z4" : "Z3");
        int ni = 2 + static_cast<int>(rng() % 2);
        int nj = 1 + static_cast<int>(rng() % 2);
        std::vector<std::vector<int>> phi(nj, std::vector<int>(ni));
        for (auto& row : phi)
            for (auto& v : row) v = static_cast<int>(rng() % 5) - 2;

        auto apply = [&](const std::vector<int>& x, bool transpose) {
            int rows = transpose ? ni : nj;
            int cols = transpose ? nj : ni;
            std::vector<int> out(rows, 0);
            for (int r = 0; r < rows; ++r)
                for (int c = 0; c < cols; ++c) {
                    int coef = transpose ? phi[c][r] : phi[r][c];
                    int term = 0;
                    int reps = coef >= 0 ? coef : -coef;
                    int unit = coef >= 0 ? x[c] : a.neg(x[c]);
                    for (int t = 0; t < reps; ++t) term = a.add(term, unit);
                    out[r] = a.add(out[r], term);
                }
            return out;
        };

        auto enumerate = [&](int n, auto&& fn) {
            std::vector<int> x(n, 0);
            std::vector<int> radix(n, static_cast<int>(a.order()));
            do { fn(x); } while (group::detail::next_tuple(x, radix));
        };

        std::vector<gcode::Codeword> ker_phi, im_phi, ker_adj, im_adj;
        enumerate(ni, [&](const std::vector<int>& x) {
            auto y = apply(x, false);
            im_phi.push_back(y);
            if (std::all_of(y.begin(), y.end(), [](int v) { return v == 0; })) ker_phi.push_back(x);
        });
        enumerate(nj, [&](const std::vector<int>& y) {
            auto x = apply(y, true);
            im_adj.push_back(x);
            if (std::all_of(x.begin(), x.end(), [](int v) { return v == 0; })) ker_adj.push_back(y);
        });
        std::vector<std::string> li, lj;
        for (int i = 0; i < ni; ++i) li.push_back(std::to_string(i));
        for (int i = 0; i < nj; ++i) lj.push_back(std::to_string(i));
        GroupCode kphi = GroupCode::from_words(a, li, ker_phi);
        GroupCode iphi = GroupCode::from_words(a, lj, im_phi);
        GroupCode kadj = GroupCode::from_words(a, lj, ker_adj);
        GroupCode iadj = GroupCode::from_words(a, li, im_adj);
        bool ok = kphi.dual(cfg.enumeration_cap).same_code(iadj, cfg.enumeration_cap) &&
                  iphi.dual(cfg.enumeration_cap).same_code(kadj, cfg.enumeration_cap);
        if (!ok) {
            pass = false;
            detail << "trial " << trial << "; ";
        }
    }
    return {"adjoint-kernel-image", pass,
            pass ? "kernels and images of adjoint pairs are dual codes" : detail.str()};
}

PropertyResult observability_table(const RunConfig& cfg) {
    auto g = graphs::house_graph();
    auto a = FiniteAbelianGroup::parse("Z2");
    auto w01 = nr::build_w01(g, a);
    auto z0 = nr::derive_space_realization(w01, nr::SpaceKind::Z0);
    auto b1 = nr::derive_space_realization(w01, nr::SpaceKind::B1);
    auto z1 = nr::dualize(b1);
    auto b0 = nr::dualize(z0);
    struct Row {
        const nr::NormalRealization* r;
        long long unobs, unctrl;
    };
    std::vector<Row> rows = {{&z0, 1, 4}, {&b1, 2, 1}, {&z1, 1, 2}, {&b0, 4, 1}};
    bool pass = true;
    for (const auto& row : rows) {
        auto s = nr::analyze(*row.r, cfg.enumeration_cap);
        auto [ctrl, degree] = nr::controllability_test(*row.r, cfg.enumeration_cap);
        if (s.unobservable_size != row.unobs || degree != row.unctrl ||
            ctrl != (row.unctrl == 1))
            pass = false;
    }
    return {"observability-controllability-table", pass,
            pass ? "unobservability (1,2,1,4) and uncontrollability (4,1,2,1) degrees" : "mismatch"};
}

PropertyResult io_behavior_duality(const RunConfig& cfg) {
    auto g = graphs::house_graph();
    auto a = FiniteAbelianGroup::parse("Z2");
    auto w01 = nr::build_w01(g, a);
    auto s = nr::analyze(w01, 1 << 24);
    auto sd = nr::analyze(nr::dualize(w01), 1 << 24);
    bool pass = sd.external_behavior.same_code(s.external_behavior.dual(cfg.enumeration_cap),
                                               cfg.enumeration_cap);
    // Check against the explicit dual I/O set {(-yM, y)}.
    const auto& gg = *g;
    std::vector<gcode::Codeword> w10;
    std::vector<int> y(gg.edges.size(), 0);
    std::vector<int> radix(gg.edges.size(), static_cast<int>(a.order()));
    do {
        std::vector<int> x(gg.vertex_ids.size(), 0);
        for (size_t e = 0; e < gg.edges.size(); ++e) {
            x[gg.edges[e].head] = a.add(x[gg.edges[e].head], y[e]);
            x[gg.edges[e].tail] = a.sub(x[gg.edges[e].tail], y[e]);
        }
        gcode::Codeword w;
        for (int v : x) w.push_back(a.neg(v));
        for (int e : y) w.push_back(e);
        w10.push_back(std::move(w));
    } while (group::detail::next_tuple(y, radix));
    std::vector<std::string> labels = gg.vertex_ids;
    for (const auto& e : gg.edges) labels.push_back(e.id);
    GroupCode w10_code = GroupCode::from_words(a, labels, w10);
    pass = pass && sd.external_behavior.same_code(w10_code, cfg.enumeration_cap);
    return {"io-behavior-duality", pass,
            pass ? "dual I/O behavior is the orthogonal code" : "mismatch"};
}

std::vector<PropertyResult> duality_suite(const RunConfig& cfg) {
    return {space_duality(cfg),       nr_duality(cfg),          information_set_complement(cfg),
            adjoint_kernel_image(cfg), observability_table(cfg), io_behavior_duality(cfg)};
}

nfg::NormalFactorGraph random_nfg(std::mt19937_64& rng, const FiniteAbelianGroup& a) {
    nfg::NormalFactorGraph n;
    int n_edges = 1 + static_cast<int>(rng() % 4);
    int n_half = static_cast<int>(rng() % 3);
    int total_ports = 2 * n_edges + n_half;
    int n_nodes = std::max(2 + static_cast<int>(rng() % 3), (total_ports + 3) / 4);
    for (int e = 0; e < n_edges; ++e) n.edges.push_back({a, (rng() & 1) != 0});
    for (int h = 0; h < n_half; ++h)
        n.half_edges.push_back({a, "h" + std::to_string(h)});
    using Port = nfg::NormalFactorGraph::Port;
    std::vector<std::vector<Port>> ports(n_nodes);
    // Keep node arity small so direct table transforms stay cheap.
    auto pick_node = [&]() {
        for (;;) {
            int v = static_cast<int>(rng() % n_nodes);
            if (ports[v].size() < 4) return v;
        }
    };
    for (int e = 0; e < n_edges; ++e) {
        ports[pick_node()].push_back({Port::Kind::Edge, e, 0});
        ports[pick_node()].push_back({Port::Kind::Edge, e, 1});
    }
    for (int h = 0; h < n_half; ++h) ports[pick_node()].push_back({Port::Kind::Half, h, 0});
    auto unit = [&]() { return static_cast<double>(rng() % 2001) / 1000.0 - 1.0; };
    for (int v = 0; v < n_nodes; ++v) {
        nfg::NormalFactorGraph::Node node;
        node.id = "n" + std::to_string(v);
        node.ports = ports[v];
        long long size = 1;
        for (const auto& p : node.ports) {
            (void)p;
            size *= a.order();
        }
        for (long long i = 0; i < size; ++i) node.table.push_back(cplx(unit(), unit()));
        n.nodes.push_back(std::move(node));
    }
    return n;
}

PropertyResult nfgdt_fuzz(const RunConfig& cfg, int trials) {
    std::mt19937_64 rng(cfg.seed ^ 0xdf61);
    const std::vector<std::string> alphabets = {"Z2", "Z3", "Z4", "Z2xZ2"};
    double max_rel = 0.0;
    int done = 0;
    for (int t = 0; t < trials; ++t) {
        auto a = FiniteAbelianGroup::parse(alphabets[t % alphabets.size()]);
        auto n = random_nfg(rng, a);
        auto d = nfg::dual_nfg(n);
        auto z = nfg::evaluate_all(n, cfg.enumeration_cap);
        auto zd = nfg::evaluate_all(d, cfg.enumeration_cap);
        // External tuple group: product over half-edges.
        std::vector<FiniteAbelianGroup> parts(n.half_edges.size(), a);
        long long a_e = n.internal_size();
        if (n.half_edges.empty()) {
            cplx want = static_cast<double>(a_e) * z[0];
            double rel = std::abs(zd[0] - want) / std::max(1.0, std::abs(want));
            max_rel = std::max(max_rel, rel);
        } else {
            auto ext = group::product_group(parts);
            GroupFunction zf(ext, z);
            auto zhat = group::fourier_transform(zf);
            for (long long i = 0; i < ext.order(); ++i) {
                cplx want = static_cast<double>(a_e) * zhat(static_cast<int>(i));
                double rel = std::abs(zd[i] - want) / std::max(1.0, std::abs(want));
                max_rel = std::max(max_rel, rel);
            }
        }
        ++done;
    }
    std::ostringstream detail;
    detail << done << " instances, max relative error " << max_rel;
    return {"nfg-duality-transform", max_rel < cfg.tolerance, detail.str()};
}

std::vector<PropertyResult> nfgdt_suite(const RunConfig& cfg) { return {nfgdt_fuzz(cfg, 120)}; }

PropertyResult dual_scale_law(const RunConfig& cfg) {
    bool pass = true;
    std::ostringstream detail;
    double worst = 0.0;
    for (const auto& g : suite_graphs(cfg.seed + 17)) {
        for (double beta : {0.0, 0.3, 1.0}) {
            for (const char* kind : {"ising", "potts"}) {
                ising::IsingTypeModel m;
                m.graph = g;
                m.beta = beta;
                std::map<std::string, double> j;
                int i = 0;
                for (const auto& e : g->edges) j[e.id] = 1.0 - 0.3 * (i++ % 2);
                if (std::string(kind) == "ising") {
                    m.alphabet = FiniteAbelianGroup::parse("Z2");
                    m.edge_weights = ising::ising_weights(*g, beta, j);
                } else {
                    m.alphabet = FiniteAbelianGroup::parse("Z3");
                    m.edge_weights = ising::potts_weights(*g, beta, j, 3);
                }
                auto tree = topo::spanning_tree(*g);
                cplx exact = ising::partition_exact(m, cfg.enumeration_cap);
                auto primal = ising::partition_primal(m, tree, cfg.enumeration_cap);
                auto dual = ising::partition_dual(m, tree, cfg.enumeration_cap);
                double want_ratio = dual.declared_scale.to_double() /
                                    primal.declared_scale.to_double();
                double got_ratio = std::abs(dual.value) / std::abs(primal.value);
                double err1 = std::abs(got_ratio - want_ratio) / std::max(1.0, want_ratio);
                double norm_p = std::abs(primal.value / primal.declared_scale.to_double() - exact) /
                                std::max(1.0, std::abs(exact));
                double norm_d = std::abs(dual.value / dual.declared_scale.to_double() - exact) /
                                std::max(1.0, std::abs(exact));
                worst = std::max({worst, err1, norm_p, norm_d});
            }
        }
    }
    pass = worst < cfg.tolerance;
    detail << "max relative error " << worst;
    return {"dual-scale-law", pass, detail.str()};
}

PropertyResult all_ones_scale(const RunConfig& cfg) {
    bool pass = true;
    std::ostringstream detail;
    for (const char* spec : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
        auto a = FiniteAbelianGroup::parse(spec);
        auto g = graphs::house_graph();
        ising::IsingTypeModel m;
        m.graph = g;
        m.alphabet = a;
        for (const auto& e : g->edges)
            m.edge_weights.emplace(e.id, GroupFunction::constant(a, cplx(1.0, 0.0)));
        auto tree = topo::spanning_tree(*g);
        auto primal = ising::partition_primal(m, tree, cfg.enumeration_cap);
        auto dual = ising::partition_dual(m, tree, cfg.enumeration_cap);
        double want_p = std::pow(static_cast<double>(a.order()), 5);
        double want_d = std::pow(static_cast<double>(a.order()), 6);
        if (primal.value != cplx(want_p, 0.0) || dual.value != cplx(want_d, 0.0)) {
            pass = false;
            detail << spec << " got " << primal.value.real() << "," << dual.value.real() << "; ";
        }
    }
    return {"all-ones-scale", pass,
            pass ? "uniform weights give exactly |A|^|V| and |A|^|E|" : detail.str()};
}

PropertyResult controllability_check(const RunConfig& cfg) {
    bool pass = true;
    for (const auto& g : suite_graphs(cfg.seed + 3)) {
        for (const char* spec : {"Z2", "Z3"}) {
            auto a = FiniteAbelianGroup::parse(spec);
            auto w01 = nr::build_w01(g, a);
            auto z0 = nr::derive_space_realization(w01, nr::SpaceKind::Z0);
            auto b1 = nr::derive_space_realization(w01, nr::SpaceKind::B1);
            for (const auto& r : {z0, b1, nr::dualize(z0), nr::dualize(b1)}) {
                auto s = nr::analyze(r, cfg.enumeration_cap);
                auto sd = nr::analyze(nr::dualize(r), cfg.enumeration_cap);
                long long degree = s.behavior_size * s.total_state_size / s.total_constraint_size;
                if (degree != sd.unobservable_size) pass = false;
            }
        }
    }
    return {"controllability-test", pass,
            pass ? "dual unobservable size equals |B||A_E|/|C_V|" : "mismatch"};
}

PropertyResult ewnfg_agreement(const RunConfig& cfg) {
    bool pass = true;
    double worst = 0.0;
    for (const auto& g : suite_graphs(cfg.seed + 29)) {
        auto a = FiniteAbelianGroup::parse("Z2");
        ising::IsingTypeModel m;
        m.graph = g;
        m.alphabet = a;
        m.edge_weights = ising::ising_weights(*g, 0.4, {});
        auto tree = topo::spanning_tree(*g);
        auto w01 = nr::build_w01(g, a);
        auto b1 = nr::derive_space_realization(w01, nr::SpaceKind::B1);
        nfg::EdgeWeightedNfg e{b1, m.edge_weights};
        cplx full = nfg::evaluate_ewnfg(e, cfg.enumeration_cap, nfg::EvalStrategy::Full);
        auto primal = ising::partition_primal(m, tree, cfg.enumeration_cap);
        double rel = std::abs(full - primal.value) / std::max(1.0, std::abs(primal.value));
        worst = std::max(worst, rel);
    }
    pass = worst < cfg.tolerance;
    std::ostringstream detail;
    detail << "max relative error " << worst;
    return {"ewnfg-info-set-agreement", pass, detail.str()};
}

std::vector<PropertyResult> scale_suite(const RunConfig& cfg) {
    return {dual_scale_law(cfg), all_ones_scale(cfg), controllability_check(cfg),
            ewnfg_agreement(cfg)};
}

PropertyResult planar_four_way(const RunConfig& cfg) {
    bool pass = true;
    double worst = 0.0;
    std::vector<topo::PlanarComplex> complexes = {graphs::house_complex(true)};
    for (int n = 3; n <= 6; ++n) complexes.push_back(graphs::ring_complex(n));
    for (const auto& k : complexes) {
        ising::IsingTypeModel m;
        m.graph = std::make_shared<const topo::OrientedGraph>(k.graph);
        m.alphabet = FiniteAbelianGroup::parse("Z2");
        m.edge_weights = ising::ising_weights(k.graph, 0.3, {});
        auto rep = ising::planar_representations(m, k, cfg.enumeration_cap);
        for (const auto& r : rep.primal_z) {
            double rel = std::abs(r.pv.value / r.pv.declared_scale.to_double() - rep.exact_primal) /
                         std::max(1.0, std::abs(rep.exact_primal));
            worst = std::max(worst, rel);
        }
        for (const auto& r : rep.dual_z) {
            double rel = std::abs(r.pv.value / r.pv.declared_scale.to_double() - rep.exact_dual) /
                         std::max(1.0, std::abs(rep.exact_dual));
            worst = std::max(worst, rel);
        }
    }
    pass = worst < cfg.tolerance;
    std::ostringstream detail;
    detail << "max relative error " << worst;
    return {"planar-four-way", pass, detail.str()};
}

PropertyResult planar_cycle_identity(const RunConfig& cfg) {
    bool pass = true;
    auto a = FiniteAbelianGroup::parse("Z2");
    std::vector<topo::PlanarComplex> complexes = {graphs::house_complex(true),
                                                  graphs::house_complex(false),
                                                  graphs::ring_complex(4)};
    for (const auto& k : complexes) {
        topo::Matrix m2 = topo::second_connection_matrix(k);
        // B1 (row space of M2) must equal Z1 of the graph.
        std::vector<gcode::Codeword> gens;
        for (const auto& row : m2) {
            gcode::Codeword w;
            for (int v : row) w.push_back(v == 1 ? 1 : v == -1 ? a.neg(1) : 0);
            gens.push_back(std::move(w));
        }
        std::vector<std::string> labels;
        for (const auto& e : k.graph.edges) labels.push_back(e.id);
        GroupCode b1_rows(a, labels, gens);
        auto z1 = spaces::zero_boundary(k.graph, a, cfg.enumeration_cap);
        if (!b1_rows.same_code(z1, cfg.enumeration_cap)) pass = false;
        // And dually the coboundary space equals the kernel of the face map.
        auto b1 = spaces::coboundary(k.graph, a, cfg.enumeration_cap);
        if (!b1.same_code(z1.dual(cfg.enumeration_cap), cfg.enumeration_cap)) pass = false;
    }
    return {"planar-cycle-identity", pass,
            pass ? "face rows span the cycle space; duals agree" : "mismatch"};
}

PropertyResult homology_dims(const RunConfig& cfg) {
    auto probe = FiniteAbelianGroup::parse("Z2");
    bool pass = true;
    auto plane = topo::homology_dimensions(graphs::house_complex(false), probe, cfg.enumeration_cap);
    auto sphere = topo::homology_dimensions(graphs::house_complex(true), probe, cfg.enumeration_cap);
    pass = pass && plane == std::array<int, 3>{1, 0, 0} && sphere == std::array<int, 3>{1, 0, 1};
    for (int n = 3; n <= 5; ++n) {
        auto rs = topo::homology_dimensions(graphs::ring_complex(n), probe, cfg.enumeration_cap);
        if (rs != std::array<int, 3>{1, 0, 1}) pass = false;
    }
    return {"homology-dimensions", pass, pass ? "(1,0,0) on a plane, (1,0,1) on a sphere" : "mismatch"};
}

PropertyResult dual_graph_transpose(const RunConfig& cfg) {
    (void)cfg;
    bool pass = true;
    std::vector<topo::PlanarComplex> complexes = {graphs::house_complex(true),
                                                  graphs::ring_complex(5)};
    for (const auto& k : complexes) {
        auto d = topo::dual_graph(k);
        auto m1 = topo::connection_matrix(k.graph);
        auto m2 = topo::second_connection_matrix(k);
        auto dm1 = topo::connection_matrix(d.graph);
        auto dm2 = topo::second_connection_matrix(d);
        for (size_t e = 0; e < k.graph.edges.size(); ++e) {
            for (size_t f = 0; f < k.faces.size(); ++f)
                if (dm1[e][f] != m2[f][e]) pass = false;
            for (size_t v = 0; v < k.graph.vertex_ids.size(); ++v)
                if (dm2[v][e] != m1[e][v]) pass = false;
        }
        auto dd = topo::dual_graph(d);
        if (topo::connection_matrix(dd.graph) != m1) pass = false;
    }
    return {"dual-graph-transpose", pass,
            pass ? "dual connection matrices are transposes; double dual restores" : "mismatch"};
}

std::vector<PropertyResult> planar_suite(const RunConfig& cfg) {
    return {planar_four_way(cfg), planar_cycle_identity(cfg), homology_dims(cfg),
            dual_graph_transpose(cfg)};
}

}  // namespace

std::vector<PropertyResult> run_suite(const std::string& suite, const RunConfig& cfg) {
    std::vector<PropertyResult> out;
    auto append = [&](std::vector<PropertyResult> r) {
        out.insert(out.end(), r.begin(), r.end());
    };
    if (suite == "duality" || suite == "all") append(duality_suite(cfg));
    if (suite == "nfgdt" || suite == "all") append(nfgdt_suite(cfg));
    if (suite == "scale" || suite == "all") append(scale_suite(cfg));
    if (suite == "planar" || suite == "all") append(planar_suite(cfg));
    if (out.empty()) throw ValidationError("unknown suite '" + suite + "'");
    return out;
}

bool all_pass(const std::vector<PropertyResult>& results) {
    return std::all_of(results.begin(), results.end(), [](const auto& r) { return r.pass; });
}

}  // namespace gtop::verify

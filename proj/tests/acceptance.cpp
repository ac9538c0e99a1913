// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Tolerances are pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "gtop/config.hpp"
#include "gtop/gcode.hpp"
#include "gtop/graphs.hpp"
#include "gtop/ising.hpp"
#include "gtop/json_io.hpp"
#include "gtop/nfg.hpp"
#include "gtop/nr.hpp"
#include "gtop/spaces.hpp"
#include "gtop/topo.hpp"
#include "gtop/verify.hpp"

using namespace gtop;
using group::cplx;
using group::FiniteAbelianGroup;
using group::GroupFunction;

namespace {

constexpr long long kCap = 1 << 24;
constexpr double kTol = 1e-9;
int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int criterion, bool pass, const std::string& what, double secs) {
    if (!pass) ++failures;
    std::printf("CRITERION %2d: %s  %s (%.2fs)\n", criterion, pass ? "PASS" : "FAIL", what.c_str(),
                secs);
}

bool rel_ok(double got, double want, double tol = kTol) {
    return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}
bool rel_ok(cplx got, cplx want, double tol = kTol) {
    return std::abs(got - want) <= tol * std::max(1.0, std::abs(want));
}

std::vector<std::shared_ptr<const topo::OrientedGraph>> criterion_graphs() {
    std::vector<std::shared_ptr<const topo::OrientedGraph>> gs;
    gs.push_back(graphs::house_graph());
    for (int i = 0; i < 5; ++i) gs.push_back(graphs::random_connected_graph(52000 + i, 6, 9));
    return gs;
}

// ---------------------------------------------------------------------------

void criterion_1() {
    Timer t;
    bool pass = true;

    auto j = io::load_file(std::string(GTOP_FIXTURE_DIR) + "/example1.json");
    auto k = io::parse_complex(j);
    const auto& g = k.graph;

    topo::Matrix m_want = {{-1, 1, 0, 0, 0}, {0, -1, 1, 0, 0}, {-1, 0, 0, 0, 1},
                           {0, -1, 0, 1, 0}, {0, 0, -1, 1, 0}, {0, 0, 0, -1, 1}};
    pass = pass && topo::connection_matrix(g) == m_want;
    pass = pass && topo::betti(g) == std::pair<int, int>{1, 2};

    auto tree = topo::spanning_tree(g, {"e1", "e2", "e4", "e6"});
    auto cuts = topo::fundamental_cut_sets(g, tree);
    auto cut_ids = [&](const char* e) {
        std::set<std::string> out;
        for (int c : cuts.at(g.edge_index(e))) out.insert(g.edges[c].id);
        return out;
    };
    pass = pass && cut_ids("e1") == std::set<std::string>{"e1", "e3"};
    pass = pass && cut_ids("e2") == std::set<std::string>{"e2", "e5"};
    pass = pass && cut_ids("e4") == std::set<std::string>{"e4", "e3", "e5"};
    pass = pass && cut_ids("e6") == std::set<std::string>{"e6", "e3"};

    auto cycles = topo::fundamental_cycles(g, tree);
    auto path_ids = [&](const char* e) {
        std::vector<std::pair<std::string, int>> out;
        for (const auto& s : cycles.at(g.edge_index(e))) out.push_back({g.edges[s.edge].id, s.sign});
        return out;
    };
    pass = pass && path_ids("e3") == std::vector<std::pair<std::string, int>>{
                                         {"e3", 1}, {"e6", -1}, {"e4", -1}, {"e1", -1}};
    // The e5 cycle orientation is forced by the closed-path law
    // h(p_j) = t(p_{j+1}) and by y(p).M = 0 over the integers.
    pass = pass && path_ids("e5") == std::vector<std::pair<std::string, int>>{
                                         {"e5", 1}, {"e4", -1}, {"e2", 1}};
    for (const auto& [e, cyc] : cycles) {
        auto vec = topo::edge_vector(g, cyc);
        auto m = topo::connection_matrix(g);
        for (size_t v = 0; v < g.vertex_ids.size(); ++v) {
            int acc = 0;
            for (size_t i = 0; i < g.edges.size(); ++i) acc += vec[i] * m[i][v];
            pass = pass && acc == 0;
        }
    }

    auto plane = io::parse_complex(io::load_file(std::string(GTOP_FIXTURE_DIR) +
                                                 "/example1_plane.json"));
    pass = pass && topo::second_connection_matrix(plane) ==
                       topo::Matrix{{1, 0, -1, 1, 0, 1}, {0, 1, 0, -1, 1, 0}};
    pass = pass && topo::second_connection_matrix(k) ==
                       topo::Matrix{{1, 0, -1, 1, 0, 1},
                                    {0, 1, 0, -1, 1, 0},
                                    {-1, -1, 1, 0, -1, -1}};

    auto dual = topo::dual_graph(k);
    pass = pass && dual.graph.vertex_ids.size() == 3;
    pass = pass && topo::betti(dual.graph) == std::pair<int, int>{1, 4};

    double secs = t.seconds();
    pass = pass && secs < 1.0;
    report(1, pass, "demo-graph fixtures: matrices, cut sets, cycles, dual graph", secs);
}

void criterion_2() {
    Timer t;
    bool pass = true;
    for (const auto& g : criterion_graphs()) {
        auto [b0, b1] = topo::betti(*g);
        (void)b0;
        for (const char* spec : {"Z2", "Z3"}) {
            auto a = FiniteAbelianGroup::parse(spec);
            long long q = a.order();
            auto z0 = spaces::zero_coboundary(*g, a, kCap);
            auto cob = spaces::coboundary(*g, a, kCap);
            auto z1 = spaces::zero_boundary(*g, a, kCap);
            auto bnd = spaces::boundary(*g, a, kCap);

            gcode::GroupCode rep(a, g->vertex_ids,
                                 gcode::GroupCode::repetition(a, static_cast<int>(g->vertex_ids.size()))
                                     .generators());
            gcode::GroupCode zsum(a, g->vertex_ids,
                                  gcode::GroupCode::zero_sum(a, static_cast<int>(g->vertex_ids.size()))
                                      .generators());
            long long want_b1 = 1, want_z1 = 1;
            for (size_t i = 0; i + 1 < g->vertex_ids.size(); ++i) want_b1 *= q;
            for (int i = 0; i < b1; ++i) want_z1 *= q;

            pass = pass && z0.same_code(rep, kCap);
            pass = pass && bnd.same_code(zsum, kCap);
            pass = pass && cob.size(kCap) == want_b1;
            pass = pass && z1.size(kCap) == want_z1;
            pass = pass && z1.same_code(cob.dual(kCap), kCap);
            pass = pass && bnd.same_code(z0.dual(kCap), kCap);
        }
    }
    double secs = t.seconds();
    pass = pass && secs < 30.0;
    report(2, pass, "space theorems by enumeration over Z2 and Z3", secs);
}

void criterion_3() {
    Timer t;
    auto g = graphs::house_graph();
    auto a = FiniteAbelianGroup::parse("Z2");
    auto w01 = nr::build_w01(g, a);
    auto z0 = nr::derive_space_realization(w01, nr::SpaceKind::Z0);
    auto b1 = nr::derive_space_realization(w01, nr::SpaceKind::B1);
    auto z1 = nr::dualize(b1);
    auto b0 = nr::dualize(z0);
    struct Row {
        const nr::NormalRealization* r;
        long long unctrl, unobs;
    };
    // Kernel, image, dual-kernel, dual-image realizations in that order.
    std::vector<Row> rows = {{&z0, 4, 1}, {&b1, 1, 2}, {&z1, 2, 1}, {&b0, 1, 4}};
    bool pass = true;
    for (const auto& row : rows) {
        auto s = nr::analyze(*row.r, kCap);
        auto [ctrl, degree] = nr::controllability_test(*row.r, kCap);
        pass = pass && s.unobservable_size == row.unobs;
        pass = pass && degree == row.unctrl && ctrl == (row.unctrl == 1);
    }
    report(3, pass, "observability/controllability table on the demo graph", t.seconds());
}

void criterion_4() {
    Timer t;
    RunConfig cfg;
    cfg.enumeration_cap = kCap;
    cfg.tolerance = kTol;
    cfg.seed = 424242;
    auto results = verify::run_suite("nfgdt", cfg);
    bool pass = verify::all_pass(results);
    double secs = t.seconds();
    pass = pass && secs < 60.0;
    report(4, pass, results.empty() ? "no results" : results[0].detail, secs);
}

void criterion_5() {
    Timer t;
    bool pass = true;
    long long checked = 0;
    for (const auto& g : criterion_graphs()) {
        for (const char* spec : {"Z2", "Z3"}) {
            auto a = FiniteAbelianGroup::parse(spec);
            auto w01 = nr::build_w01(g, a);
            auto z0 = nr::derive_space_realization(w01, nr::SpaceKind::Z0);
            auto b1 = nr::derive_space_realization(w01, nr::SpaceKind::B1);
            auto z1 = nr::dualize(b1);
            auto b0 = nr::dualize(z0);
            auto tree = topo::spanning_tree(*g);
            std::vector<nr::NormalRealization> rs = {
                z0,
                b1,
                z1,
                b0,
                nr::make_io_realization(z0, nr::IoKind::Z0Io, tree, 0),
                nr::make_io_realization(b1, nr::IoKind::B1Io, tree, 0),
                nr::make_io_realization(z1, nr::IoKind::Z1Io, tree, 0),
                nr::make_io_realization(b0, nr::IoKind::B0Io, tree, 0)};
            for (const auto& r : rs) {
                auto s = nr::analyze(r, kCap);
                auto sd = nr::analyze(nr::dualize(r), kCap);
                long long lhs = sd.unobservable_size * s.total_constraint_size;
                long long rhs = s.behavior_size * s.total_state_size;
                pass = pass && lhs == rhs;
                ++checked;
            }
        }
    }
    std::ostringstream what;
    what << "controllability identity on " << checked << " realizations";
    report(5, pass, what.str(), t.seconds());
}

void criterion_6() {
    Timer t;
    bool pass = true;
    for (const auto& g : criterion_graphs()) {
        int ne = static_cast<int>(g->edges.size());
        int nv = static_cast<int>(g->vertex_ids.size());
        std::map<std::string, double> jmap;
        int i = 0;
        for (const auto& e : g->edges) jmap[e.id] = 1.0 - 0.25 * (i++ % 3);
        for (double beta : {0.0, 0.3, 1.0}) {
            for (const char* kind : {"ising", "potts"}) {
                ising::IsingTypeModel m;
                m.graph = g;
                m.beta = beta;
                if (std::string(kind) == "ising") {
                    m.alphabet = FiniteAbelianGroup::parse("Z2");
                    m.edge_weights = ising::ising_weights(*g, beta, jmap);
                } else {
                    m.alphabet = FiniteAbelianGroup::parse("Z3");
                    m.edge_weights = ising::potts_weights(*g, beta, jmap, 3);
                }
                auto tree = topo::spanning_tree(*g);
                cplx exact = ising::partition_exact(m, kCap);
                auto primal = ising::partition_primal(m, tree, kCap);
                auto dual = ising::partition_dual(m, tree, kCap);
                double want_ratio = std::pow(static_cast<double>(m.alphabet.order()), ne - nv);
                pass = pass && rel_ok(std::abs(dual.value) / std::abs(primal.value), want_ratio);
                pass = pass && rel_ok(primal.value / primal.declared_scale.to_double(), exact);
                pass = pass && rel_ok(dual.value / dual.declared_scale.to_double(), exact);
            }
        }
    }
    report(6, pass, "dual/primal scale law for Ising and Potts weights", t.seconds());
}

void criterion_7() {
    Timer t;
    bool pass = true;
    auto g = graphs::house_graph();
    for (const char* spec : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
        auto a = FiniteAbelianGroup::parse(spec);
        ising::IsingTypeModel m;
        m.graph = g;
        m.alphabet = a;
        for (const auto& e : g->edges)
            m.edge_weights.emplace(e.id, GroupFunction::constant(a, cplx(1.0, 0.0)));
        auto tree = topo::spanning_tree(*g);
        auto primal = ising::partition_primal(m, tree, kCap);
        auto dual = ising::partition_dual(m, tree, kCap);
        double want_p = std::pow(static_cast<double>(a.order()), 5);
        double want_d = std::pow(static_cast<double>(a.order()), 6);
        pass = pass && primal.value == cplx(want_p, 0.0);
        pass = pass && dual.value == cplx(want_d, 0.0);
    }
    report(7, pass, "all-ones weights give |A|^|V| and |A|^|E| exactly", t.seconds());
}

void criterion_8() {
    Timer t;
    bool pass = true;
    double beta = 0.4, j = 1.0;
    for (int n = 3; n <= 10; ++n) {
        ising::IsingTypeModel m;
        m.graph = graphs::ring_graph(n);
        m.alphabet = FiniteAbelianGroup::parse("Z2");
        m.beta = beta;
        m.edge_weights = ising::ising_weights(*m.graph, beta, {{"e0", j}});
        auto tree = topo::spanning_tree(*m.graph);
        auto dual = ising::partition_dual(m, tree, kCap);
        pass = pass && dual.info_set_size == 1;  // |A| terms in the dual sum
        double closed = std::pow(2.0 * std::cosh(beta * j), n) +
                        std::pow(2.0 * std::sinh(beta * j), n);
        // For a single cycle |E| = |V|, so the dual sum sits at the reference.
        pass = pass && rel_ok(dual.value, cplx(closed, 0.0));
        cplx ring = ising::partition_exact(m, kCap);
        pass = pass && rel_ok(ring, cplx(closed, 0.0));

        // Fixed-boundary chain: x_0 = x_n = 0.
        const auto& f = m.edge_weights.at("e0");
        std::vector<int> x(n - 1, 0);
        std::vector<int> radix(n - 1, 2);
        cplx chain = 0.0;
        do {
            cplx prod = 1.0;
            int prev = 0;
            for (int i = 0; i < n - 1; ++i) {
                prod *= f(m.alphabet.sub(x[i], prev));
                prev = x[i];
            }
            prod *= f(m.alphabet.sub(0, prev));
            chain += prod;
        } while (group::detail::next_tuple(x, radix));
        pass = pass && rel_ok(chain * 2.0, ring);
    }
    report(8, pass, "single-cycle closed form and fixed-boundary scaling", t.seconds());
}

void criterion_9() {
    Timer t;
    bool pass = true;
    auto j = io::load_file(std::string(GTOP_FIXTURE_DIR) + "/example1_ising_field.json");
    auto m = io::parse_model(j, GTOP_FIXTURE_DIR);
    cplx exact = ising::partition_exact(m, kCap);
    auto tree = topo::spanning_tree(*m.graph, {"e1", "e2", "e4", "e6"});
    auto p = ising::partition_with_field(m, ising::FieldMethod::PrimalW01, tree, 0, kCap);
    auto d = ising::partition_with_field(m, ising::FieldMethod::DualW10, tree, 0, kCap);
    auto h = ising::partition_with_field(m, ising::FieldMethod::Hybrid, tree, 0, kCap);
    pass = pass && rel_ok(p.value / p.declared_scale.to_double(), exact);
    pass = pass && rel_ok(d.value / d.declared_scale.to_double(), exact);
    pass = pass && rel_ok(h.value / h.declared_scale.to_double(), exact);
    pass = pass && p.info_set_size == 5 && d.info_set_size == 6 && h.info_set_size == 3;
    report(9, pass, "field methods and the hybrid split agree with brute force", t.seconds());
}

void criterion_10() {
    Timer t;
    bool pass = true;
    std::vector<topo::PlanarComplex> complexes = {graphs::house_complex(true)};
    for (int n = 3; n <= 7; ++n) complexes.push_back(graphs::ring_complex(n));
    for (const auto& k : complexes) {
        ising::IsingTypeModel m;
        m.graph = std::make_shared<const topo::OrientedGraph>(k.graph);
        m.alphabet = FiniteAbelianGroup::parse("Z2");
        m.beta = 0.3;
        m.edge_weights = ising::ising_weights(k.graph, 0.3, {});
        auto rep = ising::planar_representations(m, k, kCap);
        for (const auto& r : rep.primal_z)
            pass = pass && rel_ok(r.pv.value / r.pv.declared_scale.to_double(), rep.exact_primal);
        for (const auto& r : rep.dual_z)
            pass = pass && rel_ok(r.pv.value / r.pv.declared_scale.to_double(), rep.exact_dual);
    }
    report(10, pass, "four-way planar representations on both graphs", t.seconds());
}

void criterion_11() {
    Timer t;
    bool pass = true;
    ising::IsingTypeModel m;
    m.graph = graphs::house_graph();
    m.alphabet = FiniteAbelianGroup::parse("Z2");
    m.beta = 0.4;
    m.edge_weights = ising::ising_weights(*m.graph, 0.4, {});
    auto tree = topo::spanning_tree(*m.graph, {"e1", "e2", "e4", "e6"});
    double exact = ising::partition_exact(m, kCap).real();

    auto est = ising::importance_sampling(m, tree, 100000, 20240809);
    double norm = est.estimate / est.declared_scale.to_double();
    double se = est.std_error / est.declared_scale.to_double();
    pass = pass && std::abs(norm - exact) < 4.0 * se;

    auto est2 = ising::importance_sampling(m, tree, 100000, 20240809);
    pass = pass && est.estimate == est2.estimate && est.std_error == est2.std_error;

    double mean_sum = 0.0, pooled_var = 0.0;
    const int seeds = 50;
    const long long n_each = 10000;
    for (int s = 0; s < seeds; ++s) {
        auto e = ising::importance_sampling(m, tree, n_each, 9000 + s);
        mean_sum += e.estimate / e.declared_scale.to_double();
        double sen = e.std_error / e.declared_scale.to_double();
        pooled_var += sen * sen;
    }
    double pooled_mean = mean_sum / seeds;
    double pooled_se = std::sqrt(pooled_var) / seeds;
    pass = pass && std::abs(pooled_mean - exact) < 5.0 * pooled_se;

    double secs = t.seconds();
    pass = pass && secs < 60.0;
    report(11, pass, "importance sampling: accuracy, pooling, determinism", secs);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}

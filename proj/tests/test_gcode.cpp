#include <doctest.h>

#include <random>
#include <set>

#include "gtop/config.hpp"
#include "gtop/gcode.hpp"
#include "gtop/graphs.hpp"
#include "gtop/ising.hpp"
#include "gtop/spaces.hpp"

using gtop::gcode::Codeword;
using gtop::gcode::GroupCode;
using gtop::group::FiniteAbelianGroup;

namespace {
constexpr long long kCap = 1 << 20;

std::set<Codeword> word_set(const GroupCode& c) {
    const auto& e = c.elements(kCap);
    return std::set<Codeword>(e.begin(), e.end());
}

GroupCode random_code(std::mt19937_64& rng, const FiniteAbelianGroup& a, int n, int gens) {
    std::vector<Codeword> g;
    for (int i = 0; i < gens; ++i) {
        Codeword w(n);
        for (int j = 0; j < n; ++j) w[j] = static_cast<int>(rng() % a.order());
        g.push_back(std::move(w));
    }
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    return GroupCode(a, labels, g);
}
}  // namespace

TEST_CASE("repetition and zero-sum constructions") {
    auto z2 = FiniteAbelianGroup::parse("Z2");
    auto z3 = FiniteAbelianGroup::parse("Z3");
    CHECK(word_set(GroupCode::repetition(z2, 3)) ==
          std::set<Codeword>{{0, 0, 0}, {1, 1, 1}});
    CHECK(word_set(GroupCode::repetition(z3, 2)) ==
          std::set<Codeword>{{0, 0}, {1, 1}, {2, 2}});
    CHECK(word_set(GroupCode::zero_sum(z2, 3)) ==
          std::set<Codeword>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    CHECK(word_set(GroupCode::zero_sum(z3, 2)) ==
          std::set<Codeword>{{0, 0}, {1, 2}, {2, 1}});
    CHECK(GroupCode::repetition(z2, 5).size(kCap) == 2);
    CHECK(GroupCode::zero_sum(z3, 4).size(kCap) == 27);
    CHECK_THROWS_AS(GroupCode::repetition(z2, 0), gtop::ValidationError);
}

TEST_CASE("dual codes") {
    auto z2 = FiniteAbelianGroup::parse("Z2");
    auto rep = GroupCode::repetition(z2, 3);
    CHECK(rep.dual(kCap).same_code(GroupCode::zero_sum(z2, 3), kCap));
    auto universe = GroupCode::universe(z2, 3);
    CHECK(universe.dual(kCap).same_code(GroupCode::trivial(z2, 3), kCap));

    // Cut space dual equals cycle space, both enumerated independently.
    auto g = gtop::graphs::house_graph();
    auto b1 = gtop::spaces::coboundary(*g, z2, kCap);
    auto z1 = gtop::spaces::zero_boundary(*g, z2, kCap);
    CHECK(b1.dual(kCap).same_code(z1, kCap));
}

TEST_CASE("size product and biduality for random codes") {
    std::mt19937_64 rng(4242);
    for (const char* spec : {"Z2", "Z3", "Z4", "Z2xZ2"}) {
        auto a = FiniteAbelianGroup::parse(spec);
        for (int trial = 0; trial < 4; ++trial) {
            int n = 2 + static_cast<int>(rng() % 3);
            auto c = random_code(rng, a, n, 2);
            long long full = 1;
            for (int i = 0; i < n; ++i) full *= a.order();
            auto d = c.dual(kCap);
            CHECK(c.size(kCap) * d.size(kCap) == full);
            CHECK(d.dual(kCap).same_code(c, kCap));
        }
    }
}

TEST_CASE("information sets") {
    auto z2 = FiniteAbelianGroup::parse("Z2");
    auto zs = GroupCode::zero_sum(z2, 3);
    CHECK(zs.is_information_set({"0", "1"}, kCap));
    CHECK_FALSE(zs.is_information_set({"0", "1", "2"}, kCap));
    auto rep = GroupCode::repetition(z2, 3);
    CHECK(rep.is_information_set({"2"}, kCap));
    CHECK_THROWS_AS(zs.is_information_set({"9"}, kCap), gtop::ValidationError);
}

TEST_CASE("io map reconstructs the code") {
    auto z2 = FiniteAbelianGroup::parse("Z2");
    auto z3 = FiniteAbelianGroup::parse("Z3");

    auto zs = GroupCode::zero_sum(z2, 3);
    auto m = zs.io_map({"0", "1"}, kCap);
    CHECK(m.check_of({1, 0}) == Codeword{1});  // check symbol is a+b
    CHECK(m.check_of({1, 1}) == Codeword{0});
    CHECK(m.to_code().same_code(zs, kCap));

    auto rep = GroupCode::repetition(z3, 3);
    auto mr = rep.io_map({"0"}, kCap);
    CHECK(mr.check_of({2}) == Codeword{2, 2});
    CHECK(mr.to_code().same_code(rep, kCap));

    // Homomorphism property on all pairs at desk scale.
    auto g = gtop::graphs::house_graph();
    auto b1 = gtop::spaces::coboundary(*g, z2, kCap);
    auto mb = b1.io_map({"e1", "e2", "e4", "e6"}, kCap);
    for (int xa = 0; xa < 16; ++xa)
        for (int xb = 0; xb < 16; ++xb) {
            Codeword a = {xa >> 3 & 1, xa >> 2 & 1, xa >> 1 & 1, xa & 1};
            Codeword b = {xb >> 3 & 1, xb >> 2 & 1, xb >> 1 & 1, xb & 1};
            Codeword sum(4);
            for (int i = 0; i < 4; ++i) sum[i] = z2.add(a[i], b[i]);
            auto ca = mb.check_of(a), cb = mb.check_of(b), cs = mb.check_of(sum);
            for (size_t i = 0; i < cs.size(); ++i) CHECK(cs[i] == z2.add(ca[i], cb[i]));
        }
    // And the check coordinates match tree propagation through the graph:
    // the check set is {e3, e5} in label order.
    auto tree = gtop::topo::spanning_tree(*g, {"e1", "e2", "e4", "e6"});
    for (int xa = 0; xa < 16; ++xa) {
        Codeword info = {xa >> 3 & 1, xa >> 2 & 1, xa >> 1 & 1, xa & 1};
        auto full = gtop::ising::extend_tree_assignment(*g, z2, tree, info);
        auto chk = mb.check_of(info);
        REQUIRE(mb.check_labels == std::vector<std::string>{"e3", "e5"});
        CHECK(chk[0] == full[g->edge_index("e3")]);
        CHECK(chk[1] == full[g->edge_index("e5")]);
    }
    CHECK_THROWS_AS(zs.io_map({"0", "1", "2"}, kCap), gtop::ValidationError);
}

TEST_CASE("systematic basis") {
    auto z2 = FiniteAbelianGroup::parse("Z2");
    auto zs = GroupCode::zero_sum(z2, 3);
    auto basis = zs.systematic_basis({"0", "1"}, kCap);
    REQUIRE(basis.size() == 2);
    CHECK(word_set(basis[0]) == std::set<Codeword>{{0, 0, 0}, {1, 0, 1}});
    CHECK(word_set(basis[1]) == std::set<Codeword>{{0, 0, 0}, {0, 1, 1}});

    auto z3 = FiniteAbelianGroup::parse("Z3");
    auto zs3 = GroupCode::zero_sum(z3, 3);
    auto basis3 = zs3.systematic_basis({"0", "1"}, kCap);
    REQUIRE(basis3.size() == 2);
    CHECK(basis3[0].support(kCap) == std::vector<std::string>{"0", "2"});
    CHECK(basis3[1].support(kCap) == std::vector<std::string>{"1", "2"});
    // Each subcode is isomorphic to the alphabet via its information coordinate,
    // and the internal direct sum recovers the code.
    for (const auto& sub : basis3) CHECK(sub.size(kCap) == 3);
    std::set<Codeword> sums;
    for (const auto& wa : basis3[0].elements(kCap))
        for (const auto& wb : basis3[1].elements(kCap)) {
            Codeword s(3);
            for (int i = 0; i < 3; ++i) s[i] = z3.add(wa[i], wb[i]);
            sums.insert(s);
        }
    CHECK(sums == word_set(zs3));

    // The whole repetition code is the single subcode for a singleton set.
    auto rep = GroupCode::repetition(z2, 4);
    auto rb = rep.systematic_basis({"0"}, kCap);
    REQUIRE(rb.size() == 1);
    CHECK(rb[0].same_code(rep, kCap));
}

TEST_CASE("projection and cross-section") {
    auto z2 = FiniteAbelianGroup::parse("Z2");
    auto zs = GroupCode::zero_sum(z2, 3);
    CHECK(zs.project({"0"}).size(kCap) == 2);
    CHECK(zs.cross_section({"0"}, kCap).size(kCap) == 1);

    // Projection/cross-section duality on random codes over Z4.
    std::mt19937_64 rng(777);
    auto z4 = FiniteAbelianGroup::parse("Z4");
    for (int trial = 0; trial < 6; ++trial) {
        auto c = random_code(rng, z4, 3, 2);
        for (const auto& j :
             std::vector<std::vector<std::string>>{{"0"}, {"1"}, {"0", "2"}, {"1", "2"}}) {
            auto lhs = c.project(j).dual(kCap);
            auto rhs = c.dual(kCap).cross_section(j, kCap);
            CHECK(lhs.same_code(rhs, kCap));
        }
    }
}

TEST_CASE("dimension reporting and mixed-order subgroups") {
    auto z4 = FiniteAbelianGroup::parse("Z4");
    std::vector<std::string> labels = {"0", "1"};
    // Generated by (2,0): the subgroup {00, 20} has size 2, not a power of 4.
    GroupCode odd(z4, labels, {{2, 0}});
    CHECK(odd.size(kCap) == 2);
    CHECK_FALSE(odd.dimension(kCap).has_value());
    CHECK_THROWS_AS(odd.io_map({"0"}, kCap), gtop::ValidationError);
    // Set-level operations still work.
    CHECK(odd.dual(kCap).size(kCap) == 8);
    CHECK(odd.project({"0"}).size(kCap) == 2);

    auto rep = GroupCode::repetition(z4, 2);
    CHECK(rep.dimension(kCap) == 1);
}

TEST_CASE("text serialization round trip") {
    auto z2z3 = FiniteAbelianGroup::parse("Z2xZ3");
    std::vector<std::string> labels = {"e1", "e2"};
    GroupCode c(z2z3, labels, {{z2z3.from_residues({1, 2}), z2z3.from_residues({0, 1})}});
    auto back = GroupCode::from_text(c.to_text());
    CHECK(back.same_code(c, kCap));
    CHECK(back.labels() == labels);
}

TEST_CASE("enumeration cap is enforced") {
    auto z2 = FiniteAbelianGroup::parse("Z2");
    auto big = GroupCode::universe(z2, 12);
    CHECK_THROWS_AS(big.elements(1000), gtop::CapExceeded);
}

#include "gtop/spaces.hpp"

#include <set>

#include "gtop/config.hpp"

namespace gtop::spaces {

using gcode::Codeword;
using gcode::GroupCode;
using group::FiniteAbelianGroup;

namespace {

long long space_size(const FiniteAbelianGroup& a, size_t n, long long cap) {
    long long s = 1;
    for (size_t i = 0; i < n; ++i) {
        s *= a.order();
        if (s > cap) throw CapExceeded("space enumeration exceeds cap");
    }
    return s;
}

std::vector<std::string> vertex_labels(const topo::OrientedGraph& g) { return g.vertex_ids; }
std::vector<std::string> edge_labels(const topo::OrientedGraph& g) {
    std::vector<std::string> l;
    for (const auto& e : g.edges) l.push_back(e.id);
    return l;
}

}  // namespace

namespace {
void require_connected(const topo::OrientedGraph& g) {
    g.validate();
    if (!topo::is_connected(g)) throw ValidationError("space enumeration requires a connected graph");
}
}  // namespace

GroupCode zero_coboundary(const topo::OrientedGraph& g, const FiniteAbelianGroup& a,
                          long long cap) {
    require_connected(g);
    space_size(a, g.vertex_ids.size(), cap);
    std::vector<Codeword> words;
    Codeword x(g.vertex_ids.size(), 0);
    std::vector<int> radix(g.vertex_ids.size(), static_cast<int>(a.order()));
    do {
        bool ker = true;
        for (const auto& e : g.edges)
            if (a.sub(x[e.head], x[e.tail]) != 0) { ker = false; break; }
        if (ker) words.push_back(x);
    } while (group::detail::next_tuple(x, radix));
    return GroupCode::from_words(a, vertex_labels(g), std::move(words));
}

GroupCode coboundary(const topo::OrientedGraph& g, const FiniteAbelianGroup& a, long long cap) {
    require_connected(g);
    space_size(a, g.vertex_ids.size(), cap);
    std::set<Codeword> words;
    Codeword x(g.vertex_ids.size(), 0);
    std::vector<int> radix(g.vertex_ids.size(), static_cast<int>(a.order()));
    do {
        Codeword y(g.edges.size());
        for (size_t e = 0; e < g.edges.size(); ++e)
            y[e] = a.sub(x[g.edges[e].head], x[g.edges[e].tail]);
        words.insert(std::move(y));
    } while (group::detail::next_tuple(x, radix));
    return GroupCode::from_words(a, edge_labels(g), std::vector<Codeword>(words.begin(), words.end()));
}

GroupCode zero_boundary(const topo::OrientedGraph& g, const FiniteAbelianGroup& a, long long cap) {
    require_connected(g);
    space_size(a, g.edges.size(), cap);
    std::vector<Codeword> words;
    Codeword y(g.edges.size(), 0);
    std::vector<int> radix(g.edges.size(), static_cast<int>(a.order()));
    do {
        bool ker = true;
        for (size_t v = 0; v < g.vertex_ids.size() && ker; ++v) {
            int acc = 0;
            for (size_t e = 0; e < g.edges.size(); ++e) {
                if (g.edges[e].head == static_cast<int>(v)) acc = a.add(acc, y[e]);
                else if (g.edges[e].tail == static_cast<int>(v)) acc = a.add(acc, a.neg(y[e]));
            }
            if (acc != 0) ker = false;
        }
        if (ker) words.push_back(y);
    } while (group::detail::next_tuple(y, radix));
    return GroupCode::from_words(a, edge_labels(g), std::move(words));
}

GroupCode boundary(const topo::OrientedGraph& g, const FiniteAbelianGroup& a, long long cap) {
    require_connected(g);
    space_size(a, g.edges.size(), cap);
    std::set<Codeword> words;
    Codeword y(g.edges.size(), 0);
    std::vector<int> radix(g.edges.size(), static_cast<int>(a.order()));
    do {
        Codeword x(g.vertex_ids.size(), 0);
        for (size_t e = 0; e < g.edges.size(); ++e) {
            x[g.edges[e].head] = a.add(x[g.edges[e].head], y[e]);
            x[g.edges[e].tail] = a.add(x[g.edges[e].tail], a.neg(y[e]));
        }
        words.insert(std::move(x));
    } while (group::detail::next_tuple(y, radix));
    return GroupCode::from_words(a, vertex_labels(g), std::vector<Codeword>(words.begin(), words.end()));
}

}  // namespace gtop::spaces

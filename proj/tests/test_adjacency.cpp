#include "dstrat/adjacency.hpp"

#include <doctest.h>

#include "adjacency_fixtures.hpp"

#include <random>

using namespace dstrat;

namespace {

using EdgeSet = std::set<std::pair<std::string, std::string>>;
using fixtures::marked;
using fixtures::valid_three_vertex_digraphs;
using fixtures::witness_consistent;

}  // namespace

TEST_CASE("declared base digraphs") {
    CHECK(base_adjacency(builtin_theory("hurwitz")).labelled_edges() == EdgeSet{{"s", "ss"}, {"un", "ss"}});
    const auto poles = base_adjacency(builtin_theory("poles", {1, 0}));
    CHECK(poles.vertices == std::vector<std::string>{"s", "un"});
    CHECK(poles.labelled_edges() == EdgeSet{{"un", "s"}});
    CHECK(base_adjacency(builtin_theory("aperiodicity")).labelled_edges() ==
          EdgeSet{{"s", "ss"}, {"un", "ss"}, {"un", "s"}});
    for (const auto& name : builtin_theory_names()) {
        std::vector<double> params;
        if (name == "annulus") params = {0.5, 1};
        if (name == "poles") params = {1, 1, -1, 0.5};
        for (TheoryMode mode : {TheoryMode::Projective, TheoryMode::Monic}) {
            const Digraph g = base_adjacency(builtin_theory(name, params, mode));
            CHECK_MESSAGE(validate_theory_digraph(g).valid, name);
            for (int i = 0; i < g.vertex_count(); ++i) CHECK(g.has_edge(i, i));
        }
    }
}

TEST_CASE("numeric sampler reproduces declared digraphs") {
    for (const auto& name : builtin_theory_names()) {
        std::vector<double> params;
        if (name == "annulus") params = {0.5, 1};
        if (name == "poles") params = {1, 1, -1, 0.5};
        for (TheoryMode mode : {TheoryMode::Projective, TheoryMode::Monic}) {
            const auto t = builtin_theory(name, params, mode);
            const Digraph declared = base_adjacency(t);
            const Digraph sampled = numeric_adjacency(t);
            CHECK_MESSAGE(sampled.vertices == declared.vertices, name);
            CHECK_MESSAGE(sampled.labelled_edges(true) == declared.labelled_edges(true), name);
        }
    }
}

TEST_CASE("every realizable shape has a fixture theory") {
    const auto shapes = fixtures::all_shapes();
    for (const auto& f : shapes) {
        const Digraph g = numeric_adjacency(f.theory);
        CHECK_MESSAGE(g.vertices == f.vertices, f.name);
        CHECK_MESSAGE(g.labelled_edges() == f.edges, f.name);
        CHECK_MESSAGE(validate_theory_digraph(g).valid, f.name);
    }
    // The fixtures cover exactly the valid three-vertex digraphs.
    std::set<EdgeSet> fixture_shapes;
    for (const auto& f : shapes)
        if (f.vertices.size() == 3) fixture_shapes.insert(f.edges);
    std::set<EdgeSet> valid;
    for (const auto& g : valid_three_vertex_digraphs()) valid.insert(g.labelled_edges());
    CHECK(valid.size() == 6);
    CHECK(fixture_shapes == valid);
}

TEST_CASE("theory digraph validation") {
    CHECK(validate_theory_digraph(marked({"s", "ss", "un"}, {{"s", "ss"}, {"un", "ss"}})).valid);
    const auto bad = validate_theory_digraph(marked({"s", "ss", "un"}, {{"s", "ss"}, {"ss", "un"}}));
    CHECK_FALSE(bad.valid);
    REQUIRE_FALSE(bad.reasons.empty());
    CHECK(bad.reasons.front().find("no ingoing edges at vertex un") != std::string::npos);
    CHECK(validate_theory_digraph(marked({"s"}, {})).valid);
    CHECK_FALSE(validate_theory_digraph(marked({"s"}, {}, false)).valid);
    CHECK_FALSE(validate_theory_digraph(marked({"ss"}, {})).valid);
    CHECK_FALSE(validate_theory_digraph(marked({"s", "ss"}, {{"ss", "s"}})).valid);
    CHECK_FALSE(validate_theory_digraph(marked({"s", "un"}, {})).valid);
}

TEST_CASE("local digraph validation") {
    const auto hurwitz = builtin_theory("hurwitz");
    const Digraph local = local_base_digraph(hurwitz);
    CHECK(local.vertex_count() == 4);
    CHECK(validate_local_digraph(local).valid);
    Digraph wrong = local;
    wrong.add_edge(kInfinityLabel, "s");
    CHECK_FALSE(validate_local_digraph(wrong).valid);
    CHECK_FALSE(validate_local_digraph(base_adjacency(hurwitz)).valid);
    Digraph isolated = base_adjacency(hurwitz);
    const int inf = isolated.add_vertex(kInfinityLabel);
    isolated.add_edge(inf, inf);
    const auto rep = validate_local_digraph(isolated);
    CHECK_FALSE(rep.valid);
    CHECK(rep.reasons.front().find("weakly connected") != std::string::npos);

    // Local digraphs of all builtins are valid, with undeclared data inferred numerically too.
    for (const auto& name : builtin_theory_names()) {
        std::vector<double> params;
        if (name == "annulus") params = {0.5, 1};
        if (name == "poles") params = {1, 1, -1, 0.5};
        auto t = builtin_theory(name, params);
        const Digraph g = local_base_digraph(t);
        CHECK_MESSAGE(validate_local_digraph(g).valid, name);
        t.unbounded.reset();
        t.adjacency.reset();
        t.punctured_topology.reset();
        CHECK_MESSAGE(local_base_digraph(t).labelled_edges() == g.labelled_edges(), name);
    }
}

TEST_CASE("flow criterion examples") {
    const Digraph h = base_adjacency(builtin_theory("hurwitz"));  // s, ss, un
    auto r = adjacent_flow(h, {1, 0, 1}, {0, 2, 0});
    CHECK(r.adjacent);
    REQUIRE(r.witness);
    CHECK(*r.witness == FlowWitness{{{0, 1}, 1}, {{2, 1}, 1}});
    CHECK_FALSE(adjacent_flow(h, {0, 1, 0}, {1, 0, 0}).adjacent);
    CHECK_FALSE(brute_force_adjacent(h, {0, 1, 0}, {1, 0, 0}));
    r = adjacent_flow(h, {2, 1, 1}, {2, 1, 1});
    CHECK(r.adjacent);
    CHECK(witness_consistent(h, *r.witness, {2, 1, 1}, {2, 1, 1}));
    CHECK_THROWS_AS(adjacent_flow(h, {1, 0, 0}, {1, 1, 0}), std::invalid_argument);

    const Digraph single = marked({"s"}, {});
    CHECK(brute_force_adjacent(single, {5}, {5}));
    const Digraph pair = marked({"a", "b"}, {});
    for (const auto& tau : enumerate_multisets(2, 3))
        for (const auto& eta : enumerate_multisets(2, 3)) CHECK(brute_force_adjacent(pair, tau, eta) == (tau == eta));
    CHECK_THROWS_AS(brute_force_adjacent(single, {7}, {7}), std::invalid_argument);
}

TEST_CASE("flow criterion agrees with brute force on all valid shapes") {
    for (const Digraph& g : valid_three_vertex_digraphs())
        for (int n = 1; n <= 4; ++n) {
            const auto ms = enumerate_multisets(3, n);
            for (const auto& tau : ms)
                for (const auto& eta : ms) {
                    const auto r = adjacent_flow(g, tau, eta);
                    CHECK(r.adjacent == brute_force_adjacent(g, tau, eta));
                    if (r.adjacent) CHECK(witness_consistent(g, *r.witness, tau, eta));
                }
        }
}

TEST_CASE("flow properties on random digraphs") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
        Digraph g = marked({"a", "b", "c", "d"}, {});
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                if (a != b && rng() % 3 == 0) g.add_edge(a, b);
        const auto m2 = enumerate_multisets(4, 2);
        for (const auto& tau : m2) CHECK(adjacent_flow(g, tau, tau).adjacent);
        // Sums of adjacent pairs stay adjacent.
        for (int k = 0; k < 20; ++k) {
            const auto& t1 = m2[rng() % m2.size()];
            const auto& e1 = m2[rng() % m2.size()];
            const auto& t2 = m2[rng() % m2.size()];
            const auto& e2 = m2[rng() % m2.size()];
            if (!adjacent_flow(g, t1, e1).adjacent || !adjacent_flow(g, t2, e2).adjacent) continue;
            MultisetVertex ts(4), es(4);
            for (int i = 0; i < 4; ++i) {
                ts[i] = t1[i] + t2[i];
                es[i] = e1[i] + e2[i];
            }
            CHECK(adjacent_flow(g, ts, es).adjacent);
            CHECK(brute_force_adjacent(g, ts, es));
        }
    }
}

TEST_CASE("symmetric products") {
    const Digraph h = base_adjacency(builtin_theory("hurwitz"));
    const auto sp = sym_product_digraph(h, 2);
    CHECK(sp.graph.vertex_count() == 6);
    CHECK(sp.graph.has_edge("{2s}", "{s,ss}"));
    // Every non-loop edge of the quadratic Hurwitz picture, and nothing else.
    const EdgeSet expected{{"{2s}", "{s,ss}"},   {"{2s}", "{2ss}"},     {"{2un}", "{ss,un}"},
                           {"{2un}", "{2ss}"},   {"{s,ss}", "{2ss}"},   {"{s,un}", "{2ss}"},
                           {"{s,un}", "{ss,un}"}, {"{s,un}", "{s,ss}"}, {"{ss,un}", "{2ss}"}};
    CHECK(sp.graph.labelled_edges() == expected);

    const auto pp = sym_product_digraph(base_adjacency(builtin_theory("poles", {0, 0})), 2);
    CHECK(pp.graph.has_edge("{2un}", "{s,un}"));
    CHECK(pp.graph.has_edge("{2un}", "{2s}"));

    // n = 1 reproduces the base digraph up to relabelling {v} -> v.
    for (const auto& f : fixtures::all_shapes()) {
        const Digraph g = numeric_adjacency(f.theory);
        const auto one = sym_product_digraph(g, 1);
        EdgeSet relabelled;
        for (const auto& [a, b] : one.graph.labelled_edges(true))
            relabelled.insert({a.substr(1, a.size() - 2), b.substr(1, b.size() - 2)});
        CHECK(relabelled == g.labelled_edges(true));
    }
    CHECK_THROWS_AS(sym_product_digraph(h, 0), std::invalid_argument);
    Digraph big;
    for (int i = 0; i < 40; ++i) big.add_vertex("v" + std::to_string(i));
    CHECK_THROWS_AS(sym_product_digraph(big, 8), std::invalid_argument);
}

TEST_CASE("local adjacency") {
    const auto hurwitz = builtin_theory("hurwitz");
    const auto one = local_adjacency(hurwitz, 1);
    CHECK(one.graph.vertex_count() == 4);
    const auto two = local_adjacency(hurwitz, 2);
    CHECK(two.graph.has_edge("{s,inf}", "{ss,inf}"));
    // Roots can escape to infinity but never come back.
    const Digraph base = local_base_digraph(hurwitz);
    const int inf = base.find(kInfinityLabel), s = base.find("s");
    MultisetVertex three_inf(4, 0), two_inf(4, 0);
    three_inf[inf] = 3;
    two_inf[inf] = 2;
    two_inf[s] = 1;
    CHECK(adjacent_flow(base, two_inf, three_inf).adjacent);
    CHECK_FALSE(adjacent_flow(base, three_inf, two_inf).adjacent);
}

TEST_CASE("DOT export") {
    const std::string dot = dot_export(base_adjacency(builtin_theory("hurwitz")));
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + 3 + 5);
    CHECK(dot.find("\"s\" -> \"ss\";") != std::string::npos);
    CHECK(dot_export(Digraph{}) == "digraph adjacency {\n}\n");
    const std::string sp = dot_export(sym_product_digraph(base_adjacency(builtin_theory("hurwitz")), 2).graph);
    CHECK(std::count(sp.begin(), sp.end(), ';') == 6 + 9 + 6);
}

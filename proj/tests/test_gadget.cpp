#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "xfc/density.hpp"
#include "xfc/errors.hpp"
#include "xfc/gadget.hpp"
#include "xfc/graph.hpp"
#include "xfc/rng.hpp"
#include "xfc/stable.hpp"

using namespace xfc;

TEST_CASE("gadget counts: named cases") {
    // (K_2, l=0): path i-u-v-j
    auto g2 = GadgetGraph::build(Graph::complete(2), 0);
    CHECK(g2.graph().vertex_count() == 4);
    CHECK(g2.graph().edge_count() == 3);

    // (K_3, l=0): 9 vertices, 9 edges, and it is the 9-cycle
    auto g3 = GadgetGraph::build(Graph::complete(3), 0);
    CHECK(g3.graph().vertex_count() == 9);
    CHECK(g3.graph().edge_count() == 9);
    CHECK(oracle::brute_find_induced(Graph::cycle(9), g3.graph()).has_value());

    // (K_3, l=2): 21 vertices, 21 edges
    auto g32 = GadgetGraph::build(Graph::complete(3), 2);
    CHECK(g32.graph().vertex_count() == 21);
    CHECK(g32.graph().edge_count() == 21);

    CHECK_THROWS_AS(GadgetGraph::build(Graph::complete(2), 1), Error);
    CHECK_THROWS_AS(GadgetGraph::build(Graph::complete(2), -2), Error);
}

TEST_CASE("gadget counts match closed formulas on random templates") {
    CounterRng rng(4242);
    for (int trial = 0; trial < 50; ++trial) {
        auto tr = rng.stream(trial);
        int t = 2 + static_cast<int>(tr.at(0) % 5);
        int ell = 2 * static_cast<int>(tr.at(1) % 4);
        std::vector<int> verts(t);
        for (int i = 0; i < t; ++i) verts[i] = i + 1;
        std::vector<std::pair<int, int>> edges;
        int ctr = 2;
        for (int i = 1; i <= t; ++i)
            for (int j = i + 1; j <= t; ++j)
                if (tr.bernoulli(ctr++, 0.6)) edges.emplace_back(i, j);
        Graph tmpl = Graph::from_edges(verts, edges);
        auto gg = GadgetGraph::build(tmpl, ell);
        CHECK(gg.graph().vertex_count() ==
              tmpl.vertex_count() + (2 * ell + 2) * tmpl.edge_count());
        CHECK(gg.graph().edge_count() == (2 * ell + 3) * tmpl.edge_count());
        // all template edges subdivided away
        CHECK(gg.graph().induced(tmpl.vertices()).edge_count() == 0);
    }
}

namespace {

Graph template_from_mask(int t, std::uint64_t em) {
    std::vector<int> verts(t);
    for (int i = 0; i < t; ++i) verts[i] = i + 1;
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int i = 1; i <= t; ++i)
        for (int j = i + 1; j <= t; ++j, ++bit)
            if (em & (1ull << bit)) edges.emplace_back(i, j);
    return Graph::from_edges(verts, edges);
}

}  // namespace

TEST_CASE("gadget stability identity alpha(G(T)) = alpha(T) + (l+1)|E(T)|") {
    CHECK(stability_number(GadgetGraph::build(Graph::complete(3), 0).graph()) == 4);

    // every template with at most 4 vertices, both ell values
    for (int t = 1; t <= 4; ++t)
        for (std::uint64_t em = 0; em < (1ull << (t * (t - 1) / 2)); ++em) {
            Graph tmpl = template_from_mask(t, em);
            for (int ell : {0, 2}) {
                auto gg = GadgetGraph::build(tmpl, ell);
                CHECK(stability_number(gg.graph()) ==
                      stability_number(tmpl) + (ell + 1) * tmpl.edge_count());
            }
        }

    // all 5-vertex templates at ell = 0
    for (std::uint64_t em = 0; em < (1ull << 10); ++em) {
        Graph tmpl = template_from_mask(5, em);
        CHECK(stability_number(GadgetGraph::build(tmpl, 0).graph()) ==
              stability_number(tmpl) + tmpl.edge_count());
    }

    // sampled 5-vertex templates at ell = 2. K_5 alone is skipped: its
    // gadget has 65 vertices, past the 64-vertex exact-alpha cap.
    CounterRng rng(616);
    for (int trial = 0; trial < 40; ++trial) {
        std::uint64_t em = rng.at(trial) & 0x3ff;
        if (std::popcount(em) == 10) em &= ~1ull;
        Graph tmpl = template_from_mask(5, em);
        CHECK(stability_number(GadgetGraph::build(tmpl, 2).graph()) ==
              stability_number(tmpl) + 3 * tmpl.edge_count());
    }
}

TEST_CASE("extension S(b): named small cases") {
    auto g2 = GadgetGraph::build(Graph::complete(2), 0);
    // b = {}: one middle vertex
    CHECK(g2.extend_stable_set({}).size() == 1);
    // b = {1}: {1, v_12}
    auto s1 = g2.extend_stable_set({1});
    CHECK(s1.size() == 2);
    CHECK(std::set<int>(s1.begin(), s1.end()) ==
          std::set<int>{1, g2.v_vertex(1, 2)});
    // b = {1,2}: |S| = 2 + 1 - 1 = 2
    CHECK(g2.extend_stable_set({1, 2}).size() == 2);

    CHECK_THROWS_AS(g2.extend_stable_set({9}), Error);
}

TEST_CASE("extension S(b): stability and cardinalities for all b, |V(T)| <= 4") {
    std::vector<Graph> templates;
    for (int t = 1; t <= 4; ++t)
        for (std::uint64_t em = 0; em < (1ull << (t * (t - 1) / 2)); ++em)
            templates.push_back(template_from_mask(t, em));
    for (const auto& tmpl : templates)
        for (int ell : {0, 2}) {
            auto gg = GadgetGraph::build(tmpl, ell);
            int t = tmpl.vertex_count();
            for (std::uint64_t bm = 0; bm < (1ull << t); ++bm) {
                std::vector<int> b;
                for (int i = 0; i < t; ++i)
                    if (bm & (1ull << i)) b.push_back(tmpl.vertices()[i]);
                auto s = gg.extend_stable_set(b);
                REQUIRE(is_stable(gg.graph(), s));
                int eb = tmpl.induced(b).edge_count();
                CHECK(static_cast<int>(s.size()) ==
                      static_cast<int>(b.size()) + (ell + 1) * tmpl.edge_count() - eb);
                // S(b) ∩ V(T) = b
                std::set<int> sset(s.begin(), s.end());
                for (int v : tmpl.vertices())
                    CHECK(sset.count(v) == std::count(b.begin(), b.end(), v));

                // per-a intersection identities
                for (std::uint64_t am = 0; am < (1ull << t); ++am) {
                    std::vector<int> a, ab;
                    for (int i = 0; i < t; ++i)
                        if (am & (1ull << i)) a.push_back(tmpl.vertices()[i]);
                    for (int v : a)
                        if (sset.count(v) && std::count(b.begin(), b.end(), v)) ab.push_back(v);
                    std::vector<int> a_cap_b;
                    for (int v : a)
                        if (std::count(b.begin(), b.end(), v)) a_cap_b.push_back(v);
                    Graph sub = gg.sub(a);
                    int hits = 0;
                    for (int v : sub.vertices()) hits += sset.count(v);
                    int ea = tmpl.induced(a).edge_count();
                    int eab = tmpl.induced(a_cap_b).edge_count();
                    CHECK(hits == static_cast<int>(a_cap_b.size()) + (ell + 1) * ea - eab);
                    Graph sm = gg.small(a);
                    int small_hits = 0;
                    for (int v : sm.vertices()) small_hits += sset.count(v);
                    CHECK(small_hits == ea - eab);
                }
            }
        }
}

TEST_CASE("gadget sub and small: named cases") {
    auto g3 = GadgetGraph::build(Graph::complete(3), 0);
    Graph sub12 = g3.sub({1, 2});
    CHECK(sub12.vertex_count() == 4);
    CHECK(sub12.edge_count() == 3);
    Graph small12 = g3.small({1, 2});
    CHECK(small12.vertex_count() == 2);
    CHECK(small12.edge_count() == 1);

    CHECK(g3.sub({1}).vertex_count() == 1);
    CHECK(g3.small({1}).vertex_count() == 0);

    CHECK(g3.sub({1, 2, 3}) == g3.graph());
    Graph sm = g3.small({1, 2, 3});
    CHECK(sm.vertex_count() == 6);
    CHECK(sm.edge_count() == 3);  // perfect matching
    CHECK(stability_number(sm) == 3);

    CHECK_THROWS_AS(g3.sub({5}), Error);
}

TEST_CASE("small gadget alpha equals |E(T[a])| in general") {
    auto gg = GadgetGraph::build(Graph::complete(4), 2);
    for (std::uint64_t am = 0; am < 16; ++am) {
        std::vector<int> a;
        for (int i = 0; i < 4; ++i)
            if (am & (1ull << i)) a.push_back(i + 1);
        CHECK(stability_number(gg.small(a)) ==
              gg.tmpl().induced(a).edge_count());
    }
}

TEST_CASE("average degree of gadget induced subgraphs: named cases") {
    CHECK(max_avg_degree_induced(GadgetGraph::build(Graph::complete(3), 0).graph()) == 2);
    Rat d4 = max_avg_degree_induced(GadgetGraph::build(Graph::complete(4), 0).graph());
    CHECK(d4 == Rat(9, 4));
    CHECK(d4 <= 3);
}

TEST_CASE("average degree cap 2 + 1/(l+1) is strict for all templates up to 4 vertices") {
    for (int t = 1; t <= 4; ++t) {
        int pairs = t * (t - 1) / 2;
        for (std::uint64_t em = 0; em < (1ull << pairs); ++em) {
            std::vector<int> verts(t);
            for (int i = 0; i < t; ++i) verts[i] = i + 1;
            std::vector<std::pair<int, int>> edges;
            int bit = 0;
            for (int i = 1; i <= t; ++i)
                for (int j = i + 1; j <= t; ++j, ++bit)
                    if (em & (1ull << bit)) edges.emplace_back(i, j);
            Graph tmpl = Graph::from_edges(verts, edges);
            for (int ell : {0, 2, 4}) {
                auto gg = GadgetGraph::build(tmpl, ell);
                Rat cap = Rat(2) + Rat(1, ell + 1);
                CHECK(max_avg_degree_induced(gg.graph()) < cap);
            }
        }
    }
}

#include <doctest.h>

#include <ochrom/errors.hh>
#include <ochrom/harness.hh>
#include <ochrom/reduction.hh>
#include <ochrom/strategies.hh>

#include <random>
#include <set>

using namespace ochrom;

namespace
{
    auto neighbourhood(const GameState & s, std::initializer_list<Vertex> slots) -> Bitset
    {
        auto b = s.empty_set();
        for (auto v : slots)
            b.set(v);
        return b;
    }

    const std::vector<std::string> true_formulas = {
        "E x1 : (x1 & x1 & x1)",
        "E x1 E x2 E x3 : (x1 & x2 & x3)",
        "A x1 E x2 : (x1 & x2 & x2) | (~x1 & ~x2 & ~x2)",
    };

    const std::vector<std::string> false_formulas = {
        "A x1 : (x1 & x1 & x1)",
        "A x1 A x2 A x3 : (x1 & x2 & x3)",
        "E x2 A x3 : (x2 & x3 & x3) | (~x2 & ~x3 & ~x3)",
    };

    /// A toy pre-removal graph: `free` random free vertices and one precoloured vertex, last,
    /// with a neighbour and two nonadjacent non-neighbours among the free ones.
    auto toy_host(std::size_t free, std::mt19937_64 & rng) -> PrecoloredGraph
    {
        while (true) {
            Graph g(free + 1);
            for (Vertex a = 0 ; a <= free ; ++a)
                for (Vertex b = a + 1 ; b <= free ; ++b)
                    if (rng() % 2)
                        g.add_edge(a, b);
            bool d_split = false;
            for (Vertex a = 0 ; a < free ; ++a)
                for (Vertex b = a + 1 ; b < free ; ++b)
                    d_split = d_split || (! g.adjacent(a, free) && ! g.adjacent(b, free) && ! g.adjacent(a, b));
            if (g.degree(free) == 0 || ! d_split)
                continue;
            std::vector<std::optional<Color>> pc(free + 1);
            pc[free] = 0;
            return PrecoloredGraph(g, pc);
        }
    }

    /// Plays one game by hand, returning the final state and the host vertex of every slot.
    auto play_placed(const PrecoloredGraph & host, DrawerStrategy & d, PainterStrategy & p)
            -> std::pair<GameState, std::vector<Vertex>>
    {
        GameState s(host);
        std::vector<Vertex> placed;
        while (! game_over(s, host)) {
            auto m = d.move(s, host);
            auto c = p.colour(s, host, m.neighbourhood, host.size());
            REQUIRE(proper_colour(s, m.neighbourhood, c));
            s.add(m.neighbourhood, c);
            REQUIRE(m.witness);
            placed = *m.witness;
        }
        return {s, placed};
    }

    struct Toy
    {
        std::shared_ptr<const PrecoloredGraph> original;
        SupernodeLayout layout;
        PrecoloredGraph host;
        std::size_t k;
    };

    auto toy(std::size_t free, std::uint64_t seed) -> Toy
    {
        std::mt19937_64 rng(seed);
        auto g = toy_host(free, rng);
        auto before = wrap_graph(g, free + 1);
        auto after = remove_precolored_vertex(before, Vertex(free));
        return {std::make_shared<const PrecoloredGraph>(g), supernode_layout(before, Vertex(free)), after.materialize(), after.k};
    }
}

TEST_SUITE("strategies")
{
    TEST_CASE("first fit")
    {
        GameState s(4);
        s.add(s.empty_set(), 0);
        s.add(s.empty_set(), 2);
        CHECK(first_fit_colour(s, neighbourhood(s, {0, 1})) == 1);
        CHECK(first_fit_colour(s, s.empty_set()) == 0);
        CHECK(first_fit_colour(s, neighbourhood(s, {0})) == 1);
    }

    TEST_CASE("the P4 Drawer forces three colours")
    {
        PrecoloredGraph p4(path_graph(4));
        CHECK(verify_drawer_strategy(p4, 2, P4Drawer()).forcing);
        OptimalPainter painter;
        P4Drawer d;
        CHECK(play_match(p4, d, painter).colours_used == 3);
    }

    TEST_CASE("G1 Drawer forces k + 1 colours on false formulas")
    {
        for (auto & text : false_formulas) {
            auto f = parse_qdnf(text);
            auto out = build_g1(f);
            auto g = out.materialize();
            DrawerG1 d(f);
            FirstFit ff;
            CHECK(play_match(g, d, ff).colours_used > out.k);
        }
        auto f = parse_qdnf("A x1 A x2 A x3 : (x1 & x2 & x3)");
        auto report = verify_drawer_strategy(build_g1(f).materialize(), build_g1(f).k, DrawerG1(f));
        CHECK(report.complete);
        CHECK(report.forcing);
        CHECK_THROWS_AS(DrawerG1(parse_qdnf("E x1 : (x1 & x1 & x1)")), ArgumentError);
    }

    TEST_CASE("G1 Painter stays within k on true formulas")
    {
        for (auto & text : true_formulas) {
            auto f = parse_qdnf(text);
            auto out = build_g1(f);
            auto g = out.materialize();
            for (std::uint64_t seed = 0 ; seed < 100 ; ++seed) {
                OrderDrawer d(random_order(g, seed));
                PainterG1 p(f);
                CHECK(play_match(g, d, p).colours_used <= out.k);
            }
        }
        auto f = parse_qdnf("E x1 : (x1 & x1 & x1)");
        CHECK(verify_painter_strategy(build_g1(f).materialize(), build_g1(f).k, PainterG1(f)).ok());
        CHECK_THROWS_AS(PainterG1(parse_qdnf("A x1 : (x1 & x1 & x1)")), ArgumentError);
    }

    TEST_CASE("G1 brain learns the winning value")
    {
        auto f = parse_qdnf("E x1 : (x1 & x1 & x1)");
        G1Brain brain(f);
        auto & x = brain.layout().variables[0];
        brain.arrive({x.t}, {});
        REQUIRE(brain.assignment().size() == 1);
        REQUIRE(brain.assignment()[0].has_value());
        CHECK(*brain.assignment()[0]);
    }

    TEST_CASE("node Drawer puts two colours on each lower partite set")
    {
        PrecoloredGraph g(node_graph(3));
        auto triples = node_graph_triples(3);
        NodeDrawer d(triples);
        FirstFit ff;
        auto [s, w] = play_placed(g, d, ff);
        CHECK(s.used_colours() == 6);
        std::vector<Color> colour_of(g.size());
        for (std::size_t i = 0 ; i < w.size() ; ++i)
            colour_of[w[i]] = s.colour(Vertex(i));
        std::set<Color> all;
        for (auto & node : triples) {
            CHECK(colour_of[node.p1] != colour_of[node.p2]);
            all.insert(colour_of[node.p1]);
            all.insert(colour_of[node.p2]);
        }
        CHECK(all.size() == 6);
    }

    TEST_CASE("G2 Painter stays within k' on sampled orders")
    {
        for (auto & text : {"E x1 : (x1 & x1 & x1)", "A x1 E x2 : (x1 & x2 & x2) | (~x1 & ~x2 & ~x2)"}) {
            auto f = parse_qdnf(text);
            auto out = build_g2(f);
            auto g = out.materialize();
            for (std::uint64_t seed = 0 ; seed < 300 ; ++seed) {
                OrderDrawer d(random_order(g, seed));
                PainterG2 p(f);
                CHECK(play_match(g, d, p).colours_used <= out.k);
            }
        }
    }

    TEST_CASE("G2 Drawer forces k' + 1 colours")
    {
        auto f = parse_qdnf("A x1 : (x1 & x1 & x1)");
        auto out = build_g2(f);
        auto g = out.materialize();
        DrawerG2 d(f);
        FirstFit ff;
        CHECK(play_match(g, d, ff).colours_used > out.k);
        auto report = verify_drawer_strategy(g, out.k, DrawerG2(f));
        CHECK(report.complete);
        CHECK(report.forcing);
    }

    TEST_CASE("G' Drawer splits the supernode palettes")
    {
        for (std::uint64_t seed = 0 ; seed < 3 ; ++seed) {
            auto t = toy(3, seed);
            DrawerGPrime d(t.original, t.layout, std::make_unique<OrderDrawer>(random_order(*t.original, seed)));
            FirstFit ff;
            auto [s, w] = play_placed(t.host, d, ff);
            std::set<Color> a, b;
            for (std::size_t i = 0 ; i < w.size() ; ++i) {
                if (t.layout.in_a(w[i]))
                    a.insert(s.colour(Vertex(i)));
                if (t.layout.in_b(w[i]))
                    b.insert(s.colour(Vertex(i)));
            }
            CHECK(a.size() == t.layout.s);
            CHECK(b.size() == t.layout.s);
            for (auto c : a)
                CHECK(! b.count(c));
            CHECK(s.used_colours() > 2 * t.layout.s);
        }
    }

    TEST_CASE("G' Painter keeps its palettes apart")
    {
        for (std::uint64_t seed = 0 ; seed < 20 ; ++seed) {
            auto t = toy(3 + seed % 2, seed);
            auto order = random_order(t.host, seed);
            OrderDrawer d(order);
            PainterGPrime p(t.original, t.layout, std::make_unique<FirstFit>());
            GameState s(t.host);
            while (! game_over(s, t.host)) {
                auto m = d.move(s, t.host);
                auto c = p.colour(s, t.host, m.neighbourhood, t.host.size());
                REQUIRE(proper_colour(s, m.neighbourhood, c));
                s.add(m.neighbourhood, c);
                CHECK(p.ledger().disjoint());
            }
            for (auto c : p.ledger().c) {
                bool on_supernode = false;
                for (std::size_t i = 0 ; i < order.size() ; ++i)
                    on_supernode = on_supernode || (t.layout.in_supernode(order[i]) && s.colour(Vertex(i)) == c);
                CHECK(on_supernode);
            }
        }
    }

    TEST_CASE("registry")
    {
        StrategyContext c;
        c.host = std::make_shared<const PrecoloredGraph>(path_graph(4));
        for (auto & name : {"firstfit", "optimal"})
            CHECK(make_painter(name, c)->name() == name);
        CHECK(make_drawer("drawer-p4", c)->name() == "drawer-p4");
        CHECK_THROWS_AS(make_painter("nobody", c), ArgumentError);
        CHECK_THROWS_AS(make_drawer("nobody", c), ArgumentError);
        CHECK_THROWS_AS(make_painter("painter-g1", c), ArgumentError);

        c.formula = parse_qdnf("E x1 : (x1 & x1 & x1)");
        c.stage = "g1";
        CHECK(make_painter("painter-g1", c)->name() == "painter-g1");
        for (auto & name : painter_names())
            CHECK(! name.empty());
        CHECK(drawer_names().size() == 6);
    }
}

#include <doctest.h>

#include "oracles.hh"

#include <ochrom/errors.hh>
#include <ochrom/harness.hh>
#include <ochrom/solver.hh>
#include <ochrom/strategies.hh>

#include <random>
#include <set>

using namespace ochrom;

namespace
{
    auto mask(const Bitset & b, std::size_t slots) -> std::string
    {
        return b.to_string().substr(0, slots);
    }

    auto masks(const std::vector<DrawerMove> & moves, std::size_t slots) -> std::vector<std::string>
    {
        std::vector<std::string> result;
        for (auto & m : moves)
            result.push_back(mask(m.neighbourhood, slots));
        return result;
    }

    auto neighbourhood(const GameState & s, std::initializer_list<Vertex> slots) -> Bitset
    {
        auto b = s.empty_set();
        for (auto v : slots)
            b.set(v);
        return b;
    }

    auto colours(const std::vector<PainterMove> & moves) -> std::vector<Color>
    {
        std::vector<Color> result;
        for (auto m : moves)
            result.push_back(m.colour);
        return result;
    }

    /// Every Drawer move sequence from `state`, checking each move against an independent count.
    auto check_moves_from(GameState & state, const PrecoloredGraph & host, std::size_t depth) -> void
    {
        if (depth == 0 || game_over(state, host))
            return;
        auto moves = legal_drawer_moves(state, host);
        CHECK(! moves.empty());
        auto s = state.size();
        std::set<std::string> offered;
        for (auto & m : moves)
            offered.insert(mask(m.neighbourhood, s));
        for (std::uint64_t bits = 0 ; bits < (std::uint64_t{1} << s) ; ++bits) {
            oracle::Matrix pattern(s + 1, std::vector<bool>(s + 1, false));
            for (Vertex a = 0 ; a < s ; ++a)
                for (Vertex b = 0 ; b < s ; ++b)
                    pattern[a][b] = a != b && state.adjacent(a, b);
            std::string m(s, '0');
            for (Vertex a = 0 ; a < s ; ++a)
                if ((bits >> a) & 1) {
                    pattern[a][s] = pattern[s][a] = true;
                    m[a] = '1';
                }
            bool realisable = oracle::count_induced_embeddings(pattern, oracle::matrix_of(host.graph)) > 0;
            CHECK(realisable == (offered.count(m) == 1));
        }
        for (auto & move : moves) {
            auto child = state;
            child.add(move.neighbourhood, 0);
            check_moves_from(child, host, depth - 1);
        }
    }
}

TEST_SUITE("engine")
{
    TEST_CASE("Drawer moves")
    {
        PrecoloredGraph p4(path_graph(4)), k3(complete_graph(3));
        GameState s(p4);
        CHECK(masks(legal_drawer_moves(s, p4), 0) == std::vector<std::string>{""});
        s.add(s.empty_set(), 0);
        CHECK(masks(legal_drawer_moves(s, p4), 1) == std::vector<std::string>{"0", "1"});

        GameState t(k3);
        t.add(t.empty_set(), 0);
        t.add(neighbourhood(t, {0}), 1);
        CHECK(masks(legal_drawer_moves(t, k3), 2) == std::vector<std::string>{"11"});
    }

    TEST_CASE("Drawer moves are exactly the realisable subsets")
    {
        std::mt19937_64 rng(21);
        for (int round = 0 ; round < 8 ; ++round) {
            PrecoloredGraph host(oracle::random_graph(5, 0.5, rng));
            GameState s(host);
            check_moves_from(s, host, 3);
        }
    }

    TEST_CASE("Painter colours")
    {
        GameState s(4);
        s.add(s.empty_set(), 0);
        s.add(s.empty_set(), 1);
        CHECK(colours(legal_painter_colors(s, neighbourhood(s, {0, 1}), 3)) == std::vector<Color>{2});
        CHECK(colours(legal_painter_colors(s, s.empty_set(), 2)) == std::vector<Color>{0, 1});
        CHECK(colours(legal_painter_colors(s, neighbourhood(s, {0}), 2)) == std::vector<Color>{1});
        CHECK(legal_painter_colors(s, neighbourhood(s, {0, 1}), 2).empty());
    }

    TEST_CASE("game values")
    {
        PrecoloredGraph p4(path_graph(4)), k3(complete_graph(3));
        CHECK(painter_wins(p4, 2).outcome.winner == Winner::drawer);
        CHECK(painter_wins(p4, 3).outcome.winner == Winner::painter);
        CHECK(painter_wins(k3, 3).outcome.winner == Winner::painter);
        CHECK_THROWS_AS(painter_wins(PrecoloredGraph(Graph(13)), 3), RefusalError);
    }

    TEST_CASE("online chromatic numbers")
    {
        CHECK(online_chromatic_number(PrecoloredGraph(path_graph(4))).value == 3);
        CHECK(online_chromatic_number(PrecoloredGraph(Graph(5))).value == 1);
        CHECK(online_chromatic_number(PrecoloredGraph(complete_graph(4))).value == 4);
        CHECK(online_chromatic_number(PrecoloredGraph(binomial_tree(2))).value == 3);
    }

    TEST_CASE("precoloured anchors")
    {
        // P3 with both ends precoloured differently: the middle needs a third colour.
        PrecoloredGraph g(path_graph(3), {0, std::nullopt, 1});
        CHECK(online_chromatic_number(g).value == 3);
        // Same ends: two colours suffice.
        PrecoloredGraph h(path_graph(3), {0, std::nullopt, 0});
        CHECK(online_chromatic_number(h).value == 2);
    }

    TEST_CASE("solver agrees with the naive game on small graphs")
    {
        for (std::size_t n = 1 ; n <= 4 ; ++n)
            for (auto & g : oracle::isomorphism_classes(n))
                for (std::size_t k = 0 ; k <= n ; ++k)
                    CHECK(oracle::NaiveSolver(g, k).painter_wins()
                            == (painter_wins(PrecoloredGraph(g), k).outcome.winner == Winner::painter));
    }

    TEST_CASE("monotone in the budget")
    {
        std::mt19937_64 rng(9);
        for (int round = 0 ; round < 15 ; ++round) {
            PrecoloredGraph g(oracle::random_graph(6, 0.5, rng));
            bool before = false;
            for (std::size_t k = 0 ; k <= 6 ; ++k) {
                bool wins = painter_wins(g, k).outcome.winner == Winner::painter;
                CHECK((! before || wins));
                before = wins;
            }
            CHECK(before);
        }
    }

    TEST_CASE("parallel root split matches the sequential value")
    {
        std::mt19937_64 rng(13);
        for (int round = 0 ; round < 6 ; ++round) {
            PrecoloredGraph g(oracle::random_graph(7, 0.5, rng));
            auto a = online_chromatic_number(g);
            auto b = online_chromatic_number(g, SolveOptions{.jobs = 4});
            CHECK(a.value == b.value);
        }
    }

    TEST_CASE("principal variation is a legal game")
    {
        PrecoloredGraph p4(path_graph(4));
        auto r = painter_wins(p4, 2);
        auto & pv = r.outcome.principal_variation;
        REQUIRE(! pv.rounds.empty());
        GameState s(p4);
        for (auto & round : pv.rounds) {
            CHECK_NOTHROW(check_drawer_move(s, p4, DrawerMove{round.neighbourhood, std::nullopt}, 1));
            CHECK(proper_colour(s, round.neighbourhood, round.colour));
            s.add(round.neighbourhood, round.colour);
        }
        CHECK(format_transcript(pv).rfind("round 1 drawer - painter 0", 0) == 0);
    }

    TEST_CASE("Painter strategy verification")
    {
        PrecoloredGraph p4(path_graph(4)), k3(complete_graph(3));
        auto optimal = verify_painter_strategy(p4, 3, OptimalPainter());
        CHECK(optimal.ok());
        CHECK(optimal.complete);
        CHECK(optimal.max_colours == 3);

        auto ff = verify_painter_strategy(p4, 2, FirstFit());
        REQUIRE(ff.witness);
        CHECK(ff.witness->colours_used == 3);

        auto tri = verify_painter_strategy(k3, 3, FirstFit());
        CHECK(tri.ok());
        CHECK(tri.max_colours == 3);

        VerifyOptions tiny;
        tiny.node_budget = 3;
        CHECK(! verify_painter_strategy(PrecoloredGraph(binomial_tree(3)), 4, FirstFit(), tiny).complete);
    }

    TEST_CASE("sampled verification is seed deterministic")
    {
        PrecoloredGraph g(binomial_tree(3));
        VerifyOptions o;
        o.mode = VerifyOptions::Mode::sampled;
        o.trials = 50;
        o.seed = 7;
        auto a = verify_painter_strategy(g, 4, FirstFit(), o);
        auto b = verify_painter_strategy(g, 4, FirstFit(), o);
        CHECK(to_json(a) == to_json(b));
        CHECK(a.games == 50);
    }

    TEST_CASE("Drawer strategy verification")
    {
        PrecoloredGraph p4(path_graph(4)), k3(complete_graph(3));
        auto r = verify_drawer_strategy(p4, 2, P4Drawer());
        CHECK(r.forcing);
        CHECK(r.complete);

        auto order = verify_drawer_strategy(k3, 3, OrderDrawer({0, 1, 2}));
        CHECK(! order.forcing);
        REQUIRE(order.escape);
        CHECK(order.escape->colours_used == 3);
    }

    TEST_CASE("matches")
    {
        PrecoloredGraph p4(path_graph(4)), k3(complete_graph(3));
        P4Drawer d;
        FirstFit ff;
        auto t = play_match(p4, d, ff);
        CHECK(t.colours_used == 3);
        std::vector<Color> seen;
        for (auto & r : t.rounds)
            seen.push_back(r.colour);
        CHECK(seen == std::vector<Color>{0, 0, 1, 2});

        OrderDrawer o({2, 0, 1});
        FirstFit ff2;
        CHECK(play_match(k3, o, ff2).colours_used == 3);
    }

    TEST_CASE("illegal moves name the round")
    {
        struct Liar : DrawerStrategy
        {
            auto name() const -> std::string override { return "liar"; }
            auto move(const GameState & state, const PrecoloredGraph &) -> DrawerMove override
            {
                // Claims a vertex adjacent to nothing, which K3 cannot provide after one vertex.
                return DrawerMove{state.empty_set(), std::nullopt};
            }
            auto clone() const -> std::unique_ptr<DrawerStrategy> override { return std::make_unique<Liar>(*this); }
        };
        PrecoloredGraph k3(complete_graph(3));
        Liar liar;
        FirstFit ff;
        try {
            play_match(k3, liar, ff);
            FAIL("expected a protocol error");
        }
        catch (const ProtocolError & e) {
            CHECK(e.round() == 2);
        }

        struct Cheat : PainterStrategy
        {
            auto name() const -> std::string override { return "cheat"; }
            auto colour(const GameState &, const PrecoloredGraph &, const Bitset &, std::size_t) -> Color override { return 0; }
            auto clone() const -> std::unique_ptr<PainterStrategy> override { return std::make_unique<Cheat>(*this); }
        };
        OrderDrawer o({0, 1, 2});
        Cheat cheat;
        CHECK_THROWS_AS(play_match(k3, o, cheat), ProtocolError);
    }

    TEST_CASE("node graph case split")
    {
        // A single node: Painter's answer decides whether the second vertex is p2 or p3.
        PrecoloredGraph node(node_graph(1));
        NodeDrawer d(node_graph_triples(1));
        FirstFit ff;
        auto t = play_match(node, d, ff);
        CHECK(t.colours_used == 2);
        // FirstFit repeats colour 0 on q, so q is p3 and p2 arrives last with a new colour.
        std::vector<Color> seen;
        for (auto & r : t.rounds)
            seen.push_back(r.colour);
        CHECK(seen == std::vector<Color>{0, 0, 1});
    }
}

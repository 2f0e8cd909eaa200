// Acceptance run: one line per criterion, exit status 1 if any fails.

#include "oracles.hh"

#include <ochrom/errors.hh>
#include <ochrom/graph.hh>
#include <ochrom/harness.hh>
#include <ochrom/qdnf.hh>
#include <ochrom/reduction.hh>
#include <ochrom/solver.hh>
#include <ochrom/strategies.hh>

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

using namespace ochrom;

namespace
{
    using Clock = std::chrono::steady_clock;

    auto seconds_since(Clock::time_point t) -> double
    {
        return std::chrono::duration<double>(Clock::now() - t).count();
    }

    struct Result
    {
        bool pass = true;
        std::string detail;
    };

    auto chi_o(const PrecoloredGraph & g) -> std::size_t
    {
        return online_chromatic_number(g).value;
    }

    auto criterion_1() -> Result
    {
        auto start = Clock::now();
        PrecoloredGraph p4(path_graph(4));
        auto online = chi_o(p4);
        auto t = seconds_since(start);
        auto offline = chromatic_number(p4.graph);
        std::ostringstream s;
        s << "chi_online(P4) = " << online << ", chi(P4) = " << offline << ", " << t << " s";
        return {online == 3 && offline == 2 && t < 1.0, s.str()};
    }

    auto criterion_2() -> Result
    {
        auto start = Clock::now();
        bool ok = true;
        std::ostringstream s;
        for (std::size_t k = 0 ; k <= 3 ; ++k) {
            auto b = binomial_tree(k);
            auto v = chi_o(PrecoloredGraph(b));
            ok = ok && v == k + 1 && b.size() == (std::size_t{1} << k);
            s << "B" << k << " = " << v << ", ";
        }
        auto t = seconds_since(start);
        s << t << " s";
        return {ok && t < 600.0, s.str()};
    }

    auto criterion_3() -> Result
    {
        std::size_t checks = 0, disagreements = 0;
        for (std::size_t n = 0 ; n <= 5 ; ++n)
            for (auto & g : oracle::isomorphism_classes(n))
                for (std::size_t k = 0 ; k <= n ; ++k) {
                    bool naive = oracle::NaiveSolver(g, k).painter_wins();
                    bool solver = painter_wins(PrecoloredGraph(g), k).outcome.winner == Winner::painter;
                    ++checks;
                    disagreements += naive != solver;
                }
        std::ostringstream s;
        s << checks << " (class, k) decisions, " << disagreements << " disagreements";
        return {disagreements == 0, s.str()};
    }

    auto criterion_4() -> Result
    {
        std::mt19937_64 rng(2024);
        std::size_t violations = 0;
        for (int i = 0 ; i < 100 ; ++i) {
            auto n = 1 + rng() % 6;
            auto g = oracle::random_graph(n, 0.5, rng);
            auto online = chi_o(PrecoloredGraph(g));
            auto offline = oracle::chromatic_number(g);
            violations += ! (offline <= online && online <= n);
        }
        return {violations == 0, "100 graphs, " + std::to_string(violations) + " violations"};
    }

    auto criterion_5() -> Result
    {
        std::mt19937_64 rng(77);
        std::size_t changed = 0;
        for (int i = 0 ; i < 10 ; ++i) {
            auto g = oracle::random_graph(4 + i % 4, 0.5, rng);
            auto base = chi_o(PrecoloredGraph(g));
            std::vector<Vertex> perm(g.size());
            std::iota(perm.begin(), perm.end(), 0);
            for (int j = 0 ; j < 20 ; ++j) {
                std::shuffle(perm.begin(), perm.end(), rng);
                changed += chi_o(PrecoloredGraph(g.permuted(perm))) != base;
            }
        }
        return {changed == 0, "10 graphs x 20 permutations, " + std::to_string(changed) + " changes"};
    }

    /// Every formula over x1..xv (v ≤ 4, ids in prefix order) with every quantifier pattern and
    /// every multiset of one to three clauses, each clause a multiset of three literals.
    /// Literal order within a clause and clause order are immaterial, so this covers the
    /// formulas with at most 4 variables and 3 clauses up to those symmetries and renaming.
    auto criterion_6() -> Result
    {
        std::size_t formulas = 0, disagreements = 0;
        for (int v = 1 ; v <= 4 ; ++v) {
            std::vector<Literal> literals;
            for (int x = 1 ; x <= v ; ++x) {
                literals.push_back({x, true});
                literals.push_back({x, false});
            }
            std::vector<Clause> clauses;
            auto l = literals.size();
            for (std::size_t a = 0 ; a < l ; ++a)
                for (std::size_t b = a ; b < l ; ++b)
                    for (std::size_t c = b ; c < l ; ++c)
                        clauses.push_back({literals[a], literals[b], literals[c]});
            auto q = clauses.size();
            for (unsigned pattern = 0 ; pattern < (1u << v) ; ++pattern) {
                QdnfFormula f;
                for (int x = 1 ; x <= v ; ++x)
                    f.prefix.push_back({x, (pattern >> (x - 1)) & 1 ? Quantifier::forall : Quantifier::exists});
                auto check = [&] {
                    ++formulas;
                    disagreements += evaluate_qdnf(f) != oracle::evaluate(f);
                };
                for (std::size_t a = 0 ; a < q ; ++a) {
                    f.clauses = {clauses[a]};
                    check();
                    for (std::size_t b = a ; b < q ; ++b) {
                        f.clauses = {clauses[a], clauses[b]};
                        check();
                        for (std::size_t c = b ; c < q ; ++c) {
                            f.clauses = {clauses[a], clauses[b], clauses[c]};
                            check();
                        }
                    }
                }
            }
        }
        return {disagreements == 0, std::to_string(formulas) + " formulas, " + std::to_string(disagreements) + " disagreements"};
    }

    auto criterion_7() -> Result
    {
        const std::vector<std::string> suite = {
            "E x1 : (x1 & x1 & x1)",
            "A x1 : (x1 & x1 & x1)",
            "E x1 E x2 : (x1 & ~x2 & x2)",
            "A x1 E x2 : (x1 & x2 & x2) | (~x1 & ~x2 & ~x2)",
            "E x1 A x2 : (x1 & x1 & x1) | (x2 & ~x2 & x1)",
            "E x1 E x2 E x3 : (x1 & x2 & x3)",
            "A x1 A x2 A x3 : (x1 & x2 & x3)",
            "A x1 E x2 A x3 : (x1 & x2 & x3) | (~x1 & ~x3 & x2)",
            "E x1 A x2 E x3 A x4 : (x1 & x2 & x3) | (~x2 & x4 & x1) | (x3 & ~x4 & ~x1)",
            "A x1 A x2 E x3 E x4 : (x1 & x3 & x4) | (~x1 & ~x2 & x3) | (x2 & ~x3 & ~x4)",
        };
        bool k_ok = true, g1_ok = true, p_ok = true, kp_ok = true, s_ok = true, bound_ok = true;
        std::size_t g1_off = 0;
        for (auto & text : suite) {
            auto f = parse_qdnf(text);
            std::size_t fa = f.count(Quantifier::forall), ex = f.count(Quantifier::exists), m = f.clauses.size();
            auto g1 = build_g1(f);
            auto k = 2 * m + 2 * fa + 3 * ex;
            k_ok = k_ok && g1.k == k;
            if (g1.vertex_count() != k + 2 * fa + 3 * ex + 4 * m) {
                g1_ok = false;
                g1_off = g1.vertex_count() - (k + 2 * fa + 3 * ex + 4 * m);
            }
            auto n = g1.vertex_count();
            auto g2 = build_g2(f);
            // ⌈log2 N⌉ by doubling, independent of the library's bit arithmetic.
            std::size_t p = 0;
            while ((std::size_t{1} << p) < n)
                ++p;
            p_ok = p_ok && g2.stats.precolored == p;
            kp_ok = kp_ok && g2.k == 2 * n + g1.k;

            auto g3 = build_g3(f);
            std::uint64_t before = g2.vertex_count();
            std::uint64_t free = g2.vertex_count() - g2.precolored_vertices().size();
            for (auto & r : g3.stats.removals) {
                s_ok = s_ok && r.n == free && r.s == 8 * r.n;
                bound_ok = bound_ok && r.vertices_before == before && r.vertices_after <= 25 * before;
                before = r.vertices_after;
                free += 3 * r.s;
            }
            s_ok = s_ok && g3.stats.removals.size() == g2.precolored_vertices().size();
        }
        std::ostringstream s;
        auto mark = [] (bool b) { return b ? "ok" : "FAIL"; };
        s << "k " << mark(k_ok) << ", |V(G1)| = k+2n_A+3n_E+4m " << mark(g1_ok);
        if (! g1_ok)
            s << " (built graphs have " << g1_off << " more: the final vertex F)";
        s << ", p " << mark(p_ok) << ", k' " << mark(kp_ok) << ", S = 8N " << mark(s_ok) << ", |V(G')| <= 25|V(G)| " << mark(bound_ok);
        return {k_ok && g1_ok && p_ok && kp_ok && s_ok && bound_ok, s.str()};
    }

    auto criterion_8() -> Result
    {
        bool ok = true;
        std::ostringstream s;
        for (auto & text : {"A x1 : (x1 & x1 & x1)", "A x1 A x2 : (x1 & x2 & x2)"}) {
            auto start = Clock::now();
            auto f = parse_qdnf(text);
            auto out = build_g1(f);
            auto r = verify_drawer_strategy(out.materialize(), out.k, DrawerG1(f));
            auto t = seconds_since(start);
            ok = ok && r.complete && r.forcing && t < 600.0;
            s << "[" << text << "] k = " << out.k << (r.forcing ? " forced" : " escaped")
              << (r.complete ? "" : " (incomplete)") << " over " << r.games << " games, " << t << " s; ";
        }
        return {ok, s.str()};
    }

    auto criterion_9() -> Result
    {
        bool ok = true;
        std::ostringstream s;
        for (auto & text : {"E x1 : (x1 & x1 & x1)", "E x1 E x2 : (x1 & x2 & x2)"}) {
            auto f = parse_qdnf(text);
            auto out = build_g1(f);
            auto g = out.materialize();
            VerifyOptions exhaustive;
            exhaustive.node_budget = 1'000'000;
            auto r = verify_painter_strategy(g, out.k, PainterG1(f), exhaustive);
            if (! r.complete) {
                ok = ok && r.ok();
                s << "[" << text << "] exhaustive stopped at " << r.nodes << " nodes after " << r.games << " clean games; ";
                VerifyOptions o;
                o.mode = VerifyOptions::Mode::sampled;
                o.trials = 10'000;
                o.seed = 1;
                r = verify_painter_strategy(g, out.k, PainterG1(f), o);
            }
            ok = ok && r.ok() && r.max_colours <= out.k;
            s << "[" << text << "] " << r.mode << " " << r.games << " games, max " << r.max_colours << " <= k = " << out.k << "; ";
        }
        return {ok, s.str()};
    }

    auto criterion_10() -> Result
    {
        bool ok = true;
        std::ostringstream s;
        std::size_t over = 0;
        for (std::size_t m = 1 ; m <= 4 ; ++m) {
            PrecoloredGraph g(node_graph(m));
            auto triples = node_graph_triples(m);
            NodeDrawer d(triples);
            FirstFit ff;
            GameState state(g);
            std::vector<Vertex> placed;
            while (! game_over(state, g)) {
                auto move = d.move(state, g);
                auto c = ff.colour(state, g, move.neighbourhood, g.size());
                state.add(move.neighbourhood, c);
                placed = *move.witness;
            }
            std::vector<Color> colour_of(g.size());
            for (std::size_t i = 0 ; i < placed.size() ; ++i)
                colour_of[placed[i]] = state.colour(Vertex(i));
            bool bichromatic = true;
            for (auto & t : triples)
                bichromatic = bichromatic && colour_of[t.p1] != colour_of[t.p2];
            ok = ok && state.used_colours() == 2 * m && bichromatic;
            s << "m=" << m << ": " << state.used_colours() << " colours" << (bichromatic ? "" : " (monochromatic p1p2)") << ", ";

            for (std::uint64_t seed = 0 ; seed < 1000 ; ++seed) {
                auto order = random_order(g, seed);
                OrderDrawer od(order);
                FirstFit f2;
                auto tr = play_match(g, od, f2);
                std::vector<Color> by_vertex(g.size());
                for (std::size_t i = 0 ; i < order.size() ; ++i)
                    by_vertex[order[i]] = tr.rounds[i].colour;
                for (auto & t : triples)
                    over += std::set<Color>{by_vertex[t.p1], by_vertex[t.p2], by_vertex[t.p3]}.size() > 2;
            }
        }
        s << over << " nodes over two colours in 4 x 1000 random orders";
        return {ok && over == 0, s.str()};
    }

    auto criterion_11() -> Result
    {
        // Six free vertices and one precoloured v_p with both neighbours and non-neighbours, so N = 6 and S = 48.
        std::mt19937_64 rng(11);
        Graph g(7);
        auto d_has_non_edge = [&] {
            for (Vertex a = 0 ; a < 6 ; ++a)
                for (Vertex b = a + 1 ; b < 6 ; ++b)
                    if (! g.adjacent(a, 6) && ! g.adjacent(b, 6) && ! g.adjacent(a, b))
                        return true;
            return false;
        };
        // v_p needs a neighbour, and two nonadjacent non-neighbours so that Painter can spot D.
        while (true) {
            g = oracle::random_graph(7, 0.5, rng);
            if (g.degree(6) > 0 && d_has_non_edge())
                break;
        }
        std::vector<std::optional<Color>> pc(7);
        pc[6] = 0;
        auto original = std::make_shared<const PrecoloredGraph>(g, pc);
        auto before = wrap_graph(*original, 7);
        auto after = remove_precolored_vertex(before, 6);
        auto layout = supernode_layout(before, 6);
        auto host = after.materialize();

        std::size_t violations = 0, missing = 0, started = 0;
        for (std::uint64_t seed = 0 ; seed < 100 ; ++seed) {
            auto order = random_order(host, seed);
            OrderDrawer d(order);
            PainterGPrime p(original, layout, std::make_unique<FirstFit>());
            GameState s(host);
            while (! game_over(s, host)) {
                auto m = d.move(s, host);
                auto c = p.colour(s, host, m.neighbourhood, host.size());
                s.add(m.neighbourhood, c);
                violations += ! p.ledger().disjoint();
            }
            started += p.simulating();
            for (auto c : p.ledger().c) {
                bool found = false;
                for (std::size_t i = 0 ; i < order.size() ; ++i)
                    found = found || (layout.in_supernode(order[i]) && s.colour(s.anchors() + Vertex(i)) == c);
                missing += ! found;
            }
        }
        std::ostringstream s;
        s << "N = " << layout.n << ", S = " << layout.s << ", 100 orders (" << started << " reached the simulation), "
          << violations << " overlapping rounds, " << missing << " colours of C off the supernode";
        return {layout.s == 48 && started > 0 && violations == 0 && missing == 0, s.str()};
    }
}

auto main() -> int
{
    const std::vector<std::function<Result ()>> criteria = {
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
        criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
    };
    int failures = 0;
    for (std::size_t i = 0 ; i < criteria.size() ; ++i) {
        Result r;
        auto start = Clock::now();
        try {
            r = criteria[i]();
        }
        catch (const std::exception & e) {
            r = {false, std::string("exception: ") + e.what()};
        }
        std::printf("criterion %zu: %s %s [%.1f s]\n", i + 1, r.pass ? "PASS" : "FAIL", r.detail.c_str(), seconds_since(start));
        std::fflush(stdout);
        failures += ! r.pass;
    }
    return failures ? 1 : 0;
}

// Command-line front end: solve, chromatic, reduce, eval, verify, play.
//
// Exit status: 0 ok, 1 property violation, 2 usage or malformed input, 3 budget overflow.

#include <ochrom/errors.hh>
#include <ochrom/graph.hh>
#include <ochrom/harness.hh>
#include <ochrom/qdnf.hh>
#include <ochrom/reduction.hh>
#include <ochrom/solver.hh>
#include <ochrom/strategies.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace ochrom;

namespace
{
    enum Status { ok = 0, violation = 1, usage = 2, overflow = 3 };

    class UsageError : public std::runtime_error
    {
        public:
            using std::runtime_error::runtime_error;
    };

    auto slurp(const std::string & path) -> std::string
    {
        if (path == "-") {
            std::ostringstream s;
            s << std::cin.rdbuf();
            return s.str();
        }
        std::ifstream in(path);
        if (! in)
            throw UsageError("cannot read " + path);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    auto write_file(const std::string & path, const std::string & text) -> void
    {
        std::ofstream out(path);
        if (! (out << text))
            throw UsageError("cannot write " + path);
    }

    auto load_graph(const std::string & path) -> PrecoloredGraph
    {
        try {
            auto g = parse_graph(slurp(path));
            g.validate_dense();
            return g;
        }
        catch (const ParseError & e) {
            throw UsageError(path + ": " + e.what());
        }
    }

    auto load_formula(const std::string & path) -> QdnfFormula
    {
        try {
            return parse_qdnf(slurp(path));
        }
        catch (const ParseError & e) {
            throw UsageError(path + ": " + e.what());
        }
    }

    /// Number of distinct precolours, which the dense precolouring makes the budget floor.
    auto precolour_count(const PrecoloredGraph & g) -> std::size_t
    {
        std::size_t k = 0;
        for (auto & c : g.precolor)
            if (c)
                k = std::max(k, std::size_t(*c) + 1);
        return k;
    }

    auto stats_line(const SolveStats & s) -> std::string
    {
        std::ostringstream out;
        out << "nodes = " << s.nodes << ", table hits = " << s.hits << ", table peak = " << s.table_peak;
        return out.str();
    }

    auto mask_of(const GameState & s, const Bitset & n) -> std::string
    {
        std::string m;
        for (Vertex v = 0 ; v < s.size() ; ++v)
            m += n.test(v) ? '1' : '0';
        return m.empty() ? "-" : m;
    }

    struct Options
    {
        std::uint64_t seed = 0;
        std::size_t jobs = 1;
        std::size_t node_budget = 5'000'000;
        std::string output;

        std::string input;
        std::optional<std::size_t> k;
        std::string stage = "g1";
        std::optional<std::uint64_t> remove_vertex;

        std::string host, formula, original, inner, painter, drawer, as, opponent;
        std::optional<std::uint64_t> removed;
        std::optional<std::size_t> budget, samples;
        bool exhaustive = false;
    };

    auto emit(const Options & o, const std::string & text) -> void
    {
        if (o.output.empty())
            std::cout << text;
        else
            write_file(o.output, text);
    }

    auto run_solve(const Options & o) -> int
    {
        auto g = load_graph(o.input);
        SolveOptions so;
        so.jobs = o.jobs;
        std::ostringstream out;
        if (o.k) {
            auto r = painter_wins(g, *o.k, so);
            out << (r.outcome.winner == Winner::painter ? "painter" : "drawer") << " wins with k = " << *o.k << "\n"
                << stats_line(r.stats) << "\n";
        }
        else {
            auto r = online_chromatic_number(g, so);
            out << "chi_online = " << r.value << "\n" << stats_line(r.stats) << "\n";
        }
        emit(o, out.str());
        return ok;
    }

    auto run_chromatic(const Options & o) -> int
    {
        auto g = load_graph(o.input);
        emit(o, "chi = " + std::to_string(chromatic_number(g.graph)) + "\n");
        return ok;
    }

    auto run_eval(const Options & o) -> int
    {
        emit(o, evaluate_qdnf(load_formula(o.input)) ? "true\n" : "false\n");
        return ok;
    }

    auto run_reduce(const Options & o) -> int
    {
        ReductionOutput out;
        if (o.remove_vertex) {
            auto g = load_graph(o.input);
            out = remove_precolored_vertex(wrap_graph(g, precolour_count(g)), *o.remove_vertex);
        }
        else {
            auto f = load_formula(o.input);
            if (o.stage == "g1")
                out = build_g1(f);
            else if (o.stage == "g2")
                out = build_g2(f);
            else if (o.stage == "g3")
                out = build_g3(f);
            else
                throw UsageError("--stage must be g1, g2 or g3");
        }

        auto summary = "k = " + std::to_string(out.k) + "\nvertices = " + std::to_string(out.vertex_count()) + "\n";
        auto sidecar = sidecar_json(out);
        if (! o.output.empty())
            write_file(o.output + ".roles.json", sidecar + "\n");
        std::string text;
        try {
            text = format_graph(out.materialize());
        }
        catch (const RefusalError & e) {
            std::cout << summary;
            std::cerr << "graph not written: " << e.what() << "\n";
            return overflow;
        }
        if (o.output.empty()) {
            std::cout << text;
            std::cerr << summary;
        }
        else {
            write_file(o.output, text);
            std::cout << summary;
        }
        return ok;
    }

    auto context_of(const Options & o, std::shared_ptr<const PrecoloredGraph> host) -> StrategyContext
    {
        StrategyContext c;
        c.host = std::move(host);
        c.seed = o.seed;
        c.inner = o.inner;
        if (! o.formula.empty()) {
            c.formula = load_formula(o.formula);
            c.stage = o.stage;
        }
        if (! o.original.empty()) {
            if (! o.removed)
                throw UsageError("--original needs --removed");
            auto g = std::make_shared<const PrecoloredGraph>(load_graph(o.original));
            c.original = g;
            c.supernode = supernode_layout(wrap_graph(*g, precolour_count(*g)), *o.removed);
            c.stage = "gprime";
        }
        return c;
    }

    auto run_verify(const Options & o) -> int
    {
        if (o.host.empty() || ! o.budget)
            throw UsageError("verify needs --host and --budget");
        if (o.painter.empty() == o.drawer.empty())
            throw UsageError("verify needs exactly one of --painter and --drawer");
        auto host = std::make_shared<const PrecoloredGraph>(load_graph(o.host));
        auto context = context_of(o, host);

        if (! o.painter.empty()) {
            VerifyOptions v;
            v.seed = o.seed;
            v.node_budget = o.node_budget;
            if (o.samples && ! o.exhaustive) {
                v.mode = VerifyOptions::Mode::sampled;
                v.trials = *o.samples;
            }
            auto painter = make_painter(o.painter, context);
            auto r = verify_painter_strategy(*host, *o.budget, *painter, v);
            emit(o, to_json(r) + "\n");
            if (! r.ok())
                return violation;
            return r.complete ? ok : overflow;
        }
        if (o.samples && ! o.exhaustive)
            throw UsageError("Drawer verification is exhaustive only");
        auto drawer = make_drawer(o.drawer, context);
        auto r = verify_drawer_strategy(*host, *o.budget, *drawer, o.node_budget);
        emit(o, to_json(r) + "\n");
        if (r.escape)
            return violation;
        return r.complete ? ok : overflow;
    }

    auto choose(std::size_t count) -> std::size_t
    {
        while (true) {
            std::cout << "> " << std::flush;
            std::string line;
            if (! std::getline(std::cin, line))
                throw UsageError("input ended before the game did");
            try {
                std::size_t used = 0;
                auto pick = std::stoul(line, &used);
                if (used == line.size() && pick < count)
                    return pick;
            }
            catch (const std::logic_error &) {
            }
            std::cout << "enter a number from 0 to " << count - 1 << "\n";
        }
    }

    auto run_play(const Options & o) -> int
    {
        if (o.host.empty() || o.opponent.empty())
            throw UsageError("play needs --host and --opponent");
        if (o.as != "painter" && o.as != "drawer")
            throw UsageError("--as must be painter or drawer");
        auto host = std::make_shared<const PrecoloredGraph>(load_graph(o.host));
        auto budget = o.budget.value_or(host->size());
        auto context = context_of(o, host);

        std::unique_ptr<DrawerStrategy> drawer;
        std::unique_ptr<PainterStrategy> painter;
        if (o.as == "painter")
            drawer = make_drawer(o.opponent, context);
        else
            painter = make_painter(o.opponent, context);

        GameState s(*host);
        for (std::size_t round = 1 ; ! game_over(s, *host) ; ++round) {
            Bitset n;
            if (drawer) {
                auto m = drawer->move(s, *host);
                check_drawer_move(s, *host, m, round);
                n = m.neighbourhood;
                std::cout << "round " << round << ": Drawer presents a vertex with neighbourhood " << mask_of(s, n) << "\n";
                auto colours = legal_painter_colors(s, n, budget);
                if (colours.empty()) {
                    std::cout << "no colour within the budget of " << budget << " is left: Drawer wins\n";
                    return ok;
                }
                for (std::size_t i = 0 ; i < colours.size() ; ++i)
                    std::cout << "  " << i << ": colour " << colours[i].colour << "\n";
                s.add(n, colours[choose(colours.size())].colour);
            }
            else {
                auto moves = legal_drawer_moves(s, *host);
                std::cout << "round " << round << ": choose the neighbourhood of the next vertex\n";
                for (std::size_t i = 0 ; i < moves.size() ; ++i)
                    std::cout << "  " << i << ": " << mask_of(s, moves[i].neighbourhood) << "\n";
                n = moves[choose(moves.size())].neighbourhood;
                auto c = painter->colour(s, *host, n, budget);
                if (! proper_colour(s, n, c))
                    throw ProtocolError(painter->name() + " answered with an improper colour", round);
                std::cout << painter->name() << " colours it " << c << "\n";
                if (std::size_t(c) >= budget) {
                    std::cout << "Painter exceeded the budget of " << budget << ": Drawer wins\n";
                    return ok;
                }
                s.add(n, c);
            }
        }
        std::cout << "game over: " << s.used_colours() << " colours used, Painter wins within " << budget << "\n";
        return ok;
    }
}

auto main(int argc, char ** argv) -> int
{
    CLI::App app{"Online colouring games on precoloured graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--seed", o.seed, "Seed for sampled runs")->capture_default_str();
    app.add_option("--jobs", o.jobs, "Solver threads")->capture_default_str();
    app.add_option("--node-budget", o.node_budget, "Game-tree nodes before verification gives up")->capture_default_str();
    app.add_option("-o,--output", o.output, "Write the result here instead of stdout");

    auto solve = app.add_subcommand("solve", "Online chromatic number, or the game value for --k");
    solve->add_option("graph", o.input)->required();
    solve->add_option("--k", o.k, "Decide the game with this many colours");

    auto chromatic = app.add_subcommand("chromatic", "Chromatic number");
    chromatic->add_option("graph", o.input)->required();

    auto reduce = app.add_subcommand("reduce", "Build a reduction graph and its role sidecar");
    reduce->add_option("input", o.input, "Formula, or a graph with --remove")->required();
    reduce->add_option("--stage", o.stage, "g1, g2 or g3")->capture_default_str();
    reduce->add_option("--remove", o.remove_vertex, "Replace this precoloured vertex of a graph by a supernode");

    auto eval = app.add_subcommand("eval", "Truth value of a formula");
    eval->add_option("formula", o.input)->required();

    auto strategy_options = [&] (CLI::App * cmd) {
        cmd->add_option("--host", o.host, "Host graph")->required();
        cmd->add_option("--budget", o.budget, "Colour budget");
        cmd->add_option("--formula", o.formula, "Formula the host was built from");
        cmd->add_option("--stage", o.stage, "Construction stage of the host (g1, g2)");
        cmd->add_option("--original", o.original, "Graph before the precoloured vertex was removed");
        cmd->add_option("--removed", o.removed, "The removed vertex, numbered in --original");
        cmd->add_option("--inner", o.inner, "Strategy for the pre-removal graph");
    };

    auto verify = app.add_subcommand("verify", "Check a strategy against every opponent, or sampled ones");
    strategy_options(verify);
    auto painter_opt = verify->add_option("--painter", o.painter, "Painter strategy");
    verify->add_option("--drawer", o.drawer, "Drawer strategy")->excludes(painter_opt);
    auto exhaustive = verify->add_flag("--exhaustive", o.exhaustive, "Search every game (default)");
    verify->add_option("--samples", o.samples, "Random presentation orders instead")->excludes(exhaustive);

    auto play = app.add_subcommand("play", "Play one game at the terminal");
    strategy_options(play);
    play->add_option("--as", o.as, "painter or drawer")->required();
    play->add_option("--opponent", o.opponent, "Strategy for the other side")->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        auto code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*solve)
            return run_solve(o);
        if (*chromatic)
            return run_chromatic(o);
        if (*reduce)
            return run_reduce(o);
        if (*eval)
            return run_eval(o);
        if (*verify)
            return run_verify(o);
        if (*play)
            return run_play(o);
    }
    catch (const RefusalError & e) {
        std::cerr << "refused: " << e.what() << "\n";
        return overflow;
    }
    catch (const ProtocolError & e) {
        std::cerr << "illegal move: " << e.what() << "\n";
        return violation;
    }
    catch (const ParseError & e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return usage;
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

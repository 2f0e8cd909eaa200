#include <ochrom/harness.hh>
#include <ochrom/errors.hh>

#include <json.hpp>

#include <random>

namespace ochrom
{
    OrderDrawer::OrderDrawer(std::vector<Vertex> order, std::string name) : _order(std::move(order)), _name(std::move(name))
    {
    }

    auto OrderDrawer::move(const GameState & state, const PrecoloredGraph & host) -> DrawerMove
    {
        auto next = state.revealed_count();
        if (next >= _order.size())
            throw ProtocolError("presentation order exhausted", next + 1);
        Embedding witness;
        for (Vertex s = 0 ; s < state.anchors() ; ++s)
            witness.push_back(state.anchor_host(s));
        for (std::size_t i = 0 ; i <= next ; ++i)
            witness.push_back(_order[i]);
        auto v = _order[next];
        auto n = state.empty_set();
        for (Vertex s = 0 ; s < state.size() ; ++s)
            if (host.graph.adjacent(v, witness[s]))
                n.set(s);
        return DrawerMove{n, witness};
    }

    auto random_order(const PrecoloredGraph & host, std::uint64_t seed) -> std::vector<Vertex>
    {
        auto order = host.free_vertices();
        std::mt19937_64 rng(seed);
        for (std::size_t i = order.size() ; i > 1 ; --i)
            std::swap(order[i - 1], order[rng() % i]);
        return order;
    }

    namespace
    {
        auto check_colour(const GameState & state, const Bitset & n, Color c, std::size_t round, const std::string & who) -> void
        {
            if (! proper_colour(state, n, c))
                throw ProtocolError(who + " chose colour " + std::to_string(c) + ", which is not proper or not the next fresh colour", round);
        }

        struct PainterSearch
        {
            const PrecoloredGraph & host;
            std::size_t budget;
            const VerifyOptions & options;
            const RoundCheck & check;
            PainterReport & report;
            Transcript path;

            auto run(const GameState & state, const PainterStrategy & painter) -> bool
            {
                if (game_over(state, host)) {
                    ++report.games;
                    return true;
                }
                if (report.nodes >= options.node_budget) {
                    report.complete = false;
                    return false;
                }
                ++report.nodes;
                for (auto & m : legal_drawer_moves(state, host)) {
                    auto p = painter.clone();
                    auto c = p->colour(state, host, m.neighbourhood, budget);
                    check_colour(state, m.neighbourhood, c, path.rounds.size() + 1, p->name());
                    auto child = state;
                    child.add(m.neighbourhood, c);
                    path.rounds.push_back(Round{m.neighbourhood, state.size(), c, std::size_t(child.used_colours())});
                    report.max_colours = std::max<std::size_t>(report.max_colours, child.used_colours());
                    if (std::size_t(child.used_colours()) > budget) {
                        path.colours_used = child.used_colours();
                        report.witness = path;
                        return false;
                    }
                    if (check)
                        if (auto msg = check(child, *p)) {
                            report.violation = *msg;
                            path.colours_used = child.used_colours();
                            report.witness = path;
                            return false;
                        }
                    bool go_on = run(child, *p);
                    path.rounds.pop_back();
                    if (! go_on)
                        return false;
                }
                return true;
            }
        };
    }

    auto verify_painter_strategy(const PrecoloredGraph & host, std::size_t budget, const PainterStrategy & painter,
            const VerifyOptions & options, const RoundCheck & check) -> PainterReport
    {
        PainterReport report;
        report.strategy = painter.name();
        report.budget = budget;
        GameState start(host);
        report.max_colours = start.used_colours();

        if (options.mode == VerifyOptions::Mode::exhaustive) {
            report.mode = "exhaustive";
            PainterSearch search{host, budget, options, check, report, {}};
            search.run(start, painter);
            return report;
        }

        report.mode = "sampled";
        std::mt19937_64 seeds(options.seed);
        for (std::size_t t = 0 ; t < options.trials ; ++t) {
            OrderDrawer drawer(random_order(host, seeds()));
            auto p = painter.clone();
            GameState state = start;
            Transcript transcript;
            while (! game_over(state, host)) {
                auto m = drawer.move(state, host);
                auto c = p->colour(state, host, m.neighbourhood, budget);
                check_colour(state, m.neighbourhood, c, transcript.rounds.size() + 1, p->name());
                transcript.rounds.push_back(Round{m.neighbourhood, state.size(), c, 0});
                state.add(m.neighbourhood, c);
                transcript.rounds.back().colours_used = state.used_colours();
                ++report.nodes;
                if (check && ! report.violation)
                    if (auto msg = check(state, *p)) {
                        report.violation = *msg;
                        transcript.colours_used = state.used_colours();
                        report.witness = transcript;
                    }
            }
            ++report.games;
            transcript.colours_used = state.used_colours();
            report.max_colours = std::max<std::size_t>(report.max_colours, state.used_colours());
            if (std::size_t(state.used_colours()) > budget && ! report.witness)
                report.witness = transcript;
        }
        return report;
    }

    namespace
    {
        struct DrawerSearch
        {
            const PrecoloredGraph & host;
            std::size_t budget;
            std::size_t node_budget;
            DrawerReport & report;
            Transcript path;

            // False once an escape is found or the budget runs out.
            auto run(const GameState & state, DrawerStrategy & drawer) -> bool
            {
                if (game_over(state, host)) {
                    ++report.games;
                    path.colours_used = state.used_colours();
                    report.escape = path;
                    return false;
                }
                if (report.nodes >= node_budget) {
                    report.complete = false;
                    return false;
                }
                ++report.nodes;
                auto round = path.rounds.size() + 1;
                auto m = drawer.move(state, host);
                check_drawer_move(state, host, m, round);
                auto colours = legal_painter_colors(state, m.neighbourhood, budget);
                if (colours.empty()) {
                    ++report.games;
                    return true;
                }
                for (auto c : colours) {
                    auto d = drawer.clone();
                    auto child = state;
                    child.add(m.neighbourhood, c.colour);
                    path.rounds.push_back(Round{m.neighbourhood, state.size(), c.colour, std::size_t(child.used_colours())});
                    bool go_on = run(child, *d);
                    path.rounds.pop_back();
                    if (! go_on)
                        return false;
                }
                return true;
            }
        };
    }

    auto verify_drawer_strategy(const PrecoloredGraph & host, std::size_t budget, const DrawerStrategy & drawer,
            std::size_t node_budget) -> DrawerReport
    {
        DrawerReport report;
        report.strategy = drawer.name();
        report.budget = budget;
        GameState start(host);
        if (std::size_t(start.used_colours()) > budget) {
            report.forcing = true;
            return report;
        }
        DrawerSearch search{host, budget, node_budget, report, {}};
        auto d = drawer.clone();
        bool all = search.run(start, *d);
        report.forcing = all && report.complete;
        return report;
    }

    auto play_match(const PrecoloredGraph & host, DrawerStrategy & drawer, PainterStrategy & painter, std::size_t budget) -> Transcript
    {
        GameState state(host);
        Transcript t;
        while (! game_over(state, host)) {
            auto round = t.rounds.size() + 1;
            auto m = drawer.move(state, host);
            check_drawer_move(state, host, m, round);
            auto c = painter.colour(state, host, m.neighbourhood, budget);
            check_colour(state, m.neighbourhood, c, round, painter.name());
            t.rounds.push_back(Round{m.neighbourhood, state.size(), c, 0});
            state.add(m.neighbourhood, c);
            t.rounds.back().colours_used = state.used_colours();
        }
        t.colours_used = state.used_colours();
        return t;
    }

    auto to_json(const PainterReport & r) -> std::string
    {
        nlohmann::json j;
        j["strategy"] = r.strategy;
        j["mode"] = r.mode;
        j["complete"] = r.complete;
        j["games"] = r.games;
        j["nodes"] = r.nodes;
        j["budget"] = r.budget;
        j["max_colors"] = r.max_colours;
        j["ok"] = r.ok();
        if (r.violation)
            j["violation"] = *r.violation;
        if (r.witness)
            j["witness"] = format_transcript(*r.witness);
        return j.dump(2) + "\n";
    }

    auto to_json(const DrawerReport & r) -> std::string
    {
        nlohmann::json j;
        j["strategy"] = r.strategy;
        j["complete"] = r.complete;
        j["games"] = r.games;
        j["nodes"] = r.nodes;
        j["budget"] = r.budget;
        j["forcing"] = r.forcing;
        if (r.escape)
            j["escape"] = format_transcript(*r.escape);
        return j.dump(2) + "\n";
    }
}

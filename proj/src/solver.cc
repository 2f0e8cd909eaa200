#include <ochrom/solver.hh>
#include <ochrom/errors.hh>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <shared_mutex>
#include <thread>
#include <unordered_map>

namespace ochrom
{
    auto to_string(Winner w) -> std::string
    {
        return w == Winner::painter ? "painter" : "drawer";
    }

    struct Solver::Impl
    {
        const PrecoloredGraph & host;
        std::size_t budget;
        SolveOptions options;

        // Grow-only: entries are never changed once written, so concurrent readers agree.
        std::unordered_map<CanonicalKey, bool, CanonicalKeyHash> table;
        mutable std::shared_mutex table_mutex;
        std::atomic<std::size_t> nodes{0}, hits{0};

        Impl(const PrecoloredGraph & h, std::size_t b, const SolveOptions & o) : host(h), budget(b), options(o) { }

        auto lookup(const CanonicalKey & key) const -> std::optional<bool>
        {
            std::shared_lock lock(table_mutex);
            auto it = table.find(key);
            if (it == table.end())
                return std::nullopt;
            return it->second;
        }

        auto store(const CanonicalKey & key, bool value) -> void
        {
            std::unique_lock lock(table_mutex);
            table.emplace(key, value);
        }

        auto drawer_to_move(const GameState & state) -> bool
        {
            if (game_over(state, host))
                return true;
            auto key = canonical_key(state);
            if (auto v = lookup(key)) {
                ++hits;
                return *v;
            }
            ++nodes;
            bool result = true;
            for (auto & n : extension_neighbourhoods(state, host))
                if (! painter_to_move(state, n)) {
                    result = false;
                    break;
                }
            store(key, result);
            return result;
        }

        auto painter_to_move(const GameState & state, const Bitset & neighbourhood) -> bool
        {
            for (auto m : legal_painter_colors(state, neighbourhood, budget))
                if (after(state, neighbourhood, m.colour))
                    return true;
            return false;
        }

        auto after(const GameState & state, const Bitset & neighbourhood, Color c) -> bool
        {
            auto child = state;
            child.add(neighbourhood, c);
            return drawer_to_move(child);
        }

        auto root(const GameState & state) -> bool
        {
            if (options.jobs <= 1 || game_over(state, host))
                return drawer_to_move(state);

            auto moves = extension_neighbourhoods(state, host);
            std::vector<char> value(moves.size(), 1);
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> workers;
            for (std::size_t w = 0 ; w < options.jobs ; ++w)
                workers.emplace_back([&] {
                    for (std::size_t i ; (i = next++) < moves.size() ; )
                        value[i] = painter_to_move(state, moves[i]);
                });
            for (auto & t : workers)
                t.join();
            bool result = std::all_of(value.begin(), value.end(), [] (char v) { return v; });
            store(canonical_key(state), result);
            return result;
        }
    };

    Solver::Solver(const PrecoloredGraph & host, std::size_t budget, const SolveOptions & options) :
        _impl(std::make_unique<Impl>(host, budget, options))
    {
        host.validate_dense();
        if (host.free_count() > options.vertex_limit)
            throw RefusalError("host has " + std::to_string(host.free_count()) + " nonprecolored vertices, solver limit is "
                    + std::to_string(options.vertex_limit));
    }

    Solver::~Solver() = default;

    auto Solver::painter_wins_from(const GameState & state) -> bool
    {
        return _impl->root(state);
    }

    auto Solver::painter_wins_after(const GameState & state, const Bitset & neighbourhood, Color c) -> bool
    {
        return _impl->after(state, neighbourhood, c);
    }

    auto Solver::stats() const -> SolveStats
    {
        std::shared_lock lock(_impl->table_mutex);
        return SolveStats{_impl->nodes, _impl->hits, _impl->table.size()};
    }

    namespace
    {
        auto principal_variation(Solver & solver, const PrecoloredGraph & host, std::size_t budget, bool painter_wins) -> Transcript
        {
            Transcript t;
            GameState state(host);
            while (! game_over(state, host)) {
                auto moves = legal_drawer_moves(state, host);
                std::optional<Bitset> chosen;
                if (painter_wins)
                    chosen = moves.front().neighbourhood;
                else
                    for (auto & m : moves) {
                        bool escape = false;
                        for (auto c : legal_painter_colors(state, m.neighbourhood, budget))
                            if (solver.painter_wins_after(state, m.neighbourhood, c.colour)) {
                                escape = true;
                                break;
                            }
                        if (! escape) {
                            chosen = m.neighbourhood;
                            break;
                        }
                    }

                auto colours = legal_painter_colors(state, *chosen, budget);
                std::optional<Color> reply;
                for (auto c : colours)
                    if (solver.painter_wins_after(state, *chosen, c.colour)) {
                        reply = c.colour;
                        break;
                    }
                if (! reply) {
                    // Painter is lost: show the first proper colour, or the colour beyond the budget.
                    reply = colours.empty() ? state.used_colours() : colours.front().colour;
                }
                Round r{*chosen, state.size(), *reply, 0};
                state.add(*chosen, *reply);
                r.colours_used = state.used_colours();
                t.rounds.push_back(r);
                if (std::size_t(state.used_colours()) > budget)
                    break;
            }
            t.colours_used = state.used_colours();
            return t;
        }
    }

    auto painter_wins(const PrecoloredGraph & host, std::size_t budget, const SolveOptions & options) -> SolveResult
    {
        Solver solver(host, budget, options);
        GameState start(host);
        SolveResult result;
        bool wins = std::size_t(start.used_colours()) <= budget && solver.painter_wins_from(start);
        result.outcome.winner = wins ? Winner::painter : Winner::drawer;
        if (options.principal_variation && std::size_t(start.used_colours()) <= budget)
            result.outcome.principal_variation = principal_variation(solver, host, budget, wins);
        result.stats = solver.stats();
        return result;
    }

    auto online_chromatic_number(const PrecoloredGraph & host, const SolveOptions & options) -> ChromaticResult
    {
        if (host.free_count() > options.vertex_limit)
            throw RefusalError("host has " + std::to_string(host.free_count()) + " nonprecolored vertices, solver limit is "
                    + std::to_string(options.vertex_limit));
        std::size_t lower = host.precolor_count();
        if (host.size() <= chromatic_number_limit)
            lower = std::max(lower, chromatic_number(host.graph));
        else {
            Bitset all(host.size());
            all.set_all();
            std::vector<Bitset> rows;
            for (Vertex v = 0 ; v < host.size() ; ++v)
                rows.push_back(host.graph.neighbours(v));
            lower = std::max(lower, maximum_clique(rows, all).count());
        }

        ChromaticResult result;
        result.lower_bound = lower;
        auto quiet = options;
        quiet.principal_variation = false;
        for (std::size_t k = lower ; ; ++k) {
            auto r = painter_wins(host, k, quiet);
            result.stats.nodes += r.stats.nodes;
            result.stats.hits += r.stats.hits;
            result.stats.table_peak = std::max(result.stats.table_peak, r.stats.table_peak);
            if (r.outcome.winner == Winner::painter) {
                result.value = k;
                return result;
            }
        }
    }
}

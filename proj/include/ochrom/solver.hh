#pragma once

#include <ochrom/canonical.hh>
#include <ochrom/game.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace ochrom
{
    enum class Winner { painter, drawer };

    auto to_string(Winner w) -> std::string;

    struct SolveStats
    {
        std::size_t nodes = 0;
        std::size_t hits = 0;
        std::size_t table_peak = 0;
    };

    struct SolveOptions
    {
        /// Refuse hosts with more nonprecoloured vertices than this.
        std::size_t vertex_limit = 12;
        /// Split the root Drawer moves across this many threads.
        std::size_t jobs = 1;
        bool principal_variation = true;
    };

    struct GameOutcome
    {
        Winner winner = Winner::painter;
        /// One line of optimal play: Drawer's move and Painter's reply per round.
        Transcript principal_variation;
    };

    struct SolveResult
    {
        GameOutcome outcome;
        SolveStats stats;
    };

    /// Exact value of the game on `host` with `budget` colours, by minimax over canonical
    /// states with a transposition table.
    auto painter_wins(const PrecoloredGraph & host, std::size_t budget, const SolveOptions & options = {}) -> SolveResult;

    struct ChromaticResult
    {
        std::size_t value = 0;
        std::size_t lower_bound = 0;
        SolveStats stats;
    };

    /// Smallest budget Painter wins with, searching upward from max(χ(G), precolour count).
    auto online_chromatic_number(const PrecoloredGraph & host, const SolveOptions & options = {}) -> ChromaticResult;

    /// Reusable solver; the table persists across queries on the same host and budget.
    class Solver
    {
        public:
            Solver(const PrecoloredGraph & host, std::size_t budget, const SolveOptions & options = {});
            ~Solver();

            /// Whether Painter wins from `state` with Drawer to move.
            auto painter_wins_from(const GameState & state) -> bool;

            /// Whether Painter wins after colouring a new vertex with `neighbourhood` using `c`.
            auto painter_wins_after(const GameState & state, const Bitset & neighbourhood, Color c) -> bool;

            auto stats() const -> SolveStats;

        private:
            struct Impl;
            std::unique_ptr<Impl> _impl;
    };
}

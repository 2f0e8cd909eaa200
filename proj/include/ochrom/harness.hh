#pragma once

#include <ochrom/game.hh>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace ochrom
{
    struct VerifyOptions
    {
        enum class Mode { exhaustive, sampled } mode = Mode::exhaustive;
        std::uint64_t seed = 0;
        std::size_t trials = 1000;
        /// Exhaustive searches stop and report incomplete after this many game-tree nodes.
        std::size_t node_budget = 5'000'000;
    };

    /// Per-round hook for white-box invariant checks; return a message to flag a violation.
    using RoundCheck = std::function<std::optional<std::string> (const GameState &, const PainterStrategy &)>;

    struct PainterReport
    {
        std::string strategy;
        std::string mode;
        bool complete = true;
        std::size_t games = 0;
        std::size_t nodes = 0;
        std::size_t max_colours = 0;
        std::size_t budget = 0;
        /// Set when some Drawer sequence drives the strategy above the budget, or a round check fails.
        std::optional<Transcript> witness;
        std::optional<std::string> violation;

        auto ok() const -> bool { return ! witness && ! violation; }
    };

    /// Plays `painter` against every Drawer move sequence (exhaustive) or against random
    /// presentation orders of the host (sampled), reporting the most colours ever used.
    auto verify_painter_strategy(const PrecoloredGraph & host, std::size_t budget, const PainterStrategy & painter,
            const VerifyOptions & options = {}, const RoundCheck & check = {}) -> PainterReport;

    struct DrawerReport
    {
        std::string strategy;
        bool complete = true;
        std::size_t games = 0;
        std::size_t nodes = 0;
        std::size_t budget = 0;
        /// Every Painter reply sequence was driven above the budget.
        bool forcing = false;
        /// A Painter reply sequence that finished within the budget.
        std::optional<Transcript> escape;
    };

    /// Plays `drawer` against every sequence of Painter replies within the budget.
    auto verify_drawer_strategy(const PrecoloredGraph & host, std::size_t budget, const DrawerStrategy & drawer,
            std::size_t node_budget = 5'000'000) -> DrawerReport;

    /// One game; throws ProtocolError naming the round when a strategy moves illegally.
    auto play_match(const PrecoloredGraph & host, DrawerStrategy & drawer, PainterStrategy & painter,
            std::size_t budget = std::size_t(-1)) -> Transcript;

    /// Drawer that presents the free host vertices in a fixed order, with witnesses.
    class OrderDrawer : public DrawerStrategy
    {
        public:
            OrderDrawer(std::vector<Vertex> order, std::string name = "order");

            auto name() const -> std::string override { return _name; }
            auto move(const GameState & state, const PrecoloredGraph & host) -> DrawerMove override;
            auto clone() const -> std::unique_ptr<DrawerStrategy> override { return std::make_unique<OrderDrawer>(*this); }

        private:
            std::vector<Vertex> _order;
            std::string _name;
    };

    /// A uniformly random order of the free vertices of `host`.
    auto random_order(const PrecoloredGraph & host, std::uint64_t seed) -> std::vector<Vertex>;

    auto to_json(const PainterReport & r) -> std::string;
    auto to_json(const DrawerReport & r) -> std::string;
}

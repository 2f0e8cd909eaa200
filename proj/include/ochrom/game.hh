#pragma once

#include <ochrom/embedding.hh>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ochrom
{
    /// The information state of a game: the coloured revealed graph with precoloured anchors.
    using GameState = RevealedGraph;

    /// Drawer presents a new vertex adjacent to exactly `neighbourhood` among the current slots.
    /// A Drawer that knows where the vertex lives may attach a witness: an induced embedding of
    /// the extended revealed graph (new slot last). Legality is then checked against the
    /// witness instead of by search, which keeps checks cheap on large hosts.
    struct DrawerMove
    {
        Bitset neighbourhood;
        std::optional<Embedding> witness;
    };

    struct PainterMove
    {
        Color colour = 0;
    };

    /// Whether Drawer still has vertices to present.
    auto game_over(const GameState & state, const PrecoloredGraph & host) -> bool;

    /// Distinct realisable neighbourhoods for the next vertex, ascending bitmask order.
    auto legal_drawer_moves(const GameState & state, const PrecoloredGraph & host) -> std::vector<DrawerMove>;

    /// Used colours absent from the neighbourhood, then the fresh colour if the budget allows.
    auto legal_painter_colors(const GameState & state, const Bitset & neighbourhood, std::size_t budget) -> std::vector<PainterMove>;

    /// Colours allowed by properness alone (any used colour not on a neighbour, or the fresh one).
    auto proper_colour(const GameState & state, const Bitset & neighbourhood, Color c) -> bool;

    /// Throws ProtocolError unless the move is realisable in `host`.
    auto check_drawer_move(const GameState & state, const PrecoloredGraph & host, const DrawerMove & move, std::size_t round) -> void;

    class PainterStrategy
    {
        public:
            virtual ~PainterStrategy() = default;

            virtual auto name() const -> std::string = 0;

            /// Colour for a new vertex adjacent to `neighbourhood` in `state`. The host is the
            /// unlabelled copy of the graph that Painter is entitled to know.
            virtual auto colour(const GameState & state, const PrecoloredGraph & host,
                    const Bitset & neighbourhood, std::size_t budget) -> Color = 0;

            /// Independent copy including private memory; used to branch in exhaustive checks.
            virtual auto clone() const -> std::unique_ptr<PainterStrategy> = 0;
    };

    class DrawerStrategy
    {
        public:
            virtual ~DrawerStrategy() = default;

            virtual auto name() const -> std::string = 0;

            /// Next vertex. `state` already carries Painter's reply to the previous vertex.
            virtual auto move(const GameState & state, const PrecoloredGraph & host) -> DrawerMove = 0;

            virtual auto clone() const -> std::unique_ptr<DrawerStrategy> = 0;
    };

    struct Round
    {
        Bitset neighbourhood;
        std::size_t slots = 0;      // slot count before the move
        Color colour = 0;
        std::size_t colours_used = 0;
    };

    struct Transcript
    {
        std::vector<Round> rounds;
        std::size_t colours_used = 0;
    };

    /// Lines of the form `round <i> drawer <bitmask> painter <color>`; the bitmask lists the
    /// current slots lowest first as 0/1 characters.
    auto format_transcript(const Transcript & t) -> std::string;
}

#include <ochrom/game.hh>
#include <ochrom/errors.hh>

#include <sstream>

namespace ochrom
{
    auto game_over(const GameState & state, const PrecoloredGraph & host) -> bool
    {
        return state.revealed_count() >= host.free_count();
    }

    auto legal_drawer_moves(const GameState & state, const PrecoloredGraph & host) -> std::vector<DrawerMove>
    {
        std::vector<DrawerMove> result;
        if (game_over(state, host))
            return result;
        for (auto & n : extension_neighbourhoods(state, host))
            result.push_back(DrawerMove{n, std::nullopt});
        return result;
    }

    auto legal_painter_colors(const GameState & state, const Bitset & neighbourhood, std::size_t budget) -> std::vector<PainterMove>
    {
        auto used = state.used_colours();
        std::vector<bool> blocked(used, false);
        neighbourhood.for_each([&] (Vertex s) { blocked[state.colour(s)] = true; });
        std::vector<PainterMove> result;
        for (Color c = 0 ; c < used ; ++c)
            if (! blocked[c] && std::size_t(c) < budget)
                result.push_back(PainterMove{c});
        if (std::size_t(used) < budget)
            result.push_back(PainterMove{used});
        return result;
    }

    auto proper_colour(const GameState & state, const Bitset & neighbourhood, Color c) -> bool
    {
        if (c < 0 || c > state.used_colours())
            return false;
        bool ok = true;
        neighbourhood.for_each([&] (Vertex s) { if (state.colour(s) == c) ok = false; });
        return ok;
    }

    auto check_drawer_move(const GameState & state, const PrecoloredGraph & host, const DrawerMove & move, std::size_t round) -> void
    {
        if (game_over(state, host))
            throw ProtocolError("Drawer moved after every vertex was presented", round);
        if (move.neighbourhood.size() != state.capacity() || move.neighbourhood.find_next(state.size()) != move.neighbourhood.size())
            throw ProtocolError("neighbourhood refers to slots that are not revealed", round);
        if (move.witness) {
            auto extended = state;
            extended.add(move.neighbourhood, 0);
            if (! is_induced_embedding(extended, host, *move.witness))
                throw ProtocolError("witness is not an induced embedding of the extended revealed graph", round);
        }
        else if (! extension_embeddable(state, host, move.neighbourhood))
            throw ProtocolError("neighbourhood " + move.neighbourhood.to_string().substr(0, state.size()) + " is not realisable", round);
    }

    auto format_transcript(const Transcript & t) -> std::string
    {
        std::ostringstream out;
        for (std::size_t i = 0 ; i < t.rounds.size() ; ++i) {
            auto & r = t.rounds[i];
            auto mask = r.neighbourhood.to_string().substr(0, r.slots);
            out << "round " << i + 1 << " drawer " << (mask.empty() ? "-" : mask)
                << " painter " << r.colour << '\n';
        }
        return out.str();
    }
}

#include <ochrom/strategies.hh>
#include <ochrom/errors.hh>

#include <algorithm>

namespace ochrom
{
    PainterG2::PainterG2(const QdnfFormula & f) :
        _layout(std::make_shared<const G2Layout>(g2_layout(f))),
        _brain(f),
        _g1_palette{0}
    {
    }

    auto PainterG2::is_simulated(Vertex slot) const -> bool
    {
        return std::find(_simulated.begin(), _simulated.end(), slot) != _simulated.end();
    }

    auto PainterG2::adjacent(const GameState & state, const Bitset & n, Vertex a, Vertex b) const -> bool
    {
        if (b == state.size())
            return n.test(a);
        if (a == state.size())
            return n.test(b);
        return state.adjacent(a, b);
    }

    auto PainterG2::smallest(const GameState & state, const Bitset & n, std::vector<Color> & palette,
            const std::function<bool (Color)> & skip) -> Color
    {
        for (auto c : palette)
            if (proper_colour(state, n, c) && ! skip(c))
                return c;
        auto fresh = state.used_colours();
        palette.push_back(fresh);
        return fresh;
    }

    auto PainterG2::recognise(const GameState & state, const Bitset & n, Vertex slot) const -> std::optional<std::vector<Vertex>>
    {
        auto last = slot < state.size() ? state.size() + 1 : state.size();
        for (Vertex w = state.anchors() ; w < last ; ++w)
            if (w != slot && _node_of[w - state.anchors()] != 0 && ! adjacent(state, n, w, slot))
                return _layout->identified_by(_node_of[w - state.anchors()]);
        return std::nullopt;
    }

    auto PainterG2::simulate(const GameState & state, const Bitset & n, Vertex slot, const std::vector<Vertex> & candidates) -> Color
    {
        std::vector<bool> adj;
        for (auto s : _simulated)
            adj.push_back(adjacent(state, n, s, slot));
        auto role = _brain.arrive(candidates, adj);
        _simulated.push_back(slot);

        auto role_of = [&] (Color g) -> Color {
            for (auto & [r, c] : _binding)
                if (c == g)
                    return r;
            return -1;
        };
        auto bound = [&] (Color g) { return role_of(g) >= 0; };
        // Colours held by Greedy vertices that are not simulated yet.
        auto reserved = [&] (Color g) { return is_reserved(state, g); };

        if (slot < state.size()) {
            auto g = state.colour(slot);
            if (! _binding.count(role) && ! bound(g))
                _binding[role] = g;
            if (_binding[role] != g) {
                ++_mismatches;
                _orphans.push_back(slot);
            }
            return g;
        }

        if (! _binding.count(role)) {
            auto g = smallest(state, n, _g1_palette, [&] (Color c) { return bound(c) || reserved(c); });
            _binding[role] = g;
        }
        auto g = _binding[role];
        if (! proper_colour(state, n, g)) {
            ++_mismatches;
            g = smallest(state, n, _g1_palette, [&] (Color c) { return reserved(c); });
        }
        return g;
    }

    auto PainterG2::is_reserved(const GameState & state, Color g) const -> bool
    {
        for (auto s : _greedy)
            if (s < state.size() && state.colour(s) == g && (! is_simulated(s) || is_orphan(s)))
                return true;
        return false;
    }

    auto PainterG2::is_orphan(Vertex slot) const -> bool
    {
        return std::find(_orphans.begin(), _orphans.end(), slot) != _orphans.end();
    }

    auto PainterG2::catch_up(const GameState & state, const Bitset & n) -> void
    {
        for (auto s : _greedy)
            if (! is_simulated(s))
                if (auto cand = recognise(state, n, s))
                    simulate(state, n, s, *cand);
    }

    auto PainterG2::colour(const GameState & state, const PrecoloredGraph &, const Bitset & n, std::size_t) -> Color
    {
        if (state.anchors() != _layout->p)
            throw ArgumentError("painter-g2 plays on the graph built for its formula only");
        auto slot = state.size();
        std::size_t node = 0;
        for (std::size_t j = 0 ; j < _layout->p ; ++j)
            if (n.test(j))
                node |= std::size_t{1} << j;
        _node_of.push_back(node);

        auto used_in_g1 = [&] (Color c) {
            for (auto s : _g1_slots)
                if (state.colour(s) == c)
                    return true;
            return false;
        };
        auto in_nodes = [&] (Color c) {
            for (Vertex s = state.anchors() ; s < state.size() ; ++s)
                if (_node_of[s - state.anchors()] != 0 && state.colour(s) == c)
                    return true;
            return false;
        };

        if (! _winning && node == 0)
            for (auto s : _g1_slots)
                if (! n.test(s)) {
                    _winning = true;
                    break;
                }

        if (! _winning) {
            if (node != 0)
                return smallest(state, n, _node_palette, [] (Color) { return false; });
            _g1_slots.push_back(slot);
            _greedy.push_back(slot);
            // Colour 0 cannot move onto a node later, so an unrecognised vertex takes it only when forced.
            bool zero_ok = recognise(state, n, slot).has_value() || _g1_palette.size() >= _layout->g1.k;
            for (auto c : _g1_palette)
                if (c != 0 && proper_colour(state, n, c))
                    return c;
            if (zero_ok && proper_colour(state, n, 0))
                return 0;
            return smallest(state, n, _g1_palette, [] (Color c) { return c == 0; });
        }

        catch_up(state, n);
        if (node == 0) {
            auto cand = recognise(state, n, slot);
            _g1_slots.push_back(slot);
            if (cand)
                return simulate(state, n, slot, *cand);
            return smallest(state, n, _node_palette, used_in_g1);
        }

        // An orphaned Greedy colour moves onto p3 of a node identifying its vertex.
        for (auto s : _orphans)
            if (! n.test(s) && ! in_nodes(state.colour(s)) && proper_colour(state, n, state.colour(s)))
                return state.colour(s);

        // A node vertex takes the colour of a G1 vertex it identifies when that colour is spare.
        std::optional<Color> saved;
        for (auto s : _g1_slots)
            if (! n.test(s)) {
                auto c = state.colour(s);
                bool in_c = std::find(_node_palette.begin(), _node_palette.end(), c) != _node_palette.end();
                if (in_c && ! in_nodes(c) && proper_colour(state, n, c) && (! saved || c < *saved))
                    saved = c;
            }
        if (saved)
            return *saved;
        return smallest(state, n, _node_palette, [] (Color) { return false; });
    }
}

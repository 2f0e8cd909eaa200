#include <ochrom/strategies.hh>
#include <ochrom/errors.hh>

#include <algorithm>

namespace ochrom
{
    DrawerGPrime::DrawerGPrime(std::shared_ptr<const PrecoloredGraph> original, SupernodeLayout layout, std::unique_ptr<DrawerStrategy> inner) :
        _original(std::move(original)),
        _layout(layout),
        _inner(std::move(inner))
    {
    }

    DrawerGPrime::DrawerGPrime(const DrawerGPrime & other) :
        PlacingDrawer(other),
        _original(other._original),
        _layout(other._layout),
        _inner(other._inner->clone()),
        _b_used(other._b_used),
        _c_used(other._c_used),
        _pending(other._pending)
    {
    }

    auto DrawerGPrime::move(const GameState & state, const PrecoloredGraph & host) -> DrawerMove
    {
        auto s = _layout.s;
        auto anchors = state.anchors();
        if (_placed.size() < s)
            return present(state, host, _layout.a_first + _placed.size());

        if (_pending) {
            auto c = state.colour(anchors + _placed.size() - 1);
            bool in_a = false;
            for (std::size_t i = 0 ; i < s ; ++i)
                in_a = in_a || state.colour(anchors + i) == c;
            if (_b_used == s || (in_a && _c_used < s))
                _placed.back() = _layout.c_first + _c_used++;
            else
                ++_b_used;
            _pending = false;
        }
        if (_placed.size() < 3 * s) {
            _pending = true;
            return present(state, host, _b_used < s ? _layout.b_first + _b_used : _layout.c_first + _c_used);
        }

        // The inner game on the pre-removal graph, with the supernode standing for v_p.
        GameState virt(*_original);
        std::map<Color, Color> to_virtual;
        for (Vertex a = 0 ; a < anchors ; ++a)
            to_virtual[state.colour(a)] = state.colour(a);
        std::vector<Vertex> inner_hosts;
        for (std::size_t i = 3 * s ; i < _placed.size() ; ++i) {
            auto h = Vertex(_layout.to_original(_placed[i]));
            auto n = virt.empty_set();
            for (Vertex v = 0 ; v < virt.size() ; ++v) {
                auto other = v < virt.anchors() ? virt.anchor_host(v) : inner_hosts[v - virt.anchors()];
                if (_original->graph.adjacent(h, other))
                    n.set(v);
            }
            auto real = state.colour(anchors + i);
            if (! to_virtual.count(real))
                to_virtual[real] = virt.used_colours();
            virt.add(n, to_virtual[real]);
            inner_hosts.push_back(h);
        }

        auto m = _inner->move(virt, *_original);
        if (! m.witness) {
            auto extended = virt;
            extended.add(m.neighbourhood, 0);
            auto found = induced_embeddings(extended, *_original, 1);
            if (found.empty())
                throw ProtocolError("inner Drawer asked for a vertex that does not exist", state.revealed_count() + 1);
            m.witness = found.front();
        }
        auto & w = *m.witness;
        for (std::size_t i = 0 ; i < inner_hosts.size() ; ++i)
            _placed[3 * s + i] = _layout.from_original(w[virt.anchors() + i]);
        return present(state, host, _layout.from_original(w.back()));
    }

    auto PaletteLedger::disjoint() const -> bool
    {
        return std::none_of(c.begin(), c.end(), [&] (Color x) { return e.count(x); });
    }

    PainterGPrime::PainterGPrime(std::shared_ptr<const PrecoloredGraph> original, SupernodeLayout layout, std::unique_ptr<PainterStrategy> inner) :
        _original(std::move(original)),
        _layout(layout),
        _inner(std::move(inner))
    {
    }

    PainterGPrime::PainterGPrime(const PainterGPrime & other) :
        PainterStrategy(other),
        _original(other._original),
        _layout(other._layout),
        _inner(other._inner->clone()),
        _ledger(other._ledger),
        _simulating(other._simulating),
        _mismatches(other._mismatches),
        _k_a(other._k_a),
        _k_bc(other._k_bc),
        _d1(other._d1),
        _part(other._part),
        _virtual(other._virtual),
        _virtual_of(other._virtual_of),
        _to_virtual(other._to_virtual),
        _to_real(other._to_real)
    {
    }

    namespace
    {
        // Adjacency in the revealed graph extended by the incoming vertex (slot state.size()).
        auto adjacent(const GameState & state, const Bitset & n, Vertex a, Vertex b) -> bool
        {
            if (a == state.size())
                return n.test(b);
            if (b == state.size())
                return n.test(a);
            return state.adjacent(a, b);
        }

        auto misses(const GameState & state, const Bitset & n, Vertex u, const Bitset & clique) -> std::size_t
        {
            std::size_t count = 0;
            clique.for_each([&] (Vertex w) { count += w != u && ! adjacent(state, n, u, w); });
            return count;
        }

        auto hits(const GameState & state, const Bitset & n, Vertex u, const Bitset & clique) -> std::size_t
        {
            std::size_t count = 0;
            clique.for_each([&] (Vertex w) { count += w != u && adjacent(state, n, u, w); });
            return count;
        }
    }

    auto PainterGPrime::wait_for_d(const GameState & state, const Bitset & n) -> bool
    {
        auto u = state.size();
        auto anchors = state.anchors();
        auto size = u + 1 - anchors;
        auto big = _layout.n;
        if (size < _layout.s - big)
            return false;

        std::vector<Bitset> rows(state.size() + 1, Bitset(state.capacity()));
        Bitset revealed(state.capacity());
        for (Vertex s = anchors ; s <= u ; ++s) {
            revealed.set(s);
            for (Vertex t = anchors ; t <= u ; ++t)
                if (s != t && adjacent(state, n, s, t))
                    rows[s].set(t);
        }
        auto k1 = maximum_clique(rows, revealed);
        auto k2 = maximum_clique(rows, revealed, &k1, big);
        if (2 * k2.count() < _layout.s)
            return false;

        for (int which = 0 ; which < 2 ; ++which) {
            auto & k = which == 0 ? k1 : k2;
            std::vector<Vertex> far;
            for (Vertex s = anchors ; s <= u ; ++s)
                if (misses(state, n, s, k) > big)
                    far.push_back(s);
            for (std::size_t i = 0 ; i < far.size() ; ++i)
                for (std::size_t j = i + 1 ; j < far.size() ; ++j)
                    if (! adjacent(state, n, far[i], far[j])) {
                        _k_bc = k;
                        _k_a = which == 0 ? k2 : k1;
                        _d1 = far[i];
                        return true;
                    }
        }
        return false;
    }

    auto PainterGPrime::classify(const GameState & state, const Bitset & n, Vertex u) const -> Part
    {
        auto big = _layout.n;
        bool universal_bc = misses(state, n, u, _k_bc) <= big;
        bool universal_a = misses(state, n, u, _k_a) <= big;
        if (universal_bc && universal_a)
            return Part::e;
        if (universal_bc && hits(state, n, u, _k_a) <= big)
            return adjacent(state, n, u, _d1) ? Part::b : Part::c;
        if (! universal_bc && universal_a)
            return Part::hidden;
        throw ArgumentError("supernode recognition failed for slot " + std::to_string(u)
                + ": the host does not look like a single-removal graph");
    }

    auto PainterGPrime::surely_d(const GameState & state, const Bitset & n, Vertex u) const -> bool
    {
        auto anchors = state.anchors();
        for (std::size_t i = 0 ; i < _part.size() ; ++i) {
            auto w = anchors + i;
            if (w == u)
                continue;
            auto p = _part[i];
            bool adj = adjacent(state, n, u, w);
            if ((p == Part::hidden || p == Part::d) && ! adj)
                return true;
            if (p == Part::e && ! adj)
                return true;
            if (p == Part::b && adj)
                return true;
        }
        return false;
    }

    auto PainterGPrime::virtual_neighbourhood(const GameState & state, const Bitset & n, Vertex u, bool in_e) const -> Bitset
    {
        auto result = _virtual.empty_set();
        for (Vertex a = 0 ; a < _virtual.anchors() ; ++a) {
            auto h = _virtual.anchor_host(a);
            if (h == _layout.removed) {
                result.set(a, in_e);
                continue;
            }
            auto real = _layout.from_original(h);
            for (Vertex r = 0 ; r < state.anchors() ; ++r)
                if (state.anchor_host(r) == real && adjacent(state, n, u, r))
                    result.set(a);
        }
        for (auto [slot, v] : _virtual_of)
            if (adjacent(state, n, u, slot))
                result.set(v);
        return result;
    }

    auto PainterGPrime::bind_virtual(Color real) -> Color
    {
        if (! _to_virtual.count(real)) {
            Color v = _virtual.used_colours();
            while (_to_real.count(v))
                ++v;
            _to_virtual[real] = v;
            _to_real[v] = real;
        }
        return _to_virtual[real];
    }

    auto PainterGPrime::add_virtual(const GameState & state, const Bitset & n, Vertex u, Color virtual_colour) -> void
    {
        auto nb = virtual_neighbourhood(state, n, u, _part[u - state.anchors()] == Part::e);
        _virtual_of[u] = _virtual.add(nb, virtual_colour);
    }

    auto PainterGPrime::ask_inner(const GameState & state, const Bitset & n, Vertex u, std::size_t budget) -> std::pair<Bitset, Color>
    {
        auto nb = virtual_neighbourhood(state, n, u, _part[u - state.anchors()] == Part::e);
        auto inner_budget = budget > 2 * _layout.s ? budget - 2 * _layout.s : budget;
        return {nb, _inner->colour(_virtual, *_original, nb, inner_budget)};
    }

    auto PainterGPrime::init_simulation(const GameState & state, const Bitset & n, std::size_t budget) -> void
    {
        _simulating = true;
        auto anchors = state.anchors();
        auto u = state.size();
        for (Vertex s = anchors ; s <= u ; ++s)
            _part.push_back(classify(state, n, s));
        for (Vertex s = anchors ; s <= u ; ++s)
            if (_part[s - anchors] == Part::hidden && surely_d(state, n, s))
                _part[s - anchors] = Part::d;

        std::vector<Vertex> sure;
        std::set<Color> on_c, on_e;
        for (Vertex s = anchors ; s < u ; ++s) {
            auto p = _part[s - anchors];
            if (p == Part::d)
                sure.push_back(s);
            if (p == Part::c)
                on_c.insert(state.colour(s));
            if (p == Part::e)
                on_e.insert(state.colour(s));
        }
        bool clique = true;
        for (std::size_t i = 0 ; i < sure.size() ; ++i)
            for (std::size_t j = i + 1 ; j < sure.size() ; ++j)
                clique = clique && state.adjacent(sure[i], sure[j]);
        if (clique)
            for (auto s : sure)
                if (! on_c.count(state.colour(s)))
                    _ledger.s.insert(state.colour(s));
        for (Vertex s = anchors ; s < u ; ++s) {
            auto c = state.colour(s);
            if (_part[s - anchors] != Part::e && ! _ledger.s.count(c) && ! on_e.count(c))
                _ledger.c.insert(c);
        }
        _ledger.e = on_e;
        _ledger.e.insert(_ledger.s.begin(), _ledger.s.end());

        _virtual = GameState(*_original);
        for (Vertex a = 0 ; a < anchors ; ++a) {
            auto c = state.colour(a);
            _to_virtual[c] = c;
            _to_real[c] = c;
        }
        for (Vertex a = 0 ; a < _virtual.anchors() ; ++a)
            if (_virtual.anchor_host(a) == _layout.removed)
                _to_real.emplace(_virtual.colour(a), -1);

        for (Vertex s = anchors ; s < u ; ++s)
            if (_part[s - anchors] == Part::e)
                add_virtual(state, n, s, bind_virtual(state.colour(s)));
        for (auto s : sure) {
            auto c = state.colour(s);
            auto [nb, x] = ask_inner(state, n, s, budget);
            if (_ledger.s.count(c))
                x = bind_virtual(c);
            else if (_to_real.count(x) && _to_real[x] >= 0)
                _ledger.e.insert(_to_real[x]);
            _virtual_of[s] = _virtual.add(nb, x);
        }
    }

    auto PainterGPrime::colour(const GameState & state, const PrecoloredGraph &, const Bitset & n, std::size_t budget) -> Color
    {
        auto anchors = state.anchors();
        auto u = state.size();
        if (! _simulating) {
            if (! wait_for_d(state, n))
                return first_fit_colour(state, n);
            init_simulation(state, n, budget);
        }
        else {
            _part.push_back(Part::hidden);
            _part.back() = classify(state, n, u);
            if (_part.back() == Part::hidden && surely_d(state, n, u))
                _part.back() = Part::d;
        }

        auto legal = [&] (Color c) { return proper_colour(state, n, c); };
        auto fresh = state.used_colours();

        // Step 1: vertices that just stopped looking like A.
        for (Vertex w = anchors ; w < u ; ++w) {
            if (_part[w - anchors] != Part::hidden || ! surely_d(state, n, w))
                continue;
            _part[w - anchors] = Part::d;
            auto c = state.colour(w);
            bool on_c = false;
            for (Vertex x = anchors ; x <= u ; ++x)
                on_c = on_c || (x < u && _part[x - anchors] == Part::c && state.colour(x) == c);
            auto [nb, x] = ask_inner(state, n, w, budget);
            if (! on_c) {
                _ledger.c.erase(c);
                _ledger.e.insert(c);
                if (! _to_real.count(x) && ! _to_virtual.count(c)) {
                    _to_virtual[c] = x;
                    _to_real[x] = c;
                }
                else if (_to_virtual.count(c) && _to_virtual[c] != x) {
                    ++_mismatches;
                    x = _to_virtual[c];
                }
                else if (! _to_virtual.count(c)) {
                    ++_mismatches;
                    x = bind_virtual(c);
                }
            }
            else if (_to_real.count(x) && _to_real[x] >= 0) {
                ++_mismatches;
                x = _virtual.used_colours();
                while (_to_real.count(x))
                    ++x;
            }
            _virtual_of[w] = _virtual.add(nb, x);
        }

        auto part = _part[u - anchors];
        auto take_c = [&] (bool prefer_d) -> Color {
            if (prefer_d) {
                std::optional<Color> best;
                for (Vertex w = anchors ; w < u ; ++w)
                    if (_part[w - anchors] == Part::d) {
                        auto c = state.colour(w);
                        if (_ledger.c.count(c) && legal(c) && (! best || c < *best))
                            best = c;
                    }
                if (best)
                    return *best;
            }
            for (auto c : _ledger.c)
                if (legal(c))
                    return c;
            _ledger.c.insert(fresh);
            return fresh;
        };

        if (part == Part::c)
            return take_c(true);
        if (part == Part::b || part == Part::hidden)
            return take_c(false);

        auto [nb, x] = ask_inner(state, n, u, budget);
        Color real;
        if (_to_real.count(x) && _to_real[x] >= 0)
            real = _to_real[x];
        else {
            real = fresh;
            _to_real[x] = real;
            _to_virtual[real] = x;
        }
        if (! legal(real) || _ledger.c.count(real)) {
            ++_mismatches;
            real = fresh;
            for (auto c : _ledger.e)
                if (legal(c)) {
                    real = c;
                    break;
                }
        }
        _ledger.e.insert(real);
        _virtual_of[u] = _virtual.add(nb, x);
        return real;
    }
}

#include <ochrom/strategies.hh>
#include <ochrom/errors.hh>

#include <algorithm>

namespace ochrom
{
    auto first_fit_colour(const GameState & state, const Bitset & neighbourhood) -> Color
    {
        auto used = state.used_colours();
        std::vector<bool> blocked(used + 1, false);
        neighbourhood.for_each([&] (Vertex s) { blocked[state.colour(s)] = true; });
        Color c = 0;
        while (blocked[c])
            ++c;
        return c;
    }

    auto OptimalPainter::colour(const GameState & state, const PrecoloredGraph & host, const Bitset & n, std::size_t budget) -> Color
    {
        budget = std::min(budget, host.size());
        if (! _solver || _budget != budget || ! (*_host == host)) {
            _host = std::make_shared<const PrecoloredGraph>(host);
            _solver = std::make_shared<Solver>(*_host, budget, SolveOptions{.vertex_limit = host.free_count(), .principal_variation = false});
            _budget = budget;
        }
        for (auto m : legal_painter_colors(state, n, budget))
            if (_solver->painter_wins_after(state, n, m.colour))
                return m.colour;
        return first_fit_colour(state, n);
    }

    auto PlacingDrawer::host_of(const GameState & state, Vertex slot) const -> Vertex
    {
        return slot < state.anchors() ? state.anchor_host(slot) : _placed[slot - state.anchors()];
    }

    auto PlacingDrawer::slot_of(const GameState & state, Vertex host_vertex) const -> std::optional<Vertex>
    {
        for (std::size_t i = 0 ; i < _placed.size() ; ++i)
            if (_placed[i] == host_vertex)
                return state.anchors() + i;
        return std::nullopt;
    }

    auto PlacingDrawer::presented(Vertex host_vertex) const -> bool
    {
        return std::find(_placed.begin(), _placed.end(), host_vertex) != _placed.end();
    }

    auto PlacingDrawer::present(const GameState & state, const PrecoloredGraph & host, Vertex v) -> DrawerMove
    {
        Embedding witness;
        witness.reserve(state.size() + 1);
        auto n = state.empty_set();
        for (Vertex s = 0 ; s < state.size() ; ++s) {
            witness.push_back(host_of(state, s));
            if (host.graph.adjacent(v, witness.back()))
                n.set(s);
        }
        witness.push_back(v);
        _placed.push_back(v);
        return DrawerMove{n, std::move(witness)};
    }

    auto P4Drawer::move(const GameState & state, const PrecoloredGraph & host) -> DrawerMove
    {
        if (host.size() != 4 || host.free_count() != 4 || ! host.graph.adjacent(0, 1) || ! host.graph.adjacent(1, 2)
                || ! host.graph.adjacent(2, 3) || host.graph.edge_count() != 3)
            throw ArgumentError("drawer-p4 plays on the path 0-1-2-3 only");
        switch (_placed.size()) {
            case 0:
                return present(state, host, 0);
            case 1:
                return present(state, host, 3);
            case 2:
                // Different colours: the pair was 0 and 2, and 1 sees both.
                if (state.colour(0) != state.colour(1))
                    _placed[1] = 2;
                return present(state, host, 1);
            default:
                return present(state, host, presented(2) ? 3 : 2);
        }
    }

    auto node_graph(std::size_t m) -> Graph
    {
        Graph g(3 * m);
        for (std::size_t i = 0 ; i < m ; ++i) {
            g.add_edge(3 * i + 1, 3 * i + 2);
            for (std::size_t j = i + 1 ; j < m ; ++j)
                for (int a = 0 ; a < 3 ; ++a)
                    for (int b = 0 ; b < 3 ; ++b)
                        g.add_edge(3 * i + a, 3 * j + b);
        }
        return g;
    }

    auto node_graph_triples(std::size_t m) -> std::vector<NodeTriple>
    {
        std::vector<NodeTriple> result;
        for (std::size_t i = 0 ; i < m ; ++i)
            result.push_back(NodeTriple{3 * i, 3 * i + 1, 3 * i + 2});
        return result;
    }

    NodeDrawer::NodeDrawer(std::vector<NodeTriple> nodes) : _nodes(std::move(nodes))
    {
    }

    auto NodeDrawer::node_step(const GameState & state) -> std::optional<Vertex>
    {
        while (_node < _nodes.size()) {
            auto & t = _nodes[_node];
            switch (_stage) {
                case 0:
                    _stage = 1;
                    return t.p1;
                case 1:
                    _stage = 2;
                    return t.p2;
                case 2: {
                    auto q = _placed.size() - 1;
                    if (state.colour(state.anchors() + q) == state.colour(state.anchors() + q - 1)) {
                        _placed[q] = t.p3;
                        _stage = 3;
                        return t.p2;
                    }
                    _leftover.push_back(t.p3);
                    break;
                }
                default:
                    break;
            }
            ++_node;
            _stage = 0;
        }
        return std::nullopt;
    }

    namespace
    {
        auto next_unpresented(const std::vector<Vertex> & preferred, const PrecoloredGraph & host,
                const std::function<bool (Vertex)> & presented) -> Vertex
        {
            for (auto v : preferred)
                if (! presented(v))
                    return v;
            for (auto v : host.free_vertices())
                if (! presented(v))
                    return v;
            throw ProtocolError("no vertex left to present", 0);
        }
    }

    auto NodeDrawer::move(const GameState & state, const PrecoloredGraph & host) -> DrawerMove
    {
        if (auto v = node_step(state))
            return present(state, host, *v);
        return present(state, host, next_unpresented(_leftover, host, [&] (Vertex v) { return presented(v); }));
    }

    G1Forcing::G1Forcing(const QdnfFormula & f) :
        _layout(g1_layout(f)),
        _oracle(std::make_shared<const QdnfOracle>(f))
    {
        if (_oracle->value({}))
            throw ArgumentError("the forcing Drawer needs a false formula");
        for (std::size_t p = 0 ; p < _layout.variables.size() ; ++p) {
            auto & x = _layout.variables[p];
            _schedule.push_back(x.t);
            _ambiguous.push_back(x.quantifier == Quantifier::forall ? int(p) : -1);
            _schedule.push_back(x.f);
            _ambiguous.push_back(-1);
            if (x.quantifier == Quantifier::exists) {
                _schedule.push_back(x.h);
                _ambiguous.push_back(-1);
            }
        }
        for (auto & c : _layout.clauses)
            for (auto l : c.literal) {
                _schedule.push_back(l);
                _ambiguous.push_back(-1);
            }
        for (auto & c : _layout.clauses) {
            _schedule.push_back(c.d);
            _ambiguous.push_back(-1);
        }
        _schedule.push_back(_layout.final);
        _ambiguous.push_back(-1);
    }

    auto G1Forcing::next(const GameState & state, std::vector<Vertex> & placed, std::size_t anchors,
            const std::function<Color (Color)> & role_of) -> std::optional<Vertex>
    {
        auto colour_of = [&] (Vertex v) -> Color {
            for (std::size_t i = 0 ; i < placed.size() ; ++i)
                if (placed[i] == v)
                    return role_of(state.colour(anchors + i));
            return -1;
        };

        if (_step > 0 && _ambiguous[_step - 1] >= 0) {
            auto p = std::size_t(_ambiguous[_step - 1]);
            auto & x = _layout.variables[p];
            std::vector<bool> partial;
            for (std::size_t q = 0 ; q < p ; ++q)
                partial.push_back(colour_of(_layout.variables[q].t) == _layout.variables[q].set_true);
            bool value = _oracle->refuting_move(partial).value_or(false);
            // The vertex just coloured becomes x_t exactly when its colour then encodes `value`.
            bool coloured_set = role_of(state.colour(anchors + placed.size() - 1)) == x.set_true;
            bool is_t = coloured_set == value;
            placed.back() = is_t ? x.t : x.f;
            _schedule[_step] = is_t ? x.f : x.t;
        }
        if (_step >= _schedule.size())
            return std::nullopt;
        return _schedule[_step++];
    }

    DrawerG1::DrawerG1(const QdnfFormula & f) : _forcing(f)
    {
    }

    auto DrawerG1::move(const GameState & state, const PrecoloredGraph & host) -> DrawerMove
    {
        if (auto v = _forcing.next(state, _placed, state.anchors(), [] (Color c) { return c; }))
            return present(state, host, *v);
        return present(state, host, next_unpresented({}, host, [&] (Vertex v) { return presented(v); }));
    }

    namespace
    {
        auto g2_nodes(const G2Layout & l) -> std::vector<NodeTriple>
        {
            std::vector<NodeTriple> result;
            for (std::size_t i = 1 ; i <= l.n ; ++i)
                result.push_back(NodeTriple{l.node_vertex(i, 0), l.node_vertex(i, 1), l.node_vertex(i, 2)});
            return result;
        }
    }

    DrawerG2::DrawerG2(const QdnfFormula & f) :
        NodeDrawer(g2_nodes(g2_layout(f))),
        _layout(g2_layout(f)),
        _forcing(f)
    {
    }

    auto DrawerG2::move(const GameState & state, const PrecoloredGraph & host) -> DrawerMove
    {
        if (_phase == 0) {
            if (auto v = node_step(state))
                return present(state, host, *v);
            _phase = 1;
        }
        if (_phase == 1) {
            if (_kcol < _layout.g1.k)
                return present(state, host, _kcol++);
            _phase = 2;
        }
        if (_phase == 2) {
            auto role_of = [&] (Color c) -> Color {
                for (Vertex r = 0 ; r < _layout.g1.k ; ++r)
                    if (auto s = slot_of(state, r) ; s && state.colour(*s) == c)
                        return Color(r);
                return -1;
            };
            if (auto v = _forcing.next(state, _placed, state.anchors(), role_of))
                return present(state, host, *v);
            _phase = 3;
        }
        return present(state, host, next_unpresented(_leftover, host, [&] (Vertex v) { return presented(v); }));
    }

    G1Brain::G1Brain(const QdnfFormula & f) :
        _layout(std::make_shared<const G1Layout>(g1_layout(f))),
        _oracle(std::make_shared<const QdnfOracle>(f))
    {
        if (! _oracle->value({}))
            throw ArgumentError("the winning Painter needs a true formula");
        _graph = std::make_shared<const Graph>(g1_graph(*_layout));
        _value.resize(_layout->variables.size());
        _set.resize(_layout->variables.size(), false);
        _position.assign(_layout->vertex_count, -1);
        for (std::size_t p = 0 ; p < _layout->variables.size() ; ++p) {
            auto & x = _layout->variables[p];
            _position[x.t] = _position[x.f] = int(p);
            if (x.quantifier == Quantifier::exists)
                _position[x.h] = int(p);
        }
    }

    auto G1Brain::observed(std::size_t a, std::size_t b) const -> bool
    {
        return a < b ? _items[b].adjacent[a] : _items[a].adjacent[b];
    }

    auto G1Brain::propagate() -> void
    {
        for (bool changed = true ; changed ; ) {
            changed = false;
            for (std::size_t i = 0 ; i < _items.size() ; ++i) {
                std::vector<Vertex> kept;
                for (auto u : _items[i].candidates) {
                    bool ok = true;
                    for (std::size_t j = 0 ; ok && j < _items.size() ; ++j) {
                        if (j == i)
                            continue;
                        ok = std::any_of(_items[j].candidates.begin(), _items[j].candidates.end(),
                                [&] (Vertex w) { return w != u && _graph->adjacent(u, w) == observed(i, j); });
                    }
                    if (ok)
                        kept.push_back(u);
                }
                if (! kept.empty() && kept.size() < _items[i].candidates.size()) {
                    _items[i].candidates = std::move(kept);
                    changed = true;
                }
            }
        }
    }

    auto G1Brain::learn_values() -> void
    {
        for (auto & item : _items) {
            if (item.colour < 0 || item.candidates.size() != 1)
                continue;
            auto v = item.candidates.front();
            auto p = _position[v];
            if (p < 0 || _value[p])
                continue;
            auto & x = _layout->variables[p];
            if (x.quantifier != Quantifier::forall || (item.colour != x.set_true && item.colour != x.unset))
                continue;
            _value[p] = (v == x.t) == (item.colour == x.set_true);
        }
    }

    auto G1Brain::partial(std::size_t before) const -> std::vector<bool>
    {
        std::vector<bool> result;
        for (std::size_t q = 0 ; q < before ; ++q)
            result.push_back(_value[q].value_or(true));
        return result;
    }

    auto G1Brain::assign_unset(std::size_t before) -> void
    {
        for (std::size_t p = 0 ; p < before ; ++p)
            if (! _set[p] && ! _value[p]) {
                _value[p] = _oracle->winning_move(partial(p)).value_or(true);
                _set[p] = true;
            }
    }

    auto G1Brain::variable_colour(Vertex v, bool value) const -> Color
    {
        auto & x = _layout->variables[_position[v]];
        if (x.quantifier == Quantifier::forall)
            return (v == x.t) == value ? x.set_true : x.unset;
        if (v == x.t)
            return value ? x.set_true : x.unset;
        if (v == x.f)
            return value ? x.unset : x.set_false;
        return value ? x.set_false : x.set_true;
    }

    auto G1Brain::clause_true(std::size_t a) const -> bool
    {
        auto & c = _layout->clauses[a];
        for (int j = 0 ; j < 3 ; ++j)
            if (_value[c.position[j]] != c.positive[j])
                return false;
        return true;
    }

    auto G1Brain::planned(Vertex v) const -> std::optional<Color>
    {
        if (_layout->is_kcol(v))
            return Color(v);
        if (auto p = _position[v] ; p >= 0) {
            if (! _value[p])
                return std::nullopt;
            return variable_colour(v, *_value[p]);
        }
        for (auto & c : _layout->clauses)
            for (int j = 0 ; j < 3 ; ++j)
                if (c.literal[j] == v) {
                    auto & x = _layout->variables[c.position[j]];
                    if (_value[c.position[j]] == c.positive[j])
                        return x.unset;
                    return c.f;
                }
        return std::nullopt;
    }

    auto G1Brain::decide(std::size_t i) const -> Color
    {
        auto & cand = _items[i].candidates;
        auto v = cand.front();
        auto kind = _layout->roles[v].kind;
        if (_layout->is_kcol(v))
            return Color(v);

        if (auto p = _position[v] ; p >= 0) {
            auto & x = _layout->variables[p];
            auto first = planned(v);
            bool agree = first && std::all_of(cand.begin(), cand.end(), [&] (Vertex u) { return planned(u) == first; });
            if (agree)
                return *first;
            if (x.quantifier == Quantifier::forall) {
                // One vertex of the pair is coloured and the other cannot be told apart: take the colour left.
                for (std::size_t j = 0 ; j < i ; ++j)
                    if (_position[_items[j].candidates.front()] == p) {
                        if (_items[j].colour == x.set_true)
                            return x.unset;
                        if (_items[j].colour == x.unset)
                            return x.set_true;
                    }
                return x.set_true;
            }
            return first.value_or(x.set_true);
        }

        if (kind == VertexKind::literal) {
            auto a = std::size_t(_layout->roles[v].a - 1);
            auto first = planned(v);
            bool agree = std::all_of(cand.begin(), cand.end(), [&] (Vertex u) { return planned(u) == first; });
            return agree ? *first : _layout->clauses[a].f;
        }

        if (kind == VertexKind::clause) {
            auto a = std::size_t(_layout->roles[v].a - 1);
            auto & c = _layout->clauses[a];
            if (! clause_true(a))
                return c.falsified;
            for (std::size_t j = 0 ; j < i ; ++j)
                if (_items[j].colour == c.f && _layout->roles[_items[j].candidates.front()].kind == VertexKind::literal)
                    return c.falsified;
            return c.f;
        }

        // F: a true clause whose d is absent or already holds f_a.
        for (std::size_t a = 0 ; a < _layout->clauses.size() ; ++a) {
            auto & c = _layout->clauses[a];
            if (! clause_true(a))
                continue;
            bool blocked = false;
            for (std::size_t j = 0 ; j < i ; ++j)
                if (_items[j].candidates.front() == c.d && _items[j].colour != c.f)
                    blocked = true;
            if (! blocked)
                return c.falsified;
        }
        return _layout->clauses.front().falsified;
    }

    auto G1Brain::arrive(std::vector<Vertex> candidates, const std::vector<bool> & adjacent_to_earlier) -> Color
    {
        std::sort(candidates.begin(), candidates.end());
        if (candidates.empty())
            throw ArgumentError("arrival without candidate identities");
        _items.push_back(Item{std::move(candidates), -1, adjacent_to_earlier});
        _items.back().adjacent.resize(_items.size() - 1, false);
        propagate();
        learn_values();

        auto i = _items.size() - 1;
        auto v = _items[i].candidates.front();
        auto kind = _layout->roles[v].kind;
        auto n = _layout->variables.size();
        auto p = _position[v];
        if (kind == VertexKind::literal || kind == VertexKind::clause || kind == VertexKind::final)
            _late = true;
        if (_late)
            assign_unset(n);
        else if (p >= 0)
            assign_unset(std::size_t(p));

        if (p >= 0 && ! _set[p]) {
            auto & x = _layout->variables[p];
            if (x.quantifier == Quantifier::exists)
                _value[p] = _oracle->winning_move(partial(std::size_t(p))).value_or(true);
        }

        auto c = decide(i);
        _items[i].colour = c;
        if (p >= 0)
            _set[p] = true;
        learn_values();
        return c;
    }

    PainterG1::PainterG1(const QdnfFormula & f) : _brain(f)
    {
        auto & l = _brain.layout();
        for (Vertex v = l.k ; v < l.vertex_count ; ++v)
            _by_allowed[l.allowed[v]].push_back(v);
    }

    auto PainterG1::colour(const GameState & state, const PrecoloredGraph &, const Bitset & n, std::size_t budget) -> Color
    {
        auto & l = _brain.layout();
        std::vector<Color> allowed;
        for (Color c = 0 ; c < Color(l.k) && std::size_t(c) < state.anchors() ; ++c)
            if (! n.test(c))
                allowed.push_back(c);
        auto it = _by_allowed.find(allowed);
        if (it == _by_allowed.end() || state.anchors() != l.k)
            return first_fit_colour(state, n);

        std::vector<bool> adjacent;
        for (Vertex s = state.anchors() ; s < state.size() ; ++s)
            adjacent.push_back(n.test(s));
        auto c = _brain.arrive(it->second, adjacent);
        if (proper_colour(state, n, c) && std::size_t(c) < budget)
            return c;
        for (auto a : allowed)
            if (proper_colour(state, n, a)) {
                _brain.record(a);
                return a;
            }
        _brain.record(-1);
        return first_fit_colour(state, n);
    }
}

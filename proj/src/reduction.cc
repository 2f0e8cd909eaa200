#include <ochrom/reduction.hh>
#include <ochrom/errors.hh>

#include <json.hpp>

#include <algorithm>
#include <bit>

namespace ochrom
{
    auto to_string(const ColorRole & r) -> std::string
    {
        auto a = std::to_string(r.a);
        switch (r.kind) {
            case ColorKind::set: return "set(" + a + ")";
            case ColorKind::unset: return "unset(" + a + ")";
            case ColorKind::set_true: return "set_t(" + a + ")";
            case ColorKind::set_false: return "set_f(" + a + ")";
            case ColorKind::unset_exists: return "unset(" + a + ")";
            case ColorKind::clause_f: return "f(" + a + ")";
            case ColorKind::clause_false: return "false(" + a + ")";
            case ColorKind::node: return "node(" + a + ")";
            case ColorKind::supernode: return "supernode(" + a + "," + std::to_string(r.b) + ")";
            case ColorKind::base: return "base(" + a + ")";
        }
        return "?";
    }

    auto to_string(const VertexRole & r) -> std::string
    {
        auto a = std::to_string(r.a), b = std::to_string(r.b);
        switch (r.kind) {
            case VertexKind::kcol: return "kcol(" + to_string(r.colour) + ")";
            case VertexKind::forall_true: case VertexKind::exists_true: return "x_t(" + a + ")";
            case VertexKind::forall_false: case VertexKind::exists_false: return "x_f(" + a + ")";
            case VertexKind::exists_helper: return "x_h(" + a + ")";
            case VertexKind::literal: return "l(" + a + "," + b + "," + std::to_string(r.c) + ")";
            case VertexKind::clause: return "d(" + a + ")";
            case VertexKind::final: return "F";
            case VertexKind::node_p1: return "p1(" + a + ")";
            case VertexKind::node_p2: return "p2(" + a + ")";
            case VertexKind::node_p3: return "p3(" + a + ")";
            case VertexKind::precolored: return "z(" + a + ")";
            case VertexKind::supernode_a: return "A(" + a + "," + b + ")";
            case VertexKind::supernode_b: return "B(" + a + "," + b + ")";
            case VertexKind::supernode_c: return "C(" + a + "," + b + ")";
            case VertexKind::base: return "base(" + a + ")";
        }
        return "?";
    }

    auto BlockGraph::add_block(Block b) -> std::size_t
    {
        _blocks.push_back(std::move(b));
        for (auto & row : _joins)
            row.resize(_blocks.size());
        _joins.emplace_back(_blocks.size());
        reindex();
        return _blocks.size() - 1;
    }

    auto BlockGraph::join(std::size_t a, std::size_t b) -> void
    {
        if (a == b)
            throw ConstructionError("a block cannot be joined to itself");
        _joins[a].set(b);
        _joins[b].set(a);
    }

    auto BlockGraph::remove_block(std::size_t b) -> void
    {
        std::size_t n = _blocks.size();
        std::vector<Bitset> joins;
        for (std::size_t i = 0 ; i < n ; ++i) {
            if (i == b)
                continue;
            Bitset row(n - 1);
            for (std::size_t j = 0 ; j < n ; ++j)
                if (j != b && _joins[i].test(j))
                    row.set(j < b ? j : j - 1);
            joins.push_back(std::move(row));
        }
        _joins = std::move(joins);
        _blocks.erase(_blocks.begin() + b);
        reindex();
    }

    auto BlockGraph::reindex() -> void
    {
        _first.assign(_blocks.size() + 1, 0);
        for (std::size_t b = 0 ; b < _blocks.size() ; ++b)
            _first[b + 1] = _first[b] + _blocks[b].size;
    }

    auto BlockGraph::vertex_count() const -> std::uint64_t
    {
        return _first.empty() ? 0 : _first.back();
    }

    auto BlockGraph::first_vertex(std::size_t b) const -> std::uint64_t
    {
        return _first[b];
    }

    auto BlockGraph::block_of(std::uint64_t v) const -> std::size_t
    {
        if (v >= vertex_count())
            throw ArgumentError("vertex " + std::to_string(v) + " out of range");
        return std::upper_bound(_first.begin(), _first.end(), v) - _first.begin() - 1;
    }

    auto BlockGraph::adjacent(std::uint64_t u, std::uint64_t v) const -> bool
    {
        if (u == v)
            return false;
        auto a = block_of(u), b = block_of(v);
        if (a == b)
            return _blocks[a].clique;
        return _joins[a].test(b);
    }

    auto BlockGraph::role(std::uint64_t v) const -> VertexRole
    {
        auto b = block_of(v);
        auto r = _blocks[b].role;
        if (_blocks[b].size > 1)
            r.b += long(v - _first[b]);
        return r;
    }

    auto BlockGraph::precolor(std::uint64_t v) const -> std::optional<Color>
    {
        return _blocks[block_of(v)].precolor;
    }

    auto BlockGraph::materialize(std::uint64_t limit) const -> PrecoloredGraph
    {
        auto n = vertex_count();
        if (n > limit)
            throw RefusalError("graph has " + std::to_string(n) + " vertices, materialization limit is " + std::to_string(limit));
        Graph g(n);
        std::vector<std::optional<Color>> precolor(n);
        for (std::size_t a = 0 ; a < _blocks.size() ; ++a) {
            for (auto u = _first[a] ; u < _first[a + 1] ; ++u) {
                precolor[u] = _blocks[a].precolor;
                if (_blocks[a].clique)
                    for (auto v = u + 1 ; v < _first[a + 1] ; ++v)
                        g.add_edge(u, v);
            }
            for (std::size_t b = a + 1 ; b < _blocks.size() ; ++b)
                if (_joins[a].test(b))
                    for (auto u = _first[a] ; u < _first[a + 1] ; ++u)
                        for (auto v = _first[b] ; v < _first[b + 1] ; ++v)
                            g.add_edge(u, v);
        }
        return PrecoloredGraph(std::move(g), std::move(precolor));
    }

    auto ReductionOutput::color_role(std::uint64_t c) const -> ColorRole
    {
        for (auto & r : color_roles)
            if (c >= r.first && c < r.first + r.count) {
                auto role = r.role;
                if (r.count > 1)
                    role.b += long(c - r.first);
                return role;
            }
        throw ArgumentError("colour " + std::to_string(c) + " has no role");
    }

    auto ReductionOutput::precolored_vertices() const -> std::vector<std::uint64_t>
    {
        std::vector<std::uint64_t> result;
        for (std::size_t b = 0 ; b < graph.block_count() ; ++b)
            if (graph.block(b).precolor)
                for (std::uint64_t i = 0 ; i < graph.block(b).size ; ++i)
                    result.push_back(graph.first_vertex(b) + i);
        return result;
    }

    auto G1Layout::forall_partner(Vertex v) const -> std::optional<Vertex>
    {
        for (auto & x : variables)
            if (x.quantifier == Quantifier::forall) {
                if (v == x.t)
                    return x.f;
                if (v == x.f)
                    return x.t;
            }
        return std::nullopt;
    }

    auto g1_layout(const QdnfFormula & f) -> G1Layout
    {
        f.validate();
        G1Layout l;
        auto colour = [&] (ColorKind kind, long a) {
            l.colour_roles.push_back(ColorRole{kind, a, 0});
            return Color(l.colour_roles.size() - 1);
        };

        for (auto & q : f.prefix) {
            G1Layout::Variable x;
            x.id = q.id;
            x.quantifier = q.quantifier;
            if (q.quantifier == Quantifier::forall) {
                x.set_true = colour(ColorKind::set, q.id);
                x.unset = colour(ColorKind::unset, q.id);
            }
            else {
                x.set_true = colour(ColorKind::set_true, q.id);
                x.set_false = colour(ColorKind::set_false, q.id);
                x.unset = colour(ColorKind::unset_exists, q.id);
            }
            l.variables.push_back(x);
        }
        for (std::size_t a = 0 ; a < f.clauses.size() ; ++a) {
            G1Layout::ClauseLayout c;
            c.f = colour(ColorKind::clause_f, long(a + 1));
            c.falsified = colour(ColorKind::clause_false, long(a + 1));
            l.clauses.push_back(c);
        }
        l.k = l.colour_roles.size();

        for (std::size_t c = 0 ; c < l.k ; ++c) {
            l.roles.push_back(VertexRole{VertexKind::kcol, 0, 0, 0, l.colour_roles[c]});
            l.allowed.emplace_back();
        }
        auto vertex = [&] (VertexKind kind, long a, long b, long c, std::vector<Color> allowed) {
            l.roles.push_back(VertexRole{kind, a, b, c, {}});
            std::sort(allowed.begin(), allowed.end());
            l.allowed.push_back(std::move(allowed));
            return Vertex(l.roles.size() - 1);
        };

        for (auto & x : l.variables) {
            if (x.quantifier == Quantifier::forall) {
                x.t = vertex(VertexKind::forall_true, x.id, 0, 0, {x.set_true, x.unset});
                x.f = vertex(VertexKind::forall_false, x.id, 0, 0, {x.set_true, x.unset});
            }
            else {
                x.t = vertex(VertexKind::exists_true, x.id, 0, 0, {x.set_true, x.unset});
                x.f = vertex(VertexKind::exists_false, x.id, 0, 0, {x.set_false, x.unset});
                x.h = vertex(VertexKind::exists_helper, x.id, 0, 0, {x.set_true, x.set_false});
            }
        }
        for (std::size_t a = 0 ; a < f.clauses.size() ; ++a) {
            auto & c = l.clauses[a];
            for (std::size_t i = 0 ; i < 3 ; ++i) {
                auto & lit = f.clauses[a][i];
                auto pos = f.position(lit.variable);
                c.position[i] = pos;
                c.positive[i] = lit.positive;
                c.literal[i] = vertex(VertexKind::literal, long(a + 1), lit.variable, long(i + 1), {c.f, l.variables[pos].unset});
            }
            c.d = vertex(VertexKind::clause, long(a + 1), 0, 0, {c.f, c.falsified});
        }
        std::vector<Color> falses;
        for (auto & c : l.clauses)
            falses.push_back(c.falsified);
        l.final = vertex(VertexKind::final, 0, 0, 0, falses);
        l.vertex_count = l.roles.size();
        return l;
    }

    namespace
    {
        auto g1_edges(const G1Layout & l) -> std::vector<std::pair<Vertex, Vertex>>
        {
            std::vector<std::pair<Vertex, Vertex>> edges;
            for (Vertex a = 0 ; a < l.k ; ++a)
                for (Vertex b = a + 1 ; b < l.k ; ++b)
                    edges.emplace_back(a, b);
            for (Vertex v = l.k ; v < l.vertex_count ; ++v)
                for (Color c = 0 ; c < Color(l.k) ; ++c)
                    if (! std::binary_search(l.allowed[v].begin(), l.allowed[v].end(), c))
                        edges.emplace_back(c, v);

            std::vector<Vertex> earlier_forall_true;
            for (auto & x : l.variables) {
                std::vector<Vertex> own = {x.t, x.f};
                if (x.quantifier == Quantifier::exists)
                    own.push_back(x.h);
                for (std::size_t i = 0 ; i < own.size() ; ++i)
                    for (std::size_t j = i + 1 ; j < own.size() ; ++j)
                        edges.emplace_back(own[i], own[j]);
                for (auto v : own)
                    for (auto t : earlier_forall_true)
                        edges.emplace_back(t, v);
                if (x.quantifier == Quantifier::forall)
                    earlier_forall_true.push_back(x.t);
            }

            for (auto & c : l.clauses) {
                for (std::size_t i = 0 ; i < 3 ; ++i) {
                    auto & x = l.variables[c.position[i]];
                    edges.emplace_back(c.positive[i] ? x.t : x.f, c.literal[i]);
                    for (std::size_t p = 0 ; p < l.variables.size() ; ++p)
                        if (p != c.position[i] && l.variables[p].quantifier == Quantifier::forall)
                            edges.emplace_back(l.variables[p].t, c.literal[i]);
                    edges.emplace_back(c.literal[i], c.d);
                }
                for (auto & x : l.variables)
                    if (x.quantifier == Quantifier::forall)
                        edges.emplace_back(x.t, c.d);
                edges.emplace_back(c.d, l.final);
            }
            for (auto & x : l.variables)
                if (x.quantifier == Quantifier::forall)
                    edges.emplace_back(x.t, l.final);
            return edges;
        }

        auto single(BlockGraph & g, VertexRole role, std::optional<Color> precolor = std::nullopt) -> std::size_t
        {
            return g.add_block(BlockGraph::Block{1, false, role, precolor});
        }

        auto colour_ranges(const std::vector<ColorRole> & roles) -> std::vector<ColorRange>
        {
            std::vector<ColorRange> result;
            for (std::size_t c = 0 ; c < roles.size() ; ++c)
                result.push_back(ColorRange{c, 1, roles[c]});
            return result;
        }
    }

    auto g1_graph(const G1Layout & l) -> Graph
    {
        return graph_from_edges(l.vertex_count, g1_edges(l));
    }

    auto build_g1(const QdnfFormula & f) -> ReductionOutput
    {
        auto l = g1_layout(f);
        ReductionOutput out;
        out.stage = "g1";
        out.formula = f;
        out.k = l.k;
        out.color_roles = colour_ranges(l.colour_roles);
        for (Vertex v = 0 ; v < l.vertex_count ; ++v)
            single(out.graph, l.roles[v], v < l.k ? std::optional<Color>(Color(v)) : std::nullopt);
        for (auto [a, b] : g1_edges(l))
            out.graph.join(a, b);
        out.stats.nodes = l.vertex_count;
        out.stats.g1_budget = l.k;
        return out;
    }

    auto G2Layout::node_of(Vertex v) const -> std::size_t
    {
        if (v < node_base || v >= z_base)
            return 0;
        return (v - node_base) / 3 + 1;
    }

    auto G2Layout::identified_by(std::size_t node) const -> std::vector<Vertex>
    {
        Vertex v = node - 1;
        std::vector<Vertex> result = {v};
        if (auto partner = g1.forall_partner(v))
            result.push_back(*partner);
        std::sort(result.begin(), result.end());
        return result;
    }

    auto G2Layout::identifies(std::size_t node, Vertex g1_vertex) const -> bool
    {
        auto ids = identified_by(node);
        return std::find(ids.begin(), ids.end(), g1_vertex) != ids.end();
    }

    auto g2_layout(const QdnfFormula & f) -> G2Layout
    {
        G2Layout l;
        l.g1 = g1_layout(f);
        l.n = l.g1.vertex_count;
        // N is odd and at least 3 for every formula, so the bit width equals ⌈log2 N⌉.
        l.p = std::bit_width(l.n);
        l.k_prime = 2 * l.n + l.g1.k;
        l.node_base = l.n;
        l.z_base = l.n + 3 * l.n;
        l.node_colour_base = Color(l.g1.k);
        return l;
    }

    auto build_g2(const QdnfFormula & f) -> ReductionOutput
    {
        auto l = g2_layout(f);
        auto & g1 = l.g1;
        ReductionOutput out;
        out.stage = "g2";
        out.formula = f;
        out.k = l.k_prime;
        out.color_roles = colour_ranges(g1.colour_roles);
        for (std::size_t i = 0 ; i < 2 * l.n ; ++i)
            out.color_roles.push_back(ColorRange{g1.k + i, 1, ColorRole{ColorKind::node, long(i + 1), 0}});

        for (Vertex v = 0 ; v < l.n ; ++v)
            single(out.graph, g1.roles[v]);
        for (auto [a, b] : g1_edges(g1))
            out.graph.join(a, b);

        for (std::size_t i = 1 ; i <= l.n ; ++i)
            for (auto kind : {VertexKind::node_p1, VertexKind::node_p2, VertexKind::node_p3})
                single(out.graph, VertexRole{kind, long(i), 0, 0, {}});
        for (std::size_t i = 1 ; i <= l.n ; ++i) {
            out.graph.join(l.node_vertex(i, 1), l.node_vertex(i, 2));
            for (std::size_t j = i + 1 ; j <= l.n ; ++j)
                for (int a = 0 ; a < 3 ; ++a)
                    for (int b = 0 ; b < 3 ; ++b)
                        out.graph.join(l.node_vertex(i, a), l.node_vertex(j, b));
            for (Vertex v = 0 ; v < l.n ; ++v) {
                bool identifies = l.identifies(i, v);
                out.graph.join(v, l.node_vertex(i, 0));
                out.graph.join(v, l.node_vertex(i, 1));
                if (! identifies)
                    out.graph.join(v, l.node_vertex(i, 2));
            }
        }
        for (std::size_t j = 1 ; j <= l.p ; ++j) {
            auto z = single(out.graph, VertexRole{VertexKind::precolored, long(j), 0, 0, {}}, Color(0));
            for (std::size_t i = 1 ; i <= l.n ; ++i)
                if ((i >> (j - 1)) & 1)
                    for (int a = 0 ; a < 3 ; ++a)
                        out.graph.join(z, l.node_vertex(i, a));
        }
        out.stats.nodes = l.n;
        out.stats.precolored = l.p;
        out.stats.g1_budget = g1.k;
        return out;
    }

    auto supernode_layout(const ReductionOutput & before, std::uint64_t removed) -> SupernodeLayout
    {
        SupernodeLayout s;
        s.original_count = before.vertex_count();
        s.removed = removed;
        s.n = 0;
        for (std::size_t b = 0 ; b < before.graph.block_count() ; ++b)
            if (! before.graph.block(b).precolor)
                s.n += before.graph.block(b).size;
        s.s = 8 * s.n;
        s.a_first = s.original_count - 1;
        s.b_first = s.a_first + s.s;
        s.c_first = s.b_first + s.s;
        return s;
    }

    auto remove_precolored_vertex(const ReductionOutput & g, std::uint64_t v) -> ReductionOutput
    {
        if (v >= g.vertex_count())
            throw ArgumentError("vertex " + std::to_string(v) + " out of range");
        auto vb = g.graph.block_of(v);
        auto & removed = g.graph.block(vb);
        if (! removed.precolor)
            throw ArgumentError("vertex " + std::to_string(v) + " is not precolored");
        if (removed.size != 1)
            throw ArgumentError("vertex " + std::to_string(v) + " lies in a block of precolored vertices");

        ReductionOutput out = g;
        auto iteration = long(g.stats.removals.size() + 1);
        auto layout = supernode_layout(g, v);
        RemovalStats stats;
        stats.iteration = iteration;
        stats.removed_vertex = v;
        stats.n = layout.n;
        stats.s = layout.s;
        stats.vertices_before = g.vertex_count();
        stats.budget_before = g.k;

        std::vector<std::size_t> d, e;
        for (std::size_t b = 0 ; b < g.graph.block_count() ; ++b) {
            if (g.graph.block(b).precolor)
                continue;
            if (g.graph.joined(b, vb)) {
                e.push_back(b);
                stats.e_count += g.graph.block(b).size;
            }
            else {
                d.push_back(b);
                stats.d_count += g.graph.block(b).size;
            }
        }

        auto a = out.graph.add_block({layout.s, true, VertexRole{VertexKind::supernode_a, iteration, 0, 0, {}}, std::nullopt});
        auto b = out.graph.add_block({layout.s, true, VertexRole{VertexKind::supernode_b, iteration, 0, 0, {}}, std::nullopt});
        auto c = out.graph.add_block({layout.s, true, VertexRole{VertexKind::supernode_c, iteration, 0, 0, {}}, std::nullopt});
        out.graph.join(b, c);
        for (auto x : e) {
            out.graph.join(x, a);
            out.graph.join(x, b);
            out.graph.join(x, c);
        }
        for (auto x : d) {
            out.graph.join(x, a);
            out.graph.join(x, b);
        }
        out.graph.remove_block(vb);

        out.color_roles.push_back(ColorRange{g.k, 2 * layout.s, ColorRole{ColorKind::supernode, iteration, 0}});
        out.k = g.k + 2 * layout.s;
        out.stage = "gprime";
        stats.vertices_after = out.vertex_count();
        stats.budget_after = out.k;
        out.stats.removals.push_back(stats);
        return out;
    }

    auto build_g3(const QdnfFormula & f) -> ReductionOutput
    {
        auto out = build_g2(f);
        auto p = out.stats.precolored;
        for (auto j = long(p) ; j >= 1 ; --j) {
            std::optional<std::uint64_t> z;
            for (std::size_t b = 0 ; b < out.graph.block_count() ; ++b) {
                auto & r = out.graph.block(b).role;
                if (r.kind == VertexKind::precolored && r.a == j)
                    z = out.graph.first_vertex(b);
            }
            out = remove_precolored_vertex(out, *z);
        }
        out.stage = "g3";
        return out;
    }

    auto wrap_graph(const PrecoloredGraph & g, std::uint64_t k) -> ReductionOutput
    {
        ReductionOutput out;
        out.stage = "base";
        out.k = k;
        for (Vertex v = 0 ; v < g.size() ; ++v)
            single(out.graph, VertexRole{VertexKind::base, long(v), 0, 0, {}}, g.precolor[v]);
        for (auto [u, v] : g.graph.edges())
            out.graph.join(u, v);
        for (std::uint64_t c = 0 ; c < k ; ++c)
            out.color_roles.push_back(ColorRange{c, 1, ColorRole{ColorKind::base, long(c), 0}});
        out.stats.nodes = g.free_count();
        return out;
    }

    auto sidecar_json(const ReductionOutput & out) -> std::string
    {
        using nlohmann::json;
        json j;
        j["stage"] = out.stage;
        j["formula"] = out.formula ? json(format_qdnf(*out.formula)) : json(nullptr);
        j["k"] = out.k;
        j["vertex_count"] = out.vertex_count();

        json colours = json::array();
        for (auto & r : out.color_roles) {
            json e;
            e["first"] = r.first;
            e["count"] = r.count;
            e["role"] = to_string(r.role);
            colours.push_back(e);
        }
        j["color_roles"] = colours;

        json vertices = json::array();
        for (std::size_t b = 0 ; b < out.graph.block_count() ; ++b) {
            auto & block = out.graph.block(b);
            json e;
            e["first"] = out.graph.first_vertex(b);
            e["count"] = block.size;
            e["role"] = to_string(block.role);
            e["clique"] = block.clique;
            if (block.precolor)
                e["precolor"] = *block.precolor;
            vertices.push_back(e);
        }
        j["vertex_roles"] = vertices;

        json stats;
        stats["N"] = out.stats.nodes;
        stats["p"] = out.stats.precolored;
        stats["k_g1"] = out.stats.g1_budget;
        stats["iterations"] = out.stats.removals.size();
        json removals = json::array();
        for (auto & r : out.stats.removals) {
            json e;
            e["iteration"] = r.iteration;
            e["removed_vertex"] = r.removed_vertex;
            e["D"] = r.d_count;
            e["E"] = r.e_count;
            e["N"] = r.n;
            e["S"] = r.s;
            e["vertices_before"] = r.vertices_before;
            e["vertices_after"] = r.vertices_after;
            e["k_before"] = r.budget_before;
            e["k_after"] = r.budget_after;
            removals.push_back(e);
        }
        stats["removals"] = removals;
        j["stats"] = stats;
        return j.dump(2) + "\n";
    }
}

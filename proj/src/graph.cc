#include <ochrom/graph.hh>
#include <ochrom/errors.hh>

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace ochrom
{
    Graph::Graph(std::size_t n) : _adj(n, Bitset(n))
    {
    }

    auto Graph::max_degree() const -> std::size_t
    {
        std::size_t result = 0;
        for (Vertex v = 0 ; v < size() ; ++v)
            result = std::max(result, degree(v));
        return result;
    }

    auto Graph::edge_count() const -> std::size_t
    {
        std::size_t twice = 0;
        for (auto & row : _adj)
            twice += row.count();
        return twice / 2;
    }

    auto Graph::edges() const -> std::vector<std::pair<Vertex, Vertex>>
    {
        std::vector<std::pair<Vertex, Vertex>> result;
        for (Vertex u = 0 ; u < size() ; ++u)
            for (Vertex v = _adj[u].find_next(u + 1) ; v < size() ; v = _adj[u].find_next(v + 1))
                result.emplace_back(u, v);
        return result;
    }

    auto Graph::add_edge(Vertex u, Vertex v) -> void
    {
        if (u >= size() || v >= size())
            throw ConstructionError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") has an endpoint outside 0.."
                    + std::to_string(size() == 0 ? 0 : size() - 1));
        if (u == v)
            throw ConstructionError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") is a self-loop");
        _adj[u].set(v);
        _adj[v].set(u);
    }

    auto Graph::permuted(const std::vector<Vertex> & perm) const -> Graph
    {
        Graph result(size());
        for (auto [u, v] : edges())
            result.add_edge(perm[u], perm[v]);
        return result;
    }

    auto graph_from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> & edges) -> Graph
    {
        Graph g(n);
        for (auto [u, v] : edges)
            g.add_edge(u, v);
        return g;
    }

    PrecoloredGraph::PrecoloredGraph(Graph g) : graph(std::move(g)), precolor(graph.size())
    {
    }

    PrecoloredGraph::PrecoloredGraph(Graph g, std::vector<std::optional<Color>> p) : graph(std::move(g)), precolor(std::move(p))
    {
        if (precolor.size() != graph.size())
            throw ConstructionError("precolor table size does not match vertex count");
        for (Vertex v = 0 ; v < size() ; ++v) {
            if (precolor[v] && *precolor[v] < 0)
                throw ConstructionError("vertex " + std::to_string(v) + " has a negative colour");
            if (precolor[v])
                graph.neighbours(v).for_each([&] (Vertex w) {
                        if (precolor[w] == precolor[v])
                            throw ConstructionError("precoloured vertices " + std::to_string(v) + " and " + std::to_string(w)
                                    + " are adjacent and share colour " + std::to_string(*precolor[v]));
                    });
        }
    }

    auto PrecoloredGraph::precolored_vertices() const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        for (Vertex v = 0 ; v < size() ; ++v)
            if (precolor[v])
                result.push_back(v);
        return result;
    }

    auto PrecoloredGraph::free_vertices() const -> std::vector<Vertex>
    {
        std::vector<Vertex> result;
        for (Vertex v = 0 ; v < size() ; ++v)
            if (! precolor[v])
                result.push_back(v);
        return result;
    }

    auto PrecoloredGraph::free_count() const -> std::size_t
    {
        return std::count_if(precolor.begin(), precolor.end(), [] (auto & c) { return ! c; });
    }

    auto PrecoloredGraph::precolor_count() const -> std::size_t
    {
        std::set<Color> colors;
        for (auto & c : precolor)
            if (c)
                colors.insert(*c);
        return colors.size();
    }

    auto PrecoloredGraph::validate_dense() const -> void
    {
        std::set<Color> colors;
        for (auto & c : precolor)
            if (c)
                colors.insert(*c);
        if (! colors.empty() && *colors.rbegin() != Color(colors.size()) - 1)
            throw ConstructionError("precolour ids must be exactly 0.." + std::to_string(colors.size() - 1));
    }

    auto PrecoloredGraph::permuted(const std::vector<Vertex> & perm) const -> PrecoloredGraph
    {
        std::vector<std::optional<Color>> p(size());
        for (Vertex v = 0 ; v < size() ; ++v)
            p[perm[v]] = precolor[v];
        return PrecoloredGraph{graph.permuted(perm), std::move(p)};
    }

    namespace
    {
        struct Token
        {
            std::string_view text;
            std::size_t column;
        };

        auto split(std::string_view line) -> std::vector<Token>
        {
            std::vector<Token> result;
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                std::size_t start = i;
                while (i < line.size() && ! (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                if (i > start)
                    result.push_back(Token{line.substr(start, i - start), start + 1});
            }
            return result;
        }

        auto number(const Token & t, std::size_t line) -> long long
        {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
            if (ec != std::errc{} || ptr != t.text.data() + t.text.size() || value < 0)
                throw ParseError("expected a nonnegative integer, found '" + std::string(t.text) + "'", line, t.column);
            return value;
        }
    }

    auto parse_graph(std::string_view text) -> PrecoloredGraph
    {
        struct Located { long long a, b; std::size_t line, column; };
        std::optional<long long> n;
        std::vector<Located> edges, colours;

        std::size_t line_no = 0;
        while (! text.empty()) {
            ++line_no;
            auto nl = text.find('\n');
            auto line = text.substr(0, nl);
            text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
            if (auto hash = line.find('#') ; hash != std::string_view::npos)
                line = line.substr(0, hash);

            auto tokens = split(line);
            if (tokens.empty())
                continue;

            auto expect = [&] (std::size_t count) {
                if (tokens.size() != count)
                    throw ParseError("'" + std::string(tokens[0].text) + "' line takes " + std::to_string(count - 1) + " arguments",
                            line_no, tokens[0].column);
            };

            if (tokens[0].text == "p") {
                expect(2);
                if (n)
                    throw ParseError("duplicate 'p' line", line_no, tokens[0].column);
                n = number(tokens[1], line_no);
            }
            else if (tokens[0].text == "e") {
                expect(3);
                edges.push_back(Located{number(tokens[1], line_no), number(tokens[2], line_no), line_no, tokens[1].column});
            }
            else if (tokens[0].text == "c") {
                expect(3);
                colours.push_back(Located{number(tokens[1], line_no), number(tokens[2], line_no), line_no, tokens[1].column});
            }
            else
                throw ParseError("unknown line type '" + std::string(tokens[0].text) + "'", line_no, tokens[0].column);
        }

        if (! n)
            throw ParseError("missing 'p <n>' line", line_no == 0 ? 1 : line_no, 1);

        Graph g(*n);
        for (auto & e : edges) {
            if (e.a >= *n || e.b >= *n)
                throw ParseError("edge endpoint out of range", e.line, e.column);
            if (e.a == e.b)
                throw ParseError("self-loop on vertex " + std::to_string(e.a), e.line, e.column);
            g.add_edge(e.a, e.b);
        }

        std::vector<std::optional<Color>> precolor(*n);
        for (auto & c : colours) {
            if (c.a >= *n)
                throw ParseError("precoloured vertex out of range", c.line, c.column);
            if (precolor[c.a])
                throw ParseError("vertex " + std::to_string(c.a) + " precoloured twice", c.line, c.column);
            precolor[c.a] = Color(c.b);
        }

        try {
            return PrecoloredGraph{std::move(g), std::move(precolor)};
        }
        catch (const ConstructionError & e) {
            throw ParseError(e.what(), 1, 1);
        }
    }

    auto format_graph(const PrecoloredGraph & g) -> std::string
    {
        std::ostringstream out;
        out << "p " << g.size() << '\n';
        for (auto [u, v] : g.graph.edges())
            out << "e " << u << ' ' << v << '\n';
        for (Vertex v = 0 ; v < g.size() ; ++v)
            if (g.precolor[v])
                out << "c " << v << ' ' << *g.precolor[v] << '\n';
        return out.str();
    }

    namespace
    {
        auto colourable(const Graph & g, const std::vector<Vertex> & order, std::vector<int> & colour,
                std::size_t depth, int k, int used) -> bool
        {
            if (depth == order.size())
                return true;
            Vertex v = order[depth];
            // Colours above `used` are interchangeable, so only one fresh colour is tried.
            for (int c = 0 ; c < std::min(k, used + 1) ; ++c) {
                bool ok = true;
                g.neighbours(v).for_each([&] (Vertex w) { if (colour[w] == c) ok = false; });
                if (! ok)
                    continue;
                colour[v] = c;
                if (colourable(g, order, colour, depth + 1, k, std::max(used, c + 1)))
                    return true;
                colour[v] = -1;
            }
            return false;
        }
    }

    auto chromatic_number(const Graph & g) -> std::size_t
    {
        if (g.size() > chromatic_number_limit)
            throw RefusalError("chromatic_number is limited to " + std::to_string(chromatic_number_limit)
                    + " vertices, graph has " + std::to_string(g.size()));
        if (g.size() == 0)
            return 0;

        std::vector<Vertex> order(g.size());
        for (Vertex v = 0 ; v < g.size() ; ++v)
            order[v] = v;
        std::stable_sort(order.begin(), order.end(), [&] (Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });

        for (int k = 1 ; ; ++k) {
            std::vector<int> colour(g.size(), -1);
            if (colourable(g, order, colour, 0, k, 0))
                return k;
        }
    }

    namespace
    {
        struct CliqueSearch
        {
            const std::vector<Bitset> & adj;
            const Bitset * penalised;
            std::size_t budget;
            Bitset current, best;
            std::size_t current_size = 0, best_size = 0;

            auto colour_order(const Bitset & p, std::vector<Vertex> & order, std::vector<std::size_t> & bounds) -> void
            {
                Bitset uncoloured = p;
                std::size_t colour = 0;
                while (uncoloured.any()) {
                    ++colour;
                    Bitset q = uncoloured;
                    for (auto v = q.find_first() ; v < q.size() ; v = q.find_next(v + 1)) {
                        uncoloured.reset(v);
                        q.subtract(adj[v]);
                        order.push_back(v);
                        bounds.push_back(colour);
                    }
                }
            }

            auto colour_count(Bitset uncoloured) const -> std::size_t
            {
                std::size_t colours = 0;
                while (uncoloured.any()) {
                    ++colours;
                    Bitset q = uncoloured;
                    for (auto v = q.find_first() ; v < q.size() ; v = q.find_next(v + 1)) {
                        uncoloured.reset(v);
                        q.subtract(adj[v]);
                    }
                }
                return colours;
            }

            auto expand(Bitset p, std::size_t penalty_used) -> void
            {
                if (penalised) {
                    auto pen = p.intersection_count(*penalised);
                    auto spare = std::min(pen, budget - penalty_used);
                    if (current_size + (p.count() - pen) + spare <= best_size)
                        return;
                    if (current_size + colour_count(Bitset(p).subtract(*penalised)) + spare <= best_size)
                        return;
                }

                std::vector<Vertex> order;
                std::vector<std::size_t> bounds;
                colour_order(p, order, bounds);

                for (std::size_t i = order.size() ; i > 0 ; --i) {
                    if (current_size + bounds[i - 1] <= best_size)
                        return;
                    Vertex v = order[i - 1];
                    bool is_penalised = penalised && penalised->test(v);
                    if (! is_penalised || penalty_used < budget) {
                        current.set(v);
                        ++current_size;
                        Bitset next = p & adj[v];
                        if (next.none()) {
                            if (current_size > best_size) {
                                best = current;
                                best_size = current_size;
                            }
                        }
                        else
                            expand(std::move(next), penalty_used + (is_penalised ? 1 : 0));
                        current.reset(v);
                        --current_size;
                    }
                    p.reset(v);
                }
            }
        };
    }

    auto maximum_clique(const std::vector<Bitset> & adj, const Bitset & allowed,
            const Bitset * penalised, std::size_t penalty_budget) -> Bitset
    {
        CliqueSearch search{adj, penalised, penalty_budget, Bitset(allowed.size()), Bitset(allowed.size())};
        if (allowed.any())
            search.expand(allowed, 0);
        return search.best;
    }

    auto path_graph(std::size_t n) -> Graph
    {
        Graph g(n);
        for (Vertex v = 0 ; v + 1 < n ; ++v)
            g.add_edge(v, v + 1);
        return g;
    }

    auto cycle_graph(std::size_t n) -> Graph
    {
        Graph g = path_graph(n);
        if (n >= 3)
            g.add_edge(n - 1, 0);
        return g;
    }

    auto complete_graph(std::size_t n) -> Graph
    {
        Graph g(n);
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v)
                g.add_edge(u, v);
        return g;
    }

    auto binomial_tree(std::size_t order) -> Graph
    {
        // B_k: two copies of B_{k-1} on [0, 2^{k-1}) and [2^{k-1}, 2^k), roots 0 and 2^{k-1} joined; root 0.
        std::vector<std::pair<Vertex, Vertex>> edges;
        std::size_t n = 1;
        for (std::size_t k = 1 ; k <= order ; ++k) {
            auto copy = edges;
            for (auto [u, v] : copy)
                edges.emplace_back(u + n, v + n);
            edges.emplace_back(0, n);
            n *= 2;
        }
        return graph_from_edges(n, edges);
    }
}

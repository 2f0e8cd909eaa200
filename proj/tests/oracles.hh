#pragma once

// Slow, obviously-correct reference implementations. None of them calls into the library
// beyond plain data access, so agreement with the library is evidence, not tautology.

#include <ochrom/graph.hh>
#include <ochrom/qdnf.hh>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace oracle
{
    using ochrom::Graph;
    using ochrom::Vertex;

    using Matrix = std::vector<std::vector<bool>>;

    inline auto matrix_of(const Graph & g) -> Matrix
    {
        Matrix m(g.size(), std::vector<bool>(g.size(), false));
        for (Vertex u = 0 ; u < g.size() ; ++u)
            for (Vertex v = 0 ; v < g.size() ; ++v)
                m[u][v] = u != v && g.adjacent(u, v);
        return m;
    }

    /// Tries every assignment of k colours to the vertices.
    inline auto chromatic_number(const Graph & g) -> std::size_t
    {
        auto n = g.size();
        auto m = matrix_of(g);
        for (std::size_t k = 0 ; ; ++k) {
            if (n == 0)
                return 0;
            if (k == 0)
                continue;
            std::vector<std::size_t> c(n, 0);
            while (true) {
                bool ok = true;
                for (Vertex u = 0 ; u < n && ok ; ++u)
                    for (Vertex v = u + 1 ; v < n && ok ; ++v)
                        if (m[u][v] && c[u] == c[v])
                            ok = false;
                if (ok)
                    return k;
                std::size_t i = 0;
                while (i < n && ++c[i] == k)
                    c[i++] = 0;
                if (i == n)
                    break;
            }
        }
    }

    /// Counts injective maps of `pattern` into `host` that preserve adjacency and non-adjacency.
    inline auto count_induced_embeddings(const Matrix & pattern, const Matrix & host) -> std::size_t
    {
        auto p = pattern.size(), h = host.size();
        std::size_t count = 0;
        std::vector<Vertex> map;
        std::vector<bool> used(h, false);
        auto rec = [&] (auto && self) -> void {
            if (map.size() == p) {
                ++count;
                return;
            }
            auto i = map.size();
            for (Vertex v = 0 ; v < h ; ++v) {
                if (used[v])
                    continue;
                bool ok = true;
                for (std::size_t j = 0 ; j < i && ok ; ++j)
                    ok = pattern[i][j] == host[v][map[j]];
                if (! ok)
                    continue;
                used[v] = true;
                map.push_back(v);
                self(self);
                map.pop_back();
                used[v] = false;
            }
        };
        rec(rec);
        return count;
    }

    /// The online colouring game with raw states: no table, no canonical forms, and every
    /// subset of revealed vertices tried as a Drawer move and kept if some embedding exists.
    class NaiveSolver
    {
        public:
            NaiveSolver(const Graph & host, std::size_t budget) : _host(matrix_of(host)), _budget(budget) { }

            auto painter_wins() -> bool
            {
                Matrix revealed;
                std::vector<std::size_t> colours;
                return drawer_to_move(revealed, colours);
            }

        private:
            Matrix _host;
            std::size_t _budget;

            auto drawer_to_move(Matrix & revealed, std::vector<std::size_t> & colours) -> bool
            {
                auto s = revealed.size();
                if (s == _host.size())
                    return true;
                for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << s) ; ++mask) {
                    auto extended = revealed;
                    for (auto & row : extended)
                        row.push_back(false);
                    extended.emplace_back(s + 1, false);
                    for (std::size_t i = 0 ; i < s ; ++i)
                        if ((mask >> i) & 1) {
                            extended[i][s] = true;
                            extended[s][i] = true;
                        }
                    if (count_induced_embeddings(extended, _host) == 0)
                        continue;

                    std::size_t used = colours.empty() ? 0 : *std::max_element(colours.begin(), colours.end()) + 1;
                    bool painter_survives = false;
                    for (std::size_t c = 0 ; c <= used && c < _budget && ! painter_survives ; ++c) {
                        bool clash = false;
                        for (std::size_t i = 0 ; i < s ; ++i)
                            if (((mask >> i) & 1) && colours[i] == c)
                                clash = true;
                        if (clash)
                            continue;
                        colours.push_back(c);
                        painter_survives = drawer_to_move(extended, colours);
                        colours.pop_back();
                    }
                    if (! painter_survives)
                        return false;
                }
                return true;
            }
    };

    /// Smallest budget the naive game lets Painter win with.
    inline auto online_chromatic_number(const Graph & g) -> std::size_t
    {
        for (std::size_t k = 0 ; ; ++k)
            if (NaiveSolver(g, k).painter_wins())
                return k;
    }

    /// Edge mask of the graph on n vertices, edges ordered (0,1), (0,2), ..., (n-2,n-1).
    inline auto graph_of_mask(std::size_t n, std::uint64_t mask) -> Graph
    {
        Graph g(n);
        std::size_t bit = 0;
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v, ++bit)
                if ((mask >> bit) & 1)
                    g.add_edge(u, v);
        return g;
    }

    /// One graph per isomorphism class on n vertices: the minimum mask over all relabelings.
    inline auto isomorphism_classes(std::size_t n) -> std::vector<Graph>
    {
        std::size_t pairs = n * (n - 1) / 2;
        std::vector<bool> seen(std::size_t{1} << pairs, false);
        std::vector<Graph> result;
        std::vector<Vertex> perm(n);
        for (std::uint64_t mask = 0 ; mask < (std::uint64_t{1} << pairs) ; ++mask) {
            if (seen[mask])
                continue;
            auto g = graph_of_mask(n, mask);
            result.push_back(g);
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::uint64_t image = 0;
                std::size_t bit = 0;
                for (Vertex u = 0 ; u < n ; ++u)
                    for (Vertex v = u + 1 ; v < n ; ++v, ++bit)
                        if (g.adjacent(perm[u], perm[v]))
                            image |= std::uint64_t{1} << bit;
                seen[image] = true;
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        return result;
    }

    inline auto random_graph(std::size_t n, double p, std::mt19937_64 & rng) -> Graph
    {
        std::bernoulli_distribution edge(p);
        Graph g(n);
        for (Vertex u = 0 ; u < n ; ++u)
            for (Vertex v = u + 1 ; v < n ; ++v)
                if (edge(rng))
                    g.add_edge(u, v);
        return g;
    }

    /// Truth table of the matrix over all assignments, folded from the innermost quantifier.
    inline auto evaluate(const ochrom::QdnfFormula & f) -> bool
    {
        auto n = f.prefix.size();
        std::vector<bool> table(std::size_t{1} << n);
        for (std::uint64_t a = 0 ; a < table.size() ; ++a) {
            bool any = false;
            for (auto & clause : f.clauses) {
                bool all = true;
                for (auto & lit : clause) {
                    std::size_t pos = 0;
                    while (f.prefix[pos].id != lit.variable)
                        ++pos;
                    bool value = (a >> (n - 1 - pos)) & 1;
                    all = all && value == lit.positive;
                }
                any = any || all;
            }
            table[a] = any;
        }
        for (std::size_t level = n ; level > 0 ; --level) {
            bool forall = f.prefix[level - 1].quantifier == ochrom::Quantifier::forall;
            std::vector<bool> next(table.size() / 2);
            for (std::size_t i = 0 ; i < next.size() ; ++i)
                next[i] = forall ? (table[2 * i] && table[2 * i + 1]) : (table[2 * i] || table[2 * i + 1]);
            table = std::move(next);
        }
        return table[0];
    }
}

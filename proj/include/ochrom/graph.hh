#pragma once

#include <ochrom/bitset.hh>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ochrom
{
    using Vertex = std::size_t;
    using Color = int;

    /// Undirected simple graph on vertices 0..n-1, stored as adjacency rows.
    class Graph
    {
        public:
            Graph() = default;
            explicit Graph(std::size_t n);

            auto size() const -> std::size_t { return _adj.size(); }

            auto adjacent(Vertex u, Vertex v) const -> bool { return _adj[u].test(v); }
            auto neighbours(Vertex v) const -> const Bitset & { return _adj[v]; }
            auto degree(Vertex v) const -> std::size_t { return _adj[v].count(); }
            auto max_degree() const -> std::size_t;
            auto edge_count() const -> std::size_t;

            /// Edges (u, v) with u < v, in lexicographic order.
            auto edges() const -> std::vector<std::pair<Vertex, Vertex>>;

            /// Adds an edge; repeated edges collapse. Throws ConstructionError on a loop or bad endpoint.
            auto add_edge(Vertex u, Vertex v) -> void;

            /// The graph with vertex v renamed to perm[v].
            auto permuted(const std::vector<Vertex> & perm) const -> Graph;

            friend auto operator== (const Graph &, const Graph &) -> bool = default;

        private:
            std::vector<Bitset> _adj;
    };

    auto graph_from_edges(std::size_t n, const std::vector<std::pair<Vertex, Vertex>> & edges) -> Graph;

    /// A graph whose precolored vertices are revealed, with their colours, before the game
    /// starts. Precolored vertex identities are public.
    struct PrecoloredGraph
    {
        Graph graph;
        std::vector<std::optional<Color>> precolor;

        PrecoloredGraph() = default;
        explicit PrecoloredGraph(Graph g);
        PrecoloredGraph(Graph g, std::vector<std::optional<Color>> p);

        auto size() const -> std::size_t { return graph.size(); }
        auto is_precolored(Vertex v) const -> bool { return precolor[v].has_value(); }
        auto precolored_vertices() const -> std::vector<Vertex>;
        auto free_vertices() const -> std::vector<Vertex>;
        auto free_count() const -> std::size_t;

        /// Number of distinct precolor ids.
        auto precolor_count() const -> std::size_t;

        /// Throws ConstructionError unless the precoloring is proper and uses ids 0..q-1.
        auto validate_dense() const -> void;

        auto permuted(const std::vector<Vertex> & perm) const -> PrecoloredGraph;

        friend auto operator== (const PrecoloredGraph &, const PrecoloredGraph &) -> bool = default;
    };

    /// Parses the line format: `p <n>`, `e <u> <v>`, `c <v> <color>`, `#` comments.
    auto parse_graph(std::string_view text) -> PrecoloredGraph;

    /// Inverse of parse_graph: `p` line, edges in lexicographic order, then precolors.
    auto format_graph(const PrecoloredGraph & g) -> std::string;

    /// Exact chromatic number by backtracking. Refuses graphs with more than 16 vertices.
    auto chromatic_number(const Graph & g) -> std::size_t;

    inline constexpr std::size_t chromatic_number_limit = 16;

    /// Maximum clique within `allowed` by branch and bound with a greedy colouring bound.
    /// At most `penalty_budget` vertices of the result may come from `penalised`.
    auto maximum_clique(const std::vector<Bitset> & adj, const Bitset & allowed,
            const Bitset * penalised = nullptr, std::size_t penalty_budget = 0) -> Bitset;

    // Small named families used by tests and the CLI.
    auto path_graph(std::size_t n) -> Graph;
    auto cycle_graph(std::size_t n) -> Graph;
    auto complete_graph(std::size_t n) -> Graph;
    auto binomial_tree(std::size_t order) -> Graph;
}

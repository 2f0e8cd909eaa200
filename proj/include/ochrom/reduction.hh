#pragma once

#include <ochrom/graph.hh>
#include <ochrom/qdnf.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ochrom
{
    enum class ColorKind { set, unset, set_true, set_false, unset_exists, clause_f, clause_false, node, supernode, base };

    /// Name of a colour in a constructed host. `a` is a variable id, a 1-based clause index,
    /// a node-colour index, or an iteration; `b` is the index within a supernode palette.
    struct ColorRole
    {
        ColorKind kind = ColorKind::base;
        long a = 0, b = 0;

        friend auto operator== (const ColorRole &, const ColorRole &) -> bool = default;
    };

    auto to_string(const ColorRole & r) -> std::string;

    enum class VertexKind
    {
        kcol, forall_true, forall_false, exists_true, exists_false, exists_helper,
        literal, clause, final, node_p1, node_p2, node_p3, precolored,
        supernode_a, supernode_b, supernode_c, base
    };

    /// Name of a vertex in a constructed host.
    ///   kcol: `colour` is the colour the clique vertex stands for
    ///   x vertices: `a` = variable id
    ///   literal: `a` = clause (1-based), `b` = variable id, `c` = position 1..3
    ///   clause (d_a): `a` = clause; node_p*: `a` = node index (1-based); precolored (z_j): `a` = j
    ///   supernode_*: `a` = iteration (1-based), `b` = index inside the clique
    ///   base: `a` = vertex id in a wrapped input graph
    struct VertexRole
    {
        VertexKind kind = VertexKind::base;
        long a = 0, b = 0, c = 0;
        ColorRole colour;

        friend auto operator== (const VertexRole &, const VertexRole &) -> bool = default;
    };

    auto to_string(const VertexRole & r) -> std::string;

    /// A blow-up graph: blocks of vertices, each block a clique or an independent set, and
    /// each pair of blocks either completely joined or not adjacent at all. Vertex ids are
    /// consecutive within a block, blocks in order. This keeps the iterated supernode
    /// construction representable long after it is too large to list edge by edge.
    class BlockGraph
    {
        public:
            struct Block
            {
                std::uint64_t size = 1;
                bool clique = false;
                VertexRole role;
                std::optional<Color> precolor;

                friend auto operator== (const Block &, const Block &) -> bool = default;
            };

            auto block_count() const -> std::size_t { return _blocks.size(); }
            auto block(std::size_t b) const -> const Block & { return _blocks[b]; }
            auto joined(std::size_t a, std::size_t b) const -> bool { return _joins[a].test(b); }

            auto add_block(Block b) -> std::size_t;
            auto join(std::size_t a, std::size_t b) -> void;
            auto remove_block(std::size_t b) -> void;

            auto vertex_count() const -> std::uint64_t;
            auto first_vertex(std::size_t b) const -> std::uint64_t;
            auto block_of(std::uint64_t v) const -> std::size_t;
            auto adjacent(std::uint64_t u, std::uint64_t v) const -> bool;
            auto role(std::uint64_t v) const -> VertexRole;
            auto precolor(std::uint64_t v) const -> std::optional<Color>;

            /// Explicit graph; refuses when vertex_count() exceeds `limit`.
            auto materialize(std::uint64_t limit = 20000) const -> PrecoloredGraph;

            friend auto operator== (const BlockGraph &, const BlockGraph &) -> bool = default;

        private:
            std::vector<Block> _blocks;
            std::vector<Bitset> _joins;
            std::vector<std::uint64_t> _first;

            auto reindex() -> void;
    };

    struct ColorRange
    {
        std::uint64_t first = 0, count = 1;
        ColorRole role;

        friend auto operator== (const ColorRange &, const ColorRange &) -> bool = default;
    };

    struct RemovalStats
    {
        std::uint64_t iteration = 0;
        std::uint64_t removed_vertex = 0;
        std::uint64_t d_count = 0, e_count = 0;
        std::uint64_t n = 0, s = 0;
        std::uint64_t vertices_before = 0, vertices_after = 0;
        std::uint64_t budget_before = 0, budget_after = 0;

        friend auto operator== (const RemovalStats &, const RemovalStats &) -> bool = default;
    };

    struct ReductionStats
    {
        std::uint64_t nodes = 0;        // N of the node construction (|V(G1)|)
        std::uint64_t precolored = 0;   // p
        std::uint64_t g1_budget = 0;    // k
        std::vector<RemovalStats> removals;

        friend auto operator== (const ReductionStats &, const ReductionStats &) -> bool = default;
    };

    struct ReductionOutput
    {
        std::string stage;
        std::optional<QdnfFormula> formula;
        BlockGraph graph;
        std::uint64_t k = 0;
        std::vector<ColorRange> color_roles;
        ReductionStats stats;

        auto vertex_count() const -> std::uint64_t { return graph.vertex_count(); }
        auto vertex_role(std::uint64_t v) const -> VertexRole { return graph.role(v); }
        auto color_role(std::uint64_t c) const -> ColorRole;
        auto precolored_vertices() const -> std::vector<std::uint64_t>;
        auto materialize(std::uint64_t limit = 20000) const -> PrecoloredGraph { return graph.materialize(limit); }

        friend auto operator== (const ReductionOutput &, const ReductionOutput &) -> bool = default;
    };

    /// Vertex and colour numbering of the large-precoloured-part construction. Strategies
    /// recompute this from the formula instead of parsing role strings.
    struct G1Layout
    {
        struct Variable
        {
            int id = 0;
            Quantifier quantifier = Quantifier::exists;
            // ∀: set_true = set_i, unset = unset_i, set_false unused (-1).
            // ∃: set_true = set_{j,t}, set_false = set_{j,f}, unset = unset_j.
            Color set_true = -1, set_false = -1, unset = -1;
            Vertex t = 0, f = 0, h = 0;    // h only for ∃
        };

        struct ClauseLayout
        {
            Color f = -1, falsified = -1;
            std::array<Vertex, 3> literal{};
            std::array<std::size_t, 3> position{};    // prefix position of each literal's variable
            std::array<bool, 3> positive{};
            Vertex d = 0;
        };

        std::size_t k = 0;
        std::size_t vertex_count = 0;
        std::vector<Variable> variables;    // in prefix order
        std::vector<ClauseLayout> clauses;
        Vertex final = 0;

        /// Allowed colours per vertex (empty for K_col vertices, which are vertex id = colour).
        std::vector<std::vector<Color>> allowed;
        std::vector<VertexRole> roles;
        std::vector<ColorRole> colour_roles;

        /// The other ∀-vertex of the same variable, if v is one.
        auto forall_partner(Vertex v) const -> std::optional<Vertex>;
        auto is_kcol(Vertex v) const -> bool { return v < k; }
    };

    auto g1_layout(const QdnfFormula & f) -> G1Layout;

    /// Adjacency of G1 on the layout's vertex numbering (K_col included).
    auto g1_graph(const G1Layout & l) -> Graph;

    struct G2Layout
    {
        G1Layout g1;
        std::size_t n = 0;              // nodes = |V(G1)|
        std::size_t p = 0;              // precoloured vertices
        std::size_t k_prime = 0;
        Vertex node_base = 0;           // node i (1-based) has p1 at node_base + 3(i-1)
        Vertex z_base = 0;              // z_j (1-based) at z_base + j - 1
        Color node_colour_base = 0;     // node colours k .. k + 2N - 1

        auto node_vertex(std::size_t node, int which) const -> Vertex { return node_base + 3 * (node - 1) + which; }
        /// Node (1-based) containing v, or 0 if v is not a node vertex.
        auto node_of(Vertex v) const -> std::size_t;
        /// G1 vertices identified by `node` (one, or two for ∀ pairs).
        auto identified_by(std::size_t node) const -> std::vector<Vertex>;
        auto identifies(std::size_t node, Vertex g1_vertex) const -> bool;
        auto vertex_count() const -> std::size_t { return z_base + p; }
    };

    auto g2_layout(const QdnfFormula & f) -> G2Layout;

    auto build_g1(const QdnfFormula & f) -> ReductionOutput;
    auto build_g2(const QdnfFormula & f) -> ReductionOutput;

    /// Replaces precoloured vertex `v` by a supernode (cliques A, B, C of size 8N). Throws
    /// ArgumentError when `v` is not precoloured.
    auto remove_precolored_vertex(const ReductionOutput & g, std::uint64_t v) -> ReductionOutput;

    /// Removes every precoloured vertex of build_g2(f), highest z index first.
    auto build_g3(const QdnfFormula & f) -> ReductionOutput;

    /// Wraps an arbitrary precoloured graph so it can go through remove_precolored_vertex.
    auto wrap_graph(const PrecoloredGraph & g, std::uint64_t k) -> ReductionOutput;

    /// Stable JSON sidecar: {color_roles, formula, k, stage, stats, vertex_count, vertex_roles}.
    auto sidecar_json(const ReductionOutput & out) -> std::string;

    /// Vertex layout of a graph produced by a single remove_precolored_vertex call.
    struct SupernodeLayout
    {
        std::uint64_t original_count = 0;   // |V(G)|
        std::uint64_t removed = 0;          // v_p in G's numbering
        std::uint64_t s = 0, n = 0;
        std::uint64_t a_first = 0, b_first = 0, c_first = 0;

        auto in_a(std::uint64_t v) const -> bool { return v >= a_first && v < a_first + s; }
        auto in_b(std::uint64_t v) const -> bool { return v >= b_first && v < b_first + s; }
        auto in_c(std::uint64_t v) const -> bool { return v >= c_first && v < c_first + s; }
        auto in_supernode(std::uint64_t v) const -> bool { return v >= a_first; }
        /// G' vertex outside the supernode → vertex of G.
        auto to_original(std::uint64_t v) const -> std::uint64_t { return v < removed ? v : v + 1; }
        auto from_original(std::uint64_t v) const -> std::uint64_t { return v < removed ? v : v - 1; }
    };

    auto supernode_layout(const ReductionOutput & before, std::uint64_t removed) -> SupernodeLayout;
}

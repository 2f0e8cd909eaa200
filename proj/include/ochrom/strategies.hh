#pragma once

#include <ochrom/game.hh>
#include <ochrom/qdnf.hh>
#include <ochrom/reduction.hh>
#include <ochrom/solver.hh>

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ochrom
{
    /// Smallest colour not on the neighbourhood; the fresh colour if every used one is blocked.
    auto first_fit_colour(const GameState & state, const Bitset & neighbourhood) -> Color;

    class FirstFit : public PainterStrategy
    {
        public:
            auto name() const -> std::string override { return "firstfit"; }
            auto colour(const GameState & state, const PrecoloredGraph &, const Bitset & n, std::size_t) -> Color override
            {
                return first_fit_colour(state, n);
            }
            auto clone() const -> std::unique_ptr<PainterStrategy> override { return std::make_unique<FirstFit>(*this); }
    };

    /// Plays the first colour the exact solver proves winning; FirstFit once the game is lost.
    class OptimalPainter : public PainterStrategy
    {
        public:
            auto name() const -> std::string override { return "optimal"; }
            auto colour(const GameState & state, const PrecoloredGraph & host, const Bitset & n, std::size_t budget) -> Color override;
            auto clone() const -> std::unique_ptr<PainterStrategy> override { return std::make_unique<OptimalPainter>(*this); }

        private:
            // Shared between clones: the table only grows and clones play the same host.
            std::shared_ptr<const PrecoloredGraph> _host;
            std::shared_ptr<Solver> _solver;
            std::size_t _budget = 0;
    };

    /// Base for Drawers that know where every revealed vertex lives. Each move carries the
    /// current assignment as a witness; subclasses may reassign a slot between two host
    /// vertices that look the same from everything revealed so far.
    class PlacingDrawer : public DrawerStrategy
    {
        protected:
            std::vector<Vertex> _placed;    // host vertex of revealed slot anchors()+i

            auto host_of(const GameState & state, Vertex slot) const -> Vertex;
            auto slot_of(const GameState & state, Vertex host_vertex) const -> std::optional<Vertex>;
            auto present(const GameState & state, const PrecoloredGraph & host, Vertex v) -> DrawerMove;
            auto presented(Vertex host_vertex) const -> bool;
    };

    /// The two-nonadjacent-vertices Drawer for P4 (vertices 0-1-2-3).
    class P4Drawer : public PlacingDrawer
    {
        public:
            auto name() const -> std::string override { return "drawer-p4"; }
            auto move(const GameState & state, const PrecoloredGraph & host) -> DrawerMove override;
            auto clone() const -> std::unique_ptr<DrawerStrategy> override { return std::make_unique<P4Drawer>(*this); }
    };

    struct NodeTriple
    {
        Vertex p1, p2, p3;
    };

    /// m nodes (p1, p2, p3 with the single edge p2p3) with complete joins between nodes.
    /// Node i uses vertices 3i, 3i+1, 3i+2.
    auto node_graph(std::size_t m) -> Graph;
    auto node_graph_triples(std::size_t m) -> std::vector<NodeTriple>;

    /// Forces two colours on the lower part of each node: present p1, then q ∈ {p2, p3};
    /// q is p3 when Painter repeats p1's colour (p2 is then sent), otherwise q is p2.
    /// Remaining p3 vertices and any other free vertices follow in ascending order.
    class NodeDrawer : public PlacingDrawer
    {
        public:
            explicit NodeDrawer(std::vector<NodeTriple> nodes);

            auto name() const -> std::string override { return "drawer-nodes"; }
            auto move(const GameState & state, const PrecoloredGraph & host) -> DrawerMove override;
            auto clone() const -> std::unique_ptr<DrawerStrategy> override { return std::make_unique<NodeDrawer>(*this); }

            /// Host vertex chosen for the next round of the node phase, or nothing once it is over.
            auto node_step(const GameState & state) -> std::optional<Vertex>;

        protected:
            std::vector<NodeTriple> _nodes;
            std::size_t _node = 0;
            int _stage = 0;
            std::vector<Vertex> _leftover;
    };

    /// Forcing schedule over the gadgets of G1: variable vertices in prefix order with
    /// universal identities fixed after Painter commits, then literals, clauses, and F.
    /// `role_of` maps a game colour to the K_col colour id it plays (or -1).
    class G1Forcing
    {
        public:
            explicit G1Forcing(const QdnfFormula & f);

            auto next(const GameState & state, std::vector<Vertex> & placed, std::size_t anchors,
                    const std::function<Color (Color)> & role_of) -> std::optional<Vertex>;

            auto layout() const -> const G1Layout & { return _layout; }

        private:
            G1Layout _layout;
            std::shared_ptr<const QdnfOracle> _oracle;
            std::vector<Vertex> _schedule;
            std::vector<int> _ambiguous;    // prefix position for the first vertex of a ∀ pair, else -1
            std::size_t _step = 0;
            std::vector<bool> _values;
    };

    class DrawerG1 : public PlacingDrawer
    {
        public:
            /// Throws ArgumentError when `f` is true.
            explicit DrawerG1(const QdnfFormula & f);

            auto name() const -> std::string override { return "drawer-g1"; }
            auto move(const GameState & state, const PrecoloredGraph & host) -> DrawerMove override;
            auto clone() const -> std::unique_ptr<DrawerStrategy> override { return std::make_unique<DrawerG1>(*this); }

        private:
            G1Forcing _forcing;
    };

    /// Nodes first (NodeDrawer), then K_col, then the G1 forcing schedule.
    class DrawerG2 : public NodeDrawer
    {
        public:
            explicit DrawerG2(const QdnfFormula & f);

            auto name() const -> std::string override { return "drawer-g2"; }
            auto move(const GameState & state, const PrecoloredGraph & host) -> DrawerMove override;
            auto clone() const -> std::unique_ptr<DrawerStrategy> override { return std::make_unique<DrawerG2>(*this); }

        private:
            G2Layout _layout;
            G1Forcing _forcing;
            int _phase = 0;
            std::size_t _kcol = 0;
    };

    /// The G1 Painter as a recogniser over G1 identities, independent of how
    /// identities are observed. Vertices arrive with a set of candidate G1 vertices and their
    /// adjacency to earlier arrivals; answers are K_col colour ids.
    class G1Brain
    {
        public:
            explicit G1Brain(const QdnfFormula & f);

            /// Throws ArgumentError when `f` is false.
            auto arrive(std::vector<Vertex> candidates, const std::vector<bool> & adjacent_to_earlier) -> Color;

            auto layout() const -> const G1Layout & { return *_layout; }
            auto arrivals() const -> std::size_t { return _items.size(); }
            /// Candidates still possible for arrival `i`.
            auto candidates(std::size_t i) const -> const std::vector<Vertex> & { return _items[i].candidates; }
            auto assignment() const -> const std::vector<std::optional<bool>> & { return _value; }
            /// Replaces the colour recorded for the latest arrival (-1 for a colour outside K_col).
            auto record(Color c) -> void { _items.back().colour = c; learn_values(); }

        private:
            struct Item
            {
                std::vector<Vertex> candidates;
                Color colour = -1;
                std::vector<bool> adjacent;     // to earlier items
            };

            std::shared_ptr<const G1Layout> _layout;
            std::shared_ptr<const Graph> _graph;
            std::shared_ptr<const QdnfOracle> _oracle;
            std::vector<Item> _items;
            std::vector<std::optional<bool>> _value;
            std::vector<bool> _set;
            std::vector<int> _position;     // prefix position of each variable vertex, else -1
            bool _late = false;     // a literal, clause or final vertex has arrived

            auto observed(std::size_t a, std::size_t b) const -> bool;
            auto propagate() -> void;
            auto learn_values() -> void;
            auto assign_unset(std::size_t before) -> void;
            auto partial(std::size_t before) const -> std::vector<bool>;
            auto clause_true(std::size_t clause) const -> bool;
            auto planned(Vertex v) const -> std::optional<Color>;
            auto variable_colour(Vertex v, bool value) const -> Color;
            auto decide(std::size_t i) const -> Color;
    };

    /// Painter on build_g1(f) for a true f: recognises gadgets by their K_col neighbours.
    class PainterG1 : public PainterStrategy
    {
        public:
            explicit PainterG1(const QdnfFormula & f);

            auto name() const -> std::string override { return "painter-g1"; }
            auto colour(const GameState & state, const PrecoloredGraph & host, const Bitset & n, std::size_t budget) -> Color override;
            auto clone() const -> std::unique_ptr<PainterStrategy> override { return std::make_unique<PainterG1>(*this); }

        private:
            G1Brain _brain;
            std::map<std::vector<Color>, std::vector<Vertex>> _by_allowed;
    };

    /// Painter on build_g2(f) for a true f: Greedy with separate node and G1 palettes until two
    /// nonadjacent G1 vertices arrive, then Winning with a simulated G1 Painter.
    class PainterG2 : public PainterStrategy
    {
        public:
            explicit PainterG2(const QdnfFormula & f);

            auto name() const -> std::string override { return "painter-g2"; }
            auto colour(const GameState & state, const PrecoloredGraph & host, const Bitset & n, std::size_t budget) -> Color override;
            auto clone() const -> std::unique_ptr<PainterStrategy> override { return std::make_unique<PainterG2>(*this); }

            /// Colours reserved for nodes (𝒞) and for G1 (𝒟), in allocation order.
            auto node_palette() const -> const std::vector<Color> & { return _node_palette; }
            auto g1_palette() const -> const std::vector<Color> & { return _g1_palette; }
            auto winning() const -> bool { return _winning; }

            /// Simulated colours that could not follow the simulation (kept for diagnostics).
            auto mismatches() const -> std::size_t { return _mismatches; }

        private:
            std::shared_ptr<const G2Layout> _layout;
            G1Brain _brain;
            std::vector<Color> _node_palette, _g1_palette;
            std::map<Color, Color> _binding;        // K_col colour id in the simulation → game colour
            std::vector<std::size_t> _node_of;      // revealed slot → node index (0 for G1)
            std::vector<Vertex> _g1_slots;          // G1 vertices in arrival order
            std::vector<Vertex> _greedy;            // G1 vertices coloured by Greedy
            std::vector<Vertex> _simulated;         // slots in simulation order
            std::vector<Vertex> _orphans;           // Greedy vertices whose colour disagrees with the simulation
            bool _winning = false;
            std::size_t _mismatches = 0;

            auto is_simulated(Vertex slot) const -> bool;
            auto adjacent(const GameState & state, const Bitset & n, Vertex a, Vertex b) const -> bool;
            auto smallest(const GameState & state, const Bitset & n, std::vector<Color> & palette,
                    const std::function<bool (Color)> & skip) -> Color;
            auto recognise(const GameState & state, const Bitset & n, Vertex slot) const -> std::optional<std::vector<Vertex>>;
            auto simulate(const GameState & state, const Bitset & n, Vertex slot, const std::vector<Vertex> & candidates) -> Color;
            auto catch_up(const GameState & state, const Bitset & n) -> void;
            auto is_orphan(Vertex slot) const -> bool;
            auto is_reserved(const GameState & state, Color g) const -> bool;
    };

    /// Drawer on remove_precolored_vertex(g, v): sends A, then B∪C resolving each vertex
    /// to C whenever Painter reuses a colour of A, then replays `inner` on D∪E.
    class DrawerGPrime : public PlacingDrawer
    {
        public:
            DrawerGPrime(std::shared_ptr<const PrecoloredGraph> original, SupernodeLayout layout, std::unique_ptr<DrawerStrategy> inner);
            DrawerGPrime(const DrawerGPrime & other);

            auto name() const -> std::string override { return "drawer-gprime"; }
            auto move(const GameState & state, const PrecoloredGraph & host) -> DrawerMove override;
            auto clone() const -> std::unique_ptr<DrawerStrategy> override { return std::make_unique<DrawerGPrime>(*this); }

        private:
            std::shared_ptr<const PrecoloredGraph> _original;
            SupernodeLayout _layout;
            std::unique_ptr<DrawerStrategy> _inner;
            std::size_t _b_used = 0, _c_used = 0;
            bool _pending = false;
    };

    /// Colour sets of PainterGPrime.
    struct PaletteLedger
    {
        std::set<Color> c, e, s;

        auto disjoint() const -> bool;
    };

    /// Painter on remove_precolored_vertex(g, v): WaitForD, then InitSimulation and
    /// ColorBySimulation around `inner`, a Painter for the pre-removal graph.
    class PainterGPrime : public PainterStrategy
    {
        public:
            enum class Part { hidden, b, c, d, e };

            PainterGPrime(std::shared_ptr<const PrecoloredGraph> original, SupernodeLayout layout, std::unique_ptr<PainterStrategy> inner);
            PainterGPrime(const PainterGPrime & other);

            auto name() const -> std::string override { return "painter-gprime"; }
            auto colour(const GameState & state, const PrecoloredGraph & host, const Bitset & n, std::size_t budget) -> Color override;
            auto clone() const -> std::unique_ptr<PainterStrategy> override { return std::make_unique<PainterGPrime>(*this); }

            auto ledger() const -> const PaletteLedger & { return _ledger; }
            auto simulating() const -> bool { return _simulating; }
            /// Recognised part of each revealed non-anchor slot (empty before the simulation starts).
            auto parts() const -> const std::vector<Part> & { return _part; }
            /// Simulated vertices whose real colour differs from the simulation's choice.
            auto mismatches() const -> std::size_t { return _mismatches; }

        private:
            std::shared_ptr<const PrecoloredGraph> _original;
            SupernodeLayout _layout;
            std::unique_ptr<PainterStrategy> _inner;
            PaletteLedger _ledger;
            bool _simulating = false;
            std::size_t _mismatches = 0;

            Bitset _k_a, _k_bc;
            Vertex _d1 = 0;
            std::vector<Part> _part;                // per revealed non-anchor slot

            GameState _virtual;                     // the pre-removal graph, its anchors first
            std::map<Vertex, Vertex> _virtual_of;   // game slot → virtual slot
            std::map<Color, Color> _to_virtual, _to_real;

            auto classify(const GameState & state, const Bitset & n, Vertex u) const -> Part;
            auto surely_d(const GameState & state, const Bitset & n, Vertex u) const -> bool;
            auto wait_for_d(const GameState & state, const Bitset & n) -> bool;
            auto init_simulation(const GameState & state, const Bitset & n, std::size_t budget) -> void;
            auto virtual_neighbourhood(const GameState & state, const Bitset & n, Vertex u, bool in_e) const -> Bitset;
            auto bind_virtual(Color real) -> Color;
            auto add_virtual(const GameState & state, const Bitset & n, Vertex u, Color virtual_colour) -> void;
            auto ask_inner(const GameState & state, const Bitset & n, Vertex u, std::size_t budget) -> std::pair<Bitset, Color>;
    };

    /// Everything a named strategy may be built from.
    struct StrategyContext
    {
        std::shared_ptr<const PrecoloredGraph> host;
        std::optional<QdnfFormula> formula;
        std::string stage;      // "g1", "g2", "gprime" or empty
        /// For the supernode strategies: the pre-removal graph and the removed vertex.
        std::shared_ptr<const PrecoloredGraph> original;
        std::optional<SupernodeLayout> supernode;
        /// Inner strategy for the supernode wrappers; empty means firstfit (Painter) or order (Drawer).
        std::string inner;
        std::uint64_t seed = 0;
    };

    auto painter_names() -> std::vector<std::string>;
    auto drawer_names() -> std::vector<std::string>;

    /// Throws ArgumentError for an unknown name or a context the strategy cannot use.
    auto make_painter(const std::string & name, const StrategyContext & context) -> std::unique_ptr<PainterStrategy>;
    auto make_drawer(const std::string & name, const StrategyContext & context) -> std::unique_ptr<DrawerStrategy>;
}

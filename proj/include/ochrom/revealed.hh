#pragma once

#include <ochrom/graph.hh>

#include <cstddef>
#include <vector>

namespace ochrom
{
    /// The coloured revealed graph of a game in progress.
    ///
    /// Slots 0..anchors()-1 are the host's precoloured vertices in ascending host order
    /// ("anchors"; their identities are public). The remaining slots are revealed vertices in
    /// arrival order. Every slot is coloured. Adjacency rows are sized to the host's vertex
    /// count so a revealed graph can grow until it covers the host.
    class RevealedGraph
    {
        public:
            RevealedGraph() = default;

            /// Only the anchors of `host` revealed.
            explicit RevealedGraph(const PrecoloredGraph & host);

            /// No anchors, room for `capacity` slots.
            explicit RevealedGraph(std::size_t capacity);

            auto size() const -> std::size_t { return _colour.size(); }
            auto capacity() const -> std::size_t { return _capacity; }
            auto anchors() const -> std::size_t { return _anchor_host.size(); }
            auto revealed_count() const -> std::size_t { return size() - anchors(); }
            auto is_anchor(Vertex slot) const -> bool { return slot < anchors(); }
            auto anchor_host(Vertex slot) const -> Vertex { return _anchor_host[slot]; }

            auto colour(Vertex slot) const -> Color { return _colour[slot]; }
            auto colours() const -> const std::vector<Color> & { return _colour; }
            auto adjacent(Vertex a, Vertex b) const -> bool { return _adj[a].test(b); }
            auto neighbours(Vertex slot) const -> const Bitset & { return _adj[slot]; }
            auto rows() const -> const std::vector<Bitset> & { return _adj; }

            /// One more than the largest colour present (colours are allocated in first-use order).
            auto used_colours() const -> Color;

            /// Appends a slot adjacent to exactly `neighbourhood` (a set of existing slots).
            auto add(const Bitset & neighbourhood, Color c) -> Vertex;

            /// Empty bitset sized for slots of this graph.
            auto empty_set() const -> Bitset { return Bitset(_capacity); }

            auto recolour(Vertex slot, Color c) -> void { _colour[slot] = c; }

            friend auto operator== (const RevealedGraph &, const RevealedGraph &) -> bool = default;

        private:
            std::size_t _capacity = 0;
            std::vector<Vertex> _anchor_host;
            std::vector<Bitset> _adj;
            std::vector<Color> _colour;
    };
}

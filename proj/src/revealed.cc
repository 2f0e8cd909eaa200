#include <ochrom/revealed.hh>
#include <ochrom/errors.hh>

#include <algorithm>

namespace ochrom
{
    RevealedGraph::RevealedGraph(const PrecoloredGraph & host) : _capacity(host.size())
    {
        for (Vertex v = 0 ; v < host.size() ; ++v)
            if (host.is_precolored(v)) {
                Bitset row(_capacity);
                for (Vertex slot = 0 ; slot < _anchor_host.size() ; ++slot)
                    if (host.graph.adjacent(v, _anchor_host[slot])) {
                        row.set(slot);
                        _adj[slot].set(_anchor_host.size());
                    }
                _anchor_host.push_back(v);
                _adj.push_back(std::move(row));
                _colour.push_back(*host.precolor[v]);
            }
    }

    RevealedGraph::RevealedGraph(std::size_t capacity) : _capacity(capacity)
    {
    }

    auto RevealedGraph::used_colours() const -> Color
    {
        Color result = 0;
        for (auto c : _colour)
            result = std::max(result, c + 1);
        return result;
    }

    auto RevealedGraph::add(const Bitset & neighbourhood, Color c) -> Vertex
    {
        if (size() >= _capacity)
            throw ArgumentError("revealed graph is full");
        Vertex slot = size();
        Bitset row(_capacity);
        neighbourhood.for_each([&] (Vertex w) {
                if (w >= slot)
                    throw ArgumentError("neighbourhood refers to slot " + std::to_string(w) + " which is not revealed");
                row.set(w);
                _adj[w].set(slot);
            });
        _adj.push_back(std::move(row));
        _colour.push_back(c);
        return slot;
    }
}

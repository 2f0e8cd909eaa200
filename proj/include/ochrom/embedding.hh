#pragma once

#include <ochrom/revealed.hh>

#include <cstddef>
#include <limits>
#include <vector>

namespace ochrom
{
    /// Slot → host vertex. Anchors map to themselves; the map is injective and induced.
    using Embedding = std::vector<Vertex>;

    inline constexpr std::size_t unlimited = std::numeric_limits<std::size_t>::max();

    /// Up to `limit` induced embeddings of `pattern` into `host`, in a deterministic order.
    ///
    /// Revealed slots are placed in descending pattern-degree order with forward checking
    /// on candidate sets; host candidates are tried in ascending order.
    auto induced_embeddings(const RevealedGraph & pattern, const PrecoloredGraph & host,
            std::size_t limit = unlimited) -> std::vector<Embedding>;

    auto embeddable(const RevealedGraph & pattern, const PrecoloredGraph & host) -> bool;

    /// Whether `pattern` plus one new slot adjacent to exactly `neighbourhood` is embeddable.
    auto extension_embeddable(const RevealedGraph & pattern, const PrecoloredGraph & host, const Bitset & neighbourhood) -> bool;

    /// Checks a candidate embedding directly.
    auto is_induced_embedding(const RevealedGraph & pattern, const PrecoloredGraph & host, const Embedding & map) -> bool;

    /// All distinct neighbourhoods a new vertex can have: φ⁻¹(N(u) ∩ image φ) over every
    /// embedding φ and every unmapped free host vertex u. Ascending bitmask order.
    ///
    /// Embeddings related by swapping host twins give the same neighbourhood set, so only
    /// one representative per twin-swap orbit is enumerated.
    auto extension_neighbourhoods(const RevealedGraph & pattern, const PrecoloredGraph & host) -> std::vector<Bitset>;
}

#pragma once

#include <ochrom/revealed.hh>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ochrom
{
    /// Opaque certificate: equal iff the coloured revealed graphs are isomorphic by a map
    /// that fixes anchors pointwise and sends colour classes bijectively to colour classes.
    struct CanonicalKey
    {
        std::string bytes;

        friend auto operator== (const CanonicalKey &, const CanonicalKey &) -> bool = default;
        friend auto operator<=> (const CanonicalKey &, const CanonicalKey &) = default;
    };

    struct CanonicalKeyHash
    {
        auto operator() (const CanonicalKey & k) const -> std::size_t { return std::hash<std::string>{}(k.bytes); }
    };

    struct CanonicalForm
    {
        CanonicalKey key;
        /// order[i] is the slot placed at canonical position i (anchors come first).
        std::vector<Vertex> order;
    };

    /// Refinement plus individualisation backtracking. With `use_colours` false the colour
    /// classes are ignored and only the uncoloured revealed graph (with anchors) is keyed.
    auto canonical_form(const RevealedGraph & state, bool use_colours = true) -> CanonicalForm;

    auto canonical_key(const RevealedGraph & state) -> CanonicalKey;
}

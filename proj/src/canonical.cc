#include <ochrom/canonical.hh>

#include <algorithm>
#include <map>
#include <optional>

namespace ochrom
{
    namespace
    {
        // Auxiliary vertex-labelled graph: one vertex per slot, plus one vertex per colour class
        // joined to the slots of that class. Colour renaming becomes relabelling of the extra
        // vertices, so a plain labelled-graph canonical form handles it.
        struct Aux
        {
            std::size_t slots = 0;
            std::vector<std::vector<std::size_t>> adj;
            std::vector<std::vector<bool>> matrix;
            std::vector<long> initial;
        };

        auto build_aux(const RevealedGraph & state, bool use_colours) -> Aux
        {
            Aux aux;
            aux.slots = state.size();
            std::map<Color, std::size_t> colour_node;
            if (use_colours)
                for (auto c : state.colours())
                    colour_node.emplace(c, 0);
            std::size_t n = aux.slots + colour_node.size();
            {
                std::size_t next = aux.slots;
                for (auto & [_, node] : colour_node)
                    node = next++;
            }

            aux.adj.resize(n);
            aux.matrix.assign(n, std::vector<bool>(n, false));
            auto join = [&] (std::size_t a, std::size_t b) {
                aux.adj[a].push_back(b);
                aux.adj[b].push_back(a);
                aux.matrix[a][b] = aux.matrix[b][a] = true;
            };
            for (Vertex a = 0 ; a < state.size() ; ++a)
                state.neighbours(a).for_each([&] (Vertex b) { if (a < b) join(a, b); });
            if (use_colours)
                for (Vertex a = 0 ; a < state.size() ; ++a)
                    join(a, colour_node.at(state.colour(a)));

            // Anchors are individually labelled 0..anchors-1, then free slots, then colour nodes.
            aux.initial.resize(n);
            for (std::size_t v = 0 ; v < n ; ++v)
                aux.initial[v] = v < state.anchors() ? long(v) : v < aux.slots ? long(state.anchors()) : long(state.anchors()) + 1;
            return aux;
        }

        auto refine(const Aux & aux, std::vector<long> labels) -> std::vector<long>
        {
            std::size_t n = labels.size();
            std::size_t cells = 0;
            while (true) {
                std::vector<std::pair<std::vector<long>, std::size_t>> sig(n);
                for (std::size_t v = 0 ; v < n ; ++v) {
                    auto & s = sig[v].first;
                    s.push_back(labels[v]);
                    std::vector<long> nb;
                    for (auto w : aux.adj[v])
                        nb.push_back(labels[w]);
                    std::sort(nb.begin(), nb.end());
                    s.insert(s.end(), nb.begin(), nb.end());
                    sig[v].second = v;
                }
                std::vector<std::vector<long>> distinct;
                for (auto & [s, _] : sig)
                    distinct.push_back(s);
                std::sort(distinct.begin(), distinct.end());
                distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
                for (std::size_t v = 0 ; v < n ; ++v)
                    labels[v] = std::lower_bound(distinct.begin(), distinct.end(), sig[v].first) - distinct.begin();
                if (distinct.size() == cells)
                    return labels;
                cells = distinct.size();
            }
        }

        struct Leaf
        {
            std::string certificate;
            std::vector<std::size_t> order;
        };

        auto certificate(const Aux & aux, const std::vector<long> & labels) -> Leaf
        {
            std::size_t n = labels.size();
            Leaf leaf;
            leaf.order.resize(n);
            for (std::size_t v = 0 ; v < n ; ++v)
                leaf.order[labels[v]] = v;
            leaf.certificate.reserve(n * n / 8 + n);
            for (std::size_t i = 0 ; i < n ; ++i)
                leaf.certificate.push_back(char(aux.initial[leaf.order[i]] & 0x7f));
            unsigned char byte = 0;
            int bits = 0;
            for (std::size_t i = 0 ; i < n ; ++i)
                for (std::size_t j = i + 1 ; j < n ; ++j) {
                    byte = (byte << 1) | (aux.matrix[leaf.order[i]][leaf.order[j]] ? 1 : 0);
                    if (++bits == 8) {
                        leaf.certificate.push_back(char(byte));
                        byte = 0;
                        bits = 0;
                    }
                }
            if (bits)
                leaf.certificate.push_back(char(byte << (8 - bits)));
            return leaf;
        }

        auto twins_within(const Aux & aux, const std::vector<std::size_t> & cell) -> bool
        {
            for (std::size_t i = 1 ; i < cell.size() ; ++i) {
                auto a = cell[0], b = cell[i];
                for (std::size_t w = 0 ; w < aux.matrix.size() ; ++w)
                    if (w != a && w != b && aux.matrix[a][w] != aux.matrix[b][w])
                        return false;
            }
            return true;
        }

        auto search(const Aux & aux, const std::vector<long> & labels, std::optional<Leaf> & best) -> void
        {
            std::size_t n = labels.size();
            std::vector<std::size_t> count(n, 0);
            for (auto l : labels)
                ++count[l];

            std::optional<long> target;
            for (long l = 0 ; l < long(n) ; ++l)
                if (count[l] > 1) {
                    target = l;
                    break;
                }

            if (! target) {
                auto leaf = certificate(aux, labels);
                if (! best || leaf.certificate < best->certificate)
                    best = std::move(leaf);
                return;
            }

            std::vector<std::size_t> cell;
            for (std::size_t v = 0 ; v < n ; ++v)
                if (labels[v] == *target)
                    cell.push_back(v);

            // A cell of mutual twins: every choice leads to the same certificate.
            if (twins_within(aux, cell))
                cell.resize(1);

            for (auto v : cell) {
                std::vector<long> next(n);
                for (std::size_t w = 0 ; w < n ; ++w)
                    next[w] = 2 * labels[w] + (labels[w] == *target && w != v ? 1 : 0);
                search(aux, refine(aux, std::move(next)), best);
            }
        }
    }

    auto canonical_form(const RevealedGraph & state, bool use_colours) -> CanonicalForm
    {
        auto aux = build_aux(state, use_colours);
        std::optional<Leaf> best;
        search(aux, refine(aux, aux.initial), best);

        CanonicalForm form;
        std::string header = std::to_string(state.size()) + ":" + std::to_string(state.anchors()) + ":"
            + std::to_string(aux.adj.size() - aux.slots) + ":";
        form.key.bytes = header + best->certificate;
        for (auto v : best->order)
            if (v < aux.slots)
                form.order.push_back(v);
        return form;
    }

    auto canonical_key(const RevealedGraph & state) -> CanonicalKey
    {
        return canonical_form(state, true).key;
    }
}

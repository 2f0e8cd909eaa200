#include <ochrom/embedding.hh>

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace ochrom
{
    namespace
    {
        // Host twin classes over free vertices: members of a class are pairwise twins (equal
        // open or equal closed neighbourhoods), so any permutation of a class is a host
        // automorphism fixing every precoloured vertex.
        auto twin_classes(const PrecoloredGraph & host) -> std::vector<std::vector<Vertex>>
        {
            std::map<Bitset, std::vector<Vertex>> open, closed;
            for (Vertex v = 0 ; v < host.size() ; ++v) {
                if (host.is_precolored(v))
                    continue;
                open[host.graph.neighbours(v)].push_back(v);
                Bitset c = host.graph.neighbours(v);
                c.set(v);
                closed[c].push_back(v);
            }

            std::vector<std::vector<Vertex>> result(host.size());
            for (auto * groups : {&open, &closed})
                for (auto & [_, members] : *groups)
                    if (members.size() > 1)
                        for (auto v : members)
                            result[v] = members;
            for (Vertex v = 0 ; v < host.size() ; ++v)
                if (result[v].empty())
                    result[v] = {v};
            return result;
        }

        class EmbeddingSearch
        {
            public:
                using Visit = std::function<bool (const Embedding &)>;

                EmbeddingSearch(const RevealedGraph & pattern, const PrecoloredGraph & host,
                        const std::vector<std::vector<Vertex>> * twins) :
                    _pattern(pattern), _host(host), _twins(twins), _map(pattern.size()), _used(host.size())
                {
                    for (Vertex slot = 0 ; slot < pattern.anchors() ; ++slot)
                        _map[slot] = pattern.anchor_host(slot);

                    for (Vertex slot = pattern.anchors() ; slot < pattern.size() ; ++slot)
                        _order.push_back(slot);
                    std::stable_sort(_order.begin(), _order.end(), [&] (Vertex a, Vertex b) {
                            return pattern.neighbours(a).count() > pattern.neighbours(b).count();
                        });
                }

                auto run(const Visit & visit) -> void
                {
                    if (_pattern.revealed_count() > _host.free_count())
                        return;

                    std::vector<Bitset> domains;
                    for (auto slot : _order) {
                        Bitset domain(_host.size());
                        auto degree = _pattern.neighbours(slot).count();
                        for (Vertex h = 0 ; h < _host.size() ; ++h) {
                            if (_host.is_precolored(h) || _host.graph.degree(h) < degree)
                                continue;
                            bool ok = true;
                            for (Vertex a = 0 ; a < _pattern.anchors() && ok ; ++a)
                                ok = _pattern.adjacent(slot, a) == _host.graph.adjacent(h, _pattern.anchor_host(a));
                            if (ok)
                                domain.set(h);
                        }
                        if (domain.none())
                            return;
                        domains.push_back(std::move(domain));
                    }

                    _visit = &visit;
                    _stop = false;
                    search(0, std::move(domains));
                }

            private:
                const RevealedGraph & _pattern;
                const PrecoloredGraph & _host;
                const std::vector<std::vector<Vertex>> * _twins;
                std::vector<Vertex> _order;
                Embedding _map;
                Bitset _used;
                const Visit * _visit = nullptr;
                bool _stop = false;

                auto search(std::size_t depth, std::vector<Bitset> domains) -> void
                {
                    if (depth == _order.size()) {
                        if (! (*_visit)(_map))
                            _stop = true;
                        return;
                    }

                    Vertex slot = _order[depth];
                    const Bitset & domain = domains[depth];
                    for (auto h = domain.find_first() ; h < domain.size() && ! _stop ; h = domain.find_next(h + 1)) {
                        if (_twins) {
                            // Only the smallest unused member of a twin class may be chosen.
                            bool first_unused = true;
                            for (auto t : (*_twins)[h]) {
                                if (t == h)
                                    break;
                                if (! _used.test(t)) {
                                    first_unused = false;
                                    break;
                                }
                            }
                            if (! first_unused)
                                continue;
                        }

                        std::vector<Bitset> next;
                        next.reserve(_order.size());
                        bool wipeout = false;
                        for (std::size_t e = 0 ; e < _order.size() ; ++e) {
                            if (e <= depth) {
                                next.emplace_back();
                                continue;
                            }
                            Bitset d = domains[e];
                            if (_pattern.adjacent(slot, _order[e]))
                                d &= _host.graph.neighbours(h);
                            else
                                d.subtract(_host.graph.neighbours(h));
                            d.reset(h);
                            if (d.none()) {
                                wipeout = true;
                                break;
                            }
                            next.push_back(std::move(d));
                        }
                        if (wipeout)
                            continue;

                        _map[slot] = h;
                        _used.set(h);
                        search(depth + 1, std::move(next));
                        _used.reset(h);
                    }
                }
        };
    }

    auto induced_embeddings(const RevealedGraph & pattern, const PrecoloredGraph & host, std::size_t limit) -> std::vector<Embedding>
    {
        std::vector<Embedding> result;
        if (limit == 0)
            return result;
        EmbeddingSearch search(pattern, host, nullptr);
        search.run([&] (const Embedding & e) {
                result.push_back(e);
                return result.size() < limit;
            });
        return result;
    }

    auto embeddable(const RevealedGraph & pattern, const PrecoloredGraph & host) -> bool
    {
        return ! induced_embeddings(pattern, host, 1).empty();
    }

    auto extension_embeddable(const RevealedGraph & pattern, const PrecoloredGraph & host, const Bitset & neighbourhood) -> bool
    {
        if (pattern.size() >= host.size())
            return false;
        RevealedGraph extended = pattern;
        extended.add(neighbourhood, 0);
        return embeddable(extended, host);
    }

    auto is_induced_embedding(const RevealedGraph & pattern, const PrecoloredGraph & host, const Embedding & map) -> bool
    {
        if (map.size() != pattern.size())
            return false;
        Bitset image(host.size());
        for (Vertex slot = 0 ; slot < pattern.size() ; ++slot) {
            Vertex h = map[slot];
            if (h >= host.size() || image.test(h))
                return false;
            if (pattern.is_anchor(slot) ? h != pattern.anchor_host(slot) : host.is_precolored(h))
                return false;
            image.set(h);
        }
        for (Vertex a = 0 ; a < pattern.size() ; ++a)
            for (Vertex b = a + 1 ; b < pattern.size() ; ++b)
                if (pattern.adjacent(a, b) != host.graph.adjacent(map[a], map[b]))
                    return false;
        return true;
    }

    auto extension_neighbourhoods(const RevealedGraph & pattern, const PrecoloredGraph & host) -> std::vector<Bitset>
    {
        auto twins = twin_classes(host);
        std::set<Bitset> found;
        EmbeddingSearch search(pattern, host, &twins);
        search.run([&] (const Embedding & map) {
                Bitset image(host.size());
                for (auto h : map)
                    image.set(h);
                for (Vertex u = 0 ; u < host.size() ; ++u) {
                    if (host.is_precolored(u) || image.test(u))
                        continue;
                    // Among unmapped members of u's twin class only the first needs checking.
                    bool first_unmapped = true;
                    for (auto t : twins[u]) {
                        if (t == u)
                            break;
                        if (! image.test(t)) {
                            first_unmapped = false;
                            break;
                        }
                    }
                    if (! first_unmapped)
                        continue;
                    Bitset mask = pattern.empty_set();
                    for (Vertex slot = 0 ; slot < pattern.size() ; ++slot)
                        if (host.graph.adjacent(u, map[slot]))
                            mask.set(slot);
                    found.insert(std::move(mask));
                }
                return true;
            });
        return {found.begin(), found.end()};
    }
}

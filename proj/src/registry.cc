#include <ochrom/strategies.hh>
#include <ochrom/errors.hh>
#include <ochrom/harness.hh>

namespace ochrom
{
    auto painter_names() -> std::vector<std::string>
    {
        return {"firstfit", "optimal", "painter-g1", "painter-g2", "painter-gprime"};
    }

    auto drawer_names() -> std::vector<std::string>
    {
        return {"drawer-p4", "drawer-nodes", "drawer-g1", "drawer-g2", "drawer-gprime", "order"};
    }

    namespace
    {
        auto formula_of(const StrategyContext & c, const std::string & name) -> const QdnfFormula &
        {
            if (! c.formula)
                throw ArgumentError(name + " needs the formula the host was built from");
            return *c.formula;
        }

        auto inner_context(const StrategyContext & c, const std::string & name) -> StrategyContext
        {
            if (! c.original || ! c.supernode)
                throw ArgumentError(name + " needs the graph before the precoloured vertex was removed");
            StrategyContext inner = c;
            inner.host = c.original;
            inner.original = nullptr;
            inner.supernode.reset();
            inner.stage = c.stage == "gprime" ? "g2" : "";
            return inner;
        }
    }

    auto make_painter(const std::string & name, const StrategyContext & c) -> std::unique_ptr<PainterStrategy>
    {
        if (name == "firstfit")
            return std::make_unique<FirstFit>();
        if (name == "optimal")
            return std::make_unique<OptimalPainter>();
        if (name == "painter-g1")
            return std::make_unique<PainterG1>(formula_of(c, name));
        if (name == "painter-g2")
            return std::make_unique<PainterG2>(formula_of(c, name));
        if (name == "painter-gprime") {
            auto inner = inner_context(c, name);
            return std::make_unique<PainterGPrime>(c.original, *c.supernode, make_painter(c.inner.empty() ? std::string("firstfit") : c.inner, inner));
        }
        throw ArgumentError("unknown painter strategy '" + name + "'");
    }

    auto make_drawer(const std::string & name, const StrategyContext & c) -> std::unique_ptr<DrawerStrategy>
    {
        if (name == "drawer-p4")
            return std::make_unique<P4Drawer>();
        if (name == "drawer-nodes") {
            if (c.stage == "g2" && c.formula) {
                auto l = g2_layout(*c.formula);
                std::vector<NodeTriple> nodes;
                for (std::size_t i = 1 ; i <= l.n ; ++i)
                    nodes.push_back(NodeTriple{l.node_vertex(i, 0), l.node_vertex(i, 1), l.node_vertex(i, 2)});
                return std::make_unique<NodeDrawer>(nodes);
            }
            if (! c.host || c.host->size() % 3 != 0 || ! (c.host->graph == node_graph(c.host->size() / 3)))
                throw ArgumentError("drawer-nodes needs a node graph or a host built at stage g2");
            return std::make_unique<NodeDrawer>(node_graph_triples(c.host->size() / 3));
        }
        if (name == "drawer-g1")
            return std::make_unique<DrawerG1>(formula_of(c, name));
        if (name == "drawer-g2")
            return std::make_unique<DrawerG2>(formula_of(c, name));
        if (name == "drawer-gprime") {
            auto inner = inner_context(c, name);
            auto inner_name = c.inner.empty() ? std::string("order") : c.inner;
            return std::make_unique<DrawerGPrime>(c.original, *c.supernode, make_drawer(inner_name, inner));
        }
        if (name == "order") {
            if (! c.host)
                throw ArgumentError("order needs a host");
            return std::make_unique<OrderDrawer>(random_order(*c.host, c.seed));
        }
        throw ArgumentError("unknown drawer strategy '" + name + "'");
    }
}

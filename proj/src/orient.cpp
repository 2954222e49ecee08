#include "jfilt/orient.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace jfilt {

std::optional<Orientation> orient(const ClasperGraph& g)
{
    GraphSummary s = validate(g, false);
    if (s.components != 1)
        throw ValidationError("graph: orientation needs a connected graph");
    if (s.is_tree)
        return std::nullopt;

    const std::size_t nv = g.vertices.size();
    std::size_t start = 0;
    for (std::size_t i = 1; i < nv; ++i)
        if (g.vertices[i].id < g.vertices[start].id)
            start = i;
    std::vector<bool> seen(nv, false), tree_edge(g.edges.size(), false);
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
        std::size_t v = queue.front();
        queue.pop_front();
        for (int h : g.vertices[v].halfedges) {
            std::size_t w = g.owner(g.partner(h));
            if (!seen[w]) {
                seen[w] = true;
                tree_edge[g.edge_of(h)] = true;
                queue.push_back(w);
            }
        }
    }

    Orientation o(g.edges.size(), true);
    // Non-tree edges run from the lower half-edge to the higher one; cutting
    // one leaves an inward leaf at the head. The lowest such head is the root.
    int root_half = std::numeric_limits<int>::max();
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (tree_edge[e])
            continue;
        const auto& [a, b] = g.edges[e];
        o[e] = a < b;
        root_half = std::min(root_half, std::max(a, b));
    }
    const std::size_t root = g.owner(root_half);

    // Tree edges point away from the root.
    std::vector<bool> visited(nv, false);
    std::deque<std::size_t> walk{root};
    visited[root] = true;
    while (!walk.empty()) {
        std::size_t v = walk.front();
        walk.pop_front();
        for (int h : g.vertices[v].halfedges) {
            std::size_t e = g.edge_of(h);
            if (!tree_edge[e])
                continue;
            int other = g.partner(h);
            std::size_t w = g.owner(other);
            if (visited[w])
                continue;
            visited[w] = true;
            o[e] = g.edges[e][0] == h;
            walk.push_back(w);
        }
    }
    if (!verify_orientation(g, o))
        throw std::logic_error("orient: produced orientation fails verification");
    return o;
}

bool verify_orientation(const ClasperGraph& g, const Orientation& o)
{
    if (o.size() != g.edges.size())
        return false;
    std::vector<int> incoming(g.vertices.size(), 0);
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        int head = o[e] ? g.edges[e][1] : g.edges[e][0];
        int tail = o[e] ? g.edges[e][0] : g.edges[e][1];
        ++incoming[g.owner(head)];
        // A leaf edge must point toward the leaf.
        if (g.vertices[g.owner(tail)].arity == 1)
            return false;
    }
    for (std::size_t v = 0; v < g.vertices.size(); ++v)
        if (g.vertices[v].arity == 3 && incoming[v] == 0)
            return false;
    return true;
}

std::int64_t count_valid_orientations(const ClasperGraph& g)
{
    validate(g, false);
    const std::size_t e = g.edges.size();
    if (e > 16)
        throw PreconditionError("E<=16", "graph has " + std::to_string(e) + " edges");
    std::int64_t count = 0;
    Orientation o(e);
    for (std::uint32_t mask = 0; mask < (1U << e); ++mask) {
        for (std::size_t i = 0; i < e; ++i)
            o[i] = mask >> i & 1U;
        if (verify_orientation(g, o))
            ++count;
    }
    return count;
}

void for_each_unitrivalent_graph(int max_nodes, const std::function<void(const ClasperGraph&)>& visit)
{
    for (int t = 1; t <= max_nodes; ++t) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 0; i < t; ++i)
            for (int j = i + 1; j < t; ++j)
                pairs.emplace_back(i, j);
        const int slots = static_cast<int>(pairs.size()) + t;  // multiplicities, then loops
        std::vector<int> choice(slots, 0);
        for (;;) {
            std::vector<int> degree(t, 0);
            for (std::size_t p = 0; p < pairs.size(); ++p) {
                degree[pairs[p].first] += choice[p];
                degree[pairs[p].second] += choice[p];
            }
            for (int i = 0; i < t; ++i)
                degree[i] += 2 * choice[pairs.size() + i];
            bool ok = std::all_of(degree.begin(), degree.end(), [](int d) { return d <= 3; });
            if (ok) {
                // Connectivity of the trivalent core.
                std::vector<int> comp(t);
                for (int i = 0; i < t; ++i)
                    comp[i] = i;
                std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
                for (std::size_t p = 0; p < pairs.size(); ++p)
                    if (choice[p] > 0)
                        comp[find(pairs[p].first)] = find(pairs[p].second);
                for (int i = 1; i < t; ++i)
                    ok = ok && find(i) == find(0);
            }
            if (ok) {
                GraphBuilder b(0);
                std::vector<int> nodes;
                for (int i = 0; i < t; ++i)
                    nodes.push_back(b.node());
                for (std::size_t p = 0; p < pairs.size(); ++p)
                    for (int m = 0; m < choice[p]; ++m)
                        b.join(nodes[pairs[p].first], nodes[pairs[p].second]);
                for (int i = 0; i < t; ++i) {
                    if (choice[pairs.size() + i])
                        b.join(nodes[i], nodes[i]);
                    for (int d = degree[i]; d < 3; ++d)
                        b.join(nodes[i], b.leaf(std::vector<Integer>{}));
                }
                visit(b.build(false));
            }
            int i = 0;
            while (i < slots) {
                const int limit = i < static_cast<int>(pairs.size()) ? 3 : 1;
                if (++choice[i] <= limit)
                    break;
                choice[i++] = 0;
            }
            if (i == slots)
                break;
        }
    }
}

} // namespace jfilt

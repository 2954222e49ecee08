#include "jfilt/graph.hpp"

#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace jfilt {

std::size_t ClasperGraph::vertex_index(int id) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id)
            return i;
    throw ValidationError("graph: unknown vertex " + std::to_string(id));
}

std::size_t ClasperGraph::owner(int halfedge) const
{
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int h : vertices[i].halfedges)
            if (h == halfedge)
                return i;
    throw ValidationError("graph: half-edge " + std::to_string(halfedge) + " has no vertex");
}

std::size_t ClasperGraph::edge_of(int halfedge) const
{
    for (std::size_t e = 0; e < edges.size(); ++e)
        if (edges[e][0] == halfedge || edges[e][1] == halfedge)
            return e;
    throw ValidationError("graph: half-edge " + std::to_string(halfedge) + " is unpaired");
}

int ClasperGraph::partner(int halfedge) const
{
    const auto& e = edges[edge_of(halfedge)];
    return e[0] == halfedge ? e[1] : e[0];
}

GraphSummary validate(const ClasperGraph& g, bool require_labels)
{
    std::map<int, std::size_t> owner;
    std::set<int> ids;
    GraphSummary s;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& v = g.vertices[i];
        if (!ids.insert(v.id).second)
            throw ValidationError("graph: duplicate vertex id " + std::to_string(v.id));
        if (v.arity != 1 && v.arity != 3)
            throw ValidationError("graph: vertex " + std::to_string(v.id) + " has arity " +
                                  std::to_string(v.arity));
        if (static_cast<int>(v.halfedges.size()) != v.arity)
            throw ValidationError(v.arity == 3 ? "graph: missing cyclic order at vertex " + std::to_string(v.id)
                                               : "graph: arity mismatch at vertex " + std::to_string(v.id));
        for (int h : v.halfedges)
            if (!owner.emplace(h, i).second)
                throw ValidationError("graph: half-edge " + std::to_string(h) + " used twice");
        if (v.arity == 3) {
            ++s.degree;
        } else if (require_labels && static_cast<int>(v.label.size()) != g.rank) {
            throw ValidationError("graph: missing label at vertex " + std::to_string(v.id));
        }
    }
    std::set<int> paired;
    std::vector<std::size_t> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& e : g.edges) {
        for (int h : e) {
            if (!owner.count(h))
                throw ValidationError("graph: edge uses unknown half-edge " + std::to_string(h));
            if (!paired.insert(h).second)
                throw ValidationError("graph: half-edge " + std::to_string(h) + " in two edges");
        }
        if (e[0] == e[1])
            throw ValidationError("graph: edge pairs a half-edge with itself");
        parent[find(owner[e[0]])] = find(owner[e[1]]);
    }
    if (paired.size() != owner.size())
        throw ValidationError("graph: arity mismatch (unpaired half-edge)");
    std::set<std::size_t> with_node;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        if (find(i) == i)
            ++s.components;
        if (g.vertices[i].arity == 3)
            with_node.insert(find(i));
    }
    if (static_cast<int>(with_node.size()) != s.components)
        throw ValidationError("graph: component without trivalent vertex");
    s.betti1 = static_cast<int>(g.edges.size()) - static_cast<int>(g.vertices.size()) + s.components;
    s.is_tree = s.components == 1 && s.betti1 == 0;
    return s;
}

int GraphBuilder::leaf(std::vector<Integer> label)
{
    ClasperGraph::Vertex v;
    v.id = static_cast<int>(g_.vertices.size());
    v.arity = 1;
    v.label = std::move(label);
    g_.vertices.push_back(std::move(v));
    return g_.vertices.back().id;
}

int GraphBuilder::leaf(int basis_index)
{
    std::vector<Integer> e(g_.rank, Integer(0));
    e.at(basis_index) = 1;
    return leaf(std::move(e));
}

int GraphBuilder::node()
{
    ClasperGraph::Vertex v;
    v.id = static_cast<int>(g_.vertices.size());
    v.arity = 3;
    g_.vertices.push_back(std::move(v));
    return g_.vertices.back().id;
}

void GraphBuilder::join(int v, int w)
{
    int a = next_halfedge_++;
    int b = next_halfedge_++;
    g_.vertices.at(v).halfedges.push_back(a);
    g_.vertices.at(w).halfedges.push_back(b);
    g_.edges.push_back({a, b});
}

void GraphBuilder::flip(int v)
{
    auto& hs = g_.vertices.at(v).halfedges;
    if (hs.size() == 3)
        std::swap(hs[1], hs[2]);
}

ClasperGraph GraphBuilder::build(bool require_labels) const
{
    validate(g_, require_labels);
    return g_;
}

std::string to_dot(const ClasperGraph& g, const std::optional<Orientation>& orientation)
{
    std::ostringstream os;
    os << (orientation ? "digraph" : "graph") << " G {\n";
    for (const auto& v : g.vertices) {
        os << "  v" << v.id;
        if (v.arity == 1) {
            os << " [shape=plaintext,label=\"";
            for (std::size_t i = 0; i < v.label.size(); ++i)
                os << (i ? "," : "") << v.label[i].get_str();
            os << "\"]";
        } else {
            os << " [shape=point]";
        }
        os << ";\n";
    }
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        int from = g.edges[e][0], to = g.edges[e][1];
        if (orientation && !(*orientation)[e])
            std::swap(from, to);
        os << "  v" << g.vertices[g.owner(from)].id << (orientation ? " -> " : " -- ") << "v"
           << g.vertices[g.owner(to)].id << " [label=\"" << from << ":" << to << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

} // namespace jfilt

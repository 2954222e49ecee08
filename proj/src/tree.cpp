#include "jfilt/tree.hpp"

#include <set>

namespace jfilt {

namespace {

void require_tree(const ClasperGraph& t)
{
    GraphSummary s = validate(t);
    if (!s.is_tree)
        throw PreconditionError("tree", "graph is not a tree");
}

LieElement evaluate(const ClasperGraph& t, int entering)
{
    const auto& v = t.vertices[t.owner(entering)];
    if (v.arity == 1)
        return LieElement::from_vector(v.label);
    std::size_t p = 0;
    while (v.halfedges[p] != entering)
        ++p;
    int first = v.halfedges[(p + 1) % 3];
    int second = v.halfedges[(p + 2) % 3];
    return lie_bracket(evaluate(t, t.partner(first)), evaluate(t, t.partner(second)));
}

} // namespace

LieElement rooted_bracket(const ClasperGraph& tree, int root_id)
{
    require_tree(tree);
    const auto& root = tree.vertices[tree.vertex_index(root_id)];
    if (root.arity != 1)
        throw PreconditionError("root-univalent", "root vertex " + std::to_string(root_id) + " is trivalent");
    return evaluate(tree, tree.partner(root.halfedges.front()));
}

TensorElement tree_to_dk(const ClasperGraph& tree)
{
    GraphSummary s = validate(tree);
    if (!s.is_tree)
        throw PreconditionError("tree", "graph is not a tree");
    TensorElement out(tree.rank, s.degree);
    for (const auto& v : tree.vertices)
        if (v.arity == 1)
            out.add_term(v.label, evaluate(tree, tree.partner(v.halfedges.front())));
    if (!bracket_map(out).is_zero())
        throw std::logic_error("tree_to_dk: image is not in the bracket kernel");
    return out;
}

namespace {

// Edge lists of all labelled trees on k vertices with maximum degree 3.
std::vector<std::vector<std::pair<int, int>>> internal_trees(int k)
{
    std::vector<std::vector<std::pair<int, int>>> out;
    if (k == 1) {
        out.push_back({});
        return out;
    }
    if (k == 2) {
        out.push_back({{0, 1}});
        return out;
    }
    std::vector<int> code(k - 2, 0);
    for (;;) {
        std::vector<int> degree(k, 1);
        for (int c : code)
            ++degree[c];
        bool ok = true;
        for (int d : degree)
            ok = ok && d <= 3;
        if (ok) {
            std::vector<std::pair<int, int>> edges;
            std::vector<int> deg = degree;
            for (int c : code) {
                int leaf = 0;
                while (deg[leaf] != 1)
                    ++leaf;
                edges.emplace_back(leaf, c);
                --deg[leaf];
                --deg[c];
            }
            int a = -1, b = -1;
            for (int i = 0; i < k; ++i)
                if (deg[i] == 1)
                    (a < 0 ? a : b) = i;
            edges.emplace_back(a, b);
            out.push_back(edges);
        }
        int i = 0;
        while (i < k - 2 && ++code[i] == k)
            code[i++] = 0;
        if (i == k - 2)
            break;
    }
    return out;
}

// Tree skeleton with unlabelled leaves; leaf ids are returned in order.
ClasperGraph skeleton(int n, int k, const std::vector<std::pair<int, int>>& edges, unsigned flips,
                      std::vector<int>& leaves)
{
    GraphBuilder b(n);
    std::vector<int> nodes;
    for (int i = 0; i < k; ++i)
        nodes.push_back(b.node());
    std::vector<int> degree(k, 0);
    for (auto [u, v] : edges) {
        b.join(nodes[u], nodes[v]);
        ++degree[u];
        ++degree[v];
    }
    leaves.clear();
    for (int i = 0; i < k; ++i)
        for (int j = degree[i]; j < 3; ++j) {
            int l = b.leaf(std::vector<Integer>(n, Integer(0)));
            b.join(nodes[i], l);
            leaves.push_back(l);
        }
    for (int i = 0; i < k; ++i)
        if (flips >> i & 1U)
            b.flip(nodes[i]);
    return b.graph();
}

} // namespace

void for_each_basis_tree(int n, int k, const std::function<void(const ClasperGraph&)>& visit)
{
    if (n < 1 || k < 1)
        throw PreconditionError("n>=1,k>=1", "tree enumeration needs positive n and k");
    for (const auto& edges : internal_trees(k))
        for (unsigned flips = 0; flips < (1U << k); ++flips) {
            std::vector<int> leaves;
            ClasperGraph t = skeleton(n, k, edges, flips, leaves);
            std::vector<int> choice(leaves.size(), 0);
            for (;;) {
                for (std::size_t i = 0; i < leaves.size(); ++i) {
                    auto& label = t.vertices[t.vertex_index(leaves[i])].label;
                    std::fill(label.begin(), label.end(), Integer(0));
                    label[choice[i]] = 1;
                }
                visit(t);
                std::size_t i = 0;
                while (i < choice.size() && ++choice[i] == n)
                    choice[i++] = 0;
                if (i == choice.size())
                    break;
            }
        }
}

SpanReport span_check(int n, int k)
{
    if (n > 4 || k > 3)
        throw PreconditionError("n<=4,k<=3", "span check is limited to desk scale");
    SpanReport r;
    r.dk_rank = dk_rank(n, k);
    std::set<std::vector<Integer>> images;
    for_each_basis_tree(n, k, [&](const ClasperGraph& t) {
        ++r.trees;
        TensorElement v = tree_to_dk(t);
        if (!v.is_zero())
            images.insert(v.coords());
    });
    const std::size_t width = n * static_cast<std::size_t>(witt_dimension(n, k + 1));
    SparseMatrix m(images.size(), width);
    std::size_t row = 0;
    for (const auto& v : images) {
        for (std::size_t j = 0; j < width; ++j)
            if (sgn(v[j]) != 0)
                m.set(row, j, v[j]);
        ++row;
    }
    r.spanned_rank = static_cast<std::int64_t>(rational_rank(std::move(m)));
    return r;
}

ClasperGraph random_tree(int n, int k, std::mt19937_64& rng)
{
    if (n < 1 || k < 1)
        throw PreconditionError("n>=1,k>=1", "random tree needs positive n and k");
    std::vector<std::pair<int, int>> edges;
    // Random attachment keeping degrees at most 3.
    std::vector<int> degree(k, 0);
    for (int v = 1; v < k; ++v) {
        int u;
        do
            u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        while (degree[u] == 3);
        edges.emplace_back(u, v);
        ++degree[u];
        ++degree[v];
    }
    std::vector<int> leaves;
    unsigned flips = static_cast<unsigned>(rng()) & ((1U << k) - 1);
    ClasperGraph t = skeleton(n, k, edges, flips, leaves);
    std::uniform_int_distribution<int> entry(-2, 2);
    for (int l : leaves)
        for (auto& c : t.vertices[t.vertex_index(l)].label)
            c = entry(rng);
    return t;
}

} // namespace jfilt

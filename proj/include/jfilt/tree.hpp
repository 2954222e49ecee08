#pragma once

#include "jfilt/bracket_kernel.hpp"
#include "jfilt/graph.hpp"

#include <functional>
#include <random>

namespace jfilt {

// Bracket read off a tree from a univalent root: a leaf gives its label; a
// trivalent vertex entered through h with cyclic order (h, a, b) gives
// [eval(a), eval(b)]. Result has degree (number of trivalent vertices) + 1.
LieElement rooted_bracket(const ClasperGraph& tree, int root_id);

// Sum over leaves v of label(v) (x) rooted_bracket(tree, v). The result is
// checked to lie in D_k(H).
TensorElement tree_to_dk(const ClasperGraph& tree);

struct SpanReport {
    std::int64_t spanned_rank = 0;
    std::int64_t dk_rank = 0;
    std::size_t trees = 0;
};

// Rank of the span of tree_to_dk over all degree-k trees, cyclic orders and
// basis labels, against dk_rank(n, k).
SpanReport span_check(int n, int k);

// Every tree of degree k with leaves labelled by basis vectors of H (rank n),
// with both cyclic orders at every vertex.
void for_each_basis_tree(int n, int k, const std::function<void(const ClasperGraph&)>& visit);

// Random tree of degree k with label entries drawn from [-2, 2].
ClasperGraph random_tree(int n, int k, std::mt19937_64& rng);

} // namespace jfilt

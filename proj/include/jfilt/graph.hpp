#pragma once

#include "jfilt/errors.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace jfilt {

/// Unitrivalent multigraph with cyclic orders at trivalent vertices and
/// H-labels (vectors of length `rank`) at univalent vertices. Half-edge ids
/// are arbitrary distinct integers; each vertex lists its half-edges, and for
/// a trivalent vertex that list is its cyclic order.
struct ClasperGraph {
    struct Vertex {
        int id = 0;
        int arity = 3;
        std::vector<int> halfedges;
        std::vector<Integer> label;  // univalent vertices only
    };

    int rank = 0;
    std::vector<Vertex> vertices;
    std::vector<std::array<int, 2>> edges;

    // Lookups over the current data; throw ValidationError if absent.
    std::size_t vertex_index(int id) const;
    std::size_t owner(int halfedge) const;  // vertex index
    int partner(int halfedge) const;
    std::size_t edge_of(int halfedge) const;
};

struct GraphSummary {
    int degree = 0;      // number of trivalent vertices
    int betti1 = 0;
    int components = 0;
    bool is_tree = false;
};

// Checks arities, half-edge pairing and (if asked) labels. Throws
// ValidationError on malformed graphs.
GraphSummary validate(const ClasperGraph& g, bool require_labels = true);

/// Incremental construction. join(v, w) adds one edge; the order in which a
/// trivalent vertex receives its half-edges is its cyclic order.
class GraphBuilder {
public:
    explicit GraphBuilder(int rank) { g_.rank = rank; }

    int leaf(std::vector<Integer> label = {});
    int leaf(int basis_index);  // label e_{basis_index}
    int node();
    void join(int v, int w);
    // Reverses the cyclic order at a trivalent vertex.
    void flip(int v);

    const ClasperGraph& graph() const { return g_; }
    ClasperGraph build(bool require_labels = true) const;

private:
    ClasperGraph g_;
    int next_halfedge_ = 0;
};

// One direction per edge: true when the edge runs from edges[i][0] to
// edges[i][1] (as half-edges, tail to head).
using Orientation = std::vector<bool>;

std::string to_dot(const ClasperGraph& g, const std::optional<Orientation>& orientation = std::nullopt);

} // namespace jfilt

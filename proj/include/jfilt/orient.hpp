#pragma once

#include "jfilt/graph.hpp"

#include <functional>
#include <optional>

namespace jfilt {

// Orientation with every leaf edge pointing toward its leaf and no trivalent
// vertex a source; nullopt when the graph is a tree (no such orientation).
// Throws ValidationError for disconnected or malformed graphs.
std::optional<Orientation> orient(const ClasperGraph& g);

// Independent check of both conditions.
bool verify_orientation(const ClasperGraph& g, const Orientation& o);

// Brute force over all 2^E orientations; E <= 16.
std::int64_t count_valid_orientations(const ClasperGraph& g);

// Every connected unitrivalent multigraph whose trivalent core has at most
// `max_nodes` vertices (loops at most one per vertex, multi-edges allowed),
// leaves filling the free slots. Labelled, not up to isomorphism.
void for_each_unitrivalent_graph(int max_nodes, const std::function<void(const ClasperGraph&)>& visit);

} // namespace jfilt

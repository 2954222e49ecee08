#pragma once

#include "jfilt/stringlink.hpp"

#include <optional>

namespace jfilt {

// Largest k (capped at level-1) with p(h(x_i)) in F'_{k+1} for every i.
int lagrangian_degree(const NilAut& h);

struct LagrangianReport {
    int g = 0;
    int k = 0;
    TensorElement value{1, 1};  // over H' (rank g)
    bool in_hat = false;        // h induces the identity on H'
};

// value = sum_i y_i (x) [p h(x_i)] in H' (x) L_{k+1}(H').
LagrangianReport jl_element(const NilAut& h, int k);

// Matrix of the map induced on H' by p o h: column j is p h(y_j) abelianized.
IntegerMatrix lagrangian_action(const NilAut& h);

// Compares J(h1 o h2) with (h2_* (x) 1) J(h1) + (1 (x) h1_*) J(h2) exactly.
bool cocycle_check(const NilAut& h1, const NilAut& h2, int k);

// sum_{j=1}^{g-1} witt_dimension(j, k+1).
std::int64_t pure_braid_rank(int g, int k);

struct GapRow {
    int g = 0;
    int k = 0;
    std::int64_t tensor_dim = 0;    // dim H' (x) L_{k+1}(H')
    std::int64_t lie_dim = 0;       // dim L_{k+2}(H')
    std::int64_t dk = 0;            // Witt difference
    std::int64_t dk_smith = -1;     // kernel rank from Smith form (-1: skipped)
    std::int64_t r = 0;
    std::int64_t gap = 0;
    std::optional<std::int64_t> closed_form;
    bool match = true;
};

// Closed-form gap where known: k=1 -> 0, k=2 -> (g^3-g)/6, k=3 -> (g^3-g)(g-2)/8.
std::optional<std::int64_t> closed_form_gap(int g, int k);

// Rows for 2 <= g <= gmax, 1 <= k <= kmax. With `smith`, each row also
// computes the kernel rank from the Smith normal form.
std::vector<GapRow> gap_table(int gmax, int kmax, bool smith = false);

} // namespace jfilt

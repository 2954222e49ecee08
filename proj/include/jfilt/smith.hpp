#pragma once

#include "jfilt/errors.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace jfilt {

// Dense integer matrix, row-major.
using IntegerMatrix = std::vector<std::vector<Integer>>;

IntegerMatrix identity_matrix(std::size_t n);
IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b);
IntegerMatrix transpose(const IntegerMatrix& a);

/// U * A * V = D with U, V unimodular and D diagonal, d_i | d_{i+1}.
struct SmithDecomposition {
    IntegerMatrix U, V, D;
    std::size_t rank = 0;

    std::vector<Integer> invariants() const;
    // Columns of V past the rank: a basis of the integer kernel of A.
    std::vector<std::vector<Integer>> kernel_basis() const;
};

SmithDecomposition smith_decompose(const IntegerMatrix& a);

// Sparse matrix for large eliminations: row -> (column -> value).
struct SparseMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<std::map<std::size_t, Integer>> entries;

    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r) {}
    static SparseMatrix from_dense(const IntegerMatrix& a);
    void set(std::size_t r, std::size_t c, const Integer& v);
};

// Nonzero invariant factors (sorted, d_i | d_{i+1}); no transforms kept.
std::vector<Integer> smith_invariants(SparseMatrix a);

// Rank over the rationals.
std::size_t rational_rank(SparseMatrix a);

} // namespace jfilt

#pragma once

#include "jfilt/lie.hpp"
#include "jfilt/smith.hpp"

#include <string>
#include <utility>
#include <vector>

namespace jfilt {

/// Element of H (x) L_{k+1}(H), H free of rank n. Coordinates are indexed by
/// a * witt_dimension(n, k+1) + j for generator a of H and Lyndon word j.
class TensorElement {
public:
    TensorElement(int n, int k);
    TensorElement(int n, int k, std::vector<Integer> coords);

    int generators() const { return n_; }
    int degree() const { return k_; }
    std::size_t width() const { return width_; }
    const std::vector<Integer>& coords() const { return coords_; }
    bool is_zero() const;

    // The L_{k+1} factor paired with generator a.
    LieElement component(int a) const;
    // this += a (x) u for a vector a in H and u of degree k+1.
    void add_term(const std::vector<Integer>& a, const LieElement& u);
    void add_term(int a, const LieElement& u);

    std::string str(const std::vector<std::string>& names = {}) const;

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    TensorElement& operator*=(const Integer& c);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const Integer& c, TensorElement a) { return a *= c; }
    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    int n_, k_;
    std::size_t width_;
    std::vector<Integer> coords_;
};

// a (x) u  ->  [a, u]
LieElement bracket_map(const TensorElement& t);

// Rows: Lyndon words of degree k+2. Columns: (generator, Lyndon word of
// degree k+1) in lexicographic order, i.e. TensorElement coordinate order.
IntegerMatrix bracket_matrix(int n, int k);
SparseMatrix bracket_matrix_sparse(int n, int k);

// Rank of D_k(H) = ker(bracket) from Witt dimensions.
std::int64_t dk_rank(int n, int k);
// Same rank from the Smith normal form of the bracket matrix.
std::int64_t dk_rank_smith(int n, int k);
// Saturated integer basis of D_k(H).
std::vector<TensorElement> dk_basis(int n, int k);

// (free rank, Z/2-dimension) of A_1(H) for H of rank 2g.
std::pair<std::int64_t, std::int64_t> a1_dimensions(int g);

} // namespace jfilt

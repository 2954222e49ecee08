#pragma once

#include "jfilt/series.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace jfilt {

// Number of Lyndon words of length k on n letters (Witt's formula).
std::int64_t witt_dimension(int n, int k);

// All Lyndon words of length k on letters 0..n-1, in lexicographic order.
std::vector<Monomial> lyndon_words(int n, int k);

// Split w = uv with v the longest proper Lyndon suffix.
std::pair<Monomial, Monomial> standard_factorization(const Monomial& w);

// Homogeneous tensor of one degree, index -> coefficient (base-n encoding,
// first letter most significant). Only nonzero entries are kept.
using SparseTensor = std::map<std::uint64_t, Integer>;

/// Lyndon (Hall) basis of L_k on n generators together with the expansion of
/// every bracketed basis element into the tensor algebra.
class HallBasis {
public:
    // Cached, immutable instance; safe to share between threads.
    static std::shared_ptr<const HallBasis> get(int n, int k);

    int generators() const { return n_; }
    int degree() const { return k_; }
    std::size_t size() const { return words_.size(); }

    const Monomial& word(std::size_t i) const { return words_[i]; }
    const SparseTensor& expansion(std::size_t i) const { return expansions_[i]; }
    // Position of a Lyndon word given its tensor index; -1 if not Lyndon.
    std::ptrdiff_t position(std::uint64_t tensor_index) const;

    std::string bracket_string(std::size_t i, const std::vector<std::string>& names) const;

    // Coordinates of a homogeneous Lie polynomial of this degree. Throws
    // PreconditionError if the input is not a Lie element.
    std::vector<Integer> coordinates(SparseTensor t) const;

    HallBasis(int n, int k);

private:
    int n_, k_;
    std::vector<Monomial> words_;
    std::vector<std::uint64_t> indices_;
    std::vector<SparseTensor> expansions_;
};

/// Element of L_k(free module of rank n) in Lyndon coordinates.
class LieElement {
public:
    LieElement(int n, int k);
    LieElement(int n, int k, std::vector<Integer> coords);
    static LieElement generator(int n, int i);
    static LieElement from_vector(const std::vector<Integer>& v);  // degree 1

    int generators() const { return n_; }
    int degree() const { return k_; }
    const std::vector<Integer>& coords() const { return coords_; }
    std::vector<Integer>& coords() { return coords_; }
    bool is_zero() const;

    SparseTensor expand() const;
    static LieElement from_tensor(int n, int k, const SparseTensor& t);

    // Sum of basis brackets with coefficients; names default to a,b,c...
    std::string str(const std::vector<std::string>& names = {}) const;

    LieElement& operator+=(const LieElement& o);
    LieElement& operator-=(const LieElement& o);
    LieElement& operator*=(const Integer& c);
    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Integer& c, LieElement a) { return a *= c; }
    friend bool operator==(const LieElement&, const LieElement&) = default;

private:
    int n_, k_;
    std::vector<Integer> coords_;
};

LieElement lie_bracket(const LieElement& u, const LieElement& v);

// Applies a linear map of the generators (matrix[i] = image of generator i as
// a vector over the target generators) to a Lie element.
LieElement apply_linear(const LieElement& u, const std::vector<std::vector<Integer>>& matrix);

// Class of w in F_k/F_{k+1} = L_k. Throws PreconditionError if w is not in F_k.
LieElement graded_class(const GroupWord& w, int k);

// Degree-d block of a series as a sparse tensor.
SparseTensor homogeneous_part(const TruncatedSeries& s, int d);

// Letter names for rendering Lie elements over an alphabet.
std::vector<std::string> generator_names(const Alphabet& a);

} // namespace jfilt

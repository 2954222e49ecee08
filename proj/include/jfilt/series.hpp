#pragma once

#include "jfilt/word.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace jfilt {

using Monomial = std::vector<int>;

/// Noncommutative integer polynomial in X_1..X_n truncated below degree
/// `cutoff`. Coefficients are kept in one dense block per degree; a monomial
/// a_1...a_d is stored at index sum a_i n^(d-i), so index order within a block
/// is lexicographic order and terms() yields length-then-lex order.
class TruncatedSeries {
public:
    TruncatedSeries(Alphabet alphabet, int cutoff);
    static TruncatedSeries one(Alphabet alphabet, int cutoff);

    const Alphabet& alphabet() const { return alphabet_; }
    int generators() const { return n_; }
    int cutoff() const { return cutoff_; }

    const std::vector<Integer>& degree(int d) const { return blocks_[d]; }
    std::vector<Integer>& degree(int d) { return blocks_[d]; }

    Integer coeff(const Monomial& m) const;
    void set_coeff(const Monomial& m, const Integer& c);

    // Nonzero terms, length-then-lexicographic.
    std::vector<std::pair<Monomial, Integer>> terms() const;

    // Lowest degree d >= 1 carrying a nonzero coefficient.
    std::optional<int> lowest_nonconstant_degree() const;

    // this <- this * (1+X_gen)^exp, truncated.
    void multiply_letter(int gen, std::int64_t exp);

    std::size_t index(const Monomial& m) const;
    Monomial monomial(int d, std::size_t index) const;

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&);

private:
    Alphabet alphabet_;
    int n_;
    int cutoff_;
    std::vector<std::vector<Integer>> blocks_;
};

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);

// Binomial coefficient C(e, j) for any integer e.
Integer binomial(std::int64_t e, int j);

// Magnus image x_i -> 1 + X_i truncated below degree q.
TruncatedSeries magnus_expand(const GroupWord& w, int q);

// u == v in F/F_q.
bool nilpotent_equal(const GroupWord& u, const GroupWord& v, int q);

// Largest k < qmax with w in F_k; nullopt stands for "w in F_qmax".
std::optional<int> lcs_weight(const GroupWord& w, int qmax);

} // namespace jfilt

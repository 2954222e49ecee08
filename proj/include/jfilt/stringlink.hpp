#pragma once

#include "jfilt/nilaut.hpp"

#include <random>

namespace jfilt {

/// Tuple (l_1..l_g) of words in F' (kind yOnly) or F'' (kind xOnly), kept in
/// normal form in the nilpotent quotient of the given level.
struct LongitudeTuple {
    Alphabet alphabet;
    int level;
    std::vector<GroupWord> entries;

    LongitudeTuple(Alphabet a, int q, const std::vector<GroupWord>& words);
    static LongitudeTuple trivial(Alphabet a, int q);

    int genus() const { return alphabet.genus(); }
    friend bool operator==(const LongitudeTuple&, const LongitudeTuple&) = default;
};

// phi_l(z_i) = l_i^-1 z_i l_i on the tuple's own alphabet, at level q.
GroupWord conjugation_action(const LongitudeTuple& l, const GroupWord& w, int q);

// phi_l(z_1...z_g) == z_1...z_g modulo the (level+1)-st term.
bool validate_tuple(const LongitudeTuple& l);

// y_i -> l_i^-1 y_i l_i, x_i -> x_i l_i.
NilAut phi_hat(const LongitudeTuple& l, int q);
// x_i -> m_i^-1 x_i m_i, y_i -> m_i y_i (entries over x_1..x_g).
NilAut psi_hat(const LongitudeTuple& m, int q);

// (lm)_i = l_i phi_l(m_i).
LongitudeTuple milnor_compose(const LongitudeTuple& l, const LongitudeTuple& m);

// (p h(x_i))_i truncated at level k+1, p killing the x-letters.
LongitudeTuple extract_longitudes(const NilAut& h, int k);

// Graded class of each entry in L_{k+1} over the tuple's alphabet.
std::vector<LieElement> tuple_classes(const LongitudeTuple& l, int k);

// Realizes t in D_k (over g generators) as a tuple with entries in the
// (k+1)-st lower central term: entry i is a product of basic commutator
// powers with class t.component(i). Valid at level k+2.
LongitudeTuple tuple_from_tensor(const Alphabet& a, const TensorElement& t);
// Random integer combination of dk_basis(g, k) with coefficients in [-2, 2].
LongitudeTuple random_tuple(const Alphabet& a, int k, std::mt19937_64& rng);

// lambda_i = lambda_{i+1} = (y_i y_{i+1})^-1, others trivial.
LongitudeTuple twist_tuple(int genus, int i, int q);
// lambda_i = y_i^a.
LongitudeTuple framing_tuple(int genus, int i, std::int64_t a, int q);

} // namespace jfilt

#pragma once

#include "jfilt/series.hpp"

namespace jfilt {

// Left-normed word of a Lyndon word via its standard factorization:
// a letter is a generator, w = uv gives [c(u), c(v)]. Its Magnus image is
// 1 + P(w) + (higher terms), with P(w) the Lyndon basis bracket.
GroupWord basic_commutator(const Alphabet& alphabet, const Monomial& lyndon);

// Canonical word for the element of F/F_q whose Magnus image is s: an ordered
// product of basic commutator powers, degree by degree. Throws
// PreconditionError if s is not the image of a group element.
GroupWord normal_form_from_series(const TruncatedSeries& s);

// Canonical representative of w in F/F_q. Equal classes give equal words.
GroupWord nilpotent_normal_form(const GroupWord& w, int q);

// s <- (1+X_gen)^exp * s, truncated.
void left_multiply_letter(TruncatedSeries& s, int gen, std::int64_t exp);

} // namespace jfilt

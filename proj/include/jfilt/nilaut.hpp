#pragma once

#include "jfilt/bracket_kernel.hpp"
#include "jfilt/collect.hpp"

#include <vector>

namespace jfilt {

/// Automorphism of F/F_q (F free on x_1..x_g, y_1..y_g) given by generator
/// images. Images are kept in nilpotent normal form, so equality of values is
/// equality in F/F_q.
class NilAut {
public:
    // images[gen] over the full alphabet of genus g.
    NilAut(int genus, int level, const std::vector<GroupWord>& images);
    static NilAut identity(int genus, int level);

    int genus() const { return alphabet_.genus(); }
    int level() const { return level_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<GroupWord>& images() const { return images_; }
    const GroupWord& image(int gen) const { return images_.at(gen); }

    // M[i][j] = exponent sum of generator i in the image of generator j.
    const IntegerMatrix& abelianization() const { return abel_; }

    // Magnus image of h(w), truncated below degree `cutoff` (<= level unless
    // computing from the stored lifts, as check_aut0 does).
    TruncatedSeries image_series(const GroupWord& w, int cutoff) const;
    // h(w) in normal form at this level.
    GroupWord apply(const GroupWord& w) const;

    friend bool operator==(const NilAut& a, const NilAut& b)
    {
        return a.level_ == b.level_ && a.alphabet_ == b.alphabet_ && a.images_ == b.images_;
    }

private:
    Alphabet alphabet_;
    int level_;
    std::vector<GroupWord> images_;
    IntegerMatrix abel_;
    std::vector<TruncatedSeries> series_, inverse_series_;
};

// Composition order: when true, compose(h1, h2)(z) = h1(h2(z)); otherwise
// h2(h1(z)). Fixed so that phi_hat is a homomorphism for milnor_compose.
inline constexpr bool compose_applies_second_first = true;

NilAut compose(const NilAut& h1, const NilAut& h2);
NilAut reduce_level(const NilAut& h, int q);
NilAut invert_aut(const NilAut& h);

// h(omega_g) == omega_g in F/F_{q+1}, evaluated on the stored lifts.
bool check_aut0(const NilAut& h);

IntegerMatrix symplectic_matrix(const NilAut& h);
// M^T J M == J with <x_i,y_i> = 1 = -<y_i,x_i>.
bool symplectic_check(const IntegerMatrix& m);

// Largest k <= q-1 with h(z) z^-1 in F_{k+1} for all generators z; 0 when h
// acts nontrivially on H.
int filtration_degree(const NilAut& h);

// t = sum_i (x_i (x) d(y_i) - y_i (x) d(x_i)), d(z) = class of h(z) z^-1 in
// L_{k+1}(H). Throws PreconditionError unless filtration_degree >= k,
// level >= k+2 and check_aut0 holds.
TensorElement johnson_element(const NilAut& h, int k);

// Sign relating johnson_element(phi_hat(l), k) to sum_i y_i (x) [l_i].
inline constexpr int johnson_phi_sign = -1;

// Inverse of a unimodular integer matrix; PreconditionError otherwise.
IntegerMatrix unimodular_inverse(const IntegerMatrix& m);

} // namespace jfilt

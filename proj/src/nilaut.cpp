#include "jfilt/nilaut.hpp"

#include <gmpxx.h>

namespace jfilt {

namespace {

TruncatedSeries series_power(const TruncatedSeries& s, std::int64_t e)
{
    TruncatedSeries out = TruncatedSeries::one(s.alphabet(), s.cutoff());
    TruncatedSeries base = s;
    while (e > 0) {
        if (e & 1)
            out = out * base;
        e >>= 1;
        if (e)
            base = base * base;
    }
    return out;
}

} // namespace

NilAut::NilAut(int genus, int level, const std::vector<GroupWord>& images)
    : alphabet_(genus, AlphabetKind::full), level_(level)
{
    if (level < 2)
        throw PreconditionError("q>=2", "automorphism level must be at least 2");
    if (static_cast<int>(images.size()) != alphabet_.size())
        throw ValidationError("aut: expected " + std::to_string(alphabet_.size()) + " images");
    const int n = alphabet_.size();
    abel_.assign(n, std::vector<Integer>(n, Integer(0)));
    for (int j = 0; j < n; ++j) {
        if (!(images[j].alphabet() == alphabet_))
            throw ValidationError("aut: image alphabet does not match genus");
        TruncatedSeries s = magnus_expand(images[j], level);
        images_.push_back(normal_form_from_series(s));
        series_.push_back(std::move(s));
        inverse_series_.push_back(magnus_expand(invert(images_.back()), level));
        auto ab = images[j].abelianization();
        for (int i = 0; i < n; ++i)
            abel_[i][j] = ab[i];
    }
}

NilAut NilAut::identity(int genus, int level)
{
    Alphabet a(genus, AlphabetKind::full);
    std::vector<GroupWord> images;
    for (int i = 0; i < a.size(); ++i)
        images.push_back(GroupWord::generator(a, i));
    return NilAut(genus, level, images);
}

TruncatedSeries NilAut::image_series(const GroupWord& w, int cutoff) const
{
    if (!(w.alphabet() == alphabet_))
        throw ValidationError("aut: word alphabet does not match automorphism");
    std::vector<TruncatedSeries> fwd, inv;
    const std::vector<TruncatedSeries>* f = &series_;
    const std::vector<TruncatedSeries>* b = &inverse_series_;
    if (cutoff != level_) {
        for (const GroupWord& img : images_) {
            fwd.push_back(magnus_expand(img, cutoff));
            inv.push_back(magnus_expand(invert(img), cutoff));
        }
        f = &fwd;
        b = &inv;
    }
    TruncatedSeries out = TruncatedSeries::one(alphabet_, cutoff);
    for (const Letter& l : w.letters()) {
        const TruncatedSeries& s = l.exp > 0 ? (*f)[l.gen] : (*b)[l.gen];
        out = out * series_power(s, l.exp > 0 ? l.exp : -l.exp);
    }
    return out;
}

GroupWord NilAut::apply(const GroupWord& w) const
{
    return normal_form_from_series(image_series(w, level_));
}

NilAut compose(const NilAut& h1, const NilAut& h2)
{
    if (h1.level() != h2.level() || !(h1.alphabet() == h2.alphabet()))
        throw ValidationError("aut: compose needs equal genus and level");
    const NilAut& outer = compose_applies_second_first ? h1 : h2;
    const NilAut& inner = compose_applies_second_first ? h2 : h1;
    std::vector<GroupWord> images;
    for (const GroupWord& w : inner.images())
        images.push_back(outer.apply(w));
    return NilAut(h1.genus(), h1.level(), images);
}

NilAut reduce_level(const NilAut& h, int q)
{
    if (q < 2 || q > h.level())
        throw PreconditionError("2<=q'<=q", "cannot reduce level " + std::to_string(h.level()) + " to " +
                                                 std::to_string(q));
    return NilAut(h.genus(), q, h.images());
}

IntegerMatrix unimodular_inverse(const IntegerMatrix& m)
{
    const std::size_t n = m.size();
    std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n)
            throw ValidationError("matrix: not square");
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = mpq_class(m[i][j]);
        a[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0)
            ++p;
        if (p == n)
            throw PreconditionError("abelianization-invertible", "matrix is singular");
        std::swap(a[c], a[p]);
        mpq_class inv = 1 / a[c][c];
        for (auto& x : a[c])
            x *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || sgn(a[r][c]) == 0)
                continue;
            mpq_class f = a[r][c];
            for (std::size_t j = c; j < 2 * n; ++j)
                a[r][j] -= f * a[c][j];
        }
    }
    IntegerMatrix out(n, std::vector<Integer>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][n + j].get_den() != 1)
                throw PreconditionError("abelianization-invertible", "inverse is not integral");
            out[i][j] = a[i][n + j].get_num();
        }
    return out;
}

NilAut invert_aut(const NilAut& h)
{
    const Alphabet& alpha = h.alphabet();
    const int n = alpha.size();
    IntegerMatrix b = unimodular_inverse(h.abelianization());
    std::vector<GroupWord> lift;
    for (int j = 0; j < n; ++j) {
        std::vector<Letter> letters;
        for (int i = 0; i < n; ++i)
            if (sgn(b[i][j]) != 0)
                letters.push_back({i, b[i][j].get_si()});
        lift.push_back(GroupWord::reduce(alpha, letters));
    }
    NilAut g(h.genus(), h.level(), lift);
    const NilAut id = NilAut::identity(h.genus(), h.level());
    // h o g agrees with id mod F_m; each correction raises m by one.
    for (int step = 0; step <= h.level(); ++step) {
        NilAut e = compose(h, g);
        if (e == id)
            return g;
        std::vector<GroupWord> correction;
        for (int z = 0; z < n; ++z) {
            GroupWord gen = GroupWord::generator(alpha, z);
            GroupWord wz = multiply(invert(gen), e.image(z));
            correction.push_back(multiply(gen, invert(wz)));
        }
        g = compose(g, NilAut(h.genus(), h.level(), correction));
    }
    throw std::logic_error("invert_aut: correction did not converge");
}

bool check_aut0(const NilAut& h)
{
    const int q = h.level() + 1;
    GroupWord w = omega(h.genus());
    return h.image_series(w, q) == magnus_expand(w, q);
}

IntegerMatrix symplectic_matrix(const NilAut& h)
{
    return h.abelianization();
}

bool symplectic_check(const IntegerMatrix& m)
{
    const std::size_t n = m.size();
    if (n % 2 != 0)
        return false;
    const std::size_t g = n / 2;
    IntegerMatrix j(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < g; ++i) {
        j[i][g + i] = 1;
        j[g + i][i] = -1;
    }
    return multiply(multiply(transpose(m), j), m) == j;
}

int filtration_degree(const NilAut& h)
{
    if (h.abelianization() != identity_matrix(h.alphabet().size()))
        return 0;
    const int q = h.level();
    int best = q - 1;
    for (int z = 0; z < h.alphabet().size(); ++z) {
        GroupWord gen = GroupWord::generator(h.alphabet(), z);
        auto w = lcs_weight(multiply(h.image(z), invert(gen)), q);
        if (w)
            best = std::min(best, *w - 1);
    }
    return best;
}

TensorElement johnson_element(const NilAut& h, int k)
{
    if (k < 1)
        throw PreconditionError("k>=1", "Johnson degree must be positive");
    if (h.level() < k + 2)
        throw PreconditionError("q>=k+2", "level " + std::to_string(h.level()) + " too low for k=" +
                                              std::to_string(k));
    if (filtration_degree(h) < k)
        throw PreconditionError("filtration>=k", "automorphism is not in the k-th filtration term");
    if (!check_aut0(h))
        throw PreconditionError("aut0", "automorphism does not fix omega_g");
    const Alphabet& a = h.alphabet();
    const int g = h.genus();
    const int n = a.size();
    auto d = [&](int z) {
        GroupWord gen = GroupWord::generator(a, z);
        return graded_class(multiply(h.image(z), invert(gen)), k + 1);
    };
    TensorElement t(n, k);
    for (int i = 1; i <= g; ++i) {
        t.add_term(a.x(i), d(a.y(i)));
        TensorElement neg(n, k);
        neg.add_term(a.y(i), d(a.x(i)));
        t -= neg;
    }
    if (!bracket_map(t).is_zero())
        throw std::logic_error("johnson_element: value is not in the bracket kernel");
    return t;
}

} // namespace jfilt

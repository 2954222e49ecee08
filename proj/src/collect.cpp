#include "jfilt/collect.hpp"

#include "jfilt/lie.hpp"

namespace jfilt {

GroupWord basic_commutator(const Alphabet& alphabet, const Monomial& lyndon)
{
    if (lyndon.empty())
        throw PreconditionError("lyndon", "empty word has no basic commutator");
    if (lyndon.size() == 1)
        return GroupWord::generator(alphabet, lyndon[0]);
    auto [u, v] = standard_factorization(lyndon);
    return commutator(basic_commutator(alphabet, u), basic_commutator(alphabet, v));
}

void left_multiply_letter(TruncatedSeries& s, int gen, std::int64_t exp)
{
    const int n = s.generators();
    const int q = s.cutoff();
    std::vector<Integer> binom(q);
    for (int j = 0; j < q; ++j)
        binom[j] = binomial(exp, j);
    for (int d = q - 1; d >= 1; --d) {
        auto& target = s.degree(d);
        std::size_t prefix = 0;
        std::size_t stride = target.size();
        for (int j = 1; j <= d; ++j) {
            // X_gen^j * (monomial of degree d-j)
            stride /= n;
            prefix = prefix * n + gen;
            if (sgn(binom[j]) == 0)
                continue;
            const auto& source = s.degree(d - j);
            const std::size_t base = prefix * stride;
            for (std::size_t m = 0; m < source.size(); ++m)
                if (sgn(source[m]) != 0)
                    target[base + m] += binom[j] * source[m];
        }
    }
}

GroupWord normal_form_from_series(const TruncatedSeries& s)
{
    const Alphabet& alphabet = s.alphabet();
    const int n = s.generators();
    const int q = s.cutoff();
    if (s.degree(0).front() != 1)
        throw PreconditionError("grouplike", "series has constant term != 1");
    TruncatedSeries rest = s;
    std::vector<Letter> out;
    for (int d = 1; d < q; ++d) {
        SparseTensor part = homogeneous_part(rest, d);
        if (part.empty())
            continue;
        auto basis = HallBasis::get(n, d);
        std::vector<Integer> coords = basis->coordinates(std::move(part));
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (sgn(coords[i]) == 0)
                continue;
            if (!coords[i].fits_slong_p())
                throw PreconditionError("grouplike", "exponent out of range");
            const std::int64_t e = coords[i].get_si();
            GroupWord c = basic_commutator(alphabet, basis->word(i));
            GroupWord inv = power(c, -e);
            const auto& letters = inv.letters();
            for (auto it = letters.rbegin(); it != letters.rend(); ++it)
                left_multiply_letter(rest, it->gen, it->exp);
            GroupWord piece = power(c, e);
            out.insert(out.end(), piece.letters().begin(), piece.letters().end());
        }
    }
    for (int d = 1; d < q; ++d)
        for (const Integer& c : rest.degree(d))
            if (sgn(c) != 0)
                throw PreconditionError("grouplike", "series is not a Magnus image");
    return GroupWord::reduce(alphabet, out);
}

GroupWord nilpotent_normal_form(const GroupWord& w, int q)
{
    return normal_form_from_series(magnus_expand(w, q));
}

} // namespace jfilt

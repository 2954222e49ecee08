#include "jfilt/stringlink.hpp"

namespace jfilt {

LongitudeTuple::LongitudeTuple(Alphabet a, int q, const std::vector<GroupWord>& words) : alphabet(a), level(q)
{
    if (a.kind() == AlphabetKind::full)
        throw ValidationError("tuple: entries must live in F' or F''");
    if (q < 2)
        throw PreconditionError("q>=2", "tuple level must be at least 2");
    if (static_cast<int>(words.size()) != a.genus())
        throw ValidationError("tuple: expected " + std::to_string(a.genus()) + " entries");
    for (const GroupWord& w : words) {
        if (!(w.alphabet() == a))
            throw ValidationError("tuple: entry alphabet mismatch");
        entries.push_back(nilpotent_normal_form(w, q));
    }
}

LongitudeTuple LongitudeTuple::trivial(Alphabet a, int q)
{
    return LongitudeTuple(a, q, std::vector<GroupWord>(a.genus(), GroupWord(a)));
}

namespace {

std::vector<GroupWord> conjugation_images(const LongitudeTuple& l)
{
    std::vector<GroupWord> images;
    for (int i = 0; i < l.genus(); ++i) {
        const GroupWord& e = l.entries[i];
        images.push_back(product(l.alphabet, {invert(e), GroupWord::generator(l.alphabet, i), e}));
    }
    return images;
}

GroupWord generator_product(const Alphabet& a)
{
    std::vector<Letter> letters;
    for (int i = 0; i < a.size(); ++i)
        letters.push_back({i, 1});
    return GroupWord::reduce(a, letters);
}

} // namespace

GroupWord conjugation_action(const LongitudeTuple& l, const GroupWord& w, int q)
{
    return nilpotent_normal_form(substitute(w, conjugation_images(l)), q);
}

bool validate_tuple(const LongitudeTuple& l)
{
    GroupWord prod = generator_product(l.alphabet);
    GroupWord image = substitute(prod, conjugation_images(l));
    return nilpotent_equal(image, prod, l.level + 1);
}

NilAut phi_hat(const LongitudeTuple& l, int q)
{
    if (l.alphabet.kind() != AlphabetKind::yOnly)
        throw ValidationError("phi_hat: tuple entries must be words in y");
    if (q > l.level)
        throw PreconditionError("q<=tuple level", "tuple is only known modulo level " + std::to_string(l.level));
    if (!validate_tuple(l))
        throw ValidationError("phi_hat: tuple fails the product condition");
    const int g = l.genus();
    Alphabet full(g, AlphabetKind::full);
    std::vector<GroupWord> images(2 * g, GroupWord(full));
    for (int i = 1; i <= g; ++i) {
        GroupWord li = include_in_full(l.entries[i - 1]);
        images[full.x(i)] = multiply(GroupWord::generator(full, full.x(i)), li);
        images[full.y(i)] = product(full, {invert(li), GroupWord::generator(full, full.y(i)), li});
    }
    NilAut h(g, q, images);
    if (!check_aut0(h))
        throw std::logic_error("phi_hat: image does not fix omega_g");
    return h;
}

NilAut psi_hat(const LongitudeTuple& m, int q)
{
    if (m.alphabet.kind() != AlphabetKind::xOnly)
        throw ValidationError("psi_hat: tuple entries must be words in x");
    if (q > m.level)
        throw PreconditionError("q<=tuple level", "tuple is only known modulo level " + std::to_string(m.level));
    const int g = m.genus();
    Alphabet full(g, AlphabetKind::full);
    std::vector<GroupWord> images(2 * g, GroupWord(full));
    for (int i = 1; i <= g; ++i) {
        GroupWord mi = include_in_full(m.entries[i - 1]);
        images[full.x(i)] = product(full, {invert(mi), GroupWord::generator(full, full.x(i)), mi});
        images[full.y(i)] = multiply(mi, GroupWord::generator(full, full.y(i)));
    }
    return NilAut(g, q, images);
}

LongitudeTuple milnor_compose(const LongitudeTuple& l, const LongitudeTuple& m)
{
    if (!(l.alphabet == m.alphabet) || l.level != m.level)
        throw ValidationError("tuple: compose needs equal alphabet and level");
    std::vector<GroupWord> out;
    for (int i = 0; i < l.genus(); ++i)
        out.push_back(multiply(l.entries[i], conjugation_action(l, m.entries[i], l.level)));
    return LongitudeTuple(l.alphabet, l.level, out);
}

LongitudeTuple extract_longitudes(const NilAut& h, int k)
{
    if (k < 1 || h.level() < k + 1)
        throw PreconditionError("q>=k+1", "level too low to read longitudes");
    const int g = h.genus();
    const Alphabet& a = h.alphabet();
    std::vector<GroupWord> entries;
    for (int i = 1; i <= g; ++i)
        entries.push_back(project_to_y(h.image(a.x(i))));
    return LongitudeTuple(Alphabet(g, AlphabetKind::yOnly), k + 1, entries);
}

std::vector<LieElement> tuple_classes(const LongitudeTuple& l, int k)
{
    std::vector<LieElement> out;
    for (const GroupWord& e : l.entries)
        out.push_back(graded_class(e, k + 1));
    return out;
}

LongitudeTuple tuple_from_tensor(const Alphabet& a, const TensorElement& t)
{
    const int g = a.genus();
    const int k = t.degree();
    if (t.generators() != g)
        throw ValidationError("tuple: tensor rank does not match genus");
    auto basis = HallBasis::get(g, k + 1);
    std::vector<GroupWord> entries;
    for (int i = 0; i < g; ++i) {
        LieElement c = t.component(i);
        std::vector<Letter> letters;
        for (std::size_t j = 0; j < basis->size(); ++j) {
            if (sgn(c.coords()[j]) == 0)
                continue;
            GroupWord piece = power(basic_commutator(a, basis->word(j)), c.coords()[j].get_si());
            letters.insert(letters.end(), piece.letters().begin(), piece.letters().end());
        }
        entries.push_back(GroupWord::reduce(a, letters));
    }
    return LongitudeTuple(a, k + 2, entries);
}

LongitudeTuple random_tuple(const Alphabet& a, int k, std::mt19937_64& rng)
{
    const int g = a.genus();
    TensorElement t(g, k);
    std::uniform_int_distribution<int> coef(-2, 2);
    for (const TensorElement& b : dk_basis(g, k)) {
        TensorElement term = b;
        term *= coef(rng);
        t += term;
    }
    return tuple_from_tensor(a, t);
}

LongitudeTuple twist_tuple(int genus, int i, int q)
{
    Alphabet a(genus, AlphabetKind::yOnly);
    if (i < 1 || i >= genus)
        throw ValidationError("tuple: twist index out of range");
    std::vector<GroupWord> entries(genus, GroupWord(a));
    GroupWord t = invert(multiply(GroupWord::generator(a, i - 1), GroupWord::generator(a, i)));
    entries[i - 1] = t;
    entries[i] = t;
    return LongitudeTuple(a, q, entries);
}

LongitudeTuple framing_tuple(int genus, int i, std::int64_t a_exp, int q)
{
    Alphabet a(genus, AlphabetKind::yOnly);
    std::vector<GroupWord> entries(genus, GroupWord(a));
    entries.at(i - 1) = GroupWord::generator(a, i - 1, a_exp);
    return LongitudeTuple(a, q, entries);
}

} // namespace jfilt

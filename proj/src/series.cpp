#include "jfilt/series.hpp"

namespace jfilt {

TruncatedSeries::TruncatedSeries(Alphabet alphabet, int cutoff)
    : alphabet_(alphabet), n_(alphabet.size()), cutoff_(cutoff)
{
    if (cutoff < 1)
        throw PreconditionError("cutoff", "truncation degree must be positive");
    blocks_.resize(cutoff);
    std::size_t size = 1;
    for (int d = 0; d < cutoff; ++d) {
        blocks_[d].assign(size, Integer(0));
        size *= static_cast<std::size_t>(n_);
    }
}

TruncatedSeries TruncatedSeries::one(Alphabet alphabet, int cutoff)
{
    TruncatedSeries s(alphabet, cutoff);
    s.blocks_[0][0] = 1;
    return s;
}

std::size_t TruncatedSeries::index(const Monomial& m) const
{
    std::size_t idx = 0;
    for (int a : m) {
        if (a < 0 || a >= n_)
            throw ValidationError("series: letter out of range");
        idx = idx * n_ + a;
    }
    return idx;
}

Monomial TruncatedSeries::monomial(int d, std::size_t idx) const
{
    Monomial m(d);
    for (int i = d - 1; i >= 0; --i) {
        m[i] = static_cast<int>(idx % n_);
        idx /= n_;
    }
    return m;
}

Integer TruncatedSeries::coeff(const Monomial& m) const
{
    if (static_cast<int>(m.size()) >= cutoff_)
        return 0;
    return blocks_[m.size()][index(m)];
}

void TruncatedSeries::set_coeff(const Monomial& m, const Integer& c)
{
    if (static_cast<int>(m.size()) >= cutoff_)
        throw PreconditionError("cutoff", "monomial length exceeds truncation");
    blocks_[m.size()][index(m)] = c;
}

std::vector<std::pair<Monomial, Integer>> TruncatedSeries::terms() const
{
    std::vector<std::pair<Monomial, Integer>> out;
    for (int d = 0; d < cutoff_; ++d)
        for (std::size_t i = 0; i < blocks_[d].size(); ++i)
            if (sgn(blocks_[d][i]) != 0)
                out.emplace_back(monomial(d, i), blocks_[d][i]);
    return out;
}

std::optional<int> TruncatedSeries::lowest_nonconstant_degree() const
{
    for (int d = 1; d < cutoff_; ++d)
        for (const Integer& c : blocks_[d])
            if (sgn(c) != 0)
                return d;
    return std::nullopt;
}

Integer binomial(std::int64_t e, int j)
{
    Integer num = 1, den = 1;
    for (int t = 0; t < j; ++t) {
        num *= Integer(static_cast<long>(e - t));
        den *= t + 1;
    }
    return num / den;
}

void TruncatedSeries::multiply_letter(int gen, std::int64_t exp)
{
    if (gen < 0 || gen >= n_)
        throw ValidationError("series: letter out of range");
    if (exp == 0)
        return;
    std::vector<Integer> coef(cutoff_);
    std::vector<std::size_t> code(cutoff_, 0), shift(cutoff_, 1);
    for (int j = 1; j < cutoff_; ++j) {
        coef[j] = binomial(exp, j);
        code[j] = code[j - 1] * n_ + gen;
        shift[j] = shift[j - 1] * n_;
    }
    // Descending target degree keeps the lower-degree sources unmodified.
    for (int d = cutoff_ - 1; d >= 1; --d) {
        std::vector<Integer>& target = blocks_[d];
        for (int j = 1; j <= d; ++j) {
            if (sgn(coef[j]) == 0)
                continue;
            const std::vector<Integer>& src = blocks_[d - j];
            for (std::size_t i = 0; i < src.size(); ++i)
                if (sgn(src[i]) != 0)
                    target[i * shift[j] + code[j]] += coef[j] * src[i];
        }
    }
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return a.n_ == b.n_ && a.cutoff_ == b.cutoff_ && a.blocks_ == b.blocks_;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (!(a.alphabet() == b.alphabet()) || a.cutoff() != b.cutoff())
        throw ValidationError("series: operand mismatch");
    const int q = a.cutoff();
    const std::size_t n = static_cast<std::size_t>(a.generators());
    TruncatedSeries out(a.alphabet(), q);
    std::vector<std::size_t> pw(q, 1);
    for (int d = 1; d < q; ++d)
        pw[d] = pw[d - 1] * n;
    for (int da = 0; da < q; ++da) {
        const auto& ba = a.degree(da);
        for (std::size_t i = 0; i < ba.size(); ++i) {
            if (sgn(ba[i]) == 0)
                continue;
            for (int db = 0; da + db < q; ++db) {
                const auto& bb = b.degree(db);
                auto& target = out.degree(da + db);
                const std::size_t base = i * pw[db];
                for (std::size_t j = 0; j < bb.size(); ++j)
                    if (sgn(bb[j]) != 0)
                        target[base + j] += ba[i] * bb[j];
            }
        }
    }
    return out;
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (!(a.alphabet() == b.alphabet()) || a.cutoff() != b.cutoff())
        throw ValidationError("series: operand mismatch");
    TruncatedSeries out = a;
    for (int d = 0; d < a.cutoff(); ++d)
        for (std::size_t i = 0; i < out.degree(d).size(); ++i)
            out.degree(d)[i] -= b.degree(d)[i];
    return out;
}

TruncatedSeries magnus_expand(const GroupWord& w, int q)
{
    if (q < 2)
        throw PreconditionError("q>=2", "Magnus truncation needs q >= 2");
    TruncatedSeries s = TruncatedSeries::one(w.alphabet(), q);
    for (const Letter& l : w.letters())
        s.multiply_letter(l.gen, l.exp);
    return s;
}

bool nilpotent_equal(const GroupWord& u, const GroupWord& v, int q)
{
    if (!(u.alphabet() == v.alphabet()))
        throw ValidationError("word: alphabet mismatch");
    return magnus_expand(u, q) == magnus_expand(v, q);
}

std::optional<int> lcs_weight(const GroupWord& w, int qmax)
{
    return magnus_expand(w, qmax).lowest_nonconstant_degree();
}

} // namespace jfilt

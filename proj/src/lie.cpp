#include "jfilt/lie.hpp"

#include <functional>
#include <mutex>
#include <sstream>

namespace jfilt {

std::int64_t witt_dimension(int n, int k)
{
    if (n < 1 || k < 1)
        throw PreconditionError("n>=1,k>=1", "Witt dimension needs positive arguments");
    auto mobius = [](int m) {
        int mu = 1;
        for (int p = 2; p * p <= m; ++p) {
            if (m % p == 0) {
                m /= p;
                if (m % p == 0)
                    return 0;
                mu = -mu;
            }
        }
        return m > 1 ? -mu : mu;
    };
    Integer sum = 0;
    for (int d = 1; d <= k; ++d) {
        if (k % d != 0)
            continue;
        Integer term;
        mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(n),
                      static_cast<unsigned long>(k / d));
        sum += mobius(d) * term;
    }
    sum /= k;
    return sum.get_si();
}

std::vector<Monomial> lyndon_words(int n, int k)
{
    // Duval's generation of all Lyndon words of length <= k in lex order.
    std::vector<Monomial> out;
    if (n < 1 || k < 1)
        return out;
    Monomial w{-1};
    while (!w.empty()) {
        ++w.back();
        if (static_cast<int>(w.size()) == k)
            out.push_back(w);
        std::size_t m = w.size();
        while (static_cast<int>(w.size()) < k)
            w.push_back(w[w.size() - m]);
        while (!w.empty() && w.back() == n - 1)
            w.pop_back();
    }
    return out;
}

namespace {

bool is_lyndon(const Monomial& w)
{
    // Strictly smaller than every proper rotation.
    const std::size_t n = w.size();
    for (std::size_t s = 1; s < n; ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            int a = w[i], b = w[(i + s) % n];
            if (a < b)
                break;
            if (a > b)
                return false;
            if (i + 1 == n)
                return false;
        }
    }
    return true;
}

} // namespace

std::pair<Monomial, Monomial> standard_factorization(const Monomial& w)
{
    for (std::size_t cut = 1; cut < w.size(); ++cut) {
        Monomial v(w.begin() + cut, w.end());
        if (is_lyndon(v))
            return {Monomial(w.begin(), w.begin() + cut), v};
    }
    throw PreconditionError("lyndon", "standard factorization needs length >= 2");
}

namespace {

std::uint64_t encode(const Monomial& m, int n)
{
    std::uint64_t idx = 0;
    for (int a : m)
        idx = idx * n + a;
    return idx;
}

std::uint64_t ipow(int n, int k)
{
    std::uint64_t r = 1;
    for (int i = 0; i < k; ++i)
        r *= n;
    return r;
}

void add_into(SparseTensor& t, std::uint64_t idx, const Integer& c)
{
    auto [it, inserted] = t.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            t.erase(it);
    }
}

// t1 (degree d1) * t2 (degree d2) - t2 * t1
SparseTensor commutator_tensor(const SparseTensor& a, int da, const SparseTensor& b, int db, int n)
{
    SparseTensor out;
    const std::uint64_t sa = ipow(n, da), sb = ipow(n, db);
    for (const auto& [ia, ca] : a)
        for (const auto& [ib, cb] : b) {
            Integer prod = ca * cb;
            add_into(out, ia * sb + ib, prod);
            add_into(out, ib * sa + ia, -prod);
        }
    return out;
}

} // namespace

HallBasis::HallBasis(int n, int k) : n_(n), k_(k)
{
    if (n < 1 || k < 1)
        throw PreconditionError("n>=1,k>=1", "Hall basis needs positive arguments");
    words_ = lyndon_words(n, k);
    indices_.reserve(words_.size());
    std::map<Monomial, SparseTensor> memo;
    std::function<const SparseTensor&(const Monomial&)> expand = [&](const Monomial& w) -> const SparseTensor& {
        auto it = memo.find(w);
        if (it != memo.end())
            return it->second;
        SparseTensor t;
        if (w.size() == 1) {
            t.emplace(static_cast<std::uint64_t>(w[0]), Integer(1));
        } else {
            auto [u, v] = standard_factorization(w);
            const SparseTensor& pu = expand(u);
            const SparseTensor& pv = expand(v);
            t = commutator_tensor(pu, static_cast<int>(u.size()), pv, static_cast<int>(v.size()), n_);
        }
        return memo.emplace(w, std::move(t)).first->second;
    };
    for (const Monomial& w : words_) {
        indices_.push_back(encode(w, n_));
        expansions_.push_back(expand(w));
    }
}

std::shared_ptr<const HallBasis> HallBasis::get(int n, int k)
{
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::shared_ptr<const HallBasis>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto key = std::make_pair(n, k);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    auto basis = std::make_shared<const HallBasis>(n, k);
    cache.emplace(key, basis);
    return basis;
}

std::ptrdiff_t HallBasis::position(std::uint64_t tensor_index) const
{
    auto it = std::lower_bound(indices_.begin(), indices_.end(), tensor_index);
    if (it == indices_.end() || *it != tensor_index)
        return -1;
    return it - indices_.begin();
}

std::vector<Integer> HallBasis::coordinates(SparseTensor t) const
{
    std::vector<Integer> coords(words_.size(), Integer(0));
    // The smallest word in the support of a Lie polynomial is Lyndon and
    // the expansion of its basis bracket starts with that word.
    while (!t.empty()) {
        auto [idx, c] = *t.begin();
        std::ptrdiff_t pos = position(idx);
        if (pos < 0)
            throw PreconditionError("lie-element", "tensor is not a Lie polynomial");
        coords[pos] = c;
        for (const auto& [j, e] : expansions_[pos])
            add_into(t, j, -c * e);
    }
    return coords;
}

std::string HallBasis::bracket_string(std::size_t i, const std::vector<std::string>& names) const
{
    std::function<std::string(const Monomial&)> render = [&](const Monomial& w) -> std::string {
        if (w.size() == 1)
            return names.at(w[0]);
        auto [u, v] = standard_factorization(w);
        return "[" + render(u) + "," + render(v) + "]";
    };
    return render(words_[i]);
}

LieElement::LieElement(int n, int k) : n_(n), k_(k)
{
    coords_.assign(static_cast<std::size_t>(witt_dimension(n, k)), Integer(0));
}

LieElement::LieElement(int n, int k, std::vector<Integer> coords) : n_(n), k_(k), coords_(std::move(coords))
{
    if (static_cast<std::int64_t>(coords_.size()) != witt_dimension(n, k))
        throw ValidationError("lie: coordinate vector has the wrong length");
}

LieElement LieElement::generator(int n, int i)
{
    LieElement e(n, 1);
    e.coords_.at(i) = 1;
    return e;
}

LieElement LieElement::from_vector(const std::vector<Integer>& v)
{
    return LieElement(static_cast<int>(v.size()), 1, v);
}

bool LieElement::is_zero() const
{
    for (const Integer& c : coords_)
        if (sgn(c) != 0)
            return false;
    return true;
}

SparseTensor LieElement::expand() const
{
    auto basis = HallBasis::get(n_, k_);
    SparseTensor t;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (sgn(coords_[i]) == 0)
            continue;
        for (const auto& [j, e] : basis->expansion(i))
            add_into(t, j, coords_[i] * e);
    }
    return t;
}

LieElement LieElement::from_tensor(int n, int k, const SparseTensor& t)
{
    return LieElement(n, k, HallBasis::get(n, k)->coordinates(t));
}

std::string LieElement::str(const std::vector<std::string>& names) const
{
    std::vector<std::string> nm = names;
    for (int i = static_cast<int>(nm.size()); i < n_; ++i)
        nm.push_back(std::string(1, static_cast<char>('a' + i)));
    auto basis = HallBasis::get(n_, k_);
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const Integer& c = coords_[i];
        if (sgn(c) == 0)
            continue;
        if (!first)
            os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0)
            os << "-";
        first = false;
        Integer a = abs(c);
        if (a != 1)
            os << a.get_str() << "*";
        os << basis->bracket_string(i, nm);
    }
    return first ? "0" : os.str();
}

static void require_compatible(const LieElement& a, const LieElement& b)
{
    if (a.generators() != b.generators() || a.degree() != b.degree())
        throw ValidationError("lie: operands live in different modules");
}

LieElement& LieElement::operator+=(const LieElement& o)
{
    require_compatible(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

LieElement& LieElement::operator-=(const LieElement& o)
{
    require_compatible(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= o.coords_[i];
    return *this;
}

LieElement& LieElement::operator*=(const Integer& c)
{
    for (Integer& x : coords_)
        x *= c;
    return *this;
}

LieElement lie_bracket(const LieElement& u, const LieElement& v)
{
    if (u.generators() != v.generators())
        throw ValidationError("lie: bracket of elements over different generator sets");
    const int n = u.generators();
    SparseTensor t = commutator_tensor(u.expand(), u.degree(), v.expand(), v.degree(), n);
    return LieElement::from_tensor(n, u.degree() + v.degree(), t);
}

LieElement apply_linear(const LieElement& u, const std::vector<std::vector<Integer>>& matrix)
{
    if (static_cast<int>(matrix.size()) != u.generators() || matrix.empty())
        throw ValidationError("lie: linear map has the wrong number of rows");
    const int m = static_cast<int>(matrix.front().size());
    const int k = u.degree();
    const int n = u.generators();
    SparseTensor out;
    for (const auto& [idx, c] : u.expand()) {
        // Decode the word and multiply out the images letter by letter.
        std::vector<int> letters(k);
        std::uint64_t rest = idx;
        for (int i = k - 1; i >= 0; --i) {
            letters[i] = static_cast<int>(rest % n);
            rest /= n;
        }
        SparseTensor acc{{0, c}};
        for (int a : letters) {
            SparseTensor next;
            for (const auto& [j, cj] : acc)
                for (int b = 0; b < m; ++b)
                    if (sgn(matrix[a][b]) != 0)
                        add_into(next, j * m + b, cj * matrix[a][b]);
            acc = std::move(next);
        }
        for (const auto& [j, cj] : acc)
            add_into(out, j, cj);
    }
    return LieElement::from_tensor(m, k, out);
}

SparseTensor homogeneous_part(const TruncatedSeries& s, int d)
{
    SparseTensor t;
    if (d >= s.cutoff())
        return t;
    const auto& block = s.degree(d);
    for (std::size_t i = 0; i < block.size(); ++i)
        if (sgn(block[i]) != 0)
            t.emplace(i, block[i]);
    return t;
}

LieElement graded_class(const GroupWord& w, int k)
{
    if (k < 1)
        throw PreconditionError("k>=1", "graded class needs a positive degree");
    TruncatedSeries s = magnus_expand(w, k + 1);
    auto low = s.lowest_nonconstant_degree();
    if (low && *low < k)
        throw PreconditionError("weight>=k", "word " + w.str() + " has weight " + std::to_string(*low) +
                                                 " < " + std::to_string(k));
    return LieElement::from_tensor(w.alphabet().size(), k, homogeneous_part(s, k));
}

std::vector<std::string> generator_names(const Alphabet& a)
{
    std::vector<std::string> names;
    for (int i = 0; i < a.size(); ++i)
        names.push_back(a.name(i));
    return names;
}

} // namespace jfilt

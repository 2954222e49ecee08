#include "jfilt/bracket_kernel.hpp"

#include <sstream>

namespace jfilt {

TensorElement::TensorElement(int n, int k)
    : n_(n), k_(k), width_(static_cast<std::size_t>(witt_dimension(n, k + 1)))
{
    coords_.assign(n_ * width_, Integer(0));
}

TensorElement::TensorElement(int n, int k, std::vector<Integer> coords) : TensorElement(n, k)
{
    if (coords.size() != coords_.size())
        throw ValidationError("tensor: coordinate vector has the wrong length");
    coords_ = std::move(coords);
}

bool TensorElement::is_zero() const
{
    for (const Integer& c : coords_)
        if (sgn(c) != 0)
            return false;
    return true;
}

LieElement TensorElement::component(int a) const
{
    std::vector<Integer> c(coords_.begin() + a * width_, coords_.begin() + (a + 1) * width_);
    return LieElement(n_, k_ + 1, std::move(c));
}

void TensorElement::add_term(const std::vector<Integer>& a, const LieElement& u)
{
    if (static_cast<int>(a.size()) != n_ || u.generators() != n_ || u.degree() != k_ + 1)
        throw ValidationError("tensor: term does not match H (x) L_{k+1}");
    for (int i = 0; i < n_; ++i) {
        if (sgn(a[i]) == 0)
            continue;
        for (std::size_t j = 0; j < width_; ++j)
            coords_[i * width_ + j] += a[i] * u.coords()[j];
    }
}

void TensorElement::add_term(int a, const LieElement& u)
{
    std::vector<Integer> e(n_, Integer(0));
    e.at(a) = 1;
    add_term(e, u);
}

std::string TensorElement::str(const std::vector<std::string>& names) const
{
    std::vector<std::string> nm = names;
    for (int i = static_cast<int>(nm.size()); i < n_; ++i)
        nm.push_back(std::string(1, static_cast<char>('a' + i)));
    std::ostringstream os;
    bool first = true;
    for (int a = 0; a < n_; ++a) {
        LieElement u = component(a);
        if (u.is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << nm[a] << "(x)(" << u.str(nm) << ")";
    }
    return first ? "0" : os.str();
}

static void require_compatible(const TensorElement& a, const TensorElement& b)
{
    if (a.generators() != b.generators() || a.degree() != b.degree())
        throw ValidationError("tensor: operands live in different modules");
}

TensorElement& TensorElement::operator+=(const TensorElement& o)
{
    require_compatible(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] += o.coords_[i];
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o)
{
    require_compatible(*this, o);
    for (std::size_t i = 0; i < coords_.size(); ++i)
        coords_[i] -= o.coords_[i];
    return *this;
}

TensorElement& TensorElement::operator*=(const Integer& c)
{
    for (Integer& x : coords_)
        x *= c;
    return *this;
}

LieElement bracket_map(const TensorElement& t)
{
    const int n = t.generators();
    const int k = t.degree();
    LieElement out(n, k + 2);
    for (int a = 0; a < n; ++a) {
        LieElement u = t.component(a);
        if (!u.is_zero())
            out += lie_bracket(LieElement::generator(n, a), u);
    }
    return out;
}

namespace {

void check_args(int n, int k)
{
    if (n < 1 || k < 1)
        throw PreconditionError("n>=1,k>=1", "bracket map needs positive n and k");
}

template <class Sink>
void for_each_column(int n, int k, Sink&& sink)
{
    const std::size_t width = static_cast<std::size_t>(witt_dimension(n, k + 1));
    for (int a = 0; a < n; ++a) {
        LieElement gen = LieElement::generator(n, a);
        for (std::size_t j = 0; j < width; ++j) {
            LieElement u(n, k + 1);
            u.coords()[j] = 1;
            sink(a * width + j, lie_bracket(gen, u));
        }
    }
}

} // namespace

IntegerMatrix bracket_matrix(int n, int k)
{
    check_args(n, k);
    const std::size_t rows = static_cast<std::size_t>(witt_dimension(n, k + 2));
    const std::size_t cols = n * static_cast<std::size_t>(witt_dimension(n, k + 1));
    IntegerMatrix m(rows, std::vector<Integer>(cols, Integer(0)));
    for_each_column(n, k, [&](std::size_t col, const LieElement& img) {
        for (std::size_t r = 0; r < rows; ++r)
            m[r][col] = img.coords()[r];
    });
    return m;
}

SparseMatrix bracket_matrix_sparse(int n, int k)
{
    check_args(n, k);
    const std::size_t rows = static_cast<std::size_t>(witt_dimension(n, k + 2));
    const std::size_t cols = n * static_cast<std::size_t>(witt_dimension(n, k + 1));
    SparseMatrix m(rows, cols);
    for_each_column(n, k, [&](std::size_t col, const LieElement& img) {
        for (std::size_t r = 0; r < rows; ++r)
            if (sgn(img.coords()[r]) != 0)
                m.set(r, col, img.coords()[r]);
    });
    return m;
}

std::int64_t dk_rank(int n, int k)
{
    check_args(n, k);
    return n * witt_dimension(n, k + 1) - witt_dimension(n, k + 2);
}

std::int64_t dk_rank_smith(int n, int k)
{
    SparseMatrix m = bracket_matrix_sparse(n, k);
    const std::size_t cols = m.cols;
    return static_cast<std::int64_t>(cols - rational_rank(std::move(m)));
}

std::vector<TensorElement> dk_basis(int n, int k)
{
    std::vector<TensorElement> out;
    IntegerMatrix m = bracket_matrix(n, k);
    if (m.empty()) {
        const std::size_t cols = n * static_cast<std::size_t>(witt_dimension(n, k + 1));
        m.assign(1, std::vector<Integer>(cols, Integer(0)));
    }
    SmithDecomposition s = smith_decompose(m);
    for (auto& v : s.kernel_basis())
        out.emplace_back(n, k, std::move(v));
    return out;
}

std::pair<std::int64_t, std::int64_t> a1_dimensions(int g)
{
    if (g < 1)
        throw PreconditionError("g>=1", "genus must be positive");
    const std::int64_t n = 2 * g;
    return {n * (n - 1) * (n - 2) / 6, n * (n - 1) / 2 + n + 1};
}

} // namespace jfilt

#include "jfilt/smith.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace jfilt {

IntegerMatrix identity_matrix(std::size_t n)
{
    IntegerMatrix m(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = 1;
    return m;
}

IntegerMatrix multiply(const IntegerMatrix& a, const IntegerMatrix& b)
{
    if (a.empty())
        return {};
    const std::size_t inner = b.size();
    const std::size_t cols = b.empty() ? 0 : b.front().size();
    if (a.front().size() != inner)
        throw ValidationError("matrix: dimension mismatch in product");
    IntegerMatrix out(a.size(), std::vector<Integer>(cols, Integer(0)));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t l = 0; l < inner; ++l) {
            if (sgn(a[i][l]) == 0)
                continue;
            for (std::size_t j = 0; j < cols; ++j)
                out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

IntegerMatrix transpose(const IntegerMatrix& a)
{
    if (a.empty())
        return {};
    IntegerMatrix t(a.front().size(), std::vector<Integer>(a.size()));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            t[j][i] = a[i][j];
    return t;
}

namespace {

void row_axpy(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& c)
{
    for (std::size_t j = 0; j < m[dst].size(); ++j)
        if (sgn(m[src][j]) != 0)
            m[dst][j] += c * m[src][j];
}

void col_axpy(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& c)
{
    for (auto& row : m)
        if (sgn(row[src]) != 0)
            row[dst] += c * row[src];
}

void col_swap(IntegerMatrix& m, std::size_t a, std::size_t b)
{
    for (auto& row : m)
        std::swap(row[a], row[b]);
}

// Makes the diagonal a divisibility chain using 2x2 gcd/lcm moves.
void fix_divisibility(std::vector<Integer>& d)
{
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j) {
            Integer g = gcd(d[i], d[j]);
            if (sgn(g) == 0)
                continue;
            Integer l = abs(d[i] * d[j]) / g;
            d[i] = g;
            d[j] = l;
        }
}

} // namespace

SmithDecomposition smith_decompose(const IntegerMatrix& a)
{
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a.front().size();
    SmithDecomposition s;
    s.D = a;
    s.U = identity_matrix(m);
    s.V = identity_matrix(n);
    IntegerMatrix& D = s.D;
    std::size_t t = 0;
    for (; t < std::min(m, n); ++t) {
        // Smallest nonzero entry of the trailing block as pivot.
        std::size_t pr = m, pc = n;
        Integer best;
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < n; ++j)
                if (sgn(D[i][j]) != 0 && (pr == m || abs(D[i][j]) < best)) {
                    best = abs(D[i][j]);
                    pr = i;
                    pc = j;
                }
        if (pr == m)
            break;
        std::swap(D[t], D[pr]);
        std::swap(s.U[t], s.U[pr]);
        col_swap(D, t, pc);
        col_swap(s.V, t, pc);

        for (;;) {
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (sgn(D[i][t]) == 0)
                    continue;
                Integer q = D[i][t] / D[t][t];
                row_axpy(D, i, t, -q);
                row_axpy(s.U, i, t, -q);
                if (sgn(D[i][t]) != 0) {
                    std::swap(D[t], D[i]);
                    std::swap(s.U[t], s.U[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (sgn(D[t][j]) == 0)
                    continue;
                Integer q = D[t][j] / D[t][t];
                col_axpy(D, j, t, -q);
                col_axpy(s.V, j, t, -q);
                if (sgn(D[t][j]) != 0) {
                    col_swap(D, t, j);
                    col_swap(s.V, t, j);
                    clean = false;
                }
            }
            if (!clean)
                continue;
            // Pivot must divide the whole trailing block.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(D[i][j].get_mpz_t(), D[t][t].get_mpz_t())) {
                        row_axpy(D, t, i, 1);
                        row_axpy(s.U, t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides)
                break;
        }
        if (sgn(D[t][t]) < 0) {
            for (auto& x : D[t])
                x = -x;
            for (auto& x : s.U[t])
                x = -x;
        }
    }
    s.rank = t;
    return s;
}

std::vector<Integer> SmithDecomposition::invariants() const
{
    std::vector<Integer> d;
    for (std::size_t i = 0; i < rank; ++i)
        d.push_back(D[i][i]);
    return d;
}

std::vector<std::vector<Integer>> SmithDecomposition::kernel_basis() const
{
    std::vector<std::vector<Integer>> basis;
    for (std::size_t j = rank; j < V.size(); ++j) {
        std::vector<Integer> v(V.size());
        for (std::size_t i = 0; i < V.size(); ++i)
            v[i] = V[i][j];
        basis.push_back(std::move(v));
    }
    return basis;
}

SparseMatrix SparseMatrix::from_dense(const IntegerMatrix& a)
{
    SparseMatrix s(a.size(), a.empty() ? 0 : a.front().size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (sgn(a[i][j]) != 0)
                s.entries[i].emplace(j, a[i][j]);
    return s;
}

void SparseMatrix::set(std::size_t r, std::size_t c, const Integer& v)
{
    if (sgn(v) == 0)
        entries.at(r).erase(c);
    else
        entries.at(r)[c] = v;
}

namespace {

class Eliminator {
public:
    explicit Eliminator(SparseMatrix a) : rows_(std::move(a.entries)), cols_(a.cols)
    {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (const auto& [c, v] : rows_[r])
                cols_[c].insert(r);
            if (!rows_[r].empty())
                live_.insert(r);
        }
    }

    std::vector<Integer> run()
    {
        std::vector<Integer> diag;
        for (;;) {
            auto [r, c] = choose_pivot();
            if (r == npos)
                break;
            diag.push_back(reduce(r, c));
        }
        fix_divisibility(diag);
        std::sort(diag.begin(), diag.end(), [](const Integer& a, const Integer& b) { return a < b; });
        return diag;
    }

private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

    std::pair<std::size_t, std::size_t> choose_pivot() const
    {
        std::size_t br = npos, bc = npos;
        Integer best;
        std::size_t best_cost = 0;
        for (std::size_t r : live_)
            for (const auto& [c, v] : rows_[r]) {
                Integer a = abs(v);
                std::size_t cost = (rows_[r].size() - 1) * (cols_[c].size() - 1);
                if (br == npos || a < best || (a == best && cost < best_cost)) {
                    br = r;
                    bc = c;
                    best = a;
                    best_cost = cost;
                    if (a == 1 && cost == 0)
                        return {br, bc};
                }
            }
        return {br, bc};
    }

    // row dst += f * row src
    void axpy(std::size_t dst, std::size_t src, const Integer& f)
    {
        auto& d = rows_[dst];
        for (const auto& [c, v] : rows_[src]) {
            auto [it, inserted] = d.try_emplace(c, f * v);
            if (!inserted) {
                it->second += f * v;
                if (sgn(it->second) == 0) {
                    d.erase(it);
                    cols_[c].erase(dst);
                }
            } else {
                cols_[c].insert(dst);
            }
        }
        if (d.empty())
            live_.erase(dst);
        else
            live_.insert(dst);
    }

    // Eliminates around (r,c); returns the resulting diagonal entry.
    Integer reduce(std::size_t r, std::size_t c)
    {
        for (;;) {
            const Integer p = rows_[r].at(c);
            std::size_t next = npos;
            std::vector<std::size_t> others(cols_[c].begin(), cols_[c].end());
            for (std::size_t o : others) {
                if (o == r)
                    continue;
                Integer q = rows_[o].at(c) / p;
                if (sgn(q) != 0)
                    axpy(o, r, -q);
                // A remainder smaller than the pivot becomes the next pivot.
                if (next == npos && rows_[o].count(c))
                    next = o;
            }
            if (next != npos) {
                r = next;
                continue;
            }
            // Column c now only meets row r; column operations touch row r only.
            std::size_t next_col = npos;
            for (auto& [j, v] : rows_[r]) {
                if (j == c || mpz_divisible_p(v.get_mpz_t(), p.get_mpz_t()))
                    continue;
                v -= (v / p) * p;
                next_col = j;
                break;
            }
            if (next_col != npos) {
                c = next_col;
                continue;
            }
            Integer d = abs(p);
            for (const auto& [j, v] : rows_[r])
                cols_[j].erase(r);
            rows_[r].clear();
            live_.erase(r);
            return d;
        }
    }

    std::vector<std::map<std::size_t, Integer>> rows_;
    std::vector<std::set<std::size_t>> cols_;
    std::set<std::size_t> live_;
};

} // namespace

std::vector<Integer> smith_invariants(SparseMatrix a)
{
    return Eliminator(std::move(a)).run();
}

std::size_t rational_rank(SparseMatrix a)
{
    return smith_invariants(std::move(a)).size();
}

} // namespace jfilt

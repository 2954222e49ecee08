#include "jfilt/lagrangian.hpp"

namespace jfilt {

namespace {

GroupWord projected_x_image(const NilAut& h, int i)
{
    return project_to_y(h.image(h.alphabet().x(i)));
}

} // namespace

int lagrangian_degree(const NilAut& h)
{
    const int q = h.level();
    int best = q - 1;
    for (int i = 1; i <= h.genus(); ++i) {
        auto w = lcs_weight(projected_x_image(h, i), q);
        if (w)
            best = std::min(best, *w - 1);
    }
    return best;
}

IntegerMatrix lagrangian_action(const NilAut& h)
{
    const int g = h.genus();
    IntegerMatrix c(g, std::vector<Integer>(g, Integer(0)));
    for (int j = 1; j <= g; ++j) {
        auto ab = project_to_y(h.image(h.alphabet().y(j))).abelianization();
        for (int i = 0; i < g; ++i)
            c[i][j - 1] = ab[i];
    }
    return c;
}

namespace {

std::vector<LieElement> jl_components(const NilAut& h, int k)
{
    if (k < 1)
        throw PreconditionError("k>=1", "Lagrangian degree must be positive");
    if (h.level() < k + 2)
        throw PreconditionError("q>=k+2", "level " + std::to_string(h.level()) + " too low for k=" +
                                              std::to_string(k));
    if (lagrangian_degree(h) < k)
        throw PreconditionError("lagrangian>=k", "automorphism is not in the k-th Lagrangian term");
    std::vector<LieElement> out;
    for (int i = 1; i <= h.genus(); ++i)
        out.push_back(graded_class(nilpotent_normal_form(projected_x_image(h, i), k + 2), k + 1));
    return out;
}

} // namespace

LagrangianReport jl_element(const NilAut& h, int k)
{
    const int g = h.genus();
    LagrangianReport r;
    r.g = g;
    r.k = k;
    r.value = TensorElement(g, k);
    auto comps = jl_components(h, k);
    for (int i = 0; i < g; ++i)
        r.value.add_term(i, comps[i]);
    r.in_hat = lagrangian_action(h) == identity_matrix(g);
    if (r.in_hat && check_aut0(h) && !bracket_map(r.value).is_zero())
        throw std::logic_error("jl_element: value is not in the bracket kernel");
    return r;
}

bool cocycle_check(const NilAut& h1, const NilAut& h2, int k)
{
    const int g = h1.genus();
    auto j1 = jl_components(h1, k);
    auto j2 = jl_components(h2, k);
    auto j12 = jl_components(compose(h1, h2), k);
    // h2 acts on the first factor through its x-block; h1 acts on L_{k+1}(H')
    // through the matrix induced on H' (row i = image of y_i).
    const IntegerMatrix& a2 = h2.abelianization();
    IntegerMatrix c1 = transpose(lagrangian_action(h1));
    const Alphabet& alpha = h1.alphabet();
    for (int j = 1; j <= g; ++j) {
        LieElement rhs = apply_linear(j2[j - 1], c1);
        for (int i = 1; i <= g; ++i) {
            const Integer& coef = a2[alpha.x(i)][alpha.x(j)];
            if (sgn(coef) != 0)
                rhs += coef * j1[i - 1];
        }
        if (!(rhs == j12[j - 1]))
            return false;
    }
    return true;
}

std::int64_t pure_braid_rank(int g, int k)
{
    if (k < 1)
        throw PreconditionError("k>=1", "pure braid rank needs k >= 1");
    std::int64_t r = 0;
    for (int j = 1; j < g; ++j)
        r += witt_dimension(j, k + 1);
    return r;
}

std::optional<std::int64_t> closed_form_gap(int g, int k)
{
    const std::int64_t c = static_cast<std::int64_t>(g) * g * g - g;
    switch (k) {
    case 1:
        return 0;
    case 2:
        return c / 6;
    case 3:
        return c * (g - 2) / 8;
    default:
        return std::nullopt;
    }
}

std::vector<GapRow> gap_table(int gmax, int kmax, bool smith)
{
    std::vector<GapRow> rows;
    for (int g = 2; g <= gmax; ++g)
        for (int k = 1; k <= kmax; ++k) {
            GapRow r;
            r.g = g;
            r.k = k;
            r.tensor_dim = g * witt_dimension(g, k + 1);
            r.lie_dim = witt_dimension(g, k + 2);
            r.dk = dk_rank(g, k);
            if (smith)
                r.dk_smith = dk_rank_smith(g, k);
            r.r = pure_braid_rank(g, k);
            r.gap = r.dk - r.r;
            r.closed_form = closed_form_gap(g, k);
            r.match = (!smith || r.dk_smith == r.dk) && (!r.closed_form || *r.closed_form == r.gap);
            rows.push_back(r);
        }
    return rows;
}

} // namespace jfilt

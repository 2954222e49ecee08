#include "jfilt/acceptance.hpp"
#include "jfilt/io.hpp"
#include "jfilt/tree.hpp"

#include "CLI11.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace jfilt;

namespace {

struct Options {
    bool csv = false;
    std::uint64_t seed = 0;
    int level = 0;
    int k = 1;
    int gmax = 5;
    int kmax = 3;
    bool smith = false;
    std::string out;
};

int max_degree()
{
    const char* env = std::getenv("JFILT_MAX_DEGREE");
    if (!env || !*env)
        return 8;
    try {
        return std::stoi(env);
    } catch (const std::exception&) {
        throw ValidationError(std::string("JFILT_MAX_DEGREE is not an integer: ") + env);
    }
}

void cap(const char* what, int value)
{
    const int limit = max_degree();
    if (value > limit)
        throw PreconditionError("JFILT_MAX_DEGREE", std::string(what) + "=" + std::to_string(value) +
                                                        " exceeds the cap " + std::to_string(limit));
}

std::string csv_line(std::initializer_list<std::string> cells)
{
    std::string s;
    for (const auto& c : cells)
        s += (s.empty() ? "" : ",") + c;
    return s + "\n";
}

std::string csv_integers(const std::vector<Integer>& v)
{
    std::string s;
    for (const Integer& c : v)
        s += (s.empty() ? "" : ";") + c.get_str();
    return s;
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

class Runner {
public:
    explicit Runner(const Options& o) : opt_(o) {}

    void emit(const Json& j, const std::string& csv)
    {
        out_ << (opt_.csv ? csv : j.dump(2) + "\n");
    }

    std::string text() const { return out_.str(); }

    void witt(int n, int k)
    {
        cap("k", k);
        std::int64_t d = witt_dimension(n, k);
        emit(Json(d), csv_line({"n", "k", "dim"}) + csv_line({std::to_string(n), std::to_string(k), std::to_string(d)}));
    }

    void dk_rank_cmd(int n, int k)
    {
        cap("k", k);
        std::int64_t r = dk_rank(n, k), s = dk_rank_smith(n, k);
        emit(Json{{"n", n}, {"k", k}, {"dk_rank", r}, {"dk_rank_smith", s}},
             csv_line({"n", "k", "dk_rank", "dk_rank_smith"}) +
                 csv_line({std::to_string(n), std::to_string(k), std::to_string(r), std::to_string(s)}));
    }

    void dk_basis_cmd(int n, int k)
    {
        cap("k", k);
        Json arr = Json::array();
        std::string csv = csv_line({"index", "coords"});
        auto basis = dk_basis(n, k);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            arr.push_back(to_json(basis[i]));
            csv += csv_line({std::to_string(i), csv_integers(basis[i].coords())});
        }
        emit(arr, csv);
    }

    void dk_table(int nmax, int kmax)
    {
        cap("k", kmax);
        Json arr = Json::array();
        std::string csv = csv_line({"n", "k", "dim_H_tensor_L", "dim_L", "dk_rank"});
        for (int n = 1; n <= nmax; ++n)
            for (int k = 1; k <= kmax; ++k) {
                std::int64_t a = n * witt_dimension(n, k + 1), b = witt_dimension(n, k + 2), r = dk_rank(n, k);
                arr.push_back(Json{{"n", n}, {"k", k}, {"dim_H_tensor_L", a}, {"dim_L", b}, {"dk_rank", r}});
                csv += csv_line({std::to_string(n), std::to_string(k), std::to_string(a), std::to_string(b),
                                 std::to_string(r)});
            }
        emit(arr, csv);
    }

    void a1(int g)
    {
        auto [f, z] = a1_dimensions(g);
        emit(Json{{"g", g}, {"free_rank", f}, {"z2_dim", z}},
             csv_line({"g", "free_rank", "z2_dim"}) + csv_line({std::to_string(g), std::to_string(f), std::to_string(z)}));
    }

    void tree_image(const std::string& path)
    {
        ClasperGraph t = graph_from_json(read_json_file(path));
        GraphSummary s = validate(t);
        TensorElement v = tree_to_dk(t);
        emit(Json{{"degree", s.degree}, {"value", to_json(v)}},
             csv_line({"degree", "coords"}) + csv_line({std::to_string(s.degree), csv_integers(v.coords())}));
    }

    void tree_span(int n, int k)
    {
        SpanReport r = span_check(n, k);
        emit(Json{{"n", n}, {"k", k}, {"spanned_rank", r.spanned_rank}, {"dk_rank", r.dk_rank}, {"trees", r.trees}},
             csv_line({"n", "k", "spanned_rank", "dk_rank", "trees"}) +
                 csv_line({std::to_string(n), std::to_string(k), std::to_string(r.spanned_rank),
                           std::to_string(r.dk_rank), std::to_string(r.trees)}));
    }

    NilAut load_aut(const std::string& path)
    {
        NilAut h = aut_from_json(read_json_file(path));
        cap("q", h.level());
        return h;
    }

    void emit_aut(const NilAut& h)
    {
        std::string csv = csv_line({"generator", "image"});
        for (int gen = 0; gen < h.alphabet().size(); ++gen)
            csv += csv_line({h.alphabet().name(gen), h.image(gen).str()});
        emit(to_json(h), csv);
    }

    void emit_tuple(const LongitudeTuple& t)
    {
        std::string csv = csv_line({"index", "entry"});
        for (std::size_t i = 0; i < t.entries.size(); ++i)
            csv += csv_line({std::to_string(i + 1), t.entries[i].str()});
        emit(to_json(t), csv);
    }

    void aut_compose(const std::vector<std::string>& paths)
    {
        if (paths.empty())
            throw ValidationError("aut compose: need at least one automorphism");
        NilAut h = load_aut(paths.front());
        for (std::size_t i = 1; i < paths.size(); ++i)
            h = compose(h, load_aut(paths[i]));
        emit_aut(h);
    }

    void aut_invert(const std::string& path) { emit_aut(invert_aut(load_aut(path))); }

    void aut_check(const std::string& path)
    {
        NilAut h = load_aut(path);
        bool a = check_aut0(h);
        bool s = symplectic_check(symplectic_matrix(h));
        emit(Json{{"aut0", a}, {"symplectic", s}},
             csv_line({"aut0", "symplectic"}) + csv_line({bool_str(a), bool_str(s)}));
    }

    void aut_johnson(const std::string& path)
    {
        NilAut h = load_aut(path);
        cap("k", opt_.k);
        TensorElement t = johnson_element(h, opt_.k);
        emit(Json{{"k", opt_.k}, {"value", to_json(t, generator_names(h.alphabet()))}},
             csv_line({"k", "coords"}) + csv_line({std::to_string(opt_.k), csv_integers(t.coords())}));
    }

    void aut_degree(const std::string& path)
    {
        NilAut h = load_aut(path);
        int f = filtration_degree(h);
        int l = lagrangian_degree(h);
        emit(Json{{"filtration_degree", f}, {"lagrangian_degree", l}, {"q", h.level()}},
             csv_line({"q", "filtration_degree", "lagrangian_degree"}) +
                 csv_line({std::to_string(h.level()), std::to_string(f), std::to_string(l)}));
    }

    LongitudeTuple load_tuple(const std::string& path)
    {
        LongitudeTuple t = tuple_from_json(read_json_file(path));
        cap("q", t.level);
        return t;
    }

    void stringlink_map(const std::string& path, bool phi)
    {
        LongitudeTuple t = load_tuple(path);
        const int q = opt_.level > 0 ? opt_.level : t.level;
        emit_aut(phi ? phi_hat(t, q) : psi_hat(t, q));
    }

    void stringlink_compose(const std::string& a, const std::string& b)
    {
        emit_tuple(milnor_compose(load_tuple(a), load_tuple(b)));
    }

    void stringlink_extract(const std::string& path)
    {
        NilAut h = load_aut(path);
        emit_tuple(extract_longitudes(h, opt_.k));
    }

    void lagrangian_jl(const std::string& path)
    {
        NilAut h = load_aut(path);
        cap("k", opt_.k);
        LagrangianReport r = jl_element(h, opt_.k);
        Alphabet ya(h.genus(), AlphabetKind::yOnly);
        emit(Json{{"g", r.g}, {"k", r.k}, {"in_hat", r.in_hat}, {"value", to_json(r.value, generator_names(ya))}},
             csv_line({"g", "k", "in_hat", "coords"}) +
                 csv_line({std::to_string(r.g), std::to_string(r.k), bool_str(r.in_hat), csv_integers(r.value.coords())}));
    }

    void lagrangian_degree_cmd(const std::string& path)
    {
        NilAut h = load_aut(path);
        int l = lagrangian_degree(h);
        emit(Json{{"lagrangian_degree", l}, {"q", h.level()}},
             csv_line({"q", "lagrangian_degree"}) + csv_line({std::to_string(h.level()), std::to_string(l)}));
    }

    void lagrangian_cocycle(const std::string& a, const std::string& b)
    {
        cap("k", opt_.k);
        bool ok = cocycle_check(load_aut(a), load_aut(b), opt_.k);
        emit(Json{{"k", opt_.k}, {"cocycle", ok}}, csv_line({"k", "cocycle"}) + csv_line({std::to_string(opt_.k), bool_str(ok)}));
    }

    void gap_table_cmd()
    {
        cap("k", opt_.kmax);
        Json arr = Json::array();
        std::string csv = csv_line({"g", "k", "dk_rank", "r", "gap", "closed_form_gap", "match"});
        for (const GapRow& r : gap_table(opt_.gmax, opt_.kmax, opt_.smith)) {
            Json row{{"g", r.g}, {"k", r.k}, {"dk_rank", r.dk}, {"r", r.r}, {"gap", r.gap}, {"match", r.match}};
            row["closed_form_gap"] = r.closed_form ? Json(*r.closed_form) : Json(nullptr);
            if (opt_.smith)
                row["dk_rank_smith"] = r.dk_smith;
            arr.push_back(row);
            csv += csv_line({std::to_string(r.g), std::to_string(r.k), std::to_string(r.dk), std::to_string(r.r),
                             std::to_string(r.gap), r.closed_form ? std::to_string(*r.closed_form) : "",
                             bool_str(r.match)});
        }
        emit(arr, csv);
    }

    void graph_orient(const std::string& path)
    {
        ClasperGraph g = graph_from_json(read_json_file(path));
        auto o = orient(g);
        if (!o)
            throw ValidationError("tree: not orientable");
        Json j = orientation_to_json(g, *o);
        std::string csv = csv_line({"edge", "direction"});
        for (const auto& [e, d] : j.items())
            csv += csv_line({e, d.get<std::string>()});
        emit(Json{{"orientation", j}, {"dot", to_dot(g, *o)}}, csv);
    }

    void graph_count(const std::string& path)
    {
        ClasperGraph g = graph_from_json(read_json_file(path));
        std::int64_t c = count_valid_orientations(g);
        emit(Json{{"count", c}}, csv_line({"count"}) + csv_line({std::to_string(c)}));
    }

private:
    const Options& opt_;
    std::ostringstream out_;
};

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"jfilt: free nilpotent groups, bracket kernels, Johnson and Lagrangian filtrations"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--csv", opt.csv, "CSV output instead of JSON");
    app.add_option("--seed", opt.seed, "Random seed");
    app.add_option("--level", opt.level, "Nilpotency level q");
    app.add_option("--k", opt.k, "Filtration degree k");
    app.add_option("--gmax", opt.gmax, "Largest genus / rank for tables");
    app.add_option("--kmax", opt.kmax, "Largest degree for tables");
    app.add_flag("--smith", opt.smith, "Also compute kernel ranks by Smith normal form");
    app.add_option("--out", opt.out, "Write output to a file");
    app.fallthrough();

    Runner run(opt);
    std::function<void()> action;
    int n = 0, k = 0, g = 0;
    std::string file, file2;
    std::vector<std::string> files;

    auto* witt = app.add_subcommand("witt", "Witt dimension of L_k on n generators");
    witt->add_option("n", n)->required();
    witt->add_option("k", k)->required();
    witt->callback([&] { action = [&] { run.witt(n, k); }; });

    auto* dk = app.add_subcommand("dk", "Bracket kernel D_k");
    dk->require_subcommand(1);
    auto* dk_rank_cmd = dk->add_subcommand("rank", "Rank of D_k by Witt formula and Smith form");
    dk_rank_cmd->add_option("n", n)->required();
    dk_rank_cmd->add_option("k", k)->required();
    dk_rank_cmd->callback([&] { action = [&] { run.dk_rank_cmd(n, k); }; });
    auto* dk_basis_cmd = dk->add_subcommand("basis", "Integer kernel basis");
    dk_basis_cmd->add_option("n", n)->required();
    dk_basis_cmd->add_option("k", k)->required();
    dk_basis_cmd->callback([&] { action = [&] { run.dk_basis_cmd(n, k); }; });
    auto* dk_table = dk->add_subcommand("table", "Rank table for n <= --gmax, k <= --kmax");
    dk_table->callback([&] { action = [&] { run.dk_table(opt.gmax, opt.kmax); }; });

    auto* a1 = app.add_subcommand("a1", "Dimensions of A_1(H) for H of rank 2g");
    a1->add_option("g", g)->required();
    a1->callback([&] { action = [&] { run.a1(g); }; });

    auto* tree = app.add_subcommand("tree", "Labelled trees");
    tree->require_subcommand(1);
    auto* tree_image = tree->add_subcommand("image", "tree_to_dk of a tree graph");
    tree_image->add_option("graph", file)->required();
    tree_image->callback([&] { action = [&] { run.tree_image(file); }; });
    auto* tree_span = tree->add_subcommand("span", "Rank of the span of tree images vs dk_rank");
    tree_span->add_option("n", n)->required();
    tree_span->add_option("k", k)->required();
    tree_span->callback([&] { action = [&] { run.tree_span(n, k); }; });

    auto* aut = app.add_subcommand("aut", "Automorphisms of F/F_q");
    aut->require_subcommand(1);
    auto* aut_compose = aut->add_subcommand("compose", "Compose automorphisms left to right as h1 o h2 o ...");
    aut_compose->add_option("auts", files)->required();
    aut_compose->callback([&] { action = [&] { run.aut_compose(files); }; });
    auto* aut_invert = aut->add_subcommand("invert", "Inverse automorphism");
    aut_invert->add_option("aut", file)->required();
    aut_invert->callback([&] { action = [&] { run.aut_invert(file); }; });
    auto* aut_check = aut->add_subcommand("check-aut0", "Boundary and symplectic conditions");
    aut_check->add_option("aut", file)->required();
    aut_check->callback([&] { action = [&] { run.aut_check(file); }; });
    auto* aut_johnson = aut->add_subcommand("johnson", "Johnson element at degree --k");
    aut_johnson->add_option("aut", file)->required();
    aut_johnson->callback([&] { action = [&] { run.aut_johnson(file); }; });
    auto* aut_degree = aut->add_subcommand("degree", "Filtration and Lagrangian degrees");
    aut_degree->add_option("aut", file)->required();
    aut_degree->callback([&] { action = [&] { run.aut_degree(file); }; });

    auto* sl = app.add_subcommand("stringlink", "Longitude tuples");
    sl->require_subcommand(1);
    auto* sl_phi = sl->add_subcommand("phi", "phi_hat of a y-tuple (level --level or the tuple's)");
    sl_phi->add_option("tuple", file)->required();
    sl_phi->callback([&] { action = [&] { run.stringlink_map(file, true); }; });
    auto* sl_psi = sl->add_subcommand("psi", "psi_hat of an x-tuple");
    sl_psi->add_option("tuple", file)->required();
    sl_psi->callback([&] { action = [&] { run.stringlink_map(file, false); }; });
    auto* sl_compose = sl->add_subcommand("compose", "Tuple product (lm)_i = l_i phi_l(m_i)");
    sl_compose->add_option("first", file)->required();
    sl_compose->add_option("second", file2)->required();
    sl_compose->callback([&] { action = [&] { run.stringlink_compose(file, file2); }; });
    auto* sl_extract = sl->add_subcommand("extract", "Longitudes p h(x_i) of an automorphism, mod level --k + 1");
    sl_extract->add_option("aut", file)->required();
    sl_extract->callback([&] { action = [&] { run.stringlink_extract(file); }; });

    auto* lag = app.add_subcommand("lagrangian", "Lagrangian filtration");
    lag->require_subcommand(1);
    auto* lag_jl = lag->add_subcommand("jl", "J^L at degree --k");
    lag_jl->add_option("aut", file)->required();
    lag_jl->callback([&] { action = [&] { run.lagrangian_jl(file); }; });
    auto* lag_degree = lag->add_subcommand("degree", "Lagrangian filtration degree");
    lag_degree->add_option("aut", file)->required();
    lag_degree->callback([&] { action = [&] { run.lagrangian_degree_cmd(file); }; });
    auto* lag_cocycle = lag->add_subcommand("cocycle", "Crossed-homomorphism law at degree --k");
    lag_cocycle->add_option("first", file)->required();
    lag_cocycle->add_option("second", file2)->required();
    lag_cocycle->callback([&] { action = [&] { run.lagrangian_cocycle(file, file2); }; });
    auto* lag_gap = lag->add_subcommand("gap-table", "dk_rank - r(g,k) for g <= --gmax, k <= --kmax");
    lag_gap->callback([&] { action = [&] { run.gap_table_cmd(); }; });

    auto* graph = app.add_subcommand("graph", "Unitrivalent graphs");
    graph->require_subcommand(1);
    auto* graph_orient = graph->add_subcommand("orient", "Source-free orientation with outward leaves");
    graph_orient->add_option("graph", file)->required();
    graph_orient->callback([&] { action = [&] { run.graph_orient(file); }; });
    auto* graph_count = graph->add_subcommand("count", "Number of valid orientations (brute force)");
    graph_count->add_option("graph", file)->required();
    graph_count->callback([&] { action = [&] { run.graph_count(file); }; });

    bool selftest = false;
    auto* st = app.add_subcommand("selftest", "Run the acceptance suite");
    st->callback([&] { selftest = true; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (selftest) {
            auto results = run_acceptance(opt.seed, std::cout);
            bool all = true;
            for (const auto& r : results)
                all = all && r.passed;
            return all ? 0 : 1;
        }
        action();
        if (opt.out.empty()) {
            std::cout << run.text();
        } else {
            std::ofstream f(opt.out);
            if (!f)
                throw ValidationError("cannot write " + opt.out);
            f << run.text();
        }
        return 0;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition failed: " << e.what() << "\n";
        return 3;
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: json: " << e.what() << "\n";
        return 2;
    }
}

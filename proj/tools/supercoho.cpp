// supercoho: command-line front end to the supercoho library.
//
// Exit status: 0 success, 1 computational error (cap exceeded, undetermined
// projectivity, failed verification), 2 usage error (bad flags, malformed
// references, module expressions or weights).

#include "supercoho/cohomology.hpp"
#include "supercoho/io.hpp"
#include "supercoho/varieties.hpp"
#include "supercoho/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace {

using namespace supercoho;

// Flat view of a report for CSV output. Columns flagged `exact` hold
// rational strings and get a decimal companion column.
struct Table {
    std::vector<std::string> header;
    std::vector<bool> exact;
    std::vector<std::vector<std::string>> rows;

    void column(std::string name, bool is_exact = false) {
        header.push_back(std::move(name));
        exact.push_back(is_exact);
    }
};

struct Report {
    Json json;
    Table table;
};

struct Config {
    int max_degree = 4;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string out;
    int parallelism = 1;
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

// Decimal rendering of a cell holding one rational or a ';'-joined list of them.
std::string approx(const std::string& cell) {
    std::ostringstream os;
    os << std::setprecision(12);
    std::stringstream in(cell);
    std::string tok;
    bool first = true;
    while (std::getline(in, tok, ';')) {
        if (!first) os << ';';
        first = false;
        try {
            os << Rat::parse(tok).to_double();
        } catch (const std::exception&) {
            os << tok;
        }
    }
    return os.str();
}

std::string render_csv(const Table& t) {
    std::ostringstream os;
    os << "# exact values are rational strings; *_approx columns are decimal approximations and are not exact\n";
    std::vector<std::string> head;
    for (std::size_t c = 0; c < t.header.size(); ++c) {
        head.push_back(t.header[c]);
        if (t.exact[c]) head.push_back(t.header[c] + "_approx");
    }
    for (std::size_t c = 0; c < head.size(); ++c) os << (c ? "," : "") << csv_cell(head[c]);
    os << '\n';
    for (const auto& row : t.rows) {
        std::vector<std::string> cells;
        for (std::size_t c = 0; c < row.size(); ++c) {
            cells.push_back(row[c]);
            if (t.exact[c]) cells.push_back(approx(row[c]));
        }
        for (std::size_t c = 0; c < cells.size(); ++c) os << (c ? "," : "") << csv_cell(cells[c]);
        os << '\n';
    }
    return os.str();
}

void emit(const Report& r, const Config& cfg) {
    std::string text = cfg.format == "csv" ? render_csv(r.table) : r.json.dump(2) + "\n";
    if (cfg.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + cfg.out);
    f << text;
}

std::string join(const std::vector<Rat>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + v[i].str();
    return s;
}

Json rats(const std::vector<Rat>& v) {
    Json j = Json::array();
    for (const auto& r : v) j.push_back(r.str());
    return j;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// --- input resolution ------------------------------------------------------

struct Context {
    AlgebraPtr g;
    std::optional<Supermodule> m;
};

bool is_plain_file_ref(const std::string& expr) {
    return !expr.empty() && expr[0] == '@' && expr.find_first_of("+*") == std::string::npos;
}

Context load(const std::string& algebra_ref, std::string module_expr) {
    // A bare path to an existing file is read as @path.
    if (!module_expr.empty() && module_expr[0] != '@' && std::filesystem::is_regular_file(module_expr))
        module_expr = "@" + module_expr;
    Context c;
    if (algebra_ref.empty()) {
        if (!is_plain_file_ref(module_expr)) throw ParseError("--algebra is required unless --module names a JSON file");
        c.m = module_from_json(read_json_file(module_expr.substr(1)));
        c.g = c.m->algebra();
        return c;
    }
    c.g = parse_algebra_ref(algebra_ref);
    if (!module_expr.empty()) c.m = parse_module_expr(module_expr, c.g);
    return c;
}

Subalgebra even_part_of(const Subalgebra& h) { return Subalgebra::from_basis_indices(h.own(), h.even_indices()); }

Subalgebra whole(const AlgebraPtr& g) {
    std::vector<std::size_t> all(g->dim());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return Subalgebra::from_basis_indices(g, all, "g");
}

const char* kSubalgebraNames = "g, g0, gplus, gminus, f, fbar, e, fW";

Subalgebra subalgebra_by_name(const AlgebraPtr& g, const std::string& name) {
    if (name == "g") return whole(g);
    if (name == "g0") return even_subalgebra(g);
    if (name == "gplus") return graded_subalgebra(g, {0, 1}, "g+");
    if (name == "gminus") return graded_subalgebra(g, {-1, 0}, "g-");
    if (name == "f") return detecting_f(g);
    if (name == "fbar") return detecting_fbar(g);
    if (name == "e") return detecting_e(g).subalgebra;
    if (name == "fW") return detecting_f_W(g);
    throw ParseError("unknown subalgebra '" + name + "' (expected one of " + kSubalgebraNames + ")");
}

Json check_json(const CheckReport& r) { return {{"ok", r.ok}, {"checked", r.checked}, {"failure", r.failure}}; }

// --- commands --------------------------------------------------------------

Report cmd_algebra(const std::string& ref, const std::string& sub, const Config& cfg) {
    auto g = parse_algebra_ref(ref);
    Report r;
    AlgebraPtr target = g;
    if (!sub.empty() && sub != "g") {
        auto h = subalgebra_by_name(g, sub);
        target = h.own();
        r.json["inclusion"] = to_json(h.inclusion());
        r.json["subalgebra"] = sub;
    }
    r.json["algebra"] = algebra_to_json(*target);
    r.json["dim"] = target->dim();
    r.json["evenDim"] = target->space().even_dim();
    r.json["oddDim"] = target->space().odd_dim();
    r.json["checks"] = {{"superSkew", check_json(check_super_skew(*target))},
                        {"parity", check_json(check_parity(*target))},
                        {"jacobi", check_json(check_jacobi(*target, 64 * 64 * 64, 20000, cfg.seed))}};
    if (target->space().z_graded()) r.json["checks"]["zGrading"] = check_json(check_z_grading(*target));

    r.table.column("index");
    r.table.column("label");
    r.table.column("parity");
    r.table.column("zdegree");
    for (std::size_t i = 0; i < target->dim(); ++i) {
        const auto& b = target->space()[i];
        r.table.rows.push_back({std::to_string(i), b.label, b.parity == Parity::Odd ? "odd" : "even",
                                b.zdegree ? std::to_string(*b.zdegree) : ""});
    }
    return r;
}

Report cmd_module_build(const std::string& ref, const std::string& kind, const std::string& weight,
                        const std::string& expr) {
    std::string e = expr;
    if (e.empty()) {
        if (kind.empty()) throw ParseError("module build needs --kind or --expr");
        e = weight.empty() ? kind : kind + ":" + weight;
    }
    auto c = load(ref, e);
    Report r;
    r.json = module_to_json(*c.m);
    r.table.column("index");
    r.table.column("label");
    r.table.column("parity");
    r.table.column("weight", true);
    const auto& w = c.m->weights();
    for (std::size_t i = 0; i < c.m->dim(); ++i) {
        const auto& b = c.m->space()[i];
        r.table.rows.push_back({std::to_string(i), b.label, b.parity == Parity::Odd ? "odd" : "even",
                                w ? join((*w)[i].coords) : ""});
    }
    return r;
}

Report cmd_cohomology(const std::string& ref, const std::string& module, const std::string& pair,
                      const std::string& on, const Config& cfg) {
    auto c = load(ref, module);
    if (!c.m) throw ParseError("--module is required");
    AlgebraPtr algebra = c.g;
    Supermodule m = *c.m;
    std::optional<Subalgebra> h;
    if (on != "g") {
        h = subalgebra_by_name(c.g, on);
        m = restrict_module(m, *h);
        algebra = h->own();
    }
    std::optional<Subalgebra> a;
    if (pair == "g0") a = h ? even_part_of(*h) : even_subalgebra(c.g);
    else if (pair != "none") throw ParseError("--pair must be g0 or none");

    auto cx = build_relative_complex(algebra, a, m, cfg.max_degree + 1);
    auto coh = cohomology(cx);
    auto cdims = cx.dims();
    cdims.resize(coh.dims.size());

    Report r;
    r.json = {{"algebra", ref.empty() ? c.g->name() : ref},
              {"module", module},
              {"pair", pair},
              {"on", on},
              {"maxDegree", cfg.max_degree},
              {"dims", coh.dims},
              {"complexDims", cdims}};
    r.table.column("degree");
    r.table.column("dim");
    r.table.column("complexDim");
    for (std::size_t p = 0; p < coh.dims.size(); ++p)
        r.table.rows.push_back({std::to_string(p), std::to_string(coh.dims[p]), std::to_string(cdims[p])});
    return r;
}

Report cmd_restriction(const std::string& ref, const std::string& module, const std::string& sub, const Config& cfg) {
    auto c = load(ref, module);
    if (!c.m) throw ParseError("--module is required");
    auto h = subalgebra_by_name(c.g, sub);
    auto res = restriction(even_subalgebra(c.g), h, even_part_of(h), *c.m, cfg.max_degree + 1);

    Json witnesses = Json::array();
    for (const auto& w : res.kernel_witness) witnesses.push_back(w ? to_json(*w) : Json(nullptr));
    std::vector<std::size_t> failing;
    for (std::size_t p = 1; p < res.injective.size(); ++p)
        if (!res.injective[p]) failing.push_back(p);

    Report r;
    r.json = {{"algebra", ref.empty() ? c.g->name() : ref},
              {"module", module},
              {"subalgebra", sub},
              {"maxDegree", cfg.max_degree},
              {"dimsG", res.dims_g},
              {"dimsH", res.dims_h},
              {"injective", res.injective},
              {"nonInjectiveDegrees", failing},
              {"chainMapOk", res.chain_map_ok},
              {"kernelWitness", witnesses}};
    r.table.column("degree");
    r.table.column("dimG");
    r.table.column("dimH");
    r.table.column("injective");
    for (std::size_t p = 0; p < res.injective.size(); ++p)
        r.table.rows.push_back({std::to_string(p), std::to_string(res.dims_g[p]), std::to_string(res.dims_h[p]),
                                yes_no(res.injective[p])});
    return r;
}

Report cmd_invariants(const std::string& ref, const std::string& source, const Config& cfg) {
    auto g = parse_algebra_ref(ref);
    std::vector<std::size_t> dims;
    std::size_t dim = 0, group_order = 1;
    std::string acting;
    if (source == "odd") {
        std::vector<SparseVec> odd, even;
        for (auto i : even_subalgebra(g).inclusion().columns()) even.push_back(i);
        for (auto i : g->indices_of_parity(Parity::Odd)) odd.push_back(SparseVec::unit(i));
        dim = odd.size();
        dims = invariant_ring_dims(dim, adjoint_action(*g, even, odd), nullptr, cfg.max_degree);
        acting = "g0 (Lie)";
    } else if (source == "e") {
        auto [e, weyl] = detecting_e(g);
        dim = e.odd_indices().size();
        group_order = weyl.order();
        dims = invariant_ring_dims(dim, {}, &weyl, cfg.max_degree);
        acting = "signed permutations";
    } else if (source == "f" || source == "fbar" || source == "fW") {
        auto h = subalgebra_by_name(g, source);
        std::vector<SparseVec> torus;
        for (auto i : h.even_indices()) torus.push_back(h.embed(SparseVec::unit(i)));
        auto lie = adjoint_action(*g, torus, h.odd_vectors());
        dim = h.odd_indices().size();
        if (source == "fW") {
            auto group = witt_normalizer_group(h);
            group_order = group.order();
            dims = invariant_ring_dims(dim, lie, &group, cfg.max_degree);
            acting = "torus (Lie) and permutations of indices 2..n";
        } else {
            dims = invariant_ring_dims(dim, lie, nullptr, cfg.max_degree);
            acting = "torus (Lie)";
        }
    } else {
        throw ParseError("--source must be odd, e, f, fbar or fW");
    }
    Report r;
    r.json = {{"algebra", ref},   {"source", source},          {"dim", dim}, {"acting", acting},
              {"groupOrder", group_order}, {"maxDegree", cfg.max_degree}, {"dims", dims}};
    r.table.column("degree");
    r.table.column("dim");
    for (std::size_t d = 0; d < dims.size(); ++d) r.table.rows.push_back({std::to_string(d), std::to_string(dims[d])});
    return r;
}

Report cmd_rank_variety(const std::string& ref, const std::string& module, const std::string& sub,
                        std::string points_spec, const Config& cfg) {
    auto c = load(ref, module);
    if (!c.m) throw ParseError("--module is required");
    auto h = subalgebra_by_name(c.g, sub);
    if (points_spec == "random") points_spec = "random:" + std::to_string(cfg.seed) + ":8";
    auto points = probe_points(h.odd_indices().size(), points_spec);
    auto probe = rank_variety_probe(*c.m, h, points);

    Report r;
    Json pts = Json::array();
    std::size_t members = 0;
    r.table.column("index");
    r.table.column("point", true);
    r.table.column("member");
    r.table.column("method");
    for (std::size_t i = 0; i < probe.reports.size(); ++i) {
        const auto& rep = probe.reports[i];
        members += probe.members[i] ? 1 : 0;
        pts.push_back({{"point", rats(rep.point.coords)},
                       {"member", static_cast<bool>(probe.members[i])},
                       {"projective", rep.projective},
                       {"method", to_string(rep.method)},
                       {"selfBracket", to_json(rep.self_bracket)}});
        r.table.rows.push_back(
            {std::to_string(i), join(rep.point.coords), yes_no(probe.members[i]), to_string(rep.method)});
    }
    r.json = {{"algebra", ref.empty() ? c.g->name() : ref},
              {"module", module},
              {"subalgebra", sub},
              {"pointSet", points_spec},
              {"originMember", probe.origin_member},
              {"memberCount", members},
              {"points", pts}};
    return r;
}

Report cmd_support(const std::string& ref, const std::string& module, std::size_t count, const Config& cfg) {
    auto c = load(ref, module);
    if (!c.m) throw ParseError("--module is required");
    auto s = support_variety(*c.m, cfg.seed, count);

    Report r;
    Json samples = Json::array();
    r.table.column("index");
    r.table.column("point", true);
    r.table.column("invariants", true);
    r.table.column("member");
    for (std::size_t i = 0; i < s.samples.size(); ++i) {
        const auto& x = s.samples[i];
        samples.push_back(
            {{"point", rats(x.point.coords)}, {"invariants", rats(x.invariant_coords)}, {"member", x.member}});
        r.table.rows.push_back(
            {std::to_string(i), join(x.point.coords), join(x.invariant_coords), yes_no(x.member)});
    }
    std::vector<bool> axes = s.axes_profile;
    r.json = {{"algebra", ref.empty() ? c.g->name() : ref},
              {"module", module},
              {"ambientDim", s.ambient_dim},
              {"orbitConstant", s.orbit_constant},
              {"axesProfile", axes},
              {"memberCount", s.members().size()},
              {"samples", samples}};
    return r;
}

Report cmd_atypicality(int m, int n, const std::string& weight) {
    auto rep = atypicality(Weight::parse(weight), m, n);
    Json edges = Json::array();
    for (auto [i, j] : rep.edges) edges.push_back({i, j});
    Report r;
    r.json = {{"m", m},
              {"n", n},
              {"lambda", to_json(rep.lambda)},
              {"rho", to_json(rep.rho)},
              {"edges", edges},
              {"atypicality", rep.atypicality}};
    r.table.column("i");
    r.table.column("j");
    for (auto [i, j] : rep.edges) r.table.rows.push_back({std::to_string(i), std::to_string(j)});
    return r;
}

Report cmd_verify(const std::string& suite, bool& passed) {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
        std::string all;
        for (const auto& s : names) all += (all.empty() ? "" : ", ") + s;
        throw ParseError("unknown suite '" + suite + "' (registered: " + all + ")");
    }
    auto results = run_suite(suite);
    Report r;
    r.json = suite_report(suite, results);
    passed = r.json.at("pass").get<bool>();
    r.table.column("id");
    r.table.column("name");
    r.table.column("pass");
    for (const auto& c : results) r.table.rows.push_back({std::to_string(c.id), c.name, yes_no(c.pass)});
    return r;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact relative cohomology, rank and support varieties for Lie superalgebras"};
    app.require_subcommand(1);
    app.fallthrough();

    Config cfg;
    app.add_option("--max-degree", cfg.max_degree, "Highest cohomology / invariant degree")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed for sampled checks and random probe points")->capture_default_str();
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "Write the report to this file instead of stdout");
    app.add_option("--parallelism", cfg.parallelism, "Worker count (computations currently run on one thread)")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    // Each subcommand owns its option storage: default values are assigned
    // at registration and must not leak between subcommands.
    struct ModuleOpts {
        std::string algebra, module, subalgebra, pair = "g0", on = "g", points = "axes";
        std::size_t count = 8;
    };
    std::string alg_ref, alg_sub;
    std::string build_ref = "gl:1,1", kind, weight, expr;
    ModuleOpts coh, res, rank, sup;
    res.subalgebra = "f";
    rank.subalgebra = "fbar";
    std::string inv_ref, source = "odd";
    int am = 1, an = 1;
    std::string aty_weight, suite;

    auto* c_alg = app.add_subcommand("algebra", "Describe a built-in or JSON algebra and run its identity checks");
    c_alg->add_option("--algebra", alg_ref, "gl:m,n | w:n | s:n | @file.json")->required();
    c_alg->add_option("--subalgebra", alg_sub, std::string("Describe a subalgebra instead: ") + kSubalgebraNames);

    auto* c_mod = app.add_subcommand("module", "Module utilities");
    c_mod->require_subcommand(1);
    auto* c_build = c_mod->add_subcommand("build", "Build a module and print it as JSON");
    c_build->add_option("--algebra", build_ref, "Algebra reference")->capture_default_str();
    c_build->add_option("--kind", kind, "trivial | natural | dual | adjoint | kac | dualkac | one");
    c_build->add_option("--weight", weight, "Weight for kac, dualkac and one, e.g. \"-1,1\"");
    c_build->add_option("--expr", expr, "Module expression, e.g. \"natural*dual+kac:0,0\"")->excludes("--kind");

    auto module_flags = [](CLI::App* c, ModuleOpts& o) {
        c->add_option("--algebra", o.algebra, "Algebra reference (optional when --module is a JSON file)");
        c->add_option("--module", o.module, "Module expression or JSON file")->required();
    };

    auto* c_coh = app.add_subcommand("cohomology", "Dimensions of H^p(h, a; M) for p = 0..max-degree");
    module_flags(c_coh, coh);
    c_coh->add_option("--pair", coh.pair, "Relative to the even part (g0) or absolute (none)")
        ->check(CLI::IsMember({"g0", "none"}))
        ->capture_default_str();
    c_coh->add_option("--on", coh.on, std::string("Restrict to a subalgebra first: ") + kSubalgebraNames)
        ->capture_default_str();

    auto* c_res = app.add_subcommand("restriction-check", "Injectivity of H(g, g0; M) -> H(h, h0; M)");
    module_flags(c_res, res);
    c_res->add_option("--subalgebra", res.subalgebra, "f | fbar | e | fW")->capture_default_str();

    auto* c_inv = app.add_subcommand("invariants", "Graded dimensions of invariant polynomials on an odd space");
    c_inv->add_option("--algebra", inv_ref, "Algebra reference")->required();
    c_inv->add_option("--source", source, "odd (S(g1*)^g0) | e | f | fbar | fW")->capture_default_str();

    auto* c_rank = app.add_subcommand("rank-variety", "Rank-variety membership at probe points");
    module_flags(c_rank, rank);
    c_rank->add_option("--subalgebra", rank.subalgebra, "fbar | e | f | fW")->capture_default_str();
    c_rank->add_option("--points", rank.points, "axes | grid | random | random:<seed>:<count>")->capture_default_str();

    auto* c_sup = app.add_subcommand("support", "Support variety over gl(r|r) through e modulo its Weyl group");
    module_flags(c_sup, sup);
    c_sup->add_option("--count", sup.count, "Number of random samples")->capture_default_str();

    auto* c_aty = app.add_subcommand("atypicality", "Atypicality of a weight of gl(m|n)");
    c_aty->add_option("--m", am, "Even rank m")->required()->check(CLI::NonNegativeNumber);
    c_aty->add_option("--n", an, "Odd rank n")->required()->check(CLI::NonNegativeNumber);
    c_aty->add_option("--weight", aty_weight, "m+n coordinates, e.g. \"0,0|0,0\"")->required();

    auto* c_ver = app.add_subcommand("verify", "Run a bundled verification suite");
    std::string suite_help = "Suite name:";
    for (const auto& s : supercoho::suite_names()) suite_help += " " + s;
    c_ver->add_option("--suite", suite, suite_help)->required();

    CLI::App* failing = &app;
    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        for (auto* sub = &app; sub;) {
            failing = sub;
            auto subs = sub->get_subcommands();
            sub = subs.empty() ? nullptr : subs.front();
        }
        std::cout << failing->help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        for (auto* sub = &app; sub;) {
            failing = sub;
            auto subs = sub->get_subcommands();
            sub = subs.empty() ? nullptr : subs.front();
        }
        std::cerr << "error: " << e.what() << "\n\n" << failing->help();
        return 2;
    }

    try {
        Report report;
        bool passed = true;
        if (c_alg->parsed()) report = cmd_algebra(alg_ref, alg_sub, cfg);
        else if (c_build->parsed()) report = cmd_module_build(build_ref, kind, weight, expr);
        else if (c_coh->parsed()) report = cmd_cohomology(coh.algebra, coh.module, coh.pair, coh.on, cfg);
        else if (c_res->parsed()) report = cmd_restriction(res.algebra, res.module, res.subalgebra, cfg);
        else if (c_inv->parsed()) report = cmd_invariants(inv_ref, source, cfg);
        else if (c_rank->parsed()) report = cmd_rank_variety(rank.algebra, rank.module, rank.subalgebra, rank.points, cfg);
        else if (c_sup->parsed()) report = cmd_support(sup.algebra, sup.module, sup.count, cfg);
        else if (c_aty->parsed()) report = cmd_atypicality(am, an, aty_weight);
        else if (c_ver->parsed()) report = cmd_verify(suite, passed);
        emit(report, cfg);
        return passed ? 0 : 1;
    } catch (const std::invalid_argument& e) {
        // Malformed references, expressions, weights, or unsupported shapes.
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

#include "supercoho/io.hpp"

#include <fstream>
#include <sstream>

namespace supercoho {

Json to_json(const Rat& r) { return r.str(); }

Rat rat_from_json(const Json& j) {
    if (j.is_string()) {
        try {
            return Rat::parse(j.get<std::string>());
        } catch (const std::exception& e) {
            throw ParseError("bad rational '" + j.get<std::string>() + "': " + e.what());
        }
    }
    if (j.is_number_integer()) return Rat(j.get<long>());
    throw ParseError("rational must be a \"num/den\" string or an integer, got " + j.dump());
}

Json to_json(const SparseVec& v) {
    Json out = Json::array();
    for (const auto& [i, c] : v.entries()) out.push_back(Json::array({i, to_json(c)}));
    return out;
}

SparseVec sparse_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("sparse vector must be an array of [index, value] pairs");
    std::vector<SparseVec::Entry> e;
    for (const auto& item : j) {
        if (!item.is_array() || item.size() != 2 || !item[0].is_number_unsigned())
            throw ParseError("sparse vector entry must be [index, value], got " + item.dump());
        e.emplace_back(item[0].get<std::size_t>(), rat_from_json(item[1]));
    }
    return SparseVec::from_entries(std::move(e));
}

Json to_json(const Mat& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (const auto& [j, c] : m.row(i).entries()) entries.push_back(Json::array({i, j, to_json(c)}));
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Mat mat_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols"))
        throw ParseError("matrix must be an object with rows, cols, entries");
    Mat m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    for (const auto& e : j.value("entries", Json::array())) {
        if (!e.is_array() || e.size() != 3) throw ParseError("matrix entry must be [i, j, value], got " + e.dump());
        auto r = e[0].get<std::size_t>(), c = e[1].get<std::size_t>();
        if (r >= m.rows() || c >= m.cols()) throw ParseError("matrix entry out of range: " + e.dump());
        m.add_to(r, c, rat_from_json(e[2]));
    }
    return m;
}

Json to_json(const Weight& w) {
    Json out = Json::array();
    for (const auto& c : w.coords) out.push_back(to_json(c));
    return out;
}

Weight weight_from_json(const Json& j) {
    if (j.is_string()) return Weight::parse(j.get<std::string>());
    if (!j.is_array()) throw ParseError("weight must be an array or a string");
    Weight w;
    for (const auto& c : j) w.coords.push_back(rat_from_json(c));
    return w;
}

namespace {

std::string parity_name(Parity p) { return p == Parity::Even ? "even" : "odd"; }

Parity parity_from_json(const Json& j) {
    if (j.is_string()) {
        auto s = j.get<std::string>();
        if (s == "even" || s == "0") return Parity::Even;
        if (s == "odd" || s == "1") return Parity::Odd;
    } else if (j.is_number_integer()) {
        auto v = j.get<int>();
        if (v == 0 || v == 1) return v ? Parity::Odd : Parity::Even;
    }
    throw ParseError("parity must be \"even\"/\"odd\" or 0/1, got " + j.dump());
}

Json space_to_json(const SuperSpace& s, bool with_degree) {
    Json basis = Json::array();
    for (const auto& b : s.elements()) {
        Json e{{"label", b.label}, {"parity", parity_name(b.parity)}};
        if (with_degree && b.zdegree) e["zdegree"] = *b.zdegree;
        basis.push_back(std::move(e));
    }
    return basis;
}

SuperSpace space_from_json(const Json& j) {
    if (!j.is_array()) throw ParseError("basis must be an array");
    std::vector<BasisElement> basis;
    for (const auto& e : j) {
        if (!e.is_object() || !e.contains("label") || !e.contains("parity"))
            throw ParseError("basis element needs label and parity, got " + e.dump());
        BasisElement b{e.at("label").get<std::string>(), parity_from_json(e.at("parity")), std::nullopt};
        if (e.contains("zdegree") && !e.at("zdegree").is_null()) b.zdegree = e.at("zdegree").get<int>();
        basis.push_back(std::move(b));
    }
    return SuperSpace(std::move(basis));
}

bool is_builtin(const LieSuperalgebra& g) {
    const auto& t = g.tag();
    return t.family == Family::GL || t.family == Family::W;
}

std::string trim(const std::string& s) {
    auto a = s.find_first_not_of(" \t\n");
    if (a == std::string::npos) return {};
    auto b = s.find_last_not_of(" \t\n");
    return s.substr(a, b - a + 1);
}

std::vector<std::string> split_top(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int parse_count(const std::string& s, const std::string& ctx) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("bad integer '" + s + "' in " + ctx);
    }
}

}  // namespace

Json algebra_to_json(const LieSuperalgebra& g) {
    Json brackets = Json::array();
    for (const auto& [ij, v] : g.table()) brackets.push_back(Json::array({ij.first, ij.second, to_json(v)}));
    Json out{{"basis", space_to_json(g.space(), true)}, {"brackets", std::move(brackets)}, {"cartan", g.cartan()}};
    if (!g.name().empty()) out["name"] = g.name();
    if (g.tag().family != Family::Custom) out["family"] = g.tag().str();
    return out;
}

AlgebraPtr algebra_from_json(const Json& j) {
    if (j.is_string()) return parse_algebra_ref(j.get<std::string>());
    if (!j.is_object() || !j.contains("basis") || !j.contains("brackets"))
        throw ParseError("algebra must be a reference string or an object with basis and brackets");
    SuperSpace space = space_from_json(j.at("basis"));
    LieSuperalgebra::BracketTable table;
    for (const auto& b : j.at("brackets")) {
        if (!b.is_array() || b.size() != 3) throw ParseError("bracket entry must be [i, j, vector], got " + b.dump());
        auto i = b[0].get<std::size_t>(), k = b[1].get<std::size_t>();
        if (i > k) throw ParseError("bracket entries must have i <= j");
        if (k >= space.dim()) throw ParseError("bracket index out of range: " + b.dump());
        SparseVec v = sparse_from_json(b[2]);
        if (!v.empty()) table[{i, k}] = std::move(v);
    }
    std::vector<std::size_t> cartan = j.value("cartan", std::vector<std::size_t>{});
    AlgebraTag tag;
    if (j.contains("family")) {
        auto ref = parse_algebra_ref(j.at("family").get<std::string>());
        tag = ref->tag();
    }
    auto g = std::make_shared<const LieSuperalgebra>(std::move(space), std::move(table), std::move(cartan), tag,
                                                     j.value("name", std::string{}));
    return g;
}

bool same_algebra(const LieSuperalgebra& a, const LieSuperalgebra& b) {
    return a.space() == b.space() && a.table() == b.table() && a.cartan() == b.cartan();
}

AlgebraPtr parse_algebra_ref(const std::string& raw) {
    const std::string ref = trim(raw);
    if (!ref.empty() && ref[0] == '@') return algebra_from_json(read_json_file(ref.substr(1)));
    auto colon = ref.find(':');
    if (colon == std::string::npos) throw ParseError("algebra reference must look like gl:m,n, w:n, s:n or @file.json");
    const std::string family = ref.substr(0, colon), args = ref.substr(colon + 1);
    try {
        if (family == "gl") {
            auto parts = split_top(args, ',');
            if (parts.size() != 2) throw ParseError("gl needs two sizes: gl:m,n");
            return build_gl(parse_count(parts[0], ref), parse_count(parts[1], ref));
        }
        if (family == "w") return build_W(parse_count(args, ref));
        if (family == "s") return build_S(parse_count(args, ref)).own();
    } catch (const ParseError&) {
        throw;
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("algebra reference ") + ref + ": " + e.what());
    }
    throw ParseError("unknown algebra family '" + family + "' (expected gl, w, s)");
}

Json module_to_json(const Supermodule& m) {
    const auto& g = *m.algebra();
    Json action = Json::object();
    for (std::size_t k = 0; k < g.dim(); ++k) action[g.space()[k].label] = to_json(m.action(k));
    Json out{{"algebra", is_builtin(g) ? Json(g.tag().str()) : algebra_to_json(g)},
             {"basis", space_to_json(m.space(), true)},
             {"action", std::move(action)}};
    if (m.weights()) {
        Json w = Json::array();
        for (const auto& x : *m.weights()) w.push_back(to_json(x));
        out["weights"] = std::move(w);
    }
    return out;
}

Supermodule module_from_json(const Json& j, const AlgebraPtr& context) {
    if (!j.is_object() || !j.contains("algebra") || !j.contains("basis") || !j.contains("action"))
        throw ParseError("module must be an object with algebra, basis, action");
    AlgebraPtr g = algebra_from_json(j.at("algebra"));
    if (context) {
        if (!same_algebra(*g, *context)) throw ParseError("module file is over a different algebra");
        g = context;
    }
    SuperSpace space = space_from_json(j.at("basis"));
    std::vector<Mat> action(g->dim(), Mat(space.dim(), space.dim()));
    for (const auto& [label, mat] : j.at("action").items()) {
        auto idx = g->space().index_of(label);
        if (!idx) throw ParseError("action given for unknown algebra element '" + label + "'");
        Mat a = mat_from_json(mat);
        if (a.rows() != space.dim() || a.cols() != space.dim())
            throw ParseError("action matrix for '" + label + "' has the wrong size");
        action[*idx] = std::move(a);
    }
    std::optional<std::vector<Weight>> weights;
    if (j.contains("weights")) {
        weights.emplace();
        for (const auto& w : j.at("weights")) weights->push_back(weight_from_json(w));
    }
    return Supermodule(g, std::move(space), std::move(action), std::move(weights));
}

Supermodule adjoint_module(const AlgebraPtr& g) {
    std::vector<Mat> action;
    for (std::size_t k = 0; k < g->dim(); ++k) action.push_back(g->ad(SparseVec::unit(k)));
    return Supermodule(g, g->space(), std::move(action));
}

namespace {

Supermodule parse_atom(const std::string& raw, const AlgebraPtr& g) {
    const std::string atom = trim(raw);
    if (atom.empty()) throw ParseError("empty module term");
    if (atom[0] == '@') return module_from_json(read_json_file(atom.substr(1)), g);
    auto colon = atom.find(':');
    const std::string name = atom.substr(0, colon);
    const bool has_arg = colon != std::string::npos;
    auto weight = [&] {
        if (!has_arg) throw ParseError("module '" + name + "' needs a weight, e.g. " + name + ":-1,1");
        Weight w = Weight::parse(atom.substr(colon + 1));
        if (w.size() != g->cartan().size())
            throw ParseError("weight for '" + name + "' has " + std::to_string(w.size()) + " coordinates, expected " +
                             std::to_string(g->cartan().size()));
        return w;
    };
    if (!has_arg) {
        if (name == "trivial") return trivial_module(g);
        if (name == "natural") return natural_module(g);
        if (name == "dual") return dual_module(natural_module(g));
        if (name == "adjoint") return adjoint_module(g);
    }
    if (name == "kac") return kac_module(g, character_module(g, weight()));
    if (name == "dualkac") return dual_kac_module(g, character_module(g, weight()));
    if (name == "one") return one_dim_module(g, weight());
    throw ParseError("unknown module '" + atom + "' (expected trivial, natural, dual, adjoint, kac:λ, dualkac:λ, one:λ, @file)");
}

}  // namespace

Supermodule parse_module_expr(const std::string& expr, const AlgebraPtr& g) {
    std::optional<Supermodule> sum;
    for (const auto& term : split_top(expr, '+')) {
        std::optional<Supermodule> prod;
        for (const auto& factor : split_top(term, '*')) {
            Supermodule f = parse_atom(factor, g);
            prod = prod ? tensor_module(*prod, f) : std::move(f);
        }
        sum = sum ? direct_sum(*sum, *prod) : std::move(*prod);
    }
    return std::move(*sum);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace supercoho

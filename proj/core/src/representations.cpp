#include "supercoho/representations.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

namespace supercoho {

std::string Weight::str() const {
    std::string s;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (i) s += ",";
        s += coords[i].str();
    }
    return s;
}

Weight Weight::parse(const std::string& csv) {
    Weight w;
    std::string tok;
    auto flush = [&] {
        if (!tok.empty()) w.coords.push_back(Rat::parse(tok));
        tok.clear();
    };
    for (char c : csv) {
        if (c == ',' || c == '|' || c == ' ' || c == '(' || c == ')') flush();
        else tok += c;
    }
    flush();
    return w;
}

Weight Weight::operator+(const Weight& o) const {
    if (o.size() != size()) throw std::invalid_argument("Weight: length mismatch");
    Weight r = *this;
    for (std::size_t i = 0; i < size(); ++i) r.coords[i] += o.coords[i];
    return r;
}

Weight Weight::operator-(const Weight& o) const { return *this + (-o); }

Weight Weight::operator-() const {
    Weight r = *this;
    for (auto& c : r.coords) c = -c;
    return r;
}

// ---------------------------------------------------------------------------

namespace {

std::optional<std::vector<Weight>> infer_weights(const LieSuperalgebra& g, const std::vector<Mat>& action,
                                                 std::size_t dim) {
    std::vector<Weight> w(dim, Weight{std::vector<Rat>(g.cartan().size())});
    for (std::size_t k = 0; k < g.cartan().size(); ++k) {
        const Mat& h = action[g.cartan()[k]];
        for (std::size_t i = 0; i < dim; ++i) {
            const auto& row = h.row(i);
            for (const auto& [j, c] : row.entries())
                if (j != i) return std::nullopt;
            w[i].coords[k] = row.get(i);
        }
    }
    return w;
}

std::string join_failure(const char* what, const std::string& a, const std::string& b) {
    return std::string(what) + " fails at (" + a + ", " + b + ")";
}

}  // namespace

Supermodule::Supermodule(AlgebraPtr algebra, SuperSpace space, std::vector<Mat> action,
                         std::optional<std::vector<Weight>> weights, bool verify)
    : algebra_(std::move(algebra)), space_(std::move(space)), action_(std::move(action)), weights_(std::move(weights)) {
    if (!algebra_) throw std::invalid_argument("Supermodule: null algebra");
    if (action_.size() != algebra_->dim())
        throw std::invalid_argument("Supermodule: need one action matrix per algebra basis element");
    for (const auto& a : action_)
        if (a.rows() != dim() || a.cols() != dim()) throw std::invalid_argument("Supermodule: action matrix size mismatch");
    if (weights_) {
        if (weights_->size() != dim()) throw std::invalid_argument("Supermodule: one weight per basis vector required");
        for (const auto& w : *weights_)
            if (w.size() != algebra_->cartan().size()) throw std::invalid_argument("Supermodule: weight length mismatch");
    } else {
        weights_ = infer_weights(*algebra_, action_, dim());
    }
    if (verify) {
        for (const auto& r : {check_module_parity(*this), check_bracket_compatibility(*this), check_weights(*this)})
            if (!r.ok) throw std::invalid_argument("Supermodule over " + algebra_->name() + ": " + r.failure);
    }
}

Mat Supermodule::action_of(const SparseVec& x) const {
    Mat out(dim(), dim());
    for (const auto& [k, c] : x.entries()) out = out + action_[k].scaled(c);
    return out;
}

CheckReport check_bracket_compatibility(const Supermodule& m) {
    CheckReport r;
    const auto& g = *m.algebra();
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = i; j < g.dim(); ++j) {
            ++r.checked;
            const Mat& x = m.action(i);
            const Mat& y = m.action(j);
            Mat lhs = m.action_of(g.bracket(i, j));
            Mat rhs = x * y - (y * x).scaled(Rat(koszul(g.parity(i), g.parity(j))));
            if (lhs != rhs) {
                r.ok = false;
                r.failure = join_failure("bracket compatibility", g.space()[i].label, g.space()[j].label);
                return r;
            }
        }
    return r;
}

CheckReport check_module_parity(const Supermodule& m) {
    CheckReport r;
    const auto& g = *m.algebra();
    for (std::size_t k = 0; k < g.dim(); ++k) {
        ++r.checked;
        const Mat& a = m.action(k);
        for (std::size_t i = 0; i < m.dim(); ++i)
            for (const auto& [j, c] : a.row(i).entries())
                if (m.space().parity(i) != m.space().parity(j) + g.parity(k)) {
                    r.ok = false;
                    r.failure = join_failure("parity compatibility", g.space()[k].label, m.space()[j].label);
                    return r;
                }
    }
    return r;
}

CheckReport check_weights(const Supermodule& m) {
    CheckReport r;
    if (!m.weights()) return r;
    const auto& g = *m.algebra();
    for (std::size_t k = 0; k < g.cartan().size(); ++k) {
        const Mat& h = m.action(g.cartan()[k]);
        for (std::size_t i = 0; i < m.dim(); ++i) {
            ++r.checked;
            SparseVec expect;
            const Rat& w = (*m.weights())[i].coords[k];
            if (!w.is_zero()) expect.push_back(i, w);
            if (h.row(i) != expect) {
                r.ok = false;
                r.failure = join_failure("weight", g.space()[g.cartan()[k]].label, m.space()[i].label);
                return r;
            }
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// Basic constructors.

Supermodule trivial_module(const AlgebraPtr& g) {
    return Supermodule(g, SuperSpace({{"1", Parity::Even, std::nullopt}}), std::vector<Mat>(g->dim(), Mat(1, 1)));
}

Supermodule natural_module(const AlgebraPtr& g) {
    const auto& tag = g->tag();
    if (tag.family == Family::GL) {
        const auto size = static_cast<std::size_t>(tag.m + tag.n);
        std::vector<BasisElement> basis;
        for (std::size_t i = 0; i < size; ++i)
            basis.push_back({"e" + std::to_string(i + 1),
                             i < static_cast<std::size_t>(tag.m) ? Parity::Even : Parity::Odd, std::nullopt});
        std::vector<Mat> action;
        for (std::size_t k = 0; k < g->dim(); ++k) {
            Mat a(size, size);
            a.set(k / size, k % size, Rat(1));
            action.push_back(std::move(a));
        }
        return Supermodule(g, SuperSpace(std::move(basis)), std::move(action));
    }
    if (tag.family == Family::W) {
        // xi_I d_i acts on the Grassmann algebra by g -> xi_I d_i(g).
        const int n = tag.n;
        const std::size_t N = std::size_t{1} << n;
        std::vector<BasisElement> basis;
        std::vector<unsigned> order;
        for (int sz = 0; sz <= n; ++sz)
            for (unsigned s = 0; s < N; ++s)
                if (std::popcount(s) == sz) order.push_back(s);
        std::vector<std::size_t> pos(N);
        for (std::size_t k = 0; k < order.size(); ++k) {
            unsigned s = order[k];
            pos[s] = k;
            std::string l = "1";
            if (s) {
                l = "xi";
                for (int b = 0; b < n; ++b)
                    if (s & (1u << b)) {
                        if (l.size() > 2 && n >= 10) l += ",";
                        l += std::to_string(b + 1);
                    }
            }
            basis.push_back({l, (std::popcount(s) & 1) ? Parity::Odd : Parity::Even, std::nullopt});
        }
        auto sign_before = [](unsigned set, int i) { return (std::popcount(set & ((1u << i) - 1)) & 1) ? -1 : 1; };
        std::vector<Mat> action;
        for (std::size_t k = 0; k < g->dim(); ++k) {
            auto [mask, i] = witt_element(*g, k);
            Mat a(N, N);
            for (unsigned s = 0; s < N; ++s) {
                if (!(s & (1u << i))) continue;
                unsigned t = s & ~(1u << i);
                if (mask & t) continue;
                // d_i xi_S, then left multiplication by xi_mask
                int sign = sign_before(s, i);
                for (unsigned x = mask; x; x &= x - 1) sign *= sign_before(t, std::countr_zero(x));
                a.set(pos[mask | t], pos[s], Rat(sign));
            }
            action.push_back(std::move(a));
        }
        return Supermodule(g, SuperSpace(std::move(basis)), std::move(action));
    }
    throw std::invalid_argument("natural_module: no defining module for " + g->name());
}

Supermodule dual_module(const Supermodule& m) {
    const auto& g = *m.algebra();
    std::vector<BasisElement> basis;
    for (const auto& b : m.space().elements()) basis.push_back({b.label + "*", b.parity, std::nullopt});
    std::vector<Mat> action;
    for (std::size_t k = 0; k < g.dim(); ++k) {
        // rho*(x)_{kj} = -(-1)^{|x||j|} rho(x)_{jk}
        Mat t = m.action(k).transpose();
        Mat a(m.dim(), m.dim());
        for (std::size_t i = 0; i < m.dim(); ++i) {
            SparseVec row;
            for (const auto& [j, c] : t.row(i).entries())
                row.push_back(j, c * Rat(-koszul(g.parity(k), m.space().parity(j))));
            a.set_row(i, std::move(row));
        }
        action.push_back(std::move(a));
    }
    std::optional<std::vector<Weight>> w;
    if (m.weights()) {
        w.emplace();
        for (const auto& x : *m.weights()) w->push_back(-x);
    }
    return Supermodule(m.algebra(), SuperSpace(std::move(basis)), std::move(action), std::move(w));
}

Supermodule tensor_module(const Supermodule& m, const Supermodule& n) {
    if (m.algebra() != n.algebra()) throw std::invalid_argument("tensor_module: modules over different algebras");
    const auto& g = *m.algebra();
    std::vector<BasisElement> basis;
    for (const auto& a : m.space().elements())
        for (const auto& b : n.space().elements())
            basis.push_back({a.label + "⊗" + b.label, a.parity + b.parity, std::nullopt});
    Mat id_n = Mat::identity(n.dim());
    Mat sign_m = Mat::identity(m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        if (m.space().parity(i) == Parity::Odd) sign_m.set(i, i, Rat(-1));
    Mat id_m = Mat::identity(m.dim());
    std::vector<Mat> action;
    for (std::size_t k = 0; k < g.dim(); ++k) {
        const Mat& p = g.parity(k) == Parity::Odd ? sign_m : id_m;
        action.push_back(Mat::kron(m.action(k), id_n) + Mat::kron(p, n.action(k)));
    }
    std::optional<std::vector<Weight>> w;
    if (m.weights() && n.weights()) {
        w.emplace();
        for (const auto& a : *m.weights())
            for (const auto& b : *n.weights()) w->push_back(a + b);
    }
    return Supermodule(m.algebra(), SuperSpace(std::move(basis)), std::move(action), std::move(w));
}

Supermodule direct_sum(const Supermodule& m, const Supermodule& n) {
    if (m.algebra() != n.algebra()) throw std::invalid_argument("direct_sum: modules over different algebras");
    std::vector<BasisElement> basis;
    for (const auto& a : m.space().elements()) basis.push_back({a.label + "#1", a.parity, std::nullopt});
    for (const auto& b : n.space().elements()) basis.push_back({b.label + "#2", b.parity, std::nullopt});
    std::vector<Mat> action;
    for (std::size_t k = 0; k < m.algebra()->dim(); ++k) {
        Mat top = Mat::hstack(m.action(k), Mat(m.dim(), n.dim()));
        Mat bottom = Mat::hstack(Mat(n.dim(), m.dim()), n.action(k));
        action.push_back(Mat::vstack(top, bottom));
    }
    return Supermodule(m.algebra(), SuperSpace(std::move(basis)), std::move(action));
}

Supermodule hom_module(const Supermodule& m, const Supermodule& n) { return tensor_module(dual_module(m), n); }

Supermodule parity_shift(const Supermodule& m) {
    std::vector<BasisElement> basis;
    for (const auto& b : m.space().elements()) basis.push_back({b.label + "'", b.parity + Parity::Odd, std::nullopt});
    return Supermodule(m.algebra(), SuperSpace(std::move(basis)), m.actions(), m.weights());
}

// ---------------------------------------------------------------------------
// Characters.

Supermodule one_dim_module(const AlgebraPtr& g, const Weight& lambda, Parity parity) {
    if (lambda.size() != g->cartan().size())
        throw std::invalid_argument("weight has " + std::to_string(lambda.size()) + " coordinates, expected " +
                                    std::to_string(g->cartan().size()));
    std::vector<Rat> chi(g->dim());
    for (std::size_t k = 0; k < g->cartan().size(); ++k) chi[g->cartan()[k]] = lambda.coords[k];
    for (std::size_t i = 0; i < g->dim(); ++i)
        for (std::size_t j = i; j < g->dim(); ++j) {
            Rat v;
            for (const auto& [k, c] : g->bracket(i, j).entries()) v += c * chi[k];
            if (!v.is_zero())
                throw NotACharacter("non-abelianizable weight (" + lambda.str() + "): nonzero on [" +
                                    g->space()[i].label + ", " + g->space()[j].label + "]");
        }
    std::vector<Mat> action;
    for (std::size_t k = 0; k < g->dim(); ++k) {
        Mat a(1, 1);
        if (g->parity(k) == Parity::Even) a.set(0, 0, chi[k]);
        action.push_back(std::move(a));
    }
    return Supermodule(g, SuperSpace({{"v_" + lambda.str(), parity, std::nullopt}}), std::move(action),
                       std::vector<Weight>{lambda});
}

Supermodule character_module(const Subalgebra& g0, const Weight& lambda) {
    if (!g0.odd_indices().empty()) throw std::invalid_argument("character_module: subalgebra is not purely even");
    return one_dim_module(g0.own(), lambda);
}

Supermodule character_module(const AlgebraPtr& g, const Weight& lambda) {
    return character_module(even_subalgebra(g), lambda);
}

// ---------------------------------------------------------------------------
// Induced modules for Type I gradings.

namespace {

void require_type_one(const LieSuperalgebra& g) {
    if (!g.space().z_graded()) throw std::invalid_argument(g.name() + " is not Type I: no Z-grading");
    for (std::size_t i = 0; i < g.dim(); ++i) {
        int d = *g.space()[i].zdegree;
        if (d < -1 || d > 1) throw std::invalid_argument(g.name() + " is not Type I: degree outside -1..1");
        if ((d == 0) != (g.parity(i) == Parity::Even))
            throw std::invalid_argument(g.name() + " is not Type I: degree 0 must be the even part");
    }
}

class Inducer {
public:
    Inducer(const LieSuperalgebra& g, const Supermodule& l0, int free_degree)
        : g_(g), l0_(l0), free_(g.indices_of_degree(free_degree)) {
        if (free_.size() > 20) throw std::invalid_argument("induced_module: too many free generators");
        for (std::size_t t = 0; t < free_.size(); ++t) free_pos_[free_[t]] = t;
        for (auto i : g.indices_of_degree(0)) {
            auto j = l0.algebra()->space().index_of(g.space()[i].label);
            if (!j) throw std::invalid_argument("induced_module: L0 lacks degree-0 element " + g.space()[i].label);
            l0_index_[i] = *j;
        }
        if (l0_index_.size() != l0.algebra()->dim())
            throw std::invalid_argument("induced_module: L0 is not a module over the degree-0 part");
        const unsigned n = 1u << free_.size();
        for (std::size_t sz = 0; sz <= free_.size(); ++sz)
            for (unsigned s = 0; s < n; ++s)
                if (static_cast<std::size_t>(std::popcount(s)) == sz) masks_.push_back(s);
        mask_pos_.resize(n);
        for (std::size_t p = 0; p < masks_.size(); ++p) mask_pos_[masks_[p]] = p;
    }

    std::size_t dim() const { return masks_.size() * l0_.dim(); }
    std::size_t index(unsigned mask, std::size_t v) const { return mask_pos_[mask] * l0_.dim() + v; }

    SuperSpace space() const {
        std::vector<BasisElement> basis;
        for (unsigned s : masks_)
            for (std::size_t v = 0; v < l0_.dim(); ++v) {
                std::string l;
                for (std::size_t t = 0; t < free_.size(); ++t)
                    if (s & (1u << t)) l += (l.empty() ? "" : "^") + g_.space()[free_[t]].label;
                if (l.empty()) l = "1";
                basis.push_back({l + "." + l0_.space()[v].label,
                                 l0_.space().parity(v) + ((std::popcount(s) & 1) ? Parity::Odd : Parity::Even),
                                 std::nullopt});
            }
        return SuperSpace(std::move(basis));
    }

    /// Action of basis element k on the basis vector (mask, v).
    SparseVec act(std::size_t k, unsigned mask, std::size_t v) const {
        if (free_pos_.count(k)) return mul(free_pos_.at(k), mask, v);
        if (l0_index_.count(k)) return act_zero(k, mask, v);
        return act_kill(k, mask, v);
    }

private:
    // y_t * (y_S (x) v)
    SparseVec mul(std::size_t t, unsigned mask, std::size_t v) const {
        if (mask & (1u << t)) return {};
        int sign = (std::popcount(mask & ((1u << t) - 1)) & 1) ? -1 : 1;
        return SparseVec::unit(index(mask | (1u << t), v), Rat(sign));
    }

    template <class F>
    SparseVec linear(const SparseVec& x, F&& f) const {
        SparseVec out;
        for (const auto& [i, c] : x.entries()) {
            unsigned mask = masks_[i / l0_.dim()];
            out.axpy(c, f(mask, i % l0_.dim()));
        }
        return out;
    }

    // Degree-0 element: derivation on the monomial plus the L0 action.
    SparseVec act_zero(std::size_t k, unsigned mask, std::size_t v) const {
        SparseVec out;
        const Mat& rho = l0_.action(l0_index_.at(k));
        for (std::size_t w = 0; w < l0_.dim(); ++w) {
            Rat c = rho.at(w, v);
            if (!c.is_zero()) out.axpy(c, SparseVec::unit(index(mask, w)));
        }
        std::vector<std::size_t> s;
        for (std::size_t t = 0; t < free_.size(); ++t)
            if (mask & (1u << t)) s.push_back(t);
        for (std::size_t i = 0; i < s.size(); ++i) {
            SparseVec br = g_.bracket(k, free_[s[i]]);
            if (br.empty()) continue;
            unsigned suffix = 0;
            for (std::size_t j = i + 1; j < s.size(); ++j) suffix |= 1u << s[j];
            SparseVec term;
            for (const auto& [b, c] : br.entries()) term.axpy(c, mul(free_pos_.at(b), suffix, v));
            for (std::size_t j = i; j-- > 0;)
                term = linear(term, [&](unsigned m2, std::size_t v2) { return mul(s[j], m2, v2); });
            out.axpy(Rat(1), term);
        }
        return out;
    }

    // Opposite-degree element z: z y Y' = [z,y] Y' - y (z Y'); z kills 1 (x) L0.
    SparseVec act_kill(std::size_t k, unsigned mask, std::size_t v) const {
        if (mask == 0) return {};
        std::size_t t = static_cast<std::size_t>(std::countr_zero(mask));
        unsigned rest = mask & ~(1u << t);
        SparseVec out;
        for (const auto& [b, c] : g_.bracket(k, free_[t]).entries()) out.axpy(c, act_zero(b, rest, v));
        SparseVec inner = act_kill(k, rest, v);
        out.axpy(Rat(-1), linear(inner, [&](unsigned m2, std::size_t v2) { return mul(t, m2, v2); }));
        return out;
    }

    const LieSuperalgebra& g_;
    const Supermodule& l0_;
    std::vector<std::size_t> free_;
    std::map<std::size_t, std::size_t> free_pos_, l0_index_;
    std::vector<unsigned> masks_;
    std::vector<std::size_t> mask_pos_;

public:
    const std::vector<unsigned>& masks() const { return masks_; }
};

}  // namespace

Supermodule induced_module(const AlgebraPtr& g, const Supermodule& l0, int free_degree) {
    if (free_degree != 1 && free_degree != -1) throw std::invalid_argument("induced_module: free degree must be +-1");
    require_type_one(*g);
    Inducer ind(*g, l0, free_degree);
    const std::size_t n = ind.dim();
    std::vector<Mat> action;
    for (std::size_t k = 0; k < g->dim(); ++k) {
        std::vector<SparseVec> cols(n);
        for (unsigned mask : ind.masks())
            for (std::size_t v = 0; v < l0.dim(); ++v) cols[ind.index(mask, v)] = ind.act(k, mask, v);
        action.push_back(Mat::from_columns(n, cols));
    }
    return Supermodule(g, ind.space(), std::move(action));
}

Supermodule kac_module(const AlgebraPtr& g, const Supermodule& l0) { return induced_module(g, l0, -1); }

Supermodule dual_kac_module(const AlgebraPtr& g, const Supermodule& l0) {
    return dual_module(induced_module(g, dual_module(l0), +1));
}

Supermodule restrict_module(const Supermodule& m, const Subalgebra& h) {
    if (h.parent() != m.algebra()) throw std::invalid_argument("restrict_module: subalgebra of a different algebra");
    std::vector<Mat> action;
    for (const auto& col : h.inclusion().columns()) action.push_back(m.action_of(col));
    return Supermodule(h.own(), m.space(), std::move(action));
}

// ---------------------------------------------------------------------------

std::vector<Mat> endomorphisms(const Supermodule& m) {
    const std::size_t n = m.dim();
    // Unknowns T_{ab} with |a| = |b|.
    std::vector<std::pair<std::size_t, std::size_t>> vars;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (m.space().parity(a) == m.space().parity(b)) vars.emplace_back(a, b);
    const std::size_t blocks = m.algebra()->dim();
    std::vector<SparseVec> cols;
    for (auto [a, b] : vars) {
        std::vector<SparseVec::Entry> e;
        for (std::size_t k = 0; k < blocks; ++k) {
            const Mat& rho = m.action(k);
            const std::size_t off = k * n * n;
            // (rho T)_{ib} gets rho_{ia}; (T rho)_{aj} gets rho_{bj}
            for (std::size_t i = 0; i < n; ++i) {
                Rat c = rho.at(i, a);
                if (!c.is_zero()) e.emplace_back(off + i * n + b, c);
            }
            for (const auto& [j, c] : rho.row(b).entries()) e.emplace_back(off + a * n + j, -c);
        }
        cols.push_back(SparseVec::from_entries(std::move(e)));
    }
    Mat sys = Mat::from_columns(blocks * n * n, cols);
    Mat ker = kernel(sys);
    std::vector<Mat> out;
    for (const auto& c : ker.columns()) {
        Mat t(n, n);
        for (const auto& [v, x] : c.entries()) t.set(vars[v].first, vars[v].second, x);
        out.push_back(std::move(t));
    }
    return out;
}

bool is_indecomposable(const Supermodule& m) {
    const std::size_t n = m.dim();
    if (n == 0) return false;
    auto flatten = [n](const Mat& a) {
        std::vector<SparseVec::Entry> e;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [j, c] : a.row(i).entries()) e.emplace_back(i * n + j, c);
        return SparseVec::from_entries(std::move(e));
    };
    auto unflatten = [n](const SparseVec& v) {
        Mat a(n, n);
        for (const auto& [k, c] : v.entries()) a.set(k / n, k % n, c);
        return a;
    };
    std::vector<Mat> nil;
    for (const Mat& b : endomorphisms(m)) {
        Rat tr;
        for (std::size_t i = 0; i < n; ++i) tr += b.at(i, i);
        nil.push_back(b - Mat::identity(n).scaled(tr / Rat(static_cast<long>(n))));
    }
    // The trace-free parts must generate a nilpotent ideal: N^{n} = 0.
    std::vector<Mat> power = nil;
    for (std::size_t step = 0; step <= n; ++step) {
        RowEchelon e(n * n);
        for (const Mat& p : power)
            if (!p.is_zero()) e.insert(flatten(p));
        if (e.rank() == 0) return true;
        if (step == n) break;
        std::vector<Mat> next;
        for (const auto& r : e.reduced_rows()) {
            Mat p = unflatten(r);
            for (const Mat& a : nil) next.push_back(a * p);
        }
        power = std::move(next);
    }
    return false;
}

}  // namespace supercoho

#include "supercoho/superalgebra.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

namespace supercoho {

SuperSpace::SuperSpace(std::vector<BasisElement> basis) : basis_(std::move(basis)) {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        if (!index_.emplace(basis_[i].label, i).second)
            throw std::invalid_argument("SuperSpace: duplicate label '" + basis_[i].label + "'");
    }
}

std::optional<std::size_t> SuperSpace::index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t SuperSpace::index_or_throw(const std::string& label) const {
    auto i = index_of(label);
    if (!i) throw std::invalid_argument("unknown basis label '" + label + "'");
    return *i;
}

std::size_t SuperSpace::even_dim() const {
    return static_cast<std::size_t>(
        std::count_if(basis_.begin(), basis_.end(), [](const auto& b) { return b.parity == Parity::Even; }));
}

bool SuperSpace::z_graded() const {
    return !basis_.empty() && std::all_of(basis_.begin(), basis_.end(), [](const auto& b) { return b.zdegree.has_value(); });
}

std::optional<Parity> SuperSpace::parity_of(const SparseVec& v) const {
    if (v.empty()) return Parity::Even;
    Parity p = parity(v.entries().front().first);
    for (const auto& [i, x] : v.entries())
        if (parity(i) != p) return std::nullopt;
    return p;
}

std::optional<int> SuperSpace::zdegree_of(const SparseVec& v) const {
    if (v.empty()) return std::nullopt;
    auto d = basis_[v.entries().front().first].zdegree;
    if (!d) return std::nullopt;
    for (const auto& [i, x] : v.entries())
        if (basis_[i].zdegree != d) return std::nullopt;
    return d;
}

std::string AlgebraTag::str() const {
    switch (family) {
        case Family::GL: return "gl:" + std::to_string(m) + "," + std::to_string(n);
        case Family::W: return "w:" + std::to_string(n);
        case Family::S: return "s:" + std::to_string(n);
        case Family::Custom: break;
    }
    return "custom";
}

LieSuperalgebra::LieSuperalgebra(SuperSpace space, BracketTable brackets, std::vector<std::size_t> cartan,
                                 AlgebraTag tag, std::string name)
    : space_(std::move(space)), brackets_(std::move(brackets)), cartan_(std::move(cartan)), tag_(tag),
      name_(std::move(name)) {
    const std::size_t n = space_.dim();
    for (auto it = brackets_.begin(); it != brackets_.end();) {
        auto [i, j] = it->first;
        if (i > j || j >= n) throw std::invalid_argument("LieSuperalgebra: bracket key out of range or not i <= j");
        if (it->second.empty()) {
            it = brackets_.erase(it);
            continue;
        }
        if (!it->second.empty() && it->second.entries().back().first >= n)
            throw std::invalid_argument("LieSuperalgebra: bracket value out of range");
        Parity target = space_.parity(i) + space_.parity(j);
        for (const auto& [k, c] : it->second.entries()) {
            if (space_.parity(k) != target)
                throw std::invalid_argument("LieSuperalgebra: parity additivity fails for [" + space_[i].label + ", " +
                                            space_[j].label + "]");
            auto di = space_[i].zdegree, dj = space_[j].zdegree, dk = space_[k].zdegree;
            if (di && dj && dk && *dk != *di + *dj)
                throw std::invalid_argument("LieSuperalgebra: Z-degree additivity fails for [" + space_[i].label +
                                            ", " + space_[j].label + "]");
        }
        if (i == j && space_.parity(i) == Parity::Even)
            throw std::invalid_argument("LieSuperalgebra: nonzero [x,x] for even " + space_[i].label);
        ++it;
    }
    for (auto c : cartan_) {
        if (c >= n || space_.parity(c) != Parity::Even)
            throw std::invalid_argument("LieSuperalgebra: cartan index must be an even basis element");
    }
}

SparseVec LieSuperalgebra::bracket(std::size_t i, std::size_t j) const {
    if (i <= j) {
        auto it = brackets_.find({i, j});
        return it == brackets_.end() ? SparseVec{} : it->second;
    }
    auto it = brackets_.find({j, i});
    if (it == brackets_.end()) return {};
    return it->second.scaled(Rat(-koszul(parity(i), parity(j))));
}

SparseVec LieSuperalgebra::bracket(const SparseVec& x, const SparseVec& y) const {
    std::vector<SparseVec::Entry> acc;
    for (const auto& [i, a] : x.entries())
        for (const auto& [j, b] : y.entries()) {
            SparseVec bij = bracket(i, j);
            if (bij.empty()) continue;
            Rat ab = a * b;
            for (const auto& [k, c] : bij.entries()) acc.emplace_back(k, ab * c);
        }
    return SparseVec::from_entries(std::move(acc));
}

Mat LieSuperalgebra::ad(const SparseVec& x) const {
    std::vector<SparseVec> cols;
    cols.reserve(dim());
    for (std::size_t j = 0; j < dim(); ++j) cols.push_back(bracket(x, SparseVec::unit(j)));
    return Mat::from_columns(dim(), cols);
}

std::vector<std::size_t> LieSuperalgebra::indices_of_parity(Parity p) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
        if (parity(i) == p) out.push_back(i);
    return out;
}

std::vector<std::size_t> LieSuperalgebra::indices_of_degree(int d) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
        if (space_[i].zdegree == d) out.push_back(i);
    return out;
}

// ---------------------------------------------------------------------------
// Identity checks

CheckReport check_super_skew(const LieSuperalgebra& g) {
    CheckReport r;
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            ++r.checked;
            SparseVec lhs = g.bracket(i, j);
            SparseVec rhs = g.bracket(j, i).scaled(Rat(-koszul(g.parity(i), g.parity(j))));
            if (lhs != rhs) {
                r.ok = false;
                r.failure = "skew-symmetry fails at (" + g.space()[i].label + ", " + g.space()[j].label + ")";
                return r;
            }
        }
    return r;
}

CheckReport check_parity(const LieSuperalgebra& g) {
    CheckReport r;
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            ++r.checked;
            Parity target = g.parity(i) + g.parity(j);
            const SparseVec b = g.bracket(i, j);
            for (const auto& [k, c] : b.entries())
                if (g.parity(k) != target) {
                    r.ok = false;
                    r.failure = "parity additivity fails at (" + g.space()[i].label + ", " + g.space()[j].label + ")";
                    return r;
                }
        }
    return r;
}

namespace {

bool jacobi_holds(const LieSuperalgebra& g, std::size_t i, std::size_t j, std::size_t k) {
    // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]]
    SparseVec x = SparseVec::unit(i), y = SparseVec::unit(j), z = SparseVec::unit(k);
    SparseVec lhs = g.bracket(x, g.bracket(j, k));
    SparseVec rhs = g.bracket(g.bracket(i, j), z);
    rhs.axpy(Rat(koszul(g.parity(i), g.parity(j))), g.bracket(y, g.bracket(i, k)));
    return lhs == rhs;
}

}  // namespace

CheckReport check_jacobi(const LieSuperalgebra& g, std::size_t exhaustive_limit, std::size_t samples,
                         std::uint64_t seed) {
    CheckReport r;
    const std::size_t n = g.dim();
    auto fail = [&](std::size_t i, std::size_t j, std::size_t k) {
        r.ok = false;
        r.failure = "Jacobi identity fails at (" + g.space()[i].label + ", " + g.space()[j].label + ", " +
                    g.space()[k].label + ")";
    };
    if (n * n * n <= exhaustive_limit) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t k = 0; k < n; ++k) {
                    ++r.checked;
                    if (!jacobi_holds(g, i, j, k)) {
                        fail(i, j, k);
                        return r;
                    }
                }
        return r;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        std::size_t i = rng() % n, j = rng() % n, k = rng() % n;
        ++r.checked;
        if (!jacobi_holds(g, i, j, k)) {
            fail(i, j, k);
            return r;
        }
    }
    return r;
}

CheckReport check_z_grading(const LieSuperalgebra& g) {
    CheckReport r;
    if (!g.space().z_graded()) {
        r.ok = false;
        r.failure = "algebra is not Z-graded";
        return r;
    }
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) {
            ++r.checked;
            int target = *g.space()[i].zdegree + *g.space()[j].zdegree;
            const SparseVec b = g.bracket(i, j);
            for (const auto& [k, c] : b.entries())
                if (*g.space()[k].zdegree != target) {
                    r.ok = false;
                    r.failure = "Z-grading fails at (" + g.space()[i].label + ", " + g.space()[j].label + ")";
                    return r;
                }
        }
    return r;
}

// ---------------------------------------------------------------------------
// Subalgebra

namespace {

std::string render_combination(const SuperSpace& space, const SparseVec& v) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [i, c] : v.entries()) {
        if (c.sign() < 0) os << "-";
        else if (!first) os << "+";
        Rat a = c.sign() < 0 ? -c : c;
        if (!a.is_one()) os << a << "*";
        os << space[i].label;
        first = false;
    }
    return first ? "0" : os.str();
}

}  // namespace

Subalgebra::Subalgebra(AlgebraPtr parent, Mat inclusion, std::vector<std::string> labels, std::string name)
    : parent_(std::move(parent)), inclusion_(std::move(inclusion)), span_(inclusion_) {
    const auto& ps = parent_->space();
    if (inclusion_.rows() != parent_->dim()) throw std::invalid_argument("Subalgebra: inclusion row count mismatch");
    auto cols = inclusion_.columns();
    if (!labels.empty() && labels.size() != cols.size())
        throw std::invalid_argument("Subalgebra: label count mismatch");

    std::vector<BasisElement> basis;
    bool graded = ps.z_graded();
    for (std::size_t k = 0; k < cols.size(); ++k) {
        auto p = ps.parity_of(cols[k]);
        if (!p) throw std::invalid_argument("Subalgebra: basis vector mixes parities");
        BasisElement b;
        b.label = labels.empty() ? render_combination(ps, cols[k]) : labels[k];
        b.parity = *p;
        if (graded) {
            b.zdegree = ps.zdegree_of(cols[k]);
            if (!b.zdegree) graded = false;
        }
        basis.push_back(std::move(b));
    }
    if (!graded)
        for (auto& b : basis) b.zdegree.reset();

    LieSuperalgebra::BracketTable table;
    for (std::size_t i = 0; i < cols.size(); ++i)
        for (std::size_t j = i; j < cols.size(); ++j) {
            SparseVec br = parent_->bracket(cols[i], cols[j]);
            auto c = span_.coordinates(br);
            if (!c)
                throw std::invalid_argument("Subalgebra: not closed under the bracket at (" + basis[i].label + ", " +
                                            basis[j].label + ")");
            if (!c->empty()) table.emplace(std::make_pair(i, j), std::move(*c));
        }

    // Own Cartan: even basis vectors lying in the span of the parent's Cartan.
    std::vector<std::size_t> cartan;
    if (!parent_->cartan().empty()) {
        ColumnSpace torus(Mat::from_columns(parent_->dim(), [&] {
            std::vector<SparseVec> t;
            for (auto c : parent_->cartan()) t.push_back(SparseVec::unit(c));
            return t;
        }()));
        for (std::size_t k = 0; k < cols.size(); ++k)
            if (basis[k].parity == Parity::Even && torus.contains(cols[k])) cartan.push_back(k);
    }
    own_ = std::make_shared<LieSuperalgebra>(SuperSpace(std::move(basis)), std::move(table), std::move(cartan),
                                             AlgebraTag{}, std::move(name));
}

Subalgebra Subalgebra::from_vectors(AlgebraPtr parent, const std::vector<SparseVec>& vectors,
                                    std::vector<std::string> labels, std::string name) {
    std::size_t n = parent->dim();
    return Subalgebra(std::move(parent), Mat::from_columns(n, vectors), std::move(labels), std::move(name));
}

Subalgebra Subalgebra::from_basis_indices(AlgebraPtr parent, const std::vector<std::size_t>& idx, std::string name) {
    std::vector<SparseVec> vecs;
    std::vector<std::string> labels;
    for (auto i : idx) {
        vecs.push_back(SparseVec::unit(i));
        labels.push_back(parent->space()[i].label);
    }
    return from_vectors(std::move(parent), vecs, std::move(labels), std::move(name));
}

std::optional<SparseVec> Subalgebra::local_coordinates(const SparseVec& parent_vec) const {
    return span_.coordinates(parent_vec);
}

std::vector<SparseVec> Subalgebra::odd_vectors() const {
    std::vector<SparseVec> out;
    auto cols = inclusion_.columns();
    for (auto i : odd_indices()) out.push_back(cols[i]);
    return out;
}

bool Subalgebra::contains_subalgebra(const Subalgebra& other) const {
    if (other.parent_.get() != parent_.get()) return false;
    for (const auto& c : other.inclusion_.columns())
        if (!contains(c)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// FiniteGroupAction

FiniteGroupAction::FiniteGroupAction(std::size_t dim, std::vector<Mat> generators, std::size_t declared_order)
    : dim_(dim), generators_(std::move(generators)), order_(declared_order) {
    for (const auto& g : generators_) {
        if (g.rows() != dim_ || g.cols() != dim_)
            throw std::invalid_argument("FiniteGroupAction: generator has wrong shape");
        if (rank(g) != dim_) throw std::invalid_argument("FiniteGroupAction: generator is not invertible");
    }
    auto elems = elements();
    if (elems.size() != order_)
        throw std::invalid_argument("FiniteGroupAction: closure has order " + std::to_string(elems.size()) +
                                    ", declared " + std::to_string(order_));
}

namespace {

struct MatLess {
    bool operator()(const Mat& a, const Mat& b) const {
        for (std::size_t i = 0; i < a.rows(); ++i) {
            const auto& ra = a.row(i).entries();
            const auto& rb = b.row(i).entries();
            if (ra.size() != rb.size()) return ra.size() < rb.size();
            for (std::size_t k = 0; k < ra.size(); ++k) {
                if (ra[k].first != rb[k].first) return ra[k].first < rb[k].first;
                if (ra[k].second != rb[k].second) return ra[k].second < rb[k].second;
            }
        }
        return false;
    }
};

}  // namespace

std::vector<Mat> FiniteGroupAction::elements(std::size_t limit) const {
    std::vector<Mat> out{Mat::identity(dim_)};
    std::set<Mat, MatLess> seen{out.front()};
    for (std::size_t k = 0; k < out.size(); ++k) {
        for (const auto& g : generators_) {
            Mat h = g * out[k];
            if (seen.insert(h).second) {
                out.push_back(std::move(h));
                if (out.size() > limit) throw std::runtime_error("FiniteGroupAction: closure exceeds limit");
            }
        }
    }
    return out;
}

}  // namespace supercoho

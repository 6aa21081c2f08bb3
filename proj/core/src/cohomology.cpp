#include "supercoho/cohomology.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_map>

namespace supercoho {

std::size_t max_cochain_dim() {
    if (const char* env = std::getenv("SUPERCOHO_MAX_DIM")) {
        try {
            long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw std::invalid_argument(std::string("SUPERCOHO_MAX_DIM is not a positive integer: ") + env);
    }
    return 20000;
}

// ---------------------------------------------------------------------------
// Monomials.

namespace {

struct Signed {
    Rat coef;
    Monomial mono;
};

// theta^k * mono
std::optional<Signed> mul_var(std::uint16_t k, const Monomial& mono, std::size_t odd_count) {
    auto pos = std::lower_bound(mono.begin(), mono.end(), k);
    int sign = 1;
    if (k < odd_count) {
        if (pos != mono.end() && *pos == k) return std::nullopt;
        if ((pos - mono.begin()) & 1) sign = -1;  // every entry before pos is odd
    }
    Monomial out;
    out.reserve(mono.size() + 1);
    out.insert(out.end(), mono.begin(), pos);
    out.push_back(k);
    out.insert(out.end(), pos, mono.end());
    return Signed{Rat(sign), std::move(out)};
}

// left derivative d/dtheta^k of mono
std::optional<Signed> derive(std::uint16_t k, const Monomial& mono, std::size_t odd_count) {
    auto lo = std::lower_bound(mono.begin(), mono.end(), k);
    if (lo == mono.end() || *lo != k) return std::nullopt;
    auto hi = std::upper_bound(lo, mono.end(), k);
    long coef = k < odd_count ? (((lo - mono.begin()) & 1) ? -1 : 1) : static_cast<long>(hi - lo);
    Monomial out(mono.begin(), lo);
    out.insert(out.end(), lo + 1, mono.end());
    return Signed{Rat(coef), std::move(out)};
}

// left * mono, left given as a sorted monomial
std::optional<Signed> mul_mono(const Monomial& left, const Monomial& mono, std::size_t odd_count) {
    Signed cur{Rat(1), mono};
    for (std::size_t r = left.size(); r-- > 0;) {
        auto next = mul_var(left[r], cur.mono, odd_count);
        if (!next) return std::nullopt;
        cur.coef *= next->coef;
        cur.mono = std::move(next->mono);
    }
    return cur;
}

std::size_t binom(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    long double r = 1;
    for (std::size_t i = 1; i <= k; ++i) r = r * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    if (r > 1e18L) return static_cast<std::size_t>(-1);
    return static_cast<std::size_t>(r + 0.5L);
}

std::size_t sat_add(std::size_t a, std::size_t b) { return a > static_cast<std::size_t>(-1) - b ? static_cast<std::size_t>(-1) : a + b; }
std::size_t sat_mul(std::size_t a, std::size_t b) {
    if (a == 0 || b == 0) return 0;
    return a > static_cast<std::size_t>(-1) / b ? static_cast<std::size_t>(-1) : a * b;
}

}  // namespace

std::size_t MonomialBasis::count(std::size_t vars, std::size_t odd_count, int degree) {
    if (degree < 0) return 0;
    const auto p = static_cast<std::size_t>(degree);
    const std::size_t even = vars - odd_count;
    std::size_t total = 0;
    for (std::size_t q = 0; q <= std::min(p, odd_count); ++q) {
        std::size_t r = p - q;
        std::size_t sym = r == 0 ? 1 : (even == 0 ? 0 : binom(even + r - 1, r));
        total = sat_add(total, sat_mul(binom(odd_count, q), sym));
    }
    return total;
}

MonomialBasis::MonomialBasis(std::size_t vars, std::size_t odd_count, int degree) {
    if (odd_count > vars) throw std::invalid_argument("MonomialBasis: odd_count exceeds variable count");
    if (vars > 65535) throw std::invalid_argument("MonomialBasis: too many variables");
    if (degree < 0) return;
    const auto p = static_cast<std::size_t>(degree);
    const std::size_t even = vars - odd_count;
    for (std::size_t q = 0; q <= std::min(p, odd_count); ++q) {
        std::size_t r = p - q;
        if (r > 0 && even == 0) continue;
        // strictly increasing q-subsets of [0, odd_count)
        std::vector<std::uint16_t> sub(q);
        for (std::size_t i = 0; i < q; ++i) sub[i] = static_cast<std::uint16_t>(i);
        while (true) {
            // weakly increasing r-tuples of [odd_count, vars)
            std::vector<std::uint16_t> mult(r, static_cast<std::uint16_t>(odd_count));
            while (true) {
                Monomial m = sub;
                m.insert(m.end(), mult.begin(), mult.end());
                index_.emplace(m, monomials_.size());
                monomials_.push_back(std::move(m));
                std::size_t i = r;
                while (i > 0 && mult[i - 1] + 1u >= vars) --i;
                if (i == 0) break;
                std::uint16_t v = static_cast<std::uint16_t>(mult[i - 1] + 1);
                for (std::size_t j = i - 1; j < r; ++j) mult[j] = v;
            }
            std::size_t i = q;
            while (i > 0 && sub[i - 1] >= odd_count - (q - i) - 1) --i;
            if (i == 0) break;
            ++sub[i - 1];
            for (std::size_t j = i; j < q; ++j) sub[j] = static_cast<std::uint16_t>(sub[j - 1] + 1);
        }
    }
}

std::optional<std::size_t> MonomialBasis::index_of(const Monomial& m) const {
    auto it = index_.find(m);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

// ---------------------------------------------------------------------------
// The complex.

namespace {

// Coefficient of the quadratic term -1/2 sum_k Psi^k d_k in the differential.
const Rat kPsiCoefficient(-1, 2);

struct Accumulator {
    std::vector<SparseVec::Entry> entries;
    void add(std::size_t i, const Rat& c) {
        if (!c.is_zero()) entries.emplace_back(i, c);
    }
    SparseVec finish() { return SparseVec::from_entries(std::move(entries)); }
};

std::size_t index_or_throw(const MonomialBasis& mb, const Monomial& m) {
    auto i = mb.index_of(m);
    if (!i) throw std::logic_error("cochain complex: monomial outside the degree basis");
    return *i;
}

}  // namespace

std::vector<std::size_t> RelativeCochainComplex::dims() const {
    std::vector<std::size_t> d;
    for (const auto& b : basis_) d.push_back(b.cols());
    return d;
}

SparseVec RelativeCochainComplex::complement_coordinates(const SparseVec& x) const {
    SparseVec full = adapted_inverse_.apply(x);
    SparseVec out;
    for (const auto& [i, c] : full.entries())
        if (i >= a_dim_) out.push_back(i - a_dim_, c);
    return out;
}

SparseVec RelativeCochainComplex::apply_full_differential(int p, const SparseVec& cochain) const {
    const MonomialBasis& src = monomials(p);
    const MonomialBasis& dst = monomials(p + 1);
    const std::size_t md = m_->dim();
    Accumulator acc;
    for (const auto& [idx, coef] : cochain.entries()) {
        const Monomial& mono = src[idx / md];
        const std::size_t v = idx % md;
        std::size_t odd_in_mono = 0;
        for (auto k : mono)
            if (k < odd_count_) ++odd_in_mono;
        // sum_k (-1)^{|b_k||f|} theta^k f (x) b_k m
        for (std::size_t k = 0; k < complement_.size(); ++k) {
            auto prod = mul_var(static_cast<std::uint16_t>(k), mono, odd_count_);
            if (!prod) continue;
            bool b_odd = k >= odd_count_;
            Rat sign = prod->coef * Rat((b_odd && (odd_in_mono & 1)) ? -1 : 1);
            std::size_t target = index_or_throw(dst, prod->mono) * md;
            const Mat& rho = m_->action(complement_[k]);
            for (std::size_t w = 0; w < md; ++w) {
                Rat c = rho.at(w, v);
                if (!c.is_zero()) acc.add(target + w, coef * sign * c);
            }
        }
        // -1/2 sum_k Psi^k d_k f (x) m
        for (std::size_t r = 0; r < mono.size(); ++r) {
            if (r > 0 && mono[r] == mono[r - 1]) continue;
            auto k = mono[r];
            auto der = derive(k, mono, odd_count_);
            if (!der) continue;
            for (const auto& [quad, qc] : psi_[k]) {
                auto prod = mul_mono(quad, der->mono, odd_count_);
                if (!prod) continue;
                acc.add(index_or_throw(dst, prod->mono) * md + v, coef * kPsiCoefficient * qc * der->coef * prod->coef);
            }
        }
    }
    return acc.finish();
}

SparseVec RelativeCochainComplex::lie_derivative(int p, const Mat& generator_action, const Mat& module_action,
                                                 const SparseVec& cochain) const {
    const MonomialBasis& mb = monomials(p);
    const std::size_t md = m_->dim();
    Accumulator acc;
    for (const auto& [idx, coef] : cochain.entries()) {
        const Monomial& mono = mb[idx / md];
        const std::size_t v = idx % md;
        for (const auto& [w, c] : module_action.column(v).entries()) acc.add(idx - v + w, coef * c);
        for (std::size_t r = 0; r < mono.size(); ++r) {
            if (r > 0 && mono[r] == mono[r - 1]) continue;
            auto k = mono[r];
            auto der = derive(k, mono, odd_count_);
            if (!der) continue;
            for (const auto& [j, djk] : generator_action.row(k).entries()) {
                auto prod = mul_var(static_cast<std::uint16_t>(j), der->mono, odd_count_);
                if (!prod) continue;
                acc.add(index_or_throw(mb, prod->mono) * md + v, coef * djk * der->coef * prod->coef);
            }
        }
    }
    return acc.finish();
}

SparseVec RelativeCochainComplex::lie_derivative(int p, const SparseVec& x, const SparseVec& cochain) const {
    const std::size_t n = complement_.size();
    Mat d(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (const auto& [k, c] : complement_coordinates(g_->bracket(x, SparseVec::unit(complement_[j]))).entries())
            d.set(k, j, -c);
    return lie_derivative(p, d, m_->action_of(x), cochain);
}

std::optional<SparseVec> RelativeCochainComplex::coordinates(int p, const SparseVec& full) const {
    return spans_.at(static_cast<std::size_t>(p)).coordinates(full);
}

RelativeCochainComplex build_relative_complex(const AlgebraPtr& g, const std::optional<Subalgebra>& a,
                                              const Supermodule& m, int pmax) {
    if (pmax < 1) throw std::invalid_argument("build_relative_complex: pmax must be at least 1");
    if (m.algebra() != g) throw std::invalid_argument("build_relative_complex: module is over a different algebra");
    if (a) {
        if (a->parent() != g) throw std::invalid_argument("build_relative_complex: subalgebra of a different algebra");
        if (!a->odd_indices().empty()) throw std::invalid_argument("build_relative_complex: subalgebra must be even");
    }
    RelativeCochainComplex cx;
    cx.g_ = g;
    cx.a_ = a;
    cx.m_ = std::make_shared<const Supermodule>(m);
    cx.pmax_ = pmax;

    // Adapted basis: a first, then standard basis vectors completing it.
    const std::size_t n = g->dim();
    std::vector<SparseVec> cols;
    RowEchelon span(n);
    if (a)
        for (const auto& c : a->inclusion().columns()) {
            span.insert(c);
            cols.push_back(c);
        }
    cx.a_dim_ = cols.size();
    std::vector<std::size_t> comp;
    for (std::size_t i = 0; i < n; ++i)
        if (span.insert(SparseVec::unit(i))) comp.push_back(i);
    // generators for even basis elements anticommute; put them first
    std::stable_partition(comp.begin(), comp.end(), [&](std::size_t i) { return g->parity(i) == Parity::Even; });
    for (auto i : comp) {
        cols.push_back(SparseVec::unit(i));
        if (g->parity(i) == Parity::Even) ++cx.odd_count_;
    }
    cx.complement_ = comp;
    cx.adapted_inverse_ = inverse(Mat::from_columns(n, cols));

    // Psi^k = sum_{i,j} (-1)^{|b_i|(|b_j|+1)} c_{ij}^k theta^i theta^j, projected to the complement.
    const std::size_t nc = comp.size();
    cx.psi_.assign(nc, {});
    std::vector<std::map<Monomial, Rat>> psi(nc);
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = 0; j < nc; ++j) {
            SparseVec br = g->bracket(comp[i], comp[j]);
            if (br.empty()) continue;
            auto quad = mul_mono(Monomial{static_cast<std::uint16_t>(i)},
                                 Monomial{static_cast<std::uint16_t>(j)}, cx.odd_count_);
            if (!quad) continue;
            int s = (bit(g->parity(comp[i])) & (bit(g->parity(comp[j])) + 1)) ? -1 : 1;
            for (const auto& [k, c] : cx.complement_coordinates(br).entries()) psi[k][quad->mono] += c * quad->coef * Rat(s);
        }
    for (std::size_t k = 0; k < nc; ++k)
        for (auto& [mono, c] : psi[k])
            if (!c.is_zero()) cx.psi_[k].emplace_back(mono, c);

    // Size guard on the raw spaces.
    const std::size_t cap = max_cochain_dim();
    std::size_t raw = 0;
    for (int p = 0; p <= pmax; ++p) raw = sat_add(raw, sat_mul(MonomialBasis::count(nc, cx.odd_count_, p), m.dim()));
    if (raw > sat_mul(cap, 50))
        throw DimensionCapExceeded("cochain spaces of total raw dimension " + std::to_string(raw) +
                                   " exceed the limit (SUPERCOHO_MAX_DIM=" + std::to_string(cap) + ")");

    // Lie derivatives of a's basis on generators; torus elements acting
    // diagonally are handled through weights.
    struct Gen {
        Mat d;
        Mat rho;
        bool diagonal;
    };
    std::vector<Gen> gens;
    if (a) {
        auto inc = a->inclusion().columns();
        for (std::size_t t = 0; t < inc.size(); ++t) {
            Mat d(nc, nc);
            for (std::size_t j = 0; j < nc; ++j)
                for (const auto& [k, c] : cx.complement_coordinates(g->bracket(inc[t], SparseVec::unit(comp[j]))).entries())
                    d.set(k, j, -c);
            Mat rho = m.action_of(inc[t]);
            auto is_diag = [](const Mat& x) {
                for (std::size_t i = 0; i < x.rows(); ++i)
                    for (const auto& [j, c] : x.row(i).entries())
                        if (i != j) return false;
                return true;
            };
            gens.push_back({std::move(d), std::move(rho), false});
            gens.back().diagonal = is_diag(gens.back().d) && is_diag(gens.back().rho);
        }
    }

    std::size_t total = 0;
    const std::size_t md = m.dim();
    for (int p = 0; p <= pmax; ++p) {
        cx.monomials_.emplace_back(nc, cx.odd_count_, p);
        const MonomialBasis& mb = cx.monomials_.back();
        const std::size_t full = mb.size() * md;

        std::vector<std::size_t> candidates;
        for (std::size_t idx = 0; idx < full; ++idx) {
            const Monomial& mono = mb[idx / md];
            const std::size_t v = idx % md;
            bool zero = true;
            for (const auto& gen : gens) {
                if (!gen.diagonal) continue;
                Rat w = gen.rho.at(v, v);
                for (auto k : mono) w += gen.d.at(k, k);
                if (!w.is_zero()) {
                    zero = false;
                    break;
                }
            }
            if (zero) candidates.push_back(idx);
        }

        std::vector<SparseVec> basis_cols;
        bool any_general = std::any_of(gens.begin(), gens.end(), [](const Gen& x) { return !x.diagonal; });
        if (!any_general || candidates.empty()) {
            for (auto idx : candidates) basis_cols.push_back(SparseVec::unit(idx));
        } else {
            std::vector<SparseVec> sys_cols;
            std::size_t blocks = 0;
            for (const auto& gen : gens)
                if (!gen.diagonal) ++blocks;
            for (auto idx : candidates) {
                std::vector<SparseVec::Entry> e;
                std::size_t b = 0;
                for (const auto& gen : gens) {
                    if (gen.diagonal) continue;
                    SparseVec img = cx.lie_derivative(p, gen.d, gen.rho, SparseVec::unit(idx));
                    for (const auto& [r, c] : img.entries()) e.emplace_back(b * full + r, c);
                    ++b;
                }
                sys_cols.push_back(SparseVec::from_entries(std::move(e)));
            }
            Mat ker = kernel(Mat::from_columns(blocks * full, sys_cols));
            for (const auto& kc : ker.columns()) {
                SparseVec v;
                for (const auto& [i, c] : kc.entries()) v.push_back(candidates[i], c);
                basis_cols.push_back(std::move(v));
            }
        }
        total += basis_cols.size();
        if (total > cap)
            throw DimensionCapExceeded("relative cochain spaces exceed SUPERCOHO_MAX_DIM=" + std::to_string(cap) +
                                       " at degree " + std::to_string(p));
        cx.basis_.push_back(Mat::from_columns(full, basis_cols));
        cx.spans_.emplace_back(cx.basis_.back());
    }

    for (int p = 0; p < pmax; ++p) {
        const Mat& b = cx.basis_[static_cast<std::size_t>(p)];
        std::vector<SparseVec> cols_d;
        for (const auto& c : b.columns()) {
            SparseVec img = cx.apply_full_differential(p, c);
            auto coords = cx.spans_[static_cast<std::size_t>(p + 1)].coordinates(img);
            if (!coords)
                throw std::logic_error("build_relative_complex: differential leaves the invariant cochains at degree " +
                                       std::to_string(p));
            cols_d.push_back(std::move(*coords));
        }
        cx.d_.push_back(Mat::from_columns(cx.basis_[static_cast<std::size_t>(p + 1)].cols(), cols_d));
    }
    for (int p = 0; p + 1 < pmax; ++p)
        if (!(cx.d_[static_cast<std::size_t>(p + 1)] * cx.d_[static_cast<std::size_t>(p)]).is_zero())
            throw std::logic_error("build_relative_complex: d^2 != 0 at degree " + std::to_string(p));
    return cx;
}

// ---------------------------------------------------------------------------

CohomologyResult cohomology(const RelativeCochainComplex& cx) {
    CohomologyResult r;
    for (int p = 0; p < cx.pmax(); ++p) {
        const std::size_t n = cx.dim(p);
        Mat z = kernel(cx.differential(p));
        Mat b = p > 0 ? column_basis(cx.differential(p - 1)) : Mat(n, 0);
        RowEchelon e(n);
        for (const auto& c : b.columns()) e.insert(c);
        std::vector<SparseVec> reps;
        for (const auto& c : z.columns())
            if (e.insert(c)) reps.push_back(c);
        r.dims.push_back(reps.size());
        r.cocycle_dims.push_back(z.cols());
        r.representatives.push_back(Mat::from_columns(n, reps));
        r.boundaries.push_back(std::move(b));
        if (z.cols() != reps.size() + r.boundaries.back().cols())
            throw std::logic_error("cohomology: coboundaries are not cocycles at degree " + std::to_string(p));
    }
    return r;
}

std::optional<bool> euler_characteristic_check(const RelativeCochainComplex& cx, const CohomologyResult& h) {
    if (cx.dim(cx.pmax()) != 0) return std::nullopt;
    long lhs = 0, rhs = 0;
    for (int p = 0; p < cx.pmax(); ++p) {
        long s = (p & 1) ? -1 : 1;
        lhs += s * static_cast<long>(cx.dim(p));
        rhs += s * static_cast<long>(h.dims[static_cast<std::size_t>(p)]);
    }
    return lhs == rhs;
}

namespace {

void require_odd_abelian(const Subalgebra& v) {
    const auto& own = *v.own();
    if (!v.even_indices().empty()) throw std::invalid_argument("odd subalgebra has even elements");
    for (std::size_t i = 0; i < own.dim(); ++i)
        for (std::size_t j = i; j < own.dim(); ++j)
            if (!own.bracket(i, j).empty()) throw std::invalid_argument("odd subalgebra is not abelian");
}

Supermodule module_over(const Subalgebra& v, const Supermodule& m) {
    if (m.algebra() == v.own()) return m;
    return restrict_module(m, v);
}

}  // namespace

CohomologyResult absolute_odd_cohomology(const Subalgebra& v, const Supermodule& m, int pmax) {
    require_odd_abelian(v);
    return cohomology(build_relative_complex(v.own(), std::nullopt, module_over(v, m), pmax));
}

std::vector<std::size_t> odd_cohomology_invariants(const Subalgebra& v, const Subalgebra& acting, const Supermodule& m,
                                                   int pmax) {
    require_odd_abelian(v);
    if (acting.parent() != v.parent()) throw std::invalid_argument("odd_cohomology_invariants: different parents");
    if (m.algebra() != v.parent()) throw std::invalid_argument("odd_cohomology_invariants: module must be over the parent");
    auto cx = build_relative_complex(v.own(), std::nullopt, restrict_module(m, v), pmax);
    auto h = cohomology(cx);

    const std::size_t nc = cx.complement().size();
    struct Act {
        Mat d, rho;
    };
    std::vector<Act> acts;
    for (const auto& x : acting.inclusion().columns()) {
        Mat d(nc, nc);
        for (std::size_t j = 0; j < nc; ++j) {
            SparseVec br = v.parent()->bracket(x, v.embed(SparseVec::unit(cx.complement()[j])));
            auto loc = v.local_coordinates(br);
            if (!loc) throw std::invalid_argument("odd_cohomology_invariants: acting algebra does not normalize v");
            for (const auto& [k, c] : loc->entries()) {
                auto pos = std::find(cx.complement().begin(), cx.complement().end(), k) - cx.complement().begin();
                d.set(static_cast<std::size_t>(pos), j, -c);
            }
        }
        acts.push_back({std::move(d), m.action_of(x)});
    }

    std::vector<std::size_t> out;
    for (int p = 0; p < pmax; ++p) {
        Mat z = kernel(cx.differential(p));
        const Mat& b = h.boundaries[static_cast<std::size_t>(p)];
        const std::size_t n = cx.dim(p);
        Mat quotient = b.cols() ? kernel(b.transpose()).transpose() : Mat::identity(n);
        std::vector<SparseVec> sys;
        for (const auto& zc : z.columns()) {
            SparseVec full = cx.basis(p).apply(zc);
            std::vector<SparseVec::Entry> e;
            for (std::size_t t = 0; t < acts.size(); ++t) {
                SparseVec lz = cx.lie_derivative(p, acts[t].d, acts[t].rho, full);
                auto coords = cx.coordinates(p, lz);
                if (!coords) throw std::logic_error("odd_cohomology_invariants: action leaves the cochain space");
                for (const auto& [r, c] : quotient.apply(*coords).entries()) e.emplace_back(t * quotient.rows() + r, c);
            }
            sys.push_back(SparseVec::from_entries(std::move(e)));
        }
        Mat zsys = Mat::from_columns(std::max<std::size_t>(1, acts.size()) * quotient.rows(), sys);
        std::size_t zprime = kernel(zsys).cols();
        out.push_back(zprime - b.cols());
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<Mat> adjoint_action(const LieSuperalgebra& g, const std::vector<SparseVec>& acting,
                                const std::vector<SparseVec>& target_basis) {
    ColumnSpace target(Mat::from_columns(g.dim(), target_basis));
    std::vector<Mat> out;
    for (const auto& x : acting) {
        std::vector<SparseVec> cols;
        for (const auto& t : target_basis) {
            auto c = target.coordinates(g.bracket(x, t));
            if (!c) throw std::invalid_argument("adjoint_action: target space is not stable");
            cols.push_back(std::move(*c));
        }
        out.push_back(Mat::from_columns(target_basis.size(), cols));
    }
    return out;
}

std::vector<std::size_t> invariant_ring_dims(std::size_t dim, const std::vector<Mat>& lie_action,
                                             const FiniteGroupAction* group, int dmax) {
    for (const auto& a : lie_action)
        if (a.rows() != dim || a.cols() != dim) throw std::invalid_argument("invariant_ring_dims: action size mismatch");
    if (group && group->dim() != dim) throw std::invalid_argument("invariant_ring_dims: group acts on another space");
    std::vector<Mat> elements;
    if (group) elements = group->elements();

    std::vector<std::size_t> out;
    for (int d = 0; d <= dmax; ++d) {
        MonomialBasis mb(dim, 0, d);
        const std::size_t n = mb.size();

        // Lie part: x.theta^k = -sum_j A_kj theta^j, extended as a derivation.
        Mat lie_kernel = Mat::identity(n);
        if (!lie_action.empty()) {
            std::vector<SparseVec> cols;
            for (std::size_t i = 0; i < n; ++i) {
                std::vector<SparseVec::Entry> e;
                for (std::size_t t = 0; t < lie_action.size(); ++t) {
                    const Mat& a = lie_action[t];
                    const Monomial& mono = mb[i];
                    for (std::size_t r = 0; r < mono.size(); ++r) {
                        if (r > 0 && mono[r] == mono[r - 1]) continue;
                        auto der = derive(mono[r], mono, 0);
                        for (const auto& [j, c] : a.row(mono[r]).entries()) {
                            auto prod = mul_var(static_cast<std::uint16_t>(j), der->mono, 0);
                            e.emplace_back(t * n + index_or_throw(mb, prod->mono), -c * der->coef);
                        }
                    }
                }
                cols.push_back(SparseVec::from_entries(std::move(e)));
            }
            lie_kernel = kernel(Mat::from_columns(lie_action.size() * n, cols));
        }
        if (!group) {
            out.push_back(lie_kernel.cols());
            continue;
        }

        // Reynolds projector: average of theta^k -> sum_j g_kj theta^j over the group.
        std::vector<SparseVec> rcols;
        const Rat inv_order(1L, static_cast<long>(elements.size()));
        for (std::size_t i = 0; i < n; ++i) {
            std::map<Monomial, Rat> acc;
            for (const Mat& gm : elements) {
                std::map<Monomial, Rat> poly{{Monomial{}, Rat(1)}};
                const Monomial& mono = mb[i];
                for (std::size_t r = mono.size(); r-- > 0;) {
                    std::map<Monomial, Rat> next;
                    for (const auto& [j, c] : gm.row(mono[r]).entries())
                        for (const auto& [pm, pc] : poly) {
                            auto prod = mul_var(static_cast<std::uint16_t>(j), pm, 0);
                            next[prod->mono] += c * pc;
                        }
                    poly = std::move(next);
                }
                for (const auto& [pm, pc] : poly) acc[pm] += pc * inv_order;
            }
            std::vector<SparseVec::Entry> e;
            for (const auto& [pm, pc] : acc)
                if (!pc.is_zero()) e.emplace_back(index_or_throw(mb, pm), pc);
            rcols.push_back(SparseVec::from_entries(std::move(e)));
        }
        Mat reynolds = Mat::from_columns(n, rcols);
        Mat fixed = column_basis(reynolds);
        if (lie_action.empty()) {
            out.push_back(fixed.cols());
            continue;
        }
        std::vector<Vec> a, b;
        for (const auto& c : lie_kernel.columns()) a.push_back(c.to_dense(n));
        for (const auto& c : fixed.columns()) b.push_back(c.to_dense(n));
        out.push_back(intersect(a, b).size());
    }
    return out;
}

// ---------------------------------------------------------------------------

RestrictionResult restriction(const Subalgebra& a_g, const Subalgebra& h, const Subalgebra& a_h, const Supermodule& m,
                              int pmax) {
    const AlgebraPtr& g = a_g.parent();
    if (h.parent() != g) throw std::invalid_argument("restriction: h is not a subalgebra of g");
    if (a_h.parent() != h.own()) throw std::invalid_argument("restriction: a_h is not a subalgebra of h");
    if (m.algebra() != g) throw std::invalid_argument("restriction: module is over a different algebra");
    for (const auto& c : a_h.inclusion().columns())
        if (!a_g.contains(h.embed(c))) throw std::invalid_argument("restriction: a_h is not contained in a_g");

    auto cg = build_relative_complex(g, a_g, m, pmax);
    auto ch = build_relative_complex(h.own(), a_h, restrict_module(m, h), pmax);
    const std::size_t md = m.dim();

    // Pullback of each generator of the g-complex to the h-complex.
    const std::size_t ng = cg.complement().size(), nh = ch.complement().size();
    Mat pull(ng, nh);
    for (std::size_t l = 0; l < nh; ++l)
        for (const auto& [k, c] : cg.complement_coordinates(h.embed(SparseVec::unit(ch.complement()[l]))).entries())
            pull.set(k, l, c);

    RestrictionResult r;
    for (int p = 0; p <= pmax; ++p) {
        const MonomialBasis& mg = cg.monomials(p);
        const MonomialBasis& mh = ch.monomials(p);
        std::unordered_map<std::size_t, std::vector<std::pair<std::size_t, Rat>>> cache;
        auto expand = [&](std::size_t mono_idx) -> const std::vector<std::pair<std::size_t, Rat>>& {
            auto it = cache.find(mono_idx);
            if (it != cache.end()) return it->second;
            std::map<Monomial, Rat> poly{{Monomial{}, Rat(1)}};
            const Monomial& mono = mg[mono_idx];
            for (std::size_t t = mono.size(); t-- > 0;) {
                std::map<Monomial, Rat> next;
                for (const auto& [l, c] : pull.row(mono[t]).entries())
                    for (const auto& [pm, pc] : poly)
                        if (auto prod = mul_var(static_cast<std::uint16_t>(l), pm, ch.odd_generators()))
                            next[prod->mono] += c * pc * prod->coef;
                poly = std::move(next);
            }
            std::vector<std::pair<std::size_t, Rat>> out;
            for (const auto& [pm, pc] : poly)
                if (!pc.is_zero()) out.emplace_back(index_or_throw(mh, pm), pc);
            return cache.emplace(mono_idx, std::move(out)).first->second;
        };
        std::vector<SparseVec> cols;
        for (const auto& c : cg.basis(p).columns()) {
            Accumulator acc;
            for (const auto& [idx, coef] : c.entries())
                for (const auto& [hm, hc] : expand(idx / md)) acc.add(hm * md + idx % md, coef * hc);
            auto coords = ch.coordinates(p, acc.finish());
            if (!coords) throw std::logic_error("restriction: image cochain is not a_h-invariant");
            cols.push_back(std::move(*coords));
        }
        r.cochain_maps.push_back(Mat::from_columns(ch.dim(p), cols));
    }
    for (int p = 0; p < pmax; ++p) {
        const auto up = static_cast<std::size_t>(p);
        if (r.cochain_maps[up + 1] * cg.differential(p) != ch.differential(p) * r.cochain_maps[up]) r.chain_map_ok = false;
    }
    if (!r.chain_map_ok) throw std::logic_error("restriction: cochain map does not commute with the differentials");

    auto hg = cohomology(cg), hh = cohomology(ch);
    r.dims_g = hg.dims;
    r.dims_h = hh.dims;
    for (int p = 0; p < pmax; ++p) {
        const auto up = static_cast<std::size_t>(p);
        const Mat& phi = r.cochain_maps[up];
        Mat img = phi * hg.representatives[up];
        const Mat& bh = hh.boundaries[up];
        // coboundaries map to coboundaries
        if (hg.boundaries[up].cols()) {
            ColumnSpace bspan(bh);
            for (const auto& c : (phi * hg.boundaries[up]).columns())
                if (!bspan.contains(c)) throw std::logic_error("restriction: induced map is not well defined");
        }
        Mat both = Mat::hstack(img, bh);
        std::size_t rk = rank(both);
        bool inj = rk - bh.cols() == img.cols();
        r.injective.push_back(inj);
        std::optional<SparseVec> witness;
        if (!inj) {
            for (const auto& kc : kernel(both).columns()) {
                SparseVec head;
                for (const auto& [i, c] : kc.entries())
                    if (i < img.cols()) head.push_back(i, c);
                if (!head.empty()) {
                    witness = hg.representatives[up].apply(head);
                    break;
                }
            }
        }
        r.kernel_witness.push_back(std::move(witness));
        ColumnSpace target(Mat::hstack(hh.representatives[up], bh));
        std::vector<SparseVec> induced;
        for (const auto& c : img.columns()) {
            SparseVec coords = target.coordinates_or_throw(c);
            SparseVec head;
            for (const auto& [i, x] : coords.entries())
                if (i < hh.representatives[up].cols()) head.push_back(i, x);
            induced.push_back(std::move(head));
        }
        r.induced_maps.push_back(Mat::from_columns(hh.representatives[up].cols(), induced));
    }
    return r;
}

}  // namespace supercoho

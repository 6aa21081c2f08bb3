#pragma once

#include "supercoho/representations.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

namespace supercoho {

/// Raised when a cochain space would exceed SUPERCOHO_MAX_DIM.
struct DimensionCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Cap on the total cochain-space dimension (env SUPERCOHO_MAX_DIM, default 20000).
std::size_t max_cochain_dim();

/// Monomial in the cochain generators theta^k: sorted local variable
/// indices. Variables below `odd_count` anticommute and appear at most once;
/// the remaining ones commute.
using Monomial = std::vector<std::uint16_t>;

/// Degree-p monomial basis in `vars` generators, the first `odd_count` of
/// which anticommute.
class MonomialBasis {
public:
    MonomialBasis(std::size_t vars, std::size_t odd_count, int degree);

    std::size_t size() const { return monomials_.size(); }
    const Monomial& operator[](std::size_t i) const { return monomials_[i]; }
    std::optional<std::size_t> index_of(const Monomial& m) const;

    /// Number of monomials without enumerating them.
    static std::size_t count(std::size_t vars, std::size_t odd_count, int degree);

private:
    std::vector<Monomial> monomials_;
    std::map<Monomial, std::size_t> index_;
};

/// Hom_a(Lambda_s^p(g/a), M) for p = 0..pmax with its differential.
/// Cochains are polynomials in generators theta^k dual to a complement of
/// a (parity |b_k|+1) tensored with M; the full coordinate of
/// (monomial i, module vector v) is i * dim M + v.
class RelativeCochainComplex {
public:
    const AlgebraPtr& algebra() const { return g_; }
    const std::optional<Subalgebra>& subalgebra() const { return a_; }
    const Supermodule& module() const { return *m_; }
    int pmax() const { return pmax_; }

    std::size_t dim(int p) const { return basis_.at(static_cast<std::size_t>(p)).cols(); }
    std::vector<std::size_t> dims() const;
    std::size_t full_dim(int p) const { return basis_.at(static_cast<std::size_t>(p)).rows(); }

    /// Columns: basis cochains in full coordinates.
    const Mat& basis(int p) const { return basis_.at(static_cast<std::size_t>(p)); }
    /// d^p : C^p -> C^{p+1} in the chosen bases, 0 <= p < pmax.
    const Mat& differential(int p) const { return d_.at(static_cast<std::size_t>(p)); }
    /// d^p in full coordinates (rows: full C^{p+1}).
    SparseVec apply_full_differential(int p, const SparseVec& cochain) const;

    /// g basis indices of the complement, in generator order.
    const std::vector<std::size_t>& complement() const { return complement_; }
    std::size_t odd_generators() const { return odd_count_; }
    const MonomialBasis& monomials(int p) const { return monomials_.at(static_cast<std::size_t>(p)); }
    /// theta^k(x) for every generator k: coordinates of x along the complement.
    SparseVec complement_coordinates(const SparseVec& x) const;

    /// Lie derivative of a full-coordinate cochain of degree p by an even x in g
    /// that normalizes the complement modulo a.
    SparseVec lie_derivative(int p, const SparseVec& x, const SparseVec& cochain) const;
    /// Same, given the action on generators (x.theta^k = sum_j D_kj theta^j) and on M.
    SparseVec lie_derivative(int p, const Mat& generator_action, const Mat& module_action,
                             const SparseVec& cochain) const;

    /// Coordinates of a full-coordinate cochain in the chosen basis of C^p, if invariant.
    std::optional<SparseVec> coordinates(int p, const SparseVec& full) const;

    friend RelativeCochainComplex build_relative_complex(const AlgebraPtr&, const std::optional<Subalgebra>&,
                                                         const Supermodule&, int);

private:
    RelativeCochainComplex() = default;

    AlgebraPtr g_;
    std::optional<Subalgebra> a_;
    std::shared_ptr<const Supermodule> m_;
    int pmax_ = 0;
    std::vector<std::size_t> complement_;
    std::size_t odd_count_ = 0;
    Mat adapted_inverse_{0, 0};
    std::size_t a_dim_ = 0;
    // Psi^k: quadratic part for each generator, as (monomial, coefficient).
    std::vector<std::vector<std::pair<Monomial, Rat>>> psi_;
    std::vector<MonomialBasis> monomials_;
    std::vector<Mat> basis_;
    std::vector<Mat> d_;
    std::vector<ColumnSpace> spans_;
};

/// Relative complex for (g, a) with coefficients in M (a g-module); `a`
/// must be an even subalgebra of g, or absent for absolute cohomology.
/// Verifies d^2 = 0 and that the differential preserves a-invariance.
RelativeCochainComplex build_relative_complex(const AlgebraPtr& g, const std::optional<Subalgebra>& a,
                                              const Supermodule& m, int pmax);

struct CohomologyResult {
    std::vector<std::size_t> dims;            ///< degrees 0..pmax-1
    std::vector<Mat> representatives;         ///< columns in C^p coordinates
    std::vector<Mat> boundaries;              ///< basis of im d^{p-1}, columns in C^p coordinates
    std::vector<std::size_t> cocycle_dims;    ///< dim ker d^p
};

CohomologyResult cohomology(const RelativeCochainComplex& cx);

/// sum (-1)^p dim C^p == sum (-1)^p dim H^p, evaluated only when C^{pmax} = 0.
std::optional<bool> euler_characteristic_check(const RelativeCochainComplex& cx, const CohomologyResult& h);

/// Koszul complex S(v*) (x) M for a purely odd abelian subalgebra v.
CohomologyResult absolute_odd_cohomology(const Subalgebra& v, const Supermodule& m, int pmax);

/// Dimensions of H^p(v, M)^{acting} for p < pmax, where `acting` (even,
/// same parent) normalizes v. Invariants are taken on cohomology classes.
std::vector<std::size_t> odd_cohomology_invariants(const Subalgebra& v, const Subalgebra& acting, const Supermodule& m,
                                                   int pmax);

/// Matrices of ad(x)|_V in the given basis of V, one per x.
std::vector<Mat> adjoint_action(const LieSuperalgebra& g, const std::vector<SparseVec>& acting,
                                const std::vector<SparseVec>& target_basis);

/// dim of {f in S^d(V*) : killed by every Lie matrix, fixed by the group}, d = 0..dmax.
std::vector<std::size_t> invariant_ring_dims(std::size_t dim, const std::vector<Mat>& lie_action,
                                             const FiniteGroupAction* group, int dmax);

struct RestrictionResult {
    std::vector<Mat> cochain_maps;                     ///< p = 0..pmax
    std::vector<Mat> induced_maps;                     ///< p = 0..pmax-1, H(h) coords x H(g) coords
    std::vector<bool> injective;                       ///< p = 0..pmax-1
    std::vector<std::optional<SparseVec>> kernel_witness;  ///< cocycle of C^p(g) mapping to a coboundary
    std::vector<std::size_t> dims_g, dims_h;
    bool chain_map_ok = true;
};

/// Restriction H(g, a_g; M) -> H(h, a_h; M). `h` and `a_g` are subalgebras of
/// M's algebra; `a_h` is a subalgebra of h.own() with a_h ⊆ a_g.
RestrictionResult restriction(const Subalgebra& a_g, const Subalgebra& h, const Subalgebra& a_h, const Supermodule& m,
                              int pmax);

}  // namespace supercoho

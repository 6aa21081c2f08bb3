#pragma once

#include "supercoho/linalg.hpp"
#include "supercoho/matrix.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace supercoho {

enum class Parity : unsigned char { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return static_cast<Parity>(static_cast<unsigned>(a) ^ static_cast<unsigned>(b));
}
inline int bit(Parity p) { return static_cast<int>(p); }
/// (-1)^{|a||b|}
inline int koszul(Parity a, Parity b) { return (bit(a) & bit(b)) ? -1 : 1; }

struct BasisElement {
    std::string label;
    Parity parity = Parity::Even;
    std::optional<int> zdegree;

    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

/// Ordered basis with parities and optional Z-degrees.
class SuperSpace {
public:
    SuperSpace() = default;
    explicit SuperSpace(std::vector<BasisElement> basis);

    std::size_t dim() const { return basis_.size(); }
    const BasisElement& operator[](std::size_t i) const { return basis_[i]; }
    const std::vector<BasisElement>& elements() const { return basis_; }
    Parity parity(std::size_t i) const { return basis_[i].parity; }
    std::optional<std::size_t> index_of(const std::string& label) const;
    std::size_t index_or_throw(const std::string& label) const;
    std::size_t even_dim() const;
    std::size_t odd_dim() const { return dim() - even_dim(); }
    bool z_graded() const;

    /// Parity of a vector, or nullopt if it mixes parities (zero vector -> Even).
    std::optional<Parity> parity_of(const SparseVec& v) const;
    std::optional<int> zdegree_of(const SparseVec& v) const;

    friend bool operator==(const SuperSpace&, const SuperSpace&) = default;

private:
    std::vector<BasisElement> basis_;
    std::map<std::string, std::size_t> index_;
};

enum class Family { Custom, GL, W, S };

struct AlgebraTag {
    Family family = Family::Custom;
    int m = 0;
    int n = 0;

    std::string str() const;
    friend bool operator==(const AlgebraTag&, const AlgebraTag&) = default;
};

/// Lie superalgebra with exact structure constants. Only brackets
/// [b_i, b_j] with i <= j are stored; the rest follow from super
/// skew-symmetry.
class LieSuperalgebra {
public:
    using BracketTable = std::map<std::pair<std::size_t, std::size_t>, SparseVec>;

    /// `brackets` holds [b_i, b_j] for i <= j (missing entries are zero).
    /// Checks parity additivity and Z-degree additivity.
    LieSuperalgebra(SuperSpace space, BracketTable brackets, std::vector<std::size_t> cartan,
                    AlgebraTag tag = {}, std::string name = {});

    /// Builds from a function computing every bracket; verifies super
    /// skew-symmetry over all ordered pairs before storing the upper half.
    template <class F>
    static LieSuperalgebra from_bracket_function(SuperSpace space, F&& f, std::vector<std::size_t> cartan,
                                                 AlgebraTag tag = {}, std::string name = {});

    const SuperSpace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    Parity parity(std::size_t i) const { return space_.parity(i); }
    const std::vector<std::size_t>& cartan() const { return cartan_; }
    const AlgebraTag& tag() const { return tag_; }
    const std::string& name() const { return name_; }
    const BracketTable& table() const { return brackets_; }

    SparseVec bracket(std::size_t i, std::size_t j) const;
    SparseVec bracket(const SparseVec& x, const SparseVec& y) const;

    /// Matrix of ad(x) in the standard basis.
    Mat ad(const SparseVec& x) const;

    /// Basis indices of a given parity / Z-degree.
    std::vector<std::size_t> indices_of_parity(Parity p) const;
    std::vector<std::size_t> indices_of_degree(int d) const;

private:
    SuperSpace space_;
    BracketTable brackets_;
    std::vector<std::size_t> cartan_;
    AlgebraTag tag_;
    std::string name_;
};

using AlgebraPtr = std::shared_ptr<const LieSuperalgebra>;

/// First violation found by an identity check, if any.
struct CheckReport {
    bool ok = true;
    std::size_t checked = 0;
    std::string failure;
};

CheckReport check_super_skew(const LieSuperalgebra& g);
CheckReport check_parity(const LieSuperalgebra& g);
/// Exhaustive over all basis triples when dim^3 is within `exhaustive_limit`,
/// otherwise `samples` triples drawn deterministically from `seed`.
CheckReport check_jacobi(const LieSuperalgebra& g, std::size_t exhaustive_limit = 64 * 64 * 64,
                         std::size_t samples = 20000, std::uint64_t seed = 0);
CheckReport check_z_grading(const LieSuperalgebra& g);

/// Sub-superalgebra spanned by homogeneous vectors of a parent.
class Subalgebra {
public:
    /// Columns of `inclusion` are the sub-basis in parent coordinates.
    /// Throws if they are dependent, inhomogeneous, or not closed under the bracket.
    Subalgebra(AlgebraPtr parent, Mat inclusion, std::vector<std::string> labels = {}, std::string name = {});

    static Subalgebra from_vectors(AlgebraPtr parent, const std::vector<SparseVec>& vectors,
                                   std::vector<std::string> labels = {}, std::string name = {});
    /// Spanned by a subset of the parent's basis elements.
    static Subalgebra from_basis_indices(AlgebraPtr parent, const std::vector<std::size_t>& idx,
                                         std::string name = {});

    const AlgebraPtr& parent() const { return parent_; }
    const AlgebraPtr& own() const { return own_; }
    const Mat& inclusion() const { return inclusion_; }
    std::size_t dim() const { return inclusion_.cols(); }

    /// Parent coordinates of a vector given in sub-basis coordinates.
    SparseVec embed(const SparseVec& local) const { return inclusion_.apply(local); }
    std::optional<SparseVec> local_coordinates(const SparseVec& parent_vec) const;
    bool contains(const SparseVec& parent_vec) const { return span_.contains(parent_vec); }

    /// Indices (in the own basis) of odd / even elements.
    std::vector<std::size_t> odd_indices() const { return own_->indices_of_parity(Parity::Odd); }
    std::vector<std::size_t> even_indices() const { return own_->indices_of_parity(Parity::Even); }

    /// Parent-coordinate vectors of the odd part, in own-basis order.
    std::vector<SparseVec> odd_vectors() const;

    /// True when every element of `other` (same parent) lies in this one.
    bool contains_subalgebra(const Subalgebra& other) const;

private:
    AlgebraPtr parent_;
    Mat inclusion_;
    ColumnSpace span_;
    AlgebraPtr own_;
};

/// Finite group acting linearly on the odd part of a subalgebra
/// (coordinates in that subalgebra's odd basis, own-basis order).
class FiniteGroupAction {
public:
    FiniteGroupAction(std::size_t dim, std::vector<Mat> generators, std::size_t declared_order);

    std::size_t dim() const { return dim_; }
    const std::vector<Mat>& generators() const { return generators_; }
    std::size_t order() const { return order_; }

    /// All group elements by closure, identity first. Throws if the
    /// closure exceeds `limit` or disagrees with the declared order.
    std::vector<Mat> elements(std::size_t limit = 100000) const;

private:
    std::size_t dim_;
    std::vector<Mat> generators_;
    std::size_t order_;
};

// Constructions.

/// gl(m|n) on matrix units E_{ij}, Z-graded -1/0/+1 by block.
AlgebraPtr build_gl(int m, int n);
/// W(n): superderivations xi_I d_i of the Grassmann algebra on n generators.
AlgebraPtr build_W(int n);
/// S(n) as the kernel of the divergence inside W(n).
Subalgebra build_S(int n);
Subalgebra build_S(const AlgebraPtr& w);

/// Label helpers for W(n) basis elements.
std::string witt_label(unsigned mask, int i, int n);
/// (subset bitmask I, derivative index i) of the W(n) basis element xi_I d_i.
std::pair<unsigned, int> witt_element(const LieSuperalgebra& w, std::size_t k);
/// Divergence sum_i d_i(f_i) of a W(n) element, as a vector in the
/// Grassmann algebra basis (subset bitmasks).
SparseVec witt_divergence(const LieSuperalgebra& w, const SparseVec& x);

/// Even part g_0 (for W(n): the Z-degree 0 part gl(n)).
Subalgebra even_subalgebra(const AlgebraPtr& g);
/// Sum of the Z-graded pieces with the given degrees.
Subalgebra graded_subalgebra(const AlgebraPtr& g, const std::vector<int>& degrees, std::string name = {});

struct UnsupportedShape : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// f = f_0 + f_1 for gl(r|r): f_1 spanned by E_{i,i+r}, E_{i+r,i};
/// f_0 the Lie algebra of the normalizer N, i.e. the diagonal torus.
Subalgebra detecting_f(const AlgebraPtr& g);
/// f-bar: same odd part as f, even part Lie(H) = span{E_ii + E_{r+i,r+i}}.
Subalgebra detecting_fbar(const AlgebraPtr& g);

struct DetectingE {
    Subalgebra subalgebra;
    FiniteGroupAction weyl;  ///< signed permutations of the e_1 coordinates
};
/// e = e_0 + e_1 for gl(r|r) with e_1 spanned by E_{i,i+r}+E_{i+r,i}.
DetectingE detecting_e(const AlgebraPtr& g);

/// f for W(n): odd part {d_1, xi_1 xi_i d_i}, even part the diagonal torus.
Subalgebra detecting_f_W(const AlgebraPtr& g);
/// Sigma_{n-1} permuting the indices 2..n, acting on the odd part of detecting_f_W.
FiniteGroupAction witt_normalizer_group(const Subalgebra& f);

// ---------------------------------------------------------------------------

template <class F>
LieSuperalgebra LieSuperalgebra::from_bracket_function(SuperSpace space, F&& f, std::vector<std::size_t> cartan,
                                                       AlgebraTag tag, std::string name) {
    const std::size_t n = space.dim();
    BracketTable table;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            SparseVec ij = f(i, j);
            if (i != j) {
                SparseVec ji = f(j, i);
                SparseVec expect = ji.scaled(Rat(-koszul(space.parity(i), space.parity(j))));
                if (ij != expect)
                    throw std::logic_error("bracket function violates super skew-symmetry at (" + space[i].label +
                                           ", " + space[j].label + ")");
            } else if (space.parity(i) == Parity::Even && !ij.empty()) {
                throw std::logic_error("bracket function: [x,x] != 0 for even " + space[i].label);
            }
            if (!ij.empty()) table.emplace(std::make_pair(i, j), std::move(ij));
        }
    return LieSuperalgebra(std::move(space), std::move(table), std::move(cartan), tag, std::move(name));
}

}  // namespace supercoho

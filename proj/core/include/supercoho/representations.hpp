#pragma once

#include "supercoho/superalgebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace supercoho {

/// Coordinates of a weight against an algebra's Cartan list.
struct Weight {
    std::vector<Rat> coords;

    std::size_t size() const { return coords.size(); }
    std::string str() const;
    static Weight parse(const std::string& csv);

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;
    Weight operator-() const;
    friend bool operator==(const Weight&, const Weight&) = default;
};

/// Finite-dimensional supermodule: one action matrix per algebra basis element.
class Supermodule {
public:
    /// Verifies parity and bracket compatibility (and the stated weights, if
    /// any) unless `verify` is false. When no weights are given they are read
    /// off the Cartan action whenever it is diagonal.
    Supermodule(AlgebraPtr algebra, SuperSpace space, std::vector<Mat> action,
                std::optional<std::vector<Weight>> weights = std::nullopt, bool verify = true);

    const AlgebraPtr& algebra() const { return algebra_; }
    const SuperSpace& space() const { return space_; }
    std::size_t dim() const { return space_.dim(); }
    const Mat& action(std::size_t basis_index) const { return action_[basis_index]; }
    const std::vector<Mat>& actions() const { return action_; }
    Mat action_of(const SparseVec& x) const;
    const std::optional<std::vector<Weight>>& weights() const { return weights_; }

private:
    AlgebraPtr algebra_;
    SuperSpace space_;
    std::vector<Mat> action_;
    std::optional<std::vector<Weight>> weights_;
};

CheckReport check_bracket_compatibility(const Supermodule& m);
CheckReport check_module_parity(const Supermodule& m);
CheckReport check_weights(const Supermodule& m);

struct NotACharacter : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

Supermodule trivial_module(const AlgebraPtr& g);
/// Defining module: C^{m|n} for gl(m|n), the Grassmann algebra for W(n).
Supermodule natural_module(const AlgebraPtr& g);
Supermodule dual_module(const Supermodule& m);
Supermodule tensor_module(const Supermodule& m, const Supermodule& n);
Supermodule direct_sum(const Supermodule& m, const Supermodule& n);
/// Hom(M, N) = M* (x) N.
Supermodule hom_module(const Supermodule& m, const Supermodule& n);
/// The module with every basis vector's parity flipped.
Supermodule parity_shift(const Supermodule& m);

/// One-dimensional g_0-module on which the Cartan acts by `lambda` and all
/// other basis elements act by zero. Throws NotACharacter when lambda does
/// not vanish on [g_0, g_0].
Supermodule character_module(const Subalgebra& g0, const Weight& lambda);
Supermodule character_module(const AlgebraPtr& g, const Weight& lambda);

/// One-dimensional g-module (odd elements act by zero), e.g. weights (k|-k)
/// for gl(1|1). Throws NotACharacter when lambda does not kill [g, g].
Supermodule one_dim_module(const AlgebraPtr& g, const Weight& lambda, Parity parity = Parity::Even);

/// Kac module U(g) (x)_{U(g_0 + g_1)} L0 on Lambda(g_{-1}) (x) L0. `l0` must
/// be a module over an algebra whose labels are exactly the degree-0 labels
/// of g (as produced by even_subalgebra).
Supermodule kac_module(const AlgebraPtr& g, const Supermodule& l0);
/// Dual Kac module Hom_{U(g_0 + g_{-1})}(U(g), L0), realized as the dual of
/// the module induced from L0* with g_1 acting freely; lives on Lambda(g_1)* (x) L0.
Supermodule dual_kac_module(const AlgebraPtr& g, const Supermodule& l0);
/// Module induced from L0 with the degree `free_degree` part (+1 or -1) acting freely.
Supermodule induced_module(const AlgebraPtr& g, const Supermodule& l0, int free_degree);

Supermodule restrict_module(const Supermodule& m, const Subalgebra& h);

/// Dimension of the even (parity-preserving) endomorphisms commuting with
/// the action, returned as a basis of matrices.
std::vector<Mat> endomorphisms(const Supermodule& m);
/// True when End(M) is local with residue field Q (every endomorphism is a
/// scalar plus an element of a nilpotent ideal). Sufficient for indecomposability.
bool is_indecomposable(const Supermodule& m);

}  // namespace supercoho

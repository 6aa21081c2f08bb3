#pragma once

#include "supercoho/representations.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace supercoho {

/// Point of an odd subspace, in the basis h.odd_vectors() of some subalgebra h.
struct OddPoint {
    std::vector<Rat> coords;

    bool is_zero() const;
    std::string str() const;
    OddPoint scaled(const Rat& c) const;
    friend bool operator==(const OddPoint&, const OddPoint&) = default;
};

enum class ProjectivityMethod { ZeroPoint, CliffordInvertible, KoszulExactness, MixedSplit };
std::string to_string(ProjectivityMethod m);

struct RankReport {
    OddPoint point;
    SparseVec self_bracket;  ///< [x,x] in parent coordinates
    bool projective = false;
    ProjectivityMethod method = ProjectivityMethod::ZeroPoint;
};

/// [x,x] acts on the generalized 0-eigenspace of itself by a nonzero nilpotent.
struct UndeterminedProjectivity : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Projectivity of M over U(<x>) for x = sum_i coords_i * h.odd_vectors()[i].
/// M may be a module over h's parent or over h itself.
RankReport is_projective_over(const Supermodule& m, const OddPoint& x, const Subalgebra& h);

struct ProbeResult {
    std::vector<RankReport> reports;
    std::vector<bool> members;  ///< per probed point; the origin counts as a member of a nonzero module
    bool origin_member = false;
};

/// Rank-variety membership at each point; checks that membership is unchanged under x -> 3x.
ProbeResult rank_variety_probe(const Supermodule& m, const Subalgebra& h, const std::vector<OddPoint>& points);

/// Deterministic probe sets in a `dim`-dimensional odd space:
/// "axes", "grid" (axes plus every two-axis point with coordinates in {+-1, +-2}),
/// or "random:<seed>:<count>" (small rationals from mt19937_64).
std::vector<OddPoint> probe_points(std::size_t dim, const std::string& spec);
std::vector<OddPoint> random_points(std::size_t dim, std::uint64_t seed, std::size_t count);

struct SupportSample {
    OddPoint point;
    std::vector<Rat> invariant_coords;  ///< elementary symmetric functions of the squared coordinates
    bool member = false;
};

struct SupportDescription {
    std::size_t ambient_dim = 0;
    std::vector<SupportSample> samples;
    std::vector<SupportSample> members() const;
    std::vector<bool> axes_profile;
    bool orbit_constant = true;  ///< membership agreed on every W-orbit of a sample
};

/// Support variety of M over gl(r|r) through its rank variety on e_1 modulo W(e):
/// probes axes, the two-axis grid, and `random_count` seeded points.
SupportDescription support_variety(const Supermodule& m, std::uint64_t seed = 0, std::size_t random_count = 8);

/// Elementary symmetric polynomials e_1..e_r of x_1^2..x_r^2.
std::vector<Rat> hyperoctahedral_invariants(const OddPoint& x);

struct TensorCheck {
    bool ok = true;
    std::size_t probed = 0;
    std::size_t members = 0;  ///< points in the variety of M (x) N
    std::optional<OddPoint> counterexample;
};

/// membership(M (x) N, x) == membership(M, x) && membership(N, x) at every point.
TensorCheck tensor_property_check(const Supermodule& m, const Supermodule& n, const Subalgebra& h,
                                  const std::vector<OddPoint>& points);

struct AtypicalityReport {
    Weight lambda;
    Weight rho;
    std::vector<std::pair<int, int>> edges;  ///< 1-based (i, j) with (lambda + rho, eps_i - delta_j) = 0
    std::size_t atypicality = 0;
};

/// rho = 1/2(sum of even positive roots - sum of odd positive roots) for the standard Borel of gl(m|n).
Weight rho_gl(int m, int n);
AtypicalityReport atypicality(const Weight& lambda, int m, int n);

/// True iff H^1(g, g_0; S* (x) M) = 0 for the one-dimensional module S of every given weight.
bool projectivity_in_category(const Supermodule& m, const std::vector<Weight>& test_weights);

}  // namespace supercoho

#include "doctest.h"

#include "supercoho/varieties.hpp"

#include <random>

using namespace supercoho;

namespace {

Weight wt(std::initializer_list<long> xs) {
    Weight w;
    for (long x : xs) w.coords.emplace_back(x);
    return w;
}

OddPoint pt(std::initializer_list<long> xs) {
    OddPoint p;
    for (long x : xs) p.coords.emplace_back(x);
    return p;
}

// (a, b) for the form with (eps_i, eps_j) = delta_ij, (delta_i, delta_j) = -delta_ij.
Rat form(const std::vector<Rat>& a, const std::vector<Rat>& b, int m) {
    Rat s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (static_cast<int>(i) < m ? Rat(1) : Rat(-1)) * a[i] * b[i];
    return s;
}

// Maximum number of independent, mutually orthogonal, positive isotropic roots orthogonal to lambda + rho.
std::size_t atypicality_oracle(const Weight& lambda, int m, int n) {
    Weight shifted = lambda + rho_gl(m, n);
    std::vector<std::vector<Rat>> roots;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<Rat> a(static_cast<std::size_t>(m + n));
            a[static_cast<std::size_t>(i)] = Rat(1);
            a[static_cast<std::size_t>(m + j)] = Rat(-1);
            if (form(a, a, m).is_zero() && form(shifted.coords, a, m).is_zero()) roots.push_back(a);
        }
    std::size_t best = 0;
    for (unsigned mask = 0; mask < (1u << roots.size()); ++mask) {
        std::vector<Vec> chosen;
        bool ok = true;
        for (std::size_t s = 0; s < roots.size() && ok; ++s) {
            if (!(mask & (1u << s))) continue;
            for (const auto& c : chosen) ok = ok && form(c, roots[s], m).is_zero();
            chosen.push_back(roots[s]);
        }
        if (ok && rank(Mat::from_dense(chosen)) == chosen.size()) best = std::max(best, chosen.size());
    }
    return best;
}

Supermodule dual_kac_11(const AlgebraPtr& g, long k) { return dual_kac_module(g, character_module(g, wt({-k, k}))); }

}  // namespace

TEST_CASE("atypicality examples") {
    CHECK(rho_gl(1, 1) == Weight{{Rat(-1, 2), Rat(1, 2)}});
    CHECK(rho_gl(2, 2) == Weight{{Rat(-1, 2), Rat(-3, 2), Rat(3, 2), Rat(1, 2)}});
    CHECK(atypicality(wt({0, 0}), 1, 1).atypicality == 1);
    CHECK(atypicality(wt({1, 0}), 1, 1).atypicality == 0);
    auto r = atypicality(wt({0, 0, 0, 0}), 2, 2);
    CHECK(r.atypicality == 2);
    CHECK(r.edges == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});
    CHECK_THROWS(atypicality(wt({0, 0, 0}), 2, 2));
}

TEST_CASE("atypicality agrees with the exhaustive oracle") {
    std::mt19937_64 rng(7);
    for (int m = 1; m <= 4; ++m)
        for (int n = 1; n <= 4; ++n)
            for (int trial = 0; trial < 25; ++trial) {
                Weight lambda;
                // small half-integers make coincidences frequent
                for (int i = 0; i < m + n; ++i) lambda.coords.emplace_back(static_cast<long>(rng() % 7) - 3, 1 + static_cast<long>(rng() % 2));
                auto rep = atypicality(lambda, m, n);
                CHECK(rep.atypicality == atypicality_oracle(lambda, m, n));
                CHECK(rep.atypicality <= static_cast<std::size_t>(std::min(m, n)));
            }
}

TEST_CASE("projectivity decision tree") {
    auto g = build_gl(1, 1);
    auto e = detecting_e(g).subalgebra;
    auto fbar = detecting_fbar(g);

    auto triv = is_projective_over(trivial_module(g), pt({1}), e);
    CHECK_FALSE(triv.projective);
    CHECK(triv.method == ProjectivityMethod::KoszulExactness);

    for (long k : {0L, 1L, 3L}) {
        auto km = dual_kac_11(g, k);
        // gl(1|1): lambda = (-k | k) satisfies (lambda | -lambda) with lambda = -k
        auto r = is_projective_over(km, pt({1}), e);
        CHECK(r.projective);
        CHECK(r.method == ProjectivityMethod::KoszulExactness);
        // f-bar: its odd basis is E12, E21; E21 acts by zero on this realization, E12 has rank one
        const auto odd = fbar.odd_vectors();
        for (std::size_t i = 0; i < odd.size(); ++i) {
            OddPoint x{std::vector<Rat>(odd.size())};
            x.coords[i] = Rat(1);
            auto rep = is_projective_over(km, x, fbar);
            CHECK(rep.projective == (km.dim() == 2 * rank(km.action_of(odd[i]))));
        }
    }

    auto zero = is_projective_over(trivial_module(g), pt({0}), e);
    CHECK(zero.method == ProjectivityMethod::ZeroPoint);
    CHECK_THROWS(is_projective_over(trivial_module(g), pt({1, 2, 3}), e));

    // x = E12 + E21 on the natural module: [x,x] = 2(E11+E22) acts invertibly
    auto nat = is_projective_over(natural_module(g), pt({1}), e);
    CHECK(nat.projective);
    CHECK(nat.method == ProjectivityMethod::CliffordInvertible);
    // trivial (+) natural splits into a 0-block and an invertible block
    auto mixed = is_projective_over(direct_sum(trivial_module(g), natural_module(g)), pt({1}), e);
    CHECK(mixed.method == ProjectivityMethod::MixedSplit);
    CHECK_FALSE(mixed.projective);
}

TEST_CASE("D^2 = E/2 and the refused case") {
    auto g = build_gl(2, 2);
    auto v = natural_module(g);
    auto fbar = detecting_fbar(g);
    for (const auto& p : probe_points(fbar.odd_indices().size(), "grid")) CHECK_NOTHROW(is_projective_over(v, p, fbar));

    // Kac module induced from a g_0-module where E11 acts by a Jordan block:
    // the centre E11 + E22 = [x,x]/2 acts nilpotently but not by zero.
    auto g11 = build_gl(1, 1);
    auto g0 = even_subalgebra(g11);
    const auto& own = g0.own();
    std::vector<Mat> l0_action(own->dim(), Mat(2, 2));
    l0_action[own->space().index_or_throw("E11")].set(0, 1, Rat(1));
    Supermodule l0(own, SuperSpace({{"u", Parity::Even, {}}, {"w", Parity::Even, {}}}), l0_action);
    auto k = kac_module(g11, l0);
    auto e = detecting_e(g11).subalgebra;
    CHECK_THROWS_AS(is_projective_over(k, pt({1}), e), UndeterminedProjectivity);
}

TEST_CASE("rank variety probes") {
    auto g = build_gl(2, 2);
    auto fbar = detecting_fbar(g);
    auto points = probe_points(fbar.odd_indices().size(), "random:3:10");
    CHECK(points.size() == 10);
    CHECK(points == probe_points(fbar.odd_indices().size(), "random:3:10"));
    CHECK_THROWS(probe_points(4, "spiral"));
    CHECK_THROWS(probe_points(4, "random:x"));

    // trivial module: every nonzero point with [x,x] = 0 is a member
    auto triv = rank_variety_probe(trivial_module(g), fbar, probe_points(4, "grid"));
    for (std::size_t i = 0; i < triv.reports.size(); ++i)
        if (triv.reports[i].self_bracket.empty()) CHECK(triv.members[i]);

    auto g11 = build_gl(1, 1);
    auto e = detecting_e(g11).subalgebra;
    auto km = restrict_module(dual_kac_11(g11, 1), e);
    auto probe = rank_variety_probe(km, e, {pt({0}), pt({1}), pt({-2}), pt({5})});
    CHECK(probe.members == std::vector<bool>{true, false, false, false});
}

TEST_CASE("support varieties through e modulo W") {
    auto g = build_gl(2, 2);
    auto triv = support_variety(trivial_module(g), 1, 6);
    CHECK(triv.ambient_dim == 2);
    CHECK(triv.orbit_constant);
    for (const auto& s : triv.samples) CHECK(s.member);
    CHECK(triv.axes_profile == std::vector<bool>{true, true});

    auto v = natural_module(g);
    auto sv = support_variety(tensor_module(v, dual_module(v)), 2, 6);
    CHECK(sv.orbit_constant);

    auto g11 = build_gl(1, 1);
    auto km = support_variety(dual_kac_11(g11, 1), 0, 4);
    CHECK(km.members().size() == 1);
    CHECK(km.members().front().point.is_zero());

    CHECK(hyperoctahedral_invariants(pt({1, 2})) == std::vector<Rat>{Rat(5), Rat(4)});
    CHECK(hyperoctahedral_invariants(pt({-2, 1})) == hyperoctahedral_invariants(pt({1, 2})));
    CHECK_THROWS_AS(support_variety(trivial_module(build_gl(2, 1))), UnsupportedShape);
}

TEST_CASE("tensor product property") {
    auto g = build_gl(2, 2);
    auto fbar = detecting_fbar(g);
    auto v = natural_module(g);
    auto vd = dual_module(v);
    auto points = probe_points(4, "random:11:10");
    CHECK(tensor_property_check(v, trivial_module(g), fbar, points).ok);
    CHECK(tensor_property_check(v, vd, fbar, points).ok);
    CHECK(tensor_property_check(tensor_module(v, vd), v, fbar, points).ok);
    auto grid = tensor_property_check(v, vd, fbar, probe_points(4, "grid"));
    CHECK(grid.ok);
    CHECK(grid.probed > 0);

    auto g11 = build_gl(1, 1);
    auto e = detecting_e(g11).subalgebra;
    CHECK(tensor_property_check(dual_kac_11(g11, 1), dual_kac_11(g11, 2), e, {pt({1}), pt({3})}).ok);
}

TEST_CASE("projectivity in the category") {
    auto g = build_gl(1, 1);
    std::vector<Weight> tests;
    for (long a = -3; a <= 3; ++a) tests.push_back(wt({a, -a}));
    auto km = dual_kac_11(g, 1);
    CHECK_FALSE(projectivity_in_category(km, tests));
    CHECK(projectivity_in_category(direct_sum(km, km), tests) == projectivity_in_category(km, tests));
    // a typical Kac module is projective; its support is the origin
    auto typical = kac_module(g, character_module(g, wt({1, 0})));
    CHECK(projectivity_in_category(typical, tests));
    auto sv = support_variety(typical, 0, 4);
    CHECK(sv.members().size() == 1);
}

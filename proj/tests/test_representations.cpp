#include "doctest.h"

#include "supercoho/representations.hpp"

#include <algorithm>
#include <set>

using namespace supercoho;

namespace {

Weight wt(std::initializer_list<long> xs) {
    Weight w;
    for (long x : xs) w.coords.emplace_back(x);
    return w;
}

std::multiset<std::string> weight_multiset(const Supermodule& m) {
    std::multiset<std::string> s;
    REQUIRE(m.weights());
    for (const auto& w : *m.weights()) s.insert(w.str());
    return s;
}

// Root of E_ij in gl(m|n): e_i - e_j in torus coordinates.
Weight root(int size, int i, int j) {
    Weight w{std::vector<Rat>(static_cast<std::size_t>(size))};
    w.coords[static_cast<std::size_t>(i)] += Rat(1);
    w.coords[static_cast<std::size_t>(j)] -= Rat(1);
    return w;
}

// lambda + sum over subsets of the given roots.
std::multiset<std::string> subset_sums(const Weight& lambda, const std::vector<Weight>& roots) {
    std::multiset<std::string> s;
    for (unsigned mask = 0; mask < (1u << roots.size()); ++mask) {
        Weight w = lambda;
        for (std::size_t t = 0; t < roots.size(); ++t)
            if (mask & (1u << t)) w = w + roots[t];
        s.insert(w.str());
    }
    return s;
}

std::vector<Weight> odd_roots(int m, int n, int degree) {
    std::vector<Weight> r;
    for (int i = 0; i < m; ++i)
        for (int j = m; j < m + n; ++j) r.push_back(degree > 0 ? root(m + n, i, j) : root(m + n, j, i));
    return r;
}

}  // namespace

TEST_CASE("weight parsing") {
    CHECK(Weight::parse("-1,1") == wt({-1, 1}));
    CHECK(Weight::parse("(1,1|0,0)") == wt({1, 1, 0, 0}));
    CHECK(Weight::parse("1/2, -3").coords[0] == Rat(1, 2));
}

TEST_CASE("natural and trivial modules") {
    auto g = build_gl(1, 1);
    auto v = natural_module(g);
    CHECK(v.space().even_dim() == 1);
    CHECK(v.space().odd_dim() == 1);
    const Mat& e12 = v.action(g->space().index_or_throw("E12"));
    CHECK(e12.at(0, 1) == Rat(1));
    CHECK(e12.nnz() == 1);
    CHECK(v.space().parity(0) == Parity::Even);

    auto t = trivial_module(build_gl(2, 2));
    CHECK(t.dim() == 1);
    CHECK(t.weights()->front() == wt({0, 0, 0, 0}));

    for (int n : {2, 3}) {
        auto w = build_W(n);
        auto gr = natural_module(w);
        CHECK(gr.dim() == (std::size_t{1} << n));
        CHECK(check_bracket_compatibility(gr).ok);
    }
}

TEST_CASE("dual, double dual, tensor") {
    auto g = build_gl(2, 1);
    auto v = natural_module(g);
    auto dd = dual_module(dual_module(v));
    Mat j = Mat::identity(v.dim());
    for (std::size_t i = 0; i < v.dim(); ++i)
        if (v.space().parity(i) == Parity::Odd) j.set(i, i, Rat(-1));
    for (std::size_t k = 0; k < g->dim(); ++k) CHECK(dd.action(k) == j * v.action(k) * j);

    auto vd = dual_module(v);
    auto t = tensor_module(v, vd);
    CHECK(t.dim() == 9);
    std::multiset<std::string> expect;
    for (const auto& a : *v.weights())
        for (const auto& b : *vd.weights()) expect.insert((a + b).str());
    CHECK(weight_multiset(t) == expect);

    auto h = hom_module(v, v);
    CHECK(h.dim() == 9);
    // signed identity sum_i (-1)^{|i|} phi_i (x) v_i is g-invariant; the plain one is g_0-invariant
    SparseVec signed_id, plain_id;
    for (std::size_t i = 0; i < v.dim(); ++i) {
        signed_id.push_back(i * v.dim() + i, Rat(v.space().parity(i) == Parity::Odd ? -1 : 1));
        plain_id.push_back(i * v.dim() + i, Rat(1));
    }
    for (std::size_t k = 0; k < g->dim(); ++k) {
        CHECK(h.action(k).apply(signed_id).empty());
        if (g->parity(k) == Parity::Even) CHECK(h.action(k).apply(plain_id).empty());
    }
}

TEST_CASE("character modules") {
    auto g11 = build_gl(1, 1);
    CHECK_NOTHROW(character_module(g11, wt({5, -7})));
    auto g22 = build_gl(2, 2);
    CHECK_THROWS_AS(character_module(g22, wt({1, 0, 0, 0})), NotACharacter);
    auto c = character_module(g22, wt({1, 1, 0, 0}));
    CHECK(c.dim() == 1);
    CHECK(c.algebra()->dim() == 8);
    CHECK_THROWS(character_module(g22, wt({1, 1})));

    CHECK_NOTHROW(one_dim_module(g11, wt({2, -2})));
    CHECK_THROWS_AS(one_dim_module(g11, wt({1, 0})), NotACharacter);
}

TEST_CASE("Kac modules: dimensions and weights") {
    auto g11 = build_gl(1, 1);
    auto k0 = kac_module(g11, character_module(g11, wt({0, 0})));
    CHECK(k0.dim() == 2);

    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}}) {
        auto g = build_gl(m, n);
        std::vector<long> lam(static_cast<std::size_t>(m + n), 0);
        for (int i = 0; i < m; ++i) lam[static_cast<std::size_t>(i)] = 3;
        Weight l;
        for (long x : lam) l.coords.emplace_back(x);
        auto l0 = character_module(g, l);
        auto k = kac_module(g, l0);
        auto km = dual_kac_module(g, l0);
        std::size_t expect = std::size_t{1} << (m * n);
        CHECK(k.dim() == expect);
        CHECK(km.dim() == expect);
        CHECK(weight_multiset(k) == subset_sums(l, odd_roots(m, n, -1)));
        CHECK(weight_multiset(km) == subset_sums(l, odd_roots(m, n, -1)));
        // the two live on Lambda(g_-1) and Lambda(g_1)*: same weights, different modules
    }

    auto g22 = build_gl(2, 2);
    CHECK(kac_module(g22, character_module(g22, wt({0, 0, 0, 0}))).dim() == 16);
    CHECK(dual_kac_module(g22, character_module(g22, wt({0, 0, 0, 0}))).dim() == 16);
    CHECK_THROWS(kac_module(build_W(2), trivial_module(build_gl(1, 1))));
}

TEST_CASE("dual Kac module of gl(1|1)") {
    auto g = build_gl(1, 1);
    auto km = dual_kac_module(g, character_module(g, wt({-1, 1})));
    CHECK(weight_multiset(km) == std::multiset<std::string>{"-1,1", "-2,2"});
    // g_{-1} = E21 kills everything in this realization; E12 is rank one.
    CHECK(km.action(g->space().index_or_throw("E21")).is_zero());
    CHECK(rank(km.action(g->space().index_or_throw("E12"))) == 1);
    CHECK(is_indecomposable(km));

    auto e = detecting_e(g).subalgebra;
    auto re = restrict_module(km, e);
    CHECK(re.dim() == 2);
    CHECK(is_indecomposable(re));

    CHECK_FALSE(is_indecomposable(direct_sum(km, km)));
    CHECK_FALSE(is_indecomposable(direct_sum(trivial_module(g), trivial_module(g))));
    CHECK(is_indecomposable(natural_module(g)));
}

TEST_CASE("restriction") {
    auto g = build_gl(2, 2);
    auto v = natural_module(g);
    auto whole = Subalgebra::from_basis_indices(g, [&] {
        std::vector<std::size_t> all(g->dim());
        for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
        return all;
    }());
    auto r = restrict_module(v, whole);
    for (std::size_t k = 0; k < g->dim(); ++k) CHECK(r.action(k) == v.action(k));

    auto fbar = detecting_fbar(g);
    auto vd = dual_module(v);
    CHECK_NOTHROW(restrict_module(v, fbar));
    auto lhs = restrict_module(tensor_module(v, vd), fbar);
    auto rhs = tensor_module(restrict_module(v, fbar), restrict_module(vd, fbar));
    for (std::size_t k = 0; k < fbar.dim(); ++k) CHECK(lhs.action(k) == rhs.action(k));

    CHECK_THROWS(restrict_module(natural_module(build_gl(1, 1)), fbar));
}

TEST_CASE("invalid modules are rejected") {
    auto g = build_gl(1, 1);
    auto v = natural_module(g);
    std::vector<Mat> bad = v.actions();
    bad[g->space().index_or_throw("E12")] = bad[g->space().index_or_throw("E12")].scaled(Rat(2));
    CHECK_THROWS(Supermodule(g, v.space(), bad));
    std::vector<Mat> wrong_parity = v.actions();
    wrong_parity[0].set(0, 1, Rat(1));
    CHECK_THROWS(Supermodule(g, v.space(), wrong_parity));
    CHECK_THROWS(Supermodule(g, v.space(), v.actions(), std::vector<Weight>{wt({0, 0}), wt({0, 0})}));
}

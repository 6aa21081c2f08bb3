#include "doctest.h"

#include "supercoho/superalgebra.hpp"

#include <bit>

using namespace supercoho;

namespace {

SparseVec el(const LieSuperalgebra& g, const std::string& label) { return SparseVec::unit(g.space().index_or_throw(label)); }

SparseVec combo(const LieSuperalgebra& g, std::initializer_list<std::pair<const char*, long>> terms) {
    std::vector<SparseVec::Entry> e;
    for (auto [l, c] : terms) e.emplace_back(g.space().index_or_throw(l), Rat(c));
    return SparseVec::from_entries(std::move(e));
}

// Supercommutator of honest (m+n)x(m+n) matrices: the defining realization of gl(m|n).
Mat matrix_unit(std::size_t size, std::size_t i, std::size_t j) {
    Mat u(size, size);
    u.set(i, j, Rat(1));
    return u;
}

// Left multiplication by xi_I and the derivation d_i on the Grassmann algebra,
// written directly from the sign rule xi_a xi_b = -xi_b xi_a.
int reorder_sign(unsigned a, unsigned b) {
    // sign of moving the generators of a (to the left) past those of b into increasing order
    int swaps = 0;
    for (unsigned x = a; x; x &= x - 1) {
        int i = std::countr_zero(x);
        swaps += std::popcount(b & ((1u << i) - 1));
    }
    return (swaps & 1) ? -1 : 1;
}

Mat witt_operator(unsigned mask, int i, int n) {
    const std::size_t N = std::size_t{1} << n;
    Mat op(N, N);
    for (unsigned s = 0; s < N; ++s) {
        if (!(s & (1u << i))) continue;
        // d_i xi_S = (-1)^{#generators before i in S} xi_{S \ i}
        int sign = (std::popcount(s & ((1u << i) - 1)) & 1) ? -1 : 1;
        unsigned t = s & ~(1u << i);
        if (mask & t) continue;
        sign *= reorder_sign(mask, t);
        op.set(mask | t, s, Rat(sign));
    }
    return op;
}

Mat super_commutator(const Mat& a, const Mat& b, Parity pa, Parity pb) {
    return a * b - (b * a).scaled(Rat(koszul(pa, pb)));
}

}  // namespace

TEST_CASE("gl(m|n) examples") {
    auto g11 = build_gl(1, 1);
    CHECK(g11->dim() == 4);
    CHECK(g11->bracket(el(*g11, "E12"), el(*g11, "E21")) == combo(*g11, {{"E11", 1}, {"E22", 1}}));
    CHECK(check_jacobi(*g11).ok);
    CHECK(check_jacobi(*g11).checked == 64);

    auto g22 = build_gl(2, 2);
    CHECK(g22->dim() == 16);
    CHECK(g22->space().odd_dim() == 8);
    CHECK(g22->cartan().size() == 4);
    CHECK(g22->tag().str() == "gl:2,2");
}

TEST_CASE("gl(m|n) agrees with the matrix supercommutator") {
    for (auto [m, n] : {std::pair{1, 1}, {2, 1}, {2, 2}, {1, 3}}) {
        auto g = build_gl(m, n);
        const std::size_t size = static_cast<std::size_t>(m + n);
        auto as_matrix = [&](const SparseVec& v) {
            Mat out(size, size);
            for (const auto& [k, c] : v.entries()) out = out + matrix_unit(size, k / size, k % size).scaled(c);
            return out;
        };
        for (std::size_t a = 0; a < g->dim(); ++a)
            for (std::size_t b = 0; b < g->dim(); ++b) {
                Mat lhs = as_matrix(g->bracket(a, b));
                Mat rhs = super_commutator(as_matrix(SparseVec::unit(a)), as_matrix(SparseVec::unit(b)), g->parity(a),
                                           g->parity(b));
                REQUIRE(lhs == rhs);
            }
    }
}

TEST_CASE("structural identities") {
    std::vector<AlgebraPtr> algebras{build_gl(1, 1), build_gl(2, 2), build_gl(2, 1), build_W(2), build_W(3),
                                     build_S(2).own(), build_S(3).own()};
    for (const auto& g : algebras) {
        CAPTURE(g->name());
        CHECK(check_super_skew(*g).ok);
        CHECK(check_parity(*g).ok);
        CHECK(check_jacobi(*g).ok);
        CHECK(check_z_grading(*g).ok);
    }
}

TEST_CASE("gl Z-grading: g_{+-1} abelian") {
    auto g = build_gl(2, 2);
    for (int d : {-1, 1}) {
        auto idx = g->indices_of_degree(d);
        CHECK(idx.size() == 4);
        for (auto i : idx)
            for (auto j : idx) CHECK(g->bracket(i, j).empty());
    }
    for (auto i : g->indices_of_degree(1)) CHECK(*g->space()[i].zdegree == 1);
    CHECK(*g->space()[g->space().index_or_throw("E13")].zdegree == 1);
    CHECK(*g->space()[g->space().index_or_throw("E31")].zdegree == -1);
}

TEST_CASE("W(n) examples") {
    for (int n : {2, 3, 4}) CHECK(build_W(n)->dim() == static_cast<std::size_t>(n) << n);
    auto w = build_W(2);
    CHECK(w->bracket(el(*w, "xi1d2"), el(*w, "xi2d1")) == combo(*w, {{"xi1d1", 1}, {"xi2d2", -1}}));
    CHECK(w->bracket(el(*w, "d1"), el(*w, "xi12d2")) == el(*w, "xi2d2"));
    CHECK(w->parity(w->space().index_or_throw("d1")) == Parity::Odd);
    CHECK(*w->space()[w->space().index_or_throw("xi12d2")].zdegree == 1);
    CHECK_THROWS(build_W(1));
}

TEST_CASE("W(n) brackets agree with commutators of derivations") {
    for (int n : {2, 3}) {
        auto w = build_W(n);
        std::vector<Mat> ops;
        for (std::size_t k = 0; k < w->dim(); ++k) {
            // recover (mask, i) from the label, e.g. "xi13d2"
            const std::string& l = w->space()[k].label;
            auto dpos = l.find('d');
            unsigned mask = 0;
            for (std::size_t p = 2; p < dpos; ++p) mask |= 1u << (l[p] - '1');
            ops.push_back(witt_operator(mask, l[dpos + 1] - '1', n));
        }
        auto as_op = [&](const SparseVec& v) {
            Mat out(ops[0].rows(), ops[0].cols());
            for (const auto& [k, c] : v.entries()) out = out + ops[k].scaled(c);
            return out;
        };
        for (std::size_t a = 0; a < w->dim(); ++a)
            for (std::size_t b = 0; b < w->dim(); ++b)
                REQUIRE(as_op(w->bracket(a, b)) == super_commutator(ops[a], ops[b], w->parity(a), w->parity(b)));
    }
}

TEST_CASE("S(n) membership and closure") {
    auto w = build_W(3);
    auto s = build_S(w);
    CHECK(s.contains(el(*w, "xi1d2")));
    CHECK_FALSE(s.contains(el(*w, "xi1d1")));
    CHECK(s.contains(combo(*w, {{"xi1d1", 1}, {"xi2d2", -1}})));
    CHECK(witt_divergence(*w, el(*w, "xi1d1")) == SparseVec::unit(0));
    // dim S(n) = (n-1) 2^n + 1
    CHECK(s.dim() == 2 * 8 + 1);
    CHECK(build_S(2).dim() == 5);
    auto s2 = build_S(2);
    for (std::size_t i = 0; i < s2.dim(); ++i)
        for (std::size_t j = 0; j < s2.dim(); ++j)
            CHECK(s2.contains(s2.parent()->bracket(s2.embed(SparseVec::unit(i)), s2.embed(SparseVec::unit(j)))));
}

TEST_CASE("subalgebra validation") {
    auto g = build_gl(1, 1);
    // E12 alone is closed ([E12,E12]=0); E12 and E21 together are not.
    CHECK_NOTHROW(Subalgebra::from_vectors(g, {el(*g, "E12")}));
    CHECK_THROWS(Subalgebra::from_vectors(g, {el(*g, "E12"), el(*g, "E21")}));
    CHECK_THROWS(Subalgebra::from_vectors(g, {el(*g, "E11"), el(*g, "E11")}));
    CHECK_THROWS(Subalgebra::from_vectors(g, {combo(*g, {{"E11", 1}, {"E12", 1}})}));
    auto g0 = even_subalgebra(g);
    CHECK(g0.dim() == 2);
    CHECK(g0.odd_indices().empty());
}

TEST_CASE("detecting subalgebras of gl(r|r)") {
    auto g11 = build_gl(1, 1);
    auto f11 = detecting_f(g11);
    CHECK(f11.dim() == 4);  // f = g

    auto [e11, w11] = detecting_e(g11);
    CHECK(e11.dim() == 2);
    auto x = combo(*g11, {{"E12", 1}, {"E21", 1}});
    CHECK(g11->bracket(x, x) == combo(*g11, {{"E11", 2}, {"E22", 2}}));
    CHECK(w11.elements().size() == 2);

    auto g = build_gl(2, 2);
    auto f = detecting_f(g);
    auto fbar = detecting_fbar(g);
    auto de = detecting_e(g);
    CHECK(f.odd_indices().size() == 4);
    CHECK(fbar.dim() == 6);
    CHECK(fbar.even_indices().size() == 2);
    CHECK(de.subalgebra.odd_indices().size() == 2);
    CHECK(de.subalgebra.even_indices().size() == 2);
    CHECK(de.weyl.order() == 8);
    CHECK(de.weyl.elements().size() == 8);

    CHECK(fbar.contains_subalgebra(de.subalgebra));
    CHECK(f.contains_subalgebra(fbar));
    CHECK(f.contains_subalgebra(de.subalgebra));
    CHECK_FALSE(de.subalgebra.contains_subalgebra(fbar));

    // [fbar_0, fbar_1] = 0
    for (auto i : fbar.even_indices())
        for (auto j : fbar.odd_indices()) CHECK(fbar.own()->bracket(i, j).empty());

    CHECK_THROWS_AS(detecting_f(build_gl(2, 1)), UnsupportedShape);
    CHECK_THROWS_AS(detecting_e(build_gl(1, 2)), UnsupportedShape);
}

TEST_CASE("detecting subalgebra of W(n)") {
    auto w = build_W(2);
    auto f = detecting_f_W(w);
    CHECK(f.odd_indices().size() == 2);
    CHECK(f.even_indices().size() == 2);
    for (const auto& v : f.odd_vectors()) CHECK(w->space().parity_of(v) == Parity::Odd);
    CHECK(f.contains(el(*w, "xi2d2")));

    auto w3 = build_W(3);
    auto f3 = detecting_f_W(w3);
    auto grp = witt_normalizer_group(f3);
    CHECK(grp.order() == 2);
    CHECK(grp.elements().size() == 2);
}

TEST_CASE("finite group closure") {
    Mat swap = Mat::from_dense({{0, 1}, {1, 0}});
    CHECK(FiniteGroupAction(2, {swap}, 2).elements().size() == 2);
    CHECK_THROWS(FiniteGroupAction(2, {swap}, 3).elements());
    CHECK_THROWS(FiniteGroupAction(2, {Mat::from_dense({{1, 1}, {1, 1}})}, 1));
    // an infinite-order generator must hit the limit
    CHECK_THROWS(FiniteGroupAction(2, {Mat::from_dense({{1, 1}, {0, 1}})}, 4).elements(100));
}

#include "doctest.h"

#include "supercoho/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <random>

using namespace supercoho;

namespace {

// Leibniz determinant; independent of the elimination code.
Rat leibniz_det(const std::vector<Vec>& a) {
    const std::size_t n = a.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Rat det;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rat term(inversions % 2 ? -1 : 1);
        for (std::size_t i = 0; i < n; ++i) term *= a[i][perm[i]];
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

// Largest k with a nonzero k x k minor.
std::size_t minor_rank(const std::vector<Vec>& a) {
    const std::size_t r = a.size(), c = a.empty() ? 0 : a[0].size();
    for (std::size_t k = std::min(r, c); k > 0; --k) {
        std::vector<bool> rs(r, false), cs(c, false);
        std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
            do {
                std::vector<Vec> sub;
                for (std::size_t i = 0; i < r; ++i) {
                    if (!rs[i]) continue;
                    Vec row;
                    for (std::size_t j = 0; j < c; ++j)
                        if (cs[j]) row.push_back(a[i][j]);
                    sub.push_back(row);
                }
                if (!leibniz_det(sub).is_zero()) return k;
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
    }
    return 0;
}

Mat random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int density_pct) {
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            if (static_cast<int>(rng() % 100) < density_pct) {
                long num = static_cast<long>(rng() % 7) - 3;
                long den = static_cast<long>(rng() % 3) + 1;
                m.set(i, j, Rat(num, den));
            }
    return m;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
    CHECK(Rat::parse("3/6").str() == "1/2");
    CHECK(Rat::parse("-4/2").str() == "-2");
    CHECK(Rat::parse(" 7 ").str() == "7");
    CHECK(Rat::parse("1/-3").str() == "-1/3");
    CHECK(Rat::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
    CHECK_THROWS(Rat::parse("1/0"));
    CHECK_THROWS(Rat::parse("abc"));
    CHECK_THROWS(Rat::parse(""));
}

TEST_CASE("rank examples") {
    CHECK(rank(Mat::identity(2)) == 2);
    CHECK(rank(Mat(3, 5)) == 0);
    CHECK(rank(Mat::from_dense({{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel examples") {
    CHECK(kernel_basis(Mat::identity(3)).empty());

    auto z = kernel_basis(Mat(2, 2));
    REQUIRE(z.size() == 2);
    CHECK(z[0] == Vec{Rat(1), Rat(0)});
    CHECK(z[1] == Vec{Rat(0), Rat(1)});

    auto k = kernel_basis(Mat::from_dense({{1, 1}}));
    REQUIRE(k.size() == 1);
    // span of (1,-1): check proportionality
    CHECK(k[0][0] == -k[0][1]);
    CHECK(!k[0][0].is_zero());
}

TEST_CASE("solve examples") {
    Vec b{Rat(3), Rat(-1, 2)};
    auto x = solve(Mat::identity(2), b);
    REQUIRE(x);
    CHECK(*x == b);

    Mat row = Mat::from_dense({{1, 1}});
    auto y = solve(row, Vec{Rat(2)});
    REQUIRE(y);
    CHECK((*y)[0] + (*y)[1] == Rat(2));

    CHECK_FALSE(solve(Mat::from_dense({{1}, {1}}), Vec{Rat(0), Rat(1)}));
    CHECK_THROWS(solve(Mat::identity(2), Vec{Rat(1)}));
}

TEST_CASE("intersect examples") {
    Vec e1{Rat(1), Rat(0)}, e2{Rat(0), Rat(1)}, e12{Rat(1), Rat(1)};
    auto same = intersect({e1}, {e1});
    REQUIRE(same.size() == 1);
    CHECK(same[0] == e1);
    CHECK(intersect({e1}, {e2}).empty());
    auto hand = intersect({e12, e2}, {e1});
    REQUIRE(hand.size() == 1);
    CHECK(hand[0][1].is_zero());
    CHECK(!hand[0][0].is_zero());
}

TEST_CASE("inverse and column space coordinates") {
    Mat a = Mat::from_dense({{2, 1}, {1, 1}});
    CHECK(a * inverse(a) == Mat::identity(2));
    CHECK_THROWS(inverse(Mat::from_dense({{1, 2}, {2, 4}})));

    ColumnSpace cs(Mat::from_dense({{1, 0}, {1, 1}, {0, 1}}));
    auto c = cs.coordinates(SparseVec::from_dense({Rat(2), Rat(5), Rat(3)}));
    REQUIRE(c);
    CHECK(c->to_dense(2) == Vec{Rat(2), Rat(3)});
    CHECK_FALSE(cs.coordinates(SparseVec::from_dense({Rat(1), Rat(0), Rat(0)})));
}

TEST_CASE("property: rank agrees with the minor oracle and rank-nullity holds") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
        Mat m = random_matrix(rng, r, c, 45);
        std::size_t rk = rank(m);
        CHECK(rk == minor_rank(m.to_dense()));
        Mat k = kernel(m);
        CHECK(rk + k.cols() == c);
        CHECK((m * k).is_zero());
        CHECK(rank(k) == k.cols());
    }
}

TEST_CASE("property: solve and intersect on random data") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 2 + rng() % 5, c = 2 + rng() % 5;
        Mat m = random_matrix(rng, r, c, 50);
        Vec x0(c);
        for (auto& v : x0) v = Rat(static_cast<long>(rng() % 5) - 2);
        Vec b = m.apply(x0);
        auto x = solve(m, b);
        REQUIRE(x);
        CHECK(m.apply(*x) == b);

        std::size_t n = 5;
        std::vector<Vec> a, bb;
        for (std::size_t i = 0; i < 1 + rng() % 4; ++i) a.push_back(random_matrix(rng, 1, n, 60).to_dense()[0]);
        for (std::size_t i = 0; i < 1 + rng() % 4; ++i) bb.push_back(random_matrix(rng, 1, n, 60).to_dense()[0]);
        auto as = Mat::from_dense(a), bs = Mat::from_dense(bb);
        std::size_t da = rank(as), db = rank(bs);
        std::size_t dsum = rank(Mat::vstack(as, bs));
        auto inter = intersect(a, bb);
        CHECK(da + db == dsum + inter.size());
        for (const auto& v : inter) {
            CHECK(solve(as.transpose(), v).has_value());
            CHECK(solve(bs.transpose(), v).has_value());
        }
    }
}

TEST_CASE("kernel basis is deterministic") {
    std::mt19937_64 rng(3);
    Mat m = random_matrix(rng, 6, 9, 40);
    CHECK(kernel(m) == kernel(m));
    CHECK(kernel(m) == kernel(Mat::from_dense(m.to_dense())));
}

TEST_CASE("sparse matrix helpers") {
    Mat a = Mat::from_dense({{1, 2}, {0, 3}});
    Mat b = Mat::from_dense({{0, 1}, {1, 0}});
    CHECK(Mat::kron(a, b).rows() == 4);
    CHECK(Mat::kron(a, b).at(0, 1) == Rat(1));
    CHECK(Mat::kron(a, b).at(3, 2) == Rat(3));
    CHECK(a.transpose().at(1, 0) == Rat(2));
    CHECK((a - a).is_zero());
    CHECK_THROWS(a.at(2, 0));
    Mat c = a;
    c.set(0, 1, Rat(0));
    CHECK(c.nnz() == 2);
}

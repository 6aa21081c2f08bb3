#include "supercoho/superalgebra.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace supercoho {

namespace {

std::string gl_label(int i, int j, int size) {
    if (size < 10) return "E" + std::to_string(i + 1) + std::to_string(j + 1);
    return "E" + std::to_string(i + 1) + "," + std::to_string(j + 1);
}

void require_square_gl(const LieSuperalgebra& g, const char* what) {
    if (g.tag().family != Family::GL)
        throw std::invalid_argument(std::string(what) + ": algebra is not gl(m|n)");
    if (g.tag().m != g.tag().n) throw UnsupportedShape(std::string(what) + ": unsupported shape (m != n)");
}

// Grassmann algebra on n generators; monomials are subset bitmasks.
// xi_A * xi_B = sign * xi_{A u B}, or 0 when A and B meet.
std::optional<std::pair<int, unsigned>> grassmann_product(unsigned a, unsigned b) {
    if (a & b) return std::nullopt;
    int swaps = 0;
    for (unsigned bb = b; bb; bb &= bb - 1) {
        unsigned low = bb & (~bb + 1);
        // elements of a greater than this element of b
        swaps += std::popcount(a & ~((low << 1) - 1));
    }
    return std::make_pair((swaps & 1) ? -1 : 1, a | b);
}

// d_i(xi_A): sign * xi_{A \ i}, or nullopt when i is not in A.
std::optional<std::pair<int, unsigned>> grassmann_derivative(int i, unsigned a) {
    unsigned bit = 1u << i;
    if (!(a & bit)) return std::nullopt;
    int before = std::popcount(a & (bit - 1));
    return std::make_pair((before & 1) ? -1 : 1, a & ~bit);
}

struct WittIndex {
    int n;
    std::vector<std::pair<unsigned, int>> basis;  // (mask, i)
    std::map<std::pair<unsigned, int>, std::size_t> index;
};

WittIndex witt_index(int n) {
    WittIndex w{n, {}, {}};
    std::vector<unsigned> masks(1u << n);
    std::iota(masks.begin(), masks.end(), 0u);
    // by size, then lexicographically by sorted element list
    auto key = [&](unsigned m) {
        std::vector<int> els;
        for (int k = 0; k < n; ++k)
            if (m & (1u << k)) els.push_back(k);
        return std::make_pair(static_cast<int>(els.size()), els);
    };
    std::sort(masks.begin(), masks.end(), [&](unsigned a, unsigned b) { return key(a) < key(b); });
    for (unsigned m : masks)
        for (int i = 0; i < n; ++i) {
            w.index.emplace(std::make_pair(m, i), w.basis.size());
            w.basis.emplace_back(m, i);
        }
    return w;
}

}  // namespace

AlgebraPtr build_gl(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("build_gl: need m >= 1 and n >= 1");
    const int size = m + n;
    auto idx = [size](int i, int j) { return static_cast<std::size_t>(i * size + j); };
    auto odd = [m](int i, int j) { return (i < m) != (j < m); };

    std::vector<BasisElement> basis;
    std::vector<std::size_t> cartan;
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            int deg = 0;
            if (i < m && j >= m) deg = 1;
            if (i >= m && j < m) deg = -1;
            basis.push_back({gl_label(i, j, size), odd(i, j) ? Parity::Odd : Parity::Even, deg});
            if (i == j) cartan.push_back(idx(i, j));
        }

    // [E_ab, E_cd] = d_bc E_ad - (-1)^{|ab||cd|} d_da E_cb
    auto br = [&](std::size_t x, std::size_t y) {
        int a = static_cast<int>(x) / size, b = static_cast<int>(x) % size;
        int c = static_cast<int>(y) / size, d = static_cast<int>(y) % size;
        int sign = (odd(a, b) && odd(c, d)) ? -1 : 1;
        std::vector<SparseVec::Entry> e;
        if (b == c) e.emplace_back(idx(a, d), Rat(1));
        if (d == a) e.emplace_back(idx(c, b), Rat(-sign));
        return SparseVec::from_entries(std::move(e));
    };
    std::string name = "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
    return std::make_shared<LieSuperalgebra>(LieSuperalgebra::from_bracket_function(
        SuperSpace(std::move(basis)), br, std::move(cartan), AlgebraTag{Family::GL, m, n}, name));
}

std::string witt_label(unsigned mask, int i, int n) {
    std::string s;
    if (mask) {
        s = "xi";
        bool first = true;
        for (int k = 0; k < n; ++k)
            if (mask & (1u << k)) {
                if (!first && n >= 10) s += ",";
                s += std::to_string(k + 1);
                first = false;
            }
    }
    return s + "d" + std::to_string(i + 1);
}

AlgebraPtr build_W(int n) {
    if (n < 2) throw std::invalid_argument("build_W: need n >= 2");
    if (n > 12) throw std::invalid_argument("build_W: n too large");
    auto w = witt_index(n);

    std::vector<BasisElement> basis;
    std::vector<std::size_t> cartan;
    for (auto [mask, i] : w.basis) {
        int size = std::popcount(mask);
        int deg = size - 1;
        basis.push_back({witt_label(mask, i, n), (deg & 1) ? Parity::Odd : Parity::Even, deg});
        if (mask == (1u << i)) cartan.push_back(w.index.at({mask, i}));
    }

    // [f d_i, g d_j] = f d_i(g) d_j - (-1)^{|D1||D2|} g d_j(f) d_i
    auto br = [&](std::size_t x, std::size_t y) {
        auto [f, i] = w.basis[x];
        auto [g, j] = w.basis[y];
        int px = (std::popcount(f) + 1) & 1, py = (std::popcount(g) + 1) & 1;
        std::vector<SparseVec::Entry> e;
        if (auto dg = grassmann_derivative(i, g))
            if (auto prod = grassmann_product(f, dg->second))
                e.emplace_back(w.index.at({prod->second, j}), Rat(dg->first * prod->first));
        if (auto df = grassmann_derivative(j, f))
            if (auto prod = grassmann_product(g, df->second)) {
                int sign = (px & py) ? -1 : 1;
                e.emplace_back(w.index.at({prod->second, i}), Rat(-sign * df->first * prod->first));
            }
        return SparseVec::from_entries(std::move(e));
    };
    return std::make_shared<LieSuperalgebra>(LieSuperalgebra::from_bracket_function(
        SuperSpace(std::move(basis)), br, std::move(cartan), AlgebraTag{Family::W, 0, n},
        "W(" + std::to_string(n) + ")"));
}

std::pair<unsigned, int> witt_element(const LieSuperalgebra& w, std::size_t k) {
    if (w.tag().family != Family::W) throw std::invalid_argument("witt_element: algebra is not W(n)");
    return witt_index(w.tag().n).basis.at(k);
}

SparseVec witt_divergence(const LieSuperalgebra& w, const SparseVec& x) {
    if (w.tag().family != Family::W) throw std::invalid_argument("witt_divergence: algebra is not W(n)");
    auto idx = witt_index(w.tag().n);
    std::vector<SparseVec::Entry> e;
    for (const auto& [k, c] : x.entries()) {
        auto [mask, i] = idx.basis[k];
        if (auto d = grassmann_derivative(i, mask)) e.emplace_back(d->second, c * Rat(d->first));
    }
    return SparseVec::from_entries(std::move(e));
}

Subalgebra build_S(const AlgebraPtr& w) {
    if (w->tag().family != Family::W) throw std::invalid_argument("build_S: parent is not W(n)");
    const int n = w->tag().n;
    std::vector<SparseVec> cols;
    for (std::size_t k = 0; k < w->dim(); ++k) cols.push_back(witt_divergence(*w, SparseVec::unit(k)));
    Mat div = Mat::from_columns(std::size_t{1} << n, cols);
    Mat ker = kernel(div);
    return Subalgebra(w, std::move(ker), {}, "S(" + std::to_string(n) + ")");
}

Subalgebra build_S(int n) {
    if (n < 2) throw std::invalid_argument("build_S: need n >= 2");
    return build_S(build_W(n));
}

Subalgebra even_subalgebra(const AlgebraPtr& g) {
    if (g->space().z_graded()) return graded_subalgebra(g, {0}, "g0");
    return Subalgebra::from_basis_indices(g, g->indices_of_parity(Parity::Even), "g0");
}

Subalgebra graded_subalgebra(const AlgebraPtr& g, const std::vector<int>& degrees, std::string name) {
    if (!g->space().z_graded()) throw std::invalid_argument("graded_subalgebra: algebra is not Z-graded");
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < g->dim(); ++i)
        if (std::find(degrees.begin(), degrees.end(), *g->space()[i].zdegree) != degrees.end()) idx.push_back(i);
    return Subalgebra::from_basis_indices(g, idx, std::move(name));
}

namespace {

std::size_t gl_index(const LieSuperalgebra& g, int i, int j) {
    int size = g.tag().m + g.tag().n;
    return static_cast<std::size_t>(i * size + j);
}

std::vector<SparseVec> f_odd_vectors(const LieSuperalgebra& g) {
    const int r = g.tag().m;
    std::vector<SparseVec> v;
    for (int i = 0; i < r; ++i) v.push_back(SparseVec::unit(gl_index(g, i, i + r)));
    for (int i = 0; i < r; ++i) v.push_back(SparseVec::unit(gl_index(g, i + r, i)));
    return v;
}

std::vector<SparseVec> lie_h_vectors(const LieSuperalgebra& g) {
    const int r = g.tag().m;
    std::vector<SparseVec> v;
    for (int i = 0; i < r; ++i)
        v.push_back(SparseVec::from_entries({{gl_index(g, i, i), Rat(1)}, {gl_index(g, i + r, i + r), Rat(1)}}));
    return v;
}

// Reduced basis of the span of all brackets [x_i, x_j].
std::vector<SparseVec> bracket_span(const LieSuperalgebra& g, const std::vector<SparseVec>& xs) {
    RowEchelon e(g.dim());
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i; j < xs.size(); ++j) e.insert(g.bracket(xs[i], xs[j]));
    return e.reduced_rows();
}

}  // namespace

Subalgebra detecting_f(const AlgebraPtr& g) {
    require_square_gl(*g, "detecting_f");
    std::vector<SparseVec> vecs;
    for (auto c : g->cartan()) vecs.push_back(SparseVec::unit(c));
    auto odd = f_odd_vectors(*g);
    vecs.insert(vecs.end(), odd.begin(), odd.end());
    return Subalgebra::from_vectors(g, vecs, {}, "f");
}

Subalgebra detecting_fbar(const AlgebraPtr& g) {
    require_square_gl(*g, "detecting_fbar");
    auto vecs = lie_h_vectors(*g);
    auto odd = f_odd_vectors(*g);
    vecs.insert(vecs.end(), odd.begin(), odd.end());
    return Subalgebra::from_vectors(g, vecs, {}, "fbar");
}

DetectingE detecting_e(const AlgebraPtr& g) {
    require_square_gl(*g, "detecting_e");
    const int r = g->tag().m;
    std::vector<SparseVec> odd;
    for (int i = 0; i < r; ++i)
        odd.push_back(
            SparseVec::from_entries({{gl_index(*g, i, i + r), Rat(1)}, {gl_index(*g, i + r, i), Rat(1)}}));
    auto vecs = bracket_span(*g, odd);
    vecs.insert(vecs.end(), odd.begin(), odd.end());
    Subalgebra e = Subalgebra::from_vectors(g, vecs, {}, "e");

    // Hyperoctahedral group: adjacent transpositions and one sign change.
    const auto ur = static_cast<std::size_t>(r);
    std::vector<Mat> gens;
    for (std::size_t k = 0; k + 1 < ur; ++k) {
        Mat s(ur, ur);
        for (std::size_t i = 0; i < ur; ++i) s.set(i, i == k ? k + 1 : i == k + 1 ? k : i, Rat(1));
        gens.push_back(std::move(s));
    }
    Mat flip = Mat::identity(ur);
    flip.set(0, 0, Rat(-1));
    gens.push_back(std::move(flip));
    std::size_t order = std::size_t{1} << ur;
    for (std::size_t k = 2; k <= ur; ++k) order *= k;
    return DetectingE{std::move(e), FiniteGroupAction(ur, std::move(gens), order)};
}

Subalgebra detecting_f_W(const AlgebraPtr& g) {
    if (g->tag().family != Family::W) throw std::invalid_argument("detecting_f_W: algebra is not W(n)");
    const int n = g->tag().n;
    std::vector<SparseVec> vecs;
    for (auto c : g->cartan()) vecs.push_back(SparseVec::unit(c));
    const auto& sp = g->space();
    vecs.push_back(SparseVec::unit(sp.index_or_throw(witt_label(0, 0, n))));
    for (int i = 1; i < n; ++i)
        vecs.push_back(SparseVec::unit(sp.index_or_throw(witt_label(1u | (1u << i), i, n))));
    return Subalgebra::from_vectors(g, vecs, {}, "f");
}

FiniteGroupAction witt_normalizer_group(const Subalgebra& f) {
    const std::size_t k = f.odd_indices().size();  // d_1, xi_1 xi_i d_i for i = 2..n
    if (k < 1) throw std::invalid_argument("witt_normalizer_group: empty odd part");
    std::vector<Mat> gens;
    for (std::size_t p = 1; p + 1 < k; ++p) {
        Mat s(k, k);
        for (std::size_t i = 0; i < k; ++i) s.set(i, i == p ? p + 1 : i == p + 1 ? p : i, Rat(1));
        gens.push_back(std::move(s));
    }
    std::size_t order = 1;
    for (std::size_t q = 2; q < k; ++q) order *= q;
    return FiniteGroupAction(k, std::move(gens), order);
}

}  // namespace supercoho

#include "supercoho/varieties.hpp"

#include "supercoho/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>

namespace supercoho {

bool OddPoint::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const Rat& c) { return c.is_zero(); });
}

std::string OddPoint::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords.size(); ++i) s += (i ? "," : "") + coords[i].str();
    return s + ")";
}

OddPoint OddPoint::scaled(const Rat& c) const {
    OddPoint p = *this;
    for (auto& x : p.coords) x *= c;
    return p;
}

std::string to_string(ProjectivityMethod m) {
    switch (m) {
        case ProjectivityMethod::ZeroPoint: return "zero-point";
        case ProjectivityMethod::CliffordInvertible: return "clifford-invertible";
        case ProjectivityMethod::KoszulExactness: return "koszul-exactness";
        case ProjectivityMethod::MixedSplit: return "mixed-split";
    }
    return "unknown";
}

namespace {

// Basis of ker(E^k) for k large enough that it has stabilized.
Mat generalized_kernel(const Mat& e) {
    Mat power = e;
    Mat ker = kernel(power);
    while (true) {
        power = power * e;
        Mat next = kernel(power);
        if (next.cols() == ker.cols()) return ker;
        ker = std::move(next);
    }
}

}  // namespace

RankReport is_projective_over(const Supermodule& m, const OddPoint& x, const Subalgebra& h) {
    const auto odd = h.odd_indices();
    if (x.coords.size() != odd.size())
        throw std::invalid_argument("is_projective_over: point has " + std::to_string(x.coords.size()) +
                                    " coordinates, the odd part has dimension " + std::to_string(odd.size()));
    SparseVec local;
    for (std::size_t i = 0; i < odd.size(); ++i)
        if (!x.coords[i].is_zero()) local.push_back(odd[i], x.coords[i]);

    SparseVec elt, bracket;
    if (m.algebra() == h.own()) {
        elt = local;
        bracket = h.own()->bracket(local, local);
    } else if (m.algebra() == h.parent()) {
        elt = h.embed(local);
        bracket = h.parent()->bracket(elt, elt);
    } else {
        throw std::invalid_argument("is_projective_over: module is over neither h nor its parent");
    }

    RankReport r;
    r.point = x;
    r.self_bracket = m.algebra() == h.own() ? h.embed(bracket) : bracket;
    if (x.is_zero()) {
        r.projective = true;
        r.method = ProjectivityMethod::ZeroPoint;
        return r;
    }

    const Mat d = m.action_of(elt);
    const Mat e = m.action_of(bracket);
    if (d * d != e.scaled(Rat(1, 2))) throw std::logic_error("is_projective_over: rho(x)^2 != rho([x,x])/2");
    const std::size_t n = m.dim();

    if (e.is_zero()) {
        r.projective = n == 2 * rank(d);
        r.method = ProjectivityMethod::KoszulExactness;
        return r;
    }
    if (rank(e) == n) {
        r.projective = true;
        r.method = ProjectivityMethod::CliffordInvertible;
        return r;
    }
    Mat m0 = generalized_kernel(e);
    if (!(e * m0).is_zero())
        throw UndeterminedProjectivity("undetermined projectivity: [x,x] acts nonzero-nilpotently on the 0-block at " +
                                       x.str());
    r.projective = m0.cols() == 2 * rank(d * m0);
    r.method = ProjectivityMethod::MixedSplit;
    return r;
}

ProbeResult rank_variety_probe(const Supermodule& m, const Subalgebra& h, const std::vector<OddPoint>& points) {
    ProbeResult out;
    out.origin_member = m.dim() > 0;
    for (const auto& p : points) {
        RankReport r = is_projective_over(m, p, h);
        bool member = p.is_zero() ? out.origin_member : !r.projective;
        if (!p.is_zero() && is_projective_over(m, p.scaled(Rat(3)), h).projective != r.projective)
            throw std::logic_error("rank_variety_probe: membership is not scaling invariant at " + p.str());
        out.reports.push_back(std::move(r));
        out.members.push_back(member);
    }
    return out;
}

std::vector<OddPoint> random_points(std::size_t dim, std::uint64_t seed, std::size_t count) {
    // Modular reduction of raw engine output keeps the stream identical across standard libraries.
    std::mt19937_64 rng(seed);
    std::vector<OddPoint> out;
    while (out.size() < count) {
        OddPoint p;
        for (std::size_t i = 0; i < dim; ++i) {
            long num = static_cast<long>(rng() % 11) - 5;
            long den = static_cast<long>(rng() % 3) + 1;
            p.coords.emplace_back(num, den);
        }
        if (!p.is_zero() || dim == 0) out.push_back(std::move(p));
    }
    return out;
}

std::vector<OddPoint> probe_points(std::size_t dim, const std::string& spec) {
    auto axis = [&](std::size_t i, Rat a) {
        OddPoint p{std::vector<Rat>(dim)};
        p.coords[i] = std::move(a);
        return p;
    };
    std::vector<OddPoint> out;
    if (spec == "axes" || spec == "grid") {
        for (std::size_t i = 0; i < dim; ++i) out.push_back(axis(i, Rat(1)));
        if (spec == "grid") {
            const long vals[] = {1, -1, 2, -2};
            for (std::size_t i = 0; i < dim; ++i)
                for (std::size_t j = i + 1; j < dim; ++j)
                    for (long a : vals)
                        for (long b : vals) {
                            OddPoint p = axis(i, Rat(a));
                            p.coords[j] = Rat(b);
                            out.push_back(std::move(p));
                        }
        }
        return out;
    }
    if (spec.rfind("random:", 0) == 0) {
        auto rest = spec.substr(7);
        auto colon = rest.find(':');
        if (colon == std::string::npos) throw std::invalid_argument("probe spec must be random:<seed>:<count>");
        try {
            auto seed = std::stoull(rest.substr(0, colon));
            auto count = std::stoull(rest.substr(colon + 1));
            return random_points(dim, seed, count);
        } catch (const std::logic_error&) {
            throw std::invalid_argument("probe spec must be random:<seed>:<count>, got " + spec);
        }
    }
    throw std::invalid_argument("unknown probe set '" + spec + "' (expected axes, grid, or random:<seed>:<count>)");
}

std::vector<Rat> hyperoctahedral_invariants(const OddPoint& x) {
    // e_k of the squares via the product prod (1 + t x_i^2)
    std::vector<Rat> e(x.coords.size() + 1);
    e[0] = Rat(1);
    for (const auto& c : x.coords) {
        Rat sq = c * c;
        for (std::size_t k = e.size() - 1; k > 0; --k) e[k] += e[k - 1] * sq;
    }
    e.erase(e.begin());
    return e;
}

std::vector<SupportSample> SupportDescription::members() const {
    std::vector<SupportSample> out;
    for (const auto& s : samples)
        if (s.member) out.push_back(s);
    return out;
}

SupportDescription support_variety(const Supermodule& m, std::uint64_t seed, std::size_t random_count) {
    const AlgebraPtr& g = m.algebra();
    if (g->tag().family != Family::GL || g->tag().m != g->tag().n)
        throw UnsupportedShape("support_variety: module must be over gl(r|r)");
    auto [e, weyl] = detecting_e(g);
    const std::size_t r = e.odd_indices().size();
    auto group = weyl.elements();

    std::vector<OddPoint> points{OddPoint{std::vector<Rat>(r)}};
    for (auto& p : probe_points(r, "grid")) points.push_back(std::move(p));
    for (auto& p : random_points(r, seed, random_count)) points.push_back(std::move(p));

    SupportDescription out;
    out.ambient_dim = r;
    auto probe = rank_variety_probe(m, e, points);
    for (std::size_t i = 0; i < points.size(); ++i) {
        out.samples.push_back({points[i], hyperoctahedral_invariants(points[i]), probe.members[i]});
        if (i >= 1 && i <= r) out.axes_profile.push_back(probe.members[i]);
        if (points[i].is_zero()) continue;
        for (const Mat& w : group) {
            Vec moved = w.apply(points[i].coords);
            bool member = !is_projective_over(m, OddPoint{moved}, e).projective;
            if (member != probe.members[i]) out.orbit_constant = false;
        }
    }
    return out;
}

TensorCheck tensor_property_check(const Supermodule& m, const Supermodule& n, const Subalgebra& h,
                                  const std::vector<OddPoint>& points) {
    if (m.algebra() != n.algebra()) throw std::invalid_argument("tensor_property_check: modules over different algebras");
    const Supermodule mn = tensor_module(m, n);
    TensorCheck out;
    for (const auto& p : points) {
        if (p.is_zero()) continue;
        ++out.probed;
        bool lhs = !is_projective_over(mn, p, h).projective;
        bool rhs = !is_projective_over(m, p, h).projective && !is_projective_over(n, p, h).projective;
        if (lhs) ++out.members;
        if (lhs != rhs) {
            out.ok = false;
            out.counterexample = p;
            return out;
        }
    }
    return out;
}

Weight rho_gl(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("rho_gl: need m, n >= 1");
    Weight rho;
    for (int k = 1; k <= m; ++k) rho.coords.emplace_back(m - 2 * k + 1 - n, 2);
    for (int l = 1; l <= n; ++l) rho.coords.emplace_back(n - 2 * l + 1 + m, 2);
    return rho;
}

AtypicalityReport atypicality(const Weight& lambda, int m, int n) {
    if (lambda.size() != static_cast<std::size_t>(m + n))
        throw std::invalid_argument("atypicality: weight has " + std::to_string(lambda.size()) + " coordinates, expected " +
                                    std::to_string(m + n));
    AtypicalityReport rep;
    rep.lambda = lambda;
    rep.rho = rho_gl(m, n);
    Weight shifted = lambda + rep.rho;
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            if ((shifted.coords[static_cast<std::size_t>(i)] + shifted.coords[static_cast<std::size_t>(m + j)]).is_zero()) {
                rep.edges.emplace_back(i + 1, j + 1);
                adj[static_cast<std::size_t>(i)].push_back(j);
            }
    // Kuhn's augmenting paths
    std::vector<int> match(static_cast<std::size_t>(n), -1);
    std::function<bool(int, std::vector<char>&)> augment = [&](int i, std::vector<char>& seen) {
        for (int j : adj[static_cast<std::size_t>(i)]) {
            if (seen[static_cast<std::size_t>(j)]) continue;
            seen[static_cast<std::size_t>(j)] = 1;
            if (match[static_cast<std::size_t>(j)] < 0 || augment(match[static_cast<std::size_t>(j)], seen)) {
                match[static_cast<std::size_t>(j)] = i;
                return true;
            }
        }
        return false;
    };
    for (int i = 0; i < m; ++i) {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        if (augment(i, seen)) ++rep.atypicality;
    }
    return rep;
}

bool projectivity_in_category(const Supermodule& m, const std::vector<Weight>& test_weights) {
    const AlgebraPtr& g = m.algebra();
    auto g0 = even_subalgebra(g);
    for (const auto& w : test_weights) {
        auto s = one_dim_module(g, w);
        auto cx = build_relative_complex(g, g0, hom_module(s, m), 2);
        if (cohomology(cx).dims[1] != 0) return false;
    }
    return true;
}

}  // namespace supercoho

#include "sigma/families.hpp"

#include "sigma/realroots.hpp"

#include <stdexcept>

namespace sigma {

AlphaBeta alpha_beta(const PointCoverParams& p)
{
    return {p.m2 + p.j + p.r, p.m1 + p.k + p.r};
}

Graph pointcover_complement(const PointCoverParams& p)
{
    if (p.m1 < 0 || p.m2 < 0 || p.m3 < 0 || p.r < 0 || p.j < 0 || p.k < 0) {
        throw std::invalid_argument("pointcover: negative parameter");
    }
    if (p.order() > max_order) throw std::length_error("pointcover: order exceeds 64");
    constexpr int u1 = 0;
    constexpr int u2 = 1;
    constexpr int u3 = 2;
    GraphBuilder b(p.order());
    b.add_edge(u1, u2);
    int next = 3;
    auto attach = [&](int count, std::initializer_list<int> hubs) {
        for (int i = 0; i < count; ++i, ++next) {
            for (int hub : hubs) b.add_edge(hub, next);
        }
    };
    attach(p.m1, {u1});
    attach(p.m2, {u2});
    attach(p.m3, {u3});
    attach(p.r, {u1, u2});
    attach(p.j, {u2, u3});
    attach(p.k, {u1, u3});
    return b.build();
}

IntPolynomial pointcover_base_quadratic(const AlphaBeta& ab)
{
    return IntPolynomial{BigInt(ab.alpha * ab.beta), BigInt(ab.alpha + ab.beta + 1), 1};
}

IntPolynomial pointcover_j_quadratic(const AlphaBeta& ab)
{
    return IntPolynomial{BigInt((ab.alpha - 1) * ab.beta), BigInt(ab.alpha + ab.beta), 1};
}

IntPolynomial pointcover_k_quadratic(const AlphaBeta& ab)
{
    return IntPolynomial{BigInt(ab.alpha * (ab.beta - 1)), BigInt(ab.alpha + ab.beta), 1};
}

SigmaPolynomial sigma_pointcover_formula(const PointCoverParams& p)
{
    if (p.j < 1 || p.k < 1) throw std::invalid_argument("sigma_pointcover_formula: needs j >= 1 and k >= 1");
    const AlphaBeta ab = alpha_beta(p);
    // H drops u3 and M3 from the complement.
    const int n_h = p.order() - (p.m3 + 1);
    const auto lift = static_cast<std::size_t>(n_h - 2);
    const IntPolynomial base = shift_by_power(pointcover_base_quadratic(ab), lift);
    const IntPolynomial via_j = shift_by_power(pointcover_j_quadratic(ab), lift);
    const IntPolynomial via_k = shift_by_power(pointcover_k_quadratic(ab), lift);

    IntPolynomial inner = shift_by_power(base, 1) + scale(via_j, BigInt(p.j)) + scale(via_k, BigInt(p.k))
                          + scale(base, BigInt(p.m3));
    return SigmaPolynomial(shift_by_power(inner, static_cast<std::size_t>(p.m3)), p.order());
}

RootChain root_chain_check(const AlphaBeta& ab)
{
    if (ab.alpha < 1 || ab.beta < 1) throw std::invalid_argument("root_chain_check: alpha and beta must be >= 1");
    const RatPolynomial cubic = to_rational(shift_by_power(pointcover_base_quadratic(ab), 1));
    const RatPolynomial quad = to_rational(pointcover_j_quadratic(ab));
    const std::vector<RatPolynomial> pair{cubic, quad};
    const RootProfile profile = common_roots(pair);
    const auto r = profile.root_sequence(0);
    const auto t = profile.root_sequence(1);
    RootChain out;
    if (r.size() != 3 || t.size() != 2) return out;
    // Indices into the decreasing root list: smaller index = larger root.
    const std::size_t chain[5] = {r[0], t[0], r[1], t[1], r[2]};
    out.weak = true;
    out.strict = true;
    for (int i = 0; i + 1 < 5; ++i) {
        if (chain[i] > chain[i + 1]) out.weak = false;
        if (chain[i] >= chain[i + 1]) out.strict = false;
    }
    return out;
}

std::vector<Rational> compatibility_probe_grid()
{
    std::vector<Rational> grid;
    for (int e = -6; e <= 6; ++e) {
        Rational c = 1;
        if (e >= 0) {
            c = Rational(1L << e);
        } else {
            c = Rational(1, 1L << -e);
        }
        grid.push_back(c);
    }
    for (auto [num, den] : {std::pair{1, 7}, {1, 3}, {2, 3}, {3, 2}, {41, 5}, {99, 7}}) grid.emplace_back(num, den);
    return grid;
}

bool quadratic_compatibility_check(const AlphaBeta& ab)
{
    if (ab.alpha < 1 || ab.beta < 1) throw std::invalid_argument("quadratic_compatibility_check: alpha, beta >= 1");
    const RatPolynomial qj = to_rational(pointcover_j_quadratic(ab));
    const RatPolynomial qk = to_rational(pointcover_k_quadratic(ab));
    const bool by_interleaver = are_compatible(qj, qk);

    // (c+1)(a-b)^2 > -4(cb + a) makes c qj + qk have nonnegative discriminant.
    bool by_discriminant = true;
    const BigInt a = ab.alpha;
    const BigInt b = ab.beta;
    for (const Rational& c : compatibility_probe_grid()) {
        const bool inequality = (c + 1) * (a - b) * (a - b) > -4 * (c * b + a);
        const RatPolynomial combo = scale(qj, c) + qk;
        const Rational disc = combo[1] * combo[1] - 4 * combo[2] * combo[0];
        if (!inequality || disc < 0) by_discriminant = false;
    }
    if (by_interleaver != by_discriminant) {
        throw std::logic_error("quadratic_compatibility_check: interleaver and discriminant routes disagree");
    }
    return by_interleaver;
}

IntPolynomial f_family_cubic(int variant, int m)
{
    if (m < 0) throw std::invalid_argument("f_family: m must be >= 0");
    const long mm = m;
    switch (variant) {
    case 2: return IntPolynomial{BigInt(5 * mm + 4), BigInt(5 * mm + 12), BigInt(mm + 7), 1};
    case 3: return IntPolynomial{BigInt(5 * mm + 7), BigInt(5 * mm + 16), BigInt(mm + 8), 1};
    default: throw std::invalid_argument("f_family: variant must be 2 or 3");
    }
}

IntPolynomial f_family_sigma(int variant, int m)
{
    const IntPolynomial cubic = f_family_cubic(variant, m);
    return shift_by_power(cubic, static_cast<std::size_t>(m + 3));
}

Graph f45_construction(int variant, int m)
{
    if (m < 0) throw std::invalid_argument("f45_construction: m must be >= 0");
    if (variant != 4 && variant != 5) throw std::invalid_argument("f45_construction: variant must be 4 or 5");
    if (5 + m + 1 > max_order) throw std::length_error("f45_construction: order exceeds 64");
    const Graph core = join(Graph::cycle(5), Graph::complete(m));
    if (variant == 5) return disjoint_union(core, Graph(1));
    GraphBuilder b(core.order() + 1);
    for (auto [u, v] : core.edges()) b.add_edge(u, v);
    b.add_edge(0, core.order());
    return b.build();
}

bool is_proper_k_star(const Graph& g, int k)
{
    if (k < 1) throw std::invalid_argument("is_proper_k_star: k must be >= 1");
    if (vertex_cover_number(g) != k) return false;
    for (const auto& shape : forbidden_shapes(k)) {
        if (eta_count(g, shape) > 0) return true;
    }
    return false;
}

Graph join_with_clique(const Graph& h, int t)
{
    if (t < 0) throw std::invalid_argument("join_with_clique: t must be >= 0");
    return join(h, Graph::complete(t));
}

} // namespace sigma

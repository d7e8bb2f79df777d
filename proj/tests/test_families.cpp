#include "doctest.h"

#include "sigma/families.hpp"
#include "sigma/realroots.hpp"
#include "test_support.hpp"

using namespace sigma;

namespace {

Rational frac(long num, long den)
{
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// Leading Sturm values of the variant-2 and variant-3 cubics as closed forms in m.
Rational third_value(int variant, long m)
{
    return variant == 2 ? frac(2 * (m * m - m + 13), 9) : frac(2 * (m * m + m + 16), 9);
}

Rational fourth_value(int variant, long m)
{
    const long m2 = m * m;
    if (variant == 2) {
        const long top = 5 * m2 * m2 - 16 * m2 * m + 88 * m2 - 92 * m + 272;
        const long q = m2 - m + 13;
        return frac(9 * top, 4 * q * q);
    }
    const long top = 5 * m2 * m2 + 2 * m2 * m + 99 * m2 + 46 * m + 469;
    const long q = m2 + m + 16;
    return frac(9 * top, 4 * q * q);
}

std::vector<PointCoverParams> pointcover_grid(int bound)
{
    std::vector<PointCoverParams> grid;
    for (int m1 = 0; m1 <= bound; ++m1)
    for (int m2 = 0; m2 <= bound; ++m2)
    for (int m3 = 0; m3 <= bound; ++m3)
    for (int r = 0; r <= bound; ++r)
    for (int j = 1; j <= bound; ++j)
    for (int k = 1; k <= bound; ++k) grid.push_back({m1, m2, m3, r, j, k});
    return grid;
}

} // namespace

TEST_CASE("pointcover construction")
{
    const PointCoverParams p{0, 0, 0, 0, 1, 1};
    const Graph h = pointcover_complement(p);
    CHECK(h.order() == 5);
    CHECK(h.edge_count() == 5);
    // u1 = 0, u2 = 1, u3 = 2, then the J vertex (3) and the K vertex (4).
    CHECK(h == Graph::from_edge_list(5, {{0, 1}, {1, 3}, {2, 3}, {0, 4}, {2, 4}}));

    const Graph big = pointcover_complement({1, 2, 1, 2, 1, 1});
    CHECK(big.order() == 11);
    CHECK_FALSE(big.adjacent(0, 2));
    CHECK_FALSE(big.adjacent(1, 2));
    CHECK(vertex_cover_number(big) <= 3);

    CHECK_THROWS(pointcover_complement({-1, 0, 0, 0, 0, 0}));
    CHECK_THROWS(pointcover_complement({20, 20, 20, 0, 1, 1}));
}

TEST_CASE("alpha and beta")
{
    const AlphaBeta ab = alpha_beta({1, 2, 0, 1, 1, 1});
    CHECK(ab.alpha == 4);
    CHECK(ab.beta == 3);
}

TEST_CASE("pointcover formula against the partition oracle")
{
    for (const auto& p : pointcover_grid(1)) {
        const Graph g = complement(pointcover_complement(p));
        INFO("order " << p.order());
        CHECK(sigma_pointcover_formula(p).poly() == oracle::sigma(g));
    }
    const PointCoverParams smallest{0, 0, 0, 0, 1, 1};
    const IntPolynomial s = sigma_pointcover_formula(smallest).poly();
    CHECK(s.leading() == 1);
    CHECK(s == sigma_cliquecover(Graph::cycle(5)).poly()); // complement of C5 is C5
    CHECK(pointcover_base_quadratic(alpha_beta(smallest)) == IntPolynomial{1, 3, 1});
    CHECK_THROWS(sigma_pointcover_formula({0, 0, 0, 0, 0, 1}));
    CHECK_THROWS(sigma_pointcover_formula({0, 0, 0, 0, 1, 0}));
}

TEST_CASE("pointcover formula against every method, parameters up to 2")
{
    for (const auto& p : pointcover_grid(2)) {
        const Graph g = complement(pointcover_complement(p));
        const SigmaPolynomial formula = sigma_pointcover_formula(p);
        CHECK(sigma_cliquecover(g) == formula);
        CHECK(sigma_recursive(g) == formula);
        CHECK(sigma_from_chromatic(g) == formula);
        CHECK(sigma_bruteforce(g) == formula);
        CHECK(is_real_rooted(formula.poly()).verdict);
        if (chromatic_number(g) == g.order() - 3) CHECK(is_proper_k_star(pointcover_complement(p), 3));
    }
}

TEST_CASE("root chain")
{
    const RootChain boundary = root_chain_check({1, 1});
    CHECK(boundary.weak);
    CHECK_FALSE(boundary.strict);
    CHECK(root_chain_check({2, 2}).strict);
    CHECK(root_chain_check({5, 3}).strict);
    for (long a = 2; a <= 8; ++a) {
        for (long b = 2; b <= 8; ++b) CHECK(root_chain_check({a, b}).strict);
    }
    for (long b = 1; b <= 6; ++b) CHECK(root_chain_check({1, b}).weak);
    CHECK_THROWS(root_chain_check({0, 2}));
}

TEST_CASE("quadratic compatibility")
{
    CHECK(quadratic_compatibility_check({3, 2}));
    for (long a = 1; a <= 6; ++a) {
        CHECK(quadratic_compatibility_check({a, a}));
        for (long b = 1; b <= 6; ++b) CHECK(quadratic_compatibility_check({a, b}));
    }
    CHECK_THROWS(quadratic_compatibility_check({0, 1}));

    // The four polynomials of the assembly at alpha = beta = 2 share an interleaver.
    const AlphaBeta ab{2, 2};
    const std::vector<RatPolynomial> four{to_rational(shift_by_power(pointcover_base_quadratic(ab), 1)),
                                          to_rational(pointcover_j_quadratic(ab)),
                                          to_rational(pointcover_k_quadratic(ab)),
                                          to_rational(pointcover_base_quadratic(ab))};
    CHECK(common_interleaver_exists(four));
}

TEST_CASE("F-family closed forms")
{
    CHECK(f_family_sigma(2, 0) == shift_by_power(IntPolynomial{4, 12, 7, 1}, 3));
    CHECK(f_family_sigma(3, 1) == shift_by_power(IntPolynomial{12, 21, 9, 1}, 4));
    CHECK_THROWS(f_family_sigma(4, 0));
    CHECK_THROWS(f_family_sigma(2, -1));
    for (int variant : {2, 3}) {
        for (int m = 0; m <= 100; ++m) {
            const auto cert = is_real_rooted(f_family_sigma(variant, m));
            CHECK(cert.verdict);
        }
    }
}

TEST_CASE("F-family Sturm leading values")
{
    for (int variant : {2, 3}) {
        for (long m = 0; m <= 100; ++m) {
            const RatPolynomial cubic = to_rational(f_family_cubic(variant, static_cast<int>(m)));
            const SturmChain raw = sturm_chain(cubic, false);
            REQUIRE(raw.members.size() == 4);
            CHECK(raw.members[0].leading() == 1);
            CHECK(raw.members[1].leading() == 3);
            CHECK(raw.members[2].leading() == third_value(variant, m));
            CHECK(raw.members[3].leading() == fourth_value(variant, m));

            // The normalized chain differs by positive scalars only.
            const SturmChain norm = sturm_chain(cubic);
            REQUIRE(norm.members.size() == 4);
            for (std::size_t i = 0; i < 4; ++i) {
                CHECK(norm.members[i].leading() > 0);
                CHECK(raw.members[i] == scale(norm.members[i], Rational(raw.members[i].leading() / norm.members[i].leading())));
            }
        }
    }
}

TEST_CASE("F4 and F5 constructions")
{
    const Graph f5 = f45_construction(5, 0);
    CHECK(f5 == disjoint_union(Graph::cycle(5), Graph(1)));
    CHECK(is_real_rooted(sigma_cliquecover(f5).poly()).verdict);
    const Graph f4 = f45_construction(4, 0);
    CHECK(f4.order() == 6);
    CHECK(f4.degree(5) == 1);
    CHECK(f4.adjacent(0, 5));
    CHECK(is_real_rooted(sigma_cliquecover(f4).poly()).verdict);
    for (int m = 0; m <= 10; ++m) {
        CHECK(sigma_cliquecover(join(Graph::cycle(5), Graph::complete(m))).poly()
              == shift_by_power(sigma_cliquecover(Graph::cycle(5)).poly(), static_cast<std::size_t>(m)));
        for (int variant : {4, 5}) {
            const Graph g = f45_construction(variant, m);
            CHECK(g.order() == 6 + m);
            CHECK(chromatic_number(g) == g.order() - 3);
            CHECK(is_real_rooted(sigma_cliquecover(g).poly()).verdict);
        }
    }
    CHECK_THROWS(f45_construction(3, 0));
    CHECK_THROWS(f45_construction(4, 60));
}

TEST_CASE("proper k-stars")
{
    CHECK(is_proper_k_star(disjoint_union(Graph::complete(2), Graph::complete(2)), 2));
    CHECK(is_proper_k_star(Graph::complete(2), 1));
    for (int k = 1; k <= 3; ++k) CHECK_FALSE(is_proper_k_star(Graph(5), k));
    CHECK_FALSE(is_proper_k_star(Graph::path(3), 2)); // cover number 1
    CHECK_THROWS(is_proper_k_star(Graph::complete(2), 0));
}

TEST_CASE("join with a clique")
{
    const Graph c5 = Graph::cycle(5);
    CHECK(join_with_clique(c5, 0) == c5);
    for (int t = 0; t <= 4; ++t) {
        const Graph g = join_with_clique(c5, t);
        CHECK(chromatic_number(g) == 3 + t);
        CHECK(sigma_cliquecover(g).poly() == shift_by_power(sigma_cliquecover(c5).poly(), static_cast<std::size_t>(t)));
    }
    CHECK_THROWS(join_with_clique(c5, -1));
    CHECK_THROWS(join_with_clique(c5, 60));
}

#include "doctest.h"

#include "sigma/canonical.hpp"
#include "sigma/harness.hpp"
#include "sigma/realroots.hpp"
#include "sigma/sigma_engine.hpp"
#include "test_support.hpp"

#include <random>

using namespace sigma;

namespace {

const SigmaMethod all_methods[] = {SigmaMethod::bruteforce, SigmaMethod::cliquecover, SigmaMethod::chromatic,
                                   SigmaMethod::recursive};

void check_all_methods(const Graph& g)
{
    const IntPolynomial expected = oracle::sigma(g);
    for (SigmaMethod m : all_methods) {
        INFO(method_name(m) << " on " << to_graph6(g));
        CHECK(compute_sigma(g, m).poly() == expected);
    }
    if (is_triangle_free(complement(g))) CHECK(sigma_via_matching(g).poly() == expected);
}

} // namespace

TEST_CASE("SigmaPolynomial shape")
{
    const SigmaPolynomial null;
    CHECK(null.poly() == IntPolynomial{1});
    CHECK(null.order() == 0);
    CHECK(null.support_lo() == 0);
    CHECK_THROWS(SigmaPolynomial(IntPolynomial{0, 2}, 1));     // not monic
    CHECK_THROWS(SigmaPolynomial(IntPolynomial{-1, 0, 1}, 2)); // negative coefficient
    CHECK_THROWS(SigmaPolynomial(IntPolynomial{0, 1}, 2));     // wrong degree
    const SigmaPolynomial c5(IntPolynomial{0, 0, 0, 5, 5, 1}, 5);
    CHECK(c5.support_lo() == 3);
    CHECK(c5.support_hi() == 5);
}

TEST_CASE("small examples")
{
    CHECK(sigma_bruteforce(Graph::complete(3)).poly() == IntPolynomial{0, 0, 0, 1});
    CHECK(sigma_bruteforce(Graph(3)).poly() == IntPolynomial{0, 1, 3, 1});
    CHECK(sigma_bruteforce(Graph::path(3)).poly() == IntPolynomial{0, 0, 1, 1});
    CHECK(sigma_cliquecover(Graph(4)).poly() == IntPolynomial{0, 1, 7, 6, 1});
    CHECK(sigma_from_chromatic(Graph(4)).poly() == IntPolynomial{0, 1, 7, 6, 1});
    CHECK(sigma_from_chromatic(Graph::complete(3)).poly() == IntPolynomial{0, 0, 0, 1});
    CHECK(sigma_recursive(Graph::complete(2)).poly() == IntPolynomial{0, 0, 1});
    CHECK(sigma_recursive(Graph(2)).poly() == IntPolynomial{0, 1, 1});
    CHECK(sigma_via_matching(Graph::cycle(5)).poly() == IntPolynomial{0, 0, 0, 5, 5, 1});
    for (int n = 0; n <= 6; ++n) {
        CHECK(sigma_via_matching(Graph::complete(n)).poly() == IntPolynomial::monomial(1, static_cast<std::size_t>(n)));
    }
    CHECK_THROWS_AS(sigma_via_matching(Graph(3)), std::invalid_argument);
    CHECK_THROWS_AS(sigma_bruteforce(Graph(17)), BudgetExceeded);
    CHECK_THROWS_AS(sigma_bruteforce(Graph(12), 1000), BudgetExceeded);
    for (SigmaMethod m : all_methods) CHECK(compute_sigma(Graph(0), m).poly() == IntPolynomial{1});

    // Complement K4: a_{n-1} = eta(K2) = 6, a_{n-2} = eta(K3) + eta(2K2) = 7.
    const SigmaPolynomial s = sigma_cliquecover(Graph(4));
    CHECK(s.poly()[3] == 6);
    CHECK(s.poly()[2] == 7);
}

TEST_CASE("Stirling numbers for edgeless graphs")
{
    for (unsigned n = 0; n <= 12; ++n) {
        const IntPolynomial s = sigma_cliquecover(Graph(static_cast<int>(n))).poly();
        for (unsigned k = 0; k <= n; ++k) CHECK(s[k] == stirling2(n, k));
    }
}

TEST_CASE("every method matches the partition oracle on all labelled graphs of order <= 5")
{
    for (int n = 0; n <= 5; ++n) {
        const int slots = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
            GraphBuilder b(n);
            int k = 0;
            for (int v = 1; v < n; ++v) {
                for (int u = 0; u < v; ++u, ++k) {
                    if (mask >> k & 1) b.add_edge(u, v);
                }
            }
            check_all_methods(b.build());
        }
    }
}

TEST_CASE("every method agrees on every class of order 7")
{
    for (const Graph& g : enumerate_small(7)) {
        const SigmaPolynomial ref = sigma_bruteforce(g);
        for (SigmaMethod m : all_methods) CHECK(compute_sigma(g, m) == ref);
        if (is_triangle_free(complement(g))) CHECK(sigma_via_matching(g) == ref);
    }
}

TEST_CASE("coefficient identities")
{
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = oracle::random_graph(rng, n, 0.5);
        const SigmaPolynomial s = sigma_cliquecover(g);
        const auto nn = static_cast<std::size_t>(n);
        CHECK(s.poly()[nn] == 1);
        CHECK(s.poly()[nn - 1] == BigInt(n * (n - 1) / 2 - g.edge_count()));
        CHECK(s.support_lo() == oracle::chromatic_number(g));
        // a_{n-i} is the number of clique packings of the complement of generation i.
        const Graph h = complement(g);
        for (int i = 1; i <= 4 && i < n; ++i) {
            BigInt sum = 0;
            for (const auto& shape : forbidden_shapes(i)) sum += eta_count(h, shape);
            CHECK(s.poly()[nn - static_cast<std::size_t>(i)] == sum);
        }
    }
}

TEST_CASE("join, disjoint union and clique-cutset closure")
{
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 200; ++trial) {
        const Graph g = oracle::random_graph(rng, static_cast<int>(rng() % 7), 0.5);
        const Graph h = oracle::random_graph(rng, static_cast<int>(rng() % 7), 0.5);
        CHECK(sigma_cliquecover(join(g, h)).poly() == sigma_cliquecover(g).poly() * sigma_cliquecover(h).poly());

        const bool both_real = is_real_rooted(sigma_cliquecover(g).poly()).verdict
                               && is_real_rooted(sigma_cliquecover(h).poly()).verdict;
        if (both_real) CHECK(is_real_rooted(sigma_cliquecover(disjoint_union(g, h)).poly()).verdict);
    }
    // Glue two graphs along a shared clique of order k: vertices 0..k-1 of the
    // second graph are identified with vertices 0..k-1 of the first.
    for (int trial = 0; trial < 200; ++trial) {
        const int k = static_cast<int>(rng() % 3);
        const int n1 = k + static_cast<int>(rng() % 4);
        const int n2 = k + static_cast<int>(rng() % 4);
        Graph g1 = oracle::random_graph(rng, n1, 0.5);
        Graph g2 = oracle::random_graph(rng, n2, 0.5);
        GraphBuilder b(n1 + n2 - k);
        for (auto [u, v] : g1.edges()) b.add_edge(u, v);
        auto map2 = [&](int v) { return v < k ? v : v - k + n1; };
        for (auto [u, v] : g2.edges()) {
            if (u < k && v < k) continue;
            b.add_edge(map2(u), map2(v));
        }
        for (int u = 0; u < k; ++u) {
            for (int v = u + 1; v < k; ++v) b.add_edge(u, v);
        }
        const Graph glued = b.build();
        const std::vector<int> part1 = [&] {
            std::vector<int> p;
            for (int v = 0; v < n1; ++v) p.push_back(v);
            return p;
        }();
        std::vector<int> part2;
        for (int v = 0; v < n2; ++v) part2.push_back(map2(v));
        const bool both_real = is_real_rooted(sigma_cliquecover(induced(glued, part1)).poly()).verdict
                               && is_real_rooted(sigma_cliquecover(induced(glued, part2)).poly()).verdict;
        if (both_real) CHECK(is_real_rooted(sigma_cliquecover(glued).poly()).verdict);
    }
}

TEST_CASE("chromatic polynomial")
{
    CHECK(chromatic_polynomial(Graph::complete(3)) == IntPolynomial{0, 2, -3, 1});
    CHECK(chromatic_polynomial(Graph::path(3)) == IntPolynomial{0, 1, -2, 1});
    CHECK(chromatic_polynomial(Graph(0)) == IntPolynomial{1});
    CHECK_THROWS_AS(chromatic_polynomial(Graph::petersen(), 3), BudgetExceeded);

    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(rng, 1 + static_cast<int>(rng() % 8), 0.5);
        const IntPolynomial p = chromatic_polynomial(g);
        const int chi = oracle::chromatic_number(g);
        CHECK(evaluate_at(p, BigInt(chi)) > 0);
        CHECK(evaluate_at(p, BigInt(chi - 1)) == 0);
    }
}

TEST_CASE("matching polynomial")
{
    CHECK(matching_polynomial(Graph::complete(3)) == IntPolynomial{1, 3});
    CHECK(matching_polynomial(Graph::cycle(4)) == IntPolynomial{1, 4, 2});
    CHECK(matching_polynomial(Graph(4)) == IntPolynomial{1});
    CHECK(matching_polynomial(Graph::cycle(5)) == IntPolynomial{1, 5, 5});
    CHECK(matching_polynomial(Graph::complete(4)) == IntPolynomial{1, 6, 3});
}

TEST_CASE("clique multisets and eta counts")
{
    const Graph k4 = Graph::complete(4);
    CHECK(eta_count(k4, CliqueMultiset({2})) == 6);
    CHECK(eta_count(k4, CliqueMultiset({2, 2})) == 3);
    CHECK(eta_count(k4, CliqueMultiset({3})) == 4);
    CHECK(eta_count(k4, CliqueMultiset({3, 2})) == 0);
    CHECK(eta_count(Graph::complete(6), CliqueMultiset({2, 2, 2})) == 15);
    CHECK(eta_count(k4, CliqueMultiset{}) == 1);
    CHECK_THROWS(CliqueMultiset({1}));

    const CliqueMultiset m({2, 4, 3});
    CHECK(m.orders() == std::vector<int>{4, 3, 2});
    CHECK(m.excess() == 6);
    CHECK(m.vertex_count() == 9);
}

TEST_CASE("forbidden shapes")
{
    const auto four = forbidden_shapes(4);
    const std::vector<std::vector<int>> expected{{5}, {4, 2}, {3, 3}, {3, 2, 2}, {2, 2, 2, 2}};
    REQUIRE(four.size() == expected.size());
    for (std::size_t i = 0; i < four.size(); ++i) CHECK(four[i].orders() == expected[i]);
    CHECK(forbidden_shapes(1).size() == 1);
    CHECK(forbidden_shapes(1)[0].orders() == std::vector<int>{2});
    const std::size_t partition_numbers[] = {1, 1, 2, 3, 5, 7, 11, 15, 22};
    for (int i = 1; i <= 8; ++i) CHECK(forbidden_shapes(i).size() == partition_numbers[i]);
    CHECK_THROWS(forbidden_shapes(0));
}

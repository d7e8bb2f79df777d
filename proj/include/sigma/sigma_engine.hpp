#ifndef SIGMA_SIGMA_ENGINE_HPP
#define SIGMA_SIGMA_ENGINE_HPP

#include "sigma/graph.hpp"
#include "sigma/poly.hpp"

#include <cstdint>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace sigma {

/// sigma(G, x) = sum a_i x^i, a_i = number of partitions of V(G) into i
/// nonempty independent sets. Nonzero coefficients run from chi(G) to n, and
/// a_n = 1; the null graph has sigma = 1.
class SigmaPolynomial {
public:
    SigmaPolynomial() : poly_{BigInt(1)} {}
    /// Validates the shape (nonnegative, monic of degree `order`).
    SigmaPolynomial(IntPolynomial poly, int order);

    const IntPolynomial& poly() const { return poly_; }
    const std::vector<BigInt>& coeffs() const { return poly_.coeffs(); }
    int order() const { return order_; }
    /// Lowest nonzero degree, which is chi(G).
    int support_lo() const;
    int support_hi() const { return order_; }

    friend bool operator==(const SigmaPolynomial& a, const SigmaPolynomial& b) { return a.poly_ == b.poly_; }

private:
    IntPolynomial poly_;
    int order_ = 0;
};

/// Thrown when an exponential method is asked for more work than allowed.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int bruteforce_max_order = 16;
inline constexpr std::uint64_t default_bruteforce_budget = 2'000'000'000;

/// Restricted-growth-string enumeration of set partitions with independent
/// blocks. Reference oracle for every other method. The budget caps the number
/// of search nodes; sparse graphs near the order cap can exceed it.
SigmaPolynomial sigma_bruteforce(const Graph& g, std::uint64_t budget = default_bruteforce_budget);

/// a_{n-i} = number of vertex-disjoint clique packings of the complement
/// with total excess i (a clique of order m+1 has excess m).
SigmaPolynomial sigma_cliquecover(const Graph& g);

/// Deletion-contraction chromatic polynomial converted to the falling
/// factorial basis.
SigmaPolynomial sigma_from_chromatic(const Graph& g);

/// Works on the complement h: for an edge uv of h in no triangle,
/// sigma(comp h) = sigma(comp(h - uv)) + x sigma(comp(h - {u, v})).
/// Falls back to the clique-cover method when no such edge is left.
SigmaPolynomial sigma_recursive(const Graph& g);

/// sigma(G) = x^n m(comp G, 1/x) when comp G is triangle-free; throws
/// std::invalid_argument otherwise.
SigmaPolynomial sigma_via_matching(const Graph& g);

enum class SigmaMethod { bruteforce, cliquecover, chromatic, recursive, matching };

std::string_view method_name(SigmaMethod m);
SigmaPolynomial compute_sigma(const Graph& g, SigmaMethod method = SigmaMethod::cliquecover);

inline constexpr std::uint64_t default_chromatic_budget = 20'000'000;

IntPolynomial chromatic_polynomial(const Graph& g, std::uint64_t budget = default_chromatic_budget);

/// Coefficient of x^i is the number of i-edge matchings.
IntPolynomial matching_polynomial(const Graph& g);

/// Clique orders of a disjoint union of complete graphs, each >= 2, kept in
/// decreasing order.
class CliqueMultiset {
public:
    CliqueMultiset() = default;
    explicit CliqueMultiset(std::vector<int> orders);

    const std::vector<int>& orders() const { return orders_; }
    /// Sum of (order - 1): the generation of the shape.
    int excess() const;
    int vertex_count() const;

    friend bool operator==(const CliqueMultiset&, const CliqueMultiset&) = default;

private:
    std::vector<int> orders_;
};

/// Number of (not necessarily induced) subgraphs of g isomorphic to the
/// disjoint union of cliques described by shape.
BigInt eta_count(const Graph& g, const CliqueMultiset& shape);

/// One shape per integer partition of i: parts m_j become cliques K_{m_j+1}.
/// Ordered like the partitions listed in decreasing lexicographic order.
std::vector<CliqueMultiset> forbidden_shapes(int i);

} // namespace sigma

#endif // SIGMA_SIGMA_ENGINE_HPP

#include "sigma/sigma_engine.hpp"

#include "sigma/canonical.hpp"

#include <algorithm>
#include <unordered_map>

namespace sigma {

namespace {

using Count = unsigned __int128;

// Bell(n) < 2^128 well past any order these exponential methods can reach.
inline constexpr int counting_max_order = 40;

BigInt to_bigint(Count c)
{
    const auto hi = static_cast<std::uint64_t>(c >> 64);
    const auto lo = static_cast<std::uint64_t>(c);
    BigInt out = hi;
    out <<= 64;
    out += BigInt(static_cast<unsigned long>(lo));
    return out;
}

SigmaPolynomial from_counts(const std::vector<Count>& counts, int order)
{
    std::vector<BigInt> coeffs;
    coeffs.reserve(counts.size());
    for (Count c : counts) coeffs.push_back(to_bigint(c));
    return SigmaPolynomial(IntPolynomial(std::move(coeffs)), order);
}

// Canonical memo keys only where the canonical search stays cheap.
inline constexpr int memo_max_order = 10;

Graph contract(const Graph& g, int u, int v)
{
    // Merge v into u, then drop v.
    std::vector<VertexSet> rows(static_cast<std::size_t>(g.order()));
    for (int w = 0; w < g.order(); ++w) rows[static_cast<std::size_t>(w)] = g.neighbors(w);
    const VertexSet merged = (g.neighbors(u) | g.neighbors(v)) & ~bit(u) & ~bit(v);
    for_each_vertex(g.neighbors(v) & ~bit(u), [&](int w) { rows[static_cast<std::size_t>(w)] |= bit(u); });
    for (auto& row : rows) row &= ~bit(v);
    rows[static_cast<std::size_t>(u)] = merged;
    rows[static_cast<std::size_t>(v)] = 0;
    return delete_vertices(Graph::from_adjacency(rows), bit(v));
}

Graph add_edge(const Graph& g, int u, int v)
{
    std::vector<VertexSet> rows(static_cast<std::size_t>(g.order()));
    for (int w = 0; w < g.order(); ++w) rows[static_cast<std::size_t>(w)] = g.neighbors(w);
    rows[static_cast<std::size_t>(u)] |= bit(v);
    rows[static_cast<std::size_t>(v)] |= bit(u);
    return Graph::from_adjacency(rows);
}

class ChromaticSolver {
public:
    explicit ChromaticSolver(std::uint64_t budget) : budget_(budget) {}

    IntPolynomial solve(const Graph& g)
    {
        if (++calls_ > budget_) throw BudgetExceeded("chromatic_polynomial: deletion-contraction budget exceeded");
        const int n = g.order();
        if (n == 0) return IntPolynomial{1};
        const int m = g.edge_count();
        if (m == 0) return IntPolynomial::monomial(1, static_cast<std::size_t>(n));
        if (2 * m == n * (n - 1)) return falling_factorial(static_cast<unsigned>(n));

        std::uint64_t key = 0;
        if (n <= memo_max_order) {
            key = canonical_code(g);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        IntPolynomial out = expand(g);
        if (n <= memo_max_order) memo_.emplace(key, out);
        return out;
    }

private:
    IntPolynomial expand(const Graph& g)
    {
        const int n = g.order();
        const auto comps = components(g);
        if (comps.size() > 1) {
            IntPolynomial out{1};
            for (VertexSet c : comps) out *= solve(induced(g, c));
            return out;
        }
        // A simplicial vertex of degree d contributes a factor (x - d).
        for (int v = 0; v < n; ++v) {
            const VertexSet nb = g.neighbors(v);
            bool clique = true;
            for_each_vertex(nb, [&](int u) { clique = clique && (nb & ~bit(u) & ~g.neighbors(u)) == 0; });
            if (clique) {
                return IntPolynomial{BigInt(-g.degree(v)), 1} * solve(delete_vertices(g, bit(v)));
            }
        }
        const int m = g.edge_count();
        if (2 * m > n * (n - 1) / 2) {
            // Dense: P(G) = P(G + uv) + P(G / uv) over a non-edge.
            for (int u = 0; u < n; ++u) {
                const VertexSet missing = ~g.neighbors(u) & g.vertices() & ~all_vertices(u + 1);
                if (missing) {
                    const int v = lowest(missing);
                    return solve(add_edge(g, u, v)) + solve(contract(g, u, v));
                }
            }
        }
        // Sparse: P(G) = P(G - uv) - P(G / uv), at a minimum-degree vertex.
        int u = 0;
        for (int w = 1; w < n; ++w) {
            if (g.degree(w) < g.degree(u)) u = w;
        }
        const int v = lowest(g.neighbors(u));
        return solve(delete_edge(g, u, v)) - solve(contract(g, u, v));
    }

    std::uint64_t budget_;
    std::uint64_t calls_ = 0;
    std::unordered_map<std::uint64_t, IntPolynomial> memo_;
};

class CliqueCover {
public:
    explicit CliqueCover(const Graph& g) : comp_(complement(g)), n_(g.order()) {}

    std::vector<Count> run() { return solve(comp_.vertices()); }

private:
    // Index = number of blocks in the partition of `left`.
    std::vector<Count> solve(VertexSet left)
    {
        if (left == 0) {
            std::vector<Count> one(1, 0);
            one[0] = 1;
            return one;
        }
        if (auto it = memo_.find(left); it != memo_.end()) return it->second;
        std::vector<Count> out(static_cast<std::size_t>(popcount(left)) + 1, 0);
        const int v = lowest(left);
        // Every clique of the complement through v inside `left`.
        auto extend = [&](auto&& self, VertexSet clique, VertexSet cand) -> void {
            const auto rest = solve(left & ~clique);
            for (std::size_t i = 0; i < rest.size(); ++i) out[i + 1] += rest[i];
            for_each_vertex(cand, [&](int w) {
                self(self, clique | bit(w), cand & comp_.neighbors(w) & ~all_vertices(w + 1));
            });
        };
        extend(extend, bit(v), comp_.neighbors(v) & left);
        memo_.emplace(left, out);
        return out;
    }

    Graph comp_;
    int n_;
    std::unordered_map<VertexSet, std::vector<Count>> memo_;
};

class MatchingCounter {
public:
    explicit MatchingCounter(const Graph& g) : g_(g) {}

    std::vector<Count> solve(VertexSet left)
    {
        VertexSet active = 0;
        for_each_vertex(left, [&](int v) {
            if (g_.neighbors(v) & left) active |= bit(v);
        });
        if (active == 0) return {Count(1)};
        if (auto it = memo_.find(active); it != memo_.end()) return it->second;
        // Branch on the edges at the lowest active vertex: unmatched, or
        // matched along one of its edges.
        const int v = lowest(active);
        std::vector<Count> out = solve(active & ~bit(v));
        for_each_vertex(g_.neighbors(v) & active, [&](int u) {
            const auto sub = solve(active & ~bit(v) & ~bit(u));
            if (out.size() < sub.size() + 1) out.resize(sub.size() + 1, 0);
            for (std::size_t i = 0; i < sub.size(); ++i) out[i + 1] += sub[i];
        });
        memo_.emplace(active, out);
        return out;
    }

private:
    const Graph& g_;
    std::unordered_map<VertexSet, std::vector<Count>> memo_;
};

class ComplementRecursion {
public:
    // Returns sigma(complement(h)).
    IntPolynomial solve(const Graph& h)
    {
        const int n = h.order();
        if (h.edge_count() == 0) return IntPolynomial::monomial(1, static_cast<std::size_t>(n));
        std::uint64_t key = 0;
        if (n <= memo_max_order) {
            key = canonical_code(h);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        IntPolynomial out = expand(h);
        if (n <= memo_max_order) memo_.emplace(key, out);
        return out;
    }

private:
    IntPolynomial expand(const Graph& h)
    {
        for (auto [u, v] : h.edges()) {
            if (h.neighbors(u) & h.neighbors(v)) continue;
            return solve(delete_edge(h, u, v)) + shift_by_power(solve(delete_vertices(h, bit(u) | bit(v))), 1);
        }
        return sigma_cliquecover(complement(h)).poly();
    }

    std::unordered_map<std::uint64_t, IntPolynomial> memo_;
};

void check_counting_order(const Graph& g, const char* what)
{
    if (g.order() > counting_max_order) {
        throw std::length_error(std::string(what) + ": order above " + std::to_string(counting_max_order));
    }
}

} // namespace

SigmaPolynomial::SigmaPolynomial(IntPolynomial poly, int order) : poly_(std::move(poly)), order_(order)
{
    if (order < 0) throw std::invalid_argument("sigma polynomial: negative order");
    if (poly_.degree() != static_cast<std::size_t>(order) || poly_.leading() != 1) {
        throw std::invalid_argument("sigma polynomial: must be monic of degree n");
    }
    for (const auto& c : poly_.coeffs()) {
        if (c < 0) throw std::invalid_argument("sigma polynomial: negative coefficient");
    }
}

int SigmaPolynomial::support_lo() const
{
    int i = 0;
    while (coeffs()[static_cast<std::size_t>(i)] == 0) ++i;
    return i;
}

SigmaPolynomial sigma_bruteforce(const Graph& g, std::uint64_t budget)
{
    const int n = g.order();
    if (n > bruteforce_max_order) {
        throw BudgetExceeded("sigma_bruteforce: order " + std::to_string(n) + " above "
                             + std::to_string(bruteforce_max_order));
    }
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(n) + 1, 0);
    std::vector<VertexSet> blocks(static_cast<std::size_t>(n), 0);
    // Vertex v joins an existing block (kept only if still independent) or
    // opens block number `used`: restricted growth strings with pruning.
    std::uint64_t nodes = 0;
    auto assign = [&](auto&& self, int v, int used) -> void {
        if (++nodes > budget) throw BudgetExceeded("sigma_bruteforce: search budget exceeded");
        if (v == n) {
            ++counts[static_cast<std::size_t>(used)];
            return;
        }
        for (int b = 0; b < used; ++b) {
            auto& block = blocks[static_cast<std::size_t>(b)];
            if (block & g.neighbors(v)) continue;
            block |= bit(v);
            self(self, v + 1, used);
            block &= ~bit(v);
        }
        blocks[static_cast<std::size_t>(used)] = bit(v);
        self(self, v + 1, used + 1);
        blocks[static_cast<std::size_t>(used)] = 0;
    };
    assign(assign, 0, 0);
    std::vector<BigInt> coeffs;
    for (auto c : counts) coeffs.emplace_back(static_cast<unsigned long>(c));
    return SigmaPolynomial(IntPolynomial(std::move(coeffs)), n);
}

SigmaPolynomial sigma_cliquecover(const Graph& g)
{
    check_counting_order(g, "sigma_cliquecover");
    // Packing counts by excess i give a_{n-i}; the recursion counts blocks
    // directly, which is the same vector read from the other end.
    return from_counts(CliqueCover(g).run(), g.order());
}

IntPolynomial chromatic_polynomial(const Graph& g, std::uint64_t budget)
{
    return ChromaticSolver(budget).solve(g);
}

SigmaPolynomial sigma_from_chromatic(const Graph& g)
{
    if (g.order() > bruteforce_max_order) {
        throw BudgetExceeded("sigma_from_chromatic: order above " + std::to_string(bruteforce_max_order));
    }
    const auto a = to_falling_factorial(chromatic_polynomial(g));
    return SigmaPolynomial(IntPolynomial(a), g.order());
}

SigmaPolynomial sigma_recursive(const Graph& g)
{
    check_counting_order(g, "sigma_recursive");
    return SigmaPolynomial(ComplementRecursion().solve(complement(g)), g.order());
}

IntPolynomial matching_polynomial(const Graph& g)
{
    std::vector<BigInt> coeffs;
    for (Count c : MatchingCounter(g).solve(g.vertices())) coeffs.push_back(to_bigint(c));
    return IntPolynomial(std::move(coeffs));
}

SigmaPolynomial sigma_via_matching(const Graph& g)
{
    const Graph h = complement(g);
    if (!is_triangle_free(h)) throw std::invalid_argument("sigma_via_matching: complement is not triangle-free");
    const auto m = matching_polynomial(h);
    const auto n = static_cast<std::size_t>(g.order());
    std::vector<BigInt> coeffs(n + 1, 0);
    for (std::size_t i = 0; i < m.size(); ++i) coeffs[n - i] = m.coeffs()[i];
    return SigmaPolynomial(IntPolynomial(std::move(coeffs)), g.order());
}

std::string_view method_name(SigmaMethod m)
{
    switch (m) {
    case SigmaMethod::bruteforce: return "bruteforce";
    case SigmaMethod::cliquecover: return "cliquecover";
    case SigmaMethod::chromatic: return "chromatic";
    case SigmaMethod::recursive: return "recursive";
    case SigmaMethod::matching: return "matching";
    }
    return "unknown";
}

SigmaPolynomial compute_sigma(const Graph& g, SigmaMethod method)
{
    switch (method) {
    case SigmaMethod::bruteforce: return sigma_bruteforce(g);
    case SigmaMethod::cliquecover: return sigma_cliquecover(g);
    case SigmaMethod::chromatic: return sigma_from_chromatic(g);
    case SigmaMethod::recursive: return sigma_recursive(g);
    case SigmaMethod::matching: return sigma_via_matching(g);
    }
    throw std::invalid_argument("unknown sigma method");
}

CliqueMultiset::CliqueMultiset(std::vector<int> orders) : orders_(std::move(orders))
{
    for (int k : orders_) {
        if (k < 2) throw std::invalid_argument("clique multiset entries must be >= 2");
    }
    std::sort(orders_.begin(), orders_.end(), std::greater<>());
}

int CliqueMultiset::excess() const
{
    int total = 0;
    for (int k : orders_) total += k - 1;
    return total;
}

int CliqueMultiset::vertex_count() const
{
    int total = 0;
    for (int k : orders_) total += k;
    return total;
}

BigInt eta_count(const Graph& g, const CliqueMultiset& shape)
{
    const auto& sizes = shape.orders();
    if (shape.vertex_count() > g.order()) return 0;
    std::vector<std::vector<VertexSet>> by_size(static_cast<std::size_t>(g.order()) + 1);
    for (VertexSet c : cliques(g, 2)) by_size[static_cast<std::size_t>(popcount(c))].push_back(c);

    // Equal sizes are taken in increasing mask order so each unordered
    // collection is counted once.
    std::uint64_t total = 0;
    auto place = [&](auto&& self, std::size_t slot, VertexSet used, VertexSet prev) -> void {
        if (slot == sizes.size()) {
            ++total;
            return;
        }
        const int k = sizes[slot];
        const bool same = slot > 0 && sizes[slot - 1] == k;
        for (VertexSet c : by_size[static_cast<std::size_t>(k)]) {
            if (c & used) continue;
            if (same && c <= prev) continue;
            self(self, slot + 1, used | c, c);
        }
    };
    place(place, 0, 0, 0);
    return BigInt(static_cast<unsigned long>(total));
}

std::vector<CliqueMultiset> forbidden_shapes(int i)
{
    if (i < 1) throw std::invalid_argument("forbidden_shapes: i must be >= 1");
    std::vector<CliqueMultiset> out;
    std::vector<int> parts;
    // Partitions with nonincreasing parts, largest first part first.
    auto gen = [&](auto&& self, int left, int cap) -> void {
        if (left == 0) {
            std::vector<int> orders;
            for (int p : parts) orders.push_back(p + 1);
            out.emplace_back(std::move(orders));
            return;
        }
        for (int p = std::min(left, cap); p >= 1; --p) {
            parts.push_back(p);
            self(self, left - p, p);
            parts.pop_back();
        }
    };
    gen(gen, i, i);
    return out;
}

} // namespace sigma

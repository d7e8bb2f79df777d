#ifndef SIGMA_CANONICAL_HPP
#define SIGMA_CANONICAL_HPP

#include "sigma/graph.hpp"

#include <cstdint>
#include <vector>

namespace sigma {

inline constexpr int max_canonical_order = 11;

/// Canonical labelling by individualisation-refinement over the full search
/// tree (twin vertices explored once). The code packs the order into the top
/// byte and the relabelled upper triangle below it, so two graphs of order
/// <= 11 are isomorphic iff their codes are equal.
struct CanonicalForm {
    std::uint64_t code = 0;
    /// vertex_at[i] is the original vertex placed at canonical position i.
    std::vector<int> vertex_at;
    /// |Aut(g)|, counted as the number of leaves reaching the best code.
    std::uint64_t automorphisms = 1;

    Graph relabelled(const Graph& g) const;
};

CanonicalForm canonical_form(const Graph& g);
std::uint64_t canonical_code(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

/// Exhaustive embedding test: does some injection of small's vertices into
/// big's map every edge of `small` onto an edge of `big`?
bool is_subgraph(const Graph& small, const Graph& big);

} // namespace sigma

#endif // SIGMA_CANONICAL_HPP

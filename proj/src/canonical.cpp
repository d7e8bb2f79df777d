#include "sigma/canonical.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace sigma {

namespace {

struct Partition {
    std::array<VertexSet, max_canonical_order> cells {};
    int count = 0;

    bool discrete(int n) const { return count == n; }
};

// Splits cells by neighbour counts into earlier cells until equitable. New
// pieces keep the position of the cell they came from, ordered by count.
void refine(const Graph& g, Partition& p)
{
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < p.count && !changed; ++s) {
            const VertexSet splitter = p.cells[static_cast<std::size_t>(s)];
            for (int x = 0; x < p.count && !changed; ++x) {
                const VertexSet cell = p.cells[static_cast<std::size_t>(x)];
                if (popcount(cell) == 1) continue;
                std::array<VertexSet, max_canonical_order + 1> by_count {};
                int lo = max_canonical_order + 1;
                int hi = -1;
                for_each_vertex(cell, [&](int v) {
                    const int c = popcount(g.neighbors(v) & splitter);
                    by_count[static_cast<std::size_t>(c)] |= bit(v);
                    lo = std::min(lo, c);
                    hi = std::max(hi, c);
                });
                if (lo == hi) continue;
                Partition next;
                for (int i = 0; i < x; ++i) next.cells[static_cast<std::size_t>(next.count++)] = p.cells[static_cast<std::size_t>(i)];
                for (int c = lo; c <= hi; ++c) {
                    if (by_count[static_cast<std::size_t>(c)]) next.cells[static_cast<std::size_t>(next.count++)] = by_count[static_cast<std::size_t>(c)];
                }
                for (int i = x + 1; i < p.count; ++i) next.cells[static_cast<std::size_t>(next.count++)] = p.cells[static_cast<std::size_t>(i)];
                p = next;
                changed = true;
            }
        }
    }
}

bool twins(const Graph& g, int u, int v)
{
    return (g.neighbors(u) & ~bit(v)) == (g.neighbors(v) & ~bit(u));
}

class Search {
public:
    explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

    CanonicalForm run()
    {
        Partition p;
        if (n_ > 0) p.cells[static_cast<std::size_t>(p.count++)] = g_.vertices();
        refine(g_, p);
        explore(p, 1);
        CanonicalForm out;
        out.code = (static_cast<std::uint64_t>(n_) << 56) | best_code_;
        out.vertex_at = best_order_;
        out.automorphisms = best_count_;
        return out;
    }

private:
    void explore(const Partition& p, std::uint64_t weight)
    {
        if (p.discrete(n_)) {
            leaf(p, weight);
            return;
        }
        int target = 0;
        while (popcount(p.cells[static_cast<std::size_t>(target)]) == 1) ++target;
        const VertexSet cell = p.cells[static_cast<std::size_t>(target)];

        // Twins inside the target cell give isomorphic subtrees.
        std::array<int, max_canonical_order> reps {};
        std::array<std::uint64_t, max_canonical_order> mult {};
        int nreps = 0;
        for_each_vertex(cell, [&](int v) {
            for (int r = 0; r < nreps; ++r) {
                if (twins(g_, reps[static_cast<std::size_t>(r)], v)) {
                    ++mult[static_cast<std::size_t>(r)];
                    return;
                }
            }
            reps[static_cast<std::size_t>(nreps)] = v;
            mult[static_cast<std::size_t>(nreps)] = 1;
            ++nreps;
        });
        for (int r = 0; r < nreps; ++r) {
            const int v = reps[static_cast<std::size_t>(r)];
            Partition child;
            for (int i = 0; i < p.count; ++i) {
                if (i == target) {
                    child.cells[static_cast<std::size_t>(child.count++)] = bit(v);
                    child.cells[static_cast<std::size_t>(child.count++)] = cell & ~bit(v);
                } else {
                    child.cells[static_cast<std::size_t>(child.count++)] = p.cells[static_cast<std::size_t>(i)];
                }
            }
            refine(g_, child);
            explore(child, weight * mult[static_cast<std::size_t>(r)]);
        }
    }

    void leaf(const Partition& p, std::uint64_t weight)
    {
        std::array<int, max_canonical_order> at {};
        for (int i = 0; i < n_; ++i) at[static_cast<std::size_t>(i)] = lowest(p.cells[static_cast<std::size_t>(i)]);
        std::uint64_t code = 0;
        for (int j = 1; j < n_; ++j) {
            const VertexSet row = g_.neighbors(at[static_cast<std::size_t>(j)]);
            for (int i = 0; i < j; ++i) code = (code << 1) | ((row >> at[static_cast<std::size_t>(i)]) & 1U);
        }
        if (!have_best_ || code > best_code_) {
            have_best_ = true;
            best_code_ = code;
            best_count_ = weight;
            best_order_.assign(at.begin(), at.begin() + n_);
        } else if (code == best_code_) {
            best_count_ += weight;
        }
    }

    const Graph& g_;
    int n_;
    bool have_best_ = false;
    std::uint64_t best_code_ = 0;
    std::uint64_t best_count_ = 0;
    std::vector<int> best_order_;
};

} // namespace

Graph CanonicalForm::relabelled(const Graph& g) const
{
    return induced(g, std::span<const int>(vertex_at));
}

CanonicalForm canonical_form(const Graph& g)
{
    if (g.order() > max_canonical_order) {
        throw std::invalid_argument("canonical_form supports order <= 11");
    }
    return Search(g).run();
}

std::uint64_t canonical_code(const Graph& g)
{
    return canonical_form(g).code;
}

bool isomorphic(const Graph& a, const Graph& b)
{
    return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_code(a) == canonical_code(b);
}

bool is_subgraph(const Graph& small, const Graph& big)
{
    if (small.order() > big.order()) return false;
    const int n = small.order();
    std::vector<int> image(static_cast<std::size_t>(n), -1);
    // Map small's vertices one at a time, checking edges to mapped vertices.
    auto place = [&](auto&& self, int v, VertexSet used) -> bool {
        if (v == n) return true;
        for (int w = 0; w < big.order(); ++w) {
            if (used & bit(w)) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u) {
                if (small.adjacent(u, v) && !big.adjacent(image[static_cast<std::size_t>(u)], w)) ok = false;
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = w;
            if (self(self, v + 1, used | bit(w))) return true;
        }
        return false;
    };
    return place(place, 0, 0);
}

} // namespace sigma

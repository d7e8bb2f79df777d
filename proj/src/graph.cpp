#include "sigma/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace sigma {

namespace {

void check_order(int n)
{
    if (n < 0 || n > max_order) {
        throw std::invalid_argument("graph order " + std::to_string(n) + " outside [0, 64]");
    }
}

void check_vertex(const Graph& g, int v)
{
    if (v < 0 || v >= g.order()) {
        throw std::out_of_range("vertex " + std::to_string(v) + " not in graph of order "
                                + std::to_string(g.order()));
    }
}

void check_edge(const Graph& g, int u, int v)
{
    check_vertex(g, u);
    check_vertex(g, v);
    if (!g.adjacent(u, v)) {
        throw std::invalid_argument("(" + std::to_string(u) + "," + std::to_string(v)
                                    + ") is not an edge");
    }
}

} // namespace

Graph::Graph(int n)
{
    check_order(n);
    n_ = n;
}

int Graph::edge_count() const
{
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += degree(v);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
        for_each_vertex(neighbors(u) & ~all_vertices(u + 1), [&](int v) { out.emplace_back(u, v); });
    }
    return out;
}

bool operator==(const Graph& a, const Graph& b)
{
    return a.n_ == b.n_ && std::equal(a.adj_.begin(), a.adj_.begin() + a.n_, b.adj_.begin());
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}

void GraphBuilder::add_edge(int u, int v)
{
    check_vertex(g_, u);
    check_vertex(g_, v);
    if (u == v) throw std::invalid_argument("loop at vertex " + std::to_string(u));
    g_.adj_[static_cast<std::size_t>(u)] |= bit(v);
    g_.adj_[static_cast<std::size_t>(v)] |= bit(u);
}

void GraphBuilder::remove_edge(int u, int v)
{
    check_vertex(g_, u);
    check_vertex(g_, v);
    g_.adj_[static_cast<std::size_t>(u)] &= ~bit(v);
    g_.adj_[static_cast<std::size_t>(v)] &= ~bit(u);
}

Graph Graph::from_edge_list(int n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges) b.add_edge(u, v);
    return b.build();
}

Graph Graph::from_adjacency(std::span<const VertexSet> rows)
{
    const int n = static_cast<int>(rows.size());
    check_order(n);
    Graph g(n);
    for (int v = 0; v < n; ++v) {
        const VertexSet row = rows[static_cast<std::size_t>(v)];
        if (row & ~all_vertices(n)) throw std::invalid_argument("adjacency bit beyond order");
        if (row & bit(v)) throw std::invalid_argument("loop at vertex " + std::to_string(v));
        g.adj_[static_cast<std::size_t>(v)] = row;
    }
    for (int v = 0; v < n; ++v) {
        for_each_vertex(g.neighbors(v), [&](int u) {
            if (!g.adjacent(u, v)) throw std::invalid_argument("asymmetric adjacency");
        });
    }
    return g;
}

Graph Graph::complete(int n)
{
    return complement(Graph(n));
}

Graph Graph::cycle(int n)
{
    GraphBuilder b(n);
    if (n >= 3) {
        for (int v = 0; v < n; ++v) b.add_edge(v, (v + 1) % n);
    } else if (n == 2) {
        b.add_edge(0, 1);
    }
    return b.build();
}

Graph Graph::path(int n)
{
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v) b.add_edge(v, v + 1);
    return b.build();
}

Graph Graph::petersen()
{
    GraphBuilder b(10);
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);
        b.add_edge(i, i + 5);
        b.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return b.build();
}

Graph complement(const Graph& g)
{
    const int n = g.order();
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) rows[static_cast<std::size_t>(v)] = ~g.neighbors(v) & all_vertices(n) & ~bit(v);
    return Graph::from_adjacency(rows);
}

namespace {

Graph combine(const Graph& g, const Graph& h, bool cross)
{
    const int ng = g.order();
    const int n = ng + h.order();
    if (n > max_order) throw std::length_error("combined order exceeds 64");
    std::vector<VertexSet> rows(static_cast<std::size_t>(n));
    const VertexSet g_part = all_vertices(ng);
    const VertexSet h_part = all_vertices(n) & ~g_part;
    for (int v = 0; v < ng; ++v) rows[static_cast<std::size_t>(v)] = g.neighbors(v) | (cross ? h_part : 0);
    for (int v = 0; v < h.order(); ++v) {
        rows[static_cast<std::size_t>(ng + v)] = (h.neighbors(v) << ng) | (cross ? g_part : 0);
    }
    return Graph::from_adjacency(rows);
}

} // namespace

Graph join(const Graph& g, const Graph& h) { return combine(g, h, true); }

Graph disjoint_union(const Graph& g, const Graph& h) { return combine(g, h, false); }

Graph delete_edge(const Graph& g, int u, int v)
{
    check_edge(g, u, v);
    std::vector<VertexSet> rows(static_cast<std::size_t>(g.order()));
    for (int w = 0; w < g.order(); ++w) rows[static_cast<std::size_t>(w)] = g.neighbors(w);
    rows[static_cast<std::size_t>(u)] &= ~bit(v);
    rows[static_cast<std::size_t>(v)] &= ~bit(u);
    return Graph::from_adjacency(rows);
}

Graph delete_vertices(const Graph& g, VertexSet s)
{
    if (s & ~g.vertices()) throw std::out_of_range("vertex set exceeds graph order");
    return induced(g, g.vertices() & ~s);
}

Graph induced(const Graph& g, std::span<const int> vertices)
{
    VertexSet seen = 0;
    for (int v : vertices) {
        check_vertex(g, v);
        if (seen & bit(v)) throw std::invalid_argument("repeated vertex in induced set");
        seen |= bit(v);
    }
    const int k = static_cast<int>(vertices.size());
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            if (g.adjacent(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)])) {
                b.add_edge(i, j);
            }
        }
    }
    return b.build();
}

Graph induced(const Graph& g, VertexSet s)
{
    if (s & ~g.vertices()) throw std::out_of_range("vertex set exceeds graph order");
    std::vector<int> list;
    for_each_vertex(s, [&](int v) { list.push_back(v); });
    return induced(g, std::span<const int>(list));
}

bool edge_in_triangle(const Graph& g, int u, int v)
{
    check_edge(g, u, v);
    return (g.neighbors(u) & g.neighbors(v)) != 0;
}

bool is_triangle_free(const Graph& g)
{
    for (int u = 0; u < g.order(); ++u) {
        const VertexSet later = g.neighbors(u) & ~all_vertices(u + 1);
        bool found = false;
        for_each_vertex(later, [&](int v) { found = found || (g.neighbors(u) & g.neighbors(v)); });
        if (found) return false;
    }
    return true;
}

std::vector<VertexSet> components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (left) {
        VertexSet comp = bit(lowest(left));
        VertexSet frontier = comp;
        while (frontier) {
            VertexSet next = 0;
            for_each_vertex(frontier, [&](int v) { next |= g.neighbors(v); });
            frontier = next & ~comp;
            comp |= next;
        }
        out.push_back(comp);
        left &= ~comp;
    }
    return out;
}

bool is_connected(const Graph& g)
{
    return components(g).size() <= 1;
}

namespace {

// Branch and bound for a maximum clique within cand.
void grow_clique(const Graph& g, VertexSet cand, int size, int& best)
{
    if (cand == 0) {
        best = std::max(best, size);
        return;
    }
    while (cand) {
        if (size + popcount(cand) <= best) return;
        const int v = lowest(cand);
        cand &= ~bit(v);
        grow_clique(g, cand & g.neighbors(v), size + 1, best);
    }
}

int greedy_colour_count(const Graph& g)
{
    // Largest-degree-first greedy.
    std::vector<int> order(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<VertexSet> classes;
    for (int v : order) {
        auto it = std::find_if(classes.begin(), classes.end(),
                               [&](VertexSet c) { return (c & g.neighbors(v)) == 0; });
        if (it == classes.end()) {
            classes.push_back(bit(v));
        } else {
            *it |= bit(v);
        }
    }
    return static_cast<int>(classes.size());
}

class Colourer {
public:
    Colourer(const Graph& g, int k) : g_(g), k_(k), classes_(static_cast<std::size_t>(k), 0) {}

    bool run() { return extend(g_.vertices(), 0); }

private:
    // DSATUR choice: the uncoloured vertex with fewest admissible colours.
    bool extend(VertexSet uncoloured, int used)
    {
        if (uncoloured == 0) return true;
        int pick = -1;
        int pick_options = k_ + 1;
        for_each_vertex(uncoloured, [&](int v) {
            int options = 0;
            for (int c = 0; c < used; ++c) options += (classes_[static_cast<std::size_t>(c)] & g_.neighbors(v)) == 0;
            if (used < k_) ++options;
            if (options < pick_options) {
                pick_options = options;
                pick = v;
            }
        });
        if (pick_options == 0) return false;
        const int limit = std::min(used + 1, k_);
        for (int c = 0; c < limit; ++c) {
            auto& cls = classes_[static_cast<std::size_t>(c)];
            if (cls & g_.neighbors(pick)) continue;
            cls |= bit(pick);
            const bool ok = extend(uncoloured & ~bit(pick), std::max(used, c + 1));
            cls &= ~bit(pick);
            if (ok) return true;
        }
        return false;
    }

    const Graph& g_;
    int k_;
    std::vector<VertexSet> classes_;
};

void cover_search(const Graph& g, VertexSet alive, int taken, int& best)
{
    if (taken >= best) return;
    // First uncovered edge among surviving vertices.
    for (VertexSet s = alive; s; s &= s - 1) {
        const int u = lowest(s);
        const VertexSet nb = g.neighbors(u) & alive;
        if (nb == 0) continue;
        const int v = lowest(nb);
        cover_search(g, alive & ~bit(u), taken + 1, best);
        cover_search(g, alive & ~bit(v), taken + 1, best);
        return;
    }
    best = taken;
}

} // namespace

int clique_number(const Graph& g)
{
    int best = 0;
    grow_clique(g, g.vertices(), 0, best);
    return best;
}

int chromatic_number(const Graph& g)
{
    if (g.order() == 0) return 0;
    const int lower = clique_number(g);
    const int upper = greedy_colour_count(g);
    for (int k = lower; k < upper; ++k) {
        if (Colourer(g, k).run()) return k;
    }
    return upper;
}

int vertex_cover_number(const Graph& g)
{
    int best = std::max(g.order() - 1, 0);
    cover_search(g, g.vertices(), 0, best);
    return best;
}

bool is_chordal(const Graph& g)
{
    // Maximum cardinality search; the reverse visit order is a perfect
    // elimination ordering iff g is chordal.
    const int n = g.order();
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<int> order;
    std::vector<int> position(static_cast<std::size_t>(n), -1);
    VertexSet left = g.vertices();
    while (left) {
        int pick = lowest(left);
        for_each_vertex(left, [&](int v) {
            if (weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]) pick = v;
        });
        position[static_cast<std::size_t>(pick)] = static_cast<int>(order.size());
        order.push_back(pick);
        left &= ~bit(pick);
        for_each_vertex(g.neighbors(pick) & left, [&](int v) { ++weight[static_cast<std::size_t>(v)]; });
    }
    // For each v, its earlier-visited neighbours minus the latest of them must
    // be adjacent to that latest neighbour.
    for (int v : order) {
        VertexSet earlier = 0;
        for_each_vertex(g.neighbors(v), [&](int u) {
            if (position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(v)]) earlier |= bit(u);
        });
        if (earlier == 0) continue;
        int parent = lowest(earlier);
        for_each_vertex(earlier, [&](int u) {
            if (position[static_cast<std::size_t>(u)] > position[static_cast<std::size_t>(parent)]) parent = u;
        });
        const VertexSet rest = earlier & ~bit(parent);
        if ((rest & ~g.neighbors(parent)) != 0) return false;
    }
    return true;
}

std::vector<VertexSet> cliques(const Graph& g, int min_size)
{
    std::vector<VertexSet> out;
    // Each clique is reached once by adding vertices in increasing order.
    auto rec = [&](auto&& self, VertexSet clique, VertexSet cand) -> void {
        if (popcount(clique) >= min_size) out.push_back(clique);
        for_each_vertex(cand, [&](int v) {
            self(self, clique | bit(v), cand & g.neighbors(v) & ~all_vertices(v + 1));
        });
    };
    rec(rec, 0, g.vertices());
    return out;
}

// graph6: size header then the upper triangle, column by column, six bits
// per printable character (value + 63), most significant bit first.
Graph parse_graph6(std::string_view text)
{
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw std::invalid_argument("graph6: empty input");
    for (char c : text) {
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: invalid character");
    }
    std::size_t pos = 0;
    long n = 0;
    if (text[0] != 126) {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == 126) throw std::invalid_argument("graph6: malformed length");
        n = (long(text[1] - 63) << 12) | (long(text[2] - 63) << 6) | long(text[3] - 63);
        if (n < 63) throw std::invalid_argument("graph6: malformed length");
        pos = 4;
    }
    if (n > max_order) throw std::invalid_argument("graph6: order " + std::to_string(n) + " exceeds 64");
    const int order = static_cast<int>(n);
    const std::size_t nbits = static_cast<std::size_t>(order) * static_cast<std::size_t>(order - (order > 0)) / 2;
    const std::size_t nchars = (nbits + 5) / 6;
    if (text.size() - pos != nchars) throw std::invalid_argument("graph6: malformed length");

    GraphBuilder b(order);
    std::size_t k = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int value = text[pos + k / 6] - 63;
            if ((value >> (5 - k % 6)) & 1) b.add_edge(i, j);
        }
    }
    if (k % 6 != 0) {
        const int value = text[pos + k / 6] - 63;
        if (value & ((1 << (6 - k % 6)) - 1)) throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return b.build();
}

std::string to_graph6(const Graph& g)
{
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    return out;
}

Graph parse_edge_list(std::string_view text)
{
    std::istringstream in{std::string(text)};
    long n = -1;
    if (!(in >> n)) throw std::invalid_argument("edge list: missing vertex count");
    if (n < 0 || n > max_order) throw std::invalid_argument("edge list: order outside [0, 64]");
    std::vector<Edge> edges;
    long u = 0;
    long v = 0;
    while (in >> u) {
        if (!(in >> v)) throw std::invalid_argument("edge list: dangling vertex");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("edge list: vertex out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (!in.eof()) throw std::invalid_argument("edge list: unreadable token");
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g)
{
    std::string out = std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

} // namespace sigma

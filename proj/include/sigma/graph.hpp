#ifndef SIGMA_GRAPH_HPP
#define SIGMA_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sigma {

using VertexSet = std::uint64_t;

inline constexpr int max_order = 64;

constexpr VertexSet bit(int v) { return VertexSet{1} << v; }

constexpr VertexSet all_vertices(int n) { return n >= 64 ? ~VertexSet{0} : bit(n) - 1; }

constexpr int popcount(VertexSet s) { return std::popcount(s); }

constexpr int lowest(VertexSet s) { return std::countr_zero(s); }

/// Calls fn(v) for every vertex v in s, in increasing order.
template <typename Fn>
constexpr void for_each_vertex(VertexSet s, Fn&& fn)
{
    while (s) {
        fn(lowest(s));
        s &= s - 1;
    }
}

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with one adjacency bitmask per
/// vertex. Immutable once built; every operation returns a new graph.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    static Graph from_edge_list(int n, std::span<const Edge> edges);
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges)
    {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    /// Builds from raw adjacency rows; validates loops, symmetry and range.
    static Graph from_adjacency(std::span<const VertexSet> rows);

    static Graph complete(int n);
    static Graph cycle(int n);
    static Graph path(int n);
    static Graph petersen();

    int order() const { return n_; }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    VertexSet vertices() const { return all_vertices(n_); }
    int degree(int v) const { return popcount(neighbors(v)); }
    bool adjacent(int u, int v) const { return (neighbors(u) >> v) & 1U; }
    int edge_count() const;
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    int n_ = 0;
    std::array<VertexSet, max_order> adj_ {};

    friend class GraphBuilder;
};

/// Mutable staging area used by the operators below; hands out a Graph once.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    Graph build() const { return g_; }

private:
    Graph g_;
};

Graph complement(const Graph& g);
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

Graph delete_edge(const Graph& g, int u, int v);
Graph delete_vertices(const Graph& g, VertexSet s);
/// Subgraph induced by the listed vertices, relabelled 0..k-1 in list order.
Graph induced(const Graph& g, std::span<const int> vertices);
/// Induced subgraph on a vertex mask, relabelled in increasing vertex order.
Graph induced(const Graph& g, VertexSet s);

bool edge_in_triangle(const Graph& g, int u, int v);
bool is_triangle_free(const Graph& g);
bool is_connected(const Graph& g);
/// Vertex sets of the connected components, ordered by lowest vertex.
std::vector<VertexSet> components(const Graph& g);

int clique_number(const Graph& g);
int chromatic_number(const Graph& g);
int vertex_cover_number(const Graph& g);
bool is_chordal(const Graph& g);

/// Every clique of g with at least min_size vertices, as vertex masks.
std::vector<VertexSet> cliques(const Graph& g, int min_size);

Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

/// Edge-list text: first line "n", then one "u v" pair per line.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

} // namespace sigma

#endif // SIGMA_GRAPH_HPP

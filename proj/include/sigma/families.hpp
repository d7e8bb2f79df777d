#ifndef SIGMA_FAMILIES_HPP
#define SIGMA_FAMILIES_HPP

#include "sigma/graph.hpp"
#include "sigma/poly.hpp"
#include "sigma/sigma_engine.hpp"

namespace sigma {

/// Complement graphs with vertex cover {u1, u2, u3}, u1u2 the only edge inside
/// the cover, no vertex adjacent to all three. Vertex layout: u1 = 0, u2 = 1,
/// u3 = 2, then the leaf sets M1, M2, M3, then R (adjacent to u1, u2), J
/// (u2, u3) and K (u1, u3).
struct PointCoverParams {
    int m1 = 0;
    int m2 = 0;
    int m3 = 0;
    int r = 0;
    int j = 0;
    int k = 0;

    int order() const { return 3 + m1 + m2 + m3 + r + j + k; }
};

struct AlphaBeta {
    long alpha = 0;
    long beta = 0;
};

/// alpha = m2 + j + r, beta = m1 + k + r.
AlphaBeta alpha_beta(const PointCoverParams& p);

Graph pointcover_complement(const PointCoverParams& p);

/// sigma of the complement of pointcover_complement(p), assembled from the
/// three quadratic pieces. Requires j >= 1 and k >= 1.
SigmaPolynomial sigma_pointcover_formula(const PointCoverParams& p);

/// x^2 + (a+b+1)x + ab, x^2 + (a+b)x + (a-1)b and x^2 + (a+b)x + a(b-1).
IntPolynomial pointcover_base_quadratic(const AlphaBeta& ab);
IntPolynomial pointcover_j_quadratic(const AlphaBeta& ab);
IntPolynomial pointcover_k_quadratic(const AlphaBeta& ab);

struct RootChain {
    bool weak = false;   // 0 = r1 >= t1 >= r2 >= t2 >= r3
    bool strict = false; // every inequality strict
    explicit operator bool() const { return strict; }
};

/// Compares the roots 0 = r1 >= r2 >= r3 of x^3 + (a+b+1)x^2 + abx with the
/// roots t1 >= t2 of x^2 + (a+b)x + (a-1)b, exactly. Needs a, b >= 1.
RootChain root_chain_check(const AlphaBeta& ab);

/// Compatibility of the j- and k-quadratics, decided by the interleaver
/// criterion and by the discriminant inequality over a probe grid of c; throws
/// std::logic_error if the two routes disagree.
bool quadratic_compatibility_check(const AlphaBeta& ab);

/// The probe grid used above: c in {1/64, ..., 64} plus a few odd fractions.
std::vector<Rational> compatibility_probe_grid();

/// x^{m+3} times x^3+(m+7)x^2+(5m+12)x+(5m+4) (variant 2) or
/// x^3+(m+8)x^2+(5m+16)x+(5m+7) (variant 3).
IntPolynomial f_family_sigma(int variant, int m);
/// The cubic factor alone.
IntPolynomial f_family_cubic(int variant, int m);

/// Variant 5: (C5 v K_m) plus an isolated vertex. Variant 4: C5 v K_m plus a
/// vertex adjacent only to C5 vertex 0. Returns the graph itself, not its
/// complement.
Graph f45_construction(int variant, int m);

/// alpha_0(g) = k and g contains some k-th generation forbidden subgraph.
bool is_proper_k_star(const Graph& g, int k);

Graph join_with_clique(const Graph& h, int t);

} // namespace sigma

#endif // SIGMA_FAMILIES_HPP

#ifndef SIGMA_REALROOTS_HPP
#define SIGMA_REALROOTS_HPP

#include "sigma/poly.hpp"

#include <optional>
#include <span>
#include <vector>

namespace sigma {

/// f_0 = f, f_1 = f', f_i = -rem(f_{i-1}, f_{i-2}) up to a positive scalar,
/// stopping at the last nonzero member.
struct SturmChain {
    std::vector<RatPolynomial> members;
};

/// With normalize set, every member is replaced by its primitive part
/// (divided by its positive content); signs and degrees are unchanged.
SturmChain sturm_chain(const RatPolynomial& f, bool normalize = true);

enum class WitnessKind { degree_gap, negative_leading };

struct CertificateWitness {
    std::size_t index;
    WitnessKind kind;
};

struct RealRootCertificate {
    bool verdict = true;
    std::vector<std::size_t> degrees;
    std::vector<int> leading_signs;
    std::optional<CertificateWitness> witness;
};

/// All-real-roots test on the Sturm chain: no degree gaps and no negative
/// leading coefficients. Constants are certified vacuously; a polynomial of
/// positive degree must have a positive leading coefficient.
RealRootCertificate is_real_rooted(const RatPolynomial& f);
RealRootCertificate is_real_rooted(const IntPolynomial& f);

/// Number of distinct real roots in (a, b) for square-free f.
std::size_t count_roots_in(const RatPolynomial& f, const Rational& a, const Rational& b);

/// Exactly one root of the square-free part lies in (lo, hi]; endpoints are
/// never roots.
struct RootInterval {
    Rational lo;
    Rational hi;
    unsigned multiplicity = 1;
};

/// Real roots in increasing order with multiplicities. Empty for constants.
std::vector<RootInterval> isolate_roots(const RatPolynomial& f);

/// Shrinks an isolating interval of square-free f until hi - lo <= width.
RootInterval refine(const RatPolynomial& squarefree, RootInterval iv, const Rational& width);

RatPolynomial squarefree_part(const RatPolynomial& f);
/// 1 + max |a_i / a_d|; every real root has absolute value below it.
Rational cauchy_bound(const RatPolynomial& f);

/// The distinct real roots of a family of polynomials, isolated against each
/// other, in decreasing order, with each input's multiplicity at each root.
struct RootProfile {
    std::vector<RootInterval> roots;
    std::vector<std::vector<unsigned>> multiplicity; // [input][root]

    /// Root sequence r_1 >= r_2 >= ... of one input, as indices into roots.
    std::vector<std::size_t> root_sequence(std::size_t input) const;
};

RootProfile common_roots(std::span<const RatPolynomial> polys);

/// Whether the root sequence of f interleaves the root sequence of g:
/// deg g <= deg f <= deg g + 1 and a_1 >= b_1 >= a_2 >= b_2 >= ...
bool interleaves(const RatPolynomial& f, const RatPolynomial& g);

/// True iff f and g have a common interleaver (equivalently, every
/// nonnegative combination of them is real-rooted).
bool are_compatible(const RatPolynomial& f, const RatPolynomial& g);

/// Certificate for c f + g, c > 0.
RealRootCertificate compatible_combo_probe(const RatPolynomial& f, const RatPolynomial& g, const Rational& c);

bool common_interleaver_exists(std::span<const RatPolynomial> fs);

} // namespace sigma

#endif // SIGMA_REALROOTS_HPP

#include "sigma/realroots.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigma {

namespace {

std::size_t deg(const RatPolynomial& p)
{
    return p.degree().value_or(0);
}

std::size_t sign_variations(const SturmChain& chain, const Rational& x)
{
    std::size_t changes = 0;
    int last = 0;
    for (const auto& member : chain.members) {
        const int s = sign_at(member, x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

// A point strictly inside (lo, hi) where p does not vanish; p has finitely
// many roots, so one of the first deg+1 probes succeeds.
Rational split_point(const RatPolynomial& p, const Rational& lo, const Rational& hi)
{
    const Rational width = hi - lo;
    for (unsigned denom = 2;; ++denom) {
        for (unsigned num = 1; num < denom; ++num) {
            Rational m = lo + width * Rational(num, denom);
            m.canonicalize();
            if (sign_at(p, m) != 0) return m;
        }
    }
}

void require_certified(const RatPolynomial& f, const char* what)
{
    if (!f.is_zero() && f.leading() <= 0) {
        throw std::invalid_argument(std::string(what) + ": leading coefficient must be positive");
    }
    if (f.is_zero() || !is_real_rooted(f).verdict) {
        throw std::invalid_argument(std::string(what) + ": input is not certified real-rooted");
    }
}

bool same_sign_change(const RatPolynomial& g, const RootInterval& iv)
{
    return sign_at(g, iv.lo) * sign_at(g, iv.hi) < 0;
}

} // namespace

SturmChain sturm_chain(const RatPolynomial& f, bool normalize)
{
    if (f.is_zero() || *f.degree() == 0) throw std::invalid_argument("sturm_chain: input must have positive degree");
    SturmChain chain;
    auto push = [&](RatPolynomial p) { chain.members.push_back(normalize ? primitive_part(p) : std::move(p)); };
    push(f);
    push(derivative(f));
    while (true) {
        const auto& prev = chain.members[chain.members.size() - 1];
        const auto& prev2 = chain.members[chain.members.size() - 2];
        RatPolynomial next = -rem(prev2, prev);
        if (next.is_zero()) break;
        push(std::move(next));
    }
    return chain;
}

RealRootCertificate is_real_rooted(const RatPolynomial& f)
{
    RealRootCertificate cert;
    if (f.is_zero()) return cert;
    if (*f.degree() == 0) {
        cert.degrees.push_back(0);
        cert.leading_signs.push_back(sgn(f.leading()));
        return cert;
    }
    if (f.leading() <= 0) throw std::invalid_argument("is_real_rooted: leading coefficient must be positive");

    const SturmChain chain = sturm_chain(f);
    for (std::size_t j = 0; j < chain.members.size(); ++j) {
        const auto& member = chain.members[j];
        cert.degrees.push_back(deg(member));
        cert.leading_signs.push_back(sgn(member.leading()));
        if (cert.witness) continue;
        if (j > 0 && cert.degrees[j] + 1 < cert.degrees[j - 1]) {
            cert.witness = CertificateWitness{j, WitnessKind::degree_gap};
        } else if (cert.leading_signs[j] < 0) {
            cert.witness = CertificateWitness{j, WitnessKind::negative_leading};
        }
    }
    cert.verdict = !cert.witness.has_value();
    return cert;
}

RealRootCertificate is_real_rooted(const IntPolynomial& f)
{
    return is_real_rooted(to_rational(f));
}

RatPolynomial squarefree_part(const RatPolynomial& f)
{
    if (f.is_zero() || *f.degree() == 0) return make_monic(f);
    return make_monic(exact_div(f, gcd(f, derivative(f))));
}

Rational cauchy_bound(const RatPolynomial& f)
{
    if (f.is_zero()) throw std::domain_error("cauchy_bound of zero polynomial");
    Rational worst = 0;
    const Rational lead = abs(f.leading());
    for (std::size_t i = 0; i + 1 < f.size(); ++i) worst = std::max(worst, Rational(abs(f.coeffs()[i]) / lead));
    return worst + 1;
}

std::size_t count_roots_in(const RatPolynomial& f, const Rational& a, const Rational& b)
{
    if (!(a < b)) throw std::invalid_argument("count_roots_in: need a < b");
    if (f.is_zero()) throw std::invalid_argument("count_roots_in: zero polynomial");
    if (*f.degree() == 0) return 0;
    if (sign_at(f, a) == 0 || sign_at(f, b) == 0) throw std::invalid_argument("count_roots_in: endpoint is a root");
    if (*gcd(f, derivative(f)).degree() != 0) throw std::invalid_argument("count_roots_in: input is not square-free");
    const SturmChain chain = sturm_chain(f);
    return sign_variations(chain, a) - sign_variations(chain, b);
}

std::vector<RootInterval> isolate_roots(const RatPolynomial& f)
{
    std::vector<RootInterval> out;
    if (f.is_zero() || *f.degree() == 0) return out;
    const RatPolynomial s = squarefree_part(f);
    if (*s.degree() == 0) return out;
    const SturmChain chain = sturm_chain(s);

    struct Span {
        Rational lo, hi;
        std::size_t v_lo, v_hi;
    };
    const Rational bound = cauchy_bound(s);
    std::vector<Span> stack{{-bound, bound, sign_variations(chain, -bound), sign_variations(chain, bound)}};
    while (!stack.empty()) {
        Span sp = std::move(stack.back());
        stack.pop_back();
        const std::size_t count = sp.v_lo - sp.v_hi;
        if (count == 0) continue;
        if (count == 1) {
            out.push_back({sp.lo, sp.hi, 1});
            continue;
        }
        Rational m = split_point(s, sp.lo, sp.hi);
        const std::size_t v_m = sign_variations(chain, m);
        stack.push_back({m, sp.hi, v_m, sp.v_hi});
        stack.push_back({sp.lo, m, sp.v_lo, v_m});
    }
    std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });

    // Multiplicity = number of members of the gcd tower f, gcd(f, f'), ...
    // that still vanish inside the interval.
    for (auto& iv : out) iv.multiplicity = 0;
    RatPolynomial level = f;
    while (level.degree().value_or(0) >= 1) {
        const RatPolynomial g = gcd(s, level);
        if (*g.degree() >= 1) {
            for (auto& iv : out) iv.multiplicity += same_sign_change(g, iv) ? 1 : 0;
        }
        level = gcd(level, derivative(level));
    }
    return out;
}

RootInterval refine(const RatPolynomial& squarefree, RootInterval iv, const Rational& width)
{
    int s_lo = sign_at(squarefree, iv.lo);
    while (iv.hi - iv.lo > width) {
        Rational m = split_point(squarefree, iv.lo, iv.hi);
        const int s_m = sign_at(squarefree, m);
        if (s_m != s_lo) {
            iv.hi = std::move(m);
        } else {
            iv.lo = std::move(m);
            s_lo = s_m;
        }
    }
    return iv;
}

std::vector<std::size_t> RootProfile::root_sequence(std::size_t input) const
{
    std::vector<std::size_t> seq;
    const auto& mult = multiplicity.at(input);
    for (std::size_t r = 0; r < mult.size(); ++r) seq.insert(seq.end(), mult[r], r);
    return seq;
}

RootProfile common_roots(std::span<const RatPolynomial> polys)
{
    RootProfile profile;
    RatPolynomial product{Rational(1)};
    for (const auto& p : polys) {
        if (p.is_zero()) throw std::invalid_argument("common_roots: zero polynomial");
        product *= p;
    }
    const RatPolynomial s = squarefree_part(product);
    if (*s.degree() >= 1) {
        profile.roots = isolate_roots(s);
        std::reverse(profile.roots.begin(), profile.roots.end());
    }
    for (const auto& p : polys) {
        std::vector<unsigned> mult(profile.roots.size(), 0);
        RatPolynomial level = p;
        while (level.degree().value_or(0) >= 1) {
            const RatPolynomial g = gcd(s, level);
            for (std::size_t r = 0; r < profile.roots.size(); ++r) {
                if (same_sign_change(g, profile.roots[r])) ++mult[r];
            }
            level = gcd(level, derivative(level));
        }
        profile.multiplicity.push_back(std::move(mult));
    }
    return profile;
}

// Root sequences are compared through their positions in the shared,
// decreasing root list: a smaller index means a larger root.
bool interleaves(const RatPolynomial& f, const RatPolynomial& g)
{
    require_certified(f, "interleaves");
    require_certified(g, "interleaves");
    const std::vector<RatPolynomial> pair{f, g};
    const RootProfile profile = common_roots(pair);
    const auto a = profile.root_sequence(0);
    const auto b = profile.root_sequence(1);
    if (b.size() > a.size() || a.size() > b.size() + 1) return false;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (a[i] > b[i]) return false;
        if (i + 1 < a.size() && b[i] > a[i + 1]) return false;
    }
    return true;
}

// A common interleaver c exists iff the degrees differ by at most one and
// each slot [max(a_i, b_i), min(a_{i-1}, b_{i-1})] is nonempty, that is
// a_i <= b_{i-1} and b_i <= a_{i-1} for every i >= 2.
bool are_compatible(const RatPolynomial& f, const RatPolynomial& g)
{
    require_certified(f, "are_compatible");
    require_certified(g, "are_compatible");
    const std::vector<RatPolynomial> pair{f, g};
    const RootProfile profile = common_roots(pair);
    const auto a = profile.root_sequence(0);
    const auto b = profile.root_sequence(1);
    const std::size_t p = a.size();
    const std::size_t q = b.size();
    if (p > q + 1 || q > p + 1) return false;
    for (std::size_t i = 1; i < std::max(p, q); ++i) {
        if (i < p && i - 1 < q && a[i] < b[i - 1]) return false;
        if (i < q && i - 1 < p && b[i] < a[i - 1]) return false;
    }
    return true;
}

RealRootCertificate compatible_combo_probe(const RatPolynomial& f, const RatPolynomial& g, const Rational& c)
{
    if (c <= 0) throw std::invalid_argument("compatible_combo_probe: c must be positive");
    if (f.is_zero() || g.is_zero() || f.leading() <= 0 || g.leading() <= 0) {
        throw std::invalid_argument("compatible_combo_probe: leading coefficients must be positive");
    }
    return is_real_rooted(scale(f, c) + g);
}

bool common_interleaver_exists(std::span<const RatPolynomial> fs)
{
    for (const auto& f : fs) require_certified(f, "common_interleaver_exists");
    for (std::size_t i = 0; i < fs.size(); ++i) {
        for (std::size_t j = i + 1; j < fs.size(); ++j) {
            if (!are_compatible(fs[i], fs[j])) return false;
        }
    }
    return true;
}

} // namespace sigma

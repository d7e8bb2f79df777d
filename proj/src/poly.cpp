#include "sigma/poly.hpp"

#include <stdexcept>

namespace sigma {

RatPolynomial to_rational(const IntPolynomial& p)
{
    std::vector<Rational> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return RatPolynomial(std::move(out));
}

Rational evaluate_at(const RatPolynomial& p, const Rational& x)
{
    Rational acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational evaluate_at(const IntPolynomial& p, const Rational& x)
{
    if (p.is_zero()) return 0;
    // Horner over the common denominator keeps intermediates integral.
    const BigInt& num = x.get_num();
    const BigInt& den = x.get_den();
    BigInt acc = 0;
    BigInt den_pow = 1;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
        acc = acc * num + *it * den_pow;
        den_pow *= den;
    }
    // acc = den^deg * p(x); den_pow = den^(deg+1).
    Rational out(acc, den_pow / den);
    out.canonicalize();
    return out;
}

BigInt evaluate_at(const IntPolynomial& p, const BigInt& x)
{
    BigInt acc = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
    return acc;
}

int sign_at(const RatPolynomial& p, const Rational& x)
{
    return sgn(evaluate_at(p, x));
}

RatPolynomial derivative(const RatPolynomial& p)
{
    std::vector<Rational> out;
    for (std::size_t i = 1; i < p.size(); ++i) out.emplace_back(p.coeffs()[i] * static_cast<unsigned long>(i));
    return RatPolynomial(std::move(out));
}

IntPolynomial derivative(const IntPolynomial& p)
{
    std::vector<BigInt> out;
    for (std::size_t i = 1; i < p.size(); ++i) out.emplace_back(p.coeffs()[i] * static_cast<unsigned long>(i));
    return IntPolynomial(std::move(out));
}

DivMod divmod(const RatPolynomial& h, const RatPolynomial& g)
{
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r(h.coeffs());
    const std::size_t dg = g.size() - 1;
    if (r.size() <= dg) return {RatPolynomial{}, h};
    std::vector<Rational> q(r.size() - dg);
    const Rational& lead = g.leading();
    for (std::size_t k = r.size(); k-- > dg;) {
        if (r[k] == 0) continue;
        const Rational factor = r[k] / lead;
        q[k - dg] = factor;
        for (std::size_t i = 0; i <= dg; ++i) r[k - dg + i] -= factor * g.coeffs()[i];
    }
    r.resize(dg);
    return {RatPolynomial(std::move(q)), RatPolynomial(std::move(r))};
}

RatPolynomial rem(const RatPolynomial& h, const RatPolynomial& g)
{
    return divmod(h, g).remainder;
}

RatPolynomial exact_div(const RatPolynomial& h, const RatPolynomial& g)
{
    auto [q, r] = divmod(h, g);
    if (!r.is_zero()) throw std::domain_error("polynomial division is not exact");
    return q;
}

RatPolynomial make_monic(const RatPolynomial& p)
{
    if (p.is_zero()) return p;
    return scale(p, Rational(1 / p.leading()));
}

RatPolynomial gcd(RatPolynomial p, RatPolynomial q)
{
    if (p.is_zero() && q.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    while (!q.is_zero()) {
        RatPolynomial r = primitive_part(rem(p, q));
        p = std::move(q);
        q = std::move(r);
    }
    return make_monic(p);
}

Rational content(const RatPolynomial& p)
{
    if (p.is_zero()) return 1;
    BigInt num_gcd = 0;
    BigInt den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        if (c == 0) continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational out(num_gcd, den_lcm);
    out.canonicalize();
    return out;
}

RatPolynomial primitive_part(const RatPolynomial& p)
{
    if (p.is_zero()) return p;
    return scale(p, Rational(1 / content(p)));
}

std::vector<BigInt> stirling2_row(unsigned n)
{
    std::vector<BigInt> row{1};
    for (unsigned m = 1; m <= n; ++m) {
        std::vector<BigInt> next(m + 1, 0);
        for (unsigned k = 1; k <= m; ++k) {
            next[k] = (k < row.size() ? row[k] * k : BigInt(0)) + row[k - 1];
        }
        row = std::move(next);
    }
    return row;
}

BigInt stirling2(unsigned n, unsigned k)
{
    if (k > n) throw std::domain_error("stirling2: k exceeds n");
    return stirling2_row(n)[k];
}

BigInt binomial(unsigned n, unsigned k)
{
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

IntPolynomial falling_factorial(unsigned k)
{
    IntPolynomial out{1};
    for (unsigned i = 0; i < k; ++i) out *= IntPolynomial{BigInt(-static_cast<long>(i)), 1};
    return out;
}

IntPolynomial from_falling_factorial(std::span<const BigInt> a)
{
    IntPolynomial out;
    IntPolynomial basis{1};
    for (std::size_t i = 0; i < a.size(); ++i) {
        out += scale(basis, a[i]);
        basis *= IntPolynomial{BigInt(-static_cast<long>(i)), 1};
    }
    return out;
}

std::vector<BigInt> to_falling_factorial(const IntPolynomial& p)
{
    // p = b0 + x (b1 + (x-1)(b2 + (x-2)(...))): peel off one node at a time.
    std::vector<BigInt> rest(p.coeffs());
    std::vector<BigInt> out;
    long node = 0;
    while (!rest.empty()) {
        // Synthetic division of rest by (x - node).
        std::vector<BigInt> q(rest.size() - 1);
        BigInt carry = 0;
        for (std::size_t k = rest.size(); k-- > 0;) {
            carry = carry * node + rest[k];
            if (k > 0) q[k - 1] = carry;
        }
        out.push_back(carry);
        rest = std::move(q);
        ++node;
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

LogConcavity is_log_concave(std::span<const BigInt> coeffs)
{
    std::size_t lo = 0;
    while (lo < coeffs.size() && coeffs[lo] == 0) ++lo;
    std::size_t hi = coeffs.size();
    while (hi > lo && coeffs[hi - 1] == 0) --hi;
    for (std::size_t i = lo + 1; i + 1 < hi; ++i) {
        if (coeffs[i] * coeffs[i] < coeffs[i - 1] * coeffs[i + 1]) return {false, i};
    }
    return {};
}

std::vector<std::string> to_decimal_strings(const IntPolynomial& p)
{
    std::vector<std::string> out;
    out.reserve(p.size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_str());
    return out;
}

IntPolynomial from_decimal_strings(std::span<const std::string> digits)
{
    std::vector<BigInt> out;
    for (const auto& s : digits) {
        BigInt c;
        std::string_view body = s;
        if (body.starts_with('+')) body.remove_prefix(1);
        if (body.empty() || c.set_str(std::string(body), 10) != 0) {
            throw std::invalid_argument("not a decimal integer: '" + s + "'");
        }
        out.push_back(std::move(c));
    }
    return IntPolynomial(std::move(out));
}

namespace {

template <typename Coeff>
std::string render(const Polynomial<Coeff>& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        const Coeff& c = p.coeffs()[k];
        if (c == 0) continue;
        Coeff mag = abs(Coeff(c));
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (mag != 1 || k == 0) out += mag.get_str();
        if (k >= 1) out += "x";
        if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
}

} // namespace

std::string to_string(const IntPolynomial& p) { return render(p); }
std::string to_string(const RatPolynomial& p) { return render(p); }

} // namespace sigma

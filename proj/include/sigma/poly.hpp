#ifndef SIGMA_POLY_HPP
#define SIGMA_POLY_HPP

#include <gmpxx.h>

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sigma {

using BigInt = mpz_class;
/// gmp keeps every mpq_class canonical: positive denominator, reduced.
using Rational = mpq_class;

/// Dense univariate polynomial, coeffs[i] multiplies x^i. Trailing zeros are
/// always trimmed, so the zero polynomial is the empty vector and degree() is
/// empty for it.
template <typename Coeff>
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }

    static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }
    static Polynomial monomial(Coeff c, std::size_t k)
    {
        std::vector<Coeff> v(k + 1);
        v[k] = std::move(c);
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    std::optional<std::size_t> degree() const
    {
        if (c_.empty()) return std::nullopt;
        return c_.size() - 1;
    }
    /// Number of stored coefficients: degree + 1, or 0 for the zero polynomial.
    std::size_t size() const { return c_.size(); }
    const std::vector<Coeff>& coeffs() const { return c_; }
    /// Coefficient of x^i; zero past the end.
    Coeff operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
    const Coeff& leading() const { return c_.back(); }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        std::vector<Coeff> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] + b[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b)
    {
        std::vector<Coeff> out(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] - b[i];
        return Polynomial(std::move(out));
    }

    friend Polynomial operator-(const Polynomial& a)
    {
        std::vector<Coeff> out(a.c_);
        for (auto& c : out) c = -c;
        return Polynomial(std::move(out));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Coeff> out(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(out));
    }

    Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
    Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Coeff> c_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

template <typename Coeff>
Polynomial<Coeff> scale(const Polynomial<Coeff>& p, const Coeff& s)
{
    std::vector<Coeff> out(p.coeffs());
    for (auto& c : out) c *= s;
    return Polynomial<Coeff>(std::move(out));
}

/// p * x^k.
template <typename Coeff>
Polynomial<Coeff> shift_by_power(const Polynomial<Coeff>& p, std::size_t k)
{
    if (p.is_zero()) return p;
    std::vector<Coeff> out(k, Coeff(0));
    out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
    return Polynomial<Coeff>(std::move(out));
}

RatPolynomial to_rational(const IntPolynomial& p);

Rational evaluate_at(const RatPolynomial& p, const Rational& x);
Rational evaluate_at(const IntPolynomial& p, const Rational& x);
BigInt evaluate_at(const IntPolynomial& p, const BigInt& x);

int sign_at(const RatPolynomial& p, const Rational& x);

RatPolynomial derivative(const RatPolynomial& p);
IntPolynomial derivative(const IntPolynomial& p);

struct DivMod {
    RatPolynomial quotient;
    RatPolynomial remainder;
};

/// Euclidean division h = q*g + r with deg r < deg g. Throws on g == 0.
DivMod divmod(const RatPolynomial& h, const RatPolynomial& g);
RatPolynomial rem(const RatPolynomial& h, const RatPolynomial& g);
/// Exact quotient; throws std::domain_error if g does not divide h.
RatPolynomial exact_div(const RatPolynomial& h, const RatPolynomial& g);

/// Monic gcd. Throws if both inputs are zero.
RatPolynomial gcd(RatPolynomial p, RatPolynomial q);

RatPolynomial make_monic(const RatPolynomial& p);
/// Positive rational c such that p / c has coprime integer coefficients.
Rational content(const RatPolynomial& p);
/// p divided by its content: integer coefficients, same signs.
RatPolynomial primitive_part(const RatPolynomial& p);

BigInt stirling2(unsigned n, unsigned k);
/// Row S(n, 0..n).
std::vector<BigInt> stirling2_row(unsigned n);
BigInt binomial(unsigned n, unsigned k);

/// (x)_k = x(x-1)...(x-k+1) in the monomial basis.
IntPolynomial falling_factorial(unsigned k);
/// Sum a[i] (x)_i expanded into monomials.
IntPolynomial from_falling_factorial(std::span<const BigInt> a);
/// Coefficients b with p = sum b[i] (x)_i, by synthetic division by x, x-1, ...
std::vector<BigInt> to_falling_factorial(const IntPolynomial& p);

struct LogConcavity {
    bool holds = true;
    std::optional<std::size_t> first_violation;
    explicit operator bool() const { return holds; }
};

/// a[i]^2 >= a[i-1] a[i+1] for every interior i of the nonzero support.
LogConcavity is_log_concave(std::span<const BigInt> coeffs);

std::vector<std::string> to_decimal_strings(const IntPolynomial& p);
IntPolynomial from_decimal_strings(std::span<const std::string> digits);
std::string to_string(const IntPolynomial& p);
std::string to_string(const RatPolynomial& p);

} // namespace sigma

#endif // SIGMA_POLY_HPP

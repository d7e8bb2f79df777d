#include "doctest.h"

#include "sigma/poly.hpp"

#include <random>

using namespace sigma;

namespace {

IntPolynomial random_int_poly(std::mt19937_64& rng, int max_degree, int bound)
{
    std::uniform_int_distribution<int> coeff(-bound, bound);
    std::vector<BigInt> c(static_cast<std::size_t>(rng() % static_cast<unsigned>(max_degree + 1)) + 1);
    for (auto& x : c) x = coeff(rng);
    return IntPolynomial(c);
}

RatPolynomial random_rat_poly(std::mt19937_64& rng, int max_degree)
{
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 5);
    std::vector<Rational> c(static_cast<std::size_t>(rng() % static_cast<unsigned>(max_degree + 1)) + 1);
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return RatPolynomial(c);
}

// x^n by naive repeated multiplication.
BigInt power(const BigInt& x, unsigned n)
{
    BigInt r = 1;
    for (unsigned i = 0; i < n; ++i) r *= x;
    return r;
}

} // namespace

TEST_CASE("representation")
{
    const IntPolynomial zero{0, 0};
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.degree().has_value());
    CHECK(zero.size() == 0);
    CHECK(IntPolynomial{1, 2, 0, 0}.degree() == 1);
    CHECK(IntPolynomial{1, 2}[5] == 0);
    CHECK(IntPolynomial::monomial(3, 2) == IntPolynomial{0, 0, 3});
}

TEST_CASE("arithmetic")
{
    CHECK(IntPolynomial{1, 1} * IntPolynomial{-1, 1} == IntPolynomial{-1, 0, 1});
    CHECK(evaluate_at(RatPolynomial{1, 0, 1}, Rational(0)) == 1);
    CHECK(shift_by_power(IntPolynomial{2, 1}, 3) == IntPolynomial{0, 0, 0, 2, 1});
    CHECK((IntPolynomial{1, 2} - IntPolynomial{1, 2}).is_zero());
    CHECK(scale(IntPolynomial{1, 2}, BigInt(0)).is_zero());
    CHECK(evaluate_at(IntPolynomial{}, Rational(3, 2)) == 0);
    CHECK(evaluate_at(IntPolynomial{1, -3, 2}, Rational(1, 2)) == 0);
    CHECK(evaluate_at(IntPolynomial{1, 1, 1}, BigInt(10)) == 111);
    CHECK(sign_at(RatPolynomial{-1, 0, 1}, Rational(0)) == -1);

    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_int_poly(rng, 6, 20);
        const auto b = random_int_poly(rng, 6, 20);
        const auto c = random_int_poly(rng, 6, 20);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == IntPolynomial{});
        const Rational x(static_cast<long>(rng() % 11) - 5, 3);
        CHECK(evaluate_at(a * b, x) == evaluate_at(a, x) * evaluate_at(b, x));
    }
}

TEST_CASE("derivative")
{
    CHECK(derivative(RatPolynomial{0, 0, 0, 1}) == RatPolynomial{0, 0, 3});
    CHECK(derivative(RatPolynomial{7}).is_zero());
    CHECK(derivative(IntPolynomial{4, 12, 7, 1}) == IntPolynomial{12, 14, 3});
}

TEST_CASE("division and remainder")
{
    CHECK(rem(RatPolynomial{-1, 0, 1}, RatPolynomial{0, 2}) == RatPolynomial{-1});
    CHECK(rem(RatPolynomial{1, 2, 3}, RatPolynomial{1, 2, 3}).is_zero());
    CHECK(rem(RatPolynomial{0, 0, 0, 1}, RatPolynomial{1, 0, 1}) == RatPolynomial{0, -1});
    CHECK_THROWS(rem(RatPolynomial{1, 1}, RatPolynomial{}));

    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 300; ++trial) {
        const auto h = random_rat_poly(rng, 7);
        auto g = random_rat_poly(rng, 4);
        if (g.is_zero()) continue;
        const DivMod qr = divmod(h, g);
        CHECK(qr.quotient * g + qr.remainder == h);
        if (!qr.remainder.is_zero()) CHECK(*qr.remainder.degree() < *g.degree());
        CHECK(exact_div(h * g, g) == h);
    }
}

TEST_CASE("gcd")
{
    const RatPolynomial x_minus_1{-1, 1};
    CHECK(gcd(x_minus_1 * x_minus_1, x_minus_1) == x_minus_1);
    CHECK(gcd(RatPolynomial{1, 1}, RatPolynomial{2, 1}) == RatPolynomial{1});
    CHECK(gcd(RatPolynomial{}, RatPolynomial{0, 2}) == RatPolynomial{0, 1});
    CHECK_THROWS(gcd(RatPolynomial{}, RatPolynomial{}));

    // gcd(f, f') is nontrivial exactly when a root repeats.
    const RatPolynomial distinct = RatPolynomial{1, 1} * RatPolynomial{2, 1} * RatPolynomial{-3, 1};
    const RatPolynomial repeated = distinct * RatPolynomial{2, 1};
    CHECK(*gcd(distinct, derivative(distinct)).degree() == 0);
    CHECK(gcd(repeated, derivative(repeated)) == RatPolynomial{2, 1});

    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 200; ++trial) {
        const auto common = random_rat_poly(rng, 3);
        const auto a = random_rat_poly(rng, 3);
        const auto b = random_rat_poly(rng, 3);
        if (common.is_zero() || a.is_zero() || b.is_zero()) continue;
        const auto d = gcd(common * a, common * b);
        CHECK(d.leading() == 1);
        CHECK(rem(common * a, d).is_zero());
        CHECK(rem(common * b, d).is_zero());
        CHECK(rem(d, make_monic(common)).is_zero());
    }
}

TEST_CASE("content and primitive part")
{
    const RatPolynomial p{Rational(2, 3), Rational(4, 3)};
    CHECK(content(p) == Rational(2, 3));
    CHECK(primitive_part(p) == RatPolynomial{1, 2});
    CHECK(primitive_part(RatPolynomial{-2, -4}) == RatPolynomial{-1, -2}); // sign kept
}

TEST_CASE("Stirling numbers and binomials")
{
    CHECK(stirling2(3, 2) == 3);
    for (unsigned n = 0; n <= 12; ++n) CHECK(stirling2(n, n) == 1);
    for (unsigned n = 1; n <= 12; ++n) CHECK(stirling2(n, 1) == 1);
    CHECK(stirling2(5, 0) == 0);
    CHECK(stirling2(0, 0) == 1);
    CHECK_THROWS(stirling2(2, 3));
    CHECK(stirling2_row(4) == std::vector<BigInt>{0, 1, 7, 6, 1});
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 10) == 0);

    // sum_k S(n,k) (x)_k = x^n at integer points.
    for (unsigned n = 0; n <= 10; ++n) {
        for (long x = 0; x <= 10; ++x) {
            BigInt sum = 0;
            for (unsigned k = 0; k <= n; ++k) sum += stirling2(n, k) * evaluate_at(falling_factorial(k), BigInt(x));
            CHECK(sum == power(BigInt(x), n));
        }
    }
}

TEST_CASE("falling factorial basis")
{
    const std::vector<BigInt> two{0, 0, 1};
    CHECK(from_falling_factorial(two) == IntPolynomial{0, -1, 1});
    const std::vector<BigInt> one{0, 1};
    CHECK(from_falling_factorial(one) == IntPolynomial{0, 1});
    CHECK(to_falling_factorial(IntPolynomial{0, 0, 1}) == std::vector<BigInt>{0, 1, 1});
    CHECK(to_falling_factorial(falling_factorial(3)) == std::vector<BigInt>{0, 0, 0, 1});
    CHECK(to_falling_factorial(IntPolynomial{0, 2, -3, 1}) == std::vector<BigInt>{0, 0, 0, 1}); // K3
    CHECK(to_falling_factorial(IntPolynomial{}).empty());

    std::mt19937_64 rng(6);
    std::uniform_int_distribution<int> coeff(-50, 50);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<BigInt> a(1 + rng() % 12);
        for (auto& x : a) x = coeff(rng);
        while (!a.empty() && a.back() == 0) a.pop_back();
        CHECK(to_falling_factorial(from_falling_factorial(a)) == a);
        const auto p = random_int_poly(rng, 8, 30);
        CHECK(from_falling_factorial(to_falling_factorial(p)) == p);
    }
}

TEST_CASE("log-concavity")
{
    CHECK(is_log_concave(std::vector<BigInt>{1, 3, 1}).holds);
    const auto bad = is_log_concave(std::vector<BigInt>{1, 1, 3});
    CHECK_FALSE(bad.holds);
    CHECK(bad.first_violation == 1);
    CHECK(is_log_concave(stirling2_row(4)).holds);
    // Leading and trailing zeros fall outside the support.
    CHECK(is_log_concave(std::vector<BigInt>{0, 0, 1, 2, 1}).holds);
    CHECK(is_log_concave(std::vector<BigInt>{}).holds);
}

TEST_CASE("decimal serialization")
{
    const IntPolynomial p{BigInt("123456789012345678901234567890"), -4, 0, 1};
    CHECK(from_decimal_strings(to_decimal_strings(p)) == p);
    const std::vector<std::string> plus{"+3", "-2"};
    CHECK(from_decimal_strings(plus) == IntPolynomial{3, -2});
    const std::vector<std::string> junk{"1", "x"};
    CHECK_THROWS(from_decimal_strings(junk));
    CHECK(to_string(IntPolynomial{0, 0, 5, 5, 1}) == "x^4 + 5x^3 + 5x^2");
    CHECK(to_string(IntPolynomial{}) == "0");
}

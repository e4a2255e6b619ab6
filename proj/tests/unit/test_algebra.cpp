#include "oracles.hpp"

#include "fzeta/error.hpp"
#include "fzeta/multi_poly.hpp"
#include "fzeta/poly.hpp"
#include "fzeta/rational_function.hpp"
#include "fzeta/roots.hpp"
#include "fzeta/series.hpp"

#include <doctest.h>

#include <algorithm>

using namespace fzeta;

TEST_CASE("rationals parse, print and canonicalize")
{
    CHECK(to_string(parse_rational("-4/6")) == "-2/3");
    CHECK(to_string(parse_rational(" 7 ")) == "7");
    CHECK(to_string(ratio(-4, 2)) == "-2");
    CHECK(ratio(3, -6) == Rational(-1, 2));
    CHECK_THROWS_AS(ratio(1, 0), DomainError);
    CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
    CHECK_THROWS_AS(parse_rational("abc"), DomainError);
    CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("rational powers of q")
{
    Rational out;
    CHECK(rational_power(Integer(4), ratio(1, 2), out));
    CHECK(out == 2);
    CHECK(rational_power(Integer(8), ratio(-2, 3), out));
    CHECK(out == Rational(1, 4));
    CHECK_FALSE(rational_power(Integer(2), ratio(1, 2), out));
}

TEST_CASE("polynomial arithmetic and gcd")
{
    const Poly a = Poly::from_ints({-1, 0, 1});   // x^2 - 1
    const Poly b = Poly::from_ints({1, 1});       // x + 1
    CHECK(gcd(a, b) == b);
    auto [qq, rr] = divmod(a, b);
    CHECK(qq == Poly::from_ints({-1, 1}));
    CHECK(rr.is_zero());
    CHECK(Poly{}.degree() == -1);
    CHECK(a.taylor_shift(Rational(1)) == Poly::from_ints({0, 2, 1}));
    CHECK(a.reversed(2) == Poly::from_ints({1, 0, -1}));
}

TEST_CASE("complex roots of sample polynomials")
{
    SUBCASE("T^2 - 1")
    {
        auto roots = poly_complex_roots(Poly::from_ints({-1, 0, 1}));
        REQUIRE(roots.size() == 2);
        std::vector<double> re;
        for (auto& r : roots)
            re.push_back(r.value.real());
        std::sort(re.begin(), re.end());
        CHECK(re[0] == doctest::Approx(-1.0));
        CHECK(re[1] == doctest::Approx(1.0));
    }
    SUBCASE("1 + T + 4T^2 has a conjugate pair of modulus 1/2")
    {
        auto roots = poly_complex_roots(Poly::from_ints({1, 1, 4}));
        REQUIRE(roots.size() == 2);
        for (auto& r : roots)
            CHECK(std::abs(r.value) == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(roots[0].value.imag() == doctest::Approx(-roots[1].value.imag()));
    }
    SUBCASE("(1 - 2T)(1 - 3T)")
    {
        auto roots = poly_complex_roots(Poly::from_ints({1, -5, 6}));
        std::vector<double> re;
        for (auto& r : roots)
            re.push_back(r.value.real());
        std::sort(re.begin(), re.end());
        CHECK(re[0] == doctest::Approx(1.0 / 3));
        CHECK(re[1] == doctest::Approx(0.5));
    }
    SUBCASE("multiplicities are reported")
    {
        auto roots = poly_complex_roots(pow(Poly::from_ints({1, -2}), 3) * Poly::from_ints({1, 1}));
        int total = 0;
        for (auto& r : roots)
            total += r.multiplicity;
        CHECK(total == 4);
    }
    CHECK_THROWS_AS(poly_complex_roots(Poly{}), DomainError);
}

TEST_CASE("series logarithm coefficients")
{
    const RationalFunction geo(Poly::constant(1), Poly::from_ints({1, -1}), Var::T);
    auto c = series_log_coefficients(geo, 3);
    REQUIRE(c.size() == 3);
    for (int m = 1; m <= 3; ++m)
        CHECK(m * c[static_cast<std::size_t>(m - 1)] == 1);

    // exp(sum c_m T^m) reproduces (1+T)/(1-T) through order 6
    const RationalFunction f(Poly::from_ints({1, 1}), Poly::from_ints({1, -1}), Var::T);
    auto lc = series_log_coefficients(f, 6);
    std::vector<Rational> a{Rational(0)};
    a.insert(a.end(), lc.begin(), lc.end());
    CHECK(oracle::exp_series(a) == taylor(f, 6));

    // rank-1 elliptic q=2, N=3: m c_m are the point counts over F_{2^m}
    const Poly P = Poly::from_ints({1, 0, 2});
    const RationalFunction Z(P, Poly::from_ints({1, -1}) * Poly::from_ints({1, -2}), Var::t);
    auto zc = series_log_coefficients(Z, 5);
    auto counts = oracle::point_counts(P, Rational(2), 5);
    for (int m = 1; m <= 5; ++m)
        CHECK(m * zc[static_cast<std::size_t>(m - 1)] == Rational(counts[static_cast<std::size_t>(m - 1)]));

    CHECK_THROWS_AS(series_log_coefficients(RationalFunction::constant(2, Var::T), 3), DomainError);
}

TEST_CASE("monomial substitutions")
{
    const RationalFunction f(Poly::constant(1), Poly::from_ints({1, -1}), Var::u);
    const RationalFunction g = f.substitute(MonomialSubstitution::reflect(Rational(1), Var::u));
    CHECK(g == RationalFunction(Poly::from_ints({0, -1}), Poly::from_ints({1, -1}), Var::u));

    const RationalFunction u = RationalFunction::variable(Var::u);
    CHECK(u.substitute(MonomialSubstitution::reflect(Rational(4), Var::u)) ==
          RationalFunction(Poly::constant(4), Poly::from_ints({0, 1}), Var::u));

    const RationalFunction h(Poly::from_ints({3, 1, 7}), Poly::from_ints({2, 0, 0, 5}), Var::u);
    const auto s = MonomialSubstitution::reflect(Rational(9), Var::u);
    CHECK(h.substitute(s).substitute(s) == h);

    const RationalFunction v = h.substitute(MonomialSubstitution::power(Rational(1, 2), 3, Var::v));
    CHECK(v.var() == Var::v);
    CHECK(v.eval(Rational(2)) == h.eval(Rational(4)));
}

TEST_CASE("rational functions are canonical")
{
    const RationalFunction a(Poly::from_ints({-1, 0, 1}), Poly::from_ints({2, 2}), Var::t);
    CHECK(a == RationalFunction(Poly::from_ints({-1, 1}), Poly::constant(2), Var::t));
    CHECK(a.den().leading() == 1);
    CHECK_THROWS_AS(RationalFunction(Poly::constant(1), Poly{}, Var::t), DomainError);
    CHECK_THROWS_AS(RationalFunction(Poly::constant(1), Poly::from_ints({-1, 1})).eval(Rational(1)), PoleError);
}

TEST_CASE("multivariate fractions specialize to the univariate ones")
{
    // (1 + u1 u2^-1) / (1 - 3 u1) at u2 = 2 equals (1 + u/2)/(1 - 3u)
    Exponents e1{1, 0, 0, 0}, e12{1, -1, 0, 0};
    MultiPoly num = MultiPoly::constant(1) + MultiPoly::monomial(1, e12);
    MultiPoly den = MultiPoly::constant(1) - MultiPoly::monomial(3, e1);
    MultiRationalFunction f(num, den);
    const RationalFunction got = f.evaluate(1, Rational(2)).to_univariate(0);
    CHECK(got == RationalFunction(Poly{Rational(1), Rational(1, 2)}, Poly::from_ints({1, -3})));
    CHECK(f.equals(MultiRationalFunction(num * MultiPoly::monomial(5, e1), den * MultiPoly::monomial(5, e1))));
}

#include "oracles.hpp"

#include "fzeta/error.hpp"
#include "fzeta/residues.hpp"

#include <doctest.h>

using namespace fzeta;

namespace {

Exponents ex(int a, int b = 0, int c = 0) { return Exponents{a, b, c, 0}; }

MultiRationalFunction mono(const Rational& c, const Exponents& e)
{
    return MultiRationalFunction(MultiPoly::monomial(c, e), MultiPoly::constant(1));
}

MultiRationalFunction one_minus(const Rational& c, const Exponents& e)
{
    return MultiRationalFunction(MultiPoly::constant(1) - MultiPoly::monomial(c, e), MultiPoly::constant(1));
}

// Weyl sum of the full A_2 period at numeric u_1, u_2 in the permutation model.
Rational a2_period_at(const CurveData& c, const Rational& u1, const Rational& u2)
{
    const Rational q = c.q_rational();
    const oracle::TypeA model{2, 1};
    const Rational u[2] = {u1, u2};
    // q^{-<lambda, alpha^vee>} for alpha = e_i - e_j with lambda = rho + s_1 lambda_1 + s_2 lambda_2
    auto x_of = [&](int i, int j, int shift) {
        Rational v = oracle::rpow(q, -(j - i) - shift);
        const int lo = std::min(i, j), hi = std::max(i, j);
        const int sign = i < j ? 1 : -1;
        for (int m = 0; m < 2; ++m)
            if (lo <= m && m < hi)
                v *= oracle::rpow(u[m], sign);
        return v;
    };
    Rational total = 0;
    for (auto& w : model.perms()) {
        std::vector<int> inv(3);
        for (int i = 0; i < 3; ++i)
            inv[static_cast<std::size_t>(w[static_cast<std::size_t>(i)])] = i;
        Rational term = 1;
        for (int j = 0; j < 2; ++j) {
            // 1 - q^{-<w lambda - rho, alpha_j^vee>} = 1 - q x(w^{-1} alpha_j)
            term /= 1 - q * x_of(inv[static_cast<std::size_t>(j)], inv[static_cast<std::size_t>(j + 1)], 0);
        }
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                if (w[static_cast<std::size_t>(i)] > w[static_cast<std::size_t>(j)])
                    term *= oracle::zeta_hat_at(c.numerator(), c.genus(), q, x_of(i, j, 0)) /
                            oracle::zeta_hat_at(c.numerator(), c.genus(), q, x_of(i, j, 1));
        total += term;
    }
    return total;
}

} // namespace

TEST_CASE("residue operator basics")
{
    const MultiRationalFunction g = one_minus(Rational(3), ex(0, 2)) / one_minus(Rational(1, 5), ex(0, 1));
    // R[g / (1 - u_1)] = g
    const MultiRationalFunction f = g / one_minus(Rational(1), ex(1));
    CHECK(residue_at_one(f, 0).equals(g));
    // regular in u_1
    const MultiRationalFunction reg = g * one_minus(Rational(2), ex(1));
    CHECK(residue_at_one(reg, 0).is_zero());
    // linearity
    const MultiRationalFunction h = mono(Rational(7), ex(0, 1)) / one_minus(Rational(1), ex(2)).pow(2);
    CHECK(residue_at_one(f + h, 0).equals(residue_at_one(f, 0) + residue_at_one(h, 0)));
    // double pole: Res_{u=1} [1/((1-u)^2 u)] = -1
    const MultiRationalFunction d = MultiRationalFunction::constant(1) / one_minus(Rational(1), ex(1)).pow(2);
    CHECK(residue_at_one(d, 0).equals(MultiRationalFunction::constant(1)));
    CHECK_THROWS_AS(residue_at_one(f, 5), DomainError);
}

TEST_CASE("full period")
{
    const CurveData c = CurveData::elliptic(Integer(2), Integer(3));
    const Rational q(2);
    const GroupData a1 = make_group_data('A', 1, 1);
    const auto terms = period_full_terms(c, a1.rs, a1.W);
    CHECK(terms.size() == 2);
    const RationalFunction omega = period_full(c, a1.rs, a1.W).to_univariate(0);
    const RationalFunction U = RationalFunction::variable(Var::u), ONE = RationalFunction::constant(1);
    CHECK(omega == ONE / (ONE - U) + oracle::zeta_hat(c.numerator(), 1, q, 1, 1) /
                                       oracle::zeta_hat(c.numerator(), 1, q, 1, 2) /
                                       (ONE - RationalFunction::constant(q * q) / U));

    const GroupData a2 = make_group_data('A', 2, 1);
    CHECK(period_full_terms(c, a2.rs, a2.W).size() == 6);
    const MultiRationalFunction full = period_full(c, a2.rs, a2.W);
    for (auto [x, y] : std::vector<std::pair<Rational, Rational>>{{Rational(1, 3), Rational(5, 7)}, {Rational(-2), Rational(3, 11)}}) {
        const RationalFunction at_y = full.evaluate(1, y).to_univariate(0);
        CHECK(at_y.eval(x) == a2_period_at(c, x, y));
    }
    CHECK_THROWS_AS(period_full(c, make_group_data('A', 4, 1).rs, make_group_data('A', 4, 1).W), CapabilityError);
}

TEST_CASE("iterated residues reproduce the Weyl-sum formula")
{
    const std::vector<CurveData> curves{CurveData::elliptic(Integer(2), Integer(3)),
                                        CurveData::from_numerator(2, Integer(2), pow(Poly::from_ints({1, 0, 2}), 2))};
    for (const auto& c : curves)
        for (int p = 1; p <= 2; ++p) {
            const GroupData g = make_group_data('A', 2, p);
            const ResidueRouteReport rep = residue_route_equivalence(c, g);
            CHECK(rep.certificate.passed);
            CHECK(rep.via_residues == rep.via_formula);
            CHECK(rep.via_residues == oracle::TypeA{2, p}.period(c.numerator(), c.genus(), c.q_rational()));
            int vanishing = 0;
            for (const auto& t : period_full_terms(c, g.rs, g.W))
                if (!g.pd.in_frak_w(t.w)) {
                    ++vanishing;
                    CHECK(iterated_residue(t.value, g.pd, 2).is_zero());
                }
            CHECK(vanishing == 1);
        }
    const CurveData e = curves[0];
    for (auto [t, n, p] : std::vector<std::tuple<char, int, int>>{{'A', 3, 1}, {'A', 3, 2}, {'B', 2, 1}, {'G', 2, 2}}) {
        CAPTURE(t);
        CAPTURE(p);
        CHECK(residue_route_equivalence(e, make_group_data(t, n, p)).certificate.passed);
    }
}

TEST_CASE("residue order experiment")
{
    const CurveData c = CurveData::elliptic(Integer(2), Integer(3));
    const GroupData g = make_group_data('A', 3, 2);
    RationalFunction a, b;
    for (const auto& t : period_full_terms(c, g.rs, g.W)) {
        a += iterated_residue(t.value, g.pd, 3, {1, 3});
        b += iterated_residue(t.value, g.pd, 3, {3, 1});
    }
    MESSAGE("A_3 p=2 residue orders agree: " << (a == b));
    CHECK(a == period_gp(c, g.rs, g.W, g.pd));
    CHECK_THROWS_AS(iterated_residue(period_full_terms(c, g.rs, g.W).front().value, g.pd, 3, {2}), DomainError);
}

#include "fzeta/purezeta.hpp"

#include "fzeta/composition.hpp"
#include "fzeta/error.hpp"
#include "fzeta/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fzeta {

std::vector<Composition> compositions(int r)
{
    if (r < 1)
        throw DomainError("compositions: r must be positive");
    // Bit i of mask set <=> a cut after position i+1. mask 0 is (r).
    std::vector<Composition> out;
    const unsigned cuts = static_cast<unsigned>(r - 1);
    for (unsigned long mask = 0; mask < (1UL << cuts); ++mask) {
        Composition c;
        int run = 1;
        for (unsigned i = 0; i < cuts; ++i) {
            if (mask & (1UL << i)) {
                c.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.push_back(run);
        out.push_back(std::move(c));
    }
    std::stable_sort(out.begin(), out.end(), [](const Composition& a, const Composition& b) { return a.size() < b.size(); });
    return out;
}

void PureZetaInputs::validate(int genus) const
{
    if (r < 1)
        throw DomainError("pure zeta rank must be at least 1");
    if (static_cast<int>(alphas.size()) != genus) {
        std::ostringstream os;
        os << "expected " << genus << " alpha values (alpha(0), ..., alpha(r(g-1))), got " << alphas.size();
        throw DomainError(os.str());
    }
    for (const auto& a : alphas)
        if (a < 0)
            throw DomainError("alpha values must be non-negative");
    if (beta0 < 0)
        throw DomainError("beta0 must be non-negative");
}

Rational zagier_beta(const CurveData& c, int r, int d)
{
    if (r < 1)
        throw DomainError("zagier_beta: r must be positive");
    const int g = c.genus();
    const Rational q = c.q_rational();
    const Rational base = c.numerator().eval(Rational(1)) / (q - 1);
    std::vector<Rational> v(static_cast<std::size_t>(r) + 1);
    Rational zeta_prod = 1;
    for (int n = 1; n <= r; ++n) {
        if (n >= 2)
            zeta_prod *= artin_zeta_value(c, n);
        v[static_cast<std::size_t>(n)] = base * fzeta::pow(q, static_cast<long>(n * n - 1) * (g - 1)) * zeta_prod;
    }
    Rational total = 0;
    for (const auto& comp : compositions(r)) {
        long cross = 0, partial = 0, total_n = 0;
        for (int n : comp) {
            cross += total_n * n;
            total_n += n;
        }
        Rational term = fzeta::pow(q, cross * (g - 1));
        Rational exponent = 0;
        for (std::size_t i = 0; i + 1 < comp.size(); ++i) {
            partial += comp[i];
            const int m = comp[i] + comp[i + 1];
            exponent += m * frac(ratio(partial * d, r));
            term /= 1 - fzeta::pow(q, m);
        }
        Rational qe;
        if (!rational_power(c.q(), exponent, qe))
            throw DomainError("zagier_beta: q^" + to_string(exponent) + " is not rational");
        term *= qe;
        for (int n : comp)
            term *= v[static_cast<std::size_t>(n)];
        total += term;
    }
    return total;
}

Rational mass_reformulated(const CurveData& c, int r)
{
    if (r < 1)
        throw DomainError("mass_reformulated: r must be positive");
    const Rational q = c.q_rational();
    const int g = c.genus();
    std::vector<Rational> zhat(static_cast<std::size_t>(r) + 1);
    zhat[1] = zeta_special_residue(c);
    for (int i = 2; i <= r; ++i)
        zhat[static_cast<std::size_t>(i)] = completed_zeta_value(c, i);
    Rational sum = composition_sum<Rational>(
        r, [&](int m) -> Rational { return fzeta::pow(q, m) - 1; },
        [&](int n) {
            Rational p = 1;
            for (int i = 1; i <= n; ++i)
                p *= zhat[static_cast<std::size_t>(i)];
            return p;
        });
    return fzeta::pow(q, static_cast<long>(g - 1) * r * (r - 1) / 2) * sum;
}

Rational elliptic_rank2_beta0(const Integer& q, const Integer& N)
{
    Rational qq(q), n(N);
    return n / (qq - 1) * (1 + n / (qq * qq - 1));
}

PureZetaInputs rank1_inputs(const CurveData& c)
{
    PureZetaInputs in;
    in.r = 1;
    // Effective divisors of degree m are counted by [t^m] Z_X(t).
    Series z = taylor(artin_zeta(c), c.genus());
    for (int m = 0; m < c.genus(); ++m)
        in.alphas.push_back(z[static_cast<std::size_t>(m)]);
    in.beta0 = c.numerator().eval(Rational(1)) / (c.q_rational() - 1);
    return in;
}

PureZetaInputs elliptic_rank2_inputs(const CurveData& c)
{
    if (c.genus() != 1)
        throw DomainError("elliptic_rank2_inputs requires genus 1");
    PureZetaInputs in;
    in.r = 2;
    in.alphas = std::vector<Rational>{c.numerator().eval(Rational(1)) / (c.q_rational() - 1)};
    in.beta0 = zagier_beta(c, 2, 0);
    return in;
}

PureZeta pure_zeta(const CurveData& c, const PureZetaInputs& in)
{
    const int g = c.genus();
    in.validate(g);
    const Rational Q = fzeta::pow(c.q_rational(), in.r);
    Poly S;
    for (int m = 0; m <= g - 2; ++m) {
        const Rational& a = in.alphas[static_cast<std::size_t>(m)];
        S += Poly::monomial(a, m);
        S += Poly::monomial(a * fzeta::pow(Q, g - 1 - m), 2 * (g - 1) - m);
    }
    S += Poly::monomial(in.alphas[static_cast<std::size_t>(g - 1)], g - 1);
    const Poly den = Poly{Rational(1), Rational(-1)} * Poly{Rational(1), -Q};
    Poly numerator = S * den + Poly::monomial((Q - 1) * in.beta0, g);
    PureZeta z{in.r, g, Q, RationalFunction(numerator, den, Var::T),
               RationalFunction(numerator, den.shifted(g - 1), Var::T), numerator};
    return z;
}

Certificate fe_check_pure(const Poly& p, int genus, const Rational& Q)
{
    Certificate cert;
    {
        std::ostringstream os;
        os << "deg P = " << p.degree() << " (expected " << 2 * genus << ")";
        cert.record(p.degree() == 2 * genus, os.str());
    }
    for (int i = 0; i <= genus; ++i) {
        Rational lhs = p[2 * genus - i];
        Rational rhs = fzeta::pow(Q, genus - i) * p[i];
        std::ostringstream os;
        os << "p_" << (2 * genus - i) << " = Q^" << (genus - i) << " * p_" << i << ": " << to_string(lhs)
           << (lhs == rhs ? " == " : " != ") << to_string(rhs) << " [index " << i << "]";
        cert.record(lhs == rhs, os.str());
    }
    return cert;
}

double RHReport::max_deviation() const
{
    double m = 0;
    for (double d : deviations)
        m = std::max(m, d);
    return m;
}

RHReport rh_report(const Poly& p, const Rational& Q, double tol)
{
    if (p.is_zero())
        throw DomainError("rh_report: zero polynomial");
    RHReport rep;
    rep.polynomial = p;
    rep.Q = Q;
    rep.tolerance = tol;
    if (p.degree() >= 1) {
        const double sq = std::sqrt(Q.get_d());
        for (const auto& r : poly_complex_roots(p, tol)) {
            for (int k = 0; k < r.multiplicity; ++k) {
                rep.roots.push_back(r.value);
                rep.multiplicities.push_back(r.multiplicity);
                rep.deviations.push_back(std::abs(std::abs(r.value) * sq - 1.0));
            }
        }
    }
    if (p.degree() == 2) {
        // Product of roots p0/p2 must be 1/Q; complex pair or a double root.
        rep.exact = true;
        const Rational disc = p[1] * p[1] - 4 * p[0] * p[2];
        if (disc < 0) {
            rep.passed = (p[0] / p[2] == 1 / Q);
        } else if (disc == 0) {
            Rational root = -p[1] / (2 * p[2]);
            rep.passed = (root * root == 1 / Q);
        } else {
            rep.passed = false;
        }
        return rep;
    }
    rep.passed = rep.max_deviation() <= tol;
    return rep;
}

RationalFunction mixed_zeta_rank2(const Integer& q, const Rational& alpha0, const Rational& beta0, const Rational& beta1)
{
    const Rational qq(q);
    const Rational q2 = qq * qq;
    const Poly one_m_t2{Rational(1), Rational(0), Rational(-1)};
    const Poly one_m_q2t2{Rational(1), Rational(0), -q2};
    RationalFunction even = RationalFunction::constant(alpha0, Var::t) +
                            RationalFunction(Poly::monomial(beta0 * (q2 - 1), 2), one_m_t2 * one_m_q2t2, Var::t);
    RationalFunction odd = RationalFunction(Poly::monomial(qq, 1), one_m_q2t2, Var::t) -
                           RationalFunction(Poly::monomial(1, 1), one_m_t2, Var::t);
    return even + RationalFunction::constant(beta1, Var::t) * odd;
}

RationalFunction mixed_zeta_rank2(const Integer& q, const Integer& N)
{
    const Rational a0 = Rational(N) / (Rational(q) - 1);
    return mixed_zeta_rank2(q, a0, elliptic_rank2_beta0(q, N), a0);
}

Poly mixed_rank2_printed_numerator(const Integer& q, const Integer& N)
{
    const Rational qq(q);
    return Poly{Rational(1), qq - 1, Rational(N) - 1, (qq - 1) * qq, qq * qq};
}

Poly mixed_rank2_numerator(const Integer& q, const Integer& N)
{
    const Rational qq(q);
    const Poly den = Poly{Rational(1), Rational(0), Rational(-1)} * Poly{Rational(1), Rational(0), -qq * qq};
    RationalFunction z = mixed_zeta_rank2(q, N) * RationalFunction(den, Poly::constant(1), Var::t);
    if (!z.den().is_constant())
        throw ConsistencyError("mixed rank-2 zeta has poles outside (1-t^2)(1-q^2 t^2)");
    return z.num() * ((qq - 1) / Rational(N));
}

RationalFunction partial_zeta_rank3_elliptic(const Integer& q, const Integer& N)
{
    const Rational qq(q);
    const Poly one_m_q3t3{Rational(1), Rational(0), Rational(0), -qq * qq * qq};
    const Poly one_m_t3{Rational(1), Rational(0), Rational(0), Rational(-1)};
    RationalFunction a(Poly{Rational(0), qq, qq * qq}, one_m_q3t3, Var::t);
    RationalFunction b(Poly{Rational(0), Rational(1), Rational(1)}, one_m_t3, Var::t);
    return RationalFunction::constant(Rational(N), Var::t) * (a - b);
}

Poly partial_rank3_printed_bracket(const Integer& q)
{
    const Rational qq(q);
    return Poly{Rational(1), qq + 1, Rational(0), qq * (qq - 1), qq * qq};
}

Poly partial_rank3_bracket(const Integer& q)
{
    const Rational qq(q);
    return Poly{Rational(1), qq + 1, Rational(0), qq * (qq + 1), qq * qq};
}

RationalFunction partial_zeta_rank3_printed(const Integer& q, const Integer& N)
{
    const Rational qq(q);
    Poly num = Poly{Rational(0), (qq - 1) * Rational(N)} * partial_rank3_printed_bracket(q);
    Poly den = Poly{Rational(1), Rational(0), Rational(0), Rational(-1)} *
               Poly{Rational(1), Rational(0), Rational(0), -qq * qq * qq};
    return RationalFunction(num, den, Var::t);
}

BundleCounts bundle_counts(const RationalFunction& Z, const Rational& alpha0, const Rational& Q, int M, double tol)
{
    if (alpha0 == 0)
        throw DomainError("bundle_counts: alpha0 must be nonzero");
    BundleCounts out;
    RationalFunction normalized = RationalFunction::constant(1 / alpha0, Z.var()) * Z;
    auto c = series_log_coefficients(normalized, M);
    for (int m = 1; m <= M; ++m)
        out.from_series.push_back(c[static_cast<std::size_t>(m - 1)] * m);

    const Poly den = Poly{Rational(1), Rational(-1)} * Poly{Rational(1), -Q};
    RationalFunction pz = normalized * RationalFunction(den, Poly::constant(1), Z.var());
    if (!pz.den().is_constant())
        throw DomainError("bundle_counts: Z is not of the form P(T)/((1-T)(1-QT))");
    const Poly P = pz.num() * (1 / pz.den()[0]);
    std::vector<std::complex<double>> omegas;
    if (P.degree() >= 1)
        for (const auto& r : poly_complex_roots(P, 1e-12))
            for (int k = 0; k < r.multiplicity; ++k)
                omegas.push_back(1.0 / r.value);
    const double Qd = Q.get_d();
    for (int m = 1; m <= M; ++m) {
        std::complex<double> s = 0;
        for (auto w : omegas)
            s += std::pow(w, m);
        double n = 1 + std::pow(Qd, m) - s.real();
        out.from_roots.push_back(n);
        double ref = out.from_series[static_cast<std::size_t>(m - 1)].get_d();
        out.max_deviation = std::max(out.max_deviation, std::abs(n - ref) / std::max(1.0, std::abs(ref)));
    }
    if (out.max_deviation > tol)
        throw ConsistencyError("bundle_counts: series and root expansions disagree beyond tolerance");
    return out;
}

Genus2RH genus2_rh_criterion(const Rational& alpha0, const Rational& alpha2, const Rational& beta0, const Rational& Q,
                             double tol)
{
    if (alpha0 <= 0)
        throw DomainError("genus2_rh_criterion: alpha0 must be positive");
    Genus2RH out;
    const Rational a2 = alpha2 / alpha0;
    const Rational b0 = beta0 / alpha0;
    out.sum = (Q + 1) - a2;
    out.product = (Q - 1) * b0 - (Q + 1) * a2;
    const Rational disc = out.sum * out.sum - 4 * out.product;
    if (disc >= 0) {
        out.real_factorization = true;
        const double sq = std::sqrt(disc.get_d());
        out.A = (out.sum.get_d() + sq) / 2;
        out.B = (out.sum.get_d() - sq) / 2;
        // max(A^2, B^2) <= 4Q  <=>  2|S| sqrt(D) <= 16Q - S^2 - D, decided exactly.
        const Rational S = out.sum;
        const Rational rhs = 16 * Q - S * S - disc;
        if (rhs < 0)
            out.passed = false;
        else
            out.passed = 4 * S * S * disc <= rhs * rhs;
        return out;
    }
    const Poly numerator{Rational(1), a2 - (Q + 1), 2 * Q - (Q + 1) * a2 + b0 * (Q - 1), Q * (a2 - (Q + 1)), Q * Q};
    out.fallback = rh_report(numerator, Q, tol);
    out.passed = out.fallback->passed;
    return out;
}

std::vector<std::string> clifford_validate(const CurveData& c, int r, const std::vector<Rational>& alphas,
                                           const std::vector<Rational>& betas)
{
    std::vector<std::string> warnings;
    const int dmax = r * (2 * c.genus() - 2);
    const std::size_t n = std::min({alphas.size(), betas.size(), static_cast<std::size_t>(dmax) + 1});
    for (std::size_t d = 0; d < n; ++d) {
        const Rational& a = alphas[d];
        if (a < 0) {
            std::ostringstream os;
            os << "alpha(" << d << ") = " << to_string(a) << " is negative";
            warnings.push_back(os.str());
        }
        // h^0 <= r + d/2 and h^0 is an integer.
        const long e = r + static_cast<long>(d) / 2;
        const Rational bound = (fzeta::pow(c.q_rational(), e) - 1) * betas[d];
        if (a > bound) {
            std::ostringstream os;
            os << "alpha(" << d << ") = " << to_string(a) << " exceeds Clifford bound (q^" << e << " - 1) * beta(" << d
               << ") = " << to_string(bound);
            if (d % 2 == 1)
                os << " (exponent floor(r + d/2) for odd d)";
            warnings.push_back(os.str());
        }
    }
    return warnings;
}

} // namespace fzeta

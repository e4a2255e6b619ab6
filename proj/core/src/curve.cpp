#include "fzeta/curve.hpp"

#include "fzeta/error.hpp"
#include "fzeta/roots.hpp"
#include "fzeta/series.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace fzeta {

std::vector<std::string> weil_symmetry_violations(int genus, const Integer& q, const Poly& P)
{
    std::vector<std::string> bad;
    const Rational qq(q);
    for (int i = 0; i <= genus; ++i) {
        Rational lhs = P[2 * genus - i];
        Rational rhs = fzeta::pow(qq, genus - i) * P[i];
        if (lhs != rhs) {
            std::ostringstream os;
            os << "a_" << (2 * genus - i) << " = q^" << (genus - i) << " * a_" << i << " fails: " << to_string(lhs)
               << " != " << to_string(rhs);
            bad.push_back(os.str());
        }
    }
    return bad;
}

CurveData CurveData::from_numerator(int genus, const Integer& q, const Poly& numerator)
{
    if (genus < 1)
        throw DomainError("genus must be at least 1");
    if (q < 2)
        throw DomainError("field size q must be at least 2");
    if (numerator.degree() != 2 * genus) {
        std::ostringstream os;
        os << "numerator degree " << numerator.degree() << " != 2g = " << 2 * genus;
        throw ValidationError(os.str());
    }
    if (numerator[0] != 1)
        throw ValidationError("numerator constant term must be 1, got " + to_string(numerator[0]));
    auto bad = weil_symmetry_violations(genus, q, numerator);
    if (!bad.empty()) {
        std::string msg = "Weil symmetry violated:";
        for (const auto& b : bad)
            msg += " [" + b + "]";
        throw ValidationError(msg);
    }
    return CurveData(genus, q, numerator);
}

CurveData CurveData::from_point_counts(int genus, const Integer& q, const std::vector<Integer>& counts)
{
    if (genus < 1)
        throw DomainError("genus must be at least 1");
    if (q < 2)
        throw DomainError("field size q must be at least 2");
    if (static_cast<int>(counts.size()) < genus)
        throw DomainError("need at least g point counts");
    for (const auto& n : counts)
        if (n <= 0)
            throw DomainError("point counts must be positive");
    // log Z(t) = sum N_m t^m / m; P(t) = Z(t) (1 - t)(1 - q t).
    const int M = genus;
    Series logz(static_cast<std::size_t>(M) + 1);
    for (int m = 1; m <= M; ++m)
        logz[static_cast<std::size_t>(m)] = Rational(counts[static_cast<std::size_t>(m - 1)]) / m;
    Series z = series_exp(logz);
    Series lin{Rational(1), Rational(-1) - Rational(q), Rational(q)};
    lin.resize(z.size());
    Series head = series_mul(z, lin);
    std::vector<Rational> a(static_cast<std::size_t>(2 * genus) + 1);
    for (int i = 0; i <= genus; ++i)
        a[static_cast<std::size_t>(i)] = head[static_cast<std::size_t>(i)];
    for (int i = 0; i < genus; ++i)
        a[static_cast<std::size_t>(2 * genus - i)] = fzeta::pow(Rational(q), genus - i) * a[static_cast<std::size_t>(i)];
    for (int i = 0; i <= 2 * genus; ++i)
        if (!is_integer(a[static_cast<std::size_t>(i)])) {
            std::ostringstream os;
            os << "point counts give non-integral coefficient a_" << i << " = " << to_string(a[static_cast<std::size_t>(i)]);
            throw ValidationError(os.str());
        }
    CurveData c = from_numerator(genus, q, Poly(a));
    if (static_cast<int>(counts.size()) > genus) {
        auto re = c.point_counts(static_cast<int>(counts.size()));
        for (std::size_t m = static_cast<std::size_t>(genus); m < counts.size(); ++m)
            if (re[m] != counts[m]) {
                std::ostringstream os;
                os << "point count N_" << (m + 1) << " = " << counts[m].get_str()
                   << " inconsistent with the numerator determined by N_1..N_g (expected " << re[m].get_str() << ")";
                throw ValidationError(os.str());
            }
    }
    return c;
}

CurveData CurveData::elliptic(const Integer& q, const Integer& N)
{
    Integer a = q + 1 - N;
    return from_numerator(1, q, Poly{Rational(1), Rational(-a), Rational(q)});
}

std::vector<Integer> CurveData::point_counts(int M) const
{
    RationalFunction z = artin_zeta(*this);
    auto c = series_log_coefficients(z, M);
    std::vector<Integer> out;
    for (int m = 1; m <= M; ++m) {
        Rational n = c[static_cast<std::size_t>(m - 1)] * m;
        out.push_back(n.get_num());
    }
    return out;
}

double CurveData::weil_deviation(double tol) const
{
    // Roots of P in T are 1/omega_i, so |omega| = q^{1/2} <=> |T| = q^{-1/2}.
    double sq = std::sqrt(q_.get_d());
    double worst = 0;
    for (const auto& r : poly_complex_roots(P_, tol))
        worst = std::max(worst, std::abs(std::abs(r.value) * sq - 1.0));
    return worst;
}

RationalFunction artin_zeta(const CurveData& c)
{
    Poly den = Poly{Rational(1), Rational(-1)} * Poly{Rational(1), -c.q_rational()};
    return RationalFunction(c.numerator(), den, Var::t);
}

RationalFunction completed_zeta_in_x(const CurveData& c)
{
    Poly den = Poly{Rational(1), Rational(-1)} * Poly{Rational(1), -c.q_rational()};
    return RationalFunction(c.numerator(), den.shifted(c.genus() - 1), Var::u);
}

Rational completed_zeta_value(const CurveData& c, int h)
{
    if (h == 0 || h == 1)
        throw PoleError("zeta-hat has a pole at s = 0 and s = 1; use zeta_special_residue");
    return completed_zeta_in_x(c).eval(fzeta::pow(c.q_rational(), -h));
}

ZetaFactor completed_zeta_factor(const CurveData& c, int k, int h)
{
    if (k == 0)
        return ZetaFactor{k, h, RationalFunction::constant(completed_zeta_value(c, h), Var::u)};
    Rational scale = fzeta::pow(c.q_rational(), -h);
    return ZetaFactor{k, h, completed_zeta_in_x(c).substitute(MonomialSubstitution::power(scale, k, Var::u))};
}

Rational zeta_special_residue(const CurveData& c)
{
    const Rational q = c.q_rational();
    return fzeta::pow(q, c.genus()) * c.numerator().eval(1 / q) / (q - 1);
}

Rational artin_zeta_value(const CurveData& c, int n)
{
    if (n < 2)
        throw DomainError("artin_zeta_value requires n >= 2");
    return artin_zeta(c).eval(fzeta::pow(c.q_rational(), -n));
}

} // namespace fzeta

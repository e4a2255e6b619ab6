#ifndef FZETA_CURVE_HPP
#define FZETA_CURVE_HPP

#include "fzeta/rational_function.hpp"

#include <string>
#include <vector>

namespace fzeta {

/// Arithmetic data of a curve X/F_q: genus, field size and the Weil numerator
/// P(T) of its Artin zeta function P(t)/((1-t)(1-qt)).
///
/// Invariants (checked on construction): g >= 1, q >= 2, deg P = 2g, P(0) = 1,
/// a_{2g-i} = q^{g-i} a_i. Primality of q is not required.
class CurveData {
public:
    static CurveData from_numerator(int genus, const Integer& q, const Poly& numerator);
    /// Inverts Z(t) = exp(sum N_m t^m / m) from N_1..N_g. Extra counts beyond g
    /// are checked against the reconstructed numerator.
    static CurveData from_point_counts(int genus, const Integer& q, const std::vector<Integer>& counts);
    /// Elliptic curve with N rational points: P = 1 - (q + 1 - N) T + q T^2.
    static CurveData elliptic(const Integer& q, const Integer& N);

    int genus() const { return genus_; }
    const Integer& q() const { return q_; }
    Rational q_rational() const { return Rational(q_); }
    const Poly& numerator() const { return P_; }

    /// #X(F_{q^m}) for m = 1..M, from the numerator.
    std::vector<Integer> point_counts(int M) const;
    /// max_i | |omega_i| q^{-1/2} - 1 | over inverse roots of P.
    double weil_deviation(double tol = 1e-9) const;

private:
    CurveData(int genus, Integer q, Poly P)
        : genus_(genus)
        , q_(std::move(q))
        , P_(std::move(P)) {}
    int genus_;
    Integer q_;
    Poly P_;
};

/// Failed coefficient identities a_{2g-i} = q^{g-i} a_i, empty when symmetric.
std::vector<std::string> weil_symmetry_violations(int genus, const Integer& q, const Poly& P);

/// Artin zeta P(t)/((1-t)(1-qt)) in t.
RationalFunction artin_zeta(const CurveData& c);

/// Completed zeta as a function of x = q^{-z}: x^{-(g-1)} P(x) / ((1-x)(1-qx)).
RationalFunction completed_zeta_in_x(const CurveData& c);

/// zeta-hat(k s + h) as a rational function of u = q^{-s}.
struct ZetaFactor {
    int k = 0;
    int h = 0;
    RationalFunction value;
};

/// Throws PoleError for (k, h) in {(0, 0), (0, 1)}; use zeta_special_residue there.
ZetaFactor completed_zeta_factor(const CurveData& c, int k, int h);

/// Value zeta-hat(h) for h not in {0, 1}.
Rational completed_zeta_value(const CurveData& c, int h);

/// Stripped residue log q * Res_{s=1} zeta-hat(s) = q^g P(1/q) / (q - 1).
Rational zeta_special_residue(const CurveData& c);

/// Artin zeta value zeta_X(n) for n >= 2.
Rational artin_zeta_value(const CurveData& c, int n);

} // namespace fzeta

#endif

#ifndef FZETA_PUREZETA_HPP
#define FZETA_PUREZETA_HPP

#include "fzeta/certificate.hpp"
#include "fzeta/curve.hpp"
#include "fzeta/roots.hpp"

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace fzeta {

/// alpha_{X,r}(0), alpha_{X,r}(r), ..., alpha_{X,r}(r(g-1)) and beta_{X,r}(0).
struct PureZetaInputs {
    int r = 1;
    std::vector<Rational> alphas;
    Rational beta0;

    void validate(int genus) const;
};

/// Harder-Narasimhan/Zagier mass beta_{X,r}(d) summed over compositions of r.
Rational zagier_beta(const CurveData& c, int r, int d);

/// The same mass at d = 0 through completed zeta values:
/// q^{(g-1) r(r-1)/2} sum (-1)^{k-1} / prod (q^{n_j+n_{j+1}} - 1) prod_j prod_{i<=n_j} zeta-hat*(i).
Rational mass_reformulated(const CurveData& c, int r);

/// Closed form N/(q-1) (1 + N/(q^2-1)) of beta_{E,2}(0) for elliptic curves.
Rational elliptic_rank2_beta0(const Integer& q, const Integer& N);

/// Inputs from line-bundle theory: alpha_{X,1}(m) is the number of effective
/// divisors of degree m, beta_{X,1}(0) = #Pic^0 / (q-1).
PureZetaInputs rank1_inputs(const CurveData& c);
/// alpha_{E,2}(0) = N/(q-1) with beta from the Zagier mass.
PureZetaInputs elliptic_rank2_inputs(const CurveData& c);

struct PureZeta {
    int r = 1;
    int genus = 1;
    Rational Q;
    RationalFunction Z;        // in T = t^r
    RationalFunction completed; // T^{-(g-1)} Z, in T
    Poly numerator;            // P_{X,r}(T) = Z (1 - T)(1 - Q T)
};

PureZeta pure_zeta(const CurveData& c, const PureZetaInputs& in);


/// Functional equation via numerator symmetry p_{2g-i} = Q^{g-i} p_i.
Certificate fe_check_pure(const Poly& numerator, int genus, const Rational& Q);

struct RHReport {
    Poly polynomial;
    Rational Q;
    std::vector<std::complex<double>> roots;
    std::vector<int> multiplicities;
    std::vector<double> deviations; // | |root| Q^{1/2} - 1 |
    bool passed = false;
    bool exact = false; // decided by the exact quadratic criterion
    double tolerance = 1e-9;
    double max_deviation() const;
};

/// Riemann hypothesis check: every root T of p has |T| = Q^{-1/2}.
RHReport rh_report(const Poly& p, const Rational& Q, double tol = 1e-9);

/// Rank-2 zeta counting all degrees on an elliptic curve, from the defining sum
///   alpha0 + beta0 (q^2-1) t^2 / ((1-t^2)(1-q^2 t^2)) + beta1 (q t/(1-q^2 t^2) - t/(1-t^2)).
RationalFunction mixed_zeta_rank2(const Integer& q, const Rational& alpha0, const Rational& beta0, const Rational& beta1);
/// Elliptic specialization: alpha0 = beta1 = N/(q-1), beta0 from the closed form.
RationalFunction mixed_zeta_rank2(const Integer& q, const Integer& N);
/// Numerator 1 + (q-1)t + (N-1)t^2 + (q-1)q t^3 + q^2 t^4 as printed for the elliptic case.
Poly mixed_rank2_printed_numerator(const Integer& q, const Integer& N);
/// Numerator of the reduced-over-(1-t^2)(1-q^2 t^2) elliptic mixed zeta, scaled by (q-1)/N.
Poly mixed_rank2_numerator(const Integer& q, const Integer& N);

/// N ((q t + q^2 t^2)/(1 - q^3 t^3) - (t + t^2)/(1 - t^3)).
RationalFunction partial_zeta_rank3_elliptic(const Integer& q, const Integer& N);
/// Printed closed form N (q-1) t [q^2 t^4 + q(q-1) t^3 + (q+1) t + 1] / ((1-t^3)(1-q^3 t^3)).
RationalFunction partial_zeta_rank3_printed(const Integer& q, const Integer& N);
/// Bracket polynomial of the printed form, q^2 t^4 + q(q-1) t^3 + (q+1) t + 1.
Poly partial_rank3_printed_bracket(const Integer& q);
/// Bracket of the form derived from the defining difference:
/// q^2 t^4 + q(q+1) t^3 + (q+1) t + 1.
Poly partial_rank3_bracket(const Integer& q);

struct BundleCounts {
    std::vector<Rational> from_series;   // m * [T^m] log(Z / alpha0)
    std::vector<double> from_roots;      // 1 + Q^m - sum omega_i^m
    double max_deviation = 0;
};

BundleCounts bundle_counts(const RationalFunction& Z, const Rational& alpha0, const Rational& Q, int M, double tol = 1e-8);

struct Genus2RH {
    bool real_factorization = false;
    double A = 0, B = 0; // when real
    Rational sum;        // A + B
    Rational product;    // A B
    bool passed = false;
    std::optional<RHReport> fallback;
};

Genus2RH genus2_rh_criterion(const Rational& alpha0, const Rational& alpha2, const Rational& beta0, const Rational& Q, double tol = 1e-9);

/// alpha tables indexed by degree d = 0..r(2g-2); warnings for negative
/// entries and violations of alpha(d) <= (q^{floor(r + d/2)} - 1) beta(d).
std::vector<std::string> clifford_validate(const CurveData& c, int r, const std::vector<Rational>& alphas,
                                           const std::vector<Rational>& betas);

} // namespace fzeta

#endif

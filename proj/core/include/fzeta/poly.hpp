#ifndef FZETA_POLY_HPP
#define FZETA_POLY_HPP

#include "fzeta/rational.hpp"

#include <complex>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace fzeta {

/// Dense univariate polynomial over the rationals. Index i of the
/// coefficient vector is the coefficient of x^i; trailing zeros are trimmed,
/// so the zero polynomial has no coefficients and degree -1.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs);

    static Poly constant(const Rational& c);
    static Poly monomial(const Rational& c, int degree);
    /// Integer coefficients, index = degree.
    static Poly from_ints(std::initializer_list<long> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    /// Coefficient of x^i; zero outside [0, degree].
    const Rational& operator[](int i) const;
    const Rational& leading() const;
    /// Lowest index with nonzero coefficient; -1 for the zero polynomial.
    int valuation() const;

    Rational eval(const Rational& x) const;
    std::complex<double> eval(std::complex<double> x) const;

    Poly derivative() const;
    Poly monic() const;
    /// Divide out the positive rational content, making coefficients coprime integers
    /// with positive leading coefficient.
    Poly primitive() const;

    /// x^k * p for k >= 0; for k < 0 divides by x^-k, requiring exactness.
    Poly shifted(int k) const;
    /// p(c * x^k), k >= 0.
    Poly compose_monomial(const Rational& c, int k) const;
    /// p(x + a).
    Poly taylor_shift(const Rational& a) const;
    /// x^n p(1/x), n >= degree.
    Poly reversed(int n) const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const Rational& c);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string(const std::string& var = "x") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

Poly pow(const Poly& p, unsigned n);

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Exact quotient; throws if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

/// Square-free decomposition: p = c * prod f_i^i with f_i square-free and
/// pairwise coprime. Returns (f_i, i) for non-constant f_i.
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p);

std::ostream& operator<<(std::ostream& os, const Poly& p);

} // namespace fzeta

#endif

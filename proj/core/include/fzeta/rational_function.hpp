#ifndef FZETA_RATIONAL_FUNCTION_HPP
#define FZETA_RATIONAL_FUNCTION_HPP

#include "fzeta/poly.hpp"

#include <complex>
#include <string>

namespace fzeta {

/// Name of the single variable a RationalFunction is expressed in:
/// u = q^{-s}, T = t^r, t = q^{-s} for curve zetas, v a reparametrization.
enum class Var { u, T, t, v };

std::string var_name(Var v);
Var parse_var(const std::string& s);

/// Monomial substitution x -> c * y^k (k != 0), with y possibly a new variable.
/// Covers u -> c/u (k = -1), u -> c*u (k = 1), and u -> c*v^d.
struct MonomialSubstitution {
    Rational c;
    int k = 1;
    Var target;

    static MonomialSubstitution reflect(const Rational& c, Var var) { return {c, -1, var}; }
    static MonomialSubstitution scale(const Rational& c, Var var) { return {c, 1, var}; }
    static MonomialSubstitution power(const Rational& c, int d, Var target) { return {c, d, target}; }
};

/// Exact reduced quotient of polynomials. Canonical form: gcd(num, den) = 1 and
/// den monic, so operator== is structural equality.
class RationalFunction {
public:
    RationalFunction()
        : RationalFunction(Poly{}, Poly::constant(1), Var::u) {}
    explicit RationalFunction(Poly num, Poly den = Poly::constant(1), Var var = Var::u);

    static RationalFunction constant(const Rational& c, Var var = Var::u);
    static RationalFunction variable(Var var = Var::u);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    Var var() const { return var_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value of a constant function; throws otherwise.
    Rational constant_value() const;

    /// Exact value; throws PoleError at a zero of the denominator.
    Rational eval(const Rational& x) const;
    std::complex<double> eval(std::complex<double> x) const;

    RationalFunction with_var(Var v) const;
    RationalFunction substitute(const MonomialSubstitution& s) const;
    RationalFunction pow(int n) const;
    RationalFunction inverse() const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction operator-() const;

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

private:
    void normalize();
    Poly num_;
    Poly den_;
    Var var_;
};

RationalFunction operator*(const Rational& c, const RationalFunction& f);

} // namespace fzeta

#endif

#ifndef FZETA_MULTI_POLY_HPP
#define FZETA_MULTI_POLY_HPP

#include "fzeta/rational.hpp"
#include "fzeta/rational_function.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fzeta {

inline constexpr int kMaxVars = 4;

/// Exponent vector of a Laurent monomial in u_1..u_4 (0-based index).
using Exponents = std::array<int, kMaxVars>;

/// Sparse Laurent polynomial over Q in at most four variables.
class MultiPoly {
public:
    MultiPoly() = default;
    static MultiPoly constant(const Rational& c);
    static MultiPoly monomial(const Rational& c, const Exponents& e);
    /// Lift of a univariate polynomial in variable `var`.
    static MultiPoly from_univariate(const Poly& p, int var);

    bool is_zero() const { return terms_.empty(); }
    const std::map<Exponents, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    /// Smallest exponent of each variable over all terms (0 for the zero polynomial).
    Exponents min_exponents() const;
    int max_exponent(int var) const;
    bool depends_on(int var) const;

    /// Multiply by the monomial u^e.
    MultiPoly shifted(const Exponents& e) const;
    /// Replace u_var by a rational constant.
    MultiPoly evaluate(int var, const Rational& x) const;
    /// Coefficients in u_var (requires non-negative exponents in that variable).
    std::vector<MultiPoly> coefficients_in(int var) const;
    /// Coefficient list in eps of p restricted to u_var = 1 + eps.
    std::vector<MultiPoly> expand_at_one(int var) const;
    /// If only `var` occurs (non-negative exponents), the univariate polynomial.
    std::optional<Poly> to_univariate(int var) const;

    /// Leading term in lexicographic exponent order, used as a canonical scalar.
    const Rational& last_coefficient() const;

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    MultiPoly operator-() const;

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    std::string to_string() const;

private:
    void add_term(const Exponents& e, const Rational& c);
    std::map<Exponents, Rational> terms_;
};

MultiPoly pow(const MultiPoly& p, unsigned n);

/// A monomial c * prod u_j^{k_j}, the image of q^{-<lambda, alpha^vee>}-type expressions.
struct Monomial {
    Rational coeff = 1;
    Exponents exps{};
};

/// Quotient of sparse Laurent polynomials in u_1..u_n (n <= 4). Shared monomial
/// factors are removed and both parts have non-negative exponents; no
/// multivariate gcd is taken, so equality is decided by cross-multiplication.
class MultiRationalFunction {
public:
    MultiRationalFunction()
        : MultiRationalFunction(MultiPoly{}, MultiPoly::constant(1)) {}
    MultiRationalFunction(MultiPoly num, MultiPoly den);

    static MultiRationalFunction constant(const Rational& c);
    /// f(m) for a univariate rational function f and a monomial argument m.
    static MultiRationalFunction compose(const RationalFunction& f, const Monomial& m);

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    MultiRationalFunction evaluate(int var, const Rational& x) const;
    /// Univariate view when only `var` remains; throws otherwise.
    RationalFunction to_univariate(int var, Var tag = Var::u) const;

    MultiRationalFunction& operator+=(const MultiRationalFunction& o);
    MultiRationalFunction& operator*=(const MultiRationalFunction& o);
    MultiRationalFunction& operator/=(const MultiRationalFunction& o);
    MultiRationalFunction operator-() const;
    MultiRationalFunction pow(int n) const;

    friend MultiRationalFunction operator+(MultiRationalFunction a, const MultiRationalFunction& b) { return a += b; }
    friend MultiRationalFunction operator*(MultiRationalFunction a, const MultiRationalFunction& b) { return a *= b; }
    friend MultiRationalFunction operator/(MultiRationalFunction a, const MultiRationalFunction& b) { return a /= b; }

    /// Exact equality via num_a * den_b == num_b * den_a.
    bool equals(const MultiRationalFunction& o) const;

private:
    void normalize();
    MultiPoly num_;
    MultiPoly den_;
};

} // namespace fzeta

#endif

#include "fzeta/rational_function.hpp"

#include "fzeta/error.hpp"

#include <algorithm>
#include <cstdlib>

namespace fzeta {

namespace {
constexpr long kMaxSubstitutedDegree = 1L << 16;

void check_same_var(Var a, Var b)
{
    if (a != b)
        throw DomainError("rational functions in different variables (" + var_name(a) + " vs " + var_name(b) + ")");
}
} // namespace

std::string var_name(Var v)
{
    switch (v) {
    case Var::u:
        return "u";
    case Var::T:
        return "T";
    case Var::t:
        return "t";
    case Var::v:
        return "v";
    }
    return "?";
}

Var parse_var(const std::string& s)
{
    if (s == "u")
        return Var::u;
    if (s == "T")
        return Var::T;
    if (s == "t")
        return Var::t;
    if (s == "v")
        return Var::v;
    throw DomainError("unknown variable tag '" + s + "'");
}

RationalFunction::RationalFunction(Poly num, Poly den, Var var)
    : num_(std::move(num))
    , den_(std::move(den))
    , var_(var)
{
    normalize();
}

void RationalFunction::normalize()
{
    if (den_.is_zero())
        throw DomainError("rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    if (den_.degree() > 0) {
        Poly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
    }
    Rational lc = den_.leading();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::constant(const Rational& c, Var var)
{
    return RationalFunction(Poly::constant(c), Poly::constant(1), var);
}

RationalFunction RationalFunction::variable(Var var)
{
    return RationalFunction(Poly::monomial(1, 1), Poly::constant(1), var);
}

Rational RationalFunction::constant_value() const
{
    if (!is_constant())
        throw DomainError("rational function is not constant: " + to_string());
    return num_[0];
}

Rational RationalFunction::eval(const Rational& x) const
{
    Rational d = den_.eval(x);
    if (d == 0)
        throw PoleError("evaluation at a pole " + var_name(var_) + " = " + fzeta::to_string(x));
    return num_.eval(x) / d;
}

std::complex<double> RationalFunction::eval(std::complex<double> x) const { return num_.eval(x) / den_.eval(x); }

RationalFunction RationalFunction::with_var(Var v) const
{
    RationalFunction r = *this;
    r.var_ = v;
    return r;
}

RationalFunction RationalFunction::substitute(const MonomialSubstitution& s) const
{
    if (s.k == 0)
        throw DomainError("substitution exponent must be nonzero");
    if (s.c == 0)
        throw DomainError("substitution constant must be nonzero");
    const long dmax = std::max(num_.degree(), den_.degree());
    if (std::labs(static_cast<long>(s.k)) * std::max(dmax, 1L) > kMaxSubstitutedDegree)
        throw BoundError("substitution exceeds the exponent bound");
    if (s.k > 0)
        return RationalFunction(num_.compose_monomial(s.c, s.k), den_.compose_monomial(s.c, s.k), s.target);
    // p(c y^{-m}) * y^{m D} is a polynomial in y for D >= deg p.
    const int m = -s.k;
    const int D = static_cast<int>(dmax);
    auto flip = [&](const Poly& p) {
        std::vector<Rational> v(static_cast<std::size_t>(m * D) + 1);
        Rational cp = 1;
        for (int i = 0; i <= p.degree(); ++i) {
            v[static_cast<std::size_t>(m * (D - i))] = p[i] * cp;
            cp *= s.c;
        }
        return Poly(std::move(v));
    };
    return RationalFunction(flip(num_), flip(den_), s.target);
}

RationalFunction RationalFunction::pow(int n) const
{
    if (n < 0)
        return inverse().pow(-n);
    // Powers of coprime polynomials stay coprime; skip the gcd.
    RationalFunction r = constant(1, var_);
    r.num_ = fzeta::pow(num_, static_cast<unsigned>(n));
    r.den_ = fzeta::pow(den_, static_cast<unsigned>(n));
    if (r.num_.is_zero())
        r.den_ = Poly::constant(1);
    return r;
}

RationalFunction RationalFunction::inverse() const
{
    if (num_.is_zero())
        throw DomainError("inverse of the zero rational function");
    return RationalFunction(den_, num_, var_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o)
{
    check_same_var(var_, o.var_);
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    Poly g = gcd(den_, o.den_);
    Poly a = exact_div(o.den_, g);
    Poly b = exact_div(den_, g);
    num_ = num_ * a + o.num_ * b;
    den_ = den_ * a;
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o)
{
    check_same_var(var_, o.var_);
    // Cross-cancel first so the final gcd is on smaller operands.
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly n = exact_div(num_, g1.is_zero() ? Poly::constant(1) : g1) *
             exact_div(o.num_, g2.is_zero() ? Poly::constant(1) : g2);
    Poly d = exact_div(den_, g2.is_zero() ? Poly::constant(1) : g2) *
             exact_div(o.den_, g1.is_zero() ? Poly::constant(1) : g1);
    num_ = std::move(n);
    den_ = std::move(d);
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::operator-() const
{
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string RationalFunction::to_string() const
{
    const std::string x = var_name(var_);
    if (den_.is_constant())
        return "(" + num_.to_string(x) + ")";
    return "(" + num_.to_string(x) + ")/(" + den_.to_string(x) + ")";
}

RationalFunction operator*(const Rational& c, const RationalFunction& f)
{
    return RationalFunction::constant(c, f.var()) * f;
}

} // namespace fzeta

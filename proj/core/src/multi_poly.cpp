#include "fzeta/multi_poly.hpp"

#include "fzeta/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace fzeta {

namespace {
Exponents add(const Exponents& a, const Exponents& b)
{
    Exponents r{};
    for (int i = 0; i < kMaxVars; ++i)
        r[i] = a[i] + b[i];
    return r;
}

void check_var(int var)
{
    if (var < 0 || var >= kMaxVars)
        throw CapabilityError("multivariate index out of range (at most 4 variables)");
}

// Binomial rows, cached; small degrees only.
const std::vector<Integer>& binomial_row(int n)
{
    static std::vector<std::vector<Integer>> rows{{Integer(1)}};
    while (static_cast<int>(rows.size()) <= n) {
        const auto& prev = rows.back();
        std::vector<Integer> next(prev.size() + 1);
        next.front() = 1;
        next.back() = 1;
        for (std::size_t i = 1; i < prev.size(); ++i)
            next[i] = prev[i - 1] + prev[i];
        rows.push_back(std::move(next));
    }
    return rows[static_cast<std::size_t>(n)];
}
} // namespace

MultiPoly MultiPoly::constant(const Rational& c) { return monomial(c, Exponents{}); }

MultiPoly MultiPoly::monomial(const Rational& c, const Exponents& e)
{
    MultiPoly p;
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::from_univariate(const Poly& p, int var)
{
    check_var(var);
    MultiPoly r;
    for (int i = 0; i <= p.degree(); ++i) {
        Exponents e{};
        e[var] = i;
        r.add_term(e, p[i]);
    }
    return r;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Exponents MultiPoly::min_exponents() const
{
    Exponents m{};
    if (terms_.empty())
        return m;
    m.fill(std::numeric_limits<int>::max());
    for (const auto& [e, c] : terms_)
        for (int i = 0; i < kMaxVars; ++i)
            m[i] = std::min(m[i], e[i]);
    return m;
}

int MultiPoly::max_exponent(int var) const
{
    check_var(var);
    int m = std::numeric_limits<int>::min();
    for (const auto& [e, c] : terms_)
        m = std::max(m, e[var]);
    return terms_.empty() ? 0 : m;
}

bool MultiPoly::depends_on(int var) const
{
    check_var(var);
    return std::any_of(terms_.begin(), terms_.end(), [var](const auto& t) { return t.first[var] != 0; });
}

MultiPoly MultiPoly::shifted(const Exponents& e) const
{
    MultiPoly r;
    for (const auto& [ex, c] : terms_)
        r.terms_.emplace(add(ex, e), c);
    return r;
}

MultiPoly MultiPoly::evaluate(int var, const Rational& x) const
{
    check_var(var);
    if (x == 0)
        for (const auto& [e, c] : terms_)
            if (e[var] < 0)
                throw PoleError("evaluating a Laurent polynomial at 0");
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
        Exponents e2 = e;
        e2[var] = 0;
        r.add_term(e2, c * fzeta::pow(x, e[var]));
    }
    return r;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const
{
    check_var(var);
    std::vector<MultiPoly> out;
    for (const auto& [e, c] : terms_) {
        if (e[var] < 0)
            throw DomainError("coefficients_in: negative exponent");
        if (static_cast<int>(out.size()) <= e[var])
            out.resize(static_cast<std::size_t>(e[var]) + 1);
        Exponents e2 = e;
        e2[var] = 0;
        out[static_cast<std::size_t>(e[var])].add_term(e2, c);
    }
    return out;
}

std::vector<MultiPoly> MultiPoly::expand_at_one(int var) const
{
    // sum_d c_d (1 + eps)^d = sum_j eps^j sum_{d >= j} binom(d, j) c_d
    auto cs = coefficients_in(var);
    std::vector<MultiPoly> out(cs.size());
    for (std::size_t d = 0; d < cs.size(); ++d) {
        if (cs[d].is_zero())
            continue;
        const auto& row = binomial_row(static_cast<int>(d));
        for (std::size_t j = 0; j <= d; ++j)
            out[j] += cs[d] * Rational(row[j]);
    }
    while (!out.empty() && out.back().is_zero())
        out.pop_back();
    return out;
}

std::optional<Poly> MultiPoly::to_univariate(int var) const
{
    check_var(var);
    std::vector<Rational> v;
    for (const auto& [e, c] : terms_) {
        for (int i = 0; i < kMaxVars; ++i)
            if (i != var && e[i] != 0)
                return std::nullopt;
        if (e[var] < 0)
            return std::nullopt;
        if (static_cast<int>(v.size()) <= e[var])
            v.resize(static_cast<std::size_t>(e[var]) + 1);
        v[static_cast<std::size_t>(e[var])] += c;
    }
    return Poly(std::move(v));
}

const Rational& MultiPoly::last_coefficient() const
{
    if (terms_.empty())
        throw DomainError("last_coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o)
{
    for (const auto& [e, c] : o.terms_)
        add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_)
        x *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const
{
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_)
        c = -c;
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b)
{
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(add(ea, eb), ca * cb);
    return r;
}

std::string MultiPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << fzeta::to_string(c);
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] != 0)
                os << "*u" << (i + 1) << "^" << e[i];
    }
    return os.str();
}

MultiPoly pow(const MultiPoly& p, unsigned n)
{
    MultiPoly result = MultiPoly::constant(1);
    MultiPoly base = p;
    while (n > 0) {
        if (n & 1U)
            result = result * base;
        n >>= 1U;
        if (n > 0)
            base = base * base;
    }
    return result;
}

MultiRationalFunction::MultiRationalFunction(MultiPoly num, MultiPoly den)
    : num_(std::move(num))
    , den_(std::move(den))
{
    normalize();
}

void MultiRationalFunction::normalize()
{
    if (den_.is_zero())
        throw DomainError("multivariate rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = MultiPoly::constant(1);
        return;
    }
    // Divide both parts by their monomial contents; the quotient of contents
    // moves to whichever side keeps exponents non-negative.
    Exponents mn = num_.min_exponents();
    Exponents md = den_.min_exponents();
    Exponents sn{}, sd{};
    for (int i = 0; i < kMaxVars; ++i) {
        int diff = mn[i] - md[i];
        sn[i] = -mn[i] + std::max(diff, 0);
        sd[i] = -md[i] + std::max(-diff, 0);
    }
    num_ = num_.shifted(sn);
    den_ = den_.shifted(sd);
    Rational lc = den_.last_coefficient();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

MultiRationalFunction MultiRationalFunction::constant(const Rational& c)
{
    return MultiRationalFunction(MultiPoly::constant(c), MultiPoly::constant(1));
}

MultiRationalFunction MultiRationalFunction::compose(const RationalFunction& f, const Monomial& m)
{
    auto lift = [&m](const Poly& p) {
        MultiPoly r;
        Rational cp = 1;
        Exponents e{};
        for (int i = 0; i <= p.degree(); ++i) {
            if (p[i] != 0)
                r += MultiPoly::monomial(p[i] * cp, e);
            cp *= m.coeff;
            for (int j = 0; j < kMaxVars; ++j)
                e[j] += m.exps[j];
        }
        return r;
    };
    return MultiRationalFunction(lift(f.num()), lift(f.den()));
}

MultiRationalFunction MultiRationalFunction::evaluate(int var, const Rational& x) const
{
    MultiPoly d = den_.evaluate(var, x);
    if (d.is_zero())
        throw PoleError("multivariate evaluation at a pole");
    return MultiRationalFunction(num_.evaluate(var, x), d);
}

RationalFunction MultiRationalFunction::to_univariate(int var, Var tag) const
{
    auto n = num_.to_univariate(var);
    auto d = den_.to_univariate(var);
    if (!n || !d)
        throw DomainError("multivariate function depends on more than one variable");
    return RationalFunction(*n, *d, tag);
}

MultiRationalFunction& MultiRationalFunction::operator+=(const MultiRationalFunction& o)
{
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
    } else {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    }
    normalize();
    return *this;
}

MultiRationalFunction& MultiRationalFunction::operator*=(const MultiRationalFunction& o)
{
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

MultiRationalFunction& MultiRationalFunction::operator/=(const MultiRationalFunction& o)
{
    if (o.is_zero())
        throw DomainError("division by the zero multivariate function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    normalize();
    return *this;
}

MultiRationalFunction MultiRationalFunction::operator-() const
{
    MultiRationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

MultiRationalFunction MultiRationalFunction::pow(int n) const
{
    if (n < 0) {
        if (is_zero())
            throw DomainError("negative power of zero");
        return MultiRationalFunction(fzeta::pow(den_, static_cast<unsigned>(-n)), fzeta::pow(num_, static_cast<unsigned>(-n)));
    }
    return MultiRationalFunction(fzeta::pow(num_, static_cast<unsigned>(n)), fzeta::pow(den_, static_cast<unsigned>(n)));
}

bool MultiRationalFunction::equals(const MultiRationalFunction& o) const { return num_ * o.den_ == o.num_ * den_; }

} // namespace fzeta

#include "fzeta/poly.hpp"

#include "fzeta/error.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace fzeta {

namespace {
const Rational& zero_q()
{
    static const Rational z(0);
    return z;
}
} // namespace

Poly::Poly(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs))
{
    trim();
}

Poly::Poly(std::initializer_list<Rational> coeffs)
    : coeffs_(coeffs)
{
    trim();
}

Poly Poly::constant(const Rational& c) { return Poly(std::vector<Rational>{c}); }

Poly Poly::monomial(const Rational& c, int degree)
{
    if (degree < 0)
        throw DomainError("negative monomial degree");
    std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
    v.back() = c;
    return Poly(std::move(v));
}

Poly Poly::from_ints(std::initializer_list<long> coeffs)
{
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs)
        v.emplace_back(c);
    return Poly(std::move(v));
}

void Poly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

const Rational& Poly::operator[](int i) const
{
    if (i < 0 || i >= static_cast<int>(coeffs_.size()))
        return zero_q();
    return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Poly::leading() const { return coeffs_.empty() ? zero_q() : coeffs_.back(); }

int Poly::valuation() const
{
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0)
            return static_cast<int>(i);
    return -1;
}

Rational Poly::eval(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

std::complex<double> Poly::eval(std::complex<double> x) const
{
    std::complex<double> acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + it->get_d();
    return acc;
}

Poly Poly::derivative() const
{
    if (coeffs_.size() <= 1)
        return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        d[i - 1] = coeffs_[i] * static_cast<long>(i);
    return Poly(std::move(d));
}

Poly Poly::monic() const
{
    if (is_zero())
        return {};
    Poly r = *this;
    Rational inv = 1 / leading();
    for (auto& c : r.coeffs_)
        c *= inv;
    return r;
}

Poly Poly::primitive() const
{
    if (is_zero())
        return {};
    Integer g = 0, l = 1;
    for (const auto& c : coeffs_) {
        if (c == 0)
            continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational scale(l, g);
    scale.canonicalize();
    if (leading() < 0)
        scale = -scale;
    return *this * scale;
}

Poly Poly::shifted(int k) const
{
    if (is_zero() || k == 0)
        return *this;
    if (k > 0) {
        std::vector<Rational> v(static_cast<std::size_t>(k));
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Poly(std::move(v));
    }
    if (valuation() < -k)
        throw DomainError("Poly::shifted: division by x^k is not exact");
    return Poly(std::vector<Rational>(coeffs_.begin() - k, coeffs_.end()));
}

Poly Poly::compose_monomial(const Rational& c, int k) const
{
    if (k < 0)
        throw DomainError("compose_monomial requires k >= 0");
    if (k == 0)
        return constant(eval(c));
    std::vector<Rational> v(coeffs_.empty() ? 0 : static_cast<std::size_t>(degree() * k + 1));
    Rational cp = 1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        v[i * static_cast<std::size_t>(k)] = coeffs_[i] * cp;
        cp *= c;
    }
    return Poly(std::move(v));
}

Poly Poly::taylor_shift(const Rational& a) const
{
    // Horner in the shifted variable.
    Poly acc;
    const Poly lin{a, Rational(1)};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * lin;
        acc += constant(*it);
    }
    return acc;
}

Poly Poly::reversed(int n) const
{
    if (n < degree())
        throw DomainError("Poly::reversed: n below degree");
    std::vector<Rational> v(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= degree(); ++i)
        v[static_cast<std::size_t>(n - i)] = coeffs_[static_cast<std::size_t>(i)];
    return Poly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (o.coeffs_.size() > coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Poly(std::move(v));
}

Poly& Poly::operator*=(const Poly& o)
{
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const Rational& c)
{
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_)
        x *= c;
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

std::string Poly::to_string(const std::string& var) const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0)
            continue;
        Rational a = abs(c);
        if (!first)
            os << (c < 0 ? " - " : " + ");
        else if (c < 0)
            os << "-";
        first = false;
        bool unit = (a == 1);
        if (i == 0 || !unit)
            os << fzeta::to_string(a);
        if (i > 0) {
            if (!unit)
                os << "*";
            os << var;
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

Poly pow(const Poly& p, unsigned n)
{
    Poly result = Poly::constant(1);
    Poly base = p;
    while (n > 0) {
        if (n & 1U)
            result *= base;
        n >>= 1U;
        if (n > 0)
            base *= base;
    }
    return result;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    if (a.degree() < b.degree())
        return {Poly{}, a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const int db = b.degree();
    Rational inv = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        Rational c = rem[static_cast<std::size_t>(i)] * inv;
        if (c == 0)
            continue;
        quo[static_cast<std::size_t>(i - db)] = c;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= c * b[j];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly exact_div(const Poly& a, const Poly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
        throw DomainError("exact_div: nonzero remainder");
    return q;
}

Poly gcd(const Poly& a, const Poly& b)
{
    // Euclid on primitive integer representatives keeps coefficient growth modest.
    Poly x = a.primitive();
    Poly y = b.primitive();
    if (x.degree() < y.degree())
        std::swap(x, y);
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second.primitive();
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& p)
{
    // Yun's algorithm (characteristic zero).
    std::vector<std::pair<Poly, int>> out;
    if (p.degree() < 1)
        return out;
    Poly f = p.monic();
    Poly df = f.derivative();
    Poly a = gcd(f, df);
    Poly b = exact_div(f, a);
    Poly c = exact_div(df, a);
    Poly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        Poly g = gcd(b, d);
        if (g.degree() > 0)
            out.emplace_back(g, i);
        b = exact_div(b, g);
        c = exact_div(d, g);
        d = c - b.derivative();
        ++i;
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

} // namespace fzeta

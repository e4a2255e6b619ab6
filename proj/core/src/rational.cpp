#include "fzeta/rational.hpp"

#include "fzeta/error.hpp"

#include <cctype>

namespace fzeta {

std::string to_string(const Rational& x)
{
    if (x.get_den() == 1)
        return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_rational(std::string_view text)
{
    std::size_t b = 0, e = text.size();
    while (b < e && std::isspace(static_cast<unsigned char>(text[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1])))
        --e;
    std::string s(text.substr(b, e - b));
    if (!s.empty() && s[0] == '+')
        s.erase(0, 1);
    if (s.empty())
        throw DomainError("empty rational literal");
    auto digits = [](std::string_view d, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !d.empty() && d[0] == '-')
            i = 1;
        if (i == d.size())
            return false;
        for (; i < d.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(d[i])))
                return false;
        return true;
    };
    auto slash = s.find('/');
    std::string_view sv(s);
    if (slash == std::string::npos ? !digits(sv, true)
                                   : !digits(sv.substr(0, slash), true) || !digits(sv.substr(slash + 1), false))
        throw DomainError("malformed rational literal '" + std::string(text) + "'");
    Rational r;
    if (slash == std::string::npos) {
        r = Rational(Integer(s));
    } else {
        Integer den(s.substr(slash + 1));
        if (den == 0)
            throw DomainError("zero denominator in '" + std::string(text) + "'");
        r = Rational(Integer(s.substr(0, slash)), den);
        r.canonicalize();
    }
    return r;
}

Rational ratio(long num, long den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational pow(const Rational& base, long exponent)
{
    if (exponent < 0) {
        if (base == 0)
            throw DomainError("0 raised to a negative power");
        Rational inv = 1 / base;
        return pow(inv, -exponent);
    }
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Integer pow(const Integer& base, unsigned long exponent)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

Integer floor(const Rational& x)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return r;
}

Rational frac(const Rational& x) { return x - Rational(floor(x)); }

double to_double(const Rational& x) { return x.get_d(); }

unsigned long multiplicity(const Integer& value, const Integer& base)
{
    if (value == 0 || base < 2)
        return 0;
    unsigned long k = 0;
    Integer v = value;
    while (mpz_divisible_p(v.get_mpz_t(), base.get_mpz_t())) {
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), base.get_mpz_t());
        ++k;
    }
    return k;
}

bool rational_power(const Integer& q, const Rational& e, Rational& out)
{
    if (is_integer(e)) {
        out = pow(Rational(q), e.get_num().get_si());
        return true;
    }
    // q^(a/b) is rational iff q is a perfect b-th power.
    unsigned long b = e.get_den().get_ui();
    Integer root;
    if (mpz_root(root.get_mpz_t(), q.get_mpz_t(), b) == 0)
        return false;
    out = pow(Rational(root), e.get_num().get_si());
    return true;
}

} // namespace fzeta

#include "fzeta/series.hpp"

#include "fzeta/error.hpp"

namespace fzeta {

Series taylor(const RationalFunction& f, int order)
{
    if (order < 0)
        throw DomainError("taylor: negative order");
    const std::size_t n = static_cast<std::size_t>(order) + 1;
    Series num(n), den(n);
    for (std::size_t i = 0; i < n; ++i) {
        num[i] = f.num()[static_cast<int>(i)];
        den[i] = f.den()[static_cast<int>(i)];
    }
    if (den[0] == 0)
        throw DomainError("taylor: function has a pole at 0");
    return series_div(num, den);
}

Series series_mul(const Series& a, const Series& b)
{
    const std::size_t n = std::min(a.size(), b.size());
    Series r(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; i + j < n; ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

Series series_div(const Series& a, const Series& b)
{
    if (b.empty() || b[0] == 0)
        throw DomainError("series_div: divisor has zero constant term");
    Series r(a.size());
    const Rational inv = 1 / b[0];
    for (std::size_t k = 0; k < a.size(); ++k) {
        Rational acc = a[k];
        for (std::size_t j = 1; j <= k && j < b.size(); ++j)
            acc -= b[j] * r[k - j];
        r[k] = acc * inv;
    }
    return r;
}

Series series_exp(const Series& a)
{
    if (!a.empty() && a[0] != 0)
        throw DomainError("series_exp: nonzero constant term");
    // E' = A' E  =>  k e_k = sum_{j=1}^k j a_j e_{k-j}
    Series e(a.size());
    if (e.empty())
        return e;
    e[0] = 1;
    for (std::size_t k = 1; k < a.size(); ++k) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= k; ++j)
            acc += Rational(static_cast<long>(j)) * a[j] * e[k - j];
        e[k] = acc / static_cast<long>(k);
    }
    return e;
}

Series series_log(const Series& a)
{
    if (a.empty() || a[0] != 1)
        throw DomainError("series_log: constant term must be 1");
    // L' = A'/A
    Series da(a.size());
    for (std::size_t i = 1; i < a.size(); ++i)
        da[i - 1] = a[i] * static_cast<long>(i);
    Series q = series_div(da, a);
    Series l(a.size());
    for (std::size_t i = 1; i < a.size(); ++i)
        l[i] = q[i - 1] / static_cast<long>(i);
    return l;
}

std::vector<Rational> series_log_coefficients(const RationalFunction& f, int M)
{
    if (M < 1)
        throw DomainError("series_log_coefficients: M must be positive");
    if (f.den()[0] == 0)
        throw DomainError("series_log_coefficients: f(0) undefined");
    if (f.num()[0] / f.den()[0] != 1)
        throw DomainError("series_log_coefficients: f(0) must equal 1");
    Series l = series_log(taylor(f, M));
    return std::vector<Rational>(l.begin() + 1, l.end());
}

} // namespace fzeta

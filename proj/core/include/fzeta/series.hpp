#ifndef FZETA_SERIES_HPP
#define FZETA_SERIES_HPP

#include "fzeta/rational_function.hpp"

#include <vector>

namespace fzeta {

/// Truncated power series: coefficients of x^0..x^{n-1}.
using Series = std::vector<Rational>;

/// Taylor coefficients of f at 0 through x^{order}; f must be regular at 0.
Series taylor(const RationalFunction& f, int order);

Series series_mul(const Series& a, const Series& b);
/// a / b with b[0] != 0, truncated to a.size().
Series series_div(const Series& a, const Series& b);
/// exp of a series with zero constant term.
Series series_exp(const Series& a);
/// log of a series with constant term 1.
Series series_log(const Series& a);

/// Coefficients c_1..c_M of log f, for f(0) = 1.
std::vector<Rational> series_log_coefficients(const RationalFunction& f, int M);

} // namespace fzeta

#endif

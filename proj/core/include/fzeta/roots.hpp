#ifndef FZETA_ROOTS_HPP
#define FZETA_ROOTS_HPP

#include "fzeta/poly.hpp"

#include <complex>
#include <stdexcept>
#include <vector>

namespace fzeta {

struct Root {
    std::complex<double> value;
    int multiplicity = 1;
};

/// Raised when the simultaneous iteration hits its cap; carries the last iterates.
class RootConvergenceError : public std::runtime_error {
public:
    RootConvergenceError(const std::string& what, std::vector<Root> partial)
        : std::runtime_error(what)
        , partial_(std::move(partial)) {}
    const std::vector<Root>& partial() const { return partial_; }

private:
    std::vector<Root> partial_;
};

/// Complex roots of an exact polynomial with multiplicities.
///
/// The polynomial is first split exactly into square-free factors (Yun), so
/// multiplicities are exact; each factor is solved by Aberth-Ehrlich iteration
/// in double precision followed by Newton polishing on the factor. The
/// relative tolerance applies to the backward residual
/// |p(z)| <= tol * sum_i |p_i| |z|^i.
std::vector<Root> poly_complex_roots(const Poly& p, double tol = 1e-9);

/// Backward residual |p(z)| / sum |p_i| |z|^i.
double relative_residual(const Poly& p, std::complex<double> z);

} // namespace fzeta

#endif

#ifndef FZETA_COMPOSITION_HPP
#define FZETA_COMPOSITION_HPP

#include "fzeta/error.hpp"

#include <vector>

namespace fzeta {

using Composition = std::vector<int>;

/// All 2^{r-1} ordered compositions of r, starting with (r) and ending with (1,...,1).
std::vector<Composition> compositions(int r);

/// sum over compositions (n_1..n_k) of r of
///   (-1)^{k-1} / prod_{j<k} pair_weight(n_j + n_{j+1}) * prod_j block_value(n_j).
///
/// With pair_weight(m) = q^m - 1 and block_value(n) = prod_{i<=n} zeta-hat*(i)
/// this is the function-field mass; with pair_weight(m) = m and the completed
/// Riemann zeta it is the number-field volume. Only the scalar type differs.
template <class Scalar, class PairWeight, class BlockValue>
Scalar composition_sum(int r, PairWeight pair_weight, BlockValue block_value)
{
    if (r < 1)
        throw DomainError("composition_sum: r must be positive");
    std::vector<Scalar> block(static_cast<std::size_t>(r) + 1);
    for (int n = 1; n <= r; ++n)
        block[static_cast<std::size_t>(n)] = block_value(n);
    Scalar total = 0;
    for (const auto& comp : compositions(r)) {
        Scalar term = 1;
        for (int n : comp)
            term *= block[static_cast<std::size_t>(n)];
        Scalar denom = 1;
        for (std::size_t j = 0; j + 1 < comp.size(); ++j)
            denom *= pair_weight(comp[j] + comp[j + 1]);
        term /= denom;
        if (comp.size() % 2 == 0)
            total -= term;
        else
            total += term;
    }
    return total;
}

} // namespace fzeta

#endif

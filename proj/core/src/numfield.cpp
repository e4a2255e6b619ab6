#include "fzeta/numfield.hpp"

#include "fzeta/composition.hpp"
#include "fzeta/error.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace fzeta {

namespace {

void require_rank(int r, int max)
{
    if (r < 1 || r > max)
        throw DomainError("rank out of range 1.." + std::to_string(max));
}

double zeta_product(int n)
{
    double p = 1;
    for (int i = 1; i <= n; ++i)
        p *= completed_riemann(i);
    return p;
}

} // namespace

double completed_riemann(int n)
{
    if (n <= 0)
        throw DomainError("completed_riemann requires n >= 1");
    if (n == 1)
        return 1.0;
    const double s = n;
    return std::pow(std::numbers::pi, -s / 2) * std::tgamma(s / 2) * std::riemann_zeta(s);
}

double siegel_volume(int r)
{
    require_rank(r, 8);
    return r * zeta_product(r);
}

double moduli_volume(int r, VolumeBlock block)
{
    require_rank(r, 8);
    auto value = [block](int n) { return block == VolumeBlock::siegel_volume ? n * zeta_product(n) : zeta_product(n); };
    return r * composition_sum<double>(r, [](int m) { return static_cast<double>(m); }, value);
}

VolumeTable volume_table(int max_rank)
{
    require_rank(max_rank, 8);
    VolumeTable t;
    for (int r = 1; r <= max_rank; ++r) {
        t.ranks.push_back(r);
        t.siegel.push_back(siegel_volume(r));
        t.moduli.push_back(moduli_volume(r));
    }
    return t;
}

std::vector<KSConvention> all_ks_conventions()
{
    return {KSConvention::prefix, KSConvention::prefix_suffix_once, KSConvention::prefix_suffix_squared,
            KSConvention::adjacent_pairs};
}

std::string ks_convention_name(KSConvention c)
{
    switch (c) {
    case KSConvention::prefix:
        return "prefix";
    case KSConvention::prefix_suffix_once:
        return "prefix+suffix (r once)";
    case KSConvention::prefix_suffix_squared:
        return "prefix+suffix (r twice)";
    case KSConvention::adjacent_pairs:
        return "adjacent pairs";
    }
    return "?";
}

std::string volume_block_name(VolumeBlock b)
{
    return b == VolumeBlock::zeta_product ? "prod zeta(i)" : "n prod zeta(i)";
}

double ks_denominator(const std::vector<int>& comp, KSConvention c)
{
    const std::size_t k = comp.size();
    double d = 1;
    switch (c) {
    case KSConvention::prefix: {
        int s = 0;
        for (int n : comp)
            d *= (s += n);
        break;
    }
    case KSConvention::prefix_suffix_once:
    case KSConvention::prefix_suffix_squared: {
        int s = 0;
        for (int n : comp)
            d *= (s += n);
        s = 0;
        for (std::size_t j = k; j-- > 0;) {
            s += comp[j];
            if (j == 0 && c == KSConvention::prefix_suffix_once)
                break;
            d *= s;
        }
        break;
    }
    case KSConvention::adjacent_pairs:
        d = comp.front() * comp.back();
        for (std::size_t j = 0; j + 1 < k; ++j)
            d *= comp[j] + comp[j + 1];
        if (k == 1)
            d = comp.front();
        break;
    }
    return d;
}

KSProbeRow ks_identity_probe(int r, KSConvention convention, VolumeBlock block)
{
    require_rank(r, 5);
    KSProbeRow row{convention, block, 0, siegel_volume(r), 0};
    for (const auto& comp : compositions(r)) {
        double num = 1;
        for (int n : comp)
            num *= moduli_volume(n, block);
        row.rhs += num / ks_denominator(comp, convention);
    }
    row.deviation = std::abs(row.rhs - row.siegel);
    return row;
}

std::vector<KSProbeRow> ks_identity_probe(int r)
{
    std::vector<KSProbeRow> rows;
    for (auto block : {VolumeBlock::zeta_product, VolumeBlock::siegel_volume})
        for (auto c : all_ks_conventions())
            rows.push_back(ks_identity_probe(r, c, block));
    return rows;
}

} // namespace fzeta

#ifndef FZETA_NUMFIELD_HPP
#define FZETA_NUMFIELD_HPP

#include <string>
#include <vector>

namespace fzeta {

// pi^{-n/2} Gamma(n/2) zeta(n) for n >= 2; the residue 1 at n = 1.
double completed_riemann(int n);

double siegel_volume(int r);

// Block value of a composition part n.
enum class VolumeBlock {
    zeta_product,  // prod_{i<=n} zeta^(i)
    siegel_volume, // n * prod_{i<=n} zeta^(i)
};

double moduli_volume(int r, VolumeBlock block = VolumeBlock::zeta_product);

struct VolumeTable {
    std::vector<int> ranks;
    std::vector<double> siegel;
    std::vector<double> moduli;
    int digits = 15;
};

VolumeTable volume_table(int max_rank);

enum class KSConvention {
    prefix,               // n_1 (n_1+n_2) ... (n_1+...+n_k)
    prefix_suffix_once,   // prefix sums, then suffix sums, the full sum r counted once
    prefix_suffix_squared, // as above with the full sum r counted twice
    adjacent_pairs,       // n_1 (n_1+n_2) (n_2+n_3) ... (n_{k-1}+n_k) n_k
};

std::vector<KSConvention> all_ks_conventions();
std::string ks_convention_name(KSConvention c);
double ks_denominator(const std::vector<int>& composition, KSConvention c);

struct KSProbeRow {
    KSConvention convention;
    VolumeBlock block;
    double rhs = 0;
    double siegel = 0;
    double deviation = 0;
};

std::vector<KSProbeRow> ks_identity_probe(int r);
KSProbeRow ks_identity_probe(int r, KSConvention convention, VolumeBlock block = VolumeBlock::zeta_product);

std::string volume_block_name(VolumeBlock b);

} // namespace fzeta

#endif

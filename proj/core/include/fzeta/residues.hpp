#ifndef FZETA_RESIDUES_HPP
#define FZETA_RESIDUES_HPP

#include "fzeta/certificate.hpp"
#include "fzeta/curve.hpp"
#include "fzeta/groupzeta.hpp"
#include "fzeta/multi_poly.hpp"
#include "fzeta/rootsys.hpp"

#include <vector>

namespace fzeta {

inline constexpr int kMaxResidueRank = 3;

// Variable j-1 of a MultiRationalFunction carries u_j = q^{-s_j}.
struct WeylTerm {
    int w = 0;
    MultiRationalFunction value;
};

std::vector<WeylTerm> period_full_terms(const CurveData& c, const RootSystem& rs, const WeylGroup& W);
MultiRationalFunction period_full(const CurveData& c, const RootSystem& rs, const WeylGroup& W);

// R_k[f] = -Res_{u_k = 1} [f / u_k]; var is 0-based.
MultiRationalFunction residue_at_one(const MultiRationalFunction& f, int var);

// Applies R_k for k in `order` (1-based); default order is ascending k skipping p.
RationalFunction iterated_residue(const MultiRationalFunction& f, const ParabolicData& pd, int rank,
                                  std::vector<int> order = {});

struct ResidueRouteReport {
    RationalFunction via_residues;
    RationalFunction via_formula;
    Certificate certificate;
};

ResidueRouteReport residue_route_equivalence(const CurveData& c, const GroupData& g);

} // namespace fzeta

#endif

#ifndef FZETA_GROUPZETA_HPP
#define FZETA_GROUPZETA_HPP

#include "fzeta/certificate.hpp"
#include "fzeta/curve.hpp"
#include "fzeta/rootsys.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fzeta {

// How a numerator factor zeta(0*s + 1) in the Weyl sum is realized.
enum class SpecialValue {
    stripped_residue, // q^g P(1/q)/(q-1), as produced by the residue route
    omitted,          // factor dropped (numerator taken over Phi_w \ Delta_p only)
};

// Memoized completed zeta factors zeta^(k s + h) in u = q^{-s}.
class ZetaFactorCache {
public:
    explicit ZetaFactorCache(const CurveData& c)
        : curve_(c) {}
    const RationalFunction& get(int k, int h);
    const CurveData& curve() const { return curve_; }

private:
    const CurveData& curve_;
    std::map<std::pair<int, int>, RationalFunction> cache_;
};

// 1 / (1 - q^{1-h} u^k)
RationalFunction edge_factor(const Rational& q, int k, int h);

struct GroupData {
    RootSystem rs;
    WeylGroup W;
    ParabolicData pd;
    CountTable ct;
};

GroupData make_group_data(char type, int rank, int p);

RationalFunction period_gp(const CurveData& c, const RootSystem& rs, const WeylGroup& W, const ParabolicData& pd,
                           SpecialValue sv = SpecialValue::stripped_residue);
// Summand of the Weyl sum for a single w in frak_w.
RationalFunction period_gp_term(ZetaFactorCache& cache, const RootSystem& rs, const WeylGroup& W,
                                const ParabolicData& pd, int w, SpecialValue sv = SpecialValue::stripped_residue);

struct GroupZetaResult {
    std::string group; // e.g. "A_2, p=1"
    Integer q;
    RationalFunction zeta;
    RationalFunction omega;
    std::vector<std::pair<KH, int>> normalization;
    Rational c_p;
    std::string route = "formula2";
};

GroupZetaResult group_zeta(const CurveData& c, const GroupData& g, SpecialValue sv = SpecialValue::stripped_residue);
GroupZetaResult group_zeta_from_omega(const CurveData& c, const GroupData& g, RationalFunction omega,
                                      std::string route);

// zeta(-c_p - s) == zeta(s), i.e. invariance under u -> q^{c_p}/u.
Certificate fe_check_group(const GroupZetaResult& z);
Certificate fe_check_function(const RationalFunction& f, const Integer& q, const Rational& c_p, const std::string& name);

struct OmegaDecomposition {
    RationalFunction M;     // prod over Phi^+ of zeta(k s + h + 1)
    RationalFunction Omega; // M * omega
    RationalFunction D;     // prod zeta(k s + h)^{N_p(k,h-1) - M_p(k,h)}
    std::vector<std::pair<KH, int>> d_exponents;
    Certificate certificate;
};

OmegaDecomposition omega_D_decompose(const CurveData& c, const GroupData& g, const GroupZetaResult& z);

RationalFunction f_pw(ZetaFactorCache& cache, const RootSystem& rs, const WeylGroup& W, const ParabolicData& pd, int w);
// With SpecialValue::stripped_residue, each alpha in w^{-1}Phi^- n Delta_p contributes the constant zeta*(1).
RationalFunction g_pw(ZetaFactorCache& cache, const RootSystem& rs, const WeylGroup& W, const ParabolicData& pd, int w,
                      SpecialValue sv = SpecialValue::stripped_residue);
Certificate fg_involution_check(const CurveData& c, const GroupData& g, const RationalFunction& Omega,
                                SpecialValue sv = SpecialValue::stripped_residue);

struct GroupZero {
    std::complex<double> u;
    int multiplicity = 1;
    double re_s = 0;
    double im_s = 0;
    double modulus_u = 0;
    double deviation = 0; // | |u| q^{-c_p/2} - 1 |
};

struct GroupZeroReport {
    std::vector<GroupZero> zeros; // sorted by im_s, then re_s
    double tolerance = 1e-9;
    double max_deviation = 0;
    bool passed = false;
    int zeros_at_origin = 0;
};

GroupZeroReport group_zeta_zeros(const GroupZetaResult& z, double tol = 1e-9);

struct EdgeResidue {
    int order = 0;                  // pole order of zeta(u)/u at u = q^{c_p}
    Rational value;                 // -Res when order <= 1
    std::vector<Rational> principal; // Laurent coefficients of order -order .. -1 when order > 1
};

EdgeResidue edge_residue(const GroupZetaResult& z);

struct UniformityMatch {
    Rational a, b, c;
    bool verified = false;
};

struct UniformityResult {
    std::optional<UniformityMatch> match;
    std::vector<std::string> tried;
};

struct UniformityBox {
    int max_num = 0; // defaults to max(r, 1)
    int max_den = 0;
    int b_range = 8; // |b| <= b_range
};

// lhs is a rational function in T = q^{-r s}; the group side is in u = q^{-s}.
UniformityResult uniformity_match(const RationalFunction& lhs, int r, const GroupZetaResult& z,
                                  const UniformityBox& box = {});

} // namespace fzeta

#endif

#include "fzeta/groupzeta.hpp"

#include "fzeta/error.hpp"
#include "fzeta/roots.hpp"
#include "fzeta/series.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace fzeta {

const RationalFunction& ZetaFactorCache::get(int k, int h)
{
    auto key = std::make_pair(k, h);
    auto it = cache_.find(key);
    if (it != cache_.end())
        return it->second;
    return cache_.emplace(key, completed_zeta_factor(curve_, k, h).value).first->second;
}

RationalFunction edge_factor(const Rational& q, int k, int h)
{
    const Rational c = fzeta::pow(q, 1 - h);
    if (k == 0) {
        if (c == 1)
            throw ConsistencyError("edge factor 1/(1 - q^0) is a pole");
        return RationalFunction::constant(1 / (1 - c));
    }
    if (k > 0)
        return RationalFunction(Poly::constant(1), Poly::constant(1) - Poly::monomial(c, k));
    // 1/(1 - c u^{-m}) = u^m / (u^m - c)
    const int m = -k;
    return RationalFunction(Poly::monomial(1, m), Poly::monomial(1, m) - Poly::constant(c));
}

GroupData make_group_data(char type, int rank, int p)
{
    GroupData g{build_root_system(type, rank), {}, {}, {}};
    g.W = enumerate_weyl(g.rs);
    g.pd = parabolic_data(g.rs, g.W, p);
    g.ct = count_tables(g.rs, g.W, g.pd);
    return g;
}

RationalFunction period_gp_term(ZetaFactorCache& cache, const RootSystem& rs, const WeylGroup& W,
                                const ParabolicData& pd, int w, SpecialValue sv)
{
    const Rational q = cache.curve().q_rational();
    const int p = pd.p;
    RationalFunction term = RationalFunction::constant(1);
    for (int j = 1; j <= rs.rank; ++j) {
        const int a = W.apply_inverse(w, rs.simple(j));
        if (pd.in_delta_p(a))
            continue;
        term *= edge_factor(q, rs.lambda_pairing(p, a), rs.height(a));
    }
    Rational special = 1;
    for (int a : pd.phi_w.at(w)) {
        const int k = rs.lambda_pairing(p, a), h = rs.height(a);
        if (k == 0 && h == 1) {
            if (sv == SpecialValue::stripped_residue)
                special *= zeta_special_residue(cache.curve());
        } else {
            term *= cache.get(k, h);
        }
        if (k == 0 && (h + 1 == 0 || h + 1 == 1))
            throw ConsistencyError("pole of a zeta factor in a denominator position");
        term /= cache.get(k, h + 1);
    }
    if (special != 1)
        term = special * term;
    return term;
}

RationalFunction period_gp(const CurveData& c, const RootSystem& rs, const WeylGroup& W, const ParabolicData& pd,
                           SpecialValue sv)
{
    ZetaFactorCache cache(c);
    RationalFunction sum = RationalFunction::constant(0);
    for (int w : pd.frak_w)
        sum += period_gp_term(cache, rs, W, pd, w, sv);
    return sum;
}

GroupZetaResult group_zeta_from_omega(const CurveData& c, const GroupData& g, RationalFunction omega, std::string route)
{
    ZetaFactorCache cache(c);
    GroupZetaResult z;
    std::ostringstream os;
    os << g.rs.label() << ", p=" << g.pd.p;
    z.group = os.str();
    z.q = c.q();
    z.c_p = g.pd.c_p;
    z.normalization = g.ct.normalization();
    z.route = std::move(route);
    RationalFunction zeta = omega;
    for (const auto& [kh, m] : z.normalization)
        zeta *= cache.get(kh.first, kh.second).pow(m);
    z.omega = std::move(omega);
    z.zeta = std::move(zeta);
    return z;
}

GroupZetaResult group_zeta(const CurveData& c, const GroupData& g, SpecialValue sv)
{
    return group_zeta_from_omega(c, g, period_gp(c, g.rs, g.W, g.pd, sv), "formula2");
}

Certificate fe_check_function(const RationalFunction& f, const Integer& q, const Rational& c_p, const std::string& name)
{
    Certificate cert;
    if (!is_integer(c_p))
        throw CapabilityError("functional equation check needs an integer c_p");
    const long c = c_p.get_num().get_si();
    const Rational shift = fzeta::pow(Rational(q), c);
    RationalFunction g = f.substitute(MonomialSubstitution::reflect(shift, f.var()));
    std::ostringstream os;
    os << name << "(u -> q^" << c << "/u) == " << name << "(u)";
    cert.record(g == f, os.str());
    return cert;
}

Certificate fe_check_group(const GroupZetaResult& z) { return fe_check_function(z.zeta, z.q, z.c_p, "zeta"); }

OmegaDecomposition omega_D_decompose(const CurveData& c, const GroupData& g, const GroupZetaResult& z)
{
    ZetaFactorCache cache(c);
    const auto& rs = g.rs;
    const int p = g.pd.p;
    OmegaDecomposition out;
    RationalFunction m_pos = RationalFunction::constant(1);
    RationalFunction m_neg = RationalFunction::constant(1);
    for (int i = 0; i < rs.size(); ++i) {
        const int k = rs.lambda_pairing(p, i), h = rs.height(i);
        if (rs.is_positive(i))
            m_pos *= cache.get(k, h + 1);
        else
            m_neg *= cache.get(k, h);
    }
    RationalFunction m_np = RationalFunction::constant(1);
    for (int k = 0; k <= g.ct.k_max; ++k)
        for (int h = 2; h <= g.ct.h_max + 1; ++h)
            if (int e = g.ct.Np(k, h - 1); e != 0)
                m_np *= cache.get(k, h).pow(e);
    out.certificate.record(m_pos == m_neg, "M_p(s): product over Phi^+ == product over Phi^-");
    out.certificate.record(m_pos == m_np, "M_p(s): product over Phi^+ == N_p exponent form");
    out.M = m_pos;
    out.Omega = m_pos * z.omega;
    out.d_exponents = g.ct.d_exponents();
    out.D = RationalFunction::constant(1);
    for (const auto& [kh, e] : out.d_exponents)
        out.D *= cache.get(kh.first, kh.second).pow(e);
    out.certificate.record(z.zeta * out.D == out.Omega, "zeta * D == Omega");
    out.certificate.merge(fe_check_function(out.Omega, c.q(), g.pd.c_p, "Omega"));
    out.certificate.merge(fe_check_function(out.D, c.q(), g.pd.c_p, "D"));
    return out;
}

RationalFunction f_pw(ZetaFactorCache& cache, const RootSystem& rs, const WeylGroup& W, const ParabolicData& pd, int w)
{
    const Rational q = cache.curve().q_rational();
    RationalFunction f = RationalFunction::constant(1);
    for (int j = 1; j <= rs.rank; ++j) {
        const int a = W.apply_inverse(w, rs.simple(j));
        if (!pd.in_delta_p(a))
            f *= edge_factor(q, rs.lambda_pairing(pd.p, a), rs.height(a));
    }
    return f;
}

RationalFunction g_pw(ZetaFactorCache& cache, const RootSystem& rs, const WeylGroup& W, const ParabolicData& pd, int w,
                      SpecialValue sv)
{
    RationalFunction g = RationalFunction::constant(1);
    for (int a = 0; a < rs.size(); ++a) {
        if (rs.is_positive(W.apply(w, a)))
            continue;
        if (pd.in_delta_p(a)) {
            if (sv == SpecialValue::stripped_residue)
                g = zeta_special_residue(cache.curve()) * g;
            continue;
        }
        const int k = rs.lambda_pairing(pd.p, a), h = rs.height(a);
        if (k == 0 && (h == 0 || h == 1))
            throw ConsistencyError("g_{p,w} hits a pole of the completed zeta");
        g *= cache.get(k, h);
    }
    return g;
}

Certificate fg_involution_check(const CurveData& c, const GroupData& g, const RationalFunction& Omega, SpecialValue sv)
{
    ZetaFactorCache cache(c);
    Certificate cert;
    const auto& pd = g.pd;
    const long cp = pd.c_p_integer();
    const auto refl = MonomialSubstitution::reflect(fzeta::pow(c.q_rational(), cp), Var::u);
    std::map<int, RationalFunction> fs, gs;
    for (int w : pd.frak_w) {
        fs[w] = f_pw(cache, g.rs, g.W, pd, w);
        gs[w] = g_pw(cache, g.rs, g.W, pd, w, sv);
    }
    RationalFunction sum = RationalFunction::constant(0);
    for (int w : pd.frak_w) {
        const int v = involution_image(g.W, pd, w);
        if (!pd.in_frak_w(v)) {
            cert.record(false, "involution leaves frak_w at w=" + std::to_string(w));
            continue;
        }
        std::ostringstream of, og;
        of << "f_{p,w}(-c_p-s) == f_{p,w0 w wp}(s) for w=" << w << " (image " << v << ")";
        og << "g_{p,w}(-c_p-s) == g_{p,w0 w wp}(s) for w=" << w << " (image " << v << ")";
        cert.record(fs[w].substitute(refl) == fs[v], of.str());
        cert.record(gs[w].substitute(refl) == gs[v], og.str());
        sum += fs[w] * gs[w];
    }
    cert.record(sum == Omega, "Omega == sum over frak_w of f_{p,w} g_{p,w}");
    return cert;
}

GroupZeroReport group_zeta_zeros(const GroupZetaResult& z, double tol)
{
    GroupZeroReport rep;
    rep.tolerance = tol;
    const Poly& num = z.zeta.num();
    const double lq = std::log(Rational(z.q).get_d());
    const double center = std::pow(Rational(z.q).get_d(), z.c_p.get_d() / 2);
    rep.zeros_at_origin = num.is_zero() ? 0 : num.valuation();
    Poly core = num.is_zero() ? num : num.shifted(-rep.zeros_at_origin);
    if (core.degree() >= 1) {
        for (const auto& r : poly_complex_roots(core, tol)) {
            GroupZero zr;
            zr.u = r.value;
            zr.multiplicity = r.multiplicity;
            zr.modulus_u = std::abs(r.value);
            zr.re_s = -std::log(zr.modulus_u) / lq;
            zr.im_s = -std::arg(r.value) / lq;
            if (zr.im_s == 0)
                zr.im_s = 0; // normalize -0
            zr.deviation = std::abs(zr.modulus_u / center - 1);
            rep.max_deviation = std::max(rep.max_deviation, zr.deviation);
            rep.zeros.push_back(zr);
        }
    }
    std::stable_sort(rep.zeros.begin(), rep.zeros.end(), [](const GroupZero& a, const GroupZero& b) {
        return a.im_s != b.im_s ? a.im_s < b.im_s : a.re_s < b.re_s;
    });
    rep.passed = rep.max_deviation <= tol;
    return rep;
}

EdgeResidue edge_residue(const GroupZetaResult& z)
{
    EdgeResidue out;
    const long cp = z.c_p.get_num().get_si();
    if (!is_integer(z.c_p))
        throw CapabilityError("edge residue needs an integer c_p");
    const Rational u0 = fzeta::pow(Rational(z.q), cp);
    // f(u)/u with u = u0 + e
    Poly num = z.zeta.num().taylor_shift(u0);
    Poly den = (z.zeta.den() * Poly::monomial(1, 1)).taylor_shift(u0);
    out.order = den.valuation() - num.valuation();
    if (out.order <= 0) {
        out.order = 0;
        out.value = 0;
        return out;
    }
    const int m = out.order;
    const int nv = num.valuation();
    Poly n2 = num.shifted(-nv);
    Poly d2 = den.shifted(-den.valuation());
    Series a(n2.coeffs().begin(), n2.coeffs().end());
    a.resize(static_cast<std::size_t>(m), Rational(0));
    Series s = series_div(a, Series(d2.coeffs().begin(), d2.coeffs().end()));
    s.resize(static_cast<std::size_t>(m), Rational(0));
    if (m == 1) {
        out.value = -s[0];
    } else {
        out.principal.assign(s.begin(), s.begin() + m);
        out.value = -s[static_cast<std::size_t>(m - 1)];
    }
    return out;
}

namespace {

// Real parts of the poles of f(x) with x = q^{-scale * s}.
std::vector<double> pole_real_parts(const RationalFunction& f, double log_q_scale)
{
    std::vector<double> out;
    const Poly& d = f.den();
    int v = d.valuation();
    Poly core = d.shifted(-v);
    if (core.degree() >= 1)
        for (const auto& r : poly_complex_roots(core, 1e-9))
            out.push_back(-std::log(std::abs(r.value)) / log_q_scale);
    std::sort(out.begin(), out.end());
    for (auto& x : out)
        x = std::round(x * 1e6) / 1e6;
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

UniformityResult uniformity_match(const RationalFunction& lhs, int r, const GroupZetaResult& z, const UniformityBox& box)
{
    if (r < 1)
        throw DomainError("uniformity_match: r must be positive");
    UniformityResult res;
    const Rational q(z.q);
    const double lq = std::log(q.get_d());
    const auto lhs_poles = pole_real_parts(lhs, r * lq);
    const auto rhs_poles = pole_real_parts(z.zeta, lq);
    const int max_num = box.max_num > 0 ? box.max_num : std::max(r, 1);
    const int max_den = box.max_den > 0 ? box.max_den : std::max(r, 1);
    std::set<Rational> seen_a;
    const Rational samples[] = {Rational(3, 11), Rational(5, 7), Rational(2, 13), Rational(7, 3)};
    for (int d = 1; d <= max_den; ++d) {
        for (int n = 1; n <= max_num; ++n) {
            const Rational a = ratio(n, d);
            if (!seen_a.insert(a).second)
                continue;
            const long da = a.get_den().get_si();
            for (long j = -2 * da * box.b_range; j <= 2 * da * box.b_range; ++j) {
                const Rational b = ratio(j, 2 * da);
                std::ostringstream tag;
                tag << "a=" << to_string(a) << " b=" << to_string(b);
                // group pole s' maps to s = (s' - b)/a
                std::vector<double> mapped;
                for (double sp : rhs_poles)
                    mapped.push_back(std::round((sp - b.get_d()) / a.get_d() * 1e6) / 1e6);
                std::sort(mapped.begin(), mapped.end());
                mapped.erase(std::unique(mapped.begin(), mapped.end()), mapped.end());
                if (mapped != lhs_poles)
                    continue;
                Rational qb;
                if (!rational_power(z.q, -b, qb)) {
                    res.tried.push_back(tag.str() + ": q^{-b} irrational");
                    continue;
                }
                // v = q^{-s/d}: T = v^{r d}, u = q^{-b} v^{n}
                const long an = a.get_num().get_si();
                RationalFunction L = lhs.substitute(MonomialSubstitution::power(1, static_cast<int>(r * da), Var::v));
                RationalFunction G = z.zeta.substitute(MonomialSubstitution::power(qb, static_cast<int>(an), Var::v));
                std::optional<Rational> cval;
                for (const auto& x : samples) {
                    try {
                        const Rational gv = G.eval(x);
                        if (gv == 0)
                            continue;
                        cval = L.eval(x) / gv;
                        break;
                    } catch (const PoleError&) {
                    }
                }
                if (!cval || *cval == 0) {
                    res.tried.push_back(tag.str() + ": no usable sample point");
                    continue;
                }
                const bool ok = L == (*cval) * G;
                res.tried.push_back(tag.str() + " c=" + to_string(*cval) + (ok ? ": verified" : ": identity fails"));
                if (ok) {
                    res.match = UniformityMatch{a, b, *cval, true};
                    return res;
                }
            }
        }
    }
    return res;
}

} // namespace fzeta

#include "fzeta/rootsys.hpp"

#include "fzeta/error.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>

namespace fzeta {

namespace {

std::vector<std::vector<int>> gram_matrix(char type, int n)
{
    std::vector<std::vector<int>> B(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
    auto set = [&](int i, int j, int v) {
        B[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v;
        B[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = v;
    };
    switch (type) {
    case 'A':
        for (int i = 0; i < n; ++i)
            set(i, i, 2);
        for (int i = 0; i + 1 < n; ++i)
            set(i, i + 1, -1);
        break;
    case 'B':
    case 'C':
        for (int i = 0; i < n; ++i)
            set(i, i, 2);
        for (int i = 0; i + 1 < n; ++i)
            set(i, i + 1, -1);
        if (type == 'B') {
            set(n - 1, n - 1, 1);
        } else {
            set(n - 1, n - 1, 4);
            set(n - 2, n - 1, -2);
        }
        break;
    case 'D':
        for (int i = 0; i < n; ++i)
            set(i, i, 2);
        for (int i = 0; i + 2 < n; ++i)
            set(i, i + 1, -1);
        set(n - 3, n - 1, -1);
        break;
    case 'G':
        set(0, 0, 2);
        set(1, 1, 6);
        set(0, 1, -3);
        break;
    default:
        break;
    }
    return B;
}

void require_supported(char type, int rank)
{
    std::ostringstream os;
    os << "unsupported root system " << type << "_" << rank;
    bool ok = false;
    switch (type) {
    case 'A':
        ok = rank >= 1 && rank <= 7;
        break;
    case 'B':
    case 'C':
        ok = rank >= 2 && rank <= 5;
        break;
    case 'D':
        ok = rank >= 4 && rank <= 5;
        break;
    case 'G':
        ok = rank == 2;
        break;
    default:
        break;
    }
    if (!ok)
        throw CapabilityError(os.str());
}

int root_height(const RootVector& r) { return std::accumulate(r.begin(), r.end(), 0); }

} // namespace

std::string RootSystem::label() const
{
    std::ostringstream os;
    os << type << "_" << rank;
    return os.str();
}

int RootSystem::simple(int j) const
{
    if (j < 1 || j > rank)
        throw DomainError("simple root index out of range");
    RootVector e(static_cast<std::size_t>(rank), 0);
    e[static_cast<std::size_t>(j - 1)] = 1;
    return index_of(e);
}

std::optional<int> RootSystem::simple_index(int i) const
{
    const auto& r = roots[static_cast<std::size_t>(i)];
    int pos = -1;
    for (int j = 0; j < rank; ++j) {
        if (r[static_cast<std::size_t>(j)] == 0)
            continue;
        if (r[static_cast<std::size_t>(j)] != 1 || pos >= 0)
            return std::nullopt;
        pos = j;
    }
    if (pos < 0)
        return std::nullopt;
    return pos + 1;
}

int RootSystem::index_of(const RootVector& r) const
{
    auto it = index_.find(r);
    if (it == index_.end())
        throw DomainError("vector is not a root of " + label());
    return it->second;
}

int RootSystem::inner(const RootVector& a, const RootVector& b) const
{
    int s = 0;
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            s += a[static_cast<std::size_t>(i)] * gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] *
                 b[static_cast<std::size_t>(j)];
    return s;
}

int RootSystem::pair_with_coroot(const RootVector& beta, int i) const
{
    const auto& a = roots[static_cast<std::size_t>(i)];
    return 2 * inner(beta, a) / inner(a, a);
}

int RootSystem::pair(const Weight& w, int i) const
{
    const auto& c = coroots[static_cast<std::size_t>(i)];
    int s = 0;
    for (int j = 0; j < rank; ++j)
        s += w[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(j)];
    return s;
}

int RootSystem::height(int i) const { return root_height(coroots[static_cast<std::size_t>(i)]); }

int RootSystem::max_height() const
{
    int m = 0;
    for (int i = 0; i < size(); ++i)
        m = std::max(m, std::abs(height(i)));
    return m;
}

int RootSystem::max_lambda_pairing(int p) const
{
    int m = 0;
    for (int i = 0; i < size(); ++i)
        m = std::max(m, std::abs(lambda_pairing(p, i)));
    return m;
}

Certificate RootSystem::check_invariants() const
{
    Certificate cert;
    for (int i = 1; i <= rank; ++i)
        for (int j = 1; j <= rank; ++j) {
            int v = pair(fundamental_weights[static_cast<std::size_t>(i - 1)], simple(j));
            std::ostringstream os;
            os << "<lambda_" << i << ", alpha_" << j << "^vee> = " << v;
            cert.record(v == (i == j ? 1 : 0), os.str());
        }
    for (int i = 0; i < size(); ++i) {
        std::ostringstream os;
        os << "ht of coroot " << i << " = " << height(i);
        cert.record(height(i) != 0 && height(i) == pair(rho, i), os.str());
    }
    {
        std::ostringstream os;
        os << "|Phi| = " << size();
        bool ok = true;
        if (type == 'A')
            ok = size() == rank * (rank + 1);
        if (type == 'G')
            ok = size() == 12;
        cert.record(ok, os.str());
    }
    return cert;
}

RootSystem build_root_system(char type, int rank)
{
    require_supported(type, rank);
    RootSystem rs;
    rs.type = type;
    rs.rank = rank;
    rs.gram = gram_matrix(type, rank);
    const auto n = static_cast<std::size_t>(rank);
    rs.cartan.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            rs.cartan[i][j] = 2 * rs.gram[j][i] / rs.gram[i][i];

    // Reflection closure of the simple roots.
    auto reflect = [&](const RootVector& b, std::size_t i) {
        int c = 0;
        for (std::size_t j = 0; j < n; ++j)
            c += b[j] * rs.cartan[i][j];
        RootVector r = b;
        r[i] -= c;
        return r;
    };
    std::set<RootVector> seen;
    std::deque<RootVector> queue;
    for (std::size_t i = 0; i < n; ++i) {
        RootVector e(n, 0);
        e[i] = 1;
        seen.insert(e);
        queue.push_back(e);
    }
    while (!queue.empty()) {
        RootVector b = queue.front();
        queue.pop_front();
        for (std::size_t i = 0; i < n; ++i) {
            RootVector r = reflect(b, i);
            if (seen.insert(r).second)
                queue.push_back(r);
        }
    }
    std::vector<RootVector> pos;
    for (const auto& r : seen) {
        bool nonneg = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
        bool nonpos = std::all_of(r.begin(), r.end(), [](int x) { return x <= 0; });
        if (!nonneg && !nonpos)
            throw ConsistencyError("root with mixed-sign coordinates");
        if (nonneg)
            pos.push_back(r);
    }
    std::stable_sort(pos.begin(), pos.end(), [](const RootVector& a, const RootVector& b) {
        int ha = root_height(a), hb = root_height(b);
        return ha != hb ? ha < hb : a > b;
    });
    rs.num_positive = static_cast<int>(pos.size());
    rs.roots = pos;
    for (const auto& r : pos) {
        RootVector m = r;
        for (auto& x : m)
            x = -x;
        rs.roots.push_back(m);
    }
    for (int i = 0; i < rs.size(); ++i)
        rs.index_[rs.roots[static_cast<std::size_t>(i)]] = i;

    for (const auto& r : rs.roots) {
        const int norm = rs.inner(r, r);
        RootVector c(n);
        for (std::size_t j = 0; j < n; ++j) {
            const int num = r[j] * rs.gram[j][j];
            if (num % norm != 0)
                throw ConsistencyError("non-integral coroot coordinates");
            c[j] = num / norm;
        }
        rs.coroots.push_back(c);
    }
    for (std::size_t i = 0; i < n; ++i) {
        Weight w(n, 0);
        w[i] = 1;
        rs.fundamental_weights.push_back(w);
    }
    rs.rho.assign(n, 1);
    return rs;
}

int WeylGroup::compose(int a, int b) const
{
    const auto& pa = elements[static_cast<std::size_t>(a)];
    const auto& pb = elements[static_cast<std::size_t>(b)];
    Perm c(pa.size());
    for (std::size_t i = 0; i < pa.size(); ++i)
        c[i] = pa[static_cast<std::size_t>(pb[i])];
    return find(c);
}

int WeylGroup::inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }

int WeylGroup::find(const Perm& p) const
{
    auto it = index_.find(p);
    if (it == index_.end())
        throw ConsistencyError("permutation is not a Weyl group element");
    return it->second;
}

int WeylGroup::apply_inverse(int w, int root) const { return apply(inverse(w), root); }

std::vector<int> WeylGroup::phi_w(const RootSystem& rs, int w) const
{
    std::vector<int> out;
    for (int i = 0; i < rs.num_positive; ++i)
        if (!rs.is_positive(apply(w, i)))
            out.push_back(i);
    return out;
}

Weight WeylGroup::act(const RootSystem& rs, int w, const Weight& lambda) const
{
    // <w lambda, alpha_j^vee> = <lambda, (w^{-1} alpha_j)^vee>
    Weight out(static_cast<std::size_t>(rs.rank));
    for (int j = 1; j <= rs.rank; ++j)
        out[static_cast<std::size_t>(j - 1)] = rs.pair(lambda, apply_inverse(w, rs.simple(j)));
    return out;
}

WeylGroup enumerate_weyl(const RootSystem& rs, std::size_t cap)
{
    WeylGroup W;
    const int m = rs.size();
    std::vector<Perm> gens;
    for (int j = 1; j <= rs.rank; ++j) {
        const RootVector& a = rs.roots[static_cast<std::size_t>(rs.simple(j))];
        Perm p(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) {
            RootVector r = rs.roots[static_cast<std::size_t>(i)];
            const int c = rs.pair_with_coroot(r, rs.simple(j));
            for (int t = 0; t < rs.rank; ++t)
                r[static_cast<std::size_t>(t)] -= c * a[static_cast<std::size_t>(t)];
            p[static_cast<std::size_t>(i)] = rs.index_of(r);
        }
        gens.push_back(p);
    }
    Perm id(static_cast<std::size_t>(m));
    std::iota(id.begin(), id.end(), 0);
    W.elements.push_back(id);
    W.length.push_back(0);
    W.index_[id] = 0;
    for (std::size_t head = 0; head < W.elements.size(); ++head) {
        for (const auto& g : gens) {
            const Perm& w = W.elements[head];
            Perm c(w.size());
            for (std::size_t i = 0; i < w.size(); ++i)
                c[i] = w[static_cast<std::size_t>(g[i])];
            if (W.index_.count(c))
                continue;
            if (W.elements.size() >= cap) {
                std::ostringstream os;
                os << "Weyl group of " << rs.label() << " exceeds enumeration cap " << cap;
                throw CapabilityError(os.str());
            }
            W.index_[c] = static_cast<int>(W.elements.size());
            W.elements.push_back(c);
            W.length.push_back(W.length[head] + 1);
        }
    }
    for (const auto& g : gens)
        W.generators.push_back(W.find(g));
    W.inverse_.resize(W.elements.size());
    for (std::size_t a = 0; a < W.elements.size(); ++a) {
        Perm inv(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            inv[static_cast<std::size_t>(W.elements[a][static_cast<std::size_t>(i)])] = i;
        W.inverse_[a] = W.find(inv);
    }
    for (int w = 0; w < W.size(); ++w) {
        const int l = static_cast<int>(W.phi_w(rs, w).size());
        if (l != W.length[static_cast<std::size_t>(w)])
            throw ConsistencyError("l(w) != |Phi_w|");
        if (l == rs.num_positive)
            W.longest = w;
    }
    return W;
}

bool ParabolicData::in_delta_p(int root) const
{
    return std::find(delta_p.begin(), delta_p.end(), root) != delta_p.end();
}

bool ParabolicData::in_frak_w(int w) const { return std::find(frak_w.begin(), frak_w.end(), w) != frak_w.end(); }

int ParabolicData::c_p_integer() const
{
    if (!is_integer(c_p))
        throw CapabilityError("c_p = " + to_string(c_p) + " is not an integer");
    return static_cast<int>(c_p.get_num().get_si());
}

ParabolicData parabolic_data(const RootSystem& rs, const WeylGroup& W, int p)
{
    if (p < 1 || p > rs.rank)
        throw DomainError("parabolic index p out of range");
    ParabolicData pd;
    pd.p = p;
    for (int j = 1; j <= rs.rank; ++j)
        if (j != p)
            pd.delta_p.push_back(rs.simple(j));
    for (int i = 0; i < rs.num_positive; ++i)
        if (rs.roots[static_cast<std::size_t>(i)][static_cast<std::size_t>(p - 1)] == 0)
            pd.phi_p_pos.push_back(i);
    // c_p = 2 <lambda_p - rho_p, alpha_p^vee> with 2 rho_p = sum of Phi_p^+
    int two_rho_p = 0;
    for (int i : pd.phi_p_pos)
        two_rho_p += rs.pair_with_coroot(rs.roots[static_cast<std::size_t>(i)], rs.simple(p));
    pd.c_p = Rational(2 - two_rho_p);

    std::vector<int> target = pd.phi_p_pos;
    bool found = false;
    for (int w = 0; w < W.size(); ++w) {
        if (W.phi_w(rs, w) == target) {
            pd.w_p = w;
            found = true;
            break;
        }
    }
    if (!found)
        throw ConsistencyError("longest element of W_p not found");

    for (int w = 0; w < W.size(); ++w) {
        bool ok = true;
        for (int a : pd.delta_p) {
            const int b = W.apply(w, a);
            if (rs.is_positive(b) && !rs.simple_index(b)) {
                ok = false;
                break;
            }
        }
        if (ok) {
            pd.frak_w.push_back(w);
            pd.phi_w[w] = W.phi_w(rs, w);
        }
    }
    for (int w : {0, W.longest, pd.w_p})
        if (!pd.in_frak_w(w))
            throw ConsistencyError("frak_w misses one of id, w_0, w_p");
    return pd;
}

int count_at(const CountMap& m, int k, int h)
{
    auto it = m.find({k, h});
    return it == m.end() ? 0 : it->second;
}

int CountTable::N(int w, int k, int h) const
{
    auto it = n_pw.find(w);
    if (it == n_pw.end())
        throw DomainError("no N_{p,w} table for this Weyl element");
    return count_at(it->second, k, h);
}

std::vector<std::pair<KH, int>> CountTable::normalization() const
{
    std::vector<std::pair<KH, int>> out;
    for (const auto& [kh, m] : m_p)
        if (kh.first >= 0 && kh.second >= 2 && m != 0)
            out.push_back({kh, m});
    return out;
}

std::vector<std::pair<KH, int>> CountTable::d_exponents() const
{
    std::vector<std::pair<KH, int>> out;
    for (int k = 0; k <= k_max; ++k)
        for (int h = 2; h <= h_max + 1; ++h) {
            const int e = Np(k, h - 1) - M(k, h);
            if (e != 0)
                out.push_back({{k, h}, e});
        }
    return out;
}

CountTable count_tables(const RootSystem& rs, const WeylGroup& W, const ParabolicData& pd)
{
    CountTable ct;
    ct.k_max = rs.max_lambda_pairing(pd.p);
    ct.h_max = rs.max_height();
    for (int i = 0; i < rs.size(); ++i)
        ++ct.n_p[{rs.lambda_pairing(pd.p, i), rs.height(i)}];

    std::vector<int> ws = pd.frak_w;
    if (!pd.in_frak_w(W.longest))
        ws.push_back(W.longest);
    for (int w : ws) {
        CountMap& m = ct.n_pw[w];
        for (int i = 0; i < rs.size(); ++i)
            if (!rs.is_positive(W.apply(w, i)))
                ++m[{rs.lambda_pairing(pd.p, i), rs.height(i)}];
    }
    for (int k = -ct.k_max; k <= ct.k_max; ++k) {
        for (int h = -ct.h_max; h <= ct.h_max + 1; ++h) {
            bool first = true;
            int best = 0, best_t = 0;
            for (int w : pd.frak_w) {
                const int d = ct.N(w, k, h - 1) - ct.N(w, k, h);
                if (first || d > best)
                    best = d;
                best_t = std::max(best_t, std::max(d, 0));
                first = false;
            }
            if (best != 0)
                ct.m_p[{k, h}] = best;
            if (best_t != 0)
                ct.m_tilde[{k, h}] = best_t;
        }
    }
    return ct;
}

Certificate lemma5_and_kks_check(const RootSystem& rs, const WeylGroup& W, const ParabolicData& pd,
                                 const CountTable& ct)
{
    Certificate cert;
    const int cp = pd.c_p_integer();
    const int H = ct.h_max + ct.k_max * std::abs(cp) + 2;
    for (int k = 0; k <= ct.k_max; ++k) {
        for (int h = 1; h <= H; ++h) {
            std::ostringstream os;
            os << "max and Mtilde agree at (k,h)=(" << k << "," << h << "): M=" << ct.M(k, h) << " Mtilde=" << ct.Mt(k, h);
            cert.record(ct.M(k, h) == ct.Mt(k, h), os.str());
        }
        for (int h = -H; h <= H; ++h) {
            const int lhs = ct.Np(k, k * cp - h) - ct.M(k, k * cp - h + 1);
            const int rhs = ct.Np(k, h - 1) - ct.M(k, h);
            std::ostringstream os;
            os << "N_p - M reflection at (k,h)=(" << k << "," << h << "): " << lhs << " vs " << rhs;
            cert.record(lhs == rhs, os.str());
        }
        for (int h = 2; h <= H; ++h) {
            const int kks = ct.N(W.longest, k, h - 1) - ct.N(W.longest, k, h);
            std::ostringstream os;
            os << "KKS at (k,h)=(" << k << "," << h << "): M=" << ct.M(k, h) << " N_w0 difference=" << kks;
            cert.record(ct.M(k, h) == kks, os.str());
        }
    }
    // c_p lambda_p - w_p rho = rho, tested against every simple coroot
    Weight wr = W.act(rs, pd.w_p, rs.rho);
    for (int j = 1; j <= rs.rank; ++j) {
        const int lhs = (j == pd.p ? cp : 0) - wr[static_cast<std::size_t>(j - 1)];
        std::ostringstream os;
        os << "c_p lambda_p - w_p rho = rho on alpha_" << j << "^vee: " << lhs << " vs 1";
        cert.record(lhs == 1, os.str());
    }
    return cert;
}

Certificate kks_positive_part_check(const WeylGroup& W, const CountTable& ct, int c_p)
{
    Certificate cert;
    const int H = ct.h_max + ct.k_max * std::abs(c_p) + 2;
    for (int k = 0; k <= ct.k_max; ++k)
        for (int h = 2; h <= H; ++h) {
            const int d = std::max(0, ct.N(W.longest, k, h - 1) - ct.N(W.longest, k, h));
            std::ostringstream os;
            os << "KKS positive part at (k,h)=(" << k << "," << h << "): M=" << ct.M(k, h) << " delta=" << d;
            cert.record(ct.M(k, h) == d, os.str());
        }
    return cert;
}

int involution_image(const WeylGroup& W, const ParabolicData& pd, int w)
{
    return W.compose(W.compose(W.longest, w), pd.w_p);
}

Certificate involution_check(const RootSystem& rs, const WeylGroup& W, const ParabolicData& pd)
{
    (void)rs;
    Certificate cert;
    std::set<int> image;
    for (int w : pd.frak_w) {
        const int v = involution_image(W, pd, w);
        const int back = involution_image(W, pd, v);
        image.insert(v);
        std::ostringstream os;
        os << "w=" << w << " -> " << v << " -> " << back;
        cert.record(pd.in_frak_w(v) && back == w, os.str());
    }
    cert.record(image.size() == pd.frak_w.size(), "involution is a bijection of frak_w");
    return cert;
}

ReductionTable w0_set_and_reduction_coeffs(const RootSystem& rs, const WeylGroup& W, const std::optional<Rational>& q)
{
    ReductionTable table;
    std::set<std::vector<int>> subsets;
    for (int w = 0; w < W.size(); ++w) {
        bool ok = true;
        std::vector<int> J;
        for (int j = 1; j <= rs.rank && ok; ++j) {
            const int b = W.apply(w, rs.simple(j));
            if (rs.is_positive(b)) {
                if (rs.simple_index(b))
                    J.push_back(j);
                else
                    ok = false;
            }
        }
        if (!ok)
            continue;
        ReductionRow row;
        row.w = w;
        row.J = J;
        row.sign = J.size() % 2 == 0 ? 1 : -1;
        std::set<int> wJ;
        for (int j : J)
            wJ.insert(*rs.simple_index(W.apply(w, rs.simple(j))));
        Weight wrho = W.act(rs, w, rs.rho);
        row.number_field_denominator = 1;
        Rational ff = 1;
        for (int j = 1; j <= rs.rank; ++j) {
            if (wJ.count(j))
                continue;
            const int pr = wrho[static_cast<std::size_t>(j - 1)];
            row.complement.push_back(j);
            row.pairings.push_back(pr);
            row.number_field_denominator *= Rational(1 - pr);
            if (q)
                ff *= 1 - fzeta::pow(*q, pr - 1);
            if (pr == 1)
                row.vanishing = true;
        }
        if (q)
            row.function_field_denominator = ff;
        subsets.insert(J);
        table.rows.push_back(std::move(row));
    }
    table.bijective = table.rows.size() == (std::size_t{1} << rs.rank) && subsets.size() == table.rows.size();
    return table;
}

} // namespace fzeta

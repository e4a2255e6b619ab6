#ifndef FZETA_ROOTSYS_HPP
#define FZETA_ROOTSYS_HPP

#include "fzeta/certificate.hpp"
#include "fzeta/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fzeta {

// Integer coordinates in the simple-root basis (or simple-coroot basis for coroots).
using RootVector = std::vector<int>;

// Weights are stored by their Dynkin labels <lambda, alpha_j^vee>.
using Weight = std::vector<int>;

struct RootSystem {
    char type = 'A';
    int rank = 0;
    std::vector<std::vector<int>> cartan; // cartan[i][j] = <alpha_j, alpha_i^vee>
    std::vector<std::vector<int>> gram;   // symmetric inner products of simple roots
    std::vector<RootVector> roots;        // positives first (by height), then negatives in the same order
    std::vector<RootVector> coroots;      // same indexing as roots
    std::vector<Weight> fundamental_weights;
    Weight rho;
    int num_positive = 0;

    std::string label() const;
    int size() const { return static_cast<int>(roots.size()); }
    bool is_positive(int i) const { return i < num_positive; }
    int negative_of(int i) const { return i < num_positive ? i + num_positive : i - num_positive; }
    int simple(int j) const; // root index of alpha_j, j in 1..rank
    std::optional<int> simple_index(int i) const; // j if roots[i] == alpha_j
    int index_of(const RootVector& r) const;

    int inner(const RootVector& a, const RootVector& b) const;
    int pair_with_coroot(const RootVector& beta, int i) const; // <beta, alpha_i^vee> for root index i
    int pair(const Weight& w, int i) const;                   // <w, alpha_i^vee>
    int lambda_pairing(int p, int i) const { return coroots[static_cast<std::size_t>(i)][static_cast<std::size_t>(p - 1)]; }
    int height(int i) const; // ht alpha^vee = <rho, alpha^vee>
    int max_height() const;
    int max_lambda_pairing(int p) const;

    Certificate check_invariants() const;

private:
    std::map<RootVector, int> index_;
    friend RootSystem build_root_system(char type, int rank);
};

RootSystem build_root_system(char type, int rank);

// Weyl group elements act as permutations of the root list: perm[i] = index of w(root i).
using Perm = std::vector<int>;

struct WeylGroup {
    std::vector<Perm> elements; // elements[0] = id
    std::vector<int> length;    // word length in simple reflections
    std::vector<int> generators; // index of s_j at position j-1
    int longest = 0;

    int size() const { return static_cast<int>(elements.size()); }
    int compose(int a, int b) const; // a o b
    int inverse(int a) const;
    int find(const Perm& p) const;
    int apply(int w, int root) const { return elements[static_cast<std::size_t>(w)][static_cast<std::size_t>(root)]; }
    int apply_inverse(int w, int root) const;
    std::vector<int> phi_w(const RootSystem& rs, int w) const; // positive roots sent to negatives
    Weight act(const RootSystem& rs, int w, const Weight& lambda) const;

private:
    std::map<Perm, int> index_;
    std::vector<int> inverse_;
    friend WeylGroup enumerate_weyl(const RootSystem& rs, std::size_t cap);
};

WeylGroup enumerate_weyl(const RootSystem& rs, std::size_t cap = 10000);

struct ParabolicData {
    int p = 1;
    std::vector<int> delta_p;   // root indices of Delta \ {alpha_p}
    std::vector<int> phi_p_pos; // positive roots spanned by delta_p
    Rational c_p;
    int w_p = 0;
    std::vector<int> frak_w;               // Weyl indices with w(Delta_p) in Delta u Phi^-
    std::map<int, std::vector<int>> phi_w; // per element of frak_w

    bool in_delta_p(int root) const;
    bool in_frak_w(int w) const;
    int c_p_integer() const;
};

ParabolicData parabolic_data(const RootSystem& rs, const WeylGroup& W, int p);

using KH = std::pair<int, int>;
using CountMap = std::map<KH, int>;

int count_at(const CountMap& m, int k, int h);

struct CountTable {
    std::map<int, CountMap> n_pw; // keyed by Weyl index (elements of frak_w and w_0)
    CountMap n_p;
    CountMap m_p;
    CountMap m_tilde;
    int k_max = 0;
    int h_max = 0;

    int N(int w, int k, int h) const;
    int Np(int k, int h) const { return count_at(n_p, k, h); }
    int M(int k, int h) const { return count_at(m_p, k, h); }
    int Mt(int k, int h) const { return count_at(m_tilde, k, h); }
    // (k, h) -> M_p(k, h) over k >= 0, h >= 2, nonzero entries only
    std::vector<std::pair<KH, int>> normalization() const;
    // (k, h) -> N_p(k, h - 1) - M_p(k, h) over k >= 0, h >= 2, nonzero entries only
    std::vector<std::pair<KH, int>> d_exponents() const;
};

CountTable count_tables(const RootSystem& rs, const WeylGroup& W, const ParabolicData& pd);

Certificate lemma5_and_kks_check(const RootSystem& rs, const WeylGroup& W, const ParabolicData& pd,
                                 const CountTable& ct);

// M_p(k,h) == max(0, N_{p,w0}(k,h-1) - N_{p,w0}(k,h)) over k >= 0, h >= 2.
Certificate kks_positive_part_check(const WeylGroup& W, const CountTable& ct, int c_p);

// w -> w_0 w w_p on frak_w; checks it is a well-defined involution.
Certificate involution_check(const RootSystem& rs, const WeylGroup& W, const ParabolicData& pd);
int involution_image(const WeylGroup& W, const ParabolicData& pd, int w);

struct ReductionRow {
    int w = 0;
    std::vector<int> J;            // simple indices (1-based) with w(alpha_j) simple
    std::vector<int> complement;   // simple indices alpha in Delta \ wJ
    std::vector<int> pairings;     // <w rho, alpha^vee> per complement entry
    int sign = 1;                  // (-1)^{|J|}
    Rational number_field_denominator;        // prod (1 - pairing)
    std::optional<Rational> function_field_denominator; // prod (1 - q^{pairing - 1}) when q given
    bool vanishing = false;
};

struct ReductionTable {
    std::vector<ReductionRow> rows;
    bool bijective = false; // J ranges over all subsets exactly once
};

ReductionTable w0_set_and_reduction_coeffs(const RootSystem& rs, const WeylGroup& W,
                                           const std::optional<Rational>& q = std::nullopt);

} // namespace fzeta

#endif

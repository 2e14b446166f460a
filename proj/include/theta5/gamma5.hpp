#ifndef THETA5_GAMMA5_HPP
#define THETA5_GAMMA5_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "theta5/core.hpp"
#include "theta5/numeric.hpp"

namespace theta5 {

// The four residues of Gamma_{theta,5} members mod 5.
enum class ResidueCase { PlusI, MinusI, PlusS, MinusS };

std::string to_string(ResidueCase rc);
ResidueCase residue_case_from_string(const std::string& s);

// a = d mod N and b = -c mod N.
bool in_gamma_theta_N(const SL2Matrix& m, const Int& N);

// Which of +-I, +-S the matrix reduces to mod 5. Throws std::domain_error
// for non-members.
ResidueCase residue_case(const SL2Matrix& m);

// A multiplier value together with the case integer that produced it.
// For the theta-constant products the value is nu_eta^6(M) exp(i pi E/5);
// for F and G it is exp(i pi f/5) itself.
struct MultiplierResult {
    RootOfUnity value;
    Int exponent;
    ResidueCase rc;
};

// Multiplier of theta[1/5;1/5](0,tau) theta[1/5;9/5](0,tau)  (weight 1).
MultiplierResult nu_product_A(const SL2Matrix& m);
// Multiplier of theta[3/5;3/5](0,tau) theta[3/5;7/5](0,tau).
MultiplierResult nu_product_B(const SL2Matrix& m);

// The case integers f(M), g(M) of the multiplier systems of F and G.
Int f_exponent(const SL2Matrix& m);
Int g_exponent(const SL2Matrix& m);

// nu_{F^k}(M) = exp(i pi k f(M)/5), nu_{G^k}(M) = exp(i pi k g(M)/5).
RootOfUnity nu_F(const SL2Matrix& m, const Int& k);
RootOfUnity nu_G(const SL2Matrix& m, const Int& k);

// F = eta^6 / (theta[1/5;1/5] theta[1/5;9/5]), G = eta^6 / (theta[3/5;3/5] theta[3/5;7/5]).
BigComplex F_numeric(const BigComplex& tau, Prec prec);
BigComplex G_numeric(const BigComplex& tau, Prec prec);

// Kernel membership via the congruence conditions (never via evaluating the
// multiplier; equality of the two routes is a tested theorem, not an input).
bool kernel_member_F(const SL2Matrix& m, const Int& k);
bool kernel_member_G(const SL2Matrix& m, const Int& k);

// The mod-25 class description of Ker nu_{F^k}, as transcribed data.
struct KernelResidueClasses {
    enum class Kind {
        AllMembers,              // k = 0 mod 10: the whole group
        PlusMinusIdentityMod5,   // k = 5 mod 10
        ExplicitMod25,           // other k: signed class list mod 25
    };
    Kind kind;
    std::vector<ResidueMatrix> classes;  // populated for ExplicitMod25

    bool contains(const SL2Matrix& m) const;
};
KernelResidueClasses kernel_residue_list(const Int& k);

// A coset transversal with its certification data.
struct CosetTable {
    std::string group_label;
    std::vector<SL2Matrix> reps;
};

struct Certificate {
    bool ok = true;
    std::string detail;
};

// The 30 representatives of Gamma(1) mod Gamma_{theta,5}.
CosetTable coset_reps_gamma1();
// Pairwise inequivalence via the membership oracle plus the exact
// 120 = 4 x 30 residue count over SL(2, Z/5).
Certificate certify_gamma1_table(const CosetTable& t);

// Transversal of Gamma_{theta,5} mod Ker nu_{F^k}.
CosetTable coset_reps_kernel(const Int& k);
// Pairwise quotients outside the kernel, nu_F values pairwise distinct and
// closed under multiplication, and rep count equal to the exact index
// derived from the mod-25 class counts.
Certificate certify_kernel_table(const CosetTable& t, const Int& k);

// A cusp p/q in lowest terms; q = 0 encodes infinity (stored as (1,0)).
struct Cusp {
    Int p, q;
    bool operator==(const Cusp& o) const { return p == o.p && q == o.q; }
    std::string text() const;
};

struct CuspResult {
    std::vector<Cusp> classes;  // canonical representatives
    bool decided = false;       // false: search bounds too small to trust
};

// Exact equivalence of two cusps under Gamma_{theta,5}. Decides by the
// stabilizer-coset test: with W, W' completing the points to unimodular
// matrices sending infinity there, the points are equivalent iff
// +-W' T^n W^{-1} is a member for some n; membership only depends on n mod 5.
bool cusp_equivalent(const Cusp& x, const Cusp& y);

// Cusp classes of Gamma_{theta,5} from scratch: bounded enumeration plus
// union-find under group elements. Unions are always sound, so the computed
// partition can only be too fine; `decided` is set when the exact test above
// certifies the final class representatives as pairwise inequivalent, which
// proves the partition correct. Otherwise the bound was too small.
CuspResult cusps(long bound = 12);

// Find the class representative of an arbitrary cusp within a computed
// result; returns the index into classes, or -1 if the point cannot be
// connected to any class at the given bound.
long cusp_class_of(const CuspResult& r, const Cusp& point, long bound = 12);

// Seeded pseudo-random members of the given residue class with entries
// bounded by entry_bound. Deterministic in the seed.
std::vector<SL2Matrix> sample_members(ResidueCase rc, std::size_t count, const Int& entry_bound,
                                      std::uint64_t seed);

}  // namespace theta5

#endif

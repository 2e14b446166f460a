#include "theta5/gamma5.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "theta5/eta.hpp"
#include "theta5/theta.hpp"

namespace theta5 {

namespace {

Int imod(const Int& x, long m) {
    Int r, mm(m);
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), mm.get_mpz_t());
    return r;
}

struct Mod5 {
    long a, b, c, d;
    bool operator==(const Mod5& o) const { return a == o.a && b == o.b && c == o.c && d == o.d; }
};

Mod5 mod5_of(const SL2Matrix& m) {
    return {imod(m.a, 5).get_si(), imod(m.b, 5).get_si(), imod(m.c, 5).get_si(),
            imod(m.d, 5).get_si()};
}

void require_member(const SL2Matrix& m) {
    if (!in_gamma_theta_N(m, 5))
        throw std::domain_error("matrix is not in Gamma_{theta,5}: [" + m.text() + "]");
}

Int exact_div5(const Int& num) {
    Rat r(num, 5);
    r.canonicalize();
    if (!is_integer(r))
        throw std::logic_error("case exponent is not divisible by 5 (non-member slipped through)");
    return r.get_num();
}

}  // namespace

std::string to_string(ResidueCase rc) {
    switch (rc) {
        case ResidueCase::PlusI: return "I";
        case ResidueCase::MinusI: return "-I";
        case ResidueCase::PlusS: return "S";
        case ResidueCase::MinusS: return "-S";
    }
    return "?";
}

ResidueCase residue_case_from_string(const std::string& s) {
    if (s == "I" || s == "+I") return ResidueCase::PlusI;
    if (s == "-I") return ResidueCase::MinusI;
    if (s == "S" || s == "+S") return ResidueCase::PlusS;
    if (s == "-S") return ResidueCase::MinusS;
    throw std::invalid_argument("unknown residue case: '" + s + "'");
}

bool in_gamma_theta_N(const SL2Matrix& m, const Int& N) {
    if (N <= 0) throw std::invalid_argument("in_gamma_theta_N: N must be positive");
    Int n = N;
    Int r1, r2;
    mpz_fdiv_r(r1.get_mpz_t(), Int(m.a - m.d).get_mpz_t(), n.get_mpz_t());
    mpz_fdiv_r(r2.get_mpz_t(), Int(m.b + m.c).get_mpz_t(), n.get_mpz_t());
    return r1 == 0 && r2 == 0;
}

ResidueCase residue_case(const SL2Matrix& m) {
    Mod5 t = mod5_of(m);
    if (t == Mod5{1, 0, 0, 1}) return ResidueCase::PlusI;
    if (t == Mod5{4, 0, 0, 4}) return ResidueCase::MinusI;
    if (t == Mod5{0, 4, 1, 0}) return ResidueCase::PlusS;
    if (t == Mod5{0, 1, 4, 0}) return ResidueCase::MinusS;
    throw std::domain_error("matrix is not in Gamma_{theta,5}: [" + m.text() + "]");
}

Int f_exponent(const SL2Matrix& m) {
    const Int &a = m.a, &b = m.b, &c = m.c, &d = m.d;
    switch (residue_case(m)) {
        case ResidueCase::PlusI: return exact_div5(4 * b + 8 * a * b + 8 * c * d);
        case ResidueCase::MinusI: return exact_div5(6 * b + 8 * a * b + 8 * c * d);
        case ResidueCase::PlusS: return Int(5) + exact_div5(4 * d + 8 * a * b + 8 * c * d);
        case ResidueCase::MinusS: return Int(5) + exact_div5(-4 * d + 8 * a * b + 8 * c * d);
    }
    throw std::logic_error("unreachable");
}

Int g_exponent(const SL2Matrix& m) {
    const Int &a = m.a, &b = m.b, &c = m.c, &d = m.d;
    switch (residue_case(m)) {
        case ResidueCase::PlusI: return exact_div5(6 * b + 2 * a * b + 2 * c * d);
        case ResidueCase::MinusI: return exact_div5(24 * b + 2 * a * b + 2 * c * d);
        case ResidueCase::PlusS: return Int(5) + exact_div5(6 * d + 2 * a * b + 2 * c * d);
        case ResidueCase::MinusS: return Int(5) + exact_div5(-6 * d + 2 * a * b + 2 * c * d);
    }
    throw std::logic_error("unreachable");
}

MultiplierResult nu_product_A(const SL2Matrix& m) {
    MultiplierResult out;
    out.rc = residue_case(m);
    out.exponent = -f_exponent(m);  // E = -f by construction of F
    out.value = nu_eta(m).pow(6) * RootOfUnity(Rat(out.exponent, 5));
    return out;
}

MultiplierResult nu_product_B(const SL2Matrix& m) {
    MultiplierResult out;
    out.rc = residue_case(m);
    out.exponent = -g_exponent(m);
    out.value = nu_eta(m).pow(6) * RootOfUnity(Rat(out.exponent, 5));
    return out;
}

RootOfUnity nu_F(const SL2Matrix& m, const Int& k) {
    return RootOfUnity(Rat(k * f_exponent(m), 5));
}

RootOfUnity nu_G(const SL2Matrix& m, const Int& k) {
    return RootOfUnity(Rat(k * g_exponent(m), 5));
}

namespace {

const ThetaChar kCharA1(Rat(1, 5), Rat(1, 5));
const ThetaChar kCharA2(Rat(1, 5), Rat(9, 5));
const ThetaChar kCharB1(Rat(3, 5), Rat(3, 5));
const ThetaChar kCharB2(Rat(3, 5), Rat(7, 5));

BigComplex eta_quotient(const BigComplex& tau, Prec prec, const ThetaChar& c1, const ThetaChar& c2) {
    const Prec wp = prec + 32;
    BigComplex zero(0, 0, wp);
    BigComplex e = eta_numeric(tau, prec);
    BigComplex e2 = e * e;
    BigComplex num = e2 * e2 * e2;
    BigComplex den = theta_series(c1, zero, tau, prec) * theta_series(c2, zero, tau, prec);
    BigFloat floor = BigFloat::pow2(-static_cast<long>(prec) / 2, wp);
    if (!(abs(den) > floor))
        throw std::domain_error("theta-constant denominator is ill-conditioned here");
    return num / den;
}

}  // namespace

BigComplex F_numeric(const BigComplex& tau, Prec prec) {
    return eta_quotient(tau, prec, kCharA1, kCharA2);
}

BigComplex G_numeric(const BigComplex& tau, Prec prec) {
    return eta_quotient(tau, prec, kCharB1, kCharB2);
}

bool kernel_member_F(const SL2Matrix& m, const Int& k) {
    require_member(m);
    long km = imod(k, 10).get_si();
    if (km == 0) return true;
    ResidueCase rc = residue_case(m);
    bool diag = rc == ResidueCase::PlusI || rc == ResidueCase::MinusI;
    if (km == 5) return diag;
    if (km % 2 == 1) {
        // k = +-1, +-3: b/5 = c/5 mod 5 (and b, c in 5Z, i.e. the +-I cases)
        if (!diag) return false;
        return imod(exact_div5(m.b) - exact_div5(m.c), 5) == 0;
    }
    // k = +-2, +-4
    if (diag) return imod(exact_div5(m.b) - exact_div5(m.c), 5) == 0;
    return imod(exact_div5(m.a) + exact_div5(m.d), 5) == 0;
}

bool kernel_member_G(const SL2Matrix& m, const Int& k) {
    // Ker nu_{G^k} = Ker nu_{F^k}: the congruence conditions coincide.
    return kernel_member_F(m, k);
}

namespace {

// Mod-25 class tables (each row taken with both signs).
constexpr int kOddKernelClasses[25][4] = {
    {1, 0, 0, 1},    {1, 5, 5, 1},    {1, -5, -5, 1},    {1, 10, 10, 1},    {1, -10, -10, 1},
    {6, 0, 0, -4},   {6, 5, 5, -4},   {6, -5, -5, -4},   {6, 10, 10, -4},   {6, -10, -10, -4},
    {11, 0, 0, -9},  {11, 5, 5, -9},  {11, -5, -5, -9},  {11, 10, 10, -9},  {11, -10, -10, -9},
    {-9, 0, 0, 11},  {-9, 5, 5, 11},  {-9, -5, -5, 11},  {-9, 10, 10, 11},  {-9, -10, -10, 11},
    {-4, 0, 0, 6},   {-4, 5, 5, 6},   {-4, -5, -5, 6},   {-4, 10, 10, 6},   {-4, -10, -10, 6},
};

constexpr int kEvenKernelExtraClasses[25][4] = {
    {0, -1, 1, 0},     {0, 4, 6, 0},     {0, 9, 11, 0},     {0, -11, -9, 0},     {0, -6, -4, 0},
    {5, -1, 1, -5},    {5, 4, 6, -5},    {5, 9, 11, -5},    {5, -11, -9, -5},    {5, -6, -4, -5},
    {-5, -1, 1, 5},    {-5, 4, 6, 5},    {-5, 9, 11, 5},    {-5, -11, -9, 5},    {-5, -6, -4, 5},
    {10, -1, 1, -10},  {10, 4, 6, -10},  {10, 9, 11, -10},  {10, -11, -9, -10},  {10, -6, -4, -10},
    {-10, -1, 1, 10},  {-10, 4, 6, 10},  {-10, 9, 11, 10},  {-10, -11, -9, 10},  {-10, -6, -4, 10},
};

void append_signed(std::vector<ResidueMatrix>& out, const int (*rows)[4], std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out.emplace_back(Int(25), rows[i][0], rows[i][1], rows[i][2], rows[i][3]);
        out.emplace_back(Int(25), -rows[i][0], -rows[i][1], -rows[i][2], -rows[i][3]);
    }
}

}  // namespace

KernelResidueClasses kernel_residue_list(const Int& k) {
    KernelResidueClasses out;
    long km = imod(k, 10).get_si();
    if (km == 0) {
        out.kind = KernelResidueClasses::Kind::AllMembers;
        return out;
    }
    if (km == 5) {
        out.kind = KernelResidueClasses::Kind::PlusMinusIdentityMod5;
        return out;
    }
    out.kind = KernelResidueClasses::Kind::ExplicitMod25;
    append_signed(out.classes, kOddKernelClasses, 25);
    if (km % 2 == 0) append_signed(out.classes, kEvenKernelExtraClasses, 25);
    return out;
}

bool KernelResidueClasses::contains(const SL2Matrix& m) const {
    if (!in_gamma_theta_N(m, 5)) return false;
    switch (kind) {
        case Kind::AllMembers:
            return true;
        case Kind::PlusMinusIdentityMod5: {
            ResidueCase rc = residue_case(m);
            return rc == ResidueCase::PlusI || rc == ResidueCase::MinusI;
        }
        case Kind::ExplicitMod25: {
            ResidueMatrix r = lambda_N(m, 25);
            return std::find(classes.begin(), classes.end(), r) != classes.end();
        }
    }
    return false;
}

namespace {

constexpr int kGamma1Reps[30][4] = {
    {1, 0, 0, 1},   {1, 1, 0, 1},    {1, -1, 0, 1},   {1, 2, 0, 1},    {1, -2, 0, 1},
    {1, 0, -1, 1},  {1, 1, -1, 0},   {1, 2, -1, -1},  {1, -2, -1, 3},  {1, -1, -1, 2},
    {1, 0, -2, 1},  {1, 1, -2, -1},  {1, -1, -2, 3},  {1, -2, -2, 5},  {1, 2, -2, -3},
    {1, 0, 2, 1},   {1, 1, 2, 3},    {1, -1, 2, -1},  {1, 2, 2, 5},    {1, -2, 2, -3},
    {-3, 1, 2, -1}, {-3, -2, 2, 1},  {-3, -5, 2, 3},  {-3, 2, -2, 1},  {-3, 5, -2, 3},
    {-5, 2, 2, -1}, {-5, 7, 2, -3},  {5, 12, 2, 5},   {5, 2, 2, 1},    {5, 7, 2, 3},
};

}  // namespace

CosetTable coset_reps_gamma1() {
    CosetTable t;
    t.group_label = "Gamma(1) / Gamma_{theta,5}";
    for (const auto& r : kGamma1Reps) t.reps.emplace_back(r[0], r[1], r[2], r[3]);
    return t;
}

Certificate certify_gamma1_table(const CosetTable& t) {
    Certificate cert;
    if (t.reps.size() != 30) {
        cert.ok = false;
        cert.detail = "expected 30 representatives";
        return cert;
    }
    for (std::size_t i = 0; i < t.reps.size(); ++i)
        for (std::size_t j = i + 1; j < t.reps.size(); ++j)
            if (in_gamma_theta_N(t.reps[i] * t.reps[j].inverse(), 5)) {
                cert.ok = false;
                cert.detail = "reps " + std::to_string(i) + " and " + std::to_string(j) +
                              " lie in the same coset";
                return cert;
            }
    // Completeness: the 4-element image of the subgroup mod 5 times the 30
    // rep images must cover all 120 elements of SL(2, Z/5).
    std::set<std::array<long, 4>> covered;
    const int subgroup[4][4] = {{1, 0, 0, 1}, {4, 0, 0, 4}, {0, 4, 1, 0}, {0, 1, 4, 0}};
    for (const auto& h : subgroup)
        for (const auto& rep : t.reps) {
            ResidueMatrix hr = ResidueMatrix(Int(5), h[0], h[1], h[2], h[3]) * lambda_N(rep, 5);
            covered.insert({hr.a.get_si(), hr.b.get_si(), hr.c.get_si(), hr.d.get_si()});
        }
    std::size_t order = 0;
    for (long a = 0; a < 5; ++a)
        for (long b = 0; b < 5; ++b)
            for (long c = 0; c < 5; ++c)
                for (long d = 0; d < 5; ++d)
                    if ((a * d - b * c) % 5 == 1 || (a * d - b * c) % 5 == 1 - 5) {
                        ++order;
                        if (!covered.count({a, b, c, d})) {
                            cert.ok = false;
                            cert.detail = "residue class not covered";
                            return cert;
                        }
                    }
    if (order != 120 || covered.size() != 120) {
        cert.ok = false;
        cert.detail = "residue count mismatch: |SL(2,Z/5)| = " + std::to_string(order) +
                      ", covered " + std::to_string(covered.size());
    }
    return cert;
}

CosetTable coset_reps_kernel(const Int& k) {
    CosetTable t;
    long km = imod(k, 10).get_si();
    t.group_label = "Gamma_{theta,5} / Ker nu_{F^k}, k = " + std::to_string(km) + " mod 10";
    if (km == 0) {
        t.reps.push_back(sl2_identity());
        return t;
    }
    if (km == 5) {
        t.reps.push_back(sl2_identity());
        t.reps.push_back(sl2_S());
        return t;
    }
    for (long n = 0; n <= 20; n += 5) t.reps.push_back(sl2_T_pow(n));
    if (km % 2 == 1) {
        // index 10: the +-S cosets need representatives too
        for (long n = 0; n <= 20; n += 5) t.reps.emplace_back(n, -1, 1, 0);
    }
    return t;
}

Certificate certify_kernel_table(const CosetTable& t, const Int& k) {
    Certificate cert;
    KernelResidueClasses list = kernel_residue_list(k);
    std::size_t index = 1;
    switch (list.kind) {
        case KernelResidueClasses::Kind::AllMembers: index = 1; break;
        case KernelResidueClasses::Kind::PlusMinusIdentityMod5: index = 2; break;
        case KernelResidueClasses::Kind::ExplicitMod25:
            // Gamma_{theta,5} occupies 4 * 125 = 500 classes mod 25; the
            // kernel is a union of classes, so the index is exact.
            if (500 % list.classes.size() != 0) {
                cert.ok = false;
                cert.detail = "class count does not divide 500";
                return cert;
            }
            index = 500 / list.classes.size();
            break;
    }
    if (t.reps.size() != index) {
        cert.ok = false;
        cert.detail = "rep count " + std::to_string(t.reps.size()) + " != exact index " +
                      std::to_string(index);
        return cert;
    }
    for (const auto& rep : t.reps)
        if (!in_gamma_theta_N(rep, 5)) {
            cert.ok = false;
            cert.detail = "rep outside the group";
            return cert;
        }
    for (std::size_t i = 0; i < t.reps.size(); ++i)
        for (std::size_t j = i + 1; j < t.reps.size(); ++j)
            if (kernel_member_F(t.reps[i] * t.reps[j].inverse(), k)) {
                cert.ok = false;
                cert.detail = "reps " + std::to_string(i) + " and " + std::to_string(j) +
                              " agree modulo the kernel";
                return cert;
            }
    // Values pairwise distinct and closed under multiplication, so they
    // enumerate the image group exactly.
    std::set<Rat> values;
    for (const auto& rep : t.reps) values.insert(nu_F(rep, k).exponent());
    if (values.size() != t.reps.size()) {
        cert.ok = false;
        cert.detail = "nu_F values not pairwise distinct";
        return cert;
    }
    for (const Rat& x : values)
        for (const Rat& y : values)
            if (!values.count(RootOfUnity(x + y).exponent())) {
                cert.ok = false;
                cert.detail = "nu_F values on reps are not closed under multiplication";
                return cert;
            }
    return cert;
}

std::string Cusp::text() const {
    if (q == 0) return "inf";
    if (q == 1) return p.get_str();
    return p.get_str() + "/" + q.get_str();
}

namespace {

long lgcd(long a, long b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct LongCusp {
    long p, q;
    bool operator<(const LongCusp& o) const { return p < o.p || (p == o.p && q < o.q); }
    bool operator==(const LongCusp& o) const { return p == o.p && q == o.q; }
};

LongCusp canon_cusp(long p, long q) {
    if (q == 0) return {1, 0};
    long g = lgcd(p, q);
    p /= g;
    q /= g;
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return {p, q};
}

struct Dsu {
    std::vector<long> up;
    explicit Dsu(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    long find(long x) {
        while (up[x] != x) {
            up[x] = up[up[x]];
            x = up[x];
        }
        return x;
    }
    void join(long x, long y) {
        x = find(x);
        y = find(y);
        if (x != y) up[x < y ? y : x] = (x < y ? x : y);
    }
};

struct GroupElt {
    long a, b, c, d;
};

// Every member of Gamma_{theta,5} with |entries| <= gen_bound.
std::vector<GroupElt> enumerate_members(long gen_bound) {
    std::vector<GroupElt> out;
    auto legcd = [](long x, long y, long& u, long& v) {
        // u x + v y = gcd
        long u0 = 1, v0 = 0, u1 = 0, v1 = 1;
        while (y) {
            long qt = x / y;
            long t = x - qt * y;
            x = y;
            y = t;
            t = u0 - qt * u1;
            u0 = u1;
            u1 = t;
            t = v0 - qt * v1;
            v0 = v1;
            v1 = t;
        }
        u = u0;
        v = v0;
        return x;
    };
    for (long c = -gen_bound; c <= gen_bound; ++c)
        for (long d = -gen_bound; d <= gen_bound; ++d) {
            if (c == 0 && d == 0) continue;
            long u, v;
            long g = legcd(c, d, u, v);
            if (g != 1 && g != -1) continue;
            if (g == -1) {
                u = -u;
                v = -v;
            }
            // u c + v d = 1  ->  a0 = v, b0 = -u gives a0 d - b0 c = 1
            long a0 = v, b0 = -u;
            // family (a0 + t c, b0 + t d); membership needs a = d, b = -c mod 5
            for (long t0 = 0; t0 < 5; ++t0) {
                long a1 = a0 + t0 * c, b1 = b0 + t0 * d;
                if (((a1 - d) % 5 + 5) % 5 != 0 || ((b1 + c) % 5 + 5) % 5 != 0) continue;
                // all shifts by 5s(c,d) stay in the group; the binding bound
                // constraint limits s to a short interval
                long coef = std::max(std::abs(c), std::abs(d));
                long span = (std::max(std::abs(a1), std::abs(b1)) + gen_bound) / (5 * coef) + 1;
                for (long s = -span; s <= span; ++s) {
                    long a = a1 + 5 * s * c, b = b1 + 5 * s * d;
                    if (std::abs(a) <= gen_bound && std::abs(b) <= gen_bound)
                        out.push_back({a, b, c, d});
                }
                break;  // t0 is unique mod 5 when it exists
            }
        }
    return out;
}

struct CuspPartition {
    std::vector<LongCusp> cands;
    std::map<LongCusp, long> index;
    std::vector<long> root;  // root index per candidate
};

CuspPartition cusp_partition(long bound, long gen_bound) {
    CuspPartition part;
    part.cands.push_back({1, 0});
    for (long q = 1; q <= bound; ++q)
        for (long p = -bound; p <= bound; ++p)
            if (lgcd(p, q) == 1) part.cands.push_back({p, q});
    for (std::size_t i = 0; i < part.cands.size(); ++i)
        part.index[part.cands[i]] = static_cast<long>(i);

    Dsu dsu(part.cands.size());
    std::vector<GroupElt> members = enumerate_members(gen_bound);
    for (const auto& g : members)
        for (std::size_t i = 0; i < part.cands.size(); ++i) {
            const auto& x = part.cands[i];
            LongCusp y = canon_cusp(g.a * x.p + g.b * x.q, g.c * x.p + g.d * x.q);
            auto it = part.index.find(y);
            if (it != part.index.end()) dsu.join(static_cast<long>(i), it->second);
        }
    part.root.resize(part.cands.size());
    for (std::size_t i = 0; i < part.cands.size(); ++i)
        part.root[i] = dsu.find(static_cast<long>(i));
    return part;
}

// Order used to pick class representatives: infinity first, then by
// denominator, then by |numerator|.
bool rep_order(const LongCusp& x, const LongCusp& y) {
    auto key = [](const LongCusp& c) {
        return std::array<long, 4>{c.q == 0 ? 0L : 1L, c.q, std::abs(c.p), c.p};
    };
    return key(x) < key(y);
}

std::vector<LongCusp> class_reps(const CuspPartition& part) {
    std::map<long, LongCusp> best;
    for (std::size_t i = 0; i < part.cands.size(); ++i) {
        long r = part.root[i];
        auto it = best.find(r);
        if (it == best.end() || rep_order(part.cands[i], it->second)) best[r] = part.cands[i];
    }
    std::vector<LongCusp> reps;
    for (const auto& kv : best) reps.push_back(kv.second);
    std::sort(reps.begin(), reps.end(), rep_order);
    return reps;
}

}  // namespace

bool cusp_equivalent(const Cusp& x, const Cusp& y) {
    auto completion = [](const Cusp& c) -> SL2Matrix {
        if (c.p == 0 && c.q == 0) throw std::invalid_argument("cusp (0,0) is not a point");
        if (c.q == 0) return {};
        Int g = gcd(c.p, c.q);
        Int p = c.p / g, q = c.q / g;
        Int gg, u, v;
        mpz_gcdext(gg.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
        // u p + v q = 1, so (p, -v; q, u) is unimodular and sends infinity to p/q
        return {p, -v, q, u};
    };
    SL2Matrix w1_inv = completion(x).inverse();
    SL2Matrix w2 = completion(y);
    for (long n = 0; n < 5; ++n) {
        SL2Matrix m = w2 * sl2_T_pow(n) * w1_inv;
        if (in_gamma_theta_N(m, 5) || in_gamma_theta_N(m.negated(), 5)) return true;
    }
    return false;
}

CuspResult cusps(long bound) {
    if (bound < 4) throw std::invalid_argument("cusps: bound too small to be meaningful");
    // Larger candidate boxes need larger connecting elements.
    long gen_bound = std::max(60L, 10 * bound);
    CuspPartition full = cusp_partition(bound, gen_bound);

    CuspResult out;
    for (const auto& r : class_reps(full)) out.classes.push_back({Int(r.p), Int(r.q)});

    // Certify: unions are sound, so pairwise-inequivalent representatives
    // prove the partition exact. Any equivalent pair means the search bound
    // was too small to connect them.
    out.decided = true;
    for (std::size_t i = 0; i < out.classes.size() && out.decided; ++i)
        for (std::size_t j = i + 1; j < out.classes.size() && out.decided; ++j)
            if (cusp_equivalent(out.classes[i], out.classes[j])) out.decided = false;
    return out;
}

long cusp_class_of(const CuspResult& r, const Cusp& point, long bound) {
    CuspPartition part = cusp_partition(bound, std::max(60L, 10 * bound));
    LongCusp x = canon_cusp(point.p.get_si(), point.q.get_si());
    auto it = part.index.find(x);
    if (it == part.index.end()) return -1;
    long root = part.root[it->second];
    // representative of that class
    LongCusp best{0, 0};
    bool have = false;
    for (std::size_t i = 0; i < part.cands.size(); ++i)
        if (part.root[i] == root && (!have || rep_order(part.cands[i], best))) {
            best = part.cands[i];
            have = true;
        }
    for (std::size_t i = 0; i < r.classes.size(); ++i)
        if (r.classes[i].p == best.p && r.classes[i].q == best.q) return static_cast<long>(i);
    return -1;
}

namespace {

// Deterministic PRNG independent of the standard library's distributions.
class SampleRng {
public:
    explicit SampleRng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }
    // uniform in [0, n), n > 0, by rejection
    std::uint64_t below(std::uint64_t n) {
        std::uint64_t lim = ~0ull - (~0ull % n);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= lim);
        return x % n;
    }
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

private:
    std::uint64_t state_;
};

struct CaseTargets {
    long a, b, c, d;
};

CaseTargets targets_of(ResidueCase rc) {
    switch (rc) {
        case ResidueCase::PlusI: return {1, 0, 0, 1};
        case ResidueCase::MinusI: return {4, 0, 0, 4};
        case ResidueCase::PlusS: return {0, 4, 1, 0};
        case ResidueCase::MinusS: return {0, 1, 4, 0};
    }
    throw std::logic_error("unreachable");
}

}  // namespace

std::vector<SL2Matrix> sample_members(ResidueCase rc, std::size_t count, const Int& entry_bound,
                                      std::uint64_t seed) {
    if (entry_bound < 5)
        throw std::invalid_argument("sample_members: entry bound below 5 is infeasible");
    if (!entry_bound.fits_slong_p() || entry_bound > Int(1000000000000000L))
        throw std::invalid_argument("sample_members: entry bound too large");
    const long B = entry_bound.get_si();
    const CaseTargets tg = targets_of(rc);
    SampleRng rng(seed ^ (static_cast<std::uint64_t>(tg.a * 5 + tg.c) * 0x9E3779B97F4A7C15ull));

    std::vector<SL2Matrix> out;
    out.reserve(count);
    std::size_t attempts = 0, limit = 2000 * (count + 1);
    while (out.size() < count) {
        if (++attempts > limit)
            throw std::invalid_argument("sample_members: bound appears infeasible");
        long c = rng.uniform(-B, B);
        long d = rng.uniform(-B, B);
        if (((c % 5) + 5) % 5 != tg.c || ((d % 5) + 5) % 5 != tg.d) continue;
        if (c == 0 && d == 0) continue;
        if (lgcd(c, d) != 1) continue;
        // extend to a unimodular matrix: a0 d - b0 c = 1
        long u = 0, v = 0;
        {
            long x = c, y = d, u0 = 1, v0 = 0, u1 = 0, v1 = 1;
            while (y) {
                long qt = x / y, t;
                t = x - qt * y;
                x = y;
                y = t;
                t = u0 - qt * u1;
                u0 = u1;
                u1 = t;
                t = v0 - qt * v1;
                v0 = v1;
                v1 = t;
            }
            if (x == -1) {
                u0 = -u0;
                v0 = -v0;
            }
            u = u0;
            v = v0;  // u c + v d = 1
        }
        long a1 = v, b1 = -u;
        bool hit = false;
        for (long t0 = 0; t0 < 5 && !hit; ++t0) {
            long at = a1 + t0 * c, bt = b1 + t0 * d;
            if (((at % 5) + 5) % 5 == tg.a && ((bt % 5) + 5) % 5 == tg.b) {
                a1 = at;
                b1 = bt;
                hit = true;
            }
        }
        if (!hit) continue;
        // randomize the top row by 5 s (c, d) within the bound
        long lo = -(1L << 60), hi = (1L << 60);
        auto fdiv = [](long p, long q) {
            long r = p / q;
            if ((p % q) && ((p < 0) != (q < 0))) --r;
            return r;
        };
        auto clampi = [&](long coef, long off) {
            if (coef == 0) {
                if (std::abs(off) > B) lo = 1, hi = 0;
                return;
            }
            long q5 = 5 * coef;
            long l, h;
            if (q5 > 0) {
                l = -fdiv(B + off, q5);
                h = fdiv(B - off, q5);
            } else {
                l = -fdiv(B - off, -q5);
                h = fdiv(B + off, -q5);
            }
            lo = std::max(lo, l);
            hi = std::min(hi, h);
        };
        clampi(c, a1);
        clampi(d, b1);
        if (lo > hi) continue;
        long s = rng.uniform(lo, hi);
        long a = a1 + 5 * s * c, b = b1 + 5 * s * d;
        if (std::abs(a) > B || std::abs(b) > B) continue;
        out.emplace_back(a, b, c, d);
    }
    return out;
}

}  // namespace theta5

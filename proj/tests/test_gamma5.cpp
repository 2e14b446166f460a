#include <doctest.h>

#include <set>

#include "theta5/eta.hpp"
#include "theta5/gamma5.hpp"
#include "theta5/theta.hpp"

using namespace theta5;

namespace {

SL2Matrix random_word(unsigned& state, int len) {
    auto next = [&state]() {
        state = state * 1664525u + 1013904223u;
        return state >> 16;
    };
    SL2Matrix m;
    SL2Matrix S = sl2_S(), T = sl2_T(), Ti = sl2_T_pow(-1);
    for (int i = 0; i < len; ++i) {
        switch (next() % 3) {
            case 0: m = m * S; break;
            case 1: m = m * T; break;
            default: m = m * Ti; break;
        }
    }
    if (next() % 2) m = m.negated();
    return m;
}

bool residue_in_pm_I_S(const SL2Matrix& m) {
    ResidueMatrix r = lambda_N(m, 5);
    ResidueMatrix I(Int(5), 1, 0, 0, 1), S(Int(5), 0, -1, 1, 0);
    return r == I || r == I.negated() || r == S || r == S.negated();
}

const Prec kPrec = 128;

}  // namespace

TEST_CASE("membership congruences") {
    for (long N : {1L, 2L, 3L, 5L, 7L}) CHECK(in_gamma_theta_N(SL2Matrix(), N));
    CHECK_FALSE(in_gamma_theta_N(sl2_T(), 5));
    CHECK_FALSE(in_gamma_theta_N(SL2Matrix(2, 3, 1, 2), 5));
    CHECK_FALSE(in_gamma_theta_N(SL2Matrix(5, 12, 2, 5), 5));
    CHECK(in_gamma_theta_N(SL2Matrix(6, -5, 5, -4), 5));
    CHECK(in_gamma_theta_N(sl2_S(), 5));
    CHECK(in_gamma_theta_N(sl2_T(), 1));
    CHECK_THROWS_AS(in_gamma_theta_N(sl2_T(), 0), std::invalid_argument);
}

TEST_CASE("membership is equivalent to the four mod-5 residues") {
    unsigned st = 65537;
    int members = 0;
    for (int i = 0; i < 10000; ++i) {
        SL2Matrix m = random_word(st, 10);
        bool lhs = in_gamma_theta_N(m, 5);
        CHECK(lhs == residue_in_pm_I_S(m));
        if (lhs) ++members;
    }
    CHECK(members > 100);  // the sweep actually exercises both outcomes
}

TEST_CASE("residue cases") {
    CHECK(residue_case(sl2_T_pow(5)) == ResidueCase::PlusI);
    CHECK(residue_case(sl2_S()) == ResidueCase::PlusS);
    CHECK(residue_case(sl2_S().negated()) == ResidueCase::MinusS);
    CHECK(residue_case(SL2Matrix(6, -5, 5, -4)) == ResidueCase::PlusI);
    CHECK(residue_case(SL2Matrix(-1, 0, 0, -1)) == ResidueCase::MinusI);
    CHECK_THROWS_AS(residue_case(sl2_T()), std::domain_error);
    CHECK(residue_case_from_string("-S") == ResidueCase::MinusS);
    CHECK(to_string(ResidueCase::MinusI) == "-I");
    CHECK_THROWS_AS(residue_case_from_string("Q"), std::invalid_argument);
}

TEST_CASE("case exponents of F and G") {
    CHECK(f_exponent(sl2_T_pow(5)) == 12);
    CHECK(g_exponent(sl2_T_pow(5)) == 8);
    CHECK(f_exponent(sl2_S()) == 5);
    CHECK(g_exponent(sl2_S()) == 5);
    CHECK(f_exponent(SL2Matrix()) == 0);
    CHECK(g_exponent(SL2Matrix()) == 0);
    CHECK_THROWS_AS(f_exponent(sl2_T()), std::domain_error);
}

TEST_CASE("nu_F and nu_G spot values") {
    CHECK(nu_F(sl2_T_pow(5), 1) == RootOfUnity(Rat(2, 5)));  // e^{12 i pi/5}
    CHECK(nu_F(sl2_S(), 5) == RootOfUnity(Rat(1)));          // e^{5 i pi} = -1
    CHECK(nu_F(sl2_S(), 5).to_complex(96).re.to_double() == doctest::Approx(-1.0));
    for (auto rc : {ResidueCase::PlusI, ResidueCase::MinusS})
        for (const auto& m : sample_members(rc, 5, 50, 3)) {
            CHECK(nu_F(m, 0).is_one());
            CHECK(nu_G(m, 0).is_one());
            CHECK(nu_F(m, 10).is_one());  // f is even on +-I, odd+5 on +-S
        }
}

TEST_CASE("product multiplier case integers and values") {
    MultiplierResult a5 = nu_product_A(sl2_T_pow(5));
    CHECK(a5.exponent == -12);
    CHECK(a5.rc == ResidueCase::PlusI);
    // nu_eta^6(T^5) e^{-12 i pi/5} = e^{i pi/2} e^{-12 i pi/5}
    CHECK(a5.value == RootOfUnity(Rat(1, 2) + Rat(-12, 5)));
    CHECK(a5.value.exponent() == Rat(1, 10));

    MultiplierResult as = nu_product_A(sl2_S());
    CHECK(as.exponent == -5);
    CHECK(as.value == RootOfUnity(Rat(3, 2)));  // e^{i pi/2} e^{-i pi} = -i

    CHECK(nu_product_B(sl2_T_pow(5)).exponent == -8);
    CHECK(nu_product_B(sl2_S()).exponent == -5);

    // denominators divide 60 across samples
    for (auto rc : {ResidueCase::PlusI, ResidueCase::MinusI, ResidueCase::PlusS, ResidueCase::MinusS})
        for (const auto& m : sample_members(rc, 10, 60, 9)) {
            CHECK(Int(60) % nu_product_A(m).value.den() == 0);
            CHECK(Int(60) % nu_product_B(m).value.den() == 0);
        }
}

TEST_CASE("F and G numeric values at i") {
    BigComplex i_tau(0, 1, 200);
    BigComplex F = F_numeric(i_tau, 200);
    BigComplex G = G_numeric(i_tau, 200);
    CHECK(abs(F.re - BigFloat::from_decimal("0.1505010533545760575659413977674114087675", 200))
              .to_double() < 1e-38);
    CHECK(abs(F.im - BigFloat::from_decimal("-0.1093454157717033882064140265469928541498", 200))
              .to_double() < 1e-38);
    CHECK(abs(G.re - BigFloat::from_decimal("-0.1245438330453659877045098710625558469396", 200))
              .to_double() < 1e-38);
    CHECK(abs(G.im - BigFloat::from_decimal("-0.3833065046204262050082610347928128471331", 200))
              .to_double() < 1e-38);
    CHECK(abs(F).to_double() > 0.1);

    // weight-2 law for one member of each case
    for (auto rc : {ResidueCase::PlusI, ResidueCase::PlusS}) {
        SL2Matrix m = sample_members(rc, 1, 30, 5)[0];
        BigComplex mt = m.act(BigComplex(0, 1, kPrec));
        BigComplex cd = m.denom(BigComplex(0, 1, kPrec));
        BigComplex lhs = F_numeric(mt, kPrec);
        BigComplex rhs = nu_F(m, 1).to_complex(kPrec + 32) * cd * cd * F_numeric(BigComplex(0, 1, kPrec), kPrec);
        CHECK((abs(lhs - rhs) / abs(lhs)).to_double() < 1e-23);
    }
}

TEST_CASE("kernel membership via congruences") {
    CHECK_FALSE(kernel_member_F(sl2_T_pow(5), 1));
    CHECK(kernel_member_F(sl2_T_pow(25), 1));
    CHECK(kernel_member_F(sl2_S(), 2));
    CHECK_FALSE(kernel_member_F(sl2_S(), 5));
    CHECK(kernel_member_F(SL2Matrix(), 7));
    CHECK(kernel_member_F(sl2_S(), 0));
    CHECK_THROWS_AS(kernel_member_F(sl2_T(), 1), std::domain_error);

    // k enters mod 10, including negative k
    for (auto rc : {ResidueCase::PlusI, ResidueCase::PlusS})
        for (const auto& m : sample_members(rc, 20, 1000, 17))
            for (long k = 0; k < 10; ++k) {
                CHECK(kernel_member_F(m, k) == kernel_member_F(m, k + 10));
                CHECK(kernel_member_F(m, k) == kernel_member_F(m, k - 20));
                CHECK(kernel_member_F(m, k) == kernel_member_G(m, k));
                CHECK(kernel_member_F(m, k) == nu_F(m, k).is_one());
            }
}

TEST_CASE("mod-25 kernel class lists") {
    CHECK(kernel_residue_list(0).kind == KernelResidueClasses::Kind::AllMembers);
    CHECK(kernel_residue_list(5).kind == KernelResidueClasses::Kind::PlusMinusIdentityMod5);
    CHECK(kernel_residue_list(15).kind == KernelResidueClasses::Kind::PlusMinusIdentityMod5);

    KernelResidueClasses odd = kernel_residue_list(1);
    CHECK(odd.kind == KernelResidueClasses::Kind::ExplicitMod25);
    CHECK(odd.classes.size() == 50);
    KernelResidueClasses even = kernel_residue_list(2);
    CHECK(even.classes.size() == 100);
    CHECK(kernel_residue_list(3).classes.size() == 50);
    CHECK(kernel_residue_list(-4).classes.size() == 100);

    // pairwise distinct classes
    for (const auto& list : {odd, even}) {
        std::set<std::string> seen;
        for (const auto& c : list.classes) seen.insert(c.text());
        CHECK(seen.size() == list.classes.size());
    }

    CHECK_FALSE(odd.contains(sl2_T_pow(5)));
    CHECK(odd.contains(sl2_T_pow(25)));
    CHECK(even.contains(sl2_S()));
    CHECK_FALSE(odd.contains(sl2_S()));
    CHECK(kernel_residue_list(0).contains(sl2_S()));
    CHECK_FALSE(kernel_residue_list(0).contains(sl2_T()));

    // membership through the list equals membership through the congruence
    for (auto rc : {ResidueCase::PlusI, ResidueCase::MinusI, ResidueCase::PlusS})
        for (const auto& m : sample_members(rc, 30, 2000, 23))
            for (long k : {1L, 2L, 5L}) {
                CHECK(kernel_residue_list(k).contains(m) == kernel_member_F(m, k));
            }

    // each listed class lifts to an actual kernel member
    for (long k : {1L, 2L}) {
        KernelResidueClasses list = kernel_residue_list(k);
        for (const auto& cls : list.classes) {
            SL2Matrix w = lift_residue(cls);
            CHECK(in_gamma_theta_N(w, 5));
            CHECK(kernel_member_F(w, k));
            CHECK(lambda_N(w, 25) == cls);
        }
    }
}

TEST_CASE("thirty cosets of the full modular group") {
    CosetTable t = coset_reps_gamma1();
    CHECK(t.reps.size() == 30);
    CHECK(t.reps[0] == SL2Matrix());
    bool has_expected_entry = false;
    for (const auto& m : t.reps)
        if (m == SL2Matrix(5, 12, 2, 5)) has_expected_entry = true;
    CHECK(has_expected_entry);
    Certificate cert = certify_gamma1_table(t);
    CHECK(cert.ok);

    // tampering is caught
    CosetTable bad = t;
    bad.reps[3] = bad.reps[2];
    CHECK_FALSE(certify_gamma1_table(bad).ok);
    CosetTable shorter = t;
    shorter.reps.pop_back();
    CHECK_FALSE(certify_gamma1_table(shorter).ok);
}

TEST_CASE("kernel transversals certified for every k") {
    for (long k = 0; k < 10; ++k) {
        CosetTable t = coset_reps_kernel(k);
        Certificate cert = certify_kernel_table(t, k);
        CHECK(cert.ok);
        if (!cert.ok) MESSAGE("k=", k, ": ", cert.detail);
    }
    CHECK(coset_reps_kernel(0).reps.size() == 1);
    CHECK(coset_reps_kernel(5).reps.size() == 2);
    CHECK(coset_reps_kernel(1).reps.size() == 10);
    CHECK(coset_reps_kernel(3).reps.size() == 10);
    CHECK(coset_reps_kernel(2).reps.size() == 5);
    CHECK(coset_reps_kernel(8).reps.size() == 5);

    // values on the k = 5 transversal are exactly {1, -1}
    std::set<Rat> v5;
    for (const auto& m : coset_reps_kernel(5).reps) v5.insert(nu_F(m, 5).exponent());
    CHECK(v5 == std::set<Rat>{Rat(0), Rat(1)});

    // k = 1: the ten values run over all tenth roots of unity
    std::set<Rat> v1;
    for (const auto& m : coset_reps_kernel(1).reps) v1.insert(nu_F(m, 1).exponent());
    CHECK(v1.size() == 10);
    for (long j = 0; j < 10; ++j) CHECK(v1.count(Rat(j, 5)) == 1);

    // k = 2: exactly the fifth roots of unity
    std::set<Rat> v2;
    for (const auto& m : coset_reps_kernel(2).reps) v2.insert(nu_F(m, 2).exponent());
    CHECK(v2 == std::set<Rat>{Rat(0), Rat(2, 5), Rat(4, 5), Rat(6, 5), Rat(8, 5)});

    // a broken transversal fails certification
    CosetTable bad = coset_reps_kernel(2);
    bad.reps[1] = bad.reps[0] * sl2_T_pow(25);  // same coset as reps[0]
    CHECK_FALSE(certify_kernel_table(bad, 2).ok);
}

TEST_CASE("cusp classes") {
    CuspResult r = cusps(12);
    CHECK(r.decided);
    CHECK(r.classes.size() == 6);

    Cusp inf{Int(1), Int(0)}, minus_one{Int(-1), Int(1)};
    Cusp half{Int(1), Int(2)}, minus_half{Int(-1), Int(2)};
    Cusp th{Int(3), Int(2)}, mth{Int(-3), Int(2)};
    Cusp fh{Int(5), Int(2)}, mfh{Int(-5), Int(2)};

    long c_inf = cusp_class_of(r, inf, 12);
    long c_m1 = cusp_class_of(r, minus_one, 12);
    long c_h = cusp_class_of(r, half, 12);
    long c_mh = cusp_class_of(r, minus_half, 12);
    CHECK(c_inf >= 0);
    CHECK(c_inf != c_m1);
    CHECK(c_h != c_mh);

    // the two pairs that actually coincide, with an explicit witness
    CHECK(cusp_class_of(r, th, 12) == cusp_class_of(r, mth, 12));
    CHECK(cusp_class_of(r, fh, 12) == cusp_class_of(r, mfh, 12));
    SL2Matrix w(25, -39, -16, 25);
    CHECK(in_gamma_theta_N(w, 5));
    // w maps 3/2 to -3/2 exactly: (25*3 - 39*2) / (-16*3 + 25*2) = -3/2
    CHECK(Rat(25 * 3 - 39 * 2, -16 * 3 + 25 * 2) == Rat(-3, 2));

    // all six classes are hit by the eight listed parabolic points
    std::set<long> hit;
    for (const auto& p : {inf, minus_one, half, minus_half, th, mth, fh, mfh})
        hit.insert(cusp_class_of(r, p, 12));
    CHECK(hit.size() == 6);

    // zero is in the class of infinity (S maps 0 there)
    CHECK(cusp_class_of(r, Cusp{Int(0), Int(1)}, 12) == c_inf);

    CHECK_THROWS_AS(cusps(2), std::invalid_argument);
}

TEST_CASE("exact cusp equivalence test") {
    Cusp inf{Int(1), Int(0)}, zero{Int(0), Int(1)}, m1{Int(-1), Int(1)};
    CHECK(cusp_equivalent(inf, zero));
    CHECK_FALSE(cusp_equivalent(inf, m1));
    CHECK(cusp_equivalent(Cusp{Int(3), Int(2)}, Cusp{Int(-3), Int(2)}));
    CHECK(cusp_equivalent(Cusp{Int(5), Int(2)}, Cusp{Int(-5), Int(2)}));
    CHECK_FALSE(cusp_equivalent(Cusp{Int(1), Int(2)}, Cusp{Int(-1), Int(2)}));
    // reduction of non-lowest-terms input
    CHECK(cusp_equivalent(Cusp{Int(6), Int(4)}, Cusp{Int(-3), Int(2)}));
    // the distant point that forces bigger connecting elements
    CHECK(cusp_equivalent(Cusp{Int(-13), Int(8)}, Cusp{Int(-3), Int(2)}));
}

TEST_CASE("cusp search stays certified at larger bounds") {
    CuspResult r = cusps(16);
    CHECK(r.decided);
    CHECK(r.classes.size() == 6);
}

TEST_CASE("member sampling") {
    for (auto rc : {ResidueCase::PlusI, ResidueCase::MinusI, ResidueCase::PlusS, ResidueCase::MinusS}) {
        auto ms = sample_members(rc, 50, 10000, 42);
        CHECK(ms.size() == 50);
        for (const auto& m : ms) {
            CHECK(in_gamma_theta_N(m, 5));
            CHECK(residue_case(m) == rc);
            CHECK(abs(m.a) <= 10000);
            CHECK(abs(m.b) <= 10000);
            CHECK(abs(m.c) <= 10000);
            CHECK(abs(m.d) <= 10000);
        }
        // seed determinism and seed sensitivity
        auto again = sample_members(rc, 50, 10000, 42);
        CHECK(again == ms);
        auto other = sample_members(rc, 50, 10000, 43);
        CHECK(other != ms);
    }
    CHECK_THROWS_AS(sample_members(ResidueCase::PlusI, 5, 2, 1), std::invalid_argument);
}

TEST_CASE("sampling throughput supports the acceptance sweeps") {
    // 500 members per case at bound 10^4 should be quick; run one case here
    auto ms = sample_members(ResidueCase::MinusS, 500, 10000, 4242);
    CHECK(ms.size() == 500);
}

#include <doctest.h>

#include <set>
#include <vector>

#include "theta5/core.hpp"
#include "theta5/io.hpp"

using namespace theta5;

namespace {

// Independent Jacobi oracle: trial-division factorization plus the Euler
// criterion on each prime factor.
long modpow(long base, long e, long m) {
    long r = 1;
    base %= m;
    if (base < 0) base += m;
    while (e) {
        if (e & 1) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return r;
}

int legendre_oracle(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    long t = modpow(a, (p - 1) / 2, p);
    return t == 1 ? 1 : -1;
}

int jacobi_oracle(long a, long n) {
    int result = 1;
    for (long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            n /= p;
            int l = legendre_oracle(a, p);
            if (l == 0) return 0;
            result *= l;
        }
    if (n > 1) {
        int l = legendre_oracle(a, n);
        if (l == 0) return 0;
        result *= l;
    }
    return result;
}

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

}  // namespace

TEST_CASE("jacobi symbol: examples and preconditions") {
    CHECK(jacobi_symbol(1, 1) == 1);
    CHECK(jacobi_symbol(3, 7) == -1);
    CHECK(jacobi_symbol(2, 15) == 1);
    CHECK(jacobi_symbol(0, 9) == 0);
    CHECK_THROWS_AS(jacobi_symbol(3, 8), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_symbol(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(jacobi_symbol(3, -7), std::invalid_argument);
}

TEST_CASE("jacobi symbol agrees with the Euler-criterion oracle up to 200") {
    for (long n = 1; n <= 200; n += 2)
        for (long a = 1; a <= 200; ++a)
            CHECK(jacobi_symbol(a, n) == jacobi_oracle(a, n));
}

TEST_CASE("quadratic reciprocity over odd coprime pairs") {
    for (long m = 3; m <= 121; m += 2)
        for (long n = 3; n <= 121; n += 2) {
            if (std::gcd(m, n) != 1) continue;
            int lhs = jacobi_symbol(m, n) * jacobi_symbol(n, m);
            int rhs = (m % 4 == 3 && n % 4 == 3) ? -1 : 1;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("starred symbols") {
    CHECK(symbol_upper(0, 1) == 1);
    CHECK(symbol_upper(0, -1) == 1);
    CHECK(symbol_upper(3, -7) == -1);
    CHECK(symbol_lower(0, -1) == 1);
    CHECK(symbol_lower(-1, -1) == -1);
    CHECK(symbol_lower(2, 3) == -1);
    CHECK(symbol_lower(2, -3) == symbol_upper(2, -3));  // c > 0: no correction
    CHECK_THROWS_AS(symbol_upper(2, 4), std::invalid_argument);
    CHECK_THROWS_AS(symbol_lower(3, 9), std::invalid_argument);
}

TEST_CASE("root of unity: canonical form and group laws") {
    RootOfUnity a(Rat(1, 12)), b(Rat(-1, 12));
    CHECK((a * b).is_one());
    CHECK(RootOfUnity(Rat(1, 5)).pow(10).is_one());
    CHECK(RootOfUnity(Rat(-1, 4)).exponent() == Rat(7, 4));
    CHECK(RootOfUnity(Rat(47, 12)).exponent() == Rat(23, 12));

    // e^{i pi 3/2} = -i
    BigComplex v = RootOfUnity(Rat(3, 2)).to_complex(128);
    CHECK(abs(v - BigComplex(0, -1, 128)).to_double() < 1e-35);

    std::vector<Rat> samples = {Rat(0),     Rat(1, 2),  Rat(3, 5),   Rat(-7, 12),
                                Rat(22, 7), Rat(-9, 4), Rat(119, 60)};
    for (const Rat& x : samples) {
        RootOfUnity r(x);
        CHECK((r * r.inverse()).is_one());
        CHECK(r.exponent() >= 0);
        CHECK(r.exponent() < 2);
        for (const Rat& y : samples)
            for (const Rat& z : samples) {
                RootOfUnity ry(y), rz(z);
                CHECK(((r * ry) * rz) == (r * (ry * rz)));
            }
    }
}

TEST_CASE("SL2 arithmetic") {
    SL2Matrix T = sl2_T(), S = sl2_S(), I;
    CHECK(I * T == T);
    CHECK(T.inverse() == SL2Matrix(1, -1, 0, 1));
    CHECK(S * S == I.negated());
    CHECK(S.inverse() * S == I);

    unsigned st = 99;
    for (int i = 0; i < 50; ++i) {
        SL2Matrix m = random_word(st, 12);
        CHECK(m * m.inverse() == I);
        CHECK((m.a * m.d - m.b * m.c) == 1);
    }
}

TEST_CASE("SL2 construction rejects non-unimodular input") {
    CHECK_THROWS_AS(SL2Matrix(6, 5, 5, -4), std::invalid_argument);  // det -49
    CHECK_THROWS_AS(SL2Matrix(1, 0, 0, -1), std::invalid_argument);
    CHECK_THROWS_AS(SL2Matrix(0, 0, 0, 0), std::invalid_argument);
    unsigned st = 7;
    auto next = [&st]() {
        st = st * 1664525u + 1013904223u;
        return static_cast<long>(st % 19) - 9;
    };
    int rejected = 0;
    for (int i = 0; i < 300; ++i) {
        long a = next(), b = next(), c = next(), d = next();
        if (a * d - b * c == 1) continue;
        ++rejected;
        CHECK_THROWS_AS(SL2Matrix(a, b, c, d), std::invalid_argument);
    }
    CHECK(rejected > 200);
}

TEST_CASE("lambda_N reduction and homomorphism") {
    // the reduction examples; [[6,5],[5,-4]] has det = 1 mod 5 only, so it
    // lives at the residue level
    CHECK(ResidueMatrix(Int(5), 6, 5, 5, -4).is_identity());
    SL2Matrix m(5, 12, 2, 5);
    CHECK(lambda_N(m, 5) == ResidueMatrix(Int(5), 0, 2, 2, 0));
    CHECK(lambda_N(sl2_S(), 2) == ResidueMatrix(Int(2), 0, 1, 1, 0));
    CHECK_THROWS_AS(lambda_N(m, 0), std::invalid_argument);
    CHECK_THROWS_AS(lambda_N(m, -3), std::invalid_argument);

    unsigned st = 31337;
    for (int i = 0; i < 60; ++i) {
        SL2Matrix x = random_word(st, 10), y = random_word(st, 10);
        for (long N : {2L, 5L, 25L})
            CHECK(lambda_N(x * y, N) == lambda_N(x, N) * lambda_N(y, N));
    }
}

TEST_CASE("lift_residue produces congruent unimodular lifts") {
    unsigned st = 4242;
    for (int i = 0; i < 40; ++i) {
        SL2Matrix m = random_word(st, 14);
        ResidueMatrix target = lambda_N(m, 25);
        SL2Matrix lift = lift_residue(target);
        CHECK(lambda_N(lift, 25) == target);
    }
    CHECK(lift_residue(ResidueMatrix(Int(25), 1, 0, 0, 1)) == SL2Matrix());
}

TEST_CASE("matrix text and JSON round trips") {
    SL2Matrix m(-19, 8, -31, 13);
    CHECK(SL2Matrix::from_text(m.text()) == m);
    CHECK(matrix_from_json(matrix_json(m)) == m);
    CHECK(parse_matrix_arg("  {\"a\":-19,\"b\":8,\"c\":-31,\"d\":13}") == m);
    CHECK(parse_matrix_arg("-19 8 -31 13") == m);
    CHECK_THROWS_AS(SL2Matrix::from_text("1 2 3"), std::invalid_argument);
    CHECK_THROWS_AS(SL2Matrix::from_text("1 0 0 1 junk"), std::invalid_argument);
    CHECK_THROWS_AS(SL2Matrix::from_text("a b c d"), std::invalid_argument);
}

TEST_CASE("rational and complex parsing") {
    CHECK(parse_rational("9/5") == Rat(9, 5));
    CHECK(parse_rational("-10/4") == Rat(-5, 2));
    CHECK(parse_rational("3") == 3);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);

    BigComplex z = parse_complex("0.25-2i", 128);
    CHECK(z.re.to_double() == doctest::Approx(0.25));
    CHECK(z.im.to_double() == doctest::Approx(-2.0));
    CHECK(parse_complex("i", 96).im.to_double() == doctest::Approx(1.0));
    CHECK(parse_complex("-3", 96).re.to_double() == doctest::Approx(-3.0));
    CHECK(parse_complex("1e-2+2e1i", 96).im.to_double() == doctest::Approx(20.0));
    CHECK_THROWS_AS(parse_complex("", 96), std::invalid_argument);
    CHECK_THROWS_AS(parse_complex("1+2", 96), std::invalid_argument);
}

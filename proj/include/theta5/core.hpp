#ifndef THETA5_CORE_HPP
#define THETA5_CORE_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

#include "theta5/numeric.hpp"

namespace theta5 {

using Int = mpz_class;
using Rat = mpq_class;

// Classical Jacobi symbol (a/n), n odd positive. Zero iff gcd(a,n) > 1.
int jacobi_symbol(const Int& a, const Int& n);

// (c/d)^* = (c/|d|), requires gcd(c,d) = 1, d odd.
int symbol_upper(const Int& c, const Int& d);

// (c/d)_* = (c/|d|) (-1)^{((sign c - 1)/2)((sign d - 1)/2)}, with sign(0) := +1.
int symbol_lower(const Int& c, const Int& d);

// sign with sign(0) := +1
inline int sign0(const Int& x) { return sgn(x) < 0 ? -1 : 1; }

// Reduce a rational into [0, 2).
Rat reduce_mod2(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// An exact root of unity e^{i pi r}, stored as the reduced rational r in [0,2).
// Equality is structural equality of the canonical exponent.
class RootOfUnity {
public:
    RootOfUnity() : r_(0) {}
    explicit RootOfUnity(const Rat& r) : r_(reduce_mod2(r)) {}

    static RootOfUnity one() { return RootOfUnity(); }

    const Rat& exponent() const { return r_; }
    Int num() const { return r_.get_num(); }
    Int den() const { return r_.get_den(); }
    bool is_one() const { return r_ == 0; }

    RootOfUnity operator*(const RootOfUnity& o) const { return RootOfUnity(r_ + o.r_); }
    RootOfUnity inverse() const { return RootOfUnity(-r_); }
    RootOfUnity pow(const Int& k) const { return RootOfUnity(Rat(k) * r_); }

    bool operator==(const RootOfUnity& o) const { return r_ == o.r_; }
    bool operator!=(const RootOfUnity& o) const { return r_ != o.r_; }

    BigComplex to_complex(Prec prec) const { return exp_i_pi(r_, prec); }

private:
    Rat r_;
};

// An element of SL(2,Z). Construction checks ad - bc = 1.
struct SL2Matrix {
    Int a, b, c, d;

    SL2Matrix() : a(1), b(0), c(0), d(1) {}
    SL2Matrix(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (a * d - b * c != 1)
            throw std::invalid_argument("matrix is not unimodular: [" + text() + "]");
    }

    SL2Matrix operator*(const SL2Matrix& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    SL2Matrix inverse() const { return {d, -b, -c, a}; }
    SL2Matrix negated() const { return {-a, -b, -c, -d}; }

    bool operator==(const SL2Matrix& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }

    // Moebius action tau -> (a tau + b)/(c tau + d)
    BigComplex act(const BigComplex& tau) const;
    // c tau + d
    BigComplex denom(const BigComplex& tau) const;

    std::string text() const;  // "a b c d"
    static SL2Matrix from_text(const std::string& s);
};

inline SL2Matrix sl2_identity() { return {}; }
inline SL2Matrix sl2_T() { return {1, 1, 0, 1}; }
inline SL2Matrix sl2_S() { return {0, -1, 1, 0}; }
SL2Matrix sl2_T_pow(long n);

// An element of SL(2, Z/N): entries reduced into [0, N).
struct ResidueMatrix {
    Int modulus;
    Int a, b, c, d;

    ResidueMatrix(Int N, const Int& a_, const Int& b_, const Int& c_, const Int& d_);

    bool operator==(const ResidueMatrix& o) const {
        return modulus == o.modulus && a == o.a && b == o.b && c == o.c && d == o.d;
    }
    ResidueMatrix operator*(const ResidueMatrix& o) const;
    ResidueMatrix negated() const { return {modulus, -a, -b, -c, -d}; }
    bool is_identity() const { return a == 1 % modulus && b == 0 && c == 0 && d == 1 % modulus; }

    std::string text() const;
};

// Entrywise reduction mod N (N >= 1).
ResidueMatrix lambda_N(const SL2Matrix& m, const Int& N);

// Lift a residue class with det = 1 (mod N) to an SL(2,Z) element congruent
// to it. Used to produce concrete witnesses for mod-N class lists.
SL2Matrix lift_residue(const ResidueMatrix& target);

Rat parse_rational(const std::string& s);

}  // namespace theta5

#endif

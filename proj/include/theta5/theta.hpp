#ifndef THETA5_THETA_HPP
#define THETA5_THETA_HPP

#include "theta5/core.hpp"
#include "theta5/numeric.hpp"

namespace theta5 {

// A pair of rational theta characteristics (eps, eps').
struct ThetaChar {
    Rat eps, eps_prime;

    ThetaChar() : eps(0), eps_prime(0) {}
    ThetaChar(Rat e, Rat ep) : eps(std::move(e)), eps_prime(std::move(ep)) {
        eps.canonicalize();
        eps_prime.canonicalize();
    }

    bool operator==(const ThetaChar& o) const {
        return eps == o.eps && eps_prime == o.eps_prime;
    }
};

// A characteristic together with an exact phase: theta[original] = phase * theta[reduced].
struct PhasedChar {
    ThetaChar reduced;
    RootOfUnity phase;
};

// Multiplier of the form exp(2 pi i (c0 + cv v + ct tau)) with exact rational
// coefficients, applied at evaluation time.
struct ExpMultiplier {
    Rat const_part, v_coeff, tau_coeff;
    BigComplex eval(const BigComplex& v, const BigComplex& tau, Prec prec) const;
    bool is_identity() const { return const_part == 0 && v_coeff == 0 && tau_coeff == 0; }
};

// Result of a half-period shift: theta[char](v + (m tau + n)/2) = multiplier * theta[target](v).
struct HalfShiftRule {
    ThetaChar target;
    ExpMultiplier multiplier;
};

// A point ct * tau + c0 with exact rational coefficients.
struct LatticePoint {
    Rat tau_coeff, const_part;
    BigComplex eval(const BigComplex& tau, Prec prec) const;
};

// theta[eps; eps'](v, tau) by the defining series. Im tau > 0 required.
BigComplex theta_series(const ThetaChar& ch, const BigComplex& v, const BigComplex& tau, Prec prec);

// Same value through the triple-product expansion.
BigComplex theta_product(const ThetaChar& ch, const BigComplex& v, const BigComplex& tau, Prec prec);

// d/dv theta[eps; eps'](v, tau) at v = 0, computed termwise.
BigComplex theta_deriv(const ThetaChar& ch, const BigComplex& tau, Prec prec);

// theta[char](v + n + m tau) = shift_integer(char, m, n).eval(v, tau) * theta[char](v)
ExpMultiplier shift_integer(const ThetaChar& ch, const Int& m, const Int& n);

// Unique characteristic in [0,2)^2 congruent mod 2, with the accumulated phase.
PhasedChar reduce_char(const ThetaChar& ch);

// (-eps, -eps'); satisfies theta[-eps;-eps'](v) = theta[eps;eps'](-v).
ThetaChar negate_char(const ThetaChar& ch);

// theta[char](v + (m tau + n)/2) = rule.multiplier.eval(v, tau) * theta[rule.target](v)
HalfShiftRule half_shift(const ThetaChar& ch, const Rat& m, const Rat& n);

// The single zero in the fundamental parallelogram: ((1-eps)/2) tau + (1-eps')/2.
LatticePoint zero_location(const ThetaChar& ch);

}  // namespace theta5

#endif

#include "theta5/eta.hpp"

#include <cmath>
#include <stdexcept>

namespace theta5 {

RootOfUnity nu_eta(const SL2Matrix& m) {
    const Int &a = m.a, &b = m.b, &c = m.c, &d = m.d;
    Int e;
    int s;
    if (mpz_odd_p(c.get_mpz_t())) {
        s = symbol_upper(d, c);  // (d/c)^* = (d/|c|)
        e = (a + d) * c - b * d * (c * c - 1) - 3 * c;
    } else {
        s = symbol_lower(c, d);
        e = (a + d) * c - b * d * (c * c - 1) + 3 * d - 3 - 3 * c * d;
    }
    Rat r(e, 12);
    r.canonicalize();
    if (s < 0) r += 1;
    return RootOfUnity(r);
}

namespace {

void require_upper_half(const BigComplex& tau) {
    if (!(tau.im.sgn() > 0)) throw std::domain_error("tau must lie in the upper half plane");
}

// Truncation index for the pentagonal expansion: terms |q|^{k(3k-1)/2} with
// |q| = e^{-2 pi y}; k(3k-1)/2 >= 3/2 (k-1)^2 keeps the bound simple.
long eta_terms(double y, Prec prec) {
    double target = (static_cast<double>(prec) + 24) * std::log(2.0);
    double k = std::sqrt(target / (3.0 * 3.14159265358979 * y)) + 3.0;
    return static_cast<long>(std::ceil(k));
}

}  // namespace

BigComplex eta_numeric(const BigComplex& tau, Prec prec) {
    require_upper_half(tau);
    const Prec wp = prec + 32;
    BigFloat two_pi = BigFloat::pi(wp);
    two_pi += two_pi;

    // q^{1/24} = exp(i pi tau / 12)
    BigComplex ipi_tau(-(BigFloat::pi(wp) * tau.im), BigFloat::pi(wp) * tau.re);
    BigComplex lead = exp(ipi_tau.mul_q(Rat(1, 12)));

    // Euler's pentagonal expansion of prod (1 - q^n):
    //   sum_k (-1)^k q^{k(3k-1)/2},  exponents 0, 1, 2, 5, 7, 12, 15, ...
    BigComplex q = exp(BigComplex(-(two_pi * tau.im), two_pi * tau.re));
    const long K = eta_terms(tau.im.to_double(), prec);

    BigComplex q3 = q * q * q;
    BigComplex sum(1, 0, wp);
    BigComplex pos = q;          // q^{k(3k-1)/2}, k = 1
    BigComplex pos_step = q * q3;  // ratio to next exponent: 3k+1
    BigComplex neg = q * q;      // q^{k(3k+1)/2}, k = 1
    BigComplex neg_step = q * q * q3;  // ratio: 3k+2
    int sign = -1;
    for (long k = 1; k <= K; ++k) {
        if (sign < 0) {
            sum = sum - pos;
            sum = sum - neg;
        } else {
            sum += pos;
            sum += neg;
        }
        pos *= pos_step;
        neg *= neg_step;
        pos_step *= q3;
        neg_step *= q3;
        sign = -sign;
    }
    return lead * sum;
}

BigFloat verify_eta_transform(const SL2Matrix& m, const BigComplex& tau, Prec prec) {
    require_upper_half(tau);
    const Prec wp = prec + 32;
    BigComplex t(BigFloat(tau.re, wp), BigFloat(tau.im, wp));
    BigComplex lhs = eta_numeric(m.act(t), prec);
    BigComplex rhs = nu_eta(m).to_complex(wp) * sqrt(m.denom(t)) * eta_numeric(t, prec);
    return abs(lhs - rhs) / abs(lhs);
}

}  // namespace theta5

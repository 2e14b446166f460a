#include "theta5/theta.hpp"

#include <cmath>
#include <stdexcept>

namespace theta5 {

namespace {

constexpr double kPi = 3.14159265358979323846;

void require_upper_half(const BigComplex& tau) {
    if (!(tau.im.sgn() > 0)) throw std::domain_error("tau must lie in the upper half plane");
}

// Fractional part of an exact rational, in [0, 1).
Rat frac_part(const Rat& r) {
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
    Rat out = r - Rat(fl);
    out.canonicalize();
    return out;
}

// exp(2 pi i (A tau + B v + C)) with exact rational A, B, C; the constant is
// reduced mod 1 before float conversion so large characteristics cost nothing.
BigComplex exp_term(const Rat& A, const Rat& B, const Rat& C, const BigComplex& v,
                    const BigComplex& tau, const BigFloat& two_pi) {
    BigFloat x_tau = tau.re, y_tau = tau.im;
    x_tau.mul_q(A);
    y_tau.mul_q(A);
    BigFloat x_v = v.re, y_v = v.im;
    x_v.mul_q(B);
    y_v.mul_q(B);
    BigFloat cst(frac_part(C), two_pi.prec());
    BigFloat re = -(two_pi * (y_tau + y_v));
    BigFloat im = two_pi * (x_tau + x_v + cst);
    return exp(BigComplex(std::move(re), std::move(im)));
}

struct SeriesWindow {
    long center;  // index of the peak term
    long half;    // half-width
};

SeriesWindow series_window(const ThetaChar& ch, const BigComplex& v, const BigComplex& tau,
                           Prec prec) {
    double y = tau.im.to_double();
    double vi = v.im.to_double();
    double h0 = mpq_class(ch.eps / 2).get_d();
    // peak of |exp(2 pi i [h^2/2 tau + h v])| over h = n + eps/2
    double hstar = -vi / y;
    double target = (static_cast<double>(prec) + 28) * std::log(2.0);
    // need pi y (h - hstar)^2 >= target beyond the peak
    double half = std::sqrt(target / (kPi * y)) + 4.0;
    return {static_cast<long>(std::llround(hstar - h0)), static_cast<long>(std::ceil(half)) + 2};
}

}  // namespace

BigComplex theta_series(const ThetaChar& ch, const BigComplex& v, const BigComplex& tau, Prec prec) {
    require_upper_half(tau);
    const Prec wp = prec + 48;
    const BigComplex vv(BigFloat(v.re, wp), BigFloat(v.im, wp));
    const BigComplex tt(BigFloat(tau.re, wp), BigFloat(tau.im, wp));
    BigFloat two_pi = BigFloat::pi(wp);
    two_pi += two_pi;

    const auto [n0, N] = series_window(ch, vv, tt, prec);
    const Rat h0 = ch.eps / 2;
    const Rat e2 = ch.eps_prime / 2;

    // Term at the window center, with exact rational exponent pieces.
    Rat B0 = Rat(n0) + h0;
    BigComplex t_up = exp_term(B0 * B0 / 2, B0, B0 * e2, vv, tt, two_pi);
    BigComplex t_dn = t_up;
    BigComplex sum = t_up;

    // Ratios t_{n+1}/t_n = exp(2 pi i [(n + h0 + 1/2) tau + v + e2]) and
    // t_{n-1}/t_n = exp(-2 pi i [(n + h0 - 1/2) tau + v + e2]) both advance by
    // w = exp(2 pi i tau) per step.
    BigComplex w = exp_term(1, 0, 0, vv, tt, two_pi);
    BigComplex r_up = exp_term(B0 + Rat(1, 2), 1, e2, vv, tt, two_pi);
    BigComplex r_dn = exp_term(-(B0 - Rat(1, 2)), -1, -e2, vv, tt, two_pi);

    for (long k = 1; k <= N; ++k) {
        t_up *= r_up;
        t_dn *= r_dn;
        sum += t_up;
        sum += t_dn;
        r_up *= w;
        r_dn *= w;
    }
    return sum;
}

BigComplex theta_deriv(const ThetaChar& ch, const BigComplex& tau, Prec prec) {
    require_upper_half(tau);
    const Prec wp = prec + 48;
    const BigComplex tt(BigFloat(tau.re, wp), BigFloat(tau.im, wp));
    const BigComplex zero(0, 0, wp);
    BigFloat two_pi = BigFloat::pi(wp);
    two_pi += two_pi;

    const auto [n0, N] = series_window(ch, zero, tt, prec);
    const Rat h0 = ch.eps / 2;
    const Rat e2 = ch.eps_prime / 2;
    Rat B0 = Rat(n0) + h0;

    BigComplex t_up = exp_term(B0 * B0 / 2, B0, B0 * e2, zero, tt, two_pi);
    BigComplex t_dn = t_up;
    BigFloat b_up(B0, wp), b_dn(B0, wp), one(1, wp);
    BigComplex sum = b_up * t_up;

    BigComplex w = exp_term(1, 0, 0, zero, tt, two_pi);
    BigComplex r_up = exp_term(B0 + Rat(1, 2), 1, e2, zero, tt, two_pi);
    BigComplex r_dn = exp_term(-(B0 - Rat(1, 2)), -1, -e2, zero, tt, two_pi);

    for (long k = 1; k <= N; ++k) {
        t_up *= r_up;
        t_dn *= r_dn;
        b_up += one;
        b_dn -= one;
        sum += b_up * t_up;
        sum += b_dn * t_dn;
        r_up *= w;
        r_dn *= w;
    }
    // d/dv contributes 2 pi i (n + eps/2) per term
    return BigComplex(-(two_pi * sum.im), two_pi * sum.re);
}

BigComplex theta_product(const ThetaChar& ch, const BigComplex& v, const BigComplex& tau, Prec prec) {
    require_upper_half(tau);
    const Prec wp = prec + 48;
    const BigComplex vv(BigFloat(v.re, wp), BigFloat(v.im, wp));
    const BigComplex tt(BigFloat(tau.re, wp), BigFloat(tau.im, wp));
    BigFloat two_pi = BigFloat::pi(wp);
    two_pi += two_pi;

    const Rat& eps = ch.eps;
    const Rat& epsp = ch.eps_prime;

    double y = tt.im.to_double();
    double ve = std::abs(vv.im.to_double());
    double ea = std::abs(eps.get_d());
    double target = (static_cast<double>(prec) + 28) * std::log(2.0);
    long N = static_cast<long>(std::ceil(target / (2.0 * kPi * y) + ea / 2 + ve / y)) + 4;

    // x^r := exp(i pi r tau), z^s := exp(2 pi i s v); all powers are defined
    // through these so the product matches the series branch for branch.
    auto xpow = [&](const Rat& r) { return exp_term(r / 2, 0, 0, vv, tt, two_pi); };
    auto zpow = [&](const Rat& s) { return exp_term(0, s, 0, vv, tt, two_pi); };

    BigComplex res = exp_i_pi(eps * epsp / 2, wp) * xpow(eps * eps / 4) * zpow(eps / 2);
    BigComplex ep = exp_i_pi(epsp, wp);
    BigComplex em = exp_i_pi(-epsp, wp);
    BigComplex z = zpow(1);
    BigComplex z_inv = zpow(-1);

    BigComplex x2 = xpow(2);
    BigComplex x_even = x2;                  // x^{2n}
    BigComplex x_plus = xpow(Rat(1) + eps);  // x^{2n-1+eps}
    BigComplex x_minus = xpow(Rat(1) - eps); // x^{2n-1-eps}
    const BigComplex one(1, 0, wp);
    for (long n = 1; n <= N; ++n) {
        res *= (one - x_even);
        res *= (one + ep * x_plus * z);
        res *= (one + em * x_minus * z_inv);
        x_even *= x2;
        x_plus *= x2;
        x_minus *= x2;
    }
    return res;
}

BigComplex ExpMultiplier::eval(const BigComplex& v, const BigComplex& tau, Prec prec) const {
    const Prec wp = prec + 32;
    const BigComplex vv(BigFloat(v.re, wp), BigFloat(v.im, wp));
    const BigComplex tt(BigFloat(tau.re, wp), BigFloat(tau.im, wp));
    BigFloat two_pi = BigFloat::pi(wp);
    two_pi += two_pi;
    return exp_term(tau_coeff, v_coeff, const_part, vv, tt, two_pi);
}

BigComplex LatticePoint::eval(const BigComplex& tau, Prec prec) const {
    BigFloat x(tau.re, prec), y(tau.im, prec);
    x.mul_q(tau_coeff);
    y.mul_q(tau_coeff);
    return {x + BigFloat(Rat(const_part), prec), std::move(y)};
}

ExpMultiplier shift_integer(const ThetaChar& ch, const Int& m, const Int& n) {
    ExpMultiplier out;
    out.const_part = (Rat(n) * ch.eps - Rat(m) * ch.eps_prime) / 2;
    out.const_part.canonicalize();
    out.v_coeff = -Rat(m);
    out.tau_coeff = -Rat(m * m) / 2;
    out.tau_coeff.canonicalize();
    return out;
}

PhasedChar reduce_char(const ThetaChar& ch) {
    Rat eps = reduce_mod2(ch.eps);
    Rat epsp = reduce_mod2(ch.eps_prime);
    Rat n2 = (ch.eps_prime - epsp) / 2;  // integer shift on eps'
    n2.canonicalize();
    return {ThetaChar(eps, epsp), RootOfUnity(eps * n2)};
}

ThetaChar negate_char(const ThetaChar& ch) { return {-ch.eps, -ch.eps_prime}; }

HalfShiftRule half_shift(const ThetaChar& ch, const Rat& m, const Rat& n) {
    HalfShiftRule rule;
    rule.target = ThetaChar(ch.eps + m, ch.eps_prime + n);
    rule.multiplier.const_part = -m * (ch.eps_prime + n) / 4;
    rule.multiplier.const_part.canonicalize();
    rule.multiplier.v_coeff = -m / 2;
    rule.multiplier.v_coeff.canonicalize();
    rule.multiplier.tau_coeff = -m * m / 8;
    rule.multiplier.tau_coeff.canonicalize();
    return rule;
}

LatticePoint zero_location(const ThetaChar& ch) {
    LatticePoint p;
    p.tau_coeff = (1 - ch.eps) / 2;
    p.tau_coeff.canonicalize();
    p.const_part = (1 - ch.eps_prime) / 2;
    p.const_part.canonicalize();
    return p;
}

}  // namespace theta5

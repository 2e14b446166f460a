#include "theta5/transform.hpp"

#include "theta5/eta.hpp"

namespace theta5 {

TransformData transform_11(const SL2Matrix& m) {
    TransformData out;
    out.new_char = ThetaChar(Rat(1), Rat(1));
    out.eta_cube = nu_eta(m).pow(3);
    out.extra_phase = RootOfUnity::one();
    out.weight = Rat(1, 2);
    out.gaussian_c = m.c;
    return out;
}

TransformData transform_general(const SL2Matrix& m, const ThetaChar& ch) {
    const Rat a(m.a), b(m.b), c(m.c), d(m.d);
    const Rat& eps = ch.eps;
    const Rat& epsp = ch.eps_prime;

    TransformData out;
    out.new_char = ThetaChar(a * eps + c * epsp - a * c, b * eps + d * epsp - b * d);
    out.eta_cube = nu_eta(m).pow(3);
    out.weight = Rat(1, 2);
    out.gaussian_c = m.c;

    const Rat al = (1 - eps) / 2;   // a-side half-characteristic defect
    const Rat ga = (1 - epsp) / 2;
    Rat E = (a * al + c * ga) * (b + d - b * d) + (b - 1) * (d - 1) / 2 - al
            - b * al * (a * al + c * ga) - c * ga * (b * al + d * ga);
    E.canonicalize();
    out.extra_phase = RootOfUnity(E);
    return out;
}

BigFloat verify_transform(const SL2Matrix& m, const ThetaChar& ch, const BigComplex& v,
                          const BigComplex& tau, Prec prec) {
    if (!(tau.im.sgn() > 0)) throw std::domain_error("tau must lie in the upper half plane");
    const Prec wp = prec + 48;
    const BigComplex vv(BigFloat(v.re, wp), BigFloat(v.im, wp));
    const BigComplex tt(BigFloat(tau.re, wp), BigFloat(tau.im, wp));

    TransformData td = transform_general(m, ch);
    BigComplex cd = m.denom(tt);
    BigComplex lhs = theta_series(ch, vv / cd, m.act(tt), prec);

    BigFloat pi = BigFloat::pi(wp);
    BigComplex gauss_arg = vv * vv / cd;
    gauss_arg.mul_q(Rat(m.c));
    // exp(i pi w) = exp(-pi Im w + i pi Re w)
    BigComplex gauss = exp(BigComplex(-(pi * gauss_arg.im), pi * gauss_arg.re));

    BigComplex rhs = td.eta_cube.to_complex(wp) * sqrt(cd) * gauss *
                     td.extra_phase.to_complex(wp) * theta_series(td.new_char, vv, tt, prec);
    return abs(lhs - rhs) / abs(lhs);
}

}  // namespace theta5

#ifndef THETA5_TRANSFORM_HPP
#define THETA5_TRANSFORM_HPP

#include "theta5/core.hpp"
#include "theta5/numeric.hpp"
#include "theta5/theta.hpp"

namespace theta5 {

// Symbolic data of the transformation law
//   theta[eps;eps'](v/(c tau+d), M tau) =
//     eta_cube * (c tau+d)^{1/2} * exp(i pi c v^2/(c tau+d)) * extra_phase
//       * theta[new_char](v, tau).
// new_char is not reduced; compose with reduce_char explicitly when needed.
struct TransformData {
    ThetaChar new_char;
    RootOfUnity eta_cube;     // nu_eta(M)^3
    RootOfUnity extra_phase;  // exp(i pi E)
    Rat weight;               // exponent on (c tau + d), fixed 1/2
    Int gaussian_c;           // the c in exp(i pi c v^2/(c tau + d))
};

// Transformation of theta[1;1]: new_char = (1,1), extra_phase = 1.
TransformData transform_11(const SL2Matrix& m);

// General characteristic transformation.
TransformData transform_general(const SL2Matrix& m, const ThetaChar& ch);

// Relative residual of the identity above, principal square-root branch.
BigFloat verify_transform(const SL2Matrix& m, const ThetaChar& ch, const BigComplex& v,
                          const BigComplex& tau, Prec prec);

}  // namespace theta5

#endif

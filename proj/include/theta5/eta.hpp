#ifndef THETA5_ETA_HPP
#define THETA5_ETA_HPP

#include "theta5/core.hpp"
#include "theta5/numeric.hpp"

namespace theta5 {

// Knopp's closed-form multiplier system of the Dedekind eta function, as an
// exact root of unity. Total on SL(2,Z); the exponent denominator divides 12.
RootOfUnity nu_eta(const SL2Matrix& m);

// eta(tau) for Im tau > 0. Throws std::domain_error otherwise.
BigComplex eta_numeric(const BigComplex& tau, Prec prec);

// Relative residual of eta(M tau) = nu_eta(M) (c tau + d)^{1/2} eta(tau)
// with the principal square-root branch.
BigFloat verify_eta_transform(const SL2Matrix& m, const BigComplex& tau, Prec prec);

}  // namespace theta5

#endif

#include "theta5/core.hpp"

#include <sstream>

namespace theta5 {

int jacobi_symbol(const Int& a, const Int& n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t()))
        throw std::invalid_argument("jacobi_symbol: lower argument must be odd and positive");
    return mpz_jacobi(a.get_mpz_t(), n.get_mpz_t());
}

int symbol_upper(const Int& c, const Int& d) {
    if (mpz_even_p(d.get_mpz_t())) throw std::invalid_argument("symbol_upper: d must be odd");
    if (gcd(c, d) != 1) throw std::invalid_argument("symbol_upper: arguments must be coprime");
    return jacobi_symbol(c, abs(d));
}

int symbol_lower(const Int& c, const Int& d) {
    if (mpz_even_p(d.get_mpz_t())) throw std::invalid_argument("symbol_lower: d must be odd");
    if (gcd(c, d) != 1) throw std::invalid_argument("symbol_lower: arguments must be coprime");
    int s = jacobi_symbol(c, abs(d));
    if (sign0(c) < 0 && sign0(d) < 0) s = -s;
    return s;
}

Rat reduce_mod2(const Rat& r) {
    // r - 2*floor(r/2)
    Rat half = r / 2;
    Int fl;
    mpz_fdiv_q(fl.get_mpz_t(), half.get_num().get_mpz_t(), half.get_den().get_mpz_t());
    Rat out = r - 2 * Rat(fl);
    out.canonicalize();
    return out;
}

BigComplex SL2Matrix::act(const BigComplex& tau) const {
    Prec p = tau.prec();
    BigComplex num = BigComplex(BigFloat(a, p), BigFloat(0, p)) * tau + BigComplex(BigFloat(b, p), BigFloat(0, p));
    return num / denom(tau);
}

BigComplex SL2Matrix::denom(const BigComplex& tau) const {
    Prec p = tau.prec();
    return BigComplex(BigFloat(c, p), BigFloat(0, p)) * tau + BigComplex(BigFloat(d, p), BigFloat(0, p));
}

std::string SL2Matrix::text() const {
    std::ostringstream os;
    os << a << ' ' << b << ' ' << c << ' ' << d;
    return os.str();
}

SL2Matrix SL2Matrix::from_text(const std::string& s) {
    std::istringstream is(s);
    std::string ta, tb, tc, td, rest;
    if (!(is >> ta >> tb >> tc >> td) || (is >> rest))
        throw std::invalid_argument("matrix text must be four integers: '" + s + "'");
    try {
        return {Int(ta), Int(tb), Int(tc), Int(td)};
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("matrix text must be four integers: '" + s + "'");
    }
}

SL2Matrix sl2_T_pow(long n) { return {1, n, 0, 1}; }

namespace {
Int mod_reduce(const Int& x, const Int& N) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), N.get_mpz_t());
    return r;
}
}  // namespace

ResidueMatrix::ResidueMatrix(Int N, const Int& a_, const Int& b_, const Int& c_, const Int& d_)
    : modulus(std::move(N)),
      a(mod_reduce(a_, modulus)),
      b(mod_reduce(b_, modulus)),
      c(mod_reduce(c_, modulus)),
      d(mod_reduce(d_, modulus)) {
    if (modulus <= 0) throw std::invalid_argument("ResidueMatrix: modulus must be positive");
    if (mod_reduce(a * d - b * c, modulus) != mod_reduce(Int(1), modulus))
        throw std::invalid_argument("ResidueMatrix: determinant is not 1 mod N");
}

ResidueMatrix ResidueMatrix::operator*(const ResidueMatrix& o) const {
    if (modulus != o.modulus) throw std::invalid_argument("ResidueMatrix: modulus mismatch");
    return {modulus, a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

std::string ResidueMatrix::text() const {
    std::ostringstream os;
    os << a << ' ' << b << ' ' << c << ' ' << d << " mod " << modulus;
    return os.str();
}

ResidueMatrix lambda_N(const SL2Matrix& m, const Int& N) {
    if (N <= 0) throw std::invalid_argument("lambda_N: N must be positive");
    return {N, m.a, m.b, m.c, m.d};
}

SL2Matrix lift_residue(const ResidueMatrix& t) {
    const Int& N = t.modulus;
    // Bottom row first: pick lifts of (c, d) that are coprime as integers.
    Int c = t.c, d = t.d;
    if (c == 0 && d == 0) throw std::invalid_argument("lift_residue: bottom row is zero");
    if (c == 0 && d != 1) c = N;  // make c nonzero so a coprime d-lift exists
    if (c != 0) {
        bool found = false;
        for (Int k = 0; k < 4 * N + 4; ++k) {
            if (gcd(c, d + k * N) == 1) {
                d += k * N;
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("lift_residue: no coprime lift found");
    }
    // Solve a d - b c = 1 with (a, b) = (a0 + alpha N, b0 + beta N).
    Int g, u, w;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), w.get_mpz_t(), d.get_mpz_t(), c.get_mpz_t());
    // u d + w c = 1  ->  a0 = u, b0 = -w
    Int a0 = u, b0 = -w;
    // shift by multiples of (c, d) to match the target top row mod N
    // a = a0 + s c, b = b0 + s d; then det stays 1 for integer s.
    bool matched = false;
    Int s;
    for (Int k = 0; k < N; ++k) {
        if (mod_reduce(a0 + k * c - t.a, N) == 0 && mod_reduce(b0 + k * d - t.b, N) == 0) {
            s = k;
            matched = true;
            break;
        }
    }
    if (!matched) throw std::runtime_error("lift_residue: target row not reachable (det mismatch?)");
    return {a0 + s * c, b0 + s * d, c, d};
}

Rat parse_rational(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: '" + s + "'");
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    r.canonicalize();
    return r;
}

}  // namespace theta5

#ifndef THETA5_NUMERIC_HPP
#define THETA5_NUMERIC_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace theta5 {

using Prec = mpfr_prec_t;

inline constexpr Prec kDefaultPrec = 128;
inline constexpr Prec kMinPrec = 64;

// Arbitrary-precision real. Value semantics over mpfr_t; the precision of a
// binary operation's result is the larger of the operand precisions.
// Rounding is always to nearest.
class BigFloat {
public:
    explicit BigFloat(Prec prec = kDefaultPrec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_zero(v_, 1);
    }
    BigFloat(long x, Prec prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_si(v_, x, MPFR_RNDN);
    }
    BigFloat(const mpz_class& x, Prec prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
    }
    BigFloat(const mpq_class& x, Prec prec) {
        mpfr_init2(v_, clamp(prec));
        mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    // Copy widened to at least the given precision.
    BigFloat(const BigFloat& o, Prec prec) {
        Prec p = clamp(prec);
        mpfr_init2(v_, p > o.prec() ? p : o.prec());
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept {
        mpfr_init2(v_, kMinPrec);
        mpfr_swap(v_, o.v_);
    }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat from_decimal(const std::string& s, Prec prec);

    Prec prec() const { return mpfr_get_prec(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    bool is_negative() const { return mpfr_sgn(v_) < 0; }
    int sgn() const { return mpfr_sgn(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Decimal rendering, scientific form; digits == 0 means "all meaningful
    // digits at this precision". Deterministic for fixed precision.
    std::string str(int digits = 0) const;

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    friend BigFloat operator+(const BigFloat& x, const BigFloat& y) {
        BigFloat r(maxp(x, y));
        mpfr_add(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& x, const BigFloat& y) {
        BigFloat r(maxp(x, y));
        mpfr_sub(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator*(const BigFloat& x, const BigFloat& y) {
        BigFloat r(maxp(x, y));
        mpfr_mul(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator/(const BigFloat& x, const BigFloat& y) {
        BigFloat r(maxp(x, y));
        mpfr_div(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator-(const BigFloat& x) {
        BigFloat r(x.prec());
        mpfr_neg(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    BigFloat& operator+=(const BigFloat& y) {
        mpfr_add(v_, v_, y.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator-=(const BigFloat& y) {
        mpfr_sub(v_, v_, y.v_, MPFR_RNDN);
        return *this;
    }
    BigFloat& operator*=(const BigFloat& y) {
        mpfr_mul(v_, v_, y.v_, MPFR_RNDN);
        return *this;
    }

    friend bool operator<(const BigFloat& x, const BigFloat& y) { return mpfr_less_p(x.v_, y.v_) != 0; }
    friend bool operator>(const BigFloat& x, const BigFloat& y) { return mpfr_greater_p(x.v_, y.v_) != 0; }
    friend bool operator<=(const BigFloat& x, const BigFloat& y) { return mpfr_lessequal_p(x.v_, y.v_) != 0; }
    friend bool operator>=(const BigFloat& x, const BigFloat& y) { return mpfr_greaterequal_p(x.v_, y.v_) != 0; }
    friend bool operator==(const BigFloat& x, const BigFloat& y) { return mpfr_equal_p(x.v_, y.v_) != 0; }

    friend BigFloat abs(const BigFloat& x) {
        BigFloat r(x.prec());
        mpfr_abs(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat sqrt(const BigFloat& x) {
        BigFloat r(x.prec());
        mpfr_sqrt(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat exp(const BigFloat& x) {
        BigFloat r(x.prec());
        mpfr_exp(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat log(const BigFloat& x) {
        BigFloat r(x.prec());
        mpfr_log(r.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat hypot(const BigFloat& x, const BigFloat& y) {
        BigFloat r(maxp(x, y));
        mpfr_hypot(r.v_, x.v_, y.v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat atan2(const BigFloat& y, const BigFloat& x) {
        BigFloat r(maxp(x, y));
        mpfr_atan2(r.v_, y.v_, x.v_, MPFR_RNDN);
        return r;
    }
    friend std::pair<BigFloat, BigFloat> sin_cos(const BigFloat& x) {
        BigFloat s(x.prec()), c(x.prec());
        mpfr_sin_cos(s.v_, c.v_, x.v_, MPFR_RNDN);
        return {std::move(s), std::move(c)};
    }

    static BigFloat pi(Prec prec) {
        BigFloat r(prec);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    // 2^k at the given precision (exact).
    static BigFloat pow2(long k, Prec prec) {
        BigFloat r(prec);
        mpfr_set_si_2exp(r.v_, 1, k, MPFR_RNDN);
        return r;
    }

    BigFloat& mul_q(const mpq_class& q) {
        mpfr_mul_q(v_, v_, q.get_mpq_t(), MPFR_RNDN);
        return *this;
    }

private:
    static Prec clamp(Prec p) { return p < kMinPrec ? kMinPrec : p; }
    static Prec maxp(const BigFloat& x, const BigFloat& y) {
        return x.prec() > y.prec() ? x.prec() : y.prec();
    }
    mpfr_t v_;
};

// Complex value over BigFloat. Square root uses the principal branch
// (argument in (-pi, pi]).
struct BigComplex {
    BigFloat re, im;

    explicit BigComplex(Prec prec = kDefaultPrec) : re(prec), im(prec) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}
    BigComplex(long r, long i, Prec prec) : re(r, prec), im(i, prec) {}

    Prec prec() const { return re.prec() > im.prec() ? re.prec() : im.prec(); }

    friend BigComplex operator+(const BigComplex& x, const BigComplex& y) {
        return {x.re + y.re, x.im + y.im};
    }
    friend BigComplex operator-(const BigComplex& x, const BigComplex& y) {
        return {x.re - y.re, x.im - y.im};
    }
    friend BigComplex operator-(const BigComplex& x) { return {-x.re, -x.im}; }
    friend BigComplex operator*(const BigComplex& x, const BigComplex& y) {
        return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    friend BigComplex operator*(const BigFloat& s, const BigComplex& y) {
        return {s * y.re, s * y.im};
    }
    friend BigComplex operator/(const BigComplex& x, const BigComplex& y) {
        BigFloat n = y.re * y.re + y.im * y.im;
        return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
    }
    BigComplex& operator+=(const BigComplex& y) {
        re += y.re;
        im += y.im;
        return *this;
    }
    BigComplex& operator*=(const BigComplex& y) {
        BigFloat r = re * y.re - im * y.im;
        im = re * y.im + im * y.re;
        re = std::move(r);
        return *this;
    }

    friend BigFloat abs(const BigComplex& x) { return hypot(x.re, x.im); }
    friend BigComplex conj(const BigComplex& x) { return {x.re, -x.im}; }

    // exp(x) = e^re (cos im + i sin im)
    friend BigComplex exp(const BigComplex& x) {
        BigFloat m = exp(x.re);
        auto [s, c] = sin_cos(x.im);
        return {m * c, m * s};
    }

    // Principal square root, argument in (-pi, pi].
    friend BigComplex sqrt(const BigComplex& x);

    BigComplex& mul_q(const mpq_class& q) {
        re.mul_q(q);
        im.mul_q(q);
        return *this;
    }

    std::string str(int digits = 0) const;  // "x+yi"
};

// e^{i pi r} at the given precision (r an exact rational).
BigComplex exp_i_pi(const mpq_class& r, Prec prec);
// e^{2 pi i r}
BigComplex exp_2pi_i(const mpq_class& r, Prec prec);

// Parse "x+yi" / "x-yi" / "x" / "yi" decimal complex strings.
BigComplex parse_complex(const std::string& s, Prec prec);

}  // namespace theta5

#endif

#include "theta5/numeric.hpp"

#include <cctype>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace theta5 {

BigFloat BigFloat::from_decimal(const std::string& s, Prec prec) {
    BigFloat r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("not a decimal number: '" + s + "'");
    return r;
}

std::string BigFloat::str(int digits) const {
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return mpfr_sgn(v_) < 0 ? "-inf" : "inf";
    if (digits <= 0) digits = static_cast<int>(mpfr_get_prec(v_) * 0.30103) + 2;
    char fmt[32];
    std::snprintf(fmt, sizeof fmt, "%%.%dRe", digits - 1);
    int n = mpfr_snprintf(nullptr, 0, fmt, v_);
    std::vector<char> buf(static_cast<size_t>(n) + 2);
    mpfr_snprintf(buf.data(), buf.size(), fmt, v_);
    return std::string(buf.data());
}

BigComplex sqrt(const BigComplex& x) {
    Prec p = x.prec();
    if (x.im.is_zero()) {
        if (!x.re.is_negative()) return {sqrt(x.re), BigFloat(p)};
        // negative real axis belongs to the upper side of the cut
        return {BigFloat(p), sqrt(-x.re)};
    }
    // sqrt(w) = sqrt(r) e^{i arg/2}, computed component-wise for stability
    BigFloat r = abs(x);
    BigFloat half(mpq_class(1, 2), p);
    if (!x.re.is_negative()) {
        BigFloat u = sqrt((r + x.re) * half);
        BigFloat v = x.im / (u + u);
        return {std::move(u), std::move(v)};
    }
    BigFloat t = sqrt((r - x.re) * half);
    if (x.im.is_negative()) t = -t;
    BigFloat u = x.im / (t + t);
    return {std::move(u), std::move(t)};
}

std::string BigComplex::str(int digits) const {
    std::string i = im.str(digits);
    if (!i.empty() && i[0] != '-') i = "+" + i;
    return re.str(digits) + i + "i";
}

BigComplex exp_i_pi(const mpq_class& r, Prec prec) {
    BigFloat t = BigFloat::pi(prec + 8);
    t.mul_q(r);
    auto [s, c] = sin_cos(t);
    return {std::move(c), std::move(s)};
}

BigComplex exp_2pi_i(const mpq_class& r, Prec prec) { return exp_i_pi(2 * r, prec); }

BigComplex parse_complex(const std::string& s, Prec prec) {
    // grammar: [real][(+|-)imag i] with at least one part present
    std::string t;
    for (char ch : s)
        if (!std::isspace(static_cast<unsigned char>(ch))) t.push_back(ch);
    if (t.empty()) throw std::invalid_argument("empty complex literal");

    auto is_term_start = [&](size_t i) {
        if (i == 0 || (t[i] != '+' && t[i] != '-')) return false;
        char prev = t[i - 1];
        return prev != 'e' && prev != 'E';  // not an exponent sign
    };
    size_t split = std::string::npos;
    for (size_t i = 1; i < t.size(); ++i)
        if (is_term_start(i)) split = i;

    auto num_or_unit = [&](std::string u) {
        if (u.empty() || u == "+") return std::string("1");
        if (u == "-") return std::string("-1");
        return u;
    };

    std::string re_s = "0", im_s = "0";
    if (t.back() == 'i' || t.back() == 'I') {
        std::string head = t.substr(0, t.size() - 1);
        if (split == std::string::npos) {
            im_s = num_or_unit(head);
        } else {
            re_s = t.substr(0, split);
            im_s = num_or_unit(head.substr(split));
        }
    } else {
        if (split != std::string::npos) throw std::invalid_argument("bad complex literal: '" + s + "'");
        re_s = t;
    }
    return {BigFloat::from_decimal(re_s, prec), BigFloat::from_decimal(im_s, prec)};
}

}  // namespace theta5

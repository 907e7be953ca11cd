#pragma once

// Thin RAII wrapper around MPFR reals plus a complex pair type.  Result
// precision of a binary operation is the larger operand precision, so only
// leaf values need an explicit precision.

#include <mpfr.h>

#include <string>

#include "hypermod/dd.hpp"
#include "hypermod/util.hpp"

namespace hm {

class Real {
  public:
    explicit Real(mpfr_prec_t prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 2); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    static Real of(double x, mpfr_prec_t prec) { Real r(prec); mpfr_set_d(r.v_, x, MPFR_RNDN); return r; }
    static Real of(long x, mpfr_prec_t prec) { Real r(prec); mpfr_set_si(r.v_, x, MPFR_RNDN); return r; }
    static Real of(const Rat& x, mpfr_prec_t prec) { Real r(prec); mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN); return r; }
    static Real of(const Int& x, mpfr_prec_t prec) { Real r(prec); mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN); return r; }
    static Real pi(mpfr_prec_t prec) { Real r(prec); mpfr_const_pi(r.v_, MPFR_RNDN); return r; }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    DD to_dd() const {
        double h = mpfr_get_d(v_, MPFR_RNDN);
        Real t(*this);
        mpfr_sub_d(t.v_, t.v_, h, MPFR_RNDN);
        return DD(h, mpfr_get_d(t.v_, MPFR_RNDN));
    }
    std::string str(int digits = 20) const;

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_); }

  private:
    mpfr_t v_;
};

inline mpfr_prec_t join_prec(const Real& a, const Real& b) {
    return std::max(mpfr_get_prec(a.raw()), mpfr_get_prec(b.raw()));
}

#define HM_REAL_BINOP(op, fn)                                             \
    inline Real operator op(const Real& a, const Real& b) {               \
        Real r(join_prec(a, b));                                          \
        fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);                         \
        return r;                                                         \
    }
HM_REAL_BINOP(+, mpfr_add)
HM_REAL_BINOP(-, mpfr_sub)
HM_REAL_BINOP(*, mpfr_mul)
HM_REAL_BINOP(/, mpfr_div)
#undef HM_REAL_BINOP

inline Real operator-(const Real& a) { Real r(a); mpfr_neg(r.raw(), r.raw(), MPFR_RNDN); return r; }
inline Real operator*(const Real& a, long b) { Real r(a.prec()); mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator*(long b, const Real& a) { return a * b; }
inline Real operator/(const Real& a, long b) { Real r(a.prec()); mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator+(const Real& a, long b) { Real r(a.prec()); mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real operator-(const Real& a, long b) { Real r(a.prec()); mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN); return r; }
inline Real& operator+=(Real& a, const Real& b) { a = a + b; return a; }
inline Real& operator-=(Real& a, const Real& b) { a = a - b; return a; }
inline Real& operator*=(Real& a, const Real& b) { a = a * b; return a; }

inline bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()) < 0; }
inline bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.raw(), b.raw()) > 0; }
inline bool operator<(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) < 0; }
inline bool operator>(const Real& a, double b) { return mpfr_cmp_d(a.raw(), b) > 0; }

#define HM_REAL_FUN(name, fn)                                      \
    inline Real name(const Real& a) {                              \
        Real r(a.prec());                                          \
        fn(r.raw(), a.raw(), MPFR_RNDN);                           \
        return r;                                                  \
    }
HM_REAL_FUN(sqrt, mpfr_sqrt)
HM_REAL_FUN(exp, mpfr_exp)
HM_REAL_FUN(log, mpfr_log)
HM_REAL_FUN(sin, mpfr_sin)
HM_REAL_FUN(cos, mpfr_cos)
HM_REAL_FUN(sinh, mpfr_sinh)
HM_REAL_FUN(cosh, mpfr_cosh)
HM_REAL_FUN(tanh, mpfr_tanh)
HM_REAL_FUN(abs, mpfr_abs)
HM_REAL_FUN(gamma, mpfr_gamma)
HM_REAL_FUN(digamma, mpfr_digamma)
#undef HM_REAL_FUN

inline Real pow(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_pow(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
inline Real atan2(const Real& y, const Real& x) {
    Real r(join_prec(y, x));
    mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
    return r;
}

// Complex value as a pair of Reals.
struct Cplx {
    Real re, im;
    explicit Cplx(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
    Cplx(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    static Cplx of(double r, double i, mpfr_prec_t prec) { return {Real::of(r, prec), Real::of(i, prec)}; }
    double re_d() const { return re.to_double(); }
    double im_d() const { return im.to_double(); }
    DDC to_ddc() const { return {re.to_dd(), im.to_dd()}; }
};

inline Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
inline Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
inline Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
inline Cplx operator*(const Cplx& a, const Cplx& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline Cplx operator*(const Cplx& a, const Real& s) { return {a.re * s, a.im * s}; }
inline Cplx operator*(const Real& s, const Cplx& a) { return a * s; }
inline Cplx conj(const Cplx& a) { return {a.re, -a.im}; }
inline Real norm2(const Cplx& a) { return a.re * a.re + a.im * a.im; }
inline Real abs(const Cplx& a) { return sqrt(norm2(a)); }
inline Cplx operator/(const Cplx& a, const Cplx& b) {
    Real n = norm2(b);
    Cplx p = a * conj(b);
    return {p.re / n, p.im / n};
}
inline Cplx operator/(const Cplx& a, const Real& s) { return {a.re / s, a.im / s}; }
inline Cplx& operator+=(Cplx& a, const Cplx& b) { a = a + b; return a; }
inline Cplx& operator*=(Cplx& a, const Cplx& b) { a = a * b; return a; }

inline Cplx exp(const Cplx& z) {
    Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}
// Principal branch square root.
inline Cplx sqrt(const Cplx& z) {
    Real r = abs(z);
    mpfr_prec_t p = z.re.prec();
    Real half = Real::of(Rat(1, 2), p);
    Real u = sqrt((r + z.re) * half);
    Real v = sqrt((r - z.re) * half);
    if (z.im.sign() < 0) v = -v;
    if (u.is_zero() && v.is_zero()) return Cplx(p);
    return {u, v};
}
inline Cplx pow_int(Cplx z, long e) {
    mpfr_prec_t p = z.re.prec();
    Cplx r = Cplx::of(1.0, 0.0, p);
    bool invert = e < 0;
    if (invert) e = -e;
    while (e > 0) {
        if (e & 1) r = r * z;
        z = z * z;
        e >>= 1;
    }
    if (invert) r = Cplx::of(1.0, 0.0, p) / r;
    return r;
}

}  // namespace hm

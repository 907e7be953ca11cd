#pragma once

// Exact arithmetic in Z[zeta], zeta = exp(i*pi/6) a primitive 12th root of
// unity with minimal polynomial x^4 - x^2 + 1.  Elements are stored on the
// power basis {1, zeta, zeta^2, zeta^3}; the {1, sqrt(-1), sqrt(3), sqrt(-3)}
// basis (half-integer coordinates) is a change-of-basis view used for rounding
// numerically computed values and for display.

#include <array>
#include <iosfwd>
#include <string>

#include "hypermod/dd.hpp"
#include "hypermod/mpreal.hpp"
#include "hypermod/util.hpp"

namespace hm {

struct CycElem {
    std::array<Rat, 4> c{Rat(0), Rat(0), Rat(0), Rat(0)};

    CycElem() = default;
    explicit CycElem(Rat c0) { c[0] = std::move(c0); }
    CycElem(Rat c0, Rat c1, Rat c2, Rat c3) : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static CycElem zero() { return CycElem(); }
    static CycElem one() { return CycElem(Rat(1)); }
    static CycElem integer(long n) { return CycElem(Rat(n)); }
    // zeta^t for any integer t
    static CycElem zeta_pow(long t);
    // zeta_M^t for M | 12
    static CycElem from_root(long M, long t);

    bool is_zero() const;
    bool is_integral() const;          // all power-basis coords in Z
    bool is_rational() const;          // c1 = c2 = c3 = 0
    bool is_rational_integer() const;
    Rat rational_part() const { return c[0]; }

    // value = a1 + a2*sqrt(-1) + a3*sqrt(3) + a4*sqrt(-3)
    std::array<Rat, 4> radical_coords() const;
    static CycElem from_radical_coords(const std::array<Rat, 4>& a);

    DDC embed_dd() const;
    Cplx embed(mpfr_prec_t prec) const;

    std::string str() const;
};

CycElem operator+(const CycElem& a, const CycElem& b);
CycElem operator-(const CycElem& a, const CycElem& b);
CycElem operator-(const CycElem& a);
CycElem operator*(const CycElem& a, const CycElem& b);
CycElem operator*(const CycElem& a, const Rat& s);
inline CycElem operator*(const Rat& s, const CycElem& a) { return a * s; }
bool operator==(const CycElem& a, const CycElem& b);
inline bool operator!=(const CycElem& a, const CycElem& b) { return !(a == b); }
std::ostream& operator<<(std::ostream& os, const CycElem& a);

inline CycElem& operator+=(CycElem& a, const CycElem& b) { a = a + b; return a; }
inline CycElem& operator*=(CycElem& a, const CycElem& b) { a = a * b; return a; }

// Applies zeta -> zeta^j; j must be coprime to 12.
CycElem cyc_galois(const CycElem& a, long j);
inline CycElem cyc_conj(const CycElem& a) { return cyc_galois(a, 11); }

struct CycRound {
    CycElem value;
    double residual;
};

// Rounds z to the nearest element whose radical-basis coordinates lie in
// (1/denominator_bound)*Z, searching |a_j| <= coeff_bound (0 = derive a small
// bound from |z|; callers with an a-priori bound, e.g. the Weil bound for H_p,
// must pass it).  The caller decides acceptance from the residual.
CycRound cyc_round(const DDC& z, int denominator_bound, long coeff_bound = 0);
CycRound cyc_round(const Cplx& z, int denominator_bound, long coeff_bound = 0);

}  // namespace hm

#pragma once

// Double-double arithmetic (~31 significant digits).  Only the operations the
// Gauss-sum kernels need: add, sub, mul, div and a Newton sqrt for constants.

#include <cmath>
#include <cstdlib>

namespace hm {

struct DD {
    double hi = 0.0, lo = 0.0;
    DD() = default;
    DD(double h) : hi(h), lo(0.0) {}
    DD(double h, double l) : hi(h), lo(l) {}
    double to_double() const { return hi + lo; }
};

namespace dd_detail {
inline DD two_sum(double a, double b) {
    double s = a + b;
    double bb = s - a;
    double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}
inline DD quick_two_sum(double a, double b) {
    double s = a + b;
    return {s, b - (s - a)};
}
inline DD two_prod(double a, double b) {
    double p = a * b;
    return {p, std::fma(a, b, -p)};
}
}  // namespace dd_detail

inline DD operator+(const DD& a, const DD& b) {
    using namespace dd_detail;
    DD s = two_sum(a.hi, b.hi);
    DD t = two_sum(a.lo, b.lo);
    s.lo += t.hi;
    s = quick_two_sum(s.hi, s.lo);
    s.lo += t.lo;
    return quick_two_sum(s.hi, s.lo);
}
inline DD operator-(const DD& a) { return {-a.hi, -a.lo}; }
inline DD operator-(const DD& a, const DD& b) { return a + (-b); }
inline DD operator*(const DD& a, const DD& b) {
    using namespace dd_detail;
    DD p = two_prod(a.hi, b.hi);
    p.lo += a.hi * b.lo + a.lo * b.hi;
    return quick_two_sum(p.hi, p.lo);
}
inline DD operator*(const DD& a, double b) {
    using namespace dd_detail;
    DD p = two_prod(a.hi, b);
    p.lo += a.lo * b;
    return quick_two_sum(p.hi, p.lo);
}
inline DD operator/(const DD& a, const DD& b) {
    double q1 = a.hi / b.hi;
    DD r = a - b * q1;
    double q2 = r.hi / b.hi;
    r = r - b * q2;
    double q3 = r.hi / b.hi;
    DD q = dd_detail::quick_two_sum(q1, q2);
    return q + DD(q3);
}
inline DD& operator+=(DD& a, const DD& b) { a = a + b; return a; }
inline DD& operator-=(DD& a, const DD& b) { a = a - b; return a; }
inline DD& operator*=(DD& a, const DD& b) { a = a * b; return a; }

inline bool operator<(const DD& a, const DD& b) { return a.hi < b.hi || (a.hi == b.hi && a.lo < b.lo); }
inline bool operator>(const DD& a, const DD& b) { return b < a; }

inline DD dd_abs(const DD& a) { return a.hi < 0 || (a.hi == 0 && a.lo < 0) ? -a : a; }

inline DD dd_sqrt(const DD& a) {
    if (a.hi == 0.0) return {0.0, 0.0};
    double x0 = std::sqrt(a.hi);
    DD x(x0);
    // one Newton step doubles the correct digits; two are ample from a double seed
    for (int i = 0; i < 2; ++i) x = x + (a - x * x) / (x + x);
    return x;
}

struct DDC {
    DD re, im;
    DDC() = default;
    DDC(DD r, DD i) : re(r), im(i) {}
    DDC(double r, double i = 0.0) : re(r), im(i) {}
};

inline DDC operator+(const DDC& a, const DDC& b) { return {a.re + b.re, a.im + b.im}; }
inline DDC operator-(const DDC& a, const DDC& b) { return {a.re - b.re, a.im - b.im}; }
inline DDC operator-(const DDC& a) { return {-a.re, -a.im}; }
inline DDC operator*(const DDC& a, const DDC& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
inline DDC operator*(const DDC& a, const DD& s) { return {a.re * s, a.im * s}; }
inline DDC conj(const DDC& a) { return {a.re, -a.im}; }
inline DD norm2(const DDC& a) { return a.re * a.re + a.im * a.im; }
inline DDC operator/(const DDC& a, const DDC& b) {
    DD n = norm2(b);
    DDC p = a * conj(b);
    return {p.re / n, p.im / n};
}
inline DDC& operator+=(DDC& a, const DDC& b) { a = a + b; return a; }
inline DDC& operator-=(DDC& a, const DDC& b) { a = a - b; return a; }
inline DDC& operator*=(DDC& a, const DDC& b) { a = a * b; return a; }

}  // namespace hm

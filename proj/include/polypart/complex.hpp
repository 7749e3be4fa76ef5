// complex.hpp
//
// Minimal arbitrary-precision complex type.  std::complex is not usable with
// multiprecision backends, and we need one fixed branch convention
// everywhere:  -pi < arg(z) <= pi, negative reals landing on +pi.  Every
// complex power in the library routes through clog/cpow below.

#pragma once

#include "precision.hpp"

namespace polypart {

template <class Real>
struct Complex {
    Real re{};
    Real im{};

    Complex() = default;
    Complex(Real r) : re(std::move(r)) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r) {}
    Complex(long r) : re(r) {}

    bool is_real() const { return im.is_zero(); }

    Complex& operator+=(const Complex& o) { re += o.re; im += o.im; return *this; }
    Complex& operator-=(const Complex& o) { re -= o.re; im -= o.im; return *this; }
    Complex& operator*=(const Complex& o) {
        Real r = re * o.re - im * o.im;
        im = re * o.im + im * o.re;
        re = std::move(r);
        return *this;
    }
    Complex& operator/=(const Complex& o) {
        Real d = o.re * o.re + o.im * o.im;
        Real r = (re * o.re + im * o.im) / d;
        im = (im * o.re - re * o.im) / d;
        re = std::move(r);
        return *this;
    }
};

template <class Real> Complex<Real> operator+(Complex<Real> a, const Complex<Real>& b) { return a += b; }
template <class Real> Complex<Real> operator-(Complex<Real> a, const Complex<Real>& b) { return a -= b; }
template <class Real> Complex<Real> operator*(Complex<Real> a, const Complex<Real>& b) { return a *= b; }
template <class Real> Complex<Real> operator/(Complex<Real> a, const Complex<Real>& b) { return a /= b; }
template <class Real> Complex<Real> operator-(const Complex<Real>& a) { return {-a.re, -a.im}; }

template <class Real> Complex<Real> operator+(Complex<Real> a, const Real& b) { a.re += b; return a; }
template <class Real> Complex<Real> operator+(const Real& b, Complex<Real> a) { a.re += b; return a; }
template <class Real> Complex<Real> operator-(Complex<Real> a, const Real& b) { a.re -= b; return a; }
template <class Real> Complex<Real> operator-(const Real& b, const Complex<Real>& a) { return {b - a.re, -a.im}; }
template <class Real> Complex<Real> operator*(Complex<Real> a, const Real& b) { a.re *= b; a.im *= b; return a; }
template <class Real> Complex<Real> operator*(const Real& b, Complex<Real> a) { a.re *= b; a.im *= b; return a; }
template <class Real> Complex<Real> operator/(Complex<Real> a, const Real& b) { a.re /= b; a.im /= b; return a; }
template <class Real> Complex<Real> operator/(const Real& b, const Complex<Real>& a) { return Complex<Real>(b) / a; }

template <class Real> bool operator==(const Complex<Real>& a, const Complex<Real>& b) { return a.re == b.re && a.im == b.im; }

template <class Real>
Complex<Real> conj(const Complex<Real>& z) { return {z.re, -z.im}; }

template <class Real>
Real abs2(const Complex<Real>& z) { return z.re * z.re + z.im * z.im; }

template <class Real>
Real cabs(const Complex<Real>& z) {
    if (z.im.is_zero()) return abs(z.re);
    if (z.re.is_zero()) return abs(z.im);
    return sqrt(abs2(z));
}

// Branch convention: -pi < arg <= pi; exactly-real negatives get +pi.
template <class Real>
Real carg(const Complex<Real>& z) {
    if (z.im.is_zero()) return z.re < 0 ? const_pi<Real>() : Real(0);
    return atan2(z.im, z.re);
}

template <class Real>
Complex<Real> cexp(const Complex<Real>& z) {
    Real m = exp(z.re);
    if (z.im.is_zero()) return {m, Real(0)};
    return {m * cos(z.im), m * sin(z.im)};
}

template <class Real>
Complex<Real> clog(const Complex<Real>& z) {
    return {log(cabs(z)), carg(z)};
}

// The one log-power helper: z^w = exp(w log z) with the fixed branch.
template <class Real>
Complex<Real> cpow(const Complex<Real>& z, const Complex<Real>& w) {
    if (z.re.is_zero() && z.im.is_zero()) return Complex<Real>(Real(0));
    // positive real base, real exponent: stay exactly real
    if (z.im.is_zero() && z.re > 0 && w.im.is_zero()) return {pow(z.re, w.re), Real(0)};
    return cexp(w * clog(z));
}

template <class Real>
Complex<Real> cpow(const Complex<Real>& z, const Real& w) {
    return cpow(z, Complex<Real>(w));
}

template <class Real>
Complex<Real> cpow_int(Complex<Real> z, long long n) {
    if (n < 0) return Complex<Real>(Real(1)) / cpow_int(z, -n);
    Complex<Real> r(Real(1));
    while (n) {
        if (n & 1) r *= z;
        z *= z;
        n >>= 1;
    }
    return r;
}

template <class Real>
Complex<Real> csqrt(const Complex<Real>& z) {
    if (z.im.is_zero() && z.re >= 0) return {sqrt(z.re), Real(0)};
    return cpow(z, Real(1) / 2);
}

template <class Real>
Complex<Real> csin(const Complex<Real>& z) {
    if (z.im.is_zero()) return {sin(z.re), Real(0)};
    // sin(x+iy) = sin x cosh y + i cos x sinh y
    return {sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)};
}

template <class Real>
Complex<Real> ccos(const Complex<Real>& z) {
    if (z.im.is_zero()) return {cos(z.re), Real(0)};
    return {cos(z.re) * cosh(z.im), -sin(z.re) * sinh(z.im)};
}

// e(x) := exp(2 pi i x) for real x.
template <class Real>
Complex<Real> unit_e(const Real& x) {
    Real t = 2 * const_pi<Real>() * x;
    return {cos(t), sin(t)};
}

} // namespace polypart

#pragma once

#include <array>
#include <cmath>

#include "riesz/interval.hpp"

namespace riesz {

inline double sqr_value(double x) { return x * x; }
inline Interval sqr_value(const Interval& x) { return sqr(x); }

template <class T, int N>
struct Dual;

template <class T, int N>
Dual<T, N> sqr_value(const Dual<T, N>& x) {
    return sqr(x);
}

// Zero and one in any nesting of the evaluation scalars.
template <class T>
struct dual_scalar {
    static T zero() { return T{0.0}; }
    static T one() { return T{1.0}; }
};

template <class T, int N>
struct dual_scalar<Dual<T, N>> {
    static Dual<T, N> zero() { return Dual<T, N>::constant(dual_scalar<T>::zero()); }
    static Dual<T, N> one() { return Dual<T, N>::constant(dual_scalar<T>::one()); }
};

/// Forward-mode derivative carrier: value plus N partial derivatives, all in
/// the scalar type T (double for sampling, Interval or a nested Dual for
/// enclosures).  Used by the certifier to form centered and second-order
/// Taylor bounds without symbolic derivatives of the expression trees.
template <class T, int N>
struct Dual {
    T v;
    std::array<T, N> d;

    Dual() : v(dual_scalar<T>::zero()) { d.fill(dual_scalar<T>::zero()); }

    static Dual constant(const T& value) {
        Dual r;
        r.v = value;
        return r;
    }

    static Dual variable(const T& value, int i) {
        Dual r = constant(value);
        r.d[i] = dual_scalar<T>::one();
        return r;
    }
};

template <class T, int N>
Dual<T, N> operator-(const Dual<T, N>& a) {
    Dual<T, N> r;
    r.v = -a.v;
    for (int i = 0; i < N; ++i) r.d[i] = -a.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> operator+(const Dual<T, N>& a, const Dual<T, N>& b) {
    Dual<T, N> r;
    r.v = a.v + b.v;
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] + b.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> operator-(const Dual<T, N>& a, const Dual<T, N>& b) {
    Dual<T, N> r;
    r.v = a.v - b.v;
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] - b.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> operator*(const Dual<T, N>& a, const Dual<T, N>& b) {
    Dual<T, N> r;
    r.v = a.v * b.v;
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b.v + a.v * b.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> operator/(const Dual<T, N>& a, const Dual<T, N>& b) {
    Dual<T, N> r;
    r.v = a.v / b.v;
    for (int i = 0; i < N; ++i) r.d[i] = (a.d[i] * b.v - a.v * b.d[i]) / sqr_value(b.v);
    return r;
}

template <class T, int N>
Dual<T, N> operator+(const Dual<T, N>& a, double b) {
    Dual<T, N> r = a;
    r.v = a.v + b;
    return r;
}
template <class T, int N>
Dual<T, N> operator+(double a, const Dual<T, N>& b) {
    return b + a;
}
template <class T, int N>
Dual<T, N> operator-(const Dual<T, N>& a, double b) {
    Dual<T, N> r = a;
    r.v = a.v - b;
    return r;
}
template <class T, int N>
Dual<T, N> operator-(double a, const Dual<T, N>& b) {
    return -(b - a);
}
template <class T, int N>
Dual<T, N> operator*(const Dual<T, N>& a, double b) {
    Dual<T, N> r;
    r.v = a.v * b;
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * b;
    return r;
}
template <class T, int N>
Dual<T, N> operator*(double a, const Dual<T, N>& b) {
    return b * a;
}
template <class T, int N>
Dual<T, N> operator/(const Dual<T, N>& a, double b) {
    return a * (1.0 / b);
}

template <class T, int N>
Dual<T, N> pow(const Dual<T, N>& a, double e) {
    using std::pow;
    Dual<T, N> r;
    r.v = pow(a.v, e);
    const T factor = pow(a.v, e - 1.0) * e;
    for (int i = 0; i < N; ++i) r.d[i] = factor * a.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> sqr(const Dual<T, N>& a) {
    Dual<T, N> r;
    r.v = sqr_value(a.v);
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] * a.v * 2.0;
    return r;
}

template <class T, int N>
Dual<T, N> sin(const Dual<T, N>& a) {
    using std::cos;
    using std::sin;
    Dual<T, N> r;
    r.v = sin(a.v);
    const T c = cos(a.v);
    for (int i = 0; i < N; ++i) r.d[i] = c * a.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> cos(const Dual<T, N>& a) {
    using std::cos;
    using std::sin;
    Dual<T, N> r;
    r.v = cos(a.v);
    const T ms = -sin(a.v);
    for (int i = 0; i < N; ++i) r.d[i] = ms * a.d[i];
    return r;
}

template <class T, int N>
Dual<T, N> log(const Dual<T, N>& a) {
    using std::log;
    Dual<T, N> r;
    r.v = log(a.v);
    for (int i = 0; i < N; ++i) r.d[i] = a.d[i] / a.v;
    return r;
}

}  // namespace riesz

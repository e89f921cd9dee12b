#pragma once

// Second-order Wirtinger jets: value, d/ds, d/dconj(s) and the mixed derivative of a
// real-analytic function of one complex variable. Arithmetic propagates exactly.

#include "hodgepsh/errors.hpp"

#include <Eigen/Core>
#include <cfloat>
#include <complex>

namespace hodgepsh {

template <class T>
struct Jet2 {
    T f{0}, fs{0}, fsb{0}, fssb{0};

    Jet2() = default;
    Jet2(int v) : f(v), fs(0), fsb(0), fssb(0) {}  // NOLINT: Eigen needs Scalar(0), Scalar(1)
    Jet2(T v) : f(std::move(v)), fs(0), fsb(0), fssb(0) {}  // NOLINT
    Jet2(T f_, T fs_, T fsb_, T fssb_) : f(std::move(f_)), fs(std::move(fs_)), fsb(std::move(fsb_)), fssb(std::move(fssb_)) {}

    // Holomorphic g with g(s0) = value, g'(s0) = derivative.
    static Jet2 holomorphic(T value, T derivative) { return {std::move(value), std::move(derivative), T(0), T(0)}; }
    static Jet2 variable(std::complex<double> s) { return {T(s), T(1), T(0), T(0)}; }

    Jet2& operator+=(const Jet2& o) {
        f += o.f;
        fs += o.fs;
        fsb += o.fsb;
        fssb += o.fssb;
        return *this;
    }
    Jet2& operator-=(const Jet2& o) {
        f -= o.f;
        fs -= o.fs;
        fsb -= o.fsb;
        fssb -= o.fssb;
        return *this;
    }
    Jet2 operator-() const { return {-f, -fs, -fsb, -fssb}; }
    friend Jet2 operator+(Jet2 a, const Jet2& b) { return a += b; }
    friend Jet2 operator-(Jet2 a, const Jet2& b) { return a -= b; }
    friend Jet2 operator*(const Jet2& a, const Jet2& b) {
        return {a.f * b.f, a.fs * b.f + a.f * b.fs, a.fsb * b.f + a.f * b.fsb,
                a.fssb * b.f + a.fs * b.fsb + a.fsb * b.fs + a.f * b.fssb};
    }
    Jet2& operator*=(const Jet2& o) { return *this = *this * o; }
    friend Jet2 operator*(const Jet2& a, const std::complex<double>& k) {
        return {a.f * k, a.fs * k, a.fsb * k, a.fssb * k};
    }
    friend Jet2 operator*(const std::complex<double>& k, const Jet2& a) { return a * k; }

};

template <class T>
Jet2<T> conj(const Jet2<T>& a) {
    using std::conj;
    return {conj(a.f), conj(a.fsb), conj(a.fs), conj(a.fssb)};
}
template <class T>
Jet2<T> real_part(const Jet2<T>& a) {
    return (a + conj(a)) * std::complex<double>(0.5);
}

using CJet = Jet2<std::complex<double>>;

// g = phi(f) for holomorphic phi with phi(f), phi'(f), phi''(f) supplied.
inline CJet compose(const CJet& a, std::complex<double> p0, std::complex<double> p1, std::complex<double> p2) {
    return {p0, p1 * a.fs, p1 * a.fsb, p2 * a.fs * a.fsb + p1 * a.fssb};
}

inline void require_nonsingular(const CJet& a, const char* where) {
    const double m = std::abs(a.f);
    if (!(m >= DBL_MIN)) throw SingularEvaluation(m, where);
}

inline CJet recip(const CJet& a) {
    require_nonsingular(a, "reciprocal");
    const auto inv = 1.0 / a.f;
    return compose(a, inv, -inv * inv, 2.0 * inv * inv * inv);
}
inline CJet operator/(const CJet& a, const CJet& b) { return a * recip(b); }

// Principal branch.
inline CJet log(const CJet& a) {
    require_nonsingular(a, "log");
    const auto inv = 1.0 / a.f;
    return compose(a, std::log(a.f), inv, -inv * inv);
}

inline CJet exp(const CJet& a) {
    const auto e = std::exp(a.f);
    return compose(a, e, e, e);
}

inline std::complex<double> real_part(std::complex<double> z) { return z.real(); }

}  // namespace hodgepsh

namespace Eigen {
template <class T>
struct NumTraits<hodgepsh::Jet2<T>> : GenericNumTraits<hodgepsh::Jet2<T>> {
    using Real = hodgepsh::Jet2<T>;
    using NonInteger = hodgepsh::Jet2<T>;
    using Literal = hodgepsh::Jet2<T>;
    using Nested = hodgepsh::Jet2<T>;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 4,
        AddCost = 8,
        MulCost = 32
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

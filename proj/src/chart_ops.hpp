#pragma once

// Scalar-generic linear algebra on the model space for the analytic paths. T ranges over
// complex doubles, Wirtinger jets and log-polynomials; only ring operations, products with
// complex constants and conj() are required.

#include "hodgepsh/period_chart.hpp"

#include <Eigen/Core>

namespace hodgepsh::detail {

template <class T>
using VecT = Eigen::Matrix<T, Eigen::Dynamic, 1>;

template <class T>
VecT<T> zeros(int n) {
    VecT<T> v(n);
    for (int i = 0; i < n; ++i) v(i) = T(0);
    return v;
}

template <class T>
T qform(const ChartModel& m, const VecT<T>& x, const VecT<T>& y) {
    T acc(0);
    for (const auto& [i, j, q] : m.Q) acc += x(i) * y(j) * cd(q);
    return acc;
}

// conj(x) = C * conj(coefficients)
template <class T>
VecT<T> conj_vec(const ChartModel& m, const VecT<T>& x) {
    using std::conj;
    VecT<T> out(m.dimV);
    for (int j = 0; j < m.dimV; ++j) {
        const auto& [target, sign] = m.conjMap[static_cast<size_t>(j)];
        out(target) = conj(x(j)) * cd(sign);
    }
    return out;
}

template <class T>
VecT<T> apply_N(const ChartModel& m, const VecT<T>& x) {
    VecT<T> out = zeros<T>(m.dimV);
    for (const auto& [i, j, c] : m.N) out(i) += x(j) * c;
    return out;
}

// exp(x N) y; N is nilpotent of index at most 3 on every model.
template <class T>
VecT<T> apply_expN(const ChartModel& m, const T& x, const VecT<T>& y) {
    VecT<T> out = y;
    VecT<T> term = y;
    for (int k = 1; k <= 3; ++k) {
        term = apply_N(m, term);
        for (int i = 0; i < m.dimV; ++i) term(i) = term(i) * x * cd(1.0 / k);
        for (int i = 0; i < m.dimV; ++i) out(i) += term(i);
    }
    return out;
}

// Q_H(a ^ b, c ^ d) = Q(a,c) Q(b,d) - Q(a,d) Q(b,c)
template <class T>
T qh(const ChartModel& m, const VecT<T>& a, const VecT<T>& b, const VecT<T>& c, const VecT<T>& d) {
    return qform(m, a, c) * qform(m, b, d) - qform(m, a, d) * qform(m, b, c);
}

// Q_H(a ^ b, N_H (c ^ d)) and Q_H(a ^ b, N_H^2 (c ^ d)) for the derivation N_H.
template <class T>
T qh_N(const ChartModel& m, const VecT<T>& a, const VecT<T>& b, const VecT<T>& c, const VecT<T>& d) {
    return qh(m, a, b, apply_N(m, c), d) + qh(m, a, b, c, apply_N(m, d));
}
template <class T>
T qh_N2(const ChartModel& m, const VecT<T>& a, const VecT<T>& b, const VecT<T>& c, const VecT<T>& d) {
    const VecT<T> nc = apply_N(m, c), nd = apply_N(m, d);
    return qh(m, a, b, apply_N(m, nc), d) + qh(m, a, b, nc, nd) * cd(2.0) + qh(m, a, b, c, apply_N(m, nd));
}

template <class T>
VecT<T> lift(const CVector& v) {
    VecT<T> out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = T(v(i));
    return out;
}

inline VecT<CJet> holomorphic_jets(const CVector& v, const CVector& dv) {
    VecT<CJet> out(v.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) out(i) = CJet::holomorphic(v(i), dv(i));
    return out;
}

// Untwisted sections z_1, z_2 (value and s-derivative) from the section entries a, the
// divisor factor w = t1 nu and its derivative.
template <class T>
struct Sections {
    VecT<T> z1, z2, dz1, dz2;
};

template <class T>
Sections<T> untwisted_sections(const ChartModel& m, const VecT<T>& a1, const VecT<T>& a2, const VecT<T>& da1,
                               const VecT<T>& da2, const T& w, const T& dw) {
    Sections<T> s{a1, a2, da1, da2};
    switch (m.kind) {
        case Kind::Minimal:
            // z1 = a1 + w (e3 - a1[3] e6)
            s.z1(2) += w;
            s.z1(5) -= w * a1(3);
            s.dz1(2) += dw;
            s.dz1(5) -= dw * a1(3) + w * da1(3);
            break;
        case Kind::Second:
            // z1 = a1 + w e3 - w^2/2 e5
            s.z1(2) += w;
            s.z1(4) -= w * w * cd(0.5);
            s.dz1(2) += dw;
            s.dz1(4) -= w * dw;
            break;
        case Kind::Third: {
            // z_i = a_i + w B a_i, B: e1 -> -e4, e2 -> e3, e5 -> e8, e6 -> -e7
            auto apply = [&](VecT<T>& z, VecT<T>& dz, const VecT<T>& a, const VecT<T>& da) {
                const int from[4] = {1, 0, 4, 5}, to[4] = {2, 3, 7, 6};
                const double sign[4] = {1, -1, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    z(to[k]) += w * a(from[k]) * cd(sign[k]);
                    dz(to[k]) += (dw * a(from[k]) + w * da(from[k])) * cd(sign[k]);
                }
            };
            apply(s.z1, s.dz1, a1, da1);
            apply(s.z2, s.dz2, a2, da2);
            break;
        }
        default:
            break;
    }
    return s;
}

// The second spanning vectors of eta_inf, in terms of the (twisted) frame; each is
// unchanged by the unipotent twist, so the same expression serves the untwisted path.
template <class T>
std::array<VecT<T>, 4> eta_inf_pair(const ChartModel& m, const VecT<T>& x1, const VecT<T>& x2, const VecT<T>& dx1,
                                    const VecT<T>& dx2) {
    const int d = m.dimV;
    VecT<T> a = zeros<T>(d), b = zeros<T>(d), da = zeros<T>(d), db = zeros<T>(d);
    switch (m.kind) {
        case Kind::Minimal:
            // x1 ^ (e4 - x2[3] e5 - x1[3] e6)
            a = x1;
            da = dx1;
            b(3) = T(1);
            b(4) = -x2(2);
            b(5) = -x1(2);
            db(4) = -dx2(2);
            db(5) = -dx1(2);
            break;
        case Kind::Second:
            a = x1;
            da = dx1;
            b(3) = T(1);
            break;
        case Kind::Third:
            a(4) = T(1);
            a(6) = -x2(3);
            a(7) = -x1(3);
            da(6) = -dx2(3);
            da(7) = -dx1(3);
            b(5) = T(1);
            b(6) = -x2(2);
            b(7) = -x1(2);
            db(6) = -dx2(2);
            db(7) = -dx1(2);
            break;
        case Kind::Fourth:
            a(4) = T(1);
            a(5) = -x2(2);
            a(6) = -x1(2);
            da(5) = -dx2(2);
            da(6) = -dx1(2);
            b(5) = T(1);
            break;
        case Kind::HodgeTate:
            a(m.h + 2) = T(1);
            b(m.h + 3) = T(1);
            break;
        case Kind::Interior:
            throw NotApplicable("interior model has no boundary frame");
    }
    return {a, b, da, db};
}

}  // namespace hodgepsh::detail

#pragma once

// Polynomials in t, conj(t) and L = log|t|^2 with Laurent t-exponents, as t -> 0.

#include "hodgepsh/errors.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <vector>

namespace hodgepsh {

using Monomial = std::array<int, 3>;  // (a, b, c): t^a conj(t)^b L^c

template <class C = std::complex<double>>
class LogPoly {
public:
    using Coeff = C;

    LogPoly() = default;
    LogPoly(int v) { add(Monomial{0, 0, 0}, C(v)); }  // NOLINT: ring embedding of integers
    LogPoly(C v) { add(Monomial{0, 0, 0}, v); }        // NOLINT: constants

    static LogPoly monomial(int a, int b, int c, C coeff = C(1)) {
        if (c < 0) throw InvalidInput("LogPoly: negative power of L");
        LogPoly p;
        p.add(Monomial{a, b, c}, coeff);
        return p;
    }
    static LogPoly t() { return monomial(1, 0, 0); }
    static LogPoly tbar() { return monomial(0, 1, 0); }
    static LogPoly L() { return monomial(0, 0, 1); }

    const std::map<Monomial, C>& terms() const { return terms_; }
    bool isZero() const { return terms_.empty(); }
    C coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add(const Monomial& m, const C& v) {
        if (v == C(0)) return;
        auto [it, inserted] = terms_.try_emplace(m, v);
        if (!inserted) {
            it->second += v;
            if (it->second == C(0)) terms_.erase(it);
        }
    }

    LogPoly& operator+=(const LogPoly& o) {
        for (const auto& [m, v] : o.terms_) add(m, v);
        return *this;
    }
    LogPoly& operator-=(const LogPoly& o) {
        for (const auto& [m, v] : o.terms_) add(m, -v);
        return *this;
    }
    LogPoly operator-() const {
        LogPoly r = *this;
        for (auto& [m, v] : r.terms_) v = -v;
        return r;
    }
    friend LogPoly operator+(LogPoly a, const LogPoly& b) { return a += b; }
    friend LogPoly operator-(LogPoly a, const LogPoly& b) { return a -= b; }
    friend LogPoly operator*(const LogPoly& a, const LogPoly& b) {
        LogPoly r;
        for (const auto& [ma, va] : a.terms_)
            for (const auto& [mb, vb] : b.terms_) r.add({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, va * vb);
        return r;
    }
    friend LogPoly operator*(LogPoly a, const C& k) {
        if (k == C(0)) return LogPoly();
        for (auto& [m, v] : a.terms_) v *= k;
        return a;
    }
    friend LogPoly operator*(const C& k, LogPoly a) { return std::move(a) * k; }
    LogPoly& operator*=(const LogPoly& o) { return *this = *this * o; }
    friend bool operator==(const LogPoly& a, const LogPoly& b) { return a.terms_ == b.terms_; }

    // Swaps t and conj(t); L is real.
    LogPoly conjugate() const {
        LogPoly r;
        for (const auto& [m, v] : terms_) r.add({m[1], m[0], m[2]}, std::conj(v));
        return r;
    }

    // dL/dt = 1/t, dL/dconj(t) = 1/conj(t).
    LogPoly d_t() const {
        LogPoly r;
        for (const auto& [m, v] : terms_) {
            if (m[0] != 0) r.add({m[0] - 1, m[1], m[2]}, v * C(m[0]));
            if (m[2] != 0) r.add({m[0] - 1, m[1], m[2] - 1}, v * C(m[2]));
        }
        return r;
    }
    LogPoly d_tbar() const {
        LogPoly r;
        for (const auto& [m, v] : terms_) {
            if (m[1] != 0) r.add({m[0], m[1] - 1, m[2]}, v * C(m[1]));
            if (m[2] != 0) r.add({m[0], m[1] - 1, m[2] - 1}, v * C(m[2]));
        }
        return r;
    }

    C eval(std::complex<double> t) const {
        if (t == 0.0) throw SingularEvaluation(0.0, "LogPoly evaluation at t = 0");
        const double L = std::log(std::norm(t));
        const std::complex<double> tb = std::conj(t);
        C acc(0);
        for (const auto& [m, v] : terms_) acc += v * std::pow(t, m[0]) * std::pow(tb, m[1]) * std::pow(L, m[2]);
        return acc;
    }

    // Drops coefficients below rel * (largest magnitude).
    LogPoly pruned(double rel) const {
        double big = 0;
        for (const auto& [m, v] : terms_) big = std::max(big, std::abs(v));
        LogPoly r;
        for (const auto& [m, v] : terms_)
            if (std::abs(v) > rel * big) r.terms_.emplace(m, v);
        return r;
    }

private:
    std::map<Monomial, C> terms_;
};

template <class C>
LogPoly<C> conj(const LogPoly<C>& p) {
    return p.conjugate();
}

template <class C>
struct LeadingTerm {
    Monomial monomial{0, 0, 0};
    C coeff{};
    std::vector<std::pair<Monomial, C>> tied;  // every term of the dominant order
    bool phaseDependent{false};                // tie contains a term with a != b
};

// Dominant term as t -> 0: least a+b, then greatest power of L. Terms sharing both
// are returned together; any of them with a != b makes the sign depend on arg(t).
template <class C>
LeadingTerm<C> leading_term(const LogPoly<C>& p) {
    if (p.isZero()) throw NoLeadingTerm("zero polynomial has no leading term");
    int order = std::numeric_limits<int>::max(), logPow = -1;
    for (const auto& [m, v] : p.terms()) {
        const int o = m[0] + m[1];
        if (o < order || (o == order && m[2] > logPow)) {
            order = o;
            logPow = m[2];
        }
    }
    LeadingTerm<C> lt;
    for (const auto& [m, v] : p.terms())
        if (m[0] + m[1] == order && m[2] == logPow) {
            lt.tied.emplace_back(m, v);
            if (m[0] != m[1]) lt.phaseDependent = true;
        }
    lt.monomial = lt.tied.front().first;
    lt.coeff = lt.tied.front().second;
    for (const auto& [m, v] : lt.tied)
        if (m[0] == m[1]) {
            lt.monomial = m;
            lt.coeff = v;
        }
    return lt;
}

using CLogPoly = LogPoly<std::complex<double>>;

}  // namespace hodgepsh

#pragma once

// Dense univariate polynomials in the disc parameter s over a coefficient ring T.
// A degree cap truncates every result (cap 1 keeps exactly the 1-jet at s = 0).

#include <algorithm>
#include <complex>
#include <limits>
#include <vector>

namespace hodgepsh {

template <class T>
class Poly {
public:
    static constexpr int kUncapped = std::numeric_limits<int>::max();

    Poly() : c_(1, T(0)) {}
    explicit Poly(std::vector<T> coeffs, int cap = kUncapped) : c_(std::move(coeffs)), cap_(cap) { normalize(); }
    static Poly constant(const T& v, int cap = kUncapped) { return Poly(std::vector<T>{v}, cap); }
    static Poly monomial(int degree, const T& v, int cap = kUncapped) {
        std::vector<T> c(static_cast<size_t>(degree) + 1, T(0));
        c.back() = v;
        return Poly(std::move(c), cap);
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    int cap() const { return cap_; }
    const std::vector<T>& coeffs() const { return c_; }
    const T& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
    T coeff(int k) const { return k < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(k)] : T(0); }

    Poly& operator+=(const Poly& o) {
        cap_ = std::min(cap_, o.cap_);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
        for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
        normalize();
        return *this;
    }
    Poly& operator-=(const Poly& o) { return *this += -o; }
    Poly operator-() const {
        Poly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b) {
        const int cap = std::min(a.cap_, b.cap_);
        const size_t n = std::min<size_t>(a.c_.size() + b.c_.size() - 1,
                                          cap == kUncapped ? a.c_.size() + b.c_.size() : size_t(cap) + 1);
        std::vector<T> out(n, T(0));
        for (size_t i = 0; i < a.c_.size() && i < n; ++i)
            for (size_t j = 0; j < b.c_.size() && i + j < n; ++j) out[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(out), cap);
    }
    template <class S>
    friend Poly scale(const S& k, Poly p) {
        for (auto& x : p.c_) x = x * k;
        return p;
    }

    Poly derivative() const {
        if (c_.size() <= 1) return Poly(std::vector<T>{T(0)}, cap_);
        std::vector<T> out(c_.size() - 1, T(0));
        for (size_t k = 1; k < c_.size(); ++k) out[k - 1] = c_[k] * std::complex<double>(static_cast<double>(k));
        return Poly(std::move(out), cap_);
    }
    // Antiderivative with the given value at s = 0.
    Poly integral(const T& atZero) const {
        std::vector<T> out(c_.size() + 1, T(0));
        out[0] = atZero;
        for (size_t k = 0; k < c_.size(); ++k) out[k + 1] = c_[k] * std::complex<double>(1.0 / static_cast<double>(k + 1));
        return Poly(std::move(out), cap_);
    }

    T eval(std::complex<double> s) const {
        T acc = c_.back();
        for (size_t k = c_.size() - 1; k-- > 0;) acc = acc * s + c_[k];
        return acc;
    }

private:
    void normalize() {
        if (c_.empty()) c_.push_back(T(0));
        if (cap_ != kUncapped && c_.size() > size_t(cap_) + 1) c_.resize(size_t(cap_) + 1);
    }

    std::vector<T> c_;
    int cap_{kUncapped};
};

}  // namespace hodgepsh

#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <ostream>
#include <string>

namespace hodgepsh {

using Rational = boost::multiprecision::cpp_rational;

// Exact complex number with rational real and imaginary parts.
class GaussRational {
public:
    GaussRational() = default;
    GaussRational(int re) : re_(re) {}  // NOLINT: implicit for Eigen's Scalar(0)/Scalar(1)
    GaussRational(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
    GaussRational(long long num, long long den) : re_(Rational(num, den)) {}

    static GaussRational i() { return GaussRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool isZero() const { return re_.is_zero() && im_.is_zero(); }
    bool isReal() const { return im_.is_zero(); }

    GaussRational operator-() const { return {-re_, -im_}; }
    GaussRational& operator+=(const GaussRational& o) { re_ += o.re_; im_ += o.im_; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    GaussRational& operator*=(const GaussRational& o) {
        if (isZero()) return *this;
        if (o.isZero()) return *this = GaussRational();
        if (isReal() && o.isReal()) {
            re_ *= o.re_;
            return *this;
        }
        Rational r = re_ * o.re_ - im_ * o.im_;
        im_ = re_ * o.im_ + im_ * o.re_;
        re_ = std::move(r);
        return *this;
    }
    GaussRational& operator/=(const GaussRational& o) {
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        Rational r = (re_ * o.re_ + im_ * o.im_) / n;
        im_ = (im_ * o.re_ - re_ * o.im_) / n;
        re_ = std::move(r);
        return *this;
    }
    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

    std::complex<double> toComplex() const {
        return {static_cast<double>(re_), static_cast<double>(im_)};
    }
    std::string str() const;

private:
    Rational re_{0};
    Rational im_{0};
};

inline GaussRational conj(const GaussRational& x) { return {x.re(), -x.im()}; }
inline bool is_zero(const GaussRational& x) { return x.isZero(); }
inline std::ostream& operator<<(std::ostream& os, const GaussRational& x) { return os << x.str(); }

inline std::string GaussRational::str() const {
    if (im_ == 0) return re_.str();
    if (re_ == 0) return im_.str() + "i";
    return "(" + re_.str() + (im_ < 0 ? "" : "+") + im_.str() + "i)";
}

}  // namespace hodgepsh

namespace Eigen {
template <>
struct NumTraits<hodgepsh::GaussRational> : GenericNumTraits<hodgepsh::GaussRational> {
    using Real = hodgepsh::GaussRational;
    using NonInteger = hodgepsh::GaussRational;
    using Literal = hodgepsh::GaussRational;
    using Nested = hodgepsh::GaussRational;
    enum {
        IsComplex = 0,  // conjugation is explicit via hodgepsh::conj
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 10,
        AddCost = 40,
        MulCost = 80
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};
}  // namespace Eigen

namespace hodgepsh {

using ExactMatrix = Eigen::Matrix<GaussRational, Eigen::Dynamic, Eigen::Dynamic>;
using ExactVector = Eigen::Matrix<GaussRational, Eigen::Dynamic, 1>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline CMatrix to_complex(const ExactMatrix& m) {
    return m.unaryExpr([](const GaussRational& x) { return x.toComplex(); });
}

}  // namespace hodgepsh

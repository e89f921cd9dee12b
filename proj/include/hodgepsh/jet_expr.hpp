#pragma once

// Small expression trees in s and conj(s), evaluable either as plain complex numbers
// or as Wirtinger jets. Used to exercise the jet rules against finite differences.

#include "hodgepsh/jet.hpp"
#include "hodgepsh/rng.hpp"

#include <complex>
#include <memory>
#include <string>

namespace hodgepsh {

class JetExpr {
public:
    enum class Op { Var, ConjVar, Const, Add, Mul, Neg, Recip, Log, Exp, Conj };

    static JetExpr var();
    static JetExpr conj_var();
    static JetExpr constant(std::complex<double> c);
    friend JetExpr operator+(const JetExpr& a, const JetExpr& b);
    friend JetExpr operator*(const JetExpr& a, const JetExpr& b);
    friend JetExpr operator-(const JetExpr& a);
    friend JetExpr operator-(const JetExpr& a, const JetExpr& b) { return a + (-b); }
    static JetExpr recip(const JetExpr& a);
    static JetExpr log(const JetExpr& a);
    static JetExpr exp(const JetExpr& a);
    static JetExpr conj(const JetExpr& a);

    std::complex<double> eval(std::complex<double> s) const;
    CJet jet(std::complex<double> s) const;  // throws SingularEvaluation
    std::string str() const;
    int depth() const;

    struct Node;  // opaque

private:
    explicit JetExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

// Random tree of the given depth. Arguments of log and reciprocal are kept of the form
// c + |g|^2 with c >= 1, so they stay away from zero and the branch cut.
JetExpr random_expr(SplitMix64& rng, int depth);

}  // namespace hodgepsh

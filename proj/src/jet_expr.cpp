#include "hodgepsh/jet_expr.hpp"

#include <algorithm>
#include <sstream>

namespace hodgepsh {

struct JetExpr::Node {
    Op op;
    std::complex<double> value{};
    std::shared_ptr<const Node> a, b;
};

namespace {
using NodePtr = std::shared_ptr<const JetExpr::Node>;
}

JetExpr JetExpr::var() { return JetExpr(std::make_shared<Node>(Node{Op::Var, {}, nullptr, nullptr})); }
JetExpr JetExpr::conj_var() { return JetExpr(std::make_shared<Node>(Node{Op::ConjVar, {}, nullptr, nullptr})); }
JetExpr JetExpr::constant(std::complex<double> c) {
    return JetExpr(std::make_shared<Node>(Node{Op::Const, c, nullptr, nullptr}));
}
JetExpr operator+(const JetExpr& a, const JetExpr& b) {
    return JetExpr(std::make_shared<JetExpr::Node>(JetExpr::Node{JetExpr::Op::Add, {}, a.node_, b.node_}));
}
JetExpr operator*(const JetExpr& a, const JetExpr& b) {
    return JetExpr(std::make_shared<JetExpr::Node>(JetExpr::Node{JetExpr::Op::Mul, {}, a.node_, b.node_}));
}
JetExpr operator-(const JetExpr& a) {
    return JetExpr(std::make_shared<JetExpr::Node>(JetExpr::Node{JetExpr::Op::Neg, {}, a.node_, nullptr}));
}
JetExpr JetExpr::recip(const JetExpr& a) { return JetExpr(std::make_shared<Node>(Node{Op::Recip, {}, a.node_, nullptr})); }
JetExpr JetExpr::log(const JetExpr& a) { return JetExpr(std::make_shared<Node>(Node{Op::Log, {}, a.node_, nullptr})); }
JetExpr JetExpr::exp(const JetExpr& a) { return JetExpr(std::make_shared<Node>(Node{Op::Exp, {}, a.node_, nullptr})); }
JetExpr JetExpr::conj(const JetExpr& a) { return JetExpr(std::make_shared<Node>(Node{Op::Conj, {}, a.node_, nullptr})); }

std::complex<double> JetExpr::eval(std::complex<double> s) const {
    const Node& n = *node_;
    auto sub = [&](const NodePtr& p) { return JetExpr(p).eval(s); };
    switch (n.op) {
        case Op::Var: return s;
        case Op::ConjVar: return std::conj(s);
        case Op::Const: return n.value;
        case Op::Add: return sub(n.a) + sub(n.b);
        case Op::Mul: return sub(n.a) * sub(n.b);
        case Op::Neg: return -sub(n.a);
        case Op::Recip: {
            const auto v = sub(n.a);
            if (!(std::abs(v) >= DBL_MIN)) throw SingularEvaluation(std::abs(v), "reciprocal");
            return 1.0 / v;
        }
        case Op::Log: {
            const auto v = sub(n.a);
            if (!(std::abs(v) >= DBL_MIN)) throw SingularEvaluation(std::abs(v), "log");
            return std::log(v);
        }
        case Op::Exp: return std::exp(sub(n.a));
        case Op::Conj: return std::conj(sub(n.a));
    }
    return {};
}

CJet JetExpr::jet(std::complex<double> s) const {
    const Node& n = *node_;
    auto sub = [&](const NodePtr& p) { return JetExpr(p).jet(s); };
    switch (n.op) {
        case Op::Var: return CJet::variable(s);
        case Op::ConjVar: return hodgepsh::conj(CJet::variable(s));
        case Op::Const: return CJet(n.value);
        case Op::Add: return sub(n.a) + sub(n.b);
        case Op::Mul: return sub(n.a) * sub(n.b);
        case Op::Neg: return -sub(n.a);
        case Op::Recip: return hodgepsh::recip(sub(n.a));
        case Op::Log: return hodgepsh::log(sub(n.a));
        case Op::Exp: return hodgepsh::exp(sub(n.a));
        case Op::Conj: return hodgepsh::conj(sub(n.a));
    }
    return {};
}

std::string JetExpr::str() const {
    const Node& n = *node_;
    auto sub = [](const NodePtr& p) { return JetExpr(p).str(); };
    std::ostringstream os;
    switch (n.op) {
        case Op::Var: os << "s"; break;
        case Op::ConjVar: os << "sb"; break;
        case Op::Const: os << "(" << n.value.real() << (n.value.imag() < 0 ? "" : "+") << n.value.imag() << "i)"; break;
        case Op::Add: os << "(" << sub(n.a) << " + " << sub(n.b) << ")"; break;
        case Op::Mul: os << sub(n.a) << "*" << sub(n.b); break;
        case Op::Neg: os << "-" << sub(n.a); break;
        case Op::Recip: os << "1/" << sub(n.a); break;
        case Op::Log: os << "log(" << sub(n.a) << ")"; break;
        case Op::Exp: os << "exp(" << sub(n.a) << ")"; break;
        case Op::Conj: os << "conj(" << sub(n.a) << ")"; break;
    }
    return os.str();
}

int JetExpr::depth() const {
    const Node& n = *node_;
    int d = 0;
    if (n.a) d = std::max(d, JetExpr(n.a).depth());
    if (n.b) d = std::max(d, JetExpr(n.b).depth());
    return d + 1;
}

JetExpr random_expr(SplitMix64& rng, int depth) {
    if (depth <= 0) {
        const double u = rng.uniform();
        if (u < 0.4) return JetExpr::var();
        if (u < 0.7) return JetExpr::conj_var();
        return JetExpr::constant(rng.in_disc(1.0));
    }
    auto safe = [&](const JetExpr& g) {
        // c + g * conj(g), c in [1, 2]
        return JetExpr::constant(1.0 + rng.uniform()) + g * JetExpr::conj(g);
    };
    const int pick = static_cast<int>(rng.uniform() * 7.0);
    const JetExpr a = random_expr(rng, depth - 1);
    switch (pick) {
        case 0: return a + random_expr(rng, depth - 1);
        case 1: return a * random_expr(rng, depth - 1);
        case 2: return -a;
        case 3: return JetExpr::recip(safe(a));
        case 4: return JetExpr::log(safe(a));
        case 5: return JetExpr::exp(a * JetExpr::constant(0.5));
        default: return JetExpr::conj(a);
    }
}

}  // namespace hodgepsh

#include "hodgepsh/errors.hpp"
#include "hodgepsh/jet.hpp"
#include "hodgepsh/jet_expr.hpp"
#include "hodgepsh/log_poly.hpp"
#include "hodgepsh/rng.hpp"

#include <doctest.h>

#include <numbers>

using namespace hodgepsh;
using cd = std::complex<double>;

namespace {
constexpr double kPi = std::numbers::pi;

// Laplacian/4 by a fourth-order central stencil.
double fd_levi(const JetExpr& f, cd s, double d) {
    auto v = [&](cd z) { return f.eval(z).real(); };
    auto second = [&](cd dir) {
        return (-v(s + 2.0 * d * dir) + 16.0 * v(s + d * dir) - 30.0 * v(s) + 16.0 * v(s - d * dir) -
                v(s - 2.0 * d * dir)) /
               (12.0 * d * d);
    };
    return (second(1.0) + second(cd(0, 1))) / 4.0;
}
}  // namespace

TEST_CASE("jet of |s|^2 and log|s|^2") {
    const JetExpr s = JetExpr::var(), sb = JetExpr::conj_var();
    const CJet a = (s * sb).jet(cd(0.3, 0.4));
    CHECK(a.f.real() == doctest::Approx(0.25));
    CHECK(std::abs(a.fssb - 1.0) < 1e-15);
    const CJet b = JetExpr::log(s * sb).jet(cd(0.3, 0.4));
    CHECK(std::abs(b.fssb) < 1e-14);
}

TEST_CASE("jet of -log(1 - |s|^2) matches finite differences") {
    const JetExpr s = JetExpr::var(), sb = JetExpr::conj_var();
    const JetExpr f = -JetExpr::log(JetExpr::constant(1.0) - s * sb);
    const CJet j = f.jet(0.5);
    CHECK(std::abs(j.fssb - 16.0 / 9.0) < 1e-14);
    CHECK(std::abs(fd_levi(f, 0.5, 1e-3) - 16.0 / 9.0) < 1e-6);
}

TEST_CASE("jet arithmetic rejects singular points") {
    const JetExpr s = JetExpr::var();
    CHECK_THROWS_AS(JetExpr::recip(s).jet(0.0), SingularEvaluation);
    CHECK_THROWS_AS(JetExpr::log(s * JetExpr::conj_var()).jet(0.0), SingularEvaluation);
}

TEST_CASE("random expression trees: jets agree with finite differences") {
    SplitMix64 g(2024);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        const JetExpr f = random_expr(g, 1 + trial % 4);
        const cd s = g.in_disc(0.5);
        const CJet j = f.jet(s);
        CAPTURE(f.str());
        CHECK(std::abs(j.f - f.eval(s)) <= 1e-12 * (1.0 + std::abs(j.f)));
        // the Levi operator is real, so it commutes with taking real parts
        const double fd = fd_levi(f, s, 1e-3);
        const double jet = j.fssb.real();
        CHECK(std::abs(fd - jet) <= 1e-6 * (1.0 + std::abs(jet)));
        ++checked;
    }
    CHECK(checked == 60);
}

TEST_CASE("leading terms of log polynomials") {
    using P = CLogPoly;
    const P L = P::L(), t = P::t(), tb = P::tbar();

    const auto a = leading_term(L * L + cd(3.0) * t * L * L * L);
    CHECK(a.monomial == Monomial{0, 0, 2});
    CHECK(a.coeff == cd(1.0));
    CHECK_FALSE(a.phaseDependent);

    const cd c1 = 1.0 / (4.0 * kPi * kPi), c2 = 1.0 / (2.0 * kPi);
    const auto b = leading_term(t * tb * L * (L * c1) - t * tb * L * c2);
    CHECK(b.monomial == Monomial{1, 1, 2});
    CHECK(std::abs(b.coeff - c1) < 1e-16);

    const auto c = leading_term(t + tb);
    CHECK(c.tied.size() == 2);
    CHECK(c.phaseDependent);

    CHECK_THROWS_AS(leading_term(P()), NoLeadingTerm);
}

TEST_CASE("log polynomial derivatives follow dL/dt = 1/t") {
    using P = CLogPoly;
    SplitMix64 g(5);
    for (int trial = 0; trial < 20; ++trial) {
        P p;
        for (int k = 0; k < 5; ++k)
            p.add({static_cast<int>(g() % 3), static_cast<int>(g() % 3), static_cast<int>(g() % 3)}, g.in_disc(1.0));
        const cd t0 = std::polar(0.3, g.uniform(0.0, 2 * kPi));
        const double d = 1e-6;
        const cd dt = (p.eval(t0 + d) - p.eval(t0 - d) - cd(0, 1) * (p.eval(t0 + cd(0, d)) - p.eval(t0 - cd(0, d)))) /
                      (4.0 * d);
        const cd dtb = (p.eval(t0 + d) - p.eval(t0 - d) + cd(0, 1) * (p.eval(t0 + cd(0, d)) - p.eval(t0 - cd(0, d)))) /
                       (4.0 * d);
        CHECK(std::abs(p.d_t().eval(t0) - dt) < 1e-6 * (1.0 + std::abs(dt)));
        CHECK(std::abs(p.d_tbar().eval(t0) - dtb) < 1e-6 * (1.0 + std::abs(dtb)));
        CHECK(std::abs(conj(p).eval(t0) - std::conj(p.eval(t0))) < 1e-12 * (1.0 + std::abs(p.eval(t0))));
    }
}

#include "hodgepsh/errors.hpp"
#include "hodgepsh/period_chart.hpp"
#include "hodgepsh/rng.hpp"

#include <doctest.h>

#include <numbers>

using namespace hodgepsh;

namespace {
constexpr double kPi = std::numbers::pi;

CVector unit(int n, int k) {
    CVector v = CVector::Zero(n);
    v(k) = 1.0;
    return v;
}

double q_form(const ChartModel& m, const CVector& x, const CVector& y) {
    return std::abs((x.transpose() * m.Qc * y)(0, 0));
}
}  // namespace

TEST_CASE("zero free data gives the base point twisted by the nilpotent orbit") {
    const HorizontalDisc d = make_horizontal_disc(Kind::Minimal, 6, 99, 0, 1, 0.0);
    const auto m = d.chart();
    const Frame f = xi_frame(d, 0.1);
    const cd ell = std::log(cd(0.1)) / (2.0 * kPi * cd(0, 1));
    CHECK((f.xi1 - unit(10, 0)).norm() < 1e-15);
    const CVector expect = unit(10, 1) + ell * (m->Nc * unit(10, 1));
    CHECK((f.xi2 - expect).norm() < 1e-15);
    CHECK(std::abs(f.xi2(3) - cd(0, 1) * ell) < 1e-15);
}

TEST_CASE("second type base point: N^2 of the second section is v4") {
    const HorizontalDisc d = make_horizontal_disc(Kind::Second, 6, 5, 0, 1, 0.0);
    const auto m = d.chart();
    for (cd s : {cd(0.1), cd(0.02, 0.03)}) {
        const Frame f = xi_frame(d, s);
        CHECK((m->Nc * m->Nc * f.xi2 - unit(m->dimV, 3)).norm() < 1e-15);
    }
}

TEST_CASE("constructed discs satisfy both horizontality relations") {
    const HorizontalDisc d = make_horizontal_disc(Kind::Minimal, 6, 7, 2, 1, 0.05);
    const Residuals r = residuals(d);
    CHECK(r.hr <= 1e-12);
    CHECK(r.ipr <= 1e-12);
    const Frame f = xi_frame(d, 0.05);
    CHECK(q_form(*d.chart(), f.xi1, f.xi2) <= 1e-12);

    for (Kind k : degenerate_kinds())
        for (int h : {minimum_h(k), 6})
            for (int tang : {0, 1, 2})
                for (std::uint64_t seed = 0; seed < 10; ++seed) {
                    CAPTURE(kind_name(k));
                    CAPTURE(h);
                    CAPTURE(tang);
                    const Residuals rr = residuals(make_horizontal_disc(k, h, seed, 3, tang, 0.05));
                    CHECK(rr.hr <= 1e-12);
                    CHECK(rr.ipr <= 1e-12);
                }
}

TEST_CASE("a disc inside the divisor keeps the third coordinate of the first section at zero") {
    const HorizontalDisc d = make_horizontal_disc(Kind::Second, 6, 3, 2, 0, 0.05);
    CHECK(d.onDivisor());
    for (cd s : {cd(0.0), cd(0.01), cd(0.03, -0.02), cd(-0.04, 0.01)}) CHECK(std::abs(xi_frame(d, s).xi1(2)) == 0.0);
}

TEST_CASE("disc parameter validation") {
    CHECK_THROWS_AS(make_horizontal_disc(Kind::Minimal, 6, 0, 9, 1, 0.05), InvalidInput);
    CHECK_THROWS_AS(make_horizontal_disc(Kind::Minimal, 6, 0, 2, 1, 0.5), InvalidInput);
    CHECK_THROWS_AS(make_horizontal_disc(Kind::Third, 3, 0, 2, 1, 0.05), InvalidHodgeNumber);
    CHECK_THROWS_AS(make_horizontal_disc(Kind::Interior, 6, 0, 2, 1, 0.05), NotApplicable);
    const HorizontalDisc d = make_horizontal_disc(Kind::Minimal, 6, 1, 2, 1, 0.05);
    CHECK_THROWS_AS(xi_frame(d, 0.0), SingularEvaluation);
}

TEST_CASE("discs are reproducible from their seed") {
    const auto a = make_horizontal_disc(Kind::Third, 6, 42), b = make_horizontal_disc(Kind::Third, 6, 42);
    CHECK(a.freeEntries == b.freeEntries);
    CHECK(a.constants == b.constants);
    CHECK(make_horizontal_disc(Kind::Third, 6, 43).freeEntries != a.freeEntries);
}

TEST_CASE("special types: h is 1 for hodge-tate and 1 - |xi3_1|^2 for the fourth type") {
    SplitMix64 g(17);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto ht = make_horizontal_disc(Kind::HodgeTate, 6, seed, 2, 1 + seed % 2, 0.05);
        const auto fo = make_horizontal_disc(Kind::Fourth, 6, seed, 2, 1 + seed % 2, 0.05);
        for (int k = 0; k < 5; ++k) {
            const cd s = std::polar(g.uniform(1e-4, 0.1), g.uniform(0.0, 2 * kPi));
            CHECK(hodge_norms(ht, s).h == 1.0);
            CHECK(std::abs(hodge_norms(fo, s).h - (1.0 - std::norm(xi_frame(fo, s).xi1(2)))) <= 1e-12);
        }
    }
}

TEST_CASE("norms along a minimal fibre-point disc tend to 1 for h") {
    const HorizontalDisc d = make_horizontal_disc(Kind::Minimal, 6, 4, 2, 1, 0.05, {true, true});
    double prev = std::abs(hodge_norms(d, 1e-2).h - 1.0);
    for (double r : {1e-3, 1e-4, 1e-6}) {
        const double gap = std::abs(hodge_norms(d, r).h - 1.0);
        CHECK(gap <= prev);
        prev = gap;
    }
    CHECK(prev < 1e-3);
}

TEST_CASE("closed forms agree with the frame evaluation") {
    for (Kind k : degenerate_kinds())
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            CAPTURE(kind_name(k));
            SplitMix64 g(seed);
            const auto d = make_horizontal_disc(k, 6, seed, 2, 1 + seed % 2, 0.05);
            const cd s = std::polar(std::pow(10.0, g.uniform(-4.0, -1.0)), g.uniform(0.0, 2 * kPi));
            const NormValue a = hodge_norms(d, s), b = hodge_norms_formula(d, s);
            CHECK(std::abs(a.h - b.h) <= 1e-9 * (1 + std::abs(a.h)));
            CHECK(std::abs(a.h0 - b.h0) <= 1e-9 * (1 + std::abs(a.h0)));
            CHECK(a.h0 > 0.0);
            CHECK(a.rho0 == doctest::Approx(1.0 / a.h0));
        }
}

TEST_CASE("norms are invariant under ell -> ell + 1") {
    for (Kind k : degenerate_kinds())
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const auto d = make_horizontal_disc(k, 6, seed);
            const cd s(0.01, 0.02);
            const NormValue a = hodge_norms(d, s), b = hodge_norms(d, s, 1.0), c = hodge_norms(d, s, -3.0);
            CHECK(std::abs(a.h - b.h) <= 1e-12 * (1 + std::abs(a.h)));
            CHECK(std::abs(a.h0 - b.h0) <= 1e-12 * (1 + std::abs(a.h0)));
            CHECK(std::abs(a.h0 - c.h0) <= 1e-12 * (1 + std::abs(a.h0)));
        }
}

TEST_CASE("symbolic jets reproduce the numeric norms of a frozen disc") {
    for (Kind k : {Kind::Minimal, Kind::Second, Kind::Third})
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            CAPTURE(kind_name(k));
            const cd t1 = std::polar(1e-3, 0.7 + seed);
            const auto d = make_tangent_disc(k, 6, seed, t1);
            const SymbolicNorms sym = symbolic_norm_jets(d);
            const NormJets num = norm_jets(d, 0.0);
            CHECK(std::abs(sym.h.f.eval(t1) - num.h.f) <= 1e-10 * (1 + std::abs(num.h.f)));
            CHECK(std::abs(sym.h0.f.eval(t1) - num.h0.f) <= 1e-10 * (1 + std::abs(num.h0.f)));
            CHECK(std::abs(sym.h.fssb.eval(t1) - num.h.fssb) <= 1e-8 * (1 + std::abs(num.h.fssb)));
        }
}

TEST_CASE("q-functions of raw section data") {
    const auto m = chart_model(Kind::Minimal, 6);
    CVector a1 = unit(10, 0), a2 = unit(10, 1);
    CHECK(*q_functions_raw(Kind::Minimal, 6, a1, a2).q1 == doctest::Approx(1.0));
    a1(5) = 0.1;
    CHECK(std::abs(*q_functions_raw(Kind::Minimal, 6, a1, a2).q1 - 1.01) < 1e-15);
    a1(6) = 0.1;
    CHECK(std::abs(*q_functions_raw(Kind::Minimal, 6, a1, a2).q1 - 1.0) < 1e-15);

    const auto s = chart_model(Kind::Second, 6);
    CVector b1 = unit(s->dimV, 0), b2 = unit(s->dimV, 1);
    b1(4) = 0.1;
    CHECK(std::abs(*q_functions_raw(Kind::Second, 6, b1, b2).q2 - 1.01) < 1e-15);

    CHECK_THROWS_AS(q_functions_raw(Kind::Minimal, 6, unit(3, 0), a2), DimensionError);
}

TEST_CASE("q1 is 1 at a minimal fibre point") {
    const HorizontalDisc d = make_horizontal_disc(Kind::Minimal, 6, 12, 2, 1, 0.05, {true, true});
    CHECK(std::abs(*q_functions(d, 0.0).q1 - 1.0) < 1e-15);
}

TEST_CASE("differentiated isotropy relations on the divisor") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        // minimal: the alpha4_1 * d alpha3_2 term drops out where alpha4_1 vanishes
        const auto d = make_horizontal_disc(Kind::Minimal, 6, seed, 2, 0, 0.05);
        cd acc = entry_slope(d, "alpha6_2") + entry_value(d, "alpha4_1", 0.0) * entry_slope(d, "alpha3_2");
        for (int r : d.chart()->rIndices) {
            const std::string j = std::to_string(r + 1);
            acc += entry_value(d, "alpha" + j + "_1", 0.0) * entry_slope(d, "alpha" + j + "_2");
        }
        CHECK(std::abs(acc) < 1e-12);

        const auto e = make_horizontal_disc(Kind::Second, 6, seed, 2, 0, 0.05);
        cd acc2 = entry_slope(e, "alpha5_2");
        for (int r : e.chart()->rIndices) {
            const std::string j = std::to_string(r + 1);
            acc2 += entry_value(e, "alpha" + j + "_1", 0.0) * entry_slope(e, "alpha" + j + "_2");
        }
        CHECK(std::abs(acc2) < 1e-12);
    }
}

TEST_CASE("free entries and integration constants") {
    const auto fe = free_entries(Kind::Minimal, 6);
    CHECK(fe.front().name == "alpha4_1");
    CHECK(fe.back().name == "nu");
    CHECK(integration_constant_name(Kind::Minimal, 6) == "alpha6_2");
    CHECK(integration_constant_name(Kind::HodgeTate, 6) == "alpha9_2");
    CHECK(entry_name(1, 2) == "alpha3_2");
}

TEST_CASE("third type q2 equals the determinant of the 2x2 Gram form") {
    SplitMix64 g(9);
    const auto m = chart_model(Kind::Third, 6);
    for (int trial = 0; trial < 50; ++trial) {
        CVector a1 = unit(m->dimV, 0), a2 = unit(m->dimV, 1);
        const cd x = g.in_disc(0.3), y = g.in_disc(0.3), u = g.in_disc(0.3), v = g.in_disc(0.3);
        a1(2) = x;
        a1(3) = y;
        a2(2) = u;
        a2(3) = v;
        const double expect = (1 - std::norm(x) - std::norm(y)) * (1 - std::norm(u) - std::norm(v)) -
                              std::norm(x * std::conj(u) + y * std::conj(v));
        CHECK(std::abs(*q_functions_raw(Kind::Third, 6, a1, a2).q2 - expect) < 1e-14);
    }
}

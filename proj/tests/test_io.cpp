#include "hodgepsh/errors.hpp"
#include "hodgepsh/json_io.hpp"
#include "hodgepsh/psh_verify.hpp"
#include "hodgepsh/suites.hpp"

#include <doctest.h>

using namespace hodgepsh;

TEST_CASE("disc JSON round trip reproduces Levi values exactly") {
    for (Kind k : degenerate_kinds())
        for (int tang : {0, 1, 2}) {
            const auto d = make_horizontal_disc(k, 6, 31 + tang, 2, tang, 0.05);
            const auto back = disc_from_json(Json::parse(disc_to_json(d).dump()));
            const cd s(0.013, -0.021);
            CHECK(levi(back, s, RhoSelector::Sum) == levi(d, s, RhoSelector::Sum));
            CHECK(disc_to_json(back) == disc_to_json(d));
        }
    const auto t = make_tangent_disc(Kind::Third, 6, 3, cd(1e-4, 2e-5));
    const auto tb = disc_from_json(disc_to_json(t));
    CHECK(tb.frozen);
    CHECK(levi(tb, 0.0, RhoSelector::Sum) == levi(t, 0.0, RhoSelector::Sum));
}

TEST_CASE("corrupt disc JSON is rejected") {
    const Json good = disc_to_json(make_horizontal_disc(Kind::Minimal, 6, 1));
    auto broken = [&](auto edit) {
        Json j = good;
        edit(j);
        return j;
    };
    CHECK_THROWS_AS(disc_from_json(Json::parse("[1, 2]")), InvalidInput);
    CHECK_THROWS_AS(disc_from_json(broken([](Json& j) { j.erase("tangency"); })), InvalidInput);
    CHECK_THROWS_AS(disc_from_json(broken([](Json& j) { j["type"] = "seventh"; })), InvalidInput);
    CHECK_THROWS_AS(disc_from_json(broken([](Json& j) { j["h"] = 0; })), InvalidInput);
    CHECK_THROWS_AS(disc_from_json(broken([](Json& j) { j["free"]["alpha4_1"][0] = "x"; })), InvalidInput);
    CHECK_THROWS_AS(disc_from_json(broken([](Json& j) { j["free"].erase("nu"); })), InvalidInput);
    CHECK_THROWS_AS(disc_from_json(broken([](Json& j) { j["free"]["alpha4_1"][0] = Json::array({1.0}); })),
                    InvalidInput);
    CHECK_THROWS_AS(complex_from_json(Json::array({1.0, 2.0, 3.0})), InvalidInput);
}

TEST_CASE("violations embed a replayable disc") {
    const auto d = make_horizontal_disc(Kind::Second, 6, 8);
    const cd s(0.004, 0.002);
    const double value = levi(d, s, RhoSelector::Sum);
    const Violation v{3, 8, "synthetic", d, s, std::string("sum"), value};
    const Json j = Json::parse(violation_to_json(v).dump());
    const auto replay = disc_from_json(j["disc"]);
    const double again = levi(replay, complex_from_json(j["s"]), parse_rho(j["rho"].get<std::string>()));
    CHECK(std::abs(again - j["value"].get<double>()) <= 1e-12 * (1 + std::abs(value)));
}

TEST_CASE("suite reports do not depend on the thread count") {
    for (const std::string name : {"formula", "rho0-psh", "tangent", "steps", "mean-value"}) {
        SuiteOptions a;
        a.trials = 12;
        a.seed = 5;
        SuiteOptions b = a;
        b.threads = 3;
        CAPTURE(name);
        CHECK(suite_to_json(run_suite(name, Kind::Third, 6, a)).dump() ==
              suite_to_json(run_suite(name, Kind::Third, 6, b)).dump());
    }
}

TEST_CASE("suite applicability and notes") {
    SuiteOptions o;
    o.trials = 5;
    o.seed = 1;
    const auto ht = run_suite("special", Kind::HodgeTate, 6, o);
    CHECK(ht.passed());
    CHECK(suite_to_json(ht).dump().find("rho1 = 0") != std::string::npos);
    const auto fo = run_suite("special", Kind::Fourth, 6, o);
    CHECK(suite_to_json(fo).dump().find("rho smooth") != std::string::npos);
    CHECK_FALSE(run_suite("divergence", Kind::Fourth, 6, o).applicable);
    CHECK_THROWS_AS(run_suite("nonsense", Kind::Minimal, 6, o), InvalidInput);
    CHECK_THROWS_AS(run_suite("formula", Kind::Interior, 6, o), InvalidInput);
}

TEST_CASE("diamond JSON carries markers as [p, q]") {
    const Json j = diamond_to_json(diamond(build_model(Kind::Second, 6), SpaceTag::H));
    CHECK(j["markers"]["e0"] == Json::array({2, 0}));
    CHECK(j["space"] == "H");
}

#include "hodgepsh/diamond.hpp"
#include "hodgepsh/errors.hpp"
#include "hodgepsh/exact_linalg.hpp"

#include <doctest.h>

using namespace hodgepsh;

TEST_CASE("monodromy weight filtration of the minimal type") {
    const auto m = build_model(Kind::Minimal, 6);
    const auto W = weight_filtration(m.N, 2);
    CHECK(same_subspace<GaussRational>(W.at(1), coordinate_subspace(10, {3, 4})));
    CHECK(dim_of<GaussRational>(W.at(2)) == 8);
    CHECK(dim_of<GaussRational>(W.at(3)) == 10);
    CHECK(dim_of<GaussRational>(W.at(0)) == 0);
}

TEST_CASE("weight filtration of the zero operator is concentrated in the centre") {
    const ExactMatrix zero = ExactMatrix::Zero(5, 5);
    const auto W = weight_filtration(zero, 2);
    CHECK(dim_of<GaussRational>(W.at(1)) == 0);
    CHECK(dim_of<GaussRational>(W.at(2)) == 5);
}

TEST_CASE("weight filtration of the third type") {
    const auto m = build_model(Kind::Third, 6);
    const auto W = weight_filtration(m.N, 2);
    CHECK(dim_of<GaussRational>(W.at(0)) == 0);
    CHECK(same_subspace<GaussRational>(W.at(1), coordinate_subspace(m.dimV, {4, 5, 6, 7})));
}

TEST_CASE("weight filtration rejects a non-nilpotent operator") {
    ExactMatrix a = ExactMatrix::Identity(3, 3);
    CHECK_THROWS_AS(weight_filtration(a, 2), NotNilpotent);
}

TEST_CASE("weight filtration satisfies N W_l in W_{l-2} and the hard Lefschetz ranks") {
    for (Kind k : degenerate_kinds()) {
        CAPTURE(kind_name(k));
        const auto m = build_model(k, 6);
        const auto W = weight_filtration(m.N, 2);
        for (int l = W.lo; l <= W.hi(); ++l)
            CHECK(contained_in<GaussRational>(image_of<GaussRational>(m.N, W.at(l)), W.at(l - 2)));
        // N^j : Gr_{2+j} -> Gr_{2-j} is an isomorphism
        for (int j = 1; j <= 2; ++j) {
            const int up = dim_of<GaussRational>(W.at(2 + j)) - dim_of<GaussRational>(W.at(1 + j));
            const int down = dim_of<GaussRational>(W.at(2 - j)) - dim_of<GaussRational>(W.at(1 - j));
            CHECK(up == down);
        }
    }
}

TEST_CASE("diamond of V for the minimal, interior and hodge-tate types") {
    const auto mi = diamond(build_model(Kind::Minimal, 6), SpaceTag::V);
    CHECK(mi.at(2, 0) == 1);
    CHECK(mi.at(2, 1) == 1);
    CHECK(mi.at(1, 2) == 1);
    CHECK(mi.at(1, 1) == 4);
    CHECK(mi.at(1, 0) == 1);
    CHECK(mi.at(0, 1) == 1);
    CHECK(mi.at(0, 2) == 1);
    CHECK(mi.total() == 10);

    const auto in = diamond(build_model(Kind::Interior, 6), SpaceTag::V);
    CHECK(in.at(2, 0) == 2);
    CHECK(in.at(1, 1) == 6);
    CHECK(in.at(0, 2) == 2);
    CHECK(in.entries.size() == 3);

    const auto ht = diamond(build_model(Kind::HodgeTate, 6), SpaceTag::V);
    CHECK(ht.at(2, 2) == 2);
    CHECK(ht.at(1, 1) == 6);
    CHECK(ht.at(0, 0) == 2);
    CHECK(ht.entries.size() == 3);
}

TEST_CASE("diamond of H: marked entries") {
    const auto in = diamond(build_model(Kind::Interior, 6), SpaceTag::H);
    CHECK(in.at(-2, 2) == 1);
    CHECK(in.at(-1, 1) == 12);
    CHECK(in.at(1, -1) == 12);
    CHECK(in.at(2, -2) == 1);

    CHECK(diamond(build_model(Kind::Minimal, 6), SpaceTag::H).at(-1, 0) == 5);

    const auto se = diamond(build_model(Kind::Second, 6), SpaceTag::H);
    for (int p : {-1, 1})
        for (int q : {-1, 1}) CHECK(se.at(p, q) == 6);
    CHECK(se.markers.at("e0") == std::pair{2, 0});

    const auto th = diamond(build_model(Kind::Third, 6), SpaceTag::H);
    for (int p : {-1, 1})
        for (int q : {-1, 1}) CHECK(th.at(p, q) == 4);
}

TEST_CASE("third type at h = 4 suppresses the empty r-range entries") {
    const auto t = diamond(build_model(Kind::Third, 4), SpaceTag::H);
    for (const auto& [pq, d] : t.entries) CHECK(d > 0);
    CHECK(check_diamond(t, marked_table(Kind::Third, 4, SpaceTag::H), 4).empty());
}

TEST_CASE("every computed diamond matches the reference tables") {
    for (Kind k : all_kinds())
        for (int h : {minimum_h(k), 6, 9})
            for (SpaceTag sp : {SpaceTag::V, SpaceTag::H}) {
                CAPTURE(kind_name(k));
                CAPTURE(h);
                CAPTURE(space_name(sp));
                const auto m = build_model(k, h);
                const auto t = diamond(m, sp);
                const auto problems = check_diamond(t, marked_table(k, h, sp), h);
                for (const auto& p : problems) MESSAGE(p);
                CHECK(problems.empty());
                const int dim = sp == SpaceTag::V ? m.dimV : m.dimV * (m.dimV - 1) / 2;
                CHECK(t.total() == dim);
                for (const auto& [pq, d] : t.entries) CHECK(t.at(pq.second, pq.first) == d);
            }
}

TEST_CASE("the Deligne splitting is a direct sum decomposition") {
    for (Kind k : degenerate_kinds()) {
        CAPTURE(kind_name(k));
        const auto m = build_model(k, 6);
        const auto I = deligne_splitting(model_weight_filtration(m), model_hodge_filtration(m), m.conj);
        ExactMatrix all(m.dimV, 0);
        for (const auto& [pq, sub] : I) {
            ExactMatrix next(m.dimV, all.cols() + sub.cols());
            next << all, sub;
            all = next;
            // N maps I^{p,q} into I^{p-1,q-1}
            const auto below = I.find({pq.first - 1, pq.second - 1});
            const ExactMatrix img = image_of<GaussRational>(m.N, sub);
            if (below == I.end())
                CHECK(img.cols() == 0);
            else
                CHECK(contained_in<GaussRational>(img, below->second));
        }
        CHECK(dim_of<GaussRational>(all) == m.dimV);
        CHECK(all.cols() == m.dimV);
    }
}

TEST_CASE("diamond renderers") {
    const auto t = diamond(build_model(Kind::Second, 6), SpaceTag::H);
    CHECK(diamond_text(t).find("e0 at (2,0)") != std::string::npos);
    CHECK(diamond_csv(t).rfind("space,p,q,dim", 0) == 0);
    CHECK(parse_space("H") == SpaceTag::H);
    CHECK_THROWS_AS(parse_space("W"), InvalidInput);
}

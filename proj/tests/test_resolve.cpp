#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ezd/resolve.hpp"

using namespace ezd;

namespace {

AlgebraPtr cube() { return from_presentation({"x"}, {"x^3"}, 32003); }
AlgebraPtr squarezero2() {
    return from_presentation({"y", "z"}, {"y^2", "y*z", "z^2"}, 32003);
}
AlgebraPtr fatpoint() {
    return from_presentation({"x", "y", "z"}, {"x^2", "y^2", "z^2", "y*z"}, 32003);
}

}  // namespace

TEST_CASE("resolution of a free module stops immediately") {
    auto a = cube();
    auto f = minimal_resolution(free_module(a, 2), 4);
    CHECK(f.ranks == std::vector<std::size_t>{2, 0, 0, 0, 0});
    CHECK(is_complex(f));
    CHECK(is_minimal(f));
    CHECK(is_exact(f));
}

TEST_CASE("k over k[x]/(x^2): all ranks 1, every differential (x)") {
    auto a = from_presentation({"x"}, {"x^2"}, 32003);
    auto f = minimal_resolution(residue_field(a), 6);
    CHECK(f.ranks == std::vector<std::size_t>(7, 1));
    for (std::size_t i = 1; i <= 6; ++i) {
        CHECK(f.d(i).rows == 1);
        CHECK(f.d(i).at(0, 0) == a->element("x"));
    }
    CHECK(is_complex(f));
    CHECK(is_minimal(f));
    CHECK(is_exact(f));
    auto period = detect_periodicity(f);
    REQUIRE(period);
    CHECK(*period == 1);
}

TEST_CASE("k over cube: Betti numbers all 1, differentials alternate x, x^2") {
    auto a = cube();
    auto f = minimal_resolution(residue_field(a), 10);
    CHECK(f.ranks == std::vector<std::size_t>(11, 1));
    CHECK(is_minimal(f));
    CHECK(is_exact(f));
    auto period = detect_periodicity(f);
    REQUIRE(period);
    CHECK(*period == 2);
}

TEST_CASE("resolution of R over S for a pair (x,y) alternates x and y") {
    auto s = cube();
    auto [r, surj] = quotient_by_element(s, s->element("x^2"));
    auto m = inflate(free_module(r, 1), surj);
    auto f = minimal_resolution(m, 8);
    CHECK(f.ranks == std::vector<std::size_t>(9, 1));
    // differentials alternate between (x^2) and its partner (x), up to unit
    for (std::size_t i = 1; i <= 8; ++i) {
        auto e = f.d(i).at(0, 0);
        auto expect = (i % 2 == 1) ? s->element("x^2") : s->element("x");
        CHECK(principal_ideal(e).space == principal_ideal(expect).space);
    }
    auto period = detect_periodicity(f);
    REQUIRE(period);
    CHECK(*period == 2);
}

TEST_CASE("k over k[y,z]/(y,z)^2 has Betti numbers 2^n") {
    auto r = squarezero2();
    auto t = betti_table(residue_field(r), 10, "k");
    REQUIRE(t.betti.size() == 11);
    for (std::size_t n = 0; n <= 10; ++n) CHECK(t.betti[n] == (std::size_t{1} << n));
    CHECK(!t.pd_finite);
}

TEST_CASE("k over fatpoint S has Betti numbers 2^{n+1} - 1") {
    auto s = fatpoint();
    auto t = betti_table(residue_field(s), 8, "k");
    REQUIRE(t.betti.size() == 9);
    for (std::size_t n = 0; n <= 8; ++n)
        CHECK(t.betti[n] == (std::size_t{2} << n) - 1);
}

TEST_CASE("minimality and exactness invariants on assorted fixtures") {
    auto s = fatpoint();
    ModulePresentation p{s, 2, {{s->element("x"), s->element("y")},
                                {s->element("z"), s->element("0")}}};
    auto m = realize(p);
    auto f = minimal_resolution(m, 4);
    CHECK(is_complex(f));
    CHECK(is_minimal(f));
    CHECK(is_exact(f));
}

TEST_CASE("complexity estimates on the closed forms") {
    BettiTable bounded{"k", std::vector<std::size_t>(11, 1), false};
    CHECK(complexity_estimate(bounded).growth == GrowthClass::bounded);

    BettiTable expo{"k", {}, false};
    for (std::size_t n = 0; n <= 10; ++n) expo.betti.push_back(std::size_t{1} << n);
    CHECK(complexity_estimate(expo).growth == GrowthClass::exponential);

    BettiTable finite{"M", {1, 0, 0, 0, 0, 0, 0}, true};
    CHECK(complexity_estimate(finite).growth == GrowthClass::zero_finite_pd);

    BettiTable poly{"M", {}, false};
    for (std::size_t n = 0; n <= 12; ++n) poly.betti.push_back((n + 1) * (n + 2) / 2);
    auto est = complexity_estimate(poly);
    CHECK(est.growth == GrowthClass::polynomial);
    CHECK(est.degree == doctest::Approx(2.0).epsilon(0.35));

    CHECK_THROWS_AS(complexity_estimate(BettiTable{"M", {1, 2, 3}, false}), TableTooShort);
}

TEST_CASE("no periodicity when ranks grow") {
    auto r = squarezero2();
    auto f = minimal_resolution(residue_field(r), 6);
    CHECK(!detect_periodicity(f));
}

TEST_CASE("realize round trip through the first syzygy") {
    auto s = fatpoint();
    auto m = realize(ModulePresentation{s, 1, {{s->element("x")}}});
    auto f = minimal_resolution(m, 1);
    // presentation read off from the resolution: rank b0, relations = d1
    ModulePresentation p{s, f.ranks[0], {}};
    for (std::size_t c = 0; c < f.d(1).cols; ++c) {
        std::vector<AlgElement> col;
        for (std::size_t r = 0; r < f.d(1).rows; ++r) col.push_back(f.d(1).at(r, c));
        p.columns.push_back(col);
    }
    auto again = realize(p);
    REQUIRE(again.dim == m.dim);
    for (std::size_t i = 0; i < s->dim(); ++i) {
        std::uint64_t t1 = 0, t2 = 0;
        for (std::size_t j = 0; j < m.dim; ++j) {
            t1 += m.action[i](j, j);
            t2 += again.action[i](j, j);
        }
        CHECK(t1 % s->prime() == t2 % s->prime());
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ezd/algebra.hpp"

using namespace ezd;

namespace {

AlgebraPtr cube() { return from_presentation({"x"}, {"x^3"}, 32003); }
AlgebraPtr xquartic() { return from_presentation({"x"}, {"x^4"}, 32003); }
AlgebraPtr fatpoint() {
    return from_presentation({"x", "y", "z"}, {"x^2", "y^2", "z^2", "y*z"}, 32003);
}
AlgebraPtr noembdim() {
    return from_presentation(
        {"V", "X", "Y", "Z"},
        {"V^2", "Z^2", "X*Y", "V*X + X*Z", "V*Y + Y*Z", "V*X + Y^2", "V*Y - X^2"}, 32003);
}

}  // namespace

TEST_CASE("from_presentation basics") {
    auto s = cube();
    CHECK(s->dim() == 3);
    CHECK(s->basis[0] == Monomial{0});

    auto f = fatpoint();
    CHECK(f->dim() == 6);

    auto n = noembdim();
    CHECK(n->dim() == 8);
    CHECK(n->nilpotency == 3);
}

TEST_CASE("infinite dimensional input rejected") {
    CHECK_THROWS_AS(from_presentation({"x", "y"}, {"x^2"}, 32003), InfiniteDimensional);
}

TEST_CASE("element arithmetic and multiplication matrices") {
    auto s = cube();
    auto x = s->element("x");
    auto x2 = s->element("x^2");
    CHECK(s->mul(x, x) == x2);
    CHECK(s->mul(x, x2).is_zero());
    CHECK(s->mul(s->one(), x) == x);
    // in noembdim, v*v = 0 since V^2 is a relation
    auto n = noembdim();
    auto v = n->element("V");
    CHECK(n->mul(v, v).is_zero());
}

TEST_CASE("annihilator") {
    auto s = cube();
    CHECK(annihilator(s->zero()).dim() == 3);
    CHECK(annihilator(s->one()).dim() == 0);
    // Ann(x^2) = (x) = span{x, x^2}
    auto ann = annihilator(s->element("x^2"));
    CHECK(ann.dim() == 2);
    CHECK(ann.space == principal_ideal(s->element("x")).space);
}

TEST_CASE("rank-nullity: dim (x) + dim Ann(x) = dim S") {
    for (auto s : {cube(), fatpoint(), noembdim()}) {
        for (std::size_t i = 0; i < s->dim(); ++i) {
            auto x = s->element(Matrix::identity(s->dim(), s->prime()).column(i));
            CHECK(principal_ideal(x).dim() + annihilator(x).dim() == s->dim());
        }
    }
}

TEST_CASE("principal generator") {
    auto s = cube();
    auto zero_ideal = IdealSubspace{s, Subspace(s->dim(), s->prime())};
    auto g0 = principal_generator(zero_ideal);
    REQUIRE(g0);
    CHECK(g0->is_zero());

    auto gx = principal_generator(principal_ideal(s->element("x")));
    REQUIRE(gx);
    CHECK(principal_ideal(*gx).space == principal_ideal(s->element("x")).space);

    // m in k[y,z]/(y,z)^2 needs two generators
    auto sq = from_presentation({"y", "z"}, {"y^2", "y*z", "z^2"}, 32003);
    CHECK(!principal_generator(IdealSubspace{sq, sq->m_subspace()}));
}

TEST_CASE("exact zero-divisor pairs on the paper fixtures") {
    auto s = cube();
    auto r1 = exact_zero_divisor_partner(s->element("x^2"));
    REQUIRE(r1.ok());
    CHECK(principal_ideal(*r1.partner).space == principal_ideal(s->element("x")).space);
    auto r2 = exact_zero_divisor_partner(s->element("x"));
    REQUIRE(r2.ok());
    CHECK(principal_ideal(*r2.partner).space == principal_ideal(s->element("x^2")).space);

    auto q = xquartic();
    auto r3 = exact_zero_divisor_partner(q->element("x^2"));
    REQUIRE(r3.ok());
    CHECK(principal_ideal(*r3.partner).space == principal_ideal(q->element("x^2")).space);

    auto f = fatpoint();
    auto r4 = exact_zero_divisor_partner(f->element("x"));
    REQUIRE(r4.ok());
    CHECK(principal_ideal(*r4.partner).space == principal_ideal(f->element("x")).space);

    auto n = noembdim();
    auto r5 = exact_zero_divisor_partner(n->element("V"));
    REQUIRE(r5.ok());
    CHECK(principal_ideal(*r5.partner).space == principal_ideal(n->element("V")).space);
}

TEST_CASE("exact zero-divisor failures") {
    auto s = cube();
    CHECK(exact_zero_divisor_partner(s->zero()).failure == EzdFailure::zero_element);
    CHECK(exact_zero_divisor_partner(s->one()).failure == EzdFailure::not_in_maximal_ideal);
    // in k[y,z]/(y,z)^2 the annihilator of y is all of m, not principal
    auto sq = from_presentation({"y", "z"}, {"y^2", "y*z", "z^2"}, 32003);
    CHECK(exact_zero_divisor_partner(sq->element("y")).failure ==
          EzdFailure::annihilator_not_principal);
}

TEST_CASE("partner symmetry: partner(partner(x)) generates (x)") {
    for (auto [alg, name] : {std::pair{cube(), "x"}, {fatpoint(), "x"}, {noembdim(), "V"}}) {
        auto x = alg->element(name);
        auto r = exact_zero_divisor_partner(x);
        REQUIRE(r.ok());
        auto back = exact_zero_divisor_partner(*r.partner);
        REQUIRE(back.ok());
        CHECK(principal_ideal(*back.partner).space == principal_ideal(x).space);
    }
}

TEST_CASE("minimal generator gate") {
    auto s = cube();
    CHECK(s->is_minimal_generator(s->element("x")));
    CHECK(!s->is_minimal_generator(s->element("x^2")));  // x^2 in m^2
    CHECK(!s->is_minimal_generator(s->one()));
    CHECK(!s->is_minimal_generator(s->zero()));
}

TEST_CASE("quotient by element") {
    auto s = cube();
    auto [r, surj] = quotient_by_element(s, s->element("x^2"));
    CHECK(r->dim() == 2);  // k[x]/(x^2)
    // pi o sigma = id
    CHECK(surj.projection * surj.section == Matrix::identity(2, 32003));
    // kernel of pi = (x^2)
    CHECK(Subspace(kernel_basis(surj.projection)) ==
          principal_ideal(s->element("x^2")).space);
    // pi is multiplicative on all basis pairs
    for (std::size_t i = 0; i < s->dim(); ++i)
        for (std::size_t j = 0; j < s->dim(); ++j) {
            auto bi = s->element(Matrix::identity(3, 32003).column(i));
            auto bj = s->element(Matrix::identity(3, 32003).column(j));
            CHECK(surj.project(s->mul(bi, bj)) ==
                  r->mul(surj.project(bi), surj.project(bj)));
        }

    auto f = fatpoint();
    auto [rf, fsurj] = quotient_by_element(f, f->element("x"));
    CHECK(rf->dim() == 3);  // k[y,z]/(y,z)^2

    auto n = noembdim();
    auto [rn, nsurj] = quotient_by_element(n, n->element("V"));
    CHECK(rn->dim() == 4);
    CHECK(n->dim() - principal_ideal(n->element("V")).dim() == rn->dim());

    CHECK_THROWS(quotient_by_element(s, s->zero()));
}

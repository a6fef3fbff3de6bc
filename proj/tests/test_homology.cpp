#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ezd/homology.hpp"

using namespace ezd;

namespace {

AlgebraPtr cube() { return from_presentation({"x"}, {"x^3"}, 32003); }
AlgebraPtr fatpoint() {
    return from_presentation({"x", "y", "z"}, {"x^2", "y^2", "z^2", "y*z"}, 32003);
}
AlgebraPtr noembdim() {
    return from_presentation(
        {"V", "X", "Y", "Z"},
        {"V^2", "Z^2", "X*Y", "V*X + X*Z", "V*Y + Y*Z", "V*X + Y^2", "V*Y - X^2"}, 32003);
}

// Small random module: cokernel of a rank x cols matrix with entries drawn
// from {0} and the non-unit basis monomials.
ModuleRep random_module(const AlgebraPtr& a, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> rank_d(1, 2), cols_d(0, 3),
        entry_d(0, a->dim() - 1);
    ModulePresentation p;
    p.alg = a;
    p.rank = rank_d(rng);
    std::size_t cols = cols_d(rng);
    for (std::size_t c = 0; c < cols; ++c) {
        std::vector<AlgElement> col;
        for (std::size_t r = 0; r < p.rank; ++r) {
            std::size_t pick = entry_d(rng);
            if (pick == 0) {
                col.push_back(a->zero());
            } else {
                Matrix v(a->dim(), 1, a->prime());
                v(pick, 0) = 1;
                col.push_back(a->element(v));
            }
        }
        p.columns.push_back(col);
    }
    return realize(p);
}

}  // namespace

TEST_CASE("Tor of a free module vanishes in positive degrees") {
    auto a = fatpoint();
    auto f = free_module(a, 2);
    auto n = residue_field(a);
    auto t = tor_dims(f, n, 0, 4);
    CHECK(t.at(0) == 2);  // F (x) k = k^2
    for (std::size_t i = 1; i <= 4; ++i) CHECK(t.at(i) == 0);
    auto e = ext_dims(f, n, 0, 4);
    CHECK(e.at(0) == 2);
    for (std::size_t i = 1; i <= 4; ++i) CHECK(e.at(i) == 0);
}

TEST_CASE("Tor_0 and Ext^0 match tensor and hom dimensions") {
    auto a = cube();
    auto m = realize([&] {
        ModulePresentation p;
        p.alg = a;
        p.rank = 1;
        p.columns = {{a->element("x^2")}};
        return p;
    }());
    auto n = residue_field(a);
    CHECK(tor_dims(m, n, 0, 0).at(0) == tensor(m, n).dim);
    CHECK(ext_dims(m, n, 0, 0).at(0) == hom(m, n).dim);
}

TEST_CASE("dim Tor^S_q(S/(x^2), k) = 1 over k[x]/(x^3) for q <= 8") {
    auto s = cube();
    ModulePresentation p;
    p.alg = s;
    p.rank = 1;
    p.columns = {{s->element("x^2")}};
    auto m = realize(p);
    auto t = tor_dims(m, residue_field(s), 0, 8);
    for (std::size_t q = 0; q <= 8; ++q) CHECK(t.at(q) == 1);
}

TEST_CASE("Tor is symmetric in its arguments at the dimension level") {
    std::mt19937_64 rng(7);
    for (auto a : {cube(), fatpoint()}) {
        for (int trial = 0; trial < 3; ++trial) {
            auto m = random_module(a, rng);
            auto n = random_module(a, rng);
            auto mn = tor_dims(m, n, 0, 4);
            auto nm = tor_dims(n, m, 0, 4);
            CHECK(mn.dims == nm.dims);
        }
    }
}

TEST_CASE("three Betti routes agree: resolution ranks, Tor(M,k), Ext(M,k)") {
    std::mt19937_64 rng(11);
    for (auto a : {cube(), fatpoint(), noembdim()}) {
        auto k = residue_field(a);
        auto m = random_module(a, rng);
        if (m.is_zero()) continue;
        auto b = betti_table(m, 5);
        auto t = tor_dims(m, k, 0, 5);
        auto e = ext_dims(m, k, 0, 5);
        for (std::size_t i = 0; i <= 5; ++i) {
            CHECK(b.betti[i] == t.at(i));
            CHECK(b.betti[i] == e.at(i));
        }
    }
}

TEST_CASE("Ext^q_S(R,N) has dim N when yN = 0") {
    // S = k[x]/(x^3), pair (x^2, x), N = k over R: xk = 0
    auto s = cube();
    auto zd = make_setup(s, s->element("x^2"));
    auto n = inflate(residue_field(zd.r), zd.surj);
    auto r_mod = inflate(free_module(zd.r, 1), zd.surj);
    auto e = ext_dims(r_mod, n, 0, 6);
    for (std::size_t q = 0; q <= 6; ++q) CHECK(e.at(q) == 1);
}

TEST_CASE("change-of-rings report: N = k gives all dims 1") {
    for (auto [alg, x] : {std::pair{cube(), std::string("x^2")},
                          std::pair{fatpoint(), std::string("x")},
                          std::pair{noembdim(), std::string("V")}}) {
        auto zd = make_setup(alg, alg->element(x));
        auto rep = verify_change_of_rings(zd, residue_field(zd.r), 6, "k");
        CHECK(rep.overall());
        for (auto& row : rep.rows) CHECK(row.expected == "1");
    }
}

TEST_CASE("change-of-rings on N = R itself") {
    auto zd = make_setup(noembdim(), noembdim()->element("V"));
    auto rep = verify_change_of_rings(zd, free_module(zd.r, 1), 6, "R");
    CHECK(rep.overall());
}

TEST_CASE("change-of-rings holds on 20 random modules over each fixture") {
    std::mt19937_64 rng(2026);
    for (auto [alg, x] : {std::pair{cube(), std::string("x^2")},
                          std::pair{fatpoint(), std::string("x")},
                          std::pair{noembdim(), std::string("V")}}) {
        auto zd = make_setup(alg, alg->element(x));
        int done = 0;
        while (done < 20) {
            auto n = random_module(zd.r, rng);
            if (n.is_zero()) continue;
            auto rep = verify_change_of_rings(zd, n, 6, "random");
            CHECK(rep.overall());
            ++done;
        }
    }
}

TEST_CASE("make_setup rejects non-exact-zero-divisors") {
    auto s = fatpoint();
    CHECK_THROWS_AS(make_setup(s, s->element("y")), HypothesisFails);
}

TEST_CASE("vanishing transfer: M = R^2, N = k over cube with pair (x^2, x)") {
    auto s = cube();
    auto zd = make_setup(s, s->element("x^2"));
    auto rep =
        verify_vanishing_transfer(zd, free_module(zd.r, 2), residue_field(zd.r), 9, "R^2,k");
    CHECK(rep.hypothesis_ok);
    CHECK(rep.overall());
    // dim Tor^S_i = dim(M (x) N) = 2 for 1 <= i <= 8
    for (auto& row : rep.rows)
        if (row.index.rfind("Tor^S_", 0) == 0 && row.index.find("nonzero") == std::string::npos)
            CHECK(row.computed == "2");
}

TEST_CASE("vanishing transfer over the 4-variable fixture") {
    auto s = noembdim();
    auto zd = make_setup(s, s->element("V"));
    auto rep =
        verify_vanishing_transfer(zd, free_module(zd.r, 1), residue_field(zd.r), 6, "R,k");
    CHECK(rep.overall());
}

TEST_CASE("vanishing transfer: zero module passes vacuously") {
    auto s = cube();
    auto zd = make_setup(s, s->element("x^2"));
    auto rep =
        verify_vanishing_transfer(zd, free_module(zd.r, 0), residue_field(zd.r), 4, "0,k");
    CHECK(rep.overall());
}

TEST_CASE("vanishing transfer flags a failed hypothesis window") {
    // M = N = k over R = k[x]/(x^2): Tor^R_i(k,k) = k for all i, so the
    // vanishing window cannot be certified.
    auto s = cube();
    auto zd = make_setup(s, s->element("x^2"));
    auto rep = verify_vanishing_transfer(zd, residue_field(zd.r), residue_field(zd.r), 4, "k,k");
    CHECK(!rep.hypothesis_ok);
    CHECK(!rep.overall());
}

TEST_CASE("nonvanishing: M = N = k over fatpoint with pair (x,x)") {
    auto s = fatpoint();
    auto zd = make_setup(s, s->element("x"));
    auto rep = verify_nonvanishing(zd, residue_field(zd.r), residue_field(zd.r), 8, "k,k");
    CHECK(rep.hypothesis_ok);
    CHECK(rep.overall());
}

TEST_CASE("nonvanishing: M = N = k over the 4-variable fixture with pair (v,v)") {
    auto s = noembdim();
    auto zd = make_setup(s, s->element("V"));
    auto rep = verify_nonvanishing(zd, residue_field(zd.r), residue_field(zd.r), 6, "k,k");
    CHECK(rep.overall());
}

TEST_CASE("nonvanishing gate rejects x^2 in m^2 over cube") {
    auto s = cube();
    auto zd = make_setup(s, s->element("x^2"));
    auto rep = verify_nonvanishing(zd, residue_field(zd.r), residue_field(zd.r), 4, "k,k");
    CHECK(!rep.hypothesis_ok);
    CHECK(!rep.overall());
}

TEST_CASE("betti bounds and summation equality over fatpoint") {
    auto s = fatpoint();
    auto zd = make_setup(s, s->element("x"));
    auto k = residue_field(zd.r);
    auto rep = verify_betti_bounds(zd, k, k, 8, "k,k");
    CHECK(rep.overall());
    // frozen values: beta^R_n = 2^n, beta^S_n = 2^{n+1} - 1
    std::size_t n = 0;
    for (auto& row : rep.rows) {
        if (row.index.rfind("beta^S_", 0) != 0) continue;
        CHECK(row.computed == std::to_string((std::size_t{2} << n) - 1));
        ++n;
    }
    CHECK(n == 9);
}

TEST_CASE("betti bounds over cube: upper bound strict for n >= 1") {
    auto s = cube();
    auto zd = make_setup(s, s->element("x^2"));
    auto k = residue_field(zd.r);
    auto rep = verify_betti_bounds(zd, k, k, 6, "k,k");
    CHECK(rep.overall());
    // beta^S_n = beta^R_n = 1 for all n; sum bound 1 <= n+1 is strict from n=1
    auto bs = tor_dims(inflate(k, zd.surj), residue_field(s), 0, 6);
    auto br = tor_dims(k, residue_field(zd.r), 0, 6);
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(bs.at(n) == 1);
        CHECK(br.at(n) == 1);
    }
}

TEST_CASE("betti bounds: free M degenerates the lower bound") {
    auto s = noembdim();
    auto zd = make_setup(s, s->element("V"));
    auto rep = verify_betti_bounds(zd, free_module(zd.r, 1), residue_field(zd.r), 4, "R,k");
    CHECK(rep.overall());
}

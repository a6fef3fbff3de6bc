// Acceptance gate: one pass/fail line per criterion. argv[1] is the path
// to the ezd CLI binary, exercised directly by the first two criteria.
#include <array>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <random>
#include <string>

#include "ezd/homology.hpp"
#include "ezd/io.hpp"
#include "ezd/lifting.hpp"
#include "ezd/suites.hpp"

using namespace ezd;

namespace {

int failures = 0;

void criterion(int n, const std::string& what, bool ok) {
    std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << " - " << what
              << std::endl;
    if (!ok) ++failures;
}

struct CmdResult {
    int status = -1;
    std::string out;
};

CmdResult run(const std::string& cmd) {
    CmdResult r;
    FILE* p = popen((cmd + " 2>&1").c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
    r.status = pclose(p);
    return r;
}

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
AlgebraPtr squarezero2() { return from_presentation({"y", "z"}, {"y^2", "y*z", "z^2"}, 32003); }

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

bool change_of_rings_family(const AlgebraPtr& s, const std::string& x) {
    auto zd = make_setup(s, s->element(x));
    if (!verify_change_of_rings(zd, residue_field(zd.r), 6, "k").overall()) return false;
    std::mt19937_64 rng(20260826);
    for (int i = 0; i < 20; ++i)
        if (!verify_change_of_rings(zd, random_module(zd.r, rng), 6, "random").overall())
            return false;
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: acceptance <path-to-ezd-cli>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string fix = EZD_FIXTURES_DIR;

    {
        auto r = run(cli + " ezd-check " + fix + "/noembdim.ring --element V");
        criterion(1, "CLI finds the pair (V,V) on the 4-variable fixture",
                  r.status == 0 && r.out.find("partner V") != std::string::npos);
    }
    {
        auto a = run(cli + " ezd-check " + fix + "/cube.ring --element x^2");
        auto b = run(cli + " ezd-check " + fix + "/cube.ring --element x");
        criterion(2, "CLI partners on k[x]/(x^3): x^2 <-> x",
                  a.status == 0 && a.out.find("partner x\n") != std::string::npos &&
                      b.status == 0 && b.out.find("partner x^2") != std::string::npos);
    }
    {
        bool ok = change_of_rings_family(cube(), "x^2") && change_of_rings_family(fatpoint(), "x") &&
                  change_of_rings_family(noembdim(), "V");
        criterion(3, "change-of-rings dimensions, k plus 20 random modules per fixture, q <= 6", ok);
    }
    {
        auto b2 = betti_table(residue_field(squarezero2()), 10, "k");
        bool ok = b2.betti.size() == 11;
        for (std::size_t n = 0; ok && n <= 10; ++n) ok = b2.betti[n] == (std::size_t{1} << n);
        auto s3 = cube();
        auto zd = make_setup(s3, s3->element("x^2"));
        for (auto* a : {&s3, &zd.r})
            for (auto b : betti_table(residue_field(*a), 10, "k").betti) ok = ok && b == 1;
        criterion(4, "Betti closed forms: 2^n over the square-zero ring, all 1 on k[x]/(x^3)", ok);
    }
    {
        auto zd = make_setup(fatpoint(), fatpoint()->element("x"));
        bool ok =
            verify_betti_bounds(zd, residue_field(zd.r), residue_field(zd.r), 8, "k,k").overall();
        auto bs = betti_table(residue_field(zd.s), 8, "k");
        for (std::size_t n = 0; ok && n <= 8; ++n)
            ok = bs.betti[n] == (std::size_t{1} << (n + 1)) - 1;
        criterion(5, "Betti sandwich and equality beta_n = 2^(n+1)-1 on the fat point, n <= 8", ok);
    }
    {
        auto zd = make_setup(cube(), cube()->element("x^2"));
        bool ok = verify_vanishing_transfer(zd, free_module(zd.r, 2), residue_field(zd.r), 9,
                                            "R^2,k")
                      .overall();
        criterion(6, "vanishing transfer: Tor/Ext over S constant in degrees 1..8", ok);
    }
    {
        auto fz = make_setup(fatpoint(), fatpoint()->element("x"));
        bool ok =
            verify_nonvanishing(fz, residue_field(fz.r), residue_field(fz.r), 8, "k,k").overall();
        auto nz = make_setup(noembdim(), noembdim()->element("V"));
        ok = ok &&
             verify_nonvanishing(nz, residue_field(nz.r), residue_field(nz.r), 6, "k,k").overall();
        criterion(7, "non-vanishing of Tor(k,k): fat point to degree 8, 4-variable fixture to 6",
                  ok);
    }
    {
        auto zd = make_setup(xquartic(), xquartic()->element("x^2"));
        auto k = residue_field(zd.r);
        auto res_k = lift_module(k, zd, 8);
        bool ok = res_k.outcome == LiftOutcome::obstructed && !res_k.obstruction.is_zero;
        // oracle: the indecomposables over k[x]/(x^4) are k[x]/(x^i); none lifts k
        for (unsigned i = 1; ok && i <= 4; ++i) {
            ModulePresentation p;
            p.alg = zd.s;
            p.rank = 1;
            if (i < 4) p.columns = {{zd.s->element("x^" + std::to_string(i))}};
            ok = !verify_lift(realize(p), k, zd.surj, 6, "candidate").overall();
        }
        for (std::size_t rk : {std::size_t{1}, std::size_t{2}}) {
            auto res = lift_module(free_module(zd.r, rk), zd, 8);
            ok = ok && res.outcome == LiftOutcome::lifted && res.certificate_all_degrees &&
                 res.lifted_module->dim == rk * zd.s->dim() &&
                 verify_lift(*res.lifted_module, free_module(zd.r, rk), zd.surj, 8, "M'").overall();
        }
        criterion(8, "lifting dichotomy on k[x]/(x^4): k obstructed, R and R^2 lifted", ok);
    }
    {
        SuiteOptions opt;
        opt.seed = 1;
        opt.random_count = 3;
        auto s = noembdim();
        bool ok = true;
        for (auto& r : run_suites(s, s->element("V"), "all", opt)) ok = ok && r.overall();
        criterion(9, "property suites all pass on the 4-variable fixture", ok);
    }
    return failures == 0 ? 0 : 1;
}

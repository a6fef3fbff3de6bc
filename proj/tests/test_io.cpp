#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ezd/io.hpp"

using namespace ezd;

namespace {

const char* kFixturesDir = EZD_FIXTURES_DIR;

std::string fixture(const std::string& name) {
    return read_text_file(std::string(kFixturesDir) + "/" + name);
}

}  // namespace

TEST_CASE("cube fixture parses to a dim-3 algebra") {
    auto rf = parse_ring_file(fixture("cube.ring"));
    CHECK(rf.p == 32003);
    CHECK(rf.vars == std::vector<std::string>{"x"});
    CHECK(rf.relations == std::vector<std::string>{"x^3"});
    auto a = ring_from_file(rf);
    CHECK(a->dim() == 3);
}

TEST_CASE("noembdim fixture parses to its dim-8 algebra") {
    auto a = ring_from_file(parse_ring_file(fixture("noembdim.ring")));
    CHECK(a->dim() == 8);
    CHECK(a->nilpotency == 3);
    auto check = exact_zero_divisor_partner(a->element("V"));
    REQUIRE(check.ok());
    CHECK(*check.partner == a->element("V"));
}

TEST_CASE("every bundled ring fixture round-trips to an identical algebra") {
    for (auto name : {"cube.ring", "xquartic.ring", "fatpoint.ring", "noembdim.ring",
                      "squarezero_2.ring", "squarezero_3.ring"}) {
        auto rf = parse_ring_file(fixture(name));
        auto rf2 = parse_ring_file(print_ring_file(rf));
        auto a = ring_from_file(rf);
        auto b = ring_from_file(rf2);
        CHECK(a->dim() == b->dim());
        CHECK(a->gb == b->gb);
        CHECK(a->basis == b->basis);
        for (std::size_t i = 0; i < a->dim(); ++i) CHECK(a->mult[i] == b->mult[i]);
    }
}

TEST_CASE("prime override changes the characteristic") {
    auto rf = parse_ring_file(fixture("cube.ring"));
    auto a = ring_from_file(rf, 101);
    CHECK(a->prime() == 101);
    CHECK(a->dim() == 3);
}

TEST_CASE("module file parses and realizes") {
    auto a = ring_from_file(parse_ring_file(fixture("cube.ring")));
    auto mf = parse_module_file(fixture("k.mod"));
    CHECK(mf.rank == 1);
    auto m = realize(module_from_file(mf, a));
    CHECK(m.dim == 1);  // coker(x) over k[x]/(x^3) is k
}

TEST_CASE("module file round-trips") {
    auto a = ring_from_file(parse_ring_file(fixture("fatpoint.ring")));
    ModuleFile mf;
    mf.rank = 2;
    mf.columns = {{"x", "y + z"}, {"0", "x*y"}};
    auto p = module_from_file(mf, a);
    auto mf2 = parse_module_file(print_module_file(module_file_of(p)));
    auto p2 = module_from_file(mf2, a);
    REQUIRE(p2.rank == p.rank);
    REQUIRE(p2.columns.size() == p.columns.size());
    for (std::size_t c = 0; c < p.columns.size(); ++c)
        for (std::size_t r = 0; r < p.rank; ++r) CHECK(p2.columns[c][r] == p.columns[c][r]);
}

TEST_CASE("malformed ring files raise line-numbered errors") {
    auto expect_line = [](const std::string& text, int line) {
        try {
            parse_ring_file(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("field p=abc\nvars x\nideal\nend\n", 1);
    expect_line("field p=7\nvars\nideal\nend\n", 2);
    expect_line("field p=7\nvars x\norder grlex\nideal\nend\n", 3);
    expect_line("field p=7\nvars x\nbogus\nideal\nend\n", 3);
    expect_line("field p=7\nvars x\nideal\nx^2\n", 4);  // unterminated block
}

TEST_CASE("malformed module files raise line-numbered errors") {
    auto expect_line = [](const std::string& text, int line) {
        try {
            parse_module_file(text);
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line == line);
        }
    };
    expect_line("module rank=z\nrelations\nend\n", 1);
    expect_line("relations\nend\n", 1);
    expect_line("module rank=2\nrelations\n[x]\nend\n", 3);     // wrong width
    expect_line("module rank=1\nrelations\nx\nend\n", 3);       // missing brackets
}

TEST_CASE("bad polynomial inside a module file is rejected by the ring") {
    auto a = ring_from_file(parse_ring_file(fixture("cube.ring")));
    ModuleFile mf;
    mf.rank = 1;
    mf.columns = {{"q^2"}};
    CHECK_THROWS_AS(module_from_file(mf, a), ParseError);
}

TEST_CASE("random presentations are deterministic and within bounds") {
    auto a = ring_from_file(parse_ring_file(fixture("fatpoint.ring")));
    std::mt19937_64 rng1(42), rng2(42);
    for (int t = 0; t < 10; ++t) {
        auto p1 = random_presentation(a, rng1);
        auto p2 = random_presentation(a, rng2);
        CHECK(p1.rank == p2.rank);
        CHECK(p1.rank >= 1);
        CHECK(p1.rank <= 3);
        CHECK(p1.columns.size() <= 4);
        REQUIRE(p1.columns.size() == p2.columns.size());
        for (std::size_t c = 0; c < p1.columns.size(); ++c)
            for (std::size_t r = 0; r < p1.rank; ++r) {
                CHECK(p1.columns[c][r] == p2.columns[c][r]);
                // entries are 0 or a non-unit basis monomial
                CHECK(a->in_m(p1.columns[c][r]));
            }
    }
}

#include <CLI11.hpp>
#include <iostream>

#include "ezd/io.hpp"
#include "ezd/lifting.hpp"
#include "ezd/suites.hpp"

using namespace ezd;

namespace {

struct GlobalOpts {
    std::string format = "text";
    std::uint32_t prime = 0;  // 0 = use the ring file's characteristic

    ReportFormat report_format() const {
        return format == "csv" ? ReportFormat::csv : ReportFormat::text;
    }
};

AlgebraPtr load_ring(const std::string& path, const GlobalOpts& g) {
    return ring_from_file(parse_ring_file(read_text_file(path)), g.prime);
}

ModuleRep load_module(const std::string& path, const AlgebraPtr& alg) {
    return realize(module_from_file(parse_module_file(read_text_file(path)), alg));
}

int run_ring_info(const std::string& path, const GlobalOpts& g) {
    auto a = load_ring(path, g);
    if (g.format == "csv") {
        std::cout << "key,value\n";
        std::cout << "dimension," << a->dim() << '\n';
        std::cout << "nilpotency," << a->nilpotency << '\n';
        std::cout << "prime," << a->prime() << '\n';
        for (auto& b : a->basis) std::cout << "basis," << monomial_to_string(b, a->ctx) << '\n';
        return 0;
    }
    std::cout << "dimension: " << a->dim() << '\n';
    std::cout << "characteristic: " << a->prime() << '\n';
    std::cout << "m-nilpotency index: " << a->nilpotency << '\n';
    std::cout << "basis:";
    for (auto& b : a->basis) std::cout << ' ' << monomial_to_string(b, a->ctx);
    std::cout << '\n';
    return 0;
}

void print_check(const AlgebraPtr& a, const std::string& text, const EzdCheck& c) {
    if (c.ok())
        std::cout << text << ": exact zero-divisor, partner " << a->to_string(*c.partner)
                  << '\n';
    else
        std::cout << text << ": not an exact zero-divisor (" << to_string(c.failure) << ")\n";
}

int run_ezd_check(const std::string& path, const std::string& element, bool scan,
                  const GlobalOpts& g) {
    auto a = load_ring(path, g);
    bool any = false;
    if (!element.empty()) {
        auto c = exact_zero_divisor_partner(a->element(element));
        print_check(a, element, c);
        any = c.ok();
    }
    if (scan) {
        for (std::size_t i = 1; i < a->dim(); ++i) {
            Matrix v(a->dim(), 1, a->prime());
            v(i, 0) = 1;
            auto x = a->element(v);
            if (!a->is_minimal_generator(x)) continue;
            auto c = exact_zero_divisor_partner(x);
            print_check(a, a->to_string(x), c);
            if (c.ok()) any = true;
        }
    }
    return any ? 0 : 1;
}

int run_resolve(const std::string& path, const std::string& module_path, bool use_k,
                std::size_t n, const std::string& over_quotient, const GlobalOpts& g) {
    auto a = load_ring(path, g);
    AlgebraPtr working = a;
    std::optional<AlgebraSurjection> surj;
    if (!over_quotient.empty()) {
        auto q = quotient_by_element(a, a->element(over_quotient));
        working = q.quotient;
        surj = q.surj;
    }
    ModuleRep m = use_k ? residue_field(working) : load_module(module_path, working);
    auto f = minimal_resolution(m, n);
    auto b = betti_table(m, n, use_k ? "k" : module_path);
    if (g.format == "csv") {
        std::cout << "n,betti\n";
        for (std::size_t i = 0; i < b.betti.size(); ++i)
            std::cout << i << ',' << b.betti[i] << '\n';
    } else {
        std::cout << "betti:";
        for (auto v : b.betti) std::cout << ' ' << v;
        std::cout << '\n';
        if (b.pd_finite) std::cout << "projective dimension: finite\n";
    }
    auto period = detect_periodicity(f);
    if (g.format != "csv") {
        if (period)
            std::cout << "periodicity: " << *period << '\n';
        else
            std::cout << "periodicity: none detected\n";
        try {
            auto cx = complexity_estimate(b);
            std::cout << "growth: " << to_string(cx.growth);
            if (cx.growth == GrowthClass::polynomial) std::cout << " (degree " << cx.degree << ")";
            std::cout << " -- " << cx.note << '\n';
        } catch (const TableTooShort&) {
            std::cout << "growth: table too short to classify\n";
        }
    }
    return 0;
}

int run_tor_ext(bool is_tor, const std::string& path, const std::string& x,
                const std::string& m_path, const std::string& n_path, const std::string& range,
                const GlobalOpts& g) {
    auto s = load_ring(path, g);
    auto zd = make_setup(s, s->element(x));
    auto dots = range.find("..");
    if (dots == std::string::npos) throw std::invalid_argument("range must be <a>..<b>");
    std::size_t lo = std::stoul(range.substr(0, dots));
    std::size_t hi = std::stoul(range.substr(dots + 2));
    if (hi < lo) throw std::invalid_argument("range must be <a>..<b> with a <= b");

    ModuleRep m_r = load_module(m_path, zd.r);
    ModuleRep n_r = load_module(n_path, zd.r);
    auto over_r = is_tor ? tor_dims(m_r, n_r, lo, hi) : ext_dims(m_r, n_r, lo, hi);
    ModuleRep m_s = inflate(m_r, zd.surj);
    ModuleRep n_s = inflate(n_r, zd.surj);
    auto over_s = is_tor ? tor_dims(m_s, n_s, lo, hi) : ext_dims(m_s, n_s, lo, hi);

    const char* fn = is_tor ? "Tor" : "Ext";
    if (g.format == "csv") {
        std::cout << "ring,index,dim\n";
        for (std::size_t i = lo; i <= hi; ++i) std::cout << "R," << i << ',' << over_r.at(i) << '\n';
        for (std::size_t i = lo; i <= hi; ++i) std::cout << "S," << i << ',' << over_s.at(i) << '\n';
    } else {
        std::cout << fn << " over R = S/(" << x << "):";
        for (std::size_t i = lo; i <= hi; ++i) std::cout << ' ' << over_r.at(i);
        std::cout << '\n' << fn << " over S:";
        for (std::size_t i = lo; i <= hi; ++i) std::cout << ' ' << over_s.at(i);
        std::cout << '\n';
    }
    return 0;
}

int run_lift(const std::string& path, const std::string& x, const std::string& module_path,
             std::size_t n, const GlobalOpts& g) {
    auto s = load_ring(path, g);
    auto zd = make_setup(s, s->element(x));
    auto m = load_module(module_path, zd.r);
    auto res = lift_module(m, zd, n);
    if (res.outcome == LiftOutcome::obstructed) {
        std::cout << "obstructed: nonzero class in Ext^2(M,M)\n";
        std::cout << "class coordinates:";
        for (std::size_t i = 0; i < res.obstruction.coordinates.rows(); ++i)
            std::cout << ' ' << res.obstruction.coordinates(i, 0);
        std::cout << '\n';
        return 1;
    }
    if (res.outcome == LiftOutcome::horizon_inconclusive) {
        std::cout << "inconclusive: class vanishes but no homotopy within horizon " << n << '\n';
        return 1;
    }
    std::cout << "lifted: M' of dimension " << res.lifted_module->dim << " over S\n";
    std::cout << "certificate: "
              << (res.certificate_all_degrees ? "all degrees (periodic/terminating)"
                                              : "up to horizon " + std::to_string(n))
              << '\n';
    ModulePresentation pres;
    pres.alg = zd.s;
    pres.rank = res.lifted->ranks[0];
    for (std::size_t c = 0; c < res.lifted->d(1).cols; ++c) {
        std::vector<AlgElement> col;
        for (std::size_t r = 0; r < pres.rank; ++r) col.push_back(res.lifted->d(1).at(r, c));
        pres.columns.push_back(col);
    }
    std::cout << print_module_file(module_file_of(pres));
    Report ver = verify_lift(*res.lifted_module, m, zd.surj, n, module_path);
    std::cout << emit_report(ver, g.report_format());
    return ver.overall() ? 0 : 1;
}

int run_verify(const std::string& path, const std::string& x, const std::string& suite,
               std::uint64_t seed, std::size_t random_count, const GlobalOpts& g) {
    auto s = load_ring(path, g);
    SuiteOptions opt;
    opt.seed = seed;
    opt.random_count = random_count;
    auto reports = run_suites(s, s->element(x), suite, opt);
    std::cout << emit_reports(reports, g.report_format());
    bool ok = true;
    for (auto& r : reports)
        if (!r.overall()) ok = false;
    if (g.format != "csv") std::cout << (ok ? "ALL PASS" : "FAILURES PRESENT") << '\n';
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homological algebra engine for Artinian local algebras"};
    app.require_subcommand(1);
    GlobalOpts g;
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "csv"}));
    app.add_option("--prime", g.prime, "override the coefficient prime");

    std::string ring_path, element, module_path, n_path, x, range = "0..6", suite = "all";
    std::size_t n = 6;
    bool scan = false, use_k = false;
    std::string over_quotient;
    std::uint64_t seed = 1;
    std::size_t random_count = 0;

    auto* info = app.add_subcommand("ring-info", "dimension, basis and nilpotency");
    info->add_option("ring", ring_path)->required();

    auto* check = app.add_subcommand("ezd-check", "exact zero-divisor test");
    check->add_option("ring", ring_path)->required();
    check->add_option("--element", element);
    check->add_flag("--scan", scan, "try all minimal-generator basis directions");

    auto* resolve = app.add_subcommand("resolve", "minimal free resolution");
    resolve->add_option("ring", ring_path)->required();
    resolve->add_option("--module", module_path);
    resolve->add_flag("--residue-field", use_k);
    resolve->add_option("-n", n)->required();
    resolve->add_option("--over-quotient", over_quotient);

    auto* tor = app.add_subcommand("tor", "Tor profiles over S and S/(x)");
    auto* ext = app.add_subcommand("ext", "Ext profiles over S and S/(x)");
    for (auto* cmd : {tor, ext}) {
        cmd->add_option("ring", ring_path)->required();
        cmd->add_option("--x", x)->required();
        cmd->add_option("--m", module_path)->required();
        cmd->add_option("--n", n_path)->required();
        cmd->add_option("--range", range);
    }

    auto* lift = app.add_subcommand("lift", "lift a module along S -> S/(x)");
    lift->add_option("ring", ring_path)->required();
    lift->add_option("--x", x)->required();
    lift->add_option("--module", module_path)->required();
    lift->add_option("-n", n)->required();

    auto* verify = app.add_subcommand("verify", "verification scenario runner");
    verify->add_option("ring", ring_path)->required();
    verify->add_option("--x", x)->required();
    verify->add_option("--suite", suite)
        ->check(CLI::IsMember(
            {"lemma", "transfer", "nonvanishing", "betti", "lifting", "properties", "all"}));
    verify->add_option("--seed", seed);
    verify->add_option("--random", random_count);

    CLI11_PARSE(app, argc, argv);

    try {
        if (info->parsed()) return run_ring_info(ring_path, g);
        if (check->parsed()) {
            if (element.empty() && !scan) {
                std::cerr << "ezd-check needs --element or --scan\n";
                return 2;
            }
            return run_ezd_check(ring_path, element, scan, g);
        }
        if (resolve->parsed()) {
            if (module_path.empty() == !use_k) {
                std::cerr << "resolve needs exactly one of --module, --residue-field\n";
                return 2;
            }
            return run_resolve(ring_path, module_path, use_k, n, over_quotient, g);
        }
        if (tor->parsed() || ext->parsed())
            return run_tor_ext(tor->parsed(), ring_path, x, module_path, n_path, range, g);
        if (lift->parsed()) return run_lift(ring_path, x, module_path, n, g);
        if (verify->parsed()) return run_verify(ring_path, x, suite, seed, random_count, g);
    } catch (const ParseError& e) {
        std::cerr << "parse error at line " << e.line << ": " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

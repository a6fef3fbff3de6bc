#include "ezd/poly.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <sstream>

namespace ezd {

unsigned total_degree(const Monomial& m) {
    unsigned d = 0;
    for (auto e : m) d += e;
    return d;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += b[i];
    return r;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < a.size(); ++i) {
        assert(b[i] <= a[i]);
        r[i] -= b[i];
    }
    return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

MonomialOrder order_from_string(const std::string& s) {
    if (s == "degrevlex") return MonomialOrder::degrevlex;
    if (s == "lex") return MonomialOrder::lex;
    throw std::invalid_argument("unknown monomial order: " + s);
}

std::string order_to_string(MonomialOrder o) {
    return o == MonomialOrder::degrevlex ? "degrevlex" : "lex";
}

bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder o) {
    if (o == MonomialOrder::lex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    }
    unsigned da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    // degrevlex: smaller is the one with the larger last nonzero difference
    for (std::size_t i = a.size(); i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

Polynomial poly_normalize(std::vector<Term> terms, const PolyContext& ctx) {
    std::sort(terms.begin(), terms.end(), [&](const Term& s, const Term& t) {
        return monomial_less(t.mon, s.mon, ctx.order);
    });
    std::vector<Term> out;
    for (auto& t : terms) {
        std::uint32_t c = t.coeff % ctx.p;
        if (!out.empty() && out.back().mon == t.mon) {
            std::uint32_t v = out.back().coeff + c;
            out.back().coeff = v >= ctx.p ? v - ctx.p : v;
            if (out.back().coeff == 0) out.pop_back();
        } else if (c != 0) {
            out.push_back({c, t.mon});
        }
    }
    return {std::move(out)};
}

Polynomial poly_add(const Polynomial& a, const Polynomial& b, const PolyContext& ctx) {
    std::vector<Term> terms = a.terms;
    terms.insert(terms.end(), b.terms.begin(), b.terms.end());
    return poly_normalize(std::move(terms), ctx);
}

Polynomial poly_scale(const Polynomial& a, std::uint32_t c, const PolyContext& ctx) {
    c %= ctx.p;
    if (c == 0) return {};
    Polynomial r = a;
    for (auto& t : r.terms)
        t.coeff = static_cast<std::uint32_t>(static_cast<std::uint64_t>(t.coeff) * c % ctx.p);
    return r;
}

Polynomial poly_sub(const Polynomial& a, const Polynomial& b, const PolyContext& ctx) {
    return poly_add(a, poly_scale(b, ctx.p - 1, ctx), ctx);
}

Polynomial poly_mul_term(const Polynomial& a, const Term& t, const PolyContext& ctx) {
    Polynomial r;
    r.terms.reserve(a.terms.size());
    for (auto& s : a.terms)
        r.terms.push_back(
            {static_cast<std::uint32_t>(static_cast<std::uint64_t>(s.coeff) * t.coeff % ctx.p),
             monomial_mul(s.mon, t.mon)});
    return r;  // order and distinctness are preserved by a single term
}

Polynomial poly_mul(const Polynomial& a, const Polynomial& b, const PolyContext& ctx) {
    std::vector<Term> terms;
    for (auto& t : b.terms) {
        auto part = poly_mul_term(a, t, ctx);
        terms.insert(terms.end(), part.terms.begin(), part.terms.end());
    }
    return poly_normalize(std::move(terms), ctx);
}

Polynomial poly_from_monomial(const Monomial& m, const PolyContext& ctx) {
    (void)ctx;
    return {{{1, m}}};
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;
    int line;
    char peek() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        char c = peek();
        if (pos < s.size()) ++pos;
        return c;
    }
    [[noreturn]] void fail(const std::string& why) { throw ParseError(line, why); }
};

std::uint64_t lex_integer(Lexer& lx) {
    std::uint64_t v = 0;
    if (!std::isdigit(static_cast<unsigned char>(lx.peek()))) lx.fail("expected integer");
    while (std::isdigit(static_cast<unsigned char>(lx.peek()))) v = v * 10 + (lx.get() - '0');
    return v;
}

std::string lex_ident(Lexer& lx) {
    std::string id;
    char c = lx.peek();
    while (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
        id += lx.get();
        c = lx.pos < lx.s.size() ? lx.s[lx.pos] : '\0';  // idents are contiguous
    }
    if (id.empty()) lx.fail("expected variable name");
    return id;
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const PolyContext& ctx, int line) {
    Lexer lx{text, 0, line};
    std::vector<Term> terms;
    bool first = true;
    while (true) {
        char c = lx.peek();
        if (c == '\0') break;
        std::uint32_t sign = 1;
        if (c == '+' || c == '-') {
            lx.get();
            if (c == '-') sign = ctx.p - 1;
        } else if (!first) {
            lx.fail(std::string("unexpected character '") + c + "'");
        }
        first = false;
        // term: [coefficient] factor ('*' factor)*
        std::uint64_t coeff = 1;
        bool have_any = false;
        Monomial mon(ctx.nvars(), 0);
        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            coeff = lex_integer(lx) % ctx.p;
            have_any = true;
        }
        while (true) {
            char n = lx.peek();
            if (n == '*') {
                lx.get();
                n = lx.peek();
                if (!(std::isalpha(static_cast<unsigned char>(n)) || n == '_'))
                    lx.fail("expected variable after '*'");
            } else if (!(std::isalpha(static_cast<unsigned char>(n)) || n == '_')) {
                break;
            }
            std::string id = lex_ident(lx);
            auto it = std::find(ctx.vars.begin(), ctx.vars.end(), id);
            if (it == ctx.vars.end()) lx.fail("unknown variable '" + id + "'");
            unsigned e = 1;
            if (lx.peek() == '^') {
                lx.get();
                e = static_cast<unsigned>(lex_integer(lx));
            }
            mon[static_cast<std::size_t>(it - ctx.vars.begin())] += e;
            have_any = true;
        }
        if (!have_any) lx.fail("empty term");
        std::uint32_t cf =
            static_cast<std::uint32_t>(coeff * sign % ctx.p);
        terms.push_back({cf, std::move(mon)});
    }
    return poly_normalize(std::move(terms), ctx);
}

std::string monomial_to_string(const Monomial& m, const PolyContext& ctx) {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (any) os << '*';
        os << ctx.vars[i];
        if (m[i] > 1) os << '^' << m[i];
        any = true;
    }
    return any ? os.str() : "1";
}

std::string polynomial_to_string(const Polynomial& f, const PolyContext& ctx) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& t : f.terms) {
        std::uint32_t c = t.coeff;
        bool negative = c > ctx.p / 2;  // print the small representative
        std::uint32_t mag = negative ? ctx.p - c : c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        bool unit_mon = total_degree(t.mon) == 0;
        if (mag != 1 || unit_mon) {
            os << mag;
            if (!unit_mon) os << '*';
        }
        if (!unit_mon) os << monomial_to_string(t.mon, ctx);
    }
    return os.str();
}

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g,
                       const PolyContext& ctx) {
    Polynomial rem;
    Polynomial work = f;
    while (!work.is_zero()) {
        const Term& lt = work.leading();
        bool reduced = false;
        for (auto& gi : g) {
            if (gi.is_zero()) continue;
            if (monomial_divides(gi.leading().mon, lt.mon)) {
                std::uint64_t q = static_cast<std::uint64_t>(lt.coeff) *
                                  fp_inverse(gi.leading().coeff, ctx.p) % ctx.p;
                Term qt{static_cast<std::uint32_t>(q),
                        monomial_div(lt.mon, gi.leading().mon)};
                work = poly_sub(work, poly_mul_term(gi, qt, ctx), ctx);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.terms.push_back(lt);
            work.terms.erase(work.terms.begin());
        }
    }
    return rem;  // terms were moved over in descending order
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const PolyContext& ctx) {
    Monomial l = monomial_lcm(f.leading().mon, g.leading().mon);
    Term tf{fp_inverse(f.leading().coeff, ctx.p), monomial_div(l, f.leading().mon)};
    Term tg{fp_inverse(g.leading().coeff, ctx.p), monomial_div(l, g.leading().mon)};
    return poly_sub(poly_mul_term(f, tf, ctx), poly_mul_term(g, tg, ctx), ctx);
}

bool coprime_leads(const Polynomial& f, const Polynomial& g) {
    const Monomial &a = f.leading().mon, &b = g.leading().mon;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace

std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const PolyContext& ctx,
                                   unsigned degree_cap) {
    std::vector<Polynomial> basis;
    for (auto& f : gens)
        if (!f.is_zero()) basis.push_back(f);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.back();
        pairs.pop_back();
        if (coprime_leads(basis[i], basis[j])) continue;  // Buchberger's first criterion
        // chain criterion: some other lead divides the lcm and both mixed
        // pairs were handled already (index smaller than max(i,j))
        Monomial l = monomial_lcm(basis[i].leading().mon, basis[j].leading().mon);
        bool skip = false;
        for (std::size_t t = 0; t < basis.size() && !skip; ++t) {
            if (t == i || t == j) continue;
            if (t < std::max(i, j) && monomial_divides(basis[t].leading().mon, l)) skip = true;
        }
        if (skip) continue;
        Polynomial r = normal_form(s_polynomial(basis[i], basis[j], ctx), basis, ctx);
        if (r.is_zero()) continue;
        if (total_degree(r.leading().mon) > degree_cap)
            throw DegreeCapExceeded(
                "Groebner basis degree exceeds cap " + std::to_string(degree_cap) +
                "; the input ideal is likely not Artinian");
        std::size_t n = basis.size();
        basis.push_back(std::move(r));
        for (std::size_t t = 0; t < n; ++t) pairs.emplace_back(t, n);
    }
    // interreduce to the unique reduced basis
    std::vector<Polynomial> reduced;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size(); ++j) {
            if (i == j) continue;
            if (monomial_divides(basis[j].leading().mon, basis[i].leading().mon) &&
                !(basis[j].leading().mon == basis[i].leading().mon && j > i)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) reduced.push_back(basis[i]);
    }
    for (std::size_t i = 0; i < reduced.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < reduced.size(); ++j)
            if (j != i) others.push_back(reduced[j]);
        reduced[i] = normal_form(reduced[i], others, ctx);
        reduced[i] = poly_scale(reduced[i], fp_inverse(reduced[i].leading().coeff, ctx.p), ctx);
    }
    std::sort(reduced.begin(), reduced.end(), [&](const Polynomial& a, const Polynomial& b) {
        return monomial_less(a.leading().mon, b.leading().mon, ctx.order);
    });
    return reduced;
}

std::vector<Monomial> standard_monomials(const std::vector<Polynomial>& gb,
                                         const PolyContext& ctx) {
    const std::size_t n = ctx.nvars();
    if (n == 0) return {Monomial{}};
    for (auto& g : gb)
        if (!g.is_zero() && total_degree(g.leading().mon) == 0)
            return {};  // ideal is the whole ring
    // every variable needs a pure power among the leading terms
    std::vector<unsigned> bound(n, 0);
    for (std::size_t v = 0; v < n; ++v) {
        for (auto& g : gb) {
            const Monomial& lm = g.leading().mon;
            bool pure = lm[v] > 0;
            for (std::size_t w = 0; w < n && pure; ++w)
                if (w != v && lm[w] > 0) pure = false;
            if (pure && (bound[v] == 0 || lm[v] < bound[v])) bound[v] = lm[v];
        }
        if (bound[v] == 0)
            throw InfiniteDimensional("no pure power of " + ctx.vars[v] +
                                      " in the leading-term ideal; quotient is not Artinian");
    }
    std::vector<Monomial> out;
    Monomial cur(n, 0);
    // enumerate the box below the pure-power bounds
    while (true) {
        bool standard = true;
        for (auto& g : gb)
            if (monomial_divides(g.leading().mon, cur)) {
                standard = false;
                break;
            }
        if (standard) out.push_back(cur);
        std::size_t v = 0;
        while (v < n && cur[v] + 1 >= bound[v]) cur[v++] = 0;
        if (v == n) break;
        ++cur[v];
    }
    std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) {
        return monomial_less(a, b, ctx.order);
    });
    return out;
}

std::vector<Matrix> multiplication_table(const std::vector<Polynomial>& gb,
                                         const std::vector<Monomial>& basis,
                                         const PolyContext& ctx) {
    const std::size_t d = basis.size();
    std::map<Monomial, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) index[basis[i]] = i;
    std::vector<Matrix> table(d, Matrix(d, d, ctx.p));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Polynomial prod = normal_form(
                poly_from_monomial(monomial_mul(basis[i], basis[j]), ctx), gb, ctx);
            for (auto& t : prod.terms) {
                auto it = index.find(t.mon);
                if (it == index.end())
                    throw std::logic_error("normal form left the standard-monomial span");
                table[i](it->second, j) = t.coeff;
            }
        }
    }
    return table;
}

}  // namespace ezd

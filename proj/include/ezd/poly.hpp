#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ezd/matrix.hpp"

namespace ezd {

using Monomial = std::vector<unsigned>;  // one exponent per variable

unsigned total_degree(const Monomial& m);
bool monomial_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b);  // a / b, pre: b | a
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

enum class MonomialOrder { degrevlex, lex };

MonomialOrder order_from_string(const std::string& s);
std::string order_to_string(MonomialOrder o);

// true when a < b in the given order
bool monomial_less(const Monomial& a, const Monomial& b, MonomialOrder o);

struct Term {
    std::uint32_t coeff;  // nonzero, in [1, p)
    Monomial mon;
    bool operator==(const Term&) const = default;
};

// Terms sorted strictly descending in the active order; empty list is the
// zero polynomial.
struct Polynomial {
    std::vector<Term> terms;
    bool is_zero() const { return terms.empty(); }
    const Term& leading() const { return terms.front(); }
    bool operator==(const Polynomial&) const = default;
};

// Variable names, term order and modulus for one polynomial session.
struct PolyContext {
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::degrevlex;
    std::uint32_t p = 32003;

    std::size_t nvars() const { return vars.size(); }
};

Polynomial poly_normalize(std::vector<Term> terms, const PolyContext& ctx);
Polynomial poly_add(const Polynomial& a, const Polynomial& b, const PolyContext& ctx);
Polynomial poly_sub(const Polynomial& a, const Polynomial& b, const PolyContext& ctx);
Polynomial poly_scale(const Polynomial& a, std::uint32_t c, const PolyContext& ctx);
Polynomial poly_mul_term(const Polynomial& a, const Term& t, const PolyContext& ctx);
Polynomial poly_mul(const Polynomial& a, const Polynomial& b, const PolyContext& ctx);
Polynomial poly_from_monomial(const Monomial& m, const PolyContext& ctx);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what)
        : std::runtime_error(what), line(line_) {}
};

// Text syntax: terms joined by +/-, term = optional integer coefficient and
// '*'-separated variable powers with '^'. Whitespace insignificant.
Polynomial parse_polynomial(const std::string& text, const PolyContext& ctx, int line = 0);
std::string polynomial_to_string(const Polynomial& f, const PolyContext& ctx);
std::string monomial_to_string(const Monomial& m, const PolyContext& ctx);

// Remainder of f on division by g; no term of the result is divisible by a
// leading term of g. When g is a Groebner basis this is the normal form.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& g,
                       const PolyContext& ctx);

struct DegreeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Reduced Groebner basis (monic, interreduced, sorted by leading term).
std::vector<Polynomial> buchberger(std::vector<Polynomial> gens, const PolyContext& ctx,
                                   unsigned degree_cap = 20);

struct InfiniteDimensional : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All monomials outside the leading-term ideal, ascending in the active
// order. Throws InfiniteDimensional unless every variable has a pure power
// among the leading terms.
std::vector<Monomial> standard_monomials(const std::vector<Polynomial>& gb,
                                         const PolyContext& ctx);

// Coordinates of normal_form(basis[i] * basis[j]) in the standard-monomial
// basis; table[i] is a dim x dim matrix whose column j is that vector.
std::vector<Matrix> multiplication_table(const std::vector<Polynomial>& gb,
                                         const std::vector<Monomial>& basis,
                                         const PolyContext& ctx);

}  // namespace ezd

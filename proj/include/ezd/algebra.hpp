#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ezd/matrix.hpp"
#include "ezd/poly.hpp"

namespace ezd {

struct NotLocal : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotCommutativeOrAssociative : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class LocalAlgebra;
using AlgebraPtr = std::shared_ptr<const LocalAlgebra>;

// Element of a LocalAlgebra as a coordinate vector in the monomial basis.
struct AlgElement {
    AlgebraPtr alg;
    Matrix coords;  // dim x 1

    bool is_zero() const { return coords.is_zero(); }
    bool operator==(const AlgElement& o) const { return coords == o.coords; }
};

// Ideal (or at least subspace) of a LocalAlgebra given by a spanning set.
struct IdealSubspace {
    AlgebraPtr alg;
    Subspace space;

    std::size_t dim() const { return space.dim(); }
};

// Finite-dimensional local k-algebra presented by a Groebner basis, with
// structure constants stored as one multiplication matrix per basis
// monomial. Basis is ascending in the active order, so basis[0] = 1 and
// the maximal ideal m is spanned by basis[1..dim).
class LocalAlgebra : public std::enable_shared_from_this<LocalAlgebra> {
public:
    PolyContext ctx;
    std::vector<Polynomial> gb;
    std::vector<Monomial> basis;
    std::vector<Matrix> mult;  // mult[i] = dim x dim action of basis[i]
    std::size_t nilpotency = 0;  // least t with m^t = 0

    std::size_t dim() const { return basis.size(); }
    std::uint32_t prime() const { return ctx.p; }

    AlgElement zero() const;
    AlgElement one() const;
    AlgElement element(const Matrix& coords) const;
    AlgElement element(const Polynomial& f) const;  // reduces mod gb
    AlgElement element(const std::string& text) const;

    // Multiplication-by-a matrix, sum of coordinate multiples of mult[i].
    Matrix mult_matrix(const AlgElement& a) const;
    AlgElement mul(const AlgElement& a, const AlgElement& b) const;
    Polynomial to_polynomial(const AlgElement& a) const;
    std::string to_string(const AlgElement& a) const;

    Subspace m_subspace() const;          // the maximal ideal as a k-space
    Subspace m_power(std::size_t t) const;  // m^t
    bool in_m(const AlgElement& a) const { return a.coords(0, 0) == 0; }
    bool in_m_squared(const AlgElement& a) const;
    // x generates minimally: x in m, x not in m^2
    bool is_minimal_generator(const AlgElement& a) const;
};

// Build S = k[vars]/(relations): Groebner basis, finiteness certificate,
// locality certificate (m nilpotent) and structure constants.
AlgebraPtr from_presentation(const std::vector<std::string>& variables,
                             const std::vector<std::string>& relations, std::uint32_t p,
                             MonomialOrder order = MonomialOrder::degrevlex,
                             unsigned degree_cap = 20);
AlgebraPtr from_polynomials(PolyContext ctx, const std::vector<Polynomial>& relations,
                            unsigned degree_cap = 20);

// {a : a*x = 0}, the kernel of the multiplication matrix. Always an ideal.
IdealSubspace annihilator(const AlgElement& x);

// The principal ideal (x) = image of the multiplication matrix.
IdealSubspace principal_ideal(const AlgElement& x);

// Nakayama test: a generator exists iff dim j/mj <= 1. Returns the zero
// element for j = 0 and nullopt when j needs at least two generators.
std::optional<AlgElement> principal_generator(const IdealSubspace& j);

enum class EzdFailure {
    none,
    zero_element,
    not_in_maximal_ideal,
    annihilator_zero,       // x is a unit times regular -- cannot happen in m here
    annihilator_not_principal,
    partner_condition_fails,  // Ann(y) != (x)
};

std::string to_string(EzdFailure f);

struct EzdCheck {
    std::optional<AlgElement> partner;
    EzdFailure failure = EzdFailure::none;
    bool ok() const { return partner.has_value(); }
};

// Decide whether x is an exact zero-divisor; on success (x, partner) is a
// pair of exact zero-divisors: Ann(x) = (y), Ann(y) = (x), both nonzero.
EzdCheck exact_zero_divisor_partner(const AlgElement& x);

// Quotient map S -> R = S/(x) with a fixed k-linear section.
struct AlgebraSurjection {
    AlgebraPtr source;  // S
    AlgebraPtr target;  // R
    Matrix projection;  // dimR x dimS, reduction mod (x)
    Matrix section;     // dimS x dimR, standard-monomial lifting

    AlgElement project(const AlgElement& s) const;
    AlgElement lift(const AlgElement& r) const;
};

struct QuotientResult {
    AlgebraPtr quotient;
    AlgebraSurjection surj;
};

// R = S/(x) via the Groebner pipeline on (relations of S) + (x).
// pre: x in m, x != 0.
QuotientResult quotient_by_element(const AlgebraPtr& s_alg, const AlgElement& x);

}  // namespace ezd

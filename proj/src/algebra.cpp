#include "ezd/algebra.hpp"

#include <cassert>
#include <stdexcept>

namespace ezd {

AlgElement LocalAlgebra::zero() const {
    return {shared_from_this(), Matrix(dim(), 1, prime())};
}

AlgElement LocalAlgebra::one() const {
    Matrix c(dim(), 1, prime());
    c(0, 0) = 1;
    return {shared_from_this(), c};
}

AlgElement LocalAlgebra::element(const Matrix& coords) const {
    assert(coords.rows() == dim() && coords.cols() == 1);
    return {shared_from_this(), coords};
}

AlgElement LocalAlgebra::element(const Polynomial& f) const {
    Polynomial nf = normal_form(f, gb, ctx);
    Matrix c(dim(), 1, prime());
    for (auto& t : nf.terms) {
        bool found = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i] == t.mon) {
                c(i, 0) = t.coeff;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("normal form outside the standard-monomial basis");
    }
    return {shared_from_this(), c};
}

AlgElement LocalAlgebra::element(const std::string& text) const {
    return element(parse_polynomial(text, ctx));
}

Matrix LocalAlgebra::mult_matrix(const AlgElement& a) const {
    Matrix m(dim(), dim(), prime());
    for (std::size_t i = 0; i < dim(); ++i) {
        std::uint32_t c = a.coords(i, 0);
        if (c != 0) m = m + mult[i].scaled(c);
    }
    return m;
}

AlgElement LocalAlgebra::mul(const AlgElement& a, const AlgElement& b) const {
    return {shared_from_this(), mult_matrix(a) * b.coords};
}

Polynomial LocalAlgebra::to_polynomial(const AlgElement& a) const {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < dim(); ++i)
        if (a.coords(i, 0) != 0) terms.push_back({a.coords(i, 0), basis[i]});
    return poly_normalize(std::move(terms), ctx);
}

std::string LocalAlgebra::to_string(const AlgElement& a) const {
    return polynomial_to_string(to_polynomial(a), ctx);
}

Subspace LocalAlgebra::m_subspace() const {
    Matrix cols(dim(), dim() - 1, prime());
    for (std::size_t i = 1; i < dim(); ++i) cols(i, i - 1) = 1;
    return Subspace(cols);
}

Subspace LocalAlgebra::m_power(std::size_t t) const {
    if (t == 0) return Subspace(Matrix::identity(dim(), prime()));
    Subspace cur = m_subspace();
    for (std::size_t k = 1; k < t; ++k) {
        // m * cur: multiply every basis vector of cur by every m generator
        Matrix b = cur.basis();
        Matrix prod(dim(), 0, prime());
        for (std::size_t i = 1; i < dim(); ++i) prod = hstack(prod, mult[i] * b);
        cur = Subspace(prod);
        if (cur.dim() == 0) break;
    }
    return cur;
}

bool LocalAlgebra::in_m_squared(const AlgElement& a) const {
    return m_power(2).contains(a.coords);
}

bool LocalAlgebra::is_minimal_generator(const AlgElement& a) const {
    return in_m(a) && !a.is_zero() && !in_m_squared(a);
}

AlgebraPtr from_polynomials(PolyContext ctx, const std::vector<Polynomial>& relations,
                            unsigned degree_cap) {
    auto alg = std::make_shared<LocalAlgebra>();
    alg->ctx = std::move(ctx);
    alg->gb = buchberger(relations, alg->ctx, degree_cap);
    alg->basis = standard_monomials(alg->gb, alg->ctx);
    if (alg->basis.empty() || total_degree(alg->basis[0]) != 0)
        throw NotLocal("quotient ring is zero or lacks a unit monomial");
    alg->mult = multiplication_table(alg->gb, alg->basis, alg->ctx);

    // internal consistency: commutativity and associativity on basis pairs
    const std::size_t d = alg->dim();
    if (!(alg->mult[0] == Matrix::identity(d, alg->prime())))
        throw NotCommutativeOrAssociative("unit does not act as identity");
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i + 1; j < d; ++j) {
            if (!(alg->mult[i].column(j) == alg->mult[j].column(i)))
                throw NotCommutativeOrAssociative("structure constants are not symmetric");
        }
    }
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            // b_i * (b_j * -) == (b_i b_j) * -
            Matrix lhs = alg->mult[i] * alg->mult[j];
            Matrix rhs(d, d, alg->prime());
            for (std::size_t l = 0; l < d; ++l) {
                std::uint32_t c = alg->mult[i](l, j);
                if (c != 0) rhs = rhs + alg->mult[l].scaled(c);
            }
            if (!(lhs == rhs))
                throw NotCommutativeOrAssociative("structure constants fail associativity");
        }
    }

    // locality: m must be nilpotent
    std::size_t t = 1;
    Subspace mp = alg->m_subspace();
    while (mp.dim() > 0 && t <= d + 1) {
        ++t;
        mp = alg->m_power(t);
    }
    if (mp.dim() > 0) throw NotLocal("span of non-unit basis monomials is not nilpotent");
    alg->nilpotency = t;
    return alg;
}

AlgebraPtr from_presentation(const std::vector<std::string>& variables,
                             const std::vector<std::string>& relations, std::uint32_t p,
                             MonomialOrder order, unsigned degree_cap) {
    PolyContext ctx{variables, order, p};
    std::vector<Polynomial> rels;
    rels.reserve(relations.size());
    for (auto& r : relations) rels.push_back(parse_polynomial(r, ctx));
    return from_polynomials(std::move(ctx), rels, degree_cap);
}

IdealSubspace annihilator(const AlgElement& x) {
    return {x.alg, Subspace(kernel_basis(x.alg->mult_matrix(x)))};
}

IdealSubspace principal_ideal(const AlgElement& x) {
    return {x.alg, Subspace(x.alg->mult_matrix(x))};
}

std::optional<AlgElement> principal_generator(const IdealSubspace& j) {
    const auto& alg = *j.alg;
    if (j.dim() == 0) return alg.zero();
    Matrix b = j.space.basis();
    // mj = span of (m generators) * (basis of j)
    Matrix prod(alg.dim(), 0, alg.prime());
    for (std::size_t i = 1; i < alg.dim(); ++i) prod = hstack(prod, alg.mult[i] * b);
    Subspace mj(prod);
    if (j.dim() - mj.dim() >= 2) return std::nullopt;
    // lift of the first basis column of j independent modulo mj
    for (std::size_t c = 0; c < b.cols(); ++c) {
        Matrix v = b.column(c);
        if (!mj.contains(v)) return alg.element(v);
    }
    return std::nullopt;  // unreachable: dim j > dim mj by Nakayama
}

std::string to_string(EzdFailure f) {
    switch (f) {
        case EzdFailure::none: return "ok";
        case EzdFailure::zero_element: return "ZeroElement";
        case EzdFailure::not_in_maximal_ideal: return "NotInMaximalIdeal";
        case EzdFailure::annihilator_zero: return "AnnihilatorZero";
        case EzdFailure::annihilator_not_principal: return "AnnihilatorNotPrincipal";
        case EzdFailure::partner_condition_fails: return "PartnerConditionFails";
    }
    return "?";
}

EzdCheck exact_zero_divisor_partner(const AlgElement& x) {
    if (x.is_zero()) return {std::nullopt, EzdFailure::zero_element};
    if (!x.alg->in_m(x)) return {std::nullopt, EzdFailure::not_in_maximal_ideal};
    IdealSubspace ann = annihilator(x);
    if (ann.dim() == 0) return {std::nullopt, EzdFailure::annihilator_zero};
    auto y = principal_generator(ann);
    if (!y || y->is_zero()) return {std::nullopt, EzdFailure::annihilator_not_principal};
    if (!(annihilator(*y).space == principal_ideal(x).space))
        return {std::nullopt, EzdFailure::partner_condition_fails};
    return {*y, EzdFailure::none};
}

AlgElement AlgebraSurjection::project(const AlgElement& s) const {
    assert(s.alg.get() == source.get());
    return {target, projection * s.coords};
}

AlgElement AlgebraSurjection::lift(const AlgElement& r) const {
    assert(r.alg.get() == target.get());
    return {source, section * r.coords};
}

QuotientResult quotient_by_element(const AlgebraPtr& s_alg, const AlgElement& x) {
    if (x.is_zero()) throw std::invalid_argument("quotient_by_element: x = 0");
    if (!s_alg->in_m(x)) throw std::invalid_argument("quotient_by_element: x not in m");
    std::vector<Polynomial> rels = s_alg->gb;
    rels.push_back(s_alg->to_polynomial(x));
    AlgebraPtr r_alg = from_polynomials(s_alg->ctx, rels);

    const std::size_t dS = s_alg->dim(), dR = r_alg->dim();
    Matrix projection(dR, dS, s_alg->prime());
    for (std::size_t j = 0; j < dS; ++j) {
        AlgElement img = r_alg->element(poly_from_monomial(s_alg->basis[j], s_alg->ctx));
        projection.set_block(0, j, img.coords);
    }
    Matrix section(dS, dR, s_alg->prime());
    for (std::size_t j = 0; j < dR; ++j) {
        AlgElement pre = s_alg->element(poly_from_monomial(r_alg->basis[j], r_alg->ctx));
        section.set_block(0, j, pre.coords);
    }
    return {r_alg, {s_alg, r_alg, std::move(projection), std::move(section)}};
}

}  // namespace ezd

#include "ezd/module.hpp"

#include <cassert>
#include <stdexcept>

namespace ezd {

Matrix ModuleRep::action_of(const AlgElement& a) const {
    assert(a.alg.get() == alg.get());
    Matrix r(dim, dim, alg->prime());
    for (std::size_t i = 0; i < alg->dim(); ++i) {
        std::uint32_t c = a.coords(i, 0);
        if (c != 0) r = r + action[i].scaled(c);
    }
    return r;
}

void check_module(const ModuleRep& m) {
    const auto& alg = *m.alg;
    const std::size_t d = m.dim, da = alg.dim();
    if (m.action.size() != da) throw std::logic_error("module: action count mismatch");
    if (!(m.action[0] == Matrix::identity(d, alg.prime())))
        throw std::logic_error("module: unit does not act as identity");
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            Matrix lhs = m.action[i] * m.action[j];
            Matrix rhs(d, d, alg.prime());
            for (std::size_t l = 0; l < da; ++l) {
                std::uint32_t c = alg.mult[i](l, j);
                if (c != 0) rhs = rhs + m.action[l].scaled(c);
            }
            if (!(lhs == rhs))
                throw std::logic_error("module: action incompatible with structure constants");
        }
    }
}

ModuleRep free_module(const AlgebraPtr& a, std::size_t rank) {
    const std::size_t da = a->dim();
    ModuleRep m{a, rank * da, {}};
    m.action.reserve(da);
    for (std::size_t i = 0; i < da; ++i) {
        Matrix act(m.dim, m.dim, a->prime());
        for (std::size_t r = 0; r < rank; ++r) act.set_block(r * da, r * da, a->mult[i]);
        m.action.push_back(std::move(act));
    }
    return m;
}

ModuleRep residue_field(const AlgebraPtr& a) {
    ModuleRep m{a, 1, {}};
    for (std::size_t i = 0; i < a->dim(); ++i) {
        Matrix act(1, 1, a->prime());
        if (i == 0) act(0, 0) = 1;
        m.action.push_back(std::move(act));
    }
    return m;
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
    assert(a.alg.get() == b.alg.get());
    ModuleRep m{a.alg, a.dim + b.dim, {}};
    for (std::size_t i = 0; i < a.alg->dim(); ++i) {
        Matrix act(m.dim, m.dim, a.alg->prime());
        act.set_block(0, 0, a.action[i]);
        act.set_block(a.dim, a.dim, b.action[i]);
        m.action.push_back(std::move(act));
    }
    return m;
}

ModuleRep realize(const ModulePresentation& p) {
    const auto& alg = *p.alg;
    const std::size_t da = alg.dim(), n = p.rank;
    // k-linearization of the relation columns inside A^n
    Matrix rel(n * da, p.columns.size() * da, alg.prime());
    for (std::size_t c = 0; c < p.columns.size(); ++c) {
        if (p.columns[c].size() != n)
            throw std::invalid_argument("presentation column length != rank");
        for (std::size_t r = 0; r < n; ++r)
            rel.set_block(r * da, c * da, alg.mult_matrix(p.columns[c][r]));
    }
    QuotientSpace q{Subspace(rel)};
    ModuleRep free = free_module(p.alg, n);
    ModuleRep m{p.alg, q.dim(), {}};
    for (std::size_t i = 0; i < da; ++i) m.action.push_back(q.induced(free.action[i]));
    return m;
}

ModuleRep inflate(const ModuleRep& m, const AlgebraSurjection& f) {
    if (m.alg.get() != f.target.get())
        throw std::invalid_argument("inflate: module is not over the surjection target");
    ModuleRep r{f.source, m.dim, {}};
    for (std::size_t i = 0; i < f.source->dim(); ++i) {
        AlgElement img = f.project(f.source->element(
            Matrix::identity(f.source->dim(), f.source->prime()).column(i)));
        r.action.push_back(m.action_of(img));
    }
    return r;
}

ModuleRep submodule_from_subspace(const ModuleRep& n, const Subspace& s) {
    ModuleRep r{n.alg, s.dim(), {}};
    for (auto& act : n.action) r.action.push_back(restrict_to_subspace(s, act));
    return r;
}

ModuleRep quotient_module(const ModuleRep& n, const Subspace& s) {
    QuotientSpace q{s};
    ModuleRep r{n.alg, q.dim(), {}};
    for (auto& act : n.action) r.action.push_back(q.induced(act));
    return r;
}

KernelImageQuotient mult_kernel_image(const AlgElement& y, const ModuleRep& n) {
    Matrix act = n.action_of(y);
    Subspace ker(kernel_basis(act));
    Subspace img(act);
    return {submodule_from_subspace(n, ker), submodule_from_subspace(n, img),
            quotient_module(n, img)};
}

ModuleRep tensor(const ModuleRep& m, const ModuleRep& n) {
    if (m.alg.get() != n.alg.get()) throw std::invalid_argument("tensor: algebra mismatch");
    const auto& alg = *m.alg;
    const std::size_t dm = m.dim, dn = n.dim, amb = dm * dn;
    // relations (a u) o v - u o (a v) for every non-unit basis element a
    Matrix rel(amb, (alg.dim() - 1) * amb, alg.prime());
    std::size_t col = 0;
    for (std::size_t a = 1; a < alg.dim(); ++a) {
        const Matrix &am = m.action[a], &an = n.action[a];
        for (std::size_t u = 0; u < dm; ++u) {
            for (std::size_t v = 0; v < dn; ++v) {
                for (std::size_t i = 0; i < dm; ++i) {
                    std::uint32_t c = am(i, u);
                    if (c != 0) rel(i * dn + v, col) = c;
                }
                for (std::size_t j = 0; j < dn; ++j) {
                    std::uint32_t c = an(j, v);
                    if (c != 0) {
                        std::uint32_t& slot = rel(u * dn + j, col);
                        std::uint32_t val = slot + alg.prime() - c;
                        slot = val >= alg.prime() ? val - alg.prime() : val;
                    }
                }
                ++col;
            }
        }
    }
    QuotientSpace q{Subspace(rel)};
    ModuleRep r{m.alg, q.dim(), {}};
    for (std::size_t a = 0; a < alg.dim(); ++a) {
        // action on u o v through the left factor
        Matrix big(amb, amb, alg.prime());
        const Matrix& am = m.action[a];
        for (std::size_t i = 0; i < dm; ++i)
            for (std::size_t u = 0; u < dm; ++u) {
                std::uint32_t c = am(i, u);
                if (c == 0) continue;
                for (std::size_t v = 0; v < dn; ++v) big(i * dn + v, u * dn + v) = c;
            }
        r.action.push_back(q.induced(big));
    }
    return r;
}

ModuleRep hom(const ModuleRep& m, const ModuleRep& n) {
    if (m.alg.get() != n.alg.get()) throw std::invalid_argument("hom: algebra mismatch");
    const auto& alg = *m.alg;
    const std::size_t dm = m.dim, dn = n.dim, amb = dn * dm;
    // unknowns: X (dn x dm) with act_n(a) X = X act_m(a) for all a;
    // flatten X by x_{(i,j)} = X(i,j) at index i*dm + j
    Matrix sys((alg.dim() - 1) * amb, amb, alg.prime());
    for (std::size_t a = 1; a < alg.dim(); ++a) {
        const Matrix &am = m.action[a], &an = n.action[a];
        std::size_t row0 = (a - 1) * amb;
        for (std::size_t i = 0; i < dn; ++i) {
            for (std::size_t j = 0; j < dm; ++j) {
                std::size_t row = row0 + i * dm + j;
                for (std::size_t t = 0; t < dn; ++t) {
                    std::uint32_t c = an(i, t);
                    if (c != 0) sys(row, t * dm + j) = c;
                }
                for (std::size_t t = 0; t < dm; ++t) {
                    std::uint32_t c = am(t, j);
                    if (c != 0) {
                        std::uint32_t& slot = sys(row, i * dm + t);
                        std::uint32_t val = slot + alg.prime() - c;
                        slot = val >= alg.prime() ? val - alg.prime() : val;
                    }
                }
            }
        }
    }
    Subspace sol(kernel_basis(sys));
    ModuleRep r{m.alg, sol.dim(), {}};
    for (std::size_t a = 0; a < alg.dim(); ++a) {
        // (a . phi)(u) = a phi(u): postcompose with act_n(a)
        Matrix big(amb, amb, alg.prime());
        const Matrix& an = n.action[a];
        for (std::size_t i = 0; i < dn; ++i)
            for (std::size_t t = 0; t < dn; ++t) {
                std::uint32_t c = an(i, t);
                if (c == 0) continue;
                for (std::size_t j = 0; j < dm; ++j) big(i * dm + j, t * dm + j) = c;
            }
        r.action.push_back(restrict_to_subspace(sol, big));
    }
    return r;
}

MinimalGenerators minimal_generators(const ModuleRep& m) {
    const auto& alg = *m.alg;
    const std::size_t d = m.dim, da = alg.dim();
    Matrix mM(d, (da - 1) * d, alg.prime());
    for (std::size_t i = 1; i < da; ++i) mM.set_block(0, (i - 1) * d, m.action[i]);
    Subspace mm(mM);
    // lifts: standard basis vectors completing mM, in coordinate order
    std::vector<std::size_t> chosen;
    Subspace grow = mm;
    Matrix gens(d, 0, alg.prime());
    for (std::size_t j = 0; j < d && grow.dim() < d; ++j) {
        Matrix ej(d, 1, alg.prime());
        ej(j, 0) = 1;
        if (!grow.contains(ej)) {
            chosen.push_back(j);
            gens = hstack(gens, ej);
            grow = Subspace(hstack(grow.basis(), ej));
        }
    }
    const std::size_t mu = chosen.size();
    assert(mu == d - mm.dim());
    Matrix surj(d, mu * da, alg.prime());
    for (std::size_t g = 0; g < mu; ++g)
        for (std::size_t l = 0; l < da; ++l)
            surj.set_block(0, g * da + l, m.action[l].column(chosen[g]));
    return {mu, std::move(surj), std::move(gens)};
}

}  // namespace ezd

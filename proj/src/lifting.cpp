#include "ezd/lifting.hpp"

namespace ezd {

namespace {

std::string num(std::size_t n) { return std::to_string(n); }

AlgMatrix zero_matrix(const AlgebraPtr& a, std::size_t rows, std::size_t cols) {
    return AlgMatrix(a, rows, cols);
}

AlgElement negate(const AlgElement& a) {
    return AlgElement{a.alg, a.coords.scaled(a.coords.prime() - 1)};
}

}  // namespace

bool ChainEndo::is_zero() const {
    for (auto& m : maps)
        if (!m.is_zero()) return false;
    return true;
}

PreimageComplex preimage_complex(const FreeComplex& f, const AlgebraSurjection& surj) {
    PreimageComplex out;
    out.surj = surj;
    out.over_r = f;
    for (auto& d : f.diffs)
        out.diffs.push_back(alg_map_entries(
            d, surj.source, [&](const AlgElement& e) { return surj.lift(e); }));
    return out;
}

ChainEndo canonical_endomorphism(const PreimageComplex& pf, const AlgElement& x) {
    const AlgebraPtr& s_alg = pf.surj.source;
    const AlgebraPtr& r_alg = pf.surj.target;
    Matrix mx = s_alg->mult_matrix(x);
    ChainEndo out;
    for (std::size_t i = 2; i <= pf.length(); ++i) {
        AlgMatrix prod = alg_mul(pf.d(i - 1), pf.d(i));
        AlgMatrix s_tilde(s_alg, prod.rows, prod.cols);
        for (std::size_t r = 0; r < prod.rows; ++r)
            for (std::size_t c = 0; c < prod.cols; ++c) {
                auto u = solve(mx, prod.at(r, c).coords);
                if (!u)
                    throw DivisionFails("preimage product entry not divisible by x at degree " +
                                        num(i));
                s_tilde.at(r, c) = s_alg->element(*u);
            }
        out.maps.push_back(alg_map_entries(
            s_tilde, r_alg, [&](const AlgElement& e) { return pf.surj.project(e); }));
    }
    return out;
}

Obstruction ext2_class(const ChainEndo& s, const FreeComplex& f, const ModuleRep& m) {
    if (f.length() < 3 || s.top() < 2)
        throw ResolutionTooShort("ext2_class needs the resolution to degree 3");
    const std::size_t da = f.alg->dim();
    const std::size_t b2 = f.ranks[2];
    Obstruction out;
    out.coordinates = Matrix(b2 * m.dim, 1, f.alg->prime());
    if (b2 == 0 || m.dim == 0) {
        out.is_zero = true;
        return out;
    }
    // value of pi.s_2 on the free generators e_c of F_2
    Matrix comp = f.augmentation * linearize(s.s(2));  // dim M x (b2 * dimA)
    for (std::size_t c = 0; c < b2; ++c)
        for (std::size_t t = 0; t < m.dim; ++t)
            out.coordinates(c * m.dim + t, 0) = comp(t, c * da);
    // coboundary iff some phi : F_1 -> M has phi.d_2 = pi.s_2
    Matrix e2 = linearize_hom(f.d(2), m);
    out.is_zero = out.coordinates.is_zero() || solve(e2, out.coordinates).has_value();
    return out;
}

std::optional<Homotopy> null_homotopy(const ChainEndo& s, const FreeComplex& f,
                                      std::size_t horizon) {
    const AlgebraPtr& a = f.alg;
    const std::size_t da = a->dim();
    const std::size_t n = std::min({horizon, s.top(), f.length()});
    Homotopy h;
    if (n < 2) {
        if (f.length() >= 1) h.maps.push_back(zero_matrix(a, f.ranks[0], f.ranks[1]));
        return h;
    }
    // unknowns: all entries of h_1..h_n jointly
    std::vector<std::size_t> off(n + 1, 0);
    std::size_t total = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        off[i] = total;
        total += f.ranks[i - 1] * f.ranks[i] * da;
    }
    std::size_t eq_rows = 0;
    for (std::size_t i = 2; i <= n; ++i) eq_rows += f.ranks[i - 2] * f.ranks[i] * da;

    if (eq_rows > 0 && total > std::size_t{400'000'000} / eq_rows)
        throw std::runtime_error("homotopy system too large; reduce the horizon");
    Matrix sys(eq_rows, total, a->prime());
    Matrix rhs(eq_rows, 1, a->prime());
    std::size_t base = 0;
    for (std::size_t i = 2; i <= n; ++i) {
        const std::size_t b_lo = f.ranks[i - 2], b_mid = f.ranks[i - 1], b_hi = f.ranks[i];
        for (std::size_t r = 0; r < b_lo; ++r)
            for (std::size_t c = 0; c < b_hi; ++c) {
                const std::size_t row = base + (r * b_hi + c) * da;
                for (std::size_t t = 0; t < da; ++t)
                    rhs(row + t, 0) = s.s(i).at(r, c).coords(t, 0);
                // d_{i-1}(r,j) . h_i(j,c)
                for (std::size_t j = 0; j < b_mid; ++j) {
                    const auto& e = f.d(i - 1).at(r, j);
                    if (e.is_zero()) continue;
                    sys.set_block(row, off[i] + (j * b_hi + c) * da, a->mult_matrix(e));
                }
                // h_{i-1}(r,j) . d_i(j,c)
                for (std::size_t j = 0; j < b_mid; ++j) {
                    const auto& e = f.d(i).at(j, c);
                    if (e.is_zero()) continue;
                    const std::size_t col = off[i - 1] + (r * b_mid + j) * da;
                    Matrix coef = a->mult_matrix(e);
                    for (std::size_t t = 0; t < da; ++t)
                        for (std::size_t u = 0; u < da; ++u)
                            sys(row + t, col + u) =
                                (sys(row + t, col + u) + coef(t, u)) % a->prime();
                }
            }
        base += b_lo * f.ranks[i] * da;
    }
    auto sol = solve(sys, rhs);
    if (!sol) return std::nullopt;
    for (std::size_t i = 1; i <= n; ++i) {
        AlgMatrix hi(a, f.ranks[i - 1], f.ranks[i]);
        for (std::size_t r = 0; r < hi.rows; ++r)
            for (std::size_t c = 0; c < hi.cols; ++c) {
                Matrix coords(da, 1, a->prime());
                for (std::size_t t = 0; t < da; ++t)
                    coords(t, 0) = (*sol)(off[i] + (r * hi.cols + c) * da + t, 0);
                hi.at(r, c) = a->element(coords);
            }
        h.maps.push_back(hi);
    }
    return h;
}

LiftResult lift_module(const ModuleRep& m, const ZeroDivisorSetup& zd, std::size_t horizon) {
    // restricted to pairs (x,x): Ann(x) = (x), which forces x^2 = 0
    if (!(principal_ideal(zd.x).space == principal_ideal(zd.y).space) ||
        !zd.s->mul(zd.x, zd.x).is_zero())
        throw HypothesisFails("(x,x) is not a pair of exact zero-divisors");
    LiftResult res;
    res.horizon = horizon;
    const std::size_t len = std::max<std::size_t>(horizon, 3);
    FreeComplex f = minimal_resolution(m, len);
    PreimageComplex pf = preimage_complex(f, zd.surj);
    ChainEndo s = canonical_endomorphism(pf, zd.x);
    res.obstruction = ext2_class(s, f, m);
    if (!res.obstruction.is_zero) {
        res.outcome = LiftOutcome::obstructed;
        return res;
    }
    auto h = null_homotopy(s, f, len);
    if (!h) {
        res.outcome = LiftOutcome::horizon_inconclusive;
        return res;
    }
    // d# = d~ - x.sigma(h); then d# d# = x(s~ - sigma(dh + hd)) = 0 since
    // the difference lies in (x) and x^2 = 0.
    AlgElement minus_x = negate(zd.x);
    FreeComplex lifted;
    lifted.alg = zd.s;
    lifted.ranks = f.ranks;
    for (std::size_t i = 1; i <= f.length(); ++i) {
        AlgMatrix ht = i <= h->maps.size()
                           ? alg_map_entries(h->h(i), zd.s,
                                             [&](const AlgElement& e) { return zd.surj.lift(e); })
                           : zero_matrix(zd.s, f.ranks[i - 1], f.ranks[i]);
        lifted.diffs.push_back(alg_add(pf.d(i), alg_scale(ht, minus_x)));
    }
    for (std::size_t i = 2; i <= lifted.length(); ++i)
        if (!alg_mul(lifted.d(i - 1), lifted.d(i)).is_zero())
            throw std::logic_error("lifted differentials do not compose to zero");

    ModulePresentation pres;
    pres.alg = zd.s;
    pres.rank = f.ranks[0];
    for (std::size_t c = 0; c < lifted.d(1).cols; ++c) {
        std::vector<AlgElement> col;
        for (std::size_t r = 0; r < pres.rank; ++r) col.push_back(lifted.d(1).at(r, c));
        pres.columns.push_back(col);
    }
    res.lifted_module = realize(pres);
    res.lifted = std::move(lifted);
    res.outcome = LiftOutcome::lifted;
    // periodic differentials repeat verbatim; a zero tail terminates
    res.certificate_all_degrees =
        res.lifted->ranks.back() == 0 || detect_periodicity(*res.lifted).has_value();
    return res;
}

Report verify_lift(const ModuleRep& m_prime, const ModuleRep& m, const AlgebraSurjection& surj,
                   std::size_t horizon, const std::string& label) {
    Report rep;
    rep.scenario = "lift-verification " + label;
    ModuleRep r_mod = inflate(free_module(surj.target, 1), surj);
    ModuleRep reduced = tensor(m_prime, r_mod);
    rep.add("dim M' (x)_S R", num(m.dim), num(reduced.dim));
    if (reduced.dim == m.dim) {
        // conjugate action matrices have equal traces; compare the action
        // of every basis element of R on both sides
        auto trace = [](const Matrix& a) {
            std::uint64_t t = 0;
            for (std::size_t i = 0; i < a.rows(); ++i) t = (t + a(i, i)) % a.prime();
            return static_cast<std::uint32_t>(t);
        };
        bool traces_ok = true;
        for (std::size_t j = 0; j < surj.target->dim(); ++j) {
            Matrix basis_coords(surj.target->dim(), 1, surj.target->prime());
            basis_coords(j, 0) = 1;
            AlgElement over_s = surj.lift(surj.target->element(basis_coords));
            if (trace(m.action[j]) != trace(reduced.action_of(over_s))) traces_ok = false;
        }
        rep.add_check("action traces", "agree on every basis element", traces_ok);
    }
    TorProfile t = tor_dims(m_prime, r_mod, 1, horizon);
    for (std::size_t i = 1; i <= horizon; ++i) rep.add("Tor^S_" + num(i) + "(M',R)", "0", num(t.at(i)));
    return rep;
}

}  // namespace ezd

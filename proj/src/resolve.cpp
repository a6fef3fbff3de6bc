#include "ezd/resolve.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace ezd {

AlgMatrix::AlgMatrix(AlgebraPtr a, std::size_t r, std::size_t c)
    : alg(std::move(a)), rows(r), cols(c) {
    entries.assign(rows * cols, alg->zero());
}

bool AlgMatrix::is_zero() const {
    for (auto& e : entries)
        if (!e.is_zero()) return false;
    return true;
}

bool AlgMatrix::operator==(const AlgMatrix& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (std::size_t i = 0; i < entries.size(); ++i)
        if (!(entries[i] == o.entries[i])) return false;
    return true;
}

bool AlgMatrix::entries_in_m() const {
    for (auto& e : entries)
        if (!alg->in_m(e)) return false;
    return true;
}

std::string AlgMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols; ++c)
            os << (c ? ", " : "") << alg->to_string(at(r, c));
        os << "]\n";
    }
    return os.str();
}

AlgMatrix alg_mul(const AlgMatrix& a, const AlgMatrix& b) {
    assert(a.cols == b.rows && a.alg.get() == b.alg.get());
    AlgMatrix r(a.alg, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            Matrix mm = a.alg->mult_matrix(a.at(i, k));
            for (std::size_t j = 0; j < b.cols; ++j)
                r.at(i, j).coords = r.at(i, j).coords + mm * b.at(k, j).coords;
        }
    return r;
}

AlgMatrix alg_add(const AlgMatrix& a, const AlgMatrix& b) {
    assert(a.rows == b.rows && a.cols == b.cols);
    AlgMatrix r = a;
    for (std::size_t i = 0; i < r.entries.size(); ++i)
        r.entries[i].coords = r.entries[i].coords + b.entries[i].coords;
    return r;
}

AlgMatrix alg_scale(const AlgMatrix& a, const AlgElement& c) {
    AlgMatrix r = a;
    Matrix mm = a.alg->mult_matrix(c);
    for (auto& e : r.entries) e.coords = mm * e.coords;
    return r;
}

AlgMatrix alg_map_entries(const AlgMatrix& a, const AlgebraPtr& target,
                          const std::function<AlgElement(const AlgElement&)>& f) {
    AlgMatrix r(target, a.rows, a.cols);
    for (std::size_t i = 0; i < a.entries.size(); ++i) r.entries[i] = f(a.entries[i]);
    return r;
}

Matrix linearize(const AlgMatrix& a) {
    const std::size_t d = a.alg->dim();
    Matrix m(a.rows * d, a.cols * d, a.alg->prime());
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t c = 0; c < a.cols; ++c)
            if (!a.at(r, c).is_zero())
                m.set_block(r * d, c * d, a.alg->mult_matrix(a.at(r, c)));
    return m;
}

Matrix linearize_on(const AlgMatrix& a, const ModuleRep& n) {
    const std::size_t d = n.dim;
    Matrix m(a.rows * d, a.cols * d, a.alg->prime());
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t c = 0; c < a.cols; ++c)
            if (!a.at(r, c).is_zero()) m.set_block(r * d, c * d, n.action_of(a.at(r, c)));
    return m;
}

Matrix linearize_hom(const AlgMatrix& a, const ModuleRep& n) {
    const std::size_t d = n.dim;
    Matrix m(a.cols * d, a.rows * d, a.alg->prime());
    for (std::size_t r = 0; r < a.rows; ++r)
        for (std::size_t c = 0; c < a.cols; ++c)
            if (!a.at(r, c).is_zero()) m.set_block(c * d, r * d, n.action_of(a.at(r, c)));
    return m;
}

namespace {

// Minimal generators of the A-submodule N of A^rank whose k-basis is the
// columns of `span`. `coord_rows` comes from kernel_with_coords, so a
// vector of N is expressed in that basis by reading those rows. With m*N
// and the candidate basis vectors side by side in one matrix, the rref
// pivots landing in the identity block are exactly the columns of `span`
// chosen greedily modulo m*N plus earlier picks.
std::vector<Matrix> select_generators(const AlgebraPtr& alg, const Matrix& span,
                                      const std::vector<std::size_t>& coord_rows) {
    const std::uint32_t p = alg->prime();
    const std::size_t d = alg->dim();
    const std::size_t K = span.cols();
    if (K == 0) return {};
    std::vector<Matrix> actions;  // m is generated by the variable images
    for (auto& v : alg->ctx.vars) {
        AlgElement e = alg->element(v);
        if (!e.is_zero()) actions.push_back(alg->mult_matrix(e));
    }
    const std::size_t mcols = actions.size() * K;
    Matrix big(K, mcols + K, p);
    for (std::size_t a = 0; a < actions.size(); ++a)
        for (std::size_t g = 0; g < K; ++g) {
            const std::size_t r0 = (coord_rows[g] / d) * d;
            const Matrix& act = actions[a];
            const std::size_t t = coord_rows[g] % d;
            for (std::size_t j = 0; j < K; ++j) {
                std::uint64_t s = 0;
                for (std::size_t u = 0; u < d; ++u)
                    s += std::uint64_t{act(t, u)} * span(r0 + u, j) % p;
                big(g, a * K + j) = static_cast<std::uint32_t>(s % p);
            }
        }
    for (std::size_t j = 0; j < K; ++j) big(j, mcols + j) = 1;
    auto [red, pivots] = rref(big);
    std::vector<Matrix> gens;
    for (auto c : pivots)
        if (c >= mcols) gens.push_back(span.column(c - mcols));
    return gens;
}

AlgElement slice_component(const AlgebraPtr& alg, const Matrix& v, std::size_t r) {
    const std::size_t d = alg->dim();
    return alg->element(v.block(r * d, (r + 1) * d, 0, 1));
}

}  // namespace

FreeComplex minimal_resolution(const ModuleRep& m, std::size_t n) {
    FreeComplex f;
    f.alg = m.alg;
    MinimalGenerators mg = minimal_generators(m);
    f.ranks.push_back(mg.mu);
    f.augmentation = mg.surjection;

    Matrix current = mg.surjection;  // k-linear map A^{b_i} -> previous space
    for (std::size_t i = 1; i <= n; ++i) {
        std::size_t rank = f.ranks.back();
        if (rank == 0) {  // zero module onward
            f.ranks.push_back(0);
            f.diffs.emplace_back(f.alg, 0, 0);
            current = Matrix(0, 0, f.alg->prime());
            continue;
        }
        KernelResult kr = kernel_with_coords(current);
        auto gens = select_generators(f.alg, kr.basis, kr.free_columns);
        AlgMatrix d(f.alg, rank, gens.size());
        for (std::size_t c = 0; c < gens.size(); ++c)
            for (std::size_t r = 0; r < rank; ++r)
                d.at(r, c) = slice_component(f.alg, gens[c], r);
        f.ranks.push_back(gens.size());
        current = linearize(d);
        f.diffs.push_back(std::move(d));
    }
    return f;
}

bool is_complex(const FreeComplex& f) {
    for (std::size_t i = 2; i <= f.length(); ++i)
        if (!alg_mul(f.d(i - 1), f.d(i)).is_zero()) return false;
    return true;
}

bool is_minimal(const FreeComplex& f) {
    for (auto& d : f.diffs)
        if (!d.entries_in_m()) return false;
    return true;
}

bool is_exact(const FreeComplex& f) {
    if (f.length() == 0) return true;
    // at F_0: ker(augmentation) = im(d_1)
    {
        Matrix d1 = linearize(f.d(1));
        Subspace ker(kernel_basis(f.augmentation));
        Subspace img(d1);
        if (!(ker == img)) return false;
    }
    for (std::size_t i = 1; i + 1 <= f.length(); ++i) {
        Subspace ker(kernel_basis(linearize(f.d(i))));
        Subspace img(linearize(f.d(i + 1)));
        if (!(ker == img)) return false;
    }
    return true;
}

BettiTable betti_table(const ModuleRep& m, std::size_t n, const std::string& id) {
    FreeComplex f = minimal_resolution(m, n);
    BettiTable t{id, f.ranks, false};
    for (auto b : t.betti)
        if (b == 0) t.pd_finite = true;
    return t;
}

std::string to_string(GrowthClass g) {
    switch (g) {
        case GrowthClass::zero_finite_pd: return "zero (finite pd)";
        case GrowthClass::bounded: return "bounded";
        case GrowthClass::polynomial: return "polynomial";
        case GrowthClass::exponential: return "exponential";
    }
    return "?";
}

ComplexityEstimate complexity_estimate(const BettiTable& b) {
    if (b.betti.size() < 6) throw TableTooShort("need at least 6 Betti numbers");
    const std::string note = "estimate from finite data";
    if (b.betti.back() == 0) return {GrowthClass::zero_finite_pd, 0.0, note};
    // eventually constant tail window
    std::size_t tail = b.betti.size() / 2;
    bool constant = true;
    for (std::size_t i = tail; i < b.betti.size(); ++i)
        if (b.betti[i] != b.betti[tail]) constant = false;
    if (constant) return {GrowthClass::bounded, 0.0, note};
    // least-squares fit of log beta against log n (polynomial) vs n
    // (exponential) on the tail half
    double sxx = 0, sxy = 0, sx = 0, sy = 0, szz = 0, szy = 0, sz = 0;
    std::size_t cnt = 0;
    for (std::size_t i = tail; i < b.betti.size(); ++i) {
        if (b.betti[i] == 0) continue;
        double x = std::log(static_cast<double>(i));
        double z = static_cast<double>(i);
        double y = std::log(static_cast<double>(b.betti[i]));
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        sz += z; szz += z * z; szy += z * y;
        ++cnt;
    }
    auto residual = [&](double sa, double saa, double say, bool logscale) {
        double n = static_cast<double>(cnt);
        double slope = (n * say - sa * sy) / (n * saa - sa * sa);
        double icpt = (sy - slope * sa) / n;
        double ss = 0;
        for (std::size_t i = tail; i < b.betti.size(); ++i) {
            if (b.betti[i] == 0) continue;
            double a = logscale ? std::log(static_cast<double>(i)) : static_cast<double>(i);
            double y = std::log(static_cast<double>(b.betti[i]));
            double e = y - slope * a - icpt;
            ss += e * e;
        }
        return std::pair<double, double>(ss, slope);
    };
    auto [ss_poly, deg] = residual(sx, sxx, sxy, true);
    auto [ss_exp, rate] = residual(sz, szz, szy, false);
    if (ss_poly <= ss_exp) return {GrowthClass::polynomial, deg, note};
    return {GrowthClass::exponential, rate, note};
}

std::optional<std::size_t> detect_periodicity(const FreeComplex& f) {
    const std::size_t len = f.length();
    for (std::size_t p = 1; p <= len / 2; ++p) {
        bool ok = true;
        for (std::size_t i = 1; i + p <= len && ok; ++i)
            if (!(f.d(i) == f.d(i + p))) ok = false;
        if (ok) return p;
    }
    return std::nullopt;
}

}  // namespace ezd

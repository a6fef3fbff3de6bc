#include "ezd/matrix.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace ezd {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::uint32_t p)
    : rows_(rows), cols_(cols), p_(p), e_(rows * cols, 0) {
    assert(p >= 2);
}

Matrix Matrix::identity(std::size_t n, std::uint32_t p) {
    Matrix m(n, n, p);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

bool Matrix::is_zero() const {
    for (auto v : e_)
        if (v != 0) return false;
    return true;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, p_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

Matrix Matrix::column(std::size_t c) const {
    Matrix v(rows_, 1, p_);
    for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
    return v;
}

Matrix Matrix::block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    assert(r1 <= rows_ && c1 <= cols_ && r0 <= r1 && c0 <= c1);
    Matrix b(r1 - r0, c1 - c0, p_);
    for (std::size_t r = r0; r < r1; ++r)
        for (std::size_t c = c0; c < c1; ++c) b(r - r0, c - c0) = (*this)(r, c);
    return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
    assert(r0 + m.rows() <= rows_ && c0 + m.cols() <= cols_);
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

Matrix Matrix::operator+(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_);
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        std::uint32_t v = r.e_[i] + o.e_[i];
        r.e_[i] = v >= p_ ? v - p_ : v;
    }
    return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
    assert(rows_ == o.rows_ && cols_ == o.cols_ && p_ == o.p_);
    Matrix r = *this;
    for (std::size_t i = 0; i < e_.size(); ++i) {
        std::uint32_t v = r.e_[i] + p_ - o.e_[i];
        r.e_[i] = v >= p_ ? v - p_ : v;
    }
    return r;
}

Matrix Matrix::operator*(const Matrix& o) const {
    assert(cols_ == o.rows_ && p_ == o.p_);
    Matrix r(rows_, o.cols_, p_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            std::uint64_t a = (*this)(i, k);
            if (a == 0) continue;
            const std::uint32_t* orow = o.row_data(k);
            std::uint32_t* rrow = r.row_data(i);
            for (std::size_t j = 0; j < o.cols_; ++j)
                rrow[j] = static_cast<std::uint32_t>((rrow[j] + a * orow[j]) % p_);
        }
    }
    return r;
}

Matrix Matrix::scaled(std::uint32_t c) const {
    Matrix r = *this;
    for (auto& v : r.e_) v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * c % p_);
    return r;
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << '[';
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
        os << "]\n";
    }
    return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    assert(a.rows() == b.rows() && a.prime() == b.prime());
    Matrix r(a.rows(), a.cols() + b.cols(), a.prime());
    r.set_block(0, 0, a);
    r.set_block(0, a.cols(), b);
    return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    assert(a.cols() == b.cols() && a.prime() == b.prime());
    Matrix r(a.rows() + b.rows(), a.cols(), a.prime());
    r.set_block(0, 0, a);
    r.set_block(a.rows(), 0, b);
    return r;
}

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw std::domain_error("fp_inverse: zero element");
    // extended Euclid
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        std::int64_t q = r / nr;
        std::int64_t tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

namespace {

// Barrett reduction: one multiply and shift instead of a hardware divide.
struct Reducer {
    std::uint64_t magic;
    std::uint32_t p;

    explicit Reducer(std::uint32_t prime)
        : magic(~std::uint64_t{0} / prime), p(prime) {}

    std::uint32_t reduce(std::uint64_t v) const {
        std::uint64_t q = static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(v) * magic) >> 64);
        std::uint64_t r = v - q * p;
        if (r >= p) r -= p;
        return static_cast<std::uint32_t>(r);
    }
};

}  // namespace

RrefResult rref(const Matrix& m) {
    Matrix a = m;
    const std::uint32_t p = a.prime();
    const Reducer red(p);
    const std::size_t rows = a.rows(), cols = a.cols();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;  // next pivot row
    // forward pass: eliminate below the pivot only
    for (std::size_t c = 0; c < cols && pr < rows; ++c) {
        std::size_t sel = rows;
        for (std::size_t r = pr; r < rows; ++r) {
            if (a(r, c) != 0) {
                sel = r;
                break;
            }
        }
        if (sel == rows) continue;
        if (sel != pr)
            for (std::size_t j = 0; j < cols; ++j) std::swap(a(sel, j), a(pr, j));
        std::uint64_t inv = fp_inverse(a(pr, c), p);
        std::uint32_t* prow = a.row_data(pr);
        for (std::size_t j = c; j < cols; ++j) prow[j] = red.reduce(prow[j] * inv);
        for (std::size_t r = pr + 1; r < rows; ++r) {
            std::uint64_t f = a(r, c);
            if (f == 0) continue;
            std::uint64_t nf = p - f;
            std::uint32_t* rrow = a.row_data(r);
            for (std::size_t j = c; j < cols; ++j)
                rrow[j] = red.reduce(rrow[j] + nf * prow[j]);
        }
        pivots.push_back(c);
        ++pr;
    }
    // back substitution: clear above each pivot
    for (std::size_t i = pivots.size(); i-- > 0;) {
        const std::size_t c = pivots[i];
        const std::uint32_t* prow = a.row_data(i);
        for (std::size_t r = 0; r < i; ++r) {
            std::uint64_t f = a(r, c);
            if (f == 0) continue;
            std::uint64_t nf = p - f;
            std::uint32_t* rrow = a.row_data(r);
            for (std::size_t j = c; j < cols; ++j)
                rrow[j] = red.reduce(rrow[j] + nf * prow[j]);
        }
    }
    return {std::move(a), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivot_columns.size(); }

KernelResult kernel_with_coords(const Matrix& m) {
    auto [red, pivots] = rref(m);
    const std::uint32_t p = m.prime();
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < cols; ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(cols, free_cols.size(), p);
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        k(fc, j) = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) {
            std::uint32_t v = red(i, fc);
            if (v != 0) k(pivots[i], j) = p - v;
        }
    }
    return {std::move(k), std::move(free_cols)};
}

Matrix kernel_basis(const Matrix& m) { return kernel_with_coords(m).basis; }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw std::invalid_argument("solve: dimension mismatch");
    auto [red, pivots] = rref(hstack(a, b));
    for (auto c : pivots)
        if (c >= a.cols()) return std::nullopt;
    Matrix x(a.cols(), b.cols(), a.prime());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) x(pivots[i], j) = red(i, a.cols() + j);
    return x;
}

Subspace::Subspace(std::size_t ambient, std::uint32_t p)
    : ambient_(ambient), p_(p), ech_(0, ambient, p) {}

Subspace::Subspace(const Matrix& columns)
    : ambient_(columns.rows()), p_(columns.prime()), ech_(0, 0, columns.prime()) {
    auto [red, pivots] = rref(columns.transpose());
    ech_ = red.block(0, pivots.size(), 0, ambient_);
    pivots_ = std::move(pivots);
}

Matrix Subspace::reduce(const Matrix& vecs) const {
    assert(vecs.rows() == ambient_);
    Matrix r = vecs;
    const std::uint32_t p = p_;
    for (std::size_t i = 0; i < ech_.rows(); ++i) {
        std::size_t pc = pivots_[i];
        for (std::size_t j = 0; j < r.cols(); ++j) {
            std::uint64_t f = r(pc, j);
            if (f == 0) continue;
            std::uint64_t nf = p - f;
            for (std::size_t c = pc; c < ambient_; ++c)
                r(c, j) = static_cast<std::uint32_t>((r(c, j) + nf * ech_(i, c)) % p);
        }
    }
    return r;
}

bool Subspace::contains(const Matrix& vecs) const { return reduce(vecs).is_zero(); }

bool Subspace::operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && p_ == o.p_ && ech_ == o.ech_;
}

QuotientSpace::QuotientSpace(Subspace sub) : sub_(std::move(sub)) {
    std::vector<bool> is_pivot(sub_.ambient(), false);
    for (auto c : sub_.pivots()) is_pivot[c] = true;
    for (std::size_t c = 0; c < sub_.ambient(); ++c)
        if (!is_pivot[c]) nonpivots_.push_back(c);
}

Matrix QuotientSpace::project(const Matrix& vecs) const {
    Matrix res = sub_.reduce(vecs);
    Matrix q(nonpivots_.size(), vecs.cols(), vecs.prime());
    for (std::size_t i = 0; i < nonpivots_.size(); ++i)
        for (std::size_t j = 0; j < vecs.cols(); ++j) q(i, j) = res(nonpivots_[i], j);
    return q;
}

Matrix QuotientSpace::lift(const Matrix& vecs) const {
    Matrix r(sub_.ambient(), vecs.cols(), sub_.prime());
    for (std::size_t i = 0; i < nonpivots_.size(); ++i)
        for (std::size_t j = 0; j < vecs.cols(); ++j) r(nonpivots_[i], j) = vecs(i, j);
    return r;
}

Matrix QuotientSpace::induced(const Matrix& op) const {
    return project(op * lift(Matrix::identity(dim(), sub_.prime())));
}

Matrix restrict_to_subspace(const Subspace& s, const Matrix& op) {
    Matrix b = s.basis();
    auto x = solve(b, op * b);
    if (!x) throw std::logic_error("restrict_to_subspace: subspace not invariant");
    return *x;
}

}  // namespace ezd

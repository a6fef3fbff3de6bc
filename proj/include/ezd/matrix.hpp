#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ezd {

// Dense matrix over the prime field F_p. The modulus travels with the
// matrix; mixing moduli is a programming error and asserts.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, std::uint32_t p);

    static Matrix identity(std::size_t n, std::uint32_t p);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::uint32_t prime() const { return p_; }

    std::uint32_t operator()(std::size_t r, std::size_t c) const {
        return e_[r * cols_ + c];
    }
    std::uint32_t& operator()(std::size_t r, std::size_t c) {
        return e_[r * cols_ + c];
    }
    const std::uint32_t* row_data(std::size_t r) const { return e_.data() + r * cols_; }
    std::uint32_t* row_data(std::size_t r) { return e_.data() + r * cols_; }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix column(std::size_t c) const;
    // Rows [r0,r1) and columns [c0,c1).
    Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& m);

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(std::uint32_t c) const;
    bool operator==(const Matrix& o) const = default;

    std::string to_string() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::uint32_t p_ = 2;
    std::vector<std::uint32_t> e_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

std::uint32_t fp_inverse(std::uint32_t a, std::uint32_t p);

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivot_columns;
};

// Unique reduced row echelon form, deterministic pivoting (first nonzero
// entry in column order).
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Columns form a basis of the right null space; cols = m.cols() - rank(m).
Matrix kernel_basis(const Matrix& m);

// Kernel basis plus the free-column indices: basis(free_columns[j], j) = 1
// and basis(free_columns[j'], j) = 0 for j' != j, so reading the rows in
// free_columns expresses any null-space vector in this basis.
struct KernelResult {
    Matrix basis;
    std::vector<std::size_t> free_columns;
};
KernelResult kernel_with_coords(const Matrix& m);

// Exact solution of a*x = b, or nullopt when b is outside the column
// space of a. Free variables are set to zero.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// A subspace of k^n spanned by the columns of a matrix, stored as an
// echelonized basis so that membership and reduction are cheap.
class Subspace {
public:
    Subspace(std::size_t ambient, std::uint32_t p);  // zero subspace
    explicit Subspace(const Matrix& columns);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return ech_.rows(); }
    std::uint32_t prime() const { return p_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    // Residual of each column after reduction modulo the subspace.
    Matrix reduce(const Matrix& vecs) const;
    bool contains(const Matrix& vecs) const;
    bool operator==(const Subspace& o) const;

    // ambient x dim matrix whose columns are the echelon basis.
    Matrix basis() const { return ech_.transpose(); }

private:
    std::size_t ambient_;
    std::uint32_t p_;
    Matrix ech_;  // dim x ambient, reduced row echelon, no zero rows
    std::vector<std::size_t> pivots_;
};

// Quotient of k^n by a subspace, coordinatized on the non-pivot axes.
class QuotientSpace {
public:
    explicit QuotientSpace(Subspace sub);

    std::size_t dim() const { return nonpivots_.size(); }
    std::size_t ambient() const { return sub_.ambient(); }

    Matrix project(const Matrix& vecs) const;  // n x m -> q x m
    Matrix lift(const Matrix& vecs) const;     // q x m -> n x m
    // Operator on k^n preserving the subspace, induced on the quotient.
    Matrix induced(const Matrix& op) const;

private:
    Subspace sub_;
    std::vector<std::size_t> nonpivots_;
};

// Restriction of an operator to an invariant subspace, in the echelon
// basis of the subspace.
Matrix restrict_to_subspace(const Subspace& s, const Matrix& op);

}  // namespace ezd

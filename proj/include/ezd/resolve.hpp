#pragma once

#include <functional>
#include <optional>
#include <string>

#include "ezd/module.hpp"

namespace ezd {

// Matrix with entries in a LocalAlgebra; carrier for differentials and
// chain maps between free modules A^cols -> A^rows.
struct AlgMatrix {
    AlgebraPtr alg;
    std::size_t rows = 0, cols = 0;
    std::vector<AlgElement> entries;  // row-major

    AlgMatrix() = default;
    AlgMatrix(AlgebraPtr a, std::size_t r, std::size_t c);

    const AlgElement& at(std::size_t r, std::size_t c) const { return entries[r * cols + c]; }
    AlgElement& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    bool is_zero() const;
    bool operator==(const AlgMatrix& o) const;
    // every entry in the maximal ideal
    bool entries_in_m() const;
    std::string to_string() const;
};

AlgMatrix alg_mul(const AlgMatrix& a, const AlgMatrix& b);
AlgMatrix alg_add(const AlgMatrix& a, const AlgMatrix& b);
AlgMatrix alg_scale(const AlgMatrix& a, const AlgElement& c);
// Entrywise image under a map between algebras (a section or projection).
AlgMatrix alg_map_entries(const AlgMatrix& a, const AlgebraPtr& target,
                          const std::function<AlgElement(const AlgElement&)>& f);

// k-linearization: block (r,c) is the multiplication matrix of entry (r,c),
// i.e. the action on free modules over the algebra itself.
Matrix linearize(const AlgMatrix& a);
// Action on N^cols -> N^rows after tensoring with a module N.
Matrix linearize_on(const AlgMatrix& a, const ModuleRep& n);
// Precomposition Hom(A^rows, N) -> Hom(A^cols, N); block (c,r) acts.
Matrix linearize_hom(const AlgMatrix& a, const ModuleRep& n);

// F_0 <- F_1 <- ... <- F_n with ranks b_0..b_n and differentials with
// entries in m at every spot (minimality), plus the chosen augmentation
// F_0 ->> M as a k-linear matrix.
struct FreeComplex {
    AlgebraPtr alg;
    std::vector<std::size_t> ranks;
    std::vector<AlgMatrix> diffs;  // diffs[i-1] = d_i : F_i -> F_{i-1}
    Matrix augmentation;           // dim M x (b_0 * dim A)

    std::size_t length() const { return diffs.size(); }
    const AlgMatrix& d(std::size_t i) const { return diffs[i - 1]; }
};

FreeComplex minimal_resolution(const ModuleRep& m, std::size_t n);

// d_{i-1} d_i = 0 for all computed i.
bool is_complex(const FreeComplex& f);
// all differential entries in m
bool is_minimal(const FreeComplex& f);
// ker(d_i) = im(d_{i+1}) k-linearly at spots 1..length-1, and
// ker(augmentation) = im(d_1).
bool is_exact(const FreeComplex& f);

struct BettiTable {
    std::string module_id;
    std::vector<std::size_t> betti;
    bool pd_finite = false;
};

BettiTable betti_table(const ModuleRep& m, std::size_t n, const std::string& id = "M");

enum class GrowthClass { zero_finite_pd, bounded, polynomial, exponential };
std::string to_string(GrowthClass g);

struct TableTooShort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ComplexityEstimate {
    GrowthClass growth;
    double degree = 0.0;  // fitted polynomial degree when polynomial
    std::string note;     // always flags "estimate from finite data"
};

ComplexityEstimate complexity_estimate(const BettiTable& b);

// Smallest period p <= length/2 with identical differential matrices.
std::optional<std::size_t> detect_periodicity(const FreeComplex& f);

}  // namespace ezd

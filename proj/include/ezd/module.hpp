#pragma once

#include <vector>

#include "ezd/algebra.hpp"

namespace ezd {

// Finitely generated module as a finite-dimensional k-space with one
// action matrix per algebra basis element; action[0] is the identity.
struct ModuleRep {
    AlgebraPtr alg;
    std::size_t dim = 0;
    std::vector<Matrix> action;

    bool is_zero() const { return dim == 0; }
    // Action of an arbitrary algebra element.
    Matrix action_of(const AlgElement& a) const;
};

// Cokernel presentation: columns of algebra-element relations on A^rank.
struct ModulePresentation {
    AlgebraPtr alg;
    std::size_t rank = 0;
    std::vector<std::vector<AlgElement>> columns;  // each of length rank
};

// Internal consistency: identity action, structure-constant compatibility,
// commuting actions. Throws std::logic_error on violation.
void check_module(const ModuleRep& m);

ModuleRep realize(const ModulePresentation& p);
ModuleRep free_module(const AlgebraPtr& a, std::size_t rank);
ModuleRep residue_field(const AlgebraPtr& a);
ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);

// View an R-module over S through S ->> R; x acts as zero.
ModuleRep inflate(const ModuleRep& m, const AlgebraSurjection& f);

struct KernelImageQuotient {
    ModuleRep ann;       // Ann_N(y)
    ModuleRep image;     // yN
    ModuleRep quotient;  // N/yN
};
KernelImageQuotient mult_kernel_image(const AlgElement& y, const ModuleRep& n);

ModuleRep tensor(const ModuleRep& m, const ModuleRep& n);
ModuleRep hom(const ModuleRep& m, const ModuleRep& n);

struct MinimalGenerators {
    std::size_t mu;     // dim M/mM
    Matrix surjection;  // dim x (mu * dimA): k-linearized A^mu ->> M
    Matrix generators;  // dim x mu, the chosen lifts
};
MinimalGenerators minimal_generators(const ModuleRep& m);

// Subquotient helpers shared by the homological routines.
ModuleRep submodule_from_subspace(const ModuleRep& n, const Subspace& s);
ModuleRep quotient_module(const ModuleRep& n, const Subspace& s);

}  // namespace ezd

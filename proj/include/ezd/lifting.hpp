#pragma once

#include <optional>

#include "ezd/homology.hpp"

namespace ezd {

struct DivisionFails : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct ResolutionTooShort : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Entrywise sigma-lift of a complex over R to S; d(i-1)d(i) lands in (x)
// instead of vanishing.
struct PreimageComplex {
    AlgebraSurjection surj;
    FreeComplex over_r;             // the original
    std::vector<AlgMatrix> diffs;   // lifted differentials over S

    const AlgMatrix& d(std::size_t i) const { return diffs[i - 1]; }
    std::size_t length() const { return diffs.size(); }
};

// Degree -2 chain endomorphism s_i : F_i -> F_{i-2} over R, i >= 2.
struct ChainEndo {
    std::vector<AlgMatrix> maps;  // maps[i-2] = s_i

    const AlgMatrix& s(std::size_t i) const { return maps[i - 2]; }
    std::size_t top() const { return maps.size() + 1; }  // largest computed i
    bool is_zero() const;
};

// Class of s in Ext^2_R(M,M), stored as the value vector of pi.s_2 on the
// free generators of F_2 together with the coboundary membership flag.
struct Obstruction {
    Matrix coordinates;  // (dim M * b_2) x 1
    bool is_zero = false;
};

// h_i : F_i -> F_{i-1} over R with s_i = d_{i-1} h_i + h_{i-1} d_i.
struct Homotopy {
    std::vector<AlgMatrix> maps;  // maps[i-1] = h_i, i >= 1 (h_1 may be zero)

    const AlgMatrix& h(std::size_t i) const { return maps[i - 1]; }
};

enum class LiftOutcome { lifted, obstructed, horizon_inconclusive };

struct LiftResult {
    LiftOutcome outcome;
    Obstruction obstruction;                 // meaningful when obstructed (or zero)
    std::optional<FreeComplex> lifted;       // complex over S with d#
    std::optional<ModuleRep> lifted_module;  // M' = coker d#_1
    std::size_t horizon = 0;
    bool certificate_all_degrees = false;    // periodicity upgrade
};

PreimageComplex preimage_complex(const FreeComplex& f, const AlgebraSurjection& surj);

// Canonical s with entries solving x * u = (d~ d~) entry; reduced mod (x).
ChainEndo canonical_endomorphism(const PreimageComplex& pf, const AlgElement& x);

Obstruction ext2_class(const ChainEndo& s, const FreeComplex& f, const ModuleRep& m);

std::optional<Homotopy> null_homotopy(const ChainEndo& s, const FreeComplex& f,
                                      std::size_t horizon);

// Full dichotomy for the pair (x,x): obstructed when [s] != 0, otherwise
// build d# = d~ + x sigma(h) and return M' = coker d#_1.
LiftResult lift_module(const ModuleRep& m, const ZeroDivisorSetup& zd, std::size_t horizon);

Report verify_lift(const ModuleRep& m_prime, const ModuleRep& m, const AlgebraSurjection& surj,
                   std::size_t horizon, const std::string& label = "M'");

}  // namespace ezd

#pragma once

#include "ezd/report.hpp"
#include "ezd/resolve.hpp"

namespace ezd {

struct TorProfile {
    std::string pair_id;
    std::size_t lo = 0;
    std::vector<std::size_t> dims;  // dims[i] = dim Tor_{lo+i}

    std::size_t at(std::size_t i) const { return dims.at(i - lo); }
};
using ExtProfile = TorProfile;

// dim_k Tor^A_i(M,N) for lo <= i <= hi, via a minimal resolution of M
// tensored with N.
TorProfile tor_dims(const ModuleRep& m, const ModuleRep& n, std::size_t lo, std::size_t hi);
// dim_k Ext_A^i(M,N) via Hom of the resolution into N.
ExtProfile ext_dims(const ModuleRep& m, const ModuleRep& n, std::size_t lo, std::size_t hi);

struct HypothesisFails : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A verified pair of exact zero-divisors (x, y) in S together with the
// quotient R = S/(x).
struct ZeroDivisorSetup {
    AlgebraPtr s;
    AlgElement x, y;
    AlgebraPtr r;
    AlgebraSurjection surj;
};

// Runs exact_zero_divisor_partner and the quotient pipeline; throws
// HypothesisFails when x is not an exact zero-divisor.
ZeroDivisorSetup make_setup(const AlgebraPtr& s, const AlgElement& x);

// Residue-field gate: the verifiers equate length with k-dimension, which
// needs dim S/m = 1; true by construction here (basis monomials), kept as
// an explicit check.
void require_prime_residue_field(const AlgebraPtr& s);

// Lemma: Tor^S_q(R,N) is N, N/yN, Ann_N(y) by parity; Ext with the
// parities swapped. N is an R-module.
Report verify_change_of_rings(const ZeroDivisorSetup& zd, const ModuleRep& n_over_r,
                              std::size_t horizon, const std::string& label = "N");

// Vanishing transfer: with yN = 0 and Tor^R_{1..n}(M,N) = 0, every
// dim Tor^S_i(M,N) equals dim M (x) N for 1 <= i <= n-1, nonzero when the
// modules are; Ext side against dim Hom(M,N).
Report verify_vanishing_transfer(const ZeroDivisorSetup& zd, const ModuleRep& m_over_r,
                                 const ModuleRep& n_over_r, std::size_t horizon,
                                 const std::string& label = "(M,N)");

// Minimal-generator non-vanishing: Tor^S_i(M,N) != 0 for all i.
Report verify_nonvanishing(const ZeroDivisorSetup& zd, const ModuleRep& m_over_r,
                           const ModuleRep& n_over_r, std::size_t horizon,
                           const std::string& label = "(M,N)");

// Betti sandwich for pairs, plus the minimal-generator summation equality
// for module Betti numbers.
Report verify_betti_bounds(const ZeroDivisorSetup& zd, const ModuleRep& m_over_r,
                           const ModuleRep& n_over_r, std::size_t horizon,
                           const std::string& label = "(M,N)");

}  // namespace ezd

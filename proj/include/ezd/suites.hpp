#pragma once

#include "ezd/homology.hpp"
#include "ezd/lifting.hpp"

namespace ezd {

struct SuiteOptions {
    std::uint64_t seed = 1;
    std::size_t random_count = 0;  // extra random modules per scenario family
    std::size_t horizon = 6;
};

// suite is one of lemma | transfer | nonvanishing | betti | lifting |
// properties | all. Reports come back in a fixed order regardless of
// execution order.
std::vector<Report> run_suites(const AlgebraPtr& s, const AlgElement& x,
                               const std::string& suite, const SuiteOptions& opt);

}  // namespace ezd

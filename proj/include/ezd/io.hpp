#pragma once

#include <random>

#include "ezd/module.hpp"

namespace ezd {

// On-disk ring description: field line, variable line, optional order
// line, then the relation ideal one polynomial per line between `ideal`
// and `end`.
struct RingFile {
    std::uint32_t p = 32003;
    std::vector<std::string> vars;
    MonomialOrder order = MonomialOrder::degrevlex;
    std::vector<std::string> relations;
};

// Module description over an ambient ring: `module rank=<n>` then one
// bracketed relation column per line between `relations` and `end`.
struct ModuleFile {
    std::size_t rank = 0;
    std::vector<std::vector<std::string>> columns;
};

RingFile parse_ring_file(const std::string& text);
ModuleFile parse_module_file(const std::string& text);

std::string print_ring_file(const RingFile& rf);
std::string print_module_file(const ModuleFile& mf);

// Overrides the file's characteristic when prime != 0.
AlgebraPtr ring_from_file(const RingFile& rf, std::uint32_t prime = 0);
ModulePresentation module_from_file(const ModuleFile& mf, const AlgebraPtr& alg);

// Presentation matrix in the module file format (for reports).
ModuleFile module_file_of(const ModulePresentation& p);

// Throws std::runtime_error when the file cannot be read.
std::string read_text_file(const std::string& path);

// Seeded random presentation: rank <= 3, at most 4 relation columns,
// entries uniform over {0} and the non-unit basis monomials.
ModulePresentation random_presentation(const AlgebraPtr& a, std::mt19937_64& rng);

}  // namespace ezd

#pragma once

#include "exacthh/module.hpp"

namespace exacthh {

/* A named instance from the built-in corpus: an algebra, optionally a
 * morphism phi : B -> A into it, an ideal span (inside the algebra), one-sided
 * modules X (right) and Y (left) for Tor/Ext runs, and a bimodule M for
 * Hochschild runs.  Checks take what they need and ignore the rest. */
struct PresetInstance {
    std::string name;
    std::string description;
    Algebra algebra;
    std::optional<AlgebraMorphism> morphism;
    std::optional<Subspace> ideal_span;
    std::optional<Module> left_simple;  // X, a right module
    std::optional<Module> right_simple; // Y, a left module
    std::optional<Module> coefficients; // M, a bimodule
};

/* throws InputError for unknown names */
PresetInstance preset(const std::string& name, const FieldSpec& field);

std::vector<std::pair<std::string, std::string>> preset_catalog();

} // namespace exacthh

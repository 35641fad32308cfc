#pragma once

#include "exacthh/checks.hpp"

#include <string>

namespace exacthh {

/* JSON loaders for the on-disk input formats.  Scalars are integers or
 * strings like "2/3"; a malformed or missing field raises InputError naming
 * the file and the field.
 *
 *   algebra:   {"field": {"char": 0}, "basis": ["x", ...],
 *               "unit": [..dim..], "table": [[[..dim..] x dim] x dim]}
 *              table[i][j] = coefficients of basis[i] * basis[j]
 *   module:    {"parity": "left"|"right"|"bi", "dim": d,
 *               "left":  [dim matrices d x d, one per basis element],
 *               "right": [likewise]}  (each side only when the parity has it)
 *   span:      {"vectors": [[..dim..], ...]}  in the coordinates of the
 *              algebra it accompanies
 *   morphism:  {"source": <algebra object>, "matrix": [[..] x target dim]}
 *              columns indexed by source basis, rows by target basis
 */
Algebra load_algebra(const std::string& path);
Module load_module(const std::string& path, const Algebra& over);
Subspace load_span(const std::string& path, const Algebra& over);
AlgebraMorphism load_morphism(const std::string& path, const Algebra& target);

/* canonical JSON rendering of a report; key order and formatting are fixed,
 * so equal reports serialize to identical bytes */
std::string report_json(const CheckReport& rep);

} // namespace exacthh

#pragma once

#include "exacthh/filtration.hpp"
#include "exacthh/flatness.hpp"
#include "exacthh/report.hpp"

namespace exacthh {

/* Verification suites.  Each takes a truncation window `max_degree`, asserts
 * nothing above what the builders certify, and returns a CheckReport whose
 * identity ledger carries every comparison behind the verdict.  Modules are
 * over the target algebra of the morphism throughout; restrictions along the
 * morphism are formed internally where the smaller algebra is needed. */

/* acyclicity of the Wodzicki complex of the ideal up to max_degree */
CheckReport check_hunital(const Ideal& ideal, int max_degree);

/* flatness of A/im(phi) as a module over im(phi), witness by witness */
CheckReport check_rflat(const AlgebraMorphism& phi, const FlatnessOptions& opt = {});

/* ideals that act invisibly on both modules can be passed to the quotient:
 * Tor^B(X, Y) against Tor^{B/I}(X, Y) column by column */
CheckReport check_prop_extension(const Algebra& b, const Subspace& ideal_span, const Module& x,
                                 const Module& y, int max_degree);

/* the three-term Tor sequence of B -> A on (X right, Y left), run through the
 * two-sided bar filtration and its splice ledger */
CheckReport check_jz_tor(const AlgebraMorphism& phi, const Module& x, const Module& y,
                         int max_degree, const FlatnessOptions& opt = {});

/* Ext version on left modules, realized through k-duals of the Tor run */
CheckReport check_jz_ext(const AlgebraMorphism& phi, const Module& x, const Module& y,
                         int max_degree, const FlatnessOptions& opt = {});

/* Hochschild version with bimodule coefficients: filtration splice plus the
 * chain-level snake sequence */
CheckReport check_jz_hh(const AlgebraMorphism& phi, const Module& m, int max_degree,
                        const FlatnessOptions& opt = {});

/* coefficient-free Hochschild and cyclic sequences of an inclusion */
CheckReport check_jz_hc(const AlgebraMorphism& phi, int max_degree,
                        const FlatnessOptions& opt = {});

/* excision/relative ledger of an arbitrary phi with H-unital kernel: the
 * mapping cone of phi_* against HH of the kernel and the relative theory */
CheckReport check_all_in_one(const AlgebraMorphism& phi, int max_degree,
                             const FlatnessOptions& opt = {});

/* plain computations, each cross-checked along an independent route */
CheckReport run_hh(const Algebra& a, const Module& m, int max_degree);
CheckReport run_hc(const Algebra& a, int max_degree);
CheckReport run_tor(const Algebra& a, const Module& x, const Module& y, int max_degree);
CheckReport run_ext(const Algebra& a, const Module& x, const Module& y, int max_degree);

} // namespace exacthh

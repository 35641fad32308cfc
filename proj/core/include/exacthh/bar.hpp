#pragma once

#include "exacthh/chain_complex.hpp"
#include "exacthh/module.hpp"
#include "exacthh/tensor_space.hpp"

namespace exacthh {

/* X ox A^{ox n} ox Y for n = 0..N with the alternating face differential
 * (x a_1, the adjacent products, a_n y); X a right and Y a left A-module.
 * Homology is Tor^A_*(X, Y), certified through N-1. */
ChainComplex two_sided_bar(const Module& x, const Algebra& a, const Module& y, int N);

/* Same complex with every tensor junction taken over B along phi : B -> A
 * and, if `normalized`, the middle slots reduced mod phi(B).  Homology is the
 * B-relative Tor of the pair.  spaces[n] presents degree n as a quotient of
 * the flattened X ox A^{ox n} ox Y. */
struct RelativeBarComplex {
    ChainComplex complex;
    std::vector<QuotientSpace> spaces;
};
RelativeBarComplex relative_two_sided_bar(const Module& x, const AlgebraMorphism& phi,
                                          const Module& y, int N, bool normalized);

/* b'-complex of a bare (possibly non-unital) product table: degree n hosts
 * I^{ox n+1}, the differential runs over the n adjacent products and there is
 * no wraparound term.  H_0 = I / I^2; acyclicity is H-unitality. */
ChainComplex nonunital_bar(const MultTable& t, int N);

/* Cochain complex computing Ext_A^*(X, Y) for left A-modules X and Y:
 * C^n = Hom_k(A^{ox n} ox X, Y), flattened as (Y index) * dim + (argument
 * index), with the bar coboundary. */
CochainComplex ext_cochain(const Module& x, const Algebra& a, const Module& y, int N);

} // namespace exacthh

#pragma once

#include "exacthh/algebra.hpp"

namespace exacthh {

/* A finite-dimensional space with a left action of `left_algebra` and/or a
 * right action of `right_algebra`.  Both present (and commuting) makes a
 * bimodule; the two algebras may differ, covering B-A-bimodules.
 *
 * Conventions: left[i] is the matrix of m -> e_i . m and right[j] is the
 * matrix of m -> m . e_j, so right[j] * right[i] represents m . (e_i e_j). */
struct Module {
    FieldSpec field;
    int dim = 0;
    std::optional<Algebra> left_algebra;
    std::optional<Algebra> right_algebra;
    std::vector<Matrix> left;
    std::vector<Matrix> right;

    bool has_left() const { return left_algebra.has_value(); }
    bool has_right() const { return right_algebra.has_value(); }

    Matrix left_of(const std::vector<Scalar>& a) const;  // sum a_i left[i]
    Matrix right_of(const std::vector<Scalar>& a) const; // sum a_i right[i]
    std::vector<Scalar> act_left(const std::vector<Scalar>& a, const std::vector<Scalar>& m) const;
    std::vector<Scalar> act_right(const std::vector<Scalar>& m, const std::vector<Scalar>& a) const;
};

/* Throws InputError naming the first violated axiom: associativity of each
 * action against the structure constants, unitality, and for bimodules the
 * commutation of the two actions. */
void validate_module(const Module& m);

Module left_module(const Algebra& a, std::vector<Matrix> action);
Module right_module(const Algebra& a, std::vector<Matrix> action);
Module bimodule(const Algebra& la, const Algebra& ra, std::vector<Matrix> l, std::vector<Matrix> r);

Module left_regular(const Algebra& a);
Module right_regular(const Algebra& a);
Module regular_bimodule(const Algebra& a);

/* one-dimensional module given by an algebra map chi : A -> k (components in
 * the basis of A); chi is validated as part of validate_module */
Module character_left_module(const Algebra& a, const std::vector<Scalar>& chi);
Module character_right_module(const Algebra& a, const std::vector<Scalar>& chi);

/* restriction of scalars along f on one side; the other side is untouched */
Module restrict_left(const Module& m, const AlgebraMorphism& f);
Module restrict_right(const Module& m, const AlgebraMorphism& f);

/* linear dual: a right action transposes into a left action and conversely,
 * so the dual of a B-A-bimodule is an A-B-bimodule */
Module dual_module(const Module& m);

struct ModuleQuotient {
    Module module;
    QuotientSpace space;
};

/* quotient by a subspace invariant under all present actions */
ModuleQuotient quotient_module(const Module& m, const Subspace& s);

/* A / f(B) as a B-bimodule, for an algebra map f : B -> A */
ModuleQuotient cokernel_bimodule(const AlgebraMorphism& f);

/* M ox_B N over B = m.right_algebra = n.left_algebra.  The quotient lives in
 * the flattened M ox N with index i * n.dim + j (left factor most
 * significant); the result keeps m's left action and n's right action. */
struct TensorOverResult {
    Module module;
    QuotientSpace space;
};
TensorOverResult tensor_over(const Module& m, const Module& n);

/* An A-bimodule viewed as a left module over A ox A^op; envelope basis (i,j)
 * at flat index i*dim(A)+j acts by left[i] * right[j]. */
Module envelope_left_module(const Module& m, const Algebra& envelope);

/* the same bimodule as a right A ox A^op module: m . (i,j) = e_j m e_i */
Module envelope_right_module(const Module& m, const Algebra& envelope);

} // namespace exacthh

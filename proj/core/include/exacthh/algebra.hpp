#pragma once

#include <optional>
#include <string>
#include <vector>

#include "exacthh/subspace.hpp"

namespace exacthh {

/* Bilinear multiplication on k^dim given by structure constants
 * e_i * e_j = sum_k table[i][j][k] e_k.  Not assumed unital or associative;
 * Algebra layers the unital associative axioms on top, Ideal reuses the
 * restricted (possibly non-unital) table. */
struct MultTable {
    FieldSpec field;
    int dim = 0;
    std::vector<std::vector<std::vector<Scalar>>> table;

    static MultTable zero(FieldSpec f, int dim);

    const std::vector<Scalar>& product(int i, int j) const { return table[i][j]; }
    std::vector<Scalar> mult(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const;
    Matrix left_mult(int i) const;                          // L_i : x -> e_i x
    Matrix left_mult_of(const std::vector<Scalar>& a) const;
    Matrix right_mult_of(const std::vector<Scalar>& a) const;

    /* first basis triple (i,j,k) with (e_i e_j) e_k != e_i (e_j e_k), if any */
    std::optional<std::array<int, 3>> associativity_defect() const;
};

struct Algebra {
    MultTable mult;
    std::vector<std::string> labels;
    std::vector<Scalar> unit;

    int dim() const { return mult.dim; }
    const FieldSpec& field() const { return mult.field; }

    std::vector<Scalar> basis_vector(int i) const;
    std::string describe(int i) const { return labels[i]; }
};

/* Throws InputError naming the first failing associativity triple or unit law. */
void validate_algebra(const Algebra& a);

/* structural identity: same field, dimension, unit, and structure constants */
bool same_algebra(const Algebra& a, const Algebra& b);

struct AlgebraMorphism {
    Algebra source;
    Algebra target;
    Matrix matrix; // target.dim x source.dim, columns = images of source basis

    Subspace image() const;
    bool is_injective() const;
    bool is_surjective() const;
};

/* Multiplicativity on all basis pairs plus unit preservation. */
void validate_morphism(const AlgebraMorphism& f);

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f); // g after f

/* Two-sided ideal of an ambient algebra, carrying the restricted
 * (possibly non-unital) multiplication in the canonical span basis. */
struct Ideal {
    Algebra ambient;
    Subspace span;       // canonical basis vectors in ambient coordinates
    MultTable restricted; // products of span basis elements in span coordinates

    int dim() const { return span.dim(); }
};

/* Validates two-sided absorption; errors name the violating product. */
Ideal ideal_of(const Algebra& a, const Subspace& span);

struct SubalgebraInclusion {
    Algebra sub;
    AlgebraMorphism inclusion;
};

/* Validates multiplicative closure and that the span contains the ambient unit. */
SubalgebraInclusion subalgebra_inclusion(const Algebra& a, const Subspace& span);

struct QuotientAlgebra {
    Algebra quotient;
    AlgebraMorphism projection;
    QuotientSpace space; // records the chosen coset representatives
};

QuotientAlgebra quotient_algebra(const Algebra& a, const Ideal& i);

/* A ox A^op with basis (i,j) ~ e_i ox e_j^op flattened row-major. */
Algebra enveloping_algebra(const Algebra& a);

/* Jacobson radical over a characteristic-0 field: kernel of the trace form
 * (x,y) -> trace(L_x L_y), verified to be a nilpotent two-sided ideal before
 * returning.  Over F_p this criterion is unsound in general, so the caller
 * must supply a radical; this function throws InputError instead. */
Subspace radical(const Algebra& a);

/* Verifies a user-supplied subspace is a nilpotent two-sided ideal; used as
 * the characteristic-p fallback.  Throws InputError when it is not. */
void validate_radical_candidate(const Algebra& a, const Subspace& candidate);

// ---- preset families ----

Algebra ground_field(FieldSpec f);
Algebra truncated_polynomial(FieldSpec f, int n); // k[x]/(x^n), n >= 1
Algebra dual_numbers(FieldSpec f);                // k[x]/(x^2)
Algebra upper_triangular(FieldSpec f, int n);     // basis e_ij, i <= j, lex order
Algebra product_field(FieldSpec f, int m);        // k x ... x k
/* monoid given by its multiplication table g_i g_j = g_{table[i][j]} and the
 * index of its identity; the table is checked for associativity */
Algebra monoid_algebra(FieldSpec f, const std::vector<std::vector<int>>& table,
                       int identity_index, const std::vector<std::string>& labels = {});
/* A ox B with componentwise product; used for group rings over a base. */
Algebra tensor_algebra(const Algebra& a, const Algebra& b);

} // namespace exacthh

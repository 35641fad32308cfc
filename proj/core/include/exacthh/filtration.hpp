#pragma once

#include "exacthh/hochschild.hpp"
#include "exacthh/spectral.hpp"

namespace exacthh {

/* A change of basis putting a distinguished subspace (the image of a
 * subalgebra inclusion, or an ideal) onto the first sub_dim coordinates.
 * With the subspace in coordinate position, every filtration layer below
 * becomes a span of standard basis tensors, which keeps the layer subspaces
 * canonical and cheap.  The complement is spanned by the original basis
 * vectors at the recorded indices. */
struct AdaptedAlgebra {
    Algebra algebra;              // the same algebra in the adapted basis
    AlgebraMorphism to_adapted;   // iso, original -> adapted
    AlgebraMorphism from_adapted; // inverse iso
    int sub_dim = 0;              // the distinguished first coordinates
    std::vector<int> complement_labels; // original basis indices spanning the rest
};

/* adapted basis {phi(b_0), ..., phi(b_{s-1}), complement}; phi must be
 * injective (pass the image subalgebra of a non-injective map instead) */
AdaptedAlgebra adapt_to_image(const AlgebraMorphism& phi);

/* adapted basis {canonical ideal basis, complement} */
AdaptedAlgebra adapt_to_ideal(const Algebra& b, const Subspace& ideal_span);

/* carry a module across the change of basis (every action present) */
Module transport_module(const Module& m, const AdaptedAlgebra& ad);

/* CH_*(A, M) filtered by the number of algebra slots outside phi(B); layer 0
 * is CH_*(B, M) in the adapted coordinates.  Built at truncation N with
 * filtration indices 0..N. */
struct HochschildFiltration {
    AdaptedAlgebra adapted;
    Module coefficients; // M carried to the adapted basis
    FilteredComplex filtered;
};
HochschildFiltration hochschild_filtration(const AlgebraMorphism& phi, const Module& m, int N);

/* coefficient-free variant on CH_*(A) counting every slot including the
 * zeroth, so the layers are stable under the cyclic rotations; filtration
 * indices 0..N+1 */
struct CyclicFiltration {
    AdaptedAlgebra adapted;
    FilteredComplex filtered;
    CyclicStructure cyclic; // on the adapted chains
};
CyclicFiltration cyclic_filtration(const AlgebraMorphism& phi, int N);

/* exact degreewise check that every layer is rotation-stable */
void validate_cyclic_layers(const CyclicFiltration& cf);

/* CB_*(X; A; Y) filtered by the number of slots outside phi(B); layer 0 is
 * CB_*(X; B; Y) in the adapted coordinates */
struct BarFiltration {
    AdaptedAlgebra adapted;
    Module left, right; // X and Y carried to the adapted basis
    FilteredComplex filtered;
};
BarFiltration bar_filtration(const Module& x, const AlgebraMorphism& phi, const Module& y, int N);

/* CB_*(X; B; Y) filtered by the number of slots outside a two-sided ideal I
 * that acts by zero on X and Y; the top graded row reproduces
 * CB_*(X; B/I; Y), whose algebra is returned alongside */
struct IdealFiltration {
    AdaptedAlgebra adapted; // B adapted to the ideal
    Module left, right;
    QuotientAlgebra quotient; // B/I in the original coordinates
    FilteredComplex filtered;
};
IdealFiltration ideal_filtration(const Module& x, const Algebra& b, const Subspace& ideal_span,
                                 const Module& y, int N);

} // namespace exacthh

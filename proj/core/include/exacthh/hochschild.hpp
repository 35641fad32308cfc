#pragma once

#include "exacthh/bar.hpp"

namespace exacthh {

/* CB_n = A^{ox n+2} with the face-sum boundary and no wraparound; the
 * two-sided bar construction of A over itself, a resolution of A */
ChainComplex bar_complex(const Algebra& a, int N);

/* CH_n(A, M) = M ox A^{ox n} with the Hochschild boundary: the first face
 * feeds a_1 into the coefficient slot from the right, the inner faces merge
 * adjacent algebra slots, and the last wraps a_n around to act from the
 * left.  Truncated at N, so homology is certified through N-1. */
ChainComplex hochschild_complex(const Algebra& a, const Module& m, int N);

/* coefficient-free CH_n(A) = A^{ox n+1} (coefficients in A itself) */
ChainComplex hochschild_complex(const Algebra& a, int N);

/* the same boundary on a bare multiplication table; b^2 = 0 needs no unit,
 * so this is the Hochschild complex of a non-unital algebra such as an
 * ideal carrying its restricted product */
ChainComplex nonunital_hochschild(const MultTable& t, int N);

/* signed cyclic rotations t_n = (-1)^n [a_0 ... a_n -> a_n a_0 ... a_{n-1}]
 * on A^{ox n+1} for n = 0..N; each identity t_n^{n+1} = id is checked
 * exactly at construction */
struct CyclicStructure {
    std::vector<Matrix> t;
};
CyclicStructure cyclic_structure(const Algebra& a, int N);

/* a complex presented degreewise as quotients of ambient spaces; the
 * retained presentations let classes be lifted to ambient chains */
struct PresentedComplex {
    ChainComplex complex;
    std::vector<QuotientSpace> spaces;
};

/* relative chains over phi : B -> A with coefficients: M ox A^{ox n} modulo
 * sliding phi(B) across every junction, including the outer one joining a_n
 * back to the coefficient slot; degree 0 becomes M / [phi(B), M].
 * `normalized` additionally kills phi(B) sitting inside any algebra slot. */
PresentedComplex relative_hochschild(const AlgebraMorphism& phi, const Module& m, int N,
                                     bool normalized);

/* Cyclic bicomplex of A: columns alternate the Hochschild boundary b and the
 * negated bar boundary -b', rows alternate 1 - t and the norm
 * 1 + t + ... + t^q, totalized by direct sums.  Valid over any field.  The
 * staircase spends one slot of truncation, so homology of the total complex
 * (cyclic homology) is certified through N-2 only. */
struct CyclicTotalComplex {
    ChainComplex total;
    CyclicStructure cyclic;
    /* offsets[n][p] = start of the (column p, row n-p) block inside degree n */
    std::vector<std::vector<long long>> offsets;
};
CyclicTotalComplex cyclic_total_complex(const Algebra& a, int N);

/* blockwise quotient of the cyclic bicomplex of A by the image of the one of
 * B: every column becomes A^{ox q+1} / phi^{ox q+1}(B^{ox q+1}), and b, -b',
 * 1 - t and the norm all descend because phi_* commutes with each of them.
 * Quotienting columnwise and then totalizing is the chain-level definition of
 * the relative cyclic theory; comparing its homology with the quotient of the
 * already-totalized complexes is a genuine two-route consistency check. */
struct RelativeCyclicTotal {
    ChainComplex total;
    std::vector<QuotientSpace> spaces; // one presentation per column degree q
    std::vector<Matrix> t;             // descended rotations
    std::vector<std::vector<long long>> offsets;
};
RelativeCyclicTotal relative_cyclic_total(const AlgebraMorphism& phi, int N);

/* chain map CH_*(B) -> CH_*(A) induced by an algebra map, phi^{ox n+1} */
ChainMap hochschild_inclusion(const AlgebraMorphism& phi, int N);
/* with coefficients: id_M ox phi^{ox n} out of CH_*(B, M restricted) */
ChainMap hochschild_inclusion(const AlgebraMorphism& phi, const Module& m, int N);
/* blockwise phi^{ox q+1} between cyclic total complexes of the same depth */
ChainMap cyclic_total_inclusion(const AlgebraMorphism& phi, int N);

/* sub -> ambient -> ambient/image: validates the inclusion as a chain map
 * and quotients the ambient complex by its degreewise images */
struct ComplexExtension {
    ChainComplex sub;
    ChainComplex ambient;
    ChainMap inclusion;
    QuotientComplexResult quotient;
};
ComplexExtension complex_extension(ChainComplex sub, ChainComplex ambient, ChainMap inclusion);

/* the coefficient-free relative models: CH(A)/phi_* CH(B) for Hochschild
 * and Tot(A)/phi_* Tot(B) for cyclic homology */
ComplexExtension hochschild_extension(const AlgebraMorphism& phi, int N);
ComplexExtension cyclic_total_extension(const AlgebraMorphism& phi, int N);

/* CH_n(A) / im(1 - t_n) with the induced boundary; its homology computes
 * cyclic homology in characteristic 0 only, so use it as a cross-check
 * there and never in characteristic p */
PresentedComplex lambda_quotient_complex(const Algebra& a, int N);

/* degreewise linear dual with transposed boundaries; over a field the
 * cohomology dimensions equal the homology dimensions of the input */
CochainComplex hom_dual_complex(const ChainComplex& c);

/* HH via the bar resolution: M ox_{A^e} CB_*(A) with the induced
 * differential; reproduces hochschild_complex(a, m, N) independently */
ChainComplex hochschild_via_envelope(const Algebra& a, const Module& m, int N);

} // namespace exacthh

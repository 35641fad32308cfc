#pragma once

#include "exacthh/chain_complex.hpp"

namespace exacthh {

/* Bounded increasing filtration 0 <= F_0 <= ... <= F_P = C by subcomplexes.
 * layers[p][i] is the subspace of the degree (min_degree+i) chain space. */
struct FilteredComplex {
    ChainComplex complex;
    int max_filtration = 0;
    std::vector<std::vector<Subspace>> layers;

    /* F_p at degree n with the usual conventions: zero below p = 0, the full
     * space above p = P or outside the stored degree range */
    Subspace layer(int p, int n) const;
};

/* increasing, exhaustive, closed under d; throws InternalError */
void validate_filtration(const FilteredComplex& fc);

/* E^r_{p,q} = Z^r_{p,q} / (Z^{r-1}_{p-1,q+1} + d Z^{r-1}_{p+r-1,q-r+2}) with
 * Z^r_{p,q} = {x in F_p C_{p+q} : dx in F_{p-r}}.  Entries are maintained for
 * all total degrees up to certified_degree = one below the stored top (each
 * page needs cycle data one degree higher).  Pages run r = 0 .. P+2; E^0 is
 * the associated graded, and the last page is stable because the filtration
 * is bounded, so it is exposed as einf.
 *
 * When every layer is spanned by standard basis vectors the entries live in
 * the coordinates of the graded block F_p/F_{p-1} (see SpectralSequence
 * blocks); otherwise they live in the ambient chain coordinates. */
struct SpectralPage {
    int r = 0;
    int min_degree = 0;
    std::vector<std::vector<Subquotient>> entries; // [p][n - min_degree]

    int dim(int p, int q) const;
    const Subquotient& at(int p, int q) const;
};

struct SpectralSequence {
    int max_filtration = 0;
    int certified_degree = -1;
    /* first r whose page already equals the last one entrywise within the
     * certified window; all d^{r'} for r' >= collapse_page vanish there */
    int collapse_page = 0;
    std::vector<SpectralPage> pages; // pages[r] = E^r, r = 0 .. P+2

    /* set when the filtration is by coordinate subspaces: page entries are
     * expressed in the listed block coordinates instead of ambient ones */
    bool block_entries = false;
    std::vector<std::vector<std::vector<int>>> blocks; // [p][n - min_degree]

    const SpectralPage& page(int r) const { return pages.at(r); }
    const SpectralPage& einf() const { return pages.back(); }
};

/* Dispatches to a graded-block computation when every layer is a span of
 * standard basis vectors (the filtrations produced by the builders all are),
 * and to the generic subspace computation otherwise. */
SpectralSequence spectral_sequence(const FilteredComplex& fc);

/* the generic computation, kept callable for cross-checking the block path */
SpectralSequence spectral_sequence_generic(const FilteredComplex& fc);

/* d^r : E^r_{p,q} -> E^r_{p-r,q+r-1}, the map induced by the differential */
Matrix page_differential(const FilteredComplex& fc, const SpectralSequence& seq, int r, int p,
                         int q);

/* per total degree n (up to certified), the sum over p of dim E^inf_{p,n-p};
 * equals dim H_n(C) for a bounded exhaustive filtration */
std::vector<int> einf_total_dims(const SpectralSequence& seq);

} // namespace exacthh

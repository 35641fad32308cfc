#pragma once

#include "exacthh/subspace.hpp"

namespace exacthh {

/* Non-negatively graded (after min_degree shift) chain complex, stored up to a
 * truncation degree.  d[i] maps degree min_degree+i to min_degree+i-1; its row
 * count is the dimension one degree down (0 at the bottom edge).
 *
 * certified_degree marks how far homology can be trusted: a complex truncated
 * at top degree N has unknown d_{N+1}, so homology is only certified up to
 * N-1.  Builders that know the complex vanishes above the stored range may
 * certify higher. */
struct ChainComplex {
    FieldSpec field;
    int min_degree = 0;
    std::vector<int> dims;
    std::vector<Matrix> d;
    int certified_degree = -1;

    int top_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
    int dim_at(int n) const;
    /* d_n as a matrix of shape dim_at(n-1) x dim_at(n), zero if n is outside
     * the stored range */
    Matrix boundary(int n) const;
    int default_certified() const { return top_degree() - 1; }
};

/* shape bookkeeping and d o d = 0; throws InternalError (complexes are built
 * by us, not parsed from user input) */
void validate_complex(const ChainComplex& c);

/* dimension of H_n = ker d_n / im d_{n+1}; requires n <= certified_degree */
struct HomologySpace {
    int degree = 0;
    Subquotient space; // cycles / boundaries inside the degree-n chain space
    int dim() const { return space.dim(); }
};

HomologySpace homology_at(const ChainComplex& c, int n);

struct HomologyTable {
    int min_degree = 0;
    std::vector<int> dims;
    int dim_at(int n) const;
    int certified_degree() const { return min_degree + static_cast<int>(dims.size()) - 1; }
};

/* homology dimensions from min_degree through certified_degree */
HomologyTable homology(const ChainComplex& c);

/* degreewise maps f_n : src_n -> dst_n commuting with the differentials;
 * degrees outside the stored range are zero maps */
struct ChainMap {
    int min_degree = 0;
    std::vector<Matrix> maps;
    Matrix at(int n, const ChainComplex& src, const ChainComplex& dst) const;
};

void validate_chain_map(const ChainMap& f, const ChainComplex& src, const ChainComplex& dst);

/* mapping cone: cone_n = src_{n-1} (+) dst_n (source block first),
 * d(x,y) = (-d x, d y - f x) */
ChainComplex cone(const ChainMap& f, const ChainComplex& src, const ChainComplex& dst);

/* (SC)_n = C_{n-1} with negated differential */
ChainComplex suspension(const ChainComplex& c);

/* matrix of H_n(f) between already-computed homology spaces */
Matrix induced_on_homology(const ChainMap& f, const ChainComplex& src, const ChainComplex& dst,
                           const HomologySpace& hsrc, const HomologySpace& hdst);

/* degreewise subspaces closed under d, re-expressed as a complex in the
 * subspace bases, with the inclusion chain map */
struct SubcomplexResult {
    ChainComplex complex;
    ChainMap inclusion;
};
SubcomplexResult subcomplex(const ChainComplex& c, const std::vector<Subspace>& layers);

struct QuotientComplexResult {
    ChainComplex complex;
    ChainMap projection;
    std::vector<QuotientSpace> spaces;
};
QuotientComplexResult quotient_complex(const ChainComplex& c, const std::vector<Subspace>& layers);

/* Cochain complex C^0 -> C^1 -> ...; delta[n] : C^n -> C^{n+1}.  Truncation
 * at top degree N leaves H^N uncertified (its outgoing coboundary is lost),
 * so certified_degree = N-1 for truncated builders. */
struct CochainComplex {
    FieldSpec field;
    std::vector<int> dims;
    std::vector<Matrix> delta; // one fewer than dims
    int certified_degree = -1;

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
};

void validate_cochain(const CochainComplex& c);
HomologySpace cohomology_at(const CochainComplex& c, int n);
HomologyTable cohomology(const CochainComplex& c);

/* Exactness of   V_0 -> V_1 -> ... -> V_{m-1}   at the interior nodes:
 * consecutive composites vanish and rank(in) + rank(out) = dim at each
 * interior node.  maps[i] has shape dims[i+1] x dims[i]. */
struct ExactnessReport {
    bool exact = true;
    std::string detail; // first failure, empty when exact
};
ExactnessReport check_exact_sequence(const std::vector<int>& dims,
                                     const std::vector<Matrix>& maps);

} // namespace exacthh

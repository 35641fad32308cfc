#include "doctest.h"

#include "exacthh/spectral.hpp"

using namespace exacthh;

namespace {
const FieldSpec Q{};

ChainComplex x_complex(int top) {
    ChainComplex c;
    c.field = Q;
    Matrix x(Q, 2, 2);
    x.at(1, 0) = Q.from_int(1);
    for (int n = 0; n <= top; ++n) {
        c.dims.push_back(2);
        c.d.push_back(n == 0 ? Matrix(Q, 0, 2) : x);
    }
    c.certified_degree = c.default_certified();
    return c;
}

FilteredComplex xspan_filtration(int top) {
    FilteredComplex fc;
    fc.complex = x_complex(top);
    fc.max_filtration = 1;
    Matrix g(Q, 1, 2);
    g.at(0, 1) = Q.from_int(1);
    fc.layers.resize(2);
    for (int n = 0; n <= top; ++n) {
        fc.layers[0].push_back(Subspace::span(Q, 2, g));
        fc.layers[1].push_back(Subspace::full(Q, 2));
    }
    return fc;
}
}

TEST_CASE("two-step filtration of the x-complex, including the q = -1 column") {
    FilteredComplex fc = xspan_filtration(5);
    SpectralSequence s = spectral_sequence(fc);
    CHECK(s.certified_degree == 4);
    REQUIRE(s.pages.size() == 4); // E^0 .. E^3

    // E^0 is the associated graded: one dimension per (p, n)
    for (int n = 0; n <= 4; ++n) {
        CHECK(s.page(0).dim(0, n) == 1);
        CHECK(s.page(0).dim(1, n - 1) == 1);
    }

    const SpectralPage& e1 = s.page(1);
    for (int q = 0; q <= 4; ++q) CHECK(e1.dim(0, q) == 1);
    for (int q = -1; q <= 3; ++q) CHECK(e1.dim(1, q) == 1);
    CHECK(e1.dim(2, 0) == 0);
    CHECK(e1.dim(0, -1) == 0);

    // d^1 from (1, q) to (0, q) is an isomorphism wherever both sides live
    for (int q = 0; q <= 3; ++q) {
        Matrix d1 = page_differential(fc, s, 1, 1, q);
        CHECK(d1.rows() == 1);
        CHECK(d1.cols() == 1);
        CHECK(rank(d1) == 1);
    }

    // everything cancels except the corner (1, -1)
    const SpectralPage& e2 = s.page(2);
    CHECK(e2.dim(1, -1) == 1);
    for (int q = 0; q <= 3; ++q) {
        CHECK(e2.dim(0, q) == 0);
        CHECK(e2.dim(1, q) == 0);
    }
    CHECK(einf_total_dims(s) == std::vector<int>{1, 0, 0, 0, 0});
    CHECK(homology(fc.complex).dims == std::vector<int>{1, 0, 0, 0, 0});
    CHECK(s.collapse_page == 2);
}

TEST_CASE("trivial one-layer filtration: E^0 is the complex, collapse at 1") {
    FilteredComplex fc;
    fc.complex = x_complex(3);
    fc.max_filtration = 0;
    fc.layers.resize(1);
    for (int n = 0; n <= 3; ++n) fc.layers[0].push_back(Subspace::full(Q, 2));
    SpectralSequence s = spectral_sequence(fc);
    for (int n = 0; n <= 2; ++n) {
        CHECK(s.page(0).dim(0, n) == 2);
        CHECK(s.page(1).dim(0, n) == homology(fc.complex).dim_at(n));
    }
    CHECK(s.collapse_page == 1);
}

TEST_CASE("first page is the homology of the associated graded") {
    FilteredComplex fc = xspan_filtration(4);
    SpectralSequence s = spectral_sequence(fc);
    for (int p = 0; p <= 1; ++p) {
        // gr_p = F_p / F_{p-1} built independently through sub/quotient complexes
        SubcomplexResult fp = subcomplex(fc.complex, fc.layers[p]);
        std::vector<Subspace> inner;
        for (size_t i = 0; i < fc.layers[p].size(); ++i) {
            Subspace prev = (p == 0) ? Subspace::zero(Q, 2) : fc.layers[p - 1][i];
            // express F_{p-1} in F_p coordinates
            Matrix rows(Q, prev.dim(), fp.complex.dims[i]);
            for (int r = 0; r < prev.dim(); ++r) {
                auto c = fc.layers[p][i].coords(prev.basis().row(r));
                REQUIRE(c.has_value());
                rows.set_row(r, *c);
            }
            inner.push_back(Subspace::span(Q, fp.complex.dims[i], rows));
        }
        HomologyTable gr = homology(quotient_complex(fp.complex, inner).complex);
        for (int n = 0; n <= s.certified_degree && n <= gr.certified_degree(); ++n)
            CHECK(s.page(1).dim(p, n - p) == gr.dim_at(n));
    }
}

TEST_CASE("cone filtration recovers kernel and cokernel of the induced map") {
    ChainComplex c = x_complex(5);
    Matrix x(Q, 2, 2);
    x.at(1, 0) = Q.from_int(1);
    ChainMap f;
    for (int n = 0; n <= 5; ++n) f.maps.push_back(x);
    ChainComplex k = cone(f, c, c);

    FilteredComplex fc;
    fc.complex = k;
    fc.max_filtration = 1;
    fc.layers.resize(2);
    for (int n = 0; n <= k.top_degree(); ++n) {
        int sdim = c.dim_at(n - 1), total = k.dim_at(n);
        // F_0 = target block (last total - sdim coordinates)
        Matrix g(Q, total - sdim, total);
        for (int r = 0; r < total - sdim; ++r) g.at(r, sdim + r) = Q.from_int(1);
        fc.layers[0].push_back(Subspace::span(Q, total, g));
        fc.layers[1].push_back(Subspace::full(Q, total));
    }
    SpectralSequence s = spectral_sequence(fc);

    // E^1: row p = 0 is H(target), row p = 1 is H(source) shifted by one
    CHECK(s.page(1).dim(0, 0) == 1);
    CHECK(s.page(1).dim(1, 0) == 1);
    CHECK(s.page(1).dim(0, 1) == 0);
    // x vanishes on homology, so nothing cancels
    CHECK(s.einf().dim(0, 0) == 1);
    CHECK(s.einf().dim(1, 0) == 1);
    CHECK(einf_total_dims(s) == homology(k).dims);
}

TEST_CASE("block and generic engines agree on a coordinate filtration") {
    FilteredComplex fc = xspan_filtration(5);
    SpectralSequence blk = spectral_sequence(fc);
    SpectralSequence gen = spectral_sequence_generic(fc);
    REQUIRE(blk.block_entries);
    REQUIRE_FALSE(gen.block_entries);
    REQUIRE(blk.pages.size() == gen.pages.size());
    CHECK(blk.certified_degree == gen.certified_degree);
    CHECK(blk.collapse_page == gen.collapse_page);
    for (size_t r = 0; r < blk.pages.size(); ++r)
        for (int p = 0; p <= fc.max_filtration + 1; ++p)
            for (int n = -1; n <= blk.certified_degree; ++n)
                CHECK(blk.page(static_cast<int>(r)).dim(p, n - p) ==
                      gen.page(static_cast<int>(r)).dim(p, n - p));
    CHECK(einf_total_dims(blk) == einf_total_dims(gen));
    // the page matrices are written in different bases; compare their ranks
    for (int q = 0; q <= 3; ++q)
        CHECK(rank(page_differential(fc, blk, 1, 1, q)) ==
              rank(page_differential(fc, gen, 1, 1, q)));
}

TEST_CASE("a non-coordinate filtration routes to the generic engine") {
    ChainComplex c;
    c.field = Q;
    Matrix d(Q, 3, 3);
    d.at(1, 0) = Q.from_int(1);
    for (int n = 0; n <= 4; ++n) {
        c.dims.push_back(3);
        c.d.push_back(n == 0 ? Matrix(Q, 0, 3) : d);
    }
    c.certified_degree = c.default_certified();

    // F_0 = span{e1, e0 + e2} is d-closed but not a coordinate span
    Matrix g(Q, 2, 3);
    g.at(0, 1) = Q.from_int(1);
    g.at(1, 0) = Q.from_int(1);
    g.at(1, 2) = Q.from_int(1);
    FilteredComplex fc;
    fc.complex = c;
    fc.max_filtration = 1;
    fc.layers.resize(2);
    for (int n = 0; n <= 4; ++n) {
        fc.layers[0].push_back(Subspace::span(Q, 3, g));
        fc.layers[1].push_back(Subspace::full(Q, 3));
    }
    SpectralSequence s = spectral_sequence(fc);
    CHECK_FALSE(s.block_entries);
    CHECK(einf_total_dims(s) == homology(c).dims);
}

TEST_CASE("filtration validation failures") {
    FilteredComplex fc = xspan_filtration(3);
    std::swap(fc.layers[0], fc.layers[1]); // not increasing
    CHECK_THROWS_AS(validate_filtration(fc), InternalError);

    FilteredComplex bad = xspan_filtration(3);
    Matrix g(Q, 1, 2);
    g.at(0, 0) = Q.from_int(1);
    // d maps span{1} at degree 1 onto span{x}, which the shrunken degree-0
    // layer no longer contains
    bad.layers[0][1] = Subspace::span(Q, 2, g);
    bad.layers[0][0] = Subspace::span(Q, 2, g);
    CHECK_THROWS_AS(validate_filtration(bad), InternalError);

    FilteredComplex part = xspan_filtration(3);
    part.layers[1][1] = part.layers[0][1]; // top layer no longer exhaustive
    CHECK_THROWS_AS(validate_filtration(part), InternalError);
}

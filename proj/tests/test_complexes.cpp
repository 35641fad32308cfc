#include "doctest.h"

#include "exacthh/chain_complex.hpp"

using namespace exacthh;

namespace {
const FieldSpec Q{};

/* periodic complex  ... -> k^2 -x-> k^2 -x-> k^2  (x = [[0,0],[1,0]]),
 * the free resolution shape of k over the dual numbers, truncated at `top` */
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
    validate_complex(c);
    return c;
}
}

TEST_CASE("homology of the x-multiplication complex") {
    ChainComplex c = x_complex(4);
    CHECK(c.certified_degree == 3);
    HomologyTable h = homology(c);
    CHECK(h.dims == std::vector<int>{1, 0, 0, 0});
    CHECK(h.dim_at(0) == 1);
    CHECK(h.dim_at(7) == 0);
    CHECK_THROWS_AS(homology_at(c, 4), InternalError);
}

TEST_CASE("an exact three-term complex") {
    // 0 -> k -> k^2 -> k -> 0 with d_2 = (1,-1)^t, d_1 = (1 1)
    ChainComplex c;
    c.field = Q;
    c.dims = {1, 2, 1};
    c.d.push_back(Matrix(Q, 0, 1));
    Matrix d1(Q, 1, 2);
    d1.at(0, 0) = Q.from_int(1);
    d1.at(0, 1) = Q.from_int(1);
    c.d.push_back(d1);
    Matrix d2(Q, 2, 1);
    d2.at(0, 0) = Q.from_int(1);
    d2.at(1, 0) = Q.from_int(-1);
    c.d.push_back(d2);
    c.certified_degree = 2; // nothing above degree 2
    validate_complex(c);
    CHECK(homology(c).dims == std::vector<int>{0, 0, 0});
}

TEST_CASE("d^2 != 0 is rejected") {
    ChainComplex c;
    c.field = Q;
    c.dims = {1, 1};
    c.d.push_back(Matrix(Q, 0, 1));
    c.d.push_back(Matrix::identity(Q, 1));
    // fine so far
    validate_complex(c);
    c.dims.push_back(1);
    c.d.push_back(Matrix::identity(Q, 1)); // id o id != 0
    CHECK_THROWS_AS(validate_complex(c), InternalError);
}

TEST_CASE("suspension shifts homology") {
    ChainComplex c = x_complex(4);
    ChainComplex s = suspension(c);
    validate_complex(s);
    HomologyTable h = homology(s);
    CHECK(h.min_degree == 1);
    CHECK(h.dim_at(0) == 0);
    CHECK(h.dim_at(1) == 1);
    CHECK(h.dim_at(2) == 0);
}

TEST_CASE("cone of the identity is acyclic") {
    ChainComplex c = x_complex(4);
    ChainMap id;
    for (int n = 0; n <= 4; ++n) id.maps.push_back(Matrix::identity(Q, 2));
    validate_chain_map(id, c, c);
    ChainComplex k = cone(id, c, c);
    CHECK(k.certified_degree == 3);
    CHECK(homology(k).dims == std::vector<int>{0, 0, 0, 0});
}

TEST_CASE("cone of the zero map sums shifted source and target homology") {
    ChainComplex c = x_complex(4);
    ChainMap z;
    for (int n = 0; n <= 4; ++n) z.maps.push_back(Matrix(Q, 2, 2));
    ChainComplex k = cone(z, c, c);
    CHECK(homology(k).dims == std::vector<int>{1, 1, 0, 0});
}

TEST_CASE("cone long exact sequence via check_exact_sequence") {
    ChainComplex c = x_complex(5);
    // f = multiplication by x (a chain map since x is central)
    Matrix x(Q, 2, 2);
    x.at(1, 0) = Q.from_int(1);
    ChainMap f;
    for (int n = 0; n <= 5; ++n) f.maps.push_back(x);
    validate_chain_map(f, c, c);
    ChainComplex k = cone(f, c, c);

    // assemble H_n(C) -> H_n(C) -> H_n(cone) -> H_{n-1}(C) -> H_{n-1}(C) ... down to n=1
    std::vector<int> dims;
    std::vector<Matrix> maps;
    std::vector<HomologySpace> hc, hk;
    for (int n = 0; n <= 4; ++n) hc.push_back(homology_at(c, n));
    for (int n = 0; n <= 4; ++n) hk.push_back(homology_at(k, n));
    for (int n = 3; n >= 1; --n) {
        // f_*
        if (dims.empty()) dims.push_back(hc[n].dim());
        maps.push_back(induced_on_homology(f, c, c, hc[n], hc[n]));
        dims.push_back(hc[n].dim());
        // inclusion y -> (0, y)
        ChainMap incl;
        for (int m = 0; m <= 5; ++m) {
            Matrix im(Q, k.dim_at(m), 2);
            int off = c.dim_at(m - 1);
            for (int r = 0; r < 2; ++r) im.at(off + r, r) = Q.from_int(1);
            incl.maps.push_back(im);
        }
        maps.push_back(induced_on_homology(incl, c, k, hc[n], hk[n]));
        dims.push_back(hk[n].dim());
        // projection (x, y) -> x
        ChainMap proj;
        proj.min_degree = 0;
        for (int m = 0; m <= 5; ++m) {
            Matrix pm(Q, 2, k.dim_at(m));
            int sdim = c.dim_at(m - 1);
            for (int r = 0; r < sdim; ++r) pm.at(r, r) = Q.from_int(1);
            proj.maps.push_back(pm);
        }
        // proj is a chain map into the suspension; on homology it lands in H_{n-1}(C)
        maps.push_back(induced_map_on_subquotients(proj.maps[n], hk[n].space, hc[n - 1].space));
        dims.push_back(hc[n - 1].dim());
    }
    ExactnessReport rep = check_exact_sequence(dims, maps);
    INFO(rep.detail);
    CHECK(rep.exact);
}

TEST_CASE("subcomplex and quotient complex of the x-span layers") {
    ChainComplex c = x_complex(3);
    Matrix g(Q, 1, 2);
    g.at(0, 1) = Q.from_int(1); // span{x}
    std::vector<Subspace> layers(4, Subspace::span(Q, 2, g));
    SubcomplexResult s = subcomplex(c, layers);
    CHECK(s.complex.dims == std::vector<int>{1, 1, 1, 1});
    CHECK(homology(s.complex).dims == std::vector<int>{1, 1, 1});

    QuotientComplexResult q = quotient_complex(c, layers);
    CHECK(q.complex.dims == std::vector<int>{1, 1, 1, 1});
    CHECK(homology(q.complex).dims == std::vector<int>{1, 1, 1});

    // a non-invariant layer family is rejected: span{1} has d(1) = x outside
    Matrix h(Q, 1, 2);
    h.at(0, 0) = Q.from_int(1);
    std::vector<Subspace> bad(4, Subspace::span(Q, 2, h));
    CHECK_THROWS_AS(subcomplex(c, bad), InternalError);
    CHECK_THROWS_AS(quotient_complex(c, bad), InternalError);
}

TEST_CASE("check_exact_sequence flags failures") {
    // k -0-> k -0-> k is not exact in the middle
    std::vector<int> dims{1, 1, 1};
    std::vector<Matrix> maps{Matrix(Q, 1, 1), Matrix(Q, 1, 1)};
    ExactnessReport rep = check_exact_sequence(dims, maps);
    CHECK_FALSE(rep.exact);
    CHECK(!rep.detail.empty());

    // k -id-> k -id-> k has nonzero composite
    std::vector<Matrix> maps2{Matrix::identity(Q, 1), Matrix::identity(Q, 1)};
    CHECK_FALSE(check_exact_sequence(dims, maps2).exact);

    // 0 -> k -id-> k -> 0 is exact
    std::vector<int> d3{0, 1, 1, 0};
    std::vector<Matrix> m3{Matrix(Q, 1, 0), Matrix::identity(Q, 1), Matrix(Q, 0, 1)};
    CHECK(check_exact_sequence(d3, m3).exact);
}

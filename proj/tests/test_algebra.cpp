#include "doctest.h"

#include "exacthh/algebra.hpp"

using namespace exacthh;

namespace {
const FieldSpec Q{};
}

TEST_CASE("preset algebras validate and have expected structure") {
    for (auto a : {ground_field(Q), dual_numbers(Q), truncated_polynomial(Q, 3),
                   upper_triangular(Q, 2), product_field(Q, 2)})
        CHECK_NOTHROW(validate_algebra(a));

    Algebra t2 = upper_triangular(Q, 2);
    CHECK(t2.dim() == 3);
    CHECK(t2.labels == std::vector<std::string>{"e11", "e12", "e22"});
    // e11*e12 = e12, e12*e22 = e12, e12*e12 = 0, e22*e12 = 0
    CHECK(t2.mult.mult(t2.basis_vector(0), t2.basis_vector(1)) == t2.basis_vector(1));
    CHECK(t2.mult.mult(t2.basis_vector(1), t2.basis_vector(2)) == t2.basis_vector(1));
    CHECK(t2.mult.mult(t2.basis_vector(1), t2.basis_vector(1)) ==
          std::vector<Scalar>(3, Scalar(0)));
    CHECK(t2.mult.mult(t2.basis_vector(2), t2.basis_vector(1)) ==
          std::vector<Scalar>(3, Scalar(0)));
    CHECK(t2.unit == std::vector<Scalar>{Scalar(1), Scalar(0), Scalar(1)});
}

TEST_CASE("tampered multiplication table is rejected with the failing triple named") {
    Algebra bad = upper_triangular(Q, 2);
    bad.mult.table[1][1][1] = Q.from_int(1); // e12*e12 = e12 breaks associativity
    try {
        validate_algebra(bad);
        FAIL("expected InputError");
    } catch (const InputError& e) {
        std::string msg = e.what();
        CHECK(msg.find("associativity") != std::string::npos);
        CHECK(msg.find("e12") != std::string::npos);
    }
}

TEST_CASE("unit law violations are reported") {
    Algebra bad = product_field(Q, 2);
    bad.unit = {Q.from_int(1), Q.from_int(0)}; // e1 is not a unit for e2
    CHECK_THROWS_AS(validate_algebra(bad), InputError);
}

TEST_CASE("left/right multiplication operators") {
    Algebra t2 = upper_triangular(Q, 2);
    // L_{e11}: fixes e11,e12, kills e22
    Matrix l = t2.mult.left_mult(0);
    CHECK(l.apply(t2.basis_vector(1)) == t2.basis_vector(1));
    CHECK(l.apply(t2.basis_vector(2)) == std::vector<Scalar>(3, Scalar(0)));
    // R matrices multiply on the right: right_mult_of(e22) fixes e12,e22, kills e11
    Matrix r = t2.mult.right_mult_of(t2.basis_vector(2));
    CHECK(r.apply(t2.basis_vector(1)) == t2.basis_vector(1));
    CHECK(r.apply(t2.basis_vector(0)) == std::vector<Scalar>(3, Scalar(0)));
}

TEST_CASE("ideal_of accepts two-sided ideals and rejects non-ideals") {
    Algebra t2 = upper_triangular(Q, 2);
    Matrix g(Q, 1, 3);
    g.at(0, 1) = Q.from_int(1); // span{e12}
    Subspace s = Subspace::span(Q, 3, g);
    Ideal i = ideal_of(t2, s);
    CHECK(i.span.dim() == 1);
    // e12 * e12 = 0 in the restricted table
    CHECK(i.restricted.table[0][0] == std::vector<Scalar>{Scalar(0)});

    Matrix h(Q, 1, 3);
    h.at(0, 0) = Q.from_int(1); // span{e11}: e11*e12 = e12 not in span
    CHECK_THROWS_AS(ideal_of(t2, Subspace::span(Q, 3, h)), InputError);
}

TEST_CASE("quotient T_2 / (e12) is k x k") {
    Algebra t2 = upper_triangular(Q, 2);
    Matrix g(Q, 1, 3);
    g.at(0, 1) = Q.from_int(1);
    QuotientAlgebra q = quotient_algebra(t2, ideal_of(t2, Subspace::span(Q, 3, g)));
    CHECK(q.quotient.dim() == 2);
    // images of e11 and e22 are orthogonal idempotents summing to the unit
    for (int i = 0; i < 2; ++i)
        CHECK(q.quotient.mult.mult(q.quotient.basis_vector(i), q.quotient.basis_vector(i)) ==
              q.quotient.basis_vector(i));
    CHECK(q.quotient.mult.mult(q.quotient.basis_vector(0), q.quotient.basis_vector(1)) ==
          std::vector<Scalar>(2, Scalar(0)));
    CHECK(q.quotient.unit == std::vector<Scalar>{Scalar(1), Scalar(1)});
    CHECK_NOTHROW(validate_morphism(q.projection));
}

TEST_CASE("subalgebra inclusions") {
    Algebra t2 = upper_triangular(Q, 2);

    SUBCASE("diagonal subalgebra of T_2") {
        Matrix g(Q, 2, 3);
        g.at(0, 0) = Q.from_int(1);
        g.at(1, 2) = Q.from_int(1);
        SubalgebraInclusion d = subalgebra_inclusion(t2, Subspace::span(Q, 3, g));
        CHECK(d.sub.dim() == 2);
        CHECK(d.inclusion.is_injective());
        CHECK_FALSE(d.inclusion.is_surjective());
        // diagonal is k x k: both basis elements idempotent, product zero
        CHECK(d.sub.mult.mult(d.sub.basis_vector(0), d.sub.basis_vector(1)) ==
              std::vector<Scalar>(2, Scalar(0)));
    }

    SUBCASE("span{1, e12} is a (local) subalgebra") {
        Matrix g(Q, 2, 3);
        g.at(0, 0) = Q.from_int(1);
        g.at(0, 2) = Q.from_int(1); // 1 = e11 + e22
        g.at(1, 1) = Q.from_int(1); // e12, squares to zero
        SubalgebraInclusion s = subalgebra_inclusion(t2, Subspace::span(Q, 3, g));
        CHECK(s.sub.dim() == 2);
        // isomorphic to dual numbers: second basis vector squares to 0
        auto x = s.sub.basis_vector(1);
        CHECK(s.sub.mult.mult(x, x) == std::vector<Scalar>(2, Scalar(0)));
    }

    SUBCASE("span without the unit is rejected") {
        Matrix g(Q, 1, 3);
        g.at(0, 1) = Q.from_int(1);
        CHECK_THROWS_AS(subalgebra_inclusion(t2, Subspace::span(Q, 3, g)), InputError);
    }
}

TEST_CASE("enveloping algebra") {
    Algebra d = dual_numbers(Q);
    Algebra e = enveloping_algebra(d);
    CHECK(e.dim() == 4);
    CHECK_NOTHROW(validate_algebra(e));
    // (x ox 1)(x ox 1) = x^2 ox 1 = 0; (1 ox x)(x ox 1) = x ox x
    auto x1 = e.basis_vector(2); // labels: index i*n+j, x ox 1 is (1,0) -> 2
    CHECK(e.mult.mult(x1, x1) == std::vector<Scalar>(4, Scalar(0)));
    auto onex = e.basis_vector(1);
    CHECK(e.mult.mult(onex, x1) == e.basis_vector(3));
    // the op twist: (1 ox x^op)(1 ox x^op) = 1 ox (x*x)^op = 0
    CHECK(e.mult.mult(onex, onex) == std::vector<Scalar>(4, Scalar(0)));

    Algebra t2e = enveloping_algebra(upper_triangular(Q, 2));
    CHECK(t2e.dim() == 9);
    CHECK_NOTHROW(validate_algebra(t2e));
}

TEST_CASE("radical computation in characteristic zero") {
    CHECK(radical(product_field(Q, 2)).dim() == 0);
    CHECK(radical(ground_field(Q)).dim() == 0);

    Subspace r2 = radical(upper_triangular(Q, 2));
    CHECK(r2.dim() == 1);
    Matrix g(Q, 1, 3);
    g.at(0, 1) = Q.from_int(1);
    CHECK(r2 == Subspace::span(Q, 3, g));

    Subspace rd = radical(dual_numbers(Q));
    CHECK(rd.dim() == 1);
    CHECK(rd.contains(dual_numbers(Q).basis_vector(1)));

    CHECK(radical(truncated_polynomial(Q, 4)).dim() == 3);
}

TEST_CASE("radical over F_p requires user input; candidates are validated") {
    FieldSpec f5(5);
    CHECK_THROWS_AS(radical(upper_triangular(f5, 2)), InputError);

    Algebra t2p = upper_triangular(f5, 2);
    Matrix g(f5, 1, 3);
    g.at(0, 1) = f5.from_int(1);
    CHECK_NOTHROW(validate_radical_candidate(t2p, Subspace::span(f5, 3, g)));
    // e11 spans a non-ideal
    Matrix h(f5, 1, 3);
    h.at(0, 0) = f5.from_int(1);
    CHECK_THROWS_AS(validate_radical_candidate(t2p, Subspace::span(f5, 3, h)), InputError);
    // the whole algebra is an ideal but not nilpotent
    CHECK_THROWS_AS(validate_radical_candidate(t2p, Subspace::full(f5, 3)), InputError);
}

TEST_CASE("monoid algebra k[Z/2]") {
    Algebra z2 = monoid_algebra(Q, {{0, 1}, {1, 0}}, 0, {"1", "g"});
    CHECK(z2.dim() == 2);
    CHECK(z2.mult.mult(z2.basis_vector(1), z2.basis_vector(1)) == z2.basis_vector(0));

    // non-associative table rejected: left-zero magma with a fake identity claim
    CHECK_THROWS_AS(monoid_algebra(Q, {{0, 0}, {0, 0}}, 0, {}), InputError);
    // associative but no identity at the claimed index
    CHECK_THROWS_AS(monoid_algebra(Q, {{0, 0}, {0, 0}}, 1, {}), InputError);
}

TEST_CASE("tensor product algebra T_2 ox k[Z/2]") {
    Algebra t2 = upper_triangular(Q, 2);
    Algebra z2 = monoid_algebra(Q, {{0, 1}, {1, 0}}, 0, {"1", "g"});
    Algebra t = tensor_algebra(t2, z2);
    CHECK(t.dim() == 6);
    CHECK_NOTHROW(validate_algebra(t));
    // (e11 ox g)(e12 ox g) = e12 ox 1
    auto p = t.mult.mult(t.basis_vector(0 * 2 + 1), t.basis_vector(1 * 2 + 1));
    CHECK(p == t.basis_vector(1 * 2 + 0));
}

TEST_CASE("morphism validation") {
    Algebra kk = product_field(Q, 2);
    Algebra k = ground_field(Q);

    // first projection k x k -> k
    Matrix p(Q, 1, 2);
    p.at(0, 0) = Q.from_int(1);
    AlgebraMorphism proj{kk, k, p};
    CHECK_NOTHROW(validate_morphism(proj));
    CHECK(proj.is_surjective());
    CHECK_FALSE(proj.is_injective());

    // diagonal k -> k x k
    Matrix d(Q, 2, 1);
    d.at(0, 0) = Q.from_int(1);
    d.at(1, 0) = Q.from_int(1);
    AlgebraMorphism diag{k, kk, d};
    CHECK_NOTHROW(validate_morphism(diag));
    CHECK(compose(proj, diag).matrix == Matrix::identity(Q, 1));

    // e1-inclusion k -> k x k misses the unit
    Matrix e1(Q, 2, 1);
    e1.at(0, 0) = Q.from_int(1);
    CHECK_THROWS_AS(validate_morphism(AlgebraMorphism{k, kk, e1}), InputError);

    // swapping a structure constant breaks multiplicativity
    Matrix m(Q, 2, 2);
    m.at(0, 0) = Q.from_int(1);
    m.at(1, 1) = Q.from_int(2); // scales e2: not multiplicative
    CHECK_THROWS_AS(validate_morphism(AlgebraMorphism{kk, kk, m}), InputError);
}

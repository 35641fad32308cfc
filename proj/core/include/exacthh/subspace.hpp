#pragma once

#include <map>

#include "exacthh/matrix.hpp"

namespace exacthh {

/* Subspace of k^ambient, held as the canonical RREF basis of its row space.
 * Two Subspace objects describe the same subspace iff their stored bases are
 * identical, which makes every downstream construction reproducible. */
class Subspace {
public:
    Subspace() = default;
    static Subspace span(FieldSpec field, int ambient, const Matrix& generators);
    static Subspace zero(FieldSpec field, int ambient);
    static Subspace full(FieldSpec field, int ambient);

    int dim() const { return basis_.rows(); }
    int ambient() const { return ambient_; }
    const FieldSpec& field() const { return field_; }
    const Matrix& basis() const { return basis_; }
    const std::vector<int>& pivots() const { return pivots_; }

    /* residual of v after eliminating against the basis; zero iff v is a member */
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;
    bool contains(const std::vector<Scalar>& v) const;
    bool contains(const Subspace& other) const;
    /* coefficients of v in the stored basis rows, if v is a member */
    std::optional<std::vector<Scalar>> coords(const std::vector<Scalar>& v) const;

    friend Subspace operator+(const Subspace& a, const Subspace& b);
    friend Subspace intersect(const Subspace& a, const Subspace& b);
    bool operator==(const Subspace& rhs) const;

    /* {x in k^c : f x in this}, f an ambient()-row matrix */
    Subspace preimage(const Matrix& f) const;
    /* span of f(basis vectors) inside k^{f.rows()} */
    Subspace image_under(const Matrix& f) const;

private:
    int ambient_ = 0;
    FieldSpec field_;
    Matrix basis_;
    std::vector<int> pivots_;
};

/* Incremental row-echelon accumulator.  Feeding generators one at a time costs
 * roughly their fill instead of a full RREF pass per batch, which matters when
 * the generators are sparse and numerous.  span() returns the same canonical
 * subspace Subspace::span would give on the stacked generators. */
class SpanAccumulator {
public:
    SpanAccumulator(FieldSpec field, int ambient);
    void add(std::vector<Scalar> v);
    void add_rows(const Matrix& m);
    void add_columns(const Matrix& m);
    int dim() const { return static_cast<int>(rows_.size()); }
    Subspace span() const;

private:
    FieldSpec field_;
    int ambient_ = 0;
    std::map<int, std::vector<Scalar>> rows_; // pivot -> echelon row, pivot entry 1
};

/* k^ambient / R with the deterministic complement: coset representatives are
 * the standard basis vectors at the non-pivot columns of R's RREF basis. */
class QuotientSpace {
public:
    QuotientSpace() = default;
    QuotientSpace(FieldSpec field, int ambient, const Subspace& relations);

    int ambient() const { return ambient_; }
    int dim() const { return static_cast<int>(reps_.size()); }
    const Subspace& relations() const { return rel_; }
    /* ambient indices whose standard vectors represent the quotient basis */
    const std::vector<int>& representative_indices() const { return reps_; }

    std::vector<Scalar> project(const std::vector<Scalar>& v) const;
    std::vector<Scalar> lift(const std::vector<Scalar>& coords) const;
    Matrix projection_matrix() const; // dim x ambient
    Matrix section_matrix() const;    // ambient x dim

private:
    int ambient_ = 0;
    FieldSpec field_;
    Subspace rel_;
    std::vector<int> reps_;
};

/* U/V for subspaces V <= U of a common ambient space.  The lift rows are a
 * canonical complement basis of V in U, supported away from V's pivot
 * columns; coords() of a vector of U reads off its class. */
class Subquotient {
public:
    Subquotient() = default;
    Subquotient(const Subspace& sup, const Subspace& sub);

    int dim() const { return lift_.rows(); }
    const Subspace& sup() const { return sup_; }
    const Subspace& sub() const { return sub_; }
    const Matrix& lift() const { return lift_; }

    std::vector<Scalar> coords(const std::vector<Scalar>& v) const;

private:
    Subspace sup_, sub_;
    Matrix lift_;
};

/* Matrix of the map U1/V1 -> U2/V2 induced by f.  Checks f(U1) <= U2 and
 * f(V1) <= V2 and throws InternalError otherwise. */
Matrix induced_map_on_subquotients(const Matrix& f, const Subquotient& src, const Subquotient& dst);

/* Matrix of the map induced on quotient spaces by an ambient map f.  Checks
 * f(src relations) <= dst relations and throws InternalError otherwise. */
Matrix induced_map_on_quotients(const Matrix& f, const QuotientSpace& src, const QuotientSpace& dst);

} // namespace exacthh

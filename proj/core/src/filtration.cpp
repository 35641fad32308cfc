#include "exacthh/filtration.hpp"

namespace exacthh {

namespace {

Matrix invert(const Matrix& s) {
    const FieldSpec& F = s.field();
    int n = s.rows();
    Matrix inv(F, n, n);
    for (int j = 0; j < n; ++j) {
        std::vector<Scalar> e(n, F.from_int(0));
        e[j] = F.from_int(1);
        auto sol = solve(s, e);
        if (!sol) throw InternalError("adapt: change of basis is not invertible");
        for (int i = 0; i < n; ++i) inv.at(i, j) = (*sol)[i];
    }
    return inv;
}

/* distinguished rows first, then greedily chosen standard basis vectors */
AdaptedAlgebra adapt_rows(const Algebra& a, const Matrix& small_rows,
                          std::vector<std::string> labels) {
    const FieldSpec& F = a.field();
    int dim = a.dim();
    AdaptedAlgebra out;
    out.sub_dim = small_rows.rows();
    if (Subspace::span(F, dim, small_rows).dim() != out.sub_dim)
        throw InternalError("adapt: distinguished vectors are dependent");
    Matrix rows = small_rows;
    Subspace seen = Subspace::span(F, dim, small_rows);
    for (int j = 0; j < dim; ++j) {
        std::vector<Scalar> e(dim, F.from_int(0));
        e[j] = F.from_int(1);
        if (seen.contains(e)) continue;
        rows = rows.vstack(Matrix::row_vector(F, e));
        seen = seen + Subspace::span(F, dim, Matrix::row_vector(F, e));
        out.complement_labels.push_back(j);
        labels.push_back(a.labels[j]);
    }
    if (rows.rows() != dim) throw InternalError("adapt: could not complete a basis");

    Matrix st = rows.transpose(); // columns = old coordinates of the new basis
    Matrix t = invert(st);
    Algebra conj;
    conj.mult.field = F;
    conj.mult.dim = dim;
    conj.mult.table.assign(dim, std::vector<std::vector<Scalar>>(dim));
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            conj.mult.table[i][j] = t.apply(a.mult.mult(rows.row(i), rows.row(j)));
    conj.labels = std::move(labels);
    conj.unit = t.apply(a.unit);
    validate_algebra(conj);

    out.algebra = std::move(conj);
    out.to_adapted = AlgebraMorphism{a, out.algebra, std::move(t)};
    out.from_adapted = AlgebraMorphism{out.algebra, a, std::move(st)};
    validate_morphism(out.to_adapted);
    validate_morphism(out.from_adapted);
    return out;
}

/* layers[p][n] = span of basis tensors with at most p counted slots holding a
 * coordinate outside the first small_dim */
void add_count_layers(FilteredComplex& fc, const std::vector<TensorShape>& shapes,
                      const std::vector<std::vector<int>>& counted, int small_dim, int P) {
    const FieldSpec& F = fc.complex.field;
    fc.max_filtration = P;
    fc.layers.assign(P + 1, std::vector<Subspace>());
    for (size_t n = 0; n < shapes.size(); ++n) {
        const TensorShape& shape = shapes[n];
        long long total = shape.total();
        std::vector<int> cnt(static_cast<size_t>(total));
        for (long long f = 0; f < total; ++f) {
            std::vector<int> idx = shape.unflatten(f);
            int c = 0;
            for (int slot : counted[n])
                if (idx[slot] >= small_dim) ++c;
            cnt[static_cast<size_t>(f)] = c;
        }
        for (int p = 0; p <= P; ++p) {
            std::vector<long long> keep;
            for (long long f = 0; f < total; ++f)
                if (cnt[static_cast<size_t>(f)] <= p) keep.push_back(f);
            Matrix sel(F, static_cast<int>(keep.size()), static_cast<int>(total));
            for (size_t r = 0; r < keep.size(); ++r)
                sel.at(static_cast<int>(r), static_cast<int>(keep[r])) = F.from_int(1);
            fc.layers[p].push_back(Subspace::span(F, static_cast<int>(total), sel));
        }
    }
}

TensorShape slots(int first, int adim, int n, int last = -1) {
    TensorShape s;
    s.dims.push_back(first);
    for (int i = 0; i < n; ++i) s.dims.push_back(adim);
    if (last >= 0) s.dims.push_back(last);
    return s;
}

std::vector<int> range_slots(int from, int to) {
    std::vector<int> out;
    for (int s = from; s <= to; ++s) out.push_back(s);
    return out;
}

void require_bimodule_over(const Module& m, const Algebra& a, const char* who) {
    if (!m.has_left() || !m.has_right() || !same_algebra(*m.left_algebra, a) ||
        !same_algebra(*m.right_algebra, a))
        throw InputError(std::string(who) + ": coefficients must be a bimodule over the algebra");
}

} // namespace

AdaptedAlgebra adapt_to_image(const AlgebraMorphism& phi) {
    if (!phi.is_injective()) throw InputError("adapt_to_image: the algebra map is not injective");
    return adapt_rows(phi.target, phi.matrix.transpose(), phi.source.labels);
}

AdaptedAlgebra adapt_to_ideal(const Algebra& b, const Subspace& ideal_span) {
    Ideal idl = ideal_of(b, ideal_span);
    std::vector<std::string> labels;
    for (int r = 0; r < idl.span.dim(); ++r) labels.push_back(b.labels[idl.span.pivots()[r]]);
    return adapt_rows(b, idl.span.basis(), std::move(labels));
}

Module transport_module(const Module& m, const AdaptedAlgebra& ad) {
    Module out = m;
    if (out.has_left()) out = restrict_left(out, ad.from_adapted);
    if (out.has_right()) out = restrict_right(out, ad.from_adapted);
    return out;
}

HochschildFiltration hochschild_filtration(const AlgebraMorphism& phi, const Module& m, int N) {
    if (!phi.is_injective())
        throw InputError(
            "hochschild_filtration: the algebra map must be injective; filter along its image "
            "subalgebra instead");
    require_bimodule_over(m, phi.target, "hochschild_filtration");
    HochschildFiltration out;
    out.adapted = adapt_to_image(phi);
    out.coefficients = transport_module(m, out.adapted);
    out.filtered.complex = hochschild_complex(out.adapted.algebra, out.coefficients, N);

    std::vector<TensorShape> shapes;
    std::vector<std::vector<int>> counted;
    for (int n = 0; n <= N; ++n) {
        shapes.push_back(slots(m.dim, out.adapted.algebra.dim(), n));
        counted.push_back(range_slots(1, n));
    }
    add_count_layers(out.filtered, shapes, counted, out.adapted.sub_dim, N);
    validate_filtration(out.filtered);
    return out;
}

CyclicFiltration cyclic_filtration(const AlgebraMorphism& phi, int N) {
    if (!phi.is_injective())
        throw InputError(
            "cyclic_filtration: the algebra map must be injective; filter along its image "
            "subalgebra instead");
    CyclicFiltration out;
    out.adapted = adapt_to_image(phi);
    out.filtered.complex = hochschild_complex(out.adapted.algebra, N);
    out.cyclic = cyclic_structure(out.adapted.algebra, N);

    std::vector<TensorShape> shapes;
    std::vector<std::vector<int>> counted;
    for (int n = 0; n <= N; ++n) {
        shapes.push_back(slots(out.adapted.algebra.dim(), out.adapted.algebra.dim(), n));
        counted.push_back(range_slots(0, n)); // the zeroth slot counts too
    }
    add_count_layers(out.filtered, shapes, counted, out.adapted.sub_dim, N + 1);
    validate_filtration(out.filtered);
    validate_cyclic_layers(out);
    return out;
}

void validate_cyclic_layers(const CyclicFiltration& cf) {
    for (int n = 0; n <= cf.filtered.complex.top_degree(); ++n)
        for (int p = 0; p <= cf.filtered.max_filtration; ++p) {
            const Subspace l = cf.filtered.layer(p, n);
            if (!l.contains(l.image_under(cf.cyclic.t[n])))
                throw InternalError("cyclic layers: level " + std::to_string(p) +
                                    " is not rotation-stable in degree " + std::to_string(n));
        }
}

BarFiltration bar_filtration(const Module& x, const AlgebraMorphism& phi, const Module& y,
                             int N) {
    if (!phi.is_injective())
        throw InputError(
            "bar_filtration: the algebra map must be injective; filter along its image "
            "subalgebra instead");
    BarFiltration out;
    out.adapted = adapt_to_image(phi);
    out.left = restrict_right(x, out.adapted.from_adapted);
    out.right = restrict_left(y, out.adapted.from_adapted);
    out.filtered.complex = two_sided_bar(out.left, out.adapted.algebra, out.right, N);

    std::vector<TensorShape> shapes;
    std::vector<std::vector<int>> counted;
    for (int n = 0; n <= N; ++n) {
        shapes.push_back(slots(x.dim, out.adapted.algebra.dim(), n, y.dim));
        counted.push_back(range_slots(1, n));
    }
    add_count_layers(out.filtered, shapes, counted, out.adapted.sub_dim, N);
    validate_filtration(out.filtered);
    return out;
}

IdealFiltration ideal_filtration(const Module& x, const Algebra& b, const Subspace& ideal_span,
                                 const Module& y, int N) {
    Ideal idl = ideal_of(b, ideal_span);
    for (int r = 0; r < idl.span.dim(); ++r) {
        std::vector<Scalar> v = idl.span.basis().row(r);
        if (!x.has_right() || !same_algebra(*x.right_algebra, b))
            throw InputError("ideal_filtration: first module needs a right action of the algebra");
        if (!y.has_left() || !same_algebra(*y.left_algebra, b))
            throw InputError("ideal_filtration: second module needs a left action of the algebra");
        if (!x.right_of(v).is_zero())
            throw InputError("ideal_filtration: the ideal does not annihilate the right module");
        if (!y.left_of(v).is_zero())
            throw InputError("ideal_filtration: the ideal does not annihilate the left module");
    }
    IdealFiltration out;
    out.adapted = adapt_to_ideal(b, ideal_span);
    out.quotient = quotient_algebra(b, idl);
    out.left = restrict_right(x, out.adapted.from_adapted);
    out.right = restrict_left(y, out.adapted.from_adapted);
    out.filtered.complex = two_sided_bar(out.left, out.adapted.algebra, out.right, N);

    std::vector<TensorShape> shapes;
    std::vector<std::vector<int>> counted;
    for (int n = 0; n <= N; ++n) {
        shapes.push_back(slots(x.dim, out.adapted.algebra.dim(), n, y.dim));
        counted.push_back(range_slots(1, n));
    }
    add_count_layers(out.filtered, shapes, counted, out.adapted.sub_dim, N);
    validate_filtration(out.filtered);
    return out;
}

} // namespace exacthh

#include "exacthh/module.hpp"

namespace exacthh {

namespace {

Matrix combination(const FieldSpec& F, const std::vector<Matrix>& mats,
                   const std::vector<Scalar>& coeff, int dim) {
    Matrix out(F, dim, dim);
    for (size_t i = 0; i < mats.size(); ++i) {
        if (F.is_zero(coeff[i])) continue;
        out = out + mats[i].scaled(coeff[i]);
    }
    return out;
}

} // namespace

Matrix Module::left_of(const std::vector<Scalar>& a) const {
    return combination(field, left, a, dim);
}

Matrix Module::right_of(const std::vector<Scalar>& a) const {
    return combination(field, right, a, dim);
}

std::vector<Scalar> Module::act_left(const std::vector<Scalar>& a,
                                     const std::vector<Scalar>& m) const {
    return left_of(a).apply(m);
}

std::vector<Scalar> Module::act_right(const std::vector<Scalar>& m,
                                      const std::vector<Scalar>& a) const {
    return right_of(a).apply(m);
}

void validate_module(const Module& m) {
    const FieldSpec& F = m.field;
    if (!m.has_left() && !m.has_right())
        throw InputError("module: no action given");
    if (m.has_left()) {
        const Algebra& A = *m.left_algebra;
        if (!(A.field() == F)) throw InputError("module: left algebra field mismatch");
        if (static_cast<int>(m.left.size()) != A.dim())
            throw InputError("module: left action count != algebra dim");
        for (const auto& mat : m.left)
            if (mat.rows() != m.dim || mat.cols() != m.dim)
                throw InputError("module: left action matrix shape");
        for (int i = 0; i < A.dim(); ++i)
            for (int j = 0; j < A.dim(); ++j) {
                Matrix lhs = m.left[i] * m.left[j];
                Matrix rhs = combination(F, m.left, A.mult.product(i, j), m.dim);
                if (!(lhs == rhs))
                    throw InputError("module: left action not associative on basis pair (" +
                                     A.labels[i] + ", " + A.labels[j] + ")");
            }
        if (!(m.left_of(A.unit) == Matrix::identity(F, m.dim)))
            throw InputError("module: left unit does not act as identity");
    }
    if (m.has_right()) {
        const Algebra& A = *m.right_algebra;
        if (!(A.field() == F)) throw InputError("module: right algebra field mismatch");
        if (static_cast<int>(m.right.size()) != A.dim())
            throw InputError("module: right action count != algebra dim");
        for (const auto& mat : m.right)
            if (mat.rows() != m.dim || mat.cols() != m.dim)
                throw InputError("module: right action matrix shape");
        for (int i = 0; i < A.dim(); ++i)
            for (int j = 0; j < A.dim(); ++j) {
                // (x . e_i) . e_j = x . (e_i e_j)
                Matrix lhs = m.right[j] * m.right[i];
                Matrix rhs = combination(F, m.right, A.mult.product(i, j), m.dim);
                if (!(lhs == rhs))
                    throw InputError("module: right action not associative on basis pair (" +
                                     A.labels[i] + ", " + A.labels[j] + ")");
            }
        if (!(m.right_of(A.unit) == Matrix::identity(F, m.dim)))
            throw InputError("module: right unit does not act as identity");
    }
    if (m.has_left() && m.has_right())
        for (size_t i = 0; i < m.left.size(); ++i)
            for (size_t j = 0; j < m.right.size(); ++j)
                if (!(m.left[i] * m.right[j] == m.right[j] * m.left[i]))
                    throw InputError("module: left and right actions do not commute (basis " +
                                     m.left_algebra->labels[i] + " vs " +
                                     m.right_algebra->labels[j] + ")");
}

Module left_module(const Algebra& a, std::vector<Matrix> action) {
    Module m;
    m.field = a.field();
    m.dim = action.empty() ? 0 : action[0].rows();
    m.left_algebra = a;
    m.left = std::move(action);
    validate_module(m);
    return m;
}

Module right_module(const Algebra& a, std::vector<Matrix> action) {
    Module m;
    m.field = a.field();
    m.dim = action.empty() ? 0 : action[0].rows();
    m.right_algebra = a;
    m.right = std::move(action);
    validate_module(m);
    return m;
}

Module bimodule(const Algebra& la, const Algebra& ra, std::vector<Matrix> l,
                std::vector<Matrix> r) {
    Module m;
    m.field = la.field();
    m.dim = l.empty() ? (r.empty() ? 0 : r[0].rows()) : l[0].rows();
    m.left_algebra = la;
    m.right_algebra = ra;
    m.left = std::move(l);
    m.right = std::move(r);
    validate_module(m);
    return m;
}

Module left_regular(const Algebra& a) {
    std::vector<Matrix> act;
    for (int i = 0; i < a.dim(); ++i) act.push_back(a.mult.left_mult(i));
    return left_module(a, std::move(act));
}

Module right_regular(const Algebra& a) {
    std::vector<Matrix> act;
    for (int i = 0; i < a.dim(); ++i) act.push_back(a.mult.right_mult_of(a.basis_vector(i)));
    return right_module(a, std::move(act));
}

Module regular_bimodule(const Algebra& a) {
    std::vector<Matrix> l, r;
    for (int i = 0; i < a.dim(); ++i) {
        l.push_back(a.mult.left_mult(i));
        r.push_back(a.mult.right_mult_of(a.basis_vector(i)));
    }
    return bimodule(a, a, std::move(l), std::move(r));
}

Module character_left_module(const Algebra& a, const std::vector<Scalar>& chi) {
    if (static_cast<int>(chi.size()) != a.dim())
        throw InputError("character module: coefficient count != algebra dim");
    std::vector<Matrix> act;
    for (int i = 0; i < a.dim(); ++i) {
        Matrix m(a.field(), 1, 1);
        m.at(0, 0) = a.field().normalize(chi[i]);
        act.push_back(m);
    }
    return left_module(a, std::move(act));
}

Module character_right_module(const Algebra& a, const std::vector<Scalar>& chi) {
    if (static_cast<int>(chi.size()) != a.dim())
        throw InputError("character module: coefficient count != algebra dim");
    std::vector<Matrix> act;
    for (int i = 0; i < a.dim(); ++i) {
        Matrix m(a.field(), 1, 1);
        m.at(0, 0) = a.field().normalize(chi[i]);
        act.push_back(m);
    }
    return right_module(a, std::move(act));
}

Module restrict_left(const Module& m, const AlgebraMorphism& f) {
    if (!m.has_left()) throw InputError("restrict_left: module has no left action");
    if (!same_algebra(*m.left_algebra, f.target))
        throw InputError("restrict_left: morphism target is not the acting algebra");
    Module out = m;
    out.left_algebra = f.source;
    out.left.clear();
    for (int i = 0; i < f.source.dim(); ++i)
        out.left.push_back(m.left_of(f.matrix.col(i)));
    validate_module(out);
    return out;
}

Module restrict_right(const Module& m, const AlgebraMorphism& f) {
    if (!m.has_right()) throw InputError("restrict_right: module has no right action");
    if (!same_algebra(*m.right_algebra, f.target))
        throw InputError("restrict_right: morphism target is not the acting algebra");
    Module out = m;
    out.right_algebra = f.source;
    out.right.clear();
    for (int i = 0; i < f.source.dim(); ++i)
        out.right.push_back(m.right_of(f.matrix.col(i)));
    validate_module(out);
    return out;
}

Module dual_module(const Module& m) {
    Module out;
    out.field = m.field;
    out.dim = m.dim;
    if (m.has_right()) {
        out.left_algebra = m.right_algebra;
        for (const auto& r : m.right) out.left.push_back(r.transpose());
    }
    if (m.has_left()) {
        out.right_algebra = m.left_algebra;
        for (const auto& l : m.left) out.right.push_back(l.transpose());
    }
    validate_module(out);
    return out;
}

ModuleQuotient quotient_module(const Module& m, const Subspace& s) {
    if (s.ambient() != m.dim) throw InputError("quotient_module: subspace ambient mismatch");
    for (const auto& mats : {m.left, m.right})
        for (const auto& mat : mats)
            if (!s.contains(s.image_under(mat)))
                throw InputError("quotient_module: subspace is not action-invariant");
    QuotientSpace q(m.field, m.dim, s);
    Module out;
    out.field = m.field;
    out.dim = q.dim();
    out.left_algebra = m.left_algebra;
    out.right_algebra = m.right_algebra;
    for (const auto& mat : m.left) out.left.push_back(induced_map_on_quotients(mat, q, q));
    for (const auto& mat : m.right) out.right.push_back(induced_map_on_quotients(mat, q, q));
    validate_module(out);
    return ModuleQuotient{std::move(out), std::move(q)};
}

ModuleQuotient cokernel_bimodule(const AlgebraMorphism& f) {
    Module amb = restrict_right(restrict_left(regular_bimodule(f.target), f), f);
    return quotient_module(amb, f.image());
}

TensorOverResult tensor_over(const Module& m, const Module& n) {
    if (!m.has_right() || !n.has_left())
        throw InputError("tensor_over: need a right action on the first factor and a left "
                         "action on the second");
    if (!same_algebra(*m.right_algebra, *n.left_algebra))
        throw InputError("tensor_over: middle algebras differ");
    const FieldSpec& F = m.field;
    const Algebra& B = *m.right_algebra;
    int md = m.dim, nd = n.dim;
    int amb = md * nd;
    Matrix rel(F, B.dim() * md * nd, amb);
    int row = 0;
    for (int b = 0; b < B.dim(); ++b) {
        const Matrix& rb = m.right[b];
        const Matrix& lb = n.left[b];
        for (int p = 0; p < md; ++p)
            for (int q = 0; q < nd; ++q) {
                // (e_p . b) ox e_q  -  e_p ox (b . e_q)
                for (int i = 0; i < md; ++i) {
                    const Scalar& c = rb.at(i, p);
                    if (!F.is_zero(c)) rel.at(row, i * nd + q) = F.add(rel.at(row, i * nd + q), c);
                }
                for (int j = 0; j < nd; ++j) {
                    const Scalar& c = lb.at(j, q);
                    if (!F.is_zero(c))
                        rel.at(row, p * nd + j) = F.sub(rel.at(row, p * nd + j), c);
                }
                ++row;
            }
    }
    QuotientSpace q(F, amb, Subspace::span(F, amb, rel));
    Module out;
    out.field = F;
    out.dim = q.dim();
    if (m.has_left()) {
        out.left_algebra = m.left_algebra;
        Matrix idn = Matrix::identity(F, nd);
        for (const auto& l : m.left)
            out.left.push_back(induced_map_on_quotients(Matrix::kron(l, idn), q, q));
    }
    if (n.has_right()) {
        out.right_algebra = n.right_algebra;
        Matrix idm = Matrix::identity(F, md);
        for (const auto& r : n.right)
            out.right.push_back(induced_map_on_quotients(Matrix::kron(idm, r), q, q));
    }
    if (out.has_left() || out.has_right()) validate_module(out);
    return TensorOverResult{std::move(out), std::move(q)};
}

Module envelope_left_module(const Module& m, const Algebra& envelope) {
    if (!m.has_left() || !m.has_right())
        throw InputError("envelope_left_module: need a bimodule");
    if (!same_algebra(*m.left_algebra, *m.right_algebra))
        throw InputError("envelope_left_module: left and right algebras differ");
    int n = m.left_algebra->dim();
    if (envelope.dim() != n * n)
        throw InputError("envelope_left_module: envelope dim mismatch");
    std::vector<Matrix> act;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) act.push_back(m.left[i] * m.right[j]);
    return left_module(envelope, std::move(act));
}

Module envelope_right_module(const Module& m, const Algebra& envelope) {
    if (!m.has_left() || !m.has_right())
        throw InputError("envelope_right_module: need a bimodule");
    if (!same_algebra(*m.left_algebra, *m.right_algebra))
        throw InputError("envelope_right_module: left and right algebras differ");
    int n = m.left_algebra->dim();
    if (envelope.dim() != n * n)
        throw InputError("envelope_right_module: envelope dim mismatch");
    std::vector<Matrix> act;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) act.push_back(m.left[j] * m.right[i]);
    return right_module(envelope, std::move(act));
}

} // namespace exacthh

#include "exacthh/subspace.hpp"

namespace exacthh {

Subspace Subspace::span(FieldSpec field, int ambient, const Matrix& generators) {
    if (generators.rows() > 0 && generators.cols() != ambient)
        throw InternalError("span generators have wrong ambient dimension");
    Subspace s;
    s.ambient_ = ambient;
    s.field_ = field;
    if (generators.rows() == 0) {
        s.basis_ = Matrix(field, 0, ambient);
    } else {
        Echelon e = row_reduce(generators);
        s.basis_ = e.rref;
        s.pivots_ = e.pivots;
    }
    return s;
}

Subspace Subspace::zero(FieldSpec field, int ambient) {
    return span(field, ambient, Matrix(field, 0, ambient));
}

Subspace Subspace::full(FieldSpec field, int ambient) {
    return span(field, ambient, Matrix::identity(field, ambient));
}

std::vector<Scalar> Subspace::reduce(std::vector<Scalar> v) const {
    if (static_cast<int>(v.size()) != ambient_) throw InternalError("reduce size mismatch");
    for (int i = 0; i < basis_.rows(); ++i) {
        int p = pivots_[i];
        if (field_.is_zero(v[p])) continue;
        Scalar f = v[p]; // pivot entries are 1
        for (int j = p; j < ambient_; ++j) {
            const Scalar& b = basis_.at(i, j);
            if (field_.is_zero(b)) continue;
            v[j] = field_.sub(v[j], field_.mul(f, b));
        }
    }
    return v;
}

bool Subspace::contains(const std::vector<Scalar>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
        if (!field_.is_zero(x)) return false;
    return true;
}

bool Subspace::contains(const Subspace& other) const {
    for (int i = 0; i < other.basis_.rows(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

std::optional<std::vector<Scalar>> Subspace::coords(const std::vector<Scalar>& v) const {
    std::vector<Scalar> w = v;
    std::vector<Scalar> c(dim(), Scalar(0));
    for (int i = 0; i < basis_.rows(); ++i) {
        int p = pivots_[i];
        if (field_.is_zero(w[p])) continue;
        c[i] = w[p];
        Scalar f = w[p];
        for (int j = p; j < ambient_; ++j) {
            const Scalar& b = basis_.at(i, j);
            if (field_.is_zero(b)) continue;
            w[j] = field_.sub(w[j], field_.mul(f, b));
        }
    }
    for (const auto& x : w)
        if (!field_.is_zero(x)) return std::nullopt;
    return c;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw InternalError("subspace sum ambient mismatch");
    return Subspace::span(a.field_, a.ambient_, a.basis_.vstack(b.basis_));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
    if (a.ambient_ != b.ambient_) throw InternalError("subspace intersection ambient mismatch");
    // x = c^T a.basis; x in b  <=>  c in kernel of (b-residual of a's basis rows, as columns)
    Matrix res(a.field_, a.ambient_, a.dim());
    for (int i = 0; i < a.dim(); ++i) {
        auto r = b.reduce(a.basis_.row(i));
        for (int j = 0; j < a.ambient_; ++j) res.at(j, i) = r[j];
    }
    Matrix ker = kernel_basis(res); // rows: coefficient vectors c
    Matrix gens = ker * a.basis_;
    return Subspace::span(a.field_, a.ambient_, gens);
}

bool Subspace::operator==(const Subspace& rhs) const {
    return ambient_ == rhs.ambient_ && basis_ == rhs.basis_;
}

Subspace Subspace::preimage(const Matrix& f) const {
    if (f.rows() != ambient_) throw InternalError("preimage codomain mismatch");
    Matrix res(field_, ambient_, f.cols());
    for (int c = 0; c < f.cols(); ++c) {
        auto r = reduce(f.col(c));
        for (int j = 0; j < ambient_; ++j) res.at(j, c) = r[j];
    }
    Matrix ker = kernel_basis(res);
    return Subspace::span(field_, f.cols(), ker);
}

Subspace Subspace::image_under(const Matrix& f) const {
    if (f.cols() != ambient_) throw InternalError("image_under domain mismatch");
    Matrix gens(field_, dim(), f.rows());
    for (int i = 0; i < dim(); ++i) {
        // a standard-vector basis row just picks out a column of f
        int extra = -1;
        for (int j = pivots_[i] + 1; j < ambient_ && extra < 0; ++j)
            if (!field_.is_zero(basis_.at(i, j))) extra = j;
        if (extra < 0) {
            for (int r = 0; r < f.rows(); ++r) gens.at(i, r) = f.at(r, pivots_[i]);
        } else {
            gens.set_row(i, f.apply(basis_.row(i)));
        }
    }
    return Subspace::span(field_, f.rows(), gens);
}

SpanAccumulator::SpanAccumulator(FieldSpec field, int ambient)
    : field_(std::move(field)), ambient_(ambient) {}

void SpanAccumulator::add(std::vector<Scalar> v) {
    if (static_cast<int>(v.size()) != ambient_) throw InternalError("accumulator ambient mismatch");
    int j = 0;
    // forward elimination only; subtracting a row can't revive entries before j
    while (true) {
        while (j < ambient_ && field_.is_zero(v[j])) ++j;
        if (j == ambient_) return;
        auto it = rows_.find(j);
        if (it == rows_.end()) break;
        const std::vector<Scalar>& r = it->second;
        Scalar c = std::move(v[j]);
        v[j] = Scalar(0);
        for (int t = j + 1; t < ambient_; ++t) {
            if (field_.is_zero(r[t])) continue;
            v[t] = field_.sub(v[t], field_.mul(c, r[t]));
        }
        ++j;
    }
    Scalar inv = field_.inv(v[j]);
    v[j] = field_.from_int(1);
    for (int t = j + 1; t < ambient_; ++t)
        if (!field_.is_zero(v[t])) v[t] = field_.mul(v[t], inv);
    rows_.emplace(j, std::move(v));
}

void SpanAccumulator::add_rows(const Matrix& m) {
    if (m.cols() != ambient_) throw InternalError("accumulator ambient mismatch");
    for (int i = 0; i < m.rows(); ++i) add(m.row(i));
}

void SpanAccumulator::add_columns(const Matrix& m) {
    if (m.rows() != ambient_) throw InternalError("accumulator ambient mismatch");
    for (int j = 0; j < m.cols(); ++j) {
        std::vector<Scalar> v(ambient_);
        for (int i = 0; i < ambient_; ++i) v[i] = m.at(i, j);
        add(std::move(v));
    }
}

Subspace SpanAccumulator::span() const {
    Matrix stacked(field_, static_cast<int>(rows_.size()), ambient_);
    int i = 0;
    for (const auto& [piv, row] : rows_) stacked.set_row(i++, row);
    return Subspace::span(field_, ambient_, stacked);
}

QuotientSpace::QuotientSpace(FieldSpec field, int ambient, const Subspace& relations)
    : ambient_(ambient), field_(field), rel_(relations) {
    if (relations.ambient() != ambient) throw InternalError("quotient relations ambient mismatch");
    std::vector<bool> is_pivot(ambient, false);
    for (int p : rel_.pivots()) is_pivot[p] = true;
    for (int c = 0; c < ambient; ++c)
        if (!is_pivot[c]) reps_.push_back(c);
}

std::vector<Scalar> QuotientSpace::project(const std::vector<Scalar>& v) const {
    auto r = rel_.reduce(v);
    std::vector<Scalar> out(reps_.size());
    for (size_t i = 0; i < reps_.size(); ++i) out[i] = r[reps_[i]];
    return out;
}

std::vector<Scalar> QuotientSpace::lift(const std::vector<Scalar>& coords) const {
    if (coords.size() != reps_.size()) throw InternalError("quotient lift size mismatch");
    std::vector<Scalar> v(ambient_, Scalar(0));
    for (size_t i = 0; i < reps_.size(); ++i) v[reps_[i]] = coords[i];
    return v;
}

Matrix QuotientSpace::projection_matrix() const {
    Matrix m(field_, dim(), ambient_);
    // project each standard basis vector; reduction only touches pivot columns,
    // so e_j projects to e_j's rep coordinate plus corrections from rel basis
    for (int j = 0; j < ambient_; ++j) {
        std::vector<Scalar> e(ambient_, Scalar(0));
        e[j] = field_.from_int(1);
        auto p = project(e);
        for (int i = 0; i < dim(); ++i) m.at(i, j) = p[i];
    }
    return m;
}

Matrix QuotientSpace::section_matrix() const {
    Matrix m(field_, ambient_, dim());
    for (int i = 0; i < dim(); ++i) m.at(reps_[i], i) = field_.from_int(1);
    return m;
}

Subquotient::Subquotient(const Subspace& sup, const Subspace& sub) : sup_(sup), sub_(sub) {
    if (sup.ambient() != sub.ambient()) throw InternalError("subquotient ambient mismatch");
    if (!sup.contains(sub)) throw InternalError("subquotient: denominator not inside numerator");
    const FieldSpec& F = sup.field();
    Matrix residuals(F, sup.dim(), sup.ambient());
    for (int i = 0; i < sup.dim(); ++i)
        residuals.set_row(i, sub.reduce(sup.basis().row(i)));
    Echelon e = row_reduce(residuals);
    lift_ = e.rref;
}

std::vector<Scalar> Subquotient::coords(const std::vector<Scalar>& v) const {
    const FieldSpec& F = sup_.field();
    auto r = sub_.reduce(v);
    std::vector<Scalar> c(lift_.rows(), Scalar(0));
    // lift rows are RREF: eliminate r against them, reading coefficients
    for (int i = 0; i < lift_.rows(); ++i) {
        int p = -1;
        for (int j = 0; j < lift_.cols(); ++j)
            if (!F.is_zero(lift_.at(i, j))) { p = j; break; }
        if (p < 0) continue;
        if (F.is_zero(r[p])) continue;
        c[i] = r[p];
        Scalar f = r[p];
        for (int j = p; j < lift_.cols(); ++j) {
            const Scalar& b = lift_.at(i, j);
            if (F.is_zero(b)) continue;
            r[j] = F.sub(r[j], F.mul(f, b));
        }
    }
    for (const auto& x : r)
        if (!F.is_zero(x)) throw InternalError("subquotient coords: vector outside numerator");
    return c;
}

Matrix induced_map_on_subquotients(const Matrix& f, const Subquotient& src, const Subquotient& dst) {
    const FieldSpec& F = f.field();
    // well-definedness
    for (int i = 0; i < src.sub().dim(); ++i) {
        auto w = f.apply(src.sub().basis().row(i));
        if (!dst.sub().contains(w))
            throw InternalError("induced map does not send denominator into denominator");
    }
    for (int i = 0; i < src.sup().dim(); ++i) {
        auto w = f.apply(src.sup().basis().row(i));
        if (!dst.sup().contains(w))
            throw InternalError("induced map does not send numerator into numerator");
    }
    Matrix m(F, dst.dim(), src.dim());
    for (int c = 0; c < src.dim(); ++c) {
        auto w = f.apply(src.lift().row(c));
        auto coords = dst.coords(w);
        for (int r = 0; r < dst.dim(); ++r) m.at(r, c) = coords[r];
    }
    return m;
}

Matrix induced_map_on_quotients(const Matrix& f, const QuotientSpace& src, const QuotientSpace& dst) {
    const FieldSpec& F = f.field();
    for (int i = 0; i < src.relations().dim(); ++i) {
        auto w = f.apply(src.relations().basis().row(i));
        if (!dst.relations().contains(w))
            throw InternalError("induced map does not send relations into relations");
    }
    Matrix m(F, dst.dim(), src.dim());
    for (int c = 0; c < src.dim(); ++c) {
        std::vector<Scalar> rep(src.ambient(), Scalar(0));
        rep[src.representative_indices()[c]] = F.from_int(1);
        auto coords = dst.project(f.apply(rep));
        for (int r = 0; r < dst.dim(); ++r) m.at(r, c) = coords[r];
    }
    return m;
}

} // namespace exacthh

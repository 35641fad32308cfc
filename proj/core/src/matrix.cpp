#include "exacthh/matrix.hpp"

namespace exacthh {

Matrix::Matrix(FieldSpec field, int rows, int cols)
    : rows_(rows), cols_(cols), field_(field),
      a_(static_cast<size_t>(rows) * cols, Scalar(0)) {
    if (rows < 0 || cols < 0) throw InternalError("negative matrix dimension");
}

Matrix Matrix::identity(FieldSpec field, int n) {
    Matrix m(field, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = field.from_int(1);
    return m;
}

Matrix Matrix::from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows) {
    int r = static_cast<int>(rows.size());
    int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
    Matrix m(field, r, c);
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(rows[i].size()) != c)
            throw InputError("ragged rows in matrix literal");
        for (int j = 0; j < c; ++j) m.at(i, j) = field.normalize(rows[i][j]);
    }
    return m;
}

Matrix Matrix::row_vector(FieldSpec field, const std::vector<Scalar>& v) {
    return from_rows(field, {v});
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            const Scalar& s = a.at(i, j);
            if (a.field().is_zero(s)) continue;
            for (int k = 0; k < b.rows(); ++k)
                for (int l = 0; l < b.cols(); ++l) {
                    if (b.field().is_zero(b.at(k, l))) continue;
                    m.at(i * b.rows() + k, j * b.cols() + l) = a.field().mul(s, b.at(k, l));
                }
        }
    return m;
}

std::vector<Scalar> Matrix::row(int r) const {
    std::vector<Scalar> v(cols_);
    for (int j = 0; j < cols_; ++j) v[j] = at(r, j);
    return v;
}

std::vector<Scalar> Matrix::col(int c) const {
    std::vector<Scalar> v(rows_);
    for (int i = 0; i < rows_; ++i) v[i] = at(i, c);
    return v;
}

void Matrix::set_row(int r, const std::vector<Scalar>& v) {
    if (static_cast<int>(v.size()) != cols_) throw InternalError("set_row size mismatch");
    for (int j = 0; j < cols_; ++j) at(r, j) = field_.normalize(v[j]);
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw InternalError("matrix product shape mismatch");
    Matrix m(field_, rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Scalar& s = at(i, k);
            if (field_.is_zero(s)) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                const Scalar& t = rhs.at(k, j);
                if (field_.is_zero(t)) continue;
                m.at(i, j) = field_.add(m.at(i, j), field_.mul(s, t));
            }
        }
    return m;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InternalError("matrix sum shape mismatch");
    Matrix m(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_.add(a_[i], rhs.a_[i]);
    return m;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw InternalError("matrix diff shape mismatch");
    Matrix m(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_.sub(a_[i], rhs.a_[i]);
    return m;
}

Matrix Matrix::scaled(const Scalar& s) const {
    Matrix m(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_.mul(a_[i], s);
    return m;
}

Matrix Matrix::negated() const {
    Matrix m(field_, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) m.a_[i] = field_.neg(a_[i]);
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
    if (static_cast<int>(v.size()) != cols_) throw InternalError("apply size mismatch");
    std::vector<Scalar> out(rows_, Scalar(0));
    // column accumulation: skipping a zero input entry skips the whole column
    for (int j = 0; j < cols_; ++j) {
        if (field_.is_zero(v[j])) continue;
        for (int i = 0; i < rows_; ++i) {
            const Scalar& s = at(i, j);
            if (field_.is_zero(s)) continue;
            out[i] = field_.add(out[i], field_.mul(s, v[j]));
        }
    }
    return out;
}

Matrix Matrix::vstack(const Matrix& b) const {
    if (cols_ != b.cols_ && rows_ != 0 && b.rows_ != 0)
        throw InternalError("vstack column mismatch");
    int c = rows_ == 0 ? b.cols_ : cols_;
    Matrix m(field_, rows_ + b.rows_, c);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m.at(i, j) = at(i, j);
    for (int i = 0; i < b.rows_; ++i)
        for (int j = 0; j < b.cols_; ++j) m.at(rows_ + i, j) = b.at(i, j);
    return m;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_)
        if (!field_.is_zero(x)) return false;
    return true;
}

bool Matrix::operator==(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_ || !(field_ == rhs.field_)) return false;
    for (size_t i = 0; i < a_.size(); ++i)
        if (!field_.is_zero(field_.sub(a_[i], rhs.a_[i]))) return false;
    return true;
}

Echelon row_reduce(const Matrix& m) {
    const FieldSpec& F = m.field();
    Matrix w = m;
    int nr = w.rows(), nc = w.cols();
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < nc && r < nr; ++c) {
        int pivot = -1;
        for (int i = r; i < nr; ++i)
            if (!F.is_zero(w.at(i, c))) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = c; j < nc; ++j) std::swap(w.at(pivot, j), w.at(r, j));
        Scalar inv = F.inv(w.at(r, c));
        for (int j = c; j < nc; ++j)
            if (!F.is_zero(w.at(r, j))) w.at(r, j) = F.mul(w.at(r, j), inv);
        for (int i = 0; i < nr; ++i) {
            if (i == r) continue;
            const Scalar& f = w.at(i, c);
            if (F.is_zero(f)) continue;
            Scalar factor = f; // w.at(i,c) mutates below
            for (int j = c; j < nc; ++j) {
                const Scalar& p = w.at(r, j);
                if (F.is_zero(p)) continue;
                w.at(i, j) = F.sub(w.at(i, j), F.mul(factor, p));
            }
        }
        pivots.push_back(c);
        ++r;
    }
    Echelon e;
    e.rank = r;
    e.pivots = std::move(pivots);
    e.rref = Matrix(F, r, nc);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < nc; ++j) e.rref.at(i, j) = w.at(i, j);
    return e;
}

int rank(const Matrix& m) { return row_reduce(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    const FieldSpec& F = m.field();
    Echelon e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : e.pivots) is_pivot[p] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < m.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(c);
    Matrix k(F, static_cast<int>(free_cols.size()), m.cols());
    for (size_t fi = 0; fi < free_cols.size(); ++fi) {
        int f = free_cols[fi];
        k.at(static_cast<int>(fi), f) = F.from_int(1);
        for (int i = 0; i < e.rank; ++i)
            k.at(static_cast<int>(fi), e.pivots[i]) = F.neg(e.rref.at(i, f));
    }
    return k;
}

Matrix image_basis(const Matrix& m) {
    Echelon e = row_reduce(m);
    Matrix img(m.field(), e.rank, m.rows());
    for (int i = 0; i < e.rank; ++i) {
        auto c = m.col(e.pivots[i]);
        img.set_row(i, c);
    }
    return img;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, const std::vector<Scalar>& b) {
    const FieldSpec& F = m.field();
    if (static_cast<int>(b.size()) != m.rows()) throw InternalError("solve rhs size mismatch");
    // eliminate on [m | b]
    Matrix aug(F, m.rows(), m.cols() + 1);
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
        aug.at(i, m.cols()) = F.normalize(b[i]);
    }
    Echelon e = row_reduce(aug);
    std::vector<Scalar> x(m.cols(), Scalar(0));
    for (int i = 0; i < e.rank; ++i) {
        if (e.pivots[i] == m.cols()) return std::nullopt; // inconsistent row 0 ... 0 | 1
        x[e.pivots[i]] = e.rref.at(i, m.cols());
    }
    return x;
}

} // namespace exacthh

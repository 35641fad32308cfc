#include "exacthh/algebra.hpp"

#include <array>

namespace exacthh {

MultTable MultTable::zero(FieldSpec f, int dim) {
    MultTable t;
    t.field = f;
    t.dim = dim;
    t.table.assign(dim, std::vector<std::vector<Scalar>>(dim, std::vector<Scalar>(dim, Scalar(0))));
    return t;
}

std::vector<Scalar> MultTable::mult(const std::vector<Scalar>& a, const std::vector<Scalar>& b) const {
    std::vector<Scalar> out(dim, Scalar(0));
    for (int i = 0; i < dim; ++i) {
        if (field.is_zero(a[i])) continue;
        for (int j = 0; j < dim; ++j) {
            if (field.is_zero(b[j])) continue;
            Scalar c = field.mul(a[i], b[j]);
            for (int k = 0; k < dim; ++k) {
                const Scalar& t = table[i][j][k];
                if (field.is_zero(t)) continue;
                out[k] = field.add(out[k], field.mul(c, t));
            }
        }
    }
    return out;
}

Matrix MultTable::left_mult(int i) const {
    Matrix m(field, dim, dim);
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) m.at(k, j) = table[i][j][k];
    return m;
}

Matrix MultTable::left_mult_of(const std::vector<Scalar>& a) const {
    Matrix m(field, dim, dim);
    for (int i = 0; i < dim; ++i) {
        if (field.is_zero(a[i])) continue;
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k) {
                const Scalar& t = table[i][j][k];
                if (field.is_zero(t)) continue;
                m.at(k, j) = field.add(m.at(k, j), field.mul(a[i], t));
            }
    }
    return m;
}

Matrix MultTable::right_mult_of(const std::vector<Scalar>& a) const {
    Matrix m(field, dim, dim);
    for (int j = 0; j < dim; ++j) {
        if (field.is_zero(a[j])) continue;
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < dim; ++k) {
                const Scalar& t = table[i][j][k];
                if (field.is_zero(t)) continue;
                m.at(k, i) = field.add(m.at(k, i), field.mul(a[j], t));
            }
    }
    return m;
}

std::optional<std::array<int, 3>> MultTable::associativity_defect() const {
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) {
            auto ij = table[i][j];
            for (int k = 0; k < dim; ++k) {
                std::vector<Scalar> ek(dim, Scalar(0));
                ek[k] = field.from_int(1);
                auto lhs = mult(ij, ek);
                auto rhs = mult([&] {
                    std::vector<Scalar> ei(dim, Scalar(0));
                    ei[i] = field.from_int(1);
                    return ei;
                }(), table[j][k]);
                for (int t = 0; t < dim; ++t)
                    if (!field.is_zero(field.sub(lhs[t], rhs[t])))
                        return std::array<int, 3>{i, j, k};
            }
        }
    return std::nullopt;
}

std::vector<Scalar> Algebra::basis_vector(int i) const {
    std::vector<Scalar> v(dim(), Scalar(0));
    v[i] = field().from_int(1);
    return v;
}

void validate_algebra(const Algebra& a) {
    int n = a.dim();
    if (static_cast<int>(a.labels.size()) != n) throw InputError("algebra: label count != dim");
    if (static_cast<int>(a.unit.size()) != n) throw InputError("algebra: unit vector length != dim");
    if (static_cast<int>(a.mult.table.size()) != n) throw InputError("algebra: table size != dim");
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(a.mult.table[i].size()) != n)
            throw InputError("algebra: table[" + std::to_string(i) + "] size != dim");
        for (int j = 0; j < n; ++j)
            if (static_cast<int>(a.mult.table[i][j].size()) != n)
                throw InputError("algebra: table[" + std::to_string(i) + "][" + std::to_string(j) +
                                 "] size != dim");
    }
    if (auto defect = a.mult.associativity_defect()) {
        auto [i, j, k] = *defect;
        throw InputError("algebra: associativity fails on basis triple (" + a.labels[i] + ", " +
                         a.labels[j] + ", " + a.labels[k] + ") = table indices (" +
                         std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(k) + ")");
    }
    for (int i = 0; i < n; ++i) {
        auto e = a.basis_vector(i);
        auto l = a.mult.mult(a.unit, e);
        auto r = a.mult.mult(e, a.unit);
        for (int t = 0; t < n; ++t) {
            if (!a.field().is_zero(a.field().sub(l[t], e[t])))
                throw InputError("algebra: left unit law fails on basis element " + a.labels[i]);
            if (!a.field().is_zero(a.field().sub(r[t], e[t])))
                throw InputError("algebra: right unit law fails on basis element " + a.labels[i]);
        }
    }
}

bool same_algebra(const Algebra& a, const Algebra& b) {
    if (!(a.field() == b.field()) || a.dim() != b.dim()) return false;
    const FieldSpec& F = a.field();
    for (int i = 0; i < a.dim(); ++i) {
        if (!F.is_zero(F.sub(a.unit[i], b.unit[i]))) return false;
        for (int j = 0; j < a.dim(); ++j)
            for (int k = 0; k < a.dim(); ++k)
                if (!F.is_zero(F.sub(a.mult.table[i][j][k], b.mult.table[i][j][k]))) return false;
    }
    return true;
}

Subspace AlgebraMorphism::image() const {
    return Subspace::span(matrix.field(), matrix.rows(), image_basis(matrix));
}

bool AlgebraMorphism::is_injective() const { return rank(matrix) == matrix.cols(); }
bool AlgebraMorphism::is_surjective() const { return rank(matrix) == matrix.rows(); }

void validate_morphism(const AlgebraMorphism& f) {
    if (f.matrix.rows() != f.target.dim() || f.matrix.cols() != f.source.dim())
        throw InputError("morphism: matrix shape does not match source/target dims");
    if (!(f.source.field() == f.target.field()))
        throw InputError("morphism: source and target fields differ");
    const FieldSpec& F = f.source.field();
    for (int i = 0; i < f.source.dim(); ++i)
        for (int j = 0; j < f.source.dim(); ++j) {
            auto lhs = f.matrix.apply(f.source.mult.product(i, j));
            auto rhs = f.target.mult.mult(f.matrix.col(i), f.matrix.col(j));
            for (int t = 0; t < f.target.dim(); ++t)
                if (!F.is_zero(F.sub(lhs[t], rhs[t])))
                    throw InputError("morphism: not multiplicative on basis pair (" +
                                     f.source.labels[i] + ", " + f.source.labels[j] + ")");
        }
    auto u = f.matrix.apply(f.source.unit);
    for (int t = 0; t < f.target.dim(); ++t)
        if (!F.is_zero(F.sub(u[t], f.target.unit[t])))
            throw InputError("morphism: unit not preserved");
}

AlgebraMorphism compose(const AlgebraMorphism& g, const AlgebraMorphism& f) {
    if (g.source.dim() != f.target.dim())
        throw InternalError("morphism composition mismatch");
    return AlgebraMorphism{f.source, g.target, g.matrix * f.matrix};
}

Ideal ideal_of(const Algebra& a, const Subspace& span) {
    const FieldSpec& F = a.field();
    if (span.ambient() != a.dim()) throw InputError("ideal: span ambient != algebra dim");
    for (int i = 0; i < a.dim(); ++i)
        for (int s = 0; s < span.dim(); ++s) {
            auto x = span.basis().row(s);
            auto left = a.mult.mult(a.basis_vector(i), x);
            if (!span.contains(left))
                throw InputError("ideal: span not closed under left multiplication by " + a.labels[i]);
            auto right = a.mult.mult(x, a.basis_vector(i));
            if (!span.contains(right))
                throw InputError("ideal: span not closed under right multiplication by " + a.labels[i]);
        }
    Ideal ideal{a, span, MultTable::zero(F, span.dim())};
    for (int s = 0; s < span.dim(); ++s)
        for (int t = 0; t < span.dim(); ++t) {
            auto prod = a.mult.mult(span.basis().row(s), span.basis().row(t));
            auto c = span.coords(prod);
            if (!c) throw InternalError("ideal: product left the span despite absorption");
            ideal.restricted.table[s][t] = *c;
        }
    return ideal;
}

SubalgebraInclusion subalgebra_inclusion(const Algebra& a, const Subspace& span) {
    const FieldSpec& F = a.field();
    if (span.ambient() != a.dim()) throw InputError("subalgebra: span ambient != algebra dim");
    if (!span.contains(a.unit))
        throw InputError("subalgebra: span does not contain the unit");
    Algebra sub;
    sub.mult = MultTable::zero(F, span.dim());
    for (int s = 0; s < span.dim(); ++s)
        for (int t = 0; t < span.dim(); ++t) {
            auto prod = a.mult.mult(span.basis().row(s), span.basis().row(t));
            auto c = span.coords(prod);
            if (!c)
                throw InputError("subalgebra: span not closed under multiplication (basis rows " +
                                 std::to_string(s) + "," + std::to_string(t) + ")");
            sub.mult.table[s][t] = *c;
        }
    auto unit_coords = span.coords(a.unit);
    sub.unit = *unit_coords;
    for (int s = 0; s < span.dim(); ++s) {
        // label: expansion of the basis vector in ambient labels
        auto v = span.basis().row(s);
        std::string lbl;
        for (int i = 0; i < a.dim(); ++i) {
            if (F.is_zero(v[i])) continue;
            if (!lbl.empty()) lbl += "+";
            std::string c = F.format(v[i]);
            lbl += (c == "1" ? "" : c + "*") + a.labels[i];
        }
        sub.labels.push_back(lbl.empty() ? "0" : lbl);
    }
    validate_algebra(sub);
    AlgebraMorphism incl{sub, a, span.basis().transpose()};
    validate_morphism(incl);
    return SubalgebraInclusion{sub, incl};
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Ideal& i) {
    const FieldSpec& F = a.field();
    QuotientSpace q(F, a.dim(), i.span);
    Algebra c;
    c.mult = MultTable::zero(F, q.dim());
    for (int s = 0; s < q.dim(); ++s)
        for (int t = 0; t < q.dim(); ++t) {
            auto p = a.mult.mult(a.basis_vector(q.representative_indices()[s]),
                                 a.basis_vector(q.representative_indices()[t]));
            c.mult.table[s][t] = q.project(p);
        }
    c.unit = q.project(a.unit);
    for (int s = 0; s < q.dim(); ++s)
        c.labels.push_back("[" + a.labels[q.representative_indices()[s]] + "]");
    validate_algebra(c);
    AlgebraMorphism proj{a, c, q.projection_matrix()};
    validate_morphism(proj);
    return QuotientAlgebra{c, proj, q};
}

Algebra enveloping_algebra(const Algebra& a) {
    const FieldSpec& F = a.field();
    int n = a.dim();
    Algebra e;
    e.mult = MultTable::zero(F, n * n);
    // (a ox b^op)(c ox d^op) = ac ox (db)^op
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    auto& out = e.mult.table[i * n + j][k * n + l];
                    for (int m = 0; m < n; ++m) {
                        const Scalar& ac = a.mult.table[i][k][m];
                        if (F.is_zero(ac)) continue;
                        for (int p = 0; p < n; ++p) {
                            const Scalar& db = a.mult.table[l][j][p];
                            if (F.is_zero(db)) continue;
                            out[m * n + p] = F.add(out[m * n + p], F.mul(ac, db));
                        }
                    }
                }
    e.unit.assign(n * n, Scalar(0));
    for (int i = 0; i < n; ++i) {
        if (F.is_zero(a.unit[i])) continue;
        for (int j = 0; j < n; ++j) {
            if (F.is_zero(a.unit[j])) continue;
            e.unit[i * n + j] = F.mul(a.unit[i], a.unit[j]);
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            e.labels.push_back(a.labels[i] + "*" + a.labels[j] + "op");
    validate_algebra(e);
    return e;
}

namespace {

bool is_nilpotent_ideal(const Algebra& a, const Subspace& s) {
    Subspace power = s;
    for (int step = 0; step < a.dim() + 1; ++step) {
        if (power.dim() == 0) return true;
        // next power: span of products x*y, x in power, y in s
        Matrix gens(a.field(), power.dim() * s.dim(), a.dim());
        int r = 0;
        for (int i = 0; i < power.dim(); ++i)
            for (int j = 0; j < s.dim(); ++j)
                gens.set_row(r++, a.mult.mult(power.basis().row(i), s.basis().row(j)));
        Subspace next = Subspace::span(a.field(), a.dim(), gens);
        if (next.dim() >= power.dim() && !(next.dim() == 0)) {
            if (next == power) return false; // stabilized nonzero
        }
        power = next;
    }
    return power.dim() == 0;
}

} // namespace

void validate_radical_candidate(const Algebra& a, const Subspace& candidate) {
    try {
        (void)ideal_of(a, candidate);
    } catch (const InputError& e) {
        throw InputError(std::string("radical candidate is not a two-sided ideal: ") + e.what());
    }
    if (!is_nilpotent_ideal(a, candidate))
        throw InputError("radical candidate is not nilpotent");
}

Subspace radical(const Algebra& a) {
    const FieldSpec& F = a.field();
    if (!F.is_rational())
        throw InputError("radical over F_p requires a user-supplied radical "
                         "(the trace-form criterion is only valid in characteristic 0)");
    int n = a.dim();
    // Gram matrix of (x,y) -> trace(L_x L_y)
    std::vector<Matrix> lmult;
    for (int i = 0; i < n; ++i) lmult.push_back(a.mult.left_mult(i));
    Matrix gram(F, n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Matrix p = lmult[i] * lmult[j];
            Scalar tr(0);
            for (int d = 0; d < n; ++d) tr = F.add(tr, p.at(d, d));
            gram.at(i, j) = tr;
        }
    Subspace rad = Subspace::span(F, n, kernel_basis(gram));
    validate_radical_candidate(a, rad);
    return rad;
}

// ---- presets ----

Algebra ground_field(FieldSpec f) {
    Algebra a;
    a.mult = MultTable::zero(f, 1);
    a.mult.table[0][0][0] = f.from_int(1);
    a.unit = {f.from_int(1)};
    a.labels = {"1"};
    return a;
}

Algebra truncated_polynomial(FieldSpec f, int n) {
    if (n < 1) throw InputError("truncated_polynomial needs n >= 1");
    Algebra a;
    a.mult = MultTable::zero(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) a.mult.table[i][j][i + j] = f.from_int(1);
    a.unit.assign(n, Scalar(0));
    a.unit[0] = f.from_int(1);
    a.labels.push_back("1");
    if (n > 1) a.labels.push_back("x");
    for (int i = 2; i < n; ++i) a.labels.push_back("x^" + std::to_string(i));
    return a;
}

Algebra dual_numbers(FieldSpec f) { return truncated_polynomial(f, 2); }

Algebra upper_triangular(FieldSpec f, int n) {
    if (n < 1) throw InputError("upper_triangular needs n >= 1");
    std::vector<std::pair<int, int>> basis;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) basis.emplace_back(i, j);
    int d = static_cast<int>(basis.size());
    Algebra a;
    a.mult = MultTable::zero(f, d);
    for (int s = 0; s < d; ++s)
        for (int t = 0; t < d; ++t) {
            auto [i, j] = basis[s];
            auto [k, l] = basis[t];
            if (j != k) continue;
            for (int u = 0; u < d; ++u)
                if (basis[u] == std::make_pair(i, l)) a.mult.table[s][t][u] = f.from_int(1);
        }
    a.unit.assign(d, Scalar(0));
    for (int s = 0; s < d; ++s)
        if (basis[s].first == basis[s].second) a.unit[s] = f.from_int(1);
    for (auto [i, j] : basis)
        a.labels.push_back("e" + std::to_string(i) + std::to_string(j));
    return a;
}

Algebra product_field(FieldSpec f, int m) {
    if (m < 1) throw InputError("product_field needs m >= 1");
    Algebra a;
    a.mult = MultTable::zero(f, m);
    for (int i = 0; i < m; ++i) a.mult.table[i][i][i] = f.from_int(1);
    a.unit.assign(m, f.from_int(1));
    for (int i = 1; i <= m; ++i) a.labels.push_back("e" + std::to_string(i));
    return a;
}

Algebra monoid_algebra(FieldSpec f, const std::vector<std::vector<int>>& table,
                       int identity_index, const std::vector<std::string>& labels) {
    int n = static_cast<int>(table.size());
    if (n == 0) throw InputError("monoid_algebra: empty table");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != n)
            throw InputError("monoid_algebra: table is not square");
        for (int v : row)
            if (v < 0 || v >= n) throw InputError("monoid_algebra: table entry out of range");
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (table[table[i][j]][k] != table[i][table[j][k]])
                    throw InputError("monoid_algebra: monoid table not associative at (" +
                                     std::to_string(i) + "," + std::to_string(j) + "," +
                                     std::to_string(k) + ")");
    if (identity_index < 0 || identity_index >= n)
        throw InputError("monoid_algebra: identity index out of range");
    for (int i = 0; i < n; ++i)
        if (table[identity_index][i] != i || table[i][identity_index] != i)
            throw InputError("monoid_algebra: claimed identity is not an identity");
    Algebra a;
    a.mult = MultTable::zero(f, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a.mult.table[i][j][table[i][j]] = f.from_int(1);
    a.unit.assign(n, Scalar(0));
    a.unit[identity_index] = f.from_int(1);
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw InputError("monoid_algebra: label count mismatch");
        a.labels = labels;
    } else {
        for (int i = 0; i < n; ++i) a.labels.push_back("g" + std::to_string(i));
    }
    validate_algebra(a);
    return a;
}

Algebra tensor_algebra(const Algebra& a, const Algebra& b) {
    const FieldSpec& F = a.field();
    if (!(F == b.field())) throw InputError("tensor_algebra: field mismatch");
    int na = a.dim(), nb = b.dim();
    Algebra t;
    t.mult = MultTable::zero(F, na * nb);
    for (int i = 0; i < na; ++i)
        for (int p = 0; p < nb; ++p)
            for (int j = 0; j < na; ++j)
                for (int q = 0; q < nb; ++q) {
                    auto& out = t.mult.table[i * nb + p][j * nb + q];
                    for (int k = 0; k < na; ++k) {
                        const Scalar& ca = a.mult.table[i][j][k];
                        if (F.is_zero(ca)) continue;
                        for (int r = 0; r < nb; ++r) {
                            const Scalar& cb = b.mult.table[p][q][r];
                            if (F.is_zero(cb)) continue;
                            out[k * nb + r] = F.add(out[k * nb + r], F.mul(ca, cb));
                        }
                    }
                }
    t.unit.assign(na * nb, Scalar(0));
    for (int i = 0; i < na; ++i) {
        if (F.is_zero(a.unit[i])) continue;
        for (int p = 0; p < nb; ++p) {
            if (F.is_zero(b.unit[p])) continue;
            t.unit[i * nb + p] = F.mul(a.unit[i], b.unit[p]);
        }
    }
    for (int i = 0; i < na; ++i)
        for (int p = 0; p < nb; ++p) t.labels.push_back(a.labels[i] + "*" + b.labels[p]);
    validate_algebra(t);
    return t;
}

} // namespace exacthh

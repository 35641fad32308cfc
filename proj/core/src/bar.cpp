#include "exacthh/bar.hpp"

namespace exacthh {

namespace {

void require_right_over(const Module& x, const Algebra& a, const char* who) {
    if (!x.has_right() || !same_algebra(*x.right_algebra, a))
        throw InputError(std::string(who) + ": first module needs a right action of the algebra");
}

void require_left_over(const Module& y, const Algebra& a, const char* who) {
    if (!y.has_left() || !same_algebra(*y.left_algebra, a))
        throw InputError(std::string(who) + ": second module needs a left action of the algebra");
}

TensorShape bar_shape(int xdim, int adim, int n, int ydim) {
    TensorShape s;
    s.dims.push_back(xdim);
    for (int i = 0; i < n; ++i) s.dims.push_back(adim);
    s.dims.push_back(ydim);
    return s;
}

/* d_n of X ox A^{ox n} ox Y; shape has n+2 slots */
Matrix bar_boundary(const FieldSpec& F, const Module& x, const Algebra& a, const Module& y,
                    int n) {
    TensorShape shape = bar_shape(x.dim, a.dim(), n, y.dim);
    long long rows = shape.total() / a.dim();
    Matrix d(F, static_cast<int>(rows), static_cast<int>(shape.total()));
    auto xr = [&](int p, int i) { return x.right[i].col(p); };
    auto am = [&](int i, int j) { return a.mult.product(i, j); };
    auto yl = [&](int i, int q) { return y.left[i].col(q); };
    for (int j = 0; j <= n; ++j) {
        Matrix face = (j == 0)   ? merge_slots(F, shape, 0, x.dim, xr)
                      : (j == n) ? merge_slots(F, shape, n, y.dim, yl)
                                 : merge_slots(F, shape, j, a.dim(), am);
        d = (j % 2 == 0) ? d + face : d - face;
    }
    return d;
}

} // namespace

ChainComplex two_sided_bar(const Module& x, const Algebra& a, const Module& y, int N) {
    require_right_over(x, a, "two_sided_bar");
    require_left_over(y, a, "two_sided_bar");
    const FieldSpec& F = a.field();
    ChainComplex c;
    c.field = F;
    for (int n = 0; n <= N; ++n) {
        TensorShape shape = bar_shape(x.dim, a.dim(), n, y.dim);
        c.dims.push_back(static_cast<int>(shape.total()));
        c.d.push_back(n == 0 ? Matrix(F, 0, c.dims[0]) : bar_boundary(F, x, a, y, n));
    }
    c.certified_degree = c.default_certified();
    validate_complex(c);
    return c;
}

RelativeBarComplex relative_two_sided_bar(const Module& x, const AlgebraMorphism& phi,
                                          const Module& y, int N, bool normalized) {
    const Algebra& a = phi.target;
    const Algebra& b = phi.source;
    require_right_over(x, a, "relative bar");
    require_left_over(y, a, "relative bar");
    const FieldSpec& F = a.field();

    // B acting through phi: right action on X, both actions on A, left on Y
    std::vector<Matrix> xb, albl, arbl, yb;
    for (int i = 0; i < b.dim(); ++i) {
        auto img = phi.matrix.col(i);
        xb.push_back(x.right_of(img));
        albl.push_back(a.mult.left_mult_of(img));
        arbl.push_back(a.mult.right_mult_of(img));
        yb.push_back(y.left_of(img));
    }

    RelativeBarComplex out;
    out.complex.field = F;
    std::vector<Matrix> ambient_d;
    for (int n = 0; n <= N; ++n) {
        TensorShape shape = bar_shape(x.dim, a.dim(), n, y.dim);
        int amb = static_cast<int>(shape.total());
        SpanAccumulator rel(F, amb);
        // generator columns are sparse, so build them in a scratch vector
        // against the small bilinear cores instead of materializing the merge
        // matrices kron(I, core, I)
        std::vector<Scalar> col(amb, Scalar(0));
        std::vector<int> touched;
        auto deposit = [&](long long at, const Scalar& val, bool negate) {
            if (F.is_zero(val)) return;
            Scalar& slot = col[static_cast<size_t>(at)];
            if (F.is_zero(slot)) touched.push_back(static_cast<int>(at));
            slot = negate ? F.sub(slot, val) : F.add(slot, val);
        };
        auto flush = [&]() {
            if (!touched.empty()) rel.add(col);
            for (int t : touched) col[t] = Scalar(0);
            touched.clear();
        };

        for (int j = 0; j <= n; ++j) {
            // a B slot inserted between tensor slots j and j+1 slides both ways
            const int du = shape.dims[j], dv = shape.dims[j + 1];
            auto right_rule = [&](int p, int i) {
                return (j == 0) ? xb[i].col(p) : arbl[i].col(p);
            };
            auto left_rule = [&](int i, int q) {
                return (j == n) ? yb[i].col(q) : albl[i].col(q);
            };
            Matrix core_r = bilinear_matrix(F, du, b.dim(), du, right_rule);
            Matrix core_l = bilinear_matrix(F, b.dim(), dv, dv, left_rule);
            long long pre_a = 1, post_a = 1;
            for (int t = 0; t < j; ++t) pre_a *= shape.dims[t];
            for (int t = j + 1; t < shape.slot_count(); ++t) post_a *= shape.dims[t];
            const long long post_b = post_a / dv;
            for (long long c = 0; c < pre_a * du * b.dim() * post_a; ++c) {
                const long long postidx = c % post_a;
                long long rest = c / post_a;
                const int i = static_cast<int>(rest % b.dim());
                rest /= b.dim();
                const int u = static_cast<int>(rest % du);
                const long long preidx = rest / du;
                for (int t = 0; t < du; ++t)
                    deposit(preidx * (du * post_a) + t * post_a + postidx,
                            core_r.at(t, u * b.dim() + i), false);
                const long long post2 = c % post_b;
                rest = c / post_b;
                const int v = static_cast<int>(rest % dv);
                rest /= dv;
                const int i2 = static_cast<int>(rest % b.dim());
                const long long pre2 = rest / b.dim();
                for (int t = 0; t < dv; ++t)
                    deposit(pre2 * (dv * post_b) + t * post_b + post2,
                            core_l.at(t, i2 * dv + v), true);
                flush();
            }
        }
        if (normalized) {
            // degenerate columns: phi feeds one A slot, identity elsewhere
            for (int s = 1; s <= n; ++s) {
                long long pre = 1, post = 1;
                for (int u = 0; u < s; ++u) pre *= shape.dims[u];
                for (int u = s + 1; u < shape.slot_count(); ++u) post *= shape.dims[u];
                for (long long c = 0; c < pre * b.dim() * post; ++c) {
                    const long long postidx = c % post;
                    long long rest = c / post;
                    const int i = static_cast<int>(rest % b.dim());
                    const long long preidx = rest / b.dim();
                    for (int r = 0; r < a.dim(); ++r)
                        deposit((preidx * a.dim() + r) * post + postidx,
                                phi.matrix.at(r, i), false);
                    flush();
                }
            }
        }
        out.spaces.emplace_back(F, amb, rel.span());
        out.complex.dims.push_back(out.spaces.back().dim());
        ambient_d.push_back(n == 0 ? Matrix(F, 0, amb) : bar_boundary(F, x, a, y, n));
    }
    for (int n = 0; n <= N; ++n)
        out.complex.d.push_back(n == 0
                                    ? Matrix(F, 0, out.complex.dims[0])
                                    : induced_map_on_quotients(ambient_d[n], out.spaces[n],
                                                               out.spaces[n - 1]));
    out.complex.certified_degree = out.complex.default_certified();
    validate_complex(out.complex);
    return out;
}

ChainComplex nonunital_bar(const MultTable& t, int N) {
    const FieldSpec& F = t.field;
    ChainComplex c;
    c.field = F;
    auto mu = [&](int i, int j) { return t.product(i, j); };
    for (int n = 0; n <= N; ++n) {
        TensorShape shape;
        shape.dims.assign(n + 1, t.dim);
        int amb = static_cast<int>(shape.total());
        c.dims.push_back(amb);
        if (n == 0) {
            c.d.push_back(Matrix(F, 0, amb));
            continue;
        }
        Matrix d(F, amb / t.dim, amb);
        for (int j = 0; j < n; ++j) {
            Matrix face = merge_slots(F, shape, j, t.dim, mu);
            d = (j % 2 == 0) ? d + face : d - face;
        }
        c.d.push_back(std::move(d));
    }
    c.certified_degree = c.default_certified();
    validate_complex(c);
    return c;
}

CochainComplex ext_cochain(const Module& x, const Algebra& a, const Module& y, int N) {
    if (!x.has_left() || !same_algebra(*x.left_algebra, a))
        throw InputError("ext_cochain: first module needs a left action of the algebra");
    require_left_over(y, a, "ext_cochain");
    const FieldSpec& F = a.field();
    CochainComplex c;
    c.field = F;
    std::vector<long long> vdim(N + 1); // dim of A^{ox n} ox X
    for (int n = 0; n <= N; ++n) {
        vdim[n] = x.dim;
        for (int i = 0; i < n; ++i) vdim[n] *= a.dim();
        c.dims.push_back(static_cast<int>(y.dim * vdim[n]));
    }
    auto am = [&](int i, int j) { return a.mult.product(i, j); };
    auto xl = [&](int i, int p) { return x.left[i].col(p); };
    for (int n = 0; n + 1 <= N; ++n) {
        // arguments of C^{n+1}: shape A^{ox n+1} ox X
        TensorShape shape;
        shape.dims.assign(n + 1, a.dim());
        shape.dims.push_back(x.dim);
        int vn = static_cast<int>(vdim[n]);
        Matrix delta(F, c.dims[n + 1], c.dims[n]);
        // (delta f)(a_1 ox u) += a_1 . f(u)
        for (int i = 0; i < a.dim(); ++i) {
            Matrix sel(F, static_cast<int>(vdim[n + 1]), vn); // u -> e_i ox u
            for (int u = 0; u < vn; ++u) sel.at(i * vn + u, u) = F.from_int(1);
            delta = delta + Matrix::kron(y.left[i], sel);
        }
        for (int j = 1; j <= n + 1; ++j) {
            Matrix t = (j == n + 1) ? merge_slots(F, shape, n, x.dim, xl)
                                    : merge_slots(F, shape, j - 1, a.dim(), am);
            Matrix term = Matrix::kron(Matrix::identity(F, y.dim), t.transpose());
            delta = (j % 2 == 0) ? delta + term : delta - term;
        }
        c.delta.push_back(std::move(delta));
    }
    c.certified_degree = N - 1;
    validate_cochain(c);
    return c;
}

} // namespace exacthh

#include "exacthh/hochschild.hpp"

namespace exacthh {

namespace {

TensorShape ch_shape(int mdim, int adim, int n) {
    TensorShape s;
    s.dims.push_back(mdim);
    for (int i = 0; i < n; ++i) s.dims.push_back(adim);
    return s;
}

void require_bimodule_over(const Module& m, const Algebra& a, const char* who) {
    if (!m.has_left() || !m.has_right() || !same_algebra(*m.left_algebra, a) ||
        !same_algebra(*m.right_algebra, a))
        throw InputError(std::string(who) + ": coefficients must be a bimodule over the algebra");
}

/* b_n : M ox A^{ox n} -> M ox A^{ox n-1} for any (possibly non-unital)
 * table acting on M through lact/ract; n >= 1 */
Matrix hoch_boundary(const FieldSpec& F, const MultTable& t, int mdim,
                     const std::vector<Matrix>& lact, const std::vector<Matrix>& ract, int n) {
    TensorShape shape = ch_shape(mdim, t.dim, n);
    auto am = [&](int i, int j) { return t.product(i, j); };
    auto mr = [&](int p, int i) { return ract[i].col(p); }; // m ox a -> m.a
    auto ml = [&](int i, int p) { return lact[i].col(p); }; // a ox m -> a.m
    Matrix d = merge_slots(F, shape, 0, mdim, mr);
    for (int j = 1; j < n; ++j) {
        Matrix face = merge_slots(F, shape, j, t.dim, am);
        d = (j % 2 == 0) ? d + face : d - face;
    }
    // wraparound face: rotate a_n to the front, then act on m from the left
    std::vector<int> src_of(n + 1);
    src_of[0] = n;
    for (int s = 1; s <= n; ++s) src_of[s] = s - 1;
    TensorShape rotated;
    rotated.dims.push_back(t.dim);
    rotated.dims.push_back(mdim);
    for (int s = 2; s <= n; ++s) rotated.dims.push_back(t.dim);
    Matrix wrap = merge_slots(F, rotated, 0, mdim, ml) * permute_slots(F, shape, src_of);
    return (n % 2 == 0) ? d + wrap : d - wrap;
}

ChainComplex ch_complex(const FieldSpec& F, const MultTable& t, int mdim,
                        const std::vector<Matrix>& lact, const std::vector<Matrix>& ract, int N) {
    ChainComplex c;
    c.field = F;
    long long dim = mdim;
    for (int n = 0; n <= N; ++n) {
        c.dims.push_back(static_cast<int>(dim));
        c.d.push_back(n == 0 ? Matrix(F, 0, c.dims[0])
                             : hoch_boundary(F, t, mdim, lact, ract, n));
        dim *= t.dim;
    }
    c.certified_degree = c.default_certified();
    validate_complex(c);
    return c;
}

std::vector<Matrix> table_left(const MultTable& t) {
    std::vector<Matrix> out;
    for (int i = 0; i < t.dim; ++i) out.push_back(t.left_mult(i));
    return out;
}

std::vector<Matrix> table_right(const MultTable& t) {
    std::vector<Matrix> out;
    for (int i = 0; i < t.dim; ++i) {
        std::vector<Scalar> e(t.dim, t.field.from_int(0));
        e[i] = t.field.from_int(1);
        out.push_back(t.right_mult_of(e));
    }
    return out;
}

void place_block(Matrix& d, long long r0, long long c0, const Matrix& blk) {
    const FieldSpec& F = d.field();
    for (int r = 0; r < blk.rows(); ++r)
        for (int c = 0; c < blk.cols(); ++c) {
            const Scalar& v = blk.at(r, c);
            if (!F.is_zero(v)) {
                Scalar& slot = d.at(static_cast<int>(r0) + r, static_cast<int>(c0) + c);
                slot = F.add(slot, v);
            }
        }
}

} // namespace

ChainComplex bar_complex(const Algebra& a, int N) {
    return two_sided_bar(right_regular(a), a, left_regular(a), N);
}

ChainComplex hochschild_complex(const Algebra& a, const Module& m, int N) {
    require_bimodule_over(m, a, "hochschild_complex");
    return ch_complex(a.field(), a.mult, m.dim, m.left, m.right, N);
}

ChainComplex hochschild_complex(const Algebra& a, int N) {
    return ch_complex(a.field(), a.mult, a.dim(), table_left(a.mult), table_right(a.mult), N);
}

ChainComplex nonunital_hochschild(const MultTable& t, int N) {
    return ch_complex(t.field, t, t.dim, table_left(t), table_right(t), N);
}

CyclicStructure cyclic_structure(const Algebra& a, int N) {
    const FieldSpec& F = a.field();
    CyclicStructure out;
    for (int n = 0; n <= N; ++n) {
        TensorShape shape;
        shape.dims.assign(n + 1, a.dim());
        std::vector<int> src_of(n + 1);
        src_of[0] = n;
        for (int s = 1; s <= n; ++s) src_of[s] = s - 1;
        Matrix t = permute_slots(F, shape, src_of);
        if (n % 2 == 1) t = t.negated();
        Matrix pw = t;
        for (int k = 0; k < n; ++k) pw = pw * t;
        if (!(pw == Matrix::identity(F, t.rows())))
            throw InternalError("cyclic_structure: t^(n+1) is not the identity");
        out.t.push_back(std::move(t));
    }
    return out;
}

PresentedComplex relative_hochschild(const AlgebraMorphism& phi, const Module& m, int N,
                                     bool normalized) {
    const Algebra& a = phi.target;
    const Algebra& b = phi.source;
    require_bimodule_over(m, a, "relative_hochschild");
    const FieldSpec& F = a.field();

    std::vector<Matrix> la, ra, lm, rm; // phi(b_i) acting on A and on M
    for (int i = 0; i < b.dim(); ++i) {
        auto img = phi.matrix.col(i);
        la.push_back(a.mult.left_mult_of(img));
        ra.push_back(a.mult.right_mult_of(img));
        lm.push_back(m.left_of(img));
        rm.push_back(m.right_of(img));
    }

    PresentedComplex out;
    out.complex.field = F;
    std::vector<Matrix> ambient_d;
    for (int n = 0; n <= N; ++n) {
        TensorShape shape = ch_shape(m.dim, a.dim(), n);
        int amb = static_cast<int>(shape.total());
        SpanAccumulator rel(F, amb);
        // every generator column has only a handful of nonzero entries, so
        // build them in a scratch vector instead of materializing the merge
        // matrices (which are kron(I, core, I) for a small bilinear core)
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

        for (int j = 0; j + 1 <= n; ++j) {
            // a B slot inserted between tensor slots j and j+1 slides both ways
            const int du = shape.dims[j], dv = shape.dims[j + 1];
            auto right_rule = [&](int p, int i) {
                return (j == 0) ? rm[i].col(p) : ra[i].col(p);
            };
            auto left_rule = [&](int i, int q) { return la[i].col(q); };
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
        {
            // outer junction: B between a_n and the coefficient slot; the
            // rotation to the front only renames columns, so decode instead
            const long long post = amb / m.dim; // the A^{ox n} block
            const int dn = shape.dims[n];
            auto ml = [&](int i, int p) { return lm[i].col(p); };
            auto back_rule = [&](int p, int i) {
                return (n == 0) ? rm[i].col(p) : ra[i].col(p);
            };
            Matrix core_f = bilinear_matrix(F, b.dim(), m.dim, m.dim, ml);
            Matrix core_b = bilinear_matrix(F, dn, b.dim(), dn, back_rule);
            for (long long c = 0; c < static_cast<long long>(amb) * b.dim(); ++c) {
                const int i = static_cast<int>(c % b.dim());
                const long long f = c / b.dim(); // index into M ox A^{ox n}
                const int p = static_cast<int>(f / post);
                const long long arest = f % post;
                for (int t = 0; t < m.dim; ++t)
                    deposit(t * post + arest, core_f.at(t, i * m.dim + p), false);
                const int u = static_cast<int>(f % dn);
                const long long preidx = f / dn;
                for (int t = 0; t < dn; ++t)
                    deposit(preidx * dn + t, core_b.at(t, u * b.dim() + i), true);
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
        ambient_d.push_back(n == 0 ? Matrix(F, 0, amb)
                                   : hoch_boundary(F, a.mult, m.dim, m.left, m.right, n));
    }
    for (int n = 0; n <= N; ++n)
        out.complex.d.push_back(n == 0 ? Matrix(F, 0, out.complex.dims[0])
                                       : induced_map_on_quotients(ambient_d[n], out.spaces[n],
                                                                  out.spaces[n - 1]));
    out.complex.certified_degree = out.complex.default_certified();
    validate_complex(out.complex);
    return out;
}

RelativeCyclicTotal relative_cyclic_total(const AlgebraMorphism& phi, int N) {
    const Algebra& a = phi.target;
    const FieldSpec& F = a.field();
    RelativeCyclicTotal out;
    CyclicStructure cyc = cyclic_structure(a, N);
    ChainComplex hoch = hochschild_complex(a, N);
    ChainComplex barp = nonunital_bar(a.mult, N);
    std::vector<int> dims;
    Matrix pw = phi.matrix; // phi^{ox q+1}
    for (int q = 0; q <= N; ++q) {
        out.spaces.emplace_back(F, hoch.dims[q],
                                Subspace::span(F, hoch.dims[q], image_basis(pw)));
        dims.push_back(out.spaces.back().dim());
        if (q < N) pw = Matrix::kron(pw, phi.matrix);
    }
    std::vector<Matrix> bbar, bpbar, norm;
    for (int q = 0; q <= N; ++q) {
        out.t.push_back(induced_map_on_quotients(cyc.t[q], out.spaces[q], out.spaces[q]));
        bbar.push_back(q == 0 ? Matrix(F, 0, dims[0])
                              : induced_map_on_quotients(hoch.d[q], out.spaces[q],
                                                         out.spaces[q - 1]));
        bpbar.push_back(q == 0 ? Matrix(F, 0, dims[0])
                               : induced_map_on_quotients(barp.d[q], out.spaces[q],
                                                          out.spaces[q - 1]));
        Matrix nq = Matrix::identity(F, dims[q]);
        Matrix tp = nq;
        for (int k = 1; k <= q; ++k) {
            tp = tp * out.t[q];
            nq = nq + tp;
        }
        norm.push_back(std::move(nq));
    }
    out.total.field = F;
    for (int n = 0; n <= N; ++n) {
        std::vector<long long> offs;
        long long tot = 0;
        for (int p = 0; p <= n; ++p) {
            offs.push_back(tot);
            tot += dims[n - p];
        }
        out.offsets.push_back(std::move(offs));
        out.total.dims.push_back(static_cast<int>(tot));
    }
    out.total.d.push_back(Matrix(F, 0, out.total.dims[0]));
    for (int n = 1; n <= N; ++n) {
        Matrix d(F, out.total.dims[n - 1], out.total.dims[n]);
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            if (q >= 1) {
                Matrix blk = (p % 2 == 0) ? bbar[q] : bpbar[q].negated();
                place_block(d, out.offsets[n - 1][p], out.offsets[n][p], blk);
            }
            if (p >= 1) {
                Matrix blk = (p % 2 == 1) ? Matrix::identity(F, dims[q]) - out.t[q] : norm[q];
                place_block(d, out.offsets[n - 1][p - 1], out.offsets[n][p], blk);
            }
        }
        out.total.d.push_back(std::move(d));
    }
    out.total.certified_degree = std::max(N - 2, -1);
    validate_complex(out.total);
    return out;
}

CyclicTotalComplex cyclic_total_complex(const Algebra& a, int N) {
    const FieldSpec& F = a.field();
    CyclicTotalComplex out;
    out.cyclic = cyclic_structure(a, N);
    ChainComplex hoch = hochschild_complex(a, N); // b columns
    ChainComplex barp = nonunital_bar(a.mult, N); // b' columns
    std::vector<Matrix> norm;                     // 1 + t + ... + t^q
    for (int q = 0; q <= N; ++q) {
        Matrix nq = Matrix::identity(F, out.cyclic.t[q].rows());
        Matrix pw = nq;
        for (int k = 1; k <= q; ++k) {
            pw = pw * out.cyclic.t[q];
            nq = nq + pw;
        }
        norm.push_back(std::move(nq));
    }
    out.total.field = F;
    for (int n = 0; n <= N; ++n) {
        std::vector<long long> offs;
        long long tot = 0;
        for (int p = 0; p <= n; ++p) {
            offs.push_back(tot);
            tot += hoch.dims[n - p];
        }
        out.offsets.push_back(std::move(offs));
        out.total.dims.push_back(static_cast<int>(tot));
    }
    out.total.d.push_back(Matrix(F, 0, out.total.dims[0]));
    for (int n = 1; n <= N; ++n) {
        Matrix d(F, out.total.dims[n - 1], out.total.dims[n]);
        for (int p = 0; p <= n; ++p) {
            int q = n - p;
            if (q >= 1) { // down the column: b on even p, -b' on odd p
                Matrix blk = (p % 2 == 0) ? hoch.d[q] : barp.d[q].negated();
                place_block(d, out.offsets[n - 1][p], out.offsets[n][p], blk);
            }
            if (p >= 1) { // along the row: 1 - t from odd p, the norm from even p
                Matrix blk = (p % 2 == 1)
                                 ? Matrix::identity(F, hoch.dims[q]) - out.cyclic.t[q]
                                 : norm[q];
                place_block(d, out.offsets[n - 1][p - 1], out.offsets[n][p], blk);
            }
        }
        out.total.d.push_back(std::move(d));
    }
    out.total.certified_degree = std::max(N - 2, -1);
    validate_complex(out.total);
    return out;
}

ChainMap hochschild_inclusion(const AlgebraMorphism& phi, int N) {
    ChainMap f;
    Matrix pw = phi.matrix;
    for (int n = 0; n <= N; ++n) {
        f.maps.push_back(pw);
        if (n < N) pw = Matrix::kron(pw, phi.matrix);
    }
    return f;
}

ChainMap hochschild_inclusion(const AlgebraMorphism& phi, const Module& m, int N) {
    ChainMap f;
    Matrix pw = Matrix::identity(phi.target.field(), m.dim);
    for (int n = 0; n <= N; ++n) {
        f.maps.push_back(pw);
        if (n < N) pw = Matrix::kron(pw, phi.matrix);
    }
    return f;
}

ChainMap cyclic_total_inclusion(const AlgebraMorphism& phi, int N) {
    const FieldSpec& F = phi.target.field();
    std::vector<Matrix> pw; // phi^{ox q+1}
    Matrix cur = phi.matrix;
    for (int q = 0; q <= N; ++q) {
        pw.push_back(cur);
        if (q < N) cur = Matrix::kron(cur, phi.matrix);
    }
    ChainMap f;
    for (int n = 0; n <= N; ++n) {
        long long rows = 0, cols = 0;
        for (int p = 0; p <= n; ++p) {
            rows += pw[n - p].rows();
            cols += pw[n - p].cols();
        }
        Matrix d(F, static_cast<int>(rows), static_cast<int>(cols));
        long long r0 = 0, c0 = 0;
        for (int p = 0; p <= n; ++p) {
            place_block(d, r0, c0, pw[n - p]);
            r0 += pw[n - p].rows();
            c0 += pw[n - p].cols();
        }
        f.maps.push_back(std::move(d));
    }
    return f;
}

ComplexExtension complex_extension(ChainComplex sub, ChainComplex ambient, ChainMap inclusion) {
    validate_chain_map(inclusion, sub, ambient);
    std::vector<Subspace> images;
    for (int n = 0; n <= ambient.top_degree(); ++n) {
        Matrix f = inclusion.at(n, sub, ambient);
        images.push_back(Subspace::span(ambient.field, ambient.dims[n], image_basis(f)));
    }
    ComplexExtension out;
    out.quotient = quotient_complex(ambient, images);
    out.sub = std::move(sub);
    out.ambient = std::move(ambient);
    out.inclusion = std::move(inclusion);
    return out;
}

ComplexExtension hochschild_extension(const AlgebraMorphism& phi, int N) {
    return complex_extension(hochschild_complex(phi.source, N), hochschild_complex(phi.target, N),
                             hochschild_inclusion(phi, N));
}

ComplexExtension cyclic_total_extension(const AlgebraMorphism& phi, int N) {
    return complex_extension(cyclic_total_complex(phi.source, N).total,
                             cyclic_total_complex(phi.target, N).total,
                             cyclic_total_inclusion(phi, N));
}

PresentedComplex lambda_quotient_complex(const Algebra& a, int N) {
    const FieldSpec& F = a.field();
    CyclicStructure cyc = cyclic_structure(a, N);
    ChainComplex hoch = hochschild_complex(a, N);
    PresentedComplex out;
    out.complex.field = F;
    for (int n = 0; n <= N; ++n) {
        int amb = hoch.dims[n];
        Matrix one_minus_t = Matrix::identity(F, amb) - cyc.t[n];
        out.spaces.emplace_back(F, amb, Subspace::span(F, amb, image_basis(one_minus_t)));
        out.complex.dims.push_back(out.spaces.back().dim());
    }
    for (int n = 0; n <= N; ++n)
        out.complex.d.push_back(n == 0 ? Matrix(F, 0, out.complex.dims[0])
                                       : induced_map_on_quotients(hoch.d[n], out.spaces[n],
                                                                  out.spaces[n - 1]));
    out.complex.certified_degree = out.complex.default_certified();
    validate_complex(out.complex);
    return out;
}

CochainComplex hom_dual_complex(const ChainComplex& c) {
    if (c.min_degree != 0)
        throw InputError("hom_dual_complex: expects a complex based at degree 0");
    CochainComplex out;
    out.field = c.field;
    out.dims = c.dims;
    for (int n = 0; n + 1 <= c.top_degree(); ++n) out.delta.push_back(c.d[n + 1].transpose());
    out.certified_degree = c.certified_degree;
    validate_cochain(out);
    return out;
}

ChainComplex hochschild_via_envelope(const Algebra& a, const Module& m, int N) {
    require_bimodule_over(m, a, "hochschild_via_envelope");
    const FieldSpec& F = a.field();
    Algebra env = enveloping_algebra(a);
    Module me = envelope_right_module(m, env);
    ChainComplex cb = bar_complex(a, N);
    std::vector<Matrix> rmul;
    for (int j = 0; j < a.dim(); ++j) rmul.push_back(a.mult.right_mult_of(a.basis_vector(j)));

    std::vector<TensorOverResult> tied;
    ChainComplex out;
    out.field = F;
    for (int n = 0; n <= N; ++n) {
        long long mid = 1;
        for (int s = 0; s < n; ++s) mid *= a.dim();
        // CB_n as a left module over the envelope: (i,j) hits the outer slots
        std::vector<Matrix> act;
        for (int i = 0; i < a.dim(); ++i)
            for (int j = 0; j < a.dim(); ++j)
                act.push_back(Matrix::kron(
                    Matrix::kron(a.mult.left_mult(i), Matrix::identity(F, static_cast<int>(mid))),
                    rmul[j]));
        Module cbn = left_module(env, std::move(act));
        tied.push_back(tensor_over(me, cbn));
        out.dims.push_back(tied.back().space.dim());
    }
    for (int n = 0; n <= N; ++n)
        out.d.push_back(n == 0 ? Matrix(F, 0, out.dims[0])
                               : induced_map_on_quotients(
                                     Matrix::kron(Matrix::identity(F, m.dim), cb.d[n]),
                                     tied[n].space, tied[n - 1].space));
    out.certified_degree = out.default_certified();
    validate_complex(out);
    return out;
}

} // namespace exacthh

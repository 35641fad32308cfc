#include "exacthh/spectral.hpp"

#include <algorithm>
#include <iterator>
#include <map>

namespace exacthh {

Subspace FilteredComplex::layer(int p, int n) const {
    int i = n - complex.min_degree;
    if (i < 0 || i >= static_cast<int>(complex.dims.size()))
        return Subspace::zero(complex.field, 0);
    if (p < 0) return Subspace::zero(complex.field, complex.dims[i]);
    if (p >= max_filtration) return layers[max_filtration][i];
    return layers[p][i];
}

namespace {

/* ambient indices of a subspace spanned by standard basis vectors; nullopt as
 * soon as some basis row carries a second nonzero entry */
std::optional<std::vector<int>> coordinate_support(const Subspace& s) {
    const Matrix& b = s.basis();
    for (int i = 0; i < b.rows(); ++i)
        for (int j = s.pivots()[i] + 1; j < b.cols(); ++j)
            if (!s.field().is_zero(b.at(i, j))) return std::nullopt;
    return s.pivots();
}

std::optional<std::vector<std::vector<std::vector<int>>>> coordinate_layers(
    const FilteredComplex& fc) {
    std::vector<std::vector<std::vector<int>>> sup(fc.layers.size());
    for (size_t p = 0; p < fc.layers.size(); ++p) {
        sup[p].reserve(fc.layers[p].size());
        for (const Subspace& s : fc.layers[p]) {
            auto ix = coordinate_support(s);
            if (!ix) return std::nullopt;
            sup[p].push_back(std::move(*ix));
        }
    }
    return sup;
}

Matrix select_cols(const Matrix& m, const std::vector<int>& cols) {
    Matrix out(m.field(), m.rows(), static_cast<int>(cols.size()));
    for (int i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < cols.size(); ++j)
            out.at(i, static_cast<int>(j)) = m.at(i, cols[j]);
    return out;
}

/* the listed rows of d applied to the row span of Z: A = d[rows] Z^T */
Matrix constraint_matrix(const FieldSpec& F, const Matrix& d, const std::vector<int>& rows,
                         const Matrix& Z) {
    Matrix A(F, static_cast<int>(rows.size()), Z.rows());
    for (size_t bi = 0; bi < rows.size(); ++bi) {
        int b = rows[bi];
        for (int t = 0; t < d.cols(); ++t) {
            const Scalar& dv = d.at(b, t);
            if (F.is_zero(dv)) continue;
            for (int j = 0; j < Z.rows(); ++j) {
                const Scalar& zv = Z.at(j, t);
                if (F.is_zero(zv)) continue;
                A.at(static_cast<int>(bi), j) = F.add(A.at(static_cast<int>(bi), j), F.mul(dv, zv));
            }
        }
    }
    return A;
}

std::vector<int> support_union(const std::vector<std::vector<std::vector<int>>>& blk, int p,
                               int i) {
    std::vector<int> s;
    for (int t = 0; t <= p; ++t) s.insert(s.end(), blk[t][i].begin(), blk[t][i].end());
    std::sort(s.begin(), s.end());
    return s;
}

/* Staircase basis of Z^stage_{p, .} = {x in F_p : dx in F_{p-stage}} at chain
 * index i, one eliminated block of d-components per step. */
Matrix tower_basis(const ChainComplex& c, const std::vector<std::vector<std::vector<int>>>& blk,
                   int p, int i, int stage) {
    const FieldSpec& F = c.field;
    std::vector<int> S = support_union(blk, p, i);
    int k = static_cast<int>(S.size());
    Matrix Z(F, k, c.dims[i]);
    for (int j = 0; j < k; ++j) Z.at(j, S[j]) = F.from_int(1);
    if (i == 0) return Z;
    for (int s = 1; s <= stage; ++s) {
        Matrix A = constraint_matrix(F, c.d[i], blk[p - s + 1][i - 1], Z);
        Matrix U = kernel_basis(A);
        if (U.rows() < Z.rows()) Z = U * Z;
    }
    return Z;
}

/* Per (p, chain index): numerator spans of every tower stage in block-p
 * coordinates, and for each step the span of the boundaries that just got
 * eliminated, in the coordinates of the block they land in (the denominator
 * of the entry one degree down). */
struct BlockTower {
    std::vector<Subspace> num; // [stage], stages 0 .. p+1
    std::vector<Subspace> den; // [step], steps 1 .. p+1; index 0 unused
};

BlockTower build_tower(const ChainComplex& c,
                       const std::vector<std::vector<std::vector<int>>>& blk, int p, int i,
                       int last_entry_index) {
    const FieldSpec& F = c.field;
    BlockTower tw;
    bool want_num = i <= last_entry_index;
    const std::vector<int>& block = blk[p][i];
    if (i == 0) {
        // nothing below: every stage is all of F_p
        if (want_num) tw.num.assign(p + 2, Subspace::full(F, static_cast<int>(block.size())));
        return tw;
    }
    std::vector<int> S = support_union(blk, p, i);
    int k = static_cast<int>(S.size());
    Matrix Z(F, k, c.dims[i]);
    for (int j = 0; j < k; ++j) Z.at(j, S[j]) = F.from_int(1);
    auto block_span = [&](const Matrix& z) {
        return Subspace::span(F, static_cast<int>(block.size()), select_cols(z, block));
    };
    if (want_num) tw.num.push_back(block_span(Z));
    tw.den.emplace_back();
    for (int s = 1; s <= p + 1; ++s) {
        const std::vector<int>& B = blk[p - s + 1][i - 1];
        Matrix A = constraint_matrix(F, c.d[i], B, Z);
        tw.den.push_back(Subspace::span(F, static_cast<int>(B.size()), A.transpose()));
        Matrix U = kernel_basis(A);
        if (U.rows() < Z.rows()) Z = U * Z;
        if (want_num) tw.num.push_back(block_span(Z));
    }
    return tw;
}

void find_collapse(SpectralSequence& seq) {
    int P = seq.max_filtration;
    auto same_dims = [&](const SpectralPage& a, const SpectralPage& b) {
        for (int p = 0; p <= P; ++p)
            for (size_t i = 0; i < a.entries[p].size(); ++i)
                if (a.entries[p][i].dim() != b.entries[p][i].dim()) return false;
        return true;
    };
    seq.collapse_page = static_cast<int>(seq.pages.size()) - 1;
    while (seq.collapse_page > 0 &&
           same_dims(seq.pages[seq.collapse_page - 1], seq.pages.back()))
        --seq.collapse_page;
}

int certified_window(const ChainComplex& c) {
    // entries at total degree n need cycle data one degree up; if the builder
    // certified the top degree the complex is known to vanish above it
    int top = c.top_degree();
    return (c.certified_degree >= top) ? top : std::min(top - 1, c.certified_degree);
}

SpectralSequence block_spectral(const FilteredComplex& fc,
                                std::vector<std::vector<std::vector<int>>> sup) {
    const ChainComplex& c = fc.complex;
    const FieldSpec& F = c.field;
    int P = fc.max_filtration;
    int rmax = P + 2;
    int m = static_cast<int>(c.dims.size());

    SpectralSequence seq;
    seq.max_filtration = P;
    seq.certified_degree = certified_window(c);
    seq.block_entries = true;

    int ci = seq.certified_degree - c.min_degree; // last index carrying entries
    int ti = std::min(ci + 1, m - 1);             // last index needing cycle data

    seq.blocks.assign(P + 1, {});
    for (int p = 0; p <= P; ++p) {
        seq.blocks[p].resize(m);
        for (int i = 0; i < m; ++i) {
            if (p == 0)
                seq.blocks[p][i] = sup[p][i];
            else
                std::set_difference(sup[p][i].begin(), sup[p][i].end(), sup[p - 1][i].begin(),
                                    sup[p - 1][i].end(), std::back_inserter(seq.blocks[p][i]));
        }
    }
    if (ci < 0) {
        seq.pages.resize(rmax + 1);
        for (int r = 0; r <= rmax; ++r) {
            seq.pages[r].r = r;
            seq.pages[r].min_degree = c.min_degree;
            seq.pages[r].entries.resize(P + 1);
        }
        return seq;
    }

    std::vector<std::vector<BlockTower>> towers(P + 1);
    for (int p = 0; p <= P; ++p) {
        towers[p].resize(ti + 1);
        for (int i = 0; i <= ti; ++i) towers[p][i] = build_tower(c, seq.blocks, p, i, ci);
    }

    for (int r = 0; r <= rmax; ++r) {
        SpectralPage page;
        page.r = r;
        page.min_degree = c.min_degree;
        page.entries.resize(P + 1);
        for (int p = 0; p <= P; ++p)
            for (int i = 0; i <= ci; ++i) {
                const Subspace& num = towers[p][i].num[std::min(r, p + 1)];
                Subspace den = Subspace::zero(F, static_cast<int>(seq.blocks[p][i].size()));
                // boundaries from one degree up; classes below F_p project away
                if (r >= 1 && i + 1 <= ti) {
                    int pp = std::min(p + r - 1, P);
                    den = towers[pp][i + 1].den[pp - p + 1];
                }
                page.entries[p].emplace_back(num, den);
            }
        seq.pages.push_back(std::move(page));
    }
    find_collapse(seq);
    return seq;
}

SpectralSequence dense_spectral(const FilteredComplex& fc) {
    const ChainComplex& c = fc.complex;
    const FieldSpec& F = c.field;
    int P = fc.max_filtration;
    int rmax = P + 2;

    SpectralSequence seq;
    seq.max_filtration = P;
    seq.certified_degree = certified_window(c);

    // Z^r_{p, n} = {x in F_p C_n : d x in F_{p-r} C_{n-1}}, memoized on the
    // clamped key (filtration caps at P above and the zero space below)
    std::map<std::array<int, 3>, Subspace> memo;
    auto zgroup = [&](int r, int p, int n) -> const Subspace& {
        int pc = std::min(p, P);
        int cc = std::max(std::min(p - r, P), -1);
        std::array<int, 3> key{pc, cc, n};
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        Subspace z;
        if (p < 0) {
            z = Subspace::zero(F, c.dim_at(n));
        } else if (cc >= P || n == c.min_degree) {
            z = fc.layer(p, n);
        } else {
            Subspace target = fc.layer(p - r, n - 1);
            Subspace pre = target.preimage(c.boundary(n));
            z = intersect(fc.layer(p, n), pre);
        }
        return memo.emplace(key, std::move(z)).first->second;
    };

    for (int r = 0; r <= rmax; ++r) {
        SpectralPage page;
        page.r = r;
        page.min_degree = c.min_degree;
        page.entries.resize(P + 1);
        for (int p = 0; p <= P; ++p)
            for (int n = c.min_degree; n <= seq.certified_degree; ++n) {
                const Subspace& num = zgroup(r, p, n);
                Subspace den = zgroup(r - 1, p - 1, n) +
                               zgroup(r - 1, p + r - 1, n + 1).image_under(c.boundary(n + 1));
                page.entries[p].emplace_back(num, den);
            }
        seq.pages.push_back(std::move(page));
    }
    find_collapse(seq);
    return seq;
}

} // namespace

void validate_filtration(const FilteredComplex& fc) {
    const ChainComplex& c = fc.complex;
    if (static_cast<int>(fc.layers.size()) != fc.max_filtration + 1)
        throw InternalError("filtration: need layers for p = 0..P");
    for (int p = 0; p <= fc.max_filtration; ++p) {
        if (fc.layers[p].size() != c.dims.size())
            throw InternalError("filtration: layer count mismatch at p = " + std::to_string(p));
        for (size_t i = 0; i < c.dims.size(); ++i) {
            int n = c.min_degree + static_cast<int>(i);
            if (fc.layers[p][i].ambient() != c.dims[i])
                throw InternalError("filtration: ambient mismatch at (p, n) = (" +
                                    std::to_string(p) + ", " + std::to_string(n) + ")");
        }
    }
    auto sup = coordinate_layers(fc);
    for (int p = 0; p <= fc.max_filtration; ++p)
        for (size_t i = 0; i < c.dims.size(); ++i) {
            int n = c.min_degree + static_cast<int>(i);
            bool increasing, exhaustive = true, stable;
            if (sup) {
                const auto& cur = (*sup)[p][i];
                increasing = p == 0 || std::includes(cur.begin(), cur.end(), (*sup)[p - 1][i].begin(),
                                                     (*sup)[p - 1][i].end());
                if (p == fc.max_filtration)
                    exhaustive = static_cast<int>(cur.size()) == c.dims[i];
                stable = true;
                if (i > 0) {
                    std::vector<char> below(c.dims[i - 1], 0);
                    for (int t : (*sup)[p][i - 1]) below[t] = 1;
                    const Matrix& d = c.d[i];
                    for (int j : cur)
                        for (int r = 0; r < d.rows() && stable; ++r)
                            if (!c.field.is_zero(d.at(r, j)) && !below[r]) stable = false;
                }
            } else {
                increasing = p == 0 || fc.layers[p][i].contains(fc.layers[p - 1][i]);
                if (p == fc.max_filtration)
                    exhaustive = fc.layers[p][i].dim() == c.dims[i];
                stable = i == 0 ||
                         fc.layers[p][i - 1].contains(fc.layers[p][i].image_under(c.d[i]));
            }
            if (!increasing)
                throw InternalError("filtration: not increasing at (p, n) = (" +
                                    std::to_string(p) + ", " + std::to_string(n) + ")");
            if (!exhaustive)
                throw InternalError("filtration: top layer not exhaustive at degree " +
                                    std::to_string(n));
            if (!stable)
                throw InternalError("filtration: layer p = " + std::to_string(p) +
                                    " not closed under d at degree " + std::to_string(n));
        }
}

int SpectralPage::dim(int p, int q) const {
    if (p < 0 || p >= static_cast<int>(entries.size())) return 0;
    int i = p + q - min_degree;
    if (i < 0 || i >= static_cast<int>(entries[p].size())) return 0;
    return entries[p][i].dim();
}

const Subquotient& SpectralPage::at(int p, int q) const {
    if (p < 0 || p >= static_cast<int>(entries.size()))
        throw InternalError("spectral page: p out of range");
    int i = p + q - min_degree;
    if (i < 0 || i >= static_cast<int>(entries[p].size()))
        throw InternalError("spectral page: total degree out of range");
    return entries[p][i];
}

SpectralSequence spectral_sequence(const FilteredComplex& fc) {
    validate_filtration(fc);
    if (auto sup = coordinate_layers(fc)) return block_spectral(fc, std::move(*sup));
    return dense_spectral(fc);
}

SpectralSequence spectral_sequence_generic(const FilteredComplex& fc) {
    validate_filtration(fc);
    return dense_spectral(fc);
}

Matrix page_differential(const FilteredComplex& fc, const SpectralSequence& seq, int r, int p,
                         int q) {
    const ChainComplex& c = fc.complex;
    const FieldSpec& F = c.field;
    const SpectralPage& page = seq.page(r);
    int n = p + q;
    int src_dim = page.dim(p, q);
    int dst_dim = page.dim(p - r, q + r - 1);
    if (src_dim == 0 || dst_dim == 0) return Matrix(F, dst_dim, src_dim);
    const Subquotient& src = page.at(p, q);
    const Subquotient& dst = page.at(p - r, q + r - 1);
    if (!seq.block_entries)
        return induced_map_on_subquotients(c.boundary(n), src, dst);

    // lift each class to a relative cycle, push through d, read off in the
    // target block
    int i = n - c.min_degree;
    Matrix Z = tower_basis(c, seq.blocks, p, i, std::min(r, p + 1));
    Matrix lift_system = select_cols(Z, seq.blocks[p][i]).transpose();
    const std::vector<int>& dst_block = seq.blocks[p - r][i - 1];
    std::vector<char> allowed(c.dims[i - 1], 0);
    for (int t : support_union(seq.blocks, p - r, i - 1)) allowed[t] = 1;
    Matrix out(F, dst_dim, src_dim);
    for (int col = 0; col < src_dim; ++col) {
        auto x = solve(lift_system, src.lift().row(col));
        if (!x) throw InternalError("page differential: class has no relative-cycle lift");
        std::vector<Scalar> z(c.dims[i], Scalar(0));
        for (int j = 0; j < Z.rows(); ++j) {
            if (F.is_zero((*x)[j])) continue;
            for (int t = 0; t < Z.cols(); ++t) {
                const Scalar& zv = Z.at(j, t);
                if (F.is_zero(zv)) continue;
                z[t] = F.add(z[t], F.mul((*x)[j], zv));
            }
        }
        auto w = c.d[i].apply(z);
        for (size_t t = 0; t < w.size(); ++t)
            if (!F.is_zero(w[t]) && !allowed[t])
                throw InternalError("page differential: boundary escapes the target filtration");
        std::vector<Scalar> v(dst_block.size(), Scalar(0));
        for (size_t bi = 0; bi < dst_block.size(); ++bi) v[bi] = w[dst_block[bi]];
        auto coords = dst.coords(v);
        for (int rr = 0; rr < dst_dim; ++rr) out.at(rr, col) = coords[rr];
    }
    return out;
}

std::vector<int> einf_total_dims(const SpectralSequence& seq) {
    std::vector<int> out;
    const SpectralPage& e = seq.einf();
    if (e.entries.empty()) return out;
    for (size_t i = 0; i < e.entries[0].size(); ++i) {
        int total = 0;
        for (const auto& col : e.entries) total += col[i].dim();
        out.push_back(total);
    }
    return out;
}

} // namespace exacthh
